from __future__ import annotations

import os
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from la_verifier.config import (
    COUNTEREXAMPLE_CAP,
    DEFAULT_LOG_LEVEL,
    DEFAULT_OUTPUT_DIRECTORY,
    DEFAULT_SERIES_ORDER,
    DEFAULT_WORKERS,
    ERNST_PARAMS,
    LEONARDO_PARAMS,
)
from la_verifier.errors import InvalidParams
from la_verifier.utils import parse_rational, rational_to_str

PARAM_NAMES = ("p", "q", "r", "a", "b")


def discriminant(p: Fraction, q: Fraction) -> Fraction:
    return p * p + 4 * q


@dataclass(frozen=True)
class SeqParams:
    """(p, q, r, a, b) of L_{n+2} = p*L_{n+1} + q*L_n + r with L_0 = a, L_1 = b."""

    p: Fraction
    q: Fraction
    r: Fraction = Fraction(0)
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        for name in PARAM_NAMES:
            try:
                object.__setattr__(self, name, parse_rational(getattr(self, name)))
            except (TypeError, ValueError) as e:
                raise InvalidParams(f"parameter {name}: {e}") from e
        if self.D == 0:
            raise InvalidParams(
                f"p^2 + 4q must be nonzero (p={self.p}, q={self.q} gives p^2 + 4q = 0)"
            )

    @property
    def D(self) -> Fraction:
        return discriminant(self.p, self.q)

    @property
    def rho(self) -> Fraction:
        return 1 - self.p - self.q

    @classmethod
    def leonardo(cls) -> "SeqParams":
        return cls(*LEONARDO_PARAMS)

    @classmethod
    def ernst(cls) -> "SeqParams":
        return cls(*ERNST_PARAMS)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SeqParams":
        missing = [k for k in PARAM_NAMES if k not in data]
        if missing:
            raise InvalidParams(f"missing parameters: {', '.join(missing)}")
        return cls(*(data[k] for k in PARAM_NAMES))

    def to_dict(self) -> Dict[str, str]:
        return {name: rational_to_str(getattr(self, name)) for name in PARAM_NAMES}

    def __str__(self) -> str:
        return ", ".join(f"{k}={v}" for k, v in self.to_dict().items())


@dataclass
class Counterexample:
    point: Dict[str, str]
    indices: Dict[str, int]
    lhs: Any
    rhs: Any
    difference: Any
    confirmed: Optional[bool] = None

    def to_dict(self) -> Dict[str, Any]:
        out = {
            "point": self.point,
            "indices": self.indices,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "difference": self.difference,
        }
        if self.confirmed is not None:
            out["confirmed"] = self.confirmed
        return out


@dataclass
class IdentityReport:
    identity: str
    tier: str
    catalog_tier: str
    grid: Dict[str, Any]
    total: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    counterexamples: List[Counterexample] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    reclassified_from: Optional[str] = None
    confirmed_failures: int = 0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def totals(self) -> Dict[str, int]:
        return {"pass": self.passed, "fail": self.failed, "skipped": self.skipped, "total": self.total}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identity": self.identity,
            "tier": self.tier,
            "catalog_tier": self.catalog_tier,
            "reclassified_from": self.reclassified_from,
            "verdict": "pass" if self.ok else "fail",
            "grid": self.grid,
            "totals": self.totals(),
            "confirmed_failures": self.confirmed_failures,
            "notes": list(self.notes),
            "counterexamples": [c.to_dict() for c in self.counterexamples],
        }

    def summary_row(self) -> Dict[str, Any]:
        return {
            "identity": self.identity,
            "tier": self.tier,
            "catalog_tier": self.catalog_tier,
            "reclassified_from": self.reclassified_from,
            "verdict": "pass" if self.ok else "fail",
            **self.totals(),
        }


@dataclass
class RunConfig:
    """Effective settings for one CLI invocation. Flags override config-file values."""

    grid: str = "default"
    p: Optional[List[str]] = None
    q: Optional[List[str]] = None
    r: Optional[List[str]] = None
    a: Optional[List[str]] = None
    b: Optional[List[str]] = None
    n_max: Optional[int] = None
    m_max: Optional[int] = None
    u_max: Optional[int] = None
    v_max: Optional[int] = None
    order: int = DEFAULT_SERIES_ORDER
    identities: List[str] = field(default_factory=list)
    suite: Optional[str] = None
    dsl: Optional[str] = None
    cap: int = COUNTEREXAMPLE_CAP
    output: str = os.getenv("LA_OUTPUT_DIR", DEFAULT_OUTPUT_DIRECTORY)
    workers: int = int(os.getenv("LA_WORKERS", str(DEFAULT_WORKERS)))
    log_level: str = os.getenv("LA_LOG_LEVEL", DEFAULT_LOG_LEVEL)
    progress: bool = False

    # Not echoed into report headers.
    EXECUTION_FIELDS = ("output", "workers", "log_level", "progress")

    def echo(self) -> Dict[str, Any]:
        data = asdict(self)
        return {k: v for k, v in data.items() if k not in self.EXECUTION_FIELDS}
