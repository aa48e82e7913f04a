# src/la_verifier/harness/grid.py
"""
Grid enumeration and the check runner.

A check is any object with `name`, `tier`, `index_vars`, `needs_rho`,
`fixed_params`, `notes`, `axis_domain(name)`, `evaluate(ctx, indices)` and
`confirm(ctx, indices)`. Built-in checks are registered here by name so they
can cross process boundaries as plain `BuiltinCheck(name)` values.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from loguru import logger
from tqdm import tqdm

from la_verifier.config import (
    COUNTEREXAMPLE_CAP,
    DEFAULT_GRID_A,
    DEFAULT_GRID_B,
    DEFAULT_GRID_P,
    DEFAULT_GRID_Q,
    DEFAULT_GRID_R,
    ERNST_PARAMS,
    LEONARDO_PARAMS,
)
from la_verifier.errors import DegenerateParameters, IndexOutOfDomain, InvalidParams
from la_verifier.harness.context import SequenceContext
from la_verifier.harness.reports import ReportBuilder
from la_verifier.schemas import PARAM_NAMES, IdentityReport, SeqParams, discriminant
from la_verifier.utils import parse_rational, rational_to_str

Evaluator = Callable[[SequenceContext, Dict[str, int]], Optional[Tuple[Any, Any]]]
Confirmer = Callable[[SequenceContext, Dict[str, int]], Any]

INDEX_AXES = ("n", "u", "v", "m")


@dataclass
class GridSpec:
    p: Tuple[Fraction, ...]
    q: Tuple[Fraction, ...]
    r: Tuple[Fraction, ...]
    a: Tuple[Fraction, ...]
    b: Tuple[Fraction, ...]
    indices: Dict[str, Tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for name in PARAM_NAMES:
            values = tuple(parse_rational(v) for v in getattr(self, name))
            if not values:
                raise InvalidParams(f"grid axis '{name}' is empty")
            setattr(self, name, values)
        self.indices = {k: tuple(int(x) for x in v) for k, v in self.indices.items()}

    # --- Constructors ---

    @classmethod
    def default(cls, **indices: Iterable[int]) -> "GridSpec":
        return cls(DEFAULT_GRID_P, DEFAULT_GRID_Q, DEFAULT_GRID_R, DEFAULT_GRID_A, DEFAULT_GRID_B,
                   {k: tuple(v) for k, v in indices.items()})

    @classmethod
    def single(cls, params: SeqParams, **indices: Iterable[int]) -> "GridSpec":
        return cls((params.p,), (params.q,), (params.r,), (params.a,), (params.b,),
                   {k: tuple(v) for k, v in indices.items()})

    @classmethod
    def named(cls, name: str, **indices: Iterable[int]) -> "GridSpec":
        if name == "default":
            return cls.default(**indices)
        if name == "leonardo":
            return cls.single(SeqParams(*LEONARDO_PARAMS), **indices)
        if name == "ernst":
            return cls.single(SeqParams(*ERNST_PARAMS), **indices)
        raise InvalidParams(f"unknown grid {name!r}; expected default, leonardo or ernst")

    def with_params(self, **axes: Sequence[Any]) -> "GridSpec":
        values = {name: getattr(self, name) for name in PARAM_NAMES}
        values.update({k: tuple(v) for k, v in axes.items() if v is not None})
        return GridSpec(**values, indices=dict(self.indices))

    def with_indices(self, **indices: Optional[Iterable[int]]) -> "GridSpec":
        merged = dict(self.indices)
        merged.update({k: tuple(v) for k, v in indices.items() if v is not None})
        return GridSpec(self.p, self.q, self.r, self.a, self.b, merged)

    # --- Enumeration ---

    def param_points(self) -> Iterator[Tuple[Dict[str, str], Optional[SeqParams]]]:
        """Every (p, q, r, a, b) in order; degenerate points (D = 0) come back as None."""
        for p, q, r, a, b in itertools.product(self.p, self.q, self.r, self.a, self.b):
            point = {k: rational_to_str(v) for k, v in zip(PARAM_NAMES, (p, q, r, a, b))}
            if discriminant(p, q) == 0:
                yield point, None
            else:
                yield point, SeqParams(p, q, r, a, b)

    def param_count(self) -> int:
        return len(self.p) * len(self.q) * len(self.r) * len(self.a) * len(self.b)

    def describe_params(self) -> Dict[str, List[str]]:
        return {name: [rational_to_str(v) for v in getattr(self, name)] for name in PARAM_NAMES}


def index_points(check: Any, grid: GridSpec) -> List[Dict[str, int]]:
    axes = [check.axis_domain(name, grid) for name in check.index_vars]
    return [dict(zip(check.index_vars, combo)) for combo in itertools.product(*axes)]


# --- Built-in check registry ---

@dataclass
class CheckDefinition:
    name: str
    family: str
    tier: str
    evaluate: Evaluator
    index_vars: Tuple[str, ...] = ()
    default_axes: Dict[str, Tuple[int, ...]] = field(default_factory=dict)
    fixed_axes: Dict[str, Tuple[int, ...]] = field(default_factory=dict)
    needs_rho: bool = False
    fixed_params: Optional[SeqParams] = None
    confirm: Optional[Confirmer] = None
    description: str = ""
    notes: Tuple[str, ...] = ()


REGISTRY: Dict[str, CheckDefinition] = {}


def register(definition: CheckDefinition) -> CheckDefinition:
    if definition.name in REGISTRY:
        raise ValueError(f"check {definition.name!r} registered twice")
    REGISTRY[definition.name] = definition
    return definition


def _ensure_registry() -> None:
    if not REGISTRY:
        import la_verifier.harness.identities  # noqa: F401


def lookup(name: str) -> CheckDefinition:
    _ensure_registry()
    try:
        return REGISTRY[name]
    except KeyError:
        raise InvalidParams(f"unknown identity {name!r}") from None


@dataclass(frozen=True)
class BuiltinCheck:
    """Picklable handle on a registered check."""

    name: str

    @property
    def definition(self) -> CheckDefinition:
        return lookup(self.name)

    @property
    def tier(self) -> str:
        return self.definition.tier

    @property
    def index_vars(self) -> Tuple[str, ...]:
        return self.definition.index_vars

    @property
    def needs_rho(self) -> bool:
        return self.definition.needs_rho

    @property
    def fixed_params(self) -> Optional[SeqParams]:
        return self.definition.fixed_params

    @property
    def notes(self) -> Tuple[str, ...]:
        return self.definition.notes

    def axis_domain(self, name: str, grid: GridSpec) -> Tuple[int, ...]:
        d = self.definition
        if name in d.fixed_axes:
            return d.fixed_axes[name]
        if name in grid.indices:
            return grid.indices[name]
        if name in d.default_axes:
            return d.default_axes[name]
        raise InvalidParams(f"no range for index '{name}' in check {self.name!r}")

    def evaluate(self, ctx: SequenceContext, indices: Dict[str, int]):
        return self.definition.evaluate(ctx, indices)

    def confirm(self, ctx: SequenceContext, indices: Dict[str, int]):
        fn = self.definition.confirm
        return None if fn is None else fn(ctx, indices)

    @property
    def has_confirm(self) -> bool:
        return self.definition.confirm is not None


# --- Runner ---

Outcome = Tuple[Any, ...]


def evaluate_params(check: Any, params: Optional[SeqParams], points: List[Dict[str, int]]) -> List[Outcome]:
    """All outcomes at one parameter point, in index enumeration order."""
    if params is None or (check.needs_rho and params.rho == 0):
        return [("skip",)] * len(points)
    ctx = SequenceContext(params)
    outcomes: List[Outcome] = []
    for indices in points:
        try:
            result = check.evaluate(ctx, indices)
        except (IndexOutOfDomain, DegenerateParameters) as e:
            logger.debug(f"{check.name}: skipped {indices} at ({params}): {e}")
            result = None
        if result is None:
            outcomes.append(("skip",))
            continue
        lhs, rhs = result
        if lhs == rhs:
            outcomes.append(("pass",))
            continue
        confirmed = None
        if getattr(check, "has_confirm", False):
            second = check.confirm(ctx, indices)
            confirmed = second == lhs and second != rhs
        outcomes.append(("fail", indices, lhs, rhs, confirmed))
    return outcomes


def describe_grid(check: Any, grid: GridSpec) -> Dict[str, Any]:
    if check.fixed_params is not None:
        params: Dict[str, Any] = {"fixed": check.fixed_params.to_dict()}
    else:
        params = grid.describe_params()
    return {
        "params": params,
        "indices": {name: list(check.axis_domain(name, grid)) for name in check.index_vars},
    }


def run_check(check: Any, grid: GridSpec, *, workers: int = 1, cap: int = COUNTEREXAMPLE_CAP,
              progress: bool = False) -> IdentityReport:
    """Evaluate one check over the grid; the report does not depend on `workers`."""
    if check.fixed_params is not None:
        param_points = [(check.fixed_params.to_dict(), check.fixed_params)]
    else:
        param_points = list(grid.param_points())
    points = index_points(check, grid)
    builder = ReportBuilder(check.name, check.tier, describe_grid(check, grid), cap, notes=check.notes)
    logger.info(f"Checking {check.name} on {len(param_points)} parameter points x {len(points)} indices")

    params_list = [params for _, params in param_points]
    if workers > 1 and len(param_points) > 1:
        chunksize = max(1, len(param_points) // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(tqdm(
                pool.map(evaluate_params, itertools.repeat(check), params_list,
                         itertools.repeat(points), chunksize=chunksize),
                total=len(param_points), desc=check.name, disable=not progress,
            ))
    else:
        results = [
            evaluate_params(check, params, points)
            for params in tqdm(params_list, desc=check.name, disable=not progress)
        ]

    for (point, _), outcomes in zip(param_points, results):
        for outcome in outcomes:
            kind = outcome[0]
            if kind == "pass":
                builder.record_pass()
            elif kind == "skip":
                builder.record_skip()
            else:
                _, indices, lhs, rhs, confirmed = outcome
                builder.record_fail(point, indices, lhs, rhs, confirmed)
    report = builder.build()
    logger.info(f"{report.identity}: pass={report.passed} fail={report.failed} skipped={report.skipped}")
    return report


def reverify_counterexamples(check: Any, report: IdentityReport) -> bool:
    """True when every archived counterexample still evaluates to a mismatch."""
    for cex in report.counterexamples:
        params = SeqParams.from_dict(cex.point)
        result = check.evaluate(SequenceContext(params), cex.indices)
        if result is None or result[0] == result[1]:
            return False
    return True
