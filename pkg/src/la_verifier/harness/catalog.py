# src/la_verifier/harness/catalog.py
"""Identity catalog: suites, selection by name or family, and DSL renditions of built-in identities."""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

from la_verifier.errors import InvalidParams
from la_verifier.harness.dsl import DslCheck, parse_identity
from la_verifier.harness.grid import REGISTRY, BuiltinCheck, CheckDefinition, _ensure_registry
from la_verifier.harness.reports import MUST_PASS, UNDER_TEST
from la_verifier.utils import dedupe_preserving_order

SUITES = (MUST_PASS, UNDER_TEST, "all")

# Built-in identities restated in the DSL, multiplied through by rho^2 where they divide by it.
# Each maps to the built-in check it must agree with verdict for verdict (None when there is none).
DSL_CATALOG: Dict[str, Tuple[str, Optional[str]]] = {
    "recurrence": ("LA(n+3) == (1+p)*LA(n+2) + (q-p)*LA(n+1) - q*LA(n)", "recurrence-equiv"),
    "definition": ("LAH(n) == LA(n) + LA(n+1)*I + LA(n+2)*EPS + LA(n+3)*H", None),
    "hybrid-binet": ("rho*LAH(n) == r*PSI + HPART(n)", "hybrid-binet"),
    "character": (
        "rho^2*(LAH(m)*conj(LAH(m))) == 2*r*(1 - q - p*q)*HS(m) - 2*r*(p^2 + p + q)*HS(m+1)"
        " + (1 - p^2*q^2)*HS(m)^2 + (1 - 2*p - (p^2 + q)^2)*HS(m+1)^2"
        " - 2*q*(1 + p*q + p^3)*HS(m+1)*HS(m) - r^2",
        "character",
    ),
    "cassini": (
        "rho^2*(LAH(n+1)*LAH(n-1) - LAH(n)^2) == HPART(n+1)*HPART(n-1) - HPART(n)^2"
        " + r*(PSI*KSHIFT(n, 1) - KSHIFT(n-1, 1)*PSI)",
        "cassini",
    ),
    "catalan": (
        "rho^2*(LAH(n+u)*LAH(n-u) - LAH(n)^2) == HPART(n+u)*HPART(n-u) - HPART(n)^2"
        " + r*(PSI*KSHIFT(n, u) - KSHIFT(n-u, u)*PSI)",
        "catalan",
    ),
    "docagne": (
        "rho^2*(LAH(n+1)*LAH(m) - LAH(n)*LAH(m+1)) == HPART(n+1)*HPART(m) - HPART(n)*HPART(m+1)"
        " + r*(PSI*KSHIFT(n, 1) - KSHIFT(m, 1)*PSI)",
        "docagne",
    ),
    "character-product": ("conj(LAH(n))*LAH(n) == LAH(n)*conj(LAH(n))", None),
}


def catalog_entries() -> List[CheckDefinition]:
    """Every built-in check in registration order."""
    _ensure_registry()
    return list(REGISTRY.values())


def families() -> Dict[str, List[str]]:
    out: Dict[str, List[str]] = {}
    for entry in catalog_entries():
        out.setdefault(entry.family, []).append(entry.name)
    return out


def suite(name: str) -> List[BuiltinCheck]:
    if name not in SUITES:
        raise InvalidParams(f"unknown suite {name!r}; expected one of {SUITES}")
    return [BuiltinCheck(e.name) for e in catalog_entries() if name == "all" or e.tier == name]


def resolve(name: str) -> List[str]:
    """An exact check name, a family name, or a name prefix such as 'cereceda-scalar'."""
    _ensure_registry()
    if name in REGISTRY:
        return [name]
    fams = families()
    if name in fams:
        return fams[name]
    matches = [n for n in REGISTRY if n.startswith(f"{name}/") or n.startswith(f"{name}-")]
    if matches:
        return matches
    raise InvalidParams(f"unknown identity {name!r}; run the catalog command for the list")


def select(names: Iterable[str] = (), suite_name: Optional[str] = None) -> List[BuiltinCheck]:
    """Checks for the given names and/or suite, deduplicated in first-seen order."""
    selected: List[str] = []
    if suite_name is not None:
        selected.extend(c.name for c in suite(suite_name))
    for name in names:
        selected.extend(resolve(name))
    if not selected:
        raise InvalidParams("no identities selected")
    return [BuiltinCheck(n) for n in dedupe_preserving_order(selected)]


@lru_cache(maxsize=None)
def dsl_catalog() -> Tuple[Tuple[DslCheck, Optional[str]], ...]:
    """(DslCheck, mirrored built-in name) for every DSL rendition."""
    return tuple(
        (DslCheck(f"dsl/{name}", parse_identity(text)), mirror)
        for name, (text, mirror) in DSL_CATALOG.items()
    )


def describe_catalog() -> List[Dict[str, str]]:
    return [
        {"name": e.name, "family": e.family, "tier": e.tier, "description": e.description}
        for e in catalog_entries()
    ]
