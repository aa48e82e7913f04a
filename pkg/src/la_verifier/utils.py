# src/la_verifier/utils.py
"""
Shared utility functions for the la_verifier package.

This module contains helper functions for:
- Filesystem operations (sanitizing report names, creating directories)
- Exact-number parsing and serialization (rationals as "num/den")
- JSON output with ujson
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, List, Union

import ujson

RationalLike = Union[int, str, Fraction]


# --- Filesystem and Path Helpers ---

def sanitize_filename(name: str) -> str:
    """Sanitize identity and reading names for safe filesystem use."""
    if not isinstance(name, str):
        name = str(name)
    name = name.strip()
    name = name.replace("/", "__")
    name = re.sub(r'[^\w\-_.]', '_', name)
    name = re.sub(r'_{3,}', '__', name)
    name = name.strip('_')
    return name if name else "_unnamed_report_"


def create_directory(path: str | Path) -> Path:
    """Create directory if it does not exist."""
    path_obj = Path(path)
    path_obj.mkdir(parents=True, exist_ok=True)
    return path_obj


def write_json(path: str | Path, payload: Any) -> Path:
    """Write a JSON document deterministically (stable key order, trailing newline)."""
    path_obj = Path(path)
    path_obj.parent.mkdir(parents=True, exist_ok=True)
    text = ujson.dumps(payload, indent=2, ensure_ascii=False, escape_forward_slashes=False)
    with open(path_obj, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
        f.write("\n")
    return path_obj


def read_json(path: str | Path) -> Any:
    with open(path, "r", encoding="utf-8") as f:
        return ujson.load(f)


# --- Exact Numbers ---

def parse_rational(value: RationalLike) -> Fraction:
    """Convert ints, Fractions and strings like '3', '-2/5' into a Fraction.

    Floats are rejected: every value in this package must be exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not exact scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        cleaned = value.strip()
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", cleaned):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(cleaned)
    raise TypeError(f"unsupported scalar type {type(value).__name__}; use int, Fraction or 'num/den'")


def rational_to_str(value: Fraction | int) -> str:
    """'num/den', with the denominator omitted when it is 1."""
    return str(Fraction(value))


def parse_rational_list(text: str) -> List[Fraction]:
    """Parse a grid axis such as '-3..3', '0,1,1/2' or '-2..2,5'."""
    values: List[Fraction] = []
    for part in (chunk.strip() for chunk in text.split(",")):
        if not part:
            continue
        if ".." in part:
            lo, hi = (int(x) for x in part.split("..", 1))
            step = 1 if hi >= lo else -1
            values.extend(Fraction(k) for k in range(lo, hi + step, step))
        else:
            values.append(parse_rational(part))
    if not values:
        raise ValueError(f"empty value list: {text!r}")
    return values


def parse_int_range(text: str) -> List[int]:
    """Parse an index axis such as '0..10' or '0,1,5'."""
    values = parse_rational_list(text)
    if any(v.denominator != 1 for v in values):
        raise ValueError(f"index values must be integers: {text!r}")
    return [int(v) for v in values]


def dedupe_preserving_order(items: Iterable[Any]) -> List[Any]:
    seen = set()
    out = []
    for item in items:
        if item not in seen:
            seen.add(item)
            out.append(item)
    return out
