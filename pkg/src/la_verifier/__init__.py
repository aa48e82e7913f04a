# src/la_verifier/__init__.py

"""
la_verifier package.

Exact hybrid-number arithmetic, generalized Leonardo-Alwyn sequences and a
harness that checks identities about them over parameter grids.
"""

# Lazy imports keep `import la_verifier` cheap and avoid import cycles with the harness.
def __getattr__(name):
    if name == "Hybrid":
        from .algebra.hybrid import Hybrid
        return Hybrid
    elif name == "QuadExt":
        from .algebra.scalars import QuadExt
        return QuadExt
    elif name == "SeqParams":
        from .schemas import SeqParams
        return SeqParams
    elif name == "GridSpec":
        from .harness.grid import GridSpec
        return GridSpec
    elif name == "run_check":
        from .harness.grid import run_check
        return run_check
    elif name == "parse_identity":
        from .harness.dsl import parse_identity
        return parse_identity
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")

__version__ = "0.1.0"
