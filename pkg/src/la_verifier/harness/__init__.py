# src/la_verifier/harness/__init__.py
"""Identity checks over parameter grids, the identity DSL and report output."""
