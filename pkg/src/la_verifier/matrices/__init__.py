# src/la_verifier/matrices/__init__.py
"""Companion matrices and bordered tridiagonal determinants."""
