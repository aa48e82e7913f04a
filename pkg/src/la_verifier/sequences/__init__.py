# src/la_verifier/sequences/__init__.py
"""Scalar and hybrid Leonardo-Alwyn sequences and their generating functions."""
