# conftest.py
import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "src"))

from la_verifier.harness.grid import GridSpec  # noqa: E402
from la_verifier.schemas import SeqParams  # noqa: E402


@pytest.fixture
def leonardo():
    return SeqParams.leonardo()


@pytest.fixture
def ernst():
    return SeqParams.ernst()


@pytest.fixture
def small_grid():
    """A handful of parameter points, including D = 0 (p=2, q=-1) and rho = 0 (p=2, q=-1; p=0, q=1)."""
    return GridSpec(p=(0, 1, 2), q=(-1, 1, 2), r=(0, 1), a=(1,), b=(1, 2))


@pytest.fixture
def tiny_grid():
    return GridSpec(p=(1, 2), q=(1, -3), r=(0, 2), a=(1,), b=(0,))
