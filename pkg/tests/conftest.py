"""Shared builds: worked-example functions are session-cached since
several suites inspect the same tables."""

from __future__ import annotations

import numpy as np
import pytest

from tribent.analysis import TernaryFunction
from tribent.fixtures import FIXTURES, get_fixture


@pytest.fixture(scope="session")
def built_fixtures() -> dict[str, TernaryFunction]:
    return {fx.name: fx.build() for fx in FIXTURES}


@pytest.fixture(scope="session")
def flagship(built_fixtures) -> TernaryFunction:
    """The n=6 even/plus worked example."""
    return built_fixtures["code98-a"]


def random_function(rng: np.random.Generator, n: int) -> TernaryFunction:
    return TernaryFunction(n, rng.integers(0, 3, 3 ** n))


def naive_spectrum_pair(f: TernaryFunction) -> tuple[np.ndarray, np.ndarray]:
    """Independent transform oracle: full character-sum matrix, no
    butterflies.  Exponent e(a, x) = f(x) - a.x mod 3; the value at a is
    the count of exponent-0 terms minus exponent-2 terms (unit part) and
    exponent-1 minus exponent-2 (root part)."""
    from tribent.core import coord_matrix

    n = f.n
    coords = coord_matrix(n).astype(np.int64)
    dots = (coords @ coords.T) % 3
    exps = (f.table.astype(np.int64)[None, :] - dots) % 3
    c0 = (exps == 0).sum(axis=1)
    c1 = (exps == 1).sum(axis=1)
    c2 = (exps == 2).sum(axis=1)
    return c0 - c2, c1 - c2
