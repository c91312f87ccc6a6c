"""Pytest configuration and fixtures."""

# ruff: noqa: E402

import math
import sys
from collections.abc import Callable
from pathlib import Path

import numpy as np
import pytest

ROOT_DIR = Path(__file__).resolve().parents[2]
if str(ROOT_DIR) not in sys.path:
    sys.path.insert(0, str(ROOT_DIR))

from goldbach3.app.schemas.arith import MangoldtTable
from goldbach3.app.schemas.ramanujan import Constraint
from goldbach3.app.services import arith_service


@pytest.fixture(scope="session")
def small_table() -> MangoldtTable:
    """Tables up to 2 * 10^4, shared by the whole session."""
    return arith_service.build_tables(20_000)


@pytest.fixture(scope="session")
def large_table() -> MangoldtTable:
    """Tables just past 10^5 for the oracle-sized checks."""
    return arith_service.build_tables(100_050)


@pytest.fixture
def cache_dir(tmp_path, monkeypatch) -> Path:
    """Empty table cache; also the default for code that reads settings."""
    from goldbach3.app.config import settings

    path = tmp_path / "cache"
    monkeypatch.setattr(settings, "cache_dir", path)
    return path


def _reduced_residue(rng: np.random.Generator, q: int) -> int:
    while True:
        a = int(rng.integers(0, q))
        if math.gcd(a, q) == 1:
            return a


def _seeded_constraints(seed: int, count: int, n_max: int, q_max: int) -> list[Constraint]:
    rng = np.random.default_rng(seed)
    constraints = []
    for _ in range(count):
        n = int(rng.integers(1, n_max + 1))
        moduli = [int(q) for q in rng.integers(1, q_max + 1, size=3)]
        residues = [_reduced_residue(rng, q) for q in moduli]
        constraints.append(
            Constraint(
                n=n,
                a1=residues[0],
                q1=moduli[0],
                a2=residues[1],
                q2=moduli[1],
                a3=residues[2],
                q3=moduli[2],
            )
        )
    return constraints


@pytest.fixture
def random_constraints() -> Callable[[int, int, int, int], list[Constraint]]:
    """Builder for seeded constraints: (seed, count, n_max, q_max)."""
    return _seeded_constraints
