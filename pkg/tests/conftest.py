import itertools
from functools import lru_cache

import pytest

from leibniz_kit import GF, build_lei4, enumerate_automorphisms
from leibniz_kit.algebra import Algebra


GRID = [(2, 1), (3, 1), (5, 2)]


@lru_cache(maxsize=None)
def lei4(p, lam):
    return build_lei4(GF(p), lam)


@lru_cache(maxsize=None)
def aut(p, lam):
    return enumerate_automorphisms(lei4(p, lam))


def cofactor_det(rows, p):
    """Laplace expansion along the first row, integers mod p."""
    n = len(rows)
    if n == 1:
        return rows[0][0] % p
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor, p)
    return total % p


def all_matrices(p, n):
    for entries in itertools.product(range(p), repeat=n * n):
        yield tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n))


@pytest.fixture
def cyclic2():
    return Algebra.from_sparse(GF(3), 2, [(1, 1, 2, 1)])


@pytest.fixture
def solvable2():
    # [e1, e2] = e2: not nilpotent
    return Algebra.from_sparse(GF(2), 2, [(1, 2, 2, 1)])


@pytest.fixture
def abelian2():
    return Algebra.from_sparse(GF(3), 2, [])
