import itertools

import pytest

from leibniz_kit.algebra import Algebra, center
from leibniz_kit.autgroup import (
    AutSet,
    centralizer_of,
    centralizer_of_quotient,
    enumerate_automorphisms,
    is_normal_subset,
    pruning_plan,
    quotient_blocks,
    scan_automorphisms,
    verify_group,
)
from leibniz_kit.errors import GuardExceeded, InfiniteField, NotSubset
from leibniz_kit.field import GF, QQ
from leibniz_kit.linalg import Matrix, Subspace
from leibniz_kit.morphisms import LinearMap, invariance_report, is_automorphism

from conftest import all_matrices, aut, lei4


def python_oracle(A):
    """Every invertible endomorphism, by the scalar-level predicates over all p^(n^2) matrices."""
    F = A.field
    found = [LinearMap(A, Matrix(F, rows)) for rows in all_matrices(F.p, A.dim)]
    return AutSet(A, tuple(f for f in found if is_automorphism(A, f)))


def test_gf2_full_scan():
    A = lei4(2, 1)
    G, stats = scan_automorphisms(A, prune=False)
    assert stats.candidates == 512 and len(G) == 8
    assert G.elements == python_oracle(A).elements


def test_gf3_pruned_matches_unpruned_and_python_oracle():
    A = lei4(3, 1)
    pruned, stats = scan_automorphisms(A, prune=True)
    assert stats.candidates == 3**6 and stats.forced_columns == [3]
    full = enumerate_automorphisms(A, prune=False)
    assert len(pruned) == 144
    assert pruned.elements == full.elements == python_oracle(A).elements


def test_gf2_pruned_matches_unpruned():
    A = lei4(2, 1)
    assert enumerate_automorphisms(A).elements == enumerate_automorphisms(A, prune=False).elements


def test_gf5_order():
    assert len(aut(5, 2)) == 1200


def test_pruning_plan_lei4():
    free, forced = pruning_plan(lei4(3, 2))
    assert free == [0, 1]
    assert forced == {2: {(0, 0): 1}}


@pytest.mark.parametrize("table,p,expected", [
    ([], 3, 48),                       # GL_2(3)
    ([(1, 1, 2, 1)], 3, 6),            # a e1 + b e2, e2 -> a^2 e2
    ([(1, 2, 2, 1)], 2, 1),            # f(e1) = e1 + b e2 needs b = 0; f(e2) = d e2
    ([(1, 2, 2, 1)], 3, 2),
    ([(1, 2, 3, 1), (2, 1, 3, -1)], 2, None),
])
def test_generic_algebras_against_oracle(table, p, expected):
    n = max([max(t[:3]) for t in table], default=2)
    A = Algebra.from_sparse(GF(p), n, table)
    G = enumerate_automorphisms(A)
    assert G.elements == python_oracle(A).elements
    assert G.elements == enumerate_automorphisms(A, prune=False).elements
    if expected is not None:
        assert len(G) == expected
    assert verify_group(G) is None


def test_parallel_scan_is_deterministic():
    A = lei4(5, 2)
    assert enumerate_automorphisms(A, jobs=3).elements == aut(5, 2).elements


def test_enumeration_errors(monkeypatch):
    with pytest.raises(InfiniteField):
        enumerate_automorphisms(Algebra.from_sparse(QQ, 2, []))
    with pytest.raises(GuardExceeded):
        enumerate_automorphisms(lei4(3, 1), guard=100)
    monkeypatch.setenv("LEIBNIZ_KIT_GUARD", "1000")
    with pytest.raises(GuardExceeded):
        enumerate_automorphisms(lei4(3, 1), prune=False)
    assert len(enumerate_automorphisms(lei4(3, 1))) == 144


def test_autset_canonical():
    A = lei4(3, 1)
    G = aut(3, 1)
    keys = [f.sort_key() for f in G]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    shuffled = AutSet(A, tuple(reversed(G.elements)) + G.elements[:5])
    assert shuffled == G


def test_verify_group_examples():
    A = lei4(3, 1)
    G = aut(3, 1)
    assert verify_group(G) is None
    ident = LinearMap.identity(A)
    assert verify_group(AutSet(A, (ident,))) is None
    assert verify_group(G.without(ident)) == "identity"
    half = AutSet(A, G.elements[:72] + (ident,))
    assert verify_group(half) in ("closure", "inverse")


def test_verify_group_rational_fallback():
    A = Algebra.from_sparse(QQ, 2, [])
    swap = LinearMap.from_columns(A, [(0, 1), (1, 0)])
    assert verify_group(AutSet(A, (LinearMap.identity(A), swap))) is None
    neg = LinearMap.from_columns(A, [(-1, 0), (0, 1)])
    assert verify_group(AutSet(A, (LinearMap.identity(A), swap, neg))) == "closure"


def test_centralizer_of_quotient_examples():
    for p, size in [(3, 9), (2, 4)]:
        A = lei4(p, 1)
        assert len(centralizer_of_quotient(aut(p, 1), center(A))) == size
    whole = Subspace.full(GF(3), 3)
    assert centralizer_of_quotient(aut(3, 1), whole) == aut(3, 1)


def test_centralizer_of_examples():
    A = lei4(3, 1)
    F = GF(3)
    G = aut(3, 1)
    assert centralizer_of(G, Subspace.zero(F, 3)) == G
    assert centralizer_of(G, Subspace.full(F, 3)).elements == (LinearMap.identity(A),)
    fixed = centralizer_of(G, Subspace.span(F, 3, [(0, 0, 1)]))
    # count from the parameterization: (a1, a2) with a1^2 + a2^2 = 1, both signs of delta, any (a3, b3)
    circle = sum(1 for a1, a2 in itertools.product(range(3), repeat=2) if (a1 * a1 + a2 * a2) % 3 == 1)
    assert len(fixed) == circle * 2 * 9 == 72


def test_normality_examples():
    A = lei4(3, 1)
    G = aut(3, 1)
    ident = AutSet(A, (LinearMap.identity(A),))
    assert is_normal_subset(G, ident)
    assert is_normal_subset(G, G)
    assert is_normal_subset(G, centralizer_of_quotient(G, center(A)))
    # a non-normal subgroup: {1, swap} (swap conjugates to other reflections)
    swap = LinearMap.from_columns(A, [(0, 1, 0), (1, 0, 0), (0, 0, 1)])
    assert not is_normal_subset(G, AutSet(A, (LinearMap.identity(A), swap)))
    outside = AutSet(A, (LinearMap.from_columns(A, [(1, 0, 0), (0, 1, 0), (0, 0, 2)]),))
    with pytest.raises(NotSubset):
        is_normal_subset(G, outside)


@pytest.mark.parametrize("p,lam", [(2, 1), (3, 1), (5, 2)])
def test_quotient_centralizer_is_additive(p, lam):
    A = lei4(p, lam)
    C = centralizer_of_quotient(aut(p, lam), center(A))
    assert len(C) == p * p
    for f, g in itertools.product(C, repeat=2):
        h = f @ g
        assert h in C
        got = (h.matrix.rows[2][0], h.matrix.rows[2][1])
        want = ((f.matrix.rows[2][0] + g.matrix.rows[2][0]) % p, (f.matrix.rows[2][1] + g.matrix.rows[2][1]) % p)
        assert got == want


@pytest.mark.parametrize("p,lam", [(2, 1), (3, 1), (5, 2)])
def test_lagrange_consistency(p, lam):
    A = lei4(p, lam)
    G = aut(p, lam)
    C = centralizer_of_quotient(G, center(A))
    assert len(G) // len(C) == len(quotient_blocks(G, center(A)))
    assert len(G) % len(C) == 0


def test_every_automorphism_is_invariant():
    A = lei4(5, 2)
    for f in aut(5, 2):
        assert all(invariance_report(A, f).values())
