import itertools
from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from leibniz_kit.algebra import (
    Algebra,
    annihilator,
    build_lei4,
    center,
    centers,
    check_left_leibniz,
    derived_ideal,
    is_extraspecial,
    is_ideal,
    is_subalgebra,
    leibniz_kernel,
    lower_central_series,
    nilpotency_class,
    upper_central_series,
)
from leibniz_kit.errors import NotLeibniz, NotSubalgebra, ZeroLambda
from leibniz_kit.field import GF, QQ
from leibniz_kit.linalg import Subspace

from conftest import lei4


def span(F, n, *vecs):
    return Subspace.span(F, n, vecs)


def elements(A):
    return list(itertools.product(range(A.field.p), repeat=A.dim))


def brute_centers(A):
    """Left, right and two-sided centers by checking every element of a finite algebra."""
    basis = [A.basis_vector(i) for i in range(A.dim)]
    zero = tuple([0] * A.dim)
    left = [x for x in elements(A) if all(A.bracket_raw(x, b) == zero for b in basis)]
    right = [x for x in elements(A) if all(A.bracket_raw(b, x) == zero for b in basis)]
    both = [x for x in left if x in right]
    return [Subspace.span(A.field, A.dim, s) for s in (left, right, both)], [len(left), len(right), len(both)]


@lru_cache(maxsize=None)
def leibniz_tables_gf2_dim2():
    F = GF(2)
    out = []
    for entries in itertools.product(range(2), repeat=8):
        c = [[[entries[4 * i + 2 * j + k] for k in range(2)] for j in range(2)] for i in range(2)]
        if not check_left_leibniz(c, F):
            out.append(Algebra(F, c))
    return out


def test_bracket_examples():
    A = lei4(3, 1)
    a1, a2, a3 = A.basis()
    assert A.bracket(a1, a1) == a3
    assert A.bracket(a1, a2).is_zero()
    assert A.bracket(a1 + a2, a1 + a2) == 2 * a3


def test_check_left_leibniz_examples():
    assert check_left_leibniz(lei4(3, 1)) == []
    assert check_left_leibniz([[[0] * 2] * 2] * 2, GF(3)) == []
    bad = check_left_leibniz([[[0, 1], [0, 0]], [[0, 1], [0, 0]]], GF(3))
    first = bad[0]
    assert (first.i, first.j, first.k) == (0, 0, 0)
    assert first.lhs == (0, 1) and first.rhs == (0, 0)
    with pytest.raises(NotLeibniz) as exc:
        Algebra.from_sparse(GF(3), 2, [(1, 1, 2, 1), (2, 1, 2, 1)])
    assert exc.value.violations == bad
    assert Algebra.from_sparse(GF(3), 2, [(1, 1, 2, 1), (2, 1, 2, 1)], check=False).dim == 2


def test_leibniz_kernel_examples(abelian2):
    for p, lam in [(2, 1), (3, 1), (5, 2)]:
        assert leibniz_kernel(lei4(p, lam)) == span(GF(p), 3, (0, 0, 1))
    assert leibniz_kernel(abelian2).dim == 0
    heis = Algebra.from_sparse(QQ, 3, [(1, 2, 3, 1), (2, 1, 3, -1)])
    assert leibniz_kernel(heis).dim == 0


def test_leibniz_kernel_matches_squares():
    # span of [x, x] over all x, computed by brute force
    for A in leibniz_tables_gf2_dim2() + [lei4(3, 1), lei4(2, 1)]:
        squares = [A.bracket_raw(x, x) for x in elements(A)]
        assert leibniz_kernel(A) == Subspace.span(A.field, A.dim, squares)


def test_centers_examples(abelian2, cyclic2):
    for p, lam in [(2, 1), (3, 1)]:
        A = lei4(p, lam)
        a3 = span(GF(p), 3, (0, 0, 1))
        assert centers(A) == (a3, a3, a3)
    full = Subspace.full(GF(3), 2)
    assert centers(abelian2) == (full, full, full)
    e2 = span(GF(3), 2, (0, 1))
    assert centers(cyclic2) == (e2, e2, e2)
    spaces, sizes = brute_centers(cyclic2)
    assert spaces == [e2, e2, e2] and sizes == [3, 3, 3]


def test_centers_against_brute_force():
    for A in leibniz_tables_gf2_dim2() + [lei4(3, 1)]:
        spaces, _ = brute_centers(A)
        assert list(centers(A)) == spaces


def test_upper_series_examples(abelian2, solvable2):
    assert upper_central_series(lei4(3, 1)).dims() == [0, 1, 3]
    assert upper_central_series(abelian2).dims() == [0, 2]
    chain = upper_central_series(solvable2)
    assert chain.dims() == [0]
    # the center is trivial: no nonzero element of GF(2)^2 is central
    assert brute_centers(solvable2)[1][2] == 1


def test_lower_series_examples(abelian2, solvable2):
    F = GF(3)
    L = lower_central_series(lei4(3, 1))
    assert L.terms == (Subspace.full(F, 3), span(F, 3, (0, 0, 1)), Subspace.zero(F, 3))
    assert lower_central_series(abelian2).dims() == [2, 0]
    S = lower_central_series(solvable2)
    assert S.limit == span(GF(2), 2, (0, 1)) and S.dims() == [2, 1]


def test_nilpotency_class(abelian2, solvable2, cyclic2):
    assert nilpotency_class(lei4(3, 1)) == 2
    assert nilpotency_class(abelian2) == 1
    assert nilpotency_class(solvable2) is None
    assert nilpotency_class(cyclic2) == 2


def test_annihilator_examples():
    A = lei4(3, 1)
    F = GF(3)
    L = Subspace.full(F, 3)
    a1 = span(F, 3, (1, 0, 0))
    left = annihilator(A, L, a1, "left")
    assert left == span(F, 3, (0, 1, 0), (0, 0, 1)) and left.dim == 2
    assert annihilator(A, L, span(F, 3, (0, 0, 1)), "both") == L
    assert annihilator(A, L, a1, "right") == span(F, 3, (0, 1, 0), (0, 0, 1))
    with pytest.raises(NotSubalgebra):
        annihilator(A, a1, a1, "left")


def test_annihilator_brute_force():
    A = lei4(3, 1)
    F = GF(3)
    a1 = (1, 0, 0)
    left = [x for x in elements(A) if A.bracket_raw(x, a1) == (0, 0, 0)]
    assert annihilator(A, Subspace.full(F, 3), span(F, 3, a1), "left") == Subspace.span(F, 3, left)
    assert len(left) == 9


def test_ideal_predicates():
    A = lei4(3, 1)
    F = GF(3)
    assert is_ideal(A, span(F, 3, (0, 0, 1))) == (True, True, True)
    assert is_ideal(A, span(F, 3, (1, 0, 0), (0, 0, 1)))[2]
    assert not is_subalgebra(A, span(F, 3, (1, 0, 0)))
    assert is_subalgebra(A, span(F, 3, (1, 0, 0), (0, 0, 1)))


def test_build_lei4():
    A = build_lei4(GF(3), 1)
    assert check_left_leibniz(A) == [] and A.labels == ("a1", "a2", "a3")
    assert A.x2_plus_lambda_reducible is False
    with pytest.raises(ZeroLambda):
        build_lei4(GF(5), 0)
    assert build_lei4(GF(2), 1).x2_plus_lambda_reducible is True
    assert build_lei4(GF(5), 1).x2_plus_lambda_reducible is True


def test_is_extraspecial(abelian2, cyclic2):
    assert is_extraspecial(lei4(3, 1))
    assert not is_extraspecial(abelian2)
    assert is_extraspecial(cyclic2)
    assert derived_ideal(cyclic2) == center(cyclic2)


def test_leib_in_left_center_and_series_are_ideals():
    algebras = leibniz_tables_gf2_dim2() + [lei4(p, l) for p, l in [(2, 1), (3, 1), (5, 2), (5, 1)]]
    assert len(leibniz_tables_gf2_dim2()) > 5
    for A in algebras:
        left, _, _ = centers(A)
        assert left.contains(leibniz_kernel(A))
        for t in upper_central_series(A).terms + lower_central_series(A).terms:
            assert is_ideal(A, t)[2]


@pytest.mark.parametrize("F,lams", [(GF(2), [1]), (GF(3), [1, 2]), (GF(5), [1, 2, 3, 4]), (GF(7), [1, 3, 6]), (QQ, [1, "1/2", -3])])
def test_lei4_invariant_grid(F, lams):
    for lam in lams:
        A = build_lei4(F, lam)
        a3 = span(F, 3, (0, 0, 1))
        left, right, two = centers(A)
        assert leibniz_kernel(A) == derived_ideal(A) == left == right == two == a3
        assert nilpotency_class(A) == 2


def test_irreducible_squares_nonzero():
    A = lei4(3, 1)
    for x in elements(A):
        if x[0] or x[1]:
            assert A.bracket_raw(x, x) != (0, 0, 0)


coords = st.lists(st.integers(0, 4), min_size=3, max_size=3)


@given(coords, coords, coords, st.integers(0, 4))
def test_bracket_bilinear(x, x2, y, k):
    A = lei4(5, 2)
    X, X2, Y = A.element(x), A.element(x2), A.element(y)
    assert A.bracket(X + X2, Y) == A.bracket(X, Y) + A.bracket(X2, Y)
    assert A.bracket(Y, X + X2) == A.bracket(Y, X) + A.bracket(Y, X2)
    assert A.bracket(k * X, Y) == k * A.bracket(X, Y) == A.bracket(X, k * Y)
