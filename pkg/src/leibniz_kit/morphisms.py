"""Linear maps on an algebra: endomorphism tests, quotient maps, invariance checks.

Matrices use the column convention: column ``j`` holds the coordinates of
``f(b_j)``, so ``f o g`` is the matrix product ``F @ G``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .algebra import (
    Algebra,
    centers,
    derived_ideal,
    lower_central_series,
    upper_central_series,
)
from .errors import AlgebraMismatch, NotAutomorphism, NotEndomorphism, NotInvariant
from .field import Scalar
from .linalg import Matrix, Subspace, Vector, det


@dataclass(frozen=True)
class LinearMap:
    algebra: Algebra
    matrix: Matrix

    def __post_init__(self):
        n = self.algebra.dim
        if self.matrix.nrows != n or self.matrix.ncols != n:
            raise ValueError(f"expected a {n}x{n} matrix")
        if self.matrix.field != self.algebra.field:
            raise AlgebraMismatch("matrix and algebra live over different fields")

    @classmethod
    def from_columns(cls, A: Algebra, cols: Iterable[Sequence]) -> "LinearMap":
        return cls(A, Matrix.from_columns(A.field, cols))

    @classmethod
    def identity(cls, A: Algebra) -> "LinearMap":
        return cls(A, Matrix.identity(A.field, A.dim))

    @classmethod
    def zero(cls, A: Algebra) -> "LinearMap":
        return cls(A, Matrix.zeros(A.field, A.dim))

    def __call__(self, v: Sequence) -> Vector:
        return self.matrix.apply(v)

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if other.algebra != self.algebra:
            raise AlgebraMismatch("cannot compose maps on different algebras")
        return LinearMap(self.algebra, self.matrix @ other.matrix)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.algebra, self.matrix + other.matrix)

    def inverse(self) -> "LinearMap":
        return LinearMap(self.algebra, self.matrix.inverse())

    def det(self) -> Scalar:
        return det(self.matrix)

    def columns(self) -> list[Vector]:
        return self.matrix.columns()

    def sort_key(self) -> tuple:
        return self.matrix.sort_key()

    def to_json(self):
        """Column-major nested arrays."""
        F = self.matrix.field
        return [[F.raw_to_json(v) for v in col] for col in self.columns()]


def endomorphism_violations(A: Algebra, f: LinearMap) -> list[tuple[int, int, Vector, Vector]]:
    """Basis pairs ``(i, j, f([b_i,b_j]), [f(b_i), f(b_j)])`` where the two differ."""
    cols = f.columns()
    out = []
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = f(A.constants[i][j])
            rhs = A.bracket_raw(cols[i], cols[j])
            if lhs != rhs:
                out.append((i, j, lhs, rhs))
    return out


def is_endomorphism(A: Algebra, f: LinearMap) -> bool:
    return not endomorphism_violations(A, f)


def is_automorphism(A: Algebra, f: LinearMap) -> bool:
    return f.det().value != 0 and is_endomorphism(A, f)


def induced_quotient_map(f: LinearMap, Z: Subspace) -> Matrix:
    """Matrix of ``x + Z -> f(x) + Z`` on the basis of non-pivot unit vectors of ``Z``."""
    if not Z.contains(Z.image(f.matrix)):
        raise NotInvariant("f does not map Z into itself")
    comp = Z.complement_indices()
    if not comp:
        raise NotInvariant("quotient by the whole space is zero-dimensional")
    cols = []
    for j in comp:
        r = Z.reduce(f.matrix.column(j))
        cols.append([r[i] for i in comp])
    return Matrix.from_columns(f.matrix.field, cols)


@lru_cache(maxsize=64)
def structural_subspaces(A: Algebra) -> dict[str, Subspace]:
    """Named invariant subspaces that automorphisms must fix setwise."""
    left, right, two = centers(A)
    out = {"left_center": left, "right_center": right, "center": two, "derived": derived_ideal(A)}
    for k, t in enumerate(upper_central_series(A).terms):
        out[f"upper_{k}"] = t
    for k, t in enumerate(lower_central_series(A).terms, start=1):
        out[f"lower_{k}"] = t
    return out


def invariance_report(A: Algebra, f: LinearMap, mode: str = "automorphism") -> dict[str, bool]:
    """Per-invariant pass/fail for ``f``.

    Automorphisms must map each invariant subspace onto itself; endomorphisms
    only need ``f(gamma_k) <= gamma_k`` on the lower central series.
    """
    if not is_endomorphism(A, f):
        raise NotEndomorphism("map fails f([a,b]) = [f(a), f(b)]")
    subs = structural_subspaces(A)
    if mode == "automorphism":
        if f.det().value == 0:
            raise NotAutomorphism("endomorphism is not bijective")
        return {name: S.image(f.matrix) == S for name, S in subs.items()}
    if mode == "endomorphism":
        return {name: S.contains(S.image(f.matrix)) for name, S in subs.items() if name.startswith("lower_")}
    raise ValueError(f"mode must be automorphism or endomorphism, not {mode!r}")
