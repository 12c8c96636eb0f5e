"""Leibniz algebras given by structure constants, and their invariants.

``A.constants[i][j][k]`` is the coefficient of ``b_k`` in ``[b_i, b_j]``
(0-based internally; the JSON file format is 1-based).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Optional, Sequence

from .errors import AlgebraMismatch, NotLeibniz, NotSubalgebra, ZeroLambda
from .field import FieldSpec, Raw, Scalar, x2_plus_lambda_has_root
from .linalg import Matrix, Subspace, Vector, kernel


@dataclass(frozen=True)
class Violation:
    """A basis triple on which ``[[a,b],c] = [a,[b,c]] - [b,[a,c]]`` fails."""

    i: int
    j: int
    k: int
    lhs: Vector
    rhs: Vector

    def to_json(self, F: FieldSpec):
        return {
            "triple": [self.i + 1, self.j + 1, self.k + 1],
            "lhs": [F.raw_to_json(v) for v in self.lhs],
            "rhs": [F.raw_to_json(v) for v in self.rhs],
        }


def _normalize_constants(F: FieldSpec, constants) -> tuple:
    n = len(constants)
    out = []
    for i in range(n):
        if len(constants[i]) != n:
            raise ValueError("structure constants must be an n x n x n tensor")
        row = []
        for j in range(n):
            if len(constants[i][j]) != n:
                raise ValueError("structure constants must be an n x n x n tensor")
            row.append(tuple(F.normalize(x) for x in constants[i][j]))
        out.append(tuple(row))
    return tuple(out)


def _bracket(F: FieldSpec, c, x: Sequence[Raw], y: Sequence[Raw]) -> Vector:
    n = len(c)
    acc = [F.zero] * n
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        ci = c[i]
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            w = F.mul(xi, yj)
            for k, v in enumerate(ci[j]):
                if v != 0:
                    acc[k] = F.add(acc[k], F.mul(w, v))
    return tuple(acc)


def check_left_leibniz(constants, F: Optional[FieldSpec] = None) -> list[Violation]:
    """All basis triples violating the left Leibniz identity (empty list = pass).

    Accepts an :class:`Algebra` or a raw tensor plus its field.  Checking
    basis triples suffices because both sides are trilinear.
    """
    if isinstance(constants, Algebra):
        F, c = constants.field, constants.constants
    else:
        c = _normalize_constants(F, constants)
    n = len(c)
    e = [tuple(F.one if t == s else F.zero for t in range(n)) for s in range(n)]
    out = []
    for i in range(n):
        for j in range(n):
            ab = c[i][j]
            for k in range(n):
                lhs = _bracket(F, c, ab, e[k])
                r1 = _bracket(F, c, e[i], c[j][k])
                r2 = _bracket(F, c, e[j], c[i][k])
                rhs = tuple(F.sub(a, b) for a, b in zip(r1, r2))
                if lhs != rhs:
                    out.append(Violation(i, j, k, lhs, rhs))
    return out


@dataclass(frozen=True, eq=False)
class Algebra:
    field: FieldSpec
    constants: tuple
    labels: tuple = ()
    # only set by build_lei4: whether X^2 + lambda has a root in the field
    x2_plus_lambda_reducible: Optional[bool] = None
    check: bool = dc_field(default=True, repr=False)

    def __post_init__(self):
        c = _normalize_constants(self.field, self.constants)
        object.__setattr__(self, "constants", c)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"a{i + 1}" for i in range(len(c))))
        elif len(self.labels) != len(c):
            raise ValueError("one label per basis vector is required")
        if self.check:
            bad = check_left_leibniz(self)
            if bad:
                raise NotLeibniz(bad, self.field)

    @classmethod
    def from_sparse(cls, F: FieldSpec, dim: int, entries: Iterable, **kw) -> "Algebra":
        """Build from ``[i, j, k, scalar]`` entries with 1-based indices."""
        c = [[[F.zero] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, s in entries:
            for idx in (i, j, k):
                if not 1 <= idx <= dim:
                    raise ValueError(f"index {idx} outside 1..{dim}")
            c[i - 1][j - 1][k - 1] = F.normalize(s)
        return cls(F, c, **kw)

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.field == other.field and self.constants == other.constants

    def __hash__(self):
        return hash((self.field, self.constants))

    @property
    def dim(self) -> int:
        return len(self.constants)

    def basis_vector(self, i: int) -> Vector:
        F = self.field
        return tuple(F.one if t == i else F.zero for t in range(self.dim))

    def element(self, coords) -> "Element":
        return Element(self, tuple(self.field.normalize(x) for x in coords))

    def basis(self) -> list["Element"]:
        return [Element(self, self.basis_vector(i)) for i in range(self.dim)]

    def bracket_raw(self, x: Sequence[Raw], y: Sequence[Raw]) -> Vector:
        return _bracket(self.field, self.constants, x, y)

    def bracket(self, x: "Element", y: "Element") -> "Element":
        if x.algebra != self or y.algebra != self:
            raise AlgebraMismatch("elements belong to a different algebra")
        return Element(self, self.bracket_raw(x.coords, y.coords))

    def left_mult(self, j: int) -> Matrix:
        """Matrix of ``x -> [x, b_j]``."""
        return Matrix.from_columns(self.field, [self.constants[i][j] for i in range(self.dim)])

    def right_mult(self, j: int) -> Matrix:
        """Matrix of ``x -> [b_j, x]``."""
        return Matrix.from_columns(self.field, [self.constants[j][i] for i in range(self.dim)])

    def to_json(self) -> dict:
        F = self.field
        entries = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    v = self.constants[i][j][k]
                    if v != 0:
                        entries.append([i + 1, j + 1, k + 1, F.raw_to_json(v)])
        return {"field": F.to_json(), "dim": self.dim, "constants": entries, "labels": list(self.labels)}


@dataclass(frozen=True)
class Element:
    algebra: Algebra
    coords: Vector

    def __post_init__(self):
        if len(self.coords) != self.algebra.dim:
            raise ValueError("coordinate length does not match the algebra dimension")

    def _other(self, other: "Element") -> Vector:
        if other.algebra != self.algebra:
            raise AlgebraMismatch("elements belong to different algebras")
        return other.coords

    def __add__(self, other):
        F = self.algebra.field
        return Element(self.algebra, tuple(F.add(a, b) for a, b in zip(self.coords, self._other(other))))

    def __sub__(self, other):
        F = self.algebra.field
        return Element(self.algebra, tuple(F.sub(a, b) for a, b in zip(self.coords, self._other(other))))

    def __rmul__(self, k):
        F = self.algebra.field
        k = F.normalize(k)
        return Element(self.algebra, tuple(F.mul(k, a) for a in self.coords))

    def __neg__(self):
        return -1 * self

    def __getitem__(self, i) -> Scalar:
        return Scalar(self.algebra.field, self.coords[i])

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.coords)

    def __repr__(self):
        terms = [f"{v}*{lab}" for v, lab in zip(self.coords, self.algebra.labels) if v != 0]
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class SeriesChain:
    """A central series up to its first repeated term.

    ``terms`` holds distinct subspaces; the last one is the stable limit.
    """

    direction: str
    terms: tuple
    stabilized: bool = True

    @property
    def limit(self) -> Subspace:
        return self.terms[-1]

    def dims(self) -> list[int]:
        return [t.dim for t in self.terms]


def _preimage(A: Algebra, maps: Iterable[Matrix], target: Subspace) -> Subspace:
    """``{x : M x in target for every M in maps}``."""
    cons = target.annihilator_rows()
    rows = []
    for M in maps:
        for w in cons:
            # row vector w @ M
            rows.append(tuple(
                _rowdot(A.field, w, M.column(j)) for j in range(M.ncols)
            ))
    if not rows:
        return Subspace.full(A.field, A.dim)
    return kernel(Matrix(A.field, tuple(rows)))


def _rowdot(F, a, b):
    s = F.zero
    for x, y in zip(a, b):
        s = F.add(s, F.mul(x, y))
    return s


def leibniz_kernel(A: Algebra) -> Subspace:
    """Span of all squares ``[a, a]``, from the polarized finite generating set."""
    F, n = A.field, A.dim
    c = A.constants
    gens = [c[i][i] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            gens.append(tuple(F.add(a, b) for a, b in zip(c[i][j], c[j][i])))
    return Subspace.span(F, n, gens)


def derived_ideal(A: Algebra) -> Subspace:
    """``[L, L]``."""
    return Subspace.span(A.field, A.dim, [A.constants[i][j] for i in range(A.dim) for j in range(A.dim)])


def centers(A: Algebra):
    """``(left, right, two_sided)`` centers."""
    zero = Subspace.zero(A.field, A.dim)
    left = _preimage(A, [A.left_mult(j) for j in range(A.dim)], zero)
    right = _preimage(A, [A.right_mult(j) for j in range(A.dim)], zero)
    return left, right, left.intersect(right)


def center(A: Algebra) -> Subspace:
    return centers(A)[2]


def upper_central_series(A: Algebra) -> SeriesChain:
    maps = [A.left_mult(j) for j in range(A.dim)] + [A.right_mult(j) for j in range(A.dim)]
    terms = [Subspace.zero(A.field, A.dim)]
    while True:
        nxt = _preimage(A, maps, terms[-1])
        if nxt == terms[-1]:
            return SeriesChain("ascending", tuple(terms))
        terms.append(nxt)


def lower_central_series(A: Algebra) -> SeriesChain:
    terms = [Subspace.full(A.field, A.dim)]
    while True:
        cur = terms[-1]
        nxt = Subspace.span(
            A.field, A.dim,
            [A.bracket_raw(A.basis_vector(i), v) for i in range(A.dim) for v in cur.rows],
        )
        if nxt == cur:
            return SeriesChain("descending", tuple(terms))
        terms.append(nxt)


def nilpotency_class(A: Algebra) -> Optional[int]:
    series = lower_central_series(A)
    if series.limit.dim != 0:
        return None
    return len(series.terms) - 1


def is_subalgebra(A: Algebra, S: Subspace) -> bool:
    return all(S.contains(A.bracket_raw(u, v)) for u in S.rows for v in S.rows)


def is_ideal(A: Algebra, S: Subspace) -> tuple[bool, bool, bool]:
    """``(left, right, two_sided)``: ``[L,S] <= S``, ``[S,L] <= S``, both."""
    basis = [A.basis_vector(i) for i in range(A.dim)]
    left = all(S.contains(A.bracket_raw(b, v)) for b in basis for v in S.rows)
    right = all(S.contains(A.bracket_raw(v, b)) for b in basis for v in S.rows)
    return left, right, left and right


def annihilator(A: Algebra, H: Subspace, M: Subspace, side: str = "both") -> Subspace:
    if not is_subalgebra(A, H):
        raise NotSubalgebra("H is not closed under the bracket")
    F, n = A.field, A.dim
    zero = Subspace.zero(F, n)
    # x -> [x, m] has column i equal to [b_i, m]
    left_maps = [Matrix.from_columns(F, [A.bracket_raw(A.basis_vector(i), m) for i in range(n)]) for m in M.rows]
    right_maps = [Matrix.from_columns(F, [A.bracket_raw(m, A.basis_vector(i)) for i in range(n)]) for m in M.rows]
    if side == "left":
        X = _preimage(A, left_maps, zero)
    elif side == "right":
        X = _preimage(A, right_maps, zero)
    elif side == "both":
        X = _preimage(A, left_maps + right_maps, zero)
    else:
        raise ValueError(f"side must be left, right or both, not {side!r}")
    return X.intersect(H)


def is_extraspecial(A: Algebra) -> bool:
    d = derived_ideal(A)
    return d.dim == 1 and d == center(A)


def build_lei4(F: FieldSpec, lam) -> Algebra:
    """``Lei4(3, F)``: ``[a1,a1] = a3``, ``[a2,a2] = lam*a3``, other brackets zero."""
    lam = F.normalize(lam)
    if lam == 0:
        raise ZeroLambda("Lei4(3,F) needs lambda != 0")
    return Algebra.from_sparse(
        F, 3, [(1, 1, 3, 1), (2, 2, 3, lam)],
        labels=("a1", "a2", "a3"),
        x2_plus_lambda_reducible=x2_plus_lambda_has_root(F, lam),
    )
