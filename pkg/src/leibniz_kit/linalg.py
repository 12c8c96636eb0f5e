"""Dense exact linear algebra over a :class:`FieldSpec`.

Subspaces are stored by the reduced row-echelon form of a spanning set, so
equality of subspaces is equality of dataclasses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import AmbientMismatch, DivisionByZero, FieldMismatch, NonSquare
from .field import FieldSpec, Raw, Scalar

Vector = tuple  # tuple of raw canonical values


def _rref_rows(F: FieldSpec, rows: Sequence[Sequence[Raw]], ncols: int):
    """Row-reduce a list of raw rows. Returns (nonzero RREF rows, pivots)."""
    R = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(R)) if R[i][c] != 0), None)
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        inv = F.inv(R[r][c])
        R[r] = [F.mul(inv, v) for v in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c] != 0:
                k = R[i][c]
                R[i] = [F.sub(a, F.mul(k, b)) for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return [tuple(row) for row in R[:r]], pivots


@dataclass(frozen=True)
class Matrix:
    """Row-major matrix of raw canonical scalars."""

    field: FieldSpec
    rows: tuple

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise ValueError("matrix dimensions must be positive")
        w = len(self.rows[0])
        if any(len(r) != w for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def from_rows(cls, F: FieldSpec, rows: Iterable[Iterable]) -> "Matrix":
        return cls(F, tuple(tuple(F.normalize(x) for x in r) for r in rows))

    @classmethod
    def from_columns(cls, F: FieldSpec, cols: Iterable[Iterable]) -> "Matrix":
        cols = [tuple(F.normalize(x) for x in c) for c in cols]
        return cls(F, tuple(zip(*cols)))

    @classmethod
    def identity(cls, F: FieldSpec, n: int) -> "Matrix":
        return cls(F, tuple(tuple(F.one if i == j else F.zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, F: FieldSpec, m: int, n: int | None = None) -> "Matrix":
        return cls(F, tuple(tuple(F.zero for _ in range(n or m)) for _ in range(m)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return Scalar(self.field, self.rows[i][j])

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, tuple(zip(*self.rows)))

    def _check(self, other: "Matrix"):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        F = self.field
        cols = other.columns()
        out = []
        for r in self.rows:
            out.append(tuple(_dot(F, r, c) for c in cols))
        return Matrix(F, tuple(out))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        F = self.field
        return Matrix(F, tuple(tuple(F.add(a, b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        F = self.field
        return Matrix(F, tuple(tuple(F.sub(a, b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def scale(self, k) -> "Matrix":
        F = self.field
        k = F.normalize(k)
        return Matrix(F, tuple(tuple(F.mul(k, a) for a in r) for r in self.rows))

    def apply(self, v: Sequence[Raw]) -> Vector:
        """Matrix-vector product on raw coordinates."""
        return tuple(_dot(self.field, r, v) for r in self.rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(self.field, tuple(tuple(self.rows[i][j] for j in cols) for i in rows))

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise NonSquare("only square matrices are invertible")
        n = self.nrows
        F = self.field
        aug = [list(r) + [F.one if i == j else F.zero for j in range(n)] for i, r in enumerate(self.rows)]
        R, piv = _rref_rows(F, aug, n)
        if piv != list(range(n)):
            raise DivisionByZero("matrix is singular")
        return Matrix(F, tuple(tuple(r[n:]) for r in R))

    def sort_key(self) -> tuple:
        return tuple(v for r in self.rows for v in r)

    def to_json(self):
        return [[self.field.raw_to_json(v) for v in r] for r in self.rows]

    def __str__(self):
        return "\n".join(" ".join(f"{str(v):>4}" for v in r) for r in self.rows)


def _dot(F: FieldSpec, a: Sequence[Raw], b: Sequence[Raw]) -> Raw:
    if F.p is not None:
        return sum(x * y for x, y in zip(a, b)) % F.p
    s = F.zero
    for x, y in zip(a, b):
        s += x * y
    return s


def rref(M: Matrix):
    """Return ``(R, rank, pivots)``; ``R`` keeps the shape of ``M`` (zero rows at the bottom)."""
    rows, piv = _rref_rows(M.field, M.rows, M.ncols)
    zero = tuple(M.field.zero for _ in range(M.ncols))
    full = tuple(rows) + (zero,) * (M.nrows - len(rows))
    return Matrix(M.field, full), len(rows), piv


def det(M: Matrix) -> Scalar:
    if not M.is_square:
        raise NonSquare(f"det of a {M.nrows}x{M.ncols} matrix")
    F = M.field
    A = [list(r) for r in M.rows]
    n = len(A)
    d = F.one
    for c in range(n):
        pr = next((i for i in range(c, n) if A[i][c] != 0), None)
        if pr is None:
            return Scalar(F, F.zero)
        if pr != c:
            A[c], A[pr] = A[pr], A[c]
            d = F.neg(d)
        d = F.mul(d, A[c][c])
        inv = F.inv(A[c][c])
        for i in range(c + 1, n):
            if A[i][c] != 0:
                k = F.mul(A[i][c], inv)
                A[i] = [F.sub(a, F.mul(k, b)) for a, b in zip(A[i], A[c])]
    return Scalar(F, d)


@dataclass(frozen=True)
class Subspace:
    """Coordinate subspace of ``F^n`` held as its RREF basis rows."""

    field: FieldSpec
    ambient_dim: int
    rows: tuple = ()

    @classmethod
    def span(cls, F: FieldSpec, n: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [tuple(F.normalize(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != n:
                raise AmbientMismatch(f"vector of length {len(v)} in ambient dimension {n}")
        rows, _ = _rref_rows(F, vecs, n)
        return cls(F, n, tuple(rows))

    @classmethod
    def zero(cls, F: FieldSpec, n: int) -> "Subspace":
        return cls(F, n, ())

    @classmethod
    def full(cls, F: FieldSpec, n: int) -> "Subspace":
        return cls(F, n, Matrix.identity(F, n).rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> list[Vector]:
        return list(self.rows)

    @property
    def pivots(self) -> list[int]:
        return [next(j for j, v in enumerate(r) if v != 0) for r in self.rows]

    def complement_indices(self) -> list[int]:
        """Non-pivot coordinates; the unit vectors there span a complement."""
        piv = set(self.pivots)
        return [j for j in range(self.ambient_dim) if j not in piv]

    def _check(self, other: "Subspace"):
        if other.field != self.field or other.ambient_dim != self.ambient_dim:
            raise AmbientMismatch(f"{self.field}^{self.ambient_dim} vs {other.field}^{other.ambient_dim}")

    def reduce(self, v: Sequence[Raw]) -> Vector:
        """Remainder of ``v`` after clearing this subspace's pivot coordinates."""
        F = self.field
        v = list(v)
        for r, c in zip(self.rows, self.pivots):
            if v[c] != 0:
                k = v[c]
                v = [F.sub(a, F.mul(k, b)) for a, b in zip(v, r)]
        return tuple(v)

    def contains(self, v) -> bool:
        if isinstance(v, Subspace):
            self._check(v)
            return all(self.contains(r) for r in v.rows)
        v = tuple(self.field.normalize(x) for x in v)
        if len(v) != self.ambient_dim:
            raise AmbientMismatch(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        return all(x == 0 for x in self.reduce(v))

    __contains__ = contains

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.field, self.ambient_dim, self.rows + other.rows)

    def annihilator_rows(self) -> list[Vector]:
        """Rows of a constraint matrix whose kernel is exactly this subspace."""
        n = self.ambient_dim
        if not self.rows:
            return list(Matrix.identity(self.field, n).rows)
        return kernel(Matrix(self.field, self.rows)).basis

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        cons = self.annihilator_rows() + other.annihilator_rows()
        if not cons:
            return Subspace.full(self.field, self.ambient_dim)
        return kernel(Matrix(self.field, tuple(cons)))

    def image(self, M: Matrix) -> "Subspace":
        """Span of ``M`` applied to this subspace's basis."""
        return Subspace.span(self.field, M.nrows, [M.apply(r) for r in self.rows])

    def to_json(self):
        return [[self.field.raw_to_json(v) for v in r] for r in self.rows]

    def __repr__(self):
        return f"Subspace({self.field}^{self.ambient_dim}, rows={[list(r) for r in self.rows]})"


def kernel(M: Matrix) -> Subspace:
    F = M.field
    R, piv = _rref_rows(F, M.rows, M.ncols)
    free = [j for j in range(M.ncols) if j not in piv]
    vecs = []
    for f in free:
        x = [F.zero] * M.ncols
        x[f] = F.one
        for r, c in zip(R, piv):
            x[c] = F.neg(r[f])
        vecs.append(x)
    return Subspace.span(F, M.ncols, vecs)


def subspace_ops(kind: str, A: Subspace, B):
    if kind == "contains":
        return A.contains(B)
    if isinstance(B, Subspace):
        A._check(B)
    if kind == "sum":
        return A + B
    if kind == "intersect":
        return A.intersect(B)
    if kind == "equal":
        return A == B
    raise ValueError(f"unknown subspace operation {kind!r}")
