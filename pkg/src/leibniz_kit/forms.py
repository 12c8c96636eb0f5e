"""The bilinear form an extraspecial algebra induces on ``L / Z(L)``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import Algebra, center, is_extraspecial
from .errors import BadGenerator, DimensionMismatch, NotExtraspecial
from .field import FieldSpec, Raw
from .linalg import Matrix, Vector


def central_coefficient(F: FieldSpec, c: Sequence[Raw], v: Sequence[Raw]) -> Raw:
    """``s`` with ``v = s * c``; raises if ``v`` is not a multiple of ``c``."""
    k = next(i for i, x in enumerate(c) if x != 0)
    s = F.mul(v[k], F.inv(c[k]))
    if any(F.mul(s, ci) != vi for ci, vi in zip(c, v)):
        raise BadGenerator(f"{list(v)} is not a multiple of the generator {list(c)}")
    return s


@dataclass(frozen=True)
class BilinearForm:
    field: FieldSpec
    gram: Matrix
    generator: Vector
    # ambient coordinates whose unit vectors give the quotient basis
    quotient_indices: tuple

    @property
    def dim(self) -> int:
        return self.gram.nrows

    def __call__(self, u: Sequence[Raw], v: Sequence[Raw]) -> Raw:
        F = self.field
        return sum_raw(F, (F.mul(F.mul(u[i], self.gram.rows[i][j]), v[j])
                           for i in range(self.dim) for j in range(self.dim)))

    def to_json(self) -> dict:
        F = self.field
        return {
            "gram": self.gram.to_json(),
            "generator": [F.raw_to_json(v) for v in self.generator],
            "quotient_basis": [i + 1 for i in self.quotient_indices],
        }


def sum_raw(F: FieldSpec, vals) -> Raw:
    s = F.zero
    for v in vals:
        s = F.add(s, v)
    return s


def default_generator(A: Algebra) -> Vector:
    Z = center(A)
    if Z.dim == 0:
        raise NotExtraspecial("center is trivial")
    return Z.rows[0]


def form_value(A: Algebra, c: Sequence[Raw], x: Sequence[Raw], y: Sequence[Raw]) -> Raw:
    """Coefficient of ``c`` in ``[x, y]`` for arbitrary representatives ``x, y``."""
    return central_coefficient(A.field, c, A.bracket_raw(x, y))


def induced_form(A: Algebra, c: Optional[Sequence] = None) -> BilinearForm:
    if not is_extraspecial(A):
        raise NotExtraspecial("[L,L] must equal the center and be 1-dimensional")
    F = A.field
    Z = center(A)
    c = default_generator(A) if c is None else tuple(F.normalize(x) for x in c)
    if len(c) != A.dim or all(x == 0 for x in c) or not Z.contains(c):
        raise BadGenerator("generator must be a nonzero element of the center")
    idx = tuple(Z.complement_indices())
    gram = [[form_value(A, c, A.basis_vector(i), A.basis_vector(j)) for j in idx] for i in idx]
    return BilinearForm(F, Matrix(F, tuple(tuple(r) for r in gram)), c, idx)


def preserves_form(g: Matrix, phi: BilinearForm) -> bool:
    """``g^T @ gram @ g == gram``."""
    if g.nrows != phi.dim or g.ncols != phi.dim:
        raise DimensionMismatch(f"{g.nrows}x{g.ncols} map on a {phi.dim}-dimensional form")
    return g.transpose() @ phi.gram @ g == phi.gram


def similitude_factor(g: Matrix, phi: BilinearForm) -> Optional[Raw]:
    """``k`` with ``g^T @ gram @ g == k * gram`` if one exists, else ``None``.

    An automorphism ``f`` of the algebra scales the central generator,
    ``f(c) = k c``, and its induced map on ``L/Z`` multiplies the form by ``k``.
    """
    if g.nrows != phi.dim or g.ncols != phi.dim:
        raise DimensionMismatch(f"{g.nrows}x{g.ncols} map on a {phi.dim}-dimensional form")
    lhs = g.transpose() @ phi.gram @ g
    F = phi.field
    nz = [(i, j) for i in range(phi.dim) for j in range(phi.dim) if phi.gram.rows[i][j] != 0]
    if not nz:
        return F.one if lhs == phi.gram else None
    i, j = nz[0]
    k = F.mul(lhs.rows[i][j], F.inv(phi.gram.rows[i][j]))
    return k if lhs == phi.gram.scale(k) else None
