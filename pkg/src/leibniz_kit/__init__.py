"""Exact computations with finite-dimensional Leibniz algebras."""

from .algebra import (
    Algebra,
    Element,
    SeriesChain,
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
from .autgroup import (
    AutSet,
    centralizer_of,
    centralizer_of_quotient,
    enumerate_automorphisms,
    is_normal_subset,
    verify_group,
)
from .field import GF, QQ, FieldSpec, Scalar
from .forms import BilinearForm, induced_form, preserves_form
from .linalg import Matrix, Subspace, det, kernel, rref
from .morphisms import LinearMap, induced_quotient_map, invariance_report, is_automorphism, is_endomorphism

__all__ = [
    "Algebra", "AutSet", "BilinearForm", "Element", "FieldSpec", "GF", "LinearMap", "Matrix", "QQ",
    "Scalar", "SeriesChain", "Subspace", "annihilator", "build_lei4", "center", "centers",
    "centralizer_of", "centralizer_of_quotient", "check_left_leibniz", "derived_ideal", "det",
    "enumerate_automorphisms", "induced_form", "induced_quotient_map", "invariance_report",
    "is_automorphism", "is_endomorphism", "is_extraspecial", "is_ideal", "is_normal_subset",
    "is_subalgebra", "kernel", "leibniz_kernel", "lower_central_series", "nilpotency_class",
    "preserves_form", "rref", "upper_central_series", "verify_group",
]
