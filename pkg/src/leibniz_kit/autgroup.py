"""Brute-force automorphism groups over GF(p) and subgroup utilities.

The scan is vectorized with numpy: candidate matrices are decoded from a
range of integers in batches and tested against every basis-pair
endomorphism condition at once.  Columns of basis vectors that are
expressible through brackets of the remaining ("free") basis vectors are
not enumerated; an endomorphism must send ``[b_i, b_j]`` to
``[f(b_i), f(b_j)]``, so those columns are computed instead.
"""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .algebra import Algebra
from .errors import GuardExceeded, InfiniteField, NotInvariant, NotSubset
from .linalg import Matrix, Subspace, _rref_rows
from .morphisms import LinearMap, induced_quotient_map

DEFAULT_GUARD = 10**8
BATCH = 1 << 16


def candidate_guard() -> int:
    return int(os.environ.get("LEIBNIZ_KIT_GUARD", DEFAULT_GUARD))


@dataclass(frozen=True)
class AutSet:
    """Deduplicated maps in lexicographic order of their row-major entries."""

    algebra: Algebra
    elements: tuple
    _keys: frozenset = field(default=frozenset(), repr=False, compare=False)

    def __post_init__(self):
        uniq = {f.sort_key(): f for f in self.elements}
        ordered = tuple(uniq[k] for k in sorted(uniq))
        object.__setattr__(self, "elements", ordered)
        object.__setattr__(self, "_keys", frozenset(uniq))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, f: LinearMap) -> bool:
        return f.sort_key() in self._keys

    def keys(self) -> frozenset:
        return self._keys

    def subset(self, pred) -> "AutSet":
        return AutSet(self.algebra, tuple(f for f in self.elements if pred(f)))

    def without(self, f: LinearMap) -> "AutSet":
        return self.subset(lambda g: g.sort_key() != f.sort_key())

    def to_array(self) -> np.ndarray:
        """``(N, n, n)`` integer array; prime fields only."""
        n = self.algebra.dim
        if not self.elements:
            return np.zeros((0, n, n), dtype=np.int64)
        return np.array([f.matrix.rows for f in self.elements], dtype=np.int64)


@dataclass
class ScanStats:
    candidates: int
    free_columns: list
    forced_columns: list
    pruned: bool
    jobs: int
    seconds: float = 0.0


# -- pruning plan ----------------------------------------------------------

def _bracket_span_rows(A: Algebra, free: list[int]):
    return [A.constants[i][j] for i in free for j in free]


def _express(A: Algebra, free: list[int], k: int) -> Optional[dict]:
    """Coefficients ``{(i, j): s}`` with ``b_k = sum s [b_i, b_j]`` over free i, j, or None."""
    F, n = A.field, A.dim
    pairs = [(i, j) for i in free for j in free]
    if not pairs:
        return None
    # solve sum_s x_s * c[pair_s] = e_k: augmented system with unknowns per pair
    rows = []
    for t in range(n):
        row = [A.constants[i][j][t] for i, j in pairs]
        row.append(F.one if t == k else F.zero)
        rows.append(row)
    R, piv = _rref_rows(F, rows, len(pairs) + 1)
    if len(pairs) in piv:
        return None
    sol = {}
    for r, c in zip(R, piv):
        if r[-1] != 0:
            sol[pairs[c]] = r[-1]
    return sol


def pruning_plan(A: Algebra) -> tuple[list[int], dict]:
    """Greedily move basis indices from free to forced while they stay expressible."""
    free = list(range(A.dim))
    forced: dict = {}
    for k in reversed(range(A.dim)):
        trial = [i for i in free if i != k]
        exprs = {}
        for t in list(forced) + [k]:
            e = _express(A, trial, t)
            if e is None:
                break
            exprs[t] = e
        else:
            free, forced = trial, exprs
    return free, forced


# -- vectorized scan -------------------------------------------------------

def _decode(start: int, stop: int, p: int, n: int, free: list[int]) -> np.ndarray:
    """Candidates ``start..stop-1`` as free-column arrays ``(B, n, m)``.

    Most significant digits belong to the first free column so that a
    contiguous index range fixes a prefix of that column.
    """
    m = len(free)
    idx = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((len(idx), n * m), dtype=np.int64)
    for d in range(n * m - 1, -1, -1):
        digits[:, d] = idx % p
        idx //= p
    return digits.reshape(len(digits), m, n).transpose(0, 2, 1)


def _det_mod(M: np.ndarray, p: int) -> np.ndarray:
    n = M.shape[1]
    total = np.zeros(M.shape[0], dtype=np.int64)
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = np.ones(M.shape[0], dtype=np.int64)
        for col, row in enumerate(perm):
            term = term * M[:, row, col] % p
        total = (total + (-term if inv % 2 else term)) % p
    return total


def _scan_range(args) -> list:
    start, stop, p, C, free, forced = args
    n = C.shape[0]
    found = []
    for lo in range(start, stop, BATCH):
        hi = min(lo + BATCH, stop)
        X = _decode(lo, hi, p, n, free)
        M = np.zeros((len(X), n, n), dtype=np.int64)
        for s, j in enumerate(free):
            M[:, :, j] = X[:, :, s]
        for k, expr in forced.items():
            col = np.zeros((len(X), n), dtype=np.int64)
            for (i, j), coef in expr.items():
                br = np.einsum("Ba,Bb,abk->Bk", M[:, :, i], M[:, :, j], C) % p
                col = (col + coef * br) % p
            M[:, :, k] = col
        lhs = np.einsum("Bkl,ijl->Bijk", M, C) % p
        rhs = np.einsum("Bai,Bbj,abk->Bijk", M, M, C) % p
        ok = np.all((lhs == rhs).reshape(len(X), -1), axis=1)
        if not ok.any():
            continue
        cand = M[ok]
        cand = cand[_det_mod(cand, p) != 0]
        found.extend(tuple(tuple(int(v) for v in r) for r in m) for m in cand)
    return found


def scan_automorphisms(A: Algebra, prune: bool = True, jobs: int = 1,
                       guard: Optional[int] = None) -> tuple[AutSet, ScanStats]:
    F = A.field
    if not F.is_finite:
        raise InfiniteField("automorphism enumeration needs a finite field")
    p, n = F.p, A.dim
    if prune:
        free, forced = pruning_plan(A)
    else:
        free, forced = list(range(n)), {}
    total = p ** (n * len(free))
    guard = candidate_guard() if guard is None else guard
    if total > guard:
        raise GuardExceeded(f"{total} candidates exceed the guard of {guard}")
    C = np.array(A.constants, dtype=np.int64)
    forced_int = {k: {ij: int(v) for ij, v in e.items()} for k, e in forced.items()}

    # partition by the value of the first free column
    block = total // (p ** n) if free else 1
    ranges = [(s, min(s + block, total)) for s in range(0, total, block)] if total else []
    work = [(s, e, p, C, free, forced_int) for s, e in ranges]
    t0 = time.perf_counter()
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_scan_range, work))
    else:
        parts = [_scan_range(w) for w in work]
    elapsed = time.perf_counter() - t0
    maps = [LinearMap(A, Matrix(F, rows)) for part in parts for rows in part]
    stats = ScanStats(total, [i + 1 for i in free], sorted(k + 1 for k in forced), prune, jobs, elapsed)
    return AutSet(A, tuple(maps)), stats


def enumerate_automorphisms(A: Algebra, prune: bool = True, jobs: int = 1,
                            guard: Optional[int] = None) -> AutSet:
    return scan_automorphisms(A, prune=prune, jobs=jobs, guard=guard)[0]


# -- group-level checks ----------------------------------------------------

def _encode(arr: np.ndarray, p: int) -> np.ndarray:
    flat = arr.reshape(arr.shape[0], -1)
    weights = p ** np.arange(flat.shape[1] - 1, -1, -1, dtype=np.int64)
    return flat @ weights


def _products_closed(S: AutSet, T: AutSet, target: AutSet, conjugate: bool = False) -> bool:
    """Every ``s @ t`` (or ``s @ t @ s^-1``) for s in S, t in T lies in target."""
    F = S.algebra.field
    if F.is_finite and F.p ** (S.algebra.dim ** 2) < 2**62:
        p = F.p
        keys = np.sort(_encode(target.to_array(), p))
        Tarr = T.to_array()
        for s in S:
            Sm = np.array(s.matrix.rows, dtype=np.int64)
            prod = np.einsum("ij,Bjk->Bik", Sm, Tarr) % p
            if conjugate:
                Sinv = np.array(s.matrix.inverse().rows, dtype=np.int64)
                prod = np.einsum("Bij,jk->Bik", prod, Sinv) % p
            enc = _encode(prod, p)
            pos = np.searchsorted(keys, enc)
            pos[pos == len(keys)] = 0
            if not np.all(keys[pos] == enc):
                return False
        return True
    for s in S:
        sinv = s.inverse() if conjugate else None
        for t in T:
            g = s @ t @ sinv if conjugate else s @ t
            if g not in target:
                return False
    return True


def verify_group(S: AutSet) -> Optional[str]:
    """``None`` if ``S`` is a group, else the first violated axiom."""
    if LinearMap.identity(S.algebra) not in S:
        return "identity"
    if not _products_closed(S, S, S):
        return "closure"
    for f in S:
        if f.inverse() not in S:
            return "inverse"
    return None


def centralizer_of_quotient(S: AutSet, Z: Subspace) -> AutSet:
    """Elements acting trivially on ``L / Z``."""
    if Z.dim == S.algebra.dim:
        for f in S:
            if not Z.contains(Z.image(f.matrix)):
                raise NotInvariant("map does not preserve Z")
        return S
    ident = Matrix.identity(Z.field, S.algebra.dim - Z.dim)
    return S.subset(lambda f: induced_quotient_map(f, Z) == ident)


def centralizer_of(S: AutSet, B: Subspace) -> AutSet:
    """Elements fixing ``B`` pointwise."""
    return S.subset(lambda f: all(f(v) == v for v in B.rows))


def is_normal_subset(S: AutSet, N: AutSet) -> bool:
    if not N.keys() <= S.keys():
        raise NotSubset("N is not contained in S")
    return _products_closed(S, N, N, conjugate=True)


def quotient_blocks(S: AutSet, Z: Subspace) -> set:
    """Distinct induced maps on ``L / Z``."""
    return {induced_quotient_map(f, Z) for f in S}
