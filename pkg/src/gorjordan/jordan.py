"""Jordan types of multiplication maps on A, on A* and on the subquotients Q(a).

A Jordan type is read off the ranks of powers of a nilpotent matrix: the
number of parts >= k equals rank(M^{k-1}) - rank(M^k).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .apolar import ApolarAlgebra, GradedAlgebra, assoc_graded, element_matrix, _check_in_m
from .dpoly import RPoly, linear_form
from .errors import InputError, PreconditionError
from .linalg import (Coordinatizer, Subspace, greedy_independent, kernel, mat_mul, mat_vec, power_ranks,
                     random_vector)
from .partitions import (GREATER, EQUAL, INCOMPARABLE, Partition, concatenate, conjugate_of_sequence,
                         contiguous, dominance)
from .sdecomp import SymmetricDecomposition, _intersections, c_subspace, q_dimensions


def parts_from_ranks(ranks: Sequence[int]) -> Partition:
    """Partition whose count of parts >= k is ranks[k-1] - ranks[k]."""
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))] + [0]
    parts = []
    for k in range(1, len(at_least)):
        parts.extend([k] * (at_least[k - 1] - at_least[k]))
    return Partition(parts)


def jordan_type_of_matrix(fld, M: Sequence[Sequence]) -> Partition:
    ranks = power_ranks(fld, M)
    if ranks[-1] != 0:
        raise PreconditionError("matrix is not nilpotent")
    return parts_from_ranks(ranks)


class QuotientModule:
    """Q(a) = C(a)/C(a+1) realised inside A* with the induced multiplication.

    C(a)_i is the image in A*_i of m^i ∩ (0:m^{j+1-a-i}); since the basis of A
    is filtered, that image is the block-i projection of the subspace.
    """

    def __init__(self, A: ApolarAlgebra, a: int):
        if a < 0:
            raise InputError("a must be nonnegative")
        self.algebra, self.a = A, a
        self.field = A.field
        self.graded = assoc_graded(A)
        lower = self._c_total(a + 1)
        upper = self._c_total(a)
        picks = greedy_independent(self.field, lower.basis + upper.basis, A.dim)
        self.lower_dim = lower.dim
        self.basis = [upper.basis[k - lower.dim] for k in picks if k >= lower.dim]
        if not self.basis:
            raise InputError(f"Q({a}) is zero")
        # each vector is supported in one degree block
        self.degrees = tuple(A.degrees[next(k for k, v in enumerate(b) if v != 0)]
                             for b in self.basis)
        self._coord = Coordinatizer(self.field, list(lower.basis) + self.basis, A.dim)

    def _c_total(self, a: int) -> Subspace:
        A = self.algebra
        vecs = []
        for i in range(A.j + 1):
            blk = set(A.block(i))
            for v in c_subspace(A, a, i).basis:
                vecs.append([x if k in blk else self.field(0) for k, x in enumerate(v)])
        return Subspace.span(self.field, vecs, A.dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def hf(self) -> tuple[int, ...]:
        out = [0] * (self.algebra.j + 1)
        for d in self.degrees:
            out[d] += 1
        return tuple(out)

    def matrix(self, ell: RPoly) -> list[list]:
        G = element_matrix(self.graded, ell)
        images = [mat_vec(self.field, G, b) for b in self.basis]
        cs = self._coord.coords_many(images)
        n = self.dim
        return [[cs[k][self.lower_dim + r] for k in range(n)] for r in range(n)]


def module_matrix(module, ell: RPoly) -> list[list]:
    if isinstance(module, QuotientModule):
        _check_in_m(ell)
        return module.matrix(ell)
    return element_matrix(module, ell)


def _module_field(module):
    if isinstance(module, GradedAlgebra):
        return module.algebra.field
    return module.field


def jordan_type(module, ell: RPoly) -> Partition:
    """Jordan type of multiplication by ell on A, A* (GradedAlgebra) or a QuotientModule."""
    return jordan_type_of_matrix(_module_field(module), module_matrix(module, ell))


def jordan_type_graded(A: ApolarAlgebra, ell: RPoly) -> Partition:
    return jordan_type(assoc_graded(A), ell)


def jordan_type_q(A: ApolarAlgebra, a: int, ell: RPoly) -> Partition:
    return jordan_type(QuotientModule(A, a), ell)


def q_concatenation(A: ApolarAlgebra, ell: RPoly, D: Optional[SymmetricDecomposition] = None) -> Partition:
    """Union over nonzero rows a of the Jordan types on Q(a)."""
    D = D or q_dimensions(A)
    return concatenate(jordan_type_q(A, a, ell) for a, _ in D.nonzero_rows())


def dominance_max(parts: Sequence[Partition]) -> tuple[Partition, bool]:
    """Dominance-maximum of the list, and whether the samples disagree.

    Disagreement means some pair is incomparable; then the first maximal
    element in sample order is returned.
    """
    if not parts:
        raise InputError("no samples")
    flag = any(dominance(p, q) == INCOMPARABLE for k, p in enumerate(parts) for q in parts[k + 1:])
    for p in parts:
        if all(dominance(p, q) in (GREATER, EQUAL) for q in parts):
            return p, flag
    maximal = [p for p in parts
               if not any(dominance(q, p) == GREATER for q in parts)]
    return maximal[0], True


@dataclass(frozen=True)
class GenericResult:
    partition: Partition
    disagreement: bool
    samples: tuple[Partition, ...]
    elements: tuple[str, ...]


def random_element(A: ApolarAlgebra, rng, mode: str = "linear", pool=None) -> RPoly:
    if mode == "linear":
        coeffs = random_vector(A.field, A.nvars, rng, pool)
        return linear_form(A.field, A.vars, coeffs)
    if mode == "full":
        vec = random_vector(A.field, A.dim, rng, pool)
        for k, d in enumerate(A.degrees):
            if d == 0:
                vec[k] = A.field(0)
        return A.element(vec)
    raise InputError(f"unknown sampling mode {mode!r}")


def generic_jordan_type(module, samples: int = 5, seed: int = 0, mode: str = "linear",
                        pool: Optional[Sequence[int]] = None) -> GenericResult:
    """Jordan type at a generic element, estimated from seeded random samples.

    Sample t uses numpy.random.default_rng([seed, t]), so results do not depend
    on how trials are scheduled.
    """
    if samples < 1:
        raise InputError("need at least one sample")
    A = module.algebra if isinstance(module, (GradedAlgebra, QuotientModule)) else module
    parts, elems = [], []
    for t in range(samples):
        rng = np.random.default_rng([seed, t])
        ell = random_element(A, rng, mode, pool)
        parts.append(jordan_type(module, ell))
        elems.append(str(ell))
    best, flag = dominance_max(parts)
    return GenericResult(best, flag, tuple(parts), tuple(elems))


@dataclass(frozen=True)
class SLVerdict:
    strong_lefschetz: bool
    partition: Partition
    expected: Partition

    @property
    def kind(self) -> str:
        return "StrongLefschetz" if self.strong_lefschetz else "Not"


def sl_check(A, ell: Optional[RPoly] = None, **generic) -> SLVerdict:
    """Strong Lefschetz iff the Jordan type equals the conjugate of H."""
    p = jordan_type(A, ell) if ell is not None else generic_jordan_type(A, **generic).partition
    expected = conjugate_of_sequence(A.hf)
    return SLVerdict(p == expected, p, expected)


def decomposition_partitions(D: SymmetricDecomposition) -> tuple[Partition, Partition]:
    rows = [r for _, r in D.nonzero_rows()]
    return (concatenate(conjugate_of_sequence(r) for r in rows),
            concatenate(contiguous(r) for r in rows))


@dataclass(frozen=True)
class JordanString:
    generator: tuple
    length: int
    beads: tuple[tuple, ...]


def jordan_strings(module, ell: RPoly) -> list[JordanString]:
    """A Jordan basis: generators of strings of length k span a complement of
    ker M^{k-1} + M(ker M^{k+1}) inside ker M^k."""
    fld = _module_field(module)
    M = module_matrix(module, ell)
    n = len(M)
    jordan_type_of_matrix(fld, M)
    kernels = [Subspace.zero(fld, n)]
    P = [[fld(int(r == c)) for c in range(n)] for r in range(n)]
    while kernels[-1].dim < n:
        P = mat_mul(fld, M, P)
        kernels.append(kernel(fld, P, n))
    top = len(kernels) - 1
    kernels.append(Subspace.full(fld, n))
    out = []
    for k in range(top, 0, -1):
        image = Subspace.span(fld, [mat_vec(fld, M, v) for v in kernels[k + 1].basis], n)
        U = kernels[k - 1] + image
        for v in kernels[k].basis:
            if not U.contains(v):
                beads = [tuple(v)]
                for _ in range(k - 1):
                    beads.append(tuple(mat_vec(fld, M, beads[-1])))
                out.append(JordanString(tuple(v), k, tuple(beads)))
                U = U + Subspace.span(fld, [v], n)
    return out


def is_compatible_basis(A: ApolarAlgebra, basis: Sequence[Sequence]) -> bool:
    """Whether, for every (a, i), the basis vectors lying in m^i ∩ (0:m^{j+1-a-i})
    but outside the next filtration pieces generate Q(a)_i."""
    fld = A.field
    if len(basis) != A.dim or Subspace.span(fld, basis, A.dim).dim != A.dim:
        raise InputError("the supplied vectors are not a basis of A")
    inter = _intersections(A)
    j = A.j
    for a in range(j + 1):
        for i in range(j - a + 1):
            b = j + 1 - a - i
            num = inter(i, b)
            den = inter(i, b - 1) + inter(i + 1, b)
            want = num.dim - den.dim
            if want == 0:
                continue
            chosen = [v for v in basis if num.contains(v) and not den.contains(v)]
            got = (den + Subspace.span(fld, chosen, A.dim)).dim - den.dim
            if got != want:
                return False
    return True


@dataclass
class JordanReport:
    element: str
    partition: Partition
    ranks: tuple[int, ...]
    sl: bool
    comparisons: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"element": self.element, "partition": list(self.partition),
                "ranks": list(self.ranks), "sl": self.sl,
                "comparisons": {k: v for k, v in self.comparisons.items()}}


def jordan_report(A: ApolarAlgebra, ell: RPoly, also_graded: bool = False,
                  also_q: bool = False) -> JordanReport:
    """Jordan type at ell with its dominance comparisons against the standard bounds."""
    M = element_matrix(A, ell)
    ranks = power_ranks(A.field, M)
    if ranks[-1] != 0:
        raise PreconditionError("element is not nilpotent")
    p = parts_from_ranks(ranks)
    hv = conjugate_of_sequence(A.hf)
    D = q_dimensions(A)
    pd, pcd = decomposition_partitions(D)
    comps = {
        "H_conjugate": [list(hv), dominance(p, hv)],
        "P_c(H)": [list(contiguous(A.hf)), dominance(p, contiguous(A.hf))],
        "P(D)": [list(pd), dominance(p, pd)],
        "P_c(D)": [list(pcd), dominance(p, pcd)],
    }
    if also_graded:
        g = jordan_type_graded(A, ell)
        comps["graded"] = [list(g), dominance(p, g)]
    if also_q:
        qc = q_concatenation(A, ell, D)
        comps["Q_concatenation"] = [list(qc), dominance(p, qc)]
        comps["Q_rows"] = {str(a): list(jordan_type_q(A, a, ell)) for a, _ in D.nonzero_rows()}
    return JordanReport(str(ell), p, tuple(ranks), p == hv, comps)
