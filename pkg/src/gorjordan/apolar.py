"""The Artinian Gorenstein algebra A = R/Ann F of a dual generator F.

The algebra is modelled by a monomial basis of A together with the
partials ``b o F`` of the basis monomials. The basis is adapted to the
m-adic filtration: the basis monomials of degree >= i span m^i. Hence
m^i is a coordinate subspace, and the Loewy ideal (0:m^b) is the set of
elements whose partial has degree < b.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .dpoly import (DPPoly, RPoly, contract, contract_monomial, monomials,
                    monomials_upto, num_monomials)
from .errors import NotInSpan, PreconditionError
from .linalg import (Coordinatizer, PrimeField, Subspace, greedy_independent, kernel,
                     rank, sparse_pivots)


def _dual_support(F: DPPoly) -> list:
    """All exponents dividing some monomial of F, in ascending graded order."""
    seen = set()
    for e in F.terms:
        for d in product(*(range(k + 1) for k in e)):
            seen.add(d)
    n = len(F.vars)
    order = {m: i for i, m in enumerate(monomials_upto(n, F.degree))}
    return sorted(seen, key=order.__getitem__)


class ApolarAlgebra:
    """A = R/Ann F with an m-adically filtered monomial basis.

    Attributes:
        F: the dual generator.
        j: socle degree (the degree of F).
        basis: basis monomials of A, by ascending degree.
        degrees: degree of each basis monomial.
        hf: the Hilbert function (H_0, ..., H_j).
        mult: one matrix per variable; column k holds the coordinates of x_i * basis[k].
        ann: a basis of Ann F in R_{<= j+1}; with m^{j+2} it generates Ann F.
    """

    def __init__(self, F: DPPoly):
        if F.is_zero():
            raise PreconditionError("the dual generator must be nonzero")
        field = F.field
        j = F.degree
        if isinstance(field, PrimeField) and field.p <= 2 * j:
            raise PreconditionError(
                f"characteristic {field.p} too small for a generator of degree {j}")
        self.F = F
        self.field = field
        self.vars = F.vars
        self.nvars = len(F.vars)
        self.j = j
        self.dual_monos = _dual_support(F)
        self._dual_index = {m: i for i, m in enumerate(self.dual_monos)}
        s = len(self.dual_monos)

        # scan degree j first so that each kept monomial is independent modulo m^{d+1} o F
        scan = [m for d in range(j, -1, -1) for m in monomials(self.nvars, d)]
        scan_vecs = [self._vec(contract_monomial(m, F)) for m in scan]
        keep = greedy_independent(field, scan_vecs, s)
        chosen = sorted(keep, key=lambda k: (sum(scan[k]), k))
        self.basis = tuple(scan[k] for k in chosen)
        self.degrees = tuple(sum(b) for b in self.basis)
        self.dim = len(self.basis)
        self.hf = tuple(self.degrees.count(d) for d in range(j + 1))
        self._images = [scan_vecs[k] for k in chosen]
        self._coord = Coordinatizer(field, self._images, s)

        # every monomial up to degree j+1 in basis coordinates
        everything = monomials_upto(self.nvars, j + 1)
        ev = self._coord.coords_many([self._vec(contract_monomial(m, F)) for m in everything])
        self._mono_coords = dict(zip(everything, ev))
        pos = {b: k for k, b in enumerate(self.basis)}
        ann = []
        for m in everything:
            if m in pos:
                continue
            t = {m: field(1)}
            for k, c in enumerate(self._mono_coords[m]):
                if c != 0:
                    t[self.basis[k]] = field.norm(-c)
            ann.append(RPoly(field, self.vars, t))
        self.ann = tuple(ann)

        self.mult = tuple(self._mult_matrix(i) for i in range(self.nvars))

        # filtration caches, built eagerly so the object stays read-only afterwards
        n = self.dim
        self._mpow = []
        for i in range(j + 2):
            span = Subspace.span(field, [self._mono_coords[m] for m in everything
                                         if i <= sum(m) <= j], n)
            coordinate = Subspace.coordinate(field, n, [k for k, d in enumerate(self.degrees)
                                                        if d >= i])
            if span != coordinate:
                raise AssertionError("basis is not adapted to the m-adic filtration")
            self._mpow.append(coordinate)
        self._loewy = []
        for b in range(j + 2):
            cols = [c for c, m in enumerate(self.dual_monos) if sum(m) >= b]
            rows = [[img[c] for img in self._images] for c in cols]
            self._loewy.append(kernel(field, rows, n) if rows else Subspace.full(field, n))

    # -- conversions
    def _vec(self, terms: dict) -> list:
        v = [self.field(0)] * len(self.dual_monos)
        for e, c in terms.items():
            v[self._dual_index[e]] = c
        return v

    def coords(self, h: RPoly) -> list:
        """Coordinates of the class of h in A."""
        if h.vars != self.vars or h.field != self.field:
            raise PreconditionError("element over a different ring")
        return self._coord.coords(self._vec(contract(h, self.F).terms))

    def coords_many(self, hs: Sequence[RPoly]) -> list[list]:
        return self._coord.coords_many([self._vec(contract(h, self.F).terms) for h in hs])

    def dual_coords(self, G: DPPoly) -> list:
        """Coordinates of the class a with a o F = G; raises NotInSpan if G is not a partial."""
        if any(e not in self._dual_index for e in G.terms):
            raise NotInSpan("not a partial of the dual generator")
        return self._coord.coords(self._vec(G.terms))

    def element(self, vec: Sequence) -> RPoly:
        """The polynomial sum c_k b_k representing a coordinate vector."""
        return RPoly(self.field, self.vars, {b: c for b, c in zip(self.basis, vec) if c != 0})

    def partial(self, vec: Sequence) -> DPPoly:
        """The partial a o F of the element with the given coordinates."""
        t: dict = {}
        for c, img in zip(vec, self._images):
            if c == 0:
                continue
            for k, v in enumerate(img):
                if v != 0:
                    t[self.dual_monos[k]] = t.get(self.dual_monos[k], 0) + c * v
        return DPPoly(self.field, self.vars, t)

    def _image_terms(self, k: int) -> dict:
        return {self.dual_monos[c]: v for c, v in enumerate(self._images[k]) if v != 0}

    def _mult_matrix(self, i: int) -> list[list]:
        e = tuple(int(t == i) for t in range(self.nvars))
        return self._action_matrix({e: self.field(1)})

    def _action_matrix(self, terms: dict, graded: bool = False) -> list[list]:
        """Matrix of multiplication by sum c_a x^a; graded keeps only the degree-shifted block."""
        n = self.dim
        f = self.field
        cols = [[f(0)] * n for _ in range(n)]
        for a, ca in terms.items():
            shifted = []
            for k in range(n):
                img = {}
                for b, cb in self._image_terms(k).items():
                    if all(x <= y for x, y in zip(a, b)):
                        img[tuple(y - x for x, y in zip(a, b))] = cb
                shifted.append(self._vec(img))
            cs = self._coord.coords_many(shifted)
            da = sum(a)
            for k in range(n):
                target = self.degrees[k] + da
                for r, v in enumerate(cs[k]):
                    if v != 0 and (not graded or self.degrees[r] == target):
                        cols[k][r] = f.norm(cols[k][r] + ca * v)
        return [[cols[k][r] for k in range(n)] for r in range(n)]

    # -- filtrations
    def mpow(self, i: int) -> Subspace:
        """m^i as a subspace of A (coordinates)."""
        if i < 0:
            raise IndexError("negative power of m")
        return self._mpow[min(i, self.j + 1)]

    def loewy(self, b: int) -> Subspace:
        """The Loewy ideal (0 : m^b)."""
        if b < 0:
            raise IndexError("negative Loewy index")
        return self._loewy[min(b, self.j + 1)]

    def block(self, d: int) -> list[int]:
        return [k for k, deg in enumerate(self.degrees) if deg == d]

    def __repr__(self) -> str:
        return f"ApolarAlgebra(F={self.F}, H={self.hf})"


def build(F: DPPoly) -> ApolarAlgebra:
    return ApolarAlgebra(F)


def hilbert_function(A: ApolarAlgebra) -> tuple[int, ...]:
    return A.hf


def mpow(A: ApolarAlgebra, i: int) -> Subspace:
    return A.mpow(i)


def loewy(A: ApolarAlgebra, b: int) -> Subspace:
    return A.loewy(b)


def _check_in_m(ell: RPoly) -> None:
    if any(sum(e) == 0 for e in ell.terms):
        raise PreconditionError("the element must lie in the maximal ideal (no constant term)")


def element_matrix(A, ell: RPoly) -> list[list]:
    """Matrix of multiplication by ell on A, or on A* if given a GradedAlgebra."""
    _check_in_m(ell)
    if isinstance(A, GradedAlgebra):
        return A.algebra._action_matrix(ell.terms, graded=True)
    return A._action_matrix(ell.terms)


@dataclass(frozen=True)
class GradedAlgebra:
    """A* = gr_m(A), realised on the classes of the same filtered monomial basis.

    The degree-d piece A*_d has basis the basis monomials of degree d; its
    quotient R_d / (I*)_d is read off from coordinates modulo m^{d+1}.
    """

    algebra: ApolarAlgebra
    mult: tuple

    @property
    def hf(self) -> tuple[int, ...]:
        return self.algebra.hf

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.algebra.degrees

    def block(self, d: int) -> list[int]:
        return self.algebra.block(d)


def assoc_graded(A: ApolarAlgebra) -> GradedAlgebra:
    mult = []
    for i in range(A.nvars):
        e = tuple(int(t == i) for t in range(A.nvars))
        mult.append(A._action_matrix({e: A.field(1)}, graded=True))
    return GradedAlgebra(A, tuple(mult))


def in_initial_ideal(A: ApolarAlgebra, h: RPoly) -> bool:
    """Whether the homogeneous form h lies in I* = in(Ann F)."""
    if h.is_zero():
        return True
    d = h.degree
    if h.order != d:
        raise PreconditionError("initial-ideal membership is tested for forms")
    c = A.coords(h)
    return all(v == 0 for v, deg in zip(c, A.degrees) if deg <= d)


def graded_quotient_hf(gens: Sequence[RPoly], top: int) -> tuple[int, ...]:
    """H(R/J)_d for d <= top, where J is generated by the given forms."""
    if not gens:
        raise PreconditionError("need at least one generator")
    field, vs = gens[0].field, gens[0].vars
    n = len(vs)
    out = []
    for d in range(top + 1):
        cols = {m: i for i, m in enumerate(monomials(n, d))}
        rows = []
        for g in gens:
            if g.degree > d or g.is_zero():
                continue
            for m in monomials(n, d - g.degree):
                row = {}
                for e, c in g.terms.items():
                    row[cols[tuple(a + b for a, b in zip(e, m))]] = c
                rows.append(row)
        out.append(len(cols) - len(sparse_pivots(field, rows, len(cols))))
    return tuple(out)


@dataclass(frozen=True)
class MinimalGenerators:
    generators: tuple
    orders: tuple

    @property
    def mu(self) -> int:
        return len(self.generators)

    @property
    def nu(self) -> int:
        return min(self.orders) if self.orders else 0


def _local_columns(nvars: int, top: int) -> tuple[list, dict]:
    cols = monomials_upto(nvars, top)
    return cols, {m: i for i, m in enumerate(cols)}


def minimal_generators(A: ApolarAlgebra) -> MinimalGenerators:
    """A minimal generating set of Ann F read off from I / mI inside R/m^{j+2}.

    Generators are picked from the highest order down, so the recorded orders
    are the canonical order profile of a minimal generating set.
    """
    f = A.field
    top = A.j + 1
    cols, idx = _local_columns(A.nvars, top)
    ncol = len(cols)

    def dense(p: RPoly) -> list:
        v = [f(0)] * ncol
        for e, c in p.terms.items():
            if sum(e) <= top:
                v[idx[e]] = c
        return v

    # echelon form of K = I mod m^{j+2} with lowest-degree pivots
    from .linalg import rref
    K, piv = rref(f, [dense(p) for p in A.ann], ncol)
    korder = [sum(cols[p]) for p in piv]
    mK = []
    for row in K:
        p = RPoly(f, A.vars, {cols[c]: v for c, v in enumerate(row) if v != 0})
        for i in range(A.nvars):
            e = tuple(int(t == i) for t in range(A.nvars))
            mK.append(dense(p.mul_truncated(RPoly(f, A.vars, {e: 1}), top + 1)))
    by_order = sorted(range(len(K)), key=lambda k: -korder[k])
    vecs = mK + [K[k] for k in by_order]
    keep = greedy_independent(f, vecs, ncol)
    gens, orders = [], []
    for k in keep:
        if k < len(mK):
            continue
        r = by_order[k - len(mK)]
        gens.append(RPoly(f, A.vars, {cols[c]: v for c, v in enumerate(K[r]) if v != 0}))
        orders.append(korder[r])
    return MinimalGenerators(tuple(gens), tuple(orders))


def ideal_dimension_mod(gens: Sequence[RPoly], nvars: int, N: int) -> int:
    """dim of (gens) + m^N inside R/m^N, with gens reduced modulo m^N."""
    field = gens[0].field
    cols, idx = _local_columns(nvars, N - 1)
    rows = []
    for g in gens:
        g = g.truncate(N)
        if g.is_zero():
            continue
        for m in monomials_upto(nvars, N - 1 - g.order):
            row = {}
            for e, c in g.terms.items():
                s = tuple(a + b for a, b in zip(e, m))
                if sum(s) < N:
                    row[idx[s]] = c
            rows.append(row)
    return len(sparse_pivots(field, rows, len(cols)))


def hf_ideal_square(A: ApolarAlgebra) -> tuple[int, ...]:
    """Local Hilbert function of R/I^2, computed inside R/m^{2j+3}.

    Columns are ordered by ascending degree, so each pivot of the reduced
    echelon form is the lowest-degree monomial of a row; the pivots of
    degree d count dim (I^2 ∩ m^d + m^{d+1}) / m^{d+1}.
    """
    gens = minimal_generators(A).generators
    N = 2 * A.j + 3
    nv = A.nvars
    cols, idx = _local_columns(nv, N - 1)
    rows = []
    for a in range(len(gens)):
        for b in range(a, len(gens)):
            g = gens[a].mul_truncated(gens[b], N)
            if g.is_zero():
                continue
            for m in monomials_upto(nv, N - 1 - g.order):
                row = {}
                for e, c in g.terms.items():
                    s = tuple(x + y for x, y in zip(e, m))
                    if sum(s) < N:
                        row[idx[s]] = c
                rows.append(row)
    piv = sparse_pivots(A.field, rows, len(cols))
    count = [0] * N
    for p in piv:
        count[sum(cols[p])] += 1
    h = [num_monomials(nv, d) - count[d] for d in range(N)]
    while h and h[-1] == 0:
        h.pop()
    return tuple(h)


def order_of_partial(A: ApolarAlgebra, g) -> int | None:
    """Largest o with g o F in m^o o F (g in R), or the order of the partial g itself.

    Returns None when the partial is zero.
    """
    v = A.dual_coords(g) if isinstance(g, DPPoly) else A.coords(g)
    if all(x == 0 for x in v):
        return None
    return max(o for o in range(A.j + 1) if A.mpow(o).contains(v))


def exotic_lift(f_st: DPPoly, phi: RPoly, zvar: int) -> DPPoly:
    """f_st + sum_k Z^[k] * (phi^k o P), with P the part of f_st free of Z.

    Z is the variable with index ``zvar`` and the product is the
    divided-power product. By construction (z - phi) kills P + f_ex.
    """
    if any(sum(e) < 2 for e in phi.terms):
        raise PreconditionError("phi must have order at least 2")
    if f_st.is_zero():
        return f_st
    if f_st.homogeneous_part(f_st.degree).involves(zvar):
        raise PreconditionError("the lifting variable occurs in the top degree of f_st")
    base = DPPoly(f_st.field, f_st.vars, {e: c for e, c in f_st.terms.items() if e[zvar] == 0})
    out = f_st
    cur = base
    k = 1
    while True:
        cur = contract(phi, cur)
        if cur.is_zero():
            return out
        e = [0] * len(f_st.vars)
        e[zvar] = k
        out = out + DPPoly.monomial(f_st.field, f_st.vars, tuple(e)) * cur
        k += 1


def dual_span_dimension(F: DPPoly) -> int:
    """dim R o F from the span of all contractions, independent of the basis choice."""
    n = len(F.vars)
    sup = _dual_support(F)
    index = {m: i for i, m in enumerate(sup)}
    rows = []
    for m in monomials_upto(n, F.degree):
        t = contract_monomial(m, F)
        if t:
            rows.append({index[e]: c for e, c in t.items()})
    return len(sparse_pivots(F.field, rows, len(sup)))


def top_degree_algebra(A: ApolarAlgebra) -> ApolarAlgebra:
    """The graded algebra R / Ann F_j of the top-degree form."""
    return ApolarAlgebra(A.F.homogeneous_part(A.j))


def truncated_rank(A: ApolarAlgebra, vecs: Sequence[Sequence]) -> int:
    return rank(A.field, vecs, A.dim)
