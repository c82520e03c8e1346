from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from gorjordan.errors import InputError, NotInSpan
from gorjordan.linalg import (GF, QQ, Subspace, kernel, parse_field, random_vector, rank, rref,
                              solve)

F5 = GF(5)

small_ints = st.integers(-4, 4)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=1, max_size=max_rows)
        .map(lambda rows: (rows, c)))


def test_rref_identity_and_zero():
    eye = [[QQ(int(r == c)) for c in range(3)] for r in range(3)]
    red, piv = rref(QQ, eye, 3)
    assert piv == [0, 1, 2]
    assert Subspace.span(QQ, eye, 3) == Subspace.full(QQ, 3)
    red, piv = rref(QQ, [[0] * 4, [0] * 4], 4)
    assert red == [] and piv == []


def test_rref_dependent_rows():
    red, piv = rref(QQ, [[1, 2], [2, 4]], 2)
    assert red == [[1, 2]] and piv == [0]


def test_sum_examples():
    e1 = Subspace.span(QQ, [[1, 0, 0]], 3)
    e2 = Subspace.span(QQ, [[0, 1, 0]], 3)
    assert (e1 + Subspace.zero(QQ, 3)) == e1
    assert (e1 + e2).dim == 2
    u = Subspace.span(QQ, [[1, 1, 0]], 3) + Subspace.span(QQ, [[1, -1, 0]], 3)
    assert u == Subspace.span(QQ, [[1, 0, 0], [0, 1, 0]], 3)


def test_intersect_examples():
    e1 = Subspace.span(QQ, [[1, 0, 0]], 3)
    e2 = Subspace.span(QQ, [[0, 1, 0]], 3)
    assert e1.intersect(e1) == e1
    assert e1.intersect(e2).dim == 0
    plane = Subspace.full(QQ, 2)
    diag = Subspace.span(QQ, [[1, 1]], 2)
    assert plane.intersect(diag) == diag


def test_kernel_and_quotient():
    assert kernel(QQ, [[1, 0], [0, 1]], 2).dim == 0
    assert kernel(QQ, [[1, 1], [1, 1]], 2) == Subspace.span(QQ, [[1, -1]], 2)
    u = Subspace.span(QQ, [[1, 2, 3]], 3)
    assert u.quotient_dim(u) == 0


def test_solve():
    x = solve(QQ, [[1, 1], [1, -1]], 2, [3, 1])
    assert x == [2, 1]
    with pytest.raises(NotInSpan):
        solve(QQ, [[1, 1], [1, 1]], 2, [0, 1])


def test_random_vector_determinism():
    a = random_vector(F5, 6, np.random.default_rng([3, 1]))
    b = random_vector(F5, 6, np.random.default_rng([3, 1]))
    assert a == b
    assert random_vector(F5, 0, np.random.default_rng(0)) == []
    with pytest.raises(InputError):
        random_vector(QQ, 2, np.random.default_rng(0))


def test_random_vector_uniform_mod5():
    rng = np.random.default_rng(11)
    draws = [random_vector(F5, 1, rng)[0] for _ in range(10000)]
    counts = np.bincount(draws, minlength=5)
    sigma = (10000 * 0.2 * 0.8) ** 0.5
    assert all(abs(c - 2000) < 5 * sigma for c in counts)


def test_parse_field():
    assert parse_field("q") is QQ
    assert parse_field("fp:7").p == 7
    with pytest.raises(InputError):
        parse_field("fp:8")
    with pytest.raises(InputError):
        parse_field("reals")


@settings(max_examples=80, deadline=None)
@given(matrices(6, 6))
def test_rank_and_rref_match_sympy(data):
    rows, ncols = data
    M = sympy.Matrix(rows)
    red, piv = rref(QQ, rows, ncols)
    want, wpiv = M.rref()
    assert piv == list(wpiv)
    assert [[Fraction(int(x.p), int(x.q)) for x in want.row(i)] for i in range(len(piv))] == red
    assert rank(QQ, rows, ncols) == M.rank()


@settings(max_examples=60, deadline=None)
@given(matrices(6, 6))
def test_rank_mod_p_matches_sympy(data):
    rows, ncols = data
    from sympy.polys.matrices import DomainMatrix
    dm = DomainMatrix([[sympy.GF(5)(x) for x in r] for r in rows], (len(rows), ncols), sympy.GF(5))
    assert rank(F5, rows, ncols) == dm.rank()


@settings(max_examples=60, deadline=None)
@given(matrices(4, 5), matrices(4, 5))
def test_intersection_dimension_formula(a, b):
    n = max(a[1], b[1])
    pad = lambda rows, c: [r + [0] * (n - c) for r in rows]
    U = Subspace.span(QQ, pad(*a), n)
    W = Subspace.span(QQ, pad(*b), n)
    S, I = U + W, U.intersect(W)
    assert S.dim + I.dim == U.dim + W.dim
    assert I.is_subspace_of(U) and I.is_subspace_of(W)
    for v in I.basis:
        assert U.contains(v) and W.contains(v)


@settings(max_examples=60, deadline=None)
@given(matrices(5, 5))
def test_kernel_is_annihilated(data):
    rows, ncols = data
    K = kernel(QQ, rows, ncols)
    assert K.dim == ncols - rank(QQ, rows, ncols)
    for v in K.basis:
        assert all(sum(Fraction(r[k]) * v[k] for k in range(ncols)) == 0 for r in rows)
