import pytest

from gorjordan import apolar
from gorjordan.apolar import (ApolarAlgebra, assoc_graded, dual_span_dimension, element_matrix,
                              exotic_lift, graded_quotient_hf, hf_ideal_square, in_initial_ideal,
                              minimal_generators, order_of_partial, top_degree_algebra)
from gorjordan.corpus import algebra
from gorjordan.dpoly import DPPoly, VariableSet, contract, monomials, monomials_upto, parse_acting, parse_dual
from gorjordan.errors import PreconditionError
from gorjordan.linalg import QQ, Subspace, kernel, mat_mul, power_ranks
from gorjordan.sdecomp import q_dimensions
from randgen import random_algebras

XY = VariableSet.parse("x,y")
XYZ = VariableSet.parse("x,y,z")


def build(vars_, text, convention="divided"):
    return ApolarAlgebra(parse_dual(text, VariableSet.parse(vars_), QQ, convention))


def annihilates(A, text):
    return all(v == 0 for v in A.coords(parse_acting(text, A.vars, A.field)))


def monomial(A, e):
    from gorjordan.dpoly import RPoly
    return RPoly(A.field, A.vars, {e: A.field(1)})


def loewy_oracle(A, b):
    """(0:m^b) as the common kernel of multiplication by every degree-b monomial."""
    rows = []
    for e in monomials(A.nvars, b):
        rows.extend(element_matrix(A, monomial(A, e)) if b else [])
    if b == 0:
        return Subspace.zero(A.field, A.dim)
    return kernel(A.field, rows, A.dim)


def mpow_oracle(A, i):
    vecs = [A.coords(monomial(A, e)) for e in monomials_upto(A.nvars, A.j + 1) if sum(e) >= i]
    return Subspace.span(A.field, vecs, A.dim)


def test_two_variable_example():
    A = algebra("two_var_socle5")
    assert A.dim == 11 and A.hf == (1, 2, 3, 2, 2, 1)
    assert annihilates(A, "x*y^2") and annihilates(A, "y^3 - x^4")
    mg = minimal_generators(A)
    assert mg.mu == 2 and sorted(mg.orders) == [3, 3]


def test_one_variable():
    A = build("x", "X^[5]")
    assert A.dim == 6 and A.hf == (1,) * 6
    mg = minimal_generators(A)
    assert mg.mu == 1 and mg.orders == (6,)


def test_non_reflexive_generators():
    A = algebra("non_reflexive")
    for g in ("z^2", "x*y^2", "y^3 - x^3*z", "y^2*z", "x^4"):
        assert annihilates(A, g)
    mg = minimal_generators(A)
    assert (mg.mu, mg.nu) == (5, 2)


def test_length36():
    A = algebra("length36")
    assert A.hf == (1, 3, 6, 8, 7, 5, 3, 2, 1) and A.dim == 36


def test_loewy_and_mpow_examples():
    A = algebra("h1344321_D1")
    assert A.loewy(A.j + 1).dim == A.dim
    assert A.loewy(3).dim == 8 and A.mpow(2).dim == 14
    B = algebra("late_y")
    h = B.coords(parse_acting("y - x^2", B.vars, B.field))
    assert B.mpow(1).contains(h) and B.loewy(2).contains(h)


@pytest.mark.parametrize("name", ["two_var_socle5", "non_reflexive", "cute", "three_strata", "exotic",
                                  "h1344421_C", "late_y"])
def test_filtrations_match_oracles(name):
    A = algebra(name)
    for b in range(A.j + 2):
        assert A.loewy(b) == loewy_oracle(A, b)
        assert A.mpow(b) == mpow_oracle(A, b)


def test_random_filtrations_match_oracles():
    for A in random_algebras(20, 71):
        for b in range(A.j + 2):
            assert A.loewy(b) == loewy_oracle(A, b)
            assert A.mpow(b) == mpow_oracle(A, b)
        assert dual_span_dimension(A.F) == A.dim


@pytest.mark.parametrize("name,gens", [
    ("cute", ["x*z", "y*z", "z^2", "x*y^3", "x^4", "y^4"]),
    ("three_strata", ["z^2", "x*y*z", "x^2*z", "y^2*z", "x^4 - y^4", "x*y^4", "y*x^4"]),
])
def test_initial_ideals(name, gens):
    A = algebra(name)
    forms = [parse_acting(g, A.vars, A.field) for g in gens]
    assert all(in_initial_ideal(A, g) for g in forms)
    assert graded_quotient_hf(forms, A.j + 1) == A.hf + (0,)


def test_homogeneous_graded_equals_local():
    A = build("x,y,z", "X^[2]*Y^[2] + Y*Z^[3] + X^[4]")
    G = assoc_graded(A)
    assert q_dimensions(A).nonzero_rows() == [(0, A.hf)]
    for v in ("x", "y", "z"):
        ell = parse_acting(v, A.vars, A.field)
        assert element_matrix(A, ell) == element_matrix(G, ell)


def test_element_matrix():
    A = algebra("cusp_plane")
    ell = parse_acting("x + y", A.vars, A.field)
    ranks = power_ranks(A.field, element_matrix(A, ell))
    assert ranks[3] > 0 and ranks[4] == 0
    zero = element_matrix(A, parse_acting("0", A.vars, A.field))
    assert all(v == 0 for row in zero for v in row)
    X = element_matrix(A, parse_acting("x", A.vars, A.field))
    Y = element_matrix(A, parse_acting("y", A.vars, A.field))
    assert mat_mul(A.field, X, Y) == mat_mul(A.field, Y, X)
    with pytest.raises(PreconditionError):
        element_matrix(A, parse_acting("1 + x", A.vars, A.field))


def test_ideal_square_examples():
    assert hf_ideal_square(algebra("h1344321_D1")) == (1, 3, 6, 10, 12, 12, 9, 9, 6, 4)
    assert hf_ideal_square(algebra("h1344421_A")) == (1, 3, 6, 10, 12, 12, 12, 10, 7, 3)
    for name in ("h1344321_D1", "h1344421_A", "non_reflexive"):
        A = algebra(name)
        assert sum(hf_ideal_square(A)) - A.dim == 3 * A.dim


def test_order_of_partial():
    A = algebra("length36")
    assert order_of_partial(A, parse_dual("Z", A.vars)) == 5
    B = algebra("exotic")
    assert contract(parse_acting("y*z^2", B.vars), B.F) == parse_dual("Z", B.vars)
    assert order_of_partial(B, parse_dual("Z", B.vars)) == 3
    assert order_of_partial(B, parse_acting("1", B.vars)) == 0


def test_exotic_lift():
    f_st = parse_dual("X^3*Y^3 - X*Y*Z^2 - Z^3", XYZ)
    phi = parse_acting("x*y", XYZ)
    assert exotic_lift(f_st, parse_acting("0", XYZ) * phi, 2) == f_st
    lifted = exotic_lift(f_st, phi, 2)
    A, G = ApolarAlgebra(lifted), build("x,y,z", "X^3*Y^3 + X^2*Y^2*Z")
    assert A.hf == G.hf and q_dimensions(A) == q_dimensions(G)
    base = DPPoly(QQ, XYZ, {e: c for e, c in f_st.terms.items() if e[2] == 0})
    part = base + (lifted - f_st)
    assert contract(parse_acting("z - x*y", XYZ), part).is_zero()
    with pytest.raises(PreconditionError):
        exotic_lift(f_st, parse_acting("x", XYZ), 2)


def test_top_degree_algebra():
    A = algebra("three_strata")
    Q0 = top_degree_algebra(A)
    assert Q0.hf == q_dimensions(A).row(0)


def test_module_level_aliases():
    A = apolar.build(parse_dual("X^[3]", VariableSet.parse("x")))
    assert apolar.hilbert_function(A) == (1, 1, 1, 1)
    assert apolar.mpow(A, 2).dim == 2 and apolar.loewy(A, 1).dim == 1
