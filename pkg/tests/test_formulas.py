from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gorjordan.corpus import algebra
from gorjordan.errors import InputError
from gorjordan.formulas import (codim2_gorenstein_ok, codim_two_profile, dim_GT, dim_ZT, dim_ZT_alt,
                                exotic_dimension, exotic_index, ideal_order, modification_bound,
                                nonrealizable_linear_tail, pfaffian_bound_check)
from gorjordan.apolar import minimal_generators
from gorjordan.sdecomp import SymmetricDecomposition, q_dimensions


def codim_two_sequences(max_len):
    """Every codim <= 2 O-sequence of total length <= max_len."""
    out = []

    def grow(t, total, rising):
        out.append(tuple(t))
        last = t[-1]
        nxt = [last + 1] if rising and last + 1 == len(t) + 1 else []
        nxt += list(range(last, 0, -1))
        for v in nxt:
            if total + v <= max_len:
                grow(t + [v], total + v, rising and v == last + 1)

    grow([1], 1, True)
    return out


def test_gorenstein_test():
    assert codim2_gorenstein_ok((1, 2, 3, 4, 3, 2, 1))
    assert codim2_gorenstein_ok((1, 2, 2, 1))
    assert not codim2_gorenstein_ok((1, 2, 3, 1))
    assert codim2_gorenstein_ok((1, 2, 2, 2, 2, 2, 1))
    with pytest.raises(InputError):
        codim_two_profile((1, 3, 2))
    with pytest.raises(InputError):
        codim_two_profile((1, 2, 4))


def test_family_dimensions():
    assert dim_ZT((1, 2, 3, 4, 3, 2, 1)) == 12
    assert dim_ZT((1, 2, 3, 3, 3, 2, 1)) == 12
    assert dim_GT((1, 2, 1)) == 2


def test_exotic_counts():
    got = {lab: exotic_dimension(q_dimensions(algebra(f"h1344321_{lab}")), a).value
           for lab, a in (("D1", 3), ("D2", 2))}
    assert got == {"D1": 7, "D2": 3}
    D3 = q_dimensions(algebra("h1344321_D3"))
    assert exotic_index(D3) is None or exotic_dimension(D3, exotic_index(D3)).value == 0
    assert exotic_index(q_dimensions(algebra("h1344321_D1"))) == 3
    with pytest.raises(InputError):
        exotic_dimension(D3, 0)


def test_exotic_flag():
    D = SymmetricDecomposition.from_rows(4, [(1, 1, 1, 1, 1), (0, 1, 1, 0)])
    r = exotic_dimension(D, 1)
    assert not r.hypotheses_met


def test_modification_bound_examples():
    H = (1, 2, 2, 2, 2, 2, 1)
    M = modification_bound(H, 3, 1)
    assert M == (0, 1, 4, 4, 1, 0, 0)
    assert tuple(h + m for h, m in zip(H, M)) == (1, 3, 6, 6, 3, 2, 1)
    assert modification_bound(H, 3, 6) == (0,) * 7
    assert modification_bound((1, 3, 6, 3, 1), 3, 1)[:3] == (0, 0, 0)
    with pytest.raises(InputError):
        modification_bound(H, 3, 0)


def test_pfaffian_bound():
    assert pfaffian_bound_check(5, 2) and pfaffian_bound_check(1, 1)
    assert not pfaffian_bound_check(6, 2)
    for name in ("non_reflexive", "cute", "three_strata", "h1344421_A", "h1344421_C", "h1344321_D1",
                 "h1344321_D2", "h1344321_D3", "length36", "exotic", "symmetric_h"):
        mg = minimal_generators(algebra(name))
        assert pfaffian_bound_check(mg.mu, mg.nu), name
    mg = minimal_generators(algebra("non_reflexive"))
    assert (mg.mu, mg.nu) == (5, 2)


def test_nonrealizable_linear_tail():
    ci55 = (1, 2, 3, 4, 5, 4, 3, 2, 1)
    assert ideal_order(ci55) == 5
    assert nonrealizable_linear_tail(ci55).kind == "NotRealizable"
    assert nonrealizable_linear_tail((1, 2, 2, 2, 1)).kind == "Silent"
    comp = (1, 3, 6, 10, 15, 15, 10, 6, 3, 1)
    v = nonrealizable_linear_tail(comp)
    assert v.kind == "NotRealizable" and ideal_order(comp) == 5
    v = nonrealizable_linear_tail((1, 2, 3, 4, 3, 2, 1), max_gen_degree=3)
    assert v.kind == "NotRealizable" and v.notes
    # adding the tail breaks Macaulay growth here
    v = nonrealizable_linear_tail((1, 2, 3, 3, 3, 2, 1), max_gen_degree=3)
    assert v.kind == "Silent" and v.notes
    with pytest.raises(InputError):
        nonrealizable_linear_tail((1, 2, 3, 2))


def test_dim_zt_forms_agree_up_to_length_20():
    seqs = codim_two_sequences(20)
    assert len(seqs) > 100
    for T in seqs:
        assert dim_ZT(T) == dim_ZT_alt(T), T


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4), st.lists(st.integers(0, 6), min_size=1, max_size=9), st.data())
def test_modification_bound_symmetric_nonnegative(r, tail, data):
    H = [1] + [min(v, comb(k + r - 1, r - 1)) for k, v in enumerate(tail, start=1)]
    while H[-1] == 0:
        H.pop()
    j = len(H) - 1
    if j < 1:
        return
    a = data.draw(st.integers(1, j))
    M = modification_bound(H, r, a)
    c = j - a
    assert all(m >= 0 for m in M)
    assert all(M[i] == M[c - i] for i in range(c + 1))
    assert all(M[i] == 0 for i in range(c + 1, j + 1))
