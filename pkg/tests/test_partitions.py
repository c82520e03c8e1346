import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from gorjordan.errors import InputError, WeightMismatch
from gorjordan.partitions import (EQUAL, GREATER, INCOMPARABLE, LESS, Partition, concatenate, conjugate,
                                  conjugate_of_sequence, contiguous, dominance, dominates, is_unimodal,
                                  parse_sequence)


def test_conjugates():
    assert conjugate_of_sequence((1, 2, 1, 1)) == (4, 1)
    assert conjugate_of_sequence((1, 3, 4, 4, 3, 2, 1)) == (7, 5, 4, 2)
    assert conjugate_of_sequence((1,)) == (1,)
    with pytest.raises(InputError):
        conjugate_of_sequence((0, 0))


def test_contiguous():
    assert contiguous((1, 3, 5, 2, 3)) == (5, 4, 2, 1, 1, 1)
    assert contiguous((1, 3, 5, 3, 2)) == (5, 4, 3, 1, 1)
    assert contiguous((1, 4, 3, 4, 2, 1)) == (6, 4, 3, 1, 1)


def test_dominance_examples():
    assert dominance((7, 5, 4, 2), (7, 5, 3, 3)) == GREATER
    assert dominance((7, 5, 3, 3), (7, 5, 3, 2, 1)) == GREATER
    assert dominance((7, 5, 3, 2, 1), (7, 5, 4, 2)) == LESS
    assert dominance((4, 1, 1), (3, 3)) == INCOMPARABLE
    assert dominance((3, 2), (3, 2)) == EQUAL
    with pytest.raises(WeightMismatch):
        dominance((3,), (2,))


def test_concatenate():
    assert concatenate([(4, 3, 1), (5, 3, 2)]) == (5, 4, 3, 3, 2, 1)
    assert concatenate([(3, 1), ()]) == (3, 1)
    assert concatenate([(2,), (2,), (1,)]) == (2, 2, 1)


def test_partition_normalizes_and_prints():
    p = Partition([1, 4, 2, 2, 0, 2, 1])
    assert p == (4, 2, 2, 2, 1, 1)
    assert str(p) == "(4,2,2,2,1,1)" and p.compact() == "(4,2^3,1^2)"
    assert parse_sequence("(1, 3,4)") == (1, 3, 4)
    with pytest.raises(InputError):
        parse_sequence("1,a")


partitions = st.lists(st.integers(1, 6), max_size=7).map(Partition)


def same_weight_triple(n):
    def split(rnd):
        parts, left = [], n
        while left:
            k = rnd.randint(1, left)
            parts.append(k)
            left -= k
        return Partition(parts)
    return st.randoms(use_true_random=False).map(split)


@settings(max_examples=150, deadline=None)
@given(partitions)
def test_conjugation_is_an_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).weight == p.weight


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 12).flatmap(lambda n: st.tuples(same_weight_triple(n), same_weight_triple(n),
                                                        same_weight_triple(n))))
def test_dominance_is_a_partial_order(t):
    p, q, r = t
    assert dominates(p, p)
    if dominates(p, q) and dominates(q, p):
        assert p == q
    if dominates(p, q) and dominates(q, r):
        assert dominates(p, r)
    # conjugation reverses the order
    if dominates(p, q):
        assert dominates(conjugate(q), conjugate(p))
    flip = {GREATER: LESS, LESS: GREATER, EQUAL: EQUAL, INCOMPARABLE: INCOMPARABLE}
    assert dominance(q, p) == flip[dominance(p, q)]


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(0, 5), min_size=1, max_size=8))
def test_contiguous_refines_conjugate(h):
    assume(any(h))
    pc, hv = contiguous(h), conjugate_of_sequence(h)
    assert pc.weight == hv.weight == sum(h)
    assert dominates(hv, pc)
    if is_unimodal(h):
        assert pc == hv
