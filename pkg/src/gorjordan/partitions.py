"""Partitions, conjugates of Hilbert sequences, and the dominance order."""
from __future__ import annotations

from itertools import accumulate, zip_longest
from typing import Iterable, Sequence

from .errors import InputError, WeightMismatch

LESS, EQUAL, GREATER, INCOMPARABLE = "less", "equal", "greater", "incomparable"


class Partition(tuple):
    """Weakly decreasing tuple of positive parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        ps = [int(p) for p in parts]
        if any(p < 0 for p in ps):
            raise InputError("partition parts must be nonnegative")
        return super().__new__(cls, sorted((p for p in ps if p), reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    def compact(self) -> str:
        """Exponent notation, e.g. (4,2^6,1^2)."""
        out = []
        i = 0
        while i < len(self):
            k = i
            while k < len(self) and self[k] == self[i]:
                k += 1
            out.append(str(self[i]) if k - i == 1 else f"{self[i]}^{k - i}")
            i = k
        return "(" + ",".join(out) + ")"


def hilbert_sequence(values: Sequence[int]) -> tuple[int, ...]:
    """Canonical form: nonnegative integers with trailing zeros trimmed."""
    vals = [int(v) for v in values]
    if any(v < 0 for v in vals):
        raise InputError("Hilbert sequence entries must be nonnegative")
    while vals and vals[-1] == 0:
        vals.pop()
    return tuple(vals)


def parse_sequence(text: str) -> tuple[int, ...]:
    """Parse '1,3,4,4' or '(1,3,4,4)'."""
    t = text.strip().strip("()[]")
    try:
        return tuple(int(x) for x in t.split(",") if x.strip())
    except ValueError:
        raise InputError(f"bad integer sequence {text!r}") from None


def conjugate(p: Sequence[int]) -> Partition:
    p = Partition(p)
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x >= k) for k in range(1, p[0] + 1))


def conjugate_of_sequence(h: Sequence[int]) -> Partition:
    """H^vee: sort the sequence nonincreasingly and transpose."""
    if not any(h):
        raise InputError("conjugate of the zero sequence")
    return conjugate(h)


def contiguous(h: Sequence[int]) -> Partition:
    """P_c(H): at each level k, the maximal runs of indices with H_i >= k give parts."""
    if not any(h):
        raise InputError("contiguous partition of the zero sequence")
    parts = []
    for k in range(1, max(h) + 1):
        run = 0
        for v in list(h) + [0]:
            if v >= k:
                run += 1
            elif run:
                parts.append(run)
                run = 0
    return Partition(parts)


def dominance(p: Sequence[int], q: Sequence[int]) -> str:
    """Compare equal-weight partitions by prefix sums."""
    p, q = Partition(p), Partition(q)
    if p.weight != q.weight:
        raise WeightMismatch(f"weights {p.weight} and {q.weight} differ")
    ge = le = True
    for a, b in zip_longest(accumulate(p), accumulate(q), fillvalue=p.weight):
        if a < b:
            ge = False
        if a > b:
            le = False
    if ge and le:
        return EQUAL
    if ge:
        return GREATER
    if le:
        return LESS
    return INCOMPARABLE


def dominates(p: Sequence[int], q: Sequence[int]) -> bool:
    """p >= q in the dominance order."""
    return dominance(p, q) in (GREATER, EQUAL)


def concatenate(ps: Iterable[Sequence[int]]) -> Partition:
    out: list[int] = []
    for p in ps:
        out.extend(p)
    return Partition(out)


def is_unimodal(h: Sequence[int]) -> bool:
    i = 0
    while i + 1 < len(h) and h[i] <= h[i + 1]:
        i += 1
    while i + 1 < len(h) and h[i] >= h[i + 1]:
        i += 1
    return i >= len(h) - 1
