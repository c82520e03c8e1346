"""Closed-form counts and admissibility tests.

Everything here is integer arithmetic on Hilbert sequences and symmetric
decompositions; no algebra is built.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional, Sequence

from .errors import InputError
from .partitions import hilbert_sequence


@dataclass(frozen=True)
class CodimTwoProfile:
    """Order d, jumps e_i = t_{i-1} - t_i (i >= d) and length n of a codim <= 2 sequence."""

    T: tuple[int, ...]
    d: int
    e: dict[int, int]
    n: int


def codim_two_profile(T: Sequence[int]) -> CodimTwoProfile:
    t = hilbert_sequence(T)
    if not t or t[0] != 1:
        raise InputError(f"{tuple(T)} must start with 1")
    if len(t) > 1 and t[1] > 2:
        raise InputError(f"{tuple(T)} has codimension {t[1]} > 2")
    d = 0
    while d < len(t) and t[d] == d + 1:
        d += 1
    if d < len(t) and t[d] > d + 1:
        raise InputError(f"{tuple(T)} is not an O-sequence")
    ext = list(t) + [0]
    e = {i: ext[i - 1] - ext[i] for i in range(max(d, 1), len(ext))}
    if any(v < 0 for v in e.values()):
        raise InputError(f"{tuple(T)} increases after its order {d}")
    return CodimTwoProfile(t, d, e, sum(t))


def codim2_gorenstein_ok(T: Sequence[int]) -> bool:
    """Codim <= 2 sequences are Gorenstein exactly when every jump is at most 1."""
    return all(v <= 1 for v in codim_two_profile(T).e.values())


def dim_ZT(T: Sequence[int]) -> int:
    p = codim_two_profile(T)
    return p.n - p.d - sum(v * (v - 1) // 2 for v in p.e.values())


def dim_ZT_alt(T: Sequence[int]) -> int:
    p = codim_two_profile(T)
    return p.n - sum(v * (v + 1) // 2 for v in p.e.values())


def dim_GT(T: Sequence[int]) -> int:
    p = codim_two_profile(T)
    return sum((v + 1) * p.e.get(i + 1, 0) for i, v in p.e.items())


def linear_counts(D) -> list[int]:
    """n_i = sum of H(u)_1 over u <= i."""
    out, acc = [], 0
    for a in range(len(D.rows)):
        acc += D.entry(a, 1)
        out.append(acc)
    return out


@dataclass(frozen=True)
class ExoticCount:
    value: int
    hypotheses_met: bool


def exotic_dimension(D, a: int) -> ExoticCount:
    """Sum of H(b)_u for b < a and j-a <= u <= j-b-2.

    The count is meaningful when n_{a-1} = 2 and n_a = 3; it is returned
    regardless, with ``hypotheses_met`` recording whether that holds.
    """
    if a < 1:
        raise InputError("exotic count needs a >= 1")
    j = D.j
    total = sum(D.entry(b, u) for b in range(a) for u in range(j - a, j - b - 1))
    n = linear_counts(D)
    get = lambda i: n[i] if i < len(n) else n[-1]
    return ExoticCount(total, get(a - 1) == 2 and get(a) == 3)


def exotic_index(D) -> Optional[int]:
    """The a with n_{a-1} = 2 and n_a = 3, if any."""
    n = linear_counts(D)
    for a in range(1, len(n)):
        if n[a - 1] == 2 and n[a] == 3:
            return a
    return None


def modification_bound(H: Sequence[int], r: int, a: int) -> tuple[int, ...]:
    """Symmetrized deficit r_i - h_i about (j-a)/2, zero past index j-a."""
    h = hilbert_sequence(H)
    j = len(h) - 1
    if r < 1:
        raise InputError("need at least one variable")
    if not 1 <= a <= j:
        raise InputError(f"a = {a} outside 1..{j}")
    c = j - a
    half = [comb(i + r - 1, r - 1) - h[i] for i in range(c // 2 + 1)]
    if any(v < 0 for v in half):
        raise InputError(f"{h} exceeds the dimensions of {r}-variable forms")
    return tuple(half[min(i, c - i)] if i <= c else 0 for i in range(j + 1))


def pfaffian_bound_check(mu: int, nu: int) -> bool:
    return mu <= 2 * nu + 1


def ideal_order(H0: Sequence[int]) -> int:
    """First degree where H0 drops below the full count of forms."""
    h = hilbert_sequence(H0)
    if len(h) < 2:
        return 1
    r = h[1]
    for i, v in enumerate(h):
        if v < comb(i + r - 1, r - 1):
            return i
    return len(h)


@dataclass(frozen=True)
class Verdict:
    realizable_excluded: bool
    reasons: tuple[str, ...] = ()
    notes: tuple[str, ...] = field(default=())

    @property
    def kind(self) -> str:
        return "NotRealizable" if self.realizable_excluded else "Silent"


def nonrealizable_linear_tail(H0: Sequence[int], j: Optional[int] = None,
                              max_gen_degree: Optional[int] = None,
                              codim: Optional[int] = None,
                              order_nu: Optional[int] = None) -> Verdict:
    """Test whether (H0, H1) with H1 = (0,1,0,...,0,1 at j-2,0) is excluded.

    Fires when j >= 5 and the ideal of the graded base is generated in
    degrees <= j-3, either given directly or implied by the codimension
    (two: complete intersection of degrees (nu, j+2-nu) with 5 <= nu <= j+2-nu;
    three: order nu >= 5). Silent is not a realizability claim.
    """
    from .sdecomp import is_o_sequence, is_symmetric

    h = hilbert_sequence(H0)
    if j is None:
        j = len(h) - 1
    if len(h) - 1 != j:
        raise InputError(f"{h} does not have socle degree {j}")
    if not is_symmetric(h):
        raise InputError(f"{h} is not symmetric")
    if codim is None:
        codim = h[1] if len(h) > 1 else 0
    if order_nu is None:
        order_nu = ideal_order(h)
    notes = []
    if j < 5:
        return Verdict(False, (), (f"socle degree {j} < 5",))
    total = list(h)
    total[1] += 1
    total[j - 2] += 1
    if not is_o_sequence(total):
        return Verdict(False, (), (f"{tuple(total)} is not an O-sequence",))
    if j < 8:
        notes.append("generators in degree <= j-3 are rare below socle degree 8")
    reasons = []
    if max_gen_degree is not None and max_gen_degree <= j - 3:
        reasons.append(f"generators in degrees <= {max_gen_degree} <= j-3")
    if codim == 2 and 5 <= order_nu <= j + 2 - order_nu:
        reasons.append(f"codim 2 complete intersection of degrees ({order_nu},{j + 2 - order_nu})")
    if codim == 3 and order_nu >= 5:
        reasons.append(f"codim 3 of order {order_nu} >= 5, generators in degrees <= j+2-{order_nu}")
    return Verdict(bool(reasons), tuple(reasons), tuple(notes))
