"""Symmetric decomposition of the Hilbert function and the N_{i,b} tables.

For an algebra A of socle degree j, the ideals
C(a)_i = (m^i ∩ (0:m^{j+1-a-i})) / (m^{i+1} ∩ (0:m^{j+1-a-i}))
filter the associated graded algebra, and the successive quotients
Q(a) = C(a)/C(a+1) have Hilbert functions H(a) that are symmetric about
(j-a)/2 and add up to H(A).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Mapping, Sequence

from .errors import InputError, PreconditionError
from .linalg import Subspace
from .partitions import (EQUAL, GREATER, INCOMPARABLE, LESS, dominates,
                         hilbert_sequence)


@dataclass(frozen=True)
class SymmetricDecomposition:
    """Rows H(0), ..., H(j-2); row a has entries at indices 0..j-a."""

    j: int
    rows: tuple
    note: str = field(default="", compare=False)

    @classmethod
    def from_rows(cls, j: int, rows, note: str = "") -> "SymmetricDecomposition":
        """Build from a list of rows (index = a) or a mapping {a: row}; short rows are padded."""
        if j < 0:
            raise InputError("socle degree must be nonnegative")
        given = dict(rows) if isinstance(rows, Mapping) else dict(enumerate(rows))
        count = max(j - 1, 1)
        out = []
        for a in range(max(count, max(given, default=0) + 1)):
            r = [int(x) for x in given.get(a, ())]
            width = j - a + 1
            if len(r) > width:
                if any(r[width:]):
                    raise InputError(f"row {a} is longer than {width}")
                r = r[:width]
            r += [0] * (width - len(r))
            if a >= count:
                if any(r):
                    raise InputError(f"row {a} must vanish for socle degree {j}")
                continue
            out.append(tuple(r))
        return cls(j, tuple(out), note)

    def row(self, a: int) -> tuple[int, ...]:
        if 0 <= a < len(self.rows):
            return self.rows[a]
        return (0,) * max(self.j - a + 1, 0)

    def entry(self, a: int, i: int) -> int:
        r = self.row(a)
        return r[i] if 0 <= i < len(r) else 0

    @property
    def hilbert(self) -> tuple[int, ...]:
        tot = [0] * (self.j + 1)
        for r in self.rows:
            for i, v in enumerate(r):
                tot[i] += v
        return hilbert_sequence(tot)

    def nonzero_rows(self) -> list[tuple[int, tuple[int, ...]]]:
        return [(a, r) for a, r in enumerate(self.rows) if any(r)]

    def partial_sum(self, a: int) -> tuple[int, ...]:
        tot = [0] * (self.j + 1)
        for u in range(a + 1):
            for i, v in enumerate(self.row(u)):
                tot[i] += v
        return tuple(tot)

    def problems(self) -> list[str]:
        """Violated structural invariants (empty when the decomposition is well formed)."""
        out = []
        for a, r in enumerate(self.rows):
            if r != r[::-1]:
                out.append(f"H({a}) is not symmetric about {(self.j - a) / 2}")
            if a == 0 and r[0] != 1:
                out.append("H(0)_0 must be 1")
            if a > 0 and r[0] != 0:
                out.append(f"H({a})_0 must be 0")
        return out

    def __str__(self) -> str:
        parts = [f"H({a})=({','.join(map(str, r))})" for a, r in self.nonzero_rows()]
        return "D[" + ", ".join(parts) + "]"

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def _intersections(A) -> dict:
    cache = {}

    def get(i: int, b: int) -> Subspace:
        i = min(max(i, 0), A.j + 1)
        b = min(max(b, 0), A.j + 1)
        if (i, b) not in cache:
            cache[(i, b)] = A.mpow(i).intersect(A.loewy(b))
        return cache[(i, b)]
    return get


def q_dimensions(A) -> SymmetricDecomposition:
    """dim Q(a)_i = dim(m^i ∩ L) - dim((m^i ∩ L') + (m^{i+1} ∩ L)),
    L = (0:m^{j+1-a-i}), L' = (0:m^{j-a-i}), by exact subspace arithmetic."""
    j = A.j
    inter = _intersections(A)
    rows = {}
    for a in range(j + 1):
        row = []
        for i in range(j - a + 1):
            b = j + 1 - a - i
            num = inter(i, b)
            den = inter(i, b - 1) + inter(i + 1, b)
            row.append(num.dim - den.dim)
        rows[a] = row
    for a in range(max(j - 1, 1), j + 1):
        if any(rows[a]):
            raise AssertionError(f"Q({a}) should vanish but has dimensions {rows[a]}")
    return SymmetricDecomposition.from_rows(j, {a: r for a, r in rows.items()
                                                if a < max(j - 1, 1)})


symmetric_decomposition = q_dimensions


def c_subspace(A, a: int, i: int) -> Subspace:
    """m^i ∩ (0:m^{j+1-a-i}) as a subspace of A; its image in A*_i is C(a)_i."""
    b = A.j + 1 - a - i
    if b <= 0:
        return Subspace.zero(A.field, A.dim)
    return A.mpow(i).intersect(A.loewy(b))


def c_filtration_dims(A) -> dict[tuple[int, int], int]:
    """{(a, i): dim C(a)_i} for 0 <= a, i <= j."""
    inter = _intersections(A)
    out = {}
    for a in range(A.j + 1):
        for i in range(A.j + 1):
            b = A.j + 1 - a - i
            if b <= 0:
                out[(a, i)] = 0
            else:
                out[(a, i)] = inter(i, b).dim - inter(i + 1, b).dim
    return out


def _check_range(j: int, i: int, b: int) -> None:
    if i < 0 or b < 0 or i + b > j + 1:
        raise IndexError(f"(i, b) = ({i}, {b}) outside 0 <= i, b and i + b <= {j + 1}")


def n_direct(A, i: int, b: int) -> int:
    """N_{i,b} = dim m^i - dim(m^i ∩ (0:m^b))."""
    _check_range(A.j, i, b)
    m = A.mpow(i)
    return m.dim - m.intersect(A.loewy(b)).dim


def n_formula(D: SymmetricDecomposition, i: int, b: int) -> int:
    """N_{i,b} = sum_{a=0}^{j-b-i} sum_{k=i}^{j-b-a} H(a)_k."""
    _check_range(D.j, i, b)
    j = D.j
    return sum(D.entry(a, k) for a in range(j - b - i + 1) for k in range(i, j - b - a + 1))


def n_cells(j: int) -> list[tuple[int, int]]:
    return [(i, b) for i in range(j + 2) for b in range(j + 2 - i)]


def n_table_direct(A) -> dict[tuple[int, int], int]:
    inter = _intersections(A)
    return {(i, b): A.mpow(i).dim - inter(i, b).dim for i, b in n_cells(A.j)}


def n_table_formula(D: SymmetricDecomposition) -> dict[tuple[int, int], int]:
    return {(i, b): n_formula(D, i, b) for i, b in n_cells(D.j)}


def _same_h(d1: SymmetricDecomposition, d2: SymmetricDecomposition) -> None:
    if d1.hilbert != d2.hilbert or d1.j != d2.j:
        raise PreconditionError("decompositions of different Hilbert functions")


def decomposition_order(d1: SymmetricDecomposition, d2: SymmetricDecomposition) -> str:
    """Pointwise comparison of N-tables; 'greater' means N(d1) >= N(d2) everywhere."""
    _same_h(d1, d2)
    t1, t2 = n_table_formula(d1), n_table_formula(d2)
    ge = all(t1[c] >= t2[c] for c in t1)
    le = all(t1[c] <= t2[c] for c in t1)
    if ge and le:
        return EQUAL
    return GREATER if ge else LESS if le else INCOMPARABLE


def q0_obstruction(ds: SymmetricDecomposition, dt: SymmetricDecomposition) -> int | None:
    """Smallest i with H_s(0)_i < H_t(0)_i, or None.

    A witness rules out any family with decomposition ds specializing to dt.
    """
    _same_h(ds, dt)
    for i in range(ds.j + 1):
        if ds.entry(0, i) < dt.entry(0, i):
            return i
    return None


@dataclass(frozen=True)
class Specialization:
    source: str
    target: str
    obstructed: bool
    reasons: tuple

    def to_json(self) -> dict:
        return {"from": self.source, "to": self.target,
                "verdict": "no specialization" if self.obstructed else "not excluded",
                "reasons": list(self.reasons)}


def specialization_report(entries: Sequence[tuple]) -> list[Specialization]:
    """Check every ordered pair of (label, decomposition, generic Jordan type).

    A family with generic decomposition Ds and Jordan type Ps can only
    specialize to Dt, Pt if N(Dt) <= N(Ds) pointwise and Ps >= Pt.
    """
    out = []
    for ls, ds, ps in entries:
        for lt, dt, pt in entries:
            if ls == lt:
                continue
            reasons = []
            i = q0_obstruction(ds, dt)
            if i is not None:
                reasons.append({"kind": "q0", "witness": i,
                                "detail": f"H(0)_{i}: {ds.entry(0, i)} < {dt.entry(0, i)}"})
            ns, nt = n_table_formula(ds), n_table_formula(dt)
            bad = [c for c in ns if nt[c] > ns[c]]
            if bad:
                c = bad[0]
                reasons.append({"kind": "n-table", "witness": list(c),
                                "detail": f"N_{{{c[0]},{c[1]}}}: {ns[c]} < {nt[c]}"})
            if ps is not None and pt is not None and not dominates(ps, pt):
                reasons.append({"kind": "dominance",
                                "detail": f"{tuple(ps)} does not dominate {tuple(pt)}"})
            out.append(Specialization(ls, lt, bool(reasons), tuple(reasons)))
    return out


# -- O-sequences and Gorenstein sequences

def macaulay_representation(h: int, d: int) -> list[tuple[int, int]]:
    """h = C(k_d, d) + C(k_{d-1}, d-1) + ... with k_d > k_{d-1} > ... >= i >= 1."""
    if h < 0 or d < 1:
        raise InputError("need h >= 0 and d >= 1")
    out = []
    i = d
    while h > 0 and i >= 1:
        k = i
        while comb(k + 1, i) <= h:
            k += 1
        out.append((k, i))
        h -= comb(k, i)
        i -= 1
    return out


def macaulay_bound(h: int, d: int) -> int:
    """h^<d>: the largest possible H_{d+1} given H_d = h."""
    return sum(comb(k + 1, i + 1) for k, i in macaulay_representation(h, d))


def is_o_sequence(h: Sequence[int]) -> bool:
    h = list(h)
    if not h or h[0] != 1 or any(v < 0 for v in h):
        return False
    return all(h[d + 1] <= macaulay_bound(h[d], d) for d in range(1, len(h) - 1))


def is_symmetric(h: Sequence[int]) -> bool:
    h = list(hilbert_sequence(h))
    return h == h[::-1]


def graded_gorenstein_status(h: Sequence[int]) -> str:
    """'yes' / 'no' for codimension <= 3, 'unknown' when only necessary conditions hold."""
    from .formulas import codim2_gorenstein_ok

    h = hilbert_sequence(h)
    if not h or h[0] != 1 or not is_symmetric(h) or not is_o_sequence(h):
        return "no"
    codim = h[1] if len(h) > 1 else 0
    if codim <= 1:
        return "yes" if all(v == 1 for v in h) else "no"
    if codim == 2:
        return "yes" if codim2_gorenstein_ok(h) else "no"
    if codim == 3:
        half = h[: (len(h) - 1) // 2 + 1]
        diff = [half[0]] + [half[k] - half[k - 1] for k in range(1, len(half))]
        return "yes" if all(v >= 0 for v in diff) and is_o_sequence(hilbert_sequence(diff) or (1,)) else "no"
    return "unknown"


def enumerate_candidates(h: Sequence[int], exact_gorenstein: bool = True) -> list[SymmetricDecomposition]:
    """All row systems with (i) symmetric rows, (ii) O-sequence partial sums,
    (iii) H(0) a graded Gorenstein sequence.

    Rows are chosen from a = 0 upward; after row a every remaining entry at
    index >= j - a must already be used up, which prunes most branches.
    With ``exact_gorenstein=False``, or in codimension >= 4, condition (iii)
    only checks necessary conditions and results carry a note.
    """
    H = list(hilbert_sequence(h))
    if not is_o_sequence(H):
        raise InputError("H must be an O-sequence with H_0 = 1")
    j = len(H) - 1
    last = max(j - 2, 0)
    found = []

    def rows_for(a: int, rem: list[int]):
        width = j - a
        half = width // 2
        ranges = []
        for i in range(half + 1):
            if i == 0:
                v0 = 1 if a == 0 else 0
                ranges.append([v0])
                continue
            ranges.append(range(min(rem[i], rem[width - i]) + 1))
        for vals in product(*ranges):
            row = [0] * (width + 1)
            for i, v in enumerate(vals):
                row[i] = v
                row[width - i] = v
            if row[0] > rem[0] or row[width] > rem[width]:
                continue
            yield row

    def rec(a: int, rem: list[int], rows: list, note: str):
        if a > last:
            if not any(rem):
                found.append(SymmetricDecomposition.from_rows(j, rows, note))
            return
        for row in rows_for(a, rem):
            new = [r - (row[i] if i < len(row) else 0) for i, r in enumerate(rem)]
            if any(v < 0 for v in new):
                continue
            # later rows are supported on indices 1 .. j - a - 2
            if any(new[i] for i in range(max(j - a - 1, 1), j + 1)):
                continue
            partial = [x - y for x, y in zip(H, new)]
            if not is_o_sequence(partial):
                continue
            n = note
            if a == 0:
                if exact_gorenstein:
                    status = graded_gorenstein_status(row)
                else:
                    status = "unknown" if is_symmetric(row) and is_o_sequence(row) else "no"
                if status == "no":
                    continue
                if status == "unknown":
                    n = "candidate: graded Gorenstein condition checked as necessary only"
            rec(a + 1, new, rows + [row], n)

    rec(0, H, [], "")
    found.sort(key=lambda d: [x for r in d.rows for x in r])
    return found
