"""Exact linear algebra over Q and over prime fields F_p.

Vectors and matrices are plain Python lists (rows). Field elements are
``Fraction`` over Q and ``int`` in ``range(p)`` over F_p; the field object
travels with every container so that mixing fields is caught. Elimination
is delegated to python-flint (``fmpq_mat`` / ``nmod_mat``).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import flint

from .errors import DimensionMismatch, FieldMismatch, InputError, NotInSpan


class Rationals:
    name = "q"
    characteristic = 0

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, flint.fmpq):
            return Fraction(int(x.p), int(x.q))
        return Fraction(x)

    def is_zero(self, x) -> bool:
        return x == 0

    def inv(self, x) -> Fraction:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def norm(self, x) -> Fraction:
        return x

    def from_fraction(self, num: int, den: int) -> Fraction:
        return Fraction(num, den)

    def matrix(self, rows: Sequence[Sequence], ncols: int):
        flat = [flint.fmpq(v.numerator, v.denominator) for r in rows for v in r]
        return flint.fmpq_mat(len(rows), ncols, flat)

    def unmatrix(self, m) -> list[list[Fraction]]:
        return [[Fraction(int(e.p), int(e.q)) for e in row] for row in m.tolist()]

    def __eq__(self, other) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("Q")

    def __repr__(self) -> str:
        return "QQ"

    def __str__(self) -> str:
        return "q"


class PrimeField:
    def __init__(self, p: int):
        p = int(p)
        if p < 2 or not flint.fmpz(p).is_prime():
            raise InputError(f"{p} is not prime")
        if p >= 2**62:
            raise InputError("prime too large for word-size arithmetic")
        self.p = p
        self.characteristic = p
        self.name = f"fp:{p}"

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            return self.from_fraction(x.numerator, x.denominator)
        return int(x) % self.p

    def from_fraction(self, num: int, den: int) -> int:
        if den % self.p == 0:
            raise ZeroDivisionError(f"denominator {den} vanishes mod {self.p}")
        return num * pow(den, -1, self.p) % self.p

    def is_zero(self, x) -> bool:
        return x % self.p == 0

    def inv(self, x) -> int:
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def norm(self, x) -> int:
        return x % self.p

    def matrix(self, rows: Sequence[Sequence], ncols: int):
        return flint.nmod_mat(len(rows), ncols, [v for r in rows for v in r], self.p)

    def unmatrix(self, m) -> list[list[int]]:
        return [[int(e) for e in row] for row in m.tolist()]

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("F", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __str__(self) -> str:
        return self.name


QQ = Rationals()
DEFAULT_PRIME = 32003


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str):
    """Parse ``q`` or ``fp:P`` into a field object."""
    t = text.strip().lower()
    if t in ("q", "qq"):
        return QQ
    if t.startswith("fp:"):
        try:
            p = int(t[3:])
        except ValueError:
            raise InputError(f"bad prime in field spec {text!r}") from None
        return GF(p)
    if t == "fp":
        return GF(DEFAULT_PRIME)
    raise InputError(f"unknown field {text!r}; expected 'q' or 'fp:P'")


def same_field(a, b):
    if a != b:
        raise FieldMismatch(f"cannot combine objects over {a} and {b}")
    return a


def _check_rows(rows: Sequence[Sequence], ncols: int) -> None:
    for r in rows:
        if len(r) != ncols:
            raise DimensionMismatch(f"row of length {len(r)} in a {ncols}-column matrix")


def rref(field, rows: Sequence[Sequence], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    _check_rows(rows, ncols)
    if not rows or ncols == 0:
        return [], []
    m, r = field.matrix(rows, ncols).rref()
    pivots = _pivots(m, r, ncols)
    return field.unmatrix(m)[:r], pivots


def _flint_zero(field, nrows: int, ncols: int):
    if isinstance(field, PrimeField):
        return flint.nmod_mat(nrows, ncols, field.p)
    return flint.fmpq_mat(nrows, ncols)


def _flint_scalar(field, v):
    if isinstance(field, PrimeField):
        return int(v)
    return flint.fmpq(v.numerator, v.denominator)


def _pivots(red, r: int, ncols: int) -> list[int]:
    # pivots strictly increase, so one forward scan suffices
    out = []
    c = 0
    for i in range(r):
        while red[i, c] == 0:
            c += 1
        out.append(c)
        c += 1
    return out


def sparse_pivots(field, rows: Sequence[dict], ncols: int) -> list[int]:
    """Pivot columns of the row space of sparse rows ``{column: value}``."""
    if not rows or ncols == 0:
        return []
    m = _flint_zero(field, len(rows), ncols)
    for i, row in enumerate(rows):
        for c, v in row.items():
            m[i, c] = _flint_scalar(field, v)
    red, r = m.rref()
    return _pivots(red, r, ncols)


def greedy_independent(field, vectors: Sequence[Sequence], dim: int) -> list[int]:
    """Indices of the vectors kept by a left-to-right independence scan."""
    if not vectors or dim == 0:
        return []
    m = _flint_zero(field, dim, len(vectors))
    for k, v in enumerate(vectors):
        for i, x in enumerate(v):
            if x != 0:
                m[i, k] = _flint_scalar(field, x)
    red, r = m.rref()
    return _pivots(red, r, len(vectors))


def rank(field, rows: Sequence[Sequence], ncols: int) -> int:
    _check_rows(rows, ncols)
    if not rows or ncols == 0:
        return 0
    return field.matrix(rows, ncols).rank()


def kernel(field, rows: Sequence[Sequence], ncols: int) -> "Subspace":
    """Right kernel {v : M v = 0} of the matrix with the given rows."""
    red, piv = rref(field, rows, ncols)
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for f in free:
        v = [field(0)] * ncols
        v[f] = field(1)
        for row, pc in zip(red, piv):
            v[pc] = field.norm(-row[f])
        basis.append(v)
    return Subspace.span(field, basis, ncols)


def solve(field, rows: Sequence[Sequence], ncols: int, b: Sequence) -> list:
    """One solution x of M x = b; raises NotInSpan if none exists."""
    if len(b) != len(rows):
        raise DimensionMismatch("right-hand side has wrong length")
    aug = [list(r) + [bi] for r, bi in zip(rows, b)]
    red, piv = rref(field, aug, ncols + 1)
    if piv and piv[-1] == ncols:
        raise NotInSpan("inconsistent linear system")
    x = [field(0)] * ncols
    for row, pc in zip(red, piv):
        x[pc] = row[ncols]
    return x


def mat_mul(field, a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    k = len(b)
    m = len(b[0]) if b else 0
    if a and len(a[0]) != k:
        raise DimensionMismatch("inner dimensions differ")
    return field.unmatrix(field.matrix(a, k) * field.matrix(b, m))


def mat_vec(field, a: Sequence[Sequence], v: Sequence) -> list:
    if a and len(a[0]) != len(v):
        raise DimensionMismatch("matrix and vector sizes differ")
    return [field.norm(sum(x * y for x, y in zip(row, v))) for row in a]


def power_ranks(field, a: Sequence[Sequence], kmax: int | None = None) -> list[int]:
    """[rank(A^0), rank(A^1), ...] until the rank stops changing (or kmax)."""
    n = len(a)
    if n == 0:
        return [0]
    m = field.matrix(a, n)
    ranks = [n]
    p = m
    while True:
        r = p.rank()
        ranks.append(r)
        if r == ranks[-2] or r == 0 or (kmax is not None and len(ranks) > kmax):
            break
        p = p * m
    return ranks


def random_vector(field, n: int, rng, pool: Sequence[int] | None = None) -> list:
    """Uniform vector over F_p, or over Q with entries drawn from ``pool``."""
    if isinstance(field, PrimeField):
        return [int(x) for x in rng.integers(0, field.p, size=n)]
    if pool is None:
        raise InputError("random vectors over Q need an explicit coefficient pool")
    return [Fraction(int(pool[i])) for i in rng.integers(0, len(pool), size=n)]


class Subspace:
    """A subspace of k^n stored as the reduced row echelon form of a spanning set."""

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field, ambient: int, basis, pivots):
        self.field = field
        self.ambient = ambient
        self.basis = tuple(tuple(r) for r in basis)
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, field, vectors: Iterable[Sequence], ambient: int) -> "Subspace":
        vecs = [list(v) for v in vectors]
        red, piv = rref(field, vecs, ambient)
        return cls(field, ambient, red, piv)

    @classmethod
    def zero(cls, field, ambient: int) -> "Subspace":
        return cls(field, ambient, [], [])

    @classmethod
    def full(cls, field, ambient: int) -> "Subspace":
        rows = [[field(int(i == j)) for j in range(ambient)] for i in range(ambient)]
        return cls(field, ambient, rows, range(ambient))

    @classmethod
    def coordinate(cls, field, ambient: int, coords: Iterable[int]) -> "Subspace":
        coords = sorted(set(coords))
        rows = [[field(int(i == j)) for j in range(ambient)] for i in coords]
        return cls(field, ambient, rows, coords)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _compat(self, other: "Subspace") -> None:
        same_field(self.field, other.field)
        if self.ambient != other.ambient:
            raise DimensionMismatch(f"ambient dimensions {self.ambient} and {other.ambient}")

    def __add__(self, other: "Subspace") -> "Subspace":
        self._compat(other)
        if not other.basis:
            return self
        if not self.basis:
            return other
        return Subspace.span(self.field, self.basis + other.basis, self.ambient)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: row reduce [u|u ; v|0]; rows with zero left half span U ∩ V."""
        self._compat(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.field, self.ambient)
        n = self.ambient
        zero = [self.field(0)] * n
        rows = [list(u) + list(u) for u in self.basis] + [list(v) + zero for v in other.basis]
        red, piv = rref(self.field, rows, 2 * n)
        inter = [r[n:] for r, p in zip(red, piv) if p >= n]
        return Subspace.span(self.field, inter, n)

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient:
            raise DimensionMismatch("vector length differs from ambient dimension")
        w = [self.field.norm(self.field(x)) for x in v]
        for row, p in zip(self.basis, self.pivots):
            c = w[p]
            if c != 0:
                w = [self.field.norm(a - c * b) for a, b in zip(w, row)]
        return all(x == 0 for x in w)

    __contains__ = contains

    def coordinates(self, v: Sequence) -> list:
        """Coefficients of v in the stored echelon basis."""
        if not self.contains(v):
            raise NotInSpan("vector is not in the subspace")
        return [self.field(v[p]) for p in self.pivots]

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._compat(other)
        return all(other.contains(r) for r in self.basis)

    def quotient_dim(self, sub: "Subspace") -> int:
        """dim(self / sub); sub must be contained in self."""
        if not sub.is_subspace_of(self):
            raise NotInSpan("quotient by a subspace that is not contained")
        return self.dim - sub.dim

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient == other.ambient
                and self.basis == other.basis)

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, field={self.field})"


class Coordinatizer:
    """Expresses vectors in terms of a fixed list of independent rows.

    Solving against the same basis happens many times while building an
    algebra, so the pivot minor is inverted once.
    """

    def __init__(self, field, rows: Sequence[Sequence], ncols: int):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.ncols = ncols
        n = len(self.rows)
        if n == 0:
            self.cols, self.inv = [], None
            return
        # pivot columns of the transpose pick an invertible n x n minor
        red, piv = rref(field, self.rows, ncols)
        if len(piv) != n:
            raise InputError("rows are not linearly independent")
        self.cols = piv
        minor = [[r[c] for c in piv] for r in self.rows]
        self.inv = field.matrix(minor, n).inv()
        self.rowmat = field.matrix(self.rows, ncols)

    def coords_many(self, vectors: Sequence[Sequence], check: bool = True) -> list[list]:
        """Coordinates of each vector; raises NotInSpan if one is outside the span."""
        f = self.field
        n = len(self.rows)
        if not vectors:
            return []
        if n == 0:
            if check and any(x != 0 for v in vectors for x in v):
                raise NotInSpan("vector outside the zero space")
            return [[] for _ in vectors]
        sub = f.matrix([[v[c] for c in self.cols] for v in vectors], n)
        c = sub * self.inv
        if check and c * self.rowmat != f.matrix(vectors, self.ncols):
            raise NotInSpan("vector is not in the row span")
        return f.unmatrix(c)

    def coords(self, v: Sequence, check: bool = True) -> list:
        return self.coords_many([v], check)[0]
