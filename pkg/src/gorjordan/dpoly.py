"""Polynomials in the divided-power ring and in the acting polynomial ring.

A divided-power (DP) polynomial is written in capitals, ``X^[3]*Y``; an
element of the acting ring is written in lowercase, ``x*y - z^2``.
The acting ring operates on the DP ring by contraction:
``x^a o X^[b] = X^[b-a]`` when ``b >= a`` and ``0`` otherwise.

Both kinds are stored as ``{exponent tuple: coefficient}`` with zero
coefficients removed.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb, factorial
from typing import Callable, Iterable, Iterator, Sequence

from .errors import FieldMismatch, InputError, ParseError, PreconditionError
from .linalg import QQ, same_field

Exp = tuple[int, ...]

MAX_EXPONENT = 64


@dataclass(frozen=True)
class VariableSet:
    names: tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise InputError("need at least one variable")
        for n in self.names:
            if len(n) != 1 or not n.isalpha() or not n.islower():
                raise InputError(f"variable names must be single lowercase letters, got {n!r}")
        if len(set(self.names)) != len(self.names):
            raise InputError("repeated variable name")

    @classmethod
    def parse(cls, text: str) -> "VariableSet":
        return cls(tuple(t.strip().lower() for t in text.split(",") if t.strip()))

    @classmethod
    def standard(cls, n: int) -> "VariableSet":
        base = "xyzwuvst"
        if n <= len(base):
            return cls(tuple(base[:n]))
        return cls(tuple("abcdefghijklmnopqrstuvwxyz"[:n]))

    def __len__(self) -> int:
        return len(self.names)

    @property
    def duals(self) -> tuple[str, ...]:
        return tuple(n.upper() for n in self.names)

    def index(self, letter: str) -> int:
        return self.names.index(letter.lower())

    def __str__(self) -> str:
        return ",".join(self.names)


def monomials(nvars: int, degree: int) -> list[Exp]:
    """Exponents of total degree ``degree`` in graded-lex order (x-heavy first)."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def monomials_upto(nvars: int, degree: int) -> list[Exp]:
    """All exponents of degree <= ``degree``, by ascending degree."""
    out = []
    for d in range(degree + 1):
        out.extend(monomials(nvars, d))
    return out


def num_monomials(nvars: int, degree: int) -> int:
    return comb(degree + nvars - 1, nvars - 1) if degree >= 0 else 0


def glex_key(e: Exp):
    return (-sum(e), tuple(-x for x in e))


class _Poly:
    kind = ""

    __slots__ = ("field", "vars", "terms")

    def __init__(self, field, variables: VariableSet, terms: dict | None = None):
        self.field = field
        self.vars = variables
        clean = {}
        if terms:
            n = len(variables)
            for e, c in terms.items():
                if len(e) != n:
                    raise PreconditionError("exponent length differs from variable count")
                c = field.norm(field(c))
                if c != 0:
                    clean[tuple(e)] = c
        self.terms = clean

    def _new(self, terms: dict):
        p = object.__new__(type(self))
        p.field, p.vars, p.terms = self.field, self.vars, terms
        return p

    @classmethod
    def constant(cls, field, variables: VariableSet, c=1):
        return cls(field, variables, {(0,) * len(variables): c})

    @classmethod
    def monomial(cls, field, variables: VariableSet, exp: Exp, c=1):
        return cls(field, variables, {tuple(exp): c})

    @classmethod
    def variable(cls, field, variables: VariableSet, i: int):
        e = [0] * len(variables)
        e[i] = 1
        return cls(field, variables, {tuple(e): 1})

    def _compat(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} and {type(other).__name__}")
        same_field(self.field, other.field)
        if other.vars != self.vars:
            raise FieldMismatch("polynomials over different variable sets")

    def __add__(self, other):
        self._compat(other)
        f = self.field
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = f.norm(t.get(e, 0) + c)
            if v == 0:
                t.pop(e, None)
            else:
                t[e] = v
        return self._new(t)

    def __neg__(self):
        return self._new({e: self.field.norm(-c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field.norm(self.field(c))
        if c == 0:
            return self._new({})
        return self._new({e: self.field.norm(c * v) for e, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, _Poly):
            return NotImplemented
        return (type(other) is type(self) and self.field == other.field
                and self.vars == other.vars and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.kind, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    @property
    def order(self) -> int:
        """Lowest degree of a term; -1 for zero."""
        return min((sum(e) for e in self.terms), default=-1)

    def homogeneous_part(self, d: int):
        return self._new({e: c for e, c in self.terms.items() if sum(e) == d})

    def truncate(self, n: int):
        """Drop all terms of degree >= n."""
        return self._new({e: c for e, c in self.terms.items() if sum(e) < n})

    def sorted_terms(self) -> list[tuple[Exp, object]]:
        return sorted(self.terms.items(), key=lambda t: glex_key(t[0]))

    def involves(self, i: int) -> bool:
        return any(e[i] for e in self.terms)

    def coefficient(self, exp: Exp):
        return self.terms.get(tuple(exp), self.field(0))

    def __str__(self) -> str:
        return to_str(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({to_str(self)!r})"


class RPoly(_Poly):
    """Element of the acting ring k[x_1..x_r]."""

    kind = "r"

    def __mul__(self, other):
        if not isinstance(other, RPoly):
            return self.scale(other)
        self._compat(other)
        f = self.field
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return RPoly(f, self.vars, t)

    def __pow__(self, k: int):
        out = RPoly.constant(self.field, self.vars)
        for _ in range(k):
            out = out * self
        return out

    def mul_truncated(self, other: "RPoly", n: int) -> "RPoly":
        f = self.field
        t: dict = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) >= n:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return RPoly(f, self.vars, t)


class DPPoly(_Poly):
    """Element of the divided-power ring k_DP[X_1..X_r]."""

    kind = "dp"

    def __mul__(self, other):
        """Divided-power product: X^[a] * X^[b] = C(a+b, a) X^[a+b]."""
        if not isinstance(other, DPPoly):
            return self.scale(other)
        self._compat(other)
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                m = 1
                for a, b in zip(e1, e2):
                    if a and b:
                        m *= comb(a + b, a)
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + m * c1 * c2
        return DPPoly(self.field, self.vars, t)


def contract(h: RPoly, F: DPPoly) -> DPPoly:
    """The contraction action h o F."""
    if not isinstance(h, RPoly) or not isinstance(F, DPPoly):
        raise TypeError("contract expects (RPoly, DPPoly)")
    same_field(h.field, F.field)
    if h.vars != F.vars:
        raise FieldMismatch("polynomials over different variable sets")
    f = F.field
    t: dict = {}
    for a, ca in h.terms.items():
        for b, cb in F.terms.items():
            if all(x <= y for x, y in zip(a, b)):
                e = tuple(y - x for x, y in zip(a, b))
                t[e] = t.get(e, 0) + ca * cb
    return DPPoly(f, F.vars, t)


def contract_monomial(a: Exp, F: DPPoly) -> dict:
    """Terms of x^a o F as a raw dict (hot path when building algebras)."""
    out = {}
    for b, cb in F.terms.items():
        for x, y in zip(a, b):
            if x > y:
                break
        else:
            out[tuple(y - x for x, y in zip(a, b))] = cb
    return out


def dp_power_of_linear(L: DPPoly, k: int) -> DPPoly:
    """(sum c_i X_i)^[k] = sum over |alpha| = k of prod c_i^alpha_i X^[alpha]."""
    if any(sum(e) != 1 for e in L.terms):
        raise PreconditionError("divided power is only defined here for linear forms")
    if k < 0:
        raise PreconditionError("negative divided power")
    n = len(L.vars)
    coeffs = [L.coefficient(tuple(int(i == j) for j in range(n))) for i in range(n)]
    f = L.field
    t = {}
    for e in monomials(n, k):
        c = f(1)
        for ci, ai in zip(coeffs, e):
            if ai:
                c = c * ci ** ai
        t[e] = c
    return DPPoly(f, L.vars, t)


# ---------------------------------------------------------------- printing

def _coeff_str(field, c) -> str:
    if field == QQ:
        return str(c)
    return str(int(c))


def _monomial_str(e: Exp, p: _Poly) -> str:
    parts = []
    upper = isinstance(p, DPPoly)
    for name, k in zip(p.vars.names, e):
        if not k:
            continue
        v = name.upper() if upper else name
        if k == 1:
            parts.append(v)
        elif upper:
            parts.append(f"{v}^[{k}]")
        else:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def to_str(p: _Poly) -> str:
    """Deterministic text form in graded-lex order; parses back to ``p``."""
    if not p.terms:
        return "0"
    out = []
    for e, c in p.sorted_terms():
        neg = p.field == QQ and c < 0
        a = -c if neg else c
        mono = _monomial_str(e, p)
        if not mono:
            body = _coeff_str(p.field, a)
        elif a == 1:
            body = mono
        else:
            body = f"{_coeff_str(p.field, a)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# ---------------------------------------------------------------- parsing

@dataclass
class _Tok:
    kind: str  # int, var, op, rand
    value: object
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(_Tok("int", int(text[i:j]), i))
            i = j
        elif ch.isalpha():
            toks.append(_Tok("var", ch, i))
            i += 1
        elif ch in "+-*/^()[]":
            toks.append(_Tok("op", ch, i))
            i += 1
        elif ch == "?":
            toks.append(_Tok("rand", ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", text, i)
    toks.append(_Tok("end", None, len(text)))
    return toks


class _Parser:
    """Recursive descent over

        expr   := ['+'|'-'] term (('+'|'-') term)*
        term   := factor ('*'? factor)*
        factor := coeff | '?' | var power? | '(' expr ')' power?
        power  := '^' INT | '^[' INT ']'
        coeff  := INT ('/' INT)?

    Intermediate values are formal polynomials ``{exp: coeff}``. Under the
    divided convention a formal monomial X^a names X^[a]; under the
    ordinary convention it is the ordinary monomial, converted at the end.
    """

    def __init__(self, text, variables, field, convention, kind, random_coeff):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.vars = variables
        self.field = field
        self.conv = convention
        self.kind = kind
        self.rand = random_coeff
        self.n = len(variables)

    # helpers
    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, op: str) -> _Tok:
        t = self.take()
        if t.kind != "op" or t.value != op:
            raise ParseError(f"expected {op!r}", self.text, t.pos)
        return t

    def err(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok.pos)

    def const(self, c) -> dict:
        return {(0,) * self.n: self.field(c)}

    def add(self, a: dict, b: dict, sign: int = 1) -> dict:
        out = dict(a)
        for e, c in b.items():
            out[e] = self.field.norm(out.get(e, 0) + sign * c)
        return {e: c for e, c in out.items() if c != 0}

    def mul(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = self.field.norm(out.get(e, 0) + c1 * c2)
        return {e: c for e, c in out.items() if c != 0}

    def pow(self, a: dict, k: int) -> dict:
        out = self.const(1)
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def inv_factorial(self, k: int, tok: _Tok):
        if self.field.characteristic and k >= self.field.characteristic:
            self.err(f"{k}! is not invertible in characteristic {self.field.characteristic}", tok)
        return self.field.inv(self.field(factorial(k)))

    # grammar
    def parse(self) -> dict:
        val = self.expr()
        t = self.peek()
        if t.kind != "end":
            self.err(f"unexpected {t.value!r}")
        return val

    def expr(self) -> dict:
        sign = 1
        t = self.peek()
        if t.kind == "op" and t.value in "+-":
            self.take()
            sign = -1 if t.value == "-" else 1
        val = self.term()
        if sign < 0:
            val = {e: self.field.norm(-c) for e, c in val.items()}
        while True:
            t = self.peek()
            if t.kind == "op" and t.value in "+-":
                self.take()
                val = self.add(val, self.term(), -1 if t.value == "-" else 1)
            else:
                return val

    def starts_factor(self, t: _Tok) -> bool:
        return t.kind in ("int", "var", "rand") or (t.kind == "op" and t.value == "(")

    def term(self) -> dict:
        val = self.factor()
        while True:
            t = self.peek()
            if t.kind == "op" and t.value == "*":
                self.take()
                val = self.mul(val, self.factor())
            elif self.starts_factor(t):
                val = self.mul(val, self.factor())
            else:
                return val

    def power(self):
        """Returns (exponent, bracketed, token) or None."""
        t = self.peek()
        if not (t.kind == "op" and t.value == "^"):
            return None
        self.take()
        bracket = False
        if self.peek().kind == "op" and self.peek().value == "[":
            self.take()
            bracket = True
        k = self.take()
        if k.kind != "int":
            self.err("expected an integer exponent", k)
        if k.value > MAX_EXPONENT:
            self.err(f"exponent {k.value} exceeds the cap of {MAX_EXPONENT}", k)
        if bracket:
            self.expect("]")
        return k.value, bracket, t

    def factor(self) -> dict:
        t = self.take()
        if t.kind == "int":
            num = t.value
            if self.peek().kind == "op" and self.peek().value == "/":
                self.take()
                d = self.take()
                if d.kind != "int":
                    self.err("expected a denominator", d)
                if d.value == 0:
                    self.err("zero denominator", d)
                try:
                    return self.const(self.field.from_fraction(num, d.value))
                except ZeroDivisionError:
                    self.err("denominator vanishes in this field", d)
            return self.const(num)
        if t.kind == "rand":
            if self.rand is None:
                self.err("random coefficient marker '?' is not allowed here", t)
            return self.const(self.rand())
        if t.kind == "var":
            return self.variable(t)
        if t.kind == "op" and t.value == "(":
            inner = self.expr()
            self.expect(")")
            pw = self.power()
            if pw is None:
                return inner
            k, bracket, ptok = pw
            if not bracket:
                return self.pow(inner, k)
            self.require_dp(ptok)
            if any(sum(e) != 1 for e in inner):
                self.err("divided power of a non-linear expression", ptok)
            if self.conv == "ordinary":
                c = self.inv_factorial(k, ptok)
                return {e: self.field.norm(v * c) for e, v in self.pow(inner, k).items()}
            lin = DPPoly(self.field, self.vars, inner)
            return dp_power_of_linear(lin, k).terms
        self.err(f"unexpected {t.value!r}" if t.kind != "end" else "unexpected end of input", t)

    def require_dp(self, tok: _Tok) -> None:
        if self.kind == "r":
            self.err("'^[k]' is only meaningful in the divided-power ring", tok)
        self.kind = "dp"

    def variable(self, t: _Tok) -> dict:
        letter = t.value
        kind = "dp" if letter.isupper() else "r"
        if self.kind is None:
            self.kind = kind
        elif self.kind != kind:
            self.err("mixing uppercase (divided-power) and lowercase (acting ring) variables", t)
        if letter.lower() not in self.vars.names:
            self.err(f"unknown variable {letter!r}; variables are {self.vars}", t)
        idx = self.vars.index(letter)
        pw = self.power()
        k, bracket = (1, False) if pw is None else pw[:2]
        e = [0] * self.n
        e[idx] = k
        mono = {tuple(e): self.field(1)}
        if bracket:
            self.require_dp(pw[2])
            if self.conv == "ordinary":
                mono = {tuple(e): self.inv_factorial(k, pw[2])}
        return mono


POWER_CONVENTIONS = ("divided", "ordinary")


def parse(text: str, variables: VariableSet, field=QQ, convention: str = "divided",
          kind: str | None = None, random_coeff: Callable[[], object] | None = None):
    """Parse ``text`` into a DPPoly (capital letters) or RPoly (lowercase).

    ``kind`` ('dp' or 'r') forces the ring; constants default to DP.
    Under ``convention='ordinary'`` the expression is read as an ordinary
    polynomial and X^a becomes a! X^[a]; ``X^[k]`` always means the divided
    power. ``random_coeff`` enables the '?' coefficient marker.
    """
    if convention not in POWER_CONVENTIONS:
        raise InputError(f"unknown power convention {convention!r}")
    p = _Parser(text, variables, field, convention, kind, random_coeff)
    terms = p.parse()
    k = p.kind or kind or "dp"
    if kind is not None and k != kind:
        raise ParseError(f"expected a {'lowercase' if kind == 'r' else 'uppercase'} expression",
                         text, 0)
    if k == "r":
        return RPoly(field, variables, terms)
    if convention == "ordinary":
        conv = {}
        for e, c in terms.items():
            m = 1
            for a in e:
                m *= factorial(a)
            v = field.norm(c * m)
            if v == 0 and c != 0:
                raise InputError(
                    f"ordinary power convention: {m} vanishes in characteristic {field.characteristic}")
            conv[e] = v
        terms = conv
    return DPPoly(field, variables, terms)


def parse_dual(text: str, variables: VariableSet, field=QQ, convention: str = "divided",
               random_coeff=None) -> DPPoly:
    return parse(text, variables, field, convention, "dp", random_coeff)


def parse_acting(text: str, variables: VariableSet, field=QQ) -> RPoly:
    return parse(text, variables, field, "divided", "r")


def iter_terms(p: _Poly) -> Iterator[tuple[Exp, object]]:
    yield from p.sorted_terms()


def linear_form(field, variables: VariableSet, coeffs: Sequence) -> RPoly:
    n = len(variables)
    return RPoly(field, variables,
                 {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})


def change_field(p: _Poly, field) -> _Poly:
    """Reduce a rational polynomial into another field (e.g. Q -> F_p)."""
    t = {}
    for e, c in p.terms.items():
        t[e] = field.from_fraction(c.numerator, c.denominator) if hasattr(c, "numerator") else field(c)
    return type(p)(field, p.vars, t)


def sum_polys(polys: Iterable[_Poly], zero: _Poly) -> _Poly:
    out = zero
    for p in polys:
        out = out + p
    return out
