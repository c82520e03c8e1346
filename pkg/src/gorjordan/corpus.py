"""Regression corpus: named dual generators and the checks run over them.

Each check compares a computed invariant with a recorded expected value.
Status is "pass", "fail", or "expected-mismatch" for recorded values that
are known to be wrong; those checks pin the computed value.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .apolar import ApolarAlgebra, assoc_graded, hf_ideal_square
from .dpoly import VariableSet, parse_acting, parse_dual
from .formulas import dim_ZT, exotic_dimension, exotic_index, modification_bound
from .jordan import generic_jordan_type, jordan_type, jordan_type_graded, sl_check
from .linalg import GF, QQ
from .partitions import concatenate, conjugate_of_sequence, contiguous, dominance
from .sdecomp import (SymmetricDecomposition, enumerate_candidates, n_table_direct, n_table_formula,
                      q_dimensions, specialization_report)


@dataclass(frozen=True)
class Entry:
    variables: str
    dual: str


ENTRIES = {
    "cusp_plane": Entry("x,y", "Y^[3] - X^[2]"),
    "two_var_socle5": Entry("x,y", "X^[4]*Y + Y^[4]"),
    "non_reflexive": Entry("x,y,z", "X^3*Y*Z + Y^4"),
    "length36": Entry("x,y,z", "X^4*Y^4 + X^3*Y^3*Z + Z^5"),
    "connected_cubic": Entry("x,y,z", "X^[4]*Y + Z^[3]"),
    "late_y": Entry("x,y", "X^4 + X^2*Y"),
    "symmetric_h": Entry("x,y,z", "X*(Y^4+Z^4) + X^3 + Y^2*Z^3"),
    "cute": Entry("x,y,z", "X^[3]*Y^[2] + Y^[3]*Z"),
    "h1344421_A": Entry("x,y,z", "X^2*Y^4 + X^3*Y*Z"),
    "h1344421_B": Entry("x,y,z", "X^2*Y^4 + Z^5"),
    "h1344421_C": Entry("x,y,z", "X^3*Y^3 + Z*Y^4 + Z^4"),
    "three_strata": Entry("x,y,z", "X^[3]*Y^[3] + Z*(X^[4]+Y^[4])"),
    "exotic": Entry("x,y,z", "X^3*Y^3 + Y*Z^3"),
    "h1344321_D1": Entry("x,y,z", "X^3*Y^3 + Z^3"),
    "h1344321_D2": Entry("x,y,z", "X^6 + Y^6 + (X+Y)^[6] + Z^4"),
    "h1344321_D3": Entry("x,y,z", "X^6 + Y^6 + (X+Y)^[5] + Z^5"),
    "four_var_jump": Entry("x,y,z,w", "X^5 + Y^5 + (X+Y)^5 + Z*(X^2*Y - X*Y^2) + W^2"),
    "rcm_base": Entry("x,y,z", "X^[6] + Y^[6]"),
}

CONVENTIONS = ("divided", "ordinary")


@lru_cache(maxsize=None)
def algebra(name: str, convention: str = "divided", field: str = "q") -> ApolarAlgebra:
    e = ENTRIES[name]
    fld = QQ if field == "q" else GF(int(field.split(":")[1]))
    return ApolarAlgebra(parse_dual(e.dual, VariableSet.parse(e.variables), fld, convention))


def ell(name: str, text: str, field: str = "q"):
    A = algebra(name, "divided", field)
    return parse_acting(text, A.vars, A.field)


@dataclass
class Check:
    criterion: int
    label: str
    expected: object
    computed: object
    status: str
    note: str = ""

    def to_json(self) -> dict:
        conv = lambda v: [conv(x) for x in v] if isinstance(v, (list, tuple)) else v
        return {"criterion": self.criterion, "label": self.label, "expected": conv(self.expected),
                "computed": conv(self.computed), "status": self.status, "note": self.note}


def _cmp(criterion: int, label: str, expected, computed, note: str = "") -> Check:
    return Check(criterion, label, expected, computed, "pass" if expected == computed else "fail", note)


def _rows(D: SymmetricDecomposition) -> dict:
    return {a: tuple(r) for a, r in D.nonzero_rows()}


def criterion_1() -> list[Check]:
    want = {"two_var_socle5": (1, 2, 3, 2, 2, 1), "non_reflexive": (1, 3, 5, 4, 3, 1),
            "length36": (1, 3, 6, 8, 7, 5, 3, 2, 1), "cute": (1, 3, 3, 4, 2, 1),
            "three_strata": (1, 3, 5, 4, 4, 2, 1)}
    out = [_cmp(1, f"H({k})", v, algebra(k).hf) for k, v in want.items()]
    out.append(_cmp(1, "length(length36)", 36, algebra("length36").dim))
    return out


def criterion_2() -> list[Check]:
    want = {
        "non_reflexive": {0: (1, 3, 4, 4, 3, 1), 1: (0, 0, 1, 0, 0)},
        "two_var_socle5": {0: (1, 2, 2, 2, 2, 1), 1: (0, 0, 1, 0, 0)},
        "length36": {0: (1, 2, 3, 4, 5, 4, 3, 2, 1), 2: (0, 1, 2, 3, 2, 1, 0), 3: (0, 0, 1, 1, 0, 0)},
        "cute": {0: (1, 2, 3, 3, 2, 1), 1: (0, 1, 0, 1, 0)},
        "three_strata": {0: (1, 2, 3, 4, 3, 2, 1), 1: (0, 1, 0, 0, 1, 0), 2: (0, 0, 2, 0, 0)},
        "h1344421_A": {0: (1, 2, 3, 3, 3, 2, 1), 1: (0, 1, 1, 1, 1, 0)},
        "h1344421_B": {0: (1, 2, 3, 3, 3, 2, 1), 1: (0, 1, 1, 1, 1, 0)},
        "h1344321_D1": {0: (1, 2, 3, 4, 3, 2, 1), 3: (0, 1, 1, 0)},
        "h1344321_D2": {0: (1, 2, 3, 3, 3, 2, 1), 2: (0, 1, 1, 1, 0)},
        "h1344321_D3": {0: (1, 2, 2, 2, 2, 2, 1), 1: (0, 1, 2, 2, 1, 0)},
        "four_var_jump": {0: (1, 2, 3, 3, 2, 1), 1: (0, 1, 0, 1, 0), 3: (0, 1, 0)},
    }
    return [_cmp(2, f"D({k})", v, _rows(q_dimensions(algebra(k)))) for k, v in want.items()]


# (entry, element, expected partition, on A* instead of A)
JORDAN_CASES = [
    ("cusp_plane", "x+y", (4, 1), False),
    ("two_var_socle5", "x", (5, 5, 1), False),
    ("two_var_socle5", "x+y", (6, 4, 1), False),
    ("two_var_socle5", "y", (5, 2, 2, 2), False),
    ("symmetric_h", "x", (4, 2, 2, 2, 2, 2, 2, 1, 1), False),
    ("symmetric_h", "x", (2, 2, 2, 2, 2, 2, 2, 2, 1, 1), True),
    ("cute", "x+y+z", (6, 4, 2, 2), False),
    ("cute", "x+y+z", (6, 4, 2, 1, 1), True),
    ("three_strata", "x+y+z", (7, 5, 3, 3, 1, 1), False),
    ("h1344421_C", "x+y+z", (7, 5, 3, 3, 1), False),
    ("h1344421_C", "x+y+z", (7, 5, 3, 2, 2), True),
    ("h1344321_D1", "x+y+z", (7, 5, 3, 2, 1), False),
    ("h1344321_D2", "x+y+z", (7, 5, 3, 3), False),
    ("h1344321_D3", "x+y+z", (7, 5, 4, 2), False),
    ("four_var_jump", "x+y+z+w", (6, 4, 2, 2, 1), False),
    ("four_var_jump", "x+y+z+w", (6, 4, 2, 1, 1, 1), True),
]


def criterion_3() -> list[Check]:
    out = []
    for name, elt, want, graded in JORDAN_CASES:
        ok = []
        for conv in CONVENTIONS:
            A = algebra(name, conv)
            l = parse_acting(elt, A.vars, A.field)
            got = jordan_type_graded(A, l) if graded else jordan_type(A, l)
            if tuple(got) == want:
                ok.append(conv)
        ring = "A*" if graded else "A"
        out.append(Check(3, f"P({name}, {ring}, {elt})", want, want if ok else None,
                         "pass" if ok else "fail", "conventions: " + ",".join(ok)))
    # the generic A* value differs from the value at x+y+z for this generator
    A = algebra("three_strata", field="fp:32003")
    g = generic_jordan_type(assoc_graded(A), samples=5, seed=0).partition
    out.append(_cmp(3, "P(three_strata, A*, generic)", (7, 5, 3, 2, 2, 1), tuple(g)))
    return out


def criterion_4() -> list[Check]:
    cases = [("h1344321_D3", "x+y+z", "StrongLefschetz"), ("cute", "x+y+z", "Not"),
             ("three_strata", "x+y+z", "Not"), ("connected_cubic", "x+y+z", "StrongLefschetz")]
    return [_cmp(4, f"SL({n}, {e})", want, sl_check(algebra(n), ell(n, e)).kind) for n, e, want in cases]


def criterion_5() -> list[Check]:
    return [
        _cmp(5, "conj(1,2,1,1)", (4, 1), tuple(conjugate_of_sequence((1, 2, 1, 1)))),
        _cmp(5, "conj(1,3,4,4,3,2,1)", (7, 5, 4, 2), tuple(conjugate_of_sequence((1, 3, 4, 4, 3, 2, 1)))),
        _cmp(5, "Pc(1,3,5,2,3)", (5, 4, 2, 1, 1, 1), tuple(contiguous((1, 3, 5, 2, 3)))),
        _cmp(5, "Pc(1,3,5,3,2)", (5, 4, 3, 1, 1), tuple(contiguous((1, 3, 5, 3, 2)))),
        _cmp(5, "Pc(1,4,3,4,2,1)", (6, 4, 3, 1, 1), tuple(contiguous((1, 4, 3, 4, 2, 1)))),
        _cmp(5, "concat", (5, 4, 3, 3, 2, 1), tuple(concatenate([(4, 3, 1), (5, 3, 2)]))),
        _cmp(5, "dominance chain", ("greater", "greater"),
             (dominance((7, 5, 4, 2), (7, 5, 3, 3)), dominance((7, 5, 3, 3), (7, 5, 3, 2, 1)))),
    ]


def three_patterns(k: int) -> list[dict]:
    """The three row systems for (1,3,4^k,3,2,1), socle degree k+4."""
    return [
        {0: (1, 2) + (2,) * (k + 2) + (1,), 1: (0, 1) + (2,) * k + (1, 0)},
        {0: (1, 2) + (3,) * (k + 1) + (2, 1), 2: (0,) + (1,) * (k + 1) + (0,)},
        {0: (1, 2, 3) + (4,) * (k - 1) + (3, 2, 1), k + 1: (0, 1, 1, 0)},
    ]


def criterion_6() -> list[Check]:
    out = []
    for k in (2, 3, 4):
        h = (1, 3) + (4,) * k + (3, 2, 1)
        got = sorted(sorted(_rows(D).items()) for D in enumerate_candidates(h))
        want = sorted(sorted(p.items()) for p in three_patterns(k))
        c = _cmp(6, f"enumerate{h}", want, got)
        if k > 2 and c.status == "fail" and all(w in got for w in want) and len(got) == 4:
            c.status = "expected-mismatch"
            c.note = "one extra system satisfies the necessary conditions"
            if k == 3:
                c.note += "; it is realized, see realized_extra_system"
        out.append(c)
    A = algebra_from("x,y,z", "X^[7]+Y^[7]+(X+Y)^[7]+X^[4]*Y^[2]+X*Y^[3]*Z+Z^[3]+X*Z")
    out.append(_cmp(6, "realized_extra_system",
                    {0: (1, 2, 3, 3, 3, 3, 2, 1), 1: (0, 0, 0, 1, 0, 0, 0), 2: (0, 1, 0, 0, 1, 0),
                     3: (0, 0, 1, 0, 0)}, _rows(q_dimensions(A))))
    return out


def algebra_from(variables: str, dual: str, field=QQ) -> ApolarAlgebra:
    return ApolarAlgebra(parse_dual(dual, VariableSet.parse(variables), field))


def stratum_witnesses() -> list[tuple]:
    out = []
    for lab in ("D1", "D2", "D3"):
        A = algebra(f"h1344321_{lab}", field="fp:32003")
        out.append((lab, q_dimensions(A), generic_jordan_type(A, samples=5, seed=0).partition))
    return out


def criterion_7() -> list[Check]:
    rep = {(s.source, s.target): s for s in specialization_report(stratum_witnesses())}
    out = []
    for (s, t), r in sorted(rep.items()):
        kinds = sorted({x["kind"] for x in r.reasons})
        out.append(Check(7, f"{s}->{t}", "no specialization",
                         "no specialization" if r.obstructed else "not excluded",
                         "pass" if r.obstructed else "fail", "reasons: " + ",".join(kinds)))
    w = [x.get("witness") for x in rep[("D2", "D1")].reasons if x["kind"] == "q0"]
    out.append(_cmp(7, "q0 witness D2->D1", [3], w))
    dom = all(any(x["kind"] == "dominance" for x in rep[p].reasons)
              for p in [("D1", "D2"), ("D1", "D3"), ("D2", "D3")])
    out.append(_cmp(7, "dominance blocks D1->D2, D1->D3, D2->D3", True, dom))
    return out


def criterion_8(names=None) -> list[Check]:
    out = []
    for name in names or ENTRIES:
        A = algebra(name)
        out.append(_cmp(8, f"N({name})", n_table_direct(A), n_table_formula(q_dimensions(A))))
    return out


def criterion_9() -> list[Check]:
    wit = {lab: D for lab, D, _ in stratum_witnesses()}
    d3a = exotic_index(wit["D3"])
    H = (1, 2, 2, 2, 2, 2, 1)
    return [
        _cmp(9, "dim_ZT(1,2,3,4,3,2,1)", 12, dim_ZT((1, 2, 3, 4, 3, 2, 1))),
        _cmp(9, "dim_ZT(1,2,3,3,3,2,1)", 12, dim_ZT((1, 2, 3, 3, 3, 2, 1))),
        _cmp(9, "exotic(D1, 3)", 7, exotic_dimension(wit["D1"], 3).value),
        _cmp(9, "exotic(D2, 2)", 3, exotic_dimension(wit["D2"], 2).value),
        _cmp(9, "exotic(D3)", 0, exotic_dimension(wit["D3"], d3a).value if d3a else 0),
        _cmp(9, "H+M(1,2,2,2,2,2,1; r=3, a=1)", (1, 3, 6, 6, 3, 2, 1),
             tuple(x + y for x, y in zip(H, modification_bound(H, 3, 1)))),
    ]


ISQ_ROWS = {
    "h1344321_D1": (1, 3, 6, 10, 12, 12, 9, 9, 6, 4),
    "h1344321_D2": (1, 3, 6, 10, 12, 12, 10, 8, 5, 3, 2),
    "h1344321_D3": (1, 3, 6, 10, 12, 12, 11, 7, 5, 3, 2),
    "h1344421_A": (1, 3, 6, 10, 12, 12, 12, 10, 7, 3),
    "h1344421_B": (1, 3, 6, 10, 12, 12, 12, 8, 6, 4, 2),
    "h1344421_C": (1, 3, 6, 10, 12, 12, 11, 9, 7, 4, 1),
}


def criterion_10() -> list[Check]:
    out = []
    for name, want in ISQ_ROWS.items():
        A = algebra(name, field="fp:32003")
        h = hf_ideal_square(A)
        out.append(_cmp(10, f"H(R/I^2)({name})", want, h))
        quot = sum(h) - A.dim
        out.append(_cmp(10, f"|I/I^2|({name})", 3 * A.dim, quot,
                        f"= {54 if A.dim == 18 else 57} expected"))
    return out


def criterion_12() -> list[Check]:
    wit = {lab: D for lab, D, _ in stratum_witnesses()}
    n23 = (n_table_formula(wit["D1"])[(2, 3)], n_table_formula(wit["D2"])[(2, 3)])
    direct = (n_table_direct(algebra("h1344321_D1"))[(2, 3)], n_table_direct(algebra("h1344321_D2"))[(2, 3)])
    hv = tuple(conjugate_of_sequence(algebra("h1344421_B").hf))
    rcm = algebra("rcm_base").hf
    stated_base = algebra_from("x,y,z", "X^5 + Y^5").hf
    out = [
        Check(12, "N_{2,3}(D1,D2)", (8, 7), n23, "expected-mismatch" if n23 == direct == (7, 6) else "fail",
              "reference grid value vs formula and direct count"),
        Check(12, "H^v for H=(1,3,4,4,4,2,1)", (5, 4, 3, 3), hv,
              "expected-mismatch" if hv == (7, 5, 4, 3) else "fail", "reference conjugate"),
        Check(12, "modification example base", (1, 2, 2, 2, 2, 2, 1), stated_base,
              "expected-mismatch" if stated_base == (1, 2, 2, 2, 2, 1) and rcm == (1, 2, 2, 2, 2, 2, 1)
              else "fail", "stated generator has socle degree 5; X^[6]+Y^[6] gives the stated H"),
    ]
    return out


CRITERIA: dict[int, Callable[[], list[Check]]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
    12: criterion_12,
}


def run_corpus(criteria: Optional[list[int]] = None, timing: bool = False) -> dict:
    """Run the corpus checks; ``ok`` is false if any check has status "fail"."""
    checks, times = [], {}
    for c in criteria or sorted(CRITERIA):
        t = time.perf_counter()
        checks.extend(CRITERIA[c]())
        times[c] = time.perf_counter() - t
    out = {"ok": all(ch.status != "fail" for ch in checks),
           "checks": [ch.to_json() for ch in checks]}
    if timing:
        out["timing"] = {str(k): round(v, 3) for k, v in times.items()}
    return out
