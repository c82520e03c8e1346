"""Seeded random dual generators over F_32003 for the property suites."""
from __future__ import annotations

import numpy as np

from gorjordan.apolar import ApolarAlgebra
from gorjordan.dpoly import DPPoly, VariableSet, monomials
from gorjordan.linalg import GF

FP = GF(32003)


def random_dual(rng, nvars: int | None = None, max_degree: int = 6, max_terms: int = 6) -> DPPoly:
    nvars = nvars or int(rng.integers(1, 4))
    V = VariableSet.standard(nvars)
    top = int(rng.integers(2, max_degree + 1))
    terms = {}
    for k in range(int(rng.integers(1, max_terms + 1))):
        d = top if k == 0 else int(rng.integers(1, top + 1))
        mons = monomials(nvars, d)
        e = mons[int(rng.integers(len(mons)))]
        terms[e] = FP(int(rng.integers(1, FP.p)))
    return DPPoly(FP, V, terms)


def random_algebras(count: int, seed: int, **kw) -> list[ApolarAlgebra]:
    out = []
    for t in range(count):
        rng = np.random.default_rng([seed, t])
        out.append(ApolarAlgebra(random_dual(rng, **kw)))
    return out
