"""Seeded Monte Carlo sampling of dual generators with a JSONL result log.

Each trial draws its coefficients from numpy.random.default_rng([seed, trial]),
so a log is reproducible from the master seed whatever the number of workers.
"""
from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

import numpy as np

from .apolar import ApolarAlgebra
from .dpoly import VariableSet, parse_dual
from .errors import GorError, InputError
from .jordan import generic_jordan_type
from .linalg import PrimeField, parse_field
from .sdecomp import q_dimensions


def _trial(args) -> dict:
    shape, names, field_name, convention, seed, t, samples = args
    fld = parse_field(field_name)
    rng = np.random.default_rng([seed, t])
    V = VariableSet(tuple(names))
    F = parse_dual(shape, V, fld, convention, random_coeff=lambda: int(rng.integers(1, fld.p)))
    rec = {"trial": t, "seed": seed, "F": str(F)}
    try:
        A = ApolarAlgebra(F)
        D = q_dimensions(A)
        g = generic_jordan_type(A, samples=samples, seed=int(rng.integers(0, 2**31)))
    except GorError as e:
        rec["error"] = str(e)
        rec["key"] = "error"
        return rec
    rec["hilbert_function"] = list(A.hf)
    rec["decomposition"] = [list(r) for r in D.rows]
    rec["jordan_type"] = list(g.partition)
    rec["disagreement"] = g.disagreement
    rec["key"] = f"H={tuple(A.hf)} {D} P={g.partition}"
    return rec


def run_search(shape: str, variables: VariableSet, trials: int, seed: Optional[int],
               out_path: Optional[str] = None, field: str = "fp:32003",
               convention: str = "divided", target_hf: Optional[Sequence[int]] = None,
               jobs: int = 1, samples: int = 3) -> dict:
    """Run ``trials`` samples of ``shape`` ('?' marks a random coefficient).

    Records are written to ``out_path`` one JSON object per line, in trial
    order; returns a summary grouped by (H, decomposition, generic Jordan type).
    """
    if seed is None:
        raise InputError("search needs an explicit seed")
    if not shape.strip():
        raise InputError("empty shape")
    if trials < 0:
        raise InputError("trials must be nonnegative")
    fld = parse_field(field)
    if not isinstance(fld, PrimeField):
        raise InputError("search runs over a prime field")
    # fail early on a malformed shape
    parse_dual(shape, variables, fld, convention, random_coeff=lambda: 1)
    args = [(shape, variables.names, fld.name, convention, seed, t, samples) for t in range(trials)]
    try:
        sink = open(out_path, "w", encoding="utf-8") if out_path else None
    except OSError as e:
        raise InputError(f"cannot write {out_path}: {e.strerror}") from None
    records = []
    try:
        if jobs > 1 and trials > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                it = pool.map(_trial, args, chunksize=max(1, trials // (4 * jobs)))
                for rec in it:
                    records.append(rec)
                    if sink:
                        sink.write(json.dumps(rec, sort_keys=True) + "\n")
        else:
            for a in args:
                rec = _trial(a)
                records.append(rec)
                if sink:
                    sink.write(json.dumps(rec, sort_keys=True) + "\n")
    finally:
        if sink:
            sink.close()
    return summarize(records, target_hf)


def summarize(records: Sequence[dict], target_hf: Optional[Sequence[int]] = None) -> dict:
    """Group records by classification key; independent of record order."""
    recs = sorted(records, key=lambda r: r["trial"])
    if target_hf is not None:
        recs = [r for r in recs if r.get("hilbert_function") == list(target_hf)]
    counts = Counter(r["key"] for r in recs)
    first = {}
    for r in recs:
        first.setdefault(r["key"], r)
    classes = [{"key": k, "count": c, "example_trial": first[k]["trial"],
                "decomposition": first[k].get("decomposition"),
                "jordan_type": first[k].get("jordan_type")}
               for k, c in sorted(counts.items(), key=lambda kc: (-kc[1], kc[0]))]
    return {"trials": len(records), "matching": len(recs), "classes": classes}
