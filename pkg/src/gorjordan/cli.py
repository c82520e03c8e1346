"""Command-line entry point: ``gorjordan <command> [flags]``.

Exit status is 0 on success, 1 when a computation fails (or a corpus
check fails), and 2 for usage errors including unparsable input.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from . import apolar, formulas, jordan, sdecomp
from .corpus import run_corpus
from .dpoly import POWER_CONVENTIONS, VariableSet, parse_acting, parse_dual
from .errors import GorError, InputError, ParseError
from .linalg import PrimeField, parse_field
from .partitions import Partition, hilbert_sequence, parse_sequence
from .report import InvariantReport, JordanEntry
from .search import run_search

DEFAULT_POOL = tuple(range(1, 101))


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _globals() -> argparse.ArgumentParser:
    g = _Parser(add_help=False)
    g.add_argument("--vars", default="x,y,z", help="acting variables, e.g. x,y,z")
    g.add_argument("--field", default=None, help="q or fp:P (default q; fp:32003 for search)")
    g.add_argument("--power-convention", default="divided", choices=POWER_CONVENTIONS)
    g.add_argument("--json", action="store_true", help="emit one JSON document")
    g.add_argument("--seed", type=int, default=None)
    g.add_argument("--jobs", type=int, default=1)
    g.add_argument("--timing", action="store_true", help="include wall-clock time in reports")
    return g


def build_parser() -> argparse.ArgumentParser:
    g = _globals()
    p = _Parser(prog="gorjordan", description="Invariants of local Artinian Gorenstein algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help_, dual=True):
        c = sub.add_parser(name, parents=[g], help=help_)
        if dual:
            c.add_argument("--dual", required=True, help="dual generator, e.g. 'X^[4]*Y + Y^[4]'")
        return c

    cmd("hf", "Hilbert function of R/Ann F")
    cmd("decomp", "symmetric decomposition")
    c = cmd("ntable", "N_{i,b} table, direct and from the decomposition")
    c = cmd("jordan", "Jordan types")
    c.add_argument("--ell", action="append", default=[], help="element of m (repeatable)")
    c.add_argument("--generic", action="store_true")
    c.add_argument("--samples", type=int, default=5)
    c.add_argument("--mode", choices=("linear", "full"), default="linear")
    c.add_argument("--also-graded", action="store_true")
    c.add_argument("--also-q", action="store_true")
    c = cmd("sl-check", "strong Lefschetz test")
    c.add_argument("--ell", default=None)
    c.add_argument("--samples", type=int, default=5)
    c = cmd("strings", "a Jordan basis as strings")
    c.add_argument("--ell", required=True)
    c = cmd("enumerate", "candidate symmetric decompositions of H", dual=False)
    c.add_argument("--hf", required=True)
    c.add_argument("--necessary-only", action="store_true",
                   help="apply the graded Gorenstein test only as a necessary filter")
    c = cmd("obstructions", "specialization obstructions between strata", dual=False)
    c.add_argument("--hf", required=True)
    c.add_argument("--from-file", required=True,
                   help="JSON list of {label, decomposition, partition}")
    c = cmd("dims", "codimension-two family dimensions", dual=False)
    c.add_argument("which", choices=("zt", "gt"))
    c.add_argument("--hf", required=True)
    c = cmd("exotic-count", "exotic parameter count", dual=False)
    c.add_argument("--decomp", required=True, help="JSON array of rows")
    c.add_argument("--a", type=int, required=True)
    c = cmd("mod-bound", "bound for a-modifications", dual=False)
    c.add_argument("--hf", required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--a", type=int, required=True)
    cmd("isq", "Hilbert functions of R/I^2 and I/I^2")
    c = cmd("order", "order of a partial g o F")
    c.add_argument("--g", required=True)
    c = cmd("search", "seeded random sampling of dual generators", dual=False)
    c.add_argument("--shape", required=True, help="expression with '?' random coefficients")
    c.add_argument("--trials", type=int, required=True)
    c.add_argument("--out", default=None, help="JSONL log path")
    c.add_argument("--target-hf", default=None)
    c.add_argument("--samples", type=int, default=3)
    c = cmd("corpus", "run the regression corpus", dual=False)
    c.add_argument("--criteria", default=None, help="comma-separated criterion numbers")
    return p


def _setup(args):
    V = VariableSet.parse(args.vars)
    fld = parse_field(args.field or "q")
    return V, fld


def _algebra(args):
    V, fld = _setup(args)
    F = parse_dual(args.dual, V, fld, args.power_convention)
    return apolar.ApolarAlgebra(F)


def _report(args, A) -> InvariantReport:
    return InvariantReport(expression=args.dual, variables=list(A.vars.names), field=A.field.name,
                           convention=args.power_convention, socle_degree=A.j,
                           hilbert_function=list(A.hf))


def _jordan_entry(A, rep: jordan.JordanReport) -> JordanEntry:
    return JordanEntry(rep.element, list(rep.partition), rep.sl, rep.comparisons)


def _generic_kwargs(args, A) -> dict:
    seed = 0 if args.seed is None else args.seed
    kw = {"samples": args.samples, "seed": seed}
    if not isinstance(A.field, PrimeField):
        kw["pool"] = DEFAULT_POOL
    return kw


def _emit(args, out, payload, text: str) -> None:
    if args.json:
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        out.write(text + "\n")


def _dual_command(args, out) -> int:
    t0 = time.perf_counter()
    A = _algebra(args)
    rep = _report(args, A)
    c = args.command
    if c in ("decomp", "ntable", "jordan"):
        rep.decomposition = [list(r) for r in sdecomp.q_dimensions(A).rows]
    if c == "ntable":
        D = sdecomp.q_dimensions(A)
        direct, formula = sdecomp.n_table_direct(A), sdecomp.n_table_formula(D)
        rep.n_table = [{"i": i, "b": b, "value": v} for (i, b), v in sorted(direct.items())]
        rep.extra["formula_agrees"] = direct == formula
    elif c == "jordan":
        elements = [parse_acting(e, A.vars, A.field) for e in args.ell]
        if args.generic or not elements:
            kw = _generic_kwargs(args, A)
            g = jordan.generic_jordan_type(A, mode=args.mode, **kw)
            rep.extra["generic"] = {"partition": list(g.partition), "disagreement": g.disagreement,
                                    "seed": kw["seed"], "samples": args.samples, "mode": args.mode}
            if args.also_graded:
                gg = jordan.generic_jordan_type(apolar.assoc_graded(A), mode=args.mode, **kw)
                rep.extra["generic_graded"] = list(gg.partition)
        for ell in elements:
            jr = jordan.jordan_report(A, ell, args.also_graded, args.also_q)
            rep.jordan.append(_jordan_entry(A, jr))
    elif c == "sl-check":
        if args.ell:
            v = jordan.sl_check(A, parse_acting(args.ell, A.vars, A.field))
            rep.extra["element"] = args.ell
        else:
            v = jordan.sl_check(A, **_generic_kwargs(args, A))
            rep.extra["element"] = "generic"
        rep.extra["sl"] = v.kind
        rep.extra["partition"] = list(v.partition)
        rep.extra["H_conjugate"] = list(v.expected)
    elif c == "strings":
        strings = jordan.jordan_strings(A, parse_acting(args.ell, A.vars, A.field))
        rep.extra["strings"] = [{"generator": str(A.element(s.generator)), "length": s.length}
                                for s in strings]
    elif c == "isq":
        h = apolar.hf_ideal_square(A)
        quot = [x - (A.hf[i] if i < len(A.hf) else 0) for i, x in enumerate(h)]
        rep.extra["hf_R_mod_I2"] = list(h)
        rep.extra["hf_I_mod_I2"] = quot
        rep.extra["length_I_mod_I2"] = sum(quot)
        rep.extra["three_times_length"] = 3 * A.dim
        mg = apolar.minimal_generators(A)
        rep.extra["generators"] = mg.mu
        rep.extra["order"] = mg.nu
    elif c == "order":
        V, fld = _setup(args)
        g = parse_acting(args.g, V, fld)
        rep.extra["order"] = apolar.order_of_partial(A, g)
    if args.timing:
        rep.timing = time.perf_counter() - t0
    _emit(args, out, rep.to_dict(), rep.to_text())
    return 0


def _hf_arg(text: str) -> tuple[int, ...]:
    return hilbert_sequence(parse_sequence(text))


def _plain_command(args, out) -> int:
    c = args.command
    if c == "enumerate":
        h = _hf_arg(args.hf)
        cands = sdecomp.enumerate_candidates(h, exact_gorenstein=not args.necessary_only)
        payload = {"hilbert_function": list(h),
                   "candidates": [{"decomposition": D.to_json(), "note": D.note} for D in cands]}
        text = "\n".join([f"{len(cands)} candidate(s) for H = {h}"] +
                         [f"  {D}" + (f"  [{D.note}]" if D.note else "") for D in cands])
        _emit(args, out, payload, text)
    elif c == "obstructions":
        h = _hf_arg(args.hf)
        with open(args.from_file, encoding="utf-8") as fh:
            raw = json.load(fh)
        entries = []
        for e in raw:
            D = sdecomp.SymmetricDecomposition.from_rows(len(h) - 1, e["decomposition"])
            if D.hilbert != h:
                raise InputError(f"decomposition {e['label']} sums to {D.hilbert}, not {h}")
            p = Partition(e["partition"]) if e.get("partition") else None
            entries.append((e["label"], D, p))
        rep = sdecomp.specialization_report(entries)
        payload = {"hilbert_function": list(h), "specializations": [s.to_json() for s in rep]}
        lines = []
        for s in rep:
            j = s.to_json()
            lines.append(f"{j['from']} -> {j['to']}: {j['verdict']}")
            lines.extend(f"  {r['kind']}: {r['detail']}" for r in j["reasons"])
        _emit(args, out, payload, "\n".join(lines))
    elif c == "dims":
        h = _hf_arg(args.hf)
        val = formulas.dim_ZT(h) if args.which == "zt" else formulas.dim_GT(h)
        _emit(args, out, {"hilbert_function": list(h), args.which: val}, f"dim {args.which.upper()}({h}) = {val}")
    elif c == "exotic-count":
        rows = json.loads(args.decomp)
        D = sdecomp.SymmetricDecomposition.from_rows(len(rows[0]) - 1, rows)
        r = formulas.exotic_dimension(D, args.a)
        _emit(args, out, {"decomposition": D.to_json(), "a": args.a, "value": r.value,
                          "hypotheses_met": r.hypotheses_met},
              f"exotic count = {r.value}" + ("" if r.hypotheses_met else "  (hypotheses not met)"))
    elif c == "mod-bound":
        h = _hf_arg(args.hf)
        M = formulas.modification_bound(h, args.r, args.a)
        tot = tuple(x + y for x, y in zip(h, M))
        _emit(args, out, {"hilbert_function": list(h), "M": list(M), "bound": list(tot)},
              f"M = {M}\nH + M = {tot}")
    elif c == "search":
        V = VariableSet.parse(args.vars)
        fld = args.field or "fp:32003"
        target = _hf_arg(args.target_hf) if args.target_hf else None
        summary = run_search(args.shape, V, args.trials, args.seed, args.out, fld,
                             args.power_convention, target, args.jobs, args.samples)
        payload = dict(summary)
        if args.out:
            with open(args.out, encoding="utf-8") as fh:
                payload["records"] = [json.loads(line) for line in fh if line.strip()]
        lines = [f"{summary['trials']} trial(s), {summary['matching']} matching, seed {args.seed}"]
        lines += [f"  {cl['count']:5d}  {cl['key']}" for cl in summary["classes"]]
        _emit(args, out, payload, "\n".join(lines))
    elif c == "corpus":
        crit = [int(x) for x in args.criteria.split(",")] if args.criteria else None
        res = run_corpus(crit, timing=args.timing)
        lines = [f"{ch['status'].upper():18s} [{ch['criterion']:2d}] {ch['label']}"
                 + (f"  ({ch['note']})" if ch["note"] else "") for ch in res["checks"]]
        if "timing" in res:
            lines.append(f"time: {res['timing']}")
        lines.append("corpus: " + ("ok" if res["ok"] else "FAILED"))
        _emit(args, out, res, "\n".join(lines))
        return 0 if res["ok"] else 1
    return 0


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        if argv is not None and len(argv) == 0 or (argv is None and len(sys.argv) == 1):
            parser.print_help(out)
            return 2
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:  # --help
            return int(e.code or 0)
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        if args.command in ("hf", "decomp", "ntable", "jordan", "sl-check", "strings", "isq", "order"):
            return _dual_command(args, out)
        return _plain_command(args, out)
    except UsageError as e:
        err.write(f"usage error: {e}\n")
        return 2
    except (ParseError, InputError) as e:
        err.write(f"input error: {e}\n")
        return 2
    except (GorError, OSError) as e:
        err.write(f"error: {e}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
