import io
import json
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from gorjordan.cli import main
from gorjordan.dpoly import VariableSet
from gorjordan.report import InvariantReport, JordanEntry
from gorjordan.search import run_search, summarize


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--json")
    assert code == 0, err
    return json.loads(out)


def test_hf():
    doc = run_json("hf", "--dual", "X^[4]*Y + Y^[4]", "--vars", "x,y")
    assert doc["hilbert_function"] == [1, 2, 3, 2, 2, 1] and doc["socle_degree"] == 5
    assert doc["input"]["variables"] == ["x", "y"]


def test_decomp():
    doc = run_json("decomp", "--dual", "X^3*Y*Z + Y^4", "--vars", "x,y,z")
    assert doc["decomposition"][:2] == [[1, 3, 4, 4, 3, 1], [0, 0, 1, 0, 0]]
    assert not any(any(r) for r in doc["decomposition"][2:])


def test_jordan_with_graded():
    doc = run_json("jordan", "--dual", "X^[3]*Y^[2]+Y^[3]*Z", "--vars", "x,y,z", "--ell", "x+y+z",
                   "--also-graded", "--also-q")
    (entry,) = doc["jordan"]
    assert entry["partition"] == [6, 4, 2, 2]
    assert entry["comparisons"]["graded"][0] == [6, 4, 2, 1, 1]
    assert entry["sl"] is False


def test_jordan_generic_prints_seed():
    code, out, _ = run("jordan", "--dual", "X^3*Y^3 + Z^3", "--field", "fp:32003", "--generic")
    assert code == 0 and "'seed': 0" in out and "[7, 5, 3, 2, 1]" in out


def test_ntable():
    doc = run_json("ntable", "--dual", "X^3*Y^3 + Z^3")
    cells = {(c["i"], c["b"]): c["value"] for c in doc["n_table"]}
    assert cells[(2, 3)] == 7 and doc["extra"]["formula_agrees"]


def test_sl_and_strings():
    doc = run_json("sl-check", "--dual", "X^6 + Y^6 + (X+Y)^[5] + Z^5", "--ell", "x+y+z")
    assert doc["extra"]["sl"] == "StrongLefschetz"
    doc = run_json("strings", "--dual", "Y^[3] - X^[2]", "--vars", "x,y", "--ell", "x+y")
    assert sorted(s["length"] for s in doc["extra"]["strings"]) == [1, 4]


def test_enumerate_and_dims():
    doc = run_json("enumerate", "--hf", "1,3,4,4,3,2,1")
    assert len(doc["candidates"]) == 3
    assert run_json("dims", "zt", "--hf", "1,2,3,4,3,2,1")["zt"] == 12
    assert run_json("dims", "gt", "--hf", "1,2,1")["gt"] == 2


def test_exotic_and_mod_bound():
    doc = run_json("exotic-count", "--decomp", "[[1,2,3,4,3,2,1],[0,0,0,0,0,0],[0,0,0,0,0],[0,1,1,0]]",
                   "--a", "3")
    assert doc["value"] == 7 and doc["hypotheses_met"]
    doc = run_json("mod-bound", "--hf", "1,2,2,2,2,2,1", "--r", "3", "--a", "1")
    assert doc["bound"] == [1, 3, 6, 6, 3, 2, 1]


def test_isq_and_order():
    doc = run_json("isq", "--dual", "X^3*Y^3 + Z^3")
    assert doc["extra"]["hf_R_mod_I2"] == [1, 3, 6, 10, 12, 12, 9, 9, 6, 4]
    assert doc["extra"]["length_I_mod_I2"] == doc["extra"]["three_times_length"] == 54
    doc = run_json("order", "--dual", "X^3*Y^3 + Y*Z^3", "--g", "y*z^2")
    assert doc["extra"]["order"] == 3


def test_obstructions(tmp_path):
    entries = [
        {"label": "D1", "decomposition": [[1, 2, 3, 4, 3, 2, 1], [], [], [0, 1, 1, 0]], "partition": [7, 5, 3, 2, 1]},
        {"label": "D2", "decomposition": [[1, 2, 3, 3, 3, 2, 1], [], [0, 1, 1, 1, 0]], "partition": [7, 5, 3, 3]},
    ]
    f = tmp_path / "strata.json"
    f.write_text(json.dumps(entries))
    doc = run_json("obstructions", "--hf", "1,3,4,4,3,2,1", "--from-file", str(f))
    assert all(s["verdict"] == "no specialization" for s in doc["specializations"])
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([{"label": "x", "decomposition": [[1, 2, 1]]}]))
    assert run("obstructions", "--hf", "1,3,4,4,3,2,1", "--from-file", str(bad))[0] == 2


def test_exit_codes():
    code, _, err = run("hf", "--dual", "X^^2")
    assert code == 2 and "position 2" in err
    assert run("nonsense")[0] == 2
    assert run("hf")[0] == 2
    assert run("hf", "--dual", "X", "--field", "fp:9")[0] == 2
    assert run("jordan", "--dual", "X^[3]", "--vars", "x", "--ell", "1 + x")[0] == 1
    assert run("search", "--shape", "?*X^2", "--vars", "x", "--trials", "2")[0] == 2
    assert run("search", "--shape", "?*X^2", "--vars", "x", "--trials", "2", "--seed", "1",
               "--field", "q")[0] == 2
    assert run()[0] == 2


def test_search_zero_trials(tmp_path):
    log = tmp_path / "log.jsonl"
    code, out, _ = run("search", "--shape", "X^3*Y^3 + ?*Z^3", "--trials", "0", "--seed", "3",
                       "--out", str(log))
    assert code == 0 and log.read_text() == ""


def test_search_unwritable(tmp_path):
    code, _, err = run("search", "--shape", "?*X^2", "--vars", "x", "--trials", "1", "--seed", "1",
                       "--out", str(tmp_path / "missing" / "log.jsonl"))
    assert code == 2 and "cannot write" in err


def test_search_records_and_summary(tmp_path):
    log = tmp_path / "log.jsonl"
    doc = run_json("search", "--shape", "X^3*Y^3 + ?*Z^3 + ?*X*Z^2", "--trials", "4", "--seed", "5",
                   "--out", str(log))
    assert doc["trials"] == 4 and len(doc["records"]) == 4
    rec = doc["records"][0]
    assert {"trial", "seed", "F", "hilbert_function", "decomposition", "jordan_type", "key"} <= set(rec)


def test_search_order_invariance(tmp_path):
    V = VariableSet.parse("x,y,z")
    path = tmp_path / "a.jsonl"
    summary = run_search("X^3*Y^3 + ?*Z^3 + ?*Y*Z^2", V, 6, 2, str(path), samples=1)
    recs = [json.loads(line) for line in path.read_text().splitlines()]
    assert [r["trial"] for r in recs] == list(range(6))
    shuffled = recs[:]
    random.Random(0).shuffle(shuffled)
    assert summarize(shuffled) == summary


reports = st.builds(
    InvariantReport,
    expression=st.text(min_size=1, max_size=20),
    variables=st.lists(st.sampled_from("xyzw"), min_size=1, max_size=4),
    field=st.sampled_from(["q", "fp:32003"]),
    convention=st.sampled_from(["divided", "ordinary"]),
    socle_degree=st.integers(0, 12),
    hilbert_function=st.lists(st.integers(0, 20), min_size=1, max_size=8),
    decomposition=st.none() | st.lists(st.lists(st.integers(0, 5), max_size=6), max_size=4),
    n_table=st.none() | st.lists(st.fixed_dictionaries({"i": st.integers(0, 6), "b": st.integers(0, 6),
                                                         "value": st.integers(0, 30)}), max_size=5),
    jordan=st.lists(st.builds(JordanEntry, element=st.text(max_size=10),
                              partition=st.lists(st.integers(1, 9), max_size=5), sl=st.booleans(),
                              comparisons=st.dictionaries(st.text(max_size=5), st.integers())), max_size=3),
    extra=st.dictionaries(st.text(max_size=6), st.integers() | st.text(max_size=6)),
    timing=st.none() | st.floats(0, 100, allow_nan=False),
)


@settings(max_examples=100, deadline=None)
@given(reports)
def test_report_round_trip(rep):
    text = rep.to_json()
    back = InvariantReport.from_json(text)
    assert back == rep
    assert back.to_json() == text
    assert rep.to_text()
