import csv
import io
import json

import pytest

from tzdg.cli import degree_pairs, isomorphic_pairs, main
from tzdg.errors import DomainError
from tzdg.lemmas import clique_ideal, ring_lemma_violations
from tzdg.report import (
    MATCH,
    MISMATCH,
    NOT_COMPUTED,
    SWEEP_COLUMNS,
    Budgets,
    SweepConfig,
    analyze,
    sweep,
    sweep_row,
)
from tzdg.ring import Ring


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


# -- report ------------------------------------------------------------------------


def test_analyze_360():
    r = analyze(360)
    assert r.status == "PASS"
    assert r.find("chromatic", "certificate").observed == 7
    assert r.find("chromatic", "bound").observed == 7
    oracle = r.find("chromatic", "oracle")
    assert oracle.status == NOT_COMPUTED and oracle.resource


def test_analyze_36_everything_matches():
    r = analyze(36)
    assert r.status == "PASS"
    assert all(c.status == MATCH for c in r.checks)
    assert all(c.verified for c in r.certificates)


def test_analyze_30_out_of_scope():
    r = analyze(30)
    c = r.find("chromatic", "oracle")
    assert c.status == NOT_COMPUTED and c.observed == 3 and c.reason == "out_of_formula_scope"


def test_analyze_ring():
    r = analyze("4x9")
    assert r.status == "PASS"
    assert r.find("connected", "oracle").observed is True
    assert r.find("ideal_clique", "oracle").status == MATCH


def test_analyze_rejects_bad_input():
    with pytest.raises(DomainError):
        analyze(1)
    with pytest.raises(DomainError):
        Budgets(chromatic_vertices=0)
    with pytest.raises(DomainError):
        SweepConfig(1, 10)


def test_report_json_is_deterministic_without_timings():
    a = json.dumps(analyze(72).to_json(), default=str)
    b = json.dumps(analyze(72).to_json(), default=str)
    assert a == b
    assert "timings" not in analyze(72).to_json()
    assert "timings" in analyze(72).to_json(include_timings=True)


def test_mismatch_marks_report_failed():
    r = analyze(36)
    r.checks[0].status = MISMATCH
    assert r.status == "FAIL"


def test_sweep_rows():
    rows = sweep(SweepConfig(4, 40))
    assert [int(r["m"]) for r in rows] == list(range(4, 41))
    assert all(r["status"] == "PASS" for r in rows)
    assert list(rows[0]) == SWEEP_COLUMNS
    row30 = rows[30 - 4]
    assert row30["chi_case"] == "out_of_formula_scope" and row30["chi_exact"] == "3"
    assert row30["chi_pred"] == ""  # empty, never 0


def test_sweep_parallel_matches_serial():
    serial = sweep(SweepConfig(20, 60))
    parallel = sweep(SweepConfig(20, 60, jobs=2))
    assert serial == parallel


def test_sweep_single_vertex():
    row = sweep_row(4)
    assert row["V"] == "1" and row["E"] == "0" and row["status"] == "PASS"


# -- ring lemmas ---------------------------------------------------------------------


@pytest.mark.parametrize("factors", [(4, 9), (2, 3), (8, 9), (2, 2, 4), (27,), (3, 4, 5)])
def test_ring_lemmas_hold(factors):
    assert ring_lemma_violations(Ring(factors)) == {
        "zero_divisor_union": [],
        "product_vanishing": [],
        "ideal_clique": [],
    }


def test_clique_ideal_z36():
    assert clique_ideal(Ring((36,))).elements == [0, 6, 12, 18, 24, 30]


# -- CLI ------------------------------------------------------------------------------


def test_cli_analyze_examples():
    code, out = run(["analyze", "360", "--json"])
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "PASS"
    assert doc["predicted"]["chromatic"] == 7
    coloring = [c for c in doc["certificates"] if c["kind"] == "coloring"][0]
    assert coloring["verified"] and len({c for _, c in coloring["payload"]}) == 7

    code, out = run(["analyze", "6"])
    assert code == 0 and "|V|=3 |E|=0" in out and "edgeless" in out

    code, out = run(["analyze", "--ring", "4x9", "--json"])
    doc = json.loads(out)
    assert code == 0 and doc["predicted"]["connected"] is True and doc["exact"]["is_connected"] is True


def test_cli_exit_codes():
    assert run(["analyze", "1"])[0] == 2
    assert run(["analyze", "--ring", "4y9"])[0] == 2
    assert run(["analyze", "12", "--ring", "4x9"])[0] == 2
    assert run(["analyze"])[0] == 2
    assert run(["bogus"])[0] == 2
    assert run(["analyze", "900", "--require", "domination"])[0] == 3
    assert run(["analyze", "900", "--budget-domination-subsets", "100000000", "--require", "domination"])[0] == 0
    assert run(["analyze", "36", "--require", "chromatic"])[0] == 0


def test_cli_export_examples(tmp_path):
    code, out = run(["export", "12", "--format", "dot"])
    lines = out.splitlines()
    assert code == 0
    assert sum("--" in l for l in lines) == 4
    assert sum(l.strip().startswith('"') and "--" not in l for l in lines) == 2
    code, out = run(["export", "9", "--format", "json"])
    assert json.loads(out)["edges"] == [[0, 1]]
    code, out = run(["export", "6", "--graph", "zdg"])
    assert '"2" -- "3";' in out and '"3" -- "4";' in out
    target = tmp_path / "g.dot"
    assert run(["export", "--m", "36", "--out", str(target)])[0] == 0
    assert target.read_text() == run(["export", "36"])[1]
    assert run(["export", "36", "--out", str(tmp_path / "missing" / "g.dot")])[0] == 2


def test_cli_sweep(tmp_path):
    target = tmp_path / "s.csv"
    code, _ = run(["sweep", "--from", "4", "--to", "40", "--out", str(target)])
    assert code == 0
    rows = list(csv.DictReader(target.open()))
    assert len(rows) == 37 and rows[0]["m"] == "4"
    code, out = run(["sweep", "--from", "4", "--to", "4"])
    assert code == 0 and len(out.strip().splitlines()) == 2


def test_cli_pairs_and_isocheck():
    code, out = run(["pairs", "--x-max", "20"])
    assert code == 0
    body = {tuple(map(int, l.split("\t")[:3])) for l in out.splitlines()[1:]}
    assert (16, 1, 36) in body and (7, 2, 27) in body
    assert all(y < x for x, y, _ in body)
    code, out = run(["isocheck", "--m-max", "100"])
    doc = json.loads(out)
    assert code == 0 and doc["isomorphic_pairs"] == [] and doc["recovery_failures"] == []


def test_pair_helpers():
    assert all(ok for *_, ok in degree_pairs(50))
    found, _, ms = isomorphic_pairs(60)
    assert found == [] and 36 in ms
