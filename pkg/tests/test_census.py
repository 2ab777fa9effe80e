from __future__ import annotations

import json

import pytest

from semisym.census import (
    CASES,
    SCHEMA,
    CensusReport,
    cases_for,
    group_fingerprint,
    run_case,
    skipped_for,
)
from semisym.census.runner import _cross_checks
from semisym.group_forge import named_group

BY_KEY = {c.key: c for c in CASES}


def test_fingerprints_separate_small_groups():
    fp = {name: group_fingerprint(named_group(name)) for name in ("3wr2", "Sym(3)xSym(3)", "3^2:2", "Sym(3)xZ3")}
    assert fp["3wr2"] == fp["Sym(3)xZ3"]  # the same group, built two ways
    assert fp["3wr2"] != fp["Sym(3)xSym(3)"]
    assert fp["3^2:2"]["derived_series"] == [18, 9, 1]
    assert group_fingerprint(named_group("Alt(6)"))["derived_series"] == [360]


def test_tiers():
    core = cases_for("core")
    extended = cases_for("extended")
    assert {c.key for c in core} < {c.key for c in extended}
    assert all(c.division == 14 for c in skipped_for("extended"))
    assert {c.division for c in extended} == set(range(1, 15)) - {14}
    with pytest.raises(ValueError):
        cases_for("everything")


@pytest.mark.parametrize("key", ["div1-G1", "div2-G1^3", "div3-G2^3", "div9-PSL2(7)", "div5-PSL2(11)",
                                 "div10-Sym(6)", "div6-Alt(7)"])
def test_cases_pass(key):
    rep = run_case(BY_KEY[key])
    assert rep.status == "pass", {k: v for k, v in rep.checks.items() if not v["passed"]}


def test_symmetric_cases_carry_tutte_check():
    rep = run_case(BY_KEY["div4-PSL2(11)"])
    assert rep.checks["tutte_stabilizer"]["passed"]
    assert rep.info["symmetry"] == "Symmetric"


def test_semisymmetric_parts_are_orbits():
    rep = run_case(BY_KEY["div12-PSU3(3)"])
    assert rep.checks["parts_are_aut_orbits"]["passed"]
    assert rep.info["primitive_parts"] == [True, True]


def test_report_json_is_deterministic():
    keys = ["div2-G1", "div3-G2^4"]

    def report():
        cases = [BY_KEY[k] for k in keys]
        runs = [run_case(c) for c in cases]
        return CensusReport("core", 0, runs, [], _cross_checks(cases, runs)).to_json()

    first, second = report(), report()
    assert first == second
    data = json.loads(first)
    assert data["schema"] == SCHEMA
    assert data["summary"]["pass"] == 2
    assert "seconds" not in data["cases"][0]


def test_failing_check_marks_case_failed():
    from dataclasses import replace

    wrong = replace(BY_KEY["div2-G1^3"], aut="Sym(3)wrSym(3)")
    rep = run_case(wrong)
    assert rep.status == "fail" and not rep.checks["aut_order"]["passed"]
    report = CensusReport("core", 0, [rep], [], {})
    assert not report.passed


def test_out_of_scale_case_is_skipped_not_passed():
    rep = run_case(BY_KEY["div14-Aut(G2(3))"])
    assert rep.status == "skipped" and rep.reason
