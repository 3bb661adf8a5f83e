import json

from binary_gspace import battery
from binary_gspace.cli import main
from binary_gspace.search import DEFAULT_CLOSURE_CAP


def test_report_structure_and_status(capsys):
    code = main(["paper-check", "--json"])
    report = json.loads(capsys.readouterr().out)
    assert code == 0 and report["status"] == "pass"
    names = [e["name"] for e in report["entries"]]
    assert "inverse closure of distributive pairs" in names
    assert "classification round trip" in names
    assert all(e["anchor"] for e in report["entries"])
    assert all("elapsed" not in e for e in report["entries"])
    for e in report["entries"]:
        assert e["passed"] or e["informational"]


def test_paper_check_is_reproducible(capsys):
    main(["paper-check"])
    first = capsys.readouterr().out
    main(["paper-check"])
    assert capsys.readouterr().out == first


def test_round_trip_covers_required_groups():
    names = {G.name for G in battery.fixture_groups()}
    assert {"S3", "D4", "Q8", "Z6", "Z8"} <= names


def test_mixed_variant_reported_as_informational():
    rows = {name: informational for name, _, _, informational in battery.battery()}
    assert rows["mixed-section variant versus distributivity"] is True
    r = battery.check_mixed_variant()
    assert "12/16" in r.detail and "45960/46656" in r.detail


def test_failing_entry_sets_exit_code(capsys, monkeypatch):
    def broken(cap=DEFAULT_CLOSURE_CAP):
        return [("always fails", "-", lambda: battery.Check.fail((1,)), False)]

    monkeypatch.setattr("binary_gspace.cli.run_battery",
                        lambda closure_cap, progress: _run(broken, closure_cap))
    assert main(["paper-check"]) == 1
    assert "FAIL" in capsys.readouterr().out


def _run(rows, cap):
    report = battery.VerificationReport()
    for name, anchor, fn, info in rows(cap):
        r = fn()
        report.entries.append(battery.Entry(name, anchor, r.holds, r.witness, r.detail,
                                            informational=info))
    return report
