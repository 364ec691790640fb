import json

import pytest

import garsidelab.verification
from garsidelab._garside_common import VerificationError
from garsidelab.verification import ANCHORS, FAIL, PASS, SKIPPED, verify_suite


def by_name(report, name):
    return [c for c in report.checks if c.name == name]


def test_suite_passes_at_14_strands():
    report = verify_suite([14], [2], sample_size=2, seed=3, oracle=False)
    assert report.ok, str(report)
    assert report.totals[FAIL] == 0
    names = {c.name for c in report.checks}
    assert names == {
        "row-blocks",
        "reduced-cycle",
        "rigid-as-written",
        "no-standard-reduction",
        "cut-head-conjugators",
        "forced-prefixes",
        "switchings",
        "closed-form",
        "initializer",
        "containment",
        "oracle-equivalence",
        "rigid-set-size",
        "size-bound",
    }
    (size,) = by_name(report, "rigid-set-size")
    assert size.status == PASS
    assert size.details == "expected 16, counted 16"
    assert size.anchor == "rigid-set-count"
    (oracle,) = by_name(report, "oracle-equivalence")
    assert oracle.status == SKIPPED
    assert oracle.details == "oracle off"


def test_every_check_names_its_result():
    report = verify_suite([10, 14], [2], sample_size=1, oracle=False)
    assert {c.name for c in report.checks} == set(ANCHORS)
    for check in report.checks:
        assert check.anchor == ANCHORS[check.name]
    assert len(set(ANCHORS.values())) == len(ANCHORS)


def test_size_checks_are_skipped_below_14_strands():
    report = verify_suite([10], [2], sample_size=1, oracle=False)
    (size,) = by_name(report, "rigid-set-size")
    assert size.status == SKIPPED
    assert by_name(report, "size-bound") == []
    assert report.ok, str(report)


def test_size_bound_details():
    report = verify_suite([17], [2], sample_size=1, oracle=False)
    (bound,) = by_name(report, "size-bound")
    assert bound.details == "32 >= 31.48"
    assert bound.status == PASS


def test_reports_are_reproducible():
    first = verify_suite([14], [2, 3], sample_size=1, seed=7, oracle=False).to_dict()
    second = verify_suite([14], [2, 3], sample_size=1, seed=7, oracle=False).to_dict()
    first.pop("created")
    second.pop("created")
    assert first == second


def test_report_json():
    report = verify_suite([14], [2], sample_size=1, oracle=False)
    data = json.loads(report.to_json())
    assert data["seed"] == 0
    assert data["totals"][FAIL] == 0
    assert sum(data["totals"].values()) == len(data["checks"])
    assert str(report).endswith(f"{len(report.checks)} checks: " + ", ".join(
        f"{count} {status}" for status, count in report.totals.items()
    ))


def test_failures_raise(monkeypatch):
    monkeypatch.setattr(garsidelab.verification, "expected_rigid_size", lambda n, k: 0)
    report = verify_suite([14], [2], sample_size=1, oracle=False)
    assert not report.ok
    assert {c.name for c in report.failures} == {"rigid-set-size", "size-bound"}
    with pytest.raises(VerificationError) as info:
        verify_suite([14], [2], sample_size=1, oracle=False, raise_errors=True)
    assert len(info.value.failures) == 2


@pytest.mark.slow
def test_suite_with_oracle():
    report = verify_suite([10, 11], [2], sample_size=1, seed=1)
    assert report.ok, str(report)
    assert {c.status for c in by_name(report, "oracle-equivalence")} == {PASS}
