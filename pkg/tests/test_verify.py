import json

import pytest

from framerep import SuiteConfig, run_suite
from framerep.jsonio import dumps_json


def test_default_suite_passes():
    report = run_suite(SuiteConfig(seed=7))
    failing = [r.check_name for r in report.records if r.verdict != "pass"]
    assert report.passed, f"failing checks: {failing}"


def test_check_names_unique_and_described():
    report = run_suite(SuiteConfig(seed=1, trials=2))
    names = [r.check_name for r in report.records]
    assert len(names) == len(set(names))
    assert names == sorted(names)
    for record in report.records:
        assert record.statement
        assert record.fixtures_run > 0


def test_same_seed_identical_report():
    a = run_suite(SuiteConfig(seed=11, trials=3))
    b = run_suite(SuiteConfig(seed=11, trials=3))
    assert dumps_json(a.to_obj()) == dumps_json(b.to_obj())


def test_different_seeds_differ_in_residuals():
    a = run_suite(SuiteConfig(seed=1, trials=3))
    b = run_suite(SuiteConfig(seed=2, trials=3))
    ra = {r.check_name: r.max_residual for r in a.records}
    rb = {r.check_name: r.max_residual for r in b.records}
    assert any(ra[k] != rb[k] for k in ra)


def test_corrupted_convention_is_detected():
    report = run_suite(SuiteConfig(seed=7, corrupt_representation=True))
    by_name = {r.check_name: r.verdict for r in report.records}
    assert by_name["operator_roundtrip"] == "fail"
    assert not report.passed


def test_json_object_is_serializable():
    report = run_suite(SuiteConfig(seed=3, trials=2))
    text = dumps_json(report.to_obj())
    parsed = json.loads(text)
    assert parsed["seed"] == 3
    assert parsed["all_passed"] is True
    assert len(parsed["checks"]) == len(report.records)


def test_text_table_lists_every_check():
    report = run_suite(SuiteConfig(seed=3, trials=2))
    table = report.to_text_table()
    for record in report.records:
        assert record.check_name in table


@pytest.mark.parametrize(
    "kwargs",
    [
        {"trials": 0},
        {"dims": ()},
        {"dims": ((0, 2, 2),)},
        {"frame_sizes": (2,)},  # smaller than the default max dimension
    ],
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        SuiteConfig(**kwargs)


def test_mixed_dimension_chain():
    report = run_suite(
        SuiteConfig(seed=5, dims=((2, 3, 4),), frame_sizes=(4, 5), trials=3)
    )
    assert report.passed
