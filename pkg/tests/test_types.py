"""Tests for core types and settings."""

import json
from fractions import Fraction

import pytest
from asrg_core import (
    SCHEMA_VERSION,
    BoundReport,
    ExponentReport,
    LabeledValue,
    Report,
    ScanReport,
    ScanVerdict,
    Settings,
)
from asrg_core.types import FamilySpec, Law
from pydantic import ValidationError


def _bound(*, satisfied: bool, certified: bool) -> BoundReport:
    return BoundReport(
        name="krein_variant",
        inputs={"v": 10},
        expressions=[LabeledValue(label="x", value=-1.0 if not satisfied else 1.0)],
        certified=certified,
        satisfied=satisfied,
        margin=-1.0 if not satisfied else 1.0,
        scale=1.0,
    )


def test_rational_serialization() -> None:
    """Test that rationals serialize as num/den objects and parse back."""
    report = ExponentReport(kind="cap", args={"n": 10}, value=Fraction(49, 6), value_real=49 / 6)
    data = json.loads(report.model_dump_json())
    assert data["value"] == {"num": 49, "den": 6}
    assert ExponentReport.model_validate(data).value == Fraction(49, 6)
    assert ExponentReport(kind="ak", args={}, value="2/3", value_real=2 / 3).value == Fraction(2, 3)


def test_rational_rejects_junk() -> None:
    """Test that booleans, floats and malformed strings are not rationals."""
    for value in (True, 0.5, "1/0", {"num": 1}):
        with pytest.raises(ValidationError):
            ExponentReport(kind="ak", args={}, value=value, value_real=0.0)


def test_real_rounding() -> None:
    """Test 12-significant-digit float serialization."""
    value = LabeledValue(label="third", value=1 / 3)
    assert json.loads(value.model_dump_json())["value"] == 0.333333333333


def test_report_schema_alias() -> None:
    """Test the schema field alias and exclusion of empty sections."""
    report = Report(input={"command": "field-info", "q": 9})
    data = json.loads(report.model_dump_json(by_alias=True, exclude_none=True))
    assert data["schema"] == SCHEMA_VERSION == "asrg-report/1"
    assert "stats" not in data
    assert Report.model_validate(data).schema_version == SCHEMA_VERSION


def test_report_json_keeps_required_sections() -> None:
    """Test that stats, spectrum and e_matrix serialize as null while other empty sections drop."""
    data = Report(input={"command": "field-info", "q": 9}).to_json()
    assert data["stats"] is None
    assert data["spectrum"] is None
    assert data["e_matrix"] is None
    assert "scan" not in data
    assert data["schema"] == SCHEMA_VERSION
    assert Report.model_validate(data).stats is None


def test_report_violated() -> None:
    """Test that only certified bound failures and infeasible scans count as violations."""
    assert not Report(input={}, bounds=[_bound(satisfied=True, certified=True)]).violated
    assert not Report(input={}, bounds=[_bound(satisfied=False, certified=False)]).violated
    assert Report(input={}, bounds=[_bound(satisfied=False, certified=True)]).violated
    family = FamilySpec(
        laws={n: Law(c=1, e=1) for n in ("v", "k", "lambda", "mu")},
    )
    scan = ScanReport(
        family=family,
        samples=[],
        verdicts=[ScanVerdict(check="krein_classical", verdict="infeasible")],
    )
    assert Report(input={}, scan=scan).violated


def test_reports_are_frozen() -> None:
    """Test immutability of report records."""
    value = LabeledValue(label="a", value=1.0)
    with pytest.raises(ValidationError):
        value.label = "b"


def test_family_spec_validation() -> None:
    """Test required laws, positive v and k coefficients and known law names."""
    with pytest.raises(ValidationError):
        FamilySpec(laws={"v": Law(c=1, e=1)})
    with pytest.raises(ValidationError):
        FamilySpec(laws={n: Law(c=1, e=1) for n in ("v", "k", "lambda", "mu", "rho")})
    with pytest.raises(ValidationError):
        Law(c=-1, e=1)
    spec = FamilySpec(laws={n: Law(c=1, e=1) for n in ("v", "k", "lambda", "mu", "sigma")})
    assert spec.checks == ["krein_classical"]


def test_settings_from_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test the ASRG_ environment prefix."""
    monkeypatch.setenv("ASRG_LOG_LEVEL", "DEBUG")
    monkeypatch.setenv("ASRG_MAX_SPECTRAL_ORDER", "500")
    settings = Settings(_env_file=None)
    assert settings.log_level == "DEBUG"
    assert settings.max_spectral_order == 500
    assert settings.bound_tolerance == 1e-9
