"""Tests for the fixture battery runner."""

import pytest
from app.evals import SRG_FIXTURES, BatteryRunner
from asrg_core import Settings


@pytest.mark.slow
def test_battery_metrics(settings: Settings) -> None:
    """Test a short battery run end to end."""
    metrics = BatteryRunner(settings, random_graphs=10, seed=1).run()
    assert set(metrics) == {
        "srg_pass_rate",
        "krein_exact_pass_rate",
        "trace_identity_max_rel_error",
        "cap_identity_violations",
        "toy_scan_infeasible",
        "elapsed_s",
    }
    assert metrics["srg_pass_rate"] >= 2 / len(SRG_FIXTURES)
    assert metrics["krein_exact_pass_rate"] == 1.0
    assert metrics["trace_identity_max_rel_error"] < 1e-6
    assert metrics["cap_identity_violations"] == 0
    assert metrics["toy_scan_infeasible"] is True
    assert metrics["elapsed_s"] >= 0
