"""Tests for log-space arithmetic and the asymptotic family scanner."""

import math

import pytest
from asrg_core.errors import DomainError, InconsistentLaws, OverflowDespiteLogSpace
from asrg_core.types import FamilySpec, Law
from asrg_graphs import LogReal, family_scan
from asrg_graphs.logspace import signed_sum

TOY = FamilySpec(
    laws={
        "v": Law(c=1, e=11),
        "k": Law(c=1, e=10),
        "lambda": Law(c=1, e=1),
        "mu": Law(c=1, e=9),
    },
    checks=["krein_classical", "absolute_classical"],
)

CONFERENCE = FamilySpec(
    laws={
        "v": Law(c=1, e=1),
        "k": Law(c=0.5, e=1),
        "lambda": Law(c=0.25, e=1),
        "mu": Law(c=0.25, e=1),
    },
    checks=["krein_classical", "absolute_classical", "sigma_floor_krein"],
)


@pytest.mark.unit
def test_log_real_arithmetic() -> None:
    """Test signed sums, products and powers against plain floats."""
    a, b = LogReal.of(3.0), LogReal.of(-5.0)
    assert (a + b).to_float() == pytest.approx(-2.0)
    assert (a - b).to_float() == pytest.approx(8.0)
    assert (a * b).to_float() == pytest.approx(-15.0)
    assert (b / a).to_float() == pytest.approx(-5 / 3)
    assert b.power(3).to_float() == pytest.approx(-125.0)
    assert LogReal.of(16.0).sqrt().to_float() == pytest.approx(4.0)
    assert (a - a).sign == 0
    assert b.less_than(a)
    assert LogReal.monomial(2.0, 3, 10.0).to_float() == pytest.approx(2000.0)


@pytest.mark.unit
def test_log_real_beyond_double_range() -> None:
    """Test magnitudes far above 1e308 and cancellation between them."""
    big = LogReal.monomial(1.0, 11, 1e40)
    assert big.log10 == pytest.approx(440.0)
    assert big.to_float() is None
    assert big.to_value().value is None
    diff = signed_sum([big, -big, LogReal.of(1.0)])
    assert diff.to_float() == pytest.approx(1.0)
    with pytest.raises(OverflowDespiteLogSpace):
        LogReal(1, math.inf)
    with pytest.raises(ValueError):
        LogReal.of(-4.0).power(0.5)


@pytest.mark.unit
def test_toy_family_is_infeasible() -> None:
    """Test that the toy family fails both classical checks."""
    scan = family_scan(TOY, [1e2, 1e3, 1e4])
    assert scan.verdict("krein_classical") == "infeasible"
    assert scan.verdict("absolute_classical") == "infeasible"
    assert scan.infeasible
    assert all(sample.valid for sample in scan.samples)
    quantities = scan.samples[0].quantities
    assert quantities["s"].sign == -1
    assert quantities["r"].sign == 1


@pytest.mark.unit
def test_toy_family_far_out() -> None:
    """Test the scan where v no longer fits in a double."""
    scan = family_scan(TOY, [1e30, 1e35, 1e40])
    assert scan.samples[-1].quantities["v"].value is None
    assert scan.samples[-1].quantities["v"].log10 == pytest.approx(440.0)
    assert scan.verdict("krein_classical") == "infeasible"


@pytest.mark.unit
def test_conference_family_is_feasible() -> None:
    """Test a conference-type family that passes both classical checks."""
    scan = family_scan(CONFERENCE, [1e2, 1e4, 1e6])
    assert scan.verdict("krein_classical") == "feasible-at-all-samples"
    assert scan.verdict("absolute_classical") == "feasible-at-all-samples"
    assert not scan.infeasible
    sigma = next(v for v in scan.verdicts if v.check == "sigma_floor_krein")
    assert sigma.verdict == "undecided"
    assert sigma.notes == ["no sigma law"]
    with pytest.raises(KeyError):
        scan.verdict("krein_variant")


@pytest.mark.unit
def test_scan_sample_errors() -> None:
    """Test sample-list validation and families without admissible samples."""
    with pytest.raises(DomainError):
        family_scan(TOY, [1e2, 1e3])
    with pytest.raises(DomainError):
        family_scan(TOY, [1e2, 1e4, 1e3])
    with pytest.raises(DomainError):
        family_scan(TOY, [-1.0, 1e3, 1e4])
    complete = FamilySpec(
        laws={
            "v": Law(c=1, e=1),
            "k": Law(c=1, e=1),
            "lambda": Law(c=1, e=0),
            "mu": Law(c=1, e=0),
        }
    )
    with pytest.raises(InconsistentLaws):
        family_scan(complete, [10.0, 100.0, 1000.0])


@pytest.mark.unit
def test_invalid_samples_are_reported() -> None:
    """Test that a sample with k >= v - 1 is kept with its reason."""
    spec = FamilySpec(
        laws={
            "v": Law(c=1, e=2),
            "k": Law(c=2, e=1),
            "lambda": Law(c=0, e=0),
            "mu": Law(c=1, e=0),
        }
    )
    scan = family_scan(spec, [2.0, 10.0, 100.0])
    assert not scan.samples[0].valid
    assert scan.samples[0].reason == "k >= v - 1"
    assert scan.samples[1].valid


@pytest.mark.unit
def test_inadmissible_families_are_rejected() -> None:
    """Test that lambda >= k makes every sample invalid instead of feasible."""
    spec = FamilySpec(
        laws={
            "v": Law(c=2, e=2),
            "k": Law(c=1, e=2),
            "lambda": Law(c=4, e=2),
            "mu": Law(c=1, e=0),
        },
        checks=["absolute_classical"],
    )
    with pytest.raises(InconsistentLaws):
        family_scan(spec, [1e2, 1e3, 1e4])


@pytest.mark.unit
def test_admissible_samples_carry_both_multiplicities() -> None:
    """Test that early samples with lambda >= k are dropped and later ones keep f and g."""
    spec = FamilySpec(
        laws={
            "v": Law(c=2, e=2),
            "k": Law(c=1, e=2),
            "lambda": Law(c=4, e=1),
            "mu": Law(c=1, e=0),
        },
        checks=["absolute_classical"],
    )
    scan = family_scan(spec, [2.0, 10.0, 100.0, 1000.0])
    assert not scan.samples[0].valid
    assert scan.samples[0].reason == "lambda >= k"
    for sample in scan.samples[1:]:
        assert sample.valid
        assert sample.quantities["f"].sign == 1
        assert sample.quantities["g"].sign == 1
        labels = [e.label for e in sample.checks["absolute_classical"]]
        assert labels == ["f(f+3)/2 - v", "g(g+3)/2 - v"]


@pytest.mark.unit
def test_invalid_largest_sample_is_noted() -> None:
    """Test that a verdict names the samples it came from when the largest one is invalid."""
    spec = FamilySpec(
        laws={
            "v": Law(c=2, e=2),
            "k": Law(c=1, e=2),
            "lambda": Law(c=0, e=0),
            "mu": Law(c=0.001, e=3),
        },
        checks=["krein_classical", "absolute_classical"],
    )
    scan = family_scan(spec, [10.0, 100.0, 300.0, 1e4])
    assert scan.samples[-1].reason == "mu > k"
    assert all(sample.valid for sample in scan.samples[:-1])
    for item in scan.verdicts:
        assert item.notes[0] == "largest sample x=10000 is invalid; decided by x=100 and x=300"


@pytest.mark.unit
@pytest.mark.parametrize(
    ("spec", "short", "extended"),
    [
        (TOY, [1e2, 1e3, 1e4], [1e2, 1e3, 1e4, 1e6, 1e8, 1e12]),
        (CONFERENCE, [1e2, 1e4, 1e6], [1e2, 1e4, 1e6, 1e8, 1e10, 1e12]),
    ],
)
def test_verdicts_survive_larger_samples(
    spec: FamilySpec, short: list[float], extended: list[float]
) -> None:
    """Test that pushing the samples further out never turns infeasible into feasible."""
    before = family_scan(spec, short)
    after = family_scan(spec, extended)
    for item in before.verdicts:
        if item.verdict == "infeasible":
            assert after.verdict(item.check) != "feasible-at-all-samples"
    assert after.infeasible == before.infeasible
