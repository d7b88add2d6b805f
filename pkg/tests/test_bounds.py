"""Tests for the feasibility bounds, sigma floors and exponents."""

from fractions import Fraction

import pytest
from asrg_core.errors import Disconnected, DomainError
from asrg_graphs import (
    Graph,
    absolute_classical,
    absolute_variant,
    absolute_variant_from_spectrum,
    exponent_bounds,
    krein_classical,
    krein_variant,
    sigma_floor_absolute,
    sigma_floor_krein,
    spectrum_report,
)
from asrg_graphs.bounds import ExponentKind


@pytest.mark.unit
def test_krein_classical_petersen() -> None:
    """Test both classical Krein expressions on SRG(10, 3, 0, 1)."""
    report = krein_classical(10, 3, 1, -2)
    values = [e.value for e in report.expressions]
    assert values == [pytest.approx(5 / 36), pytest.approx(8 / 9)]
    assert report.satisfied
    assert report.certified
    assert report.margin == pytest.approx(5 / 36)


@pytest.mark.unit
def test_krein_classical_domain() -> None:
    """Test the admissibility guard v > k + 1 > 1 and r >= 0 > s."""
    with pytest.raises(DomainError):
        krein_classical(4, 3, 1, -1)
    with pytest.raises(DomainError):
        krein_classical(10, 3, -0.5, -2)


@pytest.mark.unit
def test_absolute_classical_petersen() -> None:
    """Test the absolute bound slacks 10 and 4 on Petersen."""
    report = absolute_classical(10, 5, 4)
    assert [e.value for e in report.expressions] == [10, 4]
    assert report.satisfied
    violated = absolute_classical(100, 5, 4)
    assert not violated.satisfied
    assert violated.margin == -86


@pytest.mark.unit
def test_krein_variant_modes() -> None:
    """Test the printed and the doubled cross term on Petersen's spectrum."""
    paper = krein_variant(10, 3, 1, -2, "paper")
    exact = krein_variant(10, 3, 1, -2, "exact")
    assert [e.value for e in paper.expressions] == [-4, 35]
    assert [e.value for e in exact.expressions] == [2, 20]
    assert not paper.satisfied
    assert not paper.certified
    assert exact.satisfied
    assert exact.certified
    assert exact.notes == ["cross-term coefficient c = 2"]


@pytest.mark.unit
def test_krein_variant_pentagon(c5: Graph) -> None:
    """Test that C5 meets both exact expressions with equality."""
    spectrum = spectrum_report(c5)
    report = krein_variant(5, 2, spectrum.r, spectrum.s, "exact")
    assert all(abs(e.value) < 1e-9 for e in report.expressions)
    assert report.satisfied
    with pytest.raises(DomainError):
        krein_variant(5, 2, 2, -1)


@pytest.mark.unit
def test_absolute_variant_gates() -> None:
    """Test the printed gate, the proof gate and the conclusion."""
    report = absolute_variant(10, 3, 1, -2, 0.5, 5, 6)
    assert report.expressions[0].value == 27
    assert [g.value for g in report.gates] == [1.5, 1.75]
    assert report.applicable and report.certified and report.satisfied

    failing = absolute_variant(50, 7, 2, -3, 0.5, 6, 6)
    assert failing.expressions[0].value == -14
    assert not failing.satisfied
    assert failing.certified

    closed = absolute_variant(50, 7, 2, -1.2, 0.5, 6, 6)
    assert not closed.applicable
    assert closed.satisfied
    assert not closed.certified

    uncertified = absolute_variant(50, 7, 2, -2, 1.9, 6, 6)
    assert uncertified.applicable
    assert not uncertified.certified
    assert uncertified.notes == ["proof gate eps^2 < s^2 + s fails; conclusion uncertified"]


@pytest.mark.unit
def test_absolute_variant_from_spectrum(petersen: Graph, two_triangles: Graph, c5: Graph) -> None:
    """Test reading r, s, f1, f2 off a clustered spectrum."""
    report = absolute_variant_from_spectrum(10, 3, spectrum_report(petersen))
    assert report.inputs["f1"] == 5
    assert report.inputs["f2"] == 6
    assert report.expressions[0].value == 27
    assert report.satisfied
    with pytest.raises(Disconnected):
        absolute_variant_from_spectrum(6, 2, spectrum_report(two_triangles))
    k4 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    with pytest.raises(DomainError):
        absolute_variant_from_spectrum(4, 3, spectrum_report(k4))
    assert absolute_variant_from_spectrum(5, 2, spectrum_report(c5)).inputs["f1"] == 2


@pytest.mark.unit
def test_sigma_floor_krein() -> None:
    """Test the Krein floor (mu-lambda)^{3/2}/v on the toy family at x = 10."""
    floor = sigma_floor_krein(1e11, 1e10, 10.0, 1e9)
    assert floor.value == pytest.approx((1e9 - 10) ** 1.5 / 1e11)
    assert floor.value == pytest.approx(316.2, rel=1e-3)
    labels = [d.label for d in floor.diagnostics]
    assert labels == ["k/v", "k/(mu-lambda)^1.5"]
    with pytest.raises(DomainError):
        sigma_floor_krein(10, 3, 1, 1)


@pytest.mark.unit
def test_sigma_floor_absolute() -> None:
    """Test the absolute floor k/(3v) and its hypothesis diagnostic."""
    floor = sigma_floor_absolute(100, 30, 20, 2, sigma=0.5)
    assert floor.value == pytest.approx(0.1)
    assert floor.measured_sigma == 0.5
    assert floor.diagnostics[0].value == pytest.approx(10 * 30 / 18**2)
    assert floor.notes == []
    assert sigma_floor_absolute(100, 30, 5, 2).notes
    with pytest.raises(DomainError):
        sigma_floor_absolute(100, 30, 2, 5)


@pytest.mark.unit
@pytest.mark.parametrize(
    ("kind", "args", "expected"),
    [
        ("cap", {"n": 10}, Fraction(49, 6)),
        ("cap_uniform", {"n": 5}, Fraction(7, 2)),
        ("cap_trivial", {"n": 4}, Fraction(3)),
        ("ak", {"m": 3}, Fraction(2, 3)),
        ("opt_i", {"m": 5}, Fraction(9, 11)),
        ("opt_ii", {"m": 5}, Fraction(5, 6)),
        ("general_abstract", {"m": 4, "i": 1}, Fraction(4, 5)),
    ],
)
def test_exponent_values(kind: ExponentKind, args: dict[str, float], expected: Fraction) -> None:
    """Test the exact exponents."""
    report = exponent_bounds(kind, **args)
    assert report.value == expected
    assert report.value_real == pytest.approx(float(expected))


@pytest.mark.unit
def test_cap_exponent_beats_trivial_from_six() -> None:
    """Test that 5n/6 - 1/6 < n - 1 exactly when n >= 6."""
    for n in range(2, 20):
        cap = exponent_bounds("cap", n=n).value
        trivial = exponent_bounds("cap_trivial", n=n).value
        assert cap is not None and trivial is not None
        assert (cap < trivial) == (n >= 6)
    assert exponent_bounds("cap", n=5).value == exponent_bounds("cap_trivial", n=5).value


@pytest.mark.unit
def test_exponent_errors() -> None:
    """Test missing, non-integer and out-of-range arguments."""
    with pytest.raises(DomainError):
        exponent_bounds("cap")
    with pytest.raises(DomainError):
        exponent_bounds("ak", m=3.5)
    with pytest.raises(DomainError):
        exponent_bounds("opt_i", m=4)
    with pytest.raises(DomainError):
        exponent_bounds("general_abstract", m=4, i=2)
    sigma = exponent_bounds("cap_sigma", t=10, q=3, n=4)
    assert sigma.value is None
    assert sigma.value_real == pytest.approx(1000 * 3.0**-9.5)
