"""Tests for the Jacobi eigensolver, spectra and the deviation matrix."""

from fractions import Fraction

import networkx as nx
import numpy as np
import pytest
from asrg_core.errors import (
    DomainError,
    HypothesisViolated,
    NoConvergence,
    NotRegular,
    NotSymmetric,
    TooLarge,
)
from asrg_graphs import (
    Graph,
    approx_eigenvalue,
    asrg_stats,
    e_matrix_report,
    eigh,
    form_classify,
    spectrum_report,
    srg_spectrum,
)


@pytest.mark.unit
@pytest.mark.parametrize("n", [1, 2, 5, 12, 30])
def test_eigh_matches_numpy(n: int) -> None:
    """Test eigenvalues and eigenvectors against numpy on random symmetric matrices."""
    rng = np.random.default_rng(n)
    a = rng.normal(size=(n, n))
    s = a + a.T
    values, vecs = eigh(s)
    assert np.allclose(values, np.sort(np.linalg.eigvalsh(s))[::-1], atol=1e-9)
    assert np.allclose(vecs.T @ vecs, np.eye(n), atol=1e-9)
    assert np.allclose(s @ vecs, vecs * values, atol=1e-8)
    assert all(values[i] >= values[i + 1] for i in range(n - 1))


@pytest.mark.unit
def test_eigh_errors() -> None:
    """Test shape, symmetry, size and sweep-limit failures."""
    with pytest.raises(NotSymmetric):
        eigh(np.zeros((2, 3)))
    with pytest.raises(NotSymmetric):
        eigh([[0.0, 1.0], [2.0, 0.0]])
    with pytest.raises(TooLarge):
        eigh(np.eye(5), max_order=4)
    with pytest.raises(NoConvergence):
        eigh([[0.0, 1.0], [1.0, 0.0]], max_sweeps=0)
    with pytest.raises(DomainError):
        eigh([[np.nan]])


@pytest.mark.unit
def test_petersen_spectrum(petersen: Graph) -> None:
    """Test the spectrum 3, 1^5, (-2)^4 and the trace residuals."""
    report = spectrum_report(petersen)
    assert report.connected
    assert report.k_mult == 1
    assert report.r == pytest.approx(1.0)
    assert report.s == pytest.approx(-2.0)
    assert [c.multiplicity for c in report.clusters] == [1, 5, 4]
    assert abs(report.trace_residual) < 1e-9
    assert abs(report.square_trace_residual) < 1e-9


@pytest.mark.unit
def test_disconnected_spectrum(two_triangles: Graph) -> None:
    """Test that a repeated top eigenvalue marks the graph disconnected."""
    report = spectrum_report(two_triangles)
    assert report.k_mult == 2
    assert not report.connected
    with pytest.raises(NotRegular):
        spectrum_report(Graph.from_edges(3, [(0, 1)]))


@pytest.mark.unit
def test_atlas_spectra() -> None:
    """Test every connected regular graph of the networkx atlas against numpy."""
    checked = 0
    for nxg in nx.graph_atlas_g()[1:]:
        degrees = {d for _, d in nxg.degree()}
        if len(degrees) != 1 or nxg.number_of_nodes() < 2 or not nx.is_connected(nxg):
            continue
        g = Graph.from_networkx(nxg)
        report = spectrum_report(g)
        expected = np.sort(np.linalg.eigvalsh(nx.to_numpy_array(nxg)))[::-1]
        assert np.allclose(report.eigenvalues, expected, atol=1e-9)
        assert report.k_mult == 1
        checked += 1
    assert checked > 10


@pytest.mark.unit
@pytest.mark.parametrize(
    ("params", "r", "s", "f", "g"),
    [
        ((10, 3, 0, 1), 1, -2, 5, 4),
        ((45, 12, 3, 3), 3, -3, 20, 24),
        ((16, 6, 2, 2), 2, -2, 6, 9),
    ],
)
def test_srg_spectrum_integral(
    params: tuple[int, int, int, int], r: int, s: int, f: int, g: int
) -> None:
    """Test eigenvalues and multiplicities of integral parameter sets."""
    srg = srg_spectrum(*params)
    assert (srg.r, srg.s) == (pytest.approx(r), pytest.approx(s))
    assert (srg.f_exact, srg.g_exact) == (f, g)
    assert srg.integral
    assert abs(srg.trace_residual) < 1e-9
    assert abs(srg.count_residual) < 1e-9


@pytest.mark.unit
def test_srg_spectrum_conference() -> None:
    """Test the pentagon, whose eigenvalues are irrational with f = g = 2."""
    srg = srg_spectrum(5, 2, 0, 1)
    assert srg.f_exact == Fraction(2)
    assert srg.g_exact == Fraction(2)
    assert srg.r == pytest.approx((5**0.5 - 1) / 2)
    assert abs(srg.trace_residual) < 1e-9


@pytest.mark.unit
def test_srg_spectrum_domain() -> None:
    """Test inadmissible parameter sets."""
    with pytest.raises(DomainError):
        srg_spectrum(10, 3, 3, 1)
    with pytest.raises(DomainError):
        srg_spectrum(10, 10, 0, 1)
    with pytest.raises(DomainError):
        srg_spectrum(10, 3, 0, 4)


@pytest.mark.unit
def test_c6_e_matrix(c6: Graph) -> None:
    """Test the nu pairing, the trace identity and the variance bound on C6."""
    stats = asrg_stats(c6)
    report = e_matrix_report(c6, stats)
    nus = sorted(round(rec.nu, 9) for rec in report.records)
    assert nus == [-1.0, -1.0, round(1 / 3, 9), round(1 / 3, 9), round(4 / 3, 9)]
    assert report.trace_lhs == pytest.approx(4.0)
    assert report.trace_rhs_exact == 4
    assert report.bound_rhs == Fraction(20, 3)
    assert report.trace_identity_holds
    assert report.bound_holds
    assert report.max_pairing_residual is not None
    assert report.max_pairing_residual < 1e-8
    forms = {round(rec.u): rec.form for rec in report.records}
    assert forms == {1: "positive", -1: "negative", -2: "negative"}


@pytest.mark.unit
def test_e_matrix_random_regular() -> None:
    """Test the trace identity on random regular graphs."""
    for seed in range(3):
        g = Graph.from_networkx(nx.random_regular_graph(5, 20, seed=seed))
        report = e_matrix_report(g, asrg_stats(g))
        assert report.trace_identity_holds
        assert report.bound_holds


@pytest.mark.unit
def test_form_classify_tie() -> None:
    """Test that u = (lambda - mu)/2 counts as positive."""
    assert form_classify(-0.5, Fraction(0), Fraction(1)) == "positive"
    assert form_classify(-0.6, Fraction(0), Fraction(1)) == "negative"


@pytest.mark.unit
def test_approx_eigenvalue_cases() -> None:
    """Test the leading-order values next to the stable exact roots."""
    ii = approx_eigenvalue("ii", 1e6, 0.0, 1e4, 0.0)
    assert ii.value == pytest.approx(-1e4)
    assert ii.exact_root == pytest.approx(-10098.04, rel=1e-6)
    assert ii.relative_gap < 0.01
    iii = approx_eigenvalue("iii", 1e9, 1e6, 0.0, 0.0)
    assert iii.value == pytest.approx(1e6)
    assert iii.exact_root == pytest.approx(1.000999e6, rel=1e-6)
    v = approx_eigenvalue("v", 100.0, 1.0, 1.0, 0.0)
    assert v.order_of_magnitude_only
    assert v.value == pytest.approx(10.0)


@pytest.mark.unit
def test_approx_eigenvalue_hypotheses() -> None:
    """Test the ordering hypotheses of the four exact-order cases."""
    with pytest.raises(HypothesisViolated) as info:
        approx_eigenvalue("i", 100.0, 5.0, 1.0, 0.0)
    assert info.value.inequality == "mu > lambda"
    with pytest.raises(HypothesisViolated):
        approx_eigenvalue("iv", 100.0, 1.0, 5.0, 0.0)
