"""Fixture battery runner: the acceptance checks as one evaluation pass."""

import logging
import time
from typing import Any

import networkx as nx
from asrg_core import Settings
from asrg_core.types import FamilySpec, Law
from asrg_geometry import cap_construct
from asrg_geometry.caps import CapKind
from asrg_graphs import (
    Graph,
    absolute_classical,
    asrg_stats,
    cap_graph_audit,
    e_matrix_report,
    family_scan,
    krein_classical,
    krein_variant,
    no_graph_only,
    regularity_classify,
    spectrum_report,
    srg_spectrum,
)

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

SRG_FIXTURES = [
    ("C5", lambda: Graph.from_networkx(nx.cycle_graph(5))),
    ("Petersen", lambda: Graph.from_networkx(nx.petersen_graph())),
    *(
        (f"NO({n},3,{eps:+d})", lambda n=n, eps=eps: no_graph_only(n, 3, eps))
        for n in (4, 5)
        for eps in (1, -1)
    ),
    ("NO(3,3,+1)", lambda: no_graph_only(3, 3, 1)),
]

CAP_FIXTURES: list[tuple[CapKind, int, int]] = [("conic", 2, 3), ("elliptic_quadric", 3, 3)]

TOY_FAMILY = FamilySpec(
    laws={
        "v": Law(c=1, e=11),
        "k": Law(c=1, e=10),
        "lambda": Law(c=1, e=1),
        "mu": Law(c=1, e=9),
    },
    checks=["krein_classical", "absolute_classical"],
)
TOY_SAMPLES = [1e2, 1e3, 1e4]


class BatteryRunner:
    """Runs the SRG, Krein-variant, trace, cap and scan batteries."""

    def __init__(self, settings: Settings, *, random_graphs: int = 50, seed: int = 0) -> None:
        """Initialize battery runner."""
        self.settings = settings
        self.random_graphs = random_graphs
        self.seed = seed

    def run(self) -> dict[str, Any]:
        """Run every battery and return the aggregate metrics."""
        start = time.time()
        metrics: dict[str, Any] = {}
        metrics["srg_pass_rate"] = self._srg_battery()
        metrics["krein_exact_pass_rate"] = self._krein_battery()
        metrics["trace_identity_max_rel_error"] = self._trace_battery()
        metrics["cap_identity_violations"] = self._cap_battery()
        metrics["toy_scan_infeasible"] = self._toy_scan()
        metrics["elapsed_s"] = time.time() - start
        return metrics

    def _srg_battery(self) -> float:
        tol = self.settings.bound_tolerance
        passed = 0
        for name, build in SRG_FIXTURES:
            g = build()
            reg = regularity_classify(g)
            ok = reg.kind == "srg"
            if ok:
                assert reg.k is not None and reg.lam is not None and reg.mu is not None
                srg = srg_spectrum(g.v, reg.k, reg.lam, reg.mu)
                stats = asrg_stats(g)
                ok = (
                    stats.sigma == 0
                    and krein_classical(g.v, reg.k, srg.r, srg.s, tolerance=tol).satisfied
                    and absolute_classical(g.v, srg.f, srg.g, tolerance=tol).satisfied
                )
            logger.info(f"srg fixture {name}: {'pass' if ok else 'FAIL'}")
            passed += ok
        return passed / len(SRG_FIXTURES)

    def _random_regular(self, index: int) -> Graph | None:
        v = 10 + (index * 7) % 51
        d = 3 + index % 5
        if v * d % 2:
            v += 1
        if v > 60:
            v -= 2
        g = nx.random_regular_graph(d, v, seed=self.seed + index)
        if not nx.is_connected(g):
            return None
        return Graph.from_networkx(g)

    def _krein_battery(self) -> float:
        checked = passed = 0
        for index in range(self.random_graphs):
            g = self._random_regular(index)
            if g is None:
                continue
            spectrum = spectrum_report(g, cluster_tolerance=self.settings.cluster_tolerance)
            k = g.regular_degree()
            assert k is not None
            if not k > spectrum.r > spectrum.s:
                continue
            report = krein_variant(g.v, k, spectrum.r, spectrum.s, "exact")
            checked += 1
            passed += report.satisfied
        logger.info(f"krein variant (exact): {passed}/{checked} random regular graphs")
        return passed / checked if checked else 1.0

    def _trace_battery(self) -> float:
        worst = 0.0
        graphs = [Graph.from_networkx(nx.cycle_graph(6))]
        graphs.extend(g for i in range(20) if (g := self._random_regular(i)) is not None)
        for g in graphs:
            stats = asrg_stats(g)
            report = e_matrix_report(g, stats, trace_tolerance=self.settings.trace_tolerance)
            worst = max(worst, report.trace_relative_error)
            if not report.bound_holds:
                logger.warning(f"trace bound v(v-1)sigma^2 fails on v={g.v}")
        return worst

    def _cap_battery(self) -> int:
        violations = 0
        for kind, n, q in CAP_FIXTURES:
            audit = cap_graph_audit(cap_construct(kind, n, q))
            violations += audit.identity_violations + (not audit.variance_identity_holds)
            logger.info(f"cap {kind} PG({n},{q}): {audit.identity_violations} violations")
        return violations

    def _toy_scan(self) -> bool:
        scan = family_scan(TOY_FAMILY, TOY_SAMPLES, tolerance=self.settings.bound_tolerance)
        return all(v.verdict == "infeasible" for v in scan.verdicts)


def main() -> None:
    """Main entry point."""
    settings = Settings()
    runner = BatteryRunner(settings)
    metrics = runner.run()

    logger.info("=== Battery Results ===")
    for key, value in metrics.items():
        logger.info(f"{key}: {value}")


if __name__ == "__main__":
    main()
