"""Report assembly for the CLI subcommands."""

import logging
from collections.abc import Callable
from pathlib import Path
from typing import Literal

from asrg_core import InputError, Settings
from asrg_core.errors import Disconnected, DomainError
from asrg_core.types import (
    AsrgStats,
    BoundReport,
    Report,
    SigmaFloor,
    SpectrumReport,
    SrgSpectrum,
)
from asrg_geometry import Cap, cap_construct, cap_secant_profile, field_make, read_cap
from asrg_geometry.caps import CapKind
from asrg_graphs import (
    Graph,
    absolute_classical,
    absolute_variant,
    absolute_variant_from_spectrum,
    approx_eigenvalue,
    asrg_stats,
    cap_graph,
    cap_graph_audit,
    clique_report,
    e_matrix_report,
    exponent_bounds,
    family_scan,
    krein_classical,
    krein_variant,
    neighborhood_tower,
    no_graph,
    read_family,
    read_graph,
    regularity_classify,
    sigma_floor_absolute,
    sigma_floor_krein,
    spectrum_report,
    srg_spectrum,
    tower_step_check,
)
from asrg_graphs.bounds import ExponentKind, KreinMode
from asrg_graphs.spectral import ApproxCase

logger = logging.getLogger(__name__)

ReportInput = dict[str, str | int | float | bool | list[int] | list[float] | None]

BoundName = Literal[
    "krein-classical",
    "absolute-classical",
    "krein-variant",
    "absolute-variant",
    "sigma-floor-krein",
    "sigma-floor-absolute",
]
BOUND_NAMES: tuple[BoundName, ...] = (
    "krein-classical",
    "absolute-classical",
    "krein-variant",
    "absolute-variant",
    "sigma-floor-krein",
    "sigma-floor-absolute",
)


class GraphAnalysis:
    """Everything ``analyze`` and ``check`` measure on one graph.

    Stats, spectrum and the E-matrix report are filled in as far as the graph
    allows; anything skipped is recorded in ``flags``.
    """

    def __init__(self, g: Graph, settings: Settings) -> None:
        self.graph = g
        self.settings = settings
        self.flags: list[str] = []
        self.regularity = regularity_classify(g)
        self.stats: AsrgStats | None = None
        self.spectrum: SpectrumReport | None = None
        k = g.regular_degree()
        if k is None:
            self.flags.append("graph is irregular; stats and spectrum skipped")
            return
        self.k = k
        try:
            self.stats = asrg_stats(g)
        except InputError as e:
            self.flags.append(f"stats skipped: {e}")
        if g.v > settings.max_spectral_order:
            self.flags.append(f"v={g.v} above max_spectral_order; spectrum skipped")
        elif g.v >= 2:
            self.spectrum = spectrum_report(
                g,
                cluster_tolerance=settings.cluster_tolerance,
                max_order=settings.max_spectral_order,
                tolerance=settings.jacobi_tolerance,
                max_sweeps=settings.jacobi_max_sweeps,
                symmetry_tolerance=settings.symmetry_tolerance,
            )

    def _guard(self, name: str, build: Callable[[], BoundReport]) -> BoundReport | None:
        try:
            return build()
        except InputError as e:
            self.flags.append(f"{name} not applicable: {type(e).__name__}: {e}")
            return None

    def _restricted(self) -> tuple[float, float]:
        if self.spectrum is None:
            raise DomainError("no spectrum available")
        if not self.spectrum.connected:
            raise Disconnected("restricted eigenvalues need a connected graph")
        return self.spectrum.r, self.spectrum.s

    def bound(self, name: BoundName, mode: KreinMode = "exact") -> BoundReport | None:
        g, tol = self.graph, self.settings.bound_tolerance

        def build() -> BoundReport:
            match name:
                case "krein-classical":
                    srg = self.srg_parameters()
                    return krein_classical(g.v, srg.k, srg.r, srg.s, tolerance=tol)
                case "absolute-classical":
                    srg = self.srg_parameters()
                    return absolute_classical(g.v, srg.f, srg.g, tolerance=tol)
                case "krein-variant":
                    r, s = self._restricted()
                    return krein_variant(g.v, self.k, r, s, mode, tolerance=tol)
                case "absolute-variant":
                    self._restricted()
                    assert self.spectrum is not None
                    return absolute_variant_from_spectrum(g.v, self.k, self.spectrum, tolerance=tol)
            raise DomainError(f"{name} is not an inequality check")

        return self._guard(name, build)

    def srg_parameters(self) -> SrgSpectrum:
        reg = self.regularity
        if reg.kind != "srg" or reg.k is None or reg.lam is None or reg.mu is None:
            raise DomainError("classical bounds need a strongly regular graph")
        if self.spectrum is not None and not self.spectrum.connected:
            raise Disconnected("classical bounds need a connected strongly regular graph")
        return srg_spectrum(reg.v, reg.k, reg.lam, reg.mu)

    def sigma_floors(self) -> list[SigmaFloor]:
        if self.stats is None:
            return []
        st = self.stats
        lam, mu = float(st.lambda_mean), float(st.mu_mean)
        if mu > lam:
            return [sigma_floor_krein(st.v, st.k, lam, mu, sigma=st.sigma)]
        if lam > mu:
            return [sigma_floor_absolute(st.v, st.k, lam, mu, sigma=st.sigma)]
        return []


def analyze_graph(path: Path, settings: Settings) -> Report:
    """Stats, spectrum, E-matrix pairing and every applicable bound for one graph file."""
    g = read_graph(path)
    logger.info(f"analyzing {path}: v={g.v}, edges={g.edge_count}")
    analysis = GraphAnalysis(g, settings)
    e_matrix = None
    if analysis.stats is not None and analysis.spectrum is not None:
        e_matrix = e_matrix_report(
            g,
            analysis.stats,
            trace_tolerance=settings.trace_tolerance,
            max_order=settings.max_spectral_order,
        )
    srg = None
    if analysis.regularity.kind == "srg":
        try:
            srg = analysis.srg_parameters()
        except InputError as e:
            analysis.flags.append(f"srg spectrum skipped: {type(e).__name__}: {e}")
    bounds: list[BoundReport] = []
    if analysis.spectrum is not None:
        candidates = [
            analysis.bound("krein-classical") if srg is not None else None,
            analysis.bound("absolute-classical") if srg is not None else None,
            analysis.bound("krein-variant", "exact"),
            analysis.bound("krein-variant", "paper"),
            analysis.bound("absolute-variant"),
        ]
        bounds = [b for b in candidates if b is not None]
    return Report(
        input={"command": "analyze", "graph": str(path)},
        stats=analysis.stats,
        spectrum=analysis.spectrum,
        e_matrix=e_matrix,
        bounds=bounds,
        flags=analysis.flags,
        regularity=analysis.regularity,
        srg_spectrum=srg,
        sigma_floors=analysis.sigma_floors(),
    )


def check_graph(path: Path, name: BoundName, mode: KreinMode, settings: Settings) -> Report:
    """One named bound on one graph file."""
    g = read_graph(path)
    analysis = GraphAnalysis(g, settings)
    bounds: list[BoundReport] = []
    floors: list[SigmaFloor] = []
    if name.startswith("sigma-floor"):
        floors = [f for f in analysis.sigma_floors() if f.name == name.replace("-", "_")]
        if not floors:
            analysis.flags.append(f"{name} hypotheses do not hold for this graph")
    else:
        report = analysis.bound(name, mode)
        if report is None:
            raise DomainError(analysis.flags[-1])
        bounds = [report]
    return Report(
        input={"command": "check", "graph": str(path), "bound": name, "mode": mode},
        stats=analysis.stats,
        spectrum=analysis.spectrum,
        bounds=bounds,
        flags=analysis.flags,
        regularity=analysis.regularity,
        sigma_floors=floors,
    )


def check_params(
    name: BoundName, params: dict[str, float], mode: KreinMode, settings: Settings
) -> Report:
    """One named bound on explicit parameters."""

    def need(*keys: str) -> list[float]:
        missing = [key for key in keys if key not in params]
        if missing:
            raise DomainError(f"{name} needs parameters {', '.join(missing)}")
        return [params[key] for key in keys]

    tol = settings.bound_tolerance
    bounds: list[BoundReport] = []
    floors: list[SigmaFloor] = []
    sigma = params.get("sigma")
    match name:
        case "krein-classical":
            v, k, r, s = need("v", "k", "r", "s")
            bounds.append(krein_classical(v, k, r, s, tolerance=tol))
        case "absolute-classical":
            v, f, g = need("v", "f", "g")
            bounds.append(absolute_classical(v, f, g, tolerance=tol))
        case "krein-variant":
            v, k, r, s = need("v", "k", "r", "s")
            bounds.append(krein_variant(v, k, r, s, mode, tolerance=tol))
        case "absolute-variant":
            v, k, r, s, eps, f1, f2 = need("v", "k", "r", "s", "eps", "f1", "f2")
            bounds.append(absolute_variant(v, k, r, s, eps, int(f1), int(f2), tolerance=tol))
        case "sigma-floor-krein":
            v, k, lam, mu = need("v", "k", "lambda", "mu")
            floors.append(sigma_floor_krein(v, k, lam, mu, sigma=sigma))
        case "sigma-floor-absolute":
            v, k, lam, mu = need("v", "k", "lambda", "mu")
            floors.append(sigma_floor_absolute(v, k, lam, mu, sigma=sigma))
    inputs: ReportInput = {"command": "check", "bound": name, "mode": mode}
    inputs.update(params)
    return Report(input=inputs, bounds=bounds, sigma_floors=floors)


def scan_family(path: Path, samples: list[float], settings: Settings) -> Report:
    spec = read_family(path)
    scan = family_scan(spec, samples, tolerance=settings.bound_tolerance)
    return Report(
        input={"command": "scan", "family": str(path), "samples": samples},
        scan=scan,
    )


def field_info(q: int, settings: Settings) -> Report:
    field = field_make(q, settings.max_field_order)
    return Report(input={"command": "field-info", "q": q}, field=field.info())


def build_no_graph(
    n: int, q: int, eps: int, settings: Settings, *, with_clique: bool, tower: bool
) -> tuple[Graph, Report]:
    g, construction = no_graph(
        n,
        q,
        eps,
        max_order=settings.max_no_graph_order,
        with_clique=with_clique,
        clique_limit=settings.clique_node_budget,
    )
    step = tower_step_check(n, q, eps, max_order=settings.max_no_graph_order) if tower else None
    flags = list(construction.flags) + (list(step.flags) if step is not None else [])
    report = Report(
        input={"command": "no-graph", "n": n, "q": q, "eps": eps},
        stats=construction.stats,
        regularity=construction.regularity,
        construction=construction,
        tower_step=step,
        flags=flags,
    )
    return g, report


def load_cap(
    settings: Settings,
    path: Path | None = None,
    kind: CapKind | None = None,
    n: int | None = None,
    q: int | None = None,
    seed: int = 0,
) -> Cap:
    """A cap from a file or from one of the constructions."""
    if path is not None:
        return read_cap(path)
    if kind is None or n is None or q is None:
        raise DomainError("give either a cap file or a kind with n and q")
    field_make(q, settings.max_field_order)
    return cap_construct(kind, n, q, seed, max_points=settings.max_pg_points)


def cap_report(cap: Cap, inputs: ReportInput) -> Report:
    profile = cap_secant_profile(cap)
    return Report(input={"command": "cap", **inputs}, cap_profile=profile.to_report())


def cap_graph_report(
    cap: Cap, inputs: ReportInput, settings: Settings
) -> tuple[Graph, Report]:
    g = cap_graph(cap, max_order=settings.max_construction_order)
    profile = cap_secant_profile(cap)
    audit = cap_graph_audit(cap, g, profile=profile)
    return g, Report(
        input={"command": "cap-graph", **inputs},
        stats=audit.stats,
        cap_profile=profile.to_report(),
        cap_audit=audit,
        flags=list(audit.flags),
    )


def tower_report(
    path: Path, m: int, i: int, clique: list[int] | None, settings: Settings
) -> Report:
    g = read_graph(path)
    level = neighborhood_tower(
        g,
        m,
        i,
        clique,
        cluster_tolerance=settings.cluster_tolerance,
        max_order=settings.max_spectral_order,
    )
    return Report(
        input={"command": "tower", "graph": str(path), "m": m, "i": i, "clique": clique},
        tower_level=level,
        flags=list(level.flags),
    )


def clique_graph_report(path: Path, settings: Settings, limit: int | None = None) -> Report:
    g = read_graph(path)
    report = clique_report(
        g, limit or settings.clique_node_budget, max_order=settings.max_clique_order
    )
    return Report(input={"command": "clique", "graph": str(path)}, clique=report)


def exponent_report(kind: ExponentKind, args: dict[str, float]) -> Report:
    inputs: ReportInput = {"command": "exponent", "kind": kind}
    inputs.update(args)
    return Report(input=inputs, exponent=exponent_bounds(kind, **args))


def approx_report(case: ApproxCase, k: float, lam: float, mu: float, nu: float) -> Report:
    return Report(
        input={"command": "approx", "case": case, "k": k, "lambda": lam, "mu": mu, "nu": nu},
        approx=approx_eigenvalue(case, k, lam, mu, nu),
    )


def render_text(report: Report) -> str:
    """Short human-readable summary: one line per populated section."""
    data = report.model_dump(mode="json", by_alias=True, exclude_none=True)
    lines = [f"schema: {data.pop('schema')}"]
    for key, value in data.items():
        if value in ([], {}):
            continue
        if key == "bounds":
            for bound in report.bounds:
                state = "ok" if bound.satisfied else "VIOLATED"
                tag = "" if bound.certified else " (uncertified)"
                lines.append(f"bound {bound.name}{tag}: {state}, margin {bound.margin:.6g}")
        elif key == "flags":
            lines.extend(f"flag: {flag}" for flag in report.flags)
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"
