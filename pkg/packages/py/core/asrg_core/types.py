"""Core report types shared by the geometry, graph and CLI layers."""

import math
from fractions import Fraction
from typing import Annotated, Any, Literal

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PlainSerializer,
    PlainValidator,
    WithJsonSchema,
    model_validator,
)

SCHEMA_VERSION = "asrg-report/1"
# Top-level report keys that are always present, null when not computed.
REQUIRED_SECTIONS = ("stats", "spectrum", "e_matrix")


def _to_fraction(value: Any) -> Fraction:
    """Accept Fraction, int, "p/q" strings and ``{"num", "den"}`` dicts."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    try:
        if isinstance(value, dict):
            return Fraction(int(value["num"]), int(value["den"]))
        if isinstance(value, str):
            return Fraction(value)
    except (KeyError, TypeError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational: {value!r}") from e
    raise ValueError(f"not a rational: {value!r}")


def _rational_json(value: Fraction) -> dict[str, int]:
    return {"num": value.numerator, "den": value.denominator}


def _round12(value: float) -> float:
    if not math.isfinite(value):
        return value
    return float(f"{value:.12g}")


Rational = Annotated[
    Fraction,
    PlainValidator(_to_fraction),
    PlainSerializer(_rational_json, return_type=dict[str, int]),
    WithJsonSchema(
        {
            "type": "object",
            "properties": {"num": {"type": "integer"}, "den": {"type": "integer"}},
            "required": ["num", "den"],
        }
    ),
]
"""Exact rational, serialized as ``{"num": ..., "den": ...}``."""

Real = Annotated[float, PlainSerializer(_round12, return_type=float)]
"""Float serialized with 12 significant digits."""

FormLabel = Literal["positive", "negative"]
Verdict = Literal["infeasible", "feasible-at-all-samples", "undecided"]
CheckName = Literal[
    "krein_classical",
    "absolute_classical",
    "krein_variant",
    "krein_variant_paper",
    "sigma_floor_krein",
    "sigma_floor_absolute",
]


class FrozenModel(BaseModel):
    """Immutable report record."""

    model_config = ConfigDict(frozen=True)


class LabeledValue(FrozenModel):
    """A named real quantity inside a report."""

    label: str
    value: Real


class FieldInfo(FrozenModel):
    """Summary of a constructed finite field."""

    q: int
    p: int
    e: int
    modulus: list[int] = Field(..., description="Monic modulus, constant term first")
    gamma: int | None = Field(None, description="+1 if q = 1 mod 4, -1 if q = 3 mod 4")
    primitive: int = Field(..., description="Index of the primitive element used for exp/log")
    squares: list[int] = Field(default_factory=list, description="Indices of nonzero squares")


class AsrgStats(FrozenModel):
    """The tuple (v, k, lambda, mu; sigma) with exact pair statistics.

    Means and variances run over ordered pairs: |Lambda| = vk adjacent pairs and
    |M| = v(v-1) - vk distinct nonadjacent pairs.
    """

    v: int
    k: int
    lambda_mean: Rational
    lambda_var: Rational
    mu_mean: Rational
    mu_var: Rational
    lambda_pairs: int
    mu_pairs: int
    lambda_sq_dev: Rational = Field(..., description="Sum over Lambda of (lambda_ab - mean)^2")
    mu_sq_dev: Rational = Field(..., description="Sum over M of (mu_ab - mean)^2")
    lambda_min: int
    lambda_max: int
    mu_min: int
    mu_max: int
    sigma: Real

    @property
    def sigma_squared(self) -> Fraction:
        return max(self.lambda_var, self.mu_var)

    @property
    def is_strongly_regular(self) -> bool:
        return self.lambda_var == 0 and self.mu_var == 0

    def identity_holds(self) -> bool:
        """(v-k-1) mu = k (k - lambda - 1), exactly."""
        return (self.v - self.k - 1) * self.mu_mean == self.k * (self.k - self.lambda_mean - 1)


class Regularity(FrozenModel):
    """Strongest regularity class of a graph."""

    kind: Literal["irregular", "regular", "edge_regular", "srg"]
    v: int
    k: int | None = None
    lam: int | None = None
    mu: int | None = None


class MixingWindow(FrozenModel):
    """Expander-mixing sandwich for the edges induced on a vertex set."""

    y: int
    lo: Real
    hi: Real
    e: int
    contained: bool


class EigenCluster(FrozenModel):
    value: Real
    multiplicity: int


class SpectrumReport(FrozenModel):
    """Adjacency spectrum of a regular graph, eigenvalues descending."""

    eigenvalues: list[Real]
    k_mult: int
    connected: bool
    r: Real = Field(..., description="Second largest eigenvalue u_2")
    s: Real = Field(..., description="Smallest eigenvalue u_v")
    clusters: list[EigenCluster]
    cluster_tolerance: Real
    trace_residual: Real = Field(..., description="sum u_i")
    square_trace_residual: Real = Field(..., description="sum u_i^2 - vk")


class SrgSpectrum(FrozenModel):
    """Eigenvalues and multiplicities implied by SRG parameters."""

    v: int
    k: int
    lam: int
    mu: int
    r: Real
    s: Real
    f: Real
    g: Real
    f_exact: Rational | None = None
    g_exact: Rational | None = None
    integral: bool
    trace_residual: Real = Field(..., description="k + f r + g s")
    count_residual: Real = Field(..., description="1 + f + g - v")


class EigenRecord(FrozenModel):
    """A restricted eigenvalue u of A paired with the eigenvalue nu of E."""

    u: Real
    nu: Real
    form: FormLabel
    nu_rayleigh: Real | None = Field(None, description="chi^T E chi on the computed eigenvector")


class EMatrixReport(FrozenModel):
    """Deviation matrix E = A^2 - kI - lambda A - mu (J - I - A) seen two ways."""

    lambda_mean: Rational
    mu_mean: Rational
    records: list[EigenRecord]
    trace_lhs: Real = Field(..., description="Sum of nu_i^2 over restricted eigenvalues")
    trace_rhs_exact: Rational = Field(..., description="Pair-counted trace of E^2")
    bound_rhs: Rational = Field(..., description="v(v-1) sigma^2")
    trace_relative_error: Real
    trace_identity_holds: bool
    bound_holds: bool
    max_pairing_residual: Real | None = None


class ApproxEigenvalue(FrozenModel):
    """Leading-order eigenvalue estimate next to the exact quadratic root."""

    case: str
    value: Real
    exact_root: Real
    relative_gap: Real
    order_of_magnitude_only: bool
    diagnostics: list[LabeledValue] = Field(default_factory=list)


class BoundReport(FrozenModel):
    """One evaluated bound.

    ``satisfied`` holds when the report is not applicable, or when every
    expression value is at least ``-tolerance * scale``.
    """

    name: str
    mode: str | None = None
    inputs: dict[str, Real]
    expressions: list[LabeledValue]
    gates: list[LabeledValue] = Field(default_factory=list)
    applicable: bool = True
    certified: bool = True
    satisfied: bool
    margin: Real
    scale: Real
    notes: list[str] = Field(default_factory=list)


class SigmaFloor(FrozenModel):
    """Asymptotic lower bound on sigma with its hypothesis diagnostics."""

    name: str
    value: Real
    inputs: dict[str, Real]
    diagnostics: list[LabeledValue] = Field(default_factory=list)
    measured_sigma: Real | None = None
    notes: list[str] = Field(default_factory=list)


class Law(FrozenModel):
    """Monomial parameter law c * x^e."""

    c: float = Field(..., ge=0.0)
    e: Rational


class FamilySpec(FrozenModel):
    """Asymptotic parameter family for the scanner."""

    var: str = "x"
    laws: dict[str, Law]
    checks: list[CheckName] = Field(default_factory=lambda: ["krein_classical"])

    @model_validator(mode="after")
    def _required_laws(self) -> "FamilySpec":
        missing = [name for name in ("v", "k", "lambda", "mu") if name not in self.laws]
        if missing:
            raise ValueError(f"missing laws: {', '.join(missing)}")
        for name in ("v", "k"):
            if self.laws[name].c <= 0:
                raise ValueError(f"law {name} needs a positive coefficient")
        unknown = set(self.laws) - {"v", "k", "lambda", "mu", "sigma"}
        if unknown:
            raise ValueError(f"unknown laws: {', '.join(sorted(unknown))}")
        return self


class LogValue(FrozenModel):
    """Signed log-magnitude number: sign * 10^log10."""

    sign: int
    log10: Real
    value: Real | None = Field(None, description="Plain float when representable")


class ScanExpression(FrozenModel):
    label: str
    value: LogValue


class ScanSample(FrozenModel):
    x: Real
    valid: bool
    reason: str | None = None
    quantities: dict[str, LogValue] = Field(default_factory=dict)
    checks: dict[str, list[ScanExpression]] = Field(default_factory=dict)


class ScanVerdict(FrozenModel):
    check: str
    verdict: Verdict
    notes: list[str] = Field(default_factory=list)


class ScanReport(FrozenModel):
    family: FamilySpec
    samples: list[ScanSample]
    verdicts: list[ScanVerdict]

    @property
    def infeasible(self) -> bool:
        return any(v.verdict == "infeasible" for v in self.verdicts)

    def verdict(self, check: str) -> Verdict:
        for item in self.verdicts:
            if item.check == check:
                return item.verdict
        raise KeyError(check)


class NoFormulaParams(FrozenModel):
    """Printed parameter displays for an orthogonality graph."""

    vector_dim: int
    q: int
    eps: int
    gamma: int
    m: int
    v: Rational
    k: Rational
    lam: Rational
    mu: Rational
    mu_stated: bool = Field(..., description="True where the printed mu applies")
    mu_range: tuple[Rational, Rational]
    clique_number: int


class OrthogonalityReport(FrozenModel):
    """Measured parameters of NO^{eps perp}_{n,q} against the printed displays."""

    vector_dim: int
    q: int
    eps: int
    gamma: int
    m: int
    v: int
    degree_min: int
    degree_max: int
    regular: bool
    regularity: Regularity
    stats: AsrgStats | None = None
    formula: NoFormulaParams
    mu_observed: tuple[int, int] | None = None
    mu_range_ok: bool | None = None
    v_match: bool
    k_match: bool
    lambda_match: bool | None = None
    mu_match: bool | None = None
    clique_number: int | None = None
    clique_match: bool | None = None
    flags: list[str] = Field(default_factory=list)


class TowerStepReport(FrozenModel):
    """Neighborhood of a vertex of NO^{eps perp}_{n,q} against the claimed smaller graph."""

    source_dim: int
    q: int
    eps: int
    target_dim: int
    target_eps: int
    vertex: int
    neighborhood_order: int
    neighborhood_degrees: list[int]
    target_order: int
    target_degrees: list[int]
    order_match: bool
    degree_match: bool
    cospectral: bool | None = None
    printed_target_v: Rational
    printed_target_k: Rational
    printed_k_match: bool
    flags: list[str] = Field(default_factory=list)


class CapProfileReport(FrozenModel):
    """Secant counts on the exterior points of a cap."""

    proj_dim: int
    q: int
    t: int
    exterior_count: int
    secant_count: int
    h_total: int
    h_mean: Rational
    h_var: Rational
    h_histogram: list[tuple[int, int]] = Field(..., description="(h_p, number of points)")

    @property
    def uniform(self) -> bool:
        return self.h_var == 0


class CapGraphAudit(FrozenModel):
    """Associated graph of a cap checked against the secant profile."""

    proj_dim: int
    q: int
    t: int
    v: int
    k: int
    lam: int | None
    expected_v: int
    expected_k: int
    expected_lam: int
    vk_match: bool
    lambda_match: bool
    pairs_checked: int
    identity_violations: int
    direction_pairs_uniform: bool
    mu_mean: Rational
    h_mean: Rational
    mu_var: Rational
    h_var: Rational
    variance_identity_holds: bool
    uniform: bool
    printed_uniform_mu: Rational
    stats: AsrgStats
    flags: list[str] = Field(default_factory=list)


class TowerLevelReport(FrozenModel):
    """One level Gamma_i of the common-neighborhood tower of a clique."""

    m: int
    i: int
    clique: list[int]
    v_i: int
    edges: int
    k_mean: Rational
    k_min: int
    k_max: int
    regular: bool
    stats: AsrgStats | None = None
    r_i: Real | None = None
    s_i: Real | None = None
    p1_degree_ratio: Real | None = Field(None, description="k_i / (k (k/v)^i)")
    p1_density: Real | None = Field(None, description="k_i / v_i")
    p2_ratio: Real | None = Field(None, description="-s_i / (mu_i - lambda_i)")
    clique_free_ratio: Real | None = Field(None, description="-s_i / (k_i (k_i/v_i)^(m-i-2))")
    sigma_floor: Real = Field(..., description="sqrt(k) (k/v)^(3m/2 - 2 - i)")
    sigma_ratio: Real | None = Field(None, description="sigma_i / sigma_floor")
    triangle_free: bool
    lambda_last: Rational | None = Field(None, description="lambda_{m-3}, reported when i = m-3")
    flags: list[str] = Field(default_factory=list)


class CliqueReport(FrozenModel):
    clique_number: int
    witness: list[int]


class ExponentReport(FrozenModel):
    kind: str
    args: dict[str, Real]
    value: Rational | None = None
    value_real: Real


class Report(FrozenModel):
    """Top-level JSON report (``asrg-report/1``)."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    schema_version: str = Field(SCHEMA_VERSION, alias="schema")
    input: dict[str, str | int | float | bool | list[int] | list[float] | None]
    stats: AsrgStats | None = None
    spectrum: SpectrumReport | None = None
    e_matrix: EMatrixReport | None = None
    bounds: list[BoundReport] = Field(default_factory=list)
    flags: list[str] = Field(default_factory=list)
    regularity: Regularity | None = None
    srg_spectrum: SrgSpectrum | None = None
    sigma_floors: list[SigmaFloor] = Field(default_factory=list)
    field: FieldInfo | None = None
    construction: OrthogonalityReport | None = None
    tower_step: TowerStepReport | None = None
    tower_level: TowerLevelReport | None = None
    cap_profile: CapProfileReport | None = None
    cap_audit: CapGraphAudit | None = None
    scan: ScanReport | None = None
    clique: CliqueReport | None = None
    approx: ApproxEigenvalue | None = None
    exponent: ExponentReport | None = None

    def to_json(self) -> dict[str, Any]:
        """JSON-ready dict without empty optional sections; the required ones stay as null."""
        data = self.model_dump(mode="json", by_alias=True, exclude_none=True)
        for key in REQUIRED_SECTIONS:
            data.setdefault(key, None)
        return data

    @property
    def violated(self) -> bool:
        """True when a certified bound fails or a scan verdict is infeasible."""
        if any(b.certified and not b.satisfied for b in self.bounds):
            return True
        return self.scan is not None and self.scan.infeasible
