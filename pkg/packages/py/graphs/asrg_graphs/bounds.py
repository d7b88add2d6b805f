"""Feasibility bounds for strongly regular and approximately strongly regular graphs.

Every check returns a ``BoundReport`` whose expressions must be nonnegative.
A value counts as nonnegative when it is at least ``-tolerance * scale``, where
scale is max(1, largest absolute summand).
"""

import logging
import math
from collections.abc import Sequence
from fractions import Fraction
from typing import Literal

from asrg_core.errors import Disconnected, DomainError, InconsistentLaws
from asrg_core.types import (
    BoundReport,
    ExponentReport,
    FamilySpec,
    LabeledValue,
    ScanExpression,
    ScanReport,
    ScanSample,
    ScanVerdict,
    SigmaFloor,
    SpectrumReport,
    Verdict,
)
from asrg_graphs.logspace import LogReal, largest_magnitude, signed_sum

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9

KreinMode = Literal["paper", "exact"]
ExponentKind = Literal[
    "cap", "cap_uniform", "cap_trivial", "cap_sigma", "ak", "opt_i", "opt_ii", "general_abstract"
]


def _report(
    name: str,
    inputs: dict[str, float],
    expressions: Sequence[tuple[str, Sequence[float]]],
    *,
    tolerance: float,
    mode: str | None = None,
    gates: Sequence[tuple[str, float]] = (),
    applicable: bool = True,
    certified: bool = True,
    notes: Sequence[str] = (),
) -> BoundReport:
    values = [(label, math.fsum(terms)) for label, terms in expressions]
    scale = max([1.0, *(abs(t) for _, terms in expressions for t in terms)])
    satisfied = not applicable or all(value >= -tolerance * scale for _, value in values)
    return BoundReport(
        name=name,
        mode=mode,
        inputs=inputs,
        expressions=[LabeledValue(label=label, value=value) for label, value in values],
        gates=[LabeledValue(label=label, value=value) for label, value in gates],
        applicable=applicable,
        certified=certified,
        satisfied=satisfied,
        margin=min(value for _, value in values),
        scale=scale,
        notes=list(notes),
    )


def krein_classical(
    v: float, k: float, r: float, s: float, *, tolerance: float = DEFAULT_TOLERANCE
) -> BoundReport:
    """1 + s^3/k^2 - (s+1)^3/(v-k-1)^2 >= 0 and the same with r.

    Raises:
        DomainError: unless v > k + 1 > 1 and r >= 0 > s
    """
    if not (v > k + 1 > 1 and r >= 0 > s):
        raise DomainError(f"krein_classical needs v > k+1 > 1 and r >= 0 > s, got {v, k, r, s}")
    co = (v - k - 1) ** 2
    return _report(
        "krein_classical",
        {"v": v, "k": k, "r": r, "s": s},
        [
            ("1 + s^3/k^2 - (s+1)^3/(v-k-1)^2", [1.0, s**3 / k**2, -((s + 1) ** 3) / co]),
            ("1 + r^3/k^2 - (r+1)^3/(v-k-1)^2", [1.0, r**3 / k**2, -((r + 1) ** 3) / co]),
        ],
        tolerance=tolerance,
    )


def absolute_classical(
    v: float, f: float, g: float, *, tolerance: float = DEFAULT_TOLERANCE
) -> BoundReport:
    """v <= f(f+3)/2 and v <= g(g+3)/2."""
    if not (f > 0 and g > 0):
        raise DomainError(f"absolute_classical needs f, g > 0, got {f}, {g}")
    return _report(
        "absolute_classical",
        {"v": v, "f": f, "g": g},
        [
            ("f(f+3)/2 - v", [f * (f + 3) / 2, -v]),
            ("g(g+3)/2 - v", [g * (g + 3) / 2, -v]),
        ],
        tolerance=tolerance,
    )


def krein_variant(
    v: float,
    k: float,
    r: float,
    s: float,
    mode: KreinMode = "exact",
    *,
    tolerance: float = DEFAULT_TOLERANCE,
) -> BoundReport:
    """Krein-type inequalities for any k-regular graph with extreme restricted eigenvalues r, s.

    ``paper`` evaluates (s+r^2)v + (k-r)(r-s) and (r+s^2)v + (k-s)(s-r) as printed.
    ``exact`` doubles the cross term, which is what the entrywise square of the
    spectral idempotent expands to; only this mode is certified.
    """
    if not (k > r > s and v >= 2):
        raise DomainError(f"krein_variant needs k > r > s and v >= 2, got {v, k, r, s}")
    factor = 2.0 if mode == "exact" else 1.0
    return _report(
        "krein_variant",
        {"v": v, "k": k, "r": r, "s": s},
        [
            ("(s+r^2)v + c(k-r)(r-s)", [s * v, r * r * v, factor * (k - r) * (r - s)]),
            ("(r+s^2)v + c(k-s)(s-r)", [r * v, s * s * v, factor * (k - s) * (s - r)]),
        ],
        tolerance=tolerance,
        mode=mode,
        certified=mode == "exact",
        notes=[f"cross-term coefficient c = {factor:g}"],
    )


def absolute_variant(
    v: float,
    k: float,
    r: float,
    s: float,
    eps: float,
    f1: int,
    f2: int,
    *,
    tolerance: float = DEFAULT_TOLERANCE,
) -> BoundReport:
    """v <= f2(f2+1) - f1, gated on s^2 + s > eps.

    The proof needs eps^2 < s^2 + s instead; both gates are reported and the
    conclusion is certified only when both pass.
    """
    if not (k > r >= 0 > s and eps > 0 and f1 <= f2):
        raise DomainError(
            "absolute_variant needs k > r >= 0 > s, eps > 0, f1 <= f2, "
            f"got {v, k, r, s, eps, f1, f2}"
        )
    printed_gate = s * s + s - eps
    proof_gate = s * s + s - eps * eps
    applicable = printed_gate > 0
    notes = []
    if not applicable:
        notes.append("printed gate s^2 + s > eps fails; conclusion not applicable")
    elif proof_gate <= 0:
        notes.append("proof gate eps^2 < s^2 + s fails; conclusion uncertified")
    return _report(
        "absolute_variant",
        {"v": v, "k": k, "r": r, "s": s, "eps": eps, "f1": f1, "f2": f2},
        [("f2(f2+1) - f1 - v", [f2 * (f2 + 1), -f1, -v])],
        tolerance=tolerance,
        gates=[("s^2 + s - eps", printed_gate), ("s^2 + s - eps^2", proof_gate)],
        applicable=applicable,
        certified=applicable and proof_gate > 0,
        notes=notes,
    )


def absolute_variant_from_spectrum(
    v: int, k: int, spectrum: SpectrumReport, *, tolerance: float = DEFAULT_TOLERANCE
) -> BoundReport:
    """``absolute_variant`` with r, s, eps, f1, f2 read off a connected spectrum.

    r is the lowest value of the second eigenvalue cluster and s the highest of
    the bottom cluster; eps is the cluster tolerance, f1 the number of restricted
    eigenvalues in [r, k] and f2 = max(f1, v - mult(s)).
    """
    if not spectrum.connected:
        raise Disconnected("absolute_variant needs a connected graph")
    clusters = spectrum.clusters
    if len(clusters) < 3:
        raise DomainError("absolute_variant needs at least three distinct eigenvalues")
    values = spectrum.eigenvalues
    second_end = clusters[0].multiplicity + clusters[1].multiplicity
    r = values[second_end - 1]
    s = values[v - clusters[-1].multiplicity]
    f1 = clusters[1].multiplicity
    f2 = max(f1, v - clusters[-1].multiplicity)
    return absolute_variant(v, k, r, s, spectrum.cluster_tolerance, f1, f2, tolerance=tolerance)


def sigma_floor_krein(
    v: float, k: float, lam: float, mu: float, *, sigma: float | None = None
) -> SigmaFloor:
    """sigma >= (1+o(1)) (mu-lambda)^{3/2} / v when mu > lambda, k = o(v), k = o((mu-lambda)^{3/2}).

    The two o-hypotheses are echoed as the ratios k/v and k/(mu-lambda)^{3/2}.
    """
    if not mu > lam:
        raise DomainError(f"sigma_floor_krein needs mu > lambda, got {mu} <= {lam}")
    split = (mu - lam) ** 1.5
    return SigmaFloor(
        name="sigma_floor_krein",
        value=split / v,
        inputs={"v": v, "k": k, "lambda": lam, "mu": mu},
        diagnostics=[
            LabeledValue(label="k/v", value=k / v),
            LabeledValue(label="k/(mu-lambda)^1.5", value=k / split),
        ],
        measured_sigma=sigma,
    )


def sigma_floor_absolute(
    v: float, k: float, lam: float, mu: float, *, sigma: float | None = None
) -> SigmaFloor:
    """sigma >= (1/3+o(1)) k/v when lambda > mu and sqrt(v) k = o((lambda-mu)^2)."""
    if not lam > mu:
        raise DomainError(f"sigma_floor_absolute needs lambda > mu, got {lam} <= {mu}")
    ratio = math.sqrt(v) * k / (lam - mu) ** 2
    notes = [] if ratio < 1 else ["sqrt(v) k is not small against (lambda-mu)^2"]
    return SigmaFloor(
        name="sigma_floor_absolute",
        value=k / (3 * v),
        inputs={"v": v, "k": k, "lambda": lam, "mu": mu},
        diagnostics=[LabeledValue(label="sqrt(v) k/(lambda-mu)^2", value=ratio)],
        measured_sigma=sigma,
        notes=notes,
    )


# -- asymptotic families -------------------------------------------------------

_Expr = tuple[str, LogReal, LogReal]


def _expr(label: str, terms: Sequence[LogReal]) -> _Expr:
    return label, signed_sum(terms), largest_magnitude(terms)


def _is_negative(value: LogReal, scale: LogReal, tolerance: float) -> bool:
    return value.sign < 0 and value.log10 > math.log10(tolerance) + scale.log10


def _evaluate_sample(spec: FamilySpec, x: float) -> tuple[ScanSample, dict[str, list[_Expr]]]:
    laws = {name: LogReal.monomial(law.c, float(law.e), x) for name, law in spec.laws.items()}
    v, k, lam, mu = laws["v"], laws["k"], laws["lambda"], laws["mu"]
    sigma = laws.get("sigma")
    one = LogReal.of(1.0)
    quantities = {name: value.to_value() for name, value in laws.items()}

    def invalid(reason: str) -> tuple[ScanSample, dict[str, list[_Expr]]]:
        return ScanSample(x=x, valid=False, reason=reason, quantities=quantities), {}

    co = v - k - one
    if co.sign <= 0:
        return invalid("k >= v - 1")
    if (k - lam).sign <= 0:
        return invalid("lambda >= k")
    if (k - mu).sign < 0:
        return invalid("mu > k")
    b = lam - mu
    c = k - mu
    disc = b * b + c.scale(4.0)
    if disc.sign <= 0:
        return invalid("(lambda-mu)^2 + 4(k-mu) <= 0")
    root = disc.sqrt()
    if b.sign >= 0:
        r = (b + root).scale(0.5)
        s = (-c) / r
    else:
        s = (b - root).scale(0.5)
        r = (-c) / s
    split = r - s
    if split.sign <= 0:
        return invalid("r <= s")
    v1 = v - one
    g = (k + v1 * r) / split
    f = (v1 * (-s) - k) / split
    quantities.update({"r": r.to_value(), "s": s.to_value(), "f": f.to_value(), "g": g.to_value()})
    if f.sign <= 0:
        return invalid("f <= 0")
    if g.sign <= 0:
        return invalid("g <= 0")

    exprs: dict[str, list[_Expr]] = {}
    for check in spec.checks:
        items: list[_Expr] = []
        if check == "krein_classical":
            for label, u in (("s", s), ("r", r)):
                items.append(
                    _expr(
                        f"1 + {label}^3/k^2 - ({label}+1)^3/(v-k-1)^2",
                        [one, u.power(3) / (k * k), -((u + one).power(3) / (co * co))],
                    )
                )
        elif check == "absolute_classical":
            for label, m in (("f", f), ("g", g)):
                items.append(
                    _expr(f"{label}({label}+3)/2 - v", [(m * m).scale(0.5), m.scale(1.5), -v])
                )
        elif check in ("krein_variant", "krein_variant_paper"):
            factor = 2.0 if check == "krein_variant" else 1.0
            items.append(
                _expr(
                    "(s+r^2)v + c(k-r)(r-s)",
                    [s * v, r * r * v, ((k - r) * split).scale(factor)],
                )
            )
            items.append(
                _expr(
                    "(r+s^2)v + c(k-s)(s-r)",
                    [r * v, s * s * v, -((k - s) * split).scale(factor)],
                )
            )
        elif check == "sigma_floor_krein" and sigma is not None and (mu - lam).sign > 0:
            floor = (mu - lam).power(1.5) / v
            items.append(_expr("sigma - (mu-lambda)^1.5/v", [sigma, -floor]))
        elif check == "sigma_floor_absolute" and sigma is not None and b.sign > 0:
            floor = k / v.scale(3.0)
            items.append(_expr("sigma - k/(3v)", [sigma, -floor]))
        exprs[check] = items

    checks = {
        name: [ScanExpression(label=label, value=value.to_value()) for label, value, _ in items]
        for name, items in exprs.items()
    }
    return ScanSample(x=x, valid=True, quantities=quantities, checks=checks), exprs


def _verdict(
    check: str,
    evaluated: list[tuple[float, list[_Expr]]],
    tolerance: float,
    has_sigma: bool,
    largest_invalid: float | None = None,
) -> ScanVerdict:
    usable = [(x, items) for x, items in evaluated if items]
    if len(usable) < 2:
        note = "no sigma law" if check.startswith("sigma_floor") and not has_sigma else None
        reason = note or "fewer than two samples with evaluable expressions"
        return ScanVerdict(check=check, verdict="undecided", notes=[reason])
    (x_prev, prev), (x_last, last) = usable[-2], usable[-1]
    notes: list[str] = []
    if largest_invalid is not None:
        notes.append(
            f"largest sample x={largest_invalid:g} is invalid; "
            f"decided by x={x_prev:g} and x={x_last:g}"
        )
    earlier = {label: (value, scale) for label, value, scale in prev}
    for label, l_val, l_scale in last:
        if label not in earlier:
            continue
        p_val, p_scale = earlier[label]
        both_negative = _is_negative(p_val, p_scale, tolerance) and _is_negative(
            l_val, l_scale, tolerance
        )
        if both_negative and not p_val.less_than(l_val):
            notes.append(f"{label} negative and not increasing at the two largest samples")
            return ScanVerdict(check=check, verdict="infeasible", notes=notes)
    verdict: Verdict = (
        "feasible-at-all-samples"
        if all(not _is_negative(val, sc, tolerance) for _, items in usable for _, val, sc in items)
        else "undecided"
    )
    return ScanVerdict(check=check, verdict=verdict, notes=notes)


def family_scan(
    spec: FamilySpec, samples: Sequence[float], *, tolerance: float = DEFAULT_TOLERANCE
) -> ScanReport:
    """Evaluate the requested checks along a monomial parameter family.

    Each sample derives r and s from the root pair of u^2 - (lambda-mu)u - (k-mu)
    and f, g from the multiplicity system. A sample is invalid, with its reason,
    unless k < v - 1, lambda < k, mu <= k and f, g > 0. A check is ``infeasible``
    when one of its expressions is negative at the two largest valid samples and
    not increasing between them; expressions are matched by label.

    Raises:
        DomainError: fewer than three samples, or samples not positive and increasing
        InconsistentLaws: fewer than two samples give valid parameters
        OverflowDespiteLogSpace: a magnitude leaves log space
    """
    if len(samples) < 3:
        raise DomainError("family_scan needs at least three samples")
    increasing = all(b > a for a, b in zip(samples, samples[1:], strict=False))
    if any(x <= 0 for x in samples) or not increasing:
        raise DomainError("samples must be positive and strictly increasing")
    results = [_evaluate_sample(spec, float(x)) for x in samples]
    valid = [(sample.x, exprs) for sample, exprs in results if sample.valid]
    if len(valid) < 2:
        raise InconsistentLaws("fewer than two samples give admissible parameters")
    last_sample = results[-1][0]
    if not last_sample.valid:
        logger.warning(f"largest sample x={last_sample.x:g} invalid: {last_sample.reason}")
    largest_invalid = None if last_sample.valid else float(last_sample.x)
    verdicts = [
        _verdict(
            check,
            [(x, exprs[check]) for x, exprs in valid],
            tolerance,
            "sigma" in spec.laws,
            largest_invalid,
        )
        for check in spec.checks
    ]
    for item in verdicts:
        logger.info(f"scan {item.check}: {item.verdict}")
    return ScanReport(family=spec, samples=[sample for sample, _ in results], verdicts=verdicts)


# -- exponents -----------------------------------------------------------------


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


def exponent_bounds(kind: ExponentKind, **args: float) -> ExponentReport:
    """Exponent of an upper bound, exact where it is rational.

    cap: t = O(q^{5n/6 - 1/6}); cap_uniform: 3n/4 - 1/4; cap_trivial: n - 1;
    ak: k = O(v^{1 - 1/(2m-3)}); opt_i: 1 - 2/(3m-4); opt_ii: 1 - 1/(m+1);
    general_abstract: 1 - 1/(3m-2i-5); cap_sigma: the floor t^3 q^{-5n/2 + 1/2}.
    """

    def arg(name: str) -> int:
        if name not in args:
            raise DomainError(f"exponent kind {kind} needs argument {name}")
        value = args[name]
        _require(float(value).is_integer(), f"{name} must be an integer")
        return int(value)

    value: Fraction | None
    match kind:
        case "cap" | "cap_uniform" | "cap_trivial":
            n = arg("n")
            _require(n >= 2, "n >= 2")
            value = {
                "cap": Fraction(5 * n, 6) - Fraction(1, 6),
                "cap_uniform": Fraction(3 * n, 4) - Fraction(1, 4),
                "cap_trivial": Fraction(n - 1),
            }[kind]
        case "ak":
            m = arg("m")
            _require(m >= 3, "m >= 3")
            value = 1 - Fraction(1, 2 * m - 3)
        case "opt_i":
            m = arg("m")
            _require(m >= 5, "m >= 5")
            value = 1 - Fraction(2, 3 * m - 4)
        case "opt_ii":
            m = arg("m")
            _require(m >= 5, "m >= 5")
            value = 1 - Fraction(1, m + 1)
        case "general_abstract":
            m, i = arg("m"), arg("i")
            _require(m >= 3 and 0 <= i <= m - 3, "m >= 3 and 0 <= i <= m-3")
            value = 1 - Fraction(1, 3 * m - 2 * i - 5)
        case "cap_sigma":
            t, q, n = arg("t"), arg("q"), arg("n")
            _require(n >= 4 and q >= 2 and t >= 0, "n >= 4, q >= 2, t >= 0")
            real = t**3 * float(q) ** (-2.5 * n + 0.5)
            return ExponentReport(kind=kind, args=dict(args), value=None, value_real=real)
        case _:
            raise DomainError(f"unknown exponent kind {kind}")
    return ExponentReport(kind=kind, args=dict(args), value=value, value_real=float(value))
