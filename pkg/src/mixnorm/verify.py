"""Numerical verification suites for the mixed-norm machinery.

Every suite builds concrete witness functions, evaluates both sides of an
inequality (or a declared divergence, or a growth rate) through independent
routes, and packs the outcome into plain records.  Reports are deterministic:
the same config and seed produce byte-identical JSON, so diffs are meaningful.

Conventions used throughout:

* a comparison record stores a normalized margin in [-1, 1]; positive means
  the bounded side sits strictly below the bound,
* growth families are fit in log space against either ln(N) or ln(ln(N)),
* randomized witnesses draw from a generator keyed by (seed, check id), so
  adding or reordering checks never perturbs unrelated draws.
"""

from __future__ import annotations

import json
import math
import zlib
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .exponents import (
    Exponent,
    ExponentPair,
    half_weak_interpolation_constant,
    holder_combine,
    interpolate_exponent,
    iterated_holder_constant,
    mixed_weak_holder_admissible,
    mixed_weak_holder_constant,
)
from .funcone import Func1D
from .funcrep import (
    DiffKernelRep,
    ExpLayerRep,
    GridRep,
    LogDampedRep,
    MaxKernelRep,
    PowerProductRep,
    RegionSpec,
    SumKernelRep,
    TensorRep,
    TransposeRep,
    indicator_box,
)
from .normcore import (
    INF,
    METHOD_CLOSED,
    METHOD_GRID,
    METHOD_SEARCH,
    NormResult,
    VARIANT_OUTER_STRONG_INNER_WEAK,
    VARIANT_OUTER_WEAK_INNER_STRONG,
    distribution_curve,
    half_mixed_norm,
    indicator_mixed_norm,
    iterated_weak_norm,
    mixed_norm,
    mixed_weak_norm,
    strong_norm_1d,
    truncated_distance,
    weak_norm_1d,
)
from .operators import (
    apply_difference_kernel,
    apply_symmetric_kernel,
    fractional_integral_1d,
    pointwise_product,
    symmetric_rearrangement,
)

REPORT_VERSION = 1

SUITE_NAMES = (
    "norm-comparisons",
    "holder",
    "interpolation",
    "geometric",
    "convergence",
    "hls",
)

# Fit acceptance: fitted exponent within 15 percent of the prediction, and the
# regression residual below 5 percent of the spread of the fitted values.
FIT_EXPONENT_RTOL = 0.15
FIT_RESIDUAL_FRACTION = 0.05
FIT_DEGENERATE_RTOL = 1e-12

_METHOD_RANK = {METHOD_CLOSED: 0, METHOD_GRID: 1, METHOD_SEARCH: 2}


# ---------------------------------------------------------------------------
# configuration


@dataclass(frozen=True)
class VerifyConfig:
    """Knobs for suite runs.  Defaults match the shipped report tolerances."""

    seed: int = 7
    tol_exact: float = 1e-9
    tol_quad: float = 2e-2
    n_values: tuple = (1e2, 1e4, 1e6, 1e8)
    sandwich_pairs: int = 50
    sandwich_grids: int = 10
    holder_pairs: int = 20
    holder_grids: int = 10
    hls_pairs: int = 100
    lemma_samples: int = 64
    interp_grids: int = 8

    def to_json(self):
        return {
            "seed": self.seed,
            "tol_rel": {"exact": self.tol_exact, "quadrature": self.tol_quad},
            "n_values": [float(v) for v in self.n_values],
            "samples": {
                "sandwich_pairs": self.sandwich_pairs,
                "sandwich_grids": self.sandwich_grids,
                "holder_pairs": self.holder_pairs,
                "holder_grids": self.holder_grids,
                "hls_pairs": self.hls_pairs,
                "lemma_samples": self.lemma_samples,
                "interp_grids": self.interp_grids,
            },
        }

    @classmethod
    def from_json(cls, data) -> "VerifyConfig":
        tol = data.get("tol_rel", {})
        samples = data.get("samples", {})
        base = cls()
        return cls(
            seed=int(data.get("seed", base.seed)),
            tol_exact=float(tol.get("exact", base.tol_exact)),
            tol_quad=float(tol.get("quadrature", base.tol_quad)),
            n_values=tuple(float(v) for v in data.get("n_values", base.n_values)),
            sandwich_pairs=int(samples.get("sandwich_pairs", base.sandwich_pairs)),
            sandwich_grids=int(samples.get("sandwich_grids", base.sandwich_grids)),
            holder_pairs=int(samples.get("holder_pairs", base.holder_pairs)),
            holder_grids=int(samples.get("holder_grids", base.holder_grids)),
            hls_pairs=int(samples.get("hls_pairs", base.hls_pairs)),
            lemma_samples=int(samples.get("lemma_samples", base.lemma_samples)),
            interp_grids=int(samples.get("interp_grids", base.interp_grids)),
        )


DEFAULT_CONFIG = VerifyConfig()


# ---------------------------------------------------------------------------
# records


def _margin(lhs: float, rhs_scaled: float) -> float:
    """Normalized gap (rhs - lhs) / max(|lhs|, |rhs|), clamped to [-1, 1]."""
    lhs_inf = not math.isfinite(lhs)
    rhs_inf = not math.isfinite(rhs_scaled)
    if lhs_inf and rhs_inf:
        return 0.0
    if lhs_inf:
        return -1.0
    if rhs_inf:
        return 1.0
    denom = max(abs(lhs), abs(rhs_scaled))
    if denom == 0.0:
        return 0.0
    return max(-1.0, min(1.0, (rhs_scaled - lhs) / denom))


@dataclass(frozen=True)
class CheckRecord:
    """One verified comparison between two computed quantities."""

    check_id: str
    lhs: NormResult
    rhs: NormResult
    constant: float
    margin: float
    passed: bool
    indeterminate: bool = False
    direction: str = "upper"
    notes: tuple = ()

    def to_json(self):
        return {
            "kind": "comparison",
            "check_id": self.check_id,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "constant": self.constant,
            "margin": self.margin,
            "passed": self.passed,
            "indeterminate": self.indeterminate,
            "direction": self.direction,
            "notes": list(self.notes),
        }


def compare_upper(check_id: str, lhs: NormResult, rhs: NormResult,
                  constant: float = 1.0, tol: float = 0.0,
                  notes: Sequence[str] = ()) -> CheckRecord:
    """Record `lhs <= constant * rhs` with a relative slack of tol."""
    scaled = constant * rhs.value if math.isfinite(rhs.value) else INF
    indeterminate = not math.isfinite(lhs.value) and not math.isfinite(scaled)
    margin = _margin(lhs.value, scaled)
    passed = (not indeterminate) and margin >= -tol
    return CheckRecord(check_id, lhs, rhs, constant, margin, passed,
                       indeterminate=indeterminate, direction="upper",
                       notes=tuple(notes))


def compare_lower(check_id: str, lhs: NormResult, rhs: NormResult,
                  constant: float = 1.0, tol: float = 0.0,
                  notes: Sequence[str] = ()) -> CheckRecord:
    """Record `lhs >= constant * rhs` with a relative slack of tol."""
    scaled = constant * rhs.value if math.isfinite(rhs.value) else INF
    indeterminate = not math.isfinite(lhs.value) and not math.isfinite(scaled)
    margin = _margin(lhs.value, scaled)
    passed = (not indeterminate) and margin <= tol
    return CheckRecord(check_id, lhs, rhs, constant, margin, passed,
                       indeterminate=indeterminate, direction="lower",
                       notes=tuple(notes))


def expect_infinite(check_id: str, lhs: NormResult,
                    premise: NormResult | None = None,
                    notes: Sequence[str] = ()) -> CheckRecord:
    """Record a declared divergence.  The rhs slot carries the finite premise."""
    rhs = premise if premise is not None else NormResult(0.0, METHOD_CLOSED, 0.0)
    premise_ok = premise is None or premise.is_finite
    passed = (not lhs.is_finite) and premise_ok
    margin = -1.0 if not lhs.is_finite else _margin(lhs.value, rhs.value)
    extra = () if premise_ok else ("premise not finite",)
    return CheckRecord(check_id, lhs, rhs, 1.0, margin, passed,
                       indeterminate=False, direction="infinite",
                       notes=tuple(notes) + extra)


def expect_close(check_id: str, lhs: NormResult, target: NormResult,
                 tol: float, notes: Sequence[str] = ()) -> CheckRecord:
    """Record agreement of a computed value with an independent target."""
    both_inf = not lhs.is_finite and not target.is_finite
    if both_inf:
        return CheckRecord(check_id, lhs, target, 1.0, 0.0, False,
                           indeterminate=True, direction="close",
                           notes=tuple(notes))
    margin = _margin(lhs.value, target.value)
    passed = lhs.is_finite and target.is_finite and abs(margin) <= tol
    return CheckRecord(check_id, lhs, target, 1.0, margin, passed,
                       indeterminate=False, direction="close",
                       notes=tuple(notes))


def _worst_method(results: Sequence[NormResult]) -> str:
    rank = max(_METHOD_RANK[r.method] for r in results)
    for name, value in _METHOD_RANK.items():
        if value == rank:
            return name
    return METHOD_SEARCH


def product_result(results: Sequence[NormResult], coef: float = 1.0,
                   powers: Sequence[float] | None = None) -> NormResult:
    """Combine norm results multiplicatively into one synthetic result.

    The method tag is the least exact tag among the inputs and the error
    bound adds the relative errors of every finite factor.
    """
    if powers is None:
        powers = [1.0] * len(results)
    method = _worst_method(results)
    if any(not r.is_finite for r in results):
        return NormResult(INF, method, 0.0)
    value = coef
    rel_err = 0.0
    for r, w in zip(results, powers):
        value *= r.value ** w
        if r.value > 0.0:
            rel_err += abs(w) * r.err_bound / r.value
    return NormResult(value, method, abs(value) * rel_err)


def sum_result(results: Sequence[NormResult]) -> NormResult:
    method = _worst_method(results)
    if any(not r.is_finite for r in results):
        return NormResult(INF, method, 0.0)
    value = sum(r.value for r in results)
    err = sum(r.err_bound for r in results)
    return NormResult(value, method, err)


def max_result(results: Sequence[NormResult]) -> NormResult:
    method = _worst_method(results)
    if any(not r.is_finite for r in results):
        return NormResult(INF, method, 0.0)
    best = max(results, key=lambda r: r.value)
    return NormResult(best.value, method, best.err_bound)


# ---------------------------------------------------------------------------
# growth fits


@dataclass(frozen=True)
class GrowthFit:
    """Least squares fit of measured values against a growth model."""

    check_id: str
    family: str
    parameters: tuple
    values: tuple
    model: str
    exponent: float
    intercept: float
    residual: float
    expected: float
    passed: bool
    degenerate: bool = False
    notes: tuple = ()

    def to_json(self):
        return {
            "kind": "growth",
            "check_id": self.check_id,
            "family": self.family,
            "parameters": [float(p) for p in self.parameters],
            "values": [float(v) for v in self.values],
            "model": self.model,
            "exponent": self.exponent,
            "intercept": self.intercept,
            "residual": self.residual,
            "expected": self.expected,
            "passed": self.passed,
            "degenerate": self.degenerate,
            "notes": list(self.notes),
        }


def _fit_records(check_id: str, family: str, params, values, model: str,
                 expected: float, notes: Sequence[str] = ()) -> GrowthFit:
    params = tuple(float(p) for p in params)
    values = tuple(float(v) for v in values)
    if len(params) < 4:
        raise ValueError("growth fit needs at least 4 parameter values")
    if max(params) / min(params) < 1e3:
        raise ValueError("growth fit parameters must span at least 3 decades")
    if any(not math.isfinite(v) or v <= 0.0 for v in values):
        raise ValueError(f"family {family} produced a nonpositive or nonfinite value")
    arr = np.asarray(values, dtype=float)
    if np.ptp(arr) <= FIT_DEGENERATE_RTOL * np.max(np.abs(arr)):
        w = np.log(arr)
        return GrowthFit(check_id, family, params, values, model,
                         exponent=0.0, intercept=float(np.mean(w)),
                         residual=0.0, expected=expected,
                         passed=(expected == 0.0), degenerate=True,
                         notes=tuple(notes) + ("values numerically constant",))
    if model == "log_power":
        t = np.log(np.log(np.asarray(params)))
    elif model == "power":
        t = np.log(np.asarray(params))
    else:
        raise ValueError(f"unknown growth model {model!r}")
    w = np.log(arr)
    slope, intercept = np.polyfit(t, w, 1)
    resid = float(np.sqrt(np.mean((w - (slope * t + intercept)) ** 2)))
    spread = float(np.max(w) - np.min(w))
    if expected == 0.0:
        passed = False
    else:
        passed = (abs(slope - expected) <= FIT_EXPONENT_RTOL * abs(expected)
                  and resid <= FIT_RESIDUAL_FRACTION * spread)
    return GrowthFit(check_id, family, params, values, model,
                     exponent=float(slope), intercept=float(intercept),
                     residual=resid, expected=expected, passed=passed,
                     notes=tuple(notes))


# ---------------------------------------------------------------------------
# reporting


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    config: VerifyConfig
    checks: tuple = field(default_factory=tuple)

    @property
    def summary(self):
        passed = failed = indeterminate = 0
        for check in self.checks:
            if getattr(check, "indeterminate", False):
                indeterminate += 1
            elif check.passed:
                passed += 1
            else:
                failed += 1
        return {"pass": passed, "fail": failed, "indeterminate": indeterminate}

    def to_json(self):
        return {
            "report_version": REPORT_VERSION,
            "suite": self.suite,
            "config": self.config.to_json(),
            "summary": self.summary,
            "checks": [check.to_json() for check in self.checks],
        }


def render_report(report: VerificationReport) -> str:
    """Stable JSON text; reruns with one config are byte identical."""
    return json.dumps(report.to_json(), sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# randomness and witness generators


def _rng_for(seed: int, check_id: str) -> np.random.Generator:
    return np.random.default_rng(zlib.crc32(f"{seed}:{check_id}".encode()))


def _random_nodes(rng, cells: int) -> list:
    steps = rng.lognormal(mean=0.0, sigma=1.0, size=cells)
    return [0.0] + list(np.cumsum(steps))


def _random_grid(rng, zero_frac: float = 0.2) -> GridRep:
    ncx = int(rng.integers(3, 7))
    ncy = int(rng.integers(3, 7))
    xnodes = _random_nodes(rng, ncx)
    ynodes = _random_nodes(rng, ncy)
    values = rng.lognormal(mean=0.0, sigma=1.0, size=(ncx, ncy))
    mask = rng.random(size=(ncx, ncy)) < zero_frac
    values = np.where(mask, 0.0, values)
    return GridRep(xnodes, ynodes, values)


def _random_step(rng, decreasing: bool = False, radial: bool = True) -> Func1D:
    cells = int(rng.integers(2, 5))
    nodes = _random_nodes(rng, cells)
    values = rng.lognormal(mean=0.0, sigma=1.0, size=cells)
    if decreasing:
        values = np.sort(values)[::-1]
    return Func1D.from_steps(nodes, list(values), radial=radial)


def _exponent_pair(rng, lo: float = 0.75, hi: float = 4.0):
    p1 = float(rng.uniform(lo, hi))
    p2 = float(rng.uniform(lo, hi))
    return p1, p2


# ---------------------------------------------------------------------------
# weighted suprema for the pointwise bound checks


def _grid_weighted_sup(grid: GridRep, gamma_t: float) -> NormResult:
    """Exact sup of value * (2 max(|x|, |y|))**gamma_t over grid cells."""
    xn = np.asarray(grid.xnodes, dtype=float)
    yn = np.asarray(grid.ynodes, dtype=float)
    vals = np.asarray(grid.values, dtype=float)
    best = 0.0
    for i in range(vals.shape[0]):
        for j in range(vals.shape[1]):
            v = vals[i, j]
            if v <= 0.0:
                continue
            corner = 2.0 * max(xn[i + 1], yn[j + 1])
            best = max(best, v * corner ** gamma_t)
    return NormResult(best, METHOD_GRID, 0.0)


def _weighted_sup(rep, gamma_t: float) -> NormResult:
    """Weighted sup for the closed witness shapes used by the suites."""
    if isinstance(rep, GridRep):
        return _grid_weighted_sup(rep, gamma_t)
    if isinstance(rep, MaxKernelRep) and abs(rep.power + gamma_t) < 1e-12:
        return NormResult(rep.coef, METHOD_CLOSED, 0.0)
    xs = np.geomspace(1e-6, 1e6, 481)
    best = 0.0
    for ry in np.geomspace(1e-6, 1e6, 241):
        slice_f = rep.slice_at(float(ry))
        vals = np.asarray(slice_f.eval_many(xs), dtype=float)
        weight = (2.0 * np.maximum(xs, ry)) ** gamma_t
        best = max(best, float(np.max(vals * weight)))
    return NormResult(best, METHOD_SEARCH, abs(best) * 1e-2)


def _box_weighted_sup(x_hi: float, y_hi: float, gamma_t: float) -> NormResult:
    return NormResult((2.0 * max(x_hi, y_hi)) ** gamma_t, METHOD_CLOSED, 0.0)


# ---------------------------------------------------------------------------
# aggregation helpers


def _aggregate(check_id: str, direction: str, instances, constant: float,
               tol: float, notes: Sequence[str] = ()) -> CheckRecord:
    """Fold many (lhs, rhs) comparisons into one record.

    Keeps the worst instance's values so a failure is reproducible from the
    report alone.
    """
    builder = compare_upper if direction == "upper" else compare_lower
    records = [builder(check_id, lhs, rhs, constant, tol) for lhs, rhs in instances]
    if direction == "upper":
        worst = min(records, key=lambda r: r.margin)
    else:
        worst = max(records, key=lambda r: r.margin)
    violations = sum(1 for r in records if not r.passed)
    extra = (f"instances={len(records)}", f"violations={violations}")
    return CheckRecord(check_id, worst.lhs, worst.rhs, constant, worst.margin,
                       passed=(violations == 0),
                       indeterminate=worst.indeterminate,
                       direction=direction, notes=tuple(notes) + extra)


def _aggregate_close(check_id: str, instances, tol: float,
                     notes: Sequence[str] = ()) -> CheckRecord:
    records = [expect_close(check_id, lhs, target, tol) for lhs, target in instances]
    worst = max(records, key=lambda r: abs(r.margin))
    violations = sum(1 for r in records if not r.passed)
    extra = (f"instances={len(records)}", f"violations={violations}")
    return CheckRecord(check_id, worst.lhs, worst.rhs, 1.0, worst.margin,
                       passed=(violations == 0),
                       indeterminate=any(r.indeterminate for r in records),
                       direction="close", notes=tuple(notes) + extra)


def _closed(value: float, err: float = 0.0) -> NormResult:
    return NormResult(value, METHOD_CLOSED, err if math.isfinite(value) else 0.0)


# ---------------------------------------------------------------------------
# counterexample family registry
#
# Growth families return one scalar per parameter value N (or per pinch index
# k); divergence families return finished records directly.


@dataclass(frozen=True)
class FamilySpec:
    family_id: str
    model: str
    expected: float
    summary: str
    measure: Callable


def _wedge_band_value(n: float, cfg: VerifyConfig) -> float:
    region = RegionSpec(y_lo=1.0, y_hi=float(n), relation="y_le_x")
    rep = SumKernelRep(-1.0, region=region)
    return mixed_norm(rep, (2, 2)).value


def _plane_band_value(n: float, cfg: VerifyConfig) -> float:
    region = RegionSpec(y_lo=1.0, y_hi=float(n))
    rep = SumKernelRep(-1.0, region=region)
    return half_mixed_norm(rep, (2, 2), VARIANT_OUTER_STRONG_INNER_WEAK).value


def _box_band_rep(n: float) -> SumKernelRep:
    region = RegionSpec(x_lo=1.0, x_hi_coef=float(n), y_lo=1.0, y_hi=float(n))
    return SumKernelRep(-0.5, region=region)


def _box_band_inner_value(n: float, cfg: VerifyConfig) -> float:
    return mixed_norm(_box_band_rep(n), (2, INF)).value


def _box_band_outer_value(n: float, cfg: VerifyConfig) -> float:
    return mixed_norm(_box_band_rep(n), (INF, 2)).value


def _ratio_band_parts(n: float):
    region = RegionSpec(x_hi_coef=1.0, x_hi_expo=-2.0, y_lo=1.0, y_hi=float(n))
    f = SumKernelRep(0.5, region=region)
    g = PowerProductRep(1.0, 0.0, -0.5)
    return f, g


def _ratio_band_value(n: float, cfg: VerifyConfig) -> float:
    f, g = _ratio_band_parts(n)
    numerator = mixed_norm(pointwise_product(f, g), (2, 1)).value
    den_f = mixed_norm(f, (2, 2)).value
    den_g = mixed_weak_norm(g, (INF, 2)).value
    return numerator / (den_f * den_g)


def _kernel_mask_rep(n: float) -> PowerProductRep:
    region = RegionSpec(x_hi_coef=1.0, x_hi_expo=-2.0, y_lo=1.0, y_hi=float(n))
    return PowerProductRep(2.0 ** 0.5, 0.0, 0.5, region=region)


def _kernel_mask_value(n: float, cfg: VerifyConfig) -> float:
    f = _kernel_mask_rep(n)
    numerator = mixed_norm(apply_symmetric_kernel(f, 0.5), (2, 1)).value
    return numerator / mixed_norm(f, (2, 2)).value


def _distance_band_rep(n: float) -> DiffKernelRep:
    region = RegionSpec(x_hi_coef=float(n), y_lo=1.0, y_hi=2.0, relation="2y_le_x")
    return DiffKernelRep(-0.5, region=region)


def _distance_band_value(n: float, cfg: VerifyConfig) -> float:
    f = _distance_band_rep(n)
    numerator = mixed_norm(apply_difference_kernel(f, 0.5), (1, 2)).value
    return numerator / mixed_norm(f, (2, 2)).value


def _pinch_rep(k: float) -> PowerProductRep:
    region = RegionSpec(x_hi_coef=1.0, x_hi_expo=-1.0, y_hi=1.0 / float(k))
    return PowerProductRep(1.0, 0.0, 0.0, region=region)


def _pinch_distance_value(k: float, cfg: VerifyConfig) -> float:
    return truncated_distance(_pinch_rep(k), None, 0.5, (2, 1))


def _pinch_far_rep(k: float) -> PowerProductRep:
    region = RegionSpec(x_hi_coef=1.0, x_hi_expo=-1.0, y_lo=float(k))
    return PowerProductRep(1.0, 0.0, 0.0, region=region)


def _pinch_far_value(k: float, cfg: VerifyConfig) -> float:
    return truncated_distance(_pinch_far_rep(k), None, 0.5, (1, 2))


def _shifted_tail_value(k: float, cfg: VerifyConfig) -> float:
    fx = Func1D.radial_power(1.0, -1.0, r_lo=float(k))
    gy = Func1D.from_steps([0.0, 1.0], [1.0])
    return mixed_weak_norm(TensorRep(fx, gy), (1, 1)).value


FIT_FAMILIES = {
    "wedge-band": FamilySpec(
        "wedge-band", "log_power", 0.5,
        "full norm of a decaying ridge kernel over a widening wedge",
        _wedge_band_value),
    "plane-band": FamilySpec(
        "plane-band", "log_power", 0.5,
        "outer-strong inner-weak norm of the ridge kernel over a band",
        _plane_band_value),
    "box-band-inner": FamilySpec(
        "box-band-inner", "log_power", 0.5,
        "sup over rows of the in-row norm on a growing box",
        _box_band_inner_value),
    "box-band-outer": FamilySpec(
        "box-band-outer", "log_power", 0.5,
        "row-integrated sup norm on a growing box",
        _box_band_outer_value),
    "ratio-band": FamilySpec(
        "ratio-band", "log_power", 0.5,
        "product norm over the product of factor norms on a thinning band",
        _ratio_band_value),
    "kernel-mask-band": FamilySpec(
        "kernel-mask-band", "log_power", 0.5,
        "damped-kernel image norm over the source norm on a thinning band",
        _kernel_mask_value),
    "distance-band": FamilySpec(
        "distance-band", "log_power", 0.5,
        "difference-kernel image norm over the source norm on a split band",
        _distance_band_value),
    "pinch-distance": FamilySpec(
        "pinch-distance", "power", -0.5,
        "distance to zero of indicator sets pinched toward the axis",
        _pinch_distance_value),
    "pinch-distance-far": FamilySpec(
        "pinch-distance-far", "power", -0.5,
        "distance to zero of indicator sets escaping to infinity",
        _pinch_far_value),
    "shifted-tail": FamilySpec(
        "shifted-tail", "power", 0.0,
        "norms of tail truncations that never decay despite pointwise collapse",
        _shifted_tail_value),
}


def fit_growth(family_id: str, parameters=None, model: str | None = None,
               config: VerifyConfig | None = None,
               check_id: str | None = None) -> GrowthFit:
    """Measure a registered growth family and fit its rate."""
    cfg = config or DEFAULT_CONFIG
    spec = FIT_FAMILIES.get(family_id)
    if spec is None:
        raise ValueError(f"unknown growth family {family_id!r}")
    params = tuple(float(p) for p in (parameters or cfg.n_values))
    values = [spec.measure(p, cfg) for p in params]
    return _fit_records(check_id or f"family/{family_id}", family_id, params,
                        values, model or spec.model, spec.expected,
                        notes=(spec.summary,))


# divergence families: premise records plus one declared-infinite conclusion


def _family_tail_product(cfg: VerifyConfig):
    # decaying factor on a pinched band times a matching negative power,
    # with product exponents combined outside the admissible configurations
    region = RegionSpec(x_hi_coef=1.0, x_hi_expo=-1.0, y_hi=1.0)
    f = PowerProductRep(1.0, 0.0, -0.5, region=region)
    g = PowerProductRep(1.0, -0.5, 0.0)
    p, q = ExponentPair(2, 1), ExponentPair(2, INF)
    gate = mixed_weak_holder_admissible(p, q)
    pf = expect_close("holder/tail-product-factor-band",
                      mixed_weak_norm(f, (2, 1)),
                      _closed(4.0 * math.sqrt(2.0)), cfg.tol_quad,
                      notes=("level curve value is flat in the threshold",))
    pg = expect_close("holder/tail-product-factor-power",
                      mixed_weak_norm(g, (2, INF)),
                      _closed(math.sqrt(2.0)), cfg.tol_quad)
    conclusion = expect_infinite(
        "holder/tail-product-infinite",
        mixed_weak_norm(pointwise_product(f, g), (1, 1)),
        premise=product_result([pf.lhs, pg.lhs]),
        notes=(f"admissibility gate: {gate}",
               "combined exponents fall outside every admissible case"))
    return (pf, pg, conclusion)


def _family_split_product(cfg: VerifyConfig, high_first: bool):
    region = RegionSpec(x_hi_coef=1.0, x_hi_expo=-1.0)
    rising = PowerProductRep(1.0, 0.0, 0.25, region=region)
    falling = PowerProductRep(1.0, 0.0, -0.25, region=region)
    rising_pair, falling_pair = (2, 4), (4, 2)
    rising_value = 8.0 ** 0.25
    falling_value = (4.0 * math.sqrt(2.0)) ** 0.5
    if high_first:
        tag = "holder/split-product-high"
        f, g = rising, falling
        fp, gp = rising_pair, falling_pair
        fv, gv = rising_value, falling_value
    else:
        tag = "holder/split-product-low"
        f, g = falling, rising
        fp, gp = falling_pair, rising_pair
        fv, gv = falling_value, rising_value
    gate = mixed_weak_holder_admissible(ExponentPair(*fp), ExponentPair(*gp))
    pf = expect_close(f"{tag}-factor-first", mixed_weak_norm(f, fp),
                      _closed(fv), cfg.tol_quad)
    pg = expect_close(f"{tag}-factor-second", mixed_weak_norm(g, gp),
                      _closed(gv), cfg.tol_quad)
    conclusion = expect_infinite(
        f"{tag}-infinite",
        mixed_weak_norm(pointwise_product(f, g), (4.0 / 3.0, 4.0 / 3.0)),
        premise=product_result([pf.lhs, pg.lhs]),
        notes=(f"admissibility gate: {gate}",))
    return (pf, pg, conclusion)


def _family_pinch_support(cfg: VerifyConfig):
    region = RegionSpec(x_hi_coef=1.0, x_hi_expo=-1.0, y_hi=1.0)
    f = MaxKernelRep(0.5, region=region)
    premise = mixed_weak_norm(f, (2, 1))
    cap = compare_upper("geom/pinch-support-premise", premise, _closed(8.0),
                        tol=cfg.tol_quad,
                        notes=("finiteness witness, the cap is not sharp",))
    image = apply_symmetric_kernel(f, 0.5)
    conclusion = expect_infinite(
        "geom/pinch-support-infinite", mixed_norm(image, (1, 1)),
        premise=premise,
        notes=("kernel exactly cancels the growth, leaving a set of full mass",))
    return (cap, conclusion)


def _family_distance_split(cfg: VerifyConfig):
    n = float(cfg.n_values[0])
    region = RegionSpec(x_hi_coef=n, y_lo=1.0, y_hi=2.0, relation="y_le_x")
    f = PowerProductRep(1.0, 0.0, 0.0, region=region)
    premise = mixed_norm(f, (2, 2))
    image = apply_difference_kernel(f, 1.0)
    conclusion = expect_infinite(
        "geom/distance-split-infinite", mixed_norm(image, (1, 1)),
        premise=premise,
        notes=("the kernel diverges along the touching edge of the region",
               f"width parameter {n:g}; every width diverges the same way"))
    return (conclusion,)


INFINITE_FAMILIES = {
    "tail-product": _family_tail_product,
    "split-product-high": lambda cfg: _family_split_product(cfg, True),
    "split-product-low": lambda cfg: _family_split_product(cfg, False),
    "pinch-support": _family_pinch_support,
    "distance-split": _family_distance_split,
}


def counterexample_records(family_id: str, config: VerifyConfig | None = None):
    """Run one registered counterexample family and return its records."""
    cfg = config or DEFAULT_CONFIG
    if family_id in FIT_FAMILIES:
        return (fit_growth(family_id, config=cfg),)
    builder = INFINITE_FAMILIES.get(family_id)
    if builder is None:
        raise ValueError(f"unknown counterexample family {family_id!r}")
    return tuple(builder(cfg))


def family_ids():
    return tuple(sorted(FIT_FAMILIES)) + tuple(sorted(INFINITE_FAMILIES))


# ---------------------------------------------------------------------------
# suite: norm comparisons


def suite_norm_comparisons(config: VerifyConfig | None = None) -> VerificationReport:
    cfg = config or DEFAULT_CONFIG
    checks = []

    # split power kernel: the two weak norms disagree maximally
    split = PowerProductRep(1.0, -0.5, -0.5)
    checks.append(expect_close(
        "norms/split-power-iterated", iterated_weak_norm(split, (2, 2)),
        _closed(2.0), cfg.tol_exact))
    checks.append(expect_infinite(
        "norms/split-power-mixed-weak", mixed_weak_norm(split, (2, 2)),
        premise=iterated_weak_norm(split, (2, 2)),
        notes=("iterated route finite, joint route divergent",)))
    checks.append(expect_infinite(
        "norms/split-power-strong", mixed_norm(split, (2, 2))))

    rng = _rng_for(cfg.seed, "norms/split-power-sampled")
    sampled = []
    for _ in range(3):
        p1, p2 = _exponent_pair(rng, 1.0, 4.0)
        rep = PowerProductRep(1.0, -1.0 / p1, -1.0 / p2)
        target = 2.0 ** (1.0 / p1) * 2.0 ** (1.0 / p2)
        sampled.append((iterated_weak_norm(rep, (p1, p2)), _closed(target)))
    checks.append(_aggregate_close(
        "norms/split-power-sampled", sampled, cfg.tol_quad,
        notes=("matched powers in both variables, sampled exponents",)))

    # exponential layer: mixed weak finite, iterated and strong divergent
    layer = ExpLayerRep(math.e, 1.0)
    checks.append(expect_close(
        "norms/layer-exp-mixed-weak", mixed_weak_norm(layer, (1, 1)),
        _closed(4.0), cfg.tol_exact))
    checks.append(expect_infinite(
        "norms/layer-exp-iterated", iterated_weak_norm(layer, (1, 1)),
        premise=mixed_weak_norm(layer, (1, 1))))
    checks.append(expect_infinite(
        "norms/layer-exp-strong", mixed_norm(layer, (1, 1))))
    checks.append(expect_close(
        "norms/layer-exp-order-swap",
        iterated_weak_norm(TransposeRep(layer), (1, 1)),
        _closed(4.0 / math.e), cfg.tol_quad,
        notes=("swapping the iteration order changes the value",)))

    # ordering sandwich on random grids, all routes exact
    rng = _rng_for(cfg.seed, "norms/ordering-sandwich")
    chains = {
        "norms/ordering-weak-le-strong": [],
        "norms/ordering-iterated-le-strong": [],
        "norms/ordering-weak-le-half-weak": [],
        "norms/ordering-iterated-le-half-strong": [],
        "norms/ordering-half-weak-le-strong": [],
        "norms/ordering-half-strong-le-strong": [],
    }
    for _ in range(cfg.sandwich_grids):
        grid = _random_grid(rng)
        for _ in range(cfg.sandwich_pairs):
            p = _exponent_pair(rng)
            strong = mixed_norm(grid, p)
            weak = mixed_weak_norm(grid, p)
            iterated = iterated_weak_norm(grid, p)
            half_iw = half_mixed_norm(grid, p, VARIANT_OUTER_STRONG_INNER_WEAK)
            half_is = half_mixed_norm(grid, p, VARIANT_OUTER_WEAK_INNER_STRONG)
            chains["norms/ordering-weak-le-strong"].append((weak, strong))
            chains["norms/ordering-iterated-le-strong"].append((iterated, strong))
            chains["norms/ordering-weak-le-half-weak"].append((weak, half_iw))
            chains["norms/ordering-iterated-le-half-strong"].append((iterated, half_is))
            chains["norms/ordering-half-weak-le-strong"].append((half_iw, strong))
            chains["norms/ordering-half-strong-le-strong"].append((half_is, strong))
    for check_id, instances in chains.items():
        checks.append(_aggregate(check_id, "upper", instances, 1.0, cfg.tol_exact,
                                 notes=("random grids, every route exact",)))

    # tensors: product rules for the weak norms
    fx = Func1D.radial_power(1.0, -0.5)
    gy = Func1D.from_steps([0.0, 1.0], [3.0])
    tensor = TensorRep(fx, gy)
    factor_product = product_result([
        NormResult(fx.weak_norm(2.0).value, METHOD_CLOSED, fx.weak_norm(2.0).err_bound),
        NormResult(gy.weak_norm(2.0).value, METHOD_CLOSED, gy.weak_norm(2.0).err_bound),
    ])
    checks.append(expect_close(
        "norms/tensor-single-level-equality", mixed_weak_norm(tensor, (2, 2)),
        factor_product, cfg.tol_quad,
        notes=("single-level second factor attains equality",)))
    checks.append(expect_close(
        "norms/tensor-iterated-matches-product",
        iterated_weak_norm(tensor, (2, 2)), factor_product, cfg.tol_quad))

    rng = _rng_for(cfg.seed, "norms/tensor-random")
    upper_instances = []
    exact_instances = []
    for _ in range(8):
        p1, p2 = _exponent_pair(rng, 1.0, 3.0)
        if p1 > p2:
            p1, p2 = p2, p1
        f = _random_step(rng)
        g = _random_step(rng)
        tens = TensorRep(f, g)
        wf = f.weak_norm(p1)
        wg = g.weak_norm(p2)
        bound = product_result([
            NormResult(wf.value, METHOD_CLOSED, wf.err_bound),
            NormResult(wg.value, METHOD_CLOSED, wg.err_bound),
        ])
        upper_instances.append((mixed_weak_norm(tens, (p1, p2)), bound))
        exact_instances.append((iterated_weak_norm(tens, (p1, p2)), bound))
    checks.append(_aggregate(
        "norms/tensor-weak-upper", "upper", upper_instances, 2.0 ** (1.0 / 1.0),
        cfg.tol_quad,
        notes=("joint weak norm against the factor product, doubling constant",)))
    checks.append(_aggregate_close(
        "norms/tensor-iterated-product-exact", exact_instances, cfg.tol_quad,
        notes=("iterated weak norm of a tensor always splits",)))

    # one factor far outside its strong space still gives a finite tensor
    tail_f = Func1D.radial_power(1.0, -0.5)
    tail_g = Func1D.from_steps([0.0, 1.0, 2.0], [2.0, 1.0])
    tail_mw = mixed_weak_norm(TensorRep(tail_f, tail_g), (2, 2))
    checks.append(expect_infinite(
        "norms/tensor-tail-factor-unbounded",
        strong_norm_1d(tail_f, 2.0),
        premise=weak_norm_1d(tail_f, 2.0),
        notes=("first factor lives on the weak side of its exponent only",)))
    checks.append(expect_close(
        "norms/tensor-tail-value",
        tail_mw, _closed(2.0 * math.sqrt(5.0)), cfg.tol_quad,
        notes=("level products sit on a plateau, value in closed form",)))
    checks.append(compare_upper(
        "norms/tensor-tail-bound",
        tail_mw,
        product_result(
            [weak_norm_1d(tail_f, 2.0), weak_norm_1d(tail_g, 2.0)], coef=2.0
        ),
        tol=cfg.tol_quad,
        notes=("doubling bound with one factor outside its strong space",)))

    # neither half-strong space compares to the joint weak space
    power_f = Func1D.radial_power(1.0, -0.5)
    box_g = Func1D.from_steps([0.0, 1.0], [1.0])
    mixed_side = mixed_weak_norm(TensorRep(power_f, box_g), (2, 2))
    checks.append(expect_infinite(
        "norms/half-strong-misses-weak-tensor",
        half_mixed_norm(TensorRep(power_f, box_g), (2, 2),
                        VARIANT_OUTER_WEAK_INNER_STRONG),
        premise=mixed_side,
        notes=("slices fail the strong inner norm, joint weak norm finite",)))
    cut = PowerProductRep(1.0, 0.0, 0.0,
                          region=RegionSpec(x_hi_coef=1.0, x_hi_expo=-0.5))
    checks.append(expect_infinite(
        "norms/weak-misses-half-strong-set", mixed_weak_norm(cut, (2, 4)),
        premise=half_mixed_norm(cut, (2, 4), VARIANT_OUTER_WEAK_INNER_STRONG),
        notes=("every slice integrable, joint weak norm divergent",)))

    return VerificationReport("norm-comparisons", cfg, tuple(checks))


# ---------------------------------------------------------------------------
# draw helpers shared by the suites


def _scaled(result: NormResult, constant: float) -> NormResult:
    """Fold a per-draw constant into a result so aggregates compare at 1.0."""
    if not result.is_finite:
        return result
    return NormResult(
        result.value * constant,
        result.method,
        result.err_bound * constant,
        notes=result.notes,
    )


def _random_grid_like(rng, grid: GridRep, zero_frac: float = 0.2) -> GridRep:
    """Fresh random cell values on the same node skeleton as ``grid``."""
    values = rng.lognormal(0.0, 1.0, size=grid.values.shape)
    mask = rng.uniform(size=values.shape) < zero_frac
    values = np.where(mask, 0.0, values)
    return GridRep(grid.xnodes, grid.ynodes, values, dims=grid.dims)


def _sample_admissible(rng, case: str) -> tuple[ExponentPair, ExponentPair]:
    """Draw an exponent pair combination that passes the splitting gate."""
    for _ in range(64):
        p1 = float(rng.uniform(1.0, 4.0))
        p2 = float(rng.uniform(1.0, 4.0))
        if case == "finite":
            s = float(rng.uniform(1.0, 4.0))
            p = ExponentPair(p1, p2)
            q = ExponentPair(s, s * p2 / p1)
        elif case == "outer_inf":
            p = ExponentPair(p1, INF)
            q = ExponentPair(float(rng.uniform(1.0, 4.0)), INF)
        elif case == "inner_inf":
            p = ExponentPair(INF, p2)
            q = ExponentPair(INF, float(rng.uniform(1.0, 4.0)))
        else:
            p = ExponentPair(p1, p2)
            q = ExponentPair(INF, INF)
        if mixed_weak_holder_admissible(p, q):
            return p, q
    raise RuntimeError(f"no admissible draw for case {case!r}")


# ---------------------------------------------------------------------------
# suite: holder


def suite_holder(config: VerifyConfig | None = None) -> VerificationReport:
    cfg = config or DEFAULT_CONFIG
    checks: list = []

    # product bounds for the level-set norms, one aggregate per gate case
    for case in ("finite", "outer_inf", "inner_inf", "wildcard"):
        rng = _rng_for(cfg.seed, f"holder/weak-product-{case}")
        count = cfg.holder_pairs if case == "finite" else max(6, cfg.holder_grids)
        instances = []
        for _ in range(count):
            p, q = _sample_admissible(rng, case)
            grid_f = _random_grid(rng)
            grid_g = _random_grid_like(rng, grid_f)
            r = holder_combine(p, q)
            constant = mixed_weak_holder_constant(p, q)
            lhs = mixed_weak_norm(pointwise_product(grid_f, grid_g), r)
            rhs = product_result(
                [mixed_weak_norm(grid_f, p), mixed_weak_norm(grid_g, q)]
            )
            instances.append((lhs, _scaled(rhs, constant)))
        checks.append(
            _aggregate(
                f"holder/weak-product-{case}",
                "upper",
                instances,
                1.0,
                cfg.tol_exact,
                notes=("product constant folded into the right side per draw",),
            )
        )

    # the slice-by-slice route has no admissibility gate at all
    rng = _rng_for(cfg.seed, "holder/iterated-product")
    instances = []
    for i in range(cfg.holder_pairs):
        p = ExponentPair(*_exponent_pair(rng, 1.0, 4.0))
        q1, q2 = _exponent_pair(rng, 1.0, 4.0)
        if i % 4 == 1:
            q1 = INF
        elif i % 4 == 2:
            q2 = INF
        q = ExponentPair(q1, q2)
        grid_f = _random_grid(rng)
        grid_g = _random_grid_like(rng, grid_f)
        r = holder_combine(p, q)
        constant = iterated_holder_constant(p, q)
        lhs = iterated_weak_norm(pointwise_product(grid_f, grid_g), r)
        rhs = product_result(
            [iterated_weak_norm(grid_f, p), iterated_weak_norm(grid_g, q)]
        )
        instances.append((lhs, _scaled(rhs, constant)))
    checks.append(
        _aggregate(
            "holder/iterated-product",
            "upper",
            instances,
            1.0,
            cfg.tol_exact,
            notes=("no exponent gate on the slicewise route",),
        )
    )

    # scalar lemma behind the doubling constants: (u-1)^a <= 2 u^a - 1
    rng = _rng_for(cfg.seed, "holder/lemma-power-split")
    instances = []
    for _ in range(cfg.lemma_samples):
        u = math.exp(float(rng.uniform(0.0, math.log(1e4))))
        alpha = float(rng.uniform(1e-3, 1.0))
        lhs = _closed(max(u - 1.0, 0.0) ** alpha)
        rhs = _closed(2.0 * u ** alpha - 1.0)
        instances.append((lhs, rhs))
    checks.append(
        _aggregate(
            "holder/lemma-power-split",
            "upper",
            instances,
            1.0,
            cfg.tol_exact,
            notes=("scalar inequality behind the doubling constants",),
        )
    )

    # scalar lemma: closed minimum of A t^a + B t^-b over t > 0
    rng = _rng_for(cfg.seed, "holder/lemma-balance")
    lam_grid = np.geomspace(1e-9, 1e9, 30001)
    instances = []
    for _ in range(cfg.lemma_samples):
        big_a = float(rng.lognormal(0.0, 1.0))
        big_b = float(rng.lognormal(0.0, 1.0))
        a = float(rng.uniform(0.2, 3.0))
        b = float(rng.uniform(0.2, 3.0))
        values = big_a * lam_grid ** a + big_b * lam_grid ** (-b)
        numeric = float(np.min(values))
        w = a + b
        closed = (
            (b / a) ** (a / w) + (a / b) ** (b / w)
        ) * big_a ** (b / w) * big_b ** (a / w)
        instances.append(
            (NormResult(numeric, METHOD_SEARCH, numeric * 1e-5), _closed(closed))
        )
    checks.append(
        _aggregate_close(
            "holder/lemma-balance",
            instances,
            1e-5,
            notes=("closed two-power minimum against a dense grid search",),
        )
    )

    # the gateless strong-to-weak ratio grows without bound
    checks.append(
        fit_growth("ratio-band", config=cfg, check_id="holder/ratio-band-growth")
    )
    _, g_flat = _ratio_band_parts(cfg.n_values[0])
    checks.append(
        expect_close(
            "holder/ratio-band-flat-factor",
            mixed_weak_norm(g_flat, (INF, 2)),
            _closed(math.sqrt(2.0)),
            cfg.tol_quad,
        )
    )
    f_narrow, _ = _ratio_band_parts(1e4)
    f_wide, _ = _ratio_band_parts(cfg.n_values[-1])
    checks.append(
        expect_close(
            "holder/ratio-band-weak-plateau",
            mixed_weak_norm(f_wide, (2, 2)),
            mixed_weak_norm(f_narrow, (2, 2)),
            cfg.tol_quad,
            notes=("weak norm of the first factor ignores the band width",),
        )
    )

    # families where dropping a hypothesis destroys the product bound
    checks.extend(_family_tail_product(cfg))
    checks.extend(_family_split_product(cfg, high_first=True))
    checks.extend(_family_split_product(cfg, high_first=False))

    return VerificationReport("holder", cfg, tuple(checks))


# ---------------------------------------------------------------------------
# suite: interpolation


def suite_interpolation(config: VerifyConfig | None = None) -> VerificationReport:
    cfg = config or DEFAULT_CONFIG
    checks: list = []

    # log-convexity of the strong norms in both slots at once
    rng = _rng_for(cfg.seed, "interp/strong-log-convexity")
    instances = []
    for _ in range(cfg.interp_grids):
        grid = _random_grid(rng)
        theta = float(rng.uniform(0.15, 0.85))
        p = ExponentPair(*_exponent_pair(rng, 1.0, 4.0))
        q = ExponentPair(*_exponent_pair(rng, 1.0, 4.0))
        r = interpolate_exponent(p, q, theta)
        lhs = mixed_norm(grid, r)
        rhs = product_result(
            [mixed_norm(grid, p), mixed_norm(grid, q)],
            powers=[theta, 1.0 - theta],
        )
        instances.append((lhs, rhs))
    checks.append(
        _aggregate(
            "interp/strong-log-convexity",
            "upper",
            instances,
            1.0,
            cfg.tol_exact,
            notes=("harmonic interpolation of both exponents, constant one",),
        )
    )

    # recover a strong norm between two weak endpoint norms, line case
    p_lo, r_mid, q_hi = 1.5, 2.0, 3.0
    kconst = half_weak_interpolation_constant(
        Exponent(p_lo), Exponent(r_mid), Exponent(q_hi)
    )
    rng = _rng_for(cfg.seed, "interp/half-weak-1d")
    witnesses = [_random_step(rng) for _ in range(max(4, cfg.lemma_samples // 8))]
    witnesses.append(Func1D.radial_power(1.0, -1.0 / q_hi, r_hi=1.0))
    instances = []
    for f in witnesses:
        lhs = strong_norm_1d(f, r_mid)
        rhs = max_result([weak_norm_1d(f, p_lo), weak_norm_1d(f, q_hi)])
        instances.append((lhs, _scaled(rhs, kconst)))
    checks.append(
        _aggregate(
            "interp/half-weak-1d",
            "upper",
            instances,
            1.0,
            cfg.tol_quad,
            notes=("strong middle norm against the worse weak endpoint norm",),
        )
    )

    # same exponents inside the inner slot of a mixed norm
    rng = _rng_for(cfg.seed, "interp/half-weak-mixed")
    instances = []
    for _ in range(cfg.interp_grids):
        grid = _random_grid(rng)
        p2 = float(rng.uniform(1.0, 4.0))
        lhs = mixed_norm(grid, (r_mid, p2))
        parts = [
            half_mixed_norm(grid, (p_lo, p2), VARIANT_OUTER_STRONG_INNER_WEAK),
            half_mixed_norm(grid, (q_hi, p2), VARIANT_OUTER_STRONG_INNER_WEAK),
        ]
        instances.append((lhs, _scaled(sum_result(parts), kconst)))
    checks.append(
        _aggregate(
            "interp/half-weak-mixed",
            "upper",
            instances,
            1.0,
            cfg.tol_exact,
            notes=("outer exponent held fixed, inner exponent interpolated",),
        )
    )

    # full recovery of a strong mixed norm from four weak corner norms
    theta = 0.5
    xi = 0.5
    p1v, q1v, r1v = 1.0, 3.0, 1.5
    p21, p22, q21, q22 = 1.0, 2.0, 3.0, 4.0
    p2d = 1.0 / (xi / p21 + (1.0 - xi) / p22)
    q2d = 1.0 / (xi / q21 + (1.0 - xi) / q22)
    r2v = 1.0 / (theta / p2d + (1.0 - theta) / q2d)
    kp1 = half_weak_interpolation_constant(
        Exponent(p1v), Exponent(r1v), Exponent(q1v)
    )
    kp2 = half_weak_interpolation_constant(
        Exponent(p2d), Exponent(r2v), Exponent(q2d)
    )
    cp = iterated_holder_constant(
        ExponentPair(p21 / theta, INF), ExponentPair(p22 / (1.0 - theta), INF)
    )
    cq = iterated_holder_constant(
        ExponentPair(q21 / theta, INF), ExponentPair(q22 / (1.0 - theta), INF)
    )
    cconst = kp1 * kp2 * cp ** xi * cq ** (1.0 - xi)
    weights = (
        theta * xi,
        (1.0 - theta) * xi,
        theta * (1.0 - xi),
        (1.0 - theta) * (1.0 - xi),
    )
    corner_pairs = ((p1v, p21), (q1v, p22), (p1v, q21), (q1v, q22))
    rng = _rng_for(cfg.seed, "interp/four-norm")
    instances = []
    for _ in range(cfg.interp_grids):
        grid = _random_grid(rng)
        corners = [mixed_weak_norm(grid, pair) for pair in corner_pairs]
        lhs = mixed_norm(grid, (r1v, r2v))
        rhs = product_result(corners, coef=cconst, powers=weights)
        instances.append((lhs, rhs))
    checks.append(
        _aggregate(
            "interp/four-norm",
            "upper",
            instances,
            1.0,
            cfg.tol_exact,
            notes=("strong middle norm against four weak corner norms",),
        )
    )

    # the borderline ridge: finite on the weak scale for every slope
    ridge = SumKernelRep(-1.0)
    checks.append(
        expect_close(
            "interp/scale-line-weak-diag",
            mixed_weak_norm(ridge, (2, 2)),
            _closed(math.sqrt(2.0)),
            cfg.tol_quad,
        )
    )
    for tag, pair in (("steep", (4.0 / 3.0, 4.0)), ("flat", (4.0, 4.0 / 3.0))):
        ratio = pair[1] / pair[0]
        closed_value = (2.0 ** (ratio + 1.0) / (ratio + 1.0)) ** (1.0 / pair[1])
        checks.append(
            expect_close(
                f"interp/scale-line-weak-{tag}",
                mixed_weak_norm(ridge, pair),
                _closed(closed_value),
                cfg.tol_quad,
            )
        )
    for tag, pair in (
        ("diag", (2.0, 2.0)),
        ("steep", (4.0 / 3.0, 4.0)),
        ("flat", (4.0, 4.0 / 3.0)),
    ):
        checks.append(
            expect_infinite(
                f"interp/scale-line-strong-{tag}",
                mixed_norm(ridge, pair),
                premise=mixed_weak_norm(ridge, pair),
                notes=("borderline decay defeats every strong pair on the line",),
            )
        )
    curve = distribution_curve(ridge, (2, 2), [0.5, 1.0, 2.0, 4.0])
    prods = [lam * phi for lam, phi in zip(curve.lambdas, curve.phis)]
    hi, lo = max(prods), min(prods)
    checks.append(
        expect_close(
            "interp/scale-line-flat-curve",
            NormResult(hi, METHOD_SEARCH, hi * 1e-6),
            NormResult(lo, METHOD_SEARCH, lo * 1e-6),
            cfg.tol_quad,
            notes=("level times superlevel size ignores the threshold",),
        )
    )
    checks.append(
        expect_close(
            "interp/scale-line-curve-value",
            NormResult(prods[0], METHOD_SEARCH, prods[0] * 1e-6),
            _closed(math.sqrt(2.0)),
            cfg.tol_quad,
        )
    )

    # the reported best level really attains the weak norm
    layer = ExpLayerRep(math.e, 1.0)
    res_layer = mixed_weak_norm(layer, (1, 1))
    lam = res_layer.maximizing_lambda or (1.0 - 1e-6)
    value, exact = indicator_mixed_norm(layer, lam, (1, 1))
    err = 0.0 if exact else lam * value * 1e-3
    checks.append(
        expect_close(
            "interp/argmax-reevaluation-layer",
            NormResult(lam * value, METHOD_SEARCH, err),
            res_layer,
            cfg.tol_quad,
            notes=("recomputing at the reported level reproduces the norm",),
        )
    )
    box = indicator_box(1.0, 1.0)
    res_box = mixed_weak_norm(box, (3, 3))
    lam_box = res_box.maximizing_lambda or (1.0 - 1e-6)
    value_b, exact_b = indicator_mixed_norm(box, lam_box, (3, 3))
    err_b = 0.0 if exact_b else lam_box * value_b * 1e-3
    checks.append(
        expect_close(
            "interp/argmax-reevaluation-box",
            NormResult(lam_box * value_b, METHOD_SEARCH, err_b),
            res_box,
            cfg.tol_quad,
        )
    )

    return VerificationReport("interpolation", cfg, tuple(checks))


# ---------------------------------------------------------------------------
# suite: geometric


def _sup_witnesses(rng, gamma_t: float):
    grid_a = _random_grid(rng)
    grid_b = _random_grid(rng)
    return [
        (indicator_box(1.0, 3.0), _box_weighted_sup(1.0, 3.0, gamma_t)),
        (indicator_box(1.0, 1.0), _box_weighted_sup(1.0, 1.0, gamma_t)),
        (
            MaxKernelRep(-gamma_t, region=RegionSpec(y_hi=2.0)),
            NormResult(1.0, METHOD_CLOSED, 0.0),
        ),
        (grid_a, _grid_weighted_sup(grid_a, gamma_t)),
        (grid_b, _grid_weighted_sup(grid_b, gamma_t)),
    ]


def suite_geometric(config: VerifyConfig | None = None) -> VerificationReport:
    cfg = config or DEFAULT_CONFIG
    checks: list = []

    # a pointwise growth bound controls every weak norm on the dual scale
    chains: dict[str, list] = {
        "geom/sup-form-weak": [],
        "geom/sup-form-iterated": [],
        "geom/sup-form-half-strong": [],
        "geom/sup-form-endpoint-tail": [],
        "geom/sup-form-endpoint-slice": [],
    }
    for q1, q2 in ((2.0, 2.0), (1.5, 3.0)):
        gamma_t = 1.0 / q1 + 1.0 / q2
        rng = _rng_for(cfg.seed, f"geom/sup-form-{q1}-{q2}")
        c_half = ((q1 + q2) / q1) ** (1.0 / q1)
        for rep, sup in _sup_witnesses(rng, gamma_t):
            chains["geom/sup-form-weak"].append(
                (mixed_weak_norm(rep, (q1, q2)), sup)
            )
            chains["geom/sup-form-iterated"].append(
                (iterated_weak_norm(rep, (q1, q2)), sup)
            )
            chains["geom/sup-form-half-strong"].append(
                (
                    half_mixed_norm(rep, (q1, q2), VARIANT_OUTER_WEAK_INNER_STRONG),
                    _scaled(sup, c_half),
                )
            )
        gamma_e = 1.0 / q1
        rng_e = _rng_for(cfg.seed, f"geom/sup-form-endpoint-{q1}")
        for rep, sup in _sup_witnesses(rng_e, gamma_e):
            chains["geom/sup-form-endpoint-tail"].append(
                (
                    half_mixed_norm(rep, (INF, q1), VARIANT_OUTER_WEAK_INNER_STRONG),
                    sup,
                )
            )
            chains["geom/sup-form-endpoint-slice"].append(
                (
                    half_mixed_norm(rep, (q1, INF), VARIANT_OUTER_STRONG_INNER_WEAK),
                    sup,
                )
            )
    notes_by_chain = {
        "geom/sup-form-weak": "weighted sup bounds the joint weak norm, constant one",
        "geom/sup-form-iterated": "same sup bounds the slicewise weak norm",
        "geom/sup-form-half-strong": "inner strong slot costs an explicit factor",
        "geom/sup-form-endpoint-tail": "bounded slices, weak tail, constant one",
        "geom/sup-form-endpoint-slice": "weak slices, bounded tail, constant one",
    }
    for check_id, instances in chains.items():
        checks.append(
            _aggregate(
                check_id,
                "upper",
                instances,
                1.0,
                cfg.tol_quad,
                notes=(notes_by_chain[check_id],),
            )
        )

    # support mass equals diameter for intervals on the line
    interval = Func1D.indicator(-1.0, 1.0)
    checks.append(
        expect_close(
            "geom/isodiametric-interval",
            _closed(interval.support_mass()),
            _closed(2.0),
            cfg.tol_exact,
            notes=("interval mass equals its diameter",),
        )
    )
    offcenter = Func1D.indicator(3.0, 7.5)
    checks.append(
        expect_close(
            "geom/isodiametric-offcenter",
            _closed(offcenter.support_mass()),
            _closed(4.5),
            cfg.tol_exact,
        )
    )

    # separation sup over support pairs bounds the product norms
    rng = _rng_for(cfg.seed, "geom/distance-sup-tensor")
    tensor_instances = []
    for i in range(8):
        q1, q2 = (2.0, 2.0) if i % 2 == 0 else (1.5, 3.0)
        gamma_t = 1.0 / q1 + 1.0 / q2
        f = _random_step(rng, decreasing=True)
        g = _random_step(rng, decreasing=True)
        sup = 0.0
        for pf in f.pieces:
            for pg in g.pieces:
                sup = max(sup, pf.coef * pg.coef * (pf.hi + pg.hi) ** gamma_t)
        lhs = iterated_weak_norm(TensorRep(f, g), (q1, q2))
        tensor_instances.append(
            (lhs, _scaled(NormResult(sup, METHOD_GRID, 0.0), 2.0 ** gamma_t))
        )
    checks.append(
        _aggregate(
            "geom/distance-sup-tensor",
            "upper",
            tensor_instances,
            1.0,
            cfg.tol_quad,
            notes=("corner sup over cell pairs bounds the slicewise norm",),
        )
    )
    rng = _rng_for(cfg.seed, "geom/distance-sup-indicator")
    ind_instances = []
    for i in range(6):
        q1, q2 = (2.0, 2.0) if i % 2 == 0 else (3.0, 1.5)
        gamma_t = 1.0 / q1 + 1.0 / q2
        a = float(rng.lognormal(0.0, 1.0))
        b = float(rng.lognormal(0.0, 1.0))
        block = TensorRep(
            Func1D.from_steps([0.0, a], [1.0]), Func1D.from_steps([0.0, b], [1.0])
        )
        lhs = mixed_norm(block, (q1, q2))
        rhs = _closed((2.0 ** gamma_t) * (a + b) ** gamma_t)
        ind_instances.append((lhs, rhs))
    checks.append(
        _aggregate(
            "geom/distance-sup-indicator",
            "upper",
            ind_instances,
            1.0,
            cfg.tol_exact,
            notes=("even the strong norm of a block obeys the separation sup",),
        )
    )

    # symmetric kernel: weak-to-weak bound at the splitting exponents
    p_pair = ExponentPair(2, 2)
    r_pair = ExponentPair(2, 2)
    c_weak = mixed_weak_holder_constant(p_pair, r_pair)
    c_iter = iterated_holder_constant(p_pair, r_pair)
    rng = _rng_for(cfg.seed, "geom/kernel-witnesses")
    kernel_witnesses = [
        indicator_box(1.0, 2.0),
        MaxKernelRep(0.5, region=RegionSpec(x_hi_coef=1.0, y_hi=1.0)),
        _random_grid(rng),
    ]
    weak_instances = []
    iter_instances = []
    for w in kernel_witnesses:
        image = apply_symmetric_kernel(w, 1.0)
        weak_instances.append(
            (
                mixed_weak_norm(image, (1, 1)),
                _scaled(mixed_weak_norm(w, (2, 2)), c_weak),
            )
        )
        iter_instances.append(
            (
                iterated_weak_norm(image, (1, 1)),
                _scaled(iterated_weak_norm(w, (2, 2)), c_iter),
            )
        )
    checks.append(
        _aggregate(
            "geom/kernel-weak-upper",
            "upper",
            weak_instances,
            1.0,
            cfg.tol_quad,
            notes=("weight splits as a product, kernel factor has norm one",),
        )
    )
    checks.append(
        _aggregate(
            "geom/kernel-iterated-upper",
            "upper",
            iter_instances,
            1.0,
            cfg.tol_quad,
        )
    )
    checks.append(
        expect_close(
            "geom/kernel-unit-weak",
            mixed_weak_norm(MaxKernelRep(-1.0), (2, 2)),
            _closed(1.0),
            cfg.tol_quad,
            notes=("the kernel itself has weak norm exactly one",),
        )
    )
    checks.append(
        expect_close(
            "geom/kernel-unit-iterated",
            iterated_weak_norm(MaxKernelRep(-1.0), (2, 2)),
            _closed(1.0),
            cfg.tol_quad,
        )
    )
    box12 = indicator_box(1.0, 2.0)
    lifted = apply_symmetric_kernel(box12, 1.0, inverse=True)
    checks.append(
        compare_lower(
            "geom/kernel-inverse-lower",
            mixed_weak_norm(lifted, (2, 2)),
            mixed_weak_norm(box12, (1, 1)),
            constant=1.0 / c_weak,
            tol=cfg.tol_quad,
            notes=("the bound applied to the preimage flips into a lower bound",),
        )
    )

    # exact homogeneity of the norms and of the kernel application
    base_box = indicator_box(1.0, 1.0)
    base_ridge = SumKernelRep(-1.0)
    base_box_norm = mixed_weak_norm(base_box, (2, 2))
    base_ridge_norm = mixed_weak_norm(base_ridge, (2, 2))
    dil_instances = []
    for scale in (0.125, 8.0):
        rate = scale ** (-1.0)
        dil_instances.append(
            (
                mixed_weak_norm(indicator_box(1.0 / scale, 1.0 / scale), (2, 2)),
                _scaled(base_box_norm, rate),
            )
        )
        dil_instances.append(
            (
                mixed_weak_norm(SumKernelRep(-1.0, coef=1.0 / scale), (2, 2)),
                _scaled(base_ridge_norm, rate),
            )
        )
    checks.append(
        _aggregate_close(
            "geom/dilation-covariance",
            dil_instances,
            cfg.tol_quad,
            notes=("rescaling both variables moves the norm by the exact power",),
        )
    )
    image_base = apply_symmetric_kernel(base_box, 1.0)
    base_val = mixed_weak_norm(image_base, (1, 1))
    sweep_instances = []
    for scale in (1.0, 10.0, 100.0):
        shrunk = indicator_box(1.0 / scale, 1.0 / scale)
        lhs = mixed_weak_norm(apply_symmetric_kernel(shrunk, 1.0), (1, 1))
        sweep_instances.append((lhs, _scaled(base_val, 1.0 / scale)))
    checks.append(
        _aggregate_close(
            "geom/kernel-dilation-sweep",
            sweep_instances,
            cfg.tol_quad,
            notes=("kernel application commutes with rescaling, exact power",),
        )
    )

    # strong norms along widening bands: growth at the predicted rate
    checks.append(
        fit_growth("wedge-band", config=cfg, check_id="geom/wedge-band-growth")
    )
    wedge0 = SumKernelRep(
        -1.0,
        region=RegionSpec(y_lo=1.0, y_hi=float(cfg.n_values[0]), relation="y_le_x"),
    )
    checks.append(
        compare_upper(
            "geom/wedge-band-pointwise-premise",
            _weighted_sup(wedge0, 1.0),
            _closed(2.0),
            tol=cfg.tol_quad,
            notes=("weighted sup stays bounded while the strong norm grows",),
        )
    )
    checks.append(
        fit_growth("plane-band", config=cfg, check_id="geom/plane-band-growth")
    )
    checks.append(
        fit_growth("box-band-inner", config=cfg, check_id="geom/box-band-inner-growth")
    )
    checks.append(
        fit_growth("box-band-outer", config=cfg, check_id="geom/box-band-outer-growth")
    )
    checks.append(
        fit_growth(
            "kernel-mask-band", config=cfg, check_id="geom/kernel-mask-band-growth"
        )
    )
    mask_rep = _kernel_mask_rep(float(cfg.n_values[-1]))
    c_mask = mixed_weak_holder_constant(ExponentPair(2, 2), ExponentPair(4, 4))
    checks.append(
        compare_upper(
            "geom/kernel-mask-weak-bounded",
            mixed_weak_norm(
                apply_symmetric_kernel(mask_rep, 0.5), (4.0 / 3.0, 4.0 / 3.0)
            ),
            _scaled(mixed_weak_norm(mask_rep, (2, 2)), c_mask),
            tol=cfg.tol_quad,
            notes=("weak route stays bounded at the widest band",),
        )
    )
    checks.append(
        fit_growth("distance-band", config=cfg, check_id="geom/distance-band-growth")
    )
    checks.extend(_family_pinch_support(cfg))
    checks.extend(_family_distance_split(cfg))

    # difference kernel: positive bounds on the slicewise scales
    gamma_d = 0.25
    s_dual = 1.0 / gamma_d
    c_diff = (
        iterated_holder_constant(ExponentPair(s_dual, INF), ExponentPair(2, INF))
        * 2.0 ** gamma_d
    )
    diff_box = indicator_box(1.0, 1.0)
    diff_soft = DiffKernelRep(
        -0.125, region=RegionSpec(x_hi_coef=1.0, y_hi=1.0)
    )
    half_instances = []
    iter_instances2 = []
    for w in (diff_box, diff_soft):
        image = apply_difference_kernel(w, gamma_d)
        half_instances.append(
            (
                half_mixed_norm(
                    image, (4.0 / 3.0, 2.0), VARIANT_OUTER_STRONG_INNER_WEAK
                ),
                _scaled(
                    half_mixed_norm(w, (2, 2), VARIANT_OUTER_STRONG_INNER_WEAK),
                    c_diff,
                ),
            )
        )
        iter_instances2.append(
            (
                iterated_weak_norm(image, (4.0 / 3.0, 2.0)),
                _scaled(iterated_weak_norm(w, (2, 2)), c_diff),
            )
        )
    checks.append(
        _aggregate(
            "geom/difference-half-upper",
            "upper",
            half_instances,
            1.0,
            cfg.tol_quad,
            notes=("slicewise convolution bound, outer slot untouched",),
        )
    )
    checks.append(
        _aggregate(
            "geom/difference-iterated-upper",
            "upper",
            iter_instances2,
            1.0,
            cfg.tol_quad,
        )
    )
    lifted_d = apply_difference_kernel(diff_box, gamma_d, inverse=True)
    checks.append(
        compare_lower(
            "geom/difference-inverse-lower",
            iterated_weak_norm(lifted_d, (2, 2)),
            iterated_weak_norm(diff_box, (4.0 / 3.0, 2.0)),
            constant=1.0 / c_diff,
            tol=cfg.tol_quad,
        )
    )

    # difference kernel: the strong outer slot genuinely cannot improve
    sharp = DiffKernelRep(-0.5, region=RegionSpec(x_hi_coef=1.0, y_hi=1.0))
    checks.append(
        expect_infinite(
            "geom/difference-false-outer-drop",
            mixed_norm(apply_difference_kernel(sharp, 0.5), (1, 1)),
            premise=mixed_weak_norm(sharp, (1, 2)),
            notes=("lowering the outer exponent of the image has no bound",),
        )
    )
    damped = LogDampedRep.from_strength(0.5, 1.0)
    checks.append(
        expect_infinite(
            "geom/difference-false-outer-equal",
            mixed_norm(apply_difference_kernel(damped, 0.5), (1, 1)),
            premise=mixed_norm(damped, (2, 1)),
            notes=("log damping keeps the source finite, the image diverges",),
        )
    )
    fullx = DiffKernelRep(-1.0, region=RegionSpec(y_hi=1.0))
    checks.append(
        expect_infinite(
            "geom/difference-false-half",
            half_mixed_norm(
                apply_difference_kernel(fullx, 0.5),
                (1, 1),
                VARIANT_OUTER_STRONG_INNER_WEAK,
            ),
            premise=half_mixed_norm(fullx, (1, 2), VARIANT_OUTER_STRONG_INNER_WEAK),
            notes=("half-weak source bounds do not survive the extra order",),
        )
    )
    checks.append(
        expect_infinite(
            "geom/difference-false-iterated",
            iterated_weak_norm(apply_difference_kernel(fullx, 0.5), (1, 1)),
            premise=iterated_weak_norm(fullx, (1, 2)),
        )
    )

    # difference kernel membership: slices yes, tail no
    lone = DiffKernelRep(-0.5)
    slice_side = half_mixed_norm(lone, (2, INF), VARIANT_OUTER_STRONG_INNER_WEAK)
    checks.append(
        expect_close(
            "geom/difference-membership-slice",
            slice_side,
            _closed(math.sqrt(2.0)),
            cfg.tol_quad,
            notes=("every slice has the same weak norm by translation",),
        )
    )
    checks.append(
        expect_infinite(
            "geom/difference-membership-swapped",
            half_mixed_norm(lone, (INF, 2), VARIANT_OUTER_WEAK_INNER_STRONG),
            premise=slice_side,
            notes=("slices are individually unbounded, the swap diverges",),
        )
    )

    return VerificationReport("geometric", cfg, tuple(checks))


# ---------------------------------------------------------------------------
# suite: convergence


def suite_convergence(config: VerifyConfig | None = None) -> VerificationReport:
    cfg = config or DEFAULT_CONFIG
    checks: list = []

    # rising truncations: values, ordering, and the closing gap
    ks = (2.0, 4.0, 6.0, 8.0, 10.0)
    truncs = [
        mixed_weak_norm(ExpLayerRep(math.e, 1.0, y_hi=k), (1, 1)) for k in ks
    ]
    closed_vals = [_closed(4.0 * (1.0 - math.exp(-k))) for k in ks]
    checks.append(
        _aggregate_close(
            "conv/monotone-truncation-values",
            list(zip(truncs, closed_vals)),
            cfg.tol_quad,
            notes=("rising truncations match the layer integral",),
        )
    )
    ordering = [(truncs[i], truncs[i + 1]) for i in range(len(truncs) - 1)]
    checks.append(
        _aggregate(
            "conv/monotone-ordering",
            "upper",
            ordering,
            1.0,
            cfg.tol_exact,
            notes=("norms rise with the truncation height",),
        )
    )
    checks.append(
        expect_close(
            "conv/monotone-limit-gap",
            truncs[-1],
            _closed(4.0),
            1e-3,
            notes=("tallest truncation sits within the target gap of the limit",),
        )
    )

    # escaping supports: pointwise limit zero, norms pinned at four
    moving = [
        PowerProductRep(
            1.0,
            0.0,
            0.0,
            region=RegionSpec(x_hi_coef=1.0, y_lo=float(k), y_hi=float(k) + 1.0),
        )
        for k in (1.0, 3.0, 5.0, 7.0)
    ]
    moving_norms = [mixed_weak_norm(rep, (1, 1)) for rep in moving]
    floor_val = min(r.value for r in moving_norms)
    floor = NormResult(
        floor_val,
        _worst_method(moving_norms),
        max(r.err_bound for r in moving_norms),
    )
    checks.append(
        compare_lower(
            "conv/fatou-escaping-boxes",
            floor,
            _closed(4.0),
            tol=cfg.tol_quad,
            notes=("limit function vanishes while every norm holds at four",),
        )
    )
    osc = [
        mixed_weak_norm(
            ExpLayerRep(math.e, 1.0, y_hi=(2.0 if i % 2 == 0 else 10.0)), (1, 1)
        )
        for i in range(6)
    ]
    osc_floor_val = min(r.value for r in osc)
    osc_floor = NormResult(
        osc_floor_val, _worst_method(osc), max(r.err_bound for r in osc)
    )
    checks.append(
        expect_close(
            "conv/fatou-oscillating-floor",
            mixed_weak_norm(ExpLayerRep(math.e, 1.0, y_hi=2.0), (1, 1)),
            osc_floor,
            cfg.tol_quad,
            notes=("lower envelope of oscillating truncations is attained",),
        )
    )

    # shifted tails: a fixed majorant exists, the norms refuse to decay
    def tail_norm(k: float) -> NormResult:
        fx = Func1D.radial_power(1.0, -1.0, r_lo=k)
        gy = Func1D.from_steps([0.0, 1.0], [1.0])
        return mixed_weak_norm(TensorRep(fx, gy), (1, 1))

    tail_ks = (1.0, 10.0, 100.0, 1000.0)
    tail_norms = [tail_norm(k) for k in tail_ks]
    checks.append(
        _aggregate_close(
            "conv/dominated-constant-norms",
            [(r, _closed(4.0)) for r in tail_norms],
            cfg.tol_quad,
            notes=("integrable majorant, yet the weak norms never drop",),
        )
    )
    checks.append(
        fit_growth(
            "shifted-tail",
            parameters=tail_ks,
            config=cfg,
            check_id="conv/dominated-flat-fit",
        )
    )
    checks.append(
        _aggregate_close(
            "conv/distance-to-zero-limit",
            [(r, _closed(4.0)) for r in tail_norms],
            cfg.tol_quad,
            notes=("pointwise limit is zero, the distance to it never decays",),
        )
    )

    # pinching supports: genuine convergence at a closed-form rate
    pinch_params = tuple(float(n) for n in cfg.n_values)
    pinch_instances = []
    for k in pinch_params:
        d = truncated_distance(_pinch_rep(k), None, 0.5, (2, 1))
        pinch_instances.append(
            (
                NormResult(d, METHOD_SEARCH, d * 1e-6),
                _closed(4.0 * math.sqrt(2.0) / math.sqrt(k)),
            )
        )
    checks.append(
        _aggregate_close(
            "conv/pinch-distance-values",
            pinch_instances,
            cfg.tol_quad,
            notes=("pinched sets approach zero at the closed rate",),
        )
    )
    checks.append(
        fit_growth("pinch-distance", config=cfg, check_id="conv/pinch-distance-decay")
    )
    checks.append(
        compare_upper(
            "conv/pinch-final-gap",
            pinch_instances[-1][0],
            _closed(1e-3),
            tol=0.0,
            notes=("distance at the tightest pinch is below the target gap",),
        )
    )
    mass_results = [mixed_norm(_pinch_rep(k), (1, 1)) for k in pinch_params]
    mass_lhs = next(
        (r for r in mass_results if r.is_finite), mass_results[0]
    )
    all_inf = all(not r.is_finite for r in mass_results)
    checks.append(
        expect_infinite(
            "conv/pinch-mass-infinite",
            mass_lhs,
            premise=pinch_instances[0][0],
            notes=(
                f"instances={len(mass_results)}",
                f"all_infinite={all_inf}",
                "convergence in distance without convergence in mass",
            ),
        )
    )

    # supports escaping upward converge too, at a slower closed rate
    far_instances = []
    for k in pinch_params:
        d = truncated_distance(_pinch_far_rep(k), None, 0.5, (1, 2))
        far_instances.append(
            (NormResult(d, METHOD_SEARCH, d * 1e-6), _closed(math.sqrt(8.0 / k)))
        )
    checks.append(
        _aggregate_close(
            "conv/pinch-far-values",
            far_instances,
            cfg.tol_quad,
            notes=("supports escaping upward still approach zero",),
        )
    )
    checks.append(
        fit_growth(
            "pinch-distance-far", config=cfg, check_id="conv/pinch-far-decay"
        )
    )

    # successive differences shrink like a Cauchy tail
    cauchy_instances = []
    for k, l in ((1.0, 4.0), (4.0, 16.0), (16.0, 64.0)):
        region = RegionSpec(
            x_hi_coef=1.0, x_hi_expo=-1.0, y_lo=1.0 / l, y_hi=1.0 / k
        )
        diff = PowerProductRep(1.0, 0.0, 0.0, region=region)
        d = truncated_distance(diff, None, 0.5, (2, 1))
        target = 4.0 * math.sqrt(2.0) * (1.0 / math.sqrt(k) - 1.0 / math.sqrt(l))
        cauchy_instances.append(
            (NormResult(d, METHOD_SEARCH, d * 1e-6), _closed(target))
        )
    checks.append(
        _aggregate_close(
            "conv/pinch-cauchy-differences",
            cauchy_instances,
            cfg.tol_quad,
            notes=("symmetric differences shrink at the closed-form rate",),
        )
    )

    return VerificationReport("convergence", cfg, tuple(checks))


# ---------------------------------------------------------------------------
# suite: hls


def _line_cells(f: Func1D) -> list:
    cells = []
    for pc in f.pieces:
        if not pc.is_constant():
            raise ValueError("energy cells require step functions")
        cells.append((pc.lo, pc.hi, pc.coef))
    return cells


def _pair_energy(f: Func1D, g: Func1D, s: float) -> float:
    """Double integral of f(x) |x-y|^s g(y) for step functions, exactly.

    Uses the second antiderivative of |u|^s, so each cell pair contributes
    a four-corner difference.  Valid for s > -1, s != 0.
    """
    denom = (1.0 + s) * (2.0 + s)

    def anti(u: float) -> float:
        return abs(u) ** (2.0 + s) / denom

    total = 0.0
    for a, b, fv in _line_cells(f):
        for c, d, gv in _line_cells(g):
            w = anti(b - c) + anti(a - d) - anti(b - d) - anti(a - c)
            total += fv * gv * w
    return total


def suite_hls(config: VerifyConfig | None = None) -> VerificationReport:
    cfg = config or DEFAULT_CONFIG
    checks: list = []

    # attracting kernel: energy below the sharp product bound
    s_forward = -2.0 / 3.0
    p_forward = 1.5
    sharp = (
        math.pi ** (1.0 / 6.0) * math.gamma(1.0 / 6.0) / math.gamma(2.0 / 3.0)
    )
    rng = _rng_for(cfg.seed, "hls/forward")
    pairs = []
    ratio_instances = []
    for _ in range(cfg.hls_pairs):
        f = _random_step(rng, radial=False)
        g = _random_step(rng, radial=False)
        pairs.append((f, g))
        energy = _pair_energy(f, g, s_forward)
        nf = strong_norm_1d(f, p_forward)
        ng = strong_norm_1d(g, p_forward)
        ratio_instances.append(
            (
                NormResult(energy, METHOD_CLOSED, abs(energy) * 1e-12),
                product_result([nf, ng], coef=sharp),
            )
        )
    checks.append(
        _aggregate(
            "hls/forward-ratio-bound",
            "upper",
            ratio_instances,
            1.0,
            cfg.tol_exact,
            notes=("sharp constant from the matched-exponent extremal case",),
        )
    )

    # independent route: cellwise quadrature of the smoothing integral;
    # the smoothed function has cusps at the other factor's cell edges,
    # so panels are split there before applying the Gauss rule
    glx, glw = np.polynomial.legendre.leggauss(5)
    dual_instances = []
    for f, g in pairs[:10]:
        direct = _pair_energy(f, g, s_forward)
        gcells = _line_cells(g)
        gbreaks = sorted({a for a, _, _ in gcells} | {b for _, b, _ in gcells})
        approx = 0.0
        for a, b, fv in _line_cells(f):
            edges = [a] + [c for c in gbreaks if a < c < b] + [b]
            for a2, b2 in zip(edges, edges[1:]):
                mid = 0.5 * (a2 + b2)
                half = 0.5 * (b2 - a2)
                acc = 0.0
                for x, wq in zip(mid + half * glx, glw):
                    acc += wq * fractional_integral_1d(g, 1.0 / 3.0, float(x))
                approx += fv * half * acc
        dual_instances.append(
            (
                NormResult(approx, METHOD_SEARCH, abs(approx) * 1e-2),
                NormResult(direct, METHOD_CLOSED, abs(direct) * 1e-12),
            )
        )
    checks.append(
        _aggregate_close(
            "hls/forward-dual-route",
            dual_instances,
            cfg.tol_quad,
            notes=("cell quadrature of the smoothing operator matches",),
        )
    )

    # growing kernel: the reversed ratio stays strictly positive
    s_reverse = 1.0
    p_reverse = 2.0 / 3.0
    rngr = _rng_for(cfg.seed, "hls/reverse")
    n_rev = max(10, cfg.hls_pairs // 2)
    min_ratio = INF
    for _ in range(n_rev):
        f = _random_step(rngr, radial=False)
        g = _random_step(rngr, radial=False)
        energy = _pair_energy(f, g, s_reverse)
        nf = strong_norm_1d(f, p_reverse)
        ng = strong_norm_1d(g, p_reverse)
        min_ratio = min(min_ratio, energy / (nf.value * ng.value))
    checks.append(
        compare_lower(
            "hls/reverse-ratio-positive",
            NormResult(min_ratio, METHOD_SEARCH, min_ratio * 1e-6),
            _closed(1e-9),
            tol=0.0,
            notes=(f"smallest observed ratio over {n_rev} pairs",),
        )
    )

    # symmetrization moves the energy the right way for each kernel sign
    fwd_re = []
    rev_re = []
    for f, g in pairs[:20]:
        fr = symmetric_rearrangement(f).as_line()
        gr = symmetric_rearrangement(g).as_line()
        fwd_re.append(
            (
                NormResult(
                    _pair_energy(f, g, s_forward), METHOD_CLOSED, 1e-12
                ),
                NormResult(
                    _pair_energy(fr, gr, s_forward), METHOD_CLOSED, 1e-12
                ),
            )
        )
        rev_re.append(
            (
                NormResult(
                    _pair_energy(f, g, s_reverse), METHOD_CLOSED, 1e-12
                ),
                NormResult(
                    _pair_energy(fr, gr, s_reverse), METHOD_CLOSED, 1e-12
                ),
            )
        )
    checks.append(
        _aggregate(
            "hls/rearrangement-forward",
            "upper",
            fwd_re,
            1.0,
            cfg.tol_exact,
            notes=("centering and symmetrizing raises the attracting energy",),
        )
    )
    checks.append(
        _aggregate(
            "hls/rearrangement-reverse",
            "lower",
            rev_re,
            1.0,
            cfg.tol_exact,
            notes=("for the growing kernel the same move lowers the energy",),
        )
    )

    return VerificationReport("hls", cfg, tuple(checks))


# ---------------------------------------------------------------------------
# entry points


SUITES: dict[str, Callable[[VerifyConfig | None], VerificationReport]] = {
    "norm-comparisons": suite_norm_comparisons,
    "holder": suite_holder,
    "interpolation": suite_interpolation,
    "geometric": suite_geometric,
    "convergence": suite_convergence,
    "hls": suite_hls,
}


def run_suite(name: str, config: VerifyConfig | None = None) -> VerificationReport:
    if name not in SUITES:
        known = ", ".join(SUITE_NAMES)
        raise ValueError(f"unknown suite {name!r}; choose from {known}")
    return SUITES[name](config or DEFAULT_CONFIG)


def run_all(config: VerifyConfig | None = None) -> tuple[VerificationReport, ...]:
    cfg = config or DEFAULT_CONFIG
    return tuple(SUITES[name](cfg) for name in SUITE_NAMES)
