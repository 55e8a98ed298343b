"""Kernel multiplication operators, the one-variable fractional integral,
and symmetric decreasing rearrangement.

The two kernel operators act by pointwise multiplication:

* symmetric kernel:   (|x+y| + |x-y|)^(-g), which is (2 max(|x|,|y|))^(-g) in 1-D
* difference kernel:  |x-y|^(-g)

with ``inverse=True`` multiplying by the reciprocal kernel instead.  Products
stay inside the closed-form catalog whenever the factors merge; otherwise a
generic product wrapper is returned and downstream norms fall back to sampled
slices.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from typing import Callable, List, Optional, Tuple

import numpy as np

from .exponents import DimPair, unit_ball_volume
from .funcone import Func1D, IncompatibleProduct, Piece
from .funcrep import (
    DiffKernelRep,
    FuncRep,
    GridRep,
    LogDampedRep,
    MaxKernelRep,
    PowerProductRep,
    ProductRep,
    RegionSpec,
    TensorRep,
    UnsupportedDimension,
)

INF = math.inf

KIND_SYMMETRIC_KERNEL = "symmetric_kernel"
KIND_DIFFERENCE_KERNEL = "difference_kernel"
KIND_FRACTIONAL_INTEGRAL = "fractional_integral"
_KINDS = (KIND_SYMMETRIC_KERNEL, KIND_DIFFERENCE_KERNEL, KIND_FRACTIONAL_INTEGRAL)

FRACTIONAL_REL_TOL = 1e-8
FRACTIONAL_EVAL_BUDGET = 100_000


class QuadratureFailure(RuntimeError):
    """Adaptive refinement ran out of budget before reaching tolerance."""


class SingularSlice(UserWarning):
    """A grid cell straddles the diagonal; its kernel value is approximate."""


@dataclass(frozen=True)
class OperatorSpec:
    """Serializable description of one operator application."""

    kind: str
    gamma: float
    inverse: bool = False
    dims: DimPair = DimPair(1, 1)

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown operator kind {self.kind!r}")
        if not (self.gamma > 0) or math.isinf(self.gamma):
            raise ValueError("the kernel exponent must be positive and finite")
        if self.kind == KIND_FRACTIONAL_INTEGRAL:
            if self.inverse:
                raise ValueError("the fractional integral has no inverse variant here")
            if self.gamma >= self.dims.n:
                raise ValueError("fractional order must be below the dimension")

    def apply(self, rep: FuncRep) -> FuncRep:
        if self.kind == KIND_SYMMETRIC_KERNEL:
            return apply_symmetric_kernel(rep, self.gamma, self.inverse)
        if self.kind == KIND_DIFFERENCE_KERNEL:
            return apply_difference_kernel(rep, self.gamma, self.inverse)
        raise ValueError("the fractional integral is evaluated pointwise; "
                         "call fractional_integral_1d instead")

    def to_json(self) -> dict:
        return {"kind": self.kind, "gamma": self.gamma, "inverse": self.inverse}

    @classmethod
    def from_json(cls, data: dict) -> "OperatorSpec":
        return cls(
            kind=data["kind"],
            gamma=float(data["gamma"]),
            inverse=bool(data.get("inverse", False)),
        )


# ---------------------------------------------------------------------------
# pointwise products with catalog closure


def _is_full(region: RegionSpec) -> bool:
    return (
        region.x_lo == 0.0
        and math.isinf(region.x_hi_coef)
        and region.y_lo == 0.0
        and math.isinf(region.y_hi)
        and region.relation == "none"
    )


def _covers_box(region: RegionSpec, box: float) -> bool:
    """Does the region contain the whole square [0, box] x [0, box]?"""
    if region.x_lo > 0 or region.y_lo > 0 or region.relation != "none":
        return False
    if region.y_hi < box:
        return False
    if math.isinf(region.x_hi_coef):
        return True
    return region.x_hi_expo == 0.0 and region.x_hi_coef >= box


def _zero_rep(dims: DimPair) -> PowerProductRep:
    return PowerProductRep(0.0, 0.0, 0.0, None, dims)


def _intersect(a: RegionSpec, b: RegionSpec) -> Tuple[Optional[RegionSpec], bool]:
    """(intersection, empty): None with empty=False means unrepresentable."""
    if min(a.y_hi, b.y_hi) <= max(a.y_lo, b.y_lo):
        return None, True
    return a.intersect(b), False


def _as_constant(rep: FuncRep) -> Optional[float]:
    if (
        isinstance(rep, PowerProductRep)
        and rep.x_expo == 0.0
        and rep.y_expo == 0.0
        and _is_full(rep.region)
    ):
        return rep.coef
    return None


def _as_indicator(rep: FuncRep) -> Optional[Tuple[float, RegionSpec]]:
    if isinstance(rep, PowerProductRep) and rep.x_expo == 0.0 and rep.y_expo == 0.0:
        return (rep.coef, rep.region)
    return None


def _merge(a: FuncRep, b: FuncRep) -> Optional[FuncRep]:
    """One-directional merge attempt; callers try both orders."""
    dims = a.dims
    if isinstance(a, GridRep) and isinstance(b, GridRep):
        try:
            return a.multiply(b)
        except IncompatibleProduct:
            return None
    if isinstance(a, PowerProductRep) and isinstance(b, PowerProductRep):
        region, empty = _intersect(a.region, b.region)
        if empty:
            return _zero_rep(dims)
        if region is None:
            return None
        return PowerProductRep(
            a.coef * b.coef, a.x_expo + b.x_expo, a.y_expo + b.y_expo, region, dims
        )
    if isinstance(a, MaxKernelRep):
        if isinstance(b, MaxKernelRep):
            region, empty = _intersect(a.region, b.region)
            if empty:
                return _zero_rep(dims)
            if region is None:
                return None
            power = a.power + b.power
            coef = a.coef * b.coef
            if power == 0.0:
                return PowerProductRep(coef, 0.0, 0.0, region, dims)
            return MaxKernelRep(power, coef, region, dims)
        ind = _as_indicator(b)
        if ind is not None:
            coef, breg = ind
            region, empty = _intersect(a.region, breg)
            if empty or coef == 0.0:
                return _zero_rep(dims)
            if region is None:
                return None
            return MaxKernelRep(a.power, a.coef * coef, region, dims)
    if isinstance(a, DiffKernelRep):
        if isinstance(b, DiffKernelRep):
            region, empty = _intersect(a.region, b.region)
            if empty:
                return _zero_rep(dims)
            if region is None:
                return None
            power = a.power + b.power
            coef = a.coef * b.coef
            if power == 0.0:
                return PowerProductRep(coef, 0.0, 0.0, region, dims)
            return DiffKernelRep(power, coef, region, dims)
        ind = _as_indicator(b)
        if ind is not None:
            coef, breg = ind
            region, empty = _intersect(a.region, breg)
            if empty or coef == 0.0:
                return _zero_rep(dims)
            if region is None:
                return None
            return DiffKernelRep(a.power, a.coef * coef, region, dims)
        if (
            isinstance(b, LogDampedRep)
            and a.coef == 1.0
            and _covers_box(a.region, b.box)
        ):
            return LogDampedRep(b.expo + a.power, b.log_expo, b.box, b.dims)
    if isinstance(a, TensorRep) and isinstance(b, TensorRep):
        try:
            fx = a.fx.multiply(b.fx)
            gy = a.gy.multiply(b.gy)
        except IncompatibleProduct:
            return None
        return TensorRep(fx, gy, dims)
    return None


def pointwise_product(left: FuncRep, right: FuncRep) -> FuncRep:
    """Pointwise product, staying in closed form when the factors allow it."""
    if (left.dims.n, left.dims.m) != (right.dims.n, right.dims.m):
        raise ValueError("factor dimensions differ")
    for a, b in ((left, right), (right, left)):
        c = _as_constant(a)
        if c is not None:
            try:
                return b.scaled(c)
            except NotImplementedError:
                break
    merged = _merge(left, right)
    if merged is None:
        merged = _merge(right, left)
    if merged is not None:
        return merged
    return ProductRep(left, right)


# ---------------------------------------------------------------------------
# the two kernel operators


def _require_plane(rep: FuncRep, what: str):
    if (rep.dims.n, rep.dims.m) != (1, 1):
        raise UnsupportedDimension(f"{what} needs one-dimensional factors")


def _grid_midpoints(g: GridRep) -> Tuple[np.ndarray, np.ndarray]:
    mx = 0.5 * (g.xnodes[:-1] + g.xnodes[1:])
    my = 0.5 * (g.ynodes[:-1] + g.ynodes[1:])
    return mx, my


def apply_symmetric_kernel(rep: FuncRep, gamma: float, inverse: bool = False) -> FuncRep:
    """Multiply by (|x+y| + |x-y|)^(-gamma), or its reciprocal when inverse."""
    if not (gamma > 0):
        raise ValueError("kernel exponent must be positive")
    power = gamma if inverse else -gamma
    if isinstance(rep, GridRep):
        _require_plane(rep, "the symmetric kernel")
        mx, my = _grid_midpoints(rep)
        factor = (2.0 * np.maximum(mx[:, None], my[None, :])) ** power
        return GridRep(rep.xnodes, rep.ynodes, rep.values * factor, rep.dims)
    kernel = MaxKernelRep(power, 1.0, None, rep.dims)
    return pointwise_product(rep, kernel)


def _mean_abs_diff(a1: float, b1: float, a2: float, b2: float) -> float:
    # cell average of |x - y| over [a1,b1] x [a2,b2]; second antiderivative of |u|
    def k2(u: float) -> float:
        return abs(u) ** 3 / 6.0

    total = k2(b1 - a2) - k2(a1 - a2) - k2(b1 - b2) + k2(a1 - b2)
    return total / ((b1 - a1) * (b2 - a2))


def apply_difference_kernel(rep: FuncRep, gamma: float, inverse: bool = False) -> FuncRep:
    """Multiply by |x-y|^(-gamma), or its reciprocal when inverse.

    On grids the kernel is sampled at cell midpoints in the same-sign
    regime; cells straddling the diagonal are flagged with SingularSlice,
    and a cell whose midpoints coincide falls back to the exact cell
    average of |x-y| so the value stays finite.
    """
    if not (gamma > 0):
        raise ValueError("kernel exponent must be positive")
    power = gamma if inverse else -gamma
    if isinstance(rep, GridRep):
        _require_plane(rep, "the difference kernel")
        mx, my = _grid_midpoints(rep)
        dist = np.abs(mx[:, None] - my[None, :])
        straddle = (rep.xnodes[:-1, None] < rep.ynodes[None, 1:]) & (
            rep.ynodes[None, :-1] < rep.xnodes[1:, None]
        )
        if straddle.any():
            warnings.warn(
                SingularSlice(
                    f"{int(straddle.sum())} grid cells straddle the diagonal; "
                    "midpoint distances are approximate there"
                )
            )
        ties = np.argwhere(dist == 0.0)
        for i, j in ties:
            dist[i, j] = _mean_abs_diff(
                float(rep.xnodes[i]),
                float(rep.xnodes[i + 1]),
                float(rep.ynodes[j]),
                float(rep.ynodes[j + 1]),
            )
        return GridRep(rep.xnodes, rep.ynodes, rep.values * dist**power, rep.dims)
    kernel = DiffKernelRep(power, 1.0, None, rep.dims)
    return pointwise_product(rep, kernel)


# ---------------------------------------------------------------------------
# fractional integral of one-variable profiles


class _Budget:
    __slots__ = ("used", "cap")

    def __init__(self, cap: int):
        self.used = 0
        self.cap = cap

    def tick(self, k: int = 1):
        self.used += k
        if self.used > self.cap:
            raise QuadratureFailure(
                f"fractional integral exceeded {self.cap} kernel evaluations"
            )


def _adaptive_interval(
    g: Callable[[float], float], a: float, b: float, rel_tol: float, budget: _Budget
) -> float:
    """Adaptive bisection with Simpson panels on a singularity-free interval."""
    if b <= a:
        return 0.0
    budget.tick(3)
    fa, fm, fb = g(a), g(0.5 * (a + b)), g(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    stack = [(a, b, fa, fm, fb, whole, 0)]
    total = 0.0
    while stack:
        a0, b0, f0, f1, f2, s0, depth = stack.pop()
        m = 0.5 * (a0 + b0)
        lm, rm = 0.5 * (a0 + m), 0.5 * (m + b0)
        budget.tick(2)
        fl, fr = g(lm), g(rm)
        sl = (m - a0) / 6.0 * (f0 + 4.0 * fl + f1)
        sr = (b0 - m) / 6.0 * (f1 + 4.0 * fr + f2)
        err = sl + sr - s0
        if abs(err) <= 15.0 * rel_tol * max(abs(sl + sr), 1e-300):
            total += sl + sr + err / 15.0
        elif depth >= 60:
            raise QuadratureFailure("adaptive bisection stalled below tolerance")
        else:
            stack.append((a0, m, f0, fl, f1, sl, depth + 1))
            stack.append((m, b0, f1, fr, f2, sr, depth + 1))
    return total


def _one_sided(
    pc: Piece,
    x: float,
    kexp: float,
    s: float,
    o: float,
    rel_tol: float,
    budget: _Budget,
) -> float:
    """Integral of pc.value(t) * |x-t|^kexp from s to o, singular only at s."""
    w = abs(o - s)
    if w == 0.0:
        return 0.0
    sgn = 1.0 if o > s else -1.0

    q = kexp if s == x else 0.0
    center_hit = pc.kind == "power" and pc.expo != 0.0 and s == pc.center
    if center_hit:
        q += pc.expo
    if q <= -1.0:
        return INF

    if s == x and pc.kind == "power" and (pc.expo == 0.0 or pc.center == x):
        # pure power of the distance to the probe: explicit antiderivative
        e = q + 1.0
        return pc.coef * w**e / e

    def h(t: float) -> float:
        return pc.value(t) * abs(x - t) ** kexp

    total = 0.0
    prev = None
    d = w
    for _ in range(400):
        total += _adaptive_interval(
            lambda u: h(s + sgn * u), 0.5 * d, d, rel_tol, budget
        )
        probe = h(s + sgn * 0.25 * d)
        budget.tick()
        coef_est = probe * (0.25 * d) ** (-q)
        rem = coef_est * (0.5 * d) ** (q + 1.0) / (q + 1.0)
        est = total + rem
        if prev is not None and abs(est - prev) <= rel_tol * max(abs(est), 1e-300):
            return est
        prev = est
        d *= 0.5
        if d < 1e-280:
            break
    raise QuadratureFailure("endpoint refinement did not converge")


def _power_tail(
    pc: Piece, x: float, kexp: float, edge: float, sgn: float, alpha: float,
    rel_tol: float, budget: _Budget,
) -> float:
    """Integral over the unbounded span running from edge toward sgn*infinity.

    The near part up to a safe cutoff is handled like any finite cell (the
    probe may sit on or beyond the edge); past the cutoff the integrand is
    dominated by an explicit power or exponential envelope, and the cutoff
    doubles until that envelope's tail drops below tolerance.
    """
    if pc.coef == 0.0:
        return 0.0
    e = pc.expo if pc.kind == "power" else None
    if e is not None and e + alpha >= 0.0:
        return INF
    start = max(
        2.0 * abs(x) + 1.0, 2.0 * abs(pc.center) + 1.0, 1.0, sgn * edge + 1.0
    )
    near = replace(pc, lo=min(edge, sgn * start), hi=max(edge, sgn * start))
    total = _finite_cell(near, x, kexp, rel_tol, budget)
    if math.isinf(total):
        return INF

    def h(t: float) -> float:
        return pc.value(t) * abs(x - t) ** kexp

    b = start
    for _ in range(60):
        if e is not None:
            bound = (
                pc.coef * 2.0 ** (1.0 - alpha - e) * b ** (e + alpha) / (-(e + alpha))
            )
        else:
            # decay piece: exp(-beta * u^s) with an explicit incomplete-gamma bound
            beta, spow = pc.beta, pc.beta_pow
            if beta <= 0:
                return INF
            if beta * b**spow < 4.0 / spow:
                bound = INF
            else:
                bound = (
                    (0.5 * b) ** kexp
                    * (2.0 * pc.coef / (beta * spow))
                    * math.exp(-beta * b**spow)
                    * b ** (1.0 - spow)
                )
        if math.isfinite(bound) and bound <= rel_tol * max(total + bound, 1e-300):
            return total
        total += _adaptive_interval(lambda u: h(sgn * u), b, 2.0 * b, rel_tol, budget)
        b *= 2.0
    raise QuadratureFailure("tail truncation did not reach tolerance")


def fractional_integral_1d(
    f: Func1D,
    alpha: float,
    x: float,
    rel_tol: float = FRACTIONAL_REL_TOL,
    max_evals: int = FRACTIONAL_EVAL_BUDGET,
) -> float:
    """Riesz-type integral of f against |x-t|^(alpha-1) over the line.

    Singular cells adjacent to the probe use explicit power-law
    antiderivatives where the integrand is a pure power of the distance,
    and geometric shell refinement otherwise.  Divergent integrals return
    inf; refinement that cannot meet tolerance within the evaluation
    budget raises QuadratureFailure.
    """
    if f.dim != 1:
        raise UnsupportedDimension("the fractional integral is one-dimensional here")
    if not (0.0 < alpha < 1.0):
        raise ValueError("fractional order must lie in (0, 1)")
    if not math.isfinite(x):
        raise ValueError("probe point must be finite")
    if f.is_zero():
        return 0.0
    line = f.as_line() if f.radial else f
    kexp = alpha - 1.0
    budget = _Budget(max_evals)

    total = 0.0
    for pc in line.pieces:
        if math.isinf(pc.hi):
            part = _power_tail(pc, x, kexp, pc.lo, 1.0, alpha, rel_tol, budget)
        elif math.isinf(pc.lo):
            part = _power_tail(pc, x, kexp, pc.hi, -1.0, alpha, rel_tol, budget)
        else:
            part = _finite_cell(pc, x, kexp, rel_tol, budget)
        if math.isinf(part):
            return INF
        total += part
    return total


def _finite_cell(
    pc: Piece, x: float, kexp: float, rel_tol: float, budget: _Budget
) -> float:
    if pc.coef == 0.0:
        return 0.0
    spans: List[Tuple[float, float]] = []
    if pc.lo < x < pc.hi:
        spans = [(pc.lo, x), (x, pc.hi)]
    else:
        spans = [(pc.lo, pc.hi)]
    total = 0.0
    for a, b in spans:
        if b <= a:
            continue
        sing_a = a == x or (pc.kind == "power" and pc.expo != 0.0 and a == pc.center)
        sing_b = b == x or (pc.kind == "power" and pc.expo != 0.0 and b == pc.center)
        if sing_a and sing_b:
            m = 0.5 * (a + b)
            parts = [
                _one_sided(pc, x, kexp, a, m, rel_tol, budget),
                _one_sided(pc, x, kexp, b, m, rel_tol, budget),
            ]
        elif sing_a:
            parts = [_one_sided(pc, x, kexp, a, b, rel_tol, budget)]
        elif sing_b:
            parts = [_one_sided(pc, x, kexp, b, a, rel_tol, budget)]
        else:
            parts = [
                _adaptive_interval(
                    lambda t: pc.value(t) * abs(x - t) ** kexp, a, b, rel_tol, budget
                )
            ]
        for part in parts:
            if math.isinf(part):
                return INF
            total += part
    return total


# ---------------------------------------------------------------------------
# symmetric decreasing rearrangement


def _is_symmetric_decreasing(f: Func1D) -> bool:
    if not f.radial:
        return False
    prev_end = 0.0
    prev_val = INF
    for pc in sorted(f.pieces, key=lambda p: p.lo):
        if pc.lo > prev_end:
            return False  # a gap of zeros followed by positive mass
        if pc.kind == "power":
            if pc.center != 0.0 or pc.expo > 0.0:
                return False
        else:
            if pc.beta < 0.0:
                return False
        v_lo, _ = pc.endpoint_values()
        hi_val = pc.value(pc.hi) if not math.isinf(pc.hi) else 0.0
        lo_val = pc.value(pc.lo) if pc.lo > 0 else v_lo
        if lo_val > prev_val * (1.0 + 1e-12):
            return False
        prev_val = min(hi_val, lo_val) if not math.isinf(pc.hi) else hi_val
        prev_end = pc.hi
    return True


def symmetric_rearrangement(f: Func1D) -> Func1D:
    """Symmetric decreasing profile equimeasurable with f.

    Step profiles are rearranged exactly by the layer-cake formula; a
    profile that is already radial and nonincreasing is its own
    rearrangement.
    """
    if f.is_zero():
        return Func1D.zero(f.dim, radial=True)
    if f.is_step():
        levels = sorted({v for v in (pc.coef for pc in f.pieces) if v > 0}, reverse=True)
        vol = unit_ball_volume(f.dim)
        pieces: List[Piece] = []
        prev_r = 0.0
        for v in levels:
            mass = f.measure_above(v, strict=False)
            r = (mass / vol) ** (1.0 / f.dim)
            if r > prev_r:
                pieces.append(Piece(prev_r, r, v))
                prev_r = r
        return Func1D(pieces, dim=f.dim, radial=True)
    if _is_symmetric_decreasing(f):
        return f
    raise ValueError(
        "rearrangement needs a step profile or an already nonincreasing radial one"
    )


__all__ = [
    "OperatorSpec",
    "QuadratureFailure",
    "SingularSlice",
    "KIND_SYMMETRIC_KERNEL",
    "KIND_DIFFERENCE_KERNEL",
    "KIND_FRACTIONAL_INTEGRAL",
    "apply_symmetric_kernel",
    "apply_difference_kernel",
    "fractional_integral_1d",
    "pointwise_product",
    "symmetric_rearrangement",
]
