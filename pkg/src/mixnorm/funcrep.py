"""Concrete representations of nonnegative functions on R^n x R^m.

Every representation can evaluate pointwise (n = m = 1 for the kernel
kinds), produce the exact x-slice at a given |y| as a one-variable
piecewise function, and, where the algebra allows, produce exact
"profiles": the map |y| -> (slice quantity) as another one-variable
piecewise function.  Norm code consumes slices and profiles; nothing
downstream ever re-derives pointwise formulas.

Regions constrain (|x|, |y|): a lower bound x_lo <= |x|, an upper bound
|x| <= A * |y|^s, a radial window y_lo <= |y| <= y_hi, and optionally a
relational constraint |y| <= |x| or 2|y| <= |x|.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .exponents import DimPair, unit_ball_volume
from .funcone import Func1D, IncompatibleProduct, Piece

INF = math.inf

__all__ = [
    "RegionSpec",
    "FuncRep",
    "PowerProductRep",
    "MaxKernelRep",
    "SumKernelRep",
    "DiffKernelRep",
    "ExpLayerRep",
    "LogDampedRep",
    "TensorRep",
    "GridRep",
    "ProductRep",
    "SumRep",
    "OffsetRep",
    "TransposeRep",
    "UnsupportedDimension",
    "NonFiniteSample",
    "InfiniteProfile",
    "sample_to_grid",
    "default_nodes",
    "eval_radial",
    "superlevel_measure",
    "indicator_box",
    "funcrep_from_json",
]


class UnsupportedDimension(ValueError):
    """Pointwise/kernel operation requested outside its dimension contract."""


class NonFiniteSample(ValueError):
    """Grid sampling hit a non-finite value."""


class InfiniteProfile(Exception):
    """An exact profile is infinite on a set of positive measure."""


def _json_num(v: float):
    if math.isinf(v):
        return "inf"
    return v


def _num(v) -> float:
    if isinstance(v, str):
        if v.strip().lower() in ("inf", "infinity"):
            return INF
        return float(v)
    return float(v)


# ---------------------------------------------------------------------------
# monomial helpers: bounds of the form coef * r^expo
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Mono:
    coef: float
    expo: float = 0.0

    def at(self, r: float) -> float:
        if math.isinf(self.coef):
            return INF
        if self.expo == 0.0:
            return self.coef
        return self.coef * r**self.expo


def _mono_cross(a: Mono, b: Mono) -> Optional[float]:
    """Positive radius where a == b, if the monomials genuinely cross."""
    if math.isinf(a.coef) or math.isinf(b.coef):
        return None
    if a.expo == b.expo:
        return None
    if a.coef <= 0 or b.coef <= 0:
        return None
    try:
        return (b.coef / a.coef) ** (1.0 / (a.expo - b.expo))
    except OverflowError:
        return None


def _segments(
    monos: Sequence[Mono], y_lo: float, y_hi: float, extra: Sequence[float] = ()
) -> List[Tuple[float, float]]:
    cuts = {y_lo, y_hi}
    cuts.update(x for x in extra if y_lo < x < y_hi)
    for i, a in enumerate(monos):
        for b in monos[i + 1 :]:
            r = _mono_cross(a, b)
            if r is not None and y_lo < r < y_hi:
                cuts.add(r)
    pts = sorted(cuts)
    return [(a, b) for a, b in zip(pts, pts[1:]) if b > a]


def _seg_mid(a: float, b: float) -> float:
    if a <= 0:
        return b / 2.0 if not math.isinf(b) else 1.0
    if math.isinf(b):
        return a * 2.0
    return math.sqrt(a * b)


def _gap_mono(up: Mono, lo: Mono, gap_expo: float) -> Optional[Mono]:
    """(up^g - lo^g)/g as a monomial in r, or None when it is not one.

    Raises InfiniteProfile when an endpoint makes the gap divergent
    (infinite upper bound with g > 0, zero lower bound with g < 0).
    """
    g = gap_expo
    if g == 0.0:
        raise ValueError("gap exponent must be nonzero")

    def powm(m: Mono) -> Mono:
        if math.isinf(m.coef):
            if g > 0:
                raise InfiniteProfile
            return Mono(0.0)
        if m.coef == 0.0:
            if g < 0:
                raise InfiniteProfile
            return Mono(0.0)
        return Mono(m.coef**g, m.expo * g)

    pu, pl = powm(up), powm(lo)
    if pu.coef == 0.0 and pl.coef == 0.0:
        return Mono(0.0)
    if pl.coef == 0.0:
        return Mono(pu.coef / g, pu.expo)
    if pu.coef == 0.0:
        return Mono(-pl.coef / g, pl.expo)
    if pu.expo == pl.expo:
        return Mono((pu.coef - pl.coef) / g, pu.expo)
    return None


# ---------------------------------------------------------------------------
# regions
# ---------------------------------------------------------------------------

_RELATION_FACTOR = {"none": 0.0, "y_le_x": 1.0, "2y_le_x": 2.0}


@dataclass(frozen=True)
class RegionSpec:
    x_lo: float = 0.0
    x_hi_coef: float = INF
    x_hi_expo: float = 0.0
    y_lo: float = 0.0
    y_hi: float = INF
    relation: str = "none"

    def __post_init__(self):
        if self.relation not in _RELATION_FACTOR:
            raise ValueError(f"unknown relation {self.relation!r}")
        if self.x_lo < 0 or self.y_lo < 0:
            raise ValueError("region bounds must be nonnegative")
        if self.x_hi_coef <= 0:
            raise ValueError("x upper coefficient must be positive")
        if self.y_hi <= self.y_lo:
            raise ValueError("empty y window")

    @classmethod
    def full(cls) -> "RegionSpec":
        return cls()

    @property
    def kappa(self) -> float:
        return _RELATION_FACTOR[self.relation]

    def x_upper(self, ry: float) -> float:
        if math.isinf(self.x_hi_coef):
            return INF
        if self.x_hi_expo == 0.0:
            return self.x_hi_coef
        if ry == 0.0:
            return INF if self.x_hi_expo < 0 else 0.0
        return self.x_hi_coef * ry**self.x_hi_expo

    def x_bounds(self, ry: float) -> Optional[Tuple[float, float]]:
        """Effective |x| interval at |y| = ry, or None when the slice is empty."""
        if not (self.y_lo <= ry <= self.y_hi):
            return None
        lo = max(self.x_lo, self.kappa * ry)
        hi = self.x_upper(ry)
        if hi <= lo:
            return None
        return (lo, hi)

    def contains(self, rx: float, ry: float) -> bool:
        b = self.x_bounds(ry)
        return b is not None and b[0] <= rx <= b[1]

    def lower_monos(self) -> List[Mono]:
        out = [Mono(self.x_lo, 0.0)] if self.x_lo > 0 else [Mono(0.0)]
        if self.kappa:
            out.append(Mono(self.kappa, 1.0))
        return out

    def upper_mono(self) -> Mono:
        if math.isinf(self.x_hi_coef):
            return Mono(INF)
        return Mono(self.x_hi_coef, self.x_hi_expo)

    def y_breaks(self) -> List[float]:
        pts = [p for p in (self.y_lo, self.y_hi) if 0.0 < p < INF]
        # radii where the slice appears/disappears or the active bound switches
        monos = self.lower_monos() + [self.upper_mono()]
        for i, a in enumerate(monos):
            for b in monos[i + 1 :]:
                r = _mono_cross(a, b)
                if r is not None and 0.0 < r < INF:
                    pts.append(r)
        return sorted(set(pts))

    def intersect_y(self, lo: float, hi: float) -> "RegionSpec":
        return replace(self, y_lo=max(self.y_lo, lo), y_hi=min(self.y_hi, hi))

    def intersect(self, other: "RegionSpec") -> Optional["RegionSpec"]:
        """Intersection when it is again a RegionSpec; None otherwise."""
        if self.relation != "none" and other.relation != "none" and self.relation != other.relation:
            # |y|<=|x| and 2|y|<=|x| nest: the stronger one wins
            relation = "2y_le_x"
        else:
            relation = self.relation if self.relation != "none" else other.relation
        a, b = self.upper_mono(), other.upper_mono()
        if math.isinf(a.coef):
            hi = b
        elif math.isinf(b.coef):
            hi = a
        elif a.expo == b.expo:
            hi = Mono(min(a.coef, b.coef), a.expo)
        else:
            return None
        if min(self.y_hi, other.y_hi) <= max(self.y_lo, other.y_lo):
            return None  # empty window; the caller represents emptiness itself
        return RegionSpec(
            x_lo=max(self.x_lo, other.x_lo),
            x_hi_coef=hi.coef,
            x_hi_expo=hi.expo if not math.isinf(hi.coef) else 0.0,
            y_lo=max(self.y_lo, other.y_lo),
            y_hi=min(self.y_hi, other.y_hi),
            relation=relation,
        )

    def dilate(self, R: float) -> "RegionSpec":
        return RegionSpec(
            self.x_lo * R,
            self.x_hi_coef if math.isinf(self.x_hi_coef) else self.x_hi_coef * R ** (1.0 - self.x_hi_expo),
            self.x_hi_expo,
            self.y_lo * R,
            self.y_hi * R,
            self.relation,
        )

    def swap_axes(self) -> "RegionSpec":
        """Transpose a rectangular region (constant bounds only)."""
        if self.relation != "none" or (self.x_hi_expo != 0.0 and not math.isinf(self.x_hi_coef)):
            raise UnsupportedDimension("only rectangular regions can be transposed")
        return RegionSpec(
            x_lo=self.y_lo,
            x_hi_coef=self.y_hi,
            x_hi_expo=0.0,
            y_lo=self.x_lo,
            y_hi=self.x_hi_coef,
        )

    def to_json(self) -> dict:
        return {
            "x_lo": _json_num(self.x_lo),
            "x_hi_coef": _json_num(self.x_hi_coef),
            "x_hi_expo": self.x_hi_expo,
            "y_lo": _json_num(self.y_lo),
            "y_hi": _json_num(self.y_hi),
            "relation": self.relation,
        }

    @classmethod
    def from_json(cls, data: dict) -> "RegionSpec":
        return cls(
            _num(data.get("x_lo", 0.0)),
            _num(data.get("x_hi_coef", INF)),
            float(data.get("x_hi_expo", 0.0)),
            _num(data.get("y_lo", 0.0)),
            _num(data.get("y_hi", INF)),
            data.get("relation", "none"),
        )


# ---------------------------------------------------------------------------
# base class
# ---------------------------------------------------------------------------


class FuncRep:
    """Base class for two-variable function representations."""

    dims: DimPair

    kind: str = "abstract"

    def eval(self, x: float, y: float) -> float:
        raise NotImplementedError

    def eval_many(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=float)
        ys = np.asarray(ys, dtype=float)
        out = np.empty(np.broadcast(xs, ys).shape)
        it = np.nditer([np.broadcast_to(xs, out.shape), np.broadcast_to(ys, out.shape)], flags=["multi_index"])
        for xv, yv in it:
            out[it.multi_index] = self.eval(float(xv), float(yv))
        return out

    def slice_at(self, ry: float) -> Func1D:
        """Exact x-slice at |y| = ry (norm-equivalent to the slice at -ry)."""
        raise NotImplementedError

    def y_support(self) -> Tuple[float, float]:
        return (0.0, INF)

    def y_breaks(self) -> List[float]:
        return []

    # Tier A hooks; None means "no exact profile, sample instead".
    def inner_strong_profile(self, p1: float) -> Optional[Func1D]:
        return None

    def inner_weak_profile(self, p1: float) -> Optional[Func1D]:
        return None

    def measure_profile(self, lam: float) -> Optional[Func1D]:
        """|y| -> measure of {x : f(x, y) > lam}, exact or None."""
        return None

    def measure_slices(self, rys: np.ndarray, lam: float) -> np.ndarray:
        return np.array([self.slice_at(float(r)).measure_above(lam) for r in rys])

    def scaled(self, c: float) -> "FuncRep":
        raise NotImplementedError

    def powed(self, s: float) -> "FuncRep":
        raise NotImplementedError

    def dilate(self, R: float) -> "FuncRep":
        raise NotImplementedError

    def transpose(self) -> "FuncRep":
        raise UnsupportedDimension(f"{self.kind} has no transpose")

    def to_json(self) -> dict:
        raise NotImplementedError

    def __repr__(self):
        return f"<{type(self).__name__} dims=({self.dims.n},{self.dims.m})>"


def eval_radial(rep: FuncRep, rx: float, ry: float, sign_regime: str = "same") -> float:
    """Evaluate at radial coordinates; the regime fixes the sign of y.

    "same" evaluates at (rx, ry), "opposite" at (rx, -ry); the two differ
    only for kernels of |x - y|.
    """
    if sign_regime not in ("same", "opposite"):
        raise ValueError(f"unknown sign regime {sign_regime!r}")
    y = ry if sign_regime == "same" else -ry
    return rep.eval(rx, y)


def superlevel_measure(rep: FuncRep, ry: float, lam: float) -> float:
    """Measure of the slice superlevel set {x : f(x, y) > lam} at |y| = ry."""
    return float(rep.measure_slices(np.array([float(ry)]), float(lam))[0])


def _require_line_dims(dims: DimPair, what: str):
    if dims.n != 1 or dims.m != 1:
        raise UnsupportedDimension(f"{what} is only defined pointwise for n = m = 1")


# ---------------------------------------------------------------------------
# power product: c * |x|^a1 * |y|^a2 on a region
# ---------------------------------------------------------------------------


class PowerProductRep(FuncRep):
    kind = "power_product"

    def __init__(
        self,
        coef: float,
        x_expo: float,
        y_expo: float,
        region: Optional[RegionSpec] = None,
        dims: DimPair = DimPair(1, 1),
    ):
        if coef < 0:
            raise ValueError("coefficient must be nonnegative")
        self.coef = coef
        self.x_expo = x_expo
        self.y_expo = y_expo
        self.region = region or RegionSpec.full()
        self.dims = dims

    def eval(self, x: float, y: float) -> float:
        rx, ry = abs(x), abs(y)
        if not self.region.contains(rx, ry):
            return 0.0
        vx = rx**self.x_expo if self.x_expo != 0.0 else 1.0
        vy = ry**self.y_expo if self.y_expo != 0.0 else 1.0
        return self.coef * vx * vy

    def slice_at(self, ry: float) -> Func1D:
        b = self.region.x_bounds(ry)
        if b is None or self.coef == 0.0:
            return Func1D.zero(self.dims.n, radial=True)
        c = self.coef * (ry**self.y_expo if self.y_expo != 0.0 else 1.0)
        return Func1D.radial_power(c, self.x_expo, b[0], b[1], dim=self.dims.n)

    def y_support(self) -> Tuple[float, float]:
        return (self.region.y_lo, self.region.y_hi)

    def y_breaks(self) -> List[float]:
        return self.region.y_breaks()

    def _value_mono(self) -> Mono:
        return Mono(self.coef, self.y_expo)

    def inner_strong_profile(self, p1: float) -> Optional[Func1D]:
        n = self.dims.n
        E = self.x_expo * p1 + n
        reg = self.region
        up, lows = reg.upper_mono(), reg.lower_monos()
        vol = unit_ball_volume(n)
        pieces: List[Piece] = []
        for a, b in _segments([up] + lows, reg.y_lo, reg.y_hi):
            rm = _seg_mid(a, b)
            lo_act = max(lows, key=lambda m: m.at(rm))
            if up.at(rm) <= lo_act.at(rm):
                continue
            if E == 0.0:
                # log gap: diverges outright at a degenerate bound
                if math.isinf(up.coef) or lo_act.coef == 0.0:
                    raise InfiniteProfile("slice integral log-diverges")
                if up.expo != lo_act.expo:
                    return None
                gap = math.log(up.coef / lo_act.coef)
                mono = Mono(vol * n * gap, 0.0)
            else:
                g = _gap_mono(up, lo_act, E)
                if g is None:
                    return None
                mono = Mono(vol * n * g.coef, g.expo)
                if mono.coef < 0:
                    return None
            # slice norm = value * (integral)^(1/p1)
            coef = self.coef * mono.coef ** (1.0 / p1)
            expo = self.y_expo + mono.expo / p1
            if coef > 0:
                pieces.append(Piece(a, b, coef, expo))
        return Func1D(pieces, dim=self.dims.m, radial=True)

    def inner_weak_profile(self, p1: float) -> Optional[Func1D]:
        n = self.dims.n
        reg = self.region
        if self.x_expo == 0.0:
            # indicator slices: weak and strong norms agree
            return self.inner_strong_profile(p1)
        up, lows = reg.upper_mono(), reg.lower_monos()
        full = math.isinf(up.coef) and all(m.coef == 0.0 for m in lows)
        if full:
            if self.x_expo != -n / p1:
                # weak slice norm is 0 or infinite away from the critical power
                raise InfiniteProfile
            vol = unit_ball_volume(n)
            coef = self.coef * vol ** (1.0 / p1)
            return Func1D(
                [Piece(reg.y_lo, reg.y_hi, coef, self.y_expo)], dim=self.dims.m, radial=True
            )
        return None

    def measure_profile(self, lam: float) -> Optional[Func1D]:
        n = self.dims.n
        reg = self.region
        vol = unit_ball_volume(n)
        up, lows = reg.upper_mono(), reg.lower_monos()
        a1 = self.x_expo
        if a1 == 0.0:
            # indicator in x: level test depends only on c * ry^{a2}
            pieces = []
            for a, b in _segments([up] + lows, reg.y_lo, reg.y_hi, self._level_cross(lam)):
                rm = _seg_mid(a, b)
                if self.coef * rm**self.y_expo <= lam:
                    continue
                lo_act = max(lows, key=lambda m: m.at(rm))
                if up.at(rm) <= lo_act.at(rm):
                    continue
                g = _gap_mono(up, lo_act, float(n))
                if g is None:
                    return None
                mono = Mono(vol * n * g.coef, g.expo)
                if mono.coef > 0:
                    pieces.append(Piece(a, b, mono.coef, mono.expo))
            return Func1D(pieces, dim=self.dims.m, radial=True)
        # threshold radius where c*rx^a1*ry^a2 == lam
        s = Mono((lam / self.coef) ** (1.0 / a1), -self.y_expo / a1)
        if a1 < 0:
            uppers = [up, s]  # superlevel set is rx < s
            monos = [up, s] + lows
            pieces = []
            for a, b in _segments(monos, reg.y_lo, reg.y_hi):
                rm = _seg_mid(a, b)
                up_act = min(uppers, key=lambda m: m.at(rm))
                lo_act = max(lows, key=lambda m: m.at(rm))
                if up_act.at(rm) <= lo_act.at(rm):
                    continue
                g = _gap_mono(up_act, lo_act, float(n))
                if g is None:
                    return None
                if vol * n * g.coef > 0:
                    pieces.append(Piece(a, b, vol * n * g.coef, g.expo))
            return Func1D(pieces, dim=self.dims.m, radial=True)
        # a1 > 0: superlevel set is rx > s
        lowers = lows + [s]
        monos = [up] + lowers
        pieces = []
        for a, b in _segments(monos, reg.y_lo, reg.y_hi):
            rm = _seg_mid(a, b)
            lo_act = max(lowers, key=lambda m: m.at(rm))
            if up.at(rm) <= lo_act.at(rm):
                continue
            g = _gap_mono(up, lo_act, float(n))
            if g is None:
                return None
            if vol * n * g.coef > 0:
                pieces.append(Piece(a, b, vol * n * g.coef, g.expo))
        return Func1D(pieces, dim=self.dims.m, radial=True)

    def _level_cross(self, lam: float) -> List[float]:
        # radius where c * ry^{a2} == lam (indicator-in-x case)
        if self.y_expo == 0.0 or self.coef == 0.0:
            return []
        try:
            r = (lam / self.coef) ** (1.0 / self.y_expo)
        except OverflowError:
            return []
        return [r] if 0.0 < r < INF else []

    def measure_slices(self, rys: np.ndarray, lam: float) -> np.ndarray:
        n = self.dims.n
        vol = unit_ball_volume(n)
        rys = np.asarray(rys, dtype=float)
        lo = np.maximum(self.region.x_lo, self.region.kappa * rys)
        hi = np.full_like(rys, self.region.x_hi_coef)
        if not math.isinf(self.region.x_hi_coef) and self.region.x_hi_expo != 0.0:
            hi = self.region.x_hi_coef * rys**self.region.x_hi_expo
        window = (rys >= self.region.y_lo) & (rys <= self.region.y_hi)
        cy = self.coef * np.where(self.y_expo != 0.0, rys**self.y_expo, 1.0)
        if self.x_expo == 0.0:
            above = cy > lam
            gap = np.clip(hi**n - lo**n, 0.0, None)
            return np.where(window & above, vol * gap, 0.0)
        with np.errstate(divide="ignore", over="ignore"):
            s = (lam / cy) ** (1.0 / self.x_expo)
        if self.x_expo < 0:
            hi = np.minimum(hi, s)
        else:
            lo = np.maximum(lo, s)
        gap = np.clip(hi**n - lo**n, 0.0, None)
        return np.where(window, vol * gap, 0.0)

    def scaled(self, c: float) -> "PowerProductRep":
        return PowerProductRep(self.coef * c, self.x_expo, self.y_expo, self.region, self.dims)

    def powed(self, s: float) -> "PowerProductRep":
        return PowerProductRep(
            self.coef**s, self.x_expo * s, self.y_expo * s, self.region, self.dims
        )

    def dilate(self, R: float) -> "PowerProductRep":
        return PowerProductRep(
            self.coef * R ** (-(self.x_expo + self.y_expo)),
            self.x_expo,
            self.y_expo,
            self.region.dilate(R),
            self.dims,
        )

    def transpose(self) -> "FuncRep":
        reg = self.region
        if reg.relation == "none" and (reg.x_hi_expo == 0.0 or math.isinf(reg.x_hi_coef)):
            swapped = RegionSpec(
                x_lo=reg.y_lo,
                x_hi_coef=reg.y_hi,
                y_lo=reg.x_lo,
                y_hi=reg.x_hi_coef,
            )
            return PowerProductRep(
                self.coef, self.y_expo, self.x_expo, swapped, DimPair(self.dims.m, self.dims.n)
            )
        return TransposeRep(self)

    def slice_in_y_at(self, rx: float) -> Func1D:
        """y-slice at |x| = rx, used by the transpose wrapper."""
        reg = self.region
        if rx < reg.x_lo:
            return Func1D.zero(self.dims.m, radial=True)
        lo, hi = reg.y_lo, reg.y_hi
        if reg.kappa:
            hi = min(hi, rx / reg.kappa)
        if not math.isinf(reg.x_hi_coef):
            s, A = reg.x_hi_expo, reg.x_hi_coef
            if s == 0.0:
                if rx > A:
                    return Func1D.zero(self.dims.m, radial=True)
            else:
                r_star = (rx / A) ** (1.0 / s)
                if s > 0:
                    lo = max(lo, r_star)
                else:
                    hi = min(hi, r_star)
        if hi <= lo:
            return Func1D.zero(self.dims.m, radial=True)
        c = self.coef * (rx**self.x_expo if self.x_expo != 0.0 else 1.0)
        return Func1D.radial_power(c, self.y_expo, lo, hi, dim=self.dims.m)

    def x_breaks(self) -> List[float]:
        reg = self.region
        pts = [p for p in (reg.x_lo,) if 0 < p < INF]
        if not math.isinf(reg.x_hi_coef):
            for rb in (reg.y_lo, reg.y_hi):
                if 0 < rb < INF:
                    pts.append(reg.x_upper(rb))
        return sorted(set(p for p in pts if 0 < p < INF))

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "c": self.coef,
            "a1": self.x_expo,
            "a2": self.y_expo,
            "region": self.region.to_json(),
            "dims": self.dims.to_json(),
        }


def indicator_box(x_hi: float = 1.0, y_hi: float = 1.0, dims: DimPair = DimPair(1, 1)) -> PowerProductRep:
    """Indicator of {|x| <= x_hi, |y| <= y_hi}."""
    return PowerProductRep(
        1.0, 0.0, 0.0, RegionSpec(x_hi_coef=x_hi, y_hi=y_hi), dims
    )


# ---------------------------------------------------------------------------
# kernels
# ---------------------------------------------------------------------------


class MaxKernelRep(FuncRep):
    """c * (|x+y| + |x-y|)^power on a region; equals c*(2 max(|x|,|y|))^power in 1-D."""

    kind = "max_power"

    def __init__(
        self,
        power: float,
        coef: float = 1.0,
        region: Optional[RegionSpec] = None,
        dims: DimPair = DimPair(1, 1),
    ):
        _require_line_dims(dims, "the symmetric kernel")
        self.power = power
        self.coef = coef
        self.region = region or RegionSpec.full()
        self.dims = dims

    def eval(self, x: float, y: float) -> float:
        rx, ry = abs(x), abs(y)
        if not self.region.contains(rx, ry):
            return 0.0
        base = abs(x + y) + abs(x - y)
        if base == 0.0:
            return INF if self.power < 0 else (self.coef if self.power == 0 else 0.0)
        return self.coef * base**self.power

    def slice_at(self, ry: float) -> Func1D:
        b = self.region.x_bounds(ry)
        if b is None:
            return Func1D.zero(1, radial=True)
        lo, hi = b
        pieces: List[Piece] = []
        cut = min(max(ry, lo), hi)
        if cut > lo and ry > 0:
            pieces.append(Piece(lo, cut, self.coef * (2.0 * ry) ** self.power))
        if hi > cut:
            pieces.append(Piece(cut, hi, self.coef * 2.0**self.power, self.power))
        return Func1D(pieces, dim=1, radial=True)

    def y_support(self) -> Tuple[float, float]:
        return (self.region.y_lo, self.region.y_hi)

    def y_breaks(self) -> List[float]:
        return self.region.y_breaks()

    def measure_slices(self, rys: np.ndarray, lam: float) -> np.ndarray:
        rys = np.asarray(rys, dtype=float)
        reg = self.region
        lo = np.maximum(reg.x_lo, reg.kappa * rys)
        hi = np.full_like(rys, reg.x_hi_coef)
        if not math.isinf(reg.x_hi_coef) and reg.x_hi_expo != 0.0:
            hi = reg.x_hi_coef * rys**reg.x_hi_expo
        window = (rys >= reg.y_lo) & (rys <= reg.y_hi)
        if self.power == 0.0:
            gap = np.clip(hi - lo, 0.0, None)
            return np.where(window & (self.coef > lam), 2.0 * gap, 0.0)
        t_star = 0.5 * (lam / self.coef) ** (1.0 / self.power)
        if self.power < 0:
            # kernel value > lam iff max(|x|, ry) < t_star
            hi2 = np.minimum(hi, t_star)
            gap = np.clip(hi2 - lo, 0.0, None)
            return np.where(window & (rys < t_star), 2.0 * gap, 0.0)
        lo2 = np.maximum(lo, t_star)
        gap_above = np.clip(hi - lo2, 0.0, None)
        full_gap = np.clip(hi - lo, 0.0, None)
        # for ry > t_star every point of the slice is above the level
        return np.where(window, np.where(rys > t_star, 2.0 * full_gap, 2.0 * gap_above), 0.0)

    def measure_profile(self, lam: float) -> Optional[Func1D]:
        reg = self.region
        if reg.x_lo != 0.0 or reg.kappa or self.power == 0.0:
            return None
        if self.power > 0:
            if math.isinf(reg.x_hi_coef):
                # rising kernel on unbounded slices: every superlevel row is infinite
                raise InfiniteProfile
            return None
        t_star = 0.5 * (lam / self.coef) ** (1.0 / self.power)
        cap = min(t_star, reg.y_hi)
        if cap <= reg.y_lo:
            return Func1D.zero(1, radial=True)
        if math.isinf(reg.x_hi_coef):
            return Func1D([Piece(reg.y_lo, cap, 2.0 * t_star)], dim=1, radial=True)
        A, B = reg.x_hi_coef, reg.x_hi_expo
        if B == 0.0:
            return Func1D(
                [Piece(reg.y_lo, cap, 2.0 * min(A, t_star))], dim=1, radial=True
            )
        # the slice gap is min(A ry^B, t_star); split at the crossing radius
        ry_c = (t_star / A) ** (1.0 / B)
        pieces: List[Piece] = []
        if B < 0:
            # wide slices near the origin, capped by t_star there
            a = min(ry_c, cap)
            if a > reg.y_lo:
                pieces.append(Piece(reg.y_lo, a, 2.0 * t_star))
            if cap > a:
                pieces.append(Piece(max(a, reg.y_lo), cap, 2.0 * A, B))
        else:
            a = min(max(ry_c, reg.y_lo), cap)
            if a > reg.y_lo:
                pieces.append(Piece(reg.y_lo, a, 2.0 * A, B))
            if cap > a:
                pieces.append(Piece(a, cap, 2.0 * t_star))
        return Func1D(pieces, dim=1, radial=True)

    def scaled(self, c: float) -> "MaxKernelRep":
        return MaxKernelRep(self.power, self.coef * c, self.region, self.dims)

    def powed(self, s: float) -> "MaxKernelRep":
        return MaxKernelRep(self.power * s, self.coef**s, self.region, self.dims)

    def dilate(self, R: float) -> "MaxKernelRep":
        return MaxKernelRep(
            self.power, self.coef * R**-self.power, self.region.dilate(R), self.dims
        )

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "gamma": -self.power,
            "coef": self.coef,
            "region": self.region.to_json(),
            "dims": self.dims.to_json(),
        }


class SumKernelRep(FuncRep):
    """c * (|x|^n + |y|^m)^power on a region."""

    kind = "sum_power"

    def __init__(
        self,
        power: float,
        coef: float = 1.0,
        region: Optional[RegionSpec] = None,
        dims: DimPair = DimPair(1, 1),
    ):
        self.power = power
        self.coef = coef
        self.region = region or RegionSpec.full()
        self.dims = dims

    def eval(self, x: float, y: float) -> float:
        rx, ry = abs(x), abs(y)
        if not self.region.contains(rx, ry):
            return 0.0
        base = rx**self.dims.n + ry**self.dims.m
        if base == 0.0:
            return INF if self.power < 0 else 0.0
        return self.coef * base**self.power

    def slice_at(self, ry: float) -> Func1D:
        if self.dims.n != 1:
            raise UnsupportedDimension("sum-kernel slices need n == 1")
        b = self.region.x_bounds(ry)
        if b is None:
            return Func1D.zero(1, radial=True)
        c = ry**self.dims.m
        # (r + c)^power == |r - (-c)|^power on r >= 0
        return Func1D(
            [Piece(b[0], b[1], self.coef, self.power, -c)], dim=1, radial=True
        )

    def y_support(self) -> Tuple[float, float]:
        return (self.region.y_lo, self.region.y_hi)

    def y_breaks(self) -> List[float]:
        return self.region.y_breaks()

    def measure_slices(self, rys: np.ndarray, lam: float) -> np.ndarray:
        rys = np.asarray(rys, dtype=float)
        n, m = self.dims.n, self.dims.m
        vol = unit_ball_volume(n)
        reg = self.region
        lo = np.maximum(reg.x_lo, reg.kappa * rys)
        hi = np.full_like(rys, reg.x_hi_coef)
        if not math.isinf(reg.x_hi_coef) and reg.x_hi_expo != 0.0:
            hi = reg.x_hi_coef * rys**reg.x_hi_expo
        window = (rys >= reg.y_lo) & (rys <= reg.y_hi)
        if self.power == 0.0:
            gap = np.clip(hi**n - lo**n, 0.0, None)
            return np.where(window & (self.coef > lam), vol * gap, 0.0)
        T = (lam / self.coef) ** (1.0 / self.power)
        base = np.clip(T - rys**m, 0.0, None)
        if self.power < 0:
            # value > lam iff |x|^n < T - ry^m
            s = base ** (1.0 / n)
            hi2 = np.minimum(hi, s)
            gap = np.clip(hi2**n - lo**n, 0.0, None)
        else:
            s = base ** (1.0 / n)
            lo2 = np.maximum(lo, s)
            gap = np.clip(hi**n - lo2**n, 0.0, None)
        return np.where(window, vol * gap, 0.0)

    def measure_profile(self, lam: float) -> Optional[Func1D]:
        if self.dims.m != 1 or self.power >= 0.0:
            return None
        reg = self.region
        if reg.x_lo != 0.0 or reg.kappa or not math.isinf(reg.x_hi_coef):
            return None
        n = self.dims.n
        vol = unit_ball_volume(n)
        T = (lam / self.coef) ** (1.0 / self.power)
        hi = min(T, reg.y_hi)
        if hi <= reg.y_lo:
            return Func1D.zero(1, radial=True)
        if n == 1:
            # vol * (T - ry)
            return Func1D([Piece(reg.y_lo, hi, vol, 1.0, T)], dim=1, radial=True)
        return None

    def inner_strong_profile(self, p1: float) -> Optional[Func1D]:
        if self.dims.n != 1 or self.dims.m != 1:
            return None
        reg = self.region
        if reg.x_lo != 0.0 or reg.kappa or not math.isinf(reg.x_hi_coef):
            return None
        e = self.power * p1
        if e >= -1.0:
            raise InfiniteProfile
        # 2 * integral_0^inf (u + c)^e du = 2 c^{e+1} / (-e-1), c = ry
        coef = self.coef * (2.0 / (-e - 1.0)) ** (1.0 / p1)
        return Func1D(
            [Piece(reg.y_lo, reg.y_hi, coef, (e + 1.0) / p1)], dim=1, radial=True
        )

    def scaled(self, c: float) -> "SumKernelRep":
        return SumKernelRep(self.power, self.coef * c, self.region, self.dims)

    def powed(self, s: float) -> "SumKernelRep":
        return SumKernelRep(self.power * s, self.coef**s, self.region, self.dims)

    def dilate(self, R: float) -> "SumKernelRep":
        if self.dims.n != self.dims.m:
            raise UnsupportedDimension("dilation of the sum kernel needs n == m")
        return SumKernelRep(
            self.power,
            self.coef * R ** (-self.power * self.dims.n),
            self.region.dilate(R),
            self.dims,
        )

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "gamma": -self.power,
            "coef": self.coef,
            "region": self.region.to_json(),
            "dims": self.dims.to_json(),
        }


class DiffKernelRep(FuncRep):
    """c * |x - y|^power on a region (1-D only)."""

    kind = "shift_power"

    def __init__(
        self,
        power: float,
        coef: float = 1.0,
        region: Optional[RegionSpec] = None,
        dims: DimPair = DimPair(1, 1),
    ):
        _require_line_dims(dims, "the difference kernel")
        self.power = power
        self.coef = coef
        self.region = region or RegionSpec.full()
        self.dims = dims

    def eval(self, x: float, y: float) -> float:
        rx, ry = abs(x), abs(y)
        if not self.region.contains(rx, ry):
            return 0.0
        u = abs(x - y)
        if u == 0.0:
            return INF if self.power < 0 else (self.coef if self.power == 0 else 0.0)
        return self.coef * u**self.power

    def slice_at(self, ry: float) -> Func1D:
        b = self.region.x_bounds(ry)
        if b is None:
            return Func1D.zero(1, radial=False)
        lo, hi = b
        pieces = [Piece(lo, hi, self.coef, self.power, ry)]
        if not (lo == 0.0 and hi == 0.0):
            neg_hi = -lo if lo > 0 else 0.0
            pieces.append(Piece(-hi, neg_hi, self.coef, self.power, ry))
        return Func1D(pieces, dim=1, radial=False)

    def y_support(self) -> Tuple[float, float]:
        return (self.region.y_lo, self.region.y_hi)

    def y_breaks(self) -> List[float]:
        return self.region.y_breaks()

    def scaled(self, c: float) -> "DiffKernelRep":
        return DiffKernelRep(self.power, self.coef * c, self.region, self.dims)

    def powed(self, s: float) -> "DiffKernelRep":
        return DiffKernelRep(self.power * s, self.coef**s, self.region, self.dims)

    def dilate(self, R: float) -> "DiffKernelRep":
        return DiffKernelRep(
            self.power, self.coef * R**-self.power, self.region.dilate(R), self.dims
        )

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "c": self.coef,
            "a": self.power,
            "region": self.region.to_json(),
            "dims": self.dims.to_json(),
        }


class ExpLayerRep(FuncRep):
    """a^{|y|^m} restricted to |x| <= C * a^{-p1 |y|^m / n}, with a > 1.

    The exponentially growing layer height is exactly balanced by the
    exponentially shrinking support width.
    """

    kind = "exp_layer"

    def __init__(
        self,
        base: float,
        p1: float,
        upper_coef: float = 1.0,
        y_lo: float = 0.0,
        y_hi: float = INF,
        dims: DimPair = DimPair(1, 1),
    ):
        if base <= 1.0:
            raise ValueError("base must exceed 1")
        if p1 <= 0:
            raise ValueError("p1 must be positive")
        self.base = base
        self.p1 = p1
        self.upper_coef = upper_coef
        self.y_lo = y_lo
        self.y_hi = y_hi
        self.dims = dims

    def _width(self, ry: float) -> float:
        n, m = self.dims.n, self.dims.m
        return self.upper_coef * self.base ** (-self.p1 * ry**m / n)

    def eval(self, x: float, y: float) -> float:
        rx, ry = abs(x), abs(y)
        if not (self.y_lo <= ry <= self.y_hi) or rx > self._width(ry):
            return 0.0
        return self.base ** (ry ** self.dims.m)

    def slice_at(self, ry: float) -> Func1D:
        if not (self.y_lo <= ry <= self.y_hi):
            return Func1D.zero(self.dims.n, radial=True)
        h = self.base ** (ry ** self.dims.m)
        return Func1D.radial_power(h, 0.0, 0.0, self._width(ry), dim=self.dims.n)

    def y_support(self) -> Tuple[float, float]:
        return (self.y_lo, self.y_hi)

    def measure_profile(self, lam: float) -> Optional[Func1D]:
        n, m = self.dims.n, self.dims.m
        lna = math.log(self.base)
        lo = self.y_lo
        if lam >= 1.0:
            lo = max(lo, (math.log(lam) / lna) ** (1.0 / m))
        if lo >= self.y_hi:
            return Func1D.zero(m, radial=True)
        coef = unit_ball_volume(n) * self.upper_coef**n
        return Func1D.decay_layer(
            coef, self.p1 * lna, float(m), lo, self.y_hi, dim=m, radial=True
        )

    def _profile(self, p: float) -> Func1D:
        # a^{ry^m} * (v_n * width^n)^{1/p} as a decay piece in ry
        n, m = self.dims.n, self.dims.m
        lna = math.log(self.base)
        coef = (unit_ball_volume(n) * self.upper_coef**n) ** (1.0 / p)
        rate = lna * (self.p1 / p - 1.0)
        return Func1D.decay_layer(coef, rate, float(m), self.y_lo, self.y_hi, dim=m, radial=True)

    def inner_strong_profile(self, p1: float) -> Optional[Func1D]:
        return self._profile(p1)

    def inner_weak_profile(self, p1: float) -> Optional[Func1D]:
        # slices are indicators, so weak and strong inner norms coincide
        return self._profile(p1)

    def scaled(self, c: float):
        raise UnsupportedDimension("scaling the exponential layer leaves the catalog")

    def powed(self, s: float) -> "ExpLayerRep":
        # (a^{|y|^m})^s with unchanged support width
        nb = self.base**s
        return ExpLayerRep(
            nb, self.p1 / s, self.upper_coef, self.y_lo, self.y_hi, self.dims
        )

    def dilate(self, R: float) -> "ExpLayerRep":
        m = self.dims.m
        return ExpLayerRep(
            self.base ** (R**-m),
            self.p1,
            self.upper_coef * R,
            self.y_lo * R,
            self.y_hi * R,
            self.dims,
        )

    def transpose(self) -> "FuncRep":
        return TransposeRep(self)

    def slice_in_y_at(self, rx: float) -> Func1D:
        n, m = self.dims.n, self.dims.m
        lna = math.log(self.base)
        if rx >= self.upper_coef:
            y_cut = 0.0
        else:
            y_cut = (-n * math.log(rx / self.upper_coef) / (self.p1 * lna)) ** (1.0 / m)
        lo, hi = self.y_lo, min(self.y_hi, y_cut)
        if rx == 0.0:
            hi = self.y_hi
        if hi <= lo:
            return Func1D.zero(m, radial=True)
        # value a^{ry^m} grows: decay piece with negative rate
        return Func1D.decay_layer(1.0, -lna, float(m), lo, hi, dim=m, radial=True)

    def x_breaks(self) -> List[float]:
        return [self.upper_coef * 1e-9, self.upper_coef]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "a": self.base,
            "p1": self.p1,
            "upper_coef": self.upper_coef,
            "y_lo": _json_num(self.y_lo),
            "y_hi": _json_num(self.y_hi),
            "dims": self.dims.to_json(),
        }


class LogDampedRep(FuncRep):
    """|x-y|^expo * |ln|x-y||^{-log_expo} on the box |x|, |y| <= box (1-D).

    Slices are not piecewise power; only pointwise evaluation and exact
    inner strong norms (closed-form divergence decision plus quadrature)
    are provided.
    """

    kind = "log_damped"

    def __init__(
        self, expo: float, log_expo: float, box: float = 1.0 / 3.0, dims: DimPair = DimPair(1, 1)
    ):
        _require_line_dims(dims, "the log-damped kernel")
        if log_expo <= 0:
            raise ValueError("log exponent must be positive")
        if not (0 < box <= 0.35):
            raise ValueError("box radius must lie in (0, 0.35] so the log factor is positive")
        self.expo = expo
        self.log_expo = log_expo
        self.box = box
        self.dims = dims

    def eval(self, x: float, y: float) -> float:
        if abs(x) > self.box or abs(y) > self.box:
            return 0.0
        u = abs(x - y)
        if u == 0.0:
            return INF if self.expo < 0 else 0.0
        return u**self.expo * abs(math.log(u)) ** (-self.log_expo)

    def y_support(self) -> Tuple[float, float]:
        return (0.0, self.box)

    def slice_at(self, ry: float) -> Func1D:
        raise IncompatibleProduct("log-damped slices are not piecewise power")

    def inner_strong_value(self, ry: float, p: float) -> float:
        """Exact-or-quadrature value of the p-th inner norm at |y| = ry."""
        if ry > self.box:
            return 0.0
        e = self.expo * p
        s = self.log_expo * p
        if e < -1.0:
            return INF
        if e == -1.0 and s <= 1.0:
            return INF
        total = 0.0
        for U in (self.box - ry, self.box + ry):
            if U <= 0:
                continue
            if e == -1.0:
                # closed form: (-ln u)^{1-s} / (s-1) evaluated at u = U
                total += (-math.log(U)) ** (1.0 - s) / (s - 1.0)
            else:
                from scipy.integrate import quad

                val, _ = quad(
                    lambda u: u**e * (-math.log(u)) ** (-s), 0.0, U, limit=400
                )
                total += val
        return total ** (1.0 / p)

    def _u_superlevel(self, lam: float, u_max: float) -> List[Tuple[float, float]]:
        """Intervals of u in (0, u_max] where u^e * (-ln u)^{-s} > lam."""
        from scipy.optimize import brentq

        e, s = self.expo, self.log_expo
        if lam <= 0 or u_max <= 0:
            return [(0.0, u_max)] if u_max > 0 else []

        def logval(t: float) -> float:
            # ln v at u = exp(t), t < 0
            return e * t - s * math.log(-t) - math.log(lam)

        t_hi = math.log(u_max)
        t_lo = -700.0
        if e >= 0:
            # v increases from 0: single threshold
            if logval(t_hi) <= 0:
                return []
            if logval(t_lo) >= 0:
                return [(0.0, u_max)]
            r = math.exp(brentq(logval, t_lo, t_hi))
            return [(r, u_max)]
        t_star = s / e  # interior minimum of v
        if t_star >= t_hi:
            # decreasing on the whole window
            if logval(t_hi) > 0:
                return [(0.0, u_max)]
            r = math.exp(brentq(logval, t_lo, t_hi))
            return [(0.0, r)]
        if logval(t_star) >= 0:
            return [(0.0, u_max)]
        out = []
        r1 = math.exp(brentq(logval, t_lo, t_star))
        out.append((0.0, r1))
        if logval(t_hi) > 0:
            r2 = math.exp(brentq(logval, t_star, t_hi))
            out.append((r2, u_max))
        return out

    def measure_slices(self, rys: np.ndarray, lam: float) -> np.ndarray:
        out = np.zeros(len(np.atleast_1d(rys)))
        for i, ry in enumerate(np.atleast_1d(rys)):
            ry = float(ry)
            if ry > self.box:
                continue
            total = 0.0
            for ua, ub in self._u_superlevel(lam, self.box + ry):
                # |x - ry| in (ua, ub) intersected with [-box, box]
                for a, b in ((ry + ua, ry + ub), (ry - ub, ry - ua)):
                    total += max(0.0, min(b, self.box) - max(a, -self.box))
            out[i] = total
        return out

    def powed(self, sc: float) -> "LogDampedRep":
        return LogDampedRep(self.expo * sc, self.log_expo * sc, self.box, self.dims)

    def dilate(self, R: float):
        raise UnsupportedDimension("dilation leaves the log-damped catalog")

    @classmethod
    def from_strength(cls, gamma: float, q1: float, box: float = 1.0 / 3.0) -> "LogDampedRep":
        """Build from the kernel strength gamma and the damping index q1 (n=1)."""
        return cls(gamma - 1.0 / q1, 1.0 / q1, box)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "gamma": self.expo + self.log_expo,
            "q1": 1.0 / self.log_expo,
            "box": self.box,
            "dims": self.dims.to_json(),
        }


# ---------------------------------------------------------------------------
# tensor, grid, product
# ---------------------------------------------------------------------------


def _tensor_factor(f: Func1D, what: str) -> Func1D:
    """Coerce a tensor factor to a radial function of the radius."""
    if f.radial:
        return f
    folded = _fold_line_to_radial(f)
    if folded is not None:
        return folded
    if all(pc.lo >= 0 for pc in f.pieces):
        return Func1D(f.pieces, dim=f.dim, radial=True)
    raise UnsupportedDimension(f"tensor {what} factor must be radial or even")


class TensorRep(FuncRep):
    """f(|x|) * g(|y|) with radial one-variable factors."""

    kind = "tensor"

    def __init__(self, fx: Func1D, gy: Func1D, dims: Optional[DimPair] = None):
        self.fx = _tensor_factor(fx, "x")
        self.gy = _tensor_factor(gy, "y")
        self.dims = dims or DimPair(self.fx.dim, self.gy.dim)

    def eval(self, x: float, y: float) -> float:
        return self.fx.eval(abs(x)) * self.gy.eval(abs(y))

    def slice_at(self, ry: float) -> Func1D:
        return self.fx.scaled(self.gy.eval(ry))

    def y_support(self) -> Tuple[float, float]:
        return self.gy.support_bounds()

    def y_breaks(self) -> List[float]:
        pts = set()
        for pc in self.gy.pieces:
            for v in (pc.lo, pc.hi, pc.center):
                if 0 < abs(v) < INF:
                    pts.add(abs(v))
        return sorted(pts)

    def inner_strong_profile(self, p1: float) -> Optional[Func1D]:
        c = self.fx.strong_norm(p1)
        if math.isinf(c):
            if self.gy.is_zero():
                return Func1D.zero(self.dims.m, radial=True)
            raise InfiniteProfile
        return self.gy.scaled(c)

    def inner_weak_profile(self, p1: float) -> Optional[Func1D]:
        out = self.fx.weak_norm(p1)
        if math.isinf(out.value):
            if self.gy.is_zero():
                return Func1D.zero(self.dims.m, radial=True)
            raise InfiniteProfile
        return self.gy.scaled(out.value)

    def measure_slices(self, rys: np.ndarray, lam: float) -> np.ndarray:
        gv = self.gy.eval_many(np.asarray(rys, dtype=float))
        out = np.zeros_like(gv)
        for i, g in enumerate(gv):
            if g > 0:
                out[i] = self.fx.measure_above(lam / g)
        return out

    def single_level(self) -> Optional[Tuple[float, float]]:
        """(level, y-mass) when g is a single-level indicator."""
        if not self.gy.pieces:
            return None
        levels = {pc.coef for pc in self.gy.pieces}
        if len(levels) != 1 or not self.gy.is_step():
            return None
        return (levels.pop(), self.gy.measure_above(0.0))

    def scaled(self, c: float) -> "TensorRep":
        return TensorRep(self.fx.scaled(c), self.gy, self.dims)

    def powed(self, s: float) -> "TensorRep":
        return TensorRep(self.fx.powed(s), self.gy.powed(s), self.dims)

    def dilate(self, R: float) -> "TensorRep":
        return TensorRep(self.fx.dilate(R), self.gy.dilate(R), self.dims)

    def transpose(self) -> "TensorRep":
        return TensorRep(self.gy, self.fx, DimPair(self.dims.m, self.dims.n))

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "fx": self.fx.to_json(),
            "gy": self.gy.to_json(),
            "dims": self.dims.to_json(),
        }


def _fold_line_to_radial(f: Func1D) -> Optional[Func1D]:
    """Fold an even line function onto radii; None if not symmetric."""
    pos = [pc for pc in f.pieces if pc.lo >= 0]
    neg = [pc for pc in f.pieces if pc.hi <= 0]
    if len(pos) + len(neg) != len(f.pieces):
        return None
    mirrored = sorted(
        (Piece(-pc.hi, -pc.lo, pc.coef, pc.expo, -pc.center, pc.kind, pc.beta, pc.beta_pow) for pc in neg),
        key=lambda p: p.lo,
    )
    pos = sorted(pos, key=lambda p: p.lo)
    if len(pos) != len(mirrored):
        return None
    for a, b in zip(pos, mirrored):
        if (
            abs(a.lo - b.lo) > 1e-12 * max(1.0, abs(a.lo))
            or abs(a.hi - b.hi) > 1e-12 * max(1.0, abs(a.hi))
            or a.coef != b.coef
            or a.expo != b.expo
            or a.center != b.center
            or a.kind != b.kind
        ):
            return None
    # halve nothing: radial dim-1 mass v_1*(hi-lo) = 2*(hi-lo) counts both signs
    return Func1D(pos, dim=1, radial=True)


class GridRep(FuncRep):
    """Step function on a radial product grid.

    values[i, j] lives on the cell [xnodes[i], xnodes[i+1]) x [ynodes[j], ynodes[j+1])
    in the radial coordinates (|x|, |y|).
    """

    kind = "grid"

    def __init__(
        self,
        xnodes: Sequence[float],
        ynodes: Sequence[float],
        values: np.ndarray,
        dims: DimPair = DimPair(1, 1),
    ):
        self.xnodes = np.asarray(xnodes, dtype=float)
        self.ynodes = np.asarray(ynodes, dtype=float)
        self.values = np.asarray(values, dtype=float)
        if self.values.shape != (len(self.xnodes) - 1, len(self.ynodes) - 1):
            raise ValueError("values shape must be (len(xnodes)-1, len(ynodes)-1)")
        if (self.values < 0).any():
            raise ValueError("grid values must be nonnegative")
        if not np.isfinite(self.values).all():
            raise NonFiniteSample("grid values must be finite")
        if (np.diff(self.xnodes) <= 0).any() or (np.diff(self.ynodes) <= 0).any():
            raise ValueError("grid nodes must be strictly increasing")
        if self.xnodes[0] < 0 or self.ynodes[0] < 0:
            raise ValueError("radial nodes must be nonnegative")
        self.dims = dims

    @property
    def x_weights(self) -> np.ndarray:
        n = self.dims.n
        return unit_ball_volume(n) * np.diff(self.xnodes**n)

    @property
    def y_weights(self) -> np.ndarray:
        m = self.dims.m
        return unit_ball_volume(m) * np.diff(self.ynodes**m)

    def eval(self, x: float, y: float) -> float:
        rx, ry = abs(x), abs(y)
        i = int(np.searchsorted(self.xnodes, rx, side="right")) - 1
        j = int(np.searchsorted(self.ynodes, ry, side="right")) - 1
        if 0 <= i < self.values.shape[0] and 0 <= j < self.values.shape[1]:
            return float(self.values[i, j])
        return 0.0

    def slice_at(self, ry: float) -> Func1D:
        j = int(np.searchsorted(self.ynodes, ry, side="right")) - 1
        if not (0 <= j < self.values.shape[1]):
            return Func1D.zero(self.dims.n, radial=True)
        return Func1D.from_steps(self.xnodes, self.values[:, j], dim=self.dims.n, radial=True)

    def y_support(self) -> Tuple[float, float]:
        return (float(self.ynodes[0]), float(self.ynodes[-1]))

    def y_breaks(self) -> List[float]:
        return [float(v) for v in self.ynodes if 0 < v < INF]

    def inner_strong_profile(self, p1: float) -> Func1D:
        wx = self.x_weights
        if math.isinf(p1):
            col = self.values.max(axis=0)
        else:
            col = (self.values**p1 * wx[:, None]).sum(axis=0) ** (1.0 / p1)
        return Func1D.from_steps(self.ynodes, col, dim=self.dims.m, radial=True)

    def inner_weak_profile(self, p1: float) -> Func1D:
        wx = self.x_weights
        cols = []
        for j in range(self.values.shape[1]):
            cols.append(_step_weak(self.values[:, j], wx, p1))
        return Func1D.from_steps(self.ynodes, cols, dim=self.dims.m, radial=True)

    def measure_profile(self, lam: float) -> Func1D:
        wx = self.x_weights
        col = (wx[:, None] * (self.values > lam)).sum(axis=0)
        return Func1D.from_steps(self.ynodes, col, dim=self.dims.m, radial=True)

    def measure_slices(self, rys: np.ndarray, lam: float) -> np.ndarray:
        wx = self.x_weights
        js = np.searchsorted(self.ynodes, np.asarray(rys, dtype=float), side="right") - 1
        out = np.zeros(len(js))
        valid = (js >= 0) & (js < self.values.shape[1])
        above = wx[:, None] * (self.values > lam)
        col_mass = above.sum(axis=0)
        out[valid] = col_mass[js[valid]]
        return out

    def scaled(self, c: float) -> "GridRep":
        return GridRep(self.xnodes, self.ynodes, self.values * c, self.dims)

    def powed(self, s: float) -> "GridRep":
        return GridRep(self.xnodes, self.ynodes, self.values**s, self.dims)

    def dilate(self, R: float) -> "GridRep":
        return GridRep(self.xnodes * R, self.ynodes * R, self.values, self.dims)

    def transpose(self) -> "GridRep":
        return GridRep(self.ynodes, self.xnodes, self.values.T, DimPair(self.dims.m, self.dims.n))

    def multiply(self, other: "GridRep") -> "GridRep":
        if not (
            np.array_equal(self.xnodes, other.xnodes)
            and np.array_equal(self.ynodes, other.ynodes)
        ):
            raise IncompatibleProduct("grids must share nodes to multiply")
        return GridRep(self.xnodes, self.ynodes, self.values * other.values, self.dims)

    def add(self, other: "GridRep") -> "GridRep":
        if not (
            np.array_equal(self.xnodes, other.xnodes)
            and np.array_equal(self.ynodes, other.ynodes)
        ):
            raise IncompatibleProduct("grids must share nodes to add")
        return GridRep(self.xnodes, self.ynodes, self.values + other.values, self.dims)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "xnodes": [_json_num(v) for v in self.xnodes],
            "ynodes": [_json_num(v) for v in self.ynodes],
            "values": self.values.tolist(),
            "dims": self.dims.to_json(),
        }


def _step_weak(vals: np.ndarray, weights: np.ndarray, p: float) -> float:
    """Weak p-norm of a weighted step function: max over levels v of v * mass{>=v}^{1/p}."""
    pos = vals > 0
    if not pos.any():
        return 0.0
    if math.isinf(p):
        return float(vals.max())
    v = vals[pos]
    w = weights[pos]
    order = np.argsort(-v)
    v, w = v[order], np.cumsum(w[order])
    return float((v * w ** (1.0 / p)).max())


class ProductRep(FuncRep):
    """Pointwise product of two representations (slice-compatible pairs)."""

    kind = "product"

    def __init__(self, left: FuncRep, right: FuncRep):
        if (left.dims.n, left.dims.m) != (right.dims.n, right.dims.m):
            raise ValueError("factor dimensions differ")
        self.left = left
        self.right = right
        self.dims = left.dims

    def eval(self, x: float, y: float) -> float:
        lv = self.left.eval(x, y)
        if lv == 0.0:
            return 0.0
        return lv * self.right.eval(x, y)

    def slice_at(self, ry: float) -> Func1D:
        return self.left.slice_at(ry).multiply(self.right.slice_at(ry))

    def y_support(self) -> Tuple[float, float]:
        l1, h1 = self.left.y_support()
        l2, h2 = self.right.y_support()
        return (max(l1, l2), min(h1, h2))

    def y_breaks(self) -> List[float]:
        return sorted(set(self.left.y_breaks()) | set(self.right.y_breaks()))

    def scaled(self, c: float) -> "ProductRep":
        return ProductRep(self.left.scaled(c), self.right)

    def dilate(self, R: float) -> "ProductRep":
        return ProductRep(self.left.dilate(R), self.right.dilate(R))

    def to_json(self) -> dict:
        return {"kind": self.kind, "left": self.left.to_json(), "right": self.right.to_json()}


class SumRep(FuncRep):
    """Pointwise sum of two representations.

    Slices are exact when the summand slices have disjoint supports
    (piece interleaving); overlapping sums should be built on a shared
    grid instead, where addition is exact cell by cell.
    """

    kind = "sum"

    def __init__(self, left: FuncRep, right: FuncRep):
        if (left.dims.n, left.dims.m) != (right.dims.n, right.dims.m):
            raise ValueError("summand dimensions differ")
        self.left = left
        self.right = right
        self.dims = left.dims

    def eval(self, x: float, y: float) -> float:
        return self.left.eval(x, y) + self.right.eval(x, y)

    def slice_at(self, ry: float) -> Func1D:
        return self.left.slice_at(ry).add_disjoint(self.right.slice_at(ry))

    def y_support(self) -> Tuple[float, float]:
        l1, h1 = self.left.y_support()
        l2, h2 = self.right.y_support()
        return (min(l1, l2), max(h1, h2))

    def y_breaks(self) -> List[float]:
        return sorted(set(self.left.y_breaks()) | set(self.right.y_breaks()))

    def scaled(self, c: float) -> "SumRep":
        return SumRep(self.left.scaled(c), self.right.scaled(c))

    def dilate(self, R: float) -> "SumRep":
        return SumRep(self.left.dilate(R), self.right.dilate(R))

    def to_json(self) -> dict:
        return {"kind": self.kind, "left": self.left.to_json(), "right": self.right.to_json()}


class OffsetRep(FuncRep):
    """base + offset (pointwise); only used to compare against its base."""

    kind = "offset"

    def __init__(self, rep: FuncRep, offset: float):
        if offset < 0:
            raise ValueError("offset must be nonnegative")
        self.rep = rep
        self.offset = offset
        self.dims = rep.dims

    def eval(self, x: float, y: float) -> float:
        return self.rep.eval(x, y) + self.offset

    def to_json(self) -> dict:
        return {"kind": self.kind, "offset": self.offset, "base": self.rep.to_json()}


class TransposeRep(FuncRep):
    """Axis swap of a base representation via its y-slices."""

    kind = "transpose"

    def __init__(self, rep: FuncRep):
        if not hasattr(rep, "slice_in_y_at"):
            raise UnsupportedDimension(f"{rep.kind} cannot be transposed")
        self.rep = rep
        self.dims = DimPair(rep.dims.m, rep.dims.n)

    def eval(self, x: float, y: float) -> float:
        return self.rep.eval(y, x)

    def slice_at(self, ry: float) -> Func1D:
        return self.rep.slice_in_y_at(ry)

    def y_support(self) -> Tuple[float, float]:
        if hasattr(self.rep, "x_breaks"):
            pts = self.rep.x_breaks()
        else:
            pts = []
        hi = max(pts) if pts else INF
        return (0.0, hi)

    def y_breaks(self) -> List[float]:
        return self.rep.x_breaks() if hasattr(self.rep, "x_breaks") else []

    def transpose(self) -> FuncRep:
        return self.rep

    def to_json(self) -> dict:
        return {"kind": self.kind, "base": self.rep.to_json()}


# ---------------------------------------------------------------------------
# grids and sampling
# ---------------------------------------------------------------------------


def default_nodes(
    lo: float = 1e-6, hi: float = 1e6, cells: int = 512, origin_cell: bool = True
) -> np.ndarray:
    """Geometric grid nodes over [lo, hi], optionally with a leading [0, lo) cell."""
    nodes = np.geomspace(lo, hi, cells + 1)
    if origin_cell:
        nodes = np.concatenate([[0.0], nodes])
    return nodes


def sample_to_grid(
    rep: FuncRep,
    xnodes: Optional[Sequence[float]] = None,
    ynodes: Optional[Sequence[float]] = None,
) -> GridRep:
    """Midpoint sampling onto a radial grid.

    Cell values are taken at the arithmetic midpoint of the radial
    interval, which keeps singular cells finite.  Raises NonFiniteSample
    if the representation is infinite at a midpoint.
    """
    xn = np.asarray(xnodes if xnodes is not None else default_nodes(), dtype=float)
    yn = np.asarray(ynodes if ynodes is not None else default_nodes(), dtype=float)
    xm = (xn[:-1] + xn[1:]) / 2.0
    ym = (yn[:-1] + yn[1:]) / 2.0
    vals = np.empty((len(xm), len(ym)))
    for j, ry in enumerate(ym):
        for i, rx in enumerate(xm):
            v = rep.eval(rx, ry)
            if not math.isfinite(v):
                raise NonFiniteSample(f"non-finite sample at ({rx}, {ry})")
            vals[i, j] = v
    return GridRep(xn, yn, vals, rep.dims)


# ---------------------------------------------------------------------------
# JSON round trip
# ---------------------------------------------------------------------------


def funcrep_from_json(data: dict) -> FuncRep:
    kind = data.get("kind")
    dims = DimPair(*data["dims"]) if "dims" in data else DimPair(1, 1)
    region = RegionSpec.from_json(data["region"]) if "region" in data else None
    if kind == "power_product":
        return PowerProductRep(
            float(data["c"]), float(data["a1"]), float(data["a2"]), region, dims
        )
    if kind == "max_power":
        return MaxKernelRep(-float(data["gamma"]), float(data.get("coef", 1.0)), region, dims)
    if kind == "sum_power":
        return SumKernelRep(-float(data["gamma"]), float(data.get("coef", 1.0)), region, dims)
    if kind == "shift_power":
        return DiffKernelRep(float(data["a"]), float(data.get("c", 1.0)), region, dims)
    if kind == "exp_layer":
        return ExpLayerRep(
            float(data["a"]),
            float(data["p1"]),
            float(data.get("upper_coef", 1.0)),
            _num(data.get("y_lo", 0.0)),
            _num(data.get("y_hi", INF)),
            dims,
        )
    if kind == "log_damped":
        return LogDampedRep.from_strength(
            float(data["gamma"]), float(data["q1"]), float(data.get("box", 1.0 / 3.0))
        )
    if kind == "tensor":
        return TensorRep(Func1D.from_json(data["fx"]), Func1D.from_json(data["gy"]), dims)
    if kind == "grid":
        return GridRep(
            [_num(v) for v in data["xnodes"]],
            [_num(v) for v in data["ynodes"]],
            np.asarray(data["values"], dtype=float),
            dims,
        )
    if kind == "product":
        return ProductRep(funcrep_from_json(data["left"]), funcrep_from_json(data["right"]))
    if kind == "sum":
        return SumRep(funcrep_from_json(data["left"]), funcrep_from_json(data["right"]))
    if kind == "transpose":
        return TransposeRep(funcrep_from_json(data["base"]))
    if kind == "offset":
        return OffsetRep(funcrep_from_json(data["base"]), float(data["offset"]))
    raise ValueError(f"unknown function kind {kind!r}")
