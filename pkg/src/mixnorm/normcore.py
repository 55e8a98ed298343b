"""Mixed-norm evaluation for two-variable function representations.

Values are computed along three routes, tried in order:

* exact sweeps when the input is a step function on a product grid,
* exact piecewise-monomial inner profiles when the representation can
  produce them in closed form,
* sampled slice profiles with per-cell power-law fits otherwise.

Every result carries the route that produced it, an error bound, and the
level that achieved a weak-type supremum when one was searched for.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .exponents import Exponent, ExponentPair, unit_ball_volume
from .funcone import Func1D, IncompatibleProduct, Piece
from .funcrep import (
    FuncRep,
    GridRep,
    InfiniteProfile,
    LogDampedRep,
    OffsetRep,
    TensorRep,
    default_nodes,
    sample_to_grid,
)

INF = math.inf

# lambda-search tuning
LAMBDA_SCAN_POINTS = 512
LAMBDA_BLOWUP = 1e12
GOLDEN_REL_TOL = 1e-6

# slice sampling
SAMPLES_PER_DECADE = 24
SAMPLE_FLOOR = 1e-7
SAMPLE_CEIL = 1e7
EDGE_NUDGE = 1e-9
SNAP_DENOMINATOR = 24
SNAP_TOL = 1e-9

# superlevel bands narrower than this (in decades) get their own sample
# grid, padded this far past an open edge before tail exponents are fitted
REFINE_SPAN_DECADES = 2.5
REFINE_PAD_DECADES = 6.0

METHOD_CLOSED = "closed_form"
METHOD_SEARCH = "lambda_search"
METHOD_GRID = "grid_exact"
_METHODS = (METHOD_CLOSED, METHOD_SEARCH, METHOD_GRID)

VARIANT_OUTER_STRONG_INNER_WEAK = "outer_strong_inner_weak"
VARIANT_OUTER_WEAK_INNER_STRONG = "outer_weak_inner_strong"
_VARIANTS = (VARIANT_OUTER_STRONG_INNER_WEAK, VARIANT_OUTER_WEAK_INNER_STRONG)


def _json_num(v: float):
    return "inf" if math.isinf(v) else v


@dataclass(frozen=True)
class NormResult:
    """Outcome of a norm computation.

    err_bound is zero for exact routes, finite whenever the value is
    finite, and infinite only for values declared infinite from fitted
    (rather than closed-form) evidence.  maximizing_lambda records the
    level at which a weak-type supremum was located, when one was.
    """

    value: float
    method: str
    err_bound: float
    maximizing_lambda: Optional[float] = None
    notes: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.method not in _METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.value < 0 or math.isnan(self.value):
            raise ValueError("norm value must be nonnegative")
        if math.isfinite(self.value) and not math.isfinite(self.err_bound):
            raise ValueError("finite value needs a finite error bound")

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.value)

    def to_json(self) -> dict:
        return {
            "value": _json_num(self.value),
            "method": self.method,
            "err_bound": _json_num(self.err_bound),
            "maximizing_lambda": self.maximizing_lambda,
        }

    def __repr__(self):
        lam = "" if self.maximizing_lambda is None else f", lam={self.maximizing_lambda:.6g}"
        return f"NormResult({self.value:.12g}, {self.method}, err<={self.err_bound:.3g}{lam})"


@dataclass(frozen=True)
class SuperlevelProfile:
    """Superlevel mass curve: for each level, the mixed norm of the
    indicator of the strict superlevel set, with per-point exactness."""

    lambdas: Tuple[float, ...]
    phis: Tuple[float, ...]
    exact: Tuple[bool, ...]
    sup_lambda_phi: float

    def __post_init__(self):
        k = len(self.lambdas)
        if len(self.phis) != k or len(self.exact) != k:
            raise ValueError("profile arrays must share a length")
        for a, b in zip(self.lambdas, self.lambdas[1:]):
            if not (b > a > 0):
                raise ValueError("levels must be positive and increasing")
        for a, b in zip(self.phis, self.phis[1:]):
            if b > a * (1 + 1e-9) + 1e-300:
                raise AssertionError("superlevel curve must be nonincreasing")
        if math.isfinite(self.sup_lambda_phi):
            for lam, phi in zip(self.lambdas, self.phis):
                if math.isfinite(phi) and lam * phi > self.sup_lambda_phi * (1 + 1e-9) + 1e-300:
                    raise AssertionError("recorded supremum below a profile point")

    def to_json(self) -> dict:
        return {
            "lambdas": list(self.lambdas),
            "phis": [_json_num(v) for v in self.phis],
            "exact": list(self.exact),
            "sup_lambda_phi": _json_num(self.sup_lambda_phi),
        }

    def rows(self) -> List[Tuple[float, float, bool]]:
        return list(zip(self.lambdas, self.phis, self.exact))


# ---------------------------------------------------------------------------
# exponent coercion


def _expo_value(p) -> float:
    if isinstance(p, Exponent):
        return p.value
    return Exponent(p).value


def _pair(p) -> Tuple[float, float]:
    if isinstance(p, ExponentPair):
        return p.inner.value, p.outer.value
    try:
        a, b = p
    except (TypeError, ValueError):
        raise ValueError("exponent pair must unpack into two entries")
    return _expo_value(a), _expo_value(b)


def _check_dims(rep: FuncRep, dims) -> None:
    if dims is None:
        return
    if (rep.dims.n, rep.dims.m) != (dims.n, dims.m):
        raise ValueError(
            f"dimension mismatch: representation has {rep.dims}, caller asked for {dims}"
        )


def _pow_ext(base: float, e: float) -> float:
    """base**e on [0, inf] with the indicator conventions 0**0 = 0,
    inf**0 = 1 used by mixed-norm formulas."""
    if e == 0.0:
        return 1.0 if base > 0 else 0.0
    if base == 0.0:
        return 0.0 if e > 0 else INF
    if math.isinf(base):
        return INF if e > 0 else 0.0
    try:
        return base**e
    except OverflowError:
        return INF


def _mul_ext(a: float, b: float) -> float:
    # 0 * inf = 0: a vanishing factor kills the product function entirely
    if a == 0.0 or b == 0.0:
        return 0.0
    return a * b


# ---------------------------------------------------------------------------
# one-variable wrappers


def strong_norm_1d(f: Func1D, p) -> NormResult:
    v = f.strong_norm(_expo_value(p))
    return NormResult(v, METHOD_CLOSED, 0.0)


def weak_norm_1d(f: Func1D, p) -> NormResult:
    out = f.weak_norm(_expo_value(p))
    method = METHOD_CLOSED if out.err_bound == 0.0 else METHOD_SEARCH
    err = out.err_bound if math.isfinite(out.value) else 0.0
    return NormResult(out.value, method, err, out.arg_lambda)


# ---------------------------------------------------------------------------
# slice sampling and profile fitting


class DivergentSamples(Exception):
    """Two or more consecutive sampled slices came back infinite."""

    def __init__(self, where: float):
        self.where = where
        super().__init__(f"divergent inner values near |y| = {where:.6g}")


def snap_exponent(alpha: float, max_den: int = SNAP_DENOMINATOR, tol: float = SNAP_TOL) -> float:
    """Round a fitted tail exponent to a nearby small-denominator rational.

    Tail divergence decisions hinge on exact critical exponents, so fits
    within tol of k/d (d <= max_den) are snapped before integration.
    """
    if not math.isfinite(alpha):
        return alpha
    fr = Fraction(alpha).limit_denominator(max_den)
    if abs(float(fr) - alpha) <= tol * max(1.0, abs(alpha)):
        return float(fr)
    return alpha


@dataclass
class _Segment:
    lo: float  # true lower edge, may be 0
    hi: float  # true upper edge, may be inf
    ts: np.ndarray  # sample radii strictly inside (lo, hi)


def _sample_segments(rep: FuncRep, per_decade: int = SAMPLES_PER_DECADE) -> List[_Segment]:
    y_lo, y_hi = rep.y_support()
    if not (y_hi > y_lo):
        return []
    if y_lo > 0:
        lo_eff = y_lo
    else:
        lo_eff = min(SAMPLE_FLOOR, y_hi / 1e6) if math.isfinite(y_hi) else SAMPLE_FLOOR
    hi_eff = y_hi if math.isfinite(y_hi) else max(SAMPLE_CEIL, lo_eff * 1e6)
    if hi_eff <= lo_eff:
        return []
    breaks = sorted({b for b in rep.y_breaks() if lo_eff < b < hi_eff})
    edges = [lo_eff] + breaks + [hi_eff]
    segs: List[_Segment] = []
    for i, (a, b) in enumerate(zip(edges, edges[1:])):
        if b <= a * (1 + 1e-12):
            continue
        decades = math.log10(b / a)
        k = min(400, max(6, int(math.ceil(per_decade * decades)) + 1))
        ts = np.geomspace(a * (1 + EDGE_NUDGE), b * (1 - EDGE_NUDGE), k)
        seg_lo = y_lo if i == 0 else a
        seg_hi = y_hi if i == len(edges) - 2 else b
        segs.append(_Segment(seg_lo, seg_hi, ts))
    return segs


def _clean_samples(
    ts: Sequence[float], hs: Sequence[float], notes: List[str]
) -> Tuple[List[float], List[float]]:
    """Drop isolated infinite samples (with a note), abort on runs of them."""
    out_t: List[float] = []
    out_h: List[float] = []
    k = len(ts)
    for i in range(k):
        h = hs[i]
        if math.isnan(h):
            raise ValueError(f"sampled inner value is NaN at |y| = {ts[i]:.6g}")
        if math.isinf(h):
            prev_inf = i > 0 and math.isinf(hs[i - 1])
            next_inf = i + 1 < k and math.isinf(hs[i + 1])
            if prev_inf or next_inf:
                raise DivergentSamples(ts[i])
            notes.append(f"isolated singular slice near |y| = {ts[i]:.4g} excluded")
            continue
        out_t.append(float(ts[i]))
        out_h.append(float(h))
    return out_t, out_h


def _const_halves(t1: float, t2: float, h1: float, h2: float) -> List[Piece]:
    tm = math.sqrt(t1 * t2)
    out = []
    if h1 > 0:
        out.append(Piece(t1, tm, h1))
    if h2 > 0:
        out.append(Piece(tm, t2, h2))
    return out


def _cell_pieces(t1: float, t2: float, h1: float, h2: float) -> List[Piece]:
    if h1 <= 0 and h2 <= 0:
        return []
    if h1 <= 0 or h2 <= 0:
        return [Piece(t1, t2, max(h1, h2))]
    alpha = math.log(h2 / h1) / math.log(t2 / t1)
    if abs(alpha) > 60:
        return _const_halves(t1, t2, h1, h2)
    lc = math.log(h1) - alpha * math.log(t1)
    if abs(lc) > 600:
        return _const_halves(t1, t2, h1, h2)
    return [Piece(t1, t2, math.exp(lc), alpha)]


def _tail_piece(
    t_edge: float, h_edge: float, alpha_raw: float, lo: float, hi: float, down: bool
) -> Optional[Piece]:
    alpha = snap_exponent(alpha_raw)
    lc = math.log(h_edge) - alpha * math.log(t_edge)
    if abs(lc) > 600 or not math.isfinite(alpha):
        return None
    coef = math.exp(lc)
    if down:
        return Piece(lo, t_edge, coef, alpha)
    return Piece(t_edge, hi, coef, alpha)


def _fit_segment(ts: List[float], hs: List[float], lo: float, hi: float) -> List[Piece]:
    k = len(ts)
    if k == 0:
        return []
    if k == 1:
        if hs[0] <= 0:
            return []
        cap = hi if math.isfinite(hi) else ts[0] * 10.0
        return [Piece(lo, cap, hs[0])]
    pieces: List[Piece] = []
    for i in range(k - 1):
        pieces.extend(_cell_pieces(ts[i], ts[i + 1], hs[i], hs[i + 1]))
    # extend toward the segment edges, snapping the fitted tail exponent
    first = next((i for i, h in enumerate(hs) if h > 0), None)
    if first is not None:
        if first == 0 and lo < ts[0] and hs[1] > 0:
            a0 = math.log(hs[1] / hs[0]) / math.log(ts[1] / ts[0])
            pc = _tail_piece(ts[0], hs[0], a0, lo, hi, down=True)
            if pc is not None and pc.hi > pc.lo:
                pieces.append(pc)
        last = max(i for i, h in enumerate(hs) if h > 0)
        if last == k - 1 and hi > ts[-1] and hs[-2] > 0:
            a1 = math.log(hs[-1] / hs[-2]) / math.log(ts[-1] / ts[-2])
            pc = _tail_piece(ts[-1], hs[-1], a1, lo, hi, down=False)
            if pc is not None and pc.hi > pc.lo:
                pieces.append(pc)
    return pieces


def _fit_profile(
    segs: List[_Segment],
    values: List[np.ndarray],
    dim: int,
    notes: List[str],
    stride: int = 1,
) -> Func1D:
    pieces: List[Piece] = []
    for seg, vals in zip(segs, values):
        ts = list(seg.ts[::stride])
        hs = list(vals[::stride])
        if stride > 1 and len(seg.ts) > 1 and (len(seg.ts) - 1) % stride:
            ts.append(float(seg.ts[-1]))
            hs.append(float(vals[-1]))
        ts2, hs2 = _clean_samples(ts, hs, notes if stride == 1 else [])
        pieces.extend(_fit_segment(ts2, hs2, seg.lo, seg.hi))
    return Func1D(pieces, dim=dim, radial=True)


class _SliceCache:
    """Sampled x-slices of a representation, built once per norm call."""

    def __init__(self, rep: FuncRep):
        self.rep = rep
        self.segs = _sample_segments(rep)
        self.ts = (
            np.concatenate([s.ts for s in self.segs]) if self.segs else np.empty(0)
        )
        self._slices: dict = {}
        self._vector_measures = (
            type(rep).measure_slices is not FuncRep.measure_slices
        )

    @property
    def empty(self) -> bool:
        return self.ts.size == 0

    def slice(self, i: int) -> Func1D:
        sl = self._slices.get(i)
        if sl is None:
            sl = self.rep.slice_at(float(self.ts[i]))
            self._slices[i] = sl
        return sl

    def split(self, flat: np.ndarray) -> List[np.ndarray]:
        out = []
        k = 0
        for seg in self.segs:
            out.append(flat[k : k + len(seg.ts)])
            k += len(seg.ts)
        return out

    def measures(self, lam: float, radius: float = INF) -> np.ndarray:
        if self._vector_measures and math.isinf(radius):
            return np.asarray(self.rep.measure_slices(self.ts, lam), dtype=float)
        out = np.empty(self.ts.size)
        for i in range(self.ts.size):
            sl = self.slice(i)
            if math.isfinite(radius):
                sl = sl.truncate_outside(radius)
            out[i] = sl.measure_above(lam)
        return out

    def measures_at(self, ts: np.ndarray, lam: float) -> np.ndarray:
        if self._vector_measures:
            return np.asarray(self.rep.measure_slices(ts, lam), dtype=float)
        out = np.empty(ts.size)
        for i in range(ts.size):
            out[i] = self.rep.slice_at(float(ts[i])).measure_above(lam)
        return out

    def inner_values(self, fn: Callable[[int], float]) -> np.ndarray:
        return np.array([fn(i) for i in range(self.ts.size)], dtype=float)

    def level_range(self) -> Tuple[float, float]:
        vals: List[float] = []
        step = max(1, self.ts.size // 24)
        idxs = list(range(0, self.ts.size, step))
        try:
            for i in idxs:
                try:
                    sl = self.slice(i)
                except OverflowError:
                    continue
                for v in sl.candidate_levels():
                    if 0 < v < INF:
                        vals.append(v)
                es = sl.ess_sup()
                if 0 < es < INF:
                    vals.append(es)
        except IncompatibleProduct:
            xs = np.geomspace(1e-6, 1e6, 61)
            for i in idxs:
                ry = float(self.ts[i])
                for x in xs:
                    v = self.rep.eval(float(x), ry)
                    if 0 < v < INF:
                        vals.append(v)
        if not vals:
            return 1e-6, 1e6
        return min(vals), max(vals)


# ---------------------------------------------------------------------------
# generic sampled norm (strong or weak outer over exact inner slice values)


def _tier_b_norm(
    rep: FuncRep,
    value_at: Callable[[_SliceCache, int], Tuple[float, float]],
    outer_eval: Callable[[Func1D], Tuple[float, Optional[float]]],
    what: str,
) -> NormResult:
    cache = _SliceCache(rep)
    if cache.empty:
        return NormResult(0.0, METHOD_CLOSED, 0.0)
    notes: List[str] = [f"sampled {cache.ts.size} slices for {what}"]
    inner_err = 0.0
    raw = np.empty(cache.ts.size)
    for i in range(cache.ts.size):
        v, e = value_at(cache, i)
        raw[i] = v
        if math.isfinite(v):
            inner_err = max(inner_err, e)
    values = cache.split(raw)
    try:
        fine = _fit_profile(cache.segs, values, rep.dims.m, notes, stride=1)
    except DivergentSamples as exc:
        return NormResult(
            INF, METHOD_SEARCH, INF, None, tuple(notes) + (str(exc),)
        )
    try:
        coarse = _fit_profile(cache.segs, values, rep.dims.m, notes, stride=2)
    except DivergentSamples:
        # an isolated singular slice can look consecutive after subsampling
        coarse = fine
    v, arg = outer_eval(fine)
    if math.isinf(v):
        return NormResult(
            INF, METHOD_SEARCH, INF, arg, tuple(notes) + ("fitted profile diverges",)
        )
    vc, _ = outer_eval(coarse)
    err = abs(v - vc) + inner_err + 1e-9 * abs(v)
    return NormResult(v, METHOD_SEARCH, err, arg, tuple(notes))


# ---------------------------------------------------------------------------
# superlevel indicator norms


def _phi_from_measure_profile(prof: Func1D, p1: float, p2: float) -> float:
    if math.isinf(p1):
        supp = prof.measure_above(0.0, strict=True)
        if math.isinf(p2):
            return 1.0 if supp > 0 else 0.0
        return _pow_ext(supp, 1.0 / p2)
    if math.isinf(p2):
        return _pow_ext(prof.ess_sup(), 1.0 / p1)
    v = prof.integral_power(p2 / p1)
    return _pow_ext(v, 1.0 / p2)


def _grid_phi(g: GridRep, lam: float, p1: float, p2: float) -> float:
    mass = g.x_weights @ (g.values > lam)
    if math.isinf(p1):
        hit = mass > 0
        if math.isinf(p2):
            return 1.0 if bool(hit.any()) else 0.0
        return _pow_ext(float(g.y_weights[hit].sum()), 1.0 / p2)
    if math.isinf(p2):
        return _pow_ext(float(mass.max(initial=0.0)), 1.0 / p1)
    return _pow_ext(float((mass ** (p2 / p1) @ g.y_weights)), 1.0 / p2)


def _refined_level_samples(
    cache: _SliceCache, lam: float
) -> Tuple[List[_Segment], List[np.ndarray]]:
    """Slice measures at one level, resampled where the superlevel set is thin.

    The standing grid spans the whole support at a fixed density, so a
    level whose superlevel set occupies a narrow band of radii is seen by
    only a handful of samples, and edge extensions fitted from those
    samples sit outside the asymptotic regime.  Such bands get a fresh
    grid on their own scale before any tail exponent is fitted.
    """
    mus = cache.measures(lam)
    segs_out: List[_Segment] = []
    vals_out: List[np.ndarray] = []
    for seg, vals in zip(cache.segs, cache.split(mus)):
        pos = np.nonzero(vals > 0)[0]
        if pos.size == 0 or pos.size == vals.size:
            segs_out.append(seg)
            vals_out.append(vals)
            continue
        t_lo, t_hi = float(seg.ts[pos[0]]), float(seg.ts[pos[-1]])
        if t_hi >= t_lo * 10.0**REFINE_SPAN_DECADES:
            segs_out.append(seg)
            vals_out.append(vals)
            continue
        pad = 10.0**REFINE_PAD_DECADES
        if pos[0] > 0:
            a = float(seg.ts[pos[0] - 1])
        elif seg.lo == 0.0:
            a = t_lo / pad
        else:
            a = float(seg.ts[0])
        if pos[-1] < vals.size - 1:
            b = float(seg.ts[pos[-1] + 1])
        elif math.isinf(seg.hi):
            b = t_hi * pad
        else:
            b = float(seg.ts[-1])
        decades = math.log10(b / a)
        k = min(400, max(12, int(math.ceil(SAMPLES_PER_DECADE * decades)) + 1))
        ts = np.geomspace(a, b, k)
        segs_out.append(_Segment(seg.lo, seg.hi, ts))
        vals_out.append(cache.measures_at(ts, lam))
    return segs_out, vals_out


def _phi_sampled(
    cache: _SliceCache, lam: float, p1: float, p2: float, stride: int = 1, radius: float = INF
) -> float:
    if math.isinf(radius):
        segs, parts = _refined_level_samples(cache, lam)
    else:
        mus = cache.measures(lam, radius=radius)
        segs, parts = cache.segs, cache.split(mus)
    hs_parts: List[np.ndarray] = []
    for vals in parts:
        if math.isinf(p1):
            hs = (vals > 0).astype(float)
            hs[np.isinf(vals)] = 1.0
        else:
            with np.errstate(over="ignore"):
                hs = np.where(np.isinf(vals), INF, vals ** (1.0 / p1))
        hs_parts.append(hs)
    notes: List[str] = []
    try:
        prof = _fit_profile(segs, hs_parts, cache.rep.dims.m, notes, stride)
    except DivergentSamples:
        return INF
    if math.isinf(p2):
        return prof.ess_sup()
    return prof.strong_norm(p2)


def indicator_mixed_norm(
    rep: FuncRep, lam: float, p, cache: Optional[_SliceCache] = None
) -> Tuple[float, bool]:
    """Mixed norm of the indicator of the strict superlevel set at lam.

    Returns (value, exact).  Grid inputs and closed-form measure profiles
    are exact; sampled fallbacks are flagged approximate.
    """
    if lam < 0:
        raise ValueError("level must be nonnegative")
    p1, p2 = _pair(p)
    if isinstance(rep, GridRep):
        return _grid_phi(rep, lam, p1, p2), True
    try:
        prof = rep.measure_profile(lam)
    except InfiniteProfile:
        if not math.isinf(p1):
            return INF, True
        # a slice of infinite measure still contributes 1 to an inner sup
        # slot, so fall through to the sampled nonemptiness profile
        prof = None
    if prof is not None:
        return _phi_from_measure_profile(prof, p1, p2), True
    if cache is None:
        cache = _SliceCache(rep)
    if cache.empty:
        return 0.0, True
    return _phi_sampled(cache, lam, p1, p2), False


# ---------------------------------------------------------------------------
# lambda-supremum search


class _PhiInfinite(Exception):
    def __init__(self, lam: float, exact: bool):
        self.lam = lam
        self.exact = exact
        super().__init__(f"superlevel norm infinite at level {lam:.6g}")


class _PhiBlowup(Exception):
    def __init__(self, lam: float):
        self.lam = lam
        super().__init__(f"lambda * phi exceeded {LAMBDA_BLOWUP:g} at level {lam:.6g}")


def _weak_sup(
    phi_fn: Callable[[float, bool], Tuple[float, bool]],
    lo_level: float,
    hi_level: float,
    notes: List[str],
    trend_check: Optional[Callable[[float], float]] = None,
) -> NormResult:
    """Supremum of lam * phi(lam) over lam > 0.

    Scans a geometric level grid, extends it while the winner sits at an
    edge, then golden-sections the winning bracket.  The error bound is
    the final bracket width times a local slope estimate, plus the fit
    discrepancy at the winner when phi itself was sampled.
    """
    lo = max(lo_level / 1e3, 1e-300)
    hi = min(hi_level * 1e3, 1e300)
    if hi <= lo:
        hi = lo * 1e6

    inexact_seen = False

    def geval(lam: float, coarse: bool = False) -> float:
        nonlocal inexact_seen
        phi, exact = phi_fn(lam, coarse)
        if not exact:
            inexact_seen = True
        if math.isinf(phi):
            raise _PhiInfinite(lam, exact)
        g = lam * phi
        if g > LAMBDA_BLOWUP:
            raise _PhiBlowup(lam)
        return g

    def scan(arr: np.ndarray) -> np.ndarray:
        return np.array([geval(lam) for lam in arr])

    try:
        lams = np.geomspace(lo, hi, LAMBDA_SCAN_POINTS)
        gs = scan(lams)
        for _ in range(4):
            i = int(np.argmax(gs))
            if i == 0 and lams[0] > 1e-14:
                ext = np.geomspace(lams[0] / 1e3, lams[0] * (1 - 1e-12), 96)
                gs = np.concatenate([scan(ext), gs])
                lams = np.concatenate([ext, lams])
            elif i == len(lams) - 1 and lams[-1] < 1e14:
                ext = np.geomspace(lams[-1] * (1 + 1e-12), lams[-1] * 1e3, 96)
                gs = np.concatenate([gs, scan(ext)])
                lams = np.concatenate([lams, ext])
            else:
                break
        i = int(np.argmax(gs))
        best = float(gs[i])
        if best == 0.0:
            return NormResult(0.0, METHOD_SEARCH, 0.0, None, tuple(notes))
        if i in (0, len(lams) - 1):
            # still pinned to an edge after extension: growing without bound?
            j = i + (64 if i == 0 else -64)
            inner = float(gs[j]) if 0 <= j < len(lams) else 0.0
            if inner > 0 and best > inner * 1.01:
                if trend_check is None or _truncation_grows(trend_check):
                    notes.append("supremum still rising at the level-range edge")
                    return NormResult(INF, METHOD_SEARCH, INF, float(lams[i]), tuple(notes))
                notes.append("supremum taken at the level-range edge")
            lam_star = float(lams[i])
            err = abs(best - inner) * GOLDEN_REL_TOL
        else:
            dx = math.log(lams[i + 1] / lams[i])
            slope = max(abs(gs[i] - gs[i - 1]), abs(gs[i + 1] - gs[i])) / dx
            xa, xb = math.log(lams[i - 1]), math.log(lams[i + 1])
            ratio = (math.sqrt(5.0) - 1.0) / 2.0
            x1 = xb - ratio * (xb - xa)
            x2 = xa + ratio * (xb - xa)
            f1, f2 = geval(math.exp(x1)), geval(math.exp(x2))
            while (xb - xa) > GOLDEN_REL_TOL:
                if f1 < f2:
                    xa, x1, f1 = x1, x2, f2
                    x2 = xa + ratio * (xb - xa)
                    f2 = geval(math.exp(x2))
                else:
                    xb, x2, f2 = x2, x1, f1
                    x1 = xb - ratio * (xb - xa)
                    f1 = geval(math.exp(x1))
            cand = max(f1, f2)
            if cand >= best:
                best = cand
                lam_star = math.exp((xa + xb) / 2.0)
            else:
                lam_star = float(lams[i])
            err = slope * (xb - xa)
        if inexact_seen:
            fine = geval(lam_star, coarse=False)
            coarse = geval(lam_star, coarse=True)
            err += abs(fine - coarse) + 1e-9 * best
        return NormResult(best, METHOD_SEARCH, err, lam_star, tuple(notes))
    except _PhiInfinite as exc:
        if exc.exact:
            notes.append("superlevel norm diverges in closed form")
            return NormResult(INF, METHOD_CLOSED, 0.0, exc.lam, tuple(notes))
        notes.append("fitted superlevel norm diverges")
        return NormResult(INF, METHOD_SEARCH, INF, exc.lam, tuple(notes))
    except _PhiBlowup as exc:
        notes.append(f"lambda * phi exceeded {LAMBDA_BLOWUP:g}")
        return NormResult(INF, METHOD_SEARCH, INF, exc.lam, tuple(notes))


def _truncation_grows(evaluate: Callable[[float], float]) -> bool:
    """True when the supremum keeps rising as the truncation radius grows."""
    vals = []
    try:
        for radius in (1e2, 1e4, 1e6):
            v = evaluate(radius)
            if math.isinf(v):
                return True
            vals.append(v)
    except (IncompatibleProduct, NotImplementedError):
        return True  # cannot rule out growth without slice access
    return all(b > a * 1.001 for a, b in zip(vals, vals[1:]))


# ---------------------------------------------------------------------------
# grid sweeps


def _grid_mixed_strong(g: GridRep, p1: float, p2: float) -> float:
    wx, wy = g.x_weights, g.y_weights
    vals = g.values
    if math.isinf(p1):
        col = vals.max(axis=0) if vals.size else np.zeros(0)
    else:
        with np.errstate(over="ignore"):
            col = (vals**p1 * wx[:, None]).sum(axis=0) ** (1.0 / p1)
    if math.isinf(p2):
        return float(col.max(initial=0.0))
    with np.errstate(over="ignore"):
        return _pow_ext(float((col**p2 * wy).sum()), 1.0 / p2)


def _grid_mixed_weak(g: GridRep, p1: float, p2: float) -> Tuple[float, Optional[float]]:
    """Exact supremum of lam * |chi_{f > lam}| over lam, by a descending
    sweep over the distinct cell values."""
    wx, wy = g.x_weights, g.y_weights
    vals = g.values
    pos = vals > 0
    if not pos.any():
        return 0.0, None
    if math.isinf(p1) and math.isinf(p2):
        v = float(vals.max())
        return v, v
    ii, jj = np.nonzero(pos)
    flat = vals[ii, jj]
    order = np.argsort(-flat, kind="stable")
    flat, ii, jj = flat[order], ii[order], jj[order]
    ncols = vals.shape[1]
    best = 0.0
    best_level: Optional[float] = None

    if math.isinf(p2):
        w = np.zeros(ncols)
        wmax = 0.0
        k = 0
        total = len(flat)
        while k < total:
            v = flat[k]
            while k < total and flat[k] == v:
                j = jj[k]
                w[j] += wx[ii[k]]
                if w[j] > wmax:
                    wmax = w[j]
                k += 1
            cand = v * _pow_ext(wmax, 1.0 / p1)
            if cand > best:
                best, best_level = cand, float(v)
        return best, best_level

    if math.isinf(p1):
        hit = np.zeros(ncols, dtype=bool)
        s = 0.0
        k = 0
        total = len(flat)
        while k < total:
            v = flat[k]
            while k < total and flat[k] == v:
                j = jj[k]
                if not hit[j]:
                    hit[j] = True
                    s += wy[j]
                k += 1
            cand = v * _pow_ext(s, 1.0 / p2)
            if cand > best:
                best, best_level = cand, float(v)
        return best, best_level

    rho = p2 / p1
    w = np.zeros(ncols)
    contrib = np.zeros(ncols)
    s = 0.0
    k = 0
    total = len(flat)
    while k < total:
        v = flat[k]
        while k < total and flat[k] == v:
            j = jj[k]
            s -= contrib[j]
            w[j] += wx[ii[k]]
            contrib[j] = w[j] ** rho * wy[j]
            s += contrib[j]
            k += 1
        cand = v * _pow_ext(max(s, 0.0), 1.0 / p2)
        if cand > best:
            best, best_level = cand, float(v)
    return best, best_level


# ---------------------------------------------------------------------------
# tensor closed forms


def _tensor_mixed_strong(rep: TensorRep, p1: float, p2: float) -> NormResult:
    a = rep.fx.strong_norm(p1)
    b = rep.gy.strong_norm(p2)
    return NormResult(_mul_ext(a, b), METHOD_CLOSED, 0.0)


def _tensor_iterated_weak(rep: TensorRep, p1: float, p2: float) -> NormResult:
    a = rep.fx.weak_norm(p1)
    b = rep.gy.weak_norm(p2)
    v = _mul_ext(a.value, b.value)
    if math.isinf(v):
        return NormResult(INF, METHOD_CLOSED, 0.0, b.arg_lambda)
    err = a.err_bound * b.value + b.err_bound * a.value
    method = METHOD_CLOSED if err == 0.0 else METHOD_SEARCH
    return NormResult(v, method, err, b.arg_lambda)


def _tensor_half(rep: TensorRep, p1: float, p2: float, variant: str) -> NormResult:
    if variant == VARIANT_OUTER_STRONG_INNER_WEAK:
        a = rep.fx.weak_norm(p1)
        b_val, b_err, arg = rep.gy.strong_norm(p2), 0.0, None
        v = _mul_ext(a.value, b_val)
        err = a.err_bound * b_val
    else:
        a_val = rep.fx.strong_norm(p1)
        b = rep.gy.weak_norm(p2)
        v = _mul_ext(a_val, b.value)
        err, arg = b.err_bound * a_val, b.arg_lambda
    if math.isinf(v):
        return NormResult(INF, METHOD_CLOSED, 0.0, arg)
    method = METHOD_CLOSED if err == 0.0 else METHOD_SEARCH
    return NormResult(v, method, err, arg)


def _tensor_mixed_weak(rep: TensorRep, p1: float, p2: float) -> Optional[NormResult]:
    a = rep.fx.weak_norm(p1)
    if math.isinf(a.value) and not rep.gy.is_zero():
        return NormResult(INF, METHOD_CLOSED, 0.0, a.arg_lambda)
    single = rep.single_level()
    if single is None:
        return None
    level, mass = single
    v = _mul_ext(_mul_ext(level, _pow_ext(mass, 1.0 / p2)), a.value)
    if math.isinf(v):
        return NormResult(INF, METHOD_CLOSED, 0.0, None)
    err = level * _pow_ext(mass, 1.0 / p2) * a.err_bound
    arg = None if a.arg_lambda is None else level * a.arg_lambda
    method = METHOD_CLOSED if err == 0.0 else METHOD_SEARCH
    return NormResult(v, method, err, arg)


# ---------------------------------------------------------------------------
# public norms


def mixed_norm(rep: FuncRep, p, dims=None) -> NormResult:
    """Inner strong norm in x slice by slice, then a strong norm in y."""
    _check_dims(rep, dims)
    p1, p2 = _pair(p)
    if isinstance(rep, GridRep):
        return NormResult(_grid_mixed_strong(rep, p1, p2), METHOD_GRID, 0.0)
    if isinstance(rep, TensorRep):
        return _tensor_mixed_strong(rep, p1, p2)
    if math.isfinite(p1):
        try:
            prof = rep.inner_strong_profile(p1)
        except InfiniteProfile as exc:
            return NormResult(INF, METHOD_CLOSED, 0.0, None, (str(exc) or "inner integral diverges",))
        if prof is not None:
            return NormResult(prof.strong_norm(p2), METHOD_CLOSED, 0.0)
        if isinstance(rep, LogDampedRep):
            return _tier_b_norm(
                rep,
                lambda cache, i: (rep.inner_strong_value(float(cache.ts[i]), p1), 0.0),
                lambda prof_: (prof_.strong_norm(p2), None),
                "inner strong values",
            )
    return _tier_b_norm(
        rep,
        lambda cache, i: (cache.slice(i).strong_norm(p1), 0.0),
        lambda prof_: (prof_.strong_norm(p2), None),
        "inner strong norms",
    )


def mixed_weak_norm(rep: FuncRep, p, dims=None) -> NormResult:
    """Weak-type norm over joint superlevel sets: the supremum of
    lam * (mixed norm of the indicator of {f > lam})."""
    _check_dims(rep, dims)
    p1, p2 = _pair(p)
    if isinstance(rep, GridRep):
        v, lam = _grid_mixed_weak(rep, p1, p2)
        return NormResult(v, METHOD_GRID, 0.0, lam)
    if isinstance(rep, TensorRep):
        closed = _tensor_mixed_weak(rep, p1, p2)
        if closed is not None:
            return closed
    if math.isinf(p1):
        # indicator slices score 1 in the inner sup slot whenever nonempty,
        # so the joint supremum collapses onto the slicewise essential
        # supremum profile, which the iterated route already computes
        out = iterated_weak_norm(rep, (p1, p2), dims)
        return NormResult(
            out.value,
            out.method,
            out.err_bound,
            out.maximizing_lambda,
            out.notes + ("inner sup slot reduced to the slice supremum profile",),
        )
    cache = _SliceCache(rep)
    if cache.empty:
        return NormResult(0.0, METHOD_CLOSED, 0.0)
    lo, hi = cache.level_range()
    notes: List[str] = []

    probe_ok = True
    for lam in np.geomspace(max(lo, 1e-12), max(hi, lo * 10), 3):
        try:
            if rep.measure_profile(float(lam)) is None:
                probe_ok = False
                break
        except InfiniteProfile:
            return NormResult(
                INF, METHOD_CLOSED, 0.0, float(lam), ("superlevel measure infinite on a slice band",)
            )

    if probe_ok:
        notes.append("level profiles in closed form")

        def phi_fn(lam: float, coarse: bool) -> Tuple[float, bool]:
            try:
                prof = rep.measure_profile(lam)
            except InfiniteProfile:
                return INF, True
            if prof is None:
                return _phi_sampled(cache, lam, p1, p2, stride=2 if coarse else 1), False
            return _phi_from_measure_profile(prof, p1, p2), True

    else:
        notes.append(f"level profiles sampled on {cache.ts.size} slices")

        def phi_fn(lam: float, coarse: bool) -> Tuple[float, bool]:
            return _phi_sampled(cache, lam, p1, p2, stride=2 if coarse else 1), False

    def trend(radius: float) -> float:
        keep = cache.ts <= radius
        best = 0.0
        for lam in np.geomspace(max(lo, 1e-12), max(hi, lo * 10), 48):
            mus = cache.measures(float(lam), radius=radius)[keep]
            if not mus.size:
                continue
            ts = cache.ts[keep]
            if math.isinf(p1):
                hs = (mus > 0).astype(float)
            else:
                hs = np.where(np.isinf(mus), INF, mus ** (1.0 / p1))
            if np.isinf(hs).any():
                return INF
            seg = [_Segment(float(ts[0]), float(ts[-1]), ts)]
            try:
                prof = _fit_profile(seg, [hs], rep.dims.m, [])
            except DivergentSamples:
                return INF
            phi = prof.ess_sup() if math.isinf(p2) else prof.strong_norm(p2)
            best = max(best, float(lam) * phi)
        return best

    return _weak_sup(phi_fn, lo, hi, notes, trend_check=trend)


def iterated_weak_norm(rep: FuncRep, p, dims=None) -> NormResult:
    """Weak norm in x slice by slice, then a weak norm of that profile in y."""
    _check_dims(rep, dims)
    p1, p2 = _pair(p)
    if isinstance(rep, GridRep):
        prof = rep.inner_weak_profile(p1)
        out = prof.weak_norm(p2)
        if math.isinf(out.value):
            return NormResult(INF, METHOD_GRID, 0.0, out.arg_lambda)
        return NormResult(out.value, METHOD_GRID, out.err_bound, out.arg_lambda)
    if isinstance(rep, TensorRep):
        return _tensor_iterated_weak(rep, p1, p2)
    if math.isfinite(p1):
        try:
            prof = rep.inner_weak_profile(p1)
        except InfiniteProfile as exc:
            return NormResult(INF, METHOD_CLOSED, 0.0, None, (str(exc) or "inner weak norm diverges",))
        if prof is not None:
            out = prof.weak_norm(p2)
            if math.isinf(out.value):
                return NormResult(INF, METHOD_CLOSED, 0.0, out.arg_lambda)
            method = METHOD_CLOSED if out.err_bound == 0.0 else METHOD_SEARCH
            return NormResult(out.value, method, out.err_bound, out.arg_lambda)

    def value_at(cache: _SliceCache, i: int) -> Tuple[float, float]:
        out = cache.slice(i).weak_norm(p1)
        return out.value, out.err_bound

    def outer(prof_: Func1D) -> Tuple[float, Optional[float]]:
        out = prof_.weak_norm(p2)
        return out.value, out.arg_lambda

    return _tier_b_norm(rep, value_at, outer, "inner weak norms")


def half_mixed_norm(rep: FuncRep, p, variant: str, dims=None) -> NormResult:
    """Half-and-half norms: weak on one variable, strong on the other."""
    if variant not in _VARIANTS:
        raise ValueError(f"variant must be one of {_VARIANTS}")
    _check_dims(rep, dims)
    p1, p2 = _pair(p)
    inner_weak = variant == VARIANT_OUTER_STRONG_INNER_WEAK
    if isinstance(rep, GridRep):
        if inner_weak:
            prof = rep.inner_weak_profile(p1)
            return NormResult(prof.strong_norm(p2), METHOD_GRID, 0.0)
        prof = rep.inner_strong_profile(p1)
        out = prof.weak_norm(p2)
        if math.isinf(out.value):
            return NormResult(INF, METHOD_GRID, 0.0, out.arg_lambda)
        return NormResult(out.value, METHOD_GRID, out.err_bound, out.arg_lambda)
    if isinstance(rep, TensorRep):
        return _tensor_half(rep, p1, p2, variant)
    if math.isfinite(p1):
        try:
            prof = (
                rep.inner_weak_profile(p1) if inner_weak else rep.inner_strong_profile(p1)
            )
        except InfiniteProfile as exc:
            return NormResult(INF, METHOD_CLOSED, 0.0, None, (str(exc) or "inner norm diverges",))
        if prof is not None:
            if inner_weak:
                return NormResult(prof.strong_norm(p2), METHOD_CLOSED, 0.0)
            out = prof.weak_norm(p2)
            if math.isinf(out.value):
                return NormResult(INF, METHOD_CLOSED, 0.0, out.arg_lambda)
            method = METHOD_CLOSED if out.err_bound == 0.0 else METHOD_SEARCH
            return NormResult(out.value, method, out.err_bound, out.arg_lambda)

    if inner_weak:

        def value_at(cache: _SliceCache, i: int) -> Tuple[float, float]:
            out = cache.slice(i).weak_norm(p1)
            return out.value, out.err_bound

        def outer(prof_: Func1D) -> Tuple[float, Optional[float]]:
            return prof_.strong_norm(p2), None

        return _tier_b_norm(rep, value_at, outer, "inner weak norms")

    def value_at2(cache: _SliceCache, i: int) -> Tuple[float, float]:
        if isinstance(rep, LogDampedRep) and math.isfinite(p1):
            return rep.inner_strong_value(float(cache.ts[i]), p1), 0.0
        return cache.slice(i).strong_norm(p1), 0.0

    def outer2(prof_: Func1D) -> Tuple[float, Optional[float]]:
        out = prof_.weak_norm(p2)
        return out.value, out.arg_lambda

    return _tier_b_norm(rep, value_at2, outer2, "inner strong norms")


def distribution_curve(
    rep: FuncRep, p, lambdas: Sequence[float], sup: Optional[float] = None
) -> SuperlevelProfile:
    """Superlevel indicator norms along a level grid, with exactness tags.

    The recorded supremum defaults to the largest lam * phi on the grid,
    which keeps the stored curve self-consistent without paying for a
    full supremum search.
    """
    lams = sorted(float(v) for v in lambdas)
    if not lams or lams[0] <= 0:
        raise ValueError("levels must be positive")
    cache = None if isinstance(rep, (GridRep,)) else _SliceCache(rep)
    phis: List[float] = []
    exact: List[bool] = []
    for lam in lams:
        v, ex = indicator_mixed_norm(rep, lam, p, cache=cache)
        phis.append(v)
        exact.append(ex)
    if sup is None:
        best = 0.0
        for lam, phi in zip(lams, phis):
            g = lam * phi if math.isfinite(phi) else INF
            best = max(best, g)
        sup = best
    return SuperlevelProfile(tuple(lams), tuple(phis), tuple(exact), sup)


def truncated_distance(left: FuncRep, right: Optional[FuncRep], lam: float, p, dims=None) -> float:
    """Mixed norm of the indicator of {|left - right| > lam}.

    Exact when both sides live on one grid, when one side is zero, or
    when one side is the other plus a constant; otherwise both sides are
    sampled onto a shared grid first.
    """
    if lam < 0:
        raise ValueError("level must be nonnegative")
    p1, p2 = _pair(p)
    if right is None:
        _check_dims(left, dims)
        return indicator_mixed_norm(left, lam, p)[0]
    _check_dims(left, dims)
    _check_dims(right, dims)
    if left is right or left.to_json() == right.to_json():
        return 0.0
    for a, b in ((left, right), (right, left)):
        if isinstance(a, OffsetRep) and a.rep is b:
            if lam >= a.offset:
                return 0.0
            # the gap is a.offset everywhere, so the superlevel set is all of space
            if math.isinf(p1) and math.isinf(p2):
                return 1.0
            return INF
    if (
        isinstance(left, GridRep)
        and isinstance(right, GridRep)
        and len(left.xnodes) == len(right.xnodes)
        and len(left.ynodes) == len(right.ynodes)
        and np.array_equal(left.xnodes, right.xnodes)
        and np.array_equal(left.ynodes, right.ynodes)
    ):
        diff = GridRep(
            left.xnodes, left.ynodes, np.abs(left.values - right.values), left.dims
        )
        return _grid_phi(diff, lam, p1, p2)
    xn = default_nodes()
    yn = default_nodes()
    ga = left if isinstance(left, GridRep) else sample_to_grid(left, xn, yn)
    gb = right if isinstance(right, GridRep) else sample_to_grid(right, xn, yn)
    if not (
        len(ga.xnodes) == len(gb.xnodes)
        and np.array_equal(ga.xnodes, gb.xnodes)
        and np.array_equal(ga.ynodes, gb.ynodes)
    ):
        ga = sample_to_grid(left, xn, yn)
        gb = sample_to_grid(right, xn, yn)
    diff = GridRep(ga.xnodes, ga.ynodes, np.abs(ga.values - gb.values), ga.dims)
    return _grid_phi(diff, lam, p1, p2)


__all__ = [
    "NormResult",
    "SuperlevelProfile",
    "DivergentSamples",
    "strong_norm_1d",
    "weak_norm_1d",
    "mixed_norm",
    "mixed_weak_norm",
    "iterated_weak_norm",
    "half_mixed_norm",
    "indicator_mixed_norm",
    "distribution_curve",
    "truncated_distance",
    "snap_exponent",
    "VARIANT_OUTER_STRONG_INNER_WEAK",
    "VARIANT_OUTER_WEAK_INNER_STRONG",
]
