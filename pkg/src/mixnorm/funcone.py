"""One-variable piecewise function engine.

Everything downstream (slices, profiles, tensor factors) is built from
functions of one real variable that are piecewise of one of two shapes:

* power:   c * |t - t0|^a          on an interval
* decay:   c * exp(-beta * |t|^s)  on an interval

Pieces are kept monotone (split at the center / at zero), which makes
superlevel sets, p-th power integrals, and weak norms exact, including
exact detection of divergence.  A function is either a "line" function on
signed R (dim must be 1, plain Lebesgue length) or a "radial" function of
the radius in R^dim (mass weighted by the unit-ball volume).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .exponents import unit_ball_volume

INF = math.inf

__all__ = [
    "Piece",
    "Func1D",
    "IncompatibleProduct",
    "WeakNormOutcome",
]


class IncompatibleProduct(ValueError):
    """Pointwise product does not stay inside the piecewise closed forms."""


def _safe_pow(base: float, expo: float) -> float:
    if base == 0.0:
        if expo > 0:
            return 0.0
        if expo == 0:
            return 1.0
        return INF
    if math.isinf(base):
        if expo > 0:
            return INF
        if expo == 0:
            return 1.0
        return 0.0
    try:
        return base**expo
    except OverflowError:
        return INF


@dataclass(frozen=True)
class Piece:
    lo: float
    hi: float
    coef: float
    expo: float = 0.0
    center: float = 0.0
    kind: str = "power"  # "power" | "decay"
    beta: float = 0.0
    beta_pow: float = 1.0

    def value(self, t: float) -> float:
        if self.kind == "power":
            if self.expo == 0.0:
                return self.coef
            return self.coef * _safe_pow(abs(t - self.center), self.expo)
        return self.coef * math.exp(-self.beta * _safe_pow(abs(t), self.beta_pow))

    def u_range(self) -> Tuple[float, float]:
        """Range of u = |t - center| (power) or |t| (decay) over the piece.

        Pieces are monotone in u by construction, so this is just the sorted
        pair of endpoint distances.
        """
        ref = self.center if self.kind == "power" else 0.0
        a = abs(self.lo - ref) if not math.isinf(self.lo) else INF
        b = abs(self.hi - ref) if not math.isinf(self.hi) else INF
        return (min(a, b), max(a, b))

    def endpoint_values(self) -> Tuple[float, float]:
        u1, u2 = self.u_range()
        if self.kind == "power":
            if self.expo == 0.0:
                return (self.coef, self.coef)
            v1 = self.coef * _safe_pow(u1, self.expo)
            v2 = self.coef * _safe_pow(u2, self.expo)
        else:
            if self.beta == 0.0:
                return (self.coef, self.coef)
            v1 = self.coef * _exp_neg(self.beta * _safe_pow(u1, self.beta_pow))
            v2 = self.coef * _exp_neg(self.beta * _safe_pow(u2, self.beta_pow))
        return (v1, v2)

    def sup_value(self) -> float:
        return max(self.endpoint_values())

    def is_constant(self) -> bool:
        return (self.kind == "power" and self.expo == 0.0) or (
            self.kind == "decay" and self.beta == 0.0
        )


def _exp_neg(x: float) -> float:
    # exp(-x) with saturation instead of overflow errors
    if x == INF:
        return 0.0
    if x == -INF:
        return INF
    try:
        return math.exp(-x)
    except OverflowError:
        return INF


@dataclass(frozen=True)
class WeakNormOutcome:
    value: float
    err_bound: float
    arg_lambda: Optional[float]
    attained_at_level: bool


def _interval_clip(lo: float, hi: float, a: float, b: float) -> Optional[Tuple[float, float]]:
    lo2, hi2 = max(lo, a), min(hi, b)
    if lo2 >= hi2:
        return None
    return (lo2, hi2)


class Func1D:
    """Nonnegative piecewise function on R (line) or on radii in R^dim."""

    __slots__ = ("dim", "radial", "pieces")

    def __init__(self, pieces: Iterable[Piece], dim: int = 1, radial: bool = False):
        if dim < 1:
            raise ValueError("dim must be >= 1")
        if dim > 1 and not radial:
            raise ValueError("line functions require dim == 1")
        normalized: List[Piece] = []
        for pc in pieces:
            normalized.extend(self._normalize_piece(pc, radial))
        normalized.sort(key=lambda p: (p.lo, p.hi))
        for prev, nxt in zip(normalized, normalized[1:]):
            if nxt.lo < prev.hi - 1e-300:
                raise ValueError(
                    f"pieces overlap: [{prev.lo},{prev.hi}) and [{nxt.lo},{nxt.hi})"
                )
        self.dim = dim
        self.radial = radial
        self.pieces = tuple(normalized)

    @staticmethod
    def _normalize_piece(pc: Piece, radial: bool) -> List[Piece]:
        if pc.coef < 0:
            raise ValueError("pieces must be nonnegative")
        if radial and pc.lo < 0:
            raise ValueError("radial pieces live on [0, inf)")
        if pc.coef == 0.0 or pc.lo >= pc.hi:
            return []
        out = [pc]
        # split at the center so |t - t0| is monotone on every piece
        if pc.kind == "power" and pc.expo != 0.0 and pc.lo < pc.center < pc.hi:
            out = [replace(pc, hi=pc.center), replace(pc, lo=pc.center)]
        # split decay pieces at 0 on the signed line
        if pc.kind == "decay" and not radial and pc.lo < 0.0 < pc.hi:
            out2 = []
            for q in out:
                if q.lo < 0.0 < q.hi:
                    out2.extend([replace(q, hi=0.0), replace(q, lo=0.0)])
                else:
                    out2.append(q)
            out = out2
        return out

    # ---------------- constructors ----------------

    @classmethod
    def zero(cls, dim: int = 1, radial: bool = False) -> "Func1D":
        return cls([], dim=dim, radial=radial)

    @classmethod
    def radial_power(
        cls,
        coef: float,
        expo: float,
        r_lo: float = 0.0,
        r_hi: float = INF,
        dim: int = 1,
    ) -> "Func1D":
        """c * r^expo for r_lo <= |t| < r_hi, as a radial function of R^dim."""
        return cls([Piece(r_lo, r_hi, coef, expo)], dim=dim, radial=True)

    @classmethod
    def indicator(cls, lo: float, hi: float, coef: float = 1.0) -> "Func1D":
        """Signed-interval indicator on the line."""
        return cls([Piece(lo, hi, coef)], dim=1, radial=False)

    @classmethod
    def shifted_power(
        cls, coef: float, expo: float, center: float, lo: float, hi: float
    ) -> "Func1D":
        return cls([Piece(lo, hi, coef, expo, center)], dim=1, radial=False)

    @classmethod
    def from_steps(
        cls, nodes: Sequence[float], values: Sequence[float], dim: int = 1, radial: bool = True
    ) -> "Func1D":
        """Step function: values[i] on [nodes[i], nodes[i+1])."""
        if len(nodes) != len(values) + 1:
            raise ValueError("need len(nodes) == len(values) + 1")
        pieces = [
            Piece(float(a), float(b), float(v))
            for a, b, v in zip(nodes, nodes[1:], values)
            if v != 0.0
        ]
        return cls(pieces, dim=dim, radial=radial)

    @classmethod
    def decay_layer(
        cls,
        coef: float,
        beta: float,
        beta_pow: float = 1.0,
        lo: float = 0.0,
        hi: float = INF,
        dim: int = 1,
        radial: bool = True,
    ) -> "Func1D":
        return cls(
            [Piece(lo, hi, coef, kind="decay", beta=beta, beta_pow=beta_pow)],
            dim=dim,
            radial=radial,
        )

    # ---------------- basic queries ----------------

    def is_zero(self) -> bool:
        return not self.pieces

    def is_step(self) -> bool:
        return all(p.is_constant() for p in self.pieces)

    def _mass(self, a: float, b: float) -> float:
        """Measure of {a <= coordinate < b} (coordinate = radius if radial)."""
        if b <= a:
            return 0.0
        if not self.radial:
            return b - a
        vol = unit_ball_volume(self.dim)
        return vol * self.dim * self._power_primitive(self.dim - 1.0, a, b)

    def eval(self, t: float) -> float:
        if self.radial:
            t = abs(t)
        for pc in self.pieces:
            if pc.lo <= t < pc.hi:
                return pc.value(t)
        return 0.0

    def eval_many(self, ts: np.ndarray) -> np.ndarray:
        ts = np.asarray(ts, dtype=float)
        if self.radial:
            ts = np.abs(ts)
        out = np.zeros_like(ts)
        for pc in self.pieces:
            mask = (ts >= pc.lo) & (ts < pc.hi)
            if not mask.any():
                continue
            sub = ts[mask]
            if pc.kind == "power":
                if pc.expo == 0.0:
                    vals = np.full_like(sub, pc.coef)
                else:
                    with np.errstate(divide="ignore"):
                        vals = pc.coef * np.abs(sub - pc.center) ** pc.expo
            else:
                vals = pc.coef * np.exp(
                    -pc.beta * np.abs(sub) ** pc.beta_pow
                )
            out[mask] = vals
        return out

    def support_bounds(self) -> Tuple[float, float]:
        if not self.pieces:
            return (0.0, 0.0)
        return (self.pieces[0].lo, self.pieces[-1].hi)

    def support_mass(self) -> float:
        return sum(self._mass(p.lo, p.hi) for p in self.pieces)

    def ess_sup(self) -> float:
        if not self.pieces:
            return 0.0
        return max(p.sup_value() for p in self.pieces)

    def candidate_levels(self) -> List[float]:
        vals = set()
        for pc in self.pieces:
            for v in pc.endpoint_values():
                if 0.0 < v < INF:
                    vals.add(v)
        return sorted(vals)

    # ---------------- superlevel measure ----------------

    def _piece_above(self, pc: Piece, lam: float, strict: bool) -> float:
        """Measure of {t in piece : value(t) > lam} (>= when strict=False)."""
        u1, u2 = pc.u_range()
        if pc.kind == "power":
            if pc.expo == 0.0:
                hit = pc.coef > lam if strict else pc.coef >= lam
                return self._mass(pc.lo, pc.hi) if hit else 0.0
            ratio = lam / pc.coef
            s = _safe_pow(ratio, 1.0 / pc.expo)
            if pc.expo < 0:
                ua, ub = u1, min(u2, s)  # u < s
            else:
                ua, ub = max(u1, s), u2  # u > s
        else:
            if pc.beta == 0.0:
                hit = pc.coef > lam if strict else pc.coef >= lam
                return self._mass(pc.lo, pc.hi) if hit else 0.0
            if lam <= 0 or pc.coef <= 0:
                ua, ub = (u1, u2) if pc.beta > 0 else (u1, u2)
            else:
                g = math.log(pc.coef / lam) / pc.beta if lam < INF else -INF
                # beta>0: u^bp < g ; beta<0: u^bp > g (g carries the sign flip)
                if pc.beta > 0:
                    if g <= 0:
                        return 0.0
                    s = _safe_pow(g, 1.0 / pc.beta_pow)
                    ua, ub = u1, min(u2, s)
                else:
                    if g <= 0:
                        ua, ub = u1, u2
                    else:
                        s = _safe_pow(g, 1.0 / pc.beta_pow)
                        ua, ub = max(u1, s), u2
        if ub <= ua:
            return 0.0
        # map the u-subinterval back to coordinates
        ref = pc.center if pc.kind == "power" else 0.0
        if not self.radial:
            return ub - ua  # one-sided monotone piece: length is preserved
        # radial: u == |r - ref|; the piece sits on one side of ref
        if pc.hi <= ref:
            ra, rb = ref - ub, ref - ua
        else:
            ra, rb = ref + ua, ref + ub
        ra, rb = max(ra, pc.lo), min(rb, pc.hi)
        return self._mass(ra, rb)

    def measure_above(self, lam: float, strict: bool = True) -> float:
        """Measure of the superlevel set {f > lam} (or >= lam)."""
        if lam < 0 or (lam == 0 and strict is False):
            raise ValueError("level must be positive")
        if lam == 0.0:
            return self.support_mass()
        return sum(self._piece_above(pc, lam, strict) for pc in self.pieces)

    # ---------------- integrals and strong norms ----------------

    @staticmethod
    def _power_primitive(e: float, u1: float, u2: float, width: Optional[float] = None) -> float:
        """integral of u^e over [u1, u2], exact including divergences.

        width, when given, is the exact interval length; it keeps the
        antiderivative difference alive when u2 rounds onto u1.
        """
        if width is None:
            width = u2 - u1
        if not width > 0.0:
            return 0.0
        if math.isinf(u2) or math.isinf(width):
            if e >= -1.0:
                return INF
            return -_safe_pow(u1, e + 1.0) / (e + 1.0)
        if u1 == 0.0 and e <= -1.0:
            return INF
        E = e + 1.0
        if u1 == 0.0:
            return _safe_pow(width, E) / E
        if E == 0.0:
            return math.log1p(width / u1)
        lead = _safe_pow(u1, E) / E
        if lead == 0.0 or math.isinf(lead):
            # leading factor out of float range: nothing left to cancel
            return (_safe_pow(u1 + width, E) - _safe_pow(u1, E)) / E
        try:
            return lead * math.expm1(E * math.log1p(width / u1))
        except OverflowError:
            return INF

    @staticmethod
    def _exp_primitive(rate: float, powr: float, w1: float, w2: float) -> float:
        """integral of exp(-rate * w^powr) dw over [w1, w2]."""
        if w2 <= w1:
            return 0.0
        if rate == 0.0:
            return w2 - w1
        if powr == 1.0:
            if rate < 0 and math.isinf(w2):
                return INF
            return (_exp_neg(rate * w1) - _exp_neg(rate * w2)) / rate
        if rate > 0:
            from scipy.special import gammainc

            # (1/powr) * rate^(-1/powr) * Gamma(1/powr) * P(1/powr, rate*w^powr)
            k = 1.0 / powr
            scale = math.gamma(k) * k * rate ** (-k)
            hi_term = 1.0 if math.isinf(w2) else gammainc(k, rate * w2**powr)
            lo_term = gammainc(k, rate * w1**powr) if w1 > 0 else 0.0
            return scale * (hi_term - lo_term)
        # growing integrand on a finite window: numeric is fine here
        if math.isinf(w2):
            return INF
        from scipy.integrate import quad

        val, _ = quad(lambda w: math.exp(-rate * w**powr), w1, w2, limit=200)
        return val

    def _piece_integral(self, pc: Piece, p: float) -> float:
        """integral over the piece of value^p against the ambient measure."""
        u1, u2 = pc.u_range()
        width = pc.hi - pc.lo
        if pc.kind == "power":
            cp = _safe_pow(pc.coef, p)
            e = pc.expo * p
            if not self.radial:
                return cp * self._power_primitive(e, u1, u2, width)
            if pc.center == 0.0:
                vol = unit_ball_volume(self.dim)
                return cp * vol * self.dim * self._power_primitive(
                    e + self.dim - 1.0, u1, u2, width
                )
            if self.dim == 1:
                # off-center radial piece, only needed in one dimension
                return 2.0 * cp * self._power_primitive(e, u1, u2, width)
            raise ValueError("off-center radial pieces need dim == 1")
        # decay piece
        cp = _safe_pow(pc.coef, p)
        rate = pc.beta * p
        if not self.radial:
            return cp * self._exp_primitive(rate, pc.beta_pow, u1, u2)
        vol = unit_ball_volume(self.dim)
        w1, w2 = _safe_pow(u1, self.dim), _safe_pow(u2, self.dim)
        return cp * vol * self._exp_primitive(rate, pc.beta_pow / self.dim, w1, w2)

    def integral_power(self, p: float) -> float:
        """integral of f^p; exact, possibly inf."""
        total = 0.0
        for pc in self.pieces:
            term = self._piece_integral(pc, p)
            if math.isinf(term):
                return INF
            total += term
        return total

    def strong_norm(self, p: float) -> float:
        if math.isinf(p):
            return self.ess_sup()
        if p <= 0:
            raise ValueError("exponent must be positive")
        val = self.integral_power(p)
        if math.isinf(val):
            return INF
        return _safe_pow(val, 1.0 / p)

    # ---------------- weak norm ----------------

    def _tail_behavior(self, p: float):
        """Divergence analysis of lambda * mu(lambda)^(1/p) at 0+ and inf.

        Returns (diverges, limit_candidates): power tails with mass blowing up
        like lambda^(E/1) contribute lambda^(1+E/p); E == -p is the critical
        plateau whose exact coefficient is a sup candidate.
        """
        candidates: List[float] = []
        # lambda -> inf: pieces whose value is unbounded (u_lo == 0, expo < 0)
        coef_inf = 0.0
        best_inf: Optional[float] = None
        # lambda -> 0: unbounded-support pieces with decaying power value
        coef_zero = 0.0
        best_zero: Optional[float] = None
        for pc in self.pieces:
            u1, u2 = pc.u_range()
            if pc.kind == "power" and pc.expo != 0.0:
                d = self.dim if (self.radial and pc.center == 0.0) else 1
                mult = (
                    unit_ball_volume(self.dim)
                    if (self.radial and pc.center == 0.0)
                    else (2.0 if (self.radial and self.dim == 1) else 1.0)
                )
                E = d / pc.expo
                mass_coef = mult * _safe_pow(pc.coef, -E)
                if pc.expo < 0 and u1 == 0.0:
                    if best_inf is None or E > best_inf:
                        best_inf, coef_inf = E, mass_coef
                    elif E == best_inf:
                        coef_inf += mass_coef
                if pc.expo < 0 and math.isinf(u2):
                    if best_zero is None or E < best_zero:
                        best_zero, coef_zero = E, mass_coef
                    elif E == best_zero:
                        coef_zero += mass_coef
            elif pc.kind == "decay" and pc.beta != 0.0:
                if pc.beta < 0 and math.isinf(u2):
                    return True, []  # value grows on an infinite tail
            elif pc.is_constant():
                if math.isinf(self._mass(pc.lo, pc.hi)):
                    return True, []
        if best_inf is not None:
            if best_inf > -p:
                return True, []
            if best_inf == -p:
                candidates.append(_safe_pow(coef_inf, 1.0 / p))
        if best_zero is not None:
            if best_zero < -p:
                return True, []
            if best_zero == -p:
                candidates.append(_safe_pow(coef_zero, 1.0 / p))
        return False, candidates

    def _g(self, lam: float, p: float) -> float:
        mu = self.measure_above(lam, strict=True)
        if mu == 0.0:
            return 0.0
        if math.isinf(mu):
            return INF
        return lam * _safe_pow(mu, 1.0 / p)

    def weak_norm(self, p: float, refine_tol: float = 1e-12) -> WeakNormOutcome:
        """sup over lambda of lambda * measure{f > lambda}^(1/p).

        Exact at level candidates (left limits, attained on step functions);
        interior maxima between candidates are located by coarse scan plus
        golden-section refinement.
        """
        if math.isinf(p):
            return WeakNormOutcome(self.ess_sup(), 0.0, None, True)
        if p <= 0:
            raise ValueError("exponent must be positive")
        if not self.pieces:
            return WeakNormOutcome(0.0, 0.0, None, True)

        diverges, limit_candidates = self._tail_behavior(p)
        if diverges:
            return WeakNormOutcome(INF, 0.0, None, False)

        best = 0.0
        best_arg: Optional[float] = None
        attained = True
        for v in self.candidate_levels():
            mu = self.measure_above(v, strict=False)
            if math.isinf(mu):
                return WeakNormOutcome(INF, 0.0, v, False)
            g = v * _safe_pow(mu, 1.0 / p) if mu > 0 else 0.0
            if g > best:
                best, best_arg = g, v
        for c in limit_candidates:
            if c > best:
                best, best_arg, attained = c, None, False

        # refine between consecutive candidate levels (and padded edges)
        levels = self.candidate_levels()
        if levels:
            lo_pad = levels[0] * 1e-9
            hi_pad = levels[-1] * 1e9
            brackets = []
            pts = [lo_pad] + levels + [hi_pad]
            for a, b in zip(pts, pts[1:]):
                if b > a * (1 + 1e-13):
                    brackets.append((a, b))
            for a, b in brackets:
                la, lb = math.log(a), math.log(b)
                decades = (lb - la) / math.log(10.0)
                npts = int(min(120, max(26, math.ceil(10.0 * decades) + 2)))
                grid = np.linspace(la, lb, npts)[1:-1]
                vals = [self._g(math.exp(x), p) for x in grid]
                if not vals:
                    continue
                imax = int(np.argmax(vals))
                if vals[imax] <= 0.0:
                    continue
                at_edge = imax in (0, len(grid) - 1)
                if vals[imax] <= best * (1 + 1e-15) and not at_edge:
                    continue
                # golden-section around the best scan point; a peak at the
                # edge of the scan may hide a maximum between the last grid
                # point and the bracket endpoint, so widen to the endpoint
                xa = la if imax == 0 else grid[imax - 1]
                xb = lb if imax == len(grid) - 1 else grid[imax + 1]
                phi = (math.sqrt(5.0) - 1.0) / 2.0
                x1 = xb - phi * (xb - xa)
                x2 = xa + phi * (xb - xa)
                f1 = self._g(math.exp(x1), p)
                f2 = self._g(math.exp(x2), p)
                while (xb - xa) > refine_tol:
                    if f1 < f2:
                        xa, x1, f1 = x1, x2, f2
                        x2 = xa + phi * (xb - xa)
                        f2 = self._g(math.exp(x2), p)
                    else:
                        xb, x2, f2 = x2, x1, f1
                        x1 = xb - phi * (xb - xa)
                        f1 = self._g(math.exp(x1), p)
                cand = max(f1, f2)
                if cand > best * (1 + 1e-14):
                    best = cand
                    best_arg = math.exp((xa + xb) / 2.0)
                    attained = False

        err = 0.0 if attained else abs(best) * refine_tol * 4.0
        return WeakNormOutcome(best, err, best_arg, attained)

    # ---------------- algebra ----------------

    def scaled(self, c: float) -> "Func1D":
        if c < 0:
            raise ValueError("scale must be nonnegative")
        if c == 0:
            return Func1D.zero(self.dim, self.radial)
        return Func1D(
            [replace(pc, coef=pc.coef * c) for pc in self.pieces], self.dim, self.radial
        )

    def powed(self, s: float) -> "Func1D":
        """Pointwise f^s (s > 0)."""
        if s <= 0:
            raise ValueError("power must be positive")
        out = []
        for pc in self.pieces:
            if pc.kind == "power":
                out.append(replace(pc, coef=_safe_pow(pc.coef, s), expo=pc.expo * s))
            else:
                out.append(replace(pc, coef=_safe_pow(pc.coef, s), beta=pc.beta * s))
        return Func1D(out, self.dim, self.radial)

    def as_line(self) -> "Func1D":
        """Mirror a radial dim-1 function onto the signed line."""
        if not self.radial:
            return self
        if self.dim != 1:
            raise ValueError("only dim-1 radial functions can be mirrored")
        out = []
        for pc in self.pieces:
            out.append(pc)
            out.append(replace(pc, lo=-pc.hi, hi=-pc.lo, center=-pc.center))
        return Func1D(out, 1, radial=False)

    def multiply(self, other: "Func1D") -> "Func1D":
        """Pointwise product; raises IncompatibleProduct outside closed forms."""
        a, b = self, other
        if a.radial != b.radial:
            a, b = a.as_line(), b.as_line()
        if a.dim != b.dim:
            raise IncompatibleProduct("dimension mismatch")
        cuts = sorted(
            {p.lo for p in a.pieces}
            | {p.hi for p in a.pieces}
            | {p.lo for p in b.pieces}
            | {p.hi for p in b.pieces}
        )
        out: List[Piece] = []
        for lo, hi in zip(cuts, cuts[1:]):
            pa = next((p for p in a.pieces if p.lo <= lo and hi <= p.hi), None)
            pb = next((p for p in b.pieces if p.lo <= lo and hi <= p.hi), None)
            if pa is None or pb is None:
                continue
            merged = _merge_pieces(pa, pb, lo, hi)
            if merged is not None:
                out.append(merged)
        return Func1D(out, a.dim, a.radial)

    def truncate_outside(self, radius: float) -> "Func1D":
        """Keep |t| <= radius."""
        lo, hi = (0.0, radius) if self.radial else (-radius, radius)
        out = []
        for pc in self.pieces:
            clipped = _interval_clip(pc.lo, pc.hi, lo, hi)
            if clipped:
                out.append(replace(pc, lo=clipped[0], hi=clipped[1]))
        return Func1D(out, self.dim, self.radial)

    def truncate_inside(self, radius: float) -> "Func1D":
        """Keep |t| >= radius."""
        out = []
        for pc in self.pieces:
            if self.radial:
                clipped = _interval_clip(pc.lo, pc.hi, radius, INF)
                if clipped:
                    out.append(replace(pc, lo=clipped[0], hi=clipped[1]))
            else:
                for a, b in ((-INF, -radius), (radius, INF)):
                    clipped = _interval_clip(pc.lo, pc.hi, a, b)
                    if clipped:
                        out.append(replace(pc, lo=clipped[0], hi=clipped[1]))
        return Func1D(out, self.dim, self.radial)

    def dilate(self, R: float) -> "Func1D":
        """f(t/R) as a new function (R > 0)."""
        if R <= 0:
            raise ValueError("dilation factor must be positive")
        out = []
        for pc in self.pieces:
            if pc.kind == "power":
                out.append(
                    Piece(
                        pc.lo * R,
                        pc.hi * R,
                        pc.coef * _safe_pow(R, -pc.expo),
                        pc.expo,
                        pc.center * R,
                    )
                )
            else:
                out.append(
                    Piece(
                        pc.lo * R,
                        pc.hi * R,
                        pc.coef,
                        kind="decay",
                        beta=pc.beta / _safe_pow(R, pc.beta_pow),
                        beta_pow=pc.beta_pow,
                    )
                )
        return Func1D(out, self.dim, self.radial)

    def add_disjoint(self, other: "Func1D") -> "Func1D":
        """Sum of two functions with non-overlapping supports."""
        if self.radial != other.radial or self.dim != other.dim:
            raise ValueError("mismatched function domains")
        return Func1D(list(self.pieces) + list(other.pieces), self.dim, self.radial)

    # ---------------- serialization ----------------

    def to_json(self) -> dict:
        pieces = []
        for pc in self.pieces:
            d = {"lo": pc.lo, "hi": pc.hi, "coef": pc.coef}
            if pc.kind == "power":
                if pc.expo != 0.0:
                    d["expo"] = pc.expo
                if pc.center != 0.0:
                    d["center"] = pc.center
            else:
                d["kind"] = "decay"
                d["beta"] = pc.beta
                d["beta_pow"] = pc.beta_pow
            pieces.append(d)
        return {"dim": self.dim, "radial": self.radial, "pieces": pieces}

    @classmethod
    def from_json(cls, data: dict) -> "Func1D":
        pieces = [
            Piece(
                float(d["lo"]),
                float(d["hi"]),
                float(d["coef"]),
                float(d.get("expo", 0.0)),
                float(d.get("center", 0.0)),
                d.get("kind", "power"),
                float(d.get("beta", 0.0)),
                float(d.get("beta_pow", 1.0)),
            )
            for d in data.get("pieces", [])
        ]
        return cls(pieces, int(data.get("dim", 1)), bool(data.get("radial", False)))

    def __repr__(self):
        tag = "radial" if self.radial else "line"
        return f"Func1D({tag}, dim={self.dim}, {len(self.pieces)} pieces)"


def _merge_pieces(pa: Piece, pb: Piece, lo: float, hi: float) -> Optional[Piece]:
    """Product of two overlapping pieces on [lo, hi), or raise."""
    coef = pa.coef * pb.coef
    if coef == 0.0:
        return None
    if pa.kind == "power" and pb.kind == "power":
        if pa.expo == 0.0 and pb.expo == 0.0:
            return Piece(lo, hi, coef)
        if pa.expo == 0.0:
            return Piece(lo, hi, coef, pb.expo, pb.center)
        if pb.expo == 0.0:
            return Piece(lo, hi, coef, pa.expo, pa.center)
        if pa.center == pb.center:
            expo = pa.expo + pb.expo
            if expo == 0.0:
                return Piece(lo, hi, coef)
            return Piece(lo, hi, coef, expo, pa.center)
        raise IncompatibleProduct(
            f"product of powers centered at {pa.center} and {pb.center}"
        )
    if pa.kind == "decay" and pb.kind == "decay":
        if pa.beta_pow == pb.beta_pow:
            return Piece(
                lo, hi, coef, kind="decay", beta=pa.beta + pb.beta, beta_pow=pa.beta_pow
            )
        raise IncompatibleProduct("decay pieces with different shape exponents")
    # mixed: only a constant power piece can multiply a decay piece
    pw, dc = (pa, pb) if pa.kind == "power" else (pb, pa)
    if pw.expo == 0.0:
        return Piece(lo, hi, coef, kind="decay", beta=dc.beta, beta_pow=dc.beta_pow)
    raise IncompatibleProduct("power-times-decay product is not piecewise closed")
