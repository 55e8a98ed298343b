"""Exponent arithmetic for mixed-norm computations.

Exponents live in (0, inf]. Reciprocals are the working representation:
they are stored as exact rationals (``fractions.Fraction``) so that the
admissibility condition p1*q2 == p2*q1 can be decided exactly for rational
input, with a relative float tolerance absorbing noise from exponents that
arrived through lossy float arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple, Union

__all__ = [
    "Exponent",
    "ExponentPair",
    "DimPair",
    "NotAdmissible",
    "NegativeGamma",
    "unit_ball_volume",
    "holder_combine",
    "mixed_weak_holder_admissible",
    "mixed_weak_holder_constant",
    "iterated_holder_constant",
    "interpolate_exponent",
    "half_weak_interpolation_constant",
    "homogeneity_gamma",
    "quasi_triangle_coefficients",
]

# Relative tolerance for admissibility of float-derived exponents.
FLOAT_ADMISSIBILITY_RTOL = 1e-12

ExponentLike = Union["Exponent", int, float, str, Fraction]


class NotAdmissible(ValueError):
    """Raised when an exponent configuration has no product inequality."""


class NegativeGamma(ValueError):
    """Raised when a homogeneity relation forces a negative kernel order."""


def _to_fraction(value) -> Fraction:
    """Coerce a finite numeric to an exact Fraction.

    Floats go through repr() so the stored rational matches the decimal
    literal the caller wrote (1.5 -> 3/2, 0.1 -> 1/10), not the binary
    expansion of the double.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError("non-finite value has no Fraction form")
        return Fraction(repr(value))
    raise TypeError(f"cannot interpret {value!r} as an exponent value")


class Exponent:
    """A Lebesgue exponent in (0, inf].

    Stored by its reciprocal; ``recip == 0`` encodes infinity exactly.
    Instances are immutable and hashable.
    """

    __slots__ = ("recip",)

    def __init__(self, value: ExponentLike):
        if isinstance(value, Exponent):
            object.__setattr__(self, "recip", value.recip)
            return
        if isinstance(value, str) and value.strip().lower() in ("inf", "infinity"):
            object.__setattr__(self, "recip", Fraction(0))
            return
        if isinstance(value, float) and math.isinf(value):
            object.__setattr__(self, "recip", Fraction(0))
            return
        frac = _to_fraction(value)
        if frac <= 0:
            raise ValueError(f"exponent must be positive, got {frac}")
        object.__setattr__(self, "recip", 1 / frac)

    def __setattr__(self, name, value):
        raise AttributeError("Exponent is immutable")

    @classmethod
    def inf(cls) -> "Exponent":
        return cls("inf")

    @classmethod
    def from_recip(cls, recip) -> "Exponent":
        """Build from a reciprocal (0 means infinity)."""
        if isinstance(recip, float) and not math.isfinite(recip):
            raise ValueError("reciprocal must be finite")
        frac = recip if isinstance(recip, Fraction) else _to_fraction(recip)
        if frac < 0:
            raise ValueError(f"reciprocal must be >= 0, got {frac}")
        obj = cls.__new__(cls)
        object.__setattr__(obj, "recip", frac)
        return obj

    @property
    def is_inf(self) -> bool:
        return self.recip == 0

    @property
    def value(self) -> float:
        """The exponent as a float; math.inf when infinite."""
        if self.is_inf:
            return math.inf
        return float(1 / self.recip)

    def as_fraction(self) -> Fraction:
        if self.is_inf:
            raise ValueError("infinite exponent has no Fraction value")
        return 1 / self.recip

    def reciprocal(self) -> Fraction:
        """1/value, with 1/inf == 0 exactly."""
        return self.recip

    def __eq__(self, other) -> bool:
        if not isinstance(other, Exponent):
            try:
                other = Exponent(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.recip == other.recip

    def __hash__(self):
        return hash(("Exponent", self.recip))

    # Order by value: smaller reciprocal means larger exponent.
    def __lt__(self, other: "Exponent") -> bool:
        return self.recip > Exponent(other).recip

    def __le__(self, other: "Exponent") -> bool:
        return self.recip >= Exponent(other).recip

    def __gt__(self, other: "Exponent") -> bool:
        return self.recip < Exponent(other).recip

    def __ge__(self, other: "Exponent") -> bool:
        return self.recip <= Exponent(other).recip

    def __repr__(self):
        if self.is_inf:
            return "Exponent(inf)"
        frac = 1 / self.recip
        if frac.denominator == 1:
            return f"Exponent({frac.numerator})"
        return f"Exponent({frac})"

    def to_json(self):
        """JSON form: a number, or the string "inf"."""
        if self.is_inf:
            return "inf"
        frac = 1 / self.recip
        if frac.denominator == 1:
            return frac.numerator
        return float(frac)

    @classmethod
    def from_json(cls, data) -> "Exponent":
        return cls(data)


@dataclass(frozen=True)
class ExponentPair:
    """An exponent vector (inner, outer): inner norm in x, outer norm in y."""

    inner: Exponent
    outer: Exponent

    def __init__(self, inner: ExponentLike, outer: ExponentLike):
        object.__setattr__(self, "inner", Exponent(inner))
        object.__setattr__(self, "outer", Exponent(outer))

    @property
    def is_all_inf(self) -> bool:
        return self.inner.is_inf and self.outer.is_inf

    def swap(self) -> "ExponentPair":
        return ExponentPair(self.outer, self.inner)

    def recip_sum(self) -> Fraction:
        return self.inner.recip + self.outer.recip

    def __iter__(self):
        return iter((self.inner, self.outer))

    def __repr__(self):
        def show(e: Exponent):
            return "inf" if e.is_inf else str(e.as_fraction())

        return f"ExponentPair({show(self.inner)}, {show(self.outer)})"

    def to_json(self):
        return [self.inner.to_json(), self.outer.to_json()]

    @classmethod
    def from_json(cls, data) -> "ExponentPair":
        if not isinstance(data, (list, tuple)) or len(data) != 2:
            raise ValueError(f"exponent pair must be a 2-list, got {data!r}")
        return cls(data[0], data[1])


@dataclass(frozen=True)
class DimPair:
    """Dimensions (n, m) of the two underlying Euclidean factors."""

    n: int = 1
    m: int = 1

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"dimensions must be >= 1, got ({self.n}, {self.m})")

    def to_json(self):
        return [self.n, self.m]


def unit_ball_volume(n: int) -> float:
    """Volume of the unit ball in R^n; exact 2.0 for n=1."""
    if n < 0:
        raise ValueError("dimension must be >= 0")
    # Recurrence v_n = v_{n-2} * 2*pi/n keeps small dimensions exact.
    v_even, v_odd = 1.0, 2.0
    if n == 0:
        return v_even
    if n == 1:
        return v_odd
    v = v_even if n % 2 == 0 else v_odd
    k = 2 if n % 2 == 0 else 3
    while k <= n:
        v *= 2.0 * math.pi / k
        k += 2
    return v


def holder_combine(p: ExponentPair, q: ExponentPair) -> ExponentPair:
    """Componentwise 1/r_i = 1/p_i + 1/q_i."""
    return ExponentPair(
        Exponent.from_recip(p.inner.recip + q.inner.recip),
        Exponent.from_recip(p.outer.recip + q.outer.recip),
    )


def _products_equal(p: ExponentPair, q: ExponentPair) -> bool:
    # p1*q2 == p2*q1, decided on reciprocals: exact when both sides rational,
    # with a relative tolerance for float-derived noise.
    lhs = p.inner.recip * q.outer.recip
    rhs = p.outer.recip * q.inner.recip
    if lhs == rhs:
        return True
    scale = max(abs(float(lhs)), abs(float(rhs)))
    if scale == 0.0:
        return False
    return abs(float(lhs - rhs)) <= FLOAT_ADMISSIBILITY_RTOL * scale


def _case_of(p: ExponentPair, q: ExponentPair) -> str:
    """Classify the admissible configuration, or "none"."""
    if p.is_all_inf or q.is_all_inf:
        return "wildcard"
    if not p.inner.is_inf and not p.outer.is_inf and not q.inner.is_inf and not q.outer.is_inf:
        return "finite" if _products_equal(p, q) else "none"
    if p.outer.is_inf and q.outer.is_inf and not p.inner.is_inf and not q.inner.is_inf:
        return "outer_inf"
    if p.inner.is_inf and q.inner.is_inf and not p.outer.is_inf and not q.outer.is_inf:
        return "inner_inf"
    return "none"


def mixed_weak_holder_admissible(p: ExponentPair, q: ExponentPair) -> bool:
    """Whether the mixed-weak product inequality holds for (p, q).

    True exactly in four configurations: all components finite with
    p1*q2 == p2*q1; both outer components infinite; both inner components
    infinite; or either vector entirely infinite (wildcard).
    """
    return _case_of(p, q) != "none"


def mixed_weak_holder_constant(p: ExponentPair, q: ExponentPair) -> float:
    """Sharp-form constant for the mixed-weak product inequality.

    Raises NotAdmissible for configurations with no inequality.
    """
    case = _case_of(p, q)
    if case == "none":
        raise NotAdmissible(f"no mixed-weak product inequality for {p}, {q}")
    if case == "wildcard":
        return 1.0
    r = holder_combine(p, q)
    if case == "finite":
        r1 = r.inner.value
        r2 = r.outer.value
        p2 = p.outer.value
        q2 = q.outer.value
        jump = max(1.0, 2.0 ** (1.0 / r1 - 1.0 / r2))
        return jump * p2 ** (1.0 / p2) * q2 ** (1.0 / q2) / r2 ** (1.0 / r2)
    if case == "outer_inf":
        r1 = r.inner.value
        p1 = p.inner.value
        q1 = q.inner.value
        jump = max(1.0, 2.0 ** (1.0 / r1 - 1.0))
        return jump * p1 ** (r1 / p1) * q1 ** (r1 / q1) / r1
    # inner_inf
    r2 = r.outer.value
    p2 = p.outer.value
    q2 = q.outer.value
    return p2 ** (1.0 / p2) * q2 ** (1.0 / q2) / r2 ** (1.0 / r2)


def _iterated_factor(p: Exponent, q: Exponent) -> float:
    if p.is_inf or q.is_inf:
        return 1.0
    pv, qv = p.value, q.value
    rv = 1.0 / (1.0 / pv + 1.0 / qv)
    return (pv / rv) ** (1.0 / pv) * (qv / rv) ** (1.0 / qv)


def iterated_holder_constant(p: ExponentPair, q: ExponentPair) -> float:
    """Constant for the iterated-weak product inequality (no admissibility gate)."""
    return _iterated_factor(p.inner, q.inner) * _iterated_factor(p.outer, q.outer)


def interpolate_exponent(p: ExponentPair, q: ExponentPair, theta) -> ExponentPair:
    """Componentwise 1/r_i = theta/p_i + (1-theta)/q_i for theta in [0, 1]."""
    th = _to_fraction(theta)
    if th < 0 or th > 1:
        raise ValueError(f"theta must lie in [0, 1], got {theta}")
    return ExponentPair(
        Exponent.from_recip(th * p.inner.recip + (1 - th) * q.inner.recip),
        Exponent.from_recip(th * p.outer.recip + (1 - th) * q.outer.recip),
    )


def half_weak_interpolation_constant(p: Exponent, r: Exponent, q: Exponent) -> float:
    """Constant (r/(r-p) + r/(q-r))^(1/r) for strict p < r < q.

    The second term is read as 0 when q is infinite.
    """
    if not (p < r and r < q):
        raise ValueError(f"need p < r < q, got {p}, {r}, {q}")
    rv = r.value
    pv = p.value
    first = rv / (rv - pv)
    second = 0.0 if q.is_inf else rv / (q.value - rv)
    return (first + second) ** (1.0 / rv)


def homogeneity_gamma(p: ExponentPair, q: ExponentPair, n: int) -> float:
    """Kernel order gamma with 1/q1 + 1/q2 = 1/p1 + 1/p2 + gamma/n.

    Raises NegativeGamma when the relation forces gamma < 0.
    """
    diff = q.recip_sum() - p.recip_sum()
    if diff < 0:
        raise NegativeGamma(
            f"homogeneity gives gamma = {float(n * diff)} < 0 for {p} -> {q}"
        )
    return float(n * diff)


def quasi_triangle_coefficients(p: ExponentPair, k: int):
    """Coefficient triples (a, b, c) for a k-term sum bound.

    The mixed-weak norm of f_1 + ... + f_k is at most
    sum_i ||f_i|| / (a_i * b_i * c_i).  a splits the level (sum 1); b and c
    compensate the inner/outer concavity loss: all ones when the exponent is
    >= 1, otherwise a geometric family normalized so that
    sum_i b_i^(p/(1-p)) == 1 holds with equality.
    """
    if k < 1:
        raise ValueError("need at least one summand")
    a = tuple(Fraction(1, k) for _ in range(k))

    def family(e: Exponent):
        if e.is_inf or e.as_fraction() >= 1:
            return tuple(Fraction(1) for _ in range(k))
        frac = e.as_fraction()
        expo = frac / (1 - frac)  # p/(1-p) > 0
        ratios = [Fraction(1, 2**i) for i in range(k)]
        total = sum(float(rho) ** float(expo) for rho in ratios)
        b0 = total ** (-1.0 / float(expo))
        return tuple(b0 * float(rho) for rho in ratios)

    return a, family(p.inner), family(p.outer)
