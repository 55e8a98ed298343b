"""mixnorm: mixed and weak Lebesgue norms of concrete two-variable functions."""
from __future__ import annotations

from .exponents import (
    DimPair,
    Exponent,
    ExponentPair,
    NegativeGamma,
    NotAdmissible,
    holder_combine,
    homogeneity_gamma,
    interpolate_exponent,
    iterated_holder_constant,
    mixed_weak_holder_admissible,
    mixed_weak_holder_constant,
    quasi_triangle_coefficients,
    unit_ball_volume,
)

__version__ = "0.1.0"
