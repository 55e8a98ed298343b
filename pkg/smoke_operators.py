"""Scratch checks for operators.py against hand-derived values."""
import math
import time
import warnings

import numpy as np

from mixnorm.exponents import DimPair
from mixnorm.funcone import Func1D, Piece
from mixnorm.funcrep import (
    DiffKernelRep,
    GridRep,
    LogDampedRep,
    MaxKernelRep,
    PowerProductRep,
    ProductRep,
    RegionSpec,
    indicator_box,
)
from mixnorm.normcore import mixed_norm, mixed_weak_norm
from mixnorm.operators import (
    OperatorSpec,
    QuadratureFailure,
    SingularSlice,
    apply_difference_kernel,
    apply_symmetric_kernel,
    fractional_integral_1d,
    pointwise_product,
    symmetric_rearrangement,
)

t0 = time.time()
INF = math.inf


def close(a, b, tol=1e-12, what=""):
    if math.isinf(b):
        assert math.isinf(a), f"{what}: {a} vs {b}"
        return
    assert abs(a - b) <= tol * max(abs(b), 1.0), f"{what}: {a} vs {b}"


# --- spec objects ---------------------------------------------------------
spec = OperatorSpec("symmetric_kernel", 0.5, inverse=True)
spec2 = OperatorSpec.from_json(spec.to_json())
assert spec == spec2
for bad in (
    dict(kind="symmetric_kernel", gamma=0.0),
    dict(kind="nope", gamma=1.0),
    dict(kind="fractional_integral", gamma=1.5),
    dict(kind="fractional_integral", gamma=0.5, inverse=True),
):
    try:
        OperatorSpec(**bad)
        raise AssertionError(f"accepted {bad}")
    except ValueError:
        pass

# --- symmetric kernel ----------------------------------------------------
one = PowerProductRep(1.0, 0.0, 0.0)
t_one = apply_symmetric_kernel(one, 1.0)
close(t_one.eval(1.0, 3.0), 1.0 / 6.0, what="symmetric kernel at (1,3)")
close(t_one.eval(-2.0, 0.5), 1.0 / 4.0, what="symmetric kernel at (-2,.5)")

round_trip = apply_symmetric_kernel(apply_symmetric_kernel(one, 0.7, inverse=True), 0.7)
assert isinstance(round_trip, PowerProductRep), type(round_trip)
for x, y in [(0.3, 0.9), (2.0, -1.0), (5.0, 5.0)]:
    close(round_trip.eval(x, y), 1.0, what="kernel cancellation")

box = indicator_box(1.0, 1.0)
lifted = apply_symmetric_kernel(box, 0.5, inverse=True)
assert isinstance(lifted, MaxKernelRep)
flattened = apply_symmetric_kernel(lifted, 0.5)
for x, y in [(0.2, 0.8), (0.99, 0.01), (1.5, 0.5), (0.5, 3.0)]:
    close(flattened.eval(x, y), box.eval(x, y), what=f"lift+flatten at {(x, y)}")

# kernel ordering: equality with min((2|x|)^-g, (2|y|)^-g) in one dimension
kern = MaxKernelRep(-0.6)
rng = np.random.default_rng(7)
for _ in range(200):
    x, y = rng.normal(size=2) * 3
    if x == 0 or y == 0:
        continue
    want = min((2 * abs(x)) ** -0.6, (2 * abs(y)) ** -0.6)
    close(kern.eval(x, y), want, tol=1e-12, what="kernel ordering")

# --- difference kernel ---------------------------------------------------
l_one = apply_difference_kernel(one, 1.0)
close(l_one.eval(3.0, 1.0), 0.5, what="difference kernel at (3,1)")
lround = apply_difference_kernel(apply_difference_kernel(one, 0.3, inverse=True), 0.3)
assert isinstance(lround, PowerProductRep)
close(lround.eval(1.0, 4.0), 1.0, what="difference cancellation")

# L >= T pointwise
dkern = DiffKernelRep(-0.6)
for _ in range(200):
    x, y = rng.normal(size=2) * 3
    if x == y or (x == 0 and y == 0):
        continue
    assert dkern.eval(x, y) >= kern.eval(x, y) - 1e-15, (x, y)

# log-damped merge keeps the closed form
ld = LogDampedRep(-0.5, 0.5)
merged = apply_difference_kernel(ld, 0.25)
assert isinstance(merged, LogDampedRep)
close(merged.expo, -0.75, what="log-damped exponent sum")
close(merged.log_expo, 0.5, what="log-damped log exponent")
un = apply_difference_kernel(ld, 0.25, inverse=True)
assert isinstance(un, LogDampedRep) and abs(un.expo - (-0.25)) < 1e-15

# --- grid paths ----------------------------------------------------------
g = GridRep([0.0, 1.0, 2.0], [0.0, 1.0, 2.0], np.ones((2, 2)))
tg = apply_symmetric_kernel(g, 1.0)
want = np.array([[1.0, 1.0 / 3.0], [1.0 / 3.0, 1.0 / 3.0]])
assert np.allclose(tg.values, want), tg.values

with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always")
    lg = apply_difference_kernel(g, 0.5)
assert any(issubclass(w.category, SingularSlice) for w in caught), caught
# diagonal cells fall back to the exact in-cell average distance 1/3
assert np.allclose(lg.values, [[3.0**0.5, 1.0], [1.0, 3.0**0.5]]), lg.values

# --- products ------------------------------------------------------------
E = RegionSpec(y_hi=1.0, x_hi_coef=1.0)
f_iv = PowerProductRep(1.0, 0.0, 0.75, E)
g_iv = PowerProductRep(1.0, 0.0, -0.75, E)
prod = pointwise_product(f_iv, g_iv)
assert isinstance(prod, PowerProductRep)
assert prod.x_expo == 0.0 and prod.y_expo == 0.0
close(prod.eval(0.5, 0.5), 1.0, what="reciprocal powers cancel")

mm = pointwise_product(MaxKernelRep(-0.25), MaxKernelRep(-0.5))
assert isinstance(mm, MaxKernelRep) and mm.power == -0.75

sc = pointwise_product(PowerProductRep(3.0, 0.0, 0.0), MaxKernelRep(-1.0))
assert isinstance(sc, MaxKernelRep) and sc.coef == 3.0

ga = GridRep([0.0, 1.0], [0.0, 1.0], np.array([[2.0]]))
gb = GridRep([0.0, 0.5, 1.0], [0.0, 1.0], np.array([[3.0], [4.0]]))
pab = pointwise_product(ga, gb)
assert isinstance(pab, ProductRep)
close(pab.eval(0.25, 0.5), 6.0, what="grid product fallback")
close(pab.eval(0.75, 0.5), 8.0, what="grid product fallback")

disjoint = pointwise_product(
    PowerProductRep(1.0, 0.0, 0.0, RegionSpec(y_hi=1.0)),
    PowerProductRep(1.0, 0.0, 0.0, RegionSpec(y_lo=2.0)),
)
assert isinstance(disjoint, PowerProductRep) and disjoint.coef == 0.0

# --- operator outputs through the norm engine ----------------------------
tbox = apply_symmetric_kernel(box, 0.5)
r = mixed_norm(tbox, (2, 2))
close(r.value, 2.0, tol=5e-3, what="symmetric kernel on box, mixed (2,2)")
assert r.err_bound < 0.05

lbox = apply_difference_kernel(box, 0.5)
# integral of |x-y|^(-1/2) over [-1,1]^2 via the doubly integrated kernel
kk = lambda u: abs(u) ** 1.5 / 0.75
want_l1 = kk(2.0) - 2 * kk(0.0) + kk(-2.0)
r = mixed_norm(lbox, (1, 1))
close(r.value, want_l1, tol=5e-3, what="difference kernel on box, mixed (1,1)")

r = mixed_norm(apply_difference_kernel(box, 0.5), (2, 2))
assert math.isinf(r.value), "borderline slice integrals should diverge"

# --- fractional integral -------------------------------------------------
ind = Func1D.indicator(0.0, 1.0)
close(fractional_integral_1d(ind, 0.5, 0.0), 2.0, what="fractional at edge")
close(fractional_integral_1d(ind, 0.5, 0.5), 2 * math.sqrt(2), what="fractional inside")
want = 2 * (math.sqrt(2) - 1)
close(fractional_integral_1d(ind, 0.5, 2.0), want, tol=1e-7, what="fractional outside")
assert fractional_integral_1d(Func1D.zero(), 0.5, 1.0) == 0.0

rad = Func1D.radial_power(1.0, 0.0, 0.0, 1.0)
close(fractional_integral_1d(rad, 0.5, 0.0), 4.0, what="radial indicator at origin")

quarter = Func1D.radial_power(1.0, -0.25, 0.0, 1.0)
close(fractional_integral_1d(quarter, 0.5, 0.0), 8.0, what="mild singularity, exact")

diverge = Func1D.radial_power(1.0, -0.75, 0.0, 1.0)
assert math.isinf(fractional_integral_1d(diverge, 0.5, 0.0))

tail = Func1D.radial_power(1.0, -2.0, 1.0, INF)
close(fractional_integral_1d(tail, 0.5, 0.0), 4.0 / 3.0, tol=1e-6, what="power tail")

ramp = Func1D.shifted_power(1.0, 1.0, 0.0, 0.0, 1.0)
close(fractional_integral_1d(ramp, 0.5, 0.5), math.sqrt(2), tol=1e-7, what="ramp probe")

dec = Func1D.decay_layer(1.0, 1.0)
v_half = fractional_integral_1d(dec, 0.5, 0.0)
# 2 * integral_0^inf e^-t t^(-1/2) dt = 2 * Gamma(1/2)
close(v_half, 2 * math.sqrt(math.pi), tol=1e-6, what="decay tail vs gamma function")

try:
    fractional_integral_1d(ramp, 0.5, 0.5, max_evals=10)
    raise AssertionError("budget should have been exhausted")
except QuadratureFailure:
    pass

# monotonicity at probes
small = Func1D.indicator(0.0, 1.0, 0.5)
for x in (-1.0, 0.0, 0.3, 0.9, 2.5):
    assert fractional_integral_1d(small, 0.5, x) <= fractional_integral_1d(ind, 0.5, x) + 1e-12

# --- rearrangement -------------------------------------------------------
r1 = symmetric_rearrangement(Func1D.indicator(2.0, 4.0))
assert r1.radial and len(r1.pieces) == 1
pc = r1.pieces[0]
assert (pc.lo, pc.hi, pc.coef) == (0.0, 1.0, 1.0), pc

two_step = Func1D(
    [Piece(5.0, 6.0, 2.0), Piece(8.0, 10.0, 1.0)], dim=1, radial=False
)
r2 = symmetric_rearrangement(two_step)
vals = [(p.lo, p.hi, p.coef) for p in sorted(r2.pieces, key=lambda p: p.lo)]
assert vals == [(0.0, 0.5, 2.0), (0.5, 1.5, 1.0)], vals

fp = Func1D.radial_power(1.0, -0.5, 0.0, 1.0)
assert symmetric_rearrangement(fp) is fp

rng = np.random.default_rng(23)
for trial in range(100):
    k = rng.integers(2, 8)
    nodes = np.unique(rng.integers(0, 256, size=k + 1)) / 16.0
    if len(nodes) < 2:
        continue
    vals = rng.integers(0, 64, size=len(nodes) - 1) / 8.0
    f = Func1D.from_steps(nodes, vals, dim=1, radial=False)
    star = symmetric_rearrangement(f)
    levels = sorted({v for v in vals if v > 0})
    probes = [0.5 * l for l in levels] + levels + [l + 0.25 for l in levels]
    for lam in probes[:20]:
        a = f.measure_above(lam)
        b = star.measure_above(lam)
        assert a == b, (trial, lam, a, b)
    for p in (1.0, 2.0, 3.5):
        sa, sb = f.strong_norm(p), star.strong_norm(p)
        close(sb, sa, tol=1e-10, what=f"norm preservation p={p}")

print(f"all operator smoke checks passed in {time.time() - t0:.1f}s")
