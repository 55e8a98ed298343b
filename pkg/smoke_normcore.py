import math
import time

import numpy as np

from mixnorm.exponents import DimPair
from mixnorm.funcone import Func1D
from mixnorm.funcrep import (
    ExpLayerRep,
    GridRep,
    LogDampedRep,
    OffsetRep,
    PowerProductRep,
    RegionSpec,
    SumKernelRep,
    TensorRep,
    indicator_box,
    sample_to_grid,
)
from mixnorm.normcore import (
    VARIANT_OUTER_STRONG_INNER_WEAK,
    VARIANT_OUTER_WEAK_INNER_STRONG,
    distribution_curve,
    half_mixed_norm,
    indicator_mixed_norm,
    iterated_weak_norm,
    mixed_norm,
    mixed_weak_norm,
    truncated_distance,
)

INF = math.inf


def close(a, b, tol=1e-9):
    assert abs(a - b) <= tol * max(1.0, abs(a), abs(b)), (a, b)


t0 = time.time()

# --- F = |x|^{-1/2} |y|^{-1/2} ---------------------------------------------
F = PowerProductRep(1.0, -0.5, -0.5)
r = iterated_weak_norm(F, (2, 2))
print("F iterated (2,2):", r)
close(r.value, 2.0, 1e-9)

r = mixed_weak_norm(F, (2, 2))
print("F mixed weak (2,2):", r)
assert math.isinf(r.value) and r.method == "closed_form" and r.err_bound == 0.0

r = mixed_norm(F, (2, 2))
print("F mixed strong (2,2):", r)
assert math.isinf(r.value)

# --- G = e^{|y|} on |x| <= e^{-|y|} ----------------------------------------
G = ExpLayerRep(math.e, 1.0)
r = mixed_weak_norm(G, (1, 1))
print("G mixed weak (1,1):", r)
close(r.value, 4.0, 1e-7)
assert r.err_bound < 1e-4

r = iterated_weak_norm(G, (1, 1))
print("G iterated (1,1):", r)
assert math.isinf(r.value)

r = mixed_norm(G, (1, 1))
print("G mixed strong (1,1):", r)
assert math.isinf(r.value)

# the layer tuned to p1=1 really diverges at (2,2): lam*phi ~ 2 sqrt(lam)
r = mixed_weak_norm(G, (2, 2))
print("G mixed weak (2,2):", r)
assert math.isinf(r.value)

# a layer tuned to p1=2 instead: v^{1/2} v^{1/2} / (p2 ln a)^{1/p2} = sqrt(2)
G2 = ExpLayerRep(math.e, 2.0)
r = mixed_weak_norm(G2, (2, 2))
print("G2 mixed weak (2,2):", r)
close(r.value, math.sqrt(2.0), 1e-7)

# --- indicator box ----------------------------------------------------------
box = indicator_box(1.0, 1.0)
r = mixed_norm(box, (3, 3))
print("box mixed (3,3):", r)
close(r.value, 2.0 ** (2.0 / 3.0), 1e-12)
r = mixed_weak_norm(box, (3, 3))
print("box mixed weak (3,3):", r)
close(r.value, 2.0 ** (2.0 / 3.0), 1e-5)
r = iterated_weak_norm(box, (3, 3))
print("box iterated (3,3):", r)
close(r.value, 2.0 ** (2.0 / 3.0), 1e-9)

# --- sum kernel at the homogeneity line ------------------------------------
S = SumKernelRep(-1.0, 1.0)
r = mixed_weak_norm(S, (2, 2))
print("sum kernel mixed weak (2,2):", r)
close(r.value, math.sqrt(2.0), 1e-7)
r = mixed_norm(S, (2, 2))
print("sum kernel mixed strong (2,2):", r)
assert math.isinf(r.value)

# --- tensor single level ----------------------------------------------------
fx = Func1D.radial_power(1.0, -0.5, 0.0, INF, dim=1)
gy = Func1D.indicator(0.0, 1.0, 3.0)
T = TensorRep(fx, gy)
r = mixed_weak_norm(T, (2, 2))
print("tensor mixed weak (2,2):", r)
close(r.value, 3.0 * math.sqrt(2.0) * math.sqrt(2.0), 1e-12)
r = iterated_weak_norm(T, (2, 2))
print("tensor iterated (2,2):", r)
close(r.value, 3.0 * math.sqrt(2.0) * math.sqrt(2.0), 1e-12)

# dominated family member: norm stays 4 for every k
for k in (1.0, 5.0, 50.0):
    fk = TensorRep(
        Func1D.radial_power(1.0, -1.0, k, INF, dim=1),
        Func1D.indicator(0.0, 1.0, 1.0),
    )
    r = mixed_weak_norm(fk, (1, 1))
    close(r.value, 4.0, 1e-12)
print("dominated family members all have mixed weak 4")

# --- grid paths -------------------------------------------------------------
rng = np.random.default_rng(11)
xn = np.concatenate([[0.0], np.geomspace(0.05, 20.0, 13)])
yn = np.concatenate([[0.0], np.geomspace(0.1, 8.0, 10)])
vals = rng.lognormal(0.0, 1.3, size=(13, 10))
vals[rng.random(vals.shape) < 0.2] = 0.0
g = GridRep(xn, yn, vals)

for p in [(1.5, 2.5), (2, 2), (0.5, 1.0), (3, 0.75), (INF, 2), (2, INF), (INF, INF)]:
    strong = mixed_norm(g, p)
    weak = mixed_weak_norm(g, p)
    it = iterated_weak_norm(g, p)
    h1 = half_mixed_norm(g, p, VARIANT_OUTER_STRONG_INNER_WEAK)
    h2 = half_mixed_norm(g, p, VARIANT_OUTER_WEAK_INNER_STRONG)
    slack = 1 + 1e-12
    assert weak.value <= strong.value * slack, (p, weak, strong)
    assert it.value <= strong.value * slack, (p, it, strong)
    assert h1.value <= strong.value * slack
    assert h2.value <= strong.value * slack
    assert weak.value <= h2.value * slack, (p, weak, h2)
    assert it.value <= h1.value * slack, (p, it, h1)
    # brute superlevel maximum over the distinct values
    distinct = np.unique(vals[vals > 0])
    best = 0.0
    for v in distinct:
        mask = vals >= v
        masked = GridRep(xn, yn, np.where(mask, 1.0, 0.0))
        phi, exact = indicator_mixed_norm(masked, 0.5, p)
        assert exact
        best = max(best, v * phi)
    close(weak.value, best, 1e-12)
print("grid sweep matches brute superlevel scan for 7 exponent pairs")

# grid iterated vs brute
p = (2.0, 1.5)
wx = g.x_weights
prof_vals = []
for j in range(vals.shape[1]):
    col = vals[:, j]
    order = np.argsort(-col)
    cum = np.cumsum(wx[order])
    keep = col[order] > 0
    prof_vals.append((col[order] * cum ** (1 / p[0]))[keep].max(initial=0.0))
prof = Func1D.from_steps(yn, prof_vals, dim=1, radial=True)
brute_it = prof.weak_norm(p[1]).value
close(iterated_weak_norm(g, p).value, brute_it, 1e-12)
print("grid iterated matches brute per-column sweep")

# sampled grid of F vs exact: truncated node range, no origin cell, so the
# scale-invariant weak candidates are not distorted by an unbounded cell
from mixnorm.funcrep import default_nodes

nodes = default_nodes(1e-3, 1e3, 512, origin_cell=False)
Fg = sample_to_grid(F, nodes, nodes)
r = iterated_weak_norm(Fg, (2, 2))
print("sampled F grid iterated:", r.value)
assert abs(r.value - 2.0) < 0.04

# --- log-damped -------------------------------------------------------------
ld = LogDampedRep.from_strength(1.0, 0.5, 1.0 / 3.0)  # u^{-1} |ln u|^{-2}
r = mixed_norm(ld, (1.0, 2.0))
print("log damped mixed (1,2):", r)
assert math.isfinite(r.value) and r.value > 0

# brute check: per side, int_0^U u^-1 (-ln u)^-2 du = 1/(-ln U) by hand,
# outer integral by trapezoid in |y|
box = 1.0 / 3.0

def ld_inner(ry):
    return 1.0 / (-math.log(box - ry)) + 1.0 / (-math.log(box + ry))

rys = np.linspace(1e-6, box - 1e-9, 40000)
inner = np.array([ld_inner(t) for t in rys])
brute = (2.0 * np.trapezoid(inner**2, rys)) ** 0.5
print("log damped brute:", brute, "vs", r.value)
assert abs(r.value - brute) < 0.02 * brute

bad = LogDampedRep.from_strength(0.0, 2.0, 1.0 / 3.0)  # u^{-1/2}|ln u|^{-1/2}
r = mixed_norm(bad, (2.0, 2.0))
print("log damped divergent:", r)
assert math.isinf(r.value)

# --- distances --------------------------------------------------------------
off = OffsetRep(F, 0.5)
assert truncated_distance(F, off, 0.6, (2, 2)) == 0.0
assert math.isinf(truncated_distance(F, off, 0.4, (2, 2)))
assert truncated_distance(F, F, 0.1, (2, 2)) == 0.0

g2 = GridRep(xn, yn, vals * 1.5)
d = truncated_distance(g, g2, 0.3, (2, 2))
dd = GridRep(xn, yn, np.abs(vals * 0.5))
phi, _ = indicator_mixed_norm(dd, 0.3, (2, 2))
close(d, phi, 1e-12)

# E_k family: distance to zero shrinks while the measure stays infinite
prev = INF
for k in (1.0, 4.0, 16.0):
    reg = RegionSpec(x_hi_coef=1.0, x_hi_expo=-1.0, y_hi=1.0 / k)
    ek = PowerProductRep(1.0, 0.0, 0.0, region=reg)
    d = truncated_distance(ek, None, 0.5, (2, 1))
    mass = mixed_norm(ek, (1, 1)).value
    print(f"E_k k={k}: distance {d:.6g}, mass {mass}")
    assert math.isinf(mass)
    assert d < prev
    prev = d

# --- distribution curve -----------------------------------------------------
curve = distribution_curve(g, (2, 2), np.geomspace(0.01, 50.0, 40))
assert all(curve.exact)
curve2 = distribution_curve(G, (1, 1), [0.5, 1.0, 2.0, 4.0])
print("G curve:", [f"{v:.4g}" for v in curve2.phis], "sup", curve2.sup_lambda_phi)
close(curve2.sup_lambda_phi, 4.0, 1e-9)

print(f"all normcore smoke checks passed in {time.time() - t0:.1f}s")
