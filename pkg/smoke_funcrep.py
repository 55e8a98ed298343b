import math
import numpy as np
from mixnorm.funcrep import (
    PowerProductRep, MaxKernelRep, SumKernelRep, DiffKernelRep, ExpLayerRep,
    LogDampedRep, TensorRep, GridRep, ProductRep, TransposeRep, RegionSpec,
    sample_to_grid, default_nodes, indicator_box, funcrep_from_json,
    InfiniteProfile,
)
from mixnorm.funcone import Func1D

# --- F = |x|^{-1/2} |y|^{-1/2}: iterated weak (2,2) should be 2 exactly
F = PowerProductRep(1.0, -0.5, -0.5)
wp = F.inner_weak_profile(2.0)
print("F inner weak profile pieces:", [(p.lo, p.hi, p.coef, p.expo) for p in wp.pieces])
out = wp.weak_norm(2.0)
print("F iterated weak (2,2):", out.value, "expect 2.0")

# mixed weak of F should be infinite: measure_profile at lam=1:
mp = F.measure_profile(1.0)
print("F measure profile(1):", [(p.lo, p.hi, p.coef, p.expo) for p in mp.pieces])
# mu(ry) = 2 * (1/(ry^... )) : |x|^{-1/2} ry^{-1/2} > 1 -> |x| < ry^{-1}: mu = 2 ry^{-1}
phi = mp.powed(1.0).integral_power(1.0)  # p=(1,1) indicator norm: integral of mu
print("F Phi(1) at (1,1):", phi, "expect inf")

# --- G = exp layer, a=e, p1=1: mixed weak (1,1) = 4
G = ExpLayerRep(math.e, 1.0)
for lam in (0.5, 1.0, 2.0, 10.0):
    mu = G.measure_profile(lam)
    v = mu.powed(1.0).integral_power(1.0)
    print(f"G lam={lam}: Phi={lam * v}  expect 4 for lam>=1")
sp = G.inner_strong_profile(1.0)
print("G strong profile (p=1) value at ry=3:", sp.eval(3.0), "expect v1*C=2 const")
print("G strong profile integral p=1:", sp.integral_power(1.0), "expect inf (const on [0,inf))")
# weak in y of the const profile: infinite
print("G profile weak(1):", sp.weak_norm(1.0).value, "expect inf")

# transposed G: slice at x-level t: e^{ry} on [0, -ln t], weak_1 in y
GT = TransposeRep(G)
t = 0.05
sl = GT.slice_at(t)
print("GT slice pieces:", [(p.lo, p.hi, p.coef, p.kind, p.beta) for p in sl.pieces])
w = sl.weak_norm(1.0)
# oracle: slice weak_1 = sup_l l * 2*(-ln t + ln l ... compute directly numeric
lam_grid = np.geomspace(1e-3, 1/t * 2, 40000)
Y = -math.log(t)
meas = np.array([2.0 * max(0.0, Y - max(0.0, math.log(l))) for l in lam_grid])
brute = (lam_grid * meas).max()
print("GT slice weak_1:", w.value, "brute:", brute)

# --- MaxKernel: slice and measure for Thm 3.1 family
reg = RegionSpec(y_lo=1.0, y_hi=10.0, relation="y_le_x")
K = MaxKernelRep(-1.0, 1.0, reg)  # (2max)^{-1} on 1<=|y|<=10, |y|<=|x|
sl = K.slice_at(2.0)
print("K slice at ry=2:", [(p.lo, p.hi, p.coef, p.expo) for p in sl.pieces])
# region: |x| >= max(0, 2): power part only with lo=2
brute_m = sl.measure_above(0.1)
vec_m = K.measure_slices(np.array([2.0]), 0.1)[0]
print("K measure lam=0.1 slice vs vectorized:", brute_m, vec_m)

# eval symmetry: K(x,y) uses |x+y|+|x-y|
print("K eval (3,2) vs (-3,2):", K.eval(3, 2), K.eval(-3, 2), "expect equal 1/6")

# --- SumKernel measure profile (lam) for gamma = 1: mu(ry) = 2*(1/lam - ry)+
S = SumKernelRep(-1.0)
mu = S.measure_profile(0.5)
print("S mu(0.5) at ry=1:", mu.eval(1.0), "expect 2*(2-1)=2")
vec = S.measure_slices(np.array([1.0, 3.0]), 0.5)
print("S vec measures:", vec, "expect [2, 0]")

# --- DiffKernel slice
D = DiffKernelRep(-0.5, 1.0, RegionSpec(y_lo=0.0, y_hi=1.0))
sl = D.slice_at(0.5)
print("D slice pieces:", [(p.lo, p.hi, p.coef, p.expo, p.center) for p in sl.pieces])
print("D slice strong 1 on line:", sl.integral_power(1.0))
# integral |x-0.5|^{-1/2} dx over R = inf (tails): expect inf
D2 = DiffKernelRep(-0.5, 1.0, RegionSpec(x_hi_coef=1.0, y_hi=1.0))
sl2 = D2.slice_at(0.5)
v = sl2.integral_power(1.0)
# int_{-1}^{1} |x-.5|^{-1/2} = 2(sqrt(1.5)+sqrt(0.5))
print("D2 slice integral:", v, "expect", 2*(math.sqrt(1.5)+math.sqrt(0.5)))

# --- LogDamped inner strong
L = LogDampedRep(-1.0, 2.0, 1.0/3.0)
v = L.inner_strong_value(0.1, 1.0)
print("L inner strong p=1 at ry=0.1 (e=-1, s=2 closed form):", v)
U1, U2 = 1.0/3.0 - 0.1, 1.0/3.0 + 0.1
expect = (-math.log(U1))**(-1.0) / 1.0 + (-math.log(U2))**(-1.0) / 1.0
print("  closed-form check:", expect)
print("L divergent case (s<=1):", LogDampedRep(-1.0, 1.0, 1.0/3.0).inner_strong_value(0.1, 1.0))

# --- Tensor identity: f = |x|^{-1} on [1,inf), g = 3*chi_{[0,2]}
fx = Func1D.radial_power(1.0, -1.0, 1.0, math.inf, dim=1)
gy = Func1D.from_steps([0.0, 2.0], [3.0], dim=1, radial=True)
T = TensorRep(fx, gy)
wpro = T.inner_weak_profile(1.0)
print("T weak profile steps:", [(p.lo, p.hi, p.coef) for p in wpro.pieces])
# weak_1(|x|^{-1} on [1,inf)) = sup l * 2(1/l - 1)+ ... = 2 at l->0? l*2(1/l-1) = 2-2l -> sup 2
print("  expect coef 3*2=6 on [0,2]")

# --- Grid: sample F onto a small grid, check inner profiles
nodes = default_nodes(1e-3, 1e3, 64)
GR = sample_to_grid(F, nodes, nodes)
print("grid shape:", GR.values.shape, "weights sum x:", GR.x_weights.sum())
pro = GR.inner_strong_profile(math.inf)
print("grid sup profile eval(1):", pro.eval(1.0))

# --- indicator box norm check via profiles: chi_{|x|<=1,|y|<=1}, mixed (3,3)
B = indicator_box()
spb = B.inner_strong_profile(3.0)
print("box strong profile:", [(p.lo, p.hi, p.coef, p.expo) for p in spb.pieces])
val = spb.strong_norm(3.0)
print("box mixed (3,3):", val, "expect", 2 ** (2.0 / 3.0))

# box weak profile equals strong profile (indicator slices)
print("box weak == strong:", B.inner_weak_profile(3.0).strong_norm(3.0))

# --- PowerProduct with relational region: Thm 3.1 LHS-style indicator measures
regA = RegionSpec(y_lo=1.0, y_hi=100.0, relation="y_le_x")
P = PowerProductRep(1.0, -0.75, -0.25, regA)
mp = P.measure_profile(0.01)
if mp is not None:
    print("P measure profile pieces:", [(round(p.lo,3), round(p.hi,3), p.coef, p.expo) for p in mp.pieces])
    # cross-check at ry=2 against vectorized
    print("P mu(2):", mp.eval(2.0), "vec:", P.measure_slices(np.array([2.0]), 0.01)[0])

# --- transpose of a rectangle power product
PT = PowerProductRep(2.0, -0.5, -0.25, RegionSpec(x_hi_coef=4.0, y_lo=1.0, y_hi=9.0)).transpose()
print("PT kind:", PT.kind, "eval(2,3) vs orig(3,2):", PT.eval(2.0, 3.0), 2.0*3.0**-0.5*2.0**-0.25)

# --- TransposeRep of non-rectangular power product
regB = RegionSpec(x_hi_coef=2.0, x_hi_expo=-1.0, y_lo=1.0, y_hi=8.0)
PP = PowerProductRep(1.0, -0.5, 0.0, regB)
PPT = PP.transpose() if regB.x_hi_expo == 0 else TransposeRep(PP)
sl = PPT.slice_at(0.5)  # y-slice of PP at |x| = 0.5: ry in [1, min(8, 2/0.5=4)]
print("PPT slice at 0.5:", [(p.lo, p.hi, p.coef, p.expo) for p in sl.pieces], "expect [1,4] const 0.5^{-0.5}")

# --- ProductRep: (2max(|x|,|y|))^{-1} * indicator box
PR = ProductRep(MaxKernelRep(-1.0), indicator_box(2.0, 2.0))
sl = PR.slice_at(1.0)
print("PR slice at 1:", [(p.lo, p.hi, p.coef, p.expo) for p in sl.pieces])
print("PR eval(1.5, 1.0):", PR.eval(1.5, 1.0), "expect 1/3")

# --- JSON round trip
for rep in (F, G, K, S, D, L, T, B, PR):
    data = rep.to_json()
    back = funcrep_from_json(data)
    x, y = 1.7, 0.9
    a, b = rep.eval(x, y), back.eval(x, y)
    assert a == b or (math.isinf(a) and math.isinf(b)), (rep.kind, a, b)
print("JSON round trips OK")

# --- InfiniteProfile signaling
try:
    PowerProductRep(1.0, -1.0, 0.0).inner_weak_profile(2.0)
    print("BUG: expected InfiniteProfile")
except InfiniteProfile:
    print("InfiniteProfile raised for non-critical full-range power (weak)")
try:
    PowerProductRep(1.0, 0.0, -1.0).inner_strong_profile(2.0)
    print("BUG: expected InfiniteProfile for constant-in-x full range")
except InfiniteProfile:
    print("InfiniteProfile raised for full-range indicator strong")
