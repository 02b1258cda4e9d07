#!/usr/bin/env python3
"""Growth-constant profiles and the orbit counting function.

Two ways to see the same growth bound.  First, for each orbit the running
constant C(n) = max_k h+(f^k P) / ((delta + eps)^k h+(P)) should plateau;
a sequence growing faster than (delta + eps)^n makes it diverge, and the
harness flags exactly that on a synthetic fixture.  Second, the number of
orbit points of height at most B grows like log B / log(alpha), so the
ratio count / log B approaches 1 / log(alpha).
"""

import math

from arithdyn import (counting_function, growth_fit,
                      growth_profile_nondiverging, heights_from_values,
                      monomial_arithdeg)
from arithdyn.monomial import MonomialMap
from arithdyn.spectral import IntMat

A = MonomialMap(IntMat(((2, 1), (1, 1))))
rho = (3 + math.sqrt(5)) / 2

hs = monomial_arithdeg(A, (2, 3), 40)
fit = growth_fit(hs, rho, 0.1)
print("orbit of (2, 3) under (x, y) -> (x^2 y, x y):")
print(f"  C(n) profile head: {[round(c, 4) for c in fit.profile[:6]]}")
print(f"  final C = {fit.C_fit:.4f},"
      f" plateaued: {growth_profile_nondiverging(fit.profile)}")
print()

fake = heights_from_values([(rho + 0.2) ** n for n in range(41)])
bad = growth_fit(fake, rho, 0.1)
print("synthetic sequence growing like (delta + 2 eps)^n:")
print(f"  final C = {bad.C_fit:.1f},"
      f" plateaued: {growth_profile_nondiverging(bad.profile)}  <- flagged")
print()

doubler = MonomialMap(IntMat(((2,),)))
hs2 = monomial_arithdeg(doubler, (2,), 60)
grid = [hs2.heights[j] for j in range(49, 59)]
rep = counting_function(hs2, grid)
print("counting function for the squaring orbit of 2 (alpha = 2):")
print("  B (log scale)    count   count/log B")
for row in rep.rows[-4:]:
    print(f"  {row.B:>13.6g}   {row.count:>5}   {row.ratio:.6f}")
print(f"  1/log 2 = {1 / math.log(2):.6f}")
