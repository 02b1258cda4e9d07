#!/usr/bin/env python3
"""The Cremona involution: composition can collapse degrees.

sigma = [yz : xz : xy] has degree 2, yet sigma o sigma is the identity.
The common factor xyz appears when the coordinate polynomials are
substituted into themselves, and dividing it out is exactly what the
normalized composition does.  The resulting degree sequence 2, 1, 2, 1
certifies that the dynamical degree is 1 even though every iterate you
write down has degree 1 or 2.
"""

from arithdyn import (RationalMapPN, compose_normalized, degree_sequence,
                      dyndeg_estimate, normalize, orbit)
from arithdyn.projmaps import compose_raw
from arithdyn.polynomials import format_poly

names = ["x", "y", "z"]
sigma = RationalMapPN.from_strings(["y*z", "x*z", "x*y"], names,
                                   name="cremona")
print("sigma =", sigma)

raw = compose_raw(sigma, sigma)
print("raw composition:", " : ".join(format_poly(p, names) for p in raw))
print("after dividing by the common factor:", compose_normalized(sigma, sigma))
print()

seq = degree_sequence(sigma, 8)
est = dyndeg_estimate(seq)
print("degree sequence:", seq.degs)
print("n-th root upper bounds:", [round(b, 6) for b in est.upper_bounds])
print(f"certified dynamical degree upper bound: {est.certified_upper}"
      f" (certified={est.certified})")
print()

# Orbits: points with a zero coordinate fall into the indeterminacy locus,
# all others are swapped back and forth in a 2-cycle.
for coords in [(1, 2, 3), (1, 0, 0), (0, 1, 2)]:
    try:
        rec = orbit(sigma, normalize(coords), 6)
        print(f"orbit of {coords}: {[str(p) for p in rec.points]}"
              f" -> {rec.terminated_by.kind}")
    except Exception as exc:
        print(f"orbit of {coords}: {exc}")
