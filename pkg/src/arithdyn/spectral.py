"""Exact integer-matrix norm growth and certified spectral radii.

The spectral radius of an integer matrix is bracketed by exact rational
arithmetic: the characteristic polynomial is computed exactly, reduced to
its square-free part, and the largest root modulus is isolated by bisection
where each step decides "all roots strictly inside the circle of radius m"
with an exact Schur-Cohn (Jury) test.  Both bracket ends are therefore
certified, which matters because these values serve as oracles for slower
degree-sequence and orbit-height estimates.

Norm-based quantities (sup norms of powers, submultiplicativity checks,
Fekete upper bounds) are computed exactly over the integers.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import ConeNotPreserved, ContractViolation, ResourceCapExceeded


@dataclass(frozen=True)
class IntMat:
    """A square matrix of exact integers."""

    entries: tuple

    def __post_init__(self):
        rows = []
        for row in self.entries:
            out = []
            for x in row:
                v = int(x)
                if v != x and not isinstance(x, str):
                    raise ContractViolation(f"non-integer entry {x!r}")
                out.append(v)
            rows.append(tuple(out))
        rows = tuple(rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ContractViolation("matrix must be square and nonempty")
        object.__setattr__(self, "entries", rows)

    @property
    def r(self):
        return len(self.entries)

    def row(self, i):
        return self.entries[i]

    def __matmul__(self, other):
        other = as_matrix(other)
        n = self.r
        if other.r != n:
            raise ContractViolation("matrix size mismatch")
        bt = tuple(zip(*other.entries))
        return IntMat(tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
            for row in self.entries))

    def mat_vec(self, v):
        if len(v) != self.r:
            raise ContractViolation("vector size mismatch")
        return [sum(a * b for a, b in zip(row, v)) for row in self.entries]

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n))
                         for i in range(n)))


def as_matrix(a) -> IntMat:
    return a if isinstance(a, IntMat) else IntMat(tuple(tuple(r) for r in a))


def parse_matrix(text) -> IntMat:
    """Parse the shared text form, rows split by ';', entries by ','."""
    s = text.replace("−", "-").strip()
    try:
        rows = [[int(x) for x in row.split(",")] for row in s.split(";")]
    except ValueError as exc:
        raise ContractViolation(f"bad matrix text {text!r}: {exc}") from None
    return IntMat(tuple(tuple(r) for r in rows))


def format_matrix(a) -> str:
    a = as_matrix(a)
    return ";".join(",".join(str(x) for x in row) for row in a.entries)


def supnorm(a) -> int:
    """max |a_ij|, exact."""
    a = as_matrix(a)
    return max(abs(x) for row in a.entries for x in row)


def power_norms(a, nmax, max_bits=5_000_000):
    """[||A^1||, ..., ||A^nmax||] by exact repeated multiplication."""
    if nmax < 1:
        raise ContractViolation("nmax must be >= 1")
    a = as_matrix(a)
    out = []
    cur = a
    for _ in range(nmax):
        norm = supnorm(cur)
        if norm.bit_length() > max_bits:
            raise ResourceCapExceeded("power norms exceed the bit cap")
        out.append(norm)
        cur = cur @ a
    return out


def determinant(a) -> int:
    from .projmaps import bareiss_determinant
    return bareiss_determinant(as_matrix(a).entries)


def char_poly(a):
    """Coefficients [c_0, ..., c_{r-1}, 1] of det(lambda I - A), exact."""
    a = as_matrix(a)
    r = a.r
    coeffs = [Fraction(0)] * r + [Fraction(1)]
    m = [[Fraction(1) if i == j else Fraction(0) for j in range(r)]
         for i in range(r)]
    ent = a.entries
    for k in range(1, r + 1):
        # m holds M_k; compute A @ M_k
        am = [[sum(Fraction(ent[i][t]) * m[t][j] for t in range(r))
               for j in range(r)] for i in range(r)]
        ck = -sum(am[i][i] for i in range(r)) / k
        coeffs[r - k] = ck
        if k < r:
            m = [[am[i][j] + (ck if i == j else 0) for j in range(r)]
                 for i in range(r)]
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise AssertionError("characteristic polynomial not integral")
        out.append(int(c))
    return out


def _poly_deriv(coeffs):
    return [k * c for k, c in enumerate(coeffs)][1:]


def _poly_strip(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_divmod_q(a, b):
    """Quotient and remainder of rational coefficient lists (low-to-high)."""
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    a = _poly_strip(a)
    b = _poly_strip(b)
    if not b:
        raise ZeroDivisionError
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        off = len(a) - len(b)
        q[off] = f
        for i, bc in enumerate(b):
            a[off + i] -= f * bc
        a = _poly_strip(a)
        if not a:
            break
    return q, a


def square_free_part(coeffs):
    """Integer square-free part of an integer polynomial, positive lead."""
    p = _poly_strip([Fraction(c) for c in coeffs])
    if len(p) <= 1:
        raise ContractViolation("constant polynomial")
    a, b = p, [Fraction(c) for c in _poly_deriv(p)]
    while _poly_strip(b):
        _, rem = _poly_divmod_q(a, b)
        a, b = b, rem
    g = _poly_strip(a)
    sf, rem = _poly_divmod_q(p, g)
    assert not _poly_strip(rem)
    # clear denominators, make primitive with positive leading coefficient
    lcm = 1
    for c in sf:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in sf]
    g = 0
    for c in ints:
        g = math.gcd(g, abs(c))
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _all_roots_inside_unit(coeffs):
    """Exact Schur-Cohn test: all roots strictly inside |z| < 1.

    coeffs is a low-to-high list of Fractions (or ints), not identically
    zero.  Constants have no roots and count as stable.
    """
    c = _poly_strip([Fraction(x) for x in coeffs])
    if not c:
        raise ContractViolation("zero polynomial")
    while len(c) > 1:
        a0, an = c[0], c[-1]
        if abs(a0) >= abs(an):
            return False
        n = len(c) - 1
        # (an * p(z) - a0 * p*(z)) / z, where p* has reversed coefficients
        c = [an * c[k] - a0 * c[n - k] for k in range(1, n + 1)]
        c = _poly_strip(c)
        if not c:
            return False  # cannot happen when |a0| < |an|; be conservative
    return True


def _all_roots_inside_radius(int_coeffs, radius: Fraction):
    if radius <= 0:
        return False
    scaled = [c * radius ** k for k, c in enumerate(int_coeffs)]
    return _all_roots_inside_unit(scaled)


@dataclass(frozen=True)
class SpectralEstimate:
    """A spectral radius with a certified enclosing bracket.

    bracket = (lower, upper) always contains the true value; the floats are
    rounded outward so the containment survives the float conversion.
    """

    value: float
    method: str
    bracket: tuple

    @property
    def width(self):
        return self.bracket[1] - self.bracket[0]


def _outward(lo: Fraction, hi: Fraction):
    lo_f = float(lo)
    if lo_f > lo:
        lo_f = math.nextafter(lo_f, -math.inf)
    hi_f = float(hi)
    if hi_f < hi:
        hi_f = math.nextafter(hi_f, math.inf)
    return lo_f, hi_f


def spectral_radius(a, tol=1e-9) -> SpectralEstimate:
    """Certified bracket of width <= tol around the spectral radius.

    Bisection on the circle radius; each test is the exact Schur-Cohn
    criterion applied to the square-free part of the exact characteristic
    polynomial, so no root of any modulus is ever missed.
    """
    a = as_matrix(a)
    p = char_poly(a)
    sf = square_free_part(p)
    lead = abs(sf[-1])
    cauchy = Fraction(1) + max(Fraction(abs(c), lead) for c in sf[:-1]) \
        if len(sf) > 1 else Fraction(1)
    lo, hi = Fraction(0), cauchy + 1
    tol_f = Fraction(tol)
    if tol_f <= 0:
        raise ContractViolation("tol must be positive")
    while hi - lo > tol_f:
        mid = (lo + hi) / 2
        if _all_roots_inside_radius(sf, mid):
            hi = mid
        else:
            lo = mid
    value = float((lo + hi) / 2)
    # snap to an exact integer root modulus when one sits in the bracket
    cand = round(value)
    if lo <= cand <= hi:
        tails = [sum(c * cand ** k for k, c in enumerate(sf)),
                 sum(c * (-cand) ** k for k, c in enumerate(sf))]
        if 0 in tails:
            value = float(cand)
    lo_f, hi_f = _outward(lo, hi)
    return SpectralEstimate(value=value, method="char_poly_root",
                            bracket=(lo_f, hi_f))


def spectral_radius_norm_limit(a, kmax=20) -> SpectralEstimate:
    """Coarse norm-based bracket: rho <= (r ||A^k||)^(1/k) for every k, and
    rho >= (|tr A^k| / r)^(1/k).  Useful as an independent cross-check."""
    a = as_matrix(a)
    r = a.r
    norms = power_norms(a, kmax)
    upper = min((r * n) ** (1.0 / k) if n else 0.0
                for k, n in enumerate(norms, start=1))
    lower = 0.0
    cur = a
    for k in range(1, kmax + 1):
        tr = abs(sum(cur.entries[i][i] for i in range(r)))
        if tr:
            lower = max(lower, (tr / r) ** (1.0 / k))
        cur = cur @ a
    return SpectralEstimate(value=upper, method="norm_limit",
                            bracket=(lower, upper))


def birkhoff_cone_eigvec(a, tol=1e-8, max_iter=200_000):
    """Nonnegative eigenvector for the spectral radius of a nonnegative
    matrix, normalized to sum 1.

    Power iteration with exact integer iterates started from the all-ones
    vector; the iteration matrix is A + I, which has the same eigenvectors
    and shifts the dominant eigenvalue by one, so periodic cone maps (for
    example coordinate swaps) still converge.  Convergence is tested in
    floats against the residual ||A v - lambda v||_inf.
    """
    a = as_matrix(a)
    if any(x < 0 for row in a.entries for x in row):
        raise ConeNotPreserved("matrix has a negative entry")
    r = a.r
    v = [1] * r
    for _ in range(max_iter):
        av = a.mat_vec(v)
        s = sum(v)
        lam = sum(av) / s
        vf = [x / s for x in v]
        resid = max(abs(num / s - lam * x) for num, x in zip(av, vf))
        if resid <= tol * max(1.0, abs(lam)):
            return tuple(vf), lam
        w = [x + y for x, y in zip(av, v)]  # (A + I) v
        g = 0
        for x in w:
            g = math.gcd(g, x)
        v = [x // g for x in w]
    raise ResourceCapExceeded("power iteration did not converge")


def submult_check(norms, c) -> bool:
    """True iff norms[m+n] <= c * norms[m] * norms[n] whenever recorded.

    norms is indexed from 1 (norms[0] is the n = 1 entry).  Comparison is
    exact: integer inputs and float c are promoted to Fractions.
    """
    cf = Fraction(c)
    vals = [Fraction(x) for x in norms]
    top = len(vals)
    for m in range(1, top + 1):
        for n in range(m, top - m + 1):
            if vals[m + n - 1] > cf * vals[m - 1] * vals[n - 1]:
                return False
    return True


class FeketeLimit(NamedTuple):
    estimate: float
    certified: bool


def fekete_limit(seq, submultiplicative: Optional[bool] = None) -> FeketeLimit:
    """min over n of seq[n]^(1/n), flagged certified when the sequence is
    submultiplicative with constant 1 (then the minimum bounds the limit
    from above)."""
    if not seq:
        raise ContractViolation("empty sequence")
    if any(x <= 0 for x in seq):
        raise ContractViolation("sequence entries must be positive")
    if submultiplicative is None:
        submultiplicative = submult_check(seq, 1)
    est = min(math.exp(math.log(x) / n) for n, x in enumerate(seq, start=1))
    return FeketeLimit(estimate=est, certified=bool(submultiplicative))
