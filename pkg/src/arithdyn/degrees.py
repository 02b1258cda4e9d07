"""Estimators over orbit height data.

This module turns exact orbit heights into the toolkit's headline numbers:
arithmetic-degree estimates from n-th roots of clamped heights, the
consistency check of those estimates against certified dynamical-degree
upper bounds, growth-constant profiles for the bound
h+(f^n P) <= C (delta + eps)^n h+(P), canonical heights with certified
truncation error, the orbit counting function, and the sqrt-step recursion
bound checker.

Canonical heights come in three modes and the mode is part of the result:

* ``certified_power``: coordinate permutation-power maps multiply heights
  exactly, so the limit is reached at n = 0 with error radius zero.
* ``certified_p1``: for a degree-d morphism of P^1 the one-step height
  error |h(f Q) - d h(Q)| is bounded by an explicitly computed constant
  (an upper bound from the coefficients, a lower bound from the Bezout
  cofactors of the Sylvester matrix), giving the truncation bound
  C_step * beta^(-n) / (beta - 1) by telescoping.
* ``heuristic``: any beta > 1 with an observed step-error constant,
  honestly labeled as uncertified.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (ContractViolation, IndeterminatePoint, NonMorphism,
                     ResourceCapExceeded)
from .heights import ProjPointQ, normalize, weil_height
from .projmaps import (OrbitRecord, RationalMapPN, map_evaluate, orbit,
                       sylvester_resultant)

_SLACK = 1e-9


# ---------------------------------------------------------------------------
# height sequences


@dataclass(frozen=True)
class HeightSequence:
    """Heights of an orbit, n = 0..nmax.

    hplus_values are clamped below by 1; heights keeps the raw values for
    the counting function.  cycle = (preperiod, period) is set when the
    orbit was certified finite by exact point repetition, in which case the
    arithmetic degree is exactly 1.
    """

    label: str
    hplus_values: tuple
    heights: Optional[tuple] = None
    cycle: Optional[tuple] = None

    def __post_init__(self):
        if any(v < 1.0 for v in self.hplus_values):
            raise ContractViolation("h+ values must be >= 1")

    def __len__(self):
        return len(self.hplus_values)


def heights_from_orbit(record: OrbitRecord) -> HeightSequence:
    raw = tuple(h.value for h in record.heights)
    cycle = None
    term = record.terminated_by
    if term.kind == "cycle_detected":
        cycle = (term.preperiod, term.period)
    return HeightSequence(label=record.label,
                          hplus_values=tuple(max(v, 1.0) for v in raw),
                          heights=raw,
                          cycle=cycle)


def heights_from_values(values, label="", cycle=None) -> HeightSequence:
    vals = tuple(float(v) for v in values)
    return HeightSequence(label=label,
                          hplus_values=tuple(max(v, 1.0) for v in vals),
                          heights=vals,
                          cycle=cycle)


# ---------------------------------------------------------------------------
# arithmetic degree


@dataclass(frozen=True)
class ArithDegreeEstimate:
    """Tail window estimates of the height growth exponent.

    upper_est and lower_est are the max and min of h_n^(1/n) over the tail
    window; exact = True marks the finite-orbit case where the limit is 1
    with no estimation at all.
    """

    upper_est: float
    lower_est: float
    tail_start: int
    converged: bool
    exact: bool = False


def arithdeg_estimate(hs: HeightSequence, tail_fraction=0.5,
                      spread_tol=0.05, root_offset=0) -> ArithDegreeEstimate:
    """Estimate the arithmetic degree from h+ values.

    A finite orbit (cycle flag) short-circuits to the exact answer 1.
    Otherwise the last ``tail_fraction`` of the sequence is used; early
    terms carry large 1/n biases and are deliberately ignored.

    root_offset = k takes the (n + k)-th root of the n-th height: use it
    when the sequence is known to start k steps into a longer orbit, so
    the estimate targets the same limit as the unshifted one.
    """
    if hs.cycle is not None:
        return ArithDegreeEstimate(upper_est=1.0, lower_est=1.0,
                                   tail_start=0, converged=True, exact=True)
    top = len(hs) - 1
    if top < 4:
        raise ContractViolation("height sequence too short (need nmax >= 4)")
    if not 0 < tail_fraction <= 1:
        raise ContractViolation("tail_fraction must be in (0, 1]")
    count = max(1, math.ceil(top * tail_fraction))
    tail_start = max(1, top - count + 1)
    roots = [math.exp(math.log(hs.hplus_values[n]) / (n + root_offset))
             for n in range(tail_start, top + 1)]
    upper, lower = max(roots), min(roots)
    return ArithDegreeEstimate(upper_est=upper, lower_est=lower,
                               tail_start=tail_start,
                               converged=(upper - lower) <= spread_tol)


def tail_invariance_check(hs_p: HeightSequence, hs_fk: HeightSequence, k=1,
                          tol=0.05, tail_fraction=0.5) -> bool:
    """True iff the estimates for P and for f^k(P) agree within tol.

    The heights of f^k(P) are h(f^(n+k) P), so their estimate uses the
    (n + k)-th root; both estimators then target one limit and the check
    is meaningful at desk-scale n.
    """
    a = arithdeg_estimate(hs_p, tail_fraction)
    b = arithdeg_estimate(hs_fk, tail_fraction, root_offset=k)
    return max(abs(a.upper_est - b.upper_est),
               abs(a.lower_est - b.lower_est)) <= tol


@dataclass(frozen=True)
class InequalityReport:
    """Outcome of the one-sided check  alpha_lower <= delta_upper + tol."""

    consistent: bool
    margin: float
    alpha_lower: float
    alpha_upper: float
    delta_upper: float
    tol: float


def fundamental_inequality_check(alpha: ArithDegreeEstimate, delta_upper,
                                 tol=1e-6) -> InequalityReport:
    """Flag VIOLATION only when the lower estimate exceeds the certified
    dynamical-degree upper bound; an estimate sitting below is always
    consistent."""
    delta_upper = float(delta_upper)
    violation = alpha.lower_est > delta_upper + tol
    return InequalityReport(consistent=not violation,
                            margin=delta_upper - alpha.lower_est,
                            alpha_lower=alpha.lower_est,
                            alpha_upper=alpha.upper_est,
                            delta_upper=delta_upper,
                            tol=tol)


# ---------------------------------------------------------------------------
# growth constant fitting


@dataclass(frozen=True)
class GrowthFit:
    """Smallest constant C with h+(f^n P) <= C (delta + eps)^n h+(P) over
    the observed range, plus the running-max profile used to judge
    non-divergence."""

    epsilon: float
    delta_used: float
    C_fit: float
    n_range: tuple
    profile: tuple


def growth_fit(hs: HeightSequence, delta_upper, epsilon) -> GrowthFit:
    if epsilon <= 0:
        raise ContractViolation("epsilon must be positive")
    if len(hs) < 1:
        raise ContractViolation("empty height sequence")
    rate = float(delta_upper) + float(epsilon)
    log_rate = math.log(rate)
    h0 = hs.hplus_values[0]
    profile = []
    best = 0.0
    for n, h in enumerate(hs.hplus_values):
        log_ratio = math.log(h) - n * log_rate - math.log(h0)
        try:
            ratio = math.exp(log_ratio)
        except OverflowError:
            ratio = math.inf
        best = max(best, ratio)
        profile.append(best)
    return GrowthFit(epsilon=float(epsilon), delta_used=float(delta_upper),
                     C_fit=profile[-1], n_range=(0, len(hs) - 1),
                     profile=tuple(profile))


def growth_profile_nondiverging(profile, factor=2.0) -> bool:
    """The plateau test: the final running max must not exceed ``factor``
    times its value at the midpoint."""
    if len(profile) < 2:
        return True
    mid = profile[len(profile) // 2]
    return profile[-1] <= factor * mid


# ---------------------------------------------------------------------------
# canonical heights


@dataclass(frozen=True)
class CanonicalHeightResult:
    """A canonical height with certified or sampled truncation error.

    In the certified modes the true value lies within error_radius of
    value by the telescoping bound; heuristic results are labeled so no
    caller can mistake them for certificates.  step_constant is the bound
    on |h(f Q) - beta h(Q)| that produced the radius, and heights is the
    height sequence used (handy for follow-up estimates).
    """

    value: float
    error_radius: float
    beta: float
    n_used: int
    mode: str
    step_constant: float
    heights: tuple = ()


def power_like_degree(f: RationalMapPN) -> Optional[int]:
    """deg f when every coordinate is +-(one variable)^d with the variables
    forming a permutation, else None.  Such maps multiply heights exactly."""
    d = f.degree
    targets = []
    for p in f.polys:
        if len(p.terms) != 1:
            return None
        (exps, coeff), = p.items()
        if abs(coeff) != 1:
            return None
        hot = [i for i, e in enumerate(exps) if e]
        if len(hot) != 1 or exps[hot[0]] != d:
            return None
        targets.append(hot[0])
    if sorted(targets) != list(range(f.dim + 1)):
        return None
    return d


def _binary_coeff_list(p, d):
    """Low-to-high coefficients of the dehomogenization F(t, 1)."""
    out = [0] * (d + 1)
    for (e0, _e1), c in p.items():
        out[e0] = c
    return out


def _solve_bezout(pc, qc, d, rhs):
    """Solve u p + v q = rhs with deg u, v <= d - 1, exactly."""
    size = 2 * d
    rows = []
    for k in range(size):
        row = []
        for j in range(d):
            row.append(Fraction(pc[k - j]) if 0 <= k - j <= d else Fraction(0))
        for j in range(d):
            row.append(Fraction(qc[k - j]) if 0 <= k - j <= d else Fraction(0))
        rows.append(row)
    vec = [Fraction(rhs)] + [Fraction(0)] * (size - 1)
    # Gaussian elimination with partial pivoting (exact)
    for col in range(size):
        piv = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if piv is None:
            raise NonMorphism("Sylvester system is singular")
        rows[col], rows[piv] = rows[piv], rows[col]
        vec[col], vec[piv] = vec[piv], vec[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        vec[col] *= inv
        for r in range(size):
            if r != col and rows[r][col]:
                fac = rows[r][col]
                rows[r] = [x - fac * y for x, y in zip(rows[r], rows[col])]
                vec[r] -= fac * vec[col]
    u = vec[:d]
    v = vec[d:]
    # verify the identity exactly before trusting the bound
    conv = [Fraction(0)] * (2 * d + 1)
    for j, uj in enumerate(u):
        for k, pk in enumerate(pc):
            conv[j + k] += uj * pk
    for j, vj in enumerate(v):
        for k, qk in enumerate(qc):
            conv[j + k] += vj * qk
    target = [Fraction(rhs)] + [Fraction(0)] * (2 * d)
    if conv != target:
        raise AssertionError("Bezout cofactor identity failed verification")
    return u, v


def p1_step_constant(f: RationalMapPN):
    """Certified bound for |h(f Q) - d h(Q)| over all Q in P^1(Q).

    Upper direction from coefficient size: each coordinate has at most
    d + 1 monomials.  Lower direction from the Bezout cofactors u, v with
    u F0 + v F1 = Res in both affine charts: evaluating at coprime (a, b)
    shows gcd(F0(a,b), F1(a,b)) divides Res and
    max |F_i(a,b)| >= |Res| M^d / (2 d maxcof).
    Returns (C_step, C_up, C_low, |Res|).
    """
    if f.dim != 1:
        raise ContractViolation("step constant is for maps of P^1")
    d = f.degree
    res = sylvester_resultant(f.polys[0], f.polys[1])
    if res == 0:
        raise NonMorphism("coordinates share a root; not a morphism")
    c_up = math.log((d + 1) * f.max_abs_coeff())
    pc = _binary_coeff_list(f.polys[0], d)
    qc = _binary_coeff_list(f.polys[1], d)
    maxcof = Fraction(0)
    u, v = _solve_bezout(pc, qc, d, res)
    maxcof = max([abs(x) for x in u + v] + [maxcof])
    pc_rev = list(reversed(pc))
    qc_rev = list(reversed(qc))
    u2, v2 = _solve_bezout(pc_rev, qc_rev, d, res)
    maxcof = max([abs(x) for x in u2 + v2] + [maxcof])
    c_low = math.log(2 * d * float(maxcof)) if maxcof > 0 else 0.0
    c_step = max(c_up, c_low, 0.0)
    return c_step, c_up, c_low, abs(res)


def p1_height_walk(f: RationalMapPN, start: ProjPointQ, nmax):
    """Heights h(f^n P) for n = 0..nmax for a morphism of P^1.

    Coordinates are tracked as unit-scaled floats plus a log height, and
    the gcd removed at each step is computed exactly: it divides the
    resultant R, so residues modulo R^k suffice.  The returned heights
    match the exact orbit to float precision while the integer coordinates
    themselves would grow doubly exponentially.
    """
    if f.dim != 1:
        raise ContractViolation("height walk is for maps of P^1")
    d = f.degree
    res = abs(sylvester_resultant(f.polys[0], f.polys[1]))
    if res == 0:
        raise NonMorphism("not a morphism of P^1")
    pt = normalize(start.coords)
    a, b = pt.coords
    s = max(abs(a), abs(b))
    x, y = a / s, b / s
    h = math.log(s)
    heights = [h]
    f0 = [(float(c), e[0], e[1]) for e, c in f.polys[0].items()]
    f1 = [(float(c), e[0], e[1]) for e, c in f.polys[1].items()]
    track = res > 1
    if track:
        modulus = res ** (nmax + 2)
        u, w = a % modulus, b % modulus
        p0 = list(f.polys[0].items())
        p1 = list(f.polys[1].items())
    for _ in range(nmax):
        g = 1
        if track:
            v0 = sum(c * pow(u, e0, modulus) * pow(w, e1, modulus)
                     for (e0, e1), c in p0) % modulus
            v1 = sum(c * pow(u, e0, modulus) * pow(w, e1, modulus)
                     for (e0, e1), c in p1) % modulus
            g = math.gcd(res, math.gcd(v0 % res, v1 % res))
            modulus //= res
            u = (v0 // g) % modulus
            w = (v1 // g) % modulus
        fx = sum(c * x ** e0 * y ** e1 for c, e0, e1 in f0)
        fy = sum(c * x ** e0 * y ** e1 for c, e0, e1 in f1)
        m = max(abs(fx), abs(fy))
        h = d * h + math.log(m) - math.log(g)
        heights.append(h)
        x, y = fx / m, fy / m
    return heights


def canonical_height(f: RationalMapPN, point, beta, nmax=32,
                     mode="certified") -> CanonicalHeightResult:
    """Canonical height of a point with an explicit truncation error.

    certified mode requires either a permutation-power map (exact, radius
    zero) or a morphism of P^1 with beta equal to its degree; anything
    else must be requested as heuristic and is labeled accordingly.
    """
    beta_f = float(beta)
    if beta_f <= 1:
        raise ContractViolation("beta must exceed 1")
    if not 1 <= nmax <= 500:
        raise ContractViolation("nmax must be in [1, 500] (float heights"
                                " overflow beyond that)")
    pt = normalize(point.coords if isinstance(point, ProjPointQ) else point)
    if mode not in ("certified", "heuristic"):
        raise ContractViolation(f"unknown mode {mode!r}")

    if mode == "certified":
        d_power = power_like_degree(f)
        if d_power is not None and d_power >= 2 and Fraction(beta) == d_power:
            h0 = weil_height(pt).value
            return CanonicalHeightResult(value=h0, error_radius=0.0,
                                         beta=float(d_power), n_used=0,
                                         mode="certified_power",
                                         step_constant=0.0,
                                         heights=(h0,))
        if f.dim != 1:
            raise NonMorphism(
                "certified canonical heights need a permutation-power map"
                " or a morphism of P^1")
        if Fraction(beta) != f.degree:
            raise ContractViolation(
                "certified mode on P^1 requires beta = deg f")
        c_step, _c_up, _c_low, _res = p1_step_constant(f)
        hs = p1_height_walk(f, pt, nmax)
        value = hs[-1] * beta_f ** (-nmax)
        radius = c_step * beta_f ** (-nmax) / (beta_f - 1)
        return CanonicalHeightResult(value=value, error_radius=radius,
                                     beta=beta_f, n_used=nmax,
                                     mode="certified_p1",
                                     step_constant=c_step,
                                     heights=tuple(hs))

    rec = orbit(f, pt, nmax, label="canht")
    hs = [h.value for h in rec.heights]
    term = rec.terminated_by
    if term.kind == "cycle_detected":
        # heights repeat exactly; continue the cycle so the partial values
        # beta^-n h_n keep shrinking toward the true limit 0
        cycle_vals = hs[term.preperiod:]
        while len(hs) - 1 < nmax:
            hs.append(cycle_vals[(len(hs) - term.preperiod) %
                                 len(cycle_vals)])
    n_used = len(hs) - 1
    if n_used < 1:
        raise ContractViolation("orbit too short for a heuristic estimate")
    c_obs = max(abs(hs[k + 1] - beta_f * hs[k]) for k in range(n_used))
    value = hs[-1] * beta_f ** (-n_used)
    radius = c_obs * beta_f ** (-n_used) / (beta_f - 1)
    return CanonicalHeightResult(value=value, error_radius=radius,
                                 beta=beta_f, n_used=n_used, mode="heuristic",
                                 step_constant=c_obs, heights=tuple(hs))


@dataclass(frozen=True)
class CanHtChecks:
    """Functional-equation checks for a canonical height computation."""

    transform_ok: bool
    transform_gap: float
    transform_allow: float
    compare_ok: bool
    compare_gap: float
    compare_allow: float
    alpha_ok: Optional[bool]
    alpha_upper: Optional[float]
    passed: bool


def canht_functional_checks(f: RationalMapPN, point, beta=None, nmax=32,
                            mode="certified", alpha_tol=0.1,
                            tail_fraction=0.5) -> CanHtChecks:
    """Verify the canonical-height laws at estimate level.

    Checks, with radii combined by the transformation law:
    (1) |hhat(f P) - beta hhat(P)| within combined error radii;
    (2) |hhat(P) - h(P)| <= step_constant / (beta - 1);
    (3) when hhat(P) is certifiably positive, the arithmetic-degree upper
        estimate reaches beta - alpha_tol.
    """
    if beta is None:
        beta = f.degree
    beta_f = float(beta)
    pt = normalize(point.coords if isinstance(point, ProjPointQ) else point)
    r_p = canonical_height(f, pt, beta, nmax=nmax, mode=mode)
    fp = map_evaluate(f, pt)
    r_fp = canonical_height(f, fp, beta, nmax=nmax, mode=mode)

    gap1 = abs(r_fp.value - beta_f * r_p.value)
    allow1 = r_fp.error_radius + beta_f * r_p.error_radius + _SLACK
    ok1 = gap1 <= allow1

    h0 = weil_height(pt).value
    gap2 = abs(r_p.value - h0)
    allow2 = r_p.step_constant / (beta_f - 1) + _SLACK
    ok2 = gap2 <= allow2

    alpha_ok = None
    alpha_upper = None
    if r_p.value - r_p.error_radius > 0 and len(r_p.heights) >= 6:
        hs = heights_from_values(r_p.heights, label="canht-orbit")
        est = arithdeg_estimate(hs, tail_fraction=tail_fraction)
        alpha_upper = est.upper_est
        alpha_ok = est.upper_est >= beta_f - alpha_tol

    passed = ok1 and ok2 and alpha_ok is not False
    return CanHtChecks(transform_ok=ok1, transform_gap=gap1,
                       transform_allow=allow1, compare_ok=ok2,
                       compare_gap=gap2, compare_allow=allow2,
                       alpha_ok=alpha_ok, alpha_upper=alpha_upper,
                       passed=passed)


@dataclass(frozen=True)
class PreperiodicReport:
    kind: str  # preperiodic | wandering | undecided
    period: Optional[int] = None
    preperiod: Optional[int] = None
    detail: str = ""


def preperiodic_detect(f: RationalMapPN, point, nmax=64, mode="certified",
                       cycle_search_nmax=10,
                       cycle_search_bits=1 << 19) -> PreperiodicReport:
    """Classify a point as preperiodic, wandering, or undecided.

    Exact cycle detection wins outright; the exact search is budgeted
    (orbit coordinates of wandering points grow doubly exponentially, so
    the search is capped by depth and coordinate size).  Otherwise a
    certified canonical height with value - radius > 0 certifies
    wandering; with no usable certificate the honest answer is undecided.
    """
    pt = normalize(point.coords if isinstance(point, ProjPointQ) else point)
    term = None
    try:
        rec = orbit(f, pt, min(nmax, cycle_search_nmax),
                    max_coord_bits=cycle_search_bits, label="preperiodic")
        term = rec.terminated_by
    except IndeterminatePoint:
        return PreperiodicReport(kind="undecided",
                                 detail="orbit left the domain of f")
    except ResourceCapExceeded:
        pass  # heights exploded; certainly no small cycle, fall through
    if term is not None and term.kind == "cycle_detected":
        return PreperiodicReport(kind="preperiodic", period=term.period,
                                 preperiod=term.preperiod,
                                 detail="exact cycle")
    if term is not None and term.kind == "hit_indeterminacy":
        return PreperiodicReport(kind="undecided",
                                 detail="orbit hit the indeterminacy locus")
    if mode == "certified":
        beta = f.degree
        if beta > 1:
            try:
                r = canonical_height(f, pt, beta, nmax=nmax, mode="certified")
            except (NonMorphism, ContractViolation):
                r = None
            if r is not None and r.value - r.error_radius > 0:
                return PreperiodicReport(
                    kind="wandering",
                    detail=f"hhat = {r.value:.6g} +- {r.error_radius:.2g}")
    return PreperiodicReport(kind="undecided",
                             detail="bounded-height search exhausted")


# ---------------------------------------------------------------------------
# counting function


@dataclass(frozen=True)
class CountRow:
    B: float
    count: int
    ratio: float


@dataclass(frozen=True)
class CountingReport:
    """Counts of orbit points of height at most B.

    B is compared against heights directly, so it lives on the log-height
    scale; the ratio column count / log B approaches 1 / log(alpha) for
    wandering orbits with alpha > 1.
    """

    rows: tuple
    warning: Optional[str] = None


def counting_function(hs: HeightSequence, b_values) -> CountingReport:
    vals = hs.heights if hs.heights is not None else hs.hplus_values
    warning = None
    if hs.cycle is not None:
        warning = "orbit is finite (alpha = 1); the counting limit is infinite"
    else:
        try:
            est = arithdeg_estimate(hs)
            if est.upper_est <= 1.0 + 1e-9:
                warning = ("alpha estimate is 1; the counting limit"
                           " is infinite")
        except ContractViolation:
            pass
    rows = []
    for b in sorted(float(b) for b in b_values):
        if b <= 1.0:
            raise ContractViolation("counting bounds must exceed 1")
        count = sum(1 for v in vals if v <= b)
        rows.append(CountRow(B=b, count=count, ratio=count / math.log(b)))
    if not warning and vals and max(vals) <= rows[-1].B:
        warning = ("largest B exceeds every recorded height; counts are"
                   " truncated by nmax")
    return CountingReport(rows=tuple(rows), warning=warning)


# ---------------------------------------------------------------------------
# sqrt-step recursion bound


@dataclass(frozen=True)
class RecursionBoundReport:
    applicable: bool
    holds: Optional[bool]
    first_failure: Optional[int] = None


def recursion_bound_check(a, c, hseq) -> RecursionBoundReport:
    """Check that a sqrt-perturbed geometric recursion obeys its closed bound.

    Hypothesis: h(n+1) <= a h(n) + c sqrt(h(n)) for all recorded steps,
    with a, c >= 1 and h >= 0.  When the hypothesis holds, the sequence
    must satisfy h(n) <= a^n (h(0) + (2 sqrt(2) c)^n sqrt(h(0))); a
    hypothesis violation makes the bound inapplicable, not false.
    """
    a = float(a)
    c = float(c)
    if a < 1 or c < 1:
        raise ContractViolation("need a >= 1 and c >= 1")
    h = [float(x) for x in hseq]
    if any(x < 0 for x in h):
        raise ContractViolation("heights must be nonnegative")
    if len(h) < 2:
        raise ContractViolation("need at least two values")
    for k in range(len(h) - 1):
        allowed = a * h[k] + c * math.sqrt(h[k])
        if h[k + 1] > allowed * (1 + 1e-12) + 1e-12:
            return RecursionBoundReport(applicable=False, holds=None,
                                        first_failure=k + 1)
    h0 = h[0]
    sq = math.sqrt(h0)
    growth = 2 * math.sqrt(2) * c
    for n, val in enumerate(h):
        try:
            bound = a ** n * (h0 + growth ** n * sq)
        except OverflowError:
            continue
        if math.isinf(bound):
            continue
        if val > bound * (1 + 1e-12) + 1e-12:
            return RecursionBoundReport(applicable=True, holds=False,
                                        first_failure=n)
    return RecursionBoundReport(applicable=True, holds=True)
