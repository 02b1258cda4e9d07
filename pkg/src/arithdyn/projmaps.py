"""Rational self-maps of projective space P^N over Q.

A map is N+1 homogeneous integer polynomials of one common degree with no
common factor; the constructor divides out any polynomial gcd and integer
content and fixes a sign, so each rational map has one canonical
representation.  Composition substitutes one map into another and again
divides out the common factor; the degree of the result may drop below the
product of the degrees, and the recorded drops form the degree sequence
used for dynamical-degree upper bounds.
"""

import json
from dataclasses import dataclass
from math import gcd as _intgcd
from typing import Optional

from .errors import (ContractViolation, IndeterminatePoint, NonMorphism,
                     ResourceCapExceeded, UnsupportedDimension)
from .heights import ProjPointQ, normalize, weil_height
from .polynomials import (MultiPoly, format_poly, gcd_many, parse_poly,
                          poly_compose, poly_divmod_exact, poly_eval_int)
from . import spectral


class RationalMapPN:
    """A dominant rational self-map of P^N in canonical coprime form."""

    __slots__ = ("dim", "polys", "name")

    def __init__(self, polys, name=None):
        polys = tuple(polys)
        if len(polys) < 2:
            raise ContractViolation("need at least two coordinate polynomials")
        nv = polys[0].nvars
        if nv != len(polys):
            raise ContractViolation(
                f"{len(polys)} coordinates need polynomials in {len(polys)}"
                f" variables, got {nv}")
        if all(p.is_zero() for p in polys):
            raise ContractViolation("all coordinate polynomials are zero")
        degs = {p.degree for p in polys if not p.is_zero()}
        if len(degs) != 1:
            raise ContractViolation(
                f"coordinates have mixed degrees {sorted(degs)}")
        g = gcd_many(polys)
        if not g.is_constant():
            polys = tuple(MultiPoly.zero(nv) if p.is_zero()
                          else poly_divmod_exact(p, g) for p in polys)
        # strip the common integer content and fix a global sign
        content = 0
        for p in polys:
            for c in p.terms.values():
                content = _intgcd(content, abs(c))
                if content == 1:
                    break
            if content == 1:
                break
        lead_sign = 1
        for p in polys:
            if not p.is_zero():
                lead_sign = 1 if p.leading_coeff() > 0 else -1
                break
        scale = lead_sign * content
        if scale != 1:
            polys = tuple(MultiPoly(p.nvars,
                                    {k: c // scale for k, c in p.terms.items()},
                                    p.degree) for p in polys)
        deg = next(p.degree for p in polys if not p.is_zero())
        if deg < 1:
            raise ContractViolation(
                "map reduces to a constant map (degree 0)")
        object.__setattr__(self, "dim", len(polys) - 1)
        object.__setattr__(self, "polys", polys)
        object.__setattr__(self, "name", name)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMapPN is immutable")

    @property
    def degree(self):
        return next(p.degree for p in self.polys if not p.is_zero())

    def max_abs_coeff(self):
        return max(p.max_abs_coeff() for p in self.polys)

    def __eq__(self, other):
        if not isinstance(other, RationalMapPN):
            return NotImplemented
        return self.dim == other.dim and self.polys == other.polys

    def __hash__(self):
        return hash((self.dim, self.polys))

    def __repr__(self):
        names = default_varnames(self.dim)
        body = " : ".join(format_poly(p, names) for p in self.polys)
        label = self.name or "map"
        return f"<{label} [{body}]>"

    @classmethod
    def from_strings(cls, poly_texts, varnames=None, name=None):
        if varnames is None:
            varnames = default_varnames(len(poly_texts) - 1)
        return cls([parse_poly(t, varnames) for t in poly_texts], name=name)

    @classmethod
    def identity(cls, dim):
        nv = dim + 1
        return cls([MultiPoly.variable(nv, i) for i in range(nv)],
                   name="identity")


def default_varnames(dim):
    base = ["x", "y", "z", "w"]
    if dim + 1 <= len(base):
        return base[:dim + 1]
    return [f"x{i}" for i in range(dim + 1)]


def map_evaluate(f: RationalMapPN, point: ProjPointQ) -> ProjPointQ:
    """Evaluate exactly and renormalize.

    Raises IndeterminatePoint when every coordinate polynomial vanishes,
    which is precisely membership in the indeterminacy locus.
    """
    if len(point.coords) != f.dim + 1:
        raise ContractViolation("point and map dimensions differ")
    values = [poly_eval_int(p, point.coords) for p in f.polys]
    if all(v == 0 for v in values):
        raise IndeterminatePoint(point)
    return normalize(values)


def compose_raw(g: RationalMapPN, f: RationalMapPN):
    """Coordinate polynomials of g o f before gcd normalization."""
    if g.dim != f.dim:
        raise ContractViolation("composition of maps of different dimension")
    return [poly_compose(p, f.polys) for p in g.polys]


def compose_normalized(g: RationalMapPN, f: RationalMapPN) -> RationalMapPN:
    """g o f with the common polynomial factor divided out.

    The constructor performs the gcd division, so the result is canonical;
    its degree is at most deg(g) * deg(f) and drops exactly when the raw
    composition acquires a common factor.
    """
    return RationalMapPN(compose_raw(g, f))


@dataclass(frozen=True)
class ResourceCaps:
    """Size limits for iterate computations.

    Exceeding a cap never yields a wrong answer; degree sequences come back
    explicitly truncated and orbit iteration raises ResourceCapExceeded.
    """

    max_terms: int = 200_000
    max_coeff_bits: int = 1_000_000

    def check_map(self, m: RationalMapPN):
        for p in m.polys:
            if len(p.terms) > self.max_terms:
                raise ResourceCapExceeded(
                    f"iterate has {len(p.terms)} terms (cap {self.max_terms})")
            if p.max_abs_coeff().bit_length() > self.max_coeff_bits:
                raise ResourceCapExceeded("iterate coefficients exceed bit cap")


@dataclass(frozen=True)
class DegreeSequence:
    """Degrees of the normalized iterates f^n for n = 1..nmax."""

    label: str
    degs: tuple
    truncated: bool = False

    def __getitem__(self, n):
        if n < 1 or n > len(self.degs):
            raise IndexError(n)
        return self.degs[n - 1]

    def __len__(self):
        return len(self.degs)


def iterates(f: RationalMapPN, nmax, caps: ResourceCaps = ResourceCaps()):
    """[f, f^2, ..., f^nmax] computed by left-composing f, with caching.

    Stops early (returning the completed prefix) when a cap is exceeded.
    """
    if nmax < 1:
        raise ContractViolation("nmax must be >= 1")
    chain = [f]
    for _ in range(nmax - 1):
        try:
            nxt = compose_normalized(f, chain[-1])
            caps.check_map(nxt)
        except ResourceCapExceeded:
            break
        chain.append(nxt)
    return chain


def degree_sequence(f: RationalMapPN, nmax,
                    caps: ResourceCaps = ResourceCaps()) -> DegreeSequence:
    """deg(f^n) for n = 1..nmax via cached normalized composition."""
    chain = iterates(f, nmax, caps)
    return DegreeSequence(label=f.name or repr(f),
                          degs=tuple(m.degree for m in chain),
                          truncated=len(chain) < nmax)


@dataclass(frozen=True)
class DynDegEstimate:
    """Certified upper bounds for the dynamical degree from a degree sequence.

    upper_bounds[n-1] = degs[n]^(1/n).  When the recorded degrees are
    submultiplicative with constant 1 (they always are on P^N), the minimum
    is a certified upper bound for the limit; the last-ratio column is a
    labeled heuristic only, never a bound.
    """

    upper_bounds: tuple
    certified_upper: float
    certified: bool
    ratio_estimate: Optional[float]


def dyndeg_estimate(seq: DegreeSequence) -> DynDegEstimate:
    if len(seq) < 1:
        raise ContractViolation("empty degree sequence")
    degs = seq.degs
    bounds = tuple(d ** (1.0 / n) for n, d in enumerate(degs, start=1))
    certified = spectral.submult_check(degs, 1.0)
    ratio = None
    if len(degs) >= 2:
        ratio = degs[-1] / degs[-2]
    return DynDegEstimate(upper_bounds=bounds,
                          certified_upper=min(bounds),
                          certified=certified,
                          ratio_estimate=ratio)


@dataclass(frozen=True)
class OrbitTermination:
    """Why orbit iteration stopped.

    kind is one of ``reached_nmax``, ``hit_indeterminacy`` (step records
    where the map was undefined) and ``cycle_detected`` (with exact period
    and preperiod from normalized-point equality).
    """

    kind: str
    step: Optional[int] = None
    period: Optional[int] = None
    preperiod: Optional[int] = None


@dataclass(frozen=True)
class OrbitRecord:
    """Exact orbit points P, f(P), ... with their heights."""

    points: tuple
    heights: tuple
    terminated_by: OrbitTermination
    label: str = ""

    def __len__(self):
        return len(self.points)


def orbit(f: RationalMapPN, start: ProjPointQ, nmax,
          max_coord_bits=None, label="") -> OrbitRecord:
    """Iterate map_evaluate from start, recording exact points and heights.

    Stops early on indeterminacy or on exact repetition of a normalized
    point (cycle detection cannot give false positives since the normal
    form is canonical).  max_coord_bits, when set, raises
    ResourceCapExceeded if coordinates outgrow the budget.
    """
    if nmax < 0:
        raise ContractViolation("nmax must be >= 0")
    pt = normalize(start.coords)
    points = [pt]
    heights = [weil_height(pt)]
    seen = {pt.coords: 0}
    term = OrbitTermination(kind="reached_nmax")
    for step in range(nmax):
        try:
            nxt = map_evaluate(f, points[-1])
        except IndeterminatePoint:
            term = OrbitTermination(kind="hit_indeterminacy", step=step)
            break
        if max_coord_bits is not None:
            if max(abs(c).bit_length() for c in nxt.coords) > max_coord_bits:
                raise ResourceCapExceeded(
                    f"orbit coordinates exceed {max_coord_bits} bits at"
                    f" step {step + 1}")
        prev = seen.get(nxt.coords)
        if prev is not None:
            term = OrbitTermination(kind="cycle_detected",
                                    period=len(points) - prev,
                                    preperiod=prev)
            break
        seen[nxt.coords] = len(points)
        points.append(nxt)
        heights.append(weil_height(nxt))
    return OrbitRecord(points=tuple(points), heights=tuple(heights),
                       terminated_by=term, label=label)


def bareiss_determinant(rows):
    """Exact integer determinant by fraction-free Gaussian elimination."""
    m = [list(map(int, r)) for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ContractViolation("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def binary_form_coeffs(p: MultiPoly):
    """Coefficient list [a_d, ..., a_0] of a binary form, highest power of
    the first variable first."""
    if p.nvars != 2:
        raise ContractViolation("not a binary form")
    if p.is_zero():
        raise ContractViolation("zero form is degenerate")
    d = p.degree
    coeffs = [0] * (d + 1)
    for (e0, _e1), c in p.items():
        coeffs[d - e0] = c
    return coeffs


def sylvester_matrix(F0: MultiPoly, F1: MultiPoly):
    """The 2d x 2d Sylvester matrix of two binary forms of equal degree d."""
    if F0.nvars != 2 or F1.nvars != 2:
        raise ContractViolation("Sylvester matrix needs binary forms")
    if F0.is_zero() or F1.is_zero():
        raise ContractViolation("zero form is degenerate")
    d = F0.degree
    if F1.degree != d or d < 1:
        raise ContractViolation("forms must share one degree d >= 1")
    a = binary_form_coeffs(F0)
    b = binary_form_coeffs(F1)
    size = 2 * d
    rows = []
    for shift in range(d):
        rows.append([0] * shift + a + [0] * (size - shift - d - 1))
    for shift in range(d):
        rows.append([0] * shift + b + [0] * (size - shift - d - 1))
    return rows


def sylvester_resultant(F0: MultiPoly, F1: MultiPoly) -> int:
    """Exact resultant of two binary forms of one degree d >= 1."""
    return bareiss_determinant(sylvester_matrix(F0, F1))


def is_morphism_p1(f: RationalMapPN) -> bool:
    """True iff the two coordinates of a self-map of P^1 share no root."""
    if f.dim != 1:
        raise UnsupportedDimension(
            "morphism certification is implemented for P^1 only")
    return sylvester_resultant(f.polys[0], f.polys[1]) != 0


def require_morphism_p1(f: RationalMapPN):
    if not is_morphism_p1(f):
        raise NonMorphism("the map has a common root on P^1")


# ---------------------------------------------------------------------------
# map-spec files


def serialize_map_spec(f: RationalMapPN, varnames=None) -> dict:
    """Canonical JSON-ready dict for a projective map.

    Coefficients are decimal strings so arbitrarily wide integers survive
    any JSON reader; terms are listed in descending graded-lex order so the
    file round-trips byte-identically.
    """
    if varnames is None:
        varnames = default_varnames(f.dim)
    polys = []
    for p in f.polys:
        polys.append([{"c": str(c), "e": list(e)} for e, c in p.items()])
    return {"name": f.name or "", "dim": f.dim,
            "vars": list(varnames), "polys": polys}


def parse_map_spec(data: dict) -> RationalMapPN:
    if "polys" not in data:
        raise ContractViolation("map spec lacks a 'polys' field")
    dim = int(data["dim"])
    nv = dim + 1
    polys = []
    for plist in data["polys"]:
        terms = [(int(t["c"]), tuple(int(x) for x in t["e"])) for t in plist]
        if terms:
            polys.append(MultiPoly.from_terms(nv, terms))
        else:
            polys.append(MultiPoly.zero(nv))
    return RationalMapPN(polys, name=data.get("name") or None)


def write_map_spec(f: RationalMapPN, path, varnames=None, extra=None):
    data = serialize_map_spec(f, varnames)
    if extra:
        data.update(extra)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, sort_keys=True, separators=(",", ": "), indent=1)
        fh.write("\n")


def read_map_spec(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
