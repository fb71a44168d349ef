"""Peripheral trace calculus for the knot family.

For a character with r = tr(ab^-1) and x = tr(a) = tr(b), the word
w = (ab^-1)^n (a^-1 b)^n has trace t = (2 - r)(x^2 - 2 - r) f_n(r)^2 + 2;
this is an exact identity on the whole tr(a) = tr(b) slice of the free
group character variety, and on the intersection characters it collapses
to t = r.  The peripheral system is generated by the meridian a and the
preferred longitude s1 s2^-1 s1^-1 s2 built from the Seifert generators
s1 = w^n and s2 = (ab^-1)^n.

The calculus here computes delta_{d,e} = tr(w^d (ab^-1)^-e) by a pair of
three-term recursions, the trace gamma = tr(s1 s2^-1) = delta_{n,n} in
closed form, and the longitude trace through the commutator trace identity

    tr(P Q^-1 P^-1 Q) = p^2 + q^2 + c^2 - p q c - 2

with p = tr(P), q = tr(Q), c = tr(P Q^-1).  All of it works over any
commutative ring handle: exact rationals, number-field elements, or complex
floats.  Integrality verdicts on the resulting minimal polynomials feed the
boundary-slope detection: a character whose meridian trace is not an
algebraic integer while its longitude trace is one detects an essential
surface of slope 0, and for these knots any connected essential surface of
slope 0 is a genus 1 Seifert surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cheb import f_poly
from .numfield import (
    IntegralityVerdict,
    NFElem,
    integrality_verdict,
    nf_minimal_polynomial,
)
from .ratpoly import UniPoly, frac_str


class VerificationError(RuntimeError):
    """A hard mathematical invariant failed to hold."""


def tr_power(tau, k: int):
    """Trace of M^k for M in SL2 with tr(M) = tau:

    tau * f_k(tau) - 2 * f_{k-1}(tau),  equivalently  f_{k+1} - f_{k-1}.
    """
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"power index must be a nonnegative integer, got {k!r}")
    if k == 0:
        return tau * 0 + 2
    return tau * f_poly(k)(tau) - 2 * f_poly(k - 1)(tau)


def tr_commutator(t1, t2, t12):
    """tr(P Q^-1 P^-1 Q) from t1 = tr(P), t2 = tr(Q), t12 = tr(P Q^-1)."""
    return t1 * t1 + t2 * t2 + t12 * t12 - t1 * t2 * t12 - 2


def _f_at(j: int, value):
    """f_j evaluated in the ring, extended by f_{-1} = -1."""
    if j == -1:
        return -1
    return f_poly(j)(value)


class TraceContext:
    """Trace bookkeeping at one character of the n-th knot group.

    r and x_squared live in a shared commutative ring (Fraction, NFElem of
    one field, or complex); t is derived from them unless supplied.  The
    delta memo table is private to the context, so distinct contexts can be
    used from different threads, but a single context must not be shared.
    """

    def __init__(self, n: int, r, x_squared, t=None):
        if not isinstance(n, int) or n < 2:
            raise ValueError(f"the knot family is indexed by integers n >= 2, got {n!r}")
        self.n = n
        self.r = r
        self.x_squared = x_squared
        fr = f_poly(n)(r)
        if t is None:
            t = (2 - r) * (x_squared - 2 - r) * fr * fr + 2
        self.t = t
        self.delta_11 = (2 - r) * f_poly(n - 1)(r) * fr * (x_squared - 2 - r) + r
        self._memo = {}


def delta(d: int, e: int, ctx: TraceContext):
    """tr(w^d (ab^-1)^-e) by the two-direction recursion.

    Seeds: delta_{0,0} = 2, delta_{d,0} = f_{d+1}(t) - f_{d-1}(t),
    delta_{0,e} = r f_e(r) - 2 f_{e-1}(r), and the closed delta_{1,1};
    then delta_{d,e} = r delta_{d,e-1} - delta_{d,e-2} in e, and
    delta_{d,1} = t delta_{d-1,1} - delta_{d-2,1} in d.
    """
    if not (isinstance(d, int) and isinstance(e, int)) or d < 0 or e < 0:
        raise ValueError(f"delta indices must be nonnegative integers, got ({d}, {e})")
    memo = ctx._memo
    key = (d, e)
    if key in memo:
        return memo[key]
    if e == 0:
        if d == 0:
            val = ctx.r * 0 + 2
        else:
            val = f_poly(d + 1)(ctx.t) - _f_at(d - 1, ctx.t)
    elif d == 0:
        val = tr_power(ctx.r, e)
    elif (d, e) == (1, 1):
        val = ctx.delta_11
    elif e >= 2:
        val = ctx.r * delta(d, e - 1, ctx) - delta(d, e - 2, ctx)
    else:
        val = ctx.t * delta(d - 1, 1, ctx) - delta(d - 2, 1, ctx)
    memo[key] = val
    return val


def gamma_closed(d: int, e: int, ctx: TraceContext):
    """Closed form of delta_{d,e}:

    f_e(r) (f_d(t) delta_{1,1} - r f_{d-1}(t))
        - f_{e-1}(r) (f_{d+1}(t) - f_{d-1}(t)),

    with the f_{-1} = -1 extension; agrees with delta(d, e) identically.
    """
    if not (isinstance(d, int) and isinstance(e, int)) or d < 0 or e < 0:
        raise ValueError(f"gamma indices must be nonnegative integers, got ({d}, {e})")
    r, t = ctx.r, ctx.t
    return _f_at(e, r) * (_f_at(d, t) * ctx.delta_11 - r * _f_at(d - 1, t)) - _f_at(
        e - 1, r
    ) * (_f_at(d + 1, t) - _f_at(d - 1, t))


def tr_s1s2inv(ctx: TraceContext):
    """gamma = tr(s1 s2^-1) = gamma_closed(n, n)."""
    return gamma_closed(ctx.n, ctx.n, ctx)


def gamma_seifert_form(ctx: TraceContext):
    """Independent closed form of gamma valid where t = r:

    (2-r)(x^2-2-r) f_{n-1} f_n^3 + r f_n^2 - r f_{n-1} f_n
        - f_{n-1} f_{n+1} + f_{n-1}^2,   all evaluated at r.

    Used as a cross-check against tr_s1s2inv on intersection characters.
    """
    n, r, x2 = ctx.n, ctx.r, ctx.x_squared
    fn = f_poly(n)(r)
    fm = f_poly(n - 1)(r)
    fp = f_poly(n + 1)(r)
    return (
        (2 - r) * (x2 - 2 - r) * fm * fn * fn * fn
        + r * fn * fn
        - r * fm * fn
        - fm * fp
        + fm * fm
    )


def _min_poly_any(value, var: str) -> UniPoly:
    """Minimal polynomial over Q of a Fraction or number-field element."""
    if isinstance(value, NFElem):
        return nf_minimal_polynomial(value, var)
    return UniPoly([-Fraction(value), Fraction(1)], var)


def longitude_trace(locus):
    """Longitude trace at an intersection character, with certificate.

    `locus` needs attributes n, r_elem, x_squared (ring elements of one
    field, or rationals).  Returns (trace, minimal polynomial, verdict);
    the verdict must certify an algebraic integer, otherwise the slope-0
    detection logic would be unsound and a VerificationError is raised.
    """
    ctx = TraceContext(locus.n, locus.r_elem, locus.x_squared)
    gam = tr_s1s2inv(ctx)
    s1 = tr_power(ctx.t, ctx.n)
    s2 = tr_power(ctx.r, ctx.n)
    tau = tr_commutator(s1, s2, gam)
    min_poly = _min_poly_any(tau, "l")
    verdict = integrality_verdict(min_poly)
    if not verdict.is_algebraic_integer:
        raise VerificationError(
            f"longitude trace at n = {locus.n} is not an algebraic integer: "
            f"minimal polynomial {min_poly}"
        )
    return tau, min_poly, verdict


@dataclass(frozen=True)
class ReducibleCharacter:
    """The character of the reducible representations, at r = t = 2."""

    n: int
    r: Fraction
    t: Fraction
    x_squared: Fraction
    x_min_poly: UniPoly
    meridian_verdict: IntegralityVerdict
    s1_trace: Fraction
    s2_trace: Fraction
    s1s2inv_trace: Fraction
    longitude_trace: Fraction

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": frac_str(self.r),
            "t": frac_str(self.t),
            "x_squared": frac_str(self.x_squared),
            "x_min_poly": self.x_min_poly.to_json(),
            "meridian_verdict": self.meridian_verdict.to_json(),
            "s1_trace": frac_str(self.s1_trace),
            "s2_trace": frac_str(self.s2_trace),
            "s1s2inv_trace": frac_str(self.s1s2inv_trace),
            "longitude_trace": frac_str(self.longitude_trace),
        }


def reducible_character(n: int) -> ReducibleCharacter:
    """The reducible intersection of the meridian-trace condition with X.

    r = t = 2 forces x^2 = (4n^2 - 1)/n^2; the character agrees with a
    diagonal (abelian) character, so s1, s2, s1 s2^-1 and the longitude all
    have trace 2.  The meridian trace is never an algebraic integer for
    n >= 2 (bad primes = the primes dividing n).
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"the knot family is indexed by integers n >= 2, got {n!r}")
    two = Fraction(2)
    x2 = Fraction(4 * n * n - 1, n * n)
    x_min_poly = UniPoly([-x2, 0, 1], "x")
    verdict = integrality_verdict(x_min_poly)
    ctx = TraceContext(n, two, x2)
    if ctx.t != 2:
        raise VerificationError("t != 2 at the reducible character")
    s1 = tr_power(ctx.t, n)
    s2 = tr_power(ctx.r, n)
    gam = tr_s1s2inv(ctx)
    if not (s1 == 2 and s2 == 2 and gam == 2):
        raise VerificationError(
            f"Seifert generator traces at the reducible character of n = {n} "
            f"are ({s1}, {s2}, {gam}), expected (2, 2, 2)"
        )
    return ReducibleCharacter(
        n=n,
        r=two,
        t=two,
        x_squared=x2,
        x_min_poly=x_min_poly,
        meridian_verdict=verdict,
        s1_trace=s1,
        s2_trace=s2,
        s1s2inv_trace=gam,
        longitude_trace=tr_commutator(s1, s2, gam),
    )


def alexander_poly(n: int):
    """Alexander polynomial n^2 t^2 + (1 - 2n^2) t + n^2 and its discriminant."""
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"the knot family is indexed by integers n >= 2, got {n!r}")
    poly = UniPoly([n * n, 1 - 2 * n * n, n * n], "t")
    return poly, 1 - 4 * n * n


@dataclass(frozen=True)
class SlopeCandidate:
    """One branched-surface continued-fraction expansion and its slope."""

    tag: str
    expansion: tuple
    slope: int

    def to_json(self) -> dict:
        return {"tag": self.tag, "expansion": list(self.expansion), "slope": self.slope}


def boundary_slope_candidates(n: int):
    """The four minimal-edge-path expansions carrying essential surfaces.

    Slopes are read off the expansions; the all-even expansion [2n, 2n]
    carries the slope-0 (Seifert) surface.
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"the knot family is indexed by integers n >= 2, got {n!r}")
    return (
        SlopeCandidate(
            "[-2,...,-2,-3,-2,...,-2]",
            (-2,) * (2 * n - 2) + (-3,) + (-2,) * (2 * n - 2),
            2 - 8 * n,
        ),
        SlopeCandidate(
            "[-2,...,-2,2n-1]", (-2,) * (2 * n - 1) + (2 * n - 1,), -4 * n
        ),
        SlopeCandidate(
            "[2n-1,-2,...,-2]", (2 * n - 1,) + (-2,) * (2 * n - 1), -4 * n
        ),
        SlopeCandidate("[2n,2n]", (2 * n, 2 * n), 0),
    )


@dataclass(frozen=True)
class SlopeVerdict:
    """Outcome of the non-integrality detection at the intersection points."""

    meridian_integral: bool
    longitude_integral: bool
    detected_slope: object  # 0 or the string "undetermined"
    surface_description: str

    def to_json(self) -> dict:
        return {
            "meridian_integral": self.meridian_integral,
            "longitude_integral": self.longitude_integral,
            "detected_slope": self.detected_slope,
            "surface_description": self.surface_description,
        }


def detect_surface(report) -> SlopeVerdict:
    """Slope detection from a filled intersection report.

    A character whose meridian trace is not an algebraic integer but whose
    longitude trace is one detects an essential surface of slope 0, and any
    connected essential slope-0 surface here is a genus 1 Seifert surface.
    """
    meridian_integral = any(
        locus.meridian_verdict.is_algebraic_integer for locus in report.loci
    )
    longitude_integral = all(
        locus.longitude_verdict is not None
        and locus.longitude_verdict.is_algebraic_integer
        for locus in report.loci
    )
    if not meridian_integral and longitude_integral:
        return SlopeVerdict(
            meridian_integral=False,
            longitude_integral=True,
            detected_slope=0,
            surface_description="genus 1 Seifert surface",
        )
    return SlopeVerdict(
        meridian_integral=meridian_integral,
        longitude_integral=longitude_integral,
        detected_slope="undetermined",
        surface_description=(
            "no slope detected: meridian integral status "
            f"{meridian_integral}, longitude integral status {longitude_integral}"
        ),
    )
