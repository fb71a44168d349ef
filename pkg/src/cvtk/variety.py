"""Plane models of the character variety of the knot group
<a, b | a w^n = w^n b>, w = (a b^-1)^n (a^-1 b)^n, for n >= 2.

Irreducible SL(2, C) characters of this group are pinned down by two traces,
and two coordinate systems are used for them:

* the (r, x) model, r = tr(ab^-1) and x = tr(a) = tr(b), cut out by a single
  polynomial F(r, x) built from the trace of the group relator;
* the (r, t) model, t = tr(ab), cut out by
  D(r, t) = g_{n+1}(r) g_n(t) - g_n(r) g_{n+1}(t).

D is antisymmetric, so the line r = t splits off; the quotient by (r - t)
is symmetric of total degree 2n - 2 (degree n - 1 in each variable) and is
the model of the component that does not contain the characters with t = r.

The two models are tied together by t viewed as a function on the (r, x)
model, t = (2 - r)(x^2 - 2 - r) f_n(r)^2 + 2, which factors through the
double covering (r, x) -> (r, y) = (r, x^2 - 2) followed by the birational
map (r, y) -> (r, (2 - r)(y - r) f_n(r)^2 + 2).

The module also carries the plane Bezout bookkeeping for the frozen n = 2
and n = 3 component pairs: total intersection number of the two components,
the affine part (computed from eliminants, with spurious resultant factors
coming from common leading-coefficient roots stripped), and the rest, which
sits at ideal points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cheb import f_poly, g_poly
from .golden import default_fixtures
from .ratpoly import BiPoly, UniPoly, poly_gcd, resultant_in

RX = ("r", "x")
RT = ("r", "t")


def _require_n(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"the knot family is indexed by integers n >= 2, got {n!r}")


def _in_var(p: UniPoly, var: str) -> UniPoly:
    return UniPoly(p.coeffs, var)


def t_of_rx(n: int) -> BiPoly:
    """tr(ab) as a polynomial function of (r, x) on the (r, x) model."""
    _require_n(n)
    r = BiPoly.gen("r", RX)
    x = BiPoly.gen("x", RX)
    fn = BiPoly.from_uni(_in_var(f_poly(n), "r"), RX)
    return (2 - r) * (x * x - 2 - r) * fn * fn + 2


def x_variety_poly(n: int) -> BiPoly:
    """Defining polynomial F(r, x) of the (r, x) model.

    F = f_n(t) * (f_n(r) g_n(r) (-x^2 + 2 + r) - 1) + f_{n-1}(t)
    with t = t_of_rx(n) substituted.
    """
    _require_n(n)
    r = BiPoly.gen("r", RX)
    x = BiPoly.gen("x", RX)
    fn = BiPoly.from_uni(_in_var(f_poly(n), "r"), RX)
    gn = BiPoly.from_uni(_in_var(g_poly(n), "r"), RX)
    t = t_of_rx(n)
    return f_poly(n)(t) * (fn * gn * (2 + r - x * x) - 1) + f_poly(n - 1)(t)


def d_variety_poly(n: int) -> BiPoly:
    """Defining polynomial D(r, t) = g_{n+1}(r) g_n(t) - g_n(r) g_{n+1}(t)."""
    _require_n(n)
    gn_r = BiPoly.from_uni(_in_var(g_poly(n), "r"), RT)
    gn1_r = BiPoly.from_uni(_in_var(g_poly(n + 1), "r"), RT)
    gn_t = BiPoly.from_uni(_in_var(g_poly(n), "t"), RT)
    gn1_t = BiPoly.from_uni(_in_var(g_poly(n + 1), "t"), RT)
    return gn1_r * gn_t - gn_r * gn1_t


@dataclass(frozen=True)
class ComponentPair:
    """D(r, t) split as line * quotient, with line = r - t."""

    n: int
    d_poly: BiPoly
    line: BiPoly
    quotient: BiPoly


def d_split(n: int) -> ComponentPair:
    """Split (r - t) off D(r, t); the division must be exact."""
    D = d_variety_poly(n)
    r = BiPoly.gen("r", RT)
    t = BiPoly.gen("t", RT)
    line = r - t
    q, rem = D.divmod_in(line, "r")
    if not rem.is_zero:
        raise RuntimeError(
            "hard invariant violated: (r - t) does not divide D(r, t) "
            f"for n = {n}"
        )
    return ComponentPair(n, D, line, q)


def covering_image(point):
    """The double covering (r, x) -> (r, x^2 - 2), over any commutative ring."""
    r, x = point
    return (r, x * x - 2)


def birational_image(n: int, point):
    """The birational map (r, y) -> (r, (2 - r)(y - r) f_n(r)^2 + 2).

    Works over any commutative ring containing the coordinates; composing it
    with covering_image recovers t_of_rx.
    """
    _require_n(n)
    r, y = point
    fr = f_poly(n)(r)
    return (r, (2 - r) * (y - r) * fr * fr + 2)


def meridian_derivative_at_two(n: int) -> UniPoly:
    """The x-partial of F(r, x) restricted to r = 2, as a polynomial in x.

    On the line r = 2 this collapses to -2 n^2 x, which is the source of the
    x^2 = (4n^2 - 1)/n^2 coordinate of the reducible intersection character.
    """
    return x_variety_poly(n).partial("x").subs("r", 2)


@dataclass(frozen=True)
class BezoutBudget:
    """Intersection counts of the two components of the (r, x) model."""

    n: int
    total: int
    affine: int
    ideal: int
    r_eliminant: UniPoly
    x_eliminant: UniPoly

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "affine": self.affine,
            "ideal": self.ideal,
            "r_eliminant": self.r_eliminant.to_json(),
            "x_eliminant": self.x_eliminant.to_json(),
        }


def _strip_common_lc_roots(elim: UniPoly, lc0: UniPoly, lc1: UniPoly) -> UniPoly:
    """Remove eliminant factors supported on common roots of the two leading
    coefficients; those come from the resultant construction, not from
    intersection points."""
    junk = poly_gcd(lc0, lc1)
    while junk.degree > 0:
        g = poly_gcd(elim, junk)
        if g.degree == 0:
            break
        elim = elim.exact_div(g)
    return elim


def bezout_budget(n: int, fixtures: dict = None) -> BezoutBudget:
    """Total/affine/ideal intersection counts of the two component curves.

    The component pair is only known in closed form for n = 2 and n = 3
    (the frozen fixtures); the total is the product of the total degrees,
    the affine count is the degree of the cleaned r-eliminant, and the ideal
    count is the difference.
    """
    fx = (fixtures or default_fixtures()).get(n)
    if fx is None:
        raise ValueError(f"no frozen component pair for n = {n}")
    X0, X1 = fx.X0, fx.X1
    total = X0.total_degree() * X1.total_degree()

    elim_r = resultant_in(X0, X1, "x")
    lc0 = X0.coeff_list_in("x")[-1]
    lc1 = X1.coeff_list_in("x")[-1]
    elim_r = _strip_common_lc_roots(elim_r, lc0, lc1).primitive()

    elim_x = resultant_in(X0, X1, "r").primitive()
    affine = elim_r.degree
    return BezoutBudget(n, total, affine, total - affine, elim_r, elim_x)
