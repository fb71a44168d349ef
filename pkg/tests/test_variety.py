"""Tests for the plane models and their interplay.

The frozen n = 2 and n = 3 component pairs act as the oracle for the
constructed defining polynomial F; the split of D is checked against direct
evaluation, which is an oracle independent of the division routine.
"""

import random
from fractions import Fraction

import pytest

from cvtk.cheb import G_poly, f_poly
from cvtk.factor import squarefree_part
from cvtk.golden import default_fixtures
from cvtk.numfield import NumberField
from cvtk.ratpoly import BiPoly, UniPoly
from cvtk.variety import (
    bezout_budget,
    birational_image,
    covering_image,
    d_split,
    d_variety_poly,
    meridian_derivative_at_two,
    t_of_rx,
    x_variety_poly,
)


def test_x_variety_matches_frozen_components():
    fx = default_fixtures()
    for n in (2, 3):
        F = x_variety_poly(n)
        assert F.content() == 1
        assert F.primitive() == (fx[n].X0 * fx[n].X1).primitive()


def test_x_variety_even_in_x():
    for n in range(2, 9):
        assert x_variety_poly(n).is_even_in("x")


def test_d_antisymmetric_and_split_degrees():
    for n in range(2, 21):
        pair = d_split(n)
        assert pair.d_poly.exchange_vars() == -pair.d_poly
        assert pair.quotient.exchange_vars() == pair.quotient
        assert pair.quotient.degree_in("r") == n - 1
        assert pair.quotient.degree_in("t") == n - 1
        assert pair.quotient.total_degree() == 2 * n - 2


def test_d_split_against_evaluation():
    rng = random.Random(411)
    for n in range(2, 7):
        pair = d_split(n)
        for _ in range(8):
            r0 = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            t0 = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            lhs = pair.d_poly.eval(r0, t0)
            rhs = (r0 - t0) * pair.quotient.eval(r0, t0)
            assert lhs == rhs


def test_d_matches_definition_n2():
    # g_2 = u - 1, g_3 = u^2 - u - 1 by hand.
    r = BiPoly.gen("r", ("r", "t"))
    t = BiPoly.gen("t", ("r", "t"))
    expected = (r * r - r - 1) * (t - 1) - (r - 1) * (t * t - t - 1)
    assert d_variety_poly(2) == expected


def test_reducible_point_on_x_model():
    for n in range(2, 9):
        F2 = x_variety_poly(n).halve_exponents("x", "X")
        assert F2.eval(Fraction(2), Fraction(4 * n * n - 1, n * n)) == 0


def test_covering_composed_with_birational_is_t_of_rx():
    rng = random.Random(412)
    for n in (2, 3, 4):
        T = t_of_rx(n)
        for _ in range(6):
            r0 = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            x0 = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            step = birational_image(n, covering_image((r0, x0)))
            assert step[0] == r0
            assert step[1] == T.eval(r0, x0)


def test_intersection_points_map_to_diagonal():
    # Over Q[r]/(G_n(r)), the point (r, y) with y = x^2 - 2 = r - 1/f_n(r)^2
    # maps birationally to t = r exactly.
    for n in (2, 3):
        field = NumberField(UniPoly(G_poly(n).coeffs, "r"))
        r = field.gen()
        fn = f_poly(n)(r)
        y = r - (fn * fn) ** -1
        image = birational_image(n, (r, y))
        assert image[0] == r
        assert image[1] == r


def test_meridian_derivative_at_two():
    for n in range(2, 13):
        expected = UniPoly([0, -2 * n * n], "x")
        assert meridian_derivative_at_two(n) == expected


def test_bezout_budget_counts():
    fx = default_fixtures()
    for n in (2, 3):
        b = bezout_budget(n)
        assert (b.total, b.affine, b.ideal) == fx[n].bezout
        assert b.ideal == b.total - b.affine


def test_bezout_eliminants():
    fx = default_fixtures()
    for n in (2, 3):
        b = bezout_budget(n)
        # Affine r-coordinates are exactly the roots of G_n.
        assert squarefree_part(b.r_eliminant) == UniPoly(G_poly(n).coeffs, "r").monic()
        # The x-eliminant is squarefree and equals the frozen x-polynomial.
        assert b.x_eliminant == fx[n].x_poly
        assert squarefree_part(b.x_eliminant) == b.x_eliminant.monic()


def test_bezout_budget_json_shape():
    obj = bezout_budget(2).to_json()
    assert obj["total"] == 20 and obj["affine"] == 4 and obj["ideal"] == 16
    assert obj["r_eliminant"]["var"] == "r"


def test_input_validation():
    with pytest.raises(ValueError):
        x_variety_poly(1)
    with pytest.raises(ValueError):
        d_variety_poly(0)
    with pytest.raises(ValueError):
        bezout_budget(4)
