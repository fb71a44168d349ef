import random
from fractions import Fraction

import pytest

from cvtk.ratpoly import (
    BiPoly,
    ExactArithError,
    RatMatrix,
    UniPoly,
    char_poly,
    frac_str,
    poly_gcd,
    resultant,
    resultant_in,
)


def P(*coeffs, var="u"):
    return UniPoly(coeffs, var)


# -- independent oracles ----------------------------------------------------


def sylvester_resultant(p, q):
    """Resultant as the determinant of the Sylvester matrix (fraction
    Gaussian elimination), independent of the PRS code path."""
    m, n = p.degree, q.degree
    if m < 0 or n < 0:
        raise ValueError("zero polynomial")
    size = m + n
    if size == 0:
        return Fraction(1)
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + pc + [Fraction(0)] * (size - i - m - 1))
    for i in range(m):
        rows.append([Fraction(0)] * i + qc + [Fraction(0)] * (size - i - n - 1))
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if rows[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            if rows[r][col]:
                f = rows[r][col] * inv
                for c in range(col, size):
                    rows[r][c] -= f * rows[col][c]
    return det


def naive_gcd(p, q):
    """Monic Euclid over Q, no performance tricks."""
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def companion(p):
    """Companion matrix of a monic polynomial."""
    n = p.degree
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = Fraction(1)
    for i in range(n):
        rows[i][n - 1] = -p[i]
    return RatMatrix(rows)


def rand_poly(rng, deg, var="u"):
    return UniPoly([rng.randint(-9, 9) for _ in range(deg)] + [rng.randint(1, 9)], var)


# -- UniPoly basics ----------------------------------------------------------


def test_canonical_form():
    p = P(1, 0, 2, 0)
    assert p.coeffs == (Fraction(1), Fraction(0), Fraction(2))
    assert p.degree == 2
    assert UniPoly([0, 0]).is_zero
    assert UniPoly([]).degree == -1
    assert P(Fraction(2, 4))[0] == Fraction(1, 2)


def test_arithmetic():
    u = UniPoly.gen("u")
    p = u ** 2 - 2 * u + 2
    assert p == P(2, -2, 1)
    assert p * 0 == UniPoly.zero("u")
    assert (p - p).is_zero
    assert (u - 1) * (u + 1) == u ** 2 - 1
    assert divmod(u ** 3 - 1, u - 1) == (u ** 2 + u + 1, UniPoly.zero("u"))
    q, r = divmod(u ** 2 + 1, u - 3)
    assert q == u + 3 and r == P(10)
    with pytest.raises(ExactArithError):
        (u ** 2 + 1).exact_div(u - 3)


def test_var_mismatch_raises():
    with pytest.raises(ExactArithError):
        UniPoly.gen("u") + UniPoly.gen("t")


def test_eval_and_derivative():
    p = P(45, 0, -24, 0, 4, var="x")  # 4x^4 - 24x^2 + 45
    assert p(Fraction(1, 2)) == Fraction(45) - 6 + Fraction(1, 4)
    assert p.derivative() == P(0, -48, 0, 16, var="x")
    # Horner works on ring elements too: evaluate u^2+1 at a BiPoly
    t = BiPoly.gen("r", ("r", "x")) + BiPoly.gen("x", ("r", "x"))
    q = UniPoly.gen("u") ** 2 + 1
    assert q(t) == t * t + 1


def test_primitive_and_content():
    p = P(Fraction(3, 4), 0, Fraction(-3, 2))
    assert p.content() == Fraction(-3, 4)
    assert p.primitive() == P(-1, 0, 2)
    assert p.primitive().lc > 0
    assert p.content() * p.primitive() == p


def test_inflate():
    p = P(Fraction(45, 4), 0, -6, 0, 1)
    assert p.inflate(2) == P(Fraction(45, 4), 0, 0, 0, -6, 0, 0, 0, 1)


def test_json_round_trip():
    p = P(Fraction(45, 4), 0, -6, 0, 1)
    obj = p.to_json()
    assert obj == {"var": "u", "coeffs": ["45/4", "0", "-6", "0", "1"]}
    assert UniPoly.from_json(obj) == p
    assert frac_str(Fraction(-7)) == "-7"


def test_str():
    assert str(P(1, -3, 0, 1)) == "u^3 - 3*u + 1"
    assert str(UniPoly.zero()) == "0"
    assert str(P(Fraction(45, 4), 0, -6, 0, 4, var="x")) == "4*x^4 - 6*x^2 + 45/4"


# -- gcd ----------------------------------------------------------------------


def test_gcd_examples():
    u = UniPoly.gen("u")
    # f6 = u^5 - 4u^3 + 3u is squarefree
    f6 = u ** 5 - 4 * u ** 3 + 3 * u
    assert poly_gcd(f6, f6.derivative()) == P(1)
    assert poly_gcd(u ** 2 - 1, u ** 2 - 2 * u + 1) == u - 1
    assert poly_gcd(UniPoly.zero(), 3 * u + 3) == u + 1
    assert poly_gcd(UniPoly.zero(), UniPoly.zero()).is_zero


def test_gcd_matches_naive_euclid():
    rng = random.Random(41)
    for _ in range(60):
        a = rand_poly(rng, rng.randint(0, 6))
        b = rand_poly(rng, rng.randint(0, 6))
        c = rand_poly(rng, rng.randint(0, 3))
        assert poly_gcd(a * c, b * c) == naive_gcd(a * c, b * c)


def test_gcd_divides_both():
    rng = random.Random(42)
    for _ in range(40):
        a = rand_poly(rng, rng.randint(1, 7))
        b = rand_poly(rng, rng.randint(1, 7))
        g = poly_gcd(a, b)
        assert (a % g).is_zero and (b % g).is_zero
        assert g.lc == 1


# -- resultants ---------------------------------------------------------------


def test_resultant_examples():
    u = UniPoly.gen("u")
    assert resultant(u ** 2 + 1, u - 3) == 10
    c = Fraction(5, 7)
    assert resultant(u - c, u - c) == 0
    # res(p, q) = lc(p)^deg q * prod q(root_i(p)); here the only root is u=1
    assert resultant(2 * u - 2, u ** 2 + 1) == 2 ** 2 * (1 + 1)


def test_resultant_matches_sylvester():
    rng = random.Random(43)
    for _ in range(80):
        a = rand_poly(rng, rng.randint(1, 6))
        b = rand_poly(rng, rng.randint(1, 6))
        assert resultant(a, b) == sylvester_resultant(a, b)


def test_resultant_multiplicative():
    rng = random.Random(44)
    for _ in range(30):
        a = rand_poly(rng, rng.randint(1, 4))
        b = rand_poly(rng, rng.randint(1, 4))
        c = rand_poly(rng, rng.randint(1, 4))
        assert resultant(a * b, c) == resultant(a, c) * resultant(b, c)


def test_resultant_common_root_is_zero():
    u = UniPoly.gen("u")
    assert resultant((u - 2) * (u + 5), (u - 2) * (u ** 2 + 1)) == 0


def test_resultant_in_eliminates():
    # eliminating u from (u^2 - 2u + 2, x^2*u^2 - (2+u)*u^2 + 1) gives a
    # quartic in x with the same roots as 4x^4 - 24x^2 + 45
    vs = ("u", "x")
    up = BiPoly.gen("u", vs)
    xp = BiPoly.gen("x", vs)
    m = up * up - 2 * up + 2
    f = xp * xp * up * up - (2 + up) * up * up + 1
    res = resultant_in(m, f, "u")
    assert res.var == "x"
    assert res.primitive() == UniPoly([45, 0, -24, 0, 4], "x")


def test_resultant_in_matches_evaluation():
    # spot check: res_x(p, q) evaluated at r=c equals res(p(c), q(c)) whenever
    # no leading-coefficient degeneration happens at c
    rng = random.Random(45)
    vs = ("r", "x")
    for _ in range(20):
        p = BiPoly(
            {(rng.randint(0, 2), j): rng.randint(-4, 4) for j in range(3)}, vs
        ) + BiPoly({(0, 3): 1}, vs)
        q = BiPoly(
            {(rng.randint(0, 2), j): rng.randint(-4, 4) for j in range(2)}, vs
        ) + BiPoly({(0, 2): 1}, vs)
        res = resultant_in(p, q, "x")
        for c in (0, 1, -2):
            pc = UniPoly([p.subs("r", c)[j] for j in range(4)], "x")
            qc = UniPoly([q.subs("r", c)[j] for j in range(3)], "x")
            assert res(Fraction(c)) == resultant(pc, qc)


# -- BiPoly -------------------------------------------------------------------


def test_bipoly_basics():
    vs = ("r", "x")
    r = BiPoly.gen("r", vs)
    x = BiPoly.gen("x", vs)
    p = (2 - r) * (x ** 2 - 2 - r) + 2
    assert p.degree_in("x") == 2 and p.degree_in("r") == 2
    assert p.total_degree() == 3
    assert p.subs("r", 2) == UniPoly.const(2, "x")
    assert p.eval(Fraction(0), Fraction(1)) == 2 * (1 - 2) + 2
    assert p.partial("x") == (2 - r) * 2 * x
    assert p.is_even_in("x") and not p.is_even_in("r")


def test_bipoly_halve_and_swap():
    vs = ("r", "x")
    r = BiPoly.gen("r", vs)
    x = BiPoly.gen("x", vs)
    p = x ** 4 - r * x ** 2 + 1
    h = p.halve_exponents("x", "y")
    assert h.vars == ("r", "y")
    assert h.degree_in("y") == 2
    d = r - x
    assert d.exchange_vars() == -d
    assert (r ** 2 * x).exchange_vars() == x ** 2 * r


def test_bipoly_coeff_list_round_trip():
    vs = ("r", "t")
    r = BiPoly.gen("r", vs)
    t = BiPoly.gen("t", vs)
    p = r ** 2 * t - 3 * t ** 2 + r - 5
    cl = p.coeff_list_in("t")
    assert [c.var for c in cl] == ["r", "r", "r"]
    assert BiPoly.from_coeff_list(cl, "t", vs) == p


def test_bipoly_divmod():
    vs = ("r", "t")
    r = BiPoly.gen("r", vs)
    t = BiPoly.gen("t", vs)
    num = r ** 3 * t - r * t ** 3 + r - t
    q, rem = num.divmod_in(r - t, "r")
    assert rem.is_zero
    assert q * (r - t) == num


def test_bipoly_primitive_sign():
    vs = ("r", "x")
    r = BiPoly.gen("r", vs)
    x = BiPoly.gen("x", vs)
    p = -2 * r ** 2 * x + 4 * r - 6
    pr = p.primitive()
    assert pr == r ** 2 * x - 2 * r + 3
    assert p.content() == -2


def test_bipoly_json_round_trip():
    vs = ("r", "x")
    p = BiPoly({(0, 0): 1, (2, 1): Fraction(-3, 2)}, vs)
    obj = p.to_json()
    assert obj["vars"] == ["r", "x"]
    assert BiPoly.from_json(obj) == p


# -- char_poly ----------------------------------------------------------------


def test_char_poly_companion_identity():
    rng = random.Random(46)
    for _ in range(25):
        deg = rng.randint(1, 6)
        p = UniPoly([rng.randint(-5, 5) for _ in range(deg)] + [1])
        assert char_poly(companion(p)) == p


def test_char_poly_small_closed_forms():
    m = RatMatrix([[1, 2], [3, 4]])
    cp = char_poly(m)
    assert cp == UniPoly([4 - 6, -5, 1])
    assert m.det() == -2
    assert m.trace() == 5
    assert char_poly(RatMatrix.identity(3)) == (UniPoly.gen() - 1) ** 3


def test_char_poly_cayley_hamilton():
    rng = random.Random(47)
    for _ in range(10):
        n = rng.randint(1, 4)
        m = RatMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        cp = char_poly(m)
        acc = RatMatrix([[0] * n for _ in range(n)])
        power = RatMatrix.identity(n)
        rows = [[Fraction(0)] * n for _ in range(n)]
        for k in range(cp.degree + 1):
            c = cp[k]
            for i in range(n):
                for j in range(n):
                    rows[i][j] += c * power.rows[i][j]
            power = power * m
        assert all(v == 0 for row in rows for v in row)
