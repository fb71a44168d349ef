import itertools
import random
from fractions import Fraction

import pytest

from cvtk.factor import (
    factor_over_rationals,
    is_irreducible,
    iter_primes,
    squarefree_decomposition,
    squarefree_part,
)
from cvtk.ratpoly import ExactArithError, UniPoly


def P(*coeffs, var="u"):
    return UniPoly(coeffs, var)


U = UniPoly.gen("u")


# -- independent small-degree irreducibility oracle ---------------------------


def divisor_candidates(n):
    n = abs(n)
    out = set()
    for d in range(1, n + 1):
        if d * d > n:
            break
        if n % d == 0:
            out.update({d, -d, n // d, -(n // d)})
    return out


def has_rational_root(p):
    """Rational root theorem on the primitive integer form."""
    z = p.primitive().int_coeffs()
    if z[0] == 0:
        return True
    for a in divisor_candidates(z[0]):
        for b in divisor_candidates(z[-1]):
            if p(Fraction(a, b)) == 0:
                return True
    return False


def has_integer_quadratic_factor(p):
    """Brute force over integer quadratic divisors of a primitive quartic."""
    z = p.primitive().int_coeffs()
    if len(z) != 5:
        raise ValueError("quartic expected")
    e, d, c, b, a = z
    # (a1 x^2 + b1 x + c1)(a2 x^2 + b2 x + c2), a1*a2 = a, c1*c2 = e
    for a1 in divisor_candidates(a):
        a2, rem = divmod(a, a1)
        if rem:
            continue
        c1_cands = divisor_candidates(e) if e else set(range(-abs(d) - abs(c) - 1, abs(d) + abs(c) + 2))
        for c1 in c1_cands:
            if e and (c1 == 0 or e % c1):
                continue
            c2 = e // c1 if c1 else 0
            if c1 * c2 != e:
                continue
            for b1 in range(-abs(b) - abs(a) - abs(c) - 2, abs(b) + abs(a) + abs(c) + 3):
                num = b - a1 * 0 - b1 * a2
                # solve b2 from x^3 coefficient: a1*b2 + b1*a2 = b
                if a1 == 0:
                    continue
                if (b - b1 * a2) % a1:
                    continue
                b2 = (b - b1 * a2) // a1
                if (a1 * c2 + b1 * b2 + c1 * a2 == c) and (b1 * c2 + c1 * b2 == d):
                    return True
    return False


def irreducible_small(p):
    """Independent check for degree <= 4."""
    n = p.degree
    if n == 1:
        return True
    if has_rational_root(p):
        return False
    if n <= 3:
        return True
    return not has_integer_quadratic_factor(p)


def rand_poly(rng, deg):
    return UniPoly([rng.randint(-8, 8) for _ in range(deg)] + [rng.randint(1, 6)])


# -- squarefree ----------------------------------------------------------------


def test_squarefree_part_examples():
    p = (U - 1) ** 2 * (U ** 2 + 1)
    assert squarefree_part(p) == (U - 1) * (U ** 2 + 1)
    assert squarefree_part(U ** 2 - 2 * U + 2) == U ** 2 - 2 * U + 2
    assert squarefree_part(P(3)) == P(1)
    with pytest.raises(ExactArithError):
        squarefree_part(UniPoly.zero())


def test_squarefree_decomposition_reconstructs():
    rng = random.Random(48)
    for _ in range(25):
        parts = [rand_poly(rng, rng.randint(1, 3)) for _ in range(rng.randint(1, 3))]
        mults = [rng.randint(1, 3) for _ in parts]
        p = P(rng.choice([2, 3, -1]))
        for f, m in zip(parts, mults):
            p = p * f ** m
        unit, decomp = squarefree_decomposition(p)
        back = UniPoly.const(unit, "u")
        for f, m in decomp:
            assert f.lc == 1
            assert squarefree_part(f) == f
            back = back * f ** m
        assert back == p
        for (f1, _), (f2, _) in itertools.combinations(decomp, 2):
            from cvtk.ratpoly import poly_gcd

            assert poly_gcd(f1, f2).degree == 0


def test_yun_handles_pure_powers():
    _, decomp = squarefree_decomposition(U ** 5)
    assert decomp == [(U, 5)]
    _, decomp = squarefree_decomposition((U ** 2 + 1) ** 3)
    assert decomp == [(U ** 2 + 1, 3)]


# -- factorization ------------------------------------------------------------


def test_factor_examples():
    fac = factor_over_rationals(U ** 2 - 1)
    assert fac.unit == 1
    assert fac.factors == ((U - 1, 1), (U + 1, 1))

    fac = factor_over_rationals(2 * U ** 2 - 2)
    assert fac.unit == 2
    assert fac.factors == ((U - 1, 1), (U + 1, 1))

    fac = factor_over_rationals(U ** 4 - 2 * U ** 3 + 3)
    assert len(fac.factors) == 1 and fac.factors[0][1] == 1

    # x^4 - 6x^2 + 45/4 is irreducible (its quartic with cleared denominators
    # has no rational root and no integer quadratic split)
    p = P(Fraction(45, 4), 0, -6, 0, 1)
    fac = factor_over_rationals(p)
    assert fac.unit == 1 and fac.factors == ((p, 1),)


def test_factor_cyclotomic_like():
    # u^4 + 1 irreducible over Q even though it splits mod every prime
    assert is_irreducible(U ** 4 + 1)
    # u^6 - 1 = (u-1)(u+1)(u^2+u+1)(u^2-u+1)
    fac = factor_over_rationals(U ** 6 - 1)
    assert [f.degree for f, _ in fac.factors] == [1, 1, 2, 2]
    assert fac.expand() == U ** 6 - 1


def test_factor_reconstruction_random():
    rng = random.Random(49)
    for _ in range(30):
        p = P(rng.choice([1, 2, -3, Fraction(1, 2)]))
        for _ in range(rng.randint(1, 3)):
            p = p * rand_poly(rng, rng.randint(1, 4)) ** rng.randint(1, 2)
        fac = factor_over_rationals(p)
        assert fac.expand() == p
        for f, _ in fac.factors:
            assert f.lc == 1
            if f.degree <= 4:
                assert irreducible_small(f)


def test_factor_is_idempotent_on_irreducibles():
    rng = random.Random(50)
    count = 0
    for _ in range(80):
        p = rand_poly(rng, rng.randint(1, 4))
        fac = factor_over_rationals(p)
        for f, _ in fac.factors:
            again = factor_over_rationals(f)
            assert again.factors == ((f, 1),)
            count += 1
    assert count > 40


def test_factor_deterministic():
    p = (U ** 2 - 2) * (U ** 2 - 3) * (U ** 2 + U + 1) * (U - 5)
    a = factor_over_rationals(p)
    b = factor_over_rationals(p)
    assert a == b
    assert [f.to_json()["coeffs"] for f, _ in a.factors] == [
        ["-5", "1"],
        ["-3", "0", "1"],
        ["-2", "0", "1"],
        ["1", "1", "1"],
    ]


def test_factor_large_coeff_swinnerton_dyer_2():
    # min poly of sqrt(2)+sqrt(3): x^4 - 10x^2 + 1, splits into quadratics mod
    # every prime, so recombination must assemble subsets
    p = U ** 4 - 10 * U ** 2 + 1
    assert is_irreducible(p)


def test_iter_primes():
    it = iter_primes()
    assert [next(it) for _ in range(10)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_factor_degree8_even_poly():
    # 144x^8 - 1424x^6 + 5160x^4 - 8400x^2 + 6125: product of factors must
    # reproduce the primitive form whatever the splitting is
    p = UniPoly([6125, 0, -8400, 0, 5160, 0, -1424, 0, 144], "x")
    fac = factor_over_rationals(p)
    back = fac.expand()
    assert back == p
    assert sum(f.degree * m for f, m in fac.factors) == 8
