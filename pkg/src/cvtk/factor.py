"""Squarefree decomposition and factorization over Q.

Zassenhaus route: reduce a primitive squarefree integer polynomial modulo the
smallest usable prime, split with distinct-degree plus Cantor-Zassenhaus
equal-degree factorization, Hensel-lift the factors to twice the Mignotte
bound, then recombine subsets by trial division. Deterministic: fixed RNG
seed, deterministic prime choice, factors sorted canonically.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .ratpoly import ExactArithError, UniPoly, poly_gcd


def iter_primes():
    """2, 3, 5, 7, ... by trial division; plenty for desk-scale work."""
    yield 2
    yield 3
    found = [3]
    c = 3
    while True:
        c += 2
        for p in found:
            if p * p > c:
                found.append(c)
                yield c
                break
            if c % p == 0:
                break


# -- GF(p) arithmetic on ascending int lists ---------------------------------


def _trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _gf_red(a, p):
    return _trim([c % p for c in a])


def _gf_add(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                  for i in range(n)])


def _gf_sub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                  for i in range(n)])


def _gf_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _gf_divmod(a, b, p):
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - db, 0)
    r = list(a)
    while True:
        _trim(r)
        if len(r) - 1 < db:
            break
        k = len(r) - 1 - db
        c = r[-1] * inv % p
        q[k] = c
        for i, bc in enumerate(b):
            r[i + k] = (r[i + k] - c * bc) % p
    return _trim(q), r


def _gf_monic(a, p):
    if not a or a[-1] == 1:
        return list(a)
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def _gf_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _gf_divmod(a, b, p)[1]
    return _gf_monic(a, p)


def _gf_gcdex(a, b, p):
    """Extended Euclid: returns (s, t) with s*a + t*b = 1; inputs coprime."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gf_sub(s0, _gf_mul(q, s1, p), p)
        t0, t1 = t1, _gf_sub(t0, _gf_mul(q, t1, p), p)
    if len(r0) != 1:
        raise ExactArithError("gcdex of non-coprime polynomials")
    inv = pow(r0[0], p - 2, p)
    return [c * inv % p for c in s0], [c * inv % p for c in t0]


def _gf_deriv(a, p):
    return _trim([k * c % p for k, c in enumerate(a)][1:])


def _gf_pow_mod(a, e, mod, p):
    out = [1]
    base = _gf_divmod(a, mod, p)[1]
    while e:
        if e & 1:
            out = _gf_divmod(_gf_mul(out, base, p), mod, p)[1]
        e >>= 1
        if e:
            base = _gf_divmod(_gf_mul(base, base, p), mod, p)[1]
    return out


def _gf_ddf(f, p):
    """Distinct-degree split of a monic squarefree f: [(product, degree)]."""
    out = []
    f = list(f)
    h = [0, 1]
    i = 1
    while len(f) - 1 >= 2 * i:
        h = _gf_pow_mod(h, p, f, p)
        g = _gf_gcd(_gf_sub(h, [0, 1], p), f, p)
        if len(g) > 1:
            out.append((g, i))
            f = _gf_divmod(f, g, p)[0]
            h = _gf_divmod(h, f, p)[1]
        i += 1
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _gf_edf(f, d, p, rng):
    """Cantor-Zassenhaus equal-degree split into monic irreducibles."""
    out = []
    stack = [f]
    while stack:
        g = stack.pop()
        if len(g) - 1 == d:
            out.append(g)
            continue
        while True:
            t = _trim([rng.randrange(p) for _ in range(len(g) - 1)])
            if len(t) < 2:
                continue
            if p == 2:
                w = t
                trace = t
                for _ in range(d - 1):
                    w = _gf_pow_mod(w, 2, g, 2)
                    trace = _gf_add(trace, w, 2)
                cand = _gf_gcd(trace, g, 2)
            else:
                e = (p ** d - 1) // 2
                w = _gf_pow_mod(t, e, g, p)
                cand = _gf_gcd(_gf_sub(w, [1], p), g, p)
            if 0 < len(cand) - 1 < len(g) - 1:
                stack.append(cand)
                stack.append(_gf_divmod(g, cand, p)[0])
                break
    return out


def _gf_factor_sqf(f, p, rng):
    out = []
    for g, d in _gf_ddf(f, p):
        out.extend(_gf_edf(g, d, p, rng))
    return sorted(out)


# -- Hensel lifting (ascending int lists, coefficients in [0, m)) -------------


def _zp_red(a, m):
    return _trim([c % m for c in a])


def _zp_mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = (out[i + j] + x * y) % m
    return _trim(out)


def _zp_add(a, b, m):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m
                  for i in range(n)])


def _zp_sub(a, b, m):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % m
                  for i in range(n)])


def _zp_divmod_monic(a, b, m):
    """Division by a monic b, coefficient arithmetic mod m."""
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    r = list(a)
    while True:
        _trim(r)
        if len(r) - 1 < db:
            break
        k = len(r) - 1 - db
        c = r[-1] % m
        q[k] = c
        for i, bc in enumerate(b):
            r[i + k] = (r[i + k] - c * bc) % m
    return _trim(q), r


def _hensel_step(m, f, g, h, s, t):
    """One quadratic lift: from f = g*h, s*g + t*h = 1 (mod m) to mod m*m.
    h stays monic; g carries lc(f)."""
    m2 = m * m
    e = _zp_sub(_zp_red(f, m2), _zp_mul(g, h, m2), m2)
    q, r = _zp_divmod_monic(_zp_mul(s, e, m2), h, m2)
    g1 = _zp_add(_zp_add(g, _zp_mul(t, e, m2), m2), _zp_mul(q, g, m2), m2)
    h1 = _zp_add(h, r, m2)
    b = _zp_sub(_zp_add(_zp_mul(s, g1, m2), _zp_mul(t, h1, m2), m2), [1], m2)
    c, d = _zp_divmod_monic(_zp_mul(s, b, m2), h1, m2)
    s1 = _zp_sub(s, d, m2)
    t1 = _zp_sub(_zp_sub(t, _zp_mul(t, b, m2), m2), _zp_mul(c, g1, m2), m2)
    return g1, h1, s1, t1


def _hensel_lift(f, facs, p, l):
    """Lift monic mod-p factors of f (= lc(f) * prod(facs) mod p) to monic
    factors mod p**l whose product is f/lc(f) mod p**l. Binary-tree recursion."""
    pl = p ** l
    if len(facs) == 1:
        lcinv = pow(f[-1] % pl, -1, pl)
        return [_zp_red([c * lcinv for c in f], pl)]
    k = len(facs) // 2
    left, right = facs[:k], facs[k:]
    g = [f[-1] % p]
    for fac in left:
        g = _gf_mul(g, fac, p)
    h = [1]
    for fac in right:
        h = _gf_mul(h, fac, p)
    s, t = _gf_gcdex(g, h, p)
    m = p
    while m < pl:
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return _hensel_lift(g, left, p, l) + _hensel_lift(h, right, p, l)


def _sym(a, m):
    half = m // 2
    return [c - m if c > half else c for c in a]


def _zassenhaus(F: UniPoly):
    """Irreducible factors of a primitive squarefree integer polynomial."""
    n = F.degree
    if n == 1:
        return [F]
    fz = F.int_coeffs()
    b = fz[-1]
    rng = random.Random(0x5EED + n)
    p = None
    for q in iter_primes():
        if b % q == 0:
            continue
        fq = _gf_monic(_gf_red(fz, q), q)
        if len(_gf_gcd(fq, _gf_deriv(fq, q), q)) == 1:
            p = q
            fp = fq
            break
    facs = _gf_factor_sqf(fp, p, rng)
    if len(facs) == 1:
        return [F]
    maxnorm = max(abs(c) for c in fz)
    mignotte = (isqrt(n + 1) + 1) * (1 << n) * maxnorm * abs(b)
    l = 1
    while p ** l <= 4 * mignotte:
        l += 1
    pl = p ** l
    lifted = _hensel_lift(fz, facs, p, l)
    result = []
    cur = F
    cands = list(range(len(lifted)))
    size = 1
    while 2 * size <= len(cands):
        progress = False
        for sub in itertools.combinations(cands, size):
            prod = [int(cur.lc)]
            for i in sub:
                prod = _zp_mul(prod, lifted[i], pl)
            g = UniPoly(_sym(prod, pl), F.var).primitive()
            if g.degree < 1:
                continue
            q, r = divmod(cur, g)
            if r.is_zero:
                result.append(g)
                cur = q.primitive()
                cands = [i for i in cands if i not in sub]
                progress = True
                break
        if not progress:
            size += 1
    if cur.degree >= 1:
        result.append(cur)
    return result


# -- public surface ------------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    """unit * prod(poly**mult) with monic irreducible polys, sorted."""

    unit: Fraction
    factors: tuple  # of (UniPoly, int)

    def expand(self) -> UniPoly:
        var = self.factors[0][0].var if self.factors else "u"
        out = UniPoly.const(self.unit, var)
        for poly, mult in self.factors:
            out = out * poly ** mult
        return out

    def __str__(self) -> str:
        bits = [] if self.unit == 1 and self.factors else [f"({frac(self.unit)})"]
        for poly, mult in self.factors:
            s = f"({poly})"
            if mult > 1:
                s += f"^{mult}"
            bits.append(s)
        return " * ".join(bits) if bits else "1"


def frac(c):
    return str(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def squarefree_part(p: UniPoly) -> UniPoly:
    """Monic product of the distinct irreducible factors: p / gcd(p, p')."""
    if p.is_zero:
        raise ExactArithError("squarefree part of zero")
    if p.degree == 0:
        return UniPoly.const(1, p.var)
    return p.exact_div(poly_gcd(p, p.derivative())).monic()


def squarefree_decomposition(p: UniPoly):
    """Yun's algorithm: (unit, [(monic squarefree s_i, i)]) with
    p = unit * prod s_i**i and the s_i pairwise coprime."""
    if p.is_zero:
        raise ExactArithError("squarefree decomposition of zero")
    unit = p.lc
    f = p.monic()
    out = []
    if f.degree == 0:
        return unit, out
    g = poly_gcd(f, f.derivative())
    c = f.exact_div(g)
    d = f.derivative().exact_div(g) - c.derivative()
    i = 1
    while c.degree > 0:
        a = poly_gcd(c, d)
        if a.degree > 0:
            out.append((a, i))
        c = c.exact_div(a)
        d = d.exact_div(a) - c.derivative()
        i += 1
    return unit, out


def factor_over_rationals(p: UniPoly) -> Factorization:
    """Complete factorization into monic irreducibles over Q."""
    if p.is_zero:
        raise ExactArithError("factorization of zero")
    unit = p.lc
    if p.degree == 0:
        return Factorization(unit, ())
    factors = []
    _, parts = squarefree_decomposition(p)
    for part, mult in parts:
        for irr in _zassenhaus(part.primitive()):
            factors.append((irr.monic(), mult))
    factors.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs, fm[1]))
    return Factorization(unit, tuple(factors))


def is_irreducible(p: UniPoly) -> bool:
    if p.degree < 1:
        return False
    fac = factor_over_rationals(p)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1
