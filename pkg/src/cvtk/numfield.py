"""Arithmetic in Q[r]/(m) for a monic irreducible modulus m.

Elements are coordinate vectors in the power basis 1, r, ..., r^(k-1).
Minimal polynomials come from the characteristic polynomial of the
multiplication-by-alpha matrix: the modulus is irreducible, so that
characteristic polynomial is a power of the minimal polynomial and the
squarefree part recovers it exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .factor import iter_primes, squarefree_part
from .ratpoly import ExactArithError, RatMatrix, UniPoly, char_poly

_TRIAL_BOUND = 10 ** 6


class NumberField:
    """Q[r]/(m); the caller guarantees m monic irreducible over Q."""

    __slots__ = ("modulus", "_reduction")

    def __init__(self, modulus: UniPoly):
        if modulus.degree < 1 or modulus.lc != 1:
            raise ExactArithError("modulus must be monic of positive degree")
        self.modulus = modulus
        k = modulus.degree
        # reduction table: r^k .. r^(2k-2) written in the power basis
        table = []
        prev = [-c for c in modulus.coeffs[:-1]]
        table.append(tuple(prev))
        for _ in range(k - 2):
            shifted = [Fraction(0)] + prev[:-1]
            top = prev[-1]
            prev = [s + top * t for s, t in zip(shifted, table[0])]
            table.append(tuple(prev))
        self._reduction = tuple(table)

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __repr__(self) -> str:
        return f"NumberField({self.modulus})"

    def elem(self, coeffs) -> "NFElem":
        cs = [Fraction(c) if not isinstance(c, Fraction) else c for c in coeffs]
        if len(cs) > self.degree:
            raise ExactArithError("coordinate vector too long")
        cs += [Fraction(0)] * (self.degree - len(cs))
        return NFElem(self, tuple(cs))

    def zero(self) -> "NFElem":
        return self.elem(())

    def one(self) -> "NFElem":
        return self.elem((1,))

    def gen(self) -> "NFElem":
        if self.degree == 1:
            return self.elem((-self.modulus[0],))
        return self.elem((0, 1))

    def from_poly(self, p: UniPoly) -> "NFElem":
        """Image of a polynomial in the generator (reduced mod the modulus)."""
        m = UniPoly(self.modulus.coeffs, p.var)
        return self.elem((p % m).coeffs)


@dataclass(frozen=True)
class NFElem:
    """Element of a NumberField, coordinates in the power basis."""

    field: NumberField
    coeffs: tuple

    @property
    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(not c for c in self.coeffs[1:])

    def _coerce(self, other):
        if isinstance(other, NFElem):
            if other.field != self.field:
                raise ExactArithError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.elem((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElem(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return NFElem(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElem(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElem(self.field, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        k = self.field.degree
        conv = [Fraction(0)] * (2 * k - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    conv[i + j] += a * b
        out = conv[:k]
        red = self.field._reduction
        for i in range(k, 2 * k - 1):
            c = conv[i]
            if c:
                row = red[i - k]
                out = [s + c * t for s, t in zip(out, row)]
        return NFElem(self.field, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def inverse(self) -> "NFElem":
        """Extended Euclid against the modulus."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero field element")
        var = self.field.modulus.var
        a = UniPoly(self.coeffs, var)
        b = self.field.modulus
        r0, r1 = a, b
        s0, s1 = UniPoly.const(1, var), UniPoly.zero(var)
        while not r1.is_zero:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        # r0 = gcd = s0*a + t*b, a nonzero mod irreducible b => gcd constant
        if r0.degree != 0:
            raise ExactArithError("modulus is not irreducible")
        inv = s0 * (1 / r0.coeffs[0])
        return self.field.from_poly(inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def to_json(self) -> dict:
        from .ratpoly import frac_str

        return {"basis": self.field.modulus.var, "coords": [frac_str(c) for c in self.coeffs]}

    def __repr__(self) -> str:
        var = self.field.modulus.var
        return f"NFElem({UniPoly(self.coeffs, var)})"


def multiplication_matrix(a: NFElem) -> RatMatrix:
    """Matrix of x -> a*x in the power basis (columns are a * r^i)."""
    k = a.field.degree
    cols = []
    cur = a
    gen = a.field.gen()
    for _ in range(k):
        cols.append(cur.coeffs)
        cur = cur * gen
    return RatMatrix([[cols[j][i] for j in range(k)] for i in range(k)])


def nf_minimal_polynomial(a: NFElem, var: str = "u") -> UniPoly:
    """Monic minimal polynomial of a over Q."""
    cp = char_poly(multiplication_matrix(a), var)
    mp = squarefree_part(cp)
    # the char poly of an element of a field is a power of one irreducible
    val = mp(a)
    if not (val.is_zero if isinstance(val, NFElem) else val == 0):
        raise ExactArithError("minimal polynomial does not vanish; bad modulus?")
    if a.field.degree % mp.degree != 0:
        raise ExactArithError("minimal polynomial degree must divide field degree")
    return mp


@dataclass(frozen=True)
class IntegralityVerdict:
    """2-adic (and general p-adic) integrality certificate for an algebraic
    number, read off the denominators of its monic minimal polynomial."""

    is_algebraic_integer: bool
    denominator_lcm: int
    bad_primes: tuple
    composite_cofactor: int | None = None

    @property
    def prime_set_complete(self) -> bool:
        return self.composite_cofactor is None

    def to_json(self) -> dict:
        return {
            "integral": self.is_algebraic_integer,
            "denominator_lcm": str(self.denominator_lcm),
            "bad_primes": list(self.bad_primes),
            "prime_set_complete": self.prime_set_complete,
        }


def integrality_verdict(min_poly: UniPoly) -> IntegralityVerdict:
    """Verdict for the algebraic numbers with the given monic minimal polynomial.

    An algebraic number is an algebraic integer iff its monic minimal
    polynomial has integer coefficients; the primes dividing the coefficient
    denominators are exactly the primes where it fails to be integral.
    """
    if min_poly.lc != 1:
        raise ExactArithError("minimal polynomial must be monic")
    denom = lcm(*(c.denominator for c in min_poly.coeffs))
    if denom == 1:
        return IntegralityVerdict(True, 1, ())
    primes = []
    rest = denom
    cofactor = None
    for p in iter_primes():
        if rest == 1:
            break
        if p > _TRIAL_BOUND:
            cofactor = rest  # reported verbatim, prime set incomplete
            break
        if p * p > rest:
            primes.append(rest)  # no divisor below its square root: prime
            rest = 1
            break
        while rest % p == 0:
            primes.append(p)
            rest //= p
    bad = tuple(sorted(set(primes)))
    return IntegralityVerdict(False, denom, bad, cofactor)
