"""Exact polynomial arithmetic over the rationals.

Coefficients are fractions.Fraction values throughout: arbitrary precision,
always in lowest terms with positive denominator, so canonical form holds by
construction. Univariate polynomials are dense ascending coefficient tuples,
bivariate ones sparse exponent dictionaries. Everything here is deterministic
and exact; no floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable


class ExactArithError(ValueError):
    """Contract violation: inexact division, variable mismatch, zero input."""


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"not a rational scalar: {c!r}")


def frac_str(c) -> str:
    """Canonical string for a rational: "7", "-7", "45/4"."""
    c = _frac(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class UniPoly:
    """Dense univariate polynomial over Q.

    coeffs[k] is the coefficient of var**k; trailing zeros are stripped, so
    equal polynomials compare equal structurally. Treated as immutable.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs: Iterable = (), var: str = "u"):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.var = var
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, var: str = "u") -> "UniPoly":
        return cls((), var)

    @classmethod
    def const(cls, c, var: str = "u") -> "UniPoly":
        return cls((c,), var)

    @classmethod
    def gen(cls, var: str = "u") -> "UniPoly":
        return cls((0, 1), var)

    @classmethod
    def from_json(cls, obj: dict) -> "UniPoly":
        return cls([Fraction(s) for s in obj["coeffs"]], obj["var"])

    def to_json(self) -> dict:
        return {"var": self.var, "coeffs": [frac_str(c) for c in self.coeffs]}

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def _like(self, coeffs) -> "UniPoly":
        return UniPoly(coeffs, self.var)

    def _check(self, other: "UniPoly") -> None:
        if self.var != other.var and self.coeffs and other.coeffs:
            raise ExactArithError(f"variable mismatch: {self.var} vs {other.var}")

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly.const(other, self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.coeffs != other.coeffs:
            return False
        return self.is_zero or self.degree == 0 or self.var == other.var

    def __hash__(self):
        return hash((self.var if self.coeffs else "", self.coeffs))

    def __neg__(self) -> "UniPoly":
        return self._like([-c for c in self.coeffs])

    def __add__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            other = UniPoly.const(other, self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            [self[k] + other[k] for k in range(n)],
            self.var if self.coeffs else other.var,
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, UniPoly) else UniPoly.const(-_frac(other), self.var))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            return self._like([c * a for a in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        self._check(other)
        if self.is_zero or other.is_zero:
            return UniPoly.zero(self.var if self.coeffs else other.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return UniPoly(out, self.var if self.coeffs else other.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ExactArithError("negative power of a polynomial")
        out = UniPoly.const(1, self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __divmod__(self, other: "UniPoly"):
        if not isinstance(other, UniPoly) or other.is_zero:
            raise ExactArithError("division by zero polynomial")
        self._check(other)
        if self.degree < other.degree:
            return UniPoly.zero(self.var), self
        q = [Fraction(0)] * (self.degree - other.degree + 1)
        r = list(self.coeffs)
        d = other.lc
        db = other.degree
        while len(r) - 1 >= db and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < db:
                break
            k = len(r) - 1 - db
            c = r[-1] / d
            q[k] = c
            for i, bc in enumerate(other.coeffs):
                r[i + k] -= c * bc
        return self._like(q), self._like(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ExactArithError("inexact polynomial division")
        return q

    def derivative(self) -> "UniPoly":
        return self._like([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, value):
        """Horner evaluation; value may live in any commutative Q-algebra."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * value + c
        return Fraction(0) if acc is None else acc

    def monic(self) -> "UniPoly":
        if self.is_zero or self.lc == 1:
            return self
        d = self.lc
        return self._like([c / d for c in self.coeffs])

    def content(self) -> Fraction:
        """Signed content: self == content() * primitive()."""
        if self.is_zero:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            num = _int_gcd(num, c.numerator)
            den = den * c.denominator // _int_gcd(den, c.denominator)
        c = Fraction(num, den)
        return -c if self.lc < 0 else c

    def primitive(self) -> "UniPoly":
        """Integer-coefficient associate with content 1, positive lc."""
        if self.is_zero:
            return self
        c = self.content()
        return self._like([a / c for a in self.coeffs])

    def inflate(self, k: int) -> "UniPoly":
        """Return p(var**k)."""
        if k < 1:
            raise ExactArithError("inflate needs k >= 1")
        out = [Fraction(0)] * (k * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return self._like(out)

    def int_coeffs(self) -> list:
        """Coefficients as Python ints; requires an integer polynomial."""
        for c in self.coeffs:
            if c.denominator != 1:
                raise ExactArithError("non-integer coefficient")
        return [c.numerator for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self[k]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = frac_str(mag)
            else:
                xs = self.var if k == 1 else f"{self.var}^{k}"
                body = xs if mag == 1 else f"{frac_str(mag)}*{xs}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = body if sign == "+" else "-" + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"UniPoly({self})"


class BiPoly:
    """Sparse bivariate polynomial over Q: {(i, j): c} means c*v0**i*v1**j."""

    __slots__ = ("vars", "terms")

    def __init__(self, terms=None, vars=("r", "x")):
        vars = tuple(vars)
        if len(vars) != 2 or vars[0] == vars[1]:
            raise ExactArithError(f"need two distinct variables, got {vars}")
        d = {}
        for (i, j), c in (terms or {}).items():
            c = _frac(c)
            if c:
                d[(int(i), int(j))] = c
        self.vars = vars
        self.terms = d

    @classmethod
    def zero(cls, vars=("r", "x")) -> "BiPoly":
        return cls({}, vars)

    @classmethod
    def const(cls, c, vars=("r", "x")) -> "BiPoly":
        return cls({(0, 0): c}, vars)

    @classmethod
    def gen(cls, name: str, vars=("r", "x")) -> "BiPoly":
        if name == vars[0]:
            return cls({(1, 0): 1}, vars)
        if name == vars[1]:
            return cls({(0, 1): 1}, vars)
        raise ExactArithError(f"{name} is not one of {vars}")

    @classmethod
    def from_uni(cls, p: UniPoly, vars=("r", "x")) -> "BiPoly":
        if p.var not in vars:
            raise ExactArithError(f"{p.var} is not one of {vars}")
        axis = vars.index(p.var)
        terms = {}
        for k, c in enumerate(p.coeffs):
            if c:
                terms[(k, 0) if axis == 0 else (0, k)] = c
        return cls(terms, vars)

    @classmethod
    def from_json(cls, obj: dict) -> "BiPoly":
        terms = {tuple(t["exp"]): Fraction(t["coeff"]) for t in obj["terms"]}
        return cls(terms, tuple(obj["vars"]))

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {"coeff": frac_str(self.terms[e]), "exp": list(e)}
                for e in sorted(self.terms)
            ],
        }

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _axis(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise ExactArithError(f"{var} is not one of {self.vars}") from None

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def degree_in(self, var: str) -> int:
        if not self.terms:
            return -1
        ax = self._axis(var)
        return max(e[ax] for e in self.terms)

    def _check(self, other: "BiPoly") -> None:
        if self.vars != other.vars:
            raise ExactArithError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other, self.vars)
        if not isinstance(other, BiPoly):
            return NotImplemented
        if self.terms != other.terms:
            return False
        return not self.terms or self.vars == other.vars or self.total_degree() == 0

    def __neg__(self) -> "BiPoly":
        return BiPoly({e: -c for e, c in self.terms.items()}, self.vars)

    def __add__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other, self.vars)
        if not isinstance(other, BiPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return BiPoly(out, self.vars)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other, self.vars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            if not c:
                return BiPoly.zero(self.vars)
            return BiPoly({e: c * a for e, a in self.terms.items()}, self.vars)
        if not isinstance(other, BiPoly):
            return NotImplemented
        self._check(other)
        out = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                e = (i1 + i2, j1 + j2)
                s = out.get(e, Fraction(0)) + a * b
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return BiPoly(out, self.vars)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BiPoly":
        if k < 0:
            raise ExactArithError("negative power of a polynomial")
        out = BiPoly.const(1, self.vars)
        for _ in range(k):
            out = out * self
        return out

    def partial(self, var: str) -> "BiPoly":
        ax = self._axis(var)
        out = {}
        for e, c in self.terms.items():
            k = e[ax]
            if k:
                ne = (k - 1, e[1]) if ax == 0 else (e[0], k - 1)
                out[ne] = out.get(ne, Fraction(0)) + k * c
        return BiPoly(out, self.vars)

    def coeff_list_in(self, var: str) -> list:
        """Ascending coefficients in `var`, each a UniPoly in the other variable."""
        ax = self._axis(var)
        other = self.vars[1 - ax]
        deg = self.degree_in(var)
        if deg < 0:
            return []
        buckets = [dict() for _ in range(deg + 1)]
        for e, c in self.terms.items():
            buckets[e[ax]][e[1 - ax]] = c
        out = []
        for b in buckets:
            coeffs = [b.get(k, Fraction(0)) for k in range(max(b) + 1)] if b else []
            out.append(UniPoly(coeffs, other))
        return out

    @classmethod
    def from_coeff_list(cls, coeffs, var: str, vars=("r", "x")) -> "BiPoly":
        ax = vars.index(var)
        terms = {}
        for k, p in enumerate(coeffs):
            for m, c in enumerate(p.coeffs):
                if c:
                    terms[(k, m) if ax == 0 else (m, k)] = c
        return cls(terms, vars)

    def subs(self, var: str, value) -> UniPoly:
        """Substitute a rational for one variable; returns UniPoly in the other."""
        value = _frac(value)
        ax = self._axis(var)
        other = self.vars[1 - ax]
        out = {}
        for e, c in self.terms.items():
            k = e[1 - ax]
            out[k] = out.get(k, Fraction(0)) + c * value ** e[ax]
        deg = max(out) if out else -1
        return UniPoly([out.get(k, Fraction(0)) for k in range(deg + 1)], other)

    def eval(self, v0, v1):
        """Evaluate at (vars[0], vars[1]) = (v0, v1) over any commutative ring."""
        acc = None
        for (i, j), c in sorted(self.terms.items()):
            term = c
            if i:
                term = term * _ring_pow(v0, i)
            if j:
                term = term * _ring_pow(v1, j)
            acc = term if acc is None else acc + term
        return Fraction(0) if acc is None else acc

    def exchange_vars(self) -> "BiPoly":
        """Substitute vars[0] <-> vars[1], keeping the variable order."""
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()}, self.vars)

    def is_even_in(self, var: str) -> bool:
        ax = self._axis(var)
        return all(e[ax] % 2 == 0 for e in self.terms)

    def halve_exponents(self, var: str, new_name: str = None) -> "BiPoly":
        """Substitute var**2 -> var; requires the polynomial even in `var`."""
        if not self.is_even_in(var):
            raise ExactArithError(f"not even in {var}")
        ax = self._axis(var)
        out = {}
        for e, c in self.terms.items():
            ne = (e[0] // 2, e[1]) if ax == 0 else (e[0], e[1] // 2)
            out[ne] = c
        vars = list(self.vars)
        if new_name:
            vars[ax] = new_name
        return BiPoly(out, tuple(vars))

    def content(self) -> Fraction:
        """Signed content wrt the lex-leading term: self == content()*primitive()."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = _int_gcd(num, c.numerator)
            den = den * c.denominator // _int_gcd(den, c.denominator)
        c = Fraction(num, den)
        lead = self.terms[max(self.terms)]
        return -c if lead < 0 else c

    def primitive(self) -> "BiPoly":
        """Integer-coefficient associate, content 1, lex-leading coefficient > 0."""
        if not self.terms:
            return self
        c = self.content()
        return BiPoly({e: a / c for e, a in self.terms.items()}, self.vars)

    def divmod_in(self, other: "BiPoly", var: str):
        """Long division in `var`; the divisor's leading coefficient in `var`
        must divide exactly at every step (it is monic wherever this is used)."""
        self._check(other)
        A = self.coeff_list_in(var)
        B = other.coeff_list_in(var)
        if not B:
            raise ExactArithError("division by zero polynomial")
        db = len(B) - 1
        lead = B[-1]
        q = [UniPoly.zero(B[-1].var) for _ in range(max(len(A) - db, 0))]
        r = list(A)
        while len(r) - 1 >= db:
            while r and r[-1].is_zero:
                r.pop()
            if len(r) - 1 < db:
                break
            k = len(r) - 1 - db
            c = r[-1].exact_div(lead)
            q[k] = c
            for i, bc in enumerate(B):
                r[i + k] = r[i + k] - c * bc
        qp = BiPoly.from_coeff_list(q, var, self.vars)
        rp = BiPoly.from_coeff_list([p for p in r], var, self.vars)
        return qp, rp

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        def mono(e):
            i, j = e
            bits = []
            for name, k in ((self.vars[0], i), (self.vars[1], j)):
                if k == 1:
                    bits.append(name)
                elif k > 1:
                    bits.append(f"{name}^{k}")
            return "*".join(bits)
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            m = mono(e)
            mag = abs(c)
            if not m:
                body = frac_str(mag)
            elif mag == 1:
                body = m
            else:
                body = f"{frac_str(mag)}*{m}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = body if sign == "+" else "-" + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"BiPoly({self})"


def _ring_pow(v, k: int):
    out = None
    base = v
    while k:
        if k & 1:
            out = base if out is None else out * base
        k >>= 1
        if k:
            base = base * base
    return out


class RatMatrix:
    """Immutable square matrix over Q."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rs = tuple(tuple(_frac(c) for c in row) for row in rows)
        n = len(rs)
        if any(len(row) != n for row in rs):
            raise ExactArithError("matrix must be square")
        self.rows = rs

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other) -> bool:
        return isinstance(other, RatMatrix) and self.rows == other.rows

    def __mul__(self, other: "RatMatrix") -> "RatMatrix":
        if not isinstance(other, RatMatrix):
            return NotImplemented
        n = self.n
        if other.n != n:
            raise ExactArithError("dimension mismatch")
        ocols = list(zip(*other.rows))
        return RatMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ocols] for row in self.rows]
        )

    def trace(self) -> Fraction:
        return sum(self.rows[i][i] for i in range(self.n))

    def det(self) -> Fraction:
        cp = char_poly(self)
        return (-1) ** self.n * cp[0]

    def __repr__(self) -> str:
        return f"RatMatrix({[list(map(frac_str, row)) for row in self.rows]})"


# ---------------------------------------------------------------------------
# gcd, resultants, characteristic polynomial
# ---------------------------------------------------------------------------


def _deg(a) -> int:
    return len(a) - 1


def _trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _prem(a, b):
    """Pseudo-remainder rem(lc(b)**(deg a - deg b + 1) * a, b), ring ops only."""
    db = _deg(b)
    d = b[-1]
    r = list(a)
    e = _deg(a) - db + 1
    while r and _deg(r) >= db:
        lead = r[-1]
        k = _deg(r) - db
        r = [d * c for c in r]
        for i, bc in enumerate(b):
            r[i + k] = r[i + k] - lead * bc
        _trim(r)
        e -= 1
    if e > 0:
        de = d ** e
        r = [de * c for c in r]
    return r


def _prs_resultant(A, B, one, exact_div):
    """Resultant of two coefficient lists via the subresultant PRS.

    Works over any integral domain whose elements support +, -, *, ** and the
    supplied exact division. Convention: res(p, q) = lc(p)**deg(q) times the
    product of q over the roots of p.
    """
    a = _trim(list(A))
    b = _trim(list(B))
    if not a or not b:
        raise ExactArithError("resultant of zero polynomial")
    s = 1
    if _deg(a) < _deg(b):
        if (_deg(a) % 2) and (_deg(b) % 2):
            s = -s
        a, b = b, a
    if _deg(b) == 0:
        res = b[0] ** _deg(a) if _deg(a) > 0 else one
        return res if s == 1 else -res
    g = one
    h = one
    while True:
        da, db = _deg(a), _deg(b)
        delta = da - db
        if (da % 2) and (db % 2):
            s = -s
        r = _prem(a, b)
        if not r:
            return one * 0
        divisor = g * h ** delta
        a, b = b, _trim([exact_div(c, divisor) for c in r])
        g = a[-1]
        if delta > 0:
            h = exact_div(g ** delta, h ** (delta - 1))
        if _deg(b) == 0:
            break
    da = _deg(a)
    res = exact_div(b[-1] ** da, h ** (da - 1))
    return res if s == 1 else -res


def resultant(p: UniPoly, q: UniPoly) -> Fraction:
    """res(p, q) over Q; zero iff p and q share a root."""
    if p.is_zero or q.is_zero:
        raise ExactArithError("resultant of zero polynomial")
    p._check(q)
    return _prs_resultant(list(p.coeffs), list(q.coeffs), Fraction(1),
                          lambda x, y: x / y)


def resultant_in(p: BiPoly, q: BiPoly, var: str) -> UniPoly:
    """Eliminate `var` from two bivariate polynomials; UniPoly in the other."""
    p._check(q)
    ax = p._axis(var)
    other = p.vars[1 - ax]
    A = p.coeff_list_in(var)
    B = q.coeff_list_in(var)
    if not A or not B:
        raise ExactArithError("resultant of zero polynomial")
    one = UniPoly.const(1, other)
    res = _prs_resultant(A, B, one, lambda x, y: x.exact_div(y))
    return res if isinstance(res, UniPoly) else UniPoly.const(res, other)


_CERT_PRIMES = (2147483647, 2147482951, 2147482763)


def _gcd_degree_mod(a: UniPoly, b: UniPoly, p: int) -> int:
    """Degree of gcd(a, b) modulo p; inputs are integer polynomials."""
    fa = [c.numerator % p for c in a.coeffs]
    fb = [c.numerator % p for c in b.coeffs]
    _trim(fa)
    _trim(fb)
    while fb:
        db = len(fb) - 1
        inv = pow(fb[-1], p - 2, p)
        r = list(fa)
        while len(r) - 1 >= db:
            c = r[-1] * inv % p
            k = len(r) - 1 - db
            for i, bc in enumerate(fb):
                r[i + k] = (r[i + k] - c * bc) % p
            _trim(r)
            if not r:
                break
        fa, fb = fb, r
    return len(fa) - 1


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd over Q (primitive PRS with a modular coprimality fast path)."""
    if p.is_zero and q.is_zero:
        return UniPoly.zero(p.var)
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    p._check(q)
    var = p.var
    a = p.primitive()
    b = q.primitive()
    # One prime with constant gcd mod p certifies coprimality over Q.
    for pr in _CERT_PRIMES:
        if a.lc.numerator % pr == 0 or b.lc.numerator % pr == 0:
            continue
        if _gcd_degree_mod(a, b, pr) == 0:
            return UniPoly.const(1, var)
        break
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = UniPoly(_prem(list(a.coeffs), list(b.coeffs)), var)
        a, b = b, r.primitive()
    return a.monic()


def char_poly(m: RatMatrix, var: str = "u") -> UniPoly:
    """Monic characteristic polynomial det(var*I - m), division-free (Berkowitz)."""
    n = m.n
    rows = m.rows
    p = [Fraction(1)]
    for i in range(n):
        a = rows[i][i]
        rvec = rows[i][:i]
        cvec = [rows[j][i] for j in range(i)]
        sub = [row[:i] for row in rows[:i]]
        t = [Fraction(1), -a]
        v = list(cvec)
        for _ in range(i):
            t.append(-sum(x * y for x, y in zip(rvec, v)))
            v = [sum(sub[r][c] * v[c] for c in range(i)) for r in range(i)]
        q = [Fraction(0)] * (i + 2)
        for j, pj in enumerate(p):
            if not pj:
                continue
            for k, tk in enumerate(t):
                if j + k < i + 2 and tk:
                    q[j + k] += tk * pj
        p = q
    return UniPoly(list(reversed(p)), var)
