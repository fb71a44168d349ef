"""Chebyshev-like trace polynomial sequences.

f_0 = 0, f_1 = 1, f_{j+1} = u*f_j - f_{j-1}: the trace of the j-th power of
an SL2 element with trace u satisfies tr(M^j) = u*f_j(u) - 2*f_{j-1}(u).
g_j = f_j - f_{j-1} has degree j-1 (monic), and the Wronskian-like
G_j = g_{j+1}'*g_j - g_{j+1}*g_j' is monic of degree 2j-2; its roots are the
r-coordinates where the two components of the character variety meet.
"""

from __future__ import annotations

import threading

from .ratpoly import UniPoly

_lock = threading.Lock()
_f: list = [UniPoly.zero("u"), UniPoly.const(1, "u")]
_g: dict = {}
_G: dict = {}


def f_poly(j: int) -> UniPoly:
    """f_j, degree j-1 for j >= 1; f_0 = 0."""
    if j < 0:
        raise ValueError("f_poly needs j >= 0")
    if j >= len(_f):
        with _lock:
            u = UniPoly.gen("u")
            while len(_f) <= j:
                _f.append(u * _f[-1] - _f[-2])
    return _f[j]


def g_poly(j: int) -> UniPoly:
    """g_j = f_j - f_{j-1}, monic of degree j-1; needs j >= 1."""
    if j < 1:
        raise ValueError("g_poly needs j >= 1")
    if j not in _g:
        val = f_poly(j) - f_poly(j - 1)
        with _lock:
            _g.setdefault(j, val)
    return _g[j]


def G_poly(j: int) -> UniPoly:
    """G_j = g_{j+1}'*g_j - g_{j+1}*g_j', monic of degree 2j-2; needs j >= 1."""
    if j < 1:
        raise ValueError("G_poly needs j >= 1")
    if j not in _G:
        gj = g_poly(j)
        gj1 = g_poly(j + 1)
        val = gj1.derivative() * gj - gj1 * gj.derivative()
        with _lock:
            _G.setdefault(j, val)
    return _G[j]


def identity_checks(j: int) -> dict:
    """The nine structural identities at index j, as {label: bool}.

    These are the working facts the rest of the library leans on: G_j is the
    squarefree intersection polynomial, f_j(2) = j keeps r = 2 off it, and
    the Wronskian relations drive the trace recursions.
    """
    from fractions import Fraction

    from .ratpoly import poly_gcd

    if j < 2:
        raise ValueError("identity_checks needs j >= 2")
    u = UniPoly.gen("u")
    fj = f_poly(j)
    fjm = f_poly(j - 1)
    fjp = f_poly(j + 1)
    gj = g_poly(j)
    gjp = g_poly(j + 1)
    Gj = G_poly(j)
    diff = Gj - fj * fj
    return {
        "shifted-trace": (u + 2) * Gj == f_poly(2 * j) + 2 * j,
        "double-index": f_poly(2 * j) == u * fj * fj - 2 * fj * fjm,
        "value-at-two": fj(Fraction(2)) == j,
        "f-squarefree": poly_gcd(fj, fj.derivative()).degree == 0,
        "G-f-coprime": poly_gcd(Gj, fj).degree == 0,
        "f-wronskian": fj * fj - fjm * fjp == UniPoly.const(1),
        "g-wronskian": fj * gj - fjm * gjp == UniPoly.const(1),
        "mod-two": all(
            c.denominator == 1 and c.numerator % 2 == 0 for c in diff.coeffs
        ),
        "G-squarefree": poly_gcd(Gj, Gj.derivative()).degree == 0,
    }


def failed_identities(j_max: int) -> list:
    """(j, label) pairs of identity failures for 2 <= j <= j_max."""
    out = []
    for j in range(2, j_max + 1):
        for label, ok in identity_checks(j).items():
            if not ok:
                out.append((j, label))
    return out
