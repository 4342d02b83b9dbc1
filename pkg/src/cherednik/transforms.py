"""Difference-equation and finite-difference transforms on univariate polynomials.

Both operate on polynomials in a single variable (default ``z``) whose
coefficients may be arbitrary ``MultiPoly`` parameters.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict

from .poly import MultiPoly


def _coeffs(p, var: str) -> Dict[int, MultiPoly]:
    p = MultiPoly.coerce(p)
    parts = p.as_univariate(var)
    if parts and min(parts) < 0:
        raise ValueError(f"expected a polynomial in {var}, got negative powers")
    return parts


def shift(p, s, var: str = "z") -> MultiPoly:
    """p(var + s) for an exact scalar (or polynomial) shift s."""
    parts = _coeffs(p, var)
    z = MultiPoly.var(var)
    arg = z + s
    out = MultiPoly.zero()
    for k, c in parts.items():
        out = out + c * arg ** k
    return out


def discrete_antiderivative(r, var: str = "z") -> MultiPoly:
    """The f with f(z) - f(z-1) = r(z) and f(0) = 0."""
    rem = dict(_coeffs(r, var))
    if not rem:
        return MultiPoly.zero()
    f: Dict[int, MultiPoly] = {}
    for d in range(max(rem), -1, -1):
        c = rem.pop(d, None)
        if not c:
            continue
        # z^{d+1} - (z-1)^{d+1} = (d+1) z^d + lower
        a = c / (d + 1)
        f[d + 1] = a
        for i in range(d):
            # coefficient of z^i in z^{d+1} - (z-1)^{d+1}
            k = comb(d + 1, i) * (-1) ** (d - i)
            rem[i] = rem.get(i, MultiPoly.zero()) - a * k
    return MultiPoly.from_univariate(f, var)


def difference(f, var: str = "z") -> MultiPoly:
    """f(z) - f(z-1)."""
    return MultiPoly.coerce(f) - shift(f, -1, var)


@lru_cache(maxsize=None)
def _forward_monomial(k: int, n: int, var: str) -> MultiPoly:
    # (e^{d/2} - e^{-d/2})^{n-1} applied to z^{n-1} z^k
    half = Fraction(n - 1, 2)
    base = MultiPoly.var(var, n - 1 + k)
    out = MultiPoly.zero()
    for j in range(n):
        out = out + shift(base, half - j, var) * (comb(n - 1, j) * (-1) ** j)
    return out


def sinh_transform(p, n: int, direction: str = "forward", var: str = "z") -> MultiPoly:
    """f = (2 sinh(d/2))^{n-1} z^{n-1} w(z), or its inverse.

    The operator sends z^k to a polynomial of degree k with leading
    coefficient (k+n-1)!/k! and only terms of the same parity, so the
    inverse is a top-down triangular solve.
    """
    if n < 1:
        raise ValueError("rank must be positive")
    parts = _coeffs(p, var)
    if direction == "forward":
        out = MultiPoly.zero()
        for k, c in parts.items():
            out = out + c * _forward_monomial(k, n, var)
        return out
    if direction != "inverse":
        raise ValueError("direction must be 'forward' or 'inverse'")
    rem = dict(parts)
    w: Dict[int, MultiPoly] = {}
    while rem:
        d = max(rem)
        c = rem.pop(d)
        if not c:
            continue
        image = _forward_monomial(d, n, var).as_univariate(var)
        lead = Fraction(factorial(d + n - 1), factorial(d))
        if image.get(d) != lead:
            raise ArithmeticError("internal: unexpected leading coefficient")
        a = c / lead
        w[d] = a
        for i, ci in image.items():
            if i == d:
                continue
            rem[i] = rem.get(i, MultiPoly.zero()) - a * ci
            if not rem[i]:
                del rem[i]
    return MultiPoly.from_univariate(w, var)
