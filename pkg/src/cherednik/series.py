"""Truncated Laurent series in one variable with polynomial coefficients.

A series stores the coefficients of ``var**low .. var**order`` (both ends
inclusive).  Everything above ``order`` is unknown; asking for it raises
``TruncationError`` rather than returning zero.  Coefficients are
``MultiPoly`` objects and may themselves involve other (Laurent) variables,
e.g. ``t**-1`` in generating functions.
"""
from __future__ import annotations

from typing import List, Sequence

from .poly import MultiPoly


class TruncationError(ArithmeticError):
    """A coefficient beyond the known truncation order was requested."""


class LaurentSeries:
    __slots__ = ("var", "low", "order", "coeffs")

    def __init__(self, var: str, low: int, coeffs: Sequence, order: int):
        coeffs = [MultiPoly.coerce(c) for c in coeffs]
        if order < low - 1:
            raise ValueError("order below the lowest stored exponent")
        # pad or cut so that coeffs covers exactly low..order
        need = order - low + 1
        if len(coeffs) < need:
            coeffs = coeffs + [MultiPoly.zero()] * (need - len(coeffs))
        elif len(coeffs) > need:
            coeffs = coeffs[:need]
        self.var = var
        self.low = low
        self.order = order
        self.coeffs: List[MultiPoly] = coeffs

    # construction ----------------------------------------------------------
    @classmethod
    def from_poly(cls, p, var: str, order: int) -> "LaurentSeries":
        """Exact Laurent polynomial ``p`` in ``var``, known up to ``order``."""
        p = MultiPoly.coerce(p)
        parts = p.as_univariate(var)
        if not parts:
            return cls(var, 0, [], order)
        low = min(min(parts), order + 1)
        coeffs = [parts.get(k, MultiPoly.zero()) for k in range(low, order + 1)]
        return cls(var, low, coeffs, order)

    @classmethod
    def geometric(cls, ratio, var: str, order: int) -> "LaurentSeries":
        """``1/(1 - ratio*var)`` to the given order."""
        ratio = MultiPoly.coerce(ratio)
        coeffs = [MultiPoly.one()]
        for _ in range(order):
            coeffs.append(coeffs[-1] * ratio)
        return cls(var, 0, coeffs, order)

    # access ------------------------------------------------------------------
    def coeff(self, k: int) -> MultiPoly:
        if k > self.order:
            raise TruncationError(
                f"coefficient of {self.var}^{k} requested but series known only to order {self.order}"
            )
        if k < self.low:
            return MultiPoly.zero()
        return self.coeffs[k - self.low]

    def residue(self) -> MultiPoly:
        """Coefficient of ``var**-1``."""
        return self.coeff(-1)

    def to_poly(self) -> MultiPoly:
        """The known part as an ordinary (Laurent) polynomial."""
        out = MultiPoly.zero()
        for i, c in enumerate(self.coeffs):
            if c:
                out = out + c * MultiPoly.var(self.var, self.low + i)
        return out

    def truncate(self, order: int) -> "LaurentSeries":
        if order > self.order:
            raise TruncationError("cannot extend a truncated series")
        return LaurentSeries(self.var, self.low, self.coeffs, order)

    # arithmetic --------------------------------------------------------------
    def _check(self, other: "LaurentSeries"):
        if self.var != other.var:
            raise ValueError("series in different variables")

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries.from_poly(other, self.var, self.order)
        self._check(other)
        order = min(self.order, other.order)
        low = min(self.low, other.low)
        coeffs = [self.coeff(k) + other.coeff(k) for k in range(low, order + 1)]
        return LaurentSeries(self.var, low, coeffs, order)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.var, self.low, [-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            other = MultiPoly.coerce(other)
            if other.degree(self.var) <= 0 and other.low_degree(self.var) >= 0:
                # scalar with respect to var
                return LaurentSeries(self.var, self.low, [c * other for c in self.coeffs], self.order)
            other = LaurentSeries.from_poly(other, self.var, _exact_order(other, self.var, self))
        self._check(other)
        low = self.low + other.low
        order = min(self.order + other.low, other.order + self.low)
        coeffs = []
        for k in range(low, order + 1):
            acc = MultiPoly.zero()
            for i in range(self.low, k - other.low + 1):
                a = self.coeff(i)
                if a:
                    b = other.coeff(k - i)
                    if b:
                        acc = acc + a * b
            coeffs.append(acc)
        return LaurentSeries(self.var, low, coeffs, order)

    __rmul__ = __mul__

    def inverse(self) -> "LaurentSeries":
        """Multiplicative inverse; the lowest coefficient must be a nonzero constant."""
        k0 = self.low
        while k0 <= self.order and not self.coeff(k0):
            k0 += 1
        if k0 > self.order:
            raise TruncationError("series is zero to known order")
        lead = self.coeff(k0)
        if not lead.is_constant():
            raise ValueError("leading coefficient must be a constant to invert")
        c0 = lead.constant_term()
        n = self.order - k0
        a = [self.coeff(k0 + i) for i in range(n + 1)]
        b: List[MultiPoly] = [MultiPoly.const(1) / c0]
        for m in range(1, n + 1):
            acc = MultiPoly.zero()
            for i in range(1, m + 1):
                if a[i]:
                    acc = acc + a[i] * b[m - i]
            b.append(-acc / c0)
        return LaurentSeries(self.var, -k0, b, n - k0)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if self.var != other.var or self.order != other.order:
            return False
        low = min(self.low, other.low)
        return all(self.coeff(k) == other.coeff(k) for k in range(low, self.order + 1))

    def __repr__(self):
        return f"LaurentSeries({self.var}, {self.to_poly()} + O({self.var}^{self.order + 1}))"


def _exact_order(p: MultiPoly, var: str, like: LaurentSeries) -> int:
    # an exact polynomial is known to every order; pick one large enough not to
    # limit the product with ``like``
    return like.order - like.low + max(p.degree(var), 0) + 1
