"""Sparse multivariate polynomials with exact rational coefficients.

A monomial is a tuple of ``(name, exponent)`` pairs sorted by variable name,
so polynomials over different variable sets combine without conversion.
Coefficients are Python ``int`` or ``fractions.Fraction``; no floating point
value ever enters.  Negative exponents are allowed (Laurent polynomials are
needed for the ``t^{-k}`` bookkeeping in residue computations), but
``exact_div`` only accepts genuine polynomials.

Instances are treated as immutable.
"""
from __future__ import annotations

import heapq
import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Tuple, Union

Scalar = Union[int, Fraction]
Monomial = Tuple[Tuple[str, int], ...]

_SCALARS = (int, Fraction)
_NAME_RE = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\[([0-9,\s-]*)\])?$")


@lru_cache(maxsize=None)
def var_key(name: str):
    """Natural sort key: ``e[1,10]`` sorts after ``e[1,9]``."""
    m = _NAME_RE.match(name)
    if not m:
        return (name, ())
    idx = m.group(2)
    if idx is None or not idx.strip():
        return (m.group(1), ())
    return (m.group(1), tuple(int(s) for s in idx.split(",")))


def as_scalar(c) -> Scalar:
    """Normalise an exact scalar; Fractions with denominator 1 become ints."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, str):
        return as_scalar(Fraction(c))
    raise TypeError(f"not an exact scalar: {c!r}")


def scalar_div(a: Scalar, b: Scalar) -> Scalar:
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return as_scalar(Fraction(a) / Fraction(b))


def format_scalar(c: Scalar) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        s = d.get(v, 0) + e
        if s:
            d[v] = s
        else:
            del d[v]
    return tuple(sorted(d.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_sort_key(m: Monomial):
    """Graded-lex key (larger key = larger monomial) under natural variable order."""
    d = dict(m)
    names = sorted(d, key=var_key)
    # lex: compare exponents of variables in natural order, earliest first
    return (mono_degree(m), tuple((_neg_key(var_key(v)), d[v]) for v in names))


def _neg_key(k):
    # invert the variable order inside a tuple comparison so that an earlier
    # variable with positive exponent wins
    # the trailing sentinel makes a proper prefix ("z" vs "zeta") sort first
    name, idx = k
    big = 1 << 30
    return (tuple(-ord(ch) for ch in name) + (big,), tuple(-i for i in idx) + (big,))


class MultiPoly:
    """Exact sparse polynomial.  Use ``MultiPoly.var`` / ``MultiPoly.const`` to build."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        d: Dict[Monomial, Scalar] = {}
        if terms:
            for m, c in terms.items():
                c = as_scalar(c)
                if c:
                    m = tuple(sorted((v, e) for v, e in m if e))
                    s = d.get(m, 0) + c
                    if s:
                        d[m] = s
                    else:
                        d.pop(m, None)
        self._terms = d
        self._hash = None

    @classmethod
    def _raw(cls, d: Dict[Monomial, Scalar]) -> "MultiPoly":
        p = cls.__new__(cls)
        p._terms = d
        p._hash = None
        return p

    # constructors -------------------------------------------------------
    @classmethod
    def const(cls, c) -> "MultiPoly":
        c = as_scalar(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "MultiPoly":
        if exp == 0:
            return cls._raw({(): 1})
        return cls._raw({((name, exp),): 1})

    @classmethod
    def coerce(cls, x) -> "MultiPoly":
        if isinstance(x, MultiPoly):
            return x
        return cls.const(x)

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls._raw({(): 1})

    # inspection ---------------------------------------------------------
    @property
    def terms(self) -> Dict[Monomial, Scalar]:
        return self._terms

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    @property
    def variables(self) -> Tuple[str, ...]:
        vs = {v for m in self._terms for v, _ in m}
        return tuple(sorted(vs, key=var_key))

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_term(self) -> Scalar:
        return self._terms.get((), 0)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(mono_degree(m) for m in self._terms)

    def degree(self, name: str) -> int:
        """Largest exponent of ``name`` (``-1`` for the zero polynomial)."""
        if not self._terms:
            return -1
        return max(dict(m).get(name, 0) for m in self._terms)

    def low_degree(self, name: str) -> int:
        if not self._terms:
            return 0
        return min(dict(m).get(name, 0) for m in self._terms)

    def sorted_terms(self):
        """Terms in decreasing graded-lex order (the canonical print order)."""
        return sorted(self._terms.items(), key=lambda t: mono_sort_key(t[0]), reverse=True)

    def leading_term(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms.items(), key=lambda t: mono_sort_key(t[0]))

    def leading_coeff(self) -> Scalar:
        return self.leading_term()[1]

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, _SCALARS):
            if not other:
                return self
            d = dict(self._terms)
            s = d.get((), 0) + other
            if s:
                d[()] = as_scalar(s)
            else:
                d.pop((), None)
            return MultiPoly._raw(d)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        d = dict(big)
        for m, c in small.items():
            s = d.get(m, 0) + c
            if s:
                d[m] = s.numerator if type(s) is Fraction and s.denominator == 1 else s
            else:
                del d[m]
        return MultiPoly._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, _SCALARS):
            return self + (-other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        d = dict(self._terms)
        for m, c in other._terms.items():
            s = d.get(m, 0) - c
            if s:
                d[m] = s.numerator if type(s) is Fraction and s.denominator == 1 else s
            else:
                del d[m]
        return MultiPoly._raw(d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            if not other:
                return MultiPoly._raw({})
            if other == 1:
                return self
            return MultiPoly._raw({m: as_scalar(c * other) for m, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return MultiPoly._raw({})
        if len(b) == 1 and () in b:
            return self * b[()]
        if len(a) == 1 and () in a:
            return other * a[()]
        d: Dict[Monomial, Scalar] = {}
        get = d.get
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = mono_mul(ma, mb)
                s = get(m, 0) + ca * cb
                if s:
                    d[m] = s
                else:
                    d.pop(m, None)
        for m, c in d.items():
            if isinstance(c, Fraction) and c.denominator == 1:
                d[m] = c.numerator
        return MultiPoly._raw(d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return MultiPoly._raw({m: scalar_div(c, other) for m, c in self._terms.items()})
        if isinstance(other, MultiPoly):
            return self.exact_div(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        result = MultiPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, _SCALARS):
            if not other:
                return not self._terms
            return len(self._terms) == 1 and self._terms.get(()) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # calculus and substitution -----------------------------------------
    def diff(self, name: str) -> "MultiPoly":
        d: Dict[Monomial, Scalar] = {}
        for m, c in self._terms.items():
            md = dict(m)
            e = md.get(name, 0)
            if not e:
                continue
            if e == 1:
                del md[name]
            else:
                md[name] = e - 1
            key = tuple(sorted(md.items()))
            s = d.get(key, 0) + c * e
            if s:
                d[key] = s
            else:
                d.pop(key, None)
        return MultiPoly._raw(d)

    def subs(self, mapping: Mapping[str, object]) -> "MultiPoly":
        """Substitute variables by scalars or polynomials (simultaneously)."""
        if not mapping:
            return self
        powers: Dict[Tuple[str, int], MultiPoly] = {}
        out = MultiPoly.zero()
        acc: Dict[Monomial, Scalar] = {}
        pieces = []
        for m, c in self._terms.items():
            keep = []
            factor = None
            for v, e in m:
                if v in mapping:
                    key = (v, e)
                    pw = powers.get(key)
                    if pw is None:
                        val = MultiPoly.coerce(mapping[v])
                        if e < 0:
                            if not val.is_constant() or not val:
                                raise ValueError(f"cannot substitute {v} with negative exponent")
                            pw = MultiPoly.const(Fraction(1) / Fraction(val.constant_term()) ** (-e))
                        else:
                            pw = val ** e
                        powers[key] = pw
                    factor = pw if factor is None else factor * pw
                else:
                    keep.append((v, e))
            if factor is None:
                s = acc.get(m, 0) + c
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
            else:
                pieces.append(factor * MultiPoly._raw({tuple(keep): c}))
        out = MultiPoly._raw(acc)
        for p in pieces:
            out = out + p
        return out

    def evaluate(self, mapping: Mapping[str, Scalar]) -> Scalar:
        p = self.subs(mapping)
        if not p.is_constant():
            raise ValueError(f"unassigned variables remain: {p.variables}")
        return p.constant_term()

    def coeff(self, name: str, k: int) -> "MultiPoly":
        """Coefficient of ``name**k`` as a polynomial in the other variables."""
        d: Dict[Monomial, Scalar] = {}
        for m, c in self._terms.items():
            md = dict(m)
            if md.get(name, 0) != k:
                continue
            md.pop(name, None)
            d[tuple(sorted(md.items()))] = c
        return MultiPoly._raw(d)

    def as_univariate(self, name: str) -> Dict[int, "MultiPoly"]:
        out: Dict[int, Dict[Monomial, Scalar]] = {}
        for m, c in self._terms.items():
            md = dict(m)
            k = md.pop(name, 0)
            out.setdefault(k, {})[tuple(sorted(md.items()))] = c
        return {k: MultiPoly._raw(v) for k, v in out.items()}

    @classmethod
    def from_univariate(cls, coeffs: Mapping[int, object], name: str) -> "MultiPoly":
        out = cls.zero()
        for k, c in coeffs.items():
            out = out + cls.coerce(c) * cls.var(name, k)
        return out

    def exact_div(self, other) -> "MultiPoly":
        """Exact quotient; raises ``ArithmeticError`` when ``other`` does not divide."""
        other = MultiPoly.coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        if other.is_constant():
            return self / other.constant_term()
        if not self:
            return self
        for p in (self, other):
            if any(e < 0 for m in p._terms for _, e in m):
                raise ValueError("exact_div needs nonnegative exponents")
        names = sorted(set(self.variables) | set(other.variables), key=var_key)
        pos = {v: i for i, v in enumerate(names)}
        width = len(names)

        def dense(m):
            arr = [0] * width
            for v, e in m:
                arr[pos[v]] = e
            return tuple(arr)

        def key(k):
            return (sum(k), k)

        rem = {dense(m): c for m, c in self._terms.items()}
        div = [(dense(m), c) for m, c in other._terms.items()]
        lead_b, lc_b = max(div, key=lambda t: key(t[0]))
        rest_b = [(m, c) for m, c in div if m != lead_b]
        heap = [(-sum(k), tuple(-e for e in k)) for k in rem]
        heapq.heapify(heap)
        quot: Dict[Tuple[int, ...], Scalar] = {}
        while rem:
            while True:
                negdeg, negk = heapq.heappop(heap)
                k = tuple(-e for e in negk)
                if k in rem:
                    break
            c = rem.pop(k)
            shift = tuple(a - b for a, b in zip(k, lead_b))
            if min(shift) < 0:
                raise ArithmeticError("polynomial is not divisible")
            q = scalar_div(c, lc_b)
            quot[shift] = q
            for m, cb in rest_b:
                t = tuple(a + b for a, b in zip(m, shift))
                old = rem.get(t)
                s = (old or 0) - q * cb
                if s:
                    rem[t] = as_scalar(s)
                    if old is None:
                        heapq.heappush(heap, (-sum(t), tuple(-e for e in t)))
                elif old is not None:
                    del rem[t]
        d = {}
        for k, c in quot.items():
            d[tuple((names[i], e) for i, e in enumerate(k) if e)] = c
        # names are in natural order; re-sort to canonical (string) order
        return MultiPoly._raw({tuple(sorted(m)): c for m, c in d.items()})

    # presentation -------------------------------------------------------
    def __repr__(self):
        return f"MultiPoly({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in sorted(m, key=lambda t: var_key(t[0]))
            )
            cs = format_scalar(c)
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                if "/" in cs:
                    cs = f"({cs})"
                parts.append(f"{cs}*{mono}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def to_json(self):
        """Canonical term list: ``[[coeff, [[var, exp], ...]], ...]``."""
        return [
            [format_scalar(c), [[v, e] for v, e in sorted(m, key=lambda t: var_key(t[0]))]]
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data) -> "MultiPoly":
        return cls({tuple((v, int(e)) for v, e in mono): Fraction(c) for c, mono in data})

    def latex(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            mono = " ".join(
                _latex_var(v) + ("" if e == 1 else f"^{{{e}}}")
                for v, e in sorted(m, key=lambda t: var_key(t[0]))
            )
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = _latex_scalar(a)
            elif a == 1:
                body = mono
            else:
                body = _latex_scalar(a) + " " + mono
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s


_GREEK = {"lam": r"\lambda", "zeta": r"\zeta", "tau": r"\tau", "w": "w"}


def _latex_var(name: str) -> str:
    base, idx = var_key(name)
    base = _GREEK.get(base, base)
    if not idx:
        return base
    return f"{base}_{{{','.join(str(i) for i in idx)}}}"


def _latex_scalar(c: Fraction) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def var(name: str) -> MultiPoly:
    return MultiPoly.var(name)


def const(c) -> MultiPoly:
    return MultiPoly.const(c)


def poly_sum(items: Iterable) -> MultiPoly:
    out = MultiPoly.zero()
    for p in items:
        out = out + p
    return out
