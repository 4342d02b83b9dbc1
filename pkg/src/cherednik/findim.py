"""Finite-dimensional irreducibles L(lam): classification, characters, design."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .casimir import compute_P
from .linalg import bareiss_det, rational_nullspace
from .pbw import DeformationGl
from .poly import MultiPoly
from .symmetric import complete_homogeneous, lam_name
from .transforms import difference, sinh_transform
from .verma import rho


class Infinite(enum.Enum):
    """Marker for k_i = infinity (no admissible root)."""

    INF = "inf"

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"


INF = Infinite.INF
KValue = Union[int, Infinite]


# integer roots -------------------------------------------------------------


def _univariate(p: MultiPoly, var: str) -> List[Fraction]:
    parts = p.as_univariate(var)
    if any(not c.is_constant() for c in parts.values()):
        raise ValueError("numeric coefficients required")
    deg = max(parts) if parts else -1
    return [Fraction(parts[k].constant_term()) if k in parts else Fraction(0) for k in range(deg + 1)]


def positive_integer_roots(coeffs: Sequence[Fraction]) -> Optional[List[int]]:
    """Sorted positive integer roots of sum c_k mu^k; None if identically zero.

    Rational-root theorem on the cleared integer polynomial, with the Cauchy
    bound as an extra cutoff; candidates are confirmed by exact evaluation.
    """
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        return None
    while cs[0] == 0:
        cs.pop(0)
    if len(cs) == 1:
        return []
    den = 1
    for c in cs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in cs]
    a0, ad = abs(ints[0]), abs(ints[-1])
    cauchy = 1 + max(Fraction(abs(c), ad) for c in ints[:-1])
    bound = min(int(cauchy), a0)
    roots = []
    for mu in range(1, bound + 1):
        if a0 % mu:
            continue
        if sum(c * mu ** k for k, c in enumerate(ints)) == 0:
            roots.append(mu)
    return roots


def smallest_k(P: MultiPoly, lam: Sequence[Fraction], i: int) -> KValue:
    """Smallest k >= 0 with P(lam) = P(lam - (k+1) e_i), or INF."""
    n = len(lam)
    mu = MultiPoly.var("mu")
    base = {lam_name(j + 1): Fraction(lam[j]) for j in range(n)}
    shifted = dict(base)
    shifted[lam_name(i)] = Fraction(lam[i - 1]) - mu
    D = P.subs(base) - P.subs(shifted)
    roots: Optional[List[int]] = None
    for coeffs in _generic_slices(D, "mu"):
        r = positive_integer_roots(coeffs)
        if r is not None:
            roots = r if roots is None else [m for m in roots if m in r]
    if roots is None:
        return 0
    return roots[0] - 1 if roots else INF


def _generic_slices(p: MultiPoly, var: str) -> List[List[Fraction]]:
    """Univariate coefficient lists of p, one per monomial in the remaining (generic) symbols.

    With numeric parameters this is just the single list of p; with symbolic
    parameters a value of ``var`` is a root only if it kills every slice.
    """
    slices: Dict[tuple, Dict[int, Fraction]] = {}
    for mono, c in p.items():
        k = 0
        rest = []
        for name, e in mono:
            if name == var:
                k = e
            else:
                rest.append((name, e))
        slices.setdefault(tuple(rest), {})[k] = Fraction(c)
    if not slices:
        return [[]]
    out = []
    for key in sorted(slices):
        part = slices[key]
        out.append([part.get(k, Fraction(0)) for k in range(max(part) + 1)])
    return out


def brute_force_k(P: MultiPoly, lam: Sequence[Fraction], i: int, bound: int) -> KValue:
    n = len(lam)
    base = {lam_name(j + 1): Fraction(lam[j]) for j in range(n)}
    p0 = P.evaluate(base)
    for k in range(bound + 1):
        s = dict(base)
        s[lam_name(i)] = Fraction(lam[i - 1]) - (k + 1)
        if P.evaluate(s) == p0:
            return k
    return INF


# characters ----------------------------------------------------------------


def weyl_dimension(lam: Sequence) -> int:
    n = len(lam)
    num = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            num *= Fraction(lam[i] - lam[j] + j - i, j - i)
    if num.denominator != 1:
        raise ValueError("weight is not dominant integral")
    return int(num)


def box(lam: Sequence, nu: Sequence[int]) -> List[Tuple[Fraction, ...]]:
    """All lam' with 0 <= lam - lam' <= nu componentwise."""
    lam = [Fraction(v) for v in lam]
    out = []
    for shift in itertools.product(*[range(v + 1) for v in nu]):
        out.append(tuple(l - s for l, s in zip(lam, shift)))
    return out


def schur_weights(lam: Sequence) -> Dict[Tuple[Fraction, ...], int]:
    """Weight multiplicities of the gl_n irreducible with highest weight lam."""
    lam = [Fraction(v) for v in lam]
    n = len(lam)
    base = lam[-1]
    part = [int(v - base) for v in lam]
    if any(Fraction(p) != v - base for p, v in zip(part, lam)):
        raise ValueError("weight is not dominant integral")
    us = [MultiPoly.var(f"u[{i}]") for i in range(1, n + 1)]

    def alternant(exps):
        rows = [[us[j] ** exps[i] for j in range(n)] for i in range(n)]
        return bareiss_det(rows)

    delta = [n - 1 - i for i in range(n)]
    s = alternant([p + d for p, d in zip(part, delta)]).exact_div(alternant(delta))
    out = {}
    for mono, c in s.items():
        e = dict(mono)
        out[tuple(Fraction(e.get(f"u[{i}]", 0)) + base for i in range(1, n + 1))] = int(c)
    return out


@dataclass
class Character:
    components: List[Tuple[Fraction, ...]]
    dims: List[int]

    @property
    def dimension(self) -> int:
        return sum(self.dims)

    def weights(self) -> Dict[Tuple[Fraction, ...], int]:
        out: Dict[Tuple[Fraction, ...], int] = {}
        for comp in self.components:
            for w, m in schur_weights(comp).items():
                out[w] = out.get(w, 0) + m
        return out

    def latex(self) -> str:
        from .poly import format_scalar

        parts = []
        for comp in self.components:
            parts.append("V_{(" + ",".join(format_scalar(c) for c in comp) + ")}")
        return r" \oplus ".join(parts)

    def to_json(self):
        from .serialize import to_jsonable

        return {
            "components": [to_jsonable(list(c)) for c in self.components],
            "dims": self.dims,
            "dimension": self.dimension,
        }


def character(lam: Sequence, nu: Sequence[int]) -> Character:
    comps = box(lam, nu)
    return Character(comps, [weyl_dimension(c) for c in comps])


# classification --------------------------------------------------------------


@dataclass
class FiniteDimReport:
    lam: Tuple[Fraction, ...]
    finite: bool
    k: List[KValue] = field(default_factory=list)
    nu: Optional[List[int]] = None
    character: Optional[Character] = None
    reason: str = ""

    @property
    def dimension(self) -> Optional[int]:
        return self.character.dimension if self.character else None

    @property
    def decomposition(self):
        return self.character.components if self.character else []

    def to_json(self):
        from .serialize import to_jsonable

        return {
            "lambda": to_jsonable(list(self.lam)),
            "finite": self.finite,
            "k": [str(k) if k is INF else k for k in self.k],
            "nu": self.nu,
            "dimension": self.dimension,
            "character": self.character.to_json() if self.character else None,
            "reason": self.reason,
        }


def is_dominant(lam: Sequence) -> bool:
    for a, b in zip(lam, lam[1:]):
        diff = Fraction(a) - Fraction(b)
        if diff.denominator != 1 or diff < 0:
            return False
    return True


def classify(lam: Sequence, d: DeformationGl, P: Optional[MultiPoly] = None) -> FiniteDimReport:
    lam = tuple(Fraction(v) for v in lam)
    n = d.n
    if len(lam) != n:
        raise ValueError("weight has wrong length")
    # symbolic zeta entries are treated as generic parameters
    if P is None:
        P = compute_P(d)
    ks = [smallest_k(P, lam, i) for i in range(1, n + 1)]
    if not is_dominant(lam):
        return FiniteDimReport(lam, False, ks, reason="not dominant")
    if ks[-1] is INF:
        return FiniteDimReport(lam, False, ks, reason="no admissible root for the last coordinate")
    nu = []
    for i in range(n - 1):
        gap = int(lam[i] - lam[i + 1])
        nu.append(gap if ks[i] is INF else min(ks[i], gap))
    nu.append(ks[-1])
    return FiniteDimReport(lam, True, ks, nu, character(lam, nu))


# deformation design ----------------------------------------------------------


@dataclass
class DesignedDeformation:
    lam: Tuple[Fraction, ...]
    nu: Tuple[int, ...]
    w: List[Fraction]
    zeta: Optional[List[Fraction]]
    determinants: List[Dict[str, object]]

    @property
    def deformation(self) -> DeformationGl:
        return DeformationGl(len(self.lam), tuple(self.zeta or ()))

    def P(self) -> MultiPoly:
        n = len(self.lam)
        shifted = [MultiPoly.var(lam_name(i + 1)) + r for i, r in enumerate(rho(n))]
        out = MultiPoly.zero()
        for j, wj in enumerate(self.w):
            if wj:
                out = out + complete_homogeneous(j, shifted) * wj
        return out

    def to_json(self):
        from .serialize import to_jsonable

        return {
            "lambda": to_jsonable(list(self.lam)),
            "nu": list(self.nu),
            "w": to_jsonable(self.w),
            "zeta": to_jsonable(self.zeta),
            "determinants": to_jsonable(self.determinants),
        }


def _R(N: int, lamp: Sequence[Fraction], j: int, m: int) -> Fraction:
    """H_N(lam') - H_N(lam' - (m+1) e_j)."""
    shifted = list(lamp)
    shifted[j - 1] -= m + 1
    return _h_num(N, lamp) - _h_num(N, shifted)


def _h_num(N: int, xs: Sequence[Fraction]) -> Fraction:
    table = [Fraction(1)] + [Fraction(0)] * N
    for x in xs:
        for dgr in range(1, N + 1):
            table[dgr] = table[dgr] + x * table[dgr - 1]
    return table[N]


def vandermonde_prediction(ks: Sequence[int], nu: Sequence[int], l: int, nul: int) -> Fraction:
    nodes = [k - v - 1 for k, v in zip(ks, nu)] + [ks[l - 1] - nul - 1]
    T = prod(v + 1 for v in nu) * (nul + 1)
    V = 1
    for a in range(len(nodes)):
        for b in range(a + 1, len(nodes)):
            V *= nodes[b] - nodes[a]
    return Fraction(T * V)


def design_deformation(lam: Sequence, nu: Sequence[int]) -> DesignedDeformation:
    lam = tuple(Fraction(v) for v in lam)
    nu = tuple(int(v) for v in nu)
    n = len(lam)
    if len(nu) != n or any(v < 0 for v in nu):
        raise ValueError("nu must be n nonnegative integers")
    if not is_dominant(lam):
        raise ValueError("lambda must be dominant")
    for i in range(n - 1):
        if nu[i] > lam[i] - lam[i + 1]:
            raise ValueError(f"nu_{i + 1} exceeds lambda_{i + 1} - lambda_{i + 2}")
    lamp = [l + r for l, r in zip(lam, rho(n))]
    ks = [int(v - lamp[-1]) for v in lamp]
    rows = [[_R(N, lamp, j, nu[j - 1]) for N in range(1, n + 2)] for j in range(1, n + 1)]
    null = rational_nullspace(rows)
    if len(null) != 1:
        raise ArithmeticError(f"internal: expected a one-dimensional solution space, got {len(null)}")
    wv = null[0]
    dets = []
    for l in range(1, n + 1):
        for m in range(nu[l - 1]):
            extra = [_R(N, lamp, l, m) for N in range(1, n + 2)]
            if sum(a * b for a, b in zip(extra, wv)) == 0:
                raise ArithmeticError("internal: designed P vanishes on a smaller shift")
            det = bareiss_det(rows + [extra])
            det = Fraction(det.constant_term())
            pred = vandermonde_prediction(ks, nu, l, m)
            dets.append({"l": l, "m": m, "det": det, "vandermonde": pred})
            if det == 0 or det != pred:
                raise ArithmeticError("internal: nondegeneracy determinant mismatch")
    w = [Fraction(0)] + list(wv)
    scale = next(c for c in reversed(w) if c)
    w = [c / scale for c in w]
    zeta = recover_zeta(w, n)
    return DesignedDeformation(lam, nu, w, zeta, dets)


def recover_zeta(w: Sequence[Fraction], n: int) -> List[Fraction]:
    """zeta with the given w (up to w_0): f = D(w), zeta_j = [z^j](f(z)-f(z-1)) j!/(j+n)!."""
    z = MultiPoly.var("z")
    wpoly = MultiPoly.zero()
    for k, c in enumerate(w):
        if c:
            wpoly = wpoly + z ** k * c
    f = sinh_transform(wpoly, n, "forward")
    r = difference(f)
    deg = max(r.degree("z"), 0)
    out = []
    for j in range(deg + 1):
        c = Fraction(r.coeff("z", j).constant_term())
        out.append(c * Fraction(prod(range(1, j + 1)), prod(range(1, j + n + 1))))
    return out


# independent oracles -----------------------------------------------------------


def gl1_criterion(lam, zeta: Sequence, bound: int = 200) -> Optional[int]:
    """gl_1 with [y, x] = phi(h): smallest nu >= 0 with sum_{t=0}^{nu} phi(lam - t) = 0.

    phi(h) = d/dz (z zeta(z)) at z = h, i.e. g(lam) - g(lam - nu - 1) = 0 with
    g(x) - g(x - 1) = phi(x). Returns None when no solution is found below ``bound``.
    """
    lam = Fraction(lam)
    coeffs = [Fraction(c) for c in zeta]

    def phi(h):
        return sum(((k + 1) * c * h ** k for k, c in enumerate(coeffs)), Fraction(0))

    total = Fraction(0)
    for nu in range(bound):
        total += phi(lam - nu)
        if total == 0:
            return nu
    return None


def displayed_gl2_P(zeta0, zeta1) -> MultiPoly:
    """Closed form zeta0 (l1 + l2) + zeta1 ((l1+1/2)^2 + (l1+1/2)(l2-1/2) + (l2-1/2)^2)."""
    l1, l2 = MultiPoly.var(lam_name(1)), MultiPoly.var(lam_name(2))
    a, b = l1 + Fraction(1, 2), l2 - Fraction(1, 2)
    return MultiPoly.coerce(zeta0) * (l1 + l2) + MultiPoly.coerce(zeta1) * (a * a + a * b + b * b)


@dataclass
class DisplayComparison:
    oracle: MultiPoly
    displayed: MultiPoly
    offset: MultiPoly
    classify_agree: Dict[str, bool]

    def to_json(self):
        from .serialize import to_jsonable

        return {
            "oracle": to_jsonable(self.oracle),
            "displayed": to_jsonable(self.displayed),
            "offset": to_jsonable(self.offset),
            "classify_agree": self.classify_agree,
        }


def compare_displayed_gl2(zeta0, zeta1, grid: Sequence[Sequence] = ()) -> DisplayComparison:
    """Oracle P against the displayed closed form, plus classification on a grid under each."""
    d = DeformationGl(2, (zeta0, zeta1))
    oracle = compute_P(d)
    shown = displayed_gl2_P(zeta0, zeta1)
    agree = {}
    for lam in grid:
        a = classify(lam, d, oracle)
        b = classify(lam, d, shown)
        agree[",".join(str(Fraction(v)) for v in lam)] = (a.finite, a.nu) == (b.finite, b.nu)
    return DisplayComparison(oracle, shown, oracle - shown, agree)
