"""Poisson algebras on polynomial rings and the deformed Poisson algebra of gl_n.

This code path is deliberately independent of the PBW engine: brackets are
computed from a table of generator brackets by the Leibniz rule.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .pbw import DeformationGl
from .poly import MultiPoly
from .series import LaurentSeries
from .symmetric import (
    char_poly_coeffs,
    e_name,
    pairing_coefficients,
    trace_power_sym,
    x_name,
    y_name,
)


class PoissonAlgebra:
    """Commutative polynomials in the given generators with a bracket table."""

    def __init__(self, generators: Sequence[str], table: Callable[[str, str], MultiPoly]):
        self.generators = list(generators)
        self._gens = set(generators)
        self._table = table
        self._memo: Dict[Tuple[str, str], MultiPoly] = {}

    def gen_bracket(self, u: str, v: str) -> MultiPoly:
        key = (u, v)
        hit = self._memo.get(key)
        if hit is None:
            hit = MultiPoly.coerce(self._table(u, v))
            self._memo[key] = hit
        return hit

    def partials(self, a: MultiPoly) -> Dict[str, MultiPoly]:
        return {v: a.diff(v) for v in a.variables if v in self._gens}

    def bracket(self, a, b) -> MultiPoly:
        a, b = MultiPoly.coerce(a), MultiPoly.coerce(b)
        da, db = self.partials(a), self.partials(b)
        out = MultiPoly.zero()
        for u, pu in da.items():
            for v, pv in db.items():
                br = self.gen_bracket(u, v)
                if br:
                    out = out + pu * pv * br
        return out


def _gl_table(n: int, pair: Callable[[int, int], MultiPoly]):
    def parse(name: str):
        kind = name[0]
        idx = tuple(int(s) for s in name[2:-1].split(","))
        return kind, idx

    def table(u: str, v: str) -> MultiPoly:
        ku, iu = parse(u)
        kv, iv = parse(v)
        zero = MultiPoly.zero()
        if ku == "e" and kv == "e":
            (a, b), (c, d) = iu, iv
            out = zero
            if b == c:
                out = out + MultiPoly.var(e_name(a, d))
            if d == a:
                out = out - MultiPoly.var(e_name(c, b))
            return out
        if ku == "e" and kv == "y":
            return MultiPoly.var(y_name(iu[0])) if iu[1] == iv[0] else zero
        if ku == "y" and kv == "e":
            return -table(v, u)
        if ku == "e" and kv == "x":
            return -MultiPoly.var(x_name(iu[1])) if iu[0] == iv[0] else zero
        if ku == "x" and kv == "e":
            return -table(v, u)
        if ku == "y" and kv == "x":
            return pair(iu[0], iv[0])
        if ku == "x" and kv == "y":
            return -pair(iv[0], iu[0])
        return zero

    return table


def gl_generators(n: int) -> List[str]:
    gens = [e_name(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    gens += [x_name(i) for i in range(1, n + 1)] + [y_name(i) for i in range(1, n + 1)]
    return gens


def pairing_poly(i: int, j: int, d: DeformationGl) -> MultiPoly:
    """{y_i, x_j} = sum_k zeta_k r_k(i, j) as a commutative polynomial."""
    out = MultiPoly.zero()
    for k, zk in enumerate(d.zeta):
        if zk:
            out = out + MultiPoly.coerce(zk) * pairing_coefficients(d.n, k)[i - 1][j - 1]
    return out


def gl_poisson(d: DeformationGl, pair: Optional[Callable[[int, int], MultiPoly]] = None) -> PoissonAlgebra:
    """H'_zeta(gl_n); ``pair`` overrides the y-x bracket (used for negative tests)."""
    pair = pair or (lambda i, j: pairing_poly(i, j, d))
    return PoissonAlgebra(gl_generators(d.n), _gl_table(d.n, pair))


def pbracket(a, b, d: DeformationGl) -> MultiPoly:
    return gl_poisson(d).bracket(a, b)


def tau_k(k: int, n: int) -> MultiPoly:
    """tau_k = sum_i x_i {Q_k, y_i}, bracket in the undeformed algebra."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    P0 = gl_poisson(DeformationGl(n, ()))
    Q = char_poly_coeffs(n)[k]
    out = MultiPoly.zero()
    for i in range(1, n + 1):
        out = out + MultiPoly.var(x_name(i)) * P0.bracket(Q, MultiPoly.var(y_name(i)))
    return out


def poisson_c_series(d: DeformationGl) -> List[MultiPoly]:
    """(c_1, ..., c_n) from the residue generating function in t."""
    n = d.n
    m = max(d.degree, 0)
    N = m + n + 2
    z, t = MultiPoly.var("z"), MultiPoly.var("t")
    Q = char_poly_coeffs(n)
    det_z = MultiPoly.zero()
    det_t = MultiPoly.zero()
    for k, q in enumerate(Q):
        det_z = det_z + q * (-z) ** k
        det_t = det_t + q * (-t) ** k
    zeta_inv = MultiPoly.zero()
    for j, c in enumerate(d.zeta):
        if c:
            zeta_inv = zeta_inv + MultiPoly.coerce(c) * MultiPoly.var("z", -j)
    if not zeta_inv:
        return [MultiPoly.zero() for _ in range(n)]
    series = LaurentSeries.from_poly(zeta_inv * MultiPoly.var("z", -1), "z", N)
    series = series * LaurentSeries.from_poly(det_z, "z", N).inverse()
    series = series * LaurentSeries.geometric(MultiPoly.var("t", -1), "z", N)
    c_t = series.residue() * det_t
    return [c_t.coeff("t", i) * (-1) ** i for i in range(1, n + 1)]


@dataclass
class Certificate:
    """Residuals of a family of identities; success means all are zero."""

    name: str
    residuals: Dict[str, MultiPoly] = field(default_factory=dict)
    info: Dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(not r for r in self.residuals.values())

    def failures(self) -> Dict[str, MultiPoly]:
        return {k: v for k, v in self.residuals.items() if v}

    def to_json(self):
        from .serialize import to_jsonable

        return {
            "name": self.name,
            "ok": self.ok,
            "checked": len(self.residuals),
            "failures": {k: to_jsonable(v) for k, v in self.failures().items()},
            "info": to_jsonable(self.info),
        }


def verify_center_gl(d: DeformationGl) -> Certificate:
    n = d.n
    P = gl_poisson(d)
    cs = poisson_c_series(d)
    cert = Certificate(f"poisson-center-gl{n}")
    for k in range(1, n + 1):
        central = tau_k(k, n) + cs[k - 1]
        for g in P.generators:
            cert.residuals[f"{{tau_{k}+c_{k}, {g}}}"] = P.bracket(central, MultiPoly.var(g))
    return cert


def pair_vs_trace_derivative(d: DeformationGl) -> Certificate:
    """{y_i, x_j} against sum_l zeta_l d(Tr S^{l+1} A)/d e_ji."""
    n = d.n
    cert = Certificate(f"pair-vs-trace-derivative-gl{n}")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            rhs = MultiPoly.zero()
            for l, zl in enumerate(d.zeta):
                if zl:
                    rhs = rhs + MultiPoly.coerce(zl) * trace_power_sym(l + 1, n).diff(e_name(j, i))
            cert.residuals[f"({i},{j})"] = pairing_poly(i, j, d) - rhs
    return cert
