"""The quadratic Casimir t_1' of H_zeta(gl_n) and its action polynomial.

Pipeline: zeta -> f -> (g, w) -> P with

    f(z) - f(z-1) = d^n (z^n zeta(z)),  f(0) = 0
    g_m = f_m / ((m+1)...(m+n-1))
    f = (2 sinh(d/2))^{n-1} z^{n-1} w(z)
    P(lam) = sum_j w_j H_j(lam + rho)
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, prod
from typing import Dict, List

from .pbw import DeformationGl, PBWElement, algebra
from .poisson_gl import Certificate, gl_poisson
from .poly import MultiPoly
from .series import LaurentSeries
from .symmetric import char_poly_coeffs, complete_homogeneous, lam_vars, trace_power_sym, y_name
from .transforms import difference, discrete_antiderivative, sinh_transform
from .verma import hc_project, rho


@dataclass(frozen=True)
class DeformationPipeline:
    d: DeformationGl
    f: MultiPoly
    g: MultiPoly
    w: MultiPoly

    def coeffs(self, name: str) -> List[MultiPoly]:
        p = getattr(self, name)
        deg = max(p.degree("z"), 0)
        return [p.coeff("z", k) for k in range(deg + 1)]

    def check(self) -> Dict[str, bool]:
        n = self.d.n
        z = MultiPoly.var("z")
        rhs = _nth_derivative(z ** n * self.d.zeta_poly(), n)
        g_ok = all(
            self.g.coeff("z", m) * prod(range(m + 1, m + n)) == self.f.coeff("z", m)
            for m in range(self.f.degree("z") + 1)
        )
        return {
            "difference": difference(self.f) == rhs,
            "f(0)=0": self.f.coeff("z", 0) == 0,
            "g": g_ok,
            "sinh": sinh_transform(self.w, n, "forward") == self.f,
        }


def _nth_derivative(p: MultiPoly, n: int, var: str = "z") -> MultiPoly:
    for _ in range(n):
        p = p.diff(var)
    return p


@lru_cache(maxsize=None)
def build_pipeline(d: DeformationGl) -> DeformationPipeline:
    n = d.n
    z = MultiPoly.var("z")
    r = _nth_derivative(z ** n * d.zeta_poly(), n)
    f = discrete_antiderivative(r)
    g = MultiPoly.zero()
    for m in range(f.degree("z") + 1):
        fm = f.coeff("z", m)
        if fm:
            g = g + fm / prod(range(m + 1, m + n)) * z ** m
    w = sinh_transform(f, n, "inverse")
    pipe = DeformationPipeline(d, f, g, w)
    bad = [k for k, ok in pipe.check().items() if not ok]
    if bad:
        raise ArithmeticError(f"pipeline invariants failed: {bad}")
    return pipe


def compute_P(d: DeformationGl) -> MultiPoly:
    """P(lam) = sum_j w_j H_j(lam + rho)."""
    pipe = build_pipeline(d)
    n = d.n
    shifted = [l + r for l, r in zip(lam_vars(n), rho(n))]
    out = MultiPoly.zero()
    for j, wj in enumerate(pipe.coeffs("w")):
        if wj:
            out = out + wj * complete_homogeneous(j, shifted)
    return out


def _c_prime_commutative(d: DeformationGl, construction: str) -> MultiPoly:
    pipe = build_pipeline(d)
    n = d.n
    gs = pipe.coeffs("g")
    if construction == "trace_sum":
        out = MultiPoly.zero()
        for j in range(1, len(gs)):
            if gs[j]:
                out = out + gs[j] * trace_power_sym(j, n)
        return out
    if construction != "residue":
        raise ValueError("construction must be 'residue' or 'trace_sum'")
    m = len(gs) - 1
    N = m + n + 2
    z = MultiPoly.var("z")
    g_inv = MultiPoly.zero()
    for k, gk in enumerate(gs):
        if gk:
            g_inv = g_inv + gk * MultiPoly.var("z", -k - 1)
    if not g_inv:
        return MultiPoly.zero()
    det = MultiPoly.zero()
    for k, q in enumerate(char_poly_coeffs(n)):
        det = det + q * (-z) ** k
    s = LaurentSeries.from_poly(g_inv, "z", N) * LaurentSeries.from_poly(det, "z", N).inverse()
    return s.residue()


def casimir_element(d: DeformationGl, construction: str = "residue") -> PBWElement:
    """t_1' = sum_j x_j y_j + Sym(C') for C' from the chosen construction."""
    alg = algebra(d)
    out = alg.element()
    for j in range(1, d.n + 1):
        out = out + alg.element({(alg.X(j), alg.Y(j)): 1})
    return out + alg.symmetrize(_c_prime_commutative(d, construction))


def hc_casimir(d: DeformationGl) -> MultiPoly:
    """Direct oracle: Harish-Chandra projection of t_1' (its value on v_lam)."""
    return hc_project(casimir_element(d))


def centrality_certificate(d: DeformationGl, construction: str = "residue") -> Certificate:
    C = casimir_element(d, construction)
    cert = Certificate(f"casimir-centrality-gl{d.n}")
    for g in C.alg.generators():
        r = C.commutator(g)
        cert.residuals[str(g)] = _terms_as_poly(r)
    return cert


def _terms_as_poly(a: PBWElement) -> MultiPoly:
    """Encode a PBW element as a polynomial (zero iff the element is zero)."""
    out = MultiPoly.zero()
    for w, c in a.terms.items():
        mono = MultiPoly.one()
        for l in w:
            mono = mono * MultiPoly.var(a.alg.names[l])
        out = out + mono * c
    return out


def action_on_highest_weight(d: DeformationGl) -> MultiPoly:
    """Scalar by which t_1' acts on v_lam, computed in the Verma module."""
    from .verma import verma

    M = verma(d)
    vec = M.act_element(casimir_element(d), {(): MultiPoly.one()})
    if any(k != () for k in vec):
        raise ArithmeticError("t_1' does not preserve the highest weight line")
    return vec.get((), MultiPoly.zero())


# bridge between Lie and Poisson brackets ------------------------------------


def bridge_coefficients(k: int, n: int) -> List[Fraction]:
    """(-1)^j C(k+n+1, j+1) / (k+n+1) for j = 0..k."""
    return [Fraction((-1) ** j * comb(k + n + 1, j + 1), k + n + 1) for j in range(k + 1)]


def bridge_identity_check(k: int, n: int) -> Certificate:
    """[Sym Tr S^{k+1} A, y_l] against Sym of the Poisson bracket with the corrected sum."""
    d0 = DeformationGl(n, ())
    alg = algebra(d0)
    P0 = gl_poisson(d0)
    lhs_sym = alg.symmetrize(trace_power_sym(k + 1, n))
    F = MultiPoly.zero()
    for j, c in enumerate(bridge_coefficients(k, n)):
        F = F + trace_power_sym(k + 1 - j, n) * c
    cert = Certificate(f"bridge-k{k}-gl{n}", info={"coefficients": bridge_coefficients(k, n)})
    for l in range(1, n + 1):
        y = alg.y(l)
        lhs = lhs_sym.commutator(y)
        pb = P0.bracket(F, MultiPoly.var(y_name(l)))
        rhs = alg.element()
        for i in range(1, n + 1):
            pi = pb.coeff(y_name(i), 1)
            if pi:
                rhs = rhs + alg.symmetrize(pi) * alg.y(i)
        if pb.degree(y_name(l)) > 1 or any(pb.degree(y_name(i)) > 1 for i in range(1, n + 1)):
            raise ArithmeticError("unexpected y-degree in the Poisson side")
        cert.residuals[f"y[{l}]"] = _terms_as_poly(lhs - rhs)
    return cert
