"""Named verification suites at desk-scale bounds.

Every item records pass/fail together with its residual data, so a failed
identity is reported rather than raised.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from .serialize import to_jsonable


@dataclass
class SuiteItem:
    label: str
    ok: bool
    data: object = None
    seconds: float = 0.0

    def to_json(self):
        # wall time stays out of the JSON so reports are byte-reproducible
        return {"label": self.label, "ok": self.ok, "data": to_jsonable(self.data)}


@dataclass
class SuiteReport:
    name: str
    params: Dict[str, int]
    items: List[SuiteItem] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(it.ok for it in self.items)

    def run(self, label: str, fn: Callable[[], Tuple[bool, object]]) -> SuiteItem:
        t0 = time.perf_counter()
        ok, data = fn()
        item = SuiteItem(label, bool(ok), data, time.perf_counter() - t0)
        self.items.append(item)
        return item

    def to_json(self):
        return {
            "suite": self.name,
            "params": self.params,
            "ok": self.ok,
            "passed": sum(it.ok for it in self.items),
            "total": len(self.items),
            "items": [it.to_json() for it in self.items],
        }


def _cert(c):
    return c.ok, c.to_json()


# individual suites -----------------------------------------------------------


def suite_pbw_consistency(n: int = 3, kmax: int = 2, samples: int = 200, seed: int = 0) -> SuiteReport:
    from .pbw import DeformationGl, algebra, symbolic_zeta

    rep = SuiteReport("pbw-consistency", {"n": n, "kmax": kmax, "samples": samples})
    for nn in range(1, n + 1):
        for m in range(kmax + 1):
            d = DeformationGl(nn, symbolic_zeta(m))

            def check(d=d):
                alg = algebra(d)
                rng = random.Random(seed)
                L = len(alg.letters)
                bad = []
                for _ in range(samples):
                    t = tuple(rng.randrange(L) for _ in range(3))
                    if alg.diamond_residual(*t).terms:
                        bad.append([alg.names[a] for a in t])
                return not bad, {"failures": bad}

            rep.run(f"gl{nn} deg zeta={m}", check)
    return rep


def shapovalov_weights(n: int, total: int) -> List[Tuple[int, ...]]:
    """Nonnegative weights nu with 0 < sum(nu) <= total."""
    out = []

    def rec(prefix, rem):
        if len(prefix) == n:
            if sum(prefix):
                out.append(tuple(prefix))
            return
        for a in range(rem + 1):
            rec(prefix + [a], rem - a)

    rec([], total)
    return sorted(out, key=lambda v: (sum(v), v))


def suite_shapovalov(n: int = 2, kmax: int = 4) -> SuiteReport:
    from math import factorial

    from .pbw import DeformationGl, symbolic_zeta
    from .poly import MultiPoly
    from .verma import compare_shapovalov, gram_matrix

    rep = SuiteReport("shapovalov", {"n": n, "kmax": kmax})
    d1 = DeformationGl(1, symbolic_zeta(0))
    z0 = MultiPoly.var("zeta[0]")
    for m in range(1, 7):
        def gl1(m=m):
            det = gram_matrix((m,), d1).det()
            return det == z0 ** m * factorial(m), {"det": det}

        rep.run(f"gl1 nu={m}", gl1)
    if n >= 2:
        for deg in range(3):
            d = DeformationGl(2, symbolic_zeta(deg))
            for nu in shapovalov_weights(2, kmax):
                def gl2(nu=nu, d=d):
                    c = compare_shapovalov(nu, d)
                    return c.ok, {"tau": c.tau, "ratio": c.ratio}

                rep.run(f"gl2 deg zeta={deg} nu={list(nu)}", gl2)
    return rep


def suite_casimir(n: int = 3, kmax: int = 2) -> SuiteReport:
    from .casimir import _terms_as_poly, casimir_element, centrality_certificate, compute_P, hc_casimir
    from .pbw import DeformationGl, symbolic_zeta

    rep = SuiteReport("casimir", {"n": n, "kmax": kmax})
    for nn in range(1, n + 1):
        for m in range(kmax + 1):
            d = DeformationGl(nn, symbolic_zeta(m))
            rep.run(f"centrality gl{nn} deg={m}", lambda d=d: _cert(centrality_certificate(d)))

            def agree(d=d):
                diff = casimir_element(d, "residue") - casimir_element(d, "trace_sum")
                return not diff.terms, {"difference": _terms_as_poly(diff)}

            rep.run(f"residue=trace_sum gl{nn} deg={m}", agree)

            def action(d=d):
                diff = hc_casimir(d) - compute_P(d)
                return diff == 0, {"difference": diff}

            rep.run(f"hc=P gl{nn} deg={m}", action)
    return rep


def suite_bridge(n: int = 3, kmax: int = 3) -> SuiteReport:
    from .casimir import bridge_coefficients, bridge_identity_check

    rep = SuiteReport("bridge", {"n": n, "kmax": kmax})
    for nn in range(2, max(n, 2) + 1):
        rep.run(
            f"k=1 coefficient gl{nn}",
            lambda nn=nn: (
                bridge_coefficients(1, nn) == [1, -Fraction(nn + 1, 2)],
                {"coefficients": bridge_coefficients(1, nn)},
            ),
        )
        for k in range(kmax + 1):
            rep.run(f"gl{nn} k={k}", lambda nn=nn, k=k: _cert(bridge_identity_check(k, nn)))
    return rep


def gl2_zeta0_grid() -> List[Tuple[Fraction, Fraction]]:
    """Twenty weights for the zeta_0 r_0 non-existence check."""
    pts = [(Fraction(a), Fraction(b)) for a in range(0, 6) for b in (0, -1)]
    pts += [(Fraction(a, 2) + 3, Fraction(a, 2)) for a in range(-4, 4)]
    return pts[:20]


DESIGN_SHAPES = [
    ((5, 3), (1, 2)),
    ((2, 0), (0, 3)),
    ((7, 2), (5, 0)),
    ((6, 2), (1, 1)),
    ((3, 3), (0, 4)),
    ((4, 1, 0), (2, 1, 3)),
    ((3, 3, 3), (0, 0, 2)),
    ((5, 2, 0), (1, 1, 1)),
    ((6, 3, 1), (2, 0, 4)),
    ((2, 2, 0), (0, 1, 2)),
]


def suite_findim(n: int = 3, kmax: int = 2) -> SuiteReport:
    from .findim import character, classify, compare_displayed_gl2, design_deformation, gl1_criterion, weyl_dimension
    from .pbw import DeformationGl

    rep = SuiteReport("findim", {"n": n, "kmax": kmax})
    d0 = DeformationGl(2, (1,))

    def zeta0():
        bad = [list(l) for l in gl2_zeta0_grid() if classify(l, d0).finite]
        return not bad, {"finite_at": bad}

    rep.run("gl2 zeta_0 r_0 never finite", zeta0)

    def box():
        ch = character((2, 0), (0, 3))
        dims = sorted(weyl_dimension(c) for c in ch.components)
        return dims == [3, 4, 5, 6] and ch.dimension == 18, {"dims": dims, "dimension": ch.dimension}

    rep.run("L((2,0)) nu=(0,3)", box)

    def gl1():
        bad = []
        for zeta in [(1,), (3, -1), (-5, 1), (0, 0, 1), (2, -3, 1), (-6, 1, 1)]:
            for a in range(-8, 13):
                lam = Fraction(a, 2)
                r = classify([lam], DeformationGl(1, zeta))
                got = r.nu[0] if r.finite else None
                if got != gl1_criterion(lam, zeta):
                    bad.append([zeta, lam])
        return not bad, {"mismatches": bad}

    rep.run("gl1 criterion", gl1)

    def display():
        c = compare_displayed_gl2(1, 1, [(2, 0), (3, 1), (4, 2)])
        return True, c.to_json()

    rep.run("gl2 displayed P offset (reported)", display)
    for lam, nu in DESIGN_SHAPES:
        if len(lam) > n:
            continue

        def design(lam=lam, nu=nu):
            D = design_deformation(lam, nu)
            r = classify(lam, D.deformation)
            r_w = classify(lam, D.deformation, D.P())
            ok = r.finite and tuple(r.nu) == tuple(nu) and tuple(r_w.nu or ()) == tuple(nu)
            ok = ok and all(x["det"] != 0 for x in D.determinants)
            return ok, {"nu": r.nu, "zeta": D.zeta}

        rep.run(f"design lambda={list(lam)} nu={list(nu)}", design)
    return rep


def suite_poisson_gl(n: int = 3, kmax: int = 2) -> SuiteReport:
    from .pbw import DeformationGl, symbolic_zeta
    from .poisson_gl import pair_vs_trace_derivative, poisson_c_series, verify_center_gl
    from .poly import MultiPoly
    from .symmetric import trace_power_sym

    rep = SuiteReport("poisson-gl", {"n": n, "kmax": kmax})
    for nn in range(1, n + 1):
        for m in range(kmax + 1):
            d = DeformationGl(nn, symbolic_zeta(m))
            rep.run(f"center gl{nn} deg={m}", lambda d=d: _cert(verify_center_gl(d)))

            def c1(d=d, m=m, nn=nn):
                expect = MultiPoly.zero()
                for i in range(m + 1):
                    expect = expect + MultiPoly.var(f"zeta[{i}]") * trace_power_sym(i + 1, nn)
                diff = poisson_c_series(d)[0] - expect
                return diff == 0, {"difference": diff}

            rep.run(f"c_1 gl{nn} deg={m}", c1)
            rep.run(f"pairing vs trace derivative gl{nn} deg={m}", lambda d=d: _cert(pair_vs_trace_derivative(d)))
    return rep


def suite_poisson_sp(n: int = 2, kmax: int = 1) -> SuiteReport:
    from .poisson_sp import DeformationSp, slice_check, tau_agreement, verify_center_sp
    from .poly import MultiPoly

    rep = SuiteReport("poisson-sp", {"n": n, "kmax": kmax})
    for nn in range(1, min(n, 2) + 1):
        for m in range(kmax + 1):
            zeta = tuple(MultiPoly.var(f"zeta[{2 * k}]") for k in range(m + 1))
            d = DeformationSp(nn, zeta)
            rep.run(f"center sp{2 * nn} deg={2 * m}", lambda d=d: _cert(verify_center_sp(d)))
        rep.run(f"tau constructions sp{2 * nn}", lambda nn=nn: _cert(tau_agreement(nn)))

        def sl(nn=nn):
            c = slice_check(nn)
            return c.ok and c.info["consistent_sign"], c.to_json()

        rep.run(f"slice sp{2 * nn}", sl)
    return rep


def suite_appendix_sp(n: int = 2, kmax: int = 0) -> SuiteReport:
    from .poisson_sp import appendix_identity_check, basis_sign_table, iota

    rep = SuiteReport("appendix-sp", {"n": n})
    for nn in range(1, n + 1):
        rep.run(f"identity sp{2 * nn}", lambda nn=nn: _cert(appendix_identity_check(nn)))

        def signs(nn=nn):
            table = basis_sign_table(nn)
            bad = [[jp, j] for (jp, j), s in table.items() if s != (-1) ** iota(jp, j)]
            return not bad, {"mismatches": bad}

        rep.run(f"sign table sp{2 * nn}", signs)
    return rep


SUITES: Dict[str, Tuple[Callable[..., SuiteReport], Dict[str, int]]] = {
    "pbw-consistency": (suite_pbw_consistency, {"n": 3, "kmax": 2}),
    "shapovalov": (suite_shapovalov, {"n": 2, "kmax": 4}),
    "casimir": (suite_casimir, {"n": 3, "kmax": 2}),
    "bridge": (suite_bridge, {"n": 3, "kmax": 3}),
    "findim": (suite_findim, {"n": 3, "kmax": 2}),
    "poisson-gl": (suite_poisson_gl, {"n": 3, "kmax": 2}),
    "poisson-sp": (suite_poisson_sp, {"n": 2, "kmax": 1}),
    "appendix-sp": (suite_appendix_sp, {"n": 2, "kmax": 0}),
}
ALIASES = {"appendix-sp4": ("appendix-sp", {"n": 2}), "appendix-sp2": ("appendix-sp", {"n": 1})}


def run_suite(name: str, n: int = None, kmax: int = None) -> SuiteReport:
    overrides: Dict[str, int] = {}
    if name in ALIASES:
        name, overrides = ALIASES[name]
    if name not in SUITES:
        raise KeyError(name)
    fn, defaults = SUITES[name]
    params = dict(defaults, **overrides)
    if n is not None:
        params["n"] = n
    if kmax is not None:
        params["kmax"] = kmax
    return fn(**params)
