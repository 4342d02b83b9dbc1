"""Acceptance criteria 1-13, each an exact (zero tolerance) check.

The terminal summary prints one PASS/FAIL line per criterion.
"""
import itertools
import random
from fractions import Fraction
from math import factorial

import pytest

from cherednik.casimir import (
    bridge_coefficients,
    bridge_identity_check,
    casimir_element,
    centrality_certificate,
    compute_P,
    hc_casimir,
)
from cherednik.findim import (
    INF,
    brute_force_k,
    character,
    classify,
    compare_displayed_gl2,
    design_deformation,
    gl1_criterion,
    smallest_k,
    weyl_dimension,
)
from cherednik.pbw import DeformationGl, algebra, symbolic_zeta
from cherednik.poisson_gl import gl_poisson, pair_vs_trace_derivative, poisson_c_series, verify_center_gl
from cherednik.poisson_sp import (
    DeformationSp,
    appendix_identity_check,
    slice_check,
    sp_poisson,
    tau_agreement,
    verify_center_sp,
)
from cherednik.poly import MultiPoly
from cherednik.suites import DESIGN_SHAPES, gl2_zeta0_grid, shapovalov_weights
from cherednik.symmetric import trace_power_sym
from cherednik.verma import compare_shapovalov, critical_vectors, gram_matrix, is_singular

Z = MultiPoly.var
GL_GRID = [(n, m) for n in (1, 2, 3) for m in (0, 1, 2)]


@pytest.mark.slow
@pytest.mark.criterion(1, "Shapovalov determinant: gl_1 closed form, gl_2 constant ratio")
def test_c01_shapovalov(detail):
    z0 = Z("zeta[0]")
    d1 = DeformationGl(1, symbolic_zeta(0))
    bad = [m for m in range(1, 7) if gram_matrix((m,), d1).det() != z0**m * factorial(m)]
    weights = shapovalov_weights(2, 4)
    checked = 0
    for deg in range(3):
        d = DeformationGl(2, symbolic_zeta(deg))
        for nu in weights:
            c = compare_shapovalov(nu, d)
            checked += 1
            if not c.ok:
                bad.append((deg, nu, c.ratio))
    detail(f"gl1 m<=6, gl2 {checked} (zeta, nu) pairs")
    assert not bad


@pytest.mark.criterion(2, "Casimir centrality, n<=3, deg zeta<=2")
def test_c02_centrality(detail):
    bad = [(n, m) for n, m in GL_GRID if not centrality_certificate(DeformationGl(n, symbolic_zeta(m))).ok]
    detail(f"{len(GL_GRID)} (n, deg) cases")
    assert not bad


@pytest.mark.criterion(3, "residue and trace-sum Casimirs coincide")
def test_c03_constructions(detail):
    bad = []
    for n, m in GL_GRID:
        d = DeformationGl(n, symbolic_zeta(m))
        if (casimir_element(d, "residue") - casimir_element(d, "trace_sum")).terms:
            bad.append((n, m))
    detail(f"{len(GL_GRID)} (n, deg) cases")
    assert not bad


@pytest.mark.criterion(4, "action polynomial: HC projection equals sum w_p H_p")
def test_c04_action_polynomial(detail):
    bad = [(n, m) for n, m in GL_GRID if hc_casimir(DeformationGl(n, symbolic_zeta(m))) != compute_P(DeformationGl(n, symbolic_zeta(m)))]
    d1 = DeformationGl(1, symbolic_zeta(0))
    gl1 = hc_casimir(d1) == Z("zeta[0]") * Z("lam[1]")
    detail(f"{len(GL_GRID)} (n, deg) cases; gl1 P = zeta0*lam: {gl1}")
    assert not bad and gl1


@pytest.mark.criterion(5, "bridge identity n in {2,3}, k<=3, k=1 coefficient (n+1)/2")
def test_c05_bridge(detail):
    bad = []
    for n in (2, 3):
        if bridge_coefficients(1, n) != [1, -Fraction(n + 1, 2)]:
            bad.append((n, "k=1 coefficient"))
        bad += [(n, k) for k in range(4) if not bridge_identity_check(k, n).ok]
    detail("8 identities, 2 coefficient checks")
    assert not bad


def _oracle_agreement():
    """classify against brute-force k from the HC-projected Casimir (an independent P)."""
    zetas = [(1, 1), (-3, 1), (2, -1), (0, 1), (5, -2), (-1, 2)]
    zetas += [tuple(design_deformation(lam, nu).zeta) for lam, nu in DESIGN_SHAPES if len(lam) == 2]
    lams = [(a, b) for a in range(0, 6) for b in range(-2, a + 1)]
    bad, checked = [], 0
    for zeta in zetas:
        d = DeformationGl(2, zeta)
        P_hc = hc_casimir(d)
        for lam in lams:
            lam = tuple(Fraction(v) for v in lam)
            if classify(lam, d) != classify(lam, d, P_hc):
                bad.append((zeta, lam, "classify"))
            for i in (1, 2):
                k = smallest_k(P_hc, lam, i)
                brute = brute_force_k(P_hc, lam, i, 60)
                if k != brute and not (k is INF and brute is INF):
                    bad.append((zeta, lam, i, k, brute))
            checked += 1
    return bad, checked


@pytest.mark.criterion(6, "finite-dimensional classification")
def test_c06_findim(detail):
    d0 = DeformationGl(2, (Z("zeta[0]"),))
    grid = gl2_zeta0_grid()
    assert len(grid) == 20
    finite_at = [lam for lam in grid if classify(lam, d0).finite]
    ch = character((2, 0), (0, 3))
    box = sorted(weyl_dimension(c) for c in ch.components) == [3, 4, 5, 6] and ch.dimension == 18
    gl1_bad = []
    for zeta in [(1,), (3, -1), (-5, 1), (0, 0, 1), (2, -3, 1), (-6, 1, 1)]:
        for a in range(-8, 13):
            r = classify([Fraction(a, 2)], DeformationGl(1, zeta))
            if (r.nu[0] if r.finite else None) != gl1_criterion(Fraction(a, 2), zeta):
                gl1_bad.append((zeta, a))
    oracle_bad, checked = _oracle_agreement()
    # the displayed closed form is compared and its offset reported, not asserted
    disp = compare_displayed_gl2(1, 1, [(2, 0), (3, 1), (4, 2)])
    detail(f"zeta0 grid 20/20 infinite; box dim 18; oracle P on {checked} (zeta, lambda); displayed offset {disp.offset}")
    assert not finite_at and box and not gl1_bad and not oracle_bad


CRITICAL_INSTANCES = [
    ((5, 3), (1, 2)),
    ((2, 0), (0, 3)),
    ((6, 2), (1, 1)),
    ((4, 1, 0), (2, 1, 3)),
    ((5, 2, 0), (1, 1, 1)),
    ((2, 2, 0), (0, 1, 2)),
    ((4, 1), (1, 0)),
    ((6, 2), (2, 1)),
    ((3, 0), (1, 1)),
    ((7, 3), (3, 0)),
    ((4, 2, 0), (0, 1, 1)),
]


@pytest.mark.criterion(7, "critical vectors: Gram kernel at mu_i is nontrivial and killed by n+")
def test_c07_critical_vectors(detail):
    bad, count = [], 0
    for lam, nu in CRITICAL_INSTANCES:
        d = design_deformation(lam, nu).deformation
        r = classify(lam, d)
        assert r.finite and r.nu == list(nu)
        n = len(lam)
        for i in range(n - 1):
            if nu[i] >= lam[i] - lam[i + 1]:
                continue
            mu = [0] * n
            mu[i] = nu[i] + 1
            c = critical_vectors(mu, lam, d)
            ok = c.kernel_dim > 0 and c.vectors and all(is_singular(v, mu, lam, d) for v in c.vectors)
            if not ok:
                bad.append((lam, nu, mu))
            count += 1
    detail(f"{len(CRITICAL_INSTANCES)} (lambda, zeta) instances, {count} critical weights")
    assert len(CRITICAL_INSTANCES) >= 10 and not bad


@pytest.mark.criterion(8, "deformation design round trip, n in {2,3}")
def test_c08_design(detail):
    bad = []
    for lam, nu in DESIGN_SHAPES:
        D = design_deformation(lam, nu)
        r = classify(lam, D.deformation)
        r_w = classify(lam, D.deformation, D.P())
        if not (r.finite and r.nu == list(nu) and r_w.nu == list(nu)):
            bad.append((lam, nu, "round trip"))
        if not D.determinants and any(nu[:-1]):
            bad.append((lam, nu, "no determinants"))
        if any(x["det"] == 0 or x["det"] != x["vandermonde"] for x in D.determinants):
            bad.append((lam, nu, "determinant"))
    per_n = {n: sum(len(l) == n for l, _ in DESIGN_SHAPES) for n in (2, 3)}
    detail(f"shapes per n: {per_n}")
    assert per_n == {2: 5, 3: 5} and not bad


@pytest.mark.criterion(9, "Poisson center of gl_n and c_1 = sum zeta_i Tr S^{i+1}A")
def test_c09_poisson_gl(detail):
    bad = []
    for n, m in GL_GRID:
        d = DeformationGl(n, symbolic_zeta(m))
        if not verify_center_gl(d).ok:
            bad.append((n, m, "center"))
        expect = sum((Z(f"zeta[{i}]") * trace_power_sym(i + 1, n) for i in range(m + 1)), MultiPoly.zero())
        if poisson_c_series(d)[0] != expect:
            bad.append((n, m, "c_1"))
    detail(f"{len(GL_GRID)} (n, deg) cases")
    assert not bad


@pytest.mark.criterion(10, "pairing equals trace derivative, n<=3, l<=2")
def test_c10_trace_derivative(detail):
    bad = [(n, m) for n, m in GL_GRID if not pair_vs_trace_derivative(DeformationGl(n, symbolic_zeta(m))).ok]
    detail(f"{len(GL_GRID)} (n, l) cases")
    assert not bad


@pytest.mark.criterion(11, "Poisson center of sp_2 and sp_4, slice sign, tau constructions")
def test_c11_poisson_sp(detail):
    bad = []
    zetas = [(Z("zeta[0]"),), (Z("zeta[0]"), Z("zeta[2]"))]
    for n in (1, 2):
        for zeta in zetas:
            if not verify_center_sp(DeformationSp(n, zeta)).ok:
                bad.append((n, zeta, "center"))
        if not tau_agreement(n).ok:
            bad.append((n, "tau"))
        sl = slice_check(n)
        if not (sl.ok and sl.info["consistent_sign"]):
            bad.append((n, "slice", sl.info))
    detail(f"slice sign {slice_check(1).info['signs']['tau_1']} for every tau_i")
    assert not bad


@pytest.mark.criterion(12, "appendix identity for sp_2 (all i) and sp_4 (i=1,2)")
def test_c12_appendix(detail):
    certs = [appendix_identity_check(1), appendix_identity_check(2, 1), appendix_identity_check(2, 2)]
    detail(f"{sum(len(c.residuals) for c in certs)} residuals")
    assert all(c.ok for c in certs)


def _random_poly(rng, names, terms=3, max_exp=2):
    out = MultiPoly.zero()
    for _ in range(rng.randint(1, terms)):
        mono = MultiPoly.one()
        for v in rng.sample(names, rng.randint(0, 2)):
            mono = mono * Z(v) ** rng.randint(1, max_exp)
        out = out + mono * Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return out


def _random_element(rng, alg, terms=3, length=3):
    L = len(alg.letters)
    out = alg.element()
    for _ in range(rng.randint(1, terms)):
        word = [rng.randrange(L) for _ in range(rng.randint(0, length))]
        out = out + alg.normal_order(word) * Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    return out


@pytest.mark.criterion(13, "property suites: diamond, Poisson axioms, anti-involution, grading")
def test_c13_properties(detail):
    bad = []
    for n, m in GL_GRID:
        alg = algebra(DeformationGl(n, symbolic_zeta(m)))
        rng = random.Random(1000 + 10 * n + m)
        L = len(alg.letters)
        for _ in range(200):
            t = tuple(rng.randrange(L) for _ in range(3))
            if alg.diamond_residual(*t):
                bad.append(("diamond", n, m, t))
    poissons = [gl_poisson(DeformationGl(2, symbolic_zeta(2))), sp_poisson(DeformationSp(1, (Z("zeta[0]"), Z("zeta[2]"))))]
    for P in poissons:
        rng = random.Random(7)
        br = P.bracket
        for _ in range(200):
            a, b, c = (_random_poly(rng, P.generators) for _ in range(3))
            if br(a, b) != -br(b, a):
                bad.append(("antisymmetry", a, b))
            if br(a, b * c) != br(a, b) * c + b * br(a, c):
                bad.append(("leibniz", a, b, c))
            if br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b)):
                bad.append(("jacobi", a, b, c))
    alg = algebra(DeformationGl(2, symbolic_zeta(2)))
    rng = random.Random(11)
    for _ in range(200):
        a, b = _random_element(rng, alg), _random_element(rng, alg)
        if a.sigma().sigma() != a or (a * b).sigma() != b.sigma() * a.sigma():
            bad.append(("sigma", a, b))
        for wa, pa in a.weight_components().items():
            for wb, pb in b.weight_components().items():
                target = tuple(u + v for u, v in zip(wa, wb))
                if not set((pa * pb).weight_components()) <= {target}:
                    bad.append(("grading", wa, wb))
    detail("9 x 200 diamond triples, 2 x 200 Poisson triples, 200 element pairs")
    assert not bad
