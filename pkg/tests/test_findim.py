from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cherednik.casimir import compute_P
from cherednik.findim import (
    INF,
    brute_force_k,
    character,
    classify,
    compare_displayed_gl2,
    design_deformation,
    gl1_criterion,
    is_dominant,
    positive_integer_roots,
    recover_zeta,
    schur_weights,
    smallest_k,
    weyl_dimension,
)
from cherednik.pbw import DeformationGl
from cherednik.poly import MultiPoly
from cherednik.suites import DESIGN_SHAPES, gl2_zeta0_grid

rat = st.fractions(min_value=-4, max_value=4, max_denominator=2)


def test_positive_integer_roots():
    # (mu - 2)(mu - 5)(mu + 1) = mu^3 - 6 mu^2 + 3 mu + 10
    assert positive_integer_roots([10, 3, -6, 1]) == [2, 5]
    assert positive_integer_roots([0, 0]) is None
    assert positive_integer_roots([1, 1]) == []


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=3), st.lists(rat, min_size=2, max_size=2), st.integers(1, 2))
def test_smallest_k_matches_brute_force(zeta, lam, i):
    d = DeformationGl(2, tuple(zeta))
    P = compute_P(d)
    k = smallest_k(P, lam, i)
    bf = brute_force_k(P, lam, i, 60)
    if k is INF:
        assert bf is INF
    else:
        assert bf == k


def test_weyl_dimensions():
    assert weyl_dimension((2, 0)) == 3
    assert weyl_dimension((2, 1, 0)) == 8
    assert weyl_dimension((Fraction(1, 2), Fraction(1, 2))) == 1


@pytest.mark.parametrize("lam", [(2, 0), (3, 1, 0), (1, 1, 0), (4, 2, 1)])
def test_schur_weights_sum_to_dimension(lam):
    w = schur_weights(lam)
    assert sum(w.values()) == weyl_dimension(lam)
    assert w[tuple(Fraction(v) for v in lam)] == 1


def test_box_example():
    ch = character((2, 0), (0, 3))
    assert sorted(weyl_dimension(c) for c in ch.components) == [3, 4, 5, 6]
    assert ch.dimension == 18
    assert sum(ch.weights().values()) == 18


def test_zeta0_gl2_never_finite():
    d = DeformationGl(2, (1,))
    assert all(not classify(lam, d).finite for lam in gl2_zeta0_grid())
    assert len(gl2_zeta0_grid()) == 20


def test_generic_parameters():
    d = DeformationGl(2, (MultiPoly.var("zeta[0]"),))
    assert not classify((5, 3), d).finite


def test_undeformed_algebra_gives_gl_irreducible():
    r = classify((5, 3), DeformationGl(2, (0,)))
    assert r.finite and r.nu == [0, 0] and r.dimension == 3


def test_nondominant_is_infinite():
    d = DeformationGl(2, (1, 1))
    for lam in [(0, 1), (Fraction(1, 2), 0)]:
        assert not is_dominant(lam)
        assert not classify(lam, d).finite


def test_gl2_r0_r1_example():
    d = DeformationGl(2, (1, 1))
    r = classify((2, 0), d)
    assert r.finite and r.nu == [2, 3] and r.k == [6, 3]


@pytest.mark.parametrize("zeta", [(1,), (3, -1), (-5, 1), (0, 0, 1), (2, -3, 1), (-6, 1, 1)])
def test_gl1_criterion(zeta):
    for a in range(-8, 13):
        lam = Fraction(a, 2)
        r = classify([lam], DeformationGl(1, zeta))
        assert (r.nu[0] if r.finite else None) == gl1_criterion(lam, zeta)


@pytest.mark.parametrize("lam,nu", DESIGN_SHAPES)
def test_design_round_trip(lam, nu):
    D = design_deformation(lam, nu)
    assert all(x["det"] == x["vandermonde"] != 0 for x in D.determinants)
    r = classify(lam, D.deformation)
    assert r.finite and r.nu == list(nu)
    assert classify(lam, D.deformation, D.P()).nu == list(nu)
    # w-level P and oracle P agree up to an additive constant, which classify ignores
    offset = compute_P(D.deformation) - D.P()
    assert all(not mono for mono, _ in offset.items())


def test_recover_zeta_inverts_pipeline():
    from cherednik.casimir import build_pipeline

    d = DeformationGl(3, (2, Fraction(-1, 3), 5))
    w = build_pipeline(d).coeffs("w")
    w = [Fraction(c.constant_term()) for c in w]
    assert recover_zeta(w, 3) == [2, Fraction(-1, 3), 5]


def test_displayed_formula_offset_is_reported():
    c = compare_displayed_gl2(1, 1, [(2, 0)])
    lam1, lam2 = MultiPoly.var("lam[1]"), MultiPoly.var("lam[2]")
    assert c.offset == Fraction(3, 2) * (lam1 + lam2) - Fraction(1, 4)
    assert c.classify_agree == {"2,0": False}
