import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cherednik.pbw import DeformationGl, PBWAlgebra, algebra, parse_zeta, symbolic_zeta, zeta_pair
from cherednik.poly import MultiPoly
from cherednik.symmetric import e_name, pairing_coefficients, x_name, y_name

z0 = MultiPoly.var("zeta[0]")


def test_gl1_relation():
    alg = algebra(DeformationGl(1, (z0,)))
    assert alg.y(1) * alg.x(1) == alg.x(1) * alg.y(1) + z0


def test_r1_pairing_gl1():
    alg = algebra(DeformationGl(1, (0, 1)))
    assert alg.y(1) * alg.x(1) - alg.x(1) * alg.y(1) == alg.e(1, 1) * 2


def test_r0_pairing_is_identity():
    for n in (1, 2, 3):
        d = DeformationGl(n, (z0,))
        for i, j in itertools.product(range(1, n + 1), repeat=2):
            assert zeta_pair(i, j, d) == (z0 if i == j else 0)


def test_gl2_r1_pairing_entries():
    d = DeformationGl(2, (0, 1))
    alg = algebra(d)
    assert zeta_pair(1, 1, d) == alg.e(1, 1) * 2 + alg.e(2, 2)
    assert zeta_pair(1, 2, d) == alg.e(1, 2)
    assert zeta_pair(2, 1, d) == alg.e(2, 1)
    assert zeta_pair(2, 2, d) == alg.e(1, 1) + alg.e(2, 2) * 2


def test_commutative_pairing_generating_function():
    # r_1 for gl_1: the coefficient of t in 1/(1 - t a)^2 is 2a
    assert pairing_coefficients(1, 1)[0][0] == 2 * MultiPoly.var(e_name(1, 1))


def test_gl_relations():
    alg = algebra(DeformationGl(2, ()))
    e12, e21, e11, e22 = alg.e(1, 2), alg.e(2, 1), alg.e(1, 1), alg.e(2, 2)
    assert e12 * e21 == e21 * e12 + e11 - e22
    assert e11.commutator(alg.y(1)) == alg.y(1)
    assert e12.commutator(alg.x(1)) == -alg.x(2)


def test_symmetrize_example():
    alg = algebra(DeformationGl(2, ()))
    p = MultiPoly.var(e_name(1, 2)) * MultiPoly.var(e_name(2, 1))
    half = Fraction(1, 2)
    assert alg.symmetrize(p) == alg.e(2, 1) * alg.e(1, 2) + alg.e(1, 1) * half - alg.e(2, 2) * half


def test_gl1_central_element():
    alg = algebra(DeformationGl(1, (z0,)))
    h = alg.e(1, 1)
    t = alg.x(1) * alg.y(1) + h * z0
    for g in alg.generators():
        assert not t.commutator(g)


def test_parse_zeta():
    assert parse_zeta(["1/2", "0", "b"]) == (Fraction(1, 2), 0, MultiPoly.var("b"))
    assert parse_zeta(["sym"]) == (MultiPoly.var("zeta[0]"),)
    with pytest.raises(ValueError):
        parse_zeta(["1+"])


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("m", [0, 1, 2])
def test_diamond_lemma_on_random_triples(n, m):
    alg = algebra(DeformationGl(n, symbolic_zeta(m)))
    rng = random.Random(n * 10 + m)
    L = len(alg.letters)
    for _ in range(200):
        t = tuple(rng.randrange(L) for _ in range(3))
        assert not alg.diamond_residual(*t), [alg.names[a] for a in t]


def test_transposed_pairing_breaks_pbw():
    d = DeformationGl(2, (0, 1))
    std = algebra(d)
    bad = PBWAlgebra(d, pair=lambda i, j: std.zeta_pair_terms(j, i))
    L = len(bad.letters)
    failures = sum(1 for t in itertools.product(range(L), repeat=3) if bad.diamond_residual(*t))
    assert failures > 0


# random elements ---------------------------------------------------------------


def elements(alg, max_terms=3, max_len=3):
    L = len(alg.letters)
    word = st.lists(st.integers(min_value=0, max_value=L - 1), max_size=max_len)
    coeff = st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(bool)
    return st.lists(st.tuples(word, coeff), max_size=max_terms).map(
        lambda items: sum((alg.normal_order(w) * c for w, c in items), alg.element())
    )


ALG2 = algebra(DeformationGl(2, (1, Fraction(1, 2), -1)))


@given(elements(ALG2))
def test_sigma_is_an_involution(a):
    assert a.sigma().sigma() == a


@given(elements(ALG2), elements(ALG2))
def test_sigma_reverses_products(a, b):
    assert (a * b).sigma() == b.sigma() * a.sigma()


@given(elements(ALG2), elements(ALG2))
def test_weight_grading(a, b):
    for wa, pa in a.weight_components().items():
        for wb, pb in b.weight_components().items():
            prod = pa * pb
            target = tuple(u + v for u, v in zip(wa, wb))
            assert set(prod.weight_components()) <= {target}


def xy_elements(alg):
    letters = [l for l in range(len(alg.letters)) if alg.kind(l) != "e"]
    word = st.lists(st.sampled_from(letters), min_size=1, max_size=3)
    coeff = st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(bool)
    return st.lists(st.tuples(word, coeff), min_size=1, max_size=3).map(
        lambda items: sum((alg.normal_order(w) * c for w, c in items), alg.element())
    ).filter(bool)


@given(xy_elements(ALG2), xy_elements(ALG2))
def test_filtration_top_layer(a, b):
    # x and y commute in the associated graded algebra, and degrees add
    ab, ba = a * b, b * a
    d = a.degree() + b.degree()
    assert ab.degree() == d
    assert ab.top_layer() == ba.top_layer()
    assert (ab - ba).degree() < d


def test_json_and_latex():
    alg = algebra(DeformationGl(1, (z0,)))
    p = alg.y(1) * alg.x(1)
    assert p.to_json() == [[[], {"poly": z0.to_json()}], [["x[1]", "y[1]"], "1"]]
    assert "x_{1}" in p.latex() and "y_{1}" in p.latex()
