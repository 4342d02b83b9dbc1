import itertools

import pytest
from hypothesis import given, settings

from cherednik.pbw import DeformationGl, symbolic_zeta
from cherednik.poisson_gl import (
    gl_generators,
    gl_poisson,
    pair_vs_trace_derivative,
    pairing_poly,
    poisson_c_series,
    tau_k,
    verify_center_gl,
)
from cherednik.poly import MultiPoly
from cherednik.symmetric import trace_power_sym

from strategies import polys

Z = MultiPoly.var


def jacobi(P, a, b, c):
    br = P.bracket
    return br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b))


GL2 = gl_poisson(DeformationGl(2, symbolic_zeta(1)))
gl2_polys = polys(names=tuple(gl_generators(2)), max_terms=3, max_exp=2)


@settings(max_examples=200)
@given(gl2_polys, gl2_polys)
def test_bracket_antisymmetry(a, b):
    assert GL2.bracket(a, b) == -GL2.bracket(b, a)


@settings(max_examples=200)
@given(gl2_polys, gl2_polys, gl2_polys)
def test_bracket_leibniz(a, b, c):
    assert GL2.bracket(a, b * c) == GL2.bracket(a, b) * c + b * GL2.bracket(a, c)


@settings(max_examples=60)
@given(gl2_polys, gl2_polys, gl2_polys)
def test_bracket_jacobi(a, b, c):
    assert not jacobi(GL2, a, b, c)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_jacobi_on_generators(n):
    P = gl_poisson(DeformationGl(n, symbolic_zeta(2)))
    gens = [Z(g) for g in P.generators]
    for a, b, c in itertools.combinations_with_replacement(gens, 3):
        assert not jacobi(P, a, b, c)


def test_non_invariant_pairing_breaks_jacobi():
    d = DeformationGl(2, (1,))
    P = gl_poisson(d, pair=lambda i, j: Z("e[1,1]") if i == j else MultiPoly.zero())
    gens = [Z(g) for g in P.generators]
    assert any(jacobi(P, a, b, c) for a, b, c in itertools.product(gens, repeat=3))


def test_undeformed_pairing_is_zero():
    assert not pairing_poly(1, 2, DeformationGl(2, ()))
    assert poisson_c_series(DeformationGl(2, ())) == [MultiPoly.zero()] * 2


def test_gl1_pairing_and_tau():
    d = DeformationGl(1, symbolic_zeta(1))
    # {y, x} = zeta_0 + 2 zeta_1 e_11
    assert pairing_poly(1, 1, d) == Z("zeta[0]") + 2 * Z("zeta[1]") * Z("e[1,1]")
    assert tau_k(1, 1) == Z("x[1]") * Z("y[1]")


def test_tau2_gl2():
    e = lambda i, j: Z(f"e[{i},{j}]")
    x, y = (lambda i: Z(f"x[{i}]")), (lambda i: Z(f"y[{i}]"))
    expect = e(1, 1) * x(2) * y(2) + e(2, 2) * x(1) * y(1) - e(1, 2) * x(1) * y(2) - e(2, 1) * x(2) * y(1)
    assert tau_k(2, 2) == expect


def test_c1_gl1():
    assert poisson_c_series(DeformationGl(1, symbolic_zeta(0)))[0] == Z("zeta[0]") * Z("e[1,1]")


def test_c1_gl2_linear():
    c1 = poisson_c_series(DeformationGl(2, symbolic_zeta(1)))[0]
    expect = Z("zeta[0]") * trace_power_sym(1, 2) + Z("zeta[1]") * trace_power_sym(2, 2)
    assert c1 == expect


@pytest.mark.parametrize("n,m", [(n, m) for n in (1, 2, 3) for m in (0, 1, 2)])
def test_center(n, m):
    cert = verify_center_gl(DeformationGl(n, symbolic_zeta(m)))
    assert cert.ok, cert.failures()


@pytest.mark.parametrize("n,m", [(n, m) for n in (1, 2, 3) for m in (0, 1, 2)])
def test_c1_trace_formula(n, m):
    c1 = poisson_c_series(DeformationGl(n, symbolic_zeta(m)))[0]
    expect = MultiPoly.zero()
    for i in range(m + 1):
        expect = expect + Z(f"zeta[{i}]") * trace_power_sym(i + 1, n)
    assert c1 == expect


@pytest.mark.parametrize("n,m", [(n, m) for n in (1, 2, 3) for m in (0, 1, 2)])
def test_pairing_is_trace_derivative(n, m):
    assert pair_vs_trace_derivative(DeformationGl(n, symbolic_zeta(m))).ok


def test_center_fails_without_correction():
    d = DeformationGl(2, symbolic_zeta(1))
    P = gl_poisson(d)
    assert any(P.bracket(tau_k(1, 2), Z(g)) for g in P.generators)


def test_certificate_json():
    js = verify_center_gl(DeformationGl(1, (1,))).to_json()
    assert js["ok"] and js["checked"] == 3 and js["failures"] == {}
