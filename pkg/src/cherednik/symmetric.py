"""Symmetric-function constructors in eigenvalue and matrix-entry variables.

Matrix convention: the generic matrix ``A`` has entry ``A[a][b] = e[b,a]``.
With this choice ``A`` is the canonical element sum_b b (x) b^dual of
gl_n under the trace form, so matrix functions of ``A`` land in S(gl_n)
compatibly with the bracket [e_ij, e_kl] = d_jk e_il - d_li e_kj.  Class
functions (Q_k, Tr S^j A) do not see the transpose.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import List, Sequence, Union

from .poly import MultiPoly

VarLike = Union[str, MultiPoly]


def e_name(i: int, j: int) -> str:
    return f"e[{i},{j}]"


def x_name(i: int) -> str:
    return f"x[{i}]"


def y_name(i: int) -> str:
    return f"y[{i}]"


def lam_name(i: int) -> str:
    return f"lam[{i}]"


def zeta_name(k: int) -> str:
    return f"zeta[{k}]"


def lam_vars(n: int) -> List[MultiPoly]:
    return [MultiPoly.var(lam_name(i)) for i in range(1, n + 1)]


def _as_polys(vars: Sequence[VarLike]) -> List[MultiPoly]:
    return [MultiPoly.var(v) if isinstance(v, str) else MultiPoly.coerce(v) for v in vars]


def complete_homogeneous(j: int, vars: Sequence[VarLike]) -> MultiPoly:
    """H_j(vars): sum of all monomials of degree j.  H_0 = 1, H_j = 0 for j < 0."""
    if j < 0:
        return MultiPoly.zero()
    if not vars:
        raise ValueError("need at least one variable")
    xs = _as_polys(vars)
    if all(len(x) == 1 and x.total_degree() == 1 for x in xs):
        names = tuple(next(iter(x.terms))[0][0] for x in xs)
        coeffs = tuple(next(iter(x.terms.values())) for x in xs)
        if all(c == 1 for c in coeffs):
            return _h_names(j, names)
    return _h_general(j, xs)


@lru_cache(maxsize=None)
def _h_names(j: int, names: tuple) -> MultiPoly:
    terms = {}
    for combo in itertools.combinations_with_replacement(names, j):
        counts = {}
        for v in combo:
            counts[v] = counts.get(v, 0) + 1
        terms[tuple(sorted(counts.items()))] = 1
    return MultiPoly(terms)


def _h_general(j: int, xs: List[MultiPoly]) -> MultiPoly:
    # H_j(x_1..x_n) = sum_k x_1^k H_{j-k}(x_2..x_n)
    table = [MultiPoly.one()] + [MultiPoly.zero()] * j
    for x in xs:
        new = []
        for d in range(j + 1):
            acc = MultiPoly.zero()
            p = MultiPoly.one()
            for k in range(d + 1):
                if table[d - k]:
                    acc = acc + p * table[d - k]
                p = p * x
            new.append(acc)
        table = new
    return table[j]


def generic_matrix(n: int) -> List[List[MultiPoly]]:
    """The matrix A with A[a][b] = e[b,a] (0-based rows/cols, 1-based names)."""
    return [[MultiPoly.var(e_name(b + 1, a + 1)) for b in range(n)] for a in range(n)]


def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = MultiPoly.zero()
            for k in range(m):
                if a[i][k] and b[k][j]:
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def identity(n: int):
    return [[MultiPoly.one() if i == j else MultiPoly.zero() for j in range(n)] for i in range(n)]


@lru_cache(maxsize=None)
def matrix_powers(n: int, kmax: int):
    """(A^0, ..., A^kmax) for the generic matrix."""
    A = generic_matrix(n)
    out = [identity(n)]
    for _ in range(kmax):
        out.append(mat_mul(out[-1], A))
    return tuple(out)


def det_perm(m) -> MultiPoly:
    """Determinant by permutation expansion (fine for the small sizes used here)."""
    n = len(m)
    if n == 0:
        return MultiPoly.one()
    total = MultiPoly.zero()
    for perm in itertools.permutations(range(n)):
        sign = _perm_sign(perm)
        term = MultiPoly.const(sign)
        for i, j in enumerate(perm):
            if not m[i][j]:
                term = None
                break
            term = term * m[i][j]
        if term is not None:
            total = total + term
    return total


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def principal_minor_sum(m, k: int) -> MultiPoly:
    """Sum of all k x k principal minors of the matrix m."""
    n = len(m)
    total = MultiPoly.zero()
    for rows in itertools.combinations(range(n), k):
        total = total + det_perm([[m[i][j] for j in rows] for i in rows])
    return total


@lru_cache(maxsize=None)
def char_poly_coeffs(n: int) -> tuple:
    """(Q_0, ..., Q_n) with det(1 - tA) = sum_k Q_k (-t)^k."""
    if n < 1:
        raise ValueError("rank must be positive")
    A = generic_matrix(n)
    return tuple([MultiPoly.one()] + [principal_minor_sum(A, k) for k in range(1, n + 1)])


@lru_cache(maxsize=None)
def trace_power_sym(j: int, n: int) -> MultiPoly:
    """Tr S^j A, read off from 1/det(1 - zA) = sum_j Tr S^j A z^j."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    if j == 0:
        return MultiPoly.one()
    Q = char_poly_coeffs(n)
    acc = MultiPoly.zero()
    for k in range(1, min(j, n) + 1):
        term = Q[k] * trace_power_sym(j - k, n)
        acc = acc + term if k % 2 == 1 else acc - term
    return acc


@lru_cache(maxsize=None)
def pairing_coefficients(n: int, k: int) -> tuple:
    """Commutative pairing polynomials for the coefficient of tau^k.

    Entry [i][j] (0-based) is the tau^k coefficient of
    (x_j, (1 - tau A)^{-1} y_i) det(1 - tau A)^{-1}, i.e.
    sum_{a+b=k} (A^a)_{j i} Tr S^b A.
    """
    powers = matrix_powers(n, k)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = MultiPoly.zero()
            for a in range(k + 1):
                entry = powers[a][j][i]
                if entry:
                    acc = acc + entry * trace_power_sym(k - a, n)
            row.append(acc)
        out.append(row)
    return tuple(tuple(r) for r in out)


def diagonal_substitution(n: int, values: Sequence[VarLike] | None = None) -> dict:
    """Map e[i,i] -> lam[i] (or the given values) and off-diagonal e[i,j] -> 0."""
    vals = lam_vars(n) if values is None else _as_polys(values)
    sub = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            sub[e_name(i, j)] = vals[i - 1] if i == j else 0
    return sub
