"""Exact linear algebra: fraction-free determinants and rational null spaces."""
from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence

from .poly import MultiPoly, var_key


def bareiss_det(matrix: Sequence[Sequence], backend: str = "auto") -> MultiPoly:
    """Determinant by fraction-free Bareiss elimination over the polynomial ring.

    Every intermediate division is exact, so entries stay polynomials.
    ``backend`` is "python", "flint" or "auto" (flint when available and the
    entries are genuine polynomials; both run the same elimination).
    """
    if backend not in ("auto", "python", "flint"):
        raise ValueError("backend must be 'auto', 'python' or 'flint'")
    if backend != "python":
        det = _flint_det(matrix)
        if det is not None:
            return det
        if backend == "flint":
            raise RuntimeError("flint backend unavailable for this matrix")
    return _python_det(matrix)


def _python_det(matrix: Sequence[Sequence]) -> MultiPoly:
    n = len(matrix)
    if n == 0:
        return MultiPoly.one()
    m = [[MultiPoly.coerce(x) for x in row] for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    sign = 1
    prev = MultiPoly.one()
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero()
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev) if not prev.is_constant() else num / prev.constant_term()
            m[i][k] = MultiPoly.zero()
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def _flint_det(matrix: Sequence[Sequence]) -> Optional[MultiPoly]:
    """Bareiss over flint's fmpq_mpoly; None when flint is missing or exponents are negative."""
    try:
        import flint
    except ImportError:
        return None
    n = len(matrix)
    m = [[MultiPoly.coerce(x) for x in row] for row in matrix]
    if n == 0 or any(len(row) != n for row in m):
        return None
    names = sorted({v for row in m for x in row for v in x.variables}, key=var_key)
    if not names:
        names = ["_"]
    if any(e < 0 for row in m for x in row for mono, _ in x.items() for _, e in mono):
        return None
    pos = {v: k for k, v in enumerate(names)}
    ctx = flint.fmpq_mpoly_ctx.get(tuple(names), "degrevlex")

    def to_flint(p: MultiPoly):
        d = {}
        for mono, c in p.items():
            exps = [0] * len(names)
            for v, e in mono:
                exps[pos[v]] = e
            c = Fraction(c)
            d[tuple(exps)] = flint.fmpq(c.numerator, c.denominator)
        return ctx.from_dict(d)

    a = [[to_flint(x) for x in row] for row in m]
    sign = 1
    prev = ctx.from_dict({(0,) * len(names): 1})
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero()
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
        prev = pivot
    det = a[n - 1][n - 1] * sign
    out = {}
    for exps, c in det.to_dict().items():
        mono = tuple((names[k], int(e)) for k, e in enumerate(exps) if e)
        out[mono] = Fraction(int(c.p), int(c.q))
    return MultiPoly(out)


def rational_nullspace(matrix: Sequence[Sequence]) -> List[List[Fraction]]:
    """Basis of the right null space of a rational matrix (reduced row echelon)."""
    rows = [[Fraction(_scalar(x)) for x in row] for row in matrix]
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


def rank(matrix: Sequence[Sequence]) -> int:
    if not matrix:
        return 0
    return len(matrix[0]) - len(rational_nullspace(matrix))


def _scalar(x):
    if isinstance(x, MultiPoly):
        if not x.is_constant():
            raise ValueError("numeric matrix expected")
        return x.constant_term()
    return x


def constant_ratio(a: MultiPoly, b: MultiPoly):
    """Return c with a == c*b for a rational constant c, or None."""
    a, b = MultiPoly.coerce(a), MultiPoly.coerce(b)
    if not b:
        return None if a else Fraction(0)
    if not a:
        return Fraction(0)
    c = Fraction(a.leading_coeff()) / Fraction(b.leading_coeff())
    return c if a - b * c == 0 else None


def rational_inverse(matrix: Sequence[Sequence]) -> List[List[Fraction]]:
    """Inverse of a square rational matrix by Gauss-Jordan elimination."""
    n = len(matrix)
    aug = [[Fraction(_scalar(x)) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]
