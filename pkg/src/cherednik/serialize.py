"""Canonical JSON and LaTeX renderings of exact values."""
from __future__ import annotations

import json
from fractions import Fraction

from .poly import MultiPoly, _latex_scalar, _latex_var, format_scalar


def coeff_json(c):
    """Rationals become "p/q" strings, polynomials sorted term lists."""
    if isinstance(c, MultiPoly):
        if c.is_constant():
            return format_scalar(c.constant_term())
        return {"poly": c.to_json()}
    return format_scalar(c)


def coeff_str(c) -> str:
    if isinstance(c, MultiPoly):
        return str(c)
    return format_scalar(c)


def coeff_latex(c) -> str:
    if isinstance(c, MultiPoly):
        if c.is_constant():
            return _latex_scalar(Fraction(c.constant_term())) if c.constant_term() >= 0 else "-" + _latex_scalar(-Fraction(c.constant_term()))
        s = c.latex()
        return s if len(c) == 1 else rf"\left({s}\right)"
    c = Fraction(c)
    return _latex_scalar(c) if c >= 0 else "-" + _latex_scalar(-c)


def word_latex(alg, w) -> str:
    if not w:
        return "1"
    import itertools

    parts = []
    for a, grp in itertools.groupby(w):
        k = len(list(grp))
        parts.append(_latex_var(alg.names[a]) + (f"^{{{k}}}" if k > 1 else ""))
    return " ".join(parts)


def to_jsonable(obj):
    """Recursively convert exact values into plain JSON data."""
    if isinstance(obj, MultiPoly):
        return obj.to_json()
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return format_scalar(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, float):
        raise TypeError("floating point values are not serialised")
    return str(obj)


def dumps(obj) -> str:
    """Deterministic JSON text (sorted keys, fixed separators)."""
    return json.dumps(to_jsonable(obj), sort_keys=True, separators=(",", ":"))
