"""The algebra H_zeta(gl_n) in PBW normal form.

Generators are encoded as small integers ("letters") in the fixed order

    x_1 < ... < x_n < e_lower (i>j, lex) < e_11 < ... < e_nn < e_upper (i<j, lex) < y_1 < ... < y_n

and a PBW monomial is a nondecreasing tuple of letters.  Keeping the
lowering operators left of the Cartan and the raising operators right of it
makes the Harish-Chandra projection a plain filter on monomials and lets
Verma modules be computed by left multiplication.

Coefficients are duck-typed: ``int``, ``Fraction`` or ``MultiPoly`` (the
latter carrying symbolic zeta parameters or weights).
"""
from __future__ import annotations

import itertools
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .poly import MultiPoly, as_scalar, format_scalar
from .symmetric import e_name, pairing_coefficients, x_name, y_name, zeta_name

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

Word = Tuple[int, ...]
Terms = Dict[Word, object]

_GEN_RE = re.compile(r"^(e|x|y)\[(\d+)(?:,(\d+))?\]$")


def norm_coeff(c):
    """Collapse constant polynomials and integral fractions to plain scalars."""
    if isinstance(c, MultiPoly):
        if c.is_constant():
            return as_scalar(c.constant_term())
        return c
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def parse_zeta(items: Iterable, symbolic_prefix: str = "zeta") -> tuple:
    """Exact coefficients from strings/numbers; identifiers become symbols."""
    out = []
    for k, it in enumerate(items):
        if isinstance(it, MultiPoly):
            out.append(norm_coeff(it))
            continue
        if isinstance(it, (int, Fraction)):
            out.append(as_scalar(it))
            continue
        s = str(it).strip()
        if s in ("", "zeta", "sym", "symbolic"):
            out.append(MultiPoly.var(zeta_name(k)))
            continue
        try:
            out.append(as_scalar(Fraction(s)))
        except ValueError:
            if not re.match(r"^[A-Za-z_][A-Za-z_0-9]*(\[[0-9,]+\])?$", s):
                raise ValueError(f"cannot parse zeta entry {s!r}")
            out.append(MultiPoly.var(s))
    return tuple(out)


def symbolic_zeta(m: int) -> tuple:
    """(zeta[0], ..., zeta[m]) as free symbols."""
    return tuple(MultiPoly.var(zeta_name(k)) for k in range(m + 1))


@dataclass(frozen=True)
class DeformationGl:
    """zeta(z) = zeta_0 + zeta_1 z + ... + zeta_m z^m on gl_n."""

    n: int
    zeta: tuple = field(default=())

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank must be positive")
        object.__setattr__(self, "zeta", tuple(norm_coeff(MultiPoly.coerce(c)) for c in self.zeta))

    @property
    def degree(self) -> int:
        m = len(self.zeta) - 1
        while m >= 0 and not self.zeta[m]:
            m -= 1
        return m

    def zeta_poly(self, var: str = "z") -> MultiPoly:
        z = MultiPoly.var(var)
        out = MultiPoly.zero()
        for k, c in enumerate(self.zeta):
            out = out + MultiPoly.coerce(c) * z ** k
        return out


class PBWAlgebra:
    """Normal-ordering engine for H_zeta(gl_n) with memoized products."""

    def __init__(self, d: DeformationGl, pair: Optional[Callable[[int, int], Terms]] = None):
        """``pair`` replaces zeta(y_i, x_j); used to exhibit non-PBW pairings."""
        self.d = d
        self._pair_override = pair
        n = self.n = d.n
        letters: List[Tuple[str, int, int]] = []
        letters += [("x", i, 0) for i in range(1, n + 1)]
        letters += [("e", i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i > j]
        letters += [("e", i, i) for i in range(1, n + 1)]
        letters += [("e", i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i < j]
        letters += [("y", i, 0) for i in range(1, n + 1)]
        self.letters = letters
        self.index = {lt: k for k, lt in enumerate(letters)}
        self.names = [self._name(lt) for lt in letters]
        self.by_name = {nm: k for k, nm in enumerate(self.names)}
        self.weights = [self._weight(lt) for lt in letters]
        self._gen_memo: Dict[Tuple[Word, int], Terms] = {}
        self._bracket_memo: Dict[Tuple[int, int], Terms] = {}

    # letters ---------------------------------------------------------------
    @staticmethod
    def _name(lt) -> str:
        kind, i, j = lt
        return e_name(i, j) if kind == "e" else (x_name(i) if kind == "x" else y_name(i))

    def _weight(self, lt) -> Tuple[int, ...]:
        kind, i, j = lt
        w = [0] * self.n
        if kind == "x":
            w[i - 1] = -1
        elif kind == "y":
            w[i - 1] = 1
        else:
            w[i - 1] += 1
            w[j - 1] -= 1
        return tuple(w)

    def X(self, i: int) -> int:
        return self.index[("x", i, 0)]

    def Y(self, i: int) -> int:
        return self.index[("y", i, 0)]

    def E(self, i: int, j: int) -> int:
        return self.index[("e", i, j)]

    def kind(self, letter: int) -> str:
        return self.letters[letter][0]

    def is_diagonal(self, letter: int) -> bool:
        k, i, j = self.letters[letter]
        return k == "e" and i == j

    def is_lowering(self, letter: int) -> bool:
        k, i, j = self.letters[letter]
        return k == "x" or (k == "e" and i > j)

    def is_raising(self, letter: int) -> bool:
        k, i, j = self.letters[letter]
        return k == "y" or (k == "e" and i < j)

    def sigma_letter(self, letter: int) -> int:
        k, i, j = self.letters[letter]
        if k == "x":
            return self.index[("y", i, 0)]
        if k == "y":
            return self.index[("x", i, 0)]
        return self.index[("e", j, i)]

    def word_weight(self, w: Word) -> Tuple[int, ...]:
        tot = [0] * self.n
        for a in w:
            for k, v in enumerate(self.weights[a]):
                tot[k] += v
        return tuple(tot)

    # brackets ----------------------------------------------------------------
    def bracket_letters(self, a: int, b: int) -> Terms:
        """[a, b] for generators a, b, as a normal-ordered element."""
        key = (a, b)
        hit = self._bracket_memo.get(key)
        if hit is not None:
            return hit
        ka, ia, ja = self.letters[a]
        kb, ib, jb = self.letters[b]
        out: Terms = {}

        def add(word: Word, c):
            s = out.get(word, 0) + c
            if s:
                out[word] = norm_coeff(s)
            else:
                out.pop(word, None)

        if ka == "e" and kb == "e":
            if ja == ib:
                add((self.E(ia, jb),), 1)
            if jb == ia:
                add((self.E(ib, ja),), -1)
        elif ka == "e" and kb == "y":
            if ja == ib:
                add((self.Y(ia),), 1)
        elif ka == "y" and kb == "e":
            if jb == ia:
                add((self.Y(ib),), -1)
        elif ka == "e" and kb == "x":
            if ia == ib:
                add((self.X(ja),), -1)
        elif ka == "x" and kb == "e":
            if ib == ia:
                add((self.X(jb),), 1)
        elif ka == "y" and kb == "x":
            for word, c in self.zeta_pair_terms(ia, ib).items():
                add(word, c)
        elif ka == "x" and kb == "y":
            for word, c in self.zeta_pair_terms(ib, ia).items():
                add(word, -c)
        self._bracket_memo[key] = out
        return out

    def zeta_pair_terms(self, i: int, j: int) -> Terms:
        """zeta(y_i, x_j) = sum_k zeta_k Sym(r_k)_{ij} in U(gl_n)."""
        key = ("pair", i, j)
        hit = self._bracket_memo.get(key)
        if hit is not None:
            return hit
        if self._pair_override is not None:
            out = dict(self._pair_override(i, j))
            self._bracket_memo[key] = out
            return out
        out: Terms = {}
        for k, zk in enumerate(self.d.zeta):
            if not zk:
                continue
            rk = _sym_pairing(self.n, k)[i - 1][j - 1]
            for word, c in rk.items():
                s = out.get(word, 0) + zk * c
                if s:
                    out[word] = norm_coeff(s)
                else:
                    out.pop(word, None)
        self._bracket_memo[key] = out
        return out

    # products ----------------------------------------------------------------
    def mul_word_letter(self, u: Word, g: int) -> Terms:
        """Normal form of the product u * g."""
        if not u or u[-1] <= g:
            return {u + (g,): 1}
        key = (u, g)
        hit = self._gen_memo.get(key)
        if hit is not None:
            return hit
        head, a = u[:-1], u[-1]
        out: Terms = {}
        # u' a g = (u' g) a + u' [a, g]
        for w, c in self.mul_word_letter(head, g).items():
            for w2, c2 in self.mul_word_letter(w, a).items():
                _acc(out, w2, c * c2)
        br = self.bracket_letters(a, g)
        for bw, bc in br.items():
            for w2, c2 in self.mul_word_word(head, bw).items():
                _acc(out, w2, bc * c2)
        self._gen_memo[key] = out
        return out

    def mul_word_word(self, u: Word, v: Word) -> Terms:
        cur: Terms = {u: 1}
        for g in v:
            nxt: Terms = {}
            for w, c in cur.items():
                for w2, c2 in self.mul_word_letter(w, g).items():
                    _acc(nxt, w2, c * c2)
            cur = nxt
        return cur

    def mul_terms(self, a: Terms, b: Terms) -> Terms:
        out: Terms = {}
        for u, cu in a.items():
            for v, cv in b.items():
                for w, c in self.mul_word_word(u, v).items():
                    _acc(out, w, cu * cv * c)
        return out

    # element construction -----------------------------------------------------
    def element(self, terms: Optional[Terms] = None) -> "PBWElement":
        return PBWElement(self, dict(terms or {}))

    def one(self) -> "PBWElement":
        return PBWElement(self, {(): 1})

    def gen(self, name: str) -> "PBWElement":
        return PBWElement(self, {(self.by_name[name],): 1})

    def x(self, i: int) -> "PBWElement":
        return PBWElement(self, {(self.X(i),): 1})

    def y(self, i: int) -> "PBWElement":
        return PBWElement(self, {(self.Y(i),): 1})

    def e(self, i: int, j: int) -> "PBWElement":
        return PBWElement(self, {(self.E(i, j),): 1})

    def generators(self) -> List["PBWElement"]:
        return [PBWElement(self, {(k,): 1}) for k in range(len(self.letters))]

    def normal_order(self, word: Sequence) -> "PBWElement":
        """Normal form of a product of generators (names or letters)."""
        letters = tuple(self.by_name[w] if isinstance(w, str) else w for w in word)
        return PBWElement(self, self.mul_word_word((), letters))

    def symmetrize(self, p: MultiPoly) -> "PBWElement":
        """Symmetrization of a commutative polynomial in the generator variables."""
        return PBWElement(self, self._symmetrize_terms(MultiPoly.coerce(p)))

    def _symmetrize_terms(self, p: MultiPoly) -> Terms:
        out: Terms = {}
        for mono, c in p.items():
            gens: List[int] = []
            params = []
            for v, e in mono:
                if _GEN_RE.match(v):
                    if e < 0:
                        raise ValueError("negative generator exponent")
                    gens += [self.by_name[v]] * e
                else:
                    params.append((v, e))
            coeff = c if not params else MultiPoly({tuple(params): c})
            for w, cw in self.sym_word(tuple(sorted(gens))).items():
                _acc(out, w, coeff * cw)
        return out

    def sym_word(self, letters: Word) -> Terms:
        """Average of all orderings of the given multiset of letters."""
        key = ("sym", letters)
        hit = self._bracket_memo.get(key)
        if hit is not None:
            return hit
        perms = sorted(set(itertools.permutations(letters)))
        out: Terms = {}
        for p in perms:
            for w, c in self.mul_word_word((), p).items():
                _acc(out, w, c)
        k = len(perms)
        out = {w: norm_coeff(c / k if isinstance(c, MultiPoly) else Fraction(c, 1) / k) for w, c in out.items()}
        self._bracket_memo[key] = out
        return out

    def sigma_terms(self, terms: Terms) -> Terms:
        out: Terms = {}
        for w, c in terms.items():
            rev = tuple(self.sigma_letter(a) for a in reversed(w))
            for w2, c2 in self.mul_word_word((), rev).items():
                _acc(out, w2, c * c2)
        return out

    def diamond_residual(self, a: int, b: int, c: int) -> "PBWElement":
        """(ab)c - a(bc) for generators, reduced along different rewriting paths."""
        left = self.mul_terms(self.mul_word_word((), (a, b)), {(c,): 1})
        right = self.mul_terms({(a,): 1}, self.mul_word_word((), (b, c)))
        return PBWElement(self, left) - PBWElement(self, right)

    def word_str(self, w: Word) -> str:
        if not w:
            return "1"
        parts = []
        for a, grp in itertools.groupby(w):
            k = len(list(grp))
            parts.append(self.names[a] + (f"^{k}" if k > 1 else ""))
        return "*".join(parts)


def _acc(d: Terms, w: Word, c):
    if not c:
        return
    s = d.get(w)
    s = c if s is None else s + c
    if s:
        d[w] = norm_coeff(s)
    else:
        del d[w]


@lru_cache(maxsize=None)
def _base_algebra(n: int) -> PBWAlgebra:
    return PBWAlgebra(DeformationGl(n, ()))


@lru_cache(maxsize=None)
def _sym_pairing(n: int, k: int):
    """Symmetrized r_k pairing matrix, as zeta-free PBW terms."""
    alg = _base_algebra(n)
    coeffs = pairing_coefficients(n, k)
    return tuple(tuple(alg._symmetrize_terms(coeffs[i][j]) for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def algebra(d: DeformationGl) -> PBWAlgebra:
    """Shared engine per deformation (the product memo lives here)."""
    return PBWAlgebra(d)


class PBWElement:
    """A normal-ordered element of H_zeta(gl_n)."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: PBWAlgebra, terms: Terms):
        self.alg = alg
        self.terms = {w: norm_coeff(c) for w, c in terms.items() if c}

    def _coerce(self, other) -> "PBWElement":
        if isinstance(other, PBWElement):
            if other.alg is not self.alg and other.alg.d != self.alg.d:
                raise ValueError("elements of different algebras")
            return other
        c = norm_coeff(other if not isinstance(other, MultiPoly) else other)
        return PBWElement(self.alg, {(): c} if c else {})

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _acc(out, w, c)
        return PBWElement(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return PBWElement(self.alg, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, PBWElement):
            self._coerce(other)
            return PBWElement(self.alg, self.alg.mul_terms(self.terms, other.terms))
        if not other:
            return PBWElement(self.alg, {})
        return PBWElement(self.alg, {w: c * other for w, c in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, PBWElement):
            return other.__mul__(self)
        return self.__mul__(other)

    def __eq__(self, other):
        if isinstance(other, (PBWElement, int, Fraction, MultiPoly)):
            return not (self - other).terms
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def commutator(self, other: "PBWElement") -> "PBWElement":
        return self * other - other * self

    def sigma(self) -> "PBWElement":
        return PBWElement(self.alg, self.alg.sigma_terms(self.terms))

    def weight_components(self) -> Dict[Tuple[int, ...], "PBWElement"]:
        out: Dict[Tuple[int, ...], Terms] = {}
        for w, c in self.terms.items():
            out.setdefault(self.alg.word_weight(w), {})[w] = c
        return {k: PBWElement(self.alg, v) for k, v in out.items()}

    def degree(self) -> int:
        """Filtration degree (x and y have degree 1, gl_n degree 0)."""
        if not self.terms:
            return -1
        return max(sum(1 for a in w if self.alg.kind(a) != "e") for w in self.terms)

    def top_layer(self) -> "PBWElement":
        d = self.degree()
        return PBWElement(
            self.alg, {w: c for w, c in self.terms.items() if sum(1 for a in w if self.alg.kind(a) != "e") == d}
        )

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_items():
            ws = self.alg.word_str(w)
            cs = _coeff_str(c)
            if ws == "1":
                parts.append(cs)
            elif cs == "1":
                parts.append(ws)
            elif cs == "-1":
                parts.append("-" + ws)
            else:
                parts.append(f"{cs}*{ws}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"PBWElement({self})"

    def to_json(self):
        from .serialize import coeff_json

        return [[[self.alg.names[a] for a in w], coeff_json(c)] for w, c in self.sorted_items()]

    def latex(self) -> str:
        from .serialize import coeff_latex, word_latex

        if not self.terms:
            return "0"
        out = []
        for w, c in self.sorted_items():
            ws = word_latex(self.alg, w)
            cl = coeff_latex(c)
            if ws == "1":
                out.append(cl)
            elif cl == "1":
                out.append(ws)
            elif cl == "-1":
                out.append("-" + ws)
            else:
                out.append(cl + " " + ws)
        return " + ".join(out).replace("+ -", "- ")


def _coeff_str(c) -> str:
    if isinstance(c, MultiPoly):
        s = str(c)
        return s if len(c) == 1 and not s.startswith("-") else f"({s})"
    return format_scalar(c)


def zeta_pair(i: int, j: int, d: DeformationGl) -> PBWElement:
    """zeta(y_i, x_j) as an element of U(gl_n)."""
    alg = algebra(d)
    return PBWElement(alg, alg.zeta_pair_terms(i, j))


def symmetrize(p: MultiPoly, n: int, d: Optional[DeformationGl] = None) -> PBWElement:
    return algebra(d or DeformationGl(n, ())).symmetrize(p)


def normal_order(word: Sequence, d: DeformationGl) -> PBWElement:
    return algebra(d).normal_order(word)


def commutator(a: PBWElement, b: PBWElement) -> PBWElement:
    return a.commutator(b)


def sigma_involution(a: PBWElement) -> PBWElement:
    return a.sigma()
