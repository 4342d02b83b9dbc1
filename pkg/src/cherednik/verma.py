"""Weights, Kostant partitions, Verma modules and Shapovalov forms."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import bareiss_det, constant_ratio, rational_nullspace
from .pbw import DeformationGl, PBWAlgebra, PBWElement, Word, algebra, norm_coeff
from .poly import MultiPoly
from .symmetric import lam_name, lam_vars


def rho(n: int) -> Tuple[Fraction, ...]:
    return tuple(Fraction(n - 1 - 2 * i, 2) for i in range(n))


@dataclass(frozen=True)
class QPlusElement:
    """An element of the positive cone Q+ (nonnegative partial sums)."""

    nu: Tuple[int, ...]

    def __post_init__(self):
        nu = tuple(int(v) for v in self.nu)
        object.__setattr__(self, "nu", nu)
        s = 0
        for v in nu:
            s += v
            if s < 0:
                raise ValueError(f"{nu} is not a nonnegative combination of positive roots")

    @property
    def n(self) -> int:
        return len(self.nu)

    def __sub__(self, other: Sequence[int]) -> Optional["QPlusElement"]:
        diff = tuple(a - b for a, b in zip(self.nu, other))
        return QPlusElement(diff) if in_qplus(diff) else None


def in_qplus(nu: Sequence[int]) -> bool:
    s = 0
    for v in nu:
        s += v
        if s < 0:
            return False
    return True


def positive_roots(n: int) -> List[Tuple[str, Tuple[int, ...]]]:
    """(label, coordinates): V-weights eps_k, then gl-roots eps_i - eps_j (i<j)."""
    roots = []
    for k in range(1, n + 1):
        v = [0] * n
        v[k - 1] = 1
        roots.append((f"eps{k}", tuple(v)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            v = [0] * n
            v[i - 1], v[j - 1] = 1, -1
            roots.append((f"alpha{i}{j}", tuple(v)))
    return roots


def root_vector_name(label: str) -> str:
    """Name of the lowering generator f_alpha."""
    if label.startswith("eps"):
        return f"x[{label[3:]}]"
    i, j = label[5], label[6]
    return f"e[{j},{i}]"


def height(nu: Sequence[int]) -> int:
    s, h = 0, 0
    for v in nu:
        s += v
        h += s
    return h


@dataclass(frozen=True)
class KostantPartition:
    n: int
    multiplicities: Tuple[int, ...]

    @property
    def roots(self):
        return positive_roots(self.n)

    def weight(self) -> Tuple[int, ...]:
        tot = [0] * self.n
        for (_, r), m in zip(self.roots, self.multiplicities):
            for k in range(self.n):
                tot[k] += m * r[k]
        return tuple(tot)

    def as_dict(self) -> Dict[str, int]:
        return {lab: m for (lab, _), m in zip(self.roots, self.multiplicities) if m}

    def word(self, alg: PBWAlgebra) -> Word:
        """The PBW monomial f^m (sorted, so lowering generators in engine order)."""
        letters = []
        for (lab, _), m in zip(self.roots, self.multiplicities):
            letters += [alg.by_name[root_vector_name(lab)]] * m
        return tuple(sorted(letters))

    def word_names(self) -> List[str]:
        alg = algebra(DeformationGl(self.n, ()))
        return [alg.names[a] for a in self.word(alg)]


@lru_cache(maxsize=None)
def _partitions(n: int, nu: Tuple[int, ...]) -> Tuple[Tuple[int, ...], ...]:
    roots = [r for _, r in positive_roots(n)]
    hts = [height(r) for r in roots]
    out = []

    def rec(k, rem, acc):
        if k == len(roots):
            if not any(rem):
                out.append(tuple(acc))
            return
        r, h = roots[k], hts[k]
        m = 0
        cur = rem
        while in_qplus(cur):
            rec(k + 1, cur, acc + [m])
            m += 1
            cur = tuple(a - b for a, b in zip(cur, r))
            if h * m > height(rem):
                break

    if in_qplus(nu):
        rec(0, tuple(nu), [])
    return tuple(out)


def kostant_partitions(nu, n: Optional[int] = None) -> List[KostantPartition]:
    """All partitions of nu into positive roots, in canonical (PBW word) order."""
    nu = nu.nu if isinstance(nu, QPlusElement) else tuple(nu)
    n = n or len(nu)
    parts = [KostantPartition(n, m) for m in _partitions(n, nu)]
    alg = algebra(DeformationGl(n, ()))
    parts.sort(key=lambda p: p.word(alg))
    return parts


def kostant_count(nu: Sequence[int]) -> int:
    """tau(nu); zero outside Q+."""
    nu = tuple(nu)
    return len(_partitions(len(nu), nu)) if in_qplus(nu) else 0


# Harish-Chandra projection and Verma action ------------------------------


def hc_project(a: PBWElement, lam: Optional[Sequence] = None) -> MultiPoly:
    """Projection onto U(h), evaluated at lam (default: symbolic lam[i])."""
    alg = a.alg
    vals = lam_vars(alg.n) if lam is None else [MultiPoly.coerce(v) for v in lam]
    out = MultiPoly.zero()
    for w, c in a.terms.items():
        if all(alg.is_diagonal(l) for l in w):
            term = MultiPoly.coerce(c)
            for l in w:
                _, i, _ = alg.letters[l]
                term = term * vals[i - 1]
            out = out + term
    return out


class VermaModule:
    """M(lam) with symbolic highest weight; vectors are dicts f-word -> coefficient."""

    def __init__(self, d: DeformationGl):
        self.d = d
        self.alg = algebra(d)
        self._act: Dict[Tuple[int, Word], Dict[Word, MultiPoly]] = {}
        self._lam = lam_vars(d.n)

    def act_letter(self, letter: int, fword: Word) -> Dict[Word, MultiPoly]:
        key = (letter, fword)
        hit = self._act.get(key)
        if hit is not None:
            return hit
        alg = self.alg
        out: Dict[Word, MultiPoly] = {}
        for w, c in alg.mul_word_word((letter,), fword).items():
            k = 0
            while k < len(w) and alg.is_lowering(w[k]):
                k += 1
            rest = w[k:]
            if any(not alg.is_diagonal(l) for l in rest):
                continue
            coef = MultiPoly.coerce(c)
            for l in rest:
                _, i, _ = alg.letters[l]
                coef = coef * self._lam[i - 1]
            f = w[:k]
            s = out.get(f, MultiPoly.zero()) + coef
            if s:
                out[f] = s
            else:
                out.pop(f, None)
        self._act[key] = out
        return out

    def act(self, letter: int, vec: Dict[Word, MultiPoly]) -> Dict[Word, MultiPoly]:
        out: Dict[Word, MultiPoly] = {}
        for f, c in vec.items():
            for f2, c2 in self.act_letter(letter, f).items():
                s = out.get(f2, MultiPoly.zero()) + c * c2
                if s:
                    out[f2] = s
                else:
                    out.pop(f2, None)
        return out

    def act_element(self, a: PBWElement, vec: Dict[Word, MultiPoly]) -> Dict[Word, MultiPoly]:
        out: Dict[Word, MultiPoly] = {}
        for w, c in a.terms.items():
            cur = vec
            for l in reversed(w):
                cur = self.act(l, cur)
                if not cur:
                    break
            for f, cf in cur.items():
                s = out.get(f, MultiPoly.zero()) + cf * c
                if s:
                    out[f] = s
                else:
                    out.pop(f, None)
        return out


@lru_cache(maxsize=None)
def verma(d: DeformationGl) -> VermaModule:
    return VermaModule(d)


@dataclass
class GramMatrix:
    nu: Tuple[int, ...]
    basis: List[KostantPartition]
    entries: List[List[MultiPoly]]

    @property
    def size(self) -> int:
        return len(self.basis)

    def det(self) -> MultiPoly:
        return bareiss_det(self.entries)

    def is_symmetric(self) -> bool:
        n = self.size
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(n))

    def evaluate(self, subs: Dict[str, object]) -> List[List[MultiPoly]]:
        return [[e.subs(subs) for e in row] for row in self.entries]


def gram_matrix(nu, d: DeformationGl, method: str = "module") -> GramMatrix:
    """S(f^m, f^m') = HC(sigma(f^m) f^m') on the Kostant basis of weight -nu."""
    nu = nu.nu if isinstance(nu, QPlusElement) else tuple(nu)
    basis = kostant_partitions(nu, d.n)
    alg = algebra(d)
    words = [p.word(alg) for p in basis]
    if method == "hc":
        entries = [
            [hc_project(PBWElement(alg, alg.mul_terms(alg.sigma_terms({u: 1}), {v: 1}))) for v in words]
            for u in words
        ]
        return GramMatrix(nu, basis, entries)
    if method != "module":
        raise ValueError("method must be 'module' or 'hc'")
    return GramMatrix(nu, basis, _gram_by_module(verma(d), words, words))


def _gram_by_module(M: VermaModule, rows: List[Word], cols: List[Word]) -> List[List[MultiPoly]]:
    alg = M.alg
    memo: Dict[Tuple[Word, Word], Dict[Word, MultiPoly]] = {}

    def after(prefix: Word, v: Word):
        # apply sigma(g_1), ..., sigma(g_r) for prefix = (g_1..g_r) to f^v
        if not prefix:
            return {v: MultiPoly.one()}
        key = (prefix, v)
        hit = memo.get(key)
        if hit is None:
            hit = M.act(alg.sigma_letter(prefix[-1]), after(prefix[:-1], v))
            memo[key] = hit
        return hit

    return [[after(u, v).get((), MultiPoly.zero()) for v in cols] for u in rows]


def cross_gram(mu, nu, d: DeformationGl) -> List[List[MultiPoly]]:
    """S between weight spaces -mu and -nu (zero when mu != nu)."""
    alg = algebra(d)
    rows = [p.word(alg) for p in kostant_partitions(tuple(mu), d.n)]
    cols = [p.word(alg) for p in kostant_partitions(tuple(nu), d.n)]
    return _gram_by_module(verma(d), rows, cols)


# Determinant formula -----------------------------------------------------


def predicted_shapovalov_det(nu, d: DeformationGl, P: Optional[MultiPoly] = None) -> MultiPoly:
    """Product formula over V-weights and gl-roots, as a polynomial in lam."""
    from .casimir import compute_P

    nu = nu.nu if isinstance(nu, QPlusElement) else tuple(nu)
    n = d.n
    if P is None:
        P = compute_P(d)
    lam = lam_vars(n)
    r = rho(n)
    out = MultiPoly.one()
    for label, root in positive_roots(n):
        k = 1
        while True:
            rest = tuple(a - k * b for a, b in zip(nu, root))
            if not in_qplus(rest):
                break
            mult = kostant_count(rest)
            if mult:
                if label.startswith("eps"):
                    shifted = {lam_name(i + 1): lam[i] - k * root[i] for i in range(n)}
                    factor = P - P.subs(shifted)
                else:
                    i = root.index(1)
                    j = root.index(-1)
                    factor = lam[i] - lam[j] + (r[i] - r[j]) - k
                out = out * factor ** mult
            k += 1
    return out


@dataclass
class DetComparison:
    nu: Tuple[int, ...]
    tau: int
    det_computed: MultiPoly
    det_predicted: MultiPoly
    ratio: Optional[Fraction]

    @property
    def ok(self) -> bool:
        return self.ratio is not None and self.ratio != 0

    def to_json(self):
        from .serialize import to_jsonable

        return {
            "nu": list(self.nu),
            "tau": self.tau,
            "det_computed": to_jsonable(self.det_computed),
            "det_predicted": to_jsonable(self.det_predicted),
            "ratio": None if self.ratio is None else to_jsonable(self.ratio),
        }


def compare_shapovalov(nu, d: DeformationGl) -> DetComparison:
    """det S_nu against the product formula; the ratio must be a nonzero constant."""
    g = gram_matrix(nu, d)
    det = g.det()
    pred = predicted_shapovalov_det(nu, d)
    return DetComparison(tuple(g.nu), g.size, det, pred, constant_ratio(det, pred))


# Critical vectors ----------------------------------------------------------


@dataclass
class CriticalResult:
    nu: Tuple[int, ...]
    basis: List[List[str]]
    kernel_dim: int
    vectors: List[List[Fraction]]


def _numeric_subs(n: int, lam: Sequence) -> Dict[str, object]:
    return {lam_name(i + 1): Fraction(lam[i]) for i in range(n)}


def critical_vectors(nu, lam: Sequence, d: DeformationGl) -> CriticalResult:
    """Singular vectors of weight lam - nu in M(lam) for numeric lam and zeta.

    The kernel of the numeric Gram matrix is computed first; inside it, the
    vectors killed by every e_{i,i+1} and y_i are returned.
    """
    nu = nu.nu if isinstance(nu, QPlusElement) else tuple(nu)
    n = d.n
    M = verma(d)
    alg = M.alg
    basis = kostant_partitions(nu, n)
    words = [p.word(alg) for p in basis]
    names = [[alg.names[a] for a in w] for w in words]
    if not any(nu) or not words:
        return CriticalResult(nu, names, 0, [])
    subs = _numeric_subs(n, lam)
    gram = [[_num(e.subs(subs)) for e in row] for row in _gram_by_module(M, words, words)]
    kernel = rational_nullspace(gram)
    if not kernel:
        return CriticalResult(nu, names, 0, [])
    raising = [alg.E(i, i + 1) for i in range(1, n)] + [alg.Y(i) for i in range(1, n + 1)]
    # columns: images of kernel basis vectors; rows: (raising letter, target word)
    images = []
    for kv in kernel:
        vec = {w: MultiPoly.const(c) for w, c in zip(words, kv) if c}
        img = {}
        for r in raising:
            for f, c in M.act(r, vec).items():
                val = _num(c.subs(subs))
                if val:
                    img[(r, f)] = val
        images.append(img)
    keys = sorted({k for img in images for k in img})
    system = [[img.get(k, 0) for img in images] for k in keys]
    if keys:
        combos = rational_nullspace(system)
    else:
        combos = [[Fraction(int(i == j)) for i in range(len(kernel))] for j in range(len(kernel))]
    vectors = []
    for cmb in combos:
        v = [sum((cmb[t] * kernel[t][s] for t in range(len(kernel))), Fraction(0)) for s in range(len(words))]
        if any(v):
            vectors.append(v)
    return CriticalResult(nu, names, len(kernel), vectors)


def is_singular(vec: Sequence, nu, lam: Sequence, d: DeformationGl) -> bool:
    """Check that a coefficient vector on the Kostant basis is killed by n+."""
    nu = tuple(nu)
    M = verma(d)
    alg = M.alg
    words = [p.word(alg) for p in kostant_partitions(nu, d.n)]
    v = {w: MultiPoly.const(c) for w, c in zip(words, vec) if c}
    subs = _numeric_subs(d.n, lam)
    raising = [alg.E(i, i + 1) for i in range(1, d.n)] + [alg.Y(i) for i in range(1, d.n + 1)]
    for r in raising:
        for c in M.act(r, v).values():
            if _num(c.subs(subs)):
                return False
    return True


def _num(p) -> Fraction:
    p = MultiPoly.coerce(p)
    if not p.is_constant():
        raise ValueError(f"numeric value expected, got {p}")
    return Fraction(p.constant_term())
