"""Command-line driver: ``cherednik <subcommand> [options]``.

Exit codes: 0 success, 1 usage error, 2 a checked identity failed (the
residuals are still written to stdout).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from .cache import ResultCache
from .serialize import dumps, to_jsonable


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    algebra: str = "gl"
    n: int = 1
    zeta: List[str] = field(default_factory=list)
    params: Dict[str, Any] = field(default_factory=dict)
    output: str = "json"
    cache_dir: Optional[str] = None

    def cache_payload(self) -> Dict[str, Any]:
        """Canonical config for the cache key (output format and cache dir excluded)."""
        d = asdict(self)
        d.pop("output")
        d.pop("cache_dir")
        return d


@dataclass
class Result:
    data: Dict[str, Any]
    ok: bool = True
    latex: Optional[str] = None
    text: Optional[str] = None


# parsing helpers ---------------------------------------------------------------


def _split(s: Optional[str]) -> List[str]:
    if s is None or s.strip() == "":
        return []
    return [p.strip() for p in s.split(",")]


def _rationals(s: Optional[str], name: str) -> List[Fraction]:
    try:
        return [Fraction(p) for p in _split(s)]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--{name} expects comma-separated rationals, got {s!r}")


def _ints(s: Optional[str], name: str) -> List[int]:
    try:
        return [int(p) for p in _split(s)]
    except ValueError:
        raise UsageError(f"--{name} expects comma-separated integers, got {s!r}")


def _gl(cfg: RunConfig):
    from .pbw import DeformationGl, parse_zeta

    if cfg.n < 1:
        raise UsageError("--n must be positive")
    try:
        return DeformationGl(cfg.n, parse_zeta(cfg.zeta))
    except ValueError as exc:
        raise UsageError(str(exc))


def _check_len(vals: Sequence, n: int, name: str):
    if len(vals) != n:
        raise UsageError(f"--{name} needs {n} entries, got {len(vals)}")


# commands ------------------------------------------------------------------------


def cmd_pair(cfg: RunConfig) -> Result:
    from .pbw import zeta_pair

    d = _gl(cfg)
    i, j = cfg.params["i"], cfg.params["j"]
    if not (1 <= i <= cfg.n and 1 <= j <= cfg.n):
        raise UsageError("--i and --j must lie in 1..n")
    p = zeta_pair(i, j, d)
    return Result({"n": cfg.n, "zeta": cfg.zeta, "i": i, "j": j, "pair": p.to_json()}, latex=p.latex(), text=str(p))


def cmd_normal_order(cfg: RunConfig) -> Result:
    from .pbw import algebra

    d = _gl(cfg)
    alg = algebra(d)
    word = cfg.params["word"]
    unknown = [w for w in word if w not in alg.by_name]
    if unknown:
        raise UsageError(f"unknown generators {unknown}; use names like x[1], y[2], e[1,2]")
    p = alg.normal_order(word)
    return Result({"n": cfg.n, "zeta": cfg.zeta, "word": word, "normal_form": p.to_json()}, latex=p.latex(), text=str(p))


def cmd_shapovalov(cfg: RunConfig) -> Result:
    from .verma import compare_shapovalov, in_qplus

    d = _gl(cfg)
    nu = cfg.params["nu"]
    _check_len(nu, cfg.n, "nu")
    if not in_qplus(nu):
        raise UsageError("--nu must lie in the positive cone (all partial sums nonnegative)")
    lam = cfg.params.get("lam")
    c = compare_shapovalov(nu, d)
    data = c.to_json()
    det, pred = c.det_computed, c.det_predicted
    if lam:
        from .symmetric import lam_name

        _check_len(lam, cfg.n, "lambda")
        subs = {lam_name(i + 1): v for i, v in enumerate(lam)}
        det, pred = det.subs(subs), pred.subs(subs)
        data["det_computed"], data["det_predicted"] = to_jsonable(det), to_jsonable(pred)
    data.update({"n": cfg.n, "zeta": cfg.zeta, "lambda": [str(v) for v in lam] if lam else "symbolic"})
    data["det"], data["predicted"] = _plain(det), _plain(pred)
    data["ratio"] = None if c.ratio is None else str(c.ratio)
    return Result(data, ok=c.ok, latex=f"\\det S_{{\\nu}} = {det.latex()}", text=f"det = {det}\npredicted = {pred}\nratio = {c.ratio}")


def _plain(p):
    return str(p)


def cmd_casimir(cfg: RunConfig) -> Result:
    from .casimir import _terms_as_poly, casimir_element, centrality_certificate

    d = _gl(cfg)
    which = cfg.params["construction"]
    names = ["residue", "trace_sum"] if which == "both" else [which]
    data: Dict[str, Any] = {"n": cfg.n, "zeta": cfg.zeta}
    ok = True
    elems = {}
    for name in names:
        C = casimir_element(d, name)
        cert = centrality_certificate(d, name)
        elems[name] = C
        data[name] = {"element": C.to_json(), "centrality": cert.to_json()}
        ok = ok and cert.ok
    if len(elems) == 2:
        same = not (elems["residue"] - elems["trace_sum"]).terms
        data["constructions_agree"] = same
        ok = ok and same
    first = elems[names[0]]
    return Result(data, ok=ok, latex=first.latex(), text=str(first))


def cmd_p_poly(cfg: RunConfig) -> Result:
    from .casimir import build_pipeline, compute_P, hc_casimir

    d = _gl(cfg)
    pipe = build_pipeline(d)
    P = compute_P(d)
    data = {
        "n": cfg.n,
        "zeta": cfg.zeta,
        "f": pipe.f.to_json(),
        "g": pipe.g.to_json(),
        "w": pipe.w.to_json(),
        "P": P.to_json(),
    }
    ok = True
    if cfg.params.get("check"):
        diff = hc_casimir(d) - P
        data["hc_agrees"] = diff == 0
        ok = diff == 0
    return Result(data, ok=ok, latex=P.latex(), text=str(P))


def cmd_classify(cfg: RunConfig) -> Result:
    from .findim import classify

    d = _gl(cfg)
    lam = cfg.params["lam"]
    _check_len(lam, cfg.n, "lambda")
    r = classify(lam, d)
    text = f"finite: {r.finite}" + (f"\nnu: {r.nu}\ndimension: {r.dimension}" if r.finite else f"\nreason: {r.reason}")
    latex = r.character.latex() if r.character else None
    return Result(dict(r.to_json(), n=cfg.n, zeta=cfg.zeta), latex=latex, text=text)


def cmd_character(cfg: RunConfig) -> Result:
    from .findim import character, is_dominant

    lam, nu = cfg.params["lam"], cfg.params["nu"]
    _check_len(lam, cfg.n, "lambda")
    _check_len(nu, cfg.n, "nu")
    if not is_dominant(lam) or any(v < 0 for v in nu):
        raise UsageError("character needs a dominant lambda and nonnegative nu")
    ch = character(lam, nu)
    return Result(dict(ch.to_json(), n=cfg.n), latex=ch.latex(), text=f"dimension: {ch.dimension}")


def cmd_design(cfg: RunConfig) -> Result:
    from .findim import classify, design_deformation

    lam, nu = cfg.params["lam"], cfg.params["nu"]
    _check_len(lam, cfg.n, "lambda")
    _check_len(nu, cfg.n, "nu")
    try:
        D = design_deformation(lam, nu)
    except ValueError as exc:
        raise UsageError(str(exc))
    r = classify(lam, D.deformation)
    data = dict(D.to_json(), n=cfg.n, classified_nu=r.nu)
    ok = r.finite and list(r.nu) == list(nu)
    data["round_trip"] = ok
    return Result(data, ok=ok, latex=D.P().latex(), text=f"zeta: {[str(c) for c in D.zeta]}\nround trip: {ok}")


def cmd_poisson_center(cfg: RunConfig) -> Result:
    if cfg.algebra == "gl":
        from .poisson_gl import poisson_c_series, verify_center_gl

        d = _gl(cfg)
        cert = verify_center_gl(d)
        cs = poisson_c_series(d)
    else:
        from .pbw import parse_zeta
        from .poisson_sp import DeformationSp, poisson_c_series_sp, verify_center_sp

        try:
            d = DeformationSp(cfg.n, parse_zeta(cfg.zeta))
        except ValueError as exc:
            raise UsageError(str(exc))
        cert = verify_center_sp(d)
        cs = poisson_c_series_sp(d)
    data = {"algebra": cfg.algebra, "n": cfg.n, "zeta": cfg.zeta, "c": [c.to_json() for c in cs], "certificate": cert.to_json()}
    text = "\n".join(f"c_{k + 1} = {c}" for k, c in enumerate(cs)) + f"\ncentral: {cert.ok}"
    latex = ", ".join(f"c_{{{k + 1}}} = {c.latex()}" for k, c in enumerate(cs))
    return Result(data, ok=cert.ok, latex=latex, text=text)


def cmd_verify(cfg: RunConfig) -> Result:
    from .suites import ALIASES, SUITES, run_suite

    name = cfg.params["suite"]
    if name not in SUITES and name not in ALIASES:
        raise UsageError(f"unknown suite {name!r}; choose from {sorted(SUITES) + sorted(ALIASES)}")
    rep = run_suite(name, cfg.params.get("n"), cfg.params.get("kmax"))
    lines = [f"{'PASS' if it.ok else 'FAIL'}  {it.label}  ({it.seconds:.2f}s)" for it in rep.items]
    return Result(rep.to_json(), ok=rep.ok, text="\n".join(lines))


COMMANDS = {
    "pair": cmd_pair,
    "normal-order": cmd_normal_order,
    "shapovalov": cmd_shapovalov,
    "casimir": cmd_casimir,
    "p-poly": cmd_p_poly,
    "classify": cmd_classify,
    "character": cmd_character,
    "design": cmd_design,
    "poisson-center": cmd_poisson_center,
    "verify": cmd_verify,
}


# argument parsing ------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--output", choices=["json", "latex", "text"], default="json")
    common.add_argument("--cache-dir", default=None, help="result cache (default: $CHEREDNIK_CACHE_DIR)")
    common.add_argument("--n", type=int, default=1, help="rank")
    common.add_argument(
        "--zeta", default="", help="comma-separated coefficients (zeta_0,zeta_2,... for sp); names give symbols"
    )

    p = _Parser(prog="cherednik", description="Exact computations for infinitesimal Cherednik algebras.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sp = sub.add_parser("pair", parents=[common], help="the pairing zeta(y_i, x_j)")
    sp.add_argument("--i", type=int, default=1)
    sp.add_argument("--j", type=int, default=1)
    sp = sub.add_parser("normal-order", parents=[common], help="normal form of a product of generators")
    sp.add_argument("word", nargs="+", help="generator names, e.g. y[1] x[1]")
    sp = sub.add_parser("shapovalov", parents=[common], help="Shapovalov determinant against the product formula")
    sp.add_argument("--nu", required=True)
    sp.add_argument("--lambda", dest="lam", default=None)
    sp = sub.add_parser("casimir", parents=[common], help="the quadratic Casimir and its centrality")
    sp.add_argument("--construction", choices=["residue", "trace_sum", "both"], default="residue")
    sp = sub.add_parser("p-poly", parents=[common], help="action polynomial P and the f/g/w pipeline")
    sp.add_argument("--check", action="store_true", help="compare with the Harish-Chandra projection")
    sp = sub.add_parser("classify", parents=[common], help="is L(lambda) finite dimensional")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp = sub.add_parser("character", parents=[common], help="character of the box with corner nu")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--nu", required=True)
    sp = sub.add_parser("design", parents=[common], help="deformation with prescribed box nu at lambda")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--nu", required=True)
    sp = sub.add_parser("poisson-center", parents=[common], help="verify the Poisson center")
    sp.add_argument("--algebra", choices=["gl", "sp"], default="gl")
    sp = sub.add_parser("verify", parents=[common], help="run a named verification suite")
    sp.add_argument("--suite", required=True)
    sp.add_argument("--kmax", type=int, default=None)
    return p


def config_from_args(ns: argparse.Namespace, argv: Sequence[str]) -> RunConfig:
    cfg = RunConfig(ns.command, getattr(ns, "algebra", "gl"), ns.n, _split(ns.zeta), {}, ns.output, ns.cache_dir)
    c = ns.command
    if c == "pair":
        cfg.params = {"i": ns.i, "j": ns.j}
    elif c == "normal-order":
        cfg.params = {"word": [w for part in ns.word for w in part.replace("*", " ").split()]}
    elif c == "shapovalov":
        cfg.params = {"nu": _ints(ns.nu, "nu"), "lam": _rationals(ns.lam, "lambda") if ns.lam else None}
    elif c == "casimir":
        cfg.params = {"construction": ns.construction}
    elif c == "p-poly":
        cfg.params = {"check": ns.check}
    elif c == "classify":
        cfg.params = {"lam": _rationals(ns.lam, "lambda")}
    elif c in ("character", "design"):
        cfg.params = {"lam": _rationals(ns.lam, "lambda"), "nu": _ints(ns.nu, "nu")}
    elif c == "verify":
        explicit_n = any(a == "--n" or a.startswith("--n=") for a in argv)
        cfg.params = {"suite": ns.suite, "n": ns.n if explicit_n else None, "kmax": ns.kmax}
    return cfg


def _jsonable_params(cfg: RunConfig) -> Dict[str, Any]:
    return json.loads(dumps(cfg.cache_payload()))


def execute(cfg: RunConfig) -> Result:
    """Run a config, going through the cache when one is configured."""
    fn = COMMANDS[cfg.command]
    cache = ResultCache(cfg.cache_dir)
    if cache.enabled and cfg.output == "json":
        key_cfg = _jsonable_params(cfg)
        hit = cache.get(cfg.command, key_cfg)
        if hit is not None:
            return Result(hit.value["data"], hit.value["ok"])
        res = fn(cfg)
        data = json.loads(dumps(res.data))
        cache.put(cfg.command, key_cfg, {"data": data, "ok": res.ok})
        return Result(data, res.ok, res.latex, res.text)
    return fn(cfg)


def render(res: Result, output: str) -> str:
    if output == "latex":
        return res.latex if res.latex is not None else dumps(res.data)
    if output == "text":
        return res.text if res.text is not None else dumps(res.data)
    return dumps(res.data)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        if ns.command is None:
            raise UsageError("missing subcommand")
        cfg = config_from_args(ns, argv)
        res = execute(cfg)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"cherednik: error: {exc}", file=sys.stderr)
        return 1
    print(render(res, cfg.output))
    return 0 if res.ok else 2


if __name__ == "__main__":
    sys.exit(main())
