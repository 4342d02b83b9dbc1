import json
import subprocess
import sys

import pytest

from cherednik import cli
from cherednik.cache import ENV_VAR, ResultCache, cache_key


def run(capsys, *argv):
    rc = cli.main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def run_json(capsys, *argv):
    rc, out, _ = run(capsys, *argv)
    return rc, json.loads(out)


def test_shapovalov_gl1(capsys):
    rc, data = run_json(capsys, "shapovalov", "--n", "1", "--zeta", "1", "--nu", "3")
    assert rc == 0
    assert (data["tau"], data["det"], data["predicted"], data["ratio"]) == (1, "6", "6", "1")


def test_classify_undeformed_and_generic(capsys):
    # zeta = 0 is the undeformed algebra: L(5,3) is the 3-dimensional gl_2 irreducible
    rc, data = run_json(capsys, "classify", "--n", "2", "--zeta", "0", "--lambda", "5,3")
    assert rc == 0 and data["finite"] and data["dimension"] == 3
    # a generic nonzero zeta_0 gives no finite-dimensional quotient
    rc, data = run_json(capsys, "classify", "--n", "2", "--zeta", "zeta0", "--lambda", "5,3")
    assert rc == 0 and data["finite"] is False


def test_verify_bridge(capsys):
    rc, data = run_json(capsys, "verify", "--suite", "bridge", "--n", "2", "--kmax", "2")
    assert rc == 0 and data["ok"]


def test_pair_and_normal_order(capsys):
    rc, data = run_json(capsys, "pair", "--n", "2", "--zeta", "1,1", "--i", "1", "--j", "2")
    assert data["pair"] == [[["e[1,2]"], "1"]]
    rc, data = run_json(capsys, "normal-order", "--n", "1", "--zeta", "1", "y[1]", "x[1]")
    assert data["normal_form"] == [[[], "1"], [["x[1]", "y[1]"], "1"]]


def test_character_example(capsys):
    rc, data = run_json(capsys, "character", "--n", "2", "--lambda", "2,0", "--nu", "0,3")
    assert data["dims"] == [3, 4, 5, 6] and data["dimension"] == 18


def test_design_round_trip(capsys):
    rc, data = run_json(capsys, "design", "--n", "2", "--lambda", "5,3", "--nu", "1,2")
    assert rc == 0 and data["round_trip"] and data["classified_nu"] == [1, 2]


def test_casimir_and_p_poly(capsys):
    rc, data = run_json(capsys, "casimir", "--n", "2", "--zeta", "zeta0,zeta1", "--construction", "both")
    assert rc == 0 and data["constructions_agree"]
    rc, data = run_json(capsys, "p-poly", "--n", "2", "--zeta", "zeta0,zeta1", "--check")
    assert rc == 0 and data["hc_agrees"]


@pytest.mark.parametrize("alg,zeta", [("gl", "zeta0,zeta1"), ("sp", "zeta0,zeta2")])
def test_poisson_center(capsys, alg, zeta):
    rc, data = run_json(capsys, "poisson-center", "--algebra", alg, "--n", "2", "--zeta", zeta)
    assert rc == 0 and data["certificate"]["ok"]


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["verify", "--suite", "nope"],
        ["shapovalov", "--n", "2", "--nu", "1"],
        ["classify", "--n", "2", "--lambda", "a,b"],
        ["poisson-center", "--algebra", "sp", "--n", "0"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    rc, out, err = run(capsys, *argv)
    assert rc == 1 and out == "" and "error" in err


def test_failed_identity_exits_2(capsys, monkeypatch):
    def broken(cfg):
        return cli.Result({"residual": "1"}, ok=False)

    monkeypatch.setitem(cli.COMMANDS, "pair", broken)
    rc, data = run_json(capsys, "pair")
    assert rc == 2 and data == {"residual": "1"}


def test_sp_zeta_lists_even_coefficients(capsys):
    # on sp the list is (zeta_0, zeta_2, ...): a second entry gives degree-4 terms in c_1
    _, data = run_json(capsys, "poisson-center", "--algebra", "sp", "--n", "1", "--zeta", "0,1")
    degrees = {sum(e for _, e in mono) for _, mono in data["c"][0]}
    assert degrees == {4}


def test_output_formats(capsys):
    rc, out, _ = run(capsys, "shapovalov", "--n", "1", "--zeta", "1", "--nu", "3", "--output", "latex")
    assert out.strip() == r"\det S_{\nu} = 6"
    rc, out, _ = run(capsys, "normal-order", "--n", "1", "--zeta", "1", "y[1]", "x[1]", "--output", "latex")
    assert out.strip() == "1 + x_{1} y_{1}"
    rc, out, _ = run(capsys, "classify", "--n", "1", "--zeta", "1", "--lambda", "0", "--output", "text")
    assert rc == 0 and out.strip()


ARGV = ["p-poly", "--n", "2", "--zeta", "zeta0,1/2", "--check"]


def test_determinism(capsys):
    first = run(capsys, *ARGV)[1]
    second = run(capsys, *ARGV)[1]
    assert first == second


def test_cache_transparency(capsys, tmp_path):
    fresh = run(capsys, *ARGV)[1]
    cold = run(capsys, *ARGV, "--cache-dir", str(tmp_path))[1]
    files = list(tmp_path.glob("*.json"))
    assert len(files) == 1
    warm = run(capsys, *ARGV, "--cache-dir", str(tmp_path))[1]
    assert fresh == cold == warm


def test_cache_env_var(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(ENV_VAR, str(tmp_path))
    run(capsys, *ARGV)
    assert len(list(tmp_path.glob("*.json"))) == 1


def test_cache_hit_is_used(capsys, tmp_path):
    # a planted entry under the right key is returned verbatim
    argv = ["pair", "--n", "1", "--zeta", "1"]
    cfg = cli.config_from_args(cli.build_parser().parse_args(argv), argv)
    key_cfg = cli._jsonable_params(cfg)
    ResultCache(tmp_path).put("pair", key_cfg, {"data": {"planted": True}, "ok": True})
    rc, data = run_json(capsys, *argv, "--cache-dir", str(tmp_path))
    assert data == {"planted": True}


def test_cache_version_mismatch(tmp_path):
    cache = ResultCache(tmp_path)
    cache.put("op", {"a": 1}, 5)
    path = tmp_path / f"{cache_key('op', {'a': 1})}.json"
    blob = json.loads(path.read_text())
    blob["version"] = "0.0.0-old"
    path.write_text(json.dumps(blob))
    assert cache.get("op", {"a": 1}) is None
    assert cache.fetch("op", {"a": 1}, lambda: 7) == 7
    assert cache.get("op", {"a": 1}).value == 7


def test_cache_disabled(monkeypatch):
    monkeypatch.delenv(ENV_VAR, raising=False)
    cache = ResultCache()
    assert not cache.enabled and cache.put("op", {}, 1) is None and cache.get("op", {}) is None


def test_console_module():
    out = subprocess.run(
        [sys.executable, "-m", "cherednik", "shapovalov", "--n", "1", "--zeta", "2", "--nu", "2"],
        capture_output=True,
        text=True,
        check=True,
    ).stdout
    # m! zeta_0^m = 2 * 4
    assert json.loads(out)["det"] == "8"
