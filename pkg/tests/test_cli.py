import json
import subprocess
import sys

import pytest

from symcomm import __version__, catalog
from symcomm.cli import main
from symcomm.io import save_element
from symcomm.linalg import Matrix
from symcomm.pairs import build_pair


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--json", *argv)
    return code, json.loads(out) if out.strip() else None, err


def test_info(capsys):
    code, env, _ = run_json(capsys, "info", "--family", "CII", "--p", "2", "--q", "2")
    assert code == 0 and env["payload"]["dim_m"] == 6
    assert env["tool_version"] == __version__ and env["command"] == "info" and env["seed"] == 1
    code, env, _ = run_json(capsys, "info", "--family", "AI", "--n", "3")
    assert env["payload"]["rk_sym"] == 2 and env["payload"]["satake"]["rank"] == 2


def test_unsupported_and_bad_args(capsys):
    code, out, err = run(capsys, "info", "--family", "FII")
    assert code == 2 and "unsupported family" in err
    code, _, err = run(capsys, "info", "--family", "AIII", "--p", "0", "--q", "2")
    assert code == 2
    code, _, err = run(capsys, "reducibility", "--family", "AIII", "--p", "2", "--q", "2")
    assert code == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["catalog", "--case", "nope"])
    assert exc.value.code == 2


@pytest.fixture
def sp12_files(tmp_path):
    z, y = catalog.sp12_elements()
    save_element(z, tmp_path / "z.json")
    save_element(y, tmp_path / "y.json")
    save_element(Matrix.zeros(12, 12), tmp_path / "zero.json")
    pair = build_pair("CII", 3, 3)
    save_element(pair.random_p(1), tmp_path / "a.json")
    save_element(pair.random_p(2), tmp_path / "b.json")
    save_element(pair.random_element(pair.k, 3), tmp_path / "k.json")
    return tmp_path


def test_analyze(capsys, sp12_files):
    d = sp12_files
    args = ["analyze", "--family", "CII", "--p", "3", "--q", "3"]
    code, env, _ = run_json(capsys, *args, "--x", str(d / "z.json"), "--y", str(d / "y.json"))
    assert code == 0
    rep = env["payload"]
    assert rep["classification"] == "rigid" and rep["irregularity"] == -3
    assert rep["reduction"]["irregularity"] == -3
    code, env, _ = run_json(capsys, *args, "--x", str(d / "zero.json"), "--y", str(d / "zero.json"))
    pair = build_pair("CII", 3, 3)
    assert env["payload"]["irregularity"] == pair.dim_p - pair.rk_sym
    assert env["payload"]["classification"] == "irregular_plus"


def test_analyze_errors(capsys, sp12_files):
    d = sp12_files
    args = ["analyze", "--family", "CII", "--p", "3", "--q", "3"]
    code, _, err = run(capsys, *args, "--x", str(d / "a.json"), "--y", str(d / "b.json"))
    assert code == 3 and "first nonzero entry" in err
    code, _, err = run(capsys, *args, "--x", str(d / "k.json"), "--y", str(d / "zero.json"))
    assert code == 2
    code, _, err = run(capsys, *args, "--x", str(d / "missing.json"), "--y", str(d / "zero.json"))
    assert code == 2


def test_table3(capsys):
    code, env, _ = run_json(capsys, "table3")
    assert code == 0
    assert len(env["payload"]) == 17 and all(c["verified"] for c in env["payload"])


def test_catalog_cases(capsys):
    code, env, _ = run_json(capsys, "catalog", "--case", "sp12")
    assert code == 0 and env["payload"][0]["verified"]
    code, out, _ = run(capsys, "catalog", "--case", "aiii", "--l", "1", "--eps", "0", "--r", "1")
    assert code == 0 and out.startswith("ok")
    code, out, _ = run(capsys, "catalog", "--case", "dichotomy", "--family", "CII", "--p", "2",
                       "--q", "1", "--samples", "5")
    assert code == 0
    code, _, _ = run(capsys, "catalog", "--case", "aiii", "--l", "0", "--eps", "0")
    assert code == 2


def test_satake(capsys):
    code, env, _ = run_json(capsys, "satake", "--family", "AIII", "--p", "1", "--q", "2", "--enumerate")
    assert code == 0 and len(env["payload"]["subdiagrams"]) == 2
    code, out, _ = run(capsys, "satake", "--family", "AIII", "--p", "1", "--q", "2", "--enumerate")
    assert "2 sub-diagrams" in out


def test_failed_certificate_exit_1(capsys, monkeypatch):
    real = catalog.cii_sp12_rigid_pair

    def broken(seed=1):
        cert = real(seed=seed)
        cert.check("deliberately wrong", 0, 1)
        return cert

    monkeypatch.setattr(catalog, "cii_sp12_rigid_pair", broken)
    code, out, _ = run(capsys, "catalog", "--case", "sp12")
    assert code == 1 and "FAIL" in out and "deliberately wrong" in out


def test_internal_error_exit_4(capsys, monkeypatch):
    from symcomm.errors import InternalError

    def boom(*a, **k):
        raise InternalError("self-check failed")

    monkeypatch.setattr(catalog, "cii_sp12_rigid_pair", boom)
    code, _, err = run(capsys, "catalog", "--case", "sp12")
    assert code == 4 and "self-check" in err


def strip(env):
    env = dict(env)
    env.pop("wall_time_ms")
    return env


@pytest.mark.parametrize("argv", [["catalog", "--case", "sp8", "--samples", "20"],
                                  ["reducibility", "--family", "AIII", "--p", "2", "--q", "3"],
                                  ["satake", "--family", "CII", "--p", "2", "--q", "3", "--enumerate"]])
def test_json_determinism(capsys, argv):
    _, a, _ = run_json(capsys, "--seed", "5", *argv)
    _, b, _ = run_json(capsys, "--seed", "5", *argv)
    assert strip(a) == strip(b)
    assert json.dumps(strip(a), sort_keys=True) == json.dumps(strip(b), sort_keys=True)


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("SYMC_SEED", "17")
    _, env, _ = run_json(capsys, "info", "--family", "AI", "--n", "2")
    assert env["seed"] == 17
    _, env, _ = run_json(capsys, "--seed", "3", "info", "--family", "AI", "--n", "2")
    assert env["seed"] == 3


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "symcomm", "--json", "info", "--family", "A0", "--n", "2"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["payload"]["dim_g"] == 6


def test_parallel_table3_matches_serial(capsys):
    _, a, _ = run_json(capsys, "table3")
    _, b, _ = run_json(capsys, "--jobs", "2", "table3")
    assert a["payload"] == b["payload"]
