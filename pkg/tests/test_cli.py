import json

import numpy as np
import pytest

from cqgkit import fileio
from cqgkit.algebras import function_algebra, group_algebra
from cqgkit.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, main
from cqgkit.constructions.double import drinfeld_double
from cqgkit.constructions.dual import dual, structural_distance
from cqgkit.constructions.twist import bicharacter_cocycle, build_twist, twist_product
from cqgkit.groups import build_group_bismash, cyclic_group, cyclic_square, generate_example
from cqgkit.numeric import RootOfUnity
from cqgkit.report import VerificationReport, emit_report

K4_COORDS = {0: (0, 0), 1: (1, 0), 2: (0, 1), 3: (1, 1)}


@pytest.fixture
def files(tmp_path):
    paths = {}
    paths["c2"] = tmp_path / "c2.json"
    fileio.write_group(cyclic_group(2), paths["c2"])
    paths["cc2"] = tmp_path / "cc2.json"
    fileio.write_hopf(group_algebra(cyclic_group(2)), paths["cc2"])
    paths["k4"] = tmp_path / "k4.json"
    fileio.write_hopf(function_algebra(cyclic_square(2)), paths["k4"])
    P, C = generate_example("6.16", 3, RootOfUnity(1, 3), RootOfUnity(2, 3))
    paths["pair"] = tmp_path / "pair.json"
    fileio.write_pair(P, C, paths["pair"])
    paths["dir"] = tmp_path
    return paths


def _run(argv, capsys):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------- build

def test_build_example_then_check_cqg(tmp_path, capsys):
    out = tmp_path / "h.json"
    code, _, _ = _run(["build", "example", "--which", "6.15", "--n", 2, "--zeta", "1/2",
                       "--eta", "1/2", "-o", out], capsys)
    assert code == EXIT_OK
    code, text, _ = _run(["check-cqg", "--hopf", out], capsys)
    assert code == EXIT_OK
    line = next(l for l in text.splitlines() if l.startswith("min eigenvalue"))
    assert abs(float(line.split(":")[1]) - 0.25) < 1e-12


def test_build_to_stdout_matches_library(files, capsys):
    code, text, _ = _run(["build", "group-algebra", "--group", files["c2"]], capsys)
    assert code == EXIT_OK
    assert text == fileio.write_hopf(group_algebra(cyclic_group(2)))
    code, text, _ = _run(["build", "function-algebra", "--group", files["c2"]], capsys)
    assert text == fileio.write_hopf(function_algebra(cyclic_group(2)))


def test_builders_match_library_byte_for_byte(files, capsys):
    CC2 = group_algebra(cyclic_group(2))
    K4 = function_algebra(cyclic_square(2))
    P, C = fileio.read_pair(files["pair"])
    chi = bicharacter_cocycle(cyclic_square(2), K4_COORDS, [[1, 1], [0, 1]])
    chi_path = files["dir"] / "chi.json"
    fileio.write_cocycle(chi, chi_path)
    cases = [
        (["build", "double", "--hopf", files["cc2"]], drinfeld_double(CC2)),
        (["build", "dual", "--hopf", files["cc2"]], dual(CC2)),
        (["build", "bismash", "--pair", files["pair"]], build_group_bismash(P, C)),
        (["build", "twist", "--hopf", files["k4"], "--cocycle", chi_path],
         twist_product(K4, build_twist(K4, chi))),
        (["build", "example", "--which", "6.16", "--n", 3, "--zeta", "1/3", "--eta", "2/3"],
         build_group_bismash(*generate_example("6.16", 3, RootOfUnity(1, 3),
                                               RootOfUnity(2, 3)))),
    ]
    for argv, H in cases:
        code, text, _ = _run(argv, capsys)
        assert code == EXIT_OK, argv
        assert text == fileio.write_hopf(H), argv


def test_build_dual_twice_is_identity(files, capsys):
    d1, d2 = files["dir"] / "d1.json", files["dir"] / "d2.json"
    assert _run(["build", "dual", "--hopf", files["k4"], "-o", d1], capsys)[0] == EXIT_OK
    assert _run(["build", "dual", "--hopf", d1, "-o", d2], capsys)[0] == EXIT_OK
    assert structural_distance(fileio.read_hopf(files["k4"]), fileio.read_hopf(d2)) < 1e-9


def test_build_example_pair_out(tmp_path, capsys):
    pair = tmp_path / "p.json"
    code, _, _ = _run(["build", "example", "--which", "6.16", "--n", 2, "--zeta", "1/2",
                       "--eta", "0/1", "--pair-out", pair], capsys)
    assert code == EXIT_OK
    assert _run(["check-conditions", "--pair", pair], capsys)[0] == EXIT_OK


@pytest.mark.parametrize("argv", [
    ["build", "example", "--which", "6.15", "--n", 2],
    ["build", "example", "--which", "6.17", "--n", 2, "--zeta", "1/2", "--eta", "1/2"],
    ["build", "example", "--which", "6.15", "--n", 2, "--zeta", "x", "--eta", "1/2"],
    ["build", "double"],
    ["build", "nothing"],
    ["frobnicate"],
    [],
])
def test_build_bad_arguments(argv, capsys):
    assert _run(argv, capsys)[0] == EXIT_INPUT


def test_build_invalid_pair_fails(files, capsys):
    P, C = fileio.read_pair(files["pair"])
    bad = C.copy()
    bad.sigma[1, 1, 2] *= 1j
    path = files["dir"] / "bad.json"
    fileio.write_pair(P, bad, path)
    code, _, err = _run(["build", "bismash", "--pair", path], capsys)
    assert code == EXIT_FAIL
    assert "fail" in err
    assert _run(["check-conditions", "--pair", path], capsys)[0] == EXIT_FAIL


# ---------------------------------------------------------------- verify and check-cqg

def test_verify_passes_and_reports(files, capsys):
    report = files["dir"] / "r.json"
    code, text, _ = _run(["verify", "--hopf", files["cc2"], "--report", report], capsys)
    assert code == EXIT_OK
    assert "overall: pass" in text
    assert json.loads(report.read_text())["overall"] is True


def test_verify_corrupted_mult(files, capsys):
    d = fileio.read_json(files["cc2"])
    d["mult"][1][3] = 0.5
    bad = files["dir"] / "bad.json"
    bad.write_text(json.dumps(d))
    report = files["dir"] / "r.json"
    code, _, _ = _run(["verify", "--hopf", bad, "--report", report], capsys)
    assert code == EXIT_FAIL
    rep = json.loads(report.read_text())
    assert rep["overall"] is False
    assert any(c["check_id"] == "assoc" and c["status"] == "fail" for c in rep["checks"])


def test_verify_malformed_input(files, capsys):
    bad = files["dir"] / "bad.json"
    bad.write_text('{"dim": NaN}')
    assert _run(["verify", "--hopf", bad], capsys)[0] == EXIT_INPUT
    assert _run(["verify", "--hopf", files["dir"] / "missing.json"], capsys)[0] == EXIT_INPUT
    assert _run(["verify", "--hopf", files["cc2"], "--tol", "-1"], capsys)[0] == EXIT_INPUT


def test_check_cqg_without_star_fails(files, capsys):
    path = files["dir"] / "nostar.json"
    fileio.write_hopf(group_algebra(cyclic_group(2)).without_star(), path)
    assert _run(["check-cqg", "--hopf", path], capsys)[0] == EXIT_FAIL


def test_check_cqg_non_positive(files, capsys):
    path = files["dir"] / "c3.json"
    fileio.write_hopf(group_algebra(cyclic_group(3)).with_star(np.eye(3)), path)
    code, text, _ = _run(["check-cqg", "--hopf", path], capsys)
    assert code == EXIT_FAIL
    assert "not a CQG" in text


def test_check_conditions_pass(files, capsys):
    report = files["dir"] / "r.json"
    code, text, _ = _run(["check-conditions", "--pair", files["pair"], "--report", report],
                         capsys)
    assert code == EXIT_OK
    ids = [c["check_id"] for c in json.loads(report.read_text())["checks"]]
    assert any(i.startswith("sigma-tau:") for i in ids)
    assert any(i.startswith("lift:") for i in ids)


# ---------------------------------------------------------------- tolerance

def test_env_tolerance(files, capsys, monkeypatch):
    d = fileio.read_json(files["cc2"])
    d["mult"][1][3] = 1 + 1e-6
    path = files["dir"] / "near.json"
    path.write_text(json.dumps(d))
    assert _run(["verify", "--hopf", path], capsys)[0] == EXIT_FAIL
    monkeypatch.setenv("CQG_TOL", "1e-4")
    assert _run(["verify", "--hopf", path], capsys)[0] == EXIT_OK
    # an explicit flag wins over the environment
    assert _run(["verify", "--hopf", path, "--tol", "1e-9"], capsys)[0] == EXIT_FAIL
    for bad in ["abc", "-1", "0", "inf"]:
        monkeypatch.setenv("CQG_TOL", bad)
        assert _run(["verify", "--hopf", path], capsys)[0] == EXIT_INPUT


# ---------------------------------------------------------------- reports

def test_emit_report_deterministic(tmp_path):
    assert emit_report(VerificationReport()) == '{"overall": true, "checks": []}\n'
    rep = VerificationReport(tolerance=1e-9)
    rep.add("x", 0.1)
    text = emit_report(rep, tmp_path / "r.json")
    assert json.loads(text)["overall"] is False
    assert (tmp_path / "r.json").read_text() == text
    rep2 = VerificationReport(tolerance=1e-9)
    rep2.add("x", 0.1)
    assert emit_report(rep2) == text
