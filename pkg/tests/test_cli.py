import json
import os
import subprocess
import sys

import pytest

from liegeo.cli import main

L3_DOC = '{"dim":3,"brackets":[{"i":1,"j":2,"coeffs":[[3,"1"]]}]}'


def run_cli(args, stdin_text=None):
    """Invoke the CLI in-process, capturing stdout/stderr and the exit code."""
    import io
    from contextlib import redirect_stderr, redirect_stdout

    out, err = io.StringIO(), io.StringIO()
    old_stdin = sys.stdin
    try:
        if stdin_text is not None:
            sys.stdin = io.StringIO(stdin_text)
        with redirect_stdout(out), redirect_stderr(err):
            code = main(args)
    finally:
        sys.stdin = old_stdin
    return code, out.getvalue(), err.getvalue()


def catalog_text(name, *params):
    code, out, err = run_cli(["catalog", name, *map(str, params)])
    assert code == 0, err
    return out


def test_check_pass(tmp_path):
    path = tmp_path / "l3.json"
    path.write_text(L3_DOC)
    code, out, _ = run_cli(["check", str(path)])
    assert code == 0
    assert "jacobi" in out and "pass" in out


def test_check_stdin():
    code, out, _ = run_cli(["check", "-", "--json"], stdin_text=L3_DOC)
    assert code == 0
    doc = json.loads(out)
    assert doc["verdicts"]["jacobi"] == "pass"
    assert doc["verdicts"]["nilpotent"] == "yes (class 2)"


def test_tg_even_pass():
    text = catalog_text("Ln", 6)
    code, out, _ = run_cli(["tg", "-", "--subalgebra", "even"], stdin_text=text)
    assert code == 0
    assert "pass" in out


def test_tg_inline_fail_with_witness():
    text = catalog_text("Ln", 4)
    code, out, _ = run_cli(
        ["tg", "-", "--subalgebra", "0,1,0,0;0,0,1,0", "--json"], stdin_text=text
    )
    assert code == 1
    doc = json.loads(out)
    assert doc["verdicts"]["totally_geodesic"] == "fail"
    assert doc["witnesses"]["violating_triple"]["x"] == ["1", "0", "0", "0"]


def test_tg_invariance_flag():
    text = catalog_text("solv_rot")
    code, out, _ = run_cli(
        ["tg", "-", "--subalgebra", "h", "--invariance", "--json"], stdin_text=text
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["verdicts"]["totally_geodesic"] == "pass"
    assert doc["verdicts"]["complement_invariant"] == "fail"


def test_tg_unknown_name():
    text = catalog_text("Ln", 4)
    code, _, err = run_cli(["tg", "-", "--subalgebra", "nope"], stdin_text=text)
    assert code == 2
    assert "nope" in err


def test_geodesics_vector_fail():
    text = catalog_text("solv_exp")
    code, out, _ = run_cli(
        ["geodesics", "-", "--vector", "0,1,0", "--json"], stdin_text=text
    )
    assert code == 1
    doc = json.loads(out)
    assert doc["verdicts"]["geodesic"] == "fail"
    assert doc["witnesses"]["defect"] == ["1", "0", "0"]


def test_geodesics_vector_pass():
    text = catalog_text("Ln", 5)
    code, out, _ = run_cli(["geodesics", "-", "--vector", "0,1,0,0,0"], stdin_text=text)
    assert code == 0


def test_geodesics_numeric():
    text = catalog_text("so3")
    code, out, _ = run_cli(
        ["geodesics", "-", "--numeric", "--seed", "7", "--json"], stdin_text=text
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["verdicts"]["converged"] == "pass"


def test_geodesics_requires_mode():
    code, _, err = run_cli(["geodesics", "-"], stdin_text=L3_DOC)
    assert code == 2


def test_geodesics_bad_vector():
    code, _, err = run_cli(["geodesics", "-", "--vector", "1,2"], stdin_text=L3_DOC)
    assert code == 2


def test_vergne_catalog():
    text = catalog_text("irreg6")
    code, out, _ = run_cli(["vergne", "-", "--json"], stdin_text=text)
    assert code == 0
    doc = json.loads(out)
    assert doc["witnesses"]["alpha"] == "1"
    assert doc["verdicts"]["regular_for_this_basis"] == "no"


def test_vergne_not_filiform():
    text = catalog_text("so3")
    code, out, _ = run_cli(["vergne", "-"], stdin_text=text)
    assert code == 1


def test_catalog_unknown():
    code, _, err = run_cli(["catalog", "nonsense"])
    assert code == 2


def test_catalog_output_file(tmp_path):
    out_path = tmp_path / "l4.json"
    code, _, _ = run_cli(["catalog", "Ln", "4", "-o", str(out_path)])
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["dim"] == 4


def test_search_tg_dim6_empty():
    text = catalog_text("dim6")
    code, out, _ = run_cli(
        ["search-tg", "-", "--dim", "3", "--seed", "3", "--budget", "500", "--json"],
        stdin_text=text,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["verdicts"]["found"] == "0"
    assert any("evidence" in n for n in doc["notes"])


def test_search_tg_l4():
    text = catalog_text("Ln", 4)
    code, out, _ = run_cli(
        ["search-tg", "-", "--dim", "2", "--seed", "3", "--budget", "500", "--json"],
        stdin_text=text,
    )
    assert code == 0
    doc = json.loads(out)
    assert int(doc["verdicts"]["found"]) >= 2


def test_malformed_file_exit_2(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"dim": 3, "brackets": [{"i": 1}]}')
    code, _, err = run_cli(["check", str(path)])
    assert code == 2
    assert "brackets[0].j" in err


def test_missing_file_exit_2():
    code, _, err = run_cli(["check", "/nonexistent/path.json"])
    assert code == 2


def test_entrypoint_subprocess():
    env = dict(os.environ)
    proc = subprocess.run(
        [sys.executable, "-m", "liegeo.cli", "catalog", "heis3"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["dim"] == 3


def test_env_seed_override(monkeypatch):
    monkeypatch.setenv("LIEGEO_SEED", "42")
    from liegeo.cli import default_seed

    assert default_seed() == 42
    monkeypatch.setenv("LIEGEO_SEED", "nope")
    from liegeo.fileio import ParseError

    with pytest.raises(ParseError):
        default_seed()


def test_verify_paper_quick_smoke():
    import time

    t0 = time.perf_counter()
    code, out, _ = run_cli(["verify-paper", "--level", "quick"])
    elapsed = time.perf_counter() - t0
    assert code == 0
    assert "overall: PASS" in out
    assert elapsed < 60.0
