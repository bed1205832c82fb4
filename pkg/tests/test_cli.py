import json
import os
import pathlib

import numpy as np
import pytest

from spinlift import exp_series, make_metric, wedge
from spinlift.cli import main, run_selftest

E = np.eye(4)
GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"
REGEN = os.environ.get("REGEN_GOLDENS") == "1"


def fixed_inputs():
    g = make_metric()
    block = (wedge(g, E[0], E[1]) + wedge(g, E[2], E[3])).matrix
    return {
        "decompose": block,
        "exp-spin": block,
        "log": exp_series(wedge(g, E[2], E[3]).matrix),
        "factor": exp_series(block),
        "lift": np.eye(4),
        "invariants": wedge(g, E[0], E[1]).matrix,
    }


def run_cli(args, tmp_path, request_payload=None):
    argv = list(args)
    if request_payload is not None:
        infile = tmp_path / "request.json"
        infile.write_text(json.dumps(request_payload, indent=2) + "\n")
        argv += ["--in", str(infile)]
    outfile = tmp_path / "response.json"
    argv += ["--out", str(outfile)]
    code = main(argv)
    return code, outfile.read_bytes()


def golden_paths(name):
    return GOLDEN_DIR / f"{name}.request.json", GOLDEN_DIR / f"{name}.golden.json"


@pytest.mark.parametrize(
    "command", ["decompose", "exp-spin", "log", "factor", "lift", "invariants"]
)
def test_golden_matrix_commands(command, tmp_path):
    request_file, golden_file = golden_paths(command)
    if REGEN:
        payload = {"matrix": fixed_inputs()[command].tolist()}
        request_file.parent.mkdir(exist_ok=True)
        request_file.write_text(json.dumps(payload, indent=2) + "\n")
    outfile = tmp_path / "out.json"
    code = main([command, "--in", str(request_file), "--out", str(outfile)])
    assert code == 0
    if REGEN:
        golden_file.write_bytes(outfile.read_bytes())
    assert outfile.read_bytes() == golden_file.read_bytes()


def test_golden_selftest(tmp_path):
    _, golden_file = golden_paths("selftest")
    outfile = tmp_path / "out.json"
    code = main(["selftest", "--seed", "7", "--out", str(outfile)])
    assert code == 0
    if REGEN:
        golden_file.parent.mkdir(exist_ok=True)
        golden_file.write_bytes(outfile.read_bytes())
    assert outfile.read_bytes() == golden_file.read_bytes()
    report = json.loads(outfile.read_bytes())
    assert report["result"]["all_passed"] is True
    assert len(report["result"]["checks"]) == 11


def test_output_is_deterministic(tmp_path):
    request_file, _ = golden_paths("decompose")
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert main(["decompose", "--in", str(request_file), "--out", str(a)]) == 0
    assert main(["decompose", "--in", str(request_file), "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_floats_reingest_exactly(tmp_path):
    request_file, _ = golden_paths("factor")
    outfile = tmp_path / "out.json"
    main(["factor", "--in", str(request_file), "--out", str(outfile)])
    doc = json.loads(outfile.read_text())
    rebuilt = np.array(doc["result"]["lambda_plus"])
    g = make_metric()
    expected = exp_series(wedge(g, E[0], E[1]).matrix)
    assert np.abs(rebuilt - expected).max() < 1e-8


def test_domain_error_exit_code(tmp_path):
    g = make_metric()
    payload = {"matrix": wedge(g, E[0], E[1]).matrix.tolist()}
    code, out = run_cli(["decompose"], tmp_path, payload)
    assert code == 1
    doc = json.loads(out)
    assert doc["error"]["code"] == "SimpleInput"


def test_invalid_bivector_exit_code(tmp_path):
    code, out = run_cli(["decompose"], tmp_path, {"matrix": np.eye(4).tolist()})
    assert code == 1
    assert json.loads(out)["error"]["code"] == "InvalidBivector"


def test_malformed_shape(tmp_path):
    code, out = run_cli(["decompose"], tmp_path, {"matrix": [[1.0, 2.0], [3.0, 4.0]]})
    assert code == 2
    assert json.loads(out)["error"]["code"] == "MalformedInput"


def test_malformed_entries(tmp_path):
    bad = [[0.0] * 4 for _ in range(4)]
    bad[0][1] = "x"
    code, out = run_cli(["decompose"], tmp_path, {"matrix": bad})
    assert code == 2
    bad[0][1] = None
    code, _ = run_cli(["decompose"], tmp_path, {"matrix": bad})
    assert code == 2


def test_malformed_json(tmp_path):
    infile = tmp_path / "broken.json"
    infile.write_text("{not json")
    outfile = tmp_path / "out.json"
    code = main(["decompose", "--in", str(infile), "--out", str(outfile)])
    assert code == 2
    assert json.loads(outfile.read_text())["error"]["code"] == "MalformedInput"


def test_malformed_missing_matrix(tmp_path):
    code, out = run_cli(["invariants"], tmp_path, {})
    assert code == 2


def test_malformed_unknown_key(tmp_path):
    g = make_metric()
    payload = {"matrix": wedge(g, E[0], E[1]).matrix.tolist(), "mode": "fast"}
    code, _ = run_cli(["invariants"], tmp_path, payload)
    assert code == 2


def test_malformed_bad_tags(tmp_path):
    g = make_metric()
    matrix = wedge(g, E[0], E[1]).matrix.tolist()
    code, _ = run_cli(["invariants"], tmp_path, {"matrix": matrix, "metric": "ppmm"})
    assert code == 2
    code, _ = run_cli(["invariants"], tmp_path, {"matrix": matrix, "tol": -1.0})
    assert code == 2


def test_unknown_command_usage_error(tmp_path):
    with pytest.raises(SystemExit) as err:
        main(["transmogrify"])
    assert err.value.code == 2


def test_flag_overrides_json(tmp_path):
    g = make_metric()
    payload = {"matrix": wedge(g, E[0], E[1]).matrix.tolist(), "rep": "regular"}
    code, out = run_cli(["invariants"], tmp_path, payload)
    assert code == 0 and json.loads(out)["rep"] == "regular"
    code, out = run_cli(["invariants", "--rep", "gamma"], tmp_path, payload)
    assert code == 0 and json.loads(out)["rep"] == "gamma"


def test_mppp_request(tmp_path):
    g_alt = make_metric("mppp")
    payload = {"matrix": (wedge(g_alt, E[0], E[1]) + wedge(g_alt, E[2], E[3])).matrix.tolist()}
    code, out = run_cli(["decompose", "--metric", "mppp"], tmp_path, payload)
    assert code == 0
    doc = json.loads(out)
    assert doc["metric"] == "mppp"
    assert doc["diagnostics"]["reconstruction_defect"] < 1e-12


def test_selftest_report_structure():
    report = run_selftest("pmmm", seed=123, trials=3)
    assert report["all_passed"] is True
    for check in report["checks"]:
        assert check["max_defect"] <= check["tol"]
        assert check["cases"] == 3


def test_console_script(tmp_path):
    import subprocess

    request_file, _ = golden_paths("lift")
    proc = subprocess.run(
        ["spinlift", "lift", "--in", str(request_file)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["branch"] == "simple/identity"
