import io
import json
import math
import subprocess
import sys

import pytest

from eulerprod.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def call_json(*argv):
    code, text = call(*argv)
    assert code == 0, text
    return json.loads(text)


def test_interpolate_example():
    data = call_json("interpolate", "--a", "1", "--b", "1")
    assert data["command"] == "interpolate"
    assert data["outputs"]["k"] == pytest.approx(0.7978845608, abs=1e-10)
    assert set(data) == {"command", "inputs", "outputs", "residuals", "elapsed_ms"}


def test_interpolate_oracle_route():
    data = call_json("interpolate", "--a", "2", "--b", "1", "--route", "oracle")
    assert data["outputs"]["k"] == pytest.approx(math.sqrt(math.pi / 2), rel=1e-13)


def test_product_example():
    data = call_json("product", "--form", "delta", "--a", "1", "--b", "1", "--n", "4")
    assert data["outputs"]["value"] == 105


def test_product_log():
    data = call_json("product", "--form", "gamma", "--a", "1", "--b", "1", "--n", "500", "--log")
    assert data["outputs"]["log_value"] == pytest.approx(math.lgamma(501), rel=1e-14)


def test_constants_example():
    out = call_json("constants", "--a", "1", "--b", "1")["outputs"]
    assert out["A"] == pytest.approx(2.5066282746, abs=1e-9)
    assert out["B"] == pytest.approx(math.sqrt(2 * math.e), rel=1e-9)
    assert out["C"] == pytest.approx(1.7724538509, abs=1e-9)


def test_quadrature_command():
    out = call_json("quadrature", "--p", "1", "--m", "1", "--n", "2", "--route", "closed")["outputs"]
    assert out["value"] == pytest.approx(math.pi / 2, rel=1e-13)
    assert out["route"] == "closed"


def test_general_product_command():
    data = call_json("general-product", "--p", "1", "--q", "2", "--m", "1", "--n", "2", "--terms", "1000")
    assert data["outputs"]["partial"] == pytest.approx(math.pi / 2, abs=1e-2)


def test_wallis_json_and_csv():
    data = call_json("wallis", "--a", "1", "--b", "1", "--schedule", "100,1000,10000")
    assert data["outputs"]["reference"] == pytest.approx(2 / math.pi, rel=1e-12)
    code, text = call("wallis", "--a", "1", "--b", "1", "--schedule", "10,100", "--format", "csv")
    assert code == 0
    assert text.splitlines()[0] == "N,partial,reference,abs_error"
    assert len(text.splitlines()) == 3


def test_global_flags_before_or_after_subcommand():
    _, before = call("--format", "csv", "product", "--form", "gamma", "--a", "1", "--b", "1", "--n", "3")
    _, after = call("product", "--form", "gamma", "--a", "1", "--b", "1", "--n", "3", "--format", "csv")
    assert before == after
    header, row = before.splitlines()
    assert row.split(",")[header.split(",").index("outputs.value")] == "6"


@pytest.mark.parametrize(
    "argv",
    [
        ("constants", "--a", "1.5", "--b", "0.5"),
        ("interpolate", "--a", "3.7", "--b", "2"),
        ("wallis", "--a", "2", "--b", "1", "--schedule", "10,100"),
    ],
)
def test_output_is_deterministic(argv):
    assert call(*argv) == call(*argv)


@pytest.mark.parametrize(
    "argv",
    [
        ("product", "--form", "gamma", "--a", "-1", "--b", "1", "--n", "3"),
        ("product", "--form", "gamma", "--a", "nan", "--b", "1", "--n", "3"),
        ("product", "--form", "gamma", "--a", "0.1234567890123456789", "--b", "1", "--n", "3"),
        ("product", "--form", "gamma", "--a", "1", "--b", "1", "--n", "200"),
        ("product", "--form", "bogus", "--a", "1", "--b", "1", "--n", "3"),
        ("quadrature", "--p", "1", "--m", "3", "--n", "1"),
        ("constants", "--a", "1", "--b", "1", "--order", "9"),
        ("nonsense",),
    ],
)
def test_validation_errors_exit_1(argv, capsys):
    code, text = call(*argv)
    assert code == 1
    assert text == ""
    assert capsys.readouterr().err


def test_numerical_failure_exit_2(capsys):
    assert call("constants", "--a", "1", "--b", "1", "--xref", "2")[0] == 2
    code, _ = call("quadrature", "--p", "0.001", "--m", "1", "--n", "1", "--budget", "50")
    assert code == 2
    assert "best estimate" in capsys.readouterr().err


def test_verify_default_passes(capsys):
    code, text = call("verify", "--grid", "default")
    assert code == 0
    records = json.loads(text)
    assert len(records) == 9
    assert all(r["outputs"]["passed"] for r in records)
    assert capsys.readouterr().err.count("[PASS]") == 9


def test_verify_violation_exit_3():
    code, text = call("verify", "--grid", "default", "--tolerance", "1e-30")
    assert code == 3
    assert not all(r["outputs"]["passed"] for r in json.loads(text))


def test_verify_grid_file_and_seed(tmp_path):
    grid = tmp_path / "grid.json"
    grid.write_text(json.dumps([[1, 1], [2.5, 0.75]]))
    code, text = call("verify", "--grid", str(grid), "--seed", "7")
    assert code == 0
    records = json.loads(text)
    assert records[0]["inputs"]["grid_points"] == 5
    assert call("verify", "--grid", str(grid), "--seed", "7") == (code, text)


def test_verify_bad_grid_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"a": 1}')
    assert call("verify", "--grid", str(bad))[0] == 1
    assert call("verify", "--grid", str(tmp_path / "missing.json"))[0] == 1


def test_timing_flag_fills_elapsed():
    data = call_json("--timing", "product", "--form", "gamma", "--a", "1", "--b", "1", "--n", "3")
    assert isinstance(data["elapsed_ms"], int)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "eulerprod", "product", "--form", "theta", "--a", "1", "--b", "1", "--n", "3"],
        capture_output=True, text=True, timeout=60,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["outputs"]["value"] == 2 * 4 * 6
