#!/usr/bin/env python
"""Tests for the compton-width cli"""
import json
import subprocess
from pathlib import Path

import pytest

from compton_width.cli import main
from compton_width.constants import ExitCodes

# pylint: disable=line-too-long
# flake8: noqa: E501


def _run(*args: str, cwd: Path) -> subprocess.CompletedProcess:
    result = subprocess.run(
        ["compton-width", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )
    print("STDOUT:", result.stdout)
    print("STDERR:", result.stderr)
    print("RETURN CODE:", result.returncode)
    return result


def _load_json(path: Path) -> dict:
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def test_localize_cli(tmp_path: Path) -> None:
    out = tmp_path / "localize"
    result = _run("localize", "--out", str(out), "--grid-points", "17", cwd=tmp_path)
    assert result.returncode == ExitCodes.SUCCESS
    assert "Evaluating the localized scalar profile" in result.stdout

    lines = (out / "nw_scalar_profile.csv").read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("# units:")
    assert lines[1] == "r,value,k_ratio"
    assert len(lines) == 2 + 17
    assert (out / "nw_delta_smeared.csv").exists()

    checks = _load_json(out / "localize_checks.json")
    assert checks["passed"] is True
    assert {m["code"] for m in checks["messages"]} == {"KERNEL_0001", "KERNEL_0002", "KERNEL_0003", "KERNEL_0004"}
    assert _load_json(out / "config.json")["grid_points"] == 17


def test_localize_cli_is_deterministic(tmp_path: Path) -> None:
    out = tmp_path / "run"
    outputs = []
    for _ in range(2):
        result = _run("localize", "--out", str(out), "--grid-points", "9", "--rmax", "2", cwd=tmp_path)
        assert result.returncode == ExitCodes.SUCCESS
        outputs.append(
            [(out / name).read_bytes() for name in ("nw_scalar_profile.csv", "nw_delta_smeared.csv", "localize_checks.json")]
        )
    assert outputs[0] == outputs[1]


def test_boost_cli(tmp_path: Path) -> None:
    out = tmp_path / "boost"
    result = _run("boost", "--out", str(out), "--grid-points", "65", cwd=tmp_path)
    assert result.returncode == ExitCodes.SUCCESS
    assert "Boosting sigma_p = 0.01 by beta0 = 0.8" in result.stdout

    report = _load_json(out / "contraction_report.json")
    assert report["sigma_x_unboosted"] == pytest.approx(50.0)
    assert report["predicted_parallel"] == pytest.approx(30.0)
    assert report["measured_parallel"] == pytest.approx(30.0, rel=1e-2)
    assert report["validity_ratio"] == pytest.approx(0.0125)

    lines = (out / "boosted_exact_profile.csv").read_text(encoding="utf-8").splitlines()
    assert lines[1] == "x_perp,x_par,re,im,abs2"
    assert len(lines) == 2 + 65 * 65
    assert (out / "boosted_approx_profile.csv").exists()

    summary = _load_json(out / "boost_summary.json")
    assert summary["gamma0"] == pytest.approx(5.0 / 3.0)
    assert summary["scalar_norm_boosted"] < summary["scalar_norm_unboosted"]
    assert _load_json(out / "boost_checks.json")["passed"] is True


@pytest.mark.parametrize(
    "sigma_p, beta0",
    [
        ("0.01", "0"),
        ("0.1", "0.8"),
    ],
)
def test_boost_cli_outside_validity(tmp_path: Path, sigma_p: str, beta0: str) -> None:
    result = _run("boost", "--out", str(tmp_path / "boost"), "--sigma-p", sigma_p, "--beta0", beta0, cwd=tmp_path)
    assert result.returncode == ExitCodes.USAGE
    assert "Usage error" in result.stderr


def test_spread_cli(tmp_path: Path) -> None:
    out = tmp_path / "spread"
    result = _run("spread", "--out", str(out), "--grid-points", "17", cwd=tmp_path)
    assert result.returncode == ExitCodes.SUCCESS

    index = _load_json(out / "spreading_index.json")
    assert index == {
        "0.5": "spreading_sigma_p_0.5.csv",
        "5": "spreading_sigma_p_5.csv",
        "50": "spreading_sigma_p_50.csv",
    }
    for name in index.values():
        lines = (out / name).read_text(encoding="utf-8").splitlines()
        assert lines[1] == "t,sigma_sq,v_sp,sigma_x,v_x"
        assert len(lines) == 2 + 17
        assert all(float(line.split(",")[2]) < 1.0 for line in lines[2:])

    summary = _load_json(out / "spreading_summary.json")
    rates = [r["asymptotic_rate_total"] for r in summary["reports"]]
    assert rates == sorted(rates)
    assert all(rate < 1.0 for rate in rates)


def test_subminimal_cli(tmp_path: Path) -> None:
    out = tmp_path / "subminimal"
    result = _run("subminimal", "--out", str(out), "--sigma-p", "2", "--grid-points", "17", cwd=tmp_path)
    assert result.returncode == ExitCodes.SUCCESS

    summary = _load_json(out / "subminimal.json")
    assert summary["sigma_x_measured"] == pytest.approx(0.25, rel=1e-6)
    assert summary["sigma_x_over_lambda_c"] == pytest.approx(0.25, rel=1e-6)
    assert summary["subminimal"] is True
    assert summary["kg_norm"] == pytest.approx(1.0, abs=1e-6)
    assert 0.0 < summary["N"] < 1.0

    lines = (out / "scalar_profile.csv").read_text(encoding="utf-8").splitlines()
    assert lines[1] == "r,re,im,abs2"
    assert len(lines) == 2 + 17


def test_subminimal_cli_wide_packet(tmp_path: Path) -> None:
    out = tmp_path / "subminimal"
    result = _run("subminimal", "--out", str(out), "--grid-points", "17", cwd=tmp_path)
    assert result.returncode == ExitCodes.SUCCESS
    assert _load_json(out / "subminimal.json")["subminimal"] is False

    checks = _load_json(out / "subminimal_checks.json")
    warning = [m for m in checks["messages"] if m["code"] == "SHAPE_0005"]
    assert warning and not warning[0]["is_fatal"]


def test_verify_cli(tmp_path: Path) -> None:
    out = tmp_path / "verify"
    result = _run("verify", "--out", str(out), cwd=tmp_path)
    assert result.returncode == ExitCodes.SUCCESS

    checks = _load_json(out / "verify_checks.json")
    assert checks["passed"] is True
    codes = {m["code"] for m in checks["messages"]}
    assert {"NORM_0001", "NORM_0002", "NORM_0003", "NORM_0004", "NORM_0005", "QUAD_0001"} <= codes


def test_verify_cli_rejects_unnormalized_table(tmp_path: Path) -> None:
    table = tmp_path / "table.csv"
    table.write_text("p,re,im\n0,1,0\n0.5,1,0\n1,1,0\n1.5,1,0\n", encoding="utf-8")
    out = tmp_path / "verify"
    result = _run("verify", "--out", str(out), "--tabulated", str(table), cwd=tmp_path)
    assert result.returncode == ExitCodes.CHECK_FAILED
    assert "Numerical checks failed" in result.stderr
    assert _load_json(out / "verify_checks.json")["passed"] is False


def test_config_file(tmp_path: Path) -> None:
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"grid_points": 9, "rmax": 2.0}), encoding="utf-8")
    out = tmp_path / "localize"
    result = _run("localize", "--config", str(config), "--out", str(out), cwd=tmp_path)
    assert result.returncode == ExitCodes.SUCCESS
    saved = _load_json(out / "config.json")
    assert saved["rmax"] == 2.0
    assert saved["output_dir"] == str(out)


def test_usage_errors(tmp_path: Path) -> None:
    assert _run("boost", "--beta0", "abc", cwd=tmp_path).returncode == ExitCodes.USAGE
    assert _run("unknown", cwd=tmp_path).returncode == ExitCodes.USAGE
    result = _run("localize", "--config", str(tmp_path / "missing.json"), "--out", str(tmp_path), cwd=tmp_path)
    assert result.returncode == ExitCodes.USAGE
    result = _run("spread", "--mass", "-1", "--out", str(tmp_path), cwd=tmp_path)
    assert result.returncode == ExitCodes.USAGE


def test_main_returns_exit_code(tmp_path: Path) -> None:
    assert main(["boost", "--beta0", "0", "--out", str(tmp_path / "boost")]) == ExitCodes.USAGE
    assert not (tmp_path / "boost").exists()
