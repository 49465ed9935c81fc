import csv
import json
import math
import os
import subprocess
import sys

import pytest

from pdmwave import __version__
from pdmwave.cli import main


def read_csv(path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    return rows[0], rows[1:]


def test_potential_2d(tmp_path):
    out = tmp_path / "p.csv"
    code = main(["potential", "--dim", "2", "--mass", "power:1", "--rmin", "0.1", "--rmax", "10", "--points", "100", "--out", str(out)])
    assert code == 0
    header, rows = read_csv(out)
    assert header == ["r", "v_qep", "v_centrifugal", "verdict"]
    assert len(rows) == 100
    assert all(float(r[1]) < 0 for r in rows)
    assert {r[3] for r in rows} == {"Attractive"}
    radii = [float(r[0]) for r in rows]
    assert all(a < b for a, b in zip(radii, radii[1:]))


@pytest.mark.parametrize("dim, mass", [("1", "power:1"), ("3", "const:1")])
def test_potential_zero(tmp_path, dim, mass):
    out = tmp_path / "p.csv"
    assert main(["potential", "--dim", dim, "--mass", mass, "--out", str(out)]) == 0
    _, rows = read_csv(out)
    assert all(float(r[1]) == 0.0 for r in rows)
    assert rows[0][3] == "Zero"


def test_potential_centrifugal(tmp_path):
    out = tmp_path / "p.csv"
    assert main(["potential", "--dim", "3", "--mass", "const:1", "--l", "1", "--rmin", "1", "--rmax", "2", "--points", "2", "--out", str(out)]) == 0
    _, rows = read_csv(out)
    assert float(rows[0][2]) == 1.0


@pytest.mark.parametrize(
    "argv, code",
    [
        (["potential", "--dim", "2", "--mass", "linear:1"], 2),
        (["potential", "--dim", "2"], 2),
        (["potential", "--dim", "2", "--mass", "power:1", "--points", "1"], 2),
        (["potential", "--dim", "2", "--mass", "power:1", "--rmin", "2", "--rmax", "1"], 3),
        (["density", "--dim", "2", "--nu", "1.2"], 3),
        (["density", "--dim", "3", "--nu", "-0.6"], 3),
        (["density", "--dim", "4", "--nu", "0.2"], 3),
    ],
)
def test_exit_codes(tmp_path, argv, code):
    out = tmp_path / "x.csv"
    assert main(argv + ["--out", str(out)]) == code
    assert not out.exists()
    assert not list(tmp_path.iterdir())


@pytest.mark.parametrize("argv", [["nonsense"], []])
def test_bad_subcommand(argv):
    assert main(argv) == 2


def test_io_error(tmp_path):
    missing = tmp_path / "no" / "such" / "dir" / "p.csv"
    assert main(["potential", "--dim", "2", "--mass", "power:1", "--out", str(missing)]) == 4


def test_density_and_sidecar(tmp_path):
    out = tmp_path / "d.csv"
    assert main(["density", "--dim", "2", "--nu", "0.4", "--energy", "0.5", "--rmax", "5", "--points", "500", "--out", str(out)]) == 0
    header, rows = read_csv(out)
    assert header == ["r", "w", "u"]
    assert len(rows) == 500
    side = json.loads((tmp_path / "d.json").read_text())
    assert side["normalization_integral"] == pytest.approx(1.0, abs=1e-6)
    assert side["alpha"] == pytest.approx(4 / 3, rel=1e-14)
    assert 0 < side["r_max_location"] < 5
    assert side["near_boundary"] is False
    assert "generated_at" in side


def test_density_negative_order(tmp_path):
    out = tmp_path / "d.csv"
    assert main(["density", "--dim", "2", "--nu", "-0.2", "--energy", "0.5", "--out", str(out)]) == 0
    _, rows = read_csv(out)
    w = [float(r[1]) for r in rows]
    assert float(rows[0][0]) == 0.0 and w[0] == 0.0
    i = max(range(len(w)), key=w.__getitem__)
    assert 0 < i < len(w) - 1


def test_density_near_boundary(tmp_path):
    out = tmp_path / "d.csv"
    assert main(["density", "--dim", "3", "--nu", "0.999", "--out", str(out)]) == 0
    side = json.loads((tmp_path / "d.json").read_text())
    assert side["near_boundary"] is True
    assert side["warnings"]


def test_figures(tmp_path):
    assert main(["figures", "--out-dir", str(tmp_path)]) == 0
    csvs = sorted(p for p in os.listdir(tmp_path) if p.endswith(".csv"))
    assert csvs == [
        "fig1_nu-0.2.csv", "fig1_nu0.1.csv", "fig1_nu0.4.csv", "fig1_nu0.7.csv",
        "fig2_cuts.csv", "fig_rmax_vs_nu.csv",
    ]
    for name in csvs[:4]:
        assert len(read_csv(tmp_path / name)[1]) == 500
    header, rows = read_csv(tmp_path / "fig2_cuts.csv")
    assert header == ["nu", "r", "w"] and len(rows) == 2000
    _, rows = read_csv(tmp_path / "fig_rmax_vs_nu.csv")
    r_max = [float(r[1]) for r in rows]
    assert all(a < b for a, b in zip(r_max, r_max[1:]))
    summary = json.loads((tmp_path / "figures_summary.json").read_text())
    for c in summary["curves"]:
        assert c["normalization_integral"] == pytest.approx(1.0, abs=1e-6)


def test_csv_determinism(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(["figures", "--out-dir", str(a)]) == 0
    assert main(["figures", "--out-dir", str(b)]) == 0
    for name in os.listdir(a):
        if name.endswith(".csv"):
            assert (a / name).read_bytes() == (b / name).read_bytes()
    args = ["density", "--dim", "3", "--nu", "0.2"]
    assert main(args + ["--out", str(a / "d.csv")]) == 0
    assert main(args + ["--out", str(b / "d.csv")]) == 0
    assert (a / "d.csv").read_bytes() == (b / "d.csv").read_bytes()


def test_seventeen_digits(tmp_path):
    out = tmp_path / "p.csv"
    main(["potential", "--dim", "2", "--mass", "const:1", "--rmin", "2", "--rmax", "3", "--points", "2", "--out", str(out)])
    _, rows = read_csv(out)
    assert rows[0][1] == format(-1 / 32, ".17g")


def test_stdout(capsys):
    assert main(["potential", "--dim", "1", "--mass", "power:1", "--points", "3"]) == 0
    assert capsys.readouterr().out.count("\n") == 4


@pytest.fixture(scope="module")
def validation(tmp_path_factory):
    out = tmp_path_factory.mktemp("v") / "report.json"
    code = main(["validate", "--out", str(out)])
    return code, json.loads(out.read_text())


def test_validate(validation):
    code, report = validation
    assert code == 0
    assert report["summary"]["pass"] is True
    assert report["tool_version"] == __version__
    case = next(c for c in report["cases"] if c["dimension"] == 3 and c["nu"] == 0.4 and c["abs_energy"] == 0.5)
    assert case["normalization_integral"] == pytest.approx(1.0, abs=1e-6)
    assert abs(case["normalization_integral_paper_printed_exponent"] - 1.0) > 1e-2
    for c in report["cases"]:
        assert set(c["tolerances"]) >= {"normalization", "ode_residual", "numeric_vs_analytic"}
        assert c["passed"]


def test_module_entry_point(tmp_path):
    out = tmp_path / "p.csv"
    proc = subprocess.run(
        [sys.executable, "-m", "pdmwave.cli", "potential", "--dim", "2", "--mass", "power:1", "--out", str(out)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert out.exists()
