import json
import subprocess
import sys

import pytest

from optbench.cli import main
from optbench.functions import catalog_list
from optbench.metadata import load_metadata, validate_metadata


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0 and out.split() == catalog_list()
    code, out, _ = run(capsys, "--machine", "list")
    assert json.loads(out) == catalog_list()


def test_eval_prints_full_precision(capsys):
    code, out, _ = run(capsys, "eval", "Schwefel", "-d", "4", "-p=25,-34.6,-112.231,242")
    assert code == 0 and out.strip() == "-129.38197657025287"


def test_eval_opposite(capsys):
    code, out, _ = run(capsys, "eval", "Schwefel", "-d", "4", "--opposite", "-p=25,-34.6,-112.231,242")
    assert out.strip() == "129.38197657025287"


def test_eval_with_parameter(capsys):
    code, out, _ = run(capsys, "--machine", "eval", "Ackley", "--param", "a=0", "-p", "0,0")
    assert code == 0 and json.loads(out)["value"] == 0.0


@pytest.mark.parametrize("argv", [
    ["eval", "Easom", "-d", "3", "-p", "0,0,0"],
    ["eval", "Nope", "-p", "0"],
    ["eval", "Ackley", "-p", "0,x"],
    ["eval", "Ackley", "-p", "0,0,0"],
    ["eval", "Ackley", "--param", "zz=1", "-p", "0,0"],
    ["eval", "Ackley", "--param", "a", "-p", "0,0"],
    ["search", "Hypersphere", "--method", "grid", "--n-edge-points", "0"],
    ["search", "Hypersphere", "-d", "8", "--method", "grid"],
    ["plot", "Schwefel", "-d", "3", "-o", "x.svg"],
    ["verify", "Rastrigin", "--epsilon", "0"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["eval"])
    assert info.value.code == 2


def test_fixed_dimension_accepted_when_equal(capsys):
    code, out, _ = run(capsys, "eval", "Easom", "-d", "2", "-p", "3.141592653589793,3.141592653589793")
    assert code == 0 and out.strip() == "-1.0"


def test_info_machine_round_trips(capsys):
    for name in ("Schwefel", "DeJong5", "McCormick"):
        code, out, _ = run(capsys, "--machine", "info", name)
        assert code == 0
        md = load_metadata(json.loads(out))
        assert md.name == name and validate_metadata(md) == []


def test_info_human(capsys):
    code, out, _ = run(capsys, "info", "DeJong5")
    assert code == 0
    assert "0.9980038377944496" in out and "minima: 25" in out


def test_search_grid_and_random(capsys):
    code, out, _ = run(capsys, "--machine", "search", "Hypersphere", "--method", "grid",
                       "--n-edge-points", "10", "--bounds=-5,5")
    doc = json.loads(out)
    assert code == 0 and doc["best_point"] == [0.0, 0.0] and doc["best_value"] == 0.0
    code, out, _ = run(capsys, "--machine", "search", "Ackley", "--n-samples", "50", "--seed", "3")
    assert json.loads(out)["seed"] == 3


def test_search_reports_seed(capsys):
    code, out, _ = run(capsys, "search", "Ackley", "--n-samples", "10")
    assert code == 0 and "seed:" in out


def test_verify_single_function_passes(capsys):
    code, out, _ = run(capsys, "verify", "Rastrigin")
    assert code == 0 and out.strip().endswith("(epsilon=1e-06)")


def test_verify_catalog_machine(capsys):
    code, out, _ = run(capsys, "--machine", "verify", "--all-dimensions", "2")
    doc = json.loads(out)
    assert code == 0 and doc["passed"] is True and doc["reports"]


def test_verify_failure_exit_1(capsys, monkeypatch):
    import optbench.verify as verify
    from optbench.core import Optimum

    original = verify.verify_optimum

    def planted(func, optimum, config=None):
        false = Optimum("minimum", (0.1, 0.1), func([0.1, 0.1]), 2)
        return original(func, false, config)

    monkeypatch.setattr(verify, "verify_optimum", planted)
    code, out, _ = run(capsys, "verify", "Rastrigin", "--radius", "0.01")
    assert code == 1 and out.startswith("FAIL")


def test_plot_heatmap_with_points(tmp_path, capsys):
    csv_path = tmp_path / "pts.csv"
    csv_path.write_text("0,0\n100,-200\n900,0\n")
    out_path = tmp_path / "s.svg"
    code, _, err = run(capsys, "plot", "Schwefel", "--heatmap", "--resolution", "11",
                       "--points", str(csv_path), "-o", str(out_path))
    assert code == 0 and out_path.exists()
    assert "outside" in err
    assert out_path.read_text().count('class="cell"') == 121


def test_plot_surface_grid(tmp_path, capsys):
    out_path = tmp_path / "g.txt"
    code, _, _ = run(capsys, "plot", "Hypersphere", "--surface-grid", "--bounds=-1,1",
                     "--resolution", "3", "-o", str(out_path))
    assert code == 0
    assert out_path.read_text().splitlines()[1:] == ["2.0 1.0 2.0", "1.0 0.0 1.0", "2.0 1.0 2.0"]


def test_plot_missing_points_file_exit_3(tmp_path, capsys):
    code, _, _ = run(capsys, "plot", "Easom", "--points", str(tmp_path / "none.csv"),
                     "-o", str(tmp_path / "e.svg"))
    assert code == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "optbench", "list"], capture_output=True, text=True)
    assert proc.returncode == 0 and "Schwefel" in proc.stdout
