"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line in ``RESULTS``; the lines are
printed at the end of the pytest run (see conftest.py) and when this file
is executed directly.
"""

import itertools
import time
import xml.etree.ElementTree as ET

import numpy as np
import pytest

import optbench as ob
from optbench.core import Bounds, Optimum
from optbench.functions import catalog_list, get_function_class
from optbench.metadata import builtin_metadata, dump_metadata, validate_metadata
from optbench.plotting import export_surface_grid, parse_surface_grid, render
from optbench.search import minimum_grid_search, minimum_random_search
from optbench.verify import VerifierConfig, all_passed, verify_all, verify_optimum

RESULTS: dict[int, str] = {}


def record(number, title, ok, detail):
    RESULTS[number] = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title} ({detail})"
    print(RESULTS[number])
    assert ok, RESULTS[number]


def test_criterion_1_schwefel_anchor():
    value = ob.Schwefel(n_dimensions=4)([25, -34.6, -112.231, 242])
    err = abs(value - (-129.38197657025287))
    record(1, "Schwefel N=4 anchor", err <= 1e-9, f"value={value!r}, abs error={err:.3g}")


def test_criterion_2_dejong5_minimum():
    expected_pos = (-31.978333625355454, -31.978335021953196)
    expected_val = 0.9980038377944496
    f = ob.DeJong5()
    m = f.minimum()
    pos_err = max(abs(a - b) for a, b in zip(m.position, expected_pos))
    eval_err = abs(f(m.position) - m.value)
    ok = m.value == expected_val and pos_err <= 1e-6 and eval_err <= 1e-9
    record(2, "De Jong 5 known minimum", ok,
           f"value={m.value!r}, position error={pos_err:.3g}, evaluate error={eval_err:.3g}")


def test_criterion_3_verify_all_catalog():
    start = time.perf_counter()
    reports = verify_all(dimensions=(2, 3, 4), config=VerifierConfig(epsilon=1e-6, n_samples=10_000))
    elapsed = time.perf_counter() - start
    records = [r for group in reports.values() for r in group]
    passed = sum(r.passed for r in records)
    failed = [f"{r.function} N={r.n_dimensions} {r.optimum.position}" for r in records if not r.passed]
    ok = len(reports) == 20 and records and all_passed(reports)
    record(3, "verify_all over the shipped catalog", ok,
           f"{passed}/{len(records)} optima passed in {elapsed:.1f}s" + (f"; failed {failed}" if failed else ""))


def test_criterion_4_opposite_symmetry():
    mismatches = []
    for name in catalog_list():
        f = get_function_class(name)()
        g = get_function_class(name)(opposite=True)
        lower, upper = f.suggested_bounds()
        pts = np.random.default_rng(2024).uniform(lower, upper, size=(1000, f.n_dimensions))
        bad = sum(1 for p in pts if g(p) != -f(p))
        if bad:
            mismatches.append(f"{name}: {bad}")
    record(4, "opposite symmetry, 20 functions x 1000 points", not mismatches,
           "exact on all points" if not mismatches else ", ".join(mismatches))


def _brute_grid(func, bounds, k):
    axes = [np.linspace(lo, hi, k + 1).tolist() for lo, hi in zip(*bounds)]
    return min(func(p) for p in itertools.product(*axes))


def _brute_random(func, bounds, n, seed):
    pts = np.random.Generator(np.random.PCG64(seed)).uniform(
        bounds.lower, bounds.upper, size=(n, func.n_dimensions))
    return min(func(p) for p in pts)


def test_criterion_5_baseline_oracle_equivalence():
    cases = [("Ackley", 2), ("Rastrigin", 3), ("Schwefel", 2), ("EggHolder", None), ("Michalewicz", 2)]
    seed = 12345
    mismatches, checked = [], 0
    for name, n in cases:
        f = ob.instantiate(name, n)
        b = f.suggested_bounds()
        for k in (4, 10):
            got = minimum_grid_search(f, k).best_value
            checked += 1
            if got != _brute_grid(f, b, k):
                mismatches.append(f"{name} grid k={k}")
        got = minimum_random_search(f, 10_000, seed=seed).best_value
        checked += 1
        if got != _brute_random(f, b, 10_000, seed):
            mismatches.append(f"{name} random")
    h = minimum_grid_search(ob.Hypersphere(2), 10, Bounds.from_scalars(-5.0, 5.0, 2))
    closed_form = h.best_point.tolist() == [0.0, 0.0] and h.best_value == 0.0
    record(5, "baseline searches equal brute force", not mismatches and closed_form,
           f"{checked - len(mismatches)}/{checked} exact matches, Hypersphere grid -> "
           f"({h.best_point.tolist()}, {h.best_value!r})")


def test_criterion_6_verifier_discrimination():
    f = ob.Rastrigin(2)
    config = VerifierConfig(epsilon=1e-6, radius=1e-2, n_samples=10_000)
    planted = Optimum("minimum", (0.1, 0.1), f([0.1, 0.1]), 2)
    true = Optimum("minimum", (0.0, 0.0), 0.0, 2)
    false_report = verify_optimum(f, planted, config)
    true_report = verify_optimum(f, true, config)

    # independent oracle: a polar grid over the same disk finds a better point
    r = np.linspace(0, 1e-2, 101)
    t = np.linspace(0, 2 * np.pi, 360, endpoint=False)
    disk = [(0.1 + a * np.cos(b), 0.1 + a * np.sin(b)) for a in r for b in t]
    oracle_min = min(f(p) for p in disk)
    ok = (not false_report.passed and true_report.passed
          and oracle_min < planted.value - config.epsilon)
    record(6, "verifier discrimination on Rastrigin", ok,
           f"planted (0.1, 0.1) {'passed' if false_report.passed else 'failed'}, "
           f"improvement {planted.value - false_report.min_sampled_value:.3g}; "
           f"origin {'passed' if true_report.passed else 'failed'}")


def test_criterion_7_metadata_validation():
    dirty = [n for n in catalog_list() if validate_metadata(builtin_metadata(n))]

    inverted = dump_metadata(builtin_metadata("Ackley"))
    inverted["suggested_bounds"] = {"lower": 32.768, "upper": -32.768}
    wrong_value = dump_metadata(builtin_metadata("Rastrigin"))
    wrong_value["optima"]["minima"]["*"][0]["value"] = 0.5
    bad_length = dump_metadata(builtin_metadata("Easom"))
    bad_length["optima"]["minima"]["2"][0]["position"] = [np.pi, np.pi, 0.0]
    planted = {
        "inverted bounds": (inverted, "bounds-order"),
        "wrong optimum value": (wrong_value, "value-mismatch"),
        "mismatched position length": (bad_length, "schema"),
    }
    missed = [label for label, (doc, check) in planted.items()
              if check not in {v.check for v in validate_metadata(doc)}]
    record(7, "metadata validation", not dirty and not missed,
           f"{20 - len(dirty)}/20 shipped files clean, {3 - len(missed)}/3 corruptions detected")


def test_criterion_8_plot_structure(tmp_path):
    f = ob.Schwefel(2)
    rng = np.random.default_rng(7)
    # overlay points drawn slightly wider than the bounds, so some fall outside
    pts = rng.uniform(-550.0, 550.0, size=(100, 2))
    in_bounds = int(np.sum(np.all(np.abs(pts) <= 500.0, axis=1)))
    out = tmp_path / "schwefel.svg"
    render(f, resolution=101, as_heatmap=True, points=pts, output_path=out)
    root = ET.parse(out).getroot()  # raises on malformed XML
    ns = "{http://www.w3.org/2000/svg}"
    cells = [e for e in root.iter(ns + "rect") if e.get("class") == "cell"]
    markers = [e for e in root.iter(ns + "circle") if e.get("class") == "marker"]

    _, _, z = parse_surface_grid(export_surface_grid(ob.Hypersphere(2), Bounds.from_scalars(-1.0, 1.0, 2), 3))
    hand = np.array([[2.0, 1.0, 2.0], [1.0, 0.0, 1.0], [2.0, 1.0, 2.0]])
    grid_ok = z.tobytes() == hand.tobytes()
    ok = len(cells) == 101**2 and len(markers) == in_bounds and grid_ok
    record(8, "plot structure and surface grid", ok,
           f"{len(cells)} cells, {len(markers)}/{in_bounds} in-bounds markers, "
           f"3x3 grid {'bit-exact' if grid_ok else 'differs'}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
