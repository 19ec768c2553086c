import math

import numpy as np
import pytest

import optbench as ob
from optbench.functions import catalog_list, get_function_class

from .reference import REFERENCE

ALL = catalog_list()
ARBITRARY = [n for n in ALL if not get_function_class(n)().metadata.dimensionality.is_fixed]
FIXED = [n for n in ALL if n not in ARBITRARY]


def test_catalog_has_twenty_sorted_names():
    names = catalog_list()
    assert len(names) == 20
    assert names == sorted(names)
    assert names == catalog_list()
    for required in ("Ackley", "Schwefel", "DeJong5"):
        assert required in names


def test_roster_contains_the_ten_pictured_functions():
    pictured = {"Ackley", "DeJong5", "Michalewicz", "PichenyGoldsteinPrice", "SchafferN2",
                "Rastrigin", "Keane", "Easom", "DeJong3", "Schwefel"}
    assert pictured <= set(ALL)


def test_fixed_dimension_roster():
    assert set(FIXED) == {"Easom", "DeJong5", "SchafferN2", "GoldsteinPrice",
                          "PichenyGoldsteinPrice", "McCormick", "MartinGaddy", "Keane",
                          "EggHolder", "Rana"}
    for name in FIXED:
        assert get_function_class(name)().n_dimensions == 2


def test_every_function_is_exported_at_package_level():
    for name in ALL:
        assert getattr(ob, name) is get_function_class(name)


@pytest.mark.parametrize("name", ALL)
def test_kernel_matches_scalar_reference(name):
    f = get_function_class(name)()
    lower, upper = f.suggested_bounds()
    rng = np.random.default_rng(1234)
    points = rng.uniform(lower, upper, size=(300, f.n_dimensions))
    ref = REFERENCE[name]
    for p in points:
        expected = ref(list(p))
        assert f(p) == pytest.approx(expected, rel=1e-11, abs=1e-11)


@pytest.mark.parametrize("name", ARBITRARY)
def test_kernel_matches_reference_in_higher_dimensions(name):
    f = get_function_class(name)(7)
    lower, upper = f.suggested_bounds()
    rng = np.random.default_rng(7)
    for p in rng.uniform(lower, upper, size=(50, 7)):
        assert f(p) == pytest.approx(REFERENCE[name](list(p)), rel=1e-11, abs=1e-11)


def test_schwefel_anchor_value():
    f = ob.Schwefel(n_dimensions=4)
    assert f([25, -34.6, -112.231, 242]) == -129.38197657025287


def test_dejong5_at_published_minimum():
    f = ob.DeJong5()
    assert abs(f([-31.978333625355454, -31.978335021953196]) - 0.9980038377944496) <= 1e-9


def test_easom_at_pi_pi():
    assert ob.Easom()([math.pi, math.pi]) == -1.0


@pytest.mark.parametrize("n", [1, 2, 5, 10])
def test_hypersphere_origin(n):
    assert ob.Hypersphere(n)(np.zeros(n)) == 0.0


def test_rastrigin_hand_value():
    # cos(pi/5) = (1 + sqrt 5) / 4
    expected = 2 * (10 + 0.01 - 10 * (1 + math.sqrt(5)) / 4)
    assert ob.Rastrigin()([0.1, 0.1]) == pytest.approx(expected, abs=1e-12)
    assert expected == pytest.approx(3.83966, abs=1e-5)


@pytest.mark.parametrize("name", ARBITRARY)
@pytest.mark.parametrize("n", [1, 2, 5, 10, 100])
def test_arbitrary_dimension_kernels_evaluate(name, n):
    cls = get_function_class(name)
    if n < cls.min_dimensions:
        with pytest.raises(ob.DimensionNotAllowedError):
            cls(n)
        return
    f = cls(n)
    lower, upper = f.suggested_bounds()
    value = f((lower + upper) / 2 + 0.1)
    assert math.isfinite(value)


def test_rosenbrock_requires_two_dimensions():
    with pytest.raises(ob.DimensionNotAllowedError):
        ob.Rosenbrock(1)


@pytest.mark.parametrize("name", ["Hypersphere", "Rastrigin", "Ackley"])
def test_origin_minimum_functions_are_non_negative(name):
    for n in (1, 2, 5):
        f = get_function_class(name)(n)
        lower, upper = f.suggested_bounds()
        pts = np.random.default_rng(n).uniform(lower, upper, size=(10_000, n))
        assert np.all(f.evaluate_many(pts) >= 0.0)


def test_ackley_origin_is_exactly_zero():
    for n in (1, 2, 3, 10):
        assert ob.Ackley(n)(np.zeros(n)) == 0.0


def test_keane_is_defined_at_origin():
    assert ob.Keane()([0.0, 0.0]) == 0.0


def test_dejong3_plateaus():
    f = ob.DeJong3(3)
    assert f([-5.12, -5.0, 0.5]) == -6 - 5 + 0
    assert f([5.12, 5.12, 5.12]) == 15


def test_parameters_change_the_kernel():
    base = ob.Ackley()
    steeper = ob.Ackley(a=30.0)
    p = [1.0, -2.0]
    assert steeper(p) != base(p)
    assert steeper(p) == pytest.approx(REFERENCE["Ackley"](p, a=30.0), rel=1e-12)
    m5 = ob.Michalewicz(3, m=5)
    assert m5([1.0, 2.0, 3.0]) == pytest.approx(REFERENCE["Michalewicz"]([1.0, 2.0, 3.0], m=5.0))
