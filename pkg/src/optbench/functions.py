"""The benchmark functions shipped with the library.

Every kernel receives coordinates as an ``(n_dimensions, n_points)`` array.
Sums and products over coordinates are accumulated row by row in a fixed
order, so a point gives the same bits whether evaluated alone or in a batch.
"""

from __future__ import annotations

import math

import numpy as np

from .core import BenchmarkFunction
from .exceptions import UnknownFunctionError

_CATALOG: dict[str, type[BenchmarkFunction]] = {}


def register(cls):
    _CATALOG[cls.name] = cls
    return cls


def _rowsum(terms):
    total = terms[0].copy()
    for row in terms[1:]:
        total += row
    return total


def _rowprod(terms):
    total = terms[0].copy()
    for row in terms[1:]:
        total *= row
    return total


def _indices(x):
    """Column of 1-based coordinate indices matching ``x``'s rows."""
    return np.arange(1, x.shape[0] + 1, dtype=float)[:, None]


# -- arbitrary dimensionality ------------------------------------------------


@register
class Ackley(BenchmarkFunction):
    name = "Ackley"

    def _evaluate(self, x):
        a, b, c = (self.parameters[k] for k in "abc")
        n = x.shape[0]
        mean_sq = _rowsum(x * x) / n
        mean_cos = _rowsum(np.cos(c * x)) / n
        # grouped so that both brackets are exactly 0 at the origin
        return (a - a * np.exp(-b * np.sqrt(mean_sq))) + (math.e - np.exp(mean_cos))


@register
class DeJong3(BenchmarkFunction):
    """Step function: the sum of the integer parts of the coordinates."""

    name = "DeJong3"

    def _evaluate(self, x):
        return _rowsum(np.floor(x))


@register
class Griewank(BenchmarkFunction):
    name = "Griewank"

    def _evaluate(self, x):
        return 1.0 + _rowsum(x * x / 4000.0) - _rowprod(np.cos(x / np.sqrt(_indices(x))))


@register
class Hyperellipsoid(BenchmarkFunction):
    """Axis-parallel hyper-ellipsoid, sum of i * x_i^2."""

    name = "Hyperellipsoid"

    def _evaluate(self, x):
        return _rowsum(_indices(x) * x * x)


@register
class Hypersphere(BenchmarkFunction):
    name = "Hypersphere"

    def _evaluate(self, x):
        return _rowsum(x * x)


@register
class Michalewicz(BenchmarkFunction):
    name = "Michalewicz"

    def _evaluate(self, x):
        m = self.parameters["m"]
        steep = np.power(np.sin(_indices(x) * x * x / math.pi), 2.0 * m)
        return -_rowsum(np.sin(x) * steep)


@register
class Rastrigin(BenchmarkFunction):
    name = "Rastrigin"

    def _evaluate(self, x):
        a = self.parameters["a"]
        return a * x.shape[0] + _rowsum(x * x - a * np.cos(2.0 * math.pi * x))


@register
class Rosenbrock(BenchmarkFunction):
    name = "Rosenbrock"
    min_dimensions = 2

    def _evaluate(self, x):
        head, tail = x[:-1], x[1:]
        return _rowsum(100.0 * (tail - head * head) ** 2 + (1.0 - head) ** 2)


@register
class Schwefel(BenchmarkFunction):
    name = "Schwefel"

    def _evaluate(self, x):
        return -_rowsum(x * np.sin(np.sqrt(np.abs(x))))


@register
class StyblinskiTang(BenchmarkFunction):
    name = "StyblinskiTang"

    def _evaluate(self, x):
        sq = x * x
        return 0.5 * _rowsum(sq * sq - 16.0 * sq + 5.0 * x)


# -- two-dimensional ---------------------------------------------------------

_FOXHOLES = np.array([-32.0, -16.0, 0.0, 16.0, 32.0])


@register
class DeJong5(BenchmarkFunction):
    """Shekel's foxholes on the 5x5 grid {-32, -16, 0, 16, 32}^2."""

    name = "DeJong5"

    def _evaluate(self, x):
        acc = np.zeros(x.shape[1])
        for j in range(25):
            a1, a2 = _FOXHOLES[j % 5], _FOXHOLES[j // 5]
            acc += 1.0 / ((j + 1) + (x[0] - a1) ** 6 + (x[1] - a2) ** 6)
        return 1.0 / (0.002 + acc)


@register
class Easom(BenchmarkFunction):
    name = "Easom"

    def _evaluate(self, x):
        x1, x2 = x
        dist = (x1 - math.pi) ** 2 + (x2 - math.pi) ** 2
        return -np.cos(x1) * np.cos(x2) * np.exp(-dist)


@register
class EggHolder(BenchmarkFunction):
    name = "EggHolder"

    def _evaluate(self, x):
        x1, x2 = x
        return -(x2 + 47.0) * np.sin(np.sqrt(np.abs(x1 / 2.0 + x2 + 47.0))) - x1 * np.sin(
            np.sqrt(np.abs(x1 - (x2 + 47.0)))
        )


def _goldstein_price(x1, x2):
    s = x1 + x2 + 1.0
    d = 2.0 * x1 - 3.0 * x2
    first = 1.0 + s * s * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 + 6.0 * x1 * x2
                           + 3.0 * x2 * x2)
    second = 30.0 + d * d * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 - 36.0 * x1 * x2
                             + 27.0 * x2 * x2)
    return first * second


@register
class GoldsteinPrice(BenchmarkFunction):
    name = "GoldsteinPrice"

    def _evaluate(self, x):
        return _goldstein_price(x[0], x[1])


@register
class Keane(BenchmarkFunction):
    name = "Keane"

    def _evaluate(self, x):
        x1, x2 = x
        num = np.sin(x1 - x2) ** 2 * np.sin(x1 + x2) ** 2
        r = np.sqrt(x1 * x1 + x2 * x2)
        # the quotient tends to 0 at the origin
        safe = np.where(r > 0.0, r, 1.0)
        return np.where(r > 0.0, -num / safe, 0.0)


@register
class MartinGaddy(BenchmarkFunction):
    name = "MartinGaddy"

    def _evaluate(self, x):
        x1, x2 = x
        return (x1 - x2) ** 2 + ((x1 + x2 - 10.0) / 3.0) ** 2


@register
class McCormick(BenchmarkFunction):
    name = "McCormick"

    def _evaluate(self, x):
        x1, x2 = x
        return np.sin(x1 + x2) + (x1 - x2) ** 2 - 1.5 * x1 + 2.5 * x2 + 1.0


@register
class PichenyGoldsteinPrice(BenchmarkFunction):
    """Goldstein-Price rescaled to the unit square and log-standardised."""

    name = "PichenyGoldsteinPrice"

    def _evaluate(self, x):
        gp = _goldstein_price(4.0 * x[0] - 2.0, 4.0 * x[1] - 2.0)
        return (np.log(gp) - 8.693) / 2.427


@register
class Rana(BenchmarkFunction):
    name = "Rana"

    def _evaluate(self, x):
        x1, x2 = x
        t1 = np.sqrt(np.abs(x2 + 1.0 - x1))
        t2 = np.sqrt(np.abs(x1 + x2 + 1.0))
        return x1 * np.sin(t1) * np.cos(t2) + (x2 + 1.0) * np.cos(t1) * np.sin(t2)


@register
class SchafferN2(BenchmarkFunction):
    name = "SchafferN2"

    def _evaluate(self, x):
        x1, x2 = x
        sq1, sq2 = x1 * x1, x2 * x2
        return 0.5 + (np.sin(sq1 - sq2) ** 2 - 0.5) / (1.0 + 0.001 * (sq1 + sq2)) ** 2


# -- catalog access ----------------------------------------------------------


def catalog_list() -> list[str]:
    """Names of every shipped function, sorted."""
    return sorted(_CATALOG)


def get_function_class(name: str) -> type[BenchmarkFunction]:
    try:
        return _CATALOG[name]
    except KeyError:
        pass
    folded = {k.lower(): v for k, v in _CATALOG.items()}
    try:
        return folded[name.lower()]
    except KeyError:
        raise UnknownFunctionError(f"unknown benchmark function {name!r}") from None


def instantiate(
    name: str,
    n_dimensions: int | None = None,
    parameters: dict | None = None,
    opposite: bool = False,
) -> BenchmarkFunction:
    """Create a catalog function by name, e.g. ``instantiate("Schwefel", 4)``."""
    cls = get_function_class(name)
    return cls(n_dimensions, opposite, **(parameters or {}))
