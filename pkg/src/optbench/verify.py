"""Sanity test for registered optima.

A putative minimum passes when no point sampled uniformly inside a small
ball around it improves on the registered value by more than ``epsilon``.
Maxima are checked as minima of the opposite function; saddle points are
not checked.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .core import BenchmarkFunction, Optimum
from .exceptions import DimensionMismatchError

DEFAULT_EPSILON = 1e-6
DEFAULT_N_SAMPLES = 10_000
# radius as a fraction of the mean axis extent of the suggested bounds
DEFAULT_RELATIVE_RADIUS = 1e-4


@dataclass(frozen=True)
class VerifierConfig:
    epsilon: float = DEFAULT_EPSILON
    radius: float | None = None  # None: relative to the suggested bounds
    n_samples: int = DEFAULT_N_SAMPLES
    seed: int = 0

    def __post_init__(self):
        if not (math.isfinite(self.epsilon) and self.epsilon > 0):
            raise ValueError(f"epsilon must be finite and positive, got {self.epsilon!r}")
        if self.radius is not None and not (math.isfinite(self.radius) and self.radius > 0):
            raise ValueError(f"radius must be finite and positive, got {self.radius!r}")
        if isinstance(self.n_samples, bool) or not isinstance(self.n_samples, int) or self.n_samples < 1:
            raise ValueError(f"n_samples must be a positive integer, got {self.n_samples!r}")

    def radius_for(self, func: BenchmarkFunction) -> float:
        if self.radius is not None:
            return self.radius
        lower, upper = func.suggested_bounds()
        return DEFAULT_RELATIVE_RADIUS * float(np.mean(upper - lower))


@dataclass(frozen=True)
class Violation:
    point: tuple[float, ...]
    value: float
    improvement: float


@dataclass(frozen=True)
class VerificationReport:
    function: str
    n_dimensions: int
    optimum: Optimum
    passed: bool
    min_sampled_value: float
    samples_used: int
    worst_violation: Violation | None = None
    radius: float = field(default=0.0)

    def to_dict(self) -> dict:
        wv = self.worst_violation
        return {
            "function": self.function,
            "dimension": self.n_dimensions,
            "kind": self.optimum.kind,
            "position": list(self.optimum.position),
            "value": self.optimum.value,
            "passed": self.passed,
            "min_sampled_value": self.min_sampled_value,
            "samples_used": self.samples_used,
            "radius": self.radius,
            "worst_violation": None
            if wv is None
            else {"point": list(wv.point), "value": wv.value, "improvement": wv.improvement},
        }


def sample_ball(center, radius: float, n_samples: int, seed: int, bounds=None) -> np.ndarray:
    """Uniform samples in the closed ball, projected onto ``bounds`` if given.

    Directions are normalised Gaussian vectors and radii are scaled by
    ``u ** (1/N)``, which gives a uniform density over the ball volume.
    """
    center = np.asarray(center, dtype=float)
    n = center.size
    rng = np.random.default_rng(seed)
    directions = rng.standard_normal((n_samples, n))
    norms = np.linalg.norm(directions, axis=1, keepdims=True)
    # a zero draw has probability zero, but keep the point at the center then
    directions = np.divide(directions, norms, out=np.zeros_like(directions), where=norms > 0)
    radii = radius * rng.random((n_samples, 1)) ** (1.0 / n)
    points = center + directions * radii
    if bounds is not None:
        lower, upper = bounds
        points = np.clip(points, lower, upper)
    return points


def verify_optimum(
    func: BenchmarkFunction, optimum: Optimum, config: VerifierConfig | None = None
) -> VerificationReport:
    """Check that no sample near ``optimum`` beats it by more than epsilon."""
    config = config or VerifierConfig()
    if len(optimum.position) != func.n_dimensions:
        raise DimensionMismatchError(
            f"optimum has {len(optimum.position)} coordinates, function has {func.n_dimensions}"
        )
    if optimum.kind == "saddle":
        raise ValueError("saddle points cannot be verified by ball sampling")
    target, checked = func, optimum
    if optimum.kind == "maximum":
        target, checked = func.negated(), optimum.negated("minimum")

    radius = config.radius_for(func)
    points = sample_ball(
        checked.position, radius, config.n_samples, config.seed, target.suggested_bounds()
    )
    values = target.evaluate_many(points)
    i = int(np.argmin(values))
    lowest = float(values[i])
    passed = lowest >= checked.value - config.epsilon
    worst = None
    if not passed:
        worst = Violation(tuple(points[i].tolist()), lowest, checked.value - lowest)
    return VerificationReport(
        function=func.name,
        n_dimensions=func.n_dimensions,
        optimum=optimum,
        passed=passed,
        min_sampled_value=lowest,
        samples_used=config.n_samples,
        worst_violation=worst,
        radius=radius,
    )


def verify_all(
    catalog=None,
    dimensions=(2, 3, 4),
    config: VerifierConfig | None = None,
) -> dict[str, list[VerificationReport]]:
    """Verify every registered minimum and maximum of every function.

    ``catalog`` is an iterable of zero-argument-compatible function classes
    or of callables ``factory(n_dimensions) -> BenchmarkFunction``; by
    default the shipped catalog. Arbitrary-dimension functions are checked at
    each of ``dimensions`` plus every dimension that has its own entries in
    the metadata; fixed-dimension functions at their only dimension.
    """
    from .functions import catalog_list, get_function_class

    if catalog is None:
        catalog = [get_function_class(name) for name in catalog_list()]
    dimensions = list(dimensions)
    reports: dict[str, list[VerificationReport]] = {}
    if not dimensions:
        return reports
    for factory in catalog:
        base = factory()
        md = base.metadata
        if md.dimensionality.is_fixed:
            dims = [md.dimensionality.value]
        else:
            keyed = {int(k) for group in md.optima.values() for k in group if k != "*"}
            dims = sorted(
                n for n in set(dimensions) | keyed if n >= type(base).min_dimensions
            )
        found = []
        for n in dims:
            func = base if md.dimensionality.is_fixed else factory(n)
            for optimum in func.minima() + func.maxima():
                found.append(verify_optimum(func, optimum, config))
        reports[base.name] = found
    return reports


def all_passed(reports: dict[str, list[VerificationReport]]) -> bool:
    return all(r.passed for group in reports.values() for r in group)


def reports_to_json(reports: dict[str, list[VerificationReport]]) -> str:
    """One record per checked optimum, for CI consumption."""
    records = [r.to_dict() for group in reports.values() for r in group]
    return json.dumps({"passed": all(r["passed"] for r in records), "reports": records}, indent=2)
