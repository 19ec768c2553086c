"""Grid and uniform random search baselines.

These are reference points for comparing optimisers, not optimisers
themselves: no adaptivity, no early stopping. Both return the sampled point
of lowest value; ties go to the first point in sampling order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import BenchmarkFunction, Bounds
from .exceptions import SearchBudgetError

DEFAULT_MAX_GRID_POINTS = 10**8
_CHUNK = 1 << 16


@dataclass(frozen=True, eq=False)
class SearchResult:
    best_point: np.ndarray
    best_value: float
    samples_evaluated: int
    seed: int | None = None
    # filled only when the search is asked to record its samples
    samples: np.ndarray | None = field(default=None, repr=False)
    values: np.ndarray | None = field(default=None, repr=False)

    def __eq__(self, other):
        if not isinstance(other, SearchResult):
            return NotImplemented
        return (
            np.array_equal(self.best_point, other.best_point)
            and self.best_value == other.best_value
            and self.samples_evaluated == other.samples_evaluated
            and self.seed == other.seed
        )

    def to_dict(self) -> dict:
        return {
            "best_point": self.best_point.tolist(),
            "best_value": self.best_value,
            "samples_evaluated": self.samples_evaluated,
            "seed": self.seed,
        }


def _resolve_bounds(func: BenchmarkFunction, bounds) -> Bounds:
    if bounds is None:
        return func.suggested_bounds()
    if not isinstance(bounds, Bounds):
        bounds = Bounds(*bounds)
    if bounds.n_dimensions != func.n_dimensions:
        raise ValueError(
            f"bounds have {bounds.n_dimensions} coordinates, function has {func.n_dimensions}"
        )
    return bounds


def _positive_int(value, what):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 1:
        raise ValueError(f"{what} must be a positive integer, got {value!r}")
    return int(value)


class _Best:
    """Running argmin over chunks, keeping the first occurrence on ties."""

    def __init__(self):
        self.point = None
        self.value = np.inf

    def update(self, points, values):
        i = int(np.argmin(values))
        if self.point is None or values[i] < self.value:
            self.point, self.value = points[i].copy(), float(values[i])


def grid_axes(bounds: Bounds, n_edge_points: int) -> list[np.ndarray]:
    """Per-axis coordinates: ``n_edge_points + 1`` values including both ends."""
    return [np.linspace(lo, hi, n_edge_points + 1) for lo, hi in zip(*bounds)]


def grid_points(bounds: Bounds, n_edge_points: int, start: int = 0, stop: int | None = None):
    """Rows ``start:stop`` of the grid in row-major order (axis 0 slowest)."""
    axes = grid_axes(bounds, n_edge_points)
    k = n_edge_points + 1
    total = k ** len(axes)
    stop = total if stop is None else min(stop, total)
    idx = np.unravel_index(np.arange(start, stop), (k,) * len(axes))
    return np.column_stack([ax[i] for ax, i in zip(axes, idx)])


def minimum_grid_search(
    func: BenchmarkFunction,
    n_edge_points: int = 100,
    bounds=None,
    *,
    max_points: int = DEFAULT_MAX_GRID_POINTS,
    record: bool = False,
) -> SearchResult:
    """Evaluate ``(n_edge_points + 1) ** N`` grid points and return the best one.

    The grid spans ``bounds`` (the suggested bounds by default) with both
    endpoints included on every axis. Raises SearchBudgetError when the
    grid is larger than ``max_points``.
    """
    n_edge_points = _positive_int(n_edge_points, "n_edge_points")
    bounds = _resolve_bounds(func, bounds)
    total = (n_edge_points + 1) ** func.n_dimensions
    if total > max_points:
        raise SearchBudgetError(
            f"grid of {total} points exceeds the cap of {max_points}; "
            "lower n_edge_points or raise max_points"
        )
    best = _Best()
    kept_points, kept_values = [], []
    for start in range(0, total, _CHUNK):
        pts = grid_points(bounds, n_edge_points, start, start + _CHUNK)
        vals = func.evaluate_many(pts)
        best.update(pts, vals)
        if record:
            kept_points.append(pts)
            kept_values.append(vals)
    return SearchResult(
        best.point,
        best.value,
        total,
        samples=np.concatenate(kept_points) if record else None,
        values=np.concatenate(kept_values) if record else None,
    )


def random_samples(bounds: Bounds, n_samples: int, seed: int) -> np.ndarray:
    """The exact sample sequence used by ``minimum_random_search``.

    Points are drawn with numpy's PCG64 generator, row by row, uniform on
    ``[lower, upper)`` per coordinate.
    """
    rng = np.random.default_rng(seed)
    return rng.uniform(bounds.lower, bounds.upper, size=(n_samples, bounds.n_dimensions))


def minimum_random_search(
    func: BenchmarkFunction,
    n_samples: int = 1000,
    bounds=None,
    seed: int | None = None,
    *,
    record: bool = False,
) -> SearchResult:
    """Evaluate ``n_samples`` i.i.d. uniform points and return the best one.

    Without a seed, one is drawn from system entropy and stored in the
    result so the run can be reproduced.
    """
    n_samples = _positive_int(n_samples, "n_samples")
    bounds = _resolve_bounds(func, bounds)
    if seed is None:
        seed = int(np.random.SeedSequence().entropy % (1 << 63))
    rng = np.random.default_rng(seed)
    best = _Best()
    kept_points, kept_values = [], []
    done = 0
    while done < n_samples:
        m = min(_CHUNK, n_samples - done)
        # chunked draws consume the stream exactly like one big draw
        pts = rng.uniform(bounds.lower, bounds.upper, size=(m, func.n_dimensions))
        vals = func.evaluate_many(pts)
        best.update(pts, vals)
        if record:
            kept_points.append(pts)
            kept_values.append(vals)
        done += m
    return SearchResult(
        best.point,
        best.value,
        n_samples,
        seed=seed,
        samples=np.concatenate(kept_points) if record else None,
        values=np.concatenate(kept_values) if record else None,
    )
