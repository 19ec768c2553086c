"""Base class and value types shared by every benchmark function."""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import ClassVar, Mapping, Union

import numpy as np

from .exceptions import (
    DimensionMismatchError,
    DimensionNotAllowedError,
    NoKnownOptimumError,
    NonFiniteInputError,
    UnknownParameterError,
)
from .metadata import FunctionMetadata, builtin_metadata, optima_for_dimension

DimensionKey = Union[int, str]


@dataclass(frozen=True)
class Optimum:
    """A registered minimum, maximum or saddle point at a given dimensionality."""

    kind: str
    position: tuple[float, ...]
    value: float
    dimension_key: DimensionKey

    def __post_init__(self):
        object.__setattr__(self, "position", tuple(float(c) for c in self.position))
        object.__setattr__(self, "value", float(self.value))

    def negated(self, kind: str) -> "Optimum":
        return Optimum(kind, self.position, -self.value, self.dimension_key)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "position": list(self.position),
            "value": self.value,
            "dimension_key": self.dimension_key,
        }


@dataclass(frozen=True, eq=False)
class Bounds:
    """A search box. Unpacks as ``lower, upper``."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.array(self.lower, dtype=float).reshape(-1)
        upper = np.array(self.upper, dtype=float).reshape(-1)
        if lower.shape != upper.shape:
            raise ValueError("lower and upper bounds differ in length")
        if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
            raise ValueError("bounds must be finite")
        if not np.all(lower < upper):
            raise ValueError(f"invalid bounds: need lower < upper, got {lower} and {upper}")
        lower.flags.writeable = False
        upper.flags.writeable = False
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def from_scalars(cls, lower: float, upper: float, n: int) -> "Bounds":
        return cls(np.full(n, float(lower)), np.full(n, float(upper)))

    @property
    def n_dimensions(self) -> int:
        return self.lower.size

    def __iter__(self):
        return iter((self.lower, self.upper))

    def __eq__(self, other):
        if not isinstance(other, Bounds):
            return NotImplemented
        return np.array_equal(self.lower, other.lower) and np.array_equal(
            self.upper, other.upper
        )

    def contains(self, points) -> np.ndarray:
        pts = np.asarray(points, dtype=float)
        return np.all((pts >= self.lower) & (pts <= self.upper), axis=-1)

    def __repr__(self):
        return f"Bounds(lower={self.lower.tolist()}, upper={self.upper.tolist()})"


@dataclass(frozen=True)
class FunctionDescription:
    name: str
    description: str
    definition_latex: str
    reference_bibtex: str


class BenchmarkFunction:
    """A configured benchmark function.

    Subclasses set ``name`` (matching their metadata document) and implement
    ``_evaluate``, which receives coordinates laid out as an array of shape
    ``(n_dimensions, n_points)`` and returns ``n_points`` values.

    Instances are immutable. Calling an instance evaluates it at one point::

        >>> f = Schwefel(n_dimensions=4)
        >>> f([25, -34.6, -112.231, 242])
        -129.38197657025287
    """

    name: ClassVar[str]
    min_dimensions: ClassVar[int] = 1

    __slots__ = ("_n", "_opposite", "_parameters", "_metadata")

    def __init__(
        self,
        n_dimensions: int | None = None,
        opposite: bool = False,
        *,
        metadata: FunctionMetadata | None = None,
        **parameters: float,
    ):
        md = metadata if metadata is not None else builtin_metadata(self.name)
        dims = md.dimensionality
        if dims.is_fixed:
            if n_dimensions is not None:
                raise DimensionNotAllowedError(
                    f"{self.name} is only defined for {dims.value} dimensions; "
                    "n_dimensions is not accepted"
                )
            n = dims.value
        else:
            n = dims.value if n_dimensions is None else n_dimensions
            if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
                raise DimensionNotAllowedError(
                    f"n_dimensions must be a positive integer, got {n_dimensions!r}"
                )
            if n < self.min_dimensions:
                raise DimensionNotAllowedError(
                    f"{self.name} needs at least {self.min_dimensions} dimensions"
                )
        defaults = md.parameter_defaults
        unknown = set(parameters) - set(defaults)
        if unknown:
            raise UnknownParameterError(
                f"{self.name} has no parameter(s) {sorted(unknown)}; "
                f"known: {sorted(defaults)}"
            )
        values = dict(defaults)
        for key, val in parameters.items():
            val = float(val)
            if not math.isfinite(val):
                raise NonFiniteInputError(f"parameter {key} must be finite")
            values[key] = val
        self._n = int(n)
        self._opposite = bool(opposite)
        self._parameters = MappingProxyType(values)
        self._metadata = md

    def __setattr__(self, key, value):
        if hasattr(self, "_metadata"):
            raise AttributeError(f"{type(self).__name__} instances are immutable")
        super().__setattr__(key, value)

    def _evaluate(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    # -- evaluation ---------------------------------------------------------

    def __call__(self, point) -> float:
        return self.evaluate(point)

    def evaluate(self, point) -> float:
        x = np.asarray(point, dtype=float)
        if x.ndim != 1 or x.size != self._n:
            raise DimensionMismatchError(
                f"{self.name} has {self._n} dimensions, got a point of shape {x.shape}"
            )
        if not np.all(np.isfinite(x)):
            raise NonFiniteInputError(f"non-finite coordinate in {x.tolist()}")
        value = float(self._evaluate(x.reshape(self._n, 1))[0])
        return -value if self._opposite else value

    def evaluate_many(self, points) -> np.ndarray:
        """Evaluate an ``(m, n_dimensions)`` array of points at once.

        Gives bit-identical results to calling ``evaluate`` on each row.
        """
        x = np.asarray(points, dtype=float)
        if x.ndim != 2 or x.shape[1] != self._n:
            raise DimensionMismatchError(
                f"expected points of shape (m, {self._n}), got {x.shape}"
            )
        if not np.all(np.isfinite(x)):
            raise NonFiniteInputError("non-finite coordinate in points")
        values = np.asarray(self._evaluate(np.ascontiguousarray(x.T)), dtype=float)
        return -values if self._opposite else values

    # -- basic information --------------------------------------------------

    @property
    def n_dimensions(self) -> int:
        return self._n

    @property
    def opposite(self) -> bool:
        return self._opposite

    @property
    def parameters(self) -> Mapping[str, float]:
        return self._parameters

    @property
    def metadata(self) -> FunctionMetadata:
        return self._metadata

    def negated(self) -> "BenchmarkFunction":
        """The same function with the opposite flag flipped."""
        n = None if self._metadata.dimensionality.is_fixed else self._n
        return type(self)(
            n, not self._opposite, metadata=self._metadata, **self._parameters
        )

    def suggested_bounds(self) -> Bounds:
        lower, upper = self._metadata.bounds_for(self._n)
        return Bounds(lower, upper)

    def description(self) -> str:
        return self._metadata.description

    def definition(self) -> str:
        return self._metadata.definition_latex

    def reference(self) -> str:
        return self._metadata.reference_bibtex

    def describe(self) -> FunctionDescription:
        md = self._metadata
        return FunctionDescription(
            md.name, md.description, md.definition_latex, md.reference_bibtex
        )

    # -- optima ---------------------------------------------------------------

    def _registered(self, kind: str) -> list[Optimum]:
        # optima are only known for the default parameter values
        if dict(self._parameters) != self._metadata.parameter_defaults:
            return []
        return optima_for_dimension(self._metadata, kind, self._n)

    def minima(self) -> list[Optimum]:
        if self._opposite:
            return [o.negated("minimum") for o in self._registered("maximum")]
        return self._registered("minimum")

    def maxima(self) -> list[Optimum]:
        if self._opposite:
            return [o.negated("maximum") for o in self._registered("minimum")]
        return self._registered("maximum")

    def saddle_points(self) -> list[Optimum]:
        saddles = self._registered("saddle")
        if self._opposite:
            return [o.negated("saddle") for o in saddles]
        return saddles

    def n_minima(self) -> int:
        return len(self.minima())

    def minimum(self) -> Optimum:
        """Best known minimum; the first listed wins ties."""
        found = self.minima()
        if not found:
            raise NoKnownOptimumError(
                f"no known minimum for {self.name} in {self._n} dimensions"
            )
        return min(found, key=lambda o: o.value)

    def maximum(self) -> Optimum:
        found = self.maxima()
        if not found:
            raise NoKnownOptimumError(
                f"no known maximum for {self.name} in {self._n} dimensions"
            )
        best = found[0]
        for o in found[1:]:
            if o.value > best.value:
                best = o
        return best

    def show(self, output_path, *, as_heatmap=False, bounds=None, show_points=None,
             resolution=101):
        """Write an SVG plot of the function (see ``optbench.plotting.render``)."""
        from .plotting import render

        return render(
            self,
            bounds=bounds,
            resolution=resolution,
            as_heatmap=as_heatmap,
            points=show_points,
            output_path=output_path,
        )

    def __repr__(self):
        params = "".join(f", {k}={v!r}" for k, v in self._parameters.items())
        opp = ", opposite=True" if self._opposite else ""
        return f"{type(self).__name__}(n_dimensions={self._n}{params}{opp})"
