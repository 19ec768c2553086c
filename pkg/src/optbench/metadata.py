"""Loading, expansion and validation of per-function metadata documents.

Each benchmark function ships a JSON document in ``functions_info/`` named
after the lowercased function name. Optima are grouped by kind and then by
dimension key: a decimal integer string for optima that only hold at that
dimensionality, or ``"*"`` for optima whose per-coordinate position does not
depend on the number of dimensions. A ``"*"`` record stores one scalar that is
replicated ``n`` times; its value is either constant or scales linearly with
``n``.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any, Callable, Mapping, Sequence

from .exceptions import DimensionNotAllowedError, MetadataError

WILDCARD = "*"

# JSON group name -> optimum kind
KIND_GROUPS = {"minima": "minimum", "maxima": "maximum", "saddle_points": "saddle"}
GROUP_OF_KIND = {kind: group for group, kind in KIND_GROUPS.items()}

VALUE_MODES = ("constant", "linear_in_n")

_TOP_LEVEL_FIELDS = {
    "name",
    "description",
    "definition_latex",
    "reference_bibtex",
    "dimensionality",
    "parameters",
    "suggested_bounds",
    "optima",
}
_RECORD_FIELDS = {"position", "position_scalar", "value", "value_mode"}

# relative tolerance for |f(position) - value| <= tol * max(1, |value|)
VALUE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Dimensionality:
    mode: str  # "fixed" or "arbitrary"
    value: int  # the fixed dimension, or the default one in arbitrary mode

    @property
    def is_fixed(self) -> bool:
        return self.mode == "fixed"

    def allows(self, n: int) -> bool:
        return n == self.value if self.is_fixed else n >= 1

    def to_dict(self) -> dict:
        if self.is_fixed:
            return {"mode": "fixed", "value": self.value}
        return {"mode": "arbitrary", "default": self.value}


@dataclass(frozen=True)
class Parameter:
    name: str
    default: float


@dataclass(frozen=True)
class OptimumRecord:
    """One optimum as stored in a metadata document.

    Integer-keyed records carry an explicit ``position``; wildcard records
    carry ``position_scalar`` instead.
    """

    value: float
    value_mode: str = "constant"
    position: tuple[float, ...] | None = None
    position_scalar: float | None = None

    def expand(self, n: int) -> tuple[tuple[float, ...], float]:
        if self.position is not None:
            return self.position, self.value
        value = self.value * n if self.value_mode == "linear_in_n" else self.value
        return (self.position_scalar,) * n, value

    def to_dict(self) -> dict:
        out: dict[str, Any] = {}
        if self.position is not None:
            out["position"] = list(self.position)
        else:
            out["position_scalar"] = self.position_scalar
        out["value_mode"] = self.value_mode
        out["value"] = self.value
        return out


@dataclass(frozen=True)
class FunctionMetadata:
    name: str
    dimensionality: Dimensionality
    suggested_bounds: tuple[Any, Any]  # scalars, or per-coordinate tuples
    description: str = ""
    definition_latex: str = ""
    reference_bibtex: str = ""
    parameters: tuple[Parameter, ...] = ()
    # group ("minima", ...) -> dimension key -> records, in file order
    optima: Mapping[str, Mapping[str, tuple[OptimumRecord, ...]]] = field(
        default_factory=dict
    )

    @property
    def parameter_defaults(self) -> dict[str, float]:
        return {p.name: p.default for p in self.parameters}

    def bounds_for(self, n: int) -> tuple[list[float], list[float]]:
        """Per-coordinate (lower, upper) lists for dimension ``n``."""
        lower, upper = self.suggested_bounds
        if isinstance(lower, tuple):
            return list(lower), list(upper)
        return [lower] * n, [upper] * n


def _is_real(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _parse_dimension_key(key) -> int | None:
    """Return the integer for a decimal key, None for the wildcard; raise otherwise."""
    if key == WILDCARD:
        return None
    if isinstance(key, str) and key.isdecimal() and not key.startswith("0"):
        return int(key)
    raise ValueError(f"bad dimension key {key!r}")


def _parse_record(raw, key_n, where, problems):
    if not isinstance(raw, Mapping):
        problems.append(f"{where}: record must be an object")
        return None
    extra = set(raw) - _RECORD_FIELDS
    if extra:
        warnings.warn(f"{where}: ignoring unknown fields {sorted(extra)}", stacklevel=4)
    value = raw.get("value")
    if not _is_real(value):
        problems.append(f"{where}: 'value' must be a real number")
        return None
    mode = raw.get("value_mode", "constant")
    if mode not in VALUE_MODES:
        problems.append(f"{where}: unknown value_mode {mode!r}")
        return None
    if key_n is None:
        scalar = raw.get("position_scalar")
        if "position" in raw or not _is_real(scalar):
            problems.append(f"{where}: wildcard records need a scalar 'position_scalar'")
            return None
        return OptimumRecord(float(value), mode, position_scalar=float(scalar))
    if mode != "constant":
        problems.append(f"{where}: value_mode must be 'constant' for an integer key")
        return None
    pos = raw.get("position")
    if not isinstance(pos, list) or not all(_is_real(c) for c in pos):
        problems.append(f"{where}: 'position' must be a list of reals")
        return None
    if len(pos) != key_n:
        problems.append(f"{where}: position has {len(pos)} coordinates, key says {key_n}")
        return None
    return OptimumRecord(float(value), mode, position=tuple(float(c) for c in pos))


def _parse_bounds(raw, dims, problems):
    if not isinstance(raw, Mapping) or "lower" not in raw or "upper" not in raw:
        problems.append("suggested_bounds: needs 'lower' and 'upper'")
        return None
    lower, upper = raw["lower"], raw["upper"]
    if _is_real(lower) and _is_real(upper):
        return float(lower), float(upper)
    if isinstance(lower, list) and isinstance(upper, list):
        if dims is None or not dims.is_fixed:
            problems.append("suggested_bounds: per-coordinate bounds need fixed dimensionality")
            return None
        if len(lower) != dims.value or len(upper) != dims.value:
            problems.append("suggested_bounds: per-coordinate bounds must match the fixed dimension")
            return None
        if not all(_is_real(v) for v in lower + upper):
            problems.append("suggested_bounds: bounds must be real numbers")
            return None
        return tuple(float(v) for v in lower), tuple(float(v) for v in upper)
    problems.append("suggested_bounds: 'lower'/'upper' must both be reals or both lists")
    return None


def _parse_dimensionality(raw, problems):
    if not isinstance(raw, Mapping):
        problems.append("dimensionality: must be an object")
        return None
    mode = raw.get("mode")
    slot = {"fixed": "value", "arbitrary": "default"}.get(mode)
    if slot is None:
        problems.append(f"dimensionality: unknown mode {mode!r}")
        return None
    n = raw.get(slot)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        problems.append(f"dimensionality: '{slot}' must be a positive integer")
        return None
    return Dimensionality(mode, n)


def parse_document(doc: Mapping) -> tuple[FunctionMetadata | None, list[str]]:
    """Lenient parse: returns the best-effort record and every schema problem.

    Malformed optimum records are dropped from the record (and reported).
    The record is None only when a mandatory top-level field is unusable.
    """
    problems: list[str] = []
    if not isinstance(doc, Mapping):
        return None, ["document must be a JSON object"]
    extra = set(doc) - _TOP_LEVEL_FIELDS
    if extra:
        warnings.warn(f"ignoring unknown metadata fields {sorted(extra)}", stacklevel=3)

    name = doc.get("name")
    if not isinstance(name, str) or not name:
        problems.append("missing mandatory field 'name'")
    strings = {}
    for key in ("description", "definition_latex", "reference_bibtex"):
        value = doc.get(key, "")
        if not isinstance(value, str):
            problems.append(f"'{key}' must be a string")
            value = ""
        strings[key] = value

    if "dimensionality" not in doc:
        problems.append("missing mandatory field 'dimensionality'")
        dims = None
    else:
        dims = _parse_dimensionality(doc["dimensionality"], problems)

    params = []
    raw_params = doc.get("parameters", [])
    if not isinstance(raw_params, list):
        problems.append("'parameters' must be a list")
        raw_params = []
    for i, p in enumerate(raw_params):
        if (
            not isinstance(p, Mapping)
            or not isinstance(p.get("name"), str)
            or not _is_real(p.get("default"))
        ):
            problems.append(f"parameters[{i}]: needs a string 'name' and a real 'default'")
            continue
        params.append(Parameter(p["name"], float(p["default"])))

    if "suggested_bounds" not in doc:
        problems.append("missing mandatory field 'suggested_bounds'")
        bounds = None
    else:
        bounds = _parse_bounds(doc["suggested_bounds"], dims, problems)

    optima: dict[str, dict[str, tuple[OptimumRecord, ...]]] = {}
    raw_optima = doc.get("optima", {})
    if not isinstance(raw_optima, Mapping):
        problems.append("'optima' must be an object")
        raw_optima = {}
    for group, by_key in raw_optima.items():
        if group not in KIND_GROUPS:
            problems.append(f"optima: unknown group {group!r}")
            continue
        if not isinstance(by_key, Mapping):
            problems.append(f"optima.{group}: must be an object")
            continue
        parsed_group = {}
        for key, records in by_key.items():
            where = f"optima.{group}[{key!r}]"
            try:
                key_n = _parse_dimension_key(key)
            except ValueError as exc:
                problems.append(f"{where}: {exc}")
                continue
            if dims is not None and dims.is_fixed and key_n != dims.value:
                problems.append(f"{where}: fixed-dimension functions only use key {dims.value}")
                continue
            if not isinstance(records, list):
                problems.append(f"{where}: must be a list")
                continue
            parsed = [
                _parse_record(r, key_n, f"{where}[{i}]", problems)
                for i, r in enumerate(records)
            ]
            parsed_group[key] = tuple(r for r in parsed if r is not None)
        optima[group] = parsed_group

    if problems and (not isinstance(name, str) or not name or dims is None or bounds is None):
        return None, problems
    md = FunctionMetadata(
        name=name,
        dimensionality=dims,
        suggested_bounds=bounds,
        parameters=tuple(params),
        optima=optima,
        **strings,
    )
    return md, problems


def load_metadata(source: Mapping | str | bytes) -> FunctionMetadata:
    """Load a metadata document given as a mapping or as JSON text.

    Raises MetadataError on a JSON syntax error or on any schema problem.
    """
    if isinstance(source, (str, bytes)):
        try:
            source = json.loads(source)
        except json.JSONDecodeError as exc:
            raise MetadataError(f"parse error: {exc}", [str(exc)]) from exc
    md, problems = parse_document(source)
    if problems:
        raise MetadataError("schema violation: " + "; ".join(problems), problems)
    return md


def load_metadata_file(path: str | Path) -> FunctionMetadata:
    return load_metadata(Path(path).read_text(encoding="utf-8"))


def dump_metadata(md: FunctionMetadata) -> dict:
    """Inverse of load_metadata: the document as a JSON-compatible dict."""
    lower, upper = md.suggested_bounds
    if isinstance(lower, tuple):
        lower, upper = list(lower), list(upper)
    return {
        "name": md.name,
        "description": md.description,
        "definition_latex": md.definition_latex,
        "reference_bibtex": md.reference_bibtex,
        "dimensionality": md.dimensionality.to_dict(),
        "parameters": [{"name": p.name, "default": p.default} for p in md.parameters],
        "suggested_bounds": {"lower": lower, "upper": upper},
        "optima": {
            group: {key: [r.to_dict() for r in records] for key, records in by_key.items()}
            for group, by_key in md.optima.items()
        },
    }


@lru_cache(maxsize=None)
def builtin_metadata(name: str) -> FunctionMetadata:
    """Metadata shipped with the package for catalog function ``name``."""
    res = resources.files("optbench") / "functions_info" / f"{name.lower()}.json"
    return load_metadata(res.read_text(encoding="utf-8"))


def optima_for_dimension(md: FunctionMetadata, kind: str, n: int) -> list:
    """All registered optima of ``kind`` that hold at dimension ``n``.

    Entries under key ``n`` and expanded wildcard entries are returned in
    file order. ``kind`` is "minimum", "maximum" or "saddle".
    """
    from .core import Optimum

    if kind not in GROUP_OF_KIND:
        raise ValueError(f"unknown optimum kind {kind!r}")
    if not md.dimensionality.allows(n):
        raise DimensionNotAllowedError(f"{md.name} is not defined for {n} dimensions")
    out = []
    for key, records in md.optima.get(GROUP_OF_KIND[kind], {}).items():
        if key != WILDCARD and int(key) != n:
            continue
        dim_key = WILDCARD if key == WILDCARD else n
        for rec in records:
            position, value = rec.expand(n)
            out.append(Optimum(kind, position, value, dim_key))
    return out


@dataclass(frozen=True)
class Violation:
    check: str
    detail: str

    def __str__(self):
        return f"[{self.check}] {self.detail}"


def _bibtex_ok(text: str) -> bool:
    text = text.strip()
    if not text.startswith("@") or "{" not in text:
        return False
    depth = 0
    for ch in text:
        depth += {"{": 1, "}": -1}.get(ch, 0)
        if depth < 0:
            return False
    return depth == 0


def _default_factory(md: FunctionMetadata, n: int):
    from .functions import get_function_class

    cls = get_function_class(md.name)
    return cls(None if md.dimensionality.is_fixed else n, metadata=md)


def validate_metadata(
    source: FunctionMetadata | Mapping,
    factory: Callable[[FunctionMetadata, int], Callable] | None = None,
    wildcard_dimensions: Sequence[int] = (2, 3, 4, 5),
) -> list[Violation]:
    """Run every sanity check on a metadata record or raw document.

    ``factory(metadata, n)`` must return a callable evaluating the function
    at dimension ``n``; by default the catalog kernel registered under the
    document's name is used. Returns an empty list when everything holds.
    """
    if isinstance(source, FunctionMetadata):
        md, found = source, []
    else:
        md, problems = parse_document(source)
        found = [Violation("schema", p) for p in problems]
        if md is None:
            return found
    factory = factory or _default_factory

    lower, upper = md.suggested_bounds
    lows = lower if isinstance(lower, tuple) else (lower,)
    ups = upper if isinstance(upper, tuple) else (upper,)
    for i, (lo, hi) in enumerate(zip(lows, ups)):
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            found.append(Violation("bounds-order", f"coordinate {i}: lower={lo} upper={hi}"))

    if md.reference_bibtex and not _bibtex_ok(md.reference_bibtex):
        found.append(Violation("bibtex", "reference is not a well-delimited BibTeX entry"))

    dims = md.dimensionality
    min_n = 1
    try:
        from .functions import get_function_class

        min_n = get_function_class(md.name).min_dimensions
    except LookupError:
        pass
    evaluators = {}
    for group, by_key in md.optima.items():
        kind = KIND_GROUPS[group]
        for key, records in by_key.items():
            if key == WILDCARD:
                checked = [n for n in wildcard_dimensions if dims.allows(n) and n >= min_n]
            else:
                checked = [int(key)]
            for n in checked:
                if n not in evaluators:
                    try:
                        evaluators[n] = factory(md, n)
                    except Exception as exc:  # reported, never raised
                        evaluators[n] = None
                        found.append(Violation("evaluator", f"N={n}: {exc}"))
                f = evaluators[n]
                lo, hi = md.bounds_for(n)
                for i, rec in enumerate(records):
                    where = f"{group}[{key!r}][{i}] at N={n}"
                    position, value = rec.expand(n)
                    if not all(a <= c <= b for a, c, b in zip(lo, position, hi)):
                        found.append(Violation("optimum-outside-bounds", where))
                    if f is None:
                        continue
                    actual = f(position)
                    if not abs(actual - value) <= VALUE_TOLERANCE * max(1.0, abs(value)):
                        found.append(
                            Violation(
                                "value-mismatch",
                                f"{where} ({kind}): registered {value!r}, evaluated {actual!r}",
                            )
                        )
    return found
