"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 data or computation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .exceptions import (
    BenchmarkError,
    DimensionMismatchError,
    DimensionNotAllowedError,
    MetadataError,
    NonFiniteInputError,
    SearchBudgetError,
    UnknownFunctionError,
    UnknownParameterError,
    UnsupportedDimensionError,
)
from .functions import catalog_list, get_function_class
from .metadata import builtin_metadata, dump_metadata

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 3

_USAGE_ERRORS = (
    UnknownFunctionError,
    DimensionNotAllowedError,
    UnknownParameterError,
    DimensionMismatchError,
    NonFiniteInputError,
    UnsupportedDimensionError,
    SearchBudgetError,
)


class UsageError(Exception):
    pass


def _reals(text: str) -> list[float]:
    try:
        values = [float(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated reals, got {text!r}") from None
    return values


def _make(args):
    cls = get_function_class(args.name)
    params = {}
    for item in args.param or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects NAME=VALUE, got {item!r}")
        try:
            params[key] = float(value)
        except ValueError:
            raise UsageError(f"--param {key}: {value!r} is not a number") from None
    n = args.dimensions
    md = builtin_metadata(cls.name)
    if md.dimensionality.is_fixed and n == md.dimensionality.value:
        n = None  # the only allowed value; the library itself takes no n_dimensions
    return cls(n, args.opposite, **params)


def _bounds(args, func):
    if not getattr(args, "bounds", None):
        return None
    lo_hi = _reals(args.bounds)
    if len(lo_hi) != 2:
        raise UsageError("--bounds expects LO,HI")
    from .core import Bounds

    try:
        return Bounds.from_scalars(lo_hi[0], lo_hi[1], func.n_dimensions)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, human: str, machine) -> None:
    if args.machine:
        print(json.dumps(machine, indent=2))
    else:
        print(human)


# -- subcommands ---------------------------------------------------------------


def cmd_list(args):
    names = catalog_list()
    _emit(args, "\n".join(names), names)
    return EXIT_OK


def cmd_info(args):
    func = _make(args)
    md = func.metadata
    if args.machine:
        print(json.dumps(dump_metadata(md), indent=2))
        return EXIT_OK
    lower, upper = func.suggested_bounds()
    dims = md.dimensionality
    lines = [
        md.name,
        "",
        md.description,
        "",
        f"dimensionality: {'fixed, N=' if dims.is_fixed else 'arbitrary, default N='}{dims.value}",
        f"instance:       N={func.n_dimensions}" + (", opposite" if func.opposite else ""),
        f"parameters:     {dict(func.parameters) or 'none'}",
        f"bounds:         {lower.tolist()} .. {upper.tolist()}",
    ]
    for label, found in (("minima", func.minima()), ("maxima", func.maxima()),
                         ("saddle points", func.saddle_points())):
        lines.append(f"{label}: {len(found)}")
        for o in found:
            lines.append(f"  {o.value!r} at {list(o.position)}")
    lines += ["", "definition:", "  " + md.definition_latex, "", "reference:"]
    lines.append("  (none)" if not md.reference_bibtex else md.reference_bibtex)
    print("\n".join(lines))
    return EXIT_OK


def cmd_eval(args):
    func = _make(args)
    value = func(_reals(args.point))
    _emit(args, repr(value), {"function": func.name, "value": value})
    return EXIT_OK


def cmd_search(args):
    from .search import minimum_grid_search, minimum_random_search

    func = _make(args)
    bounds = _bounds(args, func)
    if args.method == "grid":
        result = minimum_grid_search(func, args.n_edge_points, bounds)
    else:
        result = minimum_random_search(func, args.n_samples, bounds, args.seed)
    human = (
        f"best value:  {result.best_value!r}\n"
        f"best point:  {result.best_point.tolist()}\n"
        f"evaluated:   {result.samples_evaluated}"
    )
    if result.seed is not None:
        human += f"\nseed:        {result.seed}"
    _emit(args, human, result.to_dict())
    return EXIT_OK


def cmd_verify(args):
    from .verify import VerifierConfig, all_passed, verify_all, verify_optimum

    try:
        config = VerifierConfig(args.epsilon, args.radius, args.n_samples, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.name is None:
        reports = verify_all(dimensions=args.all_dimensions, config=config)
    else:
        func = _make(args)
        found = func.minima() + func.maxima()
        reports = {func.name: [verify_optimum(func, o, config) for o in found]}
    records = [r for group in reports.values() for r in group]
    ok = all_passed(reports)
    if args.machine:
        print(json.dumps({"passed": ok, "reports": [r.to_dict() for r in records]}, indent=2))
    else:
        if not records:
            print("no registered optima to verify")
        for r in records:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status} {r.function} N={r.n_dimensions} {r.optimum.kind} {r.optimum.value!r}"
            if r.worst_violation is not None:
                wv = r.worst_violation
                line += f"  improved by {wv.improvement:.3g} at {list(wv.point)}"
            print(line)
        print(f"{sum(r.passed for r in records)}/{len(records)} optima passed "
              f"(epsilon={config.epsilon:g})")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_plot(args):
    from .plotting import read_points_csv, render, write_surface_grid

    func = _make(args)
    bounds = _bounds(args, func)
    if args.surface_grid:
        path = write_surface_grid(args.output, func, bounds, args.resolution)
        _emit(args, f"wrote {path}", {"path": str(path)})
        return EXIT_OK
    points = None
    if args.points:
        try:
            points = read_points_csv(args.points, func.n_dimensions)
        except ValueError as exc:
            raise UsageError(f"{args.points}: {exc}") from None
    result = render(func, bounds=bounds, resolution=args.resolution, as_heatmap=args.heatmap,
                    points=points, output_path=args.output)
    for w in result.warnings:
        print(f"warning: {w}", file=sys.stderr)
    _emit(args, f"wrote {result.path} ({result.n_markers} markers, {result.n_omitted} omitted)",
          {"path": str(result.path), "markers": result.n_markers, "omitted": result.n_omitted})
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="optbench",
        description="Benchmark functions for numerical optimisation.",
        epilog="Values starting with '-' need the --opt=VALUE form, e.g. -p=-1,2 or --bounds=-5,5.",
    )
    parser.add_argument("--machine", action="store_true", help="machine-readable (JSON) output")
    sub = parser.add_subparsers(dest="command", required=True)

    def function_args(p, name_required=True):
        if name_required:
            p.add_argument("name", help="function name, see 'optbench list'")
        p.add_argument("-d", "--dimensions", type=int, help="number of dimensions N")
        p.add_argument("--param", action="append", metavar="NAME=VALUE",
                       help="override a function parameter (repeatable)")
        p.add_argument("--opposite", action="store_true", help="use the negated function")
        p.add_argument("--machine", action="store_true", default=argparse.SUPPRESS,
                       help="machine-readable (JSON) output")

    p = sub.add_parser("list", help="list the available functions")
    p.add_argument("--machine", action="store_true", default=argparse.SUPPRESS)
    p.set_defaults(handler=cmd_list)

    p = sub.add_parser("info", help="show metadata of a function")
    function_args(p)
    p.set_defaults(handler=cmd_info)

    p = sub.add_parser("eval", help="evaluate a function at a point")
    function_args(p)
    p.add_argument("-p", "--point", required=True, help="comma-separated coordinates")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("search", help="run a baseline search")
    function_args(p)
    p.add_argument("--method", choices=("grid", "random"), default="random")
    p.add_argument("--n-edge-points", type=int, default=100)
    p.add_argument("--n-samples", type=int, default=1000)
    p.add_argument("--seed", type=int)
    p.add_argument("--bounds", help="LO,HI applied to every coordinate")
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("verify", help="check registered optima by ball sampling")
    p.add_argument("name", nargs="?", help="function name; omit to verify the whole catalog")
    function_args(p, name_required=False)
    p.add_argument("--epsilon", type=float, default=1e-6)
    p.add_argument("--radius", type=float, help="ball radius (default: relative to the bounds)")
    p.add_argument("--n-samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--all-dimensions", type=int, nargs="+", default=[2, 3, 4],
                   help="dimensions checked when verifying the whole catalog")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("plot", help="write an SVG plot (N=1 or N=2)")
    function_args(p)
    p.add_argument("--heatmap", action="store_true")
    p.add_argument("--bounds", help="LO,HI applied to every coordinate")
    p.add_argument("--points", help="CSV file of points to overlay")
    p.add_argument("--resolution", type=int, default=101)
    p.add_argument("--surface-grid", action="store_true",
                   help="write the value matrix as text instead of SVG")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=cmd_plot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.name is None and args.dimensions is not None:
        args.all_dimensions = [args.dimensions]
    try:
        return args.handler(args)
    except (UsageError, *_USAGE_ERRORS) as exc:
        print(f"optbench: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MetadataError, OSError) as exc:
        print(f"optbench: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except BenchmarkError as exc:
        print(f"optbench: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        # argument values rejected by the library (bad counts, bounds, ...)
        print(f"optbench: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
