"""Static SVG rendering of one- and two-dimensional functions.

Three views are available: a line plot for N=1, a heatmap for N=2 (one
``<rect class="cell">`` per sampled grid point), and an oblique wireframe for
N=2 standing in for a 3-D surface. Surfaces can also be exported as a plain
text matrix for external plotters.

Colour map: the value range is mapped linearly onto [0, 1] and then
piecewise-linearly through ``COLOR_ANCHORS`` (dark = low, light = high).
Every RGB channel is non-decreasing along the anchors, so colour order
follows value order even after rounding to 8 bits.
"""

from __future__ import annotations

import csv
import io
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from xml.sax.saxutils import escape

import numpy as np

from .core import BenchmarkFunction, Bounds
from .exceptions import UnsupportedDimensionError

DEFAULT_RESOLUTION = 101

COLOR_ANCHORS = (
    (0.0, (10, 10, 40)),
    (0.25, (30, 60, 120)),
    (0.5, (60, 150, 150)),
    (0.75, (150, 210, 160)),
    (1.0, (250, 240, 200)),
)

WIDTH, HEIGHT = 640, 560
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 70, 110, 40, 60


@dataclass(frozen=True)
class RenderResult:
    svg: str
    warnings: list[str]
    n_markers: int
    n_omitted: int
    path: Path | None = None


def color_for(t: float) -> tuple[int, int, int]:
    """RGB colour for a normalised value ``t`` in [0, 1]."""
    t = min(1.0, max(0.0, float(t)))
    for (t0, c0), (t1, c1) in zip(COLOR_ANCHORS, COLOR_ANCHORS[1:]):
        if t <= t1:
            w = (t - t0) / (t1 - t0)
            return tuple(int(round(a + w * (b - a))) for a, b in zip(c0, c1))
    return COLOR_ANCHORS[-1][1]


def luminance(rgb) -> float:
    r, g, b = rgb
    return 0.2126 * r + 0.7152 * g + 0.0722 * b


def _hex(rgb) -> str:
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _normaliser(values):
    lo, hi = float(np.min(values)), float(np.max(values))
    span = hi - lo
    if span == 0:
        return lo, hi, lambda v: 0.5
    return lo, hi, lambda v: (v - lo) / span


def sample_grid(func: BenchmarkFunction, bounds: Bounds, resolution: int):
    """Axis samples and the value matrix ``z[row=y, col=x]``."""
    xs = np.linspace(bounds.lower[0], bounds.upper[0], resolution)
    ys = np.linspace(bounds.lower[1], bounds.upper[1], resolution)
    gx, gy = np.meshgrid(xs, ys)
    z = func.evaluate_many(np.column_stack([gx.ravel(), gy.ravel()])).reshape(resolution, resolution)
    return xs, ys, z


def _check(func, bounds, resolution):
    if func.n_dimensions > 2:
        raise UnsupportedDimensionError(
            f"only 1- and 2-dimensional functions can be plotted, got N={func.n_dimensions}"
        )
    if isinstance(resolution, bool) or not isinstance(resolution, (int, np.integer)) or resolution < 2:
        raise ValueError(f"resolution must be an integer >= 2, got {resolution!r}")
    if bounds is None:
        return func.suggested_bounds()
    if not isinstance(bounds, Bounds):
        bounds = Bounds(*bounds)
    if bounds.n_dimensions != func.n_dimensions:
        raise ValueError("bounds dimensionality does not match the function")
    return bounds


def _split_points(points, bounds, n):
    if points is None:
        return np.empty((0, n)), []
    pts = np.asarray(points, dtype=float)
    if pts.size == 0:
        return np.empty((0, n)), []
    if pts.ndim == 1 and n == 1:
        pts = pts[:, None]
    if pts.ndim != 2 or pts.shape[1] != n:
        raise ValueError(f"overlay points must have {n} coordinates each")
    finite = np.all(np.isfinite(pts), axis=1)
    inside = finite & bounds.contains(np.where(np.isfinite(pts), pts, 0.0))
    warnings = [
        f"point {pts[i].tolist()} lies outside the plotted bounds and was omitted"
        for i in np.flatnonzero(~inside)
    ]
    return pts[inside], warnings


class _Canvas:
    def __init__(self, title):
        self.parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
            f'viewBox="0 0 {WIDTH} {HEIGHT}">',
            f"<title>{escape(title)}</title>",
            f'<rect class="background" x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
            f'<text x="{WIDTH / 2}" y="24" text-anchor="middle" font-family="sans-serif" '
            f'font-size="16">{escape(title)}</text>',
        ]

    def add(self, text):
        self.parts.append(text)

    def text(self, x, y, s, anchor="middle", size=11, cls="label"):
        self.add(
            f'<text class="{cls}" x="{_fmt(x)}" y="{_fmt(y)}" text-anchor="{anchor}" '
            f'font-family="sans-serif" font-size="{size}">{escape(s)}</text>'
        )

    def finish(self):
        return "\n".join(self.parts + ["</svg>"]) + "\n"


PLOT_W = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
PLOT_H = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM


def _legend(canvas, vmin, vmax):
    x0 = WIDTH - MARGIN_RIGHT + 25
    stops = "".join(
        f'<stop offset="{t}" stop-color="{_hex(c)}"/>' for t, c in COLOR_ANCHORS
    )
    canvas.add(
        f'<defs><linearGradient id="legend-gradient" x1="0" y1="1" x2="0" y2="0">{stops}'
        "</linearGradient></defs>"
    )
    canvas.add(
        f'<rect class="legend" x="{x0}" y="{MARGIN_TOP}" width="18" height="{PLOT_H}" '
        'fill="url(#legend-gradient)" stroke="black" stroke-width="0.5"/>'
    )
    canvas.text(x0 + 22, MARGIN_TOP + 10, f"{vmax:.6g}", anchor="start", cls="legend-max")
    canvas.text(x0 + 22, MARGIN_TOP + PLOT_H, f"{vmin:.6g}", anchor="start", cls="legend-min")


def _axes(canvas, bounds, x_label="x1", y_range=None, y_label="x2"):
    x0, y0 = MARGIN_LEFT, MARGIN_TOP + PLOT_H
    canvas.add(
        f'<path class="axes" d="M{x0},{MARGIN_TOP} L{x0},{y0} L{x0 + PLOT_W},{y0}" '
        'fill="none" stroke="black" stroke-width="1"/>'
    )
    lo_x, hi_x = bounds.lower[0], bounds.upper[0]
    canvas.text(x0, y0 + 16, f"{lo_x:.6g}")
    canvas.text(x0 + PLOT_W, y0 + 16, f"{hi_x:.6g}")
    canvas.text(x0 + PLOT_W / 2, y0 + 36, x_label)
    lo_y, hi_y = y_range if y_range is not None else (bounds.lower[1], bounds.upper[1])
    canvas.text(x0 - 6, y0, f"{lo_y:.6g}", anchor="end")
    canvas.text(x0 - 6, MARGIN_TOP + 10, f"{hi_y:.6g}", anchor="end")
    canvas.text(x0 - 40, MARGIN_TOP + PLOT_H / 2, y_label)


def _marker(canvas, x, y):
    canvas.add(
        f'<circle class="marker" cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="red" '
        'stroke="white" stroke-width="0.8"/>'
    )


def _render_line(func, bounds, resolution, points):
    xs = np.linspace(bounds.lower[0], bounds.upper[0], resolution)
    ys = func.evaluate_many(xs[:, None])
    vmin, vmax = float(ys.min()), float(ys.max())
    span = (vmax - vmin) or 1.0

    def to_px(x, y):
        px = MARGIN_LEFT + (x - bounds.lower[0]) / (bounds.upper[0] - bounds.lower[0]) * PLOT_W
        py = MARGIN_TOP + PLOT_H - (y - vmin) / span * PLOT_H
        return px, py

    canvas = _Canvas(f"{func.name} (N=1)")
    _axes(canvas, bounds, y_range=(vmin, vmax), y_label="f(x)")
    coords = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in (to_px(x, y) for x, y in zip(xs, ys)))
    canvas.add(f'<polyline class="curve" points="{coords}" fill="none" stroke="#3b288c" stroke-width="1.5"/>')
    for label, idx in (("min", int(np.argmin(ys))), ("max", int(np.argmax(ys)))):
        px, py = to_px(xs[idx], ys[idx])
        canvas.add(f'<circle class="extreme" cx="{_fmt(px)}" cy="{_fmt(py)}" r="2.5" fill="black"/>')
        canvas.text(px, py - 8 if label == "max" else py + 16,
                    f"{label} {ys[idx]:.6g} at x={xs[idx]:.6g}", cls=f"annotation-{label}")
    if len(points):
        values = func.evaluate_many(points)
        for p, v in zip(points[:, 0], values):
            # markers above or below the sampled range are clamped to the frame
            _marker(canvas, *to_px(p, min(max(v, vmin), vmax)))
    return canvas.finish()


def _render_heatmap(func, bounds, resolution, points):
    xs, ys, z = sample_grid(func, bounds, resolution)
    vmin, vmax, norm = _normaliser(z)
    cw, ch = PLOT_W / resolution, PLOT_H / resolution
    canvas = _Canvas(f"{func.name} heatmap")
    canvas.add('<g class="cells" shape-rendering="crispEdges">')
    for j in range(resolution):
        top = MARGIN_TOP + PLOT_H - (j + 1) * ch
        for i in range(resolution):
            v = z[j, i]
            canvas.add(
                f'<rect class="cell" x="{_fmt(MARGIN_LEFT + i * cw)}" y="{_fmt(top)}" '
                f'width="{cw:.3f}" height="{ch:.3f}" fill="{_hex(color_for(norm(v)))}" '
                f'data-value="{float(v)!r}"/>'
            )
    canvas.add("</g>")
    _axes(canvas, bounds)
    _legend(canvas, vmin, vmax)
    sx = PLOT_W / (bounds.upper[0] - bounds.lower[0])
    sy = PLOT_H / (bounds.upper[1] - bounds.lower[1])
    for x, y in points:
        _marker(canvas, MARGIN_LEFT + (x - bounds.lower[0]) * sx,
                MARGIN_TOP + PLOT_H - (y - bounds.lower[1]) * sy)
    return canvas.finish()


def _render_wireframe(func, bounds, resolution, points):
    xs, ys, z = sample_grid(func, bounds, resolution)
    vmin, vmax, norm = _normaliser(z)
    u = (xs - bounds.lower[0]) / (bounds.upper[0] - bounds.lower[0])
    w = (ys - bounds.lower[1]) / (bounds.upper[1] - bounds.lower[1])

    # oblique projection: x to the right, y receding up-right, f upwards
    def project(a, b, t):
        px = MARGIN_LEFT + 0.7 * PLOT_W * a + 0.3 * PLOT_W * b
        py = MARGIN_TOP + PLOT_H - 0.3 * PLOT_H * b - 0.7 * PLOT_H * t
        return px, py

    canvas = _Canvas(f"{func.name} surface")
    t = np.vectorize(norm)(z) if vmax > vmin else np.full_like(z, 0.5)
    for j in range(resolution):
        pts = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in (project(u[i], w[j], t[j, i]) for i in range(resolution)))
        canvas.add(f'<polyline class="wire" points="{pts}" fill="none" stroke="#21918c" stroke-width="0.4"/>')
    for i in range(resolution):
        pts = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in (project(u[i], w[j], t[j, i]) for j in range(resolution)))
        canvas.add(f'<polyline class="wire" points="{pts}" fill="none" stroke="#3b288c" stroke-width="0.4"/>')
    canvas.text(WIDTH - MARGIN_RIGHT + 10, HEIGHT - 20, f"f in [{vmin:.6g}, {vmax:.6g}]", anchor="end")
    if len(points):
        values = func.evaluate_many(points)
        for (x, y), v in zip(points, values):
            a = (x - bounds.lower[0]) / (bounds.upper[0] - bounds.lower[0])
            b = (y - bounds.lower[1]) / (bounds.upper[1] - bounds.lower[1])
            _marker(canvas, *project(a, b, min(1.0, max(0.0, norm(v)))))
    return canvas.finish()


def _atomic_write(path: Path, text: str):
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def render(
    func: BenchmarkFunction,
    *,
    bounds=None,
    resolution: int = DEFAULT_RESOLUTION,
    as_heatmap: bool = False,
    points=None,
    output_path=None,
) -> RenderResult:
    """Render ``func`` over ``bounds`` (suggested bounds by default) as SVG.

    ``points`` are drawn as markers; points outside the bounds are left out
    and reported in ``warnings``. When ``output_path`` is given the document
    is written there atomically.
    """
    bounds = _check(func, bounds, resolution)
    n = func.n_dimensions
    if as_heatmap and n != 2:
        raise UnsupportedDimensionError("heatmaps need a 2-dimensional function")
    inside, warnings = _split_points(points, bounds, n)
    if n == 1:
        svg = _render_line(func, bounds, resolution, inside)
    elif as_heatmap:
        svg = _render_heatmap(func, bounds, resolution, inside)
    else:
        svg = _render_wireframe(func, bounds, resolution, inside)
    path = None
    if output_path is not None:
        path = Path(output_path)
        _atomic_write(path, svg)
    return RenderResult(svg, warnings, len(inside), len(warnings), path)


def export_surface_grid(func: BenchmarkFunction, bounds=None, resolution: int = DEFAULT_RESOLUTION) -> str:
    """Value matrix of a 2-D function as text, one row per y sample.

    The first line is ``# lower0 upper0 lower1 upper1 resolution``. Values are
    written with ``repr`` so that reading them back is exact.
    """
    if func.n_dimensions != 2:
        raise UnsupportedDimensionError(
            f"surface grids need a 2-dimensional function, got N={func.n_dimensions}"
        )
    bounds = _check(func, bounds, resolution)
    _, _, z = sample_grid(func, bounds, resolution)
    (l0, l1), (u0, u1) = bounds.lower.tolist(), bounds.upper.tolist()
    lines = [f"# {l0!r} {u0!r} {l1!r} {u1!r} {resolution}"]
    lines += [" ".join(repr(float(v)) for v in row) for row in z]
    return "\n".join(lines) + "\n"


def write_surface_grid(path, func: BenchmarkFunction, bounds=None, resolution: int = DEFAULT_RESOLUTION) -> Path:
    text = export_surface_grid(func, bounds, resolution)
    _atomic_write(Path(path), text)
    return Path(path)


def parse_surface_grid(text: str):
    """Inverse of ``export_surface_grid``: ``(bounds, resolution, matrix)``."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    header = lines[0].lstrip("#").split()
    l0, u0, l1, u1 = (float(v) for v in header[:4])
    resolution = int(header[4])
    z = np.array([[float(v) for v in ln.split()] for ln in lines[1:]])
    if z.shape != (resolution, resolution):
        raise ValueError(f"expected a {resolution}x{resolution} matrix, got {z.shape}")
    return Bounds([l0, l1], [u0, u1]), resolution, z


def read_points_csv(source, n_dimensions: int | None = None) -> np.ndarray:
    """Read overlay points: one point per line, comma-separated reals.

    ``source`` is a path or a file-like object. Blank lines and lines starting
    with ``#`` are skipped.
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = Path(source).read_text(encoding="utf-8")
    rows = []
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row or not "".join(row).strip() or row[0].lstrip().startswith("#"):
            continue
        try:
            rows.append([float(v) for v in row])
        except ValueError:
            raise ValueError(f"line {lineno}: not a list of numbers: {row}") from None
    if not rows:
        return np.empty((0, n_dimensions or 0))
    widths = {len(r) for r in rows}
    if len(widths) != 1 or (n_dimensions is not None and widths != {n_dimensions}):
        raise ValueError(f"points must all have {n_dimensions or 'the same number of'} coordinates")
    return np.array(rows)
