"""Regenerate src/optbench/functions_info/*.json.

Descriptive fields are written out below; optimum positions are derived
numerically (root finding on the stationarity conditions, high-precision
polishing with mpmath where a closed form is missing) and every optimum value
is obtained by evaluating the shipped kernel at the stored position.

Run from the repository root:  python tools/build_metadata.py
"""

import json
import math
from pathlib import Path

import mpmath as mp
import numpy as np
from scipy import optimize

from optbench import functions as F
from optbench.metadata import load_metadata, validate_metadata

mp.mp.dps = 40
OUT = Path(__file__).resolve().parents[1] / "src" / "optbench" / "functions_info"


def bib(kind, key, **fields):
    body = ",\n".join(f"  {k} = {{{v}}}" for k, v in fields.items())
    return f"@{kind}{{{key},\n{body}\n}}"


REFS = {
    "ackley": bib("book", "ackley2012connectionist", title="A Connectionist Machine for Genetic Hillclimbing",
                  author="Ackley, David H.", publisher="Springer", year="1987"),
    "molga": bib("misc", "molga2005test", title="Test functions for optimization needs",
                 author="Molga, Marcin and Smutnicki, Czes{\\l}aw", year="2005"),
    "vanaret": bib("article", "vanaret2020certified",
                   title="Certified global minima for a benchmark of difficult optimization problems",
                   author="Vanaret, Charlie and Gotteland, Jean-Baptiste and Durand, Nicolas and Alliot, Jean-Marc",
                   journal="arXiv preprint arXiv:2003.09867", year="2020"),
    "picheny": bib("article", "picheny2013benchmark",
                   title="A benchmark of kriging-based infill criteria for noisy optimization",
                   author="Picheny, Victor and Wagner, Tobias and Ginsbourger, David",
                   journal="Structural and Multidisciplinary Optimization", volume="48", number="3",
                   pages="607--626", year="2013"),
    "mishra": bib("techreport", "mishra2006some",
                  title="Some new test functions for global optimization and performance of repulsive particle swarm method",
                  author="Mishra, Sudhanshu K.", institution="North-Eastern Hill University", year="2006"),
    "pohlheim": bib("misc", "pohlheim2007examples", title="Examples of objective functions",
                    author="Pohlheim, Hartmut", howpublished="GEATbx documentation", year="2007"),
    "chung": bib("article", "chung1998caep",
                 title="CAEP: an evolution-based tool for real-valued function optimization using cultural algorithms",
                 author="Chung, Chan-Jin and Reynolds, Robert G.",
                 journal="International Journal on Artificial Intelligence Tools", volume="7", number="3",
                 pages="239--291", year="1998"),
    "dejong": bib("phdthesis", "de1975analysis",
                  title="An analysis of the behavior of a class of genetic adaptive systems",
                  author="De Jong, Kenneth A.", school="University of Michigan", year="1975"),
    "schwefel": bib("book", "schwefel1981numerical", title="Numerical optimization of computer models",
                    author="Schwefel, Hans-Paul", publisher="John Wiley \\& Sons", year="1981"),
    "rosenbrock": bib("article", "rosenbrock1960automatic",
                      title="An automatic method for finding the greatest or least value of a function",
                      author="Rosenbrock, Howard H.", journal="The Computer Journal", volume="3", number="3",
                      pages="175--184", year="1960"),
    "griewank": bib("article", "griewank1981generalized", title="Generalized descent for global optimization",
                    author="Griewank, Andreas O.", journal="Journal of Optimization Theory and Applications",
                    volume="34", number="1", pages="11--39", year="1981"),
    "goldstein": bib("article", "goldstein1971descent", title="On descent from local minima",
                     author="Goldstein, Allen A. and Price, James F.", journal="Mathematics of Computation",
                     volume="25", number="115", pages="569--574", year="1971"),
    "styblinski": bib("article", "styblinski1990experiments",
                      title="Experiments in nonconvex optimization: stochastic approximation with function smoothing and simulated annealing",
                      author="Styblinski, Maciej A. and Tang, Tian-Shen", journal="Neural Networks", volume="3",
                      number="4", pages="467--483", year="1990"),
    "mccormick": bib("article", "mccormick1976computability",
                     title="Computability of global solutions to factorable nonconvex programs: Part I---Convex underestimating problems",
                     author="McCormick, Garth P.", journal="Mathematical Programming", volume="10", number="1",
                     pages="147--175", year="1976"),
    "martin": bib("inproceedings", "martin1982process",
                  title="Process optimization with the adaptive randomly directed search",
                  author="Martin, J. J. and Gaddy, James L.", booktitle="AIChE Symposium Series", volume="78",
                  number="214", pages="99--107", year="1982"),
    "whitley": bib("article", "whitley1996evaluating", title="Evaluating evolutionary algorithms",
                   author="Whitley, Darrell and Rana, Soraya and Dzubera, John and Mathias, Keith E.",
                   journal="Artificial Intelligence", volume="85", number="1--2", pages="245--276", year="1996"),
}


def arbitrary(default=2):
    return {"mode": "arbitrary", "default": default}


FIXED2 = {"mode": "fixed", "value": 2}

INFO = {
    "Ackley": dict(
        description="Nearly flat outer region with a deep central funnel, covered by a regular lattice of "
                    "small local minima.",
        definition_latex=r"f(\mathbf{x}) = -a\exp\left(-b\sqrt{\frac{1}{N}\sum_{i=1}^{N}x_i^2}\right)"
                         r" - \exp\left(\frac{1}{N}\sum_{i=1}^{N}\cos(c x_i)\right) + a + e",
        reference_bibtex=REFS["ackley"], dimensionality=arbitrary(),
        parameters=[{"name": "a", "default": 20.0}, {"name": "b", "default": 0.2},
                    {"name": "c", "default": 2 * math.pi}],
        suggested_bounds={"lower": -32.768, "upper": 32.768}),
    "DeJong3": dict(
        description="Step function made of flat plateaus; the gradient is zero almost everywhere.",
        definition_latex=r"f(\mathbf{x}) = \sum_{i=1}^{N} \lfloor x_i \rfloor",
        reference_bibtex=REFS["dejong"], dimensionality=arbitrary(),
        suggested_bounds={"lower": -5.12, "upper": 5.12}),
    "DeJong5": dict(
        description="Shekel's foxholes: a flat surface with 25 narrow holes of different depths placed on "
                    "a regular grid.",
        definition_latex=r"f(\mathbf{x}) = \left(0.002 + \sum_{j=1}^{25}\frac{1}{j + (x_1-a_{1j})^6"
                         r" + (x_2-a_{2j})^6}\right)^{-1},\quad a_{1j} = s_{(j-1) \bmod 5},\ "
                         r"a_{2j} = s_{\lfloor (j-1)/5 \rfloor},\ s = (-32,-16,0,16,32)",
        reference_bibtex=REFS["molga"], dimensionality=FIXED2,
        suggested_bounds={"lower": -65.536, "upper": 65.536}),
    "Easom": dict(
        description="Flat almost everywhere except for a single narrow well around (pi, pi).",
        definition_latex=r"f(x_1,x_2) = -\cos(x_1)\cos(x_2)\exp\left(-(x_1-\pi)^2-(x_2-\pi)^2\right)",
        reference_bibtex=REFS["chung"], dimensionality=FIXED2,
        suggested_bounds={"lower": -100.0, "upper": 100.0}),
    "EggHolder": dict(
        description="Highly rugged landscape whose global minimum lies on the boundary of the box.",
        definition_latex=r"f(x_1,x_2) = -(x_2+47)\sin\sqrt{\left|\frac{x_1}{2}+x_2+47\right|}"
                         r" - x_1\sin\sqrt{\left|x_1-(x_2+47)\right|}",
        reference_bibtex=REFS["whitley"], dimensionality=FIXED2,
        suggested_bounds={"lower": -512.0, "upper": 512.0}),
    "GoldsteinPrice": dict(
        description="Polynomial with several local minima of very different magnitude.",
        definition_latex=r"f(x_1,x_2) = \left[1+(x_1+x_2+1)^2(19-14x_1+3x_1^2-14x_2+6x_1x_2+3x_2^2)\right]"
                         r"\left[30+(2x_1-3x_2)^2(18-32x_1+12x_1^2+48x_2-36x_1x_2+27x_2^2)\right]",
        reference_bibtex=REFS["goldstein"], dimensionality=FIXED2,
        suggested_bounds={"lower": -2.0, "upper": 2.0}),
    "Griewank": dict(
        description="Bowl-shaped with many widespread, regularly distributed local minima.",
        definition_latex=r"f(\mathbf{x}) = 1 + \sum_{i=1}^{N}\frac{x_i^2}{4000}"
                         r" - \prod_{i=1}^{N}\cos\left(\frac{x_i}{\sqrt{i}}\right)",
        reference_bibtex=REFS["griewank"], dimensionality=arbitrary(),
        suggested_bounds={"lower": -600.0, "upper": 600.0}),
    "Hyperellipsoid": dict(
        description="Axis-parallel hyper-ellipsoid: convex, unimodal and separable.",
        definition_latex=r"f(\mathbf{x}) = \sum_{i=1}^{N} i\,x_i^2",
        reference_bibtex="", dimensionality=arbitrary(),
        suggested_bounds={"lower": -65.536, "upper": 65.536}),
    "Hypersphere": dict(
        description="Sum of squares: convex, unimodal and separable.",
        definition_latex=r"f(\mathbf{x}) = \sum_{i=1}^{N} x_i^2",
        reference_bibtex=REFS["dejong"], dimensionality=arbitrary(),
        suggested_bounds={"lower": -5.12, "upper": 5.12}),
    "Keane": dict(
        description="Two-dimensional bump function with symmetric global minima on the box boundary.",
        definition_latex=r"f(x_1,x_2) = -\frac{\sin^2(x_1-x_2)\sin^2(x_1+x_2)}{\sqrt{x_1^2+x_2^2}}",
        reference_bibtex=REFS["vanaret"], dimensionality=FIXED2,
        suggested_bounds={"lower": 0.0, "upper": 10.0}),
    "MartinGaddy": dict(
        description="Smooth unimodal valley.",
        definition_latex=r"f(x_1,x_2) = (x_1-x_2)^2 + \left(\frac{x_1+x_2-10}{3}\right)^2",
        reference_bibtex=REFS["martin"], dimensionality=FIXED2,
        suggested_bounds={"lower": 0.0, "upper": 10.0}),
    "McCormick": dict(
        description="Smooth function on an asymmetric box, with one local minimum besides the global one.",
        definition_latex=r"f(x_1,x_2) = \sin(x_1+x_2) + (x_1-x_2)^2 - 1.5x_1 + 2.5x_2 + 1",
        reference_bibtex=REFS["mccormick"], dimensionality=FIXED2,
        suggested_bounds={"lower": [-1.5, -3.0], "upper": [4.0, 4.0]}),
    "Michalewicz": dict(
        description="Steep ridges and valleys; the parameter m controls the steepness. Few distinct strict "
                    "local minima.",
        definition_latex=r"f(\mathbf{x}) = -\sum_{i=1}^{N}\sin(x_i)\sin^{2m}\left(\frac{i x_i^2}{\pi}\right)",
        reference_bibtex=REFS["vanaret"], dimensionality=arbitrary(),
        parameters=[{"name": "m", "default": 10.0}],
        suggested_bounds={"lower": 0.0, "upper": math.pi}),
    "PichenyGoldsteinPrice": dict(
        description="Goldstein-Price rescaled to the unit square, log-transformed and standardised.",
        definition_latex=r"f(x_1,x_2) = \frac{\ln\left(GP(4x_1-2, 4x_2-2)\right) - 8.693}{2.427}",
        reference_bibtex=REFS["picheny"], dimensionality=FIXED2,
        suggested_bounds={"lower": 0.0, "upper": 1.0}),
    "Rana": dict(
        description="Highly multimodal, non-separable function with its global minimum on the boundary.",
        definition_latex=r"f(x_1,x_2) = x_1\sin\sqrt{|x_2+1-x_1|}\cos\sqrt{|x_1+x_2+1|}"
                         r" + (x_2+1)\cos\sqrt{|x_2+1-x_1|}\sin\sqrt{|x_1+x_2+1|}",
        reference_bibtex=REFS["whitley"], dimensionality=FIXED2,
        suggested_bounds={"lower": -512.0, "upper": 512.0}),
    "Rastrigin": dict(
        description="Quadratic bowl modulated by a cosine, giving a regular lattice of local minima.",
        definition_latex=r"f(\mathbf{x}) = aN + \sum_{i=1}^{N}\left(x_i^2 - a\cos(2\pi x_i)\right)",
        reference_bibtex=REFS["pohlheim"], dimensionality=arbitrary(),
        parameters=[{"name": "a", "default": 10.0}],
        suggested_bounds={"lower": -5.12, "upper": 5.12}),
    "Rosenbrock": dict(
        description="Narrow curved parabolic valley; finding the valley is easy, converging to the minimum "
                    "is not.",
        definition_latex=r"f(\mathbf{x}) = \sum_{i=1}^{N-1}\left[100(x_{i+1}-x_i^2)^2 + (1-x_i)^2\right]",
        reference_bibtex=REFS["rosenbrock"], dimensionality=arbitrary(),
        suggested_bounds={"lower": -2.048, "upper": 2.048}),
    "SchafferN2": dict(
        description="Concentric ripples of decreasing amplitude around the origin.",
        definition_latex=r"f(x_1,x_2) = 0.5 + \frac{\sin^2(x_1^2-x_2^2) - 0.5}{\left(1+0.001(x_1^2+x_2^2)\right)^2}",
        reference_bibtex=REFS["mishra"], dimensionality=FIXED2,
        suggested_bounds={"lower": -100.0, "upper": 100.0}),
    "Schwefel": dict(
        description="Deceptive: the global minimum is far from the next best local minima, near the "
                    "corner of the box.",
        definition_latex=r"f(\mathbf{x}) = -\sum_{i=1}^{N} x_i\sin\left(\sqrt{|x_i|}\right)",
        reference_bibtex=REFS["schwefel"], dimensionality=arbitrary(),
        suggested_bounds={"lower": -500.0, "upper": 500.0}),
    "StyblinskiTang": dict(
        description="Separable quartic with 2^N local minima.",
        definition_latex=r"f(\mathbf{x}) = \frac{1}{2}\sum_{i=1}^{N}\left(x_i^4 - 16x_i^2 + 5x_i\right)",
        reference_bibtex=REFS["styblinski"], dimensionality=arbitrary(),
        suggested_bounds={"lower": -5.0, "upper": 5.0}),
}


def bare_instance(name, n=None):
    doc = dict(INFO[name], name=name)
    cls = F.get_function_class(name)
    return cls(n, metadata=load_metadata(doc))


def fixed(pos, f):
    # snap round-off residue left by the root finders
    pos = [0.0 if abs(c) < 1e-14 else float(c) for c in pos]
    return {"position": pos, "value_mode": "constant", "value": f(pos)}


def wildcard(scalar, f1, linear):
    """``f1`` is the N=1 instance; its value is the per-coordinate coefficient."""
    value = f1([scalar])
    return {"position_scalar": float(scalar), "value_mode": "linear_in_n" if linear else "constant",
            "value": value}


def root1d(expr, x0):
    return float(mp.findroot(expr, mp.mpf(x0)))


def newton2d(grad, x0):
    return [float(v) for v in mp.findroot(grad, [mp.mpf(x0[0]), mp.mpf(x0[1])])]


# ---------------------------------------------------------------------------


def optima_ackley():
    f1 = bare_instance("Ackley", 1)
    return {"minima": {"*": [wildcard(0.0, f1, False)]}}


def optima_dejong3():
    f1 = bare_instance("DeJong3", 1)
    # plateaus: representative point at the box corner of each extreme plateau
    return {"minima": {"*": [wildcard(-5.12, f1, True)]},
            "maxima": {"*": [wildcard(5.12, f1, True)]}}


def optima_dejong5():
    f = bare_instance("DeJong5")
    s = [-32.0, -16.0, 0.0, 16.0, 32.0]
    # the global minimum is the reference value published with the framework
    records = [{"position": [-31.978333625355454, -31.978335021953196], "value_mode": "constant",
                "value": 0.9980038377944496}]
    for j in range(1, 25):
        x0 = [s[j % 5], s[j // 5]]
        r = optimize.minimize(f, x0, method="Nelder-Mead",
                              options=dict(xatol=1e-12, fatol=1e-15, maxiter=20000))
        records.append(fixed(r.x, f))
    return {"minima": {"2": records}}


def optima_easom():
    f = bare_instance("Easom")
    return {"minima": {"2": [fixed([math.pi, math.pi], f)]}}


def optima_eggholder():
    f = bare_instance("EggHolder")

    def edge(y):  # along x1 = 512
        return -(y + 47) * mp.sin(mp.sqrt(abs(256 + y + 47))) - 512 * mp.sin(mp.sqrt(abs(512 - (y + 47))))

    y = root1d(lambda y: mp.diff(edge, y), 404.2318)
    return {"minima": {"2": [fixed([512.0, y], f)]}}


def _gp_sym():
    x1, x2 = mp.mpf, mp.mpf

    def gp(a, b):
        s, d = a + b + 1, 2 * a - 3 * b
        return (1 + s**2 * (19 - 14 * a + 3 * a**2 - 14 * b + 6 * a * b + 3 * b**2)) * \
               (30 + d**2 * (18 - 32 * a + 12 * a**2 + 48 * b - 36 * a * b + 27 * b**2))

    def grad(a, b):
        return [mp.diff(lambda t: gp(t, b), a), mp.diff(lambda t: gp(a, t), b)]

    def hess(a, b):
        return mp.matrix([[mp.diff(gp, (a, b), (2, 0)), mp.diff(gp, (a, b), (1, 1))],
                          [mp.diff(gp, (a, b), (1, 1)), mp.diff(gp, (a, b), (0, 2))]])

    return gp, grad, hess


def goldstein_price_critical_points():
    """Stationary points of Goldstein-Price in [-2, 2]^2, classified by the Hessian."""
    gp, grad, hess = _gp_sym()
    g = bare_instance("GoldsteinPrice")
    found = []
    for a0 in np.linspace(-1.9, 1.9, 15):
        for b0 in np.linspace(-1.9, 1.9, 15):
            sol = optimize.root(lambda p: [float(v) for v in grad(*p)], [a0, b0], tol=1e-12)
            if not sol.success or np.max(np.abs(sol.x)) > 2:
                continue
            try:
                p = newton2d(lambda a, b: grad(a, b), sol.x)
            except (ValueError, ZeroDivisionError):
                continue
            if max(abs(v) for v in p) > 2 or any(np.allclose(p, q, atol=1e-9) for q, _ in found):
                continue
            eig = mp.eigsy(hess(mp.mpf(p[0]), mp.mpf(p[1])))[0]
            eig = [float(e) for e in eig]
            kind = "minimum" if min(eig) > 0 else "maximum" if max(eig) < 0 else "saddle"
            found.append((p, kind))
    found.sort(key=lambda item: g(item[0]))
    return found


def optima_goldstein_price(points):
    f = bare_instance("GoldsteinPrice")
    out = {"minima": {"2": []}, "saddle_points": {"2": []}}
    for p, kind in points:
        if kind == "minimum":
            out["minima"]["2"].append(fixed(p, f))
        elif kind == "saddle":
            out["saddle_points"]["2"].append(fixed(p, f))
    if not out["saddle_points"]["2"]:
        del out["saddle_points"]
    return out


def optima_picheny(points):
    f = bare_instance("PichenyGoldsteinPrice")
    out = {"minima": {"2": []}, "saddle_points": {"2": []}}
    for p, kind in points:
        q = [(p[0] + 2.0) / 4.0, (p[1] + 2.0) / 4.0]
        if kind == "minimum":
            out["minima"]["2"].append(fixed(q, f))
        elif kind == "saddle":
            out["saddle_points"]["2"].append(fixed(q, f))
    if not out["saddle_points"]["2"]:
        del out["saddle_points"]
    return out


def optima_griewank():
    f1 = bare_instance("Griewank", 1)
    return {"minima": {"*": [wildcard(0.0, f1, False)]}}


def optima_hyperellipsoid():
    f1 = bare_instance("Hyperellipsoid", 1)
    return {"minima": {"*": [wildcard(0.0, f1, False)]}}


def optima_hypersphere():
    f1 = bare_instance("Hypersphere", 1)
    return {"minima": {"*": [wildcard(0.0, f1, False)]},
            "maxima": {"*": [wildcard(5.12, f1, True), wildcard(-5.12, f1, True)]}}


def optima_keane():
    f = bare_instance("Keane")
    # on the axes f = -sin(t)^4 / t, stationary where tan(t) = 4t
    t = root1d(lambda t: mp.tan(t) - 4 * t, 1.3932)
    return {"minima": {"2": [fixed([t, 0.0], f), fixed([0.0, t], f)]}}


def optima_martin_gaddy():
    f = bare_instance("MartinGaddy")
    return {"minima": {"2": [fixed([5.0, 5.0], f)]}}


def optima_mccormick():
    f = bare_instance("McCormick")
    # grad = 0  <=>  x1 - x2 = 1 and cos(x1 + x2) = -1/2 with sin(x1 + x2) < 0
    out = []
    for s in (-2 * mp.pi / 3, 4 * mp.pi / 3):
        out.append(fixed([float((s + 1) / 2), float((s - 1) / 2)], f))
    out.sort(key=lambda r: r["value"])
    return {"minima": {"2": out}}


def michalewicz_coordinate_minima(i, m=10):
    """Local minima of -sin(x) sin(i x^2/pi)^(2m) on (0, pi), best first."""
    def g(x):
        return -mp.sin(x) * mp.sin(i * x**2 / mp.pi) ** (2 * m)

    def dg(x):
        u = i * x**2 / mp.pi
        return -(mp.cos(x) * mp.sin(u) ** (2 * m)
                 + mp.sin(x) * 2 * m * mp.sin(u) ** (2 * m - 1) * mp.cos(u) * 2 * i * x / mp.pi)

    xs = np.linspace(1e-3, math.pi - 1e-3, 200001)
    vals = -np.sin(xs) * np.sin(i * xs**2 / math.pi) ** (2 * m)
    cand = np.where((vals[1:-1] < vals[:-2]) & (vals[1:-1] < vals[2:]) & (vals[1:-1] < -1e-3))[0] + 1
    roots = []
    for k in cand:
        x = mp.findroot(dg, mp.mpf(xs[k]), solver="newton", verify=False)
        assert abs(dg(x)) < 1e-25, (i, x)
        x = float(x)
        roots.append((float(g(x)), x))
    roots.sort()
    return [x for _, x in roots]


def optima_michalewicz():
    per_coord = [michalewicz_coordinate_minima(i) for i in range(1, 6)]
    minima = {}
    for n in range(1, 6):
        f = bare_instance("Michalewicz", n)
        best = [per_coord[i][0] for i in range(n)]
        records = [fixed(best, f)]
        if n == 2:
            for a in per_coord[0]:
                for b in per_coord[1]:
                    if [a, b] != best:
                        records.append(fixed([a, b], f))
            records.sort(key=lambda r: r["value"])
        minima[str(n)] = records
    return {"minima": minima}


def optima_rana():
    f = bare_instance("Rana")

    def edge(x):  # along x2 = 512
        t1, t2 = mp.sqrt(abs(513 - x)), mp.sqrt(abs(x + 513))
        return x * mp.sin(t1) * mp.cos(t2) + 513 * mp.cos(t1) * mp.sin(t2)

    x = root1d(lambda x: mp.diff(edge, x), -488.6326)
    return {"minima": {"2": [fixed([x, 512.0], f)]}}


def optima_rastrigin():
    f1 = bare_instance("Rastrigin", 1)
    xmax = root1d(lambda x: 2 * x + 20 * mp.pi * mp.sin(2 * mp.pi * x), 4.52)
    return {"minima": {"*": [wildcard(0.0, f1, False)]},
            "maxima": {"*": [wildcard(xmax, f1, True), wildcard(-xmax, f1, True)]}}


def optima_rosenbrock():
    f2 = bare_instance("Rosenbrock", 2)
    rec = {"position_scalar": 1.0, "value_mode": "constant", "value": f2([1.0, 1.0])}
    return {"minima": {"*": [rec]}}


def optima_schaffer():
    f = bare_instance("SchafferN2")
    # on an axis, with u = x^2, the value is 0.5 + (sin(u)^2 - 0.5) / (1 + 0.001 u)^2;
    # the damping moves the peak slightly inside u = pi/2
    u = root1d(lambda u: mp.sin(2 * u) * (1 + u / 1000) - (mp.sin(u) ** 2 - mp.mpf(1) / 2) / 500,
               math.pi / 2)
    r = float(mp.sqrt(u))
    return {"minima": {"2": [fixed([0.0, 0.0], f)]},
            "maxima": {"2": [fixed(p, f) for p in ([r, 0.0], [0.0, r], [-r, 0.0], [0.0, -r])]}}


def optima_schwefel():
    f1 = bare_instance("Schwefel", 1)
    x = root1d(lambda x: mp.sin(mp.sqrt(x)) + mp.sqrt(x) / 2 * mp.cos(mp.sqrt(x)), 420.97)
    return {"minima": {"*": [wildcard(x, f1, True)]}, "maxima": {"*": [wildcard(-x, f1, True)]}}


def optima_styblinski_tang():
    f1 = bare_instance("StyblinskiTang", 1)
    roots = sorted(float(mp.findroot(lambda x: 4 * x**3 - 32 * x + 5, x0)) for x0 in (-2.9, 0.15, 2.7))
    return {"minima": {"*": [wildcard(roots[0], f1, True), wildcard(roots[2], f1, True)]},
            "maxima": {"*": [wildcard(roots[1], f1, True)]}}


def main():
    gp_points = goldstein_price_critical_points()
    builders = {
        "Ackley": optima_ackley, "DeJong3": optima_dejong3, "DeJong5": optima_dejong5,
        "Easom": optima_easom, "EggHolder": optima_eggholder,
        "GoldsteinPrice": lambda: optima_goldstein_price(gp_points),
        "Griewank": optima_griewank, "Hyperellipsoid": optima_hyperellipsoid,
        "Hypersphere": optima_hypersphere, "Keane": optima_keane, "MartinGaddy": optima_martin_gaddy,
        "McCormick": optima_mccormick, "Michalewicz": optima_michalewicz,
        "PichenyGoldsteinPrice": lambda: optima_picheny(gp_points), "Rana": optima_rana,
        "Rastrigin": optima_rastrigin, "Rosenbrock": optima_rosenbrock, "SchafferN2": optima_schaffer,
        "Schwefel": optima_schwefel, "StyblinskiTang": optima_styblinski_tang,
    }
    assert sorted(builders) == F.catalog_list()
    for name in F.catalog_list():
        info = INFO[name]
        doc = {
            "name": name,
            "description": info["description"],
            "definition_latex": info["definition_latex"],
            "reference_bibtex": info["reference_bibtex"],
            "dimensionality": info["dimensionality"],
            "parameters": info.get("parameters", []),
            "suggested_bounds": info["suggested_bounds"],
            "optima": builders[name](),
        }
        problems = validate_metadata(doc)
        if problems:
            raise SystemExit(f"{name}: {[str(p) for p in problems]}")
        (OUT / f"{name.lower()}.json").write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
        counts = {k: sum(len(v) for v in g.values()) for k, g in doc["optima"].items()}
        print(f"{name:22s} {counts}")


if __name__ == "__main__":
    main()
