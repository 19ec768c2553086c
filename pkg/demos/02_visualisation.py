"""
Plotting a function
===================

Heatmaps and wireframes are written as SVG files. Points can be overlaid,
for example the trace of an optimiser.
"""

import numpy as np

import optbench as ob
from optbench.plotting import render, write_surface_grid

func = ob.Schwefel(2)
points = np.random.default_rng(1).uniform(-500, 500, size=(100, 2))
result = render(func, resolution=101, as_heatmap=True, points=points,
                output_path="schwefel_heatmap.svg")
print(result.path, result.n_markers, "markers")

# the default 2-D view is an oblique wireframe
render(ob.Ackley(), resolution=40, output_path="ackley_surface.svg")

# 1-D functions get a line plot with the extremes annotated
render(ob.Rastrigin(1), resolution=400, output_path="rastrigin_1d.svg")

###############################################################################
# The raw value matrix can be exported for use in other tools.

write_surface_grid("picheny.txt", ob.PichenyGoldsteinPrice(), resolution=51)
