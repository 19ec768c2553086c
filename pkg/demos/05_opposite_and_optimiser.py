"""
Minimising and maximising with one optimiser
============================================

An optimiser that only minimises can find maxima through the opposite
function. Here a small compass search climbs the Schaffer N.2 peaks.
"""

import numpy as np

import optbench as ob


def compass_search(func, start, step=1.0, tol=1e-9, max_iter=10_000):
    x = np.asarray(start, dtype=float)
    fx = func(x)
    lower, upper = func.suggested_bounds()
    directions = np.vstack([np.eye(len(x)), -np.eye(len(x))])
    for _ in range(max_iter):
        for d in directions:
            y = np.clip(x + step * d, lower, upper)
            fy = func(y)
            if fy < fx:
                x, fx = y, fy
                break
        else:
            step /= 2
            if step < tol:
                break
    return x, fx


func = ob.SchafferN2()
x, fx = compass_search(func.negated(), [1.0, 0.3])
print("found maximum", -fx, "at", x)
print("registered maxima:", [(m.position, m.value) for m in func.maxima()])

# the minima of the opposite function are the maxima of the original
print(func.negated().minimum())
