"""
Evaluating benchmark functions
==============================

Create a function, evaluate it and look up what is known about it.
"""

import numpy as np

import optbench as ob

# every function is a class; arbitrary-dimension ones take N
func = ob.Schwefel(n_dimensions=4)
print(func([25, -34.6, -112.231, 242]))

# the same point through the opposite (negated) function
print(ob.Schwefel(n_dimensions=4, opposite=True)([25, -34.6, -112.231, 242]))

# batches go in as one (M, N) array
points = np.random.default_rng(0).uniform(*func.suggested_bounds(), size=(5, 4))
print(func.evaluate_many(points))

###############################################################################
# Known optima come from the metadata shipped with the package.

dejong = ob.DeJong5()
print(dejong.minimum())
print(len(dejong.minima()), "registered minima")

###############################################################################
# Functions can also be looked up by name, which is handy in loops.

for name in ob.catalog_list():
    f = ob.instantiate(name)
    lower, upper = f.suggested_bounds()
    print(f"{name:22s} N={f.n_dimensions}  bounds {lower.tolist()} .. {upper.tolist()}")

print(ob.Ackley().definition())
