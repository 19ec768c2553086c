"""
Baseline searches
=================

Grid and random search give a floor that any optimiser should beat.
"""

import optbench as ob
from optbench.search import minimum_grid_search, minimum_random_search

for name in ("Ackley", "Rastrigin", "Schwefel", "Michalewicz"):
    func = ob.instantiate(name, 2)
    known = func.minimum()
    grid = minimum_grid_search(func, n_edge_points=100)
    rand = minimum_random_search(func, n_samples=10_201, seed=0)
    print(f"{name:12s} known {known.value:12.6f}  grid {grid.best_value:12.6f}  "
          f"random {rand.best_value:12.6f}")

###############################################################################
# Without a seed, one is drawn and reported so the run can be repeated.

first = minimum_random_search(ob.Griewank(5), 2000)
again = minimum_random_search(ob.Griewank(5), 2000, seed=first.seed)
print(first.seed, first == again)
