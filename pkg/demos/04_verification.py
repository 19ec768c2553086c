"""
Checking registered optima
==========================

Each registered minimum is tested by sampling a small ball around it. A
wrong entry shows up as a sample that improves on the registered value.
"""

import optbench as ob
from optbench.core import Optimum
from optbench.verify import VerifierConfig, reports_to_json, verify_all, verify_optimum

reports = verify_all(dimensions=(2, 3, 4))
total = sum(len(r) for r in reports.values())
ok = sum(r.passed for group in reports.values() for r in group)
print(f"{ok}/{total} registered optima pass")

###############################################################################
# A planted mistake: Rastrigin does not have a minimum at (0.1, 0.1).

func = ob.Rastrigin()
wrong = Optimum("minimum", (0.1, 0.1), func([0.1, 0.1]), 2)
report = verify_optimum(func, wrong, VerifierConfig(radius=1e-2))
print(report.passed, report.worst_violation)

# reports serialise to JSON for CI logs
print(reports_to_json({"Easom": verify_all([ob.Easom])["Easom"]})[:200])
