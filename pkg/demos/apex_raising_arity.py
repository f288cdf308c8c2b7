#!/usr/bin/env python3
"""Raise a table's arity by one through a fresh apex point.

Tuples that use the apex inherit the old distances, tuples that avoid it
get zero.  The construction preserves the strong inequality in both
directions, so it turns an arity-3 separation into an arity-4 one.
"""

import numpy as np

from kmetrics import apex_extend, check_strong
from kmetrics.apex import lift_operator, project_operator
from kmetrics.corpus import random_strong_metric, subdivided_triangle
from kmetrics.simplicial import boundary_operator

base = random_strong_metric(5, 3, seed=3).payload
up = apex_extend(base)
print(f"strong 3-table on 5 points -> 4-table on {up.n} points, apex {up.n - 1}")
print(f"d(0,1,2) = {base.value((0, 1, 2)):.4f}"
      f"  becomes d(0,1,2,{up.n - 1}) = {up.value((0, 1, 2, up.n - 1)):.4f}")
print(f"apex-free tuple d(0,1,2,3) = {up.value((0, 1, 2, 3))}")
print("extension still strong:", check_strong(up).is_strong)

bad = apex_extend(subdivided_triangle().payload)
report = check_strong(bad)
w = report.strong_witness
print(f"\nsubdivided triangle lifted: strong = {report.is_strong},"
      f" witness {w.simplex} at cost {w.cost:.1f} vs value {w.value:.1f}")

# the forgetting map and the boundary commute, exactly
n, h = 5, 3
left = boundary_operator(n, h - 1).matrix @ project_operator(n, h).matrix
right = project_operator(n, h - 1).matrix @ boundary_operator(n + 1, h).matrix
print("\nforget-then-boundary equals boundary-then-forget:",
      np.array_equal(left, right))
lift = lift_operator(n, h)
proj = project_operator(n, h)
print("projection undoes the lift:",
      np.array_equal(proj.matrix @ lift.matrix, np.eye(lift.matrix.shape[1])))
