#!/usr/bin/env python3
# The subdivided triangle: every one-point replacement bound holds, yet a
# seven-triangle chain undercuts the big face's assigned distance.

import numpy as np

from kmetrics import check_strong, check_weak, min_bounding_chain
from kmetrics.corpus import subdivided_triangle
from kmetrics.simplicial import (
    apply_operator,
    boundary_operator,
    indicator_chain,
)

inst = subdivided_triangle()
d = inst.payload
print(f"table on n={d.n} points, arity k={d.k}")
print(f"d(0,1,2) = {d.value((0, 1, 2))}, every other tuple = 1")

weak = check_weak(d)
print("weak inequality holds:", weak.is_weak)

strong = check_strong(d)
print("strong inequality holds:", strong.is_strong)
w = strong.strong_witness
print(f"witness tuple {w.simplex}: value {w.value} but a chain of cost {w.cost}")
for s, c in zip(w.chain.support(), w.chain.coeffs[w.chain.coeffs != 0]):
    print(f"  {c:+.0f} * {s}")

# the witness chain really does share the tuple's boundary
bnd = boundary_operator(6, 2)
lhs = apply_operator(bnd, indicator_chain(6, (0, 1, 2)))
rhs = apply_operator(bnd, w.chain)
print("boundaries agree exactly:", np.array_equal(lhs.coeffs, rhs.coeffs))

# same computation by hand: cheapest chain bounding the face, priced by d
cost, chain = min_bounding_chain(d.values, lhs)
print(f"minimum bounding cost recomputed: {cost}")
