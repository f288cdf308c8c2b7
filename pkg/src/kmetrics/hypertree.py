"""Weighted facet complexes, their bounding-chain metrics, and hypertrees.

A weighted complex keeps the full lower skeleton and a positively weighted
set of top facets.  Its induced table assigns each k-tuple the cheapest
facet-supported chain bounding that tuple's boundary (for graphs this is the
shortest-path metric).  A hypertree is a facet set that is acyclic in the
top dimension yet still bounds every cycle one dimension down; its metric
embeds exactly into an entrywise-1-norm coboundary table.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

import numpy as np

from .coboundary import ChainMatrix, NormSpec, eval_coboundary_metric
from .metric import KMetric, UnfillableBoundaryError, min_bounding_chain
from .simplicial import (
    Chain,
    boundary_operator,
    coboundary_operator,
    enumerate_simplices,
    simplex_index,
    validate_simplex,
)

RANK_TOL = 1e-9
L1_RESIDUAL_TOL = 1e-8


class NotHypertreeError(Exception):
    """The facet set fails one of the two hypertree rank conditions."""


@dataclass(frozen=True)
class WeightedComplex:
    """Positively weighted (k-1)-facets over the complete lower skeleton."""

    n: int
    k: int
    facets: tuple
    weights: np.ndarray

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"arity must be at least 2, got {self.k}")
        if self.n < self.k:
            raise ValueError(f"need n >= k, got n={self.n}, k={self.k}")
        keys = tuple(validate_simplex(self.n, f) for f in self.facets)
        if len(keys) < 1:
            raise ValueError("need at least one facet")
        if any(len(f) != self.k for f in keys):
            raise ValueError(f"facets must have {self.k} vertices")
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate facet")
        w = np.array(self.weights, dtype=float).reshape(-1)
        if w.shape != (len(keys),):
            raise ValueError(f"expected {len(keys)} weights, got {w.shape[0]}")
        if not np.isfinite(w).all() or (w <= 0).any():
            raise ValueError("facet weights must be finite and positive")
        w.flags.writeable = False
        object.__setattr__(self, "facets", keys)
        object.__setattr__(self, "weights", w)

    def facet_indices(self) -> np.ndarray:
        return np.array([simplex_index(self.n, f) for f in self.facets], dtype=int)


@dataclass(frozen=True)
class HypertreeReport:
    is_hypertree: bool
    acyclic: bool  # no nonzero facet-supported chain without boundary
    fills_cycles: bool  # every cycle one dimension down bounds a facet chain
    facet_rank: int
    facet_count: int
    cycle_space_dim: int


def cycle_space_dim(n: int, dim: int) -> int:
    """Dimension of the boundaryless dim-chains of the complete complex.

    In dimension zero these are the chains with coefficients summing to
    zero, matching the convention that a connected graph has no unbounded
    0-cycles.
    """
    if dim == 0:
        return n - 1
    count = comb(n, dim + 1)
    rank = int(
        np.linalg.matrix_rank(boundary_operator(n, dim).matrix.astype(float), tol=RANK_TOL)
    )
    return count - rank


def _facet_boundary(K: WeightedComplex) -> np.ndarray:
    return boundary_operator(K.n, K.k - 1).matrix[:, K.facet_indices()].astype(float)


def is_hypertree(K: WeightedComplex) -> HypertreeReport:
    """Two rank checks on the facet-restricted boundary matrix."""
    B = _facet_boundary(K)
    rank = int(np.linalg.matrix_rank(B, tol=RANK_TOL))
    cyc = cycle_space_dim(K.n, K.k - 2)
    acyclic = rank == len(K.facets)
    fills = rank == cyc
    return HypertreeReport(
        is_hypertree=acyclic and fills,
        acyclic=acyclic,
        fills_cycles=fills,
        facet_rank=rank,
        facet_count=len(K.facets),
        cycle_space_dim=cyc,
    )


def mbc_metric(K: WeightedComplex, jobs: int = 1) -> KMetric:
    """Minimum bounding-chain cost of every k-tuple, chains on facets only."""
    count = comb(K.n, K.k)
    weights = np.zeros(count)
    idx = K.facet_indices()
    weights[idx] = K.weights
    bd = boundary_operator(K.n, K.k - 1)
    simplices = enumerate_simplices(K.n, K.k - 1)

    def solve_one(i: int) -> float:
        target = Chain(n=K.n, dim=K.k - 2, coeffs=bd.matrix[:, i].astype(float))
        try:
            cost, _ = min_bounding_chain(weights, target, mask=idx)
        except UnfillableBoundaryError as exc:
            raise UnfillableBoundaryError(
                f"complex does not fill all boundaries: no facet chain bounds "
                f"{simplices[i]}"
            ) from exc
        return cost

    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(solve_one, range(len(simplices))))
    else:
        values = [solve_one(i) for i in range(len(simplices))]
    return KMetric(n=K.n, k=K.k, values=np.array(values))


def hypertree_to_l1(K: WeightedComplex) -> ChainMatrix:
    """Chains whose 1-norm coboundary table equals the bounding-chain metric.

    Solves, per facet, for a chain one dimension down whose coboundary hits
    exactly that facet with exactly its weight (acyclicity makes the facet
    rows of the coboundary independent, so the system is consistent; the
    least-squares solution is the minimum-norm one).
    """
    report = is_hypertree(K)
    if not report.is_hypertree:
        raise NotHypertreeError(
            f"not a hypertree: rank {report.facet_rank} vs "
            f"{report.facet_count} facets and cycle space {report.cycle_space_dim}"
        )
    delta = coboundary_operator(K.n, K.k - 2).matrix.astype(float)
    rows = delta[K.facet_indices(), :]
    target = np.diag(K.weights)
    F, *_ = np.linalg.lstsq(rows, target, rcond=None)
    residual = float(np.abs(rows @ F - target).max())
    if residual > L1_RESIDUAL_TOL:
        raise NotHypertreeError(
            f"facet system residual {residual:.3e} exceeds {L1_RESIDUAL_TOL}"
        )
    return ChainMatrix(n=K.n, k=K.k, data=F)


def random_spanning_tree(
    n: int, seed: int, weight_range: tuple = (0.5, 2.0)
) -> WeightedComplex:
    """Random recursive tree on n vertices with uniform random edge weights."""
    if n < 2:
        raise ValueError(f"need at least 2 vertices, got {n}")
    rng = np.random.default_rng(seed)
    facets = []
    for v in range(1, n):
        u = int(rng.integers(0, v))
        facets.append((min(u, v), max(u, v)))
    weights = rng.uniform(*weight_range, size=n - 1)
    return WeightedComplex(n=n, k=2, facets=tuple(facets), weights=weights)


def random_2hypertree(
    n: int, seed: int, weight_range: tuple = (0.5, 2.0)
) -> WeightedComplex:
    """Random triangle hypertree: greedy deletion from the complete triangle set.

    Triangles are visited in random order and removed whenever the remaining
    set still bounds every 1-cycle; one pass ends in an acyclic spanning set.
    """
    if n < 3:
        raise ValueError(f"need at least 3 vertices, got {n}")
    rng = np.random.default_rng(seed)
    full = boundary_operator(n, 2).matrix.astype(float)
    count = full.shape[1]
    cyc = cycle_space_dim(n, 1)
    alive = np.ones(count, dtype=bool)
    for j in rng.permutation(count):
        if alive.sum() <= cyc:
            break
        alive[j] = False
        if np.linalg.matrix_rank(full[:, alive], tol=RANK_TOL) < cyc:
            alive[j] = True  # deleting j breaks a cycle's filling
    simplices = enumerate_simplices(n, 2)
    facets = tuple(simplices[j] for j in np.nonzero(alive)[0])
    weights = rng.uniform(*weight_range, size=len(facets))
    return WeightedComplex(n=n, k=3, facets=facets, weights=weights)
