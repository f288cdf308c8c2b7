"""Metrics obtained from coboundaries of chain collections, and embeddings.

A collection of m chains one dimension below the tuples (columns of a
ChainMatrix) induces the arity-k table d(t) = || row t of coboundary(F) ||_p.
Tables of this shape always satisfy the strong chain inequality.  The reverse
direction is computed here as well: every strong table is realised exactly by
one LP-built column per tuple, evaluated under the max norm.  Gaussian random
projection shrinks the number of columns at a controlled distortion.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

import numpy as np

from .lp import DEFAULT_TOL, solve_bounded_free
from .metric import KMetric, VALUE_TOL
from .simplicial import (
    Chain,
    SimplexKey,
    boundary_operator,
    coboundary_operator,
    enumerate_simplices,
    simplex_index,
    validate_simplex,
)

# Seed sentinel: random_project uses the identity instead of a Gaussian draw.
IDENTITY_SEED = -1


class NotStrongError(Exception):
    """Embedding requested for a table that fails the strong chain inequality."""

    def __init__(self, simplex: SimplexKey, value: float, achieved: float):
        self.simplex = simplex
        self.value = value
        self.achieved = achieved
        super().__init__(
            f"input not strong: best bounding value {achieved:.9g} at "
            f"{simplex} is below the table value {value:.9g}"
        )


@dataclass(frozen=True)
class NormSpec:
    """Entrywise p-norm used on coboundary rows; p in [1, inf]."""

    p: float

    def __post_init__(self):
        p = float(self.p)
        if not (p >= 1.0):
            raise ValueError(f"p must be at least 1, got {self.p}")
        object.__setattr__(self, "p", p)

    @property
    def is_inf(self) -> bool:
        return math.isinf(self.p)

    def row_norms(self, matrix: np.ndarray) -> np.ndarray:
        absval = np.abs(matrix)
        if self.is_inf:
            return absval.max(axis=1)
        if self.p == 1.0:
            return absval.sum(axis=1)
        if self.p == 2.0:
            return np.sqrt((absval * absval).sum(axis=1))
        return (absval**self.p).sum(axis=1) ** (1.0 / self.p)


@dataclass(frozen=True)
class ChainMatrix:
    """m chains of dimension k-2 on n vertices, stored as columns."""

    n: int
    k: int
    data: np.ndarray

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"arity must be at least 2, got {self.k}")
        if self.n < self.k:
            raise ValueError(f"need n >= k, got n={self.n}, k={self.k}")
        rows = comb(self.n, self.k - 1)
        arr = np.array(self.data, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != rows:
            raise ValueError(
                f"expected a ({rows}, m) array of column chains, got {arr.shape}"
            )
        if arr.shape[1] < 1:
            raise ValueError("need at least one column")
        if not np.isfinite(arr).all():
            raise ValueError("chain entries must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "data", arr)

    @property
    def m(self) -> int:
        return self.data.shape[1]

    def column(self, j: int) -> Chain:
        return Chain(n=self.n, dim=self.k - 2, coeffs=self.data[:, j])


def eval_coboundary_metric(F: ChainMatrix, norm: NormSpec) -> KMetric:
    """Arity-k table whose entry at t is the p-norm of row t of coboundary(F)."""
    delta = coboundary_operator(F.n, F.k - 2).matrix.astype(float)
    rows = delta @ F.data
    return KMetric(n=F.n, k=F.k, values=norm.row_norms(rows))


def frechet_column(d: KMetric, t: Sequence[int], tol: float = VALUE_TOL):
    """One embedding column: the chain realising d(t) without expanding anywhere.

    Maximises the coboundary at t over chains f with |coboundary(f)| <= d
    entrywise; for arity >= 3 the search is restricted to the cycle space
    (boundary of f zero), which the optimum can always be taken from.  The
    maximum equals the minimum bounding-chain cost at t, so it reaches d(t)
    exactly when no cheaper chain exists; anything lower raises.

    Returns:
        (chain, achieved) where achieved is the attained coboundary value.
    """
    key = validate_simplex(d.n, t)
    if len(key) != d.k:
        raise ValueError(f"expected a {d.k}-tuple, got {key}")
    delta = coboundary_operator(d.n, d.k - 2).matrix.astype(float)
    if d.k >= 3:
        E = boundary_operator(d.n, d.k - 2).matrix.astype(float)
    else:
        # 0-chains have no boundary here; the constraint block is empty and
        # the optimality argument is unaffected.
        E = np.zeros((0, comb(d.n, d.k - 1)))
    idx = simplex_index(d.n, key)
    objective = boundary_operator(d.n, d.k - 1).matrix[:, idx].astype(float)
    sol = solve_bounded_free(delta, -d.values, d.values, E, objective)
    value = float(d.values[idx])
    achieved = float(sol.objective)
    if achieved < value - tol * max(1.0, value):
        raise NotStrongError(key, value, achieved)
    return Chain(n=d.n, dim=d.k - 2, coeffs=sol.x), achieved


def frechet_embed(d: KMetric, jobs: int = 1) -> ChainMatrix:
    """One column per k-tuple, in canonical order; eval at p=inf returns d.

    Raises NotStrongError at the first tuple (canonical order) that some
    chain bounds more cheaply than its table value.
    """
    simplices = enumerate_simplices(d.n, d.k - 1)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            columns = list(pool.map(lambda t: frechet_column(d, t)[0], simplices))
    else:
        columns = [frechet_column(d, t)[0] for t in simplices]
    data = np.column_stack([c.coeffs for c in columns])
    return ChainMatrix(n=d.n, k=d.k, data=data)


def _abs_moment_root(p: float) -> float:
    """(E|N(0,1)|^p)^(1/p), the normaliser for p-norm projections."""
    moment = 2.0 ** (p / 2.0) * math.gamma((p + 1.0) / 2.0) / math.sqrt(math.pi)
    return moment ** (1.0 / p)


def random_project(
    F: ChainMatrix, m_target: int, norm_out: NormSpec, seed: int
) -> ChainMatrix:
    """Gaussian sketch of the columns: F' = F R^T with i.i.d. normal R.

    Entries are scaled by 1/(c_p * m_target^(1/p)) where c_p is the p-th
    absolute moment root of the standard normal, so the expected p-norm of a
    projected row matches its Euclidean length (for p=2 this is the familiar
    1/sqrt(m') scaling).  seed=IDENTITY_SEED substitutes the identity matrix,
    which requires m_target == F.m.
    """
    if m_target < 1:
        raise ValueError(f"target dimension must be positive, got {m_target}")
    if norm_out.is_inf:
        raise ValueError("projection requires a finite p")
    if seed == IDENTITY_SEED:
        if m_target != F.m:
            raise ValueError(
                f"identity projection needs m_target == m ({F.m}), got {m_target}"
            )
        return ChainMatrix(n=F.n, k=F.k, data=F.data)
    rng = np.random.default_rng(seed)
    R = rng.standard_normal((m_target, F.m))
    scale = 1.0 / (_abs_moment_root(norm_out.p) * m_target ** (1.0 / norm_out.p))
    return ChainMatrix(n=F.n, k=F.k, data=(F.data @ R.T) * scale)


def jl_target_dim(n: int, k: int, eps: float, cprime: float = 8.0) -> int:
    """Projection dimension preserving all tuple values within 1 +/- eps whp."""
    if not (0.0 < eps < 1.0):
        raise ValueError(f"eps must be in (0, 1), got {eps}")
    return math.ceil(cprime * k * math.log(n) / (eps * eps))


def l2_to_lp_dim(m: int, p: float, eps: float) -> int:
    """Columns needed so the p-norm table tracks the Euclidean one within eps."""
    if not (0.0 < eps < 1.0):
        raise ValueError(f"eps must be in (0, 1), got {eps}")
    if math.isinf(p):
        raise ValueError("l2-to-lp projection requires a finite p")
    if p < 2.0:
        return math.ceil(m / (eps * eps))
    return math.ceil((m / (eps * eps * p)) ** (p / 2.0))


def embed_l2_to_lp(F: ChainMatrix, p: float, eps: float, seed: int) -> ChainMatrix:
    """Re-represent a Euclidean coboundary table in the p-norm, up to eps."""
    m_target = l2_to_lp_dim(F.m, p, eps)
    if m_target > 1_000_000:
        raise ValueError(
            f"projection needs {m_target} columns, above the 1000000 limit; "
            "raise eps or lower p"
        )
    return random_project(F, m_target, NormSpec(p), seed)


def max_distortion(d1: KMetric, d2: KMetric) -> float:
    """Largest relative disagreement max(a/b, b/a) - 1 over all tuples.

    Entries where both tables vanish contribute zero; a zero on one side
    only is reported as infinity.
    """
    if (d1.n, d1.k) != (d2.n, d2.k):
        raise ValueError(
            f"tables disagree in shape: ({d1.n}, {d1.k}) vs ({d2.n}, {d2.k})"
        )
    worst = 0.0
    for a, b in zip(d1.values, d2.values):
        if a == 0.0 and b == 0.0:
            continue
        if a == 0.0 or b == 0.0:
            return math.inf
        worst = max(worst, a / b - 1.0, b / a - 1.0)
    return worst
