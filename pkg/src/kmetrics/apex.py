"""Raising arity by one through a fresh apex vertex.

The extended table on n+1 vertices (apex = index n, always the largest) is
zero on tuples missing the apex and copies the base table once the apex is
removed.  On chains the same construction is linear: the project operator
forgets the apex from apex-carrying simplices and kills the rest, and the
lift is its adjoint.  Both commute with the boundary, so extensions of
coboundary tables stay coboundary tables and strongness is preserved in
both directions.
"""

from __future__ import annotations

from math import comb

import numpy as np

from .coboundary import ChainMatrix
from .metric import KMetric
from .simplicial import (
    LinearChainOperator,
    enumerate_simplices,
    simplex_index,
)


def apex_extend(d: KMetric) -> KMetric:
    """Arity k+1 table on n+1 vertices; apex-free tuples get zero."""
    n2, k2 = d.n + 1, d.k + 1
    apex = d.n
    values = np.zeros(comb(n2, k2))
    for i, s in enumerate(enumerate_simplices(n2, k2 - 1)):
        if s[-1] == apex:
            values[i] = d.values[simplex_index(d.n, s[:-1])]
    return KMetric(n=n2, k=k2, values=values)


def project_operator(n: int, h: int) -> LinearChainOperator:
    """Drop the apex: h-chains on n+1 vertices to (h-1)-chains on n.

    A simplex containing the apex maps to itself minus the apex with sign +1
    (the apex is the largest vertex, so it sits last in canonical order);
    apex-free simplices map to zero.
    """
    if h < 1 or h > n:
        raise ValueError(f"need 1 <= h <= n, got h={h}, n={n}")
    apex = n
    src = enumerate_simplices(n + 1, h)
    mat = np.zeros((comb(n, h), comb(n + 1, h + 1)), dtype=np.int64)
    for j, s in enumerate(src):
        if s[-1] == apex:
            mat[simplex_index(n, s[:-1]), j] = 1
    return LinearChainOperator(n=n + 1, src_dim=h, dst_dim=h - 1, matrix=mat, dst_n=n)


def lift_operator(n: int, h: int) -> LinearChainOperator:
    """Adjoint of project: (h-1)-chains on n vertices to h-chains on n+1.

    Each simplex is sent to itself with the apex appended.
    """
    proj = project_operator(n, h)
    return LinearChainOperator(
        n=n, src_dim=h - 1, dst_dim=h, matrix=proj.matrix.T, dst_n=n + 1
    )


def apex_extend_chain_matrix(F: ChainMatrix) -> ChainMatrix:
    """Lift every column through the apex; evaluation commutes with apex_extend."""
    lift = lift_operator(F.n, F.k - 1)
    return ChainMatrix(n=F.n + 1, k=F.k + 1, data=lift.matrix.astype(float) @ F.data)
