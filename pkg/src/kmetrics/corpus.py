"""Named instances exercising every capability, with their expected verdicts.

Each constructor returns the instance payload bundled with a map of expected,
machine-checkable outcomes (weak/strong verdicts, witness costs, value
tables) that the test suite and the command line generator both consume.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, sqrt
from typing import Optional

import numpy as np

from .coboundary import ChainMatrix
from .hypertree import WeightedComplex, mbc_metric
from .metric import KMetric
from .simplicial import Chain, chain_from_dict, simplex_index
from .volume import PointCloud

# The seven small triangles of an edgewise-subdivided triangle: 0,1,2 are the
# corners, 3,4,5 the midpoints opposite to them (3 between 0 and 2, 4 between
# 0 and 1, 5 between 1 and 2).  Orientations are chosen so the chain's
# boundary is the boundary of the corner triangle (0,1,2).
SUBDIVISION_TRIANGLES = (
    (0, 1, 4),
    (0, 4, 3),
    (1, 2, 5),
    (1, 5, 4),
    (0, 3, 2),
    (2, 3, 5),
    (3, 4, 5),
)


@dataclass(frozen=True)
class CorpusInstance:
    name: str
    payload: object
    expected: dict
    aux: dict = field(default_factory=dict)


def subdivision_chain() -> Chain:
    """The oriented 7-triangle chain filling the boundary of (0, 1, 2)."""
    return chain_from_dict(6, 2, {t: 1.0 for t in SUBDIVISION_TRIANGLES})


def subdivided_triangle(high: float = 10.0) -> CorpusInstance:
    """Weak-but-not-strong 3-metric: cheap subdivision triangles, dear rest.

    The seven subdivision triangles cost 1 and every other triple costs
    `high`; the subdivision chain then bounds the corner triple (0, 1, 2)
    at total cost 7, undercutting its table value.
    """
    values = np.full(comb(6, 3), float(high))
    for t in SUBDIVISION_TRIANGLES:
        values[simplex_index(6, tuple(sorted(t)))] = 1.0
    payload = KMetric(n=6, k=3, values=values)
    return CorpusInstance(
        name="subdivided-triangle",
        payload=payload,
        expected={
            "weak": True,
            "strong": False,
            "witness_simplex": (0, 1, 2),
            "witness_cost": 7.0,
            "witness_value": float(high),
        },
        aux={"filling_chain": subdivision_chain()},
    )


def discrete_metric(n: int, k: int) -> CorpusInstance:
    """Every distinct k-tuple at distance one; strong at all checked sizes."""
    payload = KMetric(n=n, k=k, values=np.ones(comb(n, k)))
    aux = {}
    if k == 3:
        # the all-ones edge chain realises the table as a 1-norm coboundary
        aux["inducing_chain_matrix"] = ChainMatrix(
            n=n, k=3, data=np.ones((comb(n, 2), 1))
        )
    return CorpusInstance(
        name="discrete",
        payload=payload,
        expected={"weak": True, "strong": True},
        aux=aux,
    )


def four_point_equilateral() -> CorpusInstance:
    """Planar edge labels on 4 points whose 2-norm table is {0, 1, 1, 1}.

    One triple collapses to zero while the three others have unit area.  A
    zero triangle area forces collinear points, and three collinear points
    cannot span three unit areas with a common fourth point, so this table
    is a coboundary table that no point cloud realises as volumes.
    """
    rows = comb(4, 2)
    data = np.zeros((rows, 2))
    data[simplex_index(4, (1, 3))] = [1.0, 0.0]
    data[simplex_index(4, (2, 3))] = [0.5, sqrt(3.0) / 2.0]
    payload = ChainMatrix(n=4, k=3, data=data)
    return CorpusInstance(
        name="four-point-equilateral",
        payload=payload,
        expected={
            "norm_p": 2,
            "values": {
                (0, 1, 2): 0.0,
                (0, 1, 3): 1.0,
                (0, 2, 3): 1.0,
                (1, 2, 3): 1.0,
            },
            "weak": True,
            "strong": True,
            "volume_realizable": False,
        },
    )


def six_point_apex_discrete() -> CorpusInstance:
    """Apex lift of the 5-point discrete 3-metric's inducing chain.

    The resulting arity-4 table is one on apex-carrying tuples and zero on
    the rest; it is a 1-norm coboundary table but not a volume table.
    """
    from .apex import apex_extend_chain_matrix  # local import, avoids a cycle

    base = discrete_metric(5, 3)
    payload = apex_extend_chain_matrix(base.aux["inducing_chain_matrix"])
    values = {}
    from .simplicial import enumerate_simplices

    for s in enumerate_simplices(6, 3):
        values[s] = 1.0 if s[-1] == 5 else 0.0
    return CorpusInstance(
        name="six-point-apex-discrete",
        payload=payload,
        expected={
            "norm_p": 1,
            "values": values,
            "weak": True,
            "strong": True,
            "volume_realizable": False,
        },
    )


def _pairwise_distances(cloud: PointCloud) -> np.ndarray:
    pts = cloud.points
    diff = pts[:, None, :] - pts[None, :, :]
    return np.sqrt((diff * diff).sum(axis=-1))


def perimeter_metric(cloud: PointCloud) -> CorpusInstance:
    """Arity-3 table summing the three pairwise distances of each triple."""
    from .simplicial import enumerate_simplices

    dist = _pairwise_distances(cloud)
    values = [
        dist[a, b] + dist[a, c] + dist[b, c]
        for a, b, c in enumerate_simplices(cloud.count, 2)
    ]
    payload = KMetric(n=cloud.count, k=3, values=np.array(values))
    return CorpusInstance(
        name="perimeter", payload=payload, expected={"weak": True}
    )


def max_side_metric(cloud: PointCloud) -> CorpusInstance:
    """Arity-3 table taking the longest pairwise distance of each triple."""
    from .simplicial import enumerate_simplices

    dist = _pairwise_distances(cloud)
    values = [
        max(dist[a, b], dist[a, c], dist[b, c])
        for a, b, c in enumerate_simplices(cloud.count, 2)
    ]
    payload = KMetric(n=cloud.count, k=3, values=np.array(values))
    return CorpusInstance(
        name="max-side", payload=payload, expected={"weak": True}
    )


def random_strong_metric(
    n: int, k: int, seed: int, weight_range: tuple = (0.5, 2.0)
) -> CorpusInstance:
    """Bounding-chain metric of the complete complex under random costs.

    Tables built this way satisfy the strong inequality by construction;
    equal costs everywhere reduce to a scaled discrete table.
    """
    from .simplicial import enumerate_simplices

    rng = np.random.default_rng(seed)
    facets = enumerate_simplices(n, k - 1)
    weights = rng.uniform(*weight_range, size=len(facets))
    complete = WeightedComplex(n=n, k=k, facets=facets, weights=weights)
    payload = mbc_metric(complete)
    return CorpusInstance(
        name="random-strong",
        payload=payload,
        expected={"weak": True, "strong": True},
        aux={"weights": weights},
    )
