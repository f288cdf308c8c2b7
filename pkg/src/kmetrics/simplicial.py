"""Simplices of a complete complex, chains, and boundary/coboundary operators.

Vertices are integers 0..n-1.  A simplex of dimension d is stored canonically
as a strictly increasing tuple of d+1 vertices, and the simplices of one
dimension are ordered lexicographically.  All boundary matrices are dense with
integer entries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

import numpy as np

# Hard cap on the number of simplices materialised per dimension; the dense
# matrices are quadratic in this count.
MAX_SIMPLICES = 2_000_000

SimplexKey = tuple  # strictly increasing tuple of vertex indices


def _check_counts(n: int, dim: int) -> int:
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    if dim < 0 or dim >= n:
        raise ValueError(f"dimension {dim} out of range for n={n}")
    count = comb(n, dim + 1)
    if count > MAX_SIMPLICES:
        raise ValueError(
            f"refusing to enumerate {count} simplices (n={n}, dim={dim}); "
            f"limit is {MAX_SIMPLICES}"
        )
    return count


@lru_cache(maxsize=None)
def enumerate_simplices(n: int, dim: int) -> tuple:
    """All dim-simplices on n vertices, lexicographically sorted tuples."""
    _check_counts(n, dim)
    return tuple(itertools.combinations(range(n), dim + 1))


@lru_cache(maxsize=None)
def _index_map(n: int, dim: int) -> dict:
    return {s: i for i, s in enumerate(enumerate_simplices(n, dim))}


def simplex_index(n: int, verts: Sequence[int]) -> int:
    """Position of a canonical simplex in the lexicographic order."""
    key = tuple(verts)
    try:
        return _index_map(n, len(key) - 1)[key]
    except KeyError:
        raise ValueError(f"{key} is not a canonical simplex on {n} vertices") from None


def validate_simplex(n: int, verts: Sequence[int]) -> SimplexKey:
    """Check strict monotonicity and vertex range; return the tuple."""
    key = tuple(int(v) for v in verts)
    if not key:
        raise ValueError("empty simplex")
    if any(b <= a for a, b in zip(key, key[1:])):
        raise ValueError(f"vertices must be strictly increasing, got {key}")
    if key[0] < 0 or key[-1] >= n:
        raise ValueError(f"vertex out of range 0..{n - 1}: {key}")
    return key


def orientation_sign(sequence: Sequence[int]) -> int:
    """Sign of the permutation sorting the sequence; repeats are rejected.

    +1 when an even number of transpositions sorts the vertices, -1 for odd.
    """
    seq = list(sequence)
    if len(set(seq)) != len(seq):
        raise ValueError(f"repeated vertex in {tuple(sequence)}")
    sign = 1
    # insertion sort, counting swaps; sequences here are short
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    return sign


@dataclass(frozen=True)
class OrientedSimplex:
    """An ordered vertex tuple together with its parity against canonical order."""

    sequence: tuple
    sign: int

    @classmethod
    def from_sequence(cls, sequence: Sequence[int]) -> "OrientedSimplex":
        seq = tuple(int(v) for v in sequence)
        return cls(sequence=seq, sign=orientation_sign(seq))

    @property
    def key(self) -> SimplexKey:
        return tuple(sorted(self.sequence))


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class Chain:
    """A formal linear combination of the dim-simplices on n vertices."""

    n: int
    dim: int
    coeffs: np.ndarray

    def __post_init__(self):
        count = _check_counts(self.n, self.dim)
        arr = np.array(self.coeffs, dtype=float).reshape(-1)
        if arr.shape != (count,):
            raise ValueError(
                f"expected {count} coefficients for dim={self.dim}, n={self.n}, "
                f"got {arr.shape}"
            )
        object.__setattr__(self, "coeffs", _freeze(arr))

    def support(self) -> list:
        simp = enumerate_simplices(self.n, self.dim)
        return [simp[i] for i in np.nonzero(self.coeffs)[0]]

    def norm1(self) -> float:
        return float(np.sum(np.abs(self.coeffs)))


def zero_chain(n: int, dim: int) -> Chain:
    return Chain(n=n, dim=dim, coeffs=np.zeros(comb(n, dim + 1)))


def indicator_chain(n: int, sequence: Sequence[int], value: float = 1.0) -> Chain:
    """Chain carrying `value` on the oriented simplex given by `sequence`.

    The sequence may be unsorted; its permutation parity becomes the sign of
    the coefficient on the canonical simplex.
    """
    oriented = OrientedSimplex.from_sequence(sequence)
    key = validate_simplex(n, oriented.key)
    coeffs = np.zeros(comb(n, len(key)))
    coeffs[simplex_index(n, key)] = oriented.sign * value
    return Chain(n=n, dim=len(key) - 1, coeffs=coeffs)


def chain_from_dict(n: int, dim: int, entries: dict) -> Chain:
    """Chain from {ordered vertex tuple: coefficient}; orientations accumulate."""
    coeffs = np.zeros(comb(n, dim + 1))
    for sequence, value in entries.items():
        oriented = OrientedSimplex.from_sequence(sequence)
        if len(oriented.key) != dim + 1:
            raise ValueError(f"{sequence} does not have dimension {dim}")
        validate_simplex(n, oriented.key)
        coeffs[simplex_index(n, oriented.key)] += oriented.sign * value
    return Chain(n=n, dim=dim, coeffs=coeffs)


@dataclass(frozen=True)
class LinearChainOperator:
    """Dense linear map between chain groups.

    Maps src_dim-chains on n vertices to dst_dim-chains on dst_n vertices
    (dst_n defaults to n; it differs for the apex lift/project operators).
    """

    n: int
    src_dim: int
    dst_dim: int
    matrix: np.ndarray
    dst_n: int = 0

    def __post_init__(self):
        if self.dst_n == 0:
            object.__setattr__(self, "dst_n", self.n)
        rows = _check_counts(self.dst_n, self.dst_dim)
        cols = _check_counts(self.n, self.src_dim)
        arr = np.asarray(self.matrix)
        if arr.shape != (rows, cols):
            raise ValueError(
                f"operator shape {arr.shape} does not match ({rows}, {cols})"
            )
        object.__setattr__(self, "matrix", _freeze(np.array(arr)))


@lru_cache(maxsize=None)
def boundary_operator(n: int, dim: int) -> LinearChainOperator:
    """Boundary of dim-chains: alternating sum of facets, leading face positive.

    The column of a simplex (x1, ..., x_{dim+1}) holds (-1)**(i+1) at the face
    that omits x_i (1-based i).  Entries are exact integers.
    """
    if dim < 1:
        raise ValueError(f"boundary is defined for dimension >= 1, got {dim}")
    rows = _check_counts(n, dim - 1)
    cols = _check_counts(n, dim)
    faces = _index_map(n, dim - 1)
    mat = np.zeros((rows, cols), dtype=np.int64)
    for j, simplex in enumerate(enumerate_simplices(n, dim)):
        sign = 1
        for i in range(dim + 1):
            face = simplex[:i] + simplex[i + 1 :]
            mat[faces[face], j] = sign
            sign = -sign
    return LinearChainOperator(n=n, src_dim=dim, dst_dim=dim - 1, matrix=mat)


@lru_cache(maxsize=None)
def coboundary_operator(n: int, dim: int) -> LinearChainOperator:
    """Adjoint of the boundary: maps dim-chains to (dim+1)-chains."""
    if dim < 0 or dim >= n - 1:
        raise ValueError(f"coboundary needs 0 <= dim < n-1, got dim={dim}, n={n}")
    partial = boundary_operator(n, dim + 1)
    return LinearChainOperator(
        n=n, src_dim=dim, dst_dim=dim + 1, matrix=partial.matrix.T
    )


def apply_operator(op: LinearChainOperator, chain: Chain) -> Chain:
    """Matrix action of op on a chain; dimensions and vertex counts must match."""
    if chain.n != op.n or chain.dim != op.src_dim:
        raise ValueError(
            f"operator expects dim={op.src_dim} chains on {op.n} vertices, "
            f"got dim={chain.dim} on {chain.n}"
        )
    return Chain(n=op.dst_n, dim=op.dst_dim, coeffs=op.matrix @ chain.coeffs)
