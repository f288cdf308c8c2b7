"""Facet complexes: bounding-chain metrics, hypertree checks, 1-norm tables."""

from itertools import combinations
from math import comb

import numpy as np
import pytest

from kmetrics import (
    NormSpec,
    NotHypertreeError,
    UnfillableBoundaryError,
    WeightedComplex,
    apply_operator,
    boundary_operator,
    check_strong,
    cycle_space_dim,
    eval_coboundary_metric,
    hypertree_to_l1,
    indicator_chain,
    is_hypertree,
    mbc_metric,
    min_bounding_chain,
    random_2hypertree,
    random_spanning_tree,
)
from oracles import dijkstra_all_pairs

SUBDIVISION = ((0, 1, 4), (0, 3, 4), (1, 2, 5), (1, 4, 5), (0, 2, 3), (2, 3, 5), (3, 4, 5))


def _graph(n, edges, weights):
    return WeightedComplex(n=n, k=2, facets=tuple(edges), weights=np.asarray(weights, float))


def test_complex_validation():
    with pytest.raises(ValueError):
        _graph(3, [(0, 1), (0, 1)], [1.0, 1.0])  # duplicate facet
    with pytest.raises(ValueError):
        _graph(3, [(0, 1)], [0.0])  # weight must be positive
    with pytest.raises(ValueError):
        _graph(3, [(0, 1, 2)], [1.0])  # arity mismatch
    with pytest.raises(ValueError):
        WeightedComplex(n=3, k=2, facets=(), weights=np.array([]))


def test_path_graph_metric():
    K = _graph(3, [(0, 1), (1, 2)], [1.0, 1.0])
    d = mbc_metric(K)
    assert d.value((0, 1)) == pytest.approx(1.0)
    assert d.value((1, 2)) == pytest.approx(1.0)
    assert d.value((0, 2)) == pytest.approx(2.0)


def test_subdivision_facets_give_cost_seven():
    # the disc of seven triangles cannot fill every tuple on 6 vertices,
    # so ask only for the outer triangle it was built to bound
    K = WeightedComplex(n=6, k=3, facets=SUBDIVISION, weights=np.ones(7))
    weights = np.zeros(comb(6, 3))
    weights[K.facet_indices()] = K.weights
    target = apply_operator(boundary_operator(6, 2), indicator_chain(6, (0, 1, 2)))
    cost, chain = min_bounding_chain(weights, target, mask=K.facet_indices())
    assert cost == pytest.approx(7.0, abs=1e-9)
    assert sorted(chain.support()) == sorted(tuple(sorted(t)) for t in SUBDIVISION)
    with pytest.raises(UnfillableBoundaryError):
        mbc_metric(K)  # tuples off the disc have no facet-supported chain


def test_complete_triangle_facets_unit_weights():
    facets = tuple(combinations(range(5), 3))
    K = WeightedComplex(n=5, k=3, facets=facets, weights=np.ones(len(facets)))
    d = mbc_metric(K)
    assert np.allclose(d.values, 1.0, atol=1e-9)


def test_mbc_metric_unfillable_target():
    # single triangle cannot bound tuples touching vertex 3
    K = WeightedComplex(n=4, k=3, facets=((0, 1, 2),), weights=np.ones(1))
    with pytest.raises(UnfillableBoundaryError) as err:
        mbc_metric(K)
    assert "does not fill" in str(err.value)


def test_mbc_metric_matches_dijkstra_on_graphs():
    rng = np.random.default_rng(35)
    for trial in range(8):
        n = int(rng.integers(3, 7))
        edges = list(combinations(range(n), 2))
        keep = [e for e in edges if rng.uniform() < 0.7]
        # always keep a spanning path so the graph is connected
        for i in range(n - 1):
            if (i, i + 1) not in keep:
                keep.append((i, i + 1))
        keep = sorted(set(keep))
        w = {e: float(rng.uniform(0.2, 2.0)) for e in keep}
        K = _graph(n, keep, [w[e] for e in keep])
        d = mbc_metric(K)
        dist = dijkstra_all_pairs(n, w)
        for i, j in combinations(range(n), 2):
            assert d.value((i, j)) == pytest.approx(dist[i, j], abs=1e-8), trial


def test_mbc_metric_is_strong():
    rng = np.random.default_rng(37)
    for n, k in [(5, 2), (5, 3), (6, 3)]:
        facets = tuple(combinations(range(n), k))
        K = WeightedComplex(
            n=n, k=k, facets=facets, weights=rng.uniform(0.5, 2.0, size=len(facets))
        )
        assert check_strong(mbc_metric(K)).is_strong


def test_mbc_metric_monotone_under_facet_addition():
    rng = np.random.default_rng(39)
    base_edges = [(0, 1), (1, 2), (2, 3)]
    K1 = _graph(4, base_edges, [1.0, 1.0, 1.0])
    K2 = _graph(4, base_edges + [(0, 3)], [1.0, 1.0, 1.0, 0.5])
    d1, d2 = mbc_metric(K1), mbc_metric(K2)
    assert (d2.values <= d1.values + 1e-9).all()
    assert d2.value((0, 3)) == pytest.approx(0.5)


def test_spanning_tree_is_hypertree():
    K = random_spanning_tree(4, seed=0)
    report = is_hypertree(K)
    assert report.is_hypertree and report.acyclic and report.fills_cycles
    assert report.facet_count == 3
    assert report.cycle_space_dim == 3


def test_cycle_graph_is_not_acyclic():
    K = _graph(3, [(0, 1), (0, 2), (1, 2)], [1.0, 1.0, 1.0])
    report = is_hypertree(K)
    assert not report.acyclic
    assert report.fills_cycles
    assert not report.is_hypertree


def test_disconnected_graph_does_not_fill():
    K = _graph(4, [(0, 1), (2, 3)], [1.0, 1.0])
    report = is_hypertree(K)
    assert report.acyclic
    assert not report.fills_cycles


def test_all_but_one_triangle_on_four_vertices():
    # the four triangles have a single dependency, so dropping any one of
    # them leaves an independent facet set that still spans the edge cycles
    assert cycle_space_dim(4, 2) == 1
    facets = tuple(combinations(range(4), 3))[:-1]
    K = WeightedComplex(n=4, k=3, facets=facets, weights=np.ones(3))
    report = is_hypertree(K)
    assert report.is_hypertree
    assert report.facet_rank == 3
    assert report.cycle_space_dim == 3


def test_cycle_space_dims():
    assert cycle_space_dim(5, 0) == 4
    assert cycle_space_dim(5, 1) == comb(4, 2)
    assert cycle_space_dim(6, 2) == comb(5, 3)


def test_star_tree_l1_table():
    K = _graph(4, [(0, 1), (0, 2), (0, 3)], [1.0, 1.0, 1.0])
    F = hypertree_to_l1(K)
    d = eval_coboundary_metric(F, NormSpec(1))
    want = mbc_metric(K)
    assert np.allclose(d.values, want.values, atol=1e-8)
    assert d.value((1, 2)) == pytest.approx(2.0)


def test_weighted_path_l1_table():
    K = _graph(4, [(0, 1), (1, 2), (2, 3)], [1.0, 2.0, 3.0])
    d = eval_coboundary_metric(hypertree_to_l1(K), NormSpec(1))
    assert d.value((0, 3)) == pytest.approx(6.0, abs=1e-8)


def test_2hypertree_l1_round_trip():
    for seed in range(3):
        K = random_2hypertree(5, seed=seed)
        assert is_hypertree(K).is_hypertree
        d = eval_coboundary_metric(hypertree_to_l1(K), NormSpec(1))
        want = mbc_metric(K)
        assert np.allclose(d.values, want.values, rtol=1e-6, atol=1e-8)


def test_random_tree_l1_round_trips():
    for seed in range(6):
        n = 4 + (seed % 5)
        K = random_spanning_tree(n, seed=seed)
        d = eval_coboundary_metric(hypertree_to_l1(K), NormSpec(1))
        want = mbc_metric(K)
        assert np.allclose(d.values, want.values, rtol=1e-6, atol=1e-8)


def test_l1_rejects_non_hypertrees():
    K = _graph(3, [(0, 1), (0, 2), (1, 2)], [1.0, 1.0, 1.0])
    with pytest.raises(NotHypertreeError):
        hypertree_to_l1(K)


def test_generators_are_deterministic():
    a = random_spanning_tree(6, seed=4)
    b = random_spanning_tree(6, seed=4)
    assert a.facets == b.facets
    assert np.array_equal(a.weights, b.weights)
    c = random_2hypertree(5, seed=2)
    d = random_2hypertree(5, seed=2)
    assert c.facets == d.facets
