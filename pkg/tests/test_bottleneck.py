import math

import numpy as np
import pytest

from conftest import random_suite
from shortwide.data import FIXTURES, load_fixture
from shortwide.exceptions import InvalidNodeError, UnreachableError
from shortwide.graphs import WeightedGraph, distinct_weight_count, parse_edge_list
from shortwide.paths import (STRATEGIES, all_pairs_bottleneck, label_chain,
                             one_to_all_bottleneck, oracle_matrix, reconstruct_path)

SUITE = random_suite()


def test_triangle_prefers_two_narrow_hops(triangle):
    result = one_to_all_bottleneck(triangle, 0)
    assert result.distance(1) == 2.0
    assert reconstruct_path(result, 1) == [0, 2, 1]


def test_substructure_violation(substructure):
    s, a, x, t = (substructure.node_index(name) for name in 'saxt')
    result = one_to_all_bottleneck(substructure, s)
    assert result.distance(x) == 2.0
    assert reconstruct_path(result, x) == [s, a, x]
    assert result.distance(t) == 6.0
    path = reconstruct_path(result, t)
    assert path == [s, x, t]
    # prefix of the optimal s-t path costs more than d_B(s, x)
    assert 1 * substructure.weight(path[0], path[1]) == 3.0 > result.distance(x)


def test_substructure_keeps_both_labels_at_x(substructure):
    s, x = substructure.node_index('s'), substructure.node_index('x')
    result = one_to_all_bottleneck(substructure, s)
    assert result.label_sets[x].keys() == [(2, 1.0), (1, 3.0)]


def test_reconstructed_path_matches_label(substructure):
    s, t = substructure.node_index('s'), substructure.node_index('t')
    result = one_to_all_bottleneck(substructure, s)
    chain = label_chain(result, t)
    path = reconstruct_path(result, t)
    assert [label.hops for label in chain] == list(range(len(path)))
    weights = [substructure.weight(u, v) for u, v in zip(path, path[1:])]
    assert chain[-1].max_width == max(weights)
    assert chain[-1].product == len(weights) * max(weights)


def test_frontier_paths_are_simple_with_nondecreasing_products():
    for g in SUITE:
        for s in range(g.n_nodes):
            result = one_to_all_bottleneck(g, s)
            for t in range(g.n_nodes):
                for index in result.frontier_indices[t]:
                    path = reconstruct_path(result, t, index)
                    assert path[0] == s and path[-1] == t
                    assert len(set(path)) == len(path)
                    chain = label_chain(result, t, index)
                    assert [label.hops for label in chain] == list(range(len(path)))
                    products = [label.product for label in chain]
                    assert products == sorted(products)
                    widths = [g.weight(u, v) for u, v in zip(path, path[1:])]
                    assert chain[-1].max_width == max(widths, default=0.0)


def test_every_frontier_label_has_a_path(substructure):
    s, x = substructure.node_index('s'), substructure.node_index('x')
    result = one_to_all_bottleneck(substructure, s)
    for index in result.frontier_indices[x]:
        label = result.store[x][index]
        path = reconstruct_path(result, x, index)
        weights = [substructure.weight(u, v) for u, v in zip(path, path[1:])]
        assert (len(weights), max(weights)) == label.key


def test_source_distance_is_zero(star):
    result = one_to_all_bottleneck(star, 2)
    assert result.distance(2) == 0.0
    assert reconstruct_path(result, 2) == [2]


def test_disconnected_targets_are_infinite():
    g = parse_edge_list('a b 1\nc d 0.5')
    result = one_to_all_bottleneck(g, 0)
    assert math.isinf(result.distance(2))
    assert len(result.label_sets[3]) == 0
    with pytest.raises(UnreachableError):
        reconstruct_path(result, 3)


def test_invalid_source(triangle):
    with pytest.raises(InvalidNodeError):
        one_to_all_bottleneck(triangle, 3)
    with pytest.raises(InvalidNodeError):
        one_to_all_bottleneck(triangle, -1)
    with pytest.raises(InvalidNodeError):
        reconstruct_path(one_to_all_bottleneck(triangle, 0), 5)


def test_single_node_graph():
    result = one_to_all_bottleneck(WeightedGraph(1), 0)
    assert result.distances.tolist() == [0.0]


@pytest.mark.parametrize('strategy', STRATEGIES)
def test_unknown_strategy_rejected(strategy, triangle):
    assert all_pairs_bottleneck(triangle, strategy).strategy == strategy
    with pytest.raises(ValueError):
        all_pairs_bottleneck(triangle, 'dijkstra')


@pytest.mark.parametrize('name', [n for n in FIXTURES if n != 'weighted50'])
@pytest.mark.parametrize('strategy', STRATEGIES)
def test_fixtures_match_oracle(name, strategy):
    g = load_fixture(name)
    expected = np.array(oracle_matrix(g, 'bottleneck'))
    assert np.array_equal(all_pairs_bottleneck(g, strategy).distances, expected)


def test_random_suite_matches_oracle():
    assert len(SUITE) >= 100
    for g in SUITE:
        expected = np.array(oracle_matrix(g, 'bottleneck'))
        for strategy in STRATEGIES:
            result = all_pairs_bottleneck(g, strategy)
            assert np.array_equal(result.distances, expected), (strategy, g.edges())


def test_random_suite_frontier_bounded_by_distinct_weights():
    for g in SUITE:
        bound = distinct_weight_count(g)
        for s in range(g.n_nodes):
            result = one_to_all_bottleneck(g, s)
            assert result.max_frontier_size <= bound
            assert all(len(labels) <= bound for labels in result.label_sets)


def test_frontiers_sorted_and_non_dominated():
    for g in SUITE[:30]:
        for labels in all_pairs_bottleneck(g, 'labelset_fw').label_sets[0][1:]:
            widths = [label.max_width for label in labels]
            hops = [label.hops for label in labels]
            assert widths == sorted(set(widths))
            assert hops == sorted(set(hops), reverse=True)


def test_strategies_agree_on_weighted50():
    g = load_fixture('weighted50')
    fw = all_pairs_bottleneck(g, 'labelset_fw')
    sssp = all_pairs_bottleneck(g, 'parallel_sssp', workers=2)
    assert np.array_equal(fw.distances, sssp.distances)
    assert np.array_equal(fw.distances, fw.distances.T)
    assert np.all(np.diag(fw.distances) == 0)


def test_all_pairs_disconnected():
    g = parse_edge_list('a b 1\nc d 0.5')
    for strategy in STRATEGIES:
        d = all_pairs_bottleneck(g, strategy).distances
        assert d[0, 1] == 1.0 and d[2, 3] == 0.5
        assert np.isinf(d[0, 2]) and np.isinf(d[3, 1])


def test_one_to_all_rows_match_all_pairs():
    g = load_fixture('weighted50')
    d = all_pairs_bottleneck(g, 'labelset_fw').distances
    for s in (0, 17, 49):
        assert np.array_equal(one_to_all_bottleneck(g, s).distances, d[s])
