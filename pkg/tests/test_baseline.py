import math

import numpy as np
import pytest

from conftest import random_suite
from shortwide.data import load_fixture
from shortwide.exceptions import OracleSizeError
from shortwide.graphs import parse_edge_list
from shortwide.paths import (NOTIONS, all_pairs_distances, bottleneck_bounds,
                             count_simple_paths, distance_records, enumerate_simple_paths,
                             geodesic_all, geodesic_width_all, minimax_width_all,
                             oracle_distances, oracle_matrix, weighted_all)

SUITE = random_suite(count=40, max_nodes=8, seed=11)


def test_baselines_on_triangle(triangle):
    assert geodesic_all(triangle, 0).tolist() == [0.0, 1.0, 1.0]
    assert weighted_all(triangle, 0).tolist() == [0.0, 2.0, 1.0]
    assert minimax_width_all(triangle, 0).tolist() == [0.0, 1.0, 1.0]


def test_minimax_predecessors_prefer_fewer_hops():
    g = parse_edge_list('s t 1\ns a 1\na t 1')
    width, pred = minimax_width_all(g, 0, return_predecessors=True)
    assert width.tolist() == [0.0, 1.0, 1.0]
    assert pred.tolist() == [-1, 0, 0]


def test_unit_weights_make_three_notions_equal():
    m = all_pairs_distances(load_fixture('unit_square'))
    assert np.array_equal(m['geodesic'], m['weighted'])
    assert np.array_equal(m['geodesic'], m['bottleneck'])


def test_all_pairs_matrices_are_symmetric(substructure):
    m = all_pairs_distances(substructure, strategy='labelset_fw')
    assert set(m) == set(NOTIONS)
    for matrix in m.values():
        assert np.array_equal(matrix, matrix.T)
        assert np.all(np.diag(matrix) == 0)


def test_distance_ordering_on_random_graphs():
    for g in SUITE:
        m = all_pairs_distances(g)
        assert np.all(m['weighted'] <= m['bottleneck'] * (1 + 1e-12))
        # every weight is at most 1 in the suite
        assert np.all(m['bottleneck'] <= m['geodesic'])


def test_distance_ordering_with_heavy_weights(triangle):
    m = all_pairs_distances(triangle)
    assert np.all(m['weighted'] <= m['bottleneck'])
    # with a weight above 1, d_B can exceed d_G
    assert m['bottleneck'][0, 1] == 2.0 > m['geodesic'][0, 1]


def test_bottleneck_bounds_bracket_exact_distances():
    for g in SUITE:
        exact = all_pairs_distances(g)['bottleneck']
        for s in range(g.n_nodes):
            lower, upper = bottleneck_bounds(g, s)
            assert np.all(lower <= exact[s])
            assert np.all(exact[s] <= upper)


def test_geodesic_width_on_substructure(substructure):
    s = substructure.node_index('s')
    width = geodesic_width_all(substructure, s)
    assert width[substructure.node_index('x')] == 3.0
    assert width[substructure.node_index('t')] == 3.0
    assert width[substructure.node_index('a')] == 1.0


def test_distance_records(substructure):
    s, t = substructure.node_index('s'), substructure.node_index('t')
    record = distance_records(substructure, s)[t]
    assert (record.geodesic, record.weighted, record.bottleneck, record.minimax_width) == \
        (2.0, 5.0, 6.0, 3.0)


def test_unreachable_pairs_are_infinite():
    g = parse_edge_list('a b 1\nc d 0.5')
    m = all_pairs_distances(g)
    for notion in NOTIONS:
        assert np.isinf(m[notion][0, 3])


def test_enumerate_simple_paths_lists_each_path_once():
    g = parse_edge_list('a b 1\nb c 1\nc d 1\nd a 1\na c 1')
    paths = enumerate_simple_paths(g, 0, 2)
    assert sorted(map(tuple, paths)) == [(0, 1, 2), (0, 2), (0, 3, 2)]
    assert count_simple_paths(g, 0, 2) == 3
    assert enumerate_simple_paths(g, 1, 1) == [[1]]


def test_complete_graph_path_count():
    # simple paths between two nodes of K5: sum over k of 3!/(3-k)!
    edges = '\n'.join(f'{u} {v} 1' for u in range(5) for v in range(u + 1, 5))
    g = parse_edge_list(edges)
    assert count_simple_paths(g, 0, 1) == 1 + 3 + 6 + 6
    assert len(enumerate_simple_paths(g, 0, 1)) == 16


def test_oracle_size_guard():
    edges = '\n'.join(f'n{i} n{i + 1} 1' for i in range(15))
    g = parse_edge_list(edges)
    with pytest.raises(OracleSizeError):
        enumerate_simple_paths(g, 0, 1)
    assert len(enumerate_simple_paths(g, 0, 15, max_nodes=None)) == 1


def test_oracle_distances_list_optimal_paths(substructure):
    s, x, a, t = (substructure.node_index(name) for name in 'sxat')
    result = oracle_distances(substructure, s, x)
    assert result.path_count == 2
    assert result.bottleneck == 2.0 and result.bottleneck_paths == ((s, a, x),)
    assert result.geodesic == 1.0 and result.geodesic_paths == ((s, x),)
    assert result.weighted == 2.0 and result.minimax_width == 1.0


def test_oracle_unreachable():
    g = parse_edge_list('a b 1\nc d 1')
    result = oracle_distances(g, 0, 2)
    assert math.isinf(result.bottleneck) and result.bottleneck_paths == ()
    assert result.path_count == 0


def test_oracle_matches_baselines_on_random_graphs():
    for g in SUITE:
        m = all_pairs_distances(g)
        for notion in ('geodesic', 'minimax_width', 'bottleneck'):
            assert np.array_equal(m[notion], np.array(oracle_matrix(g, notion))), notion
        np.testing.assert_allclose(m['weighted'], np.array(oracle_matrix(g, 'weighted')),
                                   rtol=1e-12)
