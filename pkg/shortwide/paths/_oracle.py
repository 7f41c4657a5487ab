"""
Exhaustive ground truth on small graphs.

Every simple path between two nodes is enumerated and each distance notion is
evaluated literally on it. The number of paths grows factorially with the
number of nodes, hence the size guard.
"""
import math
from dataclasses import dataclass

import networkx as nx

from ..exceptions import OracleSizeError
from ..utils.checkers import _check_node

MAX_ORACLE_NODES = 14


@dataclass(frozen=True)
class OracleResult:
    """
    Exact distances between s and t, with every path attaining each optimum.

    Distances are ``math.inf`` and path lists empty when t is unreachable.
    """
    source: int
    target: int
    geodesic: float
    weighted: float
    bottleneck: float
    minimax_width: float
    geodesic_paths: tuple
    weighted_paths: tuple
    bottleneck_paths: tuple
    minimax_width_paths: tuple
    path_count: int


def _check_size(g, max_nodes):
    if max_nodes is not None and g.n_nodes > max_nodes:
        raise OracleSizeError(
            f'exhaustive enumeration is limited to {max_nodes} nodes, '
            f'the graph has {g.n_nodes}; raise max_nodes to override')


def enumerate_simple_paths(g, s, t, max_nodes=MAX_ORACLE_NODES):
    """
    Every simple path from s to t, each exactly once.

    Paths are sorted by length, then lexicographically. For ``s == t`` the
    single path ``[s]`` is returned.

    Parameters
    ----------
    g : WeightedGraph
        Input graph.
    s, t : int
        End nodes.
    max_nodes : int or None, optional
        Refuse graphs with more nodes than this (None disables the guard).

    Returns
    -------
    list of list of int
        The paths.

    Raises
    ------
    OracleSizeError
        If the graph exceeds max_nodes.

    Examples
    --------
    >>> from shortwide.graphs import parse_edge_list
    >>> enumerate_simple_paths(parse_edge_list("a b 5\\na c 1\\nc b 1"), 0, 1)
    [[0, 1], [0, 2, 1]]
    """
    _check_size(g, max_nodes)
    _check_node(g, s)
    _check_node(g, t)
    if s == t:
        return [[s]]
    paths = nx.all_simple_paths(g.to_networkx(), s, t)
    return sorted(paths, key=lambda path: (len(path), path))


def count_simple_paths(g, s, t, max_nodes=MAX_ORACLE_NODES):
    """Count simple s-t paths by recursive backtracking, without storing them."""
    _check_size(g, max_nodes)
    _check_node(g, s)
    _check_node(g, t)
    if s == t:
        return 1

    def count(u, visited):
        total = 0
        for v, _ in g.neighbors(u):
            if v == t:
                total += 1
            elif v not in visited:
                visited.add(v)
                total += count(v, visited)
                visited.remove(v)
        return total

    return count(s, {s})


def _path_weights(g, path):
    return [g.weight(u, v) for u, v in zip(path, path[1:])]


def _optimum(values, paths):
    if not paths:
        return math.inf, ()
    best = min(values)
    return best, tuple(tuple(p) for p, v in zip(paths, values) if v == best)


def oracle_distances(g, s, t, max_nodes=MAX_ORACLE_NODES):
    """
    Evaluate the four distance notions over every simple s-t path.

    The weighted length is summed from s to t in path order; the bottleneck
    cost is ``hops * max(weights)``; the minimax width is ``max(weights)``.
    For ``s == t`` every distance is 0 and the only path is ``(s,)``.

    Parameters
    ----------
    g : WeightedGraph
        Input graph.
    s, t : int
        End nodes.
    max_nodes : int or None, optional
        Size guard passed to :func:`enumerate_simple_paths`.

    Returns
    -------
    OracleResult
        Optimal values and optimal paths.
    """
    paths = enumerate_simple_paths(g, s, t, max_nodes)
    geodesic, weighted, bottleneck, width = [], [], [], []
    for path in paths:
        weights = _path_weights(g, path)
        hops = len(weights)
        largest = max(weights) if weights else 0.0
        total = 0.0
        for w in weights:
            total += w
        geodesic.append(float(hops))
        weighted.append(total)
        bottleneck.append(hops * largest)
        width.append(largest)
    d_g, p_g = _optimum(geodesic, paths)
    d_w, p_w = _optimum(weighted, paths)
    d_b, p_b = _optimum(bottleneck, paths)
    d_m, p_m = _optimum(width, paths)
    return OracleResult(s, t, d_g, d_w, d_b, d_m, p_g, p_w, p_b, p_m, len(paths))


def oracle_matrix(g, notion='bottleneck', max_nodes=MAX_ORACLE_NODES):
    """
    All-pairs matrix of one distance notion computed by the oracle.

    Returns
    -------
    list of list of float
        Symmetric matrix, ``math.inf`` for unreachable pairs.
    """
    n = g.n_nodes
    matrix = [[0.0] * n for _ in range(n)]
    for s in range(n):
        for t in range(s + 1, n):
            value = getattr(oracle_distances(g, s, t, max_nodes), notion)
            matrix[s][t] = matrix[t][s] = value
    return matrix
