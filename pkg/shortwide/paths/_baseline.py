"""Classical distances used as references for the bottleneck distance."""
import heapq
import logging
from dataclasses import dataclass

import numpy as np
from joblib import Parallel, delayed
from scipy.sparse.csgraph import shortest_path

from ._bottleneck import all_pairs_bottleneck, one_to_all_bottleneck
from ..utils.checkers import _check_node

logger = logging.getLogger(__name__)

NOTIONS = ('geodesic', 'weighted', 'bottleneck', 'minimax_width')


@dataclass(frozen=True)
class DistanceRecord:
    """
    All four distances between one pair of nodes.

    ``np.inf`` marks an unreachable pair in every field.
    """
    source: int
    target: int
    geodesic: float
    weighted: float
    bottleneck: float
    minimax_width: float


def geodesic_all(g, s):
    """
    Hop distances from s (breadth-first, weights ignored).

    Returns
    -------
    np.ndarray
        Hop count to every node as float, ``np.inf`` if unreachable.

    Examples
    --------
    >>> from shortwide.graphs import parse_edge_list
    >>> geodesic_all(parse_edge_list("a b 0.3\\nb c 7"), 0).tolist()
    [0.0, 1.0, 2.0]
    """
    _check_node(g, s)
    return shortest_path(g.to_csr(), directed=False, unweighted=True, indices=s)


def weighted_all(g, s):
    """
    Weighted shortest distances from s (Dijkstra).

    Returns
    -------
    np.ndarray
        Minimum total weight to every node, ``np.inf`` if unreachable.
    """
    _check_node(g, s)
    return shortest_path(g.to_csr(), method='D', directed=False, indices=s)


def minimax_width_all(g, s, return_predecessors=False):
    """
    Minimax widths from s: for every target, the minimum over paths of the
    largest edge weight, path length ignored.

    Among paths of equal width the one with fewer hops is recorded, so the
    predecessor tree is deterministic.

    Parameters
    ----------
    g : WeightedGraph
        Input graph.
    s : int
        Source node.
    return_predecessors : bool, optional
        Also return the predecessor of every node (-1 for the source and
        unreachable nodes).

    Returns
    -------
    widths : np.ndarray
        Minimax width of every node; 0 for s and ``np.inf`` if unreachable.
    predecessors : np.ndarray, optional
        Only if return_predecessors is True.
    """
    _check_node(g, s)
    n = g.n_nodes
    width = np.full(n, np.inf)
    hops = np.full(n, np.iinfo(np.int64).max, dtype=np.int64)
    pred = np.full(n, -1, dtype=np.int64)
    done = np.zeros(n, dtype=bool)
    width[s] = 0.0
    hops[s] = 0
    queue = [(0.0, 0, s)]
    while queue:
        w_u, h_u, u = heapq.heappop(queue)
        if done[u]:
            continue
        done[u] = True
        for v, w in g.neighbors(u):
            if done[v]:
                continue
            candidate = (max(w_u, w), h_u + 1)
            if candidate < (width[v], hops[v]):
                width[v], hops[v] = candidate
                pred[v] = u
                heapq.heappush(queue, (candidate[0], candidate[1], v))
    if return_predecessors:
        return width, pred
    return width


def geodesic_width_all(g, s):
    """
    Minimum, over fewest-hop paths from s, of the largest edge weight.

    Returns
    -------
    np.ndarray
        Width of the narrowest geodesic to every node; 0 for s, ``np.inf`` if
        unreachable.
    """
    hops = geodesic_all(g, s)
    width = np.full(g.n_nodes, np.inf)
    width[s] = 0.0
    for u in np.argsort(hops, kind='stable'):
        if not np.isfinite(hops[u]) or u == s:
            continue
        for v, w in g.neighbors(u):
            if hops[v] == hops[u] - 1:
                width[u] = min(width[u], max(width[v], w))
    return width


def bottleneck_bounds(g, s):
    """
    Cheap bounds on the bottleneck distances from s.

    Any path to t has at least ``d_G(s, t)`` hops and a width of at least
    the minimax width, which gives the lower bound; a fewest-hop path of
    minimum width gives the upper bound.

    Returns
    -------
    lower, upper : np.ndarray
        ``d_G * minimax_width`` and ``d_G * geodesic_width``.
    """
    hops = geodesic_all(g, s)
    with np.errstate(invalid='ignore'):
        lower = hops * minimax_width_all(g, s)
        upper = hops * geodesic_width_all(g, s)
    lower[s] = upper[s] = 0.0
    return lower, upper


def distance_records(g, s):
    """
    Return a :class:`DistanceRecord` for s and every node of g.
    """
    d_g = geodesic_all(g, s)
    d_w = weighted_all(g, s)
    d_b = one_to_all_bottleneck(g, s).distances
    width = minimax_width_all(g, s)
    return [DistanceRecord(s, t, float(d_g[t]), float(d_w[t]), float(d_b[t]), float(width[t]))
            for t in range(g.n_nodes)]


def all_pairs_distances(g, strategy='parallel_sssp', workers=1):
    """
    All-pairs matrices for the four distance notions.

    Parameters
    ----------
    g : WeightedGraph
        Input graph.
    strategy : str, optional
        Bottleneck strategy, see :func:`all_pairs_bottleneck`.
    workers : int, optional
        Number of joblib workers.

    Returns
    -------
    dict
        ``{'geodesic', 'weighted', 'bottleneck', 'minimax_width'}`` mapped to
        (n, n) float matrices with ``np.inf`` for unreachable pairs.
    """
    csr = g.to_csr()
    matrices = {
        'geodesic': shortest_path(csr, directed=False, unweighted=True),
        'weighted': shortest_path(csr, method='D', directed=False),
        'bottleneck': all_pairs_bottleneck(g, strategy, workers).distances,
    }
    rows = Parallel(n_jobs=workers, prefer='threads')(
        delayed(minimax_width_all)(g, s) for s in range(g.n_nodes))
    matrices['minimax_width'] = np.array(rows).reshape(g.n_nodes, g.n_nodes)
    logger.debug('computed all-pairs matrices for %d nodes', g.n_nodes)
    return matrices
