"""
Bottleneck ("short and wide") distances.

The bottleneck distance between s and t is the minimum, over s-t paths, of
the hop count times the largest edge weight on the path.
"""
import heapq
import logging
from dataclasses import dataclass

import numpy as np
from joblib import Parallel, delayed

from ._labels import Label, LabelSet, covers, maximize_labels, node_insertion
from ..exceptions import InvalidNodeError, UnreachableError
from ..utils.checkers import _check_node

logger = logging.getLogger(__name__)

STRATEGIES = ('parallel_sssp', 'labelset_fw')


@dataclass(frozen=True)
class OneToAllResult:
    """
    Output of :func:`one_to_all_bottleneck`.

    Attributes
    ----------
    source : int
        Source node.
    label_sets : tuple of LabelSet
        Final non-dominated labels of every node; empty when unreachable.
    distances : np.ndarray
        Bottleneck distance of every node, ``np.inf`` when unreachable.
    store : tuple of tuple of Label
        Every label ever accepted at each node. ``Label.pred_label`` indexes
        into the predecessor's store.
    frontier_indices : tuple of tuple of int
        Store indices of the final labels of every node.
    max_frontier_size : int
        Largest number of simultaneously non-dominated labels held at any
        node during the run.
    """
    source: int
    label_sets: tuple
    distances: np.ndarray
    store: tuple
    frontier_indices: tuple
    max_frontier_size: int

    def distance(self, t):
        return float(self.distances[t])


def one_to_all_bottleneck(g, s):
    """
    Bottleneck distances from s to every node by label propagation.

    Labels are settled in increasing order of their product (ties broken by
    node index, then label index). Settling a label extends it along every
    edge of its node; a new label is kept at the neighbour only if no label
    there covers it, and it removes the labels it dominates. Removed labels
    are skipped when they come off the queue. The run ends when the queue is
    empty, so disconnected graphs are handled.

    Parameters
    ----------
    g : WeightedGraph
        Input graph.
    s : int
        Source node.

    Returns
    -------
    OneToAllResult
        Distances, label frontiers and path reconstruction data.

    Raises
    ------
    InvalidNodeError
        If s is not a node of g.

    Examples
    --------
    >>> from shortwide.graphs import parse_edge_list
    >>> g = parse_edge_list("a b 5\\na c 1\\nc b 1")
    >>> one_to_all_bottleneck(g, 0).distance(1)
    2.0
    """
    _check_node(g, s)
    n = g.n_nodes
    store = [[] for _ in range(n)]
    alive = [[] for _ in range(n)]
    frontier = [set() for _ in range(n)]

    store[s].append(Label.source())
    alive[s].append(True)
    frontier[s].add(0)
    max_frontier = 1
    queue = [(0.0, s, 0)]

    while queue:
        _, i, p = heapq.heappop(queue)
        if not alive[i][p]:
            continue
        label = store[i][p]
        for j, w in g.neighbors(i):
            candidate = label.extend(i, p, w)
            if any(covers(store[j][q], candidate) for q in frontier[j]):
                continue
            for q in [q for q in frontier[j] if covers(candidate, store[j][q])]:
                alive[j][q] = False
                frontier[j].discard(q)
            index = len(store[j])
            store[j].append(candidate)
            alive[j].append(True)
            frontier[j].add(index)
            max_frontier = max(max_frontier, len(frontier[j]))
            heapq.heappush(queue, (candidate.product, j, index))

    label_sets = []
    frontier_indices = []
    distances = np.full(n, np.inf)
    for j in range(n):
        indices = sorted(frontier[j], key=lambda q: (store[j][q].max_width, store[j][q].hops))
        frontier_indices.append(tuple(indices))
        label_set = LabelSet(tuple(store[j][q] for q in indices))
        label_sets.append(label_set)
        distances[j] = label_set.distance
    return OneToAllResult(s, tuple(label_sets), distances,
                          tuple(tuple(labels) for labels in store),
                          tuple(frontier_indices), max_frontier)


def _best_index(result, t):
    indices = result.frontier_indices[t]
    return min(indices, key=lambda q: (result.store[t][q].product, result.store[t][q].hops))


def reconstruct_path(result, t, label_index=None):
    """
    Rebuild the path of a final label by following predecessors.

    Parameters
    ----------
    result : OneToAllResult
        Output of :func:`one_to_all_bottleneck`.
    t : int
        Target node.
    label_index : int, optional
        Store index of the label to rebuild; defaults to the label of
        minimum product, i.e. a bottleneck-optimal path.

    Returns
    -------
    list of int
        Nodes from the source to t.

    Raises
    ------
    UnreachableError
        If t cannot be reached from the source.
    """
    if not 0 <= t < len(result.store):
        raise InvalidNodeError(f'node {t} is not in the graph')
    if not result.frontier_indices[t]:
        raise UnreachableError(f'node {t} is not reachable from {result.source}')
    q = _best_index(result, t) if label_index is None else label_index
    path = [t]
    node = t
    while result.store[node][q].pred is not None:
        label = result.store[node][q]
        node, q = label.pred, label.pred_label
        path.append(node)
    path.reverse()
    return path


def label_chain(result, t, label_index=None):
    """Labels along the path returned by :func:`reconstruct_path`, source first."""
    q = _best_index(result, t) if label_index is None else label_index
    node = t
    chain = [result.store[node][q]]
    while chain[-1].pred is not None:
        node, q = chain[-1].pred, chain[-1].pred_label
        chain.append(result.store[node][q])
    chain.reverse()
    return chain


@dataclass(frozen=True)
class AllPairsResult:
    """
    Output of :func:`all_pairs_bottleneck`.

    Attributes
    ----------
    distances : np.ndarray, shape (n, n)
        Symmetric bottleneck distance matrix with a zero diagonal and
        ``np.inf`` for unreachable pairs.
    label_sets : tuple of tuple of LabelSet
        Final frontier of every ordered pair.
    strategy : str
        Strategy that produced the result.
    """
    distances: np.ndarray
    label_sets: tuple
    strategy: str


def _labelset_fw(g):
    n = g.n_nodes
    table = [[[] for _ in range(n)] for _ in range(n)]
    for u, v, w in g.edges():
        table[u][v] = [Label.of(1, w)]
        table[v][u] = table[u][v]

    for k in range(n):
        row_k = table[k]
        through = [i for i in range(n) if i != k and row_k[i]]
        for a, i in enumerate(through):
            left = table[i][k]
            for j in through[a + 1:]:
                inserted = node_insertion(left, row_k[j], pivot=k)
                merged = maximize_labels(table[i][j], inserted)
                table[i][j] = merged
                table[j][i] = merged
        logger.debug('pivot %d/%d done', k + 1, n)

    distances = np.full((n, n), np.inf)
    label_sets = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(LabelSet((Label.source(),)))
                distances[i, j] = 0.0
            else:
                label_set = LabelSet(tuple(table[i][j]))
                row.append(label_set)
                distances[i, j] = label_set.distance
        label_sets.append(tuple(row))
    return distances, tuple(label_sets)


def _parallel_sssp(g, workers):
    n = g.n_nodes
    results = Parallel(n_jobs=workers, prefer='threads')(
        delayed(one_to_all_bottleneck)(g, s) for s in range(n))
    distances = np.full((n, n), np.inf)
    for result in results:
        distances[result.source] = result.distances
    return distances, tuple(result.label_sets for result in results)


def all_pairs_bottleneck(g, strategy='parallel_sssp', workers=1):
    """
    Bottleneck distances between every pair of nodes.

    Parameters
    ----------
    g : WeightedGraph
        Input graph.
    strategy : {'parallel_sssp', 'labelset_fw'}, optional
        ``parallel_sssp`` runs :func:`one_to_all_bottleneck` from every
        source, possibly on several workers. ``labelset_fw`` runs the
        Floyd-Warshall style triple loop over label tables: for every pivot
        k the frontiers of (i, k) and (k, j) are combined (node insertion)
        and merged into the frontier of (i, j) (label maximisation). Both
        return the same matrix.
    workers : int, optional
        Number of joblib workers for ``parallel_sssp``.

    Returns
    -------
    AllPairsResult
        Distance matrix and per-pair frontiers.

    Examples
    --------
    >>> from shortwide.graphs import parse_edge_list
    >>> g = parse_edge_list("h a 1\\nh b 1\\nh c 1")
    >>> all_pairs_bottleneck(g).distances[1, 2]
    2.0
    """
    if strategy not in STRATEGIES:
        raise ValueError(f'strategy must be one of {STRATEGIES}, got {strategy!r}')
    logger.info('all-pairs bottleneck distances on %d nodes (%s)', g.n_nodes, strategy)
    if strategy == 'labelset_fw':
        distances, label_sets = _labelset_fw(g)
    else:
        distances, label_sets = _parallel_sssp(g, workers)
    return AllPairsResult(distances, label_sets, strategy)
