"""
Exhaustive check that stars (hub-and-spoke) are the trees of minimum
diameter.

A connected graph on n nodes with n - 1 edges is a tree. Labeled trees are
enumerated through their Prüfer sequences, all n**(n-2) of them.
"""
import heapq
import itertools
import logging
from dataclasses import dataclass

from joblib import Parallel, delayed

logger = logging.getLogger(__name__)

MIN_TREE_NODES = 3
MAX_TREE_NODES = 9


@dataclass(frozen=True)
class HubSpokeReport:
    """
    Result of :func:`verify_hub_and_spoke`.

    Attributes
    ----------
    n : int
        Number of nodes.
    tree_count : int
        Labeled trees enumerated (``n**(n-2)``).
    min_diameter : int
        Smallest diameter found.
    minimizers : tuple of tuple of (int, int)
        Edge lists of the trees reaching the minimum.
    diameter_counts : dict
        ``{diameter: number of trees}``.
    """
    n: int
    tree_count: int
    min_diameter: int
    minimizers: tuple
    diameter_counts: dict

    @property
    def all_minimizers_are_stars(self):
        return all(is_star(edges, self.n) for edges in self.minimizers)

    @property
    def confirmed(self):
        return self.min_diameter == 2 and self.all_minimizers_are_stars


def prufer_to_edges(sequence, n):
    """
    Decode a Prüfer sequence of length n - 2 into the edges of a labeled tree.

    Examples
    --------
    >>> prufer_to_edges((3, 3), 4)
    [(0, 3), (1, 3), (2, 3)]
    """
    degree = [1] * n
    for node in sequence:
        degree[node] += 1
    leaves = [node for node in range(n) if degree[node] == 1]
    heapq.heapify(leaves)
    edges = []
    for node in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, node), max(leaf, node)))
        degree[node] -= 1
        if degree[node] == 1:
            heapq.heappush(leaves, node)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return sorted(edges)


def _farthest(adjacency, start):
    depth = {start: 0}
    frontier = [start]
    last = start
    while frontier:
        nxt = []
        for u in frontier:
            for v in adjacency[u]:
                if v not in depth:
                    depth[v] = depth[u] + 1
                    nxt.append(v)
                    last = v
        frontier = nxt
    return last, depth[last]


def tree_diameter(edges, n):
    """Diameter of a tree given by its edges (two breadth-first sweeps)."""
    adjacency = [[] for _ in range(n)]
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    far, _ = _farthest(adjacency, 0)
    _, diameter = _farthest(adjacency, far)
    return diameter


def is_star(edges, n):
    """True if one node touches every edge of an (n-1)-edge tree."""
    degree = [0] * n
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    return max(degree) == n - 1


def _scan(n, first):
    best, minimizers, counts = None, [], {}
    for rest in itertools.product(range(n), repeat=n - 3):
        edges = prufer_to_edges((first,) + rest, n)
        diameter = tree_diameter(edges, n)
        counts[diameter] = counts.get(diameter, 0) + 1
        if best is None or diameter < best:
            best, minimizers = diameter, [tuple(edges)]
        elif diameter == best:
            minimizers.append(tuple(edges))
    return best, minimizers, counts


def verify_hub_and_spoke(n, workers=1):
    """
    Enumerate every labeled tree on n nodes and report the minimum diameter
    and the trees reaching it.

    The expected outcome is a minimum of 2 reached only by the n stars
    (for n = 3 every tree is a star).

    Parameters
    ----------
    n : int
        Number of nodes, 3 to 9.
    workers : int, optional
        Joblib workers; the enumeration is split by first Prüfer symbol.

    Returns
    -------
    HubSpokeReport
        Minimum diameter, minimizers and diameter histogram.

    Raises
    ------
    ValueError
        If n is outside [3, 9].
    """
    if not (MIN_TREE_NODES <= n <= MAX_TREE_NODES):
        raise ValueError(f'n must be between {MIN_TREE_NODES} and {MAX_TREE_NODES}, got {n}')
    parts = Parallel(n_jobs=workers, prefer='threads')(delayed(_scan)(n, first) for first in range(n))
    best = min(part[0] for part in parts)
    minimizers = tuple(tree for part in parts if part[0] == best for tree in part[1])
    counts = {}
    for _, _, part_counts in parts:
        for diameter, count in part_counts.items():
            counts[diameter] = counts.get(diameter, 0) + count
    report = HubSpokeReport(n, sum(counts.values()), best, minimizers, dict(sorted(counts.items())))
    logger.info('n=%d: %d trees, min diameter %d reached by %d trees',
                n, report.tree_count, best, len(minimizers))
    return report
