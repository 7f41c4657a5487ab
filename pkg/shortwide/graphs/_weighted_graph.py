import logging
from dataclasses import dataclass

import networkx as nx
import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components as _cs_components

from ..exceptions import EdgeListError, EmptyGraphError, InvalidNodeError
from ..utils.checkers import _check_node, _check_not_empty, _check_weight

logger = logging.getLogger(__name__)


class WeightedGraph:
    """
    Immutable undirected graph with strictly positive edge weights.

    Nodes are dense integer indices ``0..n_nodes-1``; each index carries a
    name (the identifier used in the input file). At most one edge joins two
    nodes and self-loops are rejected.

    Parameters
    ----------
    n_nodes : int
        Number of nodes.
    edges : iterable of (int, int, float)
        Undirected edges ``(u, v, weight)``.
    names : sequence of str, optional
        Node names, ``str(index)`` by default.

    Raises
    ------
    EdgeListError
        On self-loops, duplicate edges or invalid weights.

    Examples
    --------
    >>> g = WeightedGraph(3, [(0, 1, 1.0), (1, 2, 0.5)], names=['a', 'b', 'c'])
    >>> g.weight(1, 2)
    0.5
    >>> g.n_edges
    2
    """

    __slots__ = ('_names', '_adjacency', '_index', '_n_edges')

    def __init__(self, n_nodes, edges=(), names=None):
        if names is None:
            names = [str(i) for i in range(n_nodes)]
        if len(names) != n_nodes:
            raise ValueError('names must contain one entry per node')
        if len(set(names)) != n_nodes:
            raise ValueError('node names must be unique')
        adjacency = [dict() for _ in range(n_nodes)]
        n_edges = 0
        for u, v, w in edges:
            u, v, w = int(u), int(v), float(w)
            if not (0 <= u < n_nodes and 0 <= v < n_nodes):
                raise EdgeListError(f'edge ({u}, {v}) refers to a missing node')
            if u == v:
                raise EdgeListError(f'self-loop on node {names[u]!r}')
            try:
                _check_weight(w)
            except ValueError as exc:
                raise EdgeListError(str(exc)) from None
            if v in adjacency[u]:
                raise EdgeListError(
                    f'duplicate edge between {names[u]!r} and {names[v]!r}')
            adjacency[u][v] = w
            adjacency[v][u] = w
            n_edges += 1
        self._names = tuple(str(name) for name in names)
        self._adjacency = tuple(tuple(sorted(nbrs.items())) for nbrs in adjacency)
        self._index = {name: i for i, name in enumerate(self._names)}
        self._n_edges = n_edges

    @property
    def n_nodes(self):
        return len(self._names)

    @property
    def n_edges(self):
        return self._n_edges

    @property
    def names(self):
        return self._names

    def neighbors(self, u):
        """Return the ``(neighbor, weight)`` pairs of node u, sorted by neighbor."""
        return self._adjacency[u]

    def degree(self, u):
        return len(self._adjacency[u])

    def degrees(self):
        return np.array([len(nbrs) for nbrs in self._adjacency], dtype=np.int64)

    def weight(self, u, v):
        """Return the weight of edge (u, v), or None if there is no such edge."""
        for nbr, w in self._adjacency[u]:
            if nbr == v:
                return w
        return None

    def node_index(self, name):
        """Return the dense index of the node called name."""
        try:
            return self._index[str(name)]
        except KeyError:
            raise InvalidNodeError(f'unknown node {name!r}') from None

    def edges(self):
        """Return the edges as ``(u, v, weight)`` with ``u < v``, sorted."""
        return [(u, v, w)
                for u, nbrs in enumerate(self._adjacency)
                for v, w in nbrs if u < v]

    def weights(self):
        """Return the edge weights as a float64 array, in ``edges()`` order."""
        return np.array([w for _, _, w in self.edges()], dtype=np.float64)

    def to_csr(self):
        """Return the symmetric weighted adjacency matrix as a CSR matrix."""
        edges = self.edges()
        n = self.n_nodes
        if not edges:
            return sp.csr_matrix((n, n), dtype=np.float64)
        u, v, w = (np.array(col) for col in zip(*edges))
        rows = np.concatenate([u, v])
        cols = np.concatenate([v, u])
        data = np.concatenate([w, w]).astype(np.float64)
        return sp.csr_matrix((data, (rows, cols)), shape=(n, n))

    def to_networkx(self):
        """Return a ``networkx.Graph`` on the dense indices with ``weight`` attributes."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n_nodes))
        graph.add_weighted_edges_from(self.edges())
        return graph

    def subgraph(self, nodes):
        """
        Return the subgraph induced by nodes.

        Nodes keep their relative order and their names; indices are
        renumbered densely.
        """
        nodes = sorted(set(int(u) for u in nodes))
        for u in nodes:
            _check_node(self, u)
        position = {u: i for i, u in enumerate(nodes)}
        edges = [(position[u], position[v], w)
                 for u, v, w in self.edges()
                 if u in position and v in position]
        return WeightedGraph(len(nodes), edges, [self._names[u] for u in nodes])

    def _named_edges(self):
        return frozenset((frozenset((self._names[u], self._names[v])), w)
                         for u, v, w in self.edges())

    def __eq__(self, other):
        # Equality is on node names and named edges, not on index order.
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (set(self._names) == set(other._names)
                and self._named_edges() == other._named_edges())

    def __hash__(self):
        return hash((frozenset(self._names), self._named_edges()))

    def __repr__(self):
        return f'WeightedGraph(n_nodes={self.n_nodes}, n_edges={self.n_edges})'


@dataclass(frozen=True)
class ComponentPartition:
    """
    Connected components of a graph.

    Attributes
    ----------
    labels : np.ndarray of int
        Component id of every node. Ids are contiguous from 0 and ordered by
        decreasing component size; equal sizes are ordered by their smallest
        node index.
    sizes : np.ndarray of int
        Size of every component, sorted descending.
    """
    labels: np.ndarray
    sizes: np.ndarray

    @property
    def n_components(self):
        return len(self.sizes)

    def members(self, component):
        return np.flatnonzero(self.labels == component)


def connected_components(g):
    """
    Compute the connected components of g.

    Parameters
    ----------
    g : WeightedGraph
        Input graph.

    Returns
    -------
    ComponentPartition
        Component labels and sizes.

    Examples
    --------
    >>> g = WeightedGraph(4, [(0, 1, 1.0)])
    >>> connected_components(g).sizes.tolist()
    [2, 1, 1]
    """
    if g.n_nodes == 0:
        return ComponentPartition(np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64))
    _, raw = _cs_components(g.to_csr(), directed=False, return_labels=True)
    sizes = np.bincount(raw)
    first_node = np.full(len(sizes), g.n_nodes, dtype=np.int64)
    np.minimum.at(first_node, raw, np.arange(g.n_nodes))
    order = sorted(range(len(sizes)), key=lambda c: (-sizes[c], first_node[c]))
    relabel = np.empty(len(sizes), dtype=np.int64)
    relabel[order] = np.arange(len(sizes))
    return ComponentPartition(relabel[raw], sizes[order].astype(np.int64))


def giant_component(g):
    """
    Extract the largest connected component of g.

    Ties between components of equal size go to the component containing the
    smallest node index. Node names are preserved.

    Parameters
    ----------
    g : WeightedGraph
        Input graph.

    Returns
    -------
    WeightedGraph
        Subgraph induced by the largest component.

    Raises
    ------
    EmptyGraphError
        If g has no node.
    """
    _check_not_empty(g)
    partition = connected_components(g)
    giant = partition.members(0)
    if partition.n_components > 1:
        logger.info('giant component keeps %d of %d nodes (%d components)',
                    len(giant), g.n_nodes, partition.n_components)
    return g.subgraph(giant)


def distinct_weight_count(g):
    """
    Count the distinct edge-weight values of g.

    Values are compared exactly on their float64 representation, so noisy
    weights must be quantized beforehand.

    Parameters
    ----------
    g : WeightedGraph
        Input graph.

    Returns
    -------
    int
        Number W of distinct weights; 1 for a graph without edges, so that
        the label-set bound ``W`` stays positive.

    Examples
    --------
    >>> g = WeightedGraph(4, [(0, 1, 1.0), (1, 2, 0.5), (2, 3, 0.5)])
    >>> distinct_weight_count(g)
    2
    """
    weights = g.weights()
    if len(weights) == 0:
        return 1
    return int(len(np.unique(weights)))


def is_connected(g):
    if g.n_nodes == 0:
        raise EmptyGraphError('the graph has no node')
    return connected_components(g).n_components == 1
