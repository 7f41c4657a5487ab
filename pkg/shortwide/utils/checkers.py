import math

import numpy as np

from ..exceptions import EmptyGraphError, InvalidNodeError, DegenerateSampleError


def _check_node(g, node):
    """
    Check that a node index belongs to the graph.

    Parameters
    ----------
    g : WeightedGraph
        Graph the node should belong to.
    node : int
        Dense node index.

    Raises
    ------
    InvalidNodeError
        If node is not an integer in ``range(g.n_nodes)``.
    """
    if isinstance(node, (bool, np.bool_)) or not isinstance(node, (int, np.integer)):
        raise InvalidNodeError(f'node must be an integer index, got {node!r}')
    if node < 0 or node >= g.n_nodes:
        raise InvalidNodeError(
            f'node {node} is not in the graph (it has {g.n_nodes} nodes)')


def _check_not_empty(g):
    """
    Check that the graph has at least one node.

    Raises
    ------
    EmptyGraphError
        If the graph has no node.
    """
    if g.n_nodes == 0:
        raise EmptyGraphError('the graph has no node')


def _check_weight(weight):
    """
    Check that an edge weight is a strictly positive finite number.

    Raises
    ------
    ValueError
        If weight is not finite or not strictly positive.
    """
    if not math.isfinite(weight) or weight <= 0:
        raise ValueError(f'edge weights must be positive and finite, got {weight!r}')


def _check_probability(p, name='p'):
    """
    Check that a probability lies in the open interval (0, 1).

    Parameters
    ----------
    p : float
        Probability to check.
    name : str, optional
        Name used in the error message.

    Raises
    ------
    ValueError
        If p is outside (0, 1).
    """
    if not (0 < p < 1):
        raise ValueError(f'{name} must be strictly between 0 and 1, got {p!r}')


def _check_positive(value, name):
    """
    Check that a physical or numerical parameter is strictly positive.

    Raises
    ------
    ValueError
        If value is not a finite number greater than 0.
    """
    if not math.isfinite(value) or value <= 0:
        raise ValueError(f'{name} must be positive, got {value!r}')


def _check_sample(values, min_size=1):
    """
    Check the size and spread of a sample of distances.

    Parameters
    ----------
    values : np.ndarray
        Sample to check.
    min_size : int, optional
        Minimum number of observations.

    Raises
    ------
    DegenerateSampleError
        If the sample is too small or constant.
    """
    if len(values) < min_size:
        raise DegenerateSampleError(
            f'at least {min_size} finite values are needed, got {len(values)}')
    if min_size > 1 and np.all(values == values[0]):
        raise DegenerateSampleError('the sample is constant')
