import numpy as np
import ot

from ._distribution import DistanceDistribution


def _as_array(d):
    if isinstance(d, DistanceDistribution):
        return d.values
    return np.asarray(d, dtype=np.float64)


def distribution_gap(d1, d2, n_min=1000):
    """
    Wasserstein-1 distance between two distance distributions.

    Below n_min points in d1 the optimal transport problem is solved exactly
    with POT on the full cost matrix; above it the closed 1-D form is used.

    Parameters
    ----------
    d1, d2 : DistanceDistribution or array-like
        Finite distances.
    n_min : int
        Size threshold between the two computations.

    Returns
    -------
    float
        Mean absolute shift needed to turn d1 into d2, in distance units.

    Example
    -------
    >>> distribution_gap([1.0, 2.0], [2.0, 3.0])
    1.0
    """
    x1, x2 = _as_array(d1), _as_array(d2)
    n1, n2 = len(x1), len(x2)
    if n1 < n_min:
        a, b = np.ones((n1,)) / n1, np.ones((n2,)) / n2
        M = ot.dist(x1.reshape((n1, 1)), x2.reshape((n2, 1)), metric='euclidean')
        return float(ot.emd2(a, b, M))
    return float(ot.wasserstein_1d(x1, x2, p=1))


def max_quantile_gap(d1, d2, probs=None):
    """
    Largest absolute difference between the quantile functions of d1 and d2
    over the probabilities 0.01, ..., 0.99.
    """
    if probs is None:
        probs = np.linspace(0.01, 0.99, num=99)
    x1, x2 = _as_array(d1), _as_array(d2)
    return float(np.max(np.abs(np.quantile(x1, probs) - np.quantile(x2, probs))))
