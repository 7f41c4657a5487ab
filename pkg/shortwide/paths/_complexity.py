import logging
import time

import numpy as np
import pandas as pd

from ._baseline import weighted_all
from ._bottleneck import all_pairs_bottleneck, one_to_all_bottleneck
from ..graphs import WeightedGraph

logger = logging.getLogger(__name__)


def synthetic_graph(n, m, n_weights, seed=0):
    """
    Random connected graph with n nodes, m edges and exactly
    ``min(n_weights, m)`` distinct weights.

    A random spanning tree is drawn first, then extra edges uniformly among
    the missing pairs. Weights are the levels ``1/1, 1/2, ..., 1/n_weights``,
    each used at least once when ``m >= n_weights``.

    Raises
    ------
    ValueError
        If m is outside ``[n - 1, n(n-1)/2]``.
    """
    if n < 2 or not (n - 1 <= m <= n * (n - 1) // 2):
        raise ValueError(f'cannot build a connected graph with n={n} and m={m}')
    if n_weights < 1:
        raise ValueError('n_weights must be at least 1')
    rng = np.random.default_rng(seed)
    order = rng.permutation(n)
    pairs = set()
    for k in range(1, n):
        u, v = int(order[k]), int(order[rng.integers(k)])
        pairs.add((min(u, v), max(u, v)))
    while len(pairs) < m:
        u, v = (int(x) for x in rng.choice(n, size=2, replace=False))
        pairs.add((min(u, v), max(u, v)))
    levels = 1.0 / np.arange(1, n_weights + 1)
    weights = rng.choice(levels, size=m)
    weights[:min(n_weights, m)] = levels[:min(n_weights, m)]
    weights = rng.permutation(weights)
    edges = [(u, v, w) for (u, v), w in zip(sorted(pairs), weights)]
    return WeightedGraph(n, edges)


def random_connected_graph(n, density=0.3, levels=None, seed=0):
    """
    Random connected graph: a random spanning tree plus every other pair
    with probability ``density``.

    Weights are drawn uniformly from ``levels`` when given, otherwise from
    U(0, 1] (``1 - U[0, 1)``, so never zero).
    """
    if n < 1:
        raise ValueError(f'n must be positive, got {n}')
    rng = np.random.default_rng(seed)
    order = rng.permutation(n)
    pairs = set()
    for k in range(1, n):
        u, v = int(order[k]), int(order[rng.integers(k)])
        pairs.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in pairs and rng.random() < density:
                pairs.add((u, v))
    pairs = sorted(pairs)
    if levels is None:
        weights = 1.0 - rng.random(len(pairs))
    else:
        weights = rng.choice(np.asarray(levels, dtype=np.float64), size=len(pairs))
    return WeightedGraph(n, [(u, v, float(w)) for (u, v), w in zip(pairs, weights)])


def _timed(func, *args):
    start = time.perf_counter()
    out = func(*args)
    return time.perf_counter() - start, out


def complexity_probe(sizes, repeats=1, with_all_pairs=True, seed=0):
    """
    Time the bottleneck algorithms on synthetic graphs.

    Parameters
    ----------
    sizes : iterable of (int, int, int)
        ``(n, m, W)`` triples.
    repeats : int, optional
        Timings are the minimum over this many runs.
    with_all_pairs : bool, optional
        Also time both all-pairs strategies.
    seed : int, optional
        Seed of the synthetic graphs.

    Returns
    -------
    pandas.DataFrame
        One row per (size, algorithm) with columns ``n, m, W, algorithm,
        seconds, max_labels``. Informational: nothing is asserted.
    """
    rows = []
    for n, m, n_weights in sizes:
        g = synthetic_graph(n, m, n_weights, seed=seed)
        runs = [('dijkstra', weighted_all, (g, 0)),
                ('one_to_all', one_to_all_bottleneck, (g, 0))]
        if with_all_pairs:
            runs += [('parallel_sssp', all_pairs_bottleneck, (g, 'parallel_sssp')),
                     ('labelset_fw', all_pairs_bottleneck, (g, 'labelset_fw'))]
        for name, func, args in runs:
            timings = [_timed(func, *args) for _ in range(repeats)]
            seconds = min(t for t, _ in timings)
            out = timings[-1][1]
            max_labels = getattr(out, 'max_frontier_size', np.nan)
            rows.append({'n': n, 'm': m, 'W': n_weights, 'algorithm': name,
                         'seconds': seconds, 'max_labels': max_labels})
            logger.info('n=%d m=%d W=%d %s: %.4fs', n, m, n_weights, name, seconds)
    return pd.DataFrame(rows, columns=['n', 'm', 'W', 'algorithm', 'seconds', 'max_labels'])
