"""
Weighted random graphs used as null models.

Topologies come from the Erdős–Rényi model or from degree-preserving
double-edge swaps of a reference graph. Every edge then receives a
multiplicity m >= 1 and the weight 1/m.
"""
import logging
import warnings
from dataclasses import dataclass, field, replace
from typing import Optional

import networkx as nx
import numpy as np
from scipy import optimize, stats

from ..exceptions import EnsembleSpecError, SwapError
from ..graphs import WeightedGraph

logger = logging.getLogger(__name__)

KINDS = ('erdos_renyi', 'degree_matched')

DEFAULT_EXPONENT = 2.76
DEFAULT_MAX_MULTIPLICITY = 50
DEFAULT_SWAPS_PER_EDGE = 10
# C. elegans somatic gap-junction network
DEFAULT_ER_NODES = 279
DEFAULT_ER_PROBABILITY = 0.0133


@dataclass(frozen=True)
class EnsembleSpec:
    """
    Parameters of a weighted random-graph ensemble.

    Attributes
    ----------
    kind : {'erdos_renyi', 'degree_matched'}
        Topology model.
    n : int
        Node count (Erdős–Rényi only; degree-matched samples have the
        reference's nodes). Defaults to 279.
    p : float
        Connection probability (Erdős–Rényi only). Defaults to 0.0133.
    reference : WeightedGraph, optional
        Graph whose degree sequence is preserved (degree-matched only).
    multiplicity_exponent : float
        Exponent a of the truncated power law ``P(m) ∝ m**-a``.
    multiplicity_max : int
        Largest multiplicity drawn.
    multiplicity_histogram : dict, optional
        ``{multiplicity: count}``. When given, multiplicities are drawn from
        this empirical law instead of the power law.
    seed : int
        Base seed; sample i uses the stream keyed by ``(seed, i)``.
    swaps_per_edge : int
        Successful swaps per reference edge for degree-matched samples.
    """
    kind: str
    n: int = DEFAULT_ER_NODES
    p: float = DEFAULT_ER_PROBABILITY
    reference: Optional[WeightedGraph] = field(default=None, compare=False)
    multiplicity_exponent: float = DEFAULT_EXPONENT
    multiplicity_max: int = DEFAULT_MAX_MULTIPLICITY
    multiplicity_histogram: Optional[dict] = field(default=None, compare=False)
    seed: int = 0
    swaps_per_edge: int = DEFAULT_SWAPS_PER_EDGE

    @classmethod
    def matching(cls, reference, kind, **kwargs):
        """
        Spec matched to a reference graph: same node count and, for
        Erdős–Rényi, ``p = 2m / (n (n - 1))``.
        """
        n, m = reference.n_nodes, reference.n_edges
        p = 2.0 * m / n / (n - 1) if n > 1 else 0.0
        return cls(kind=kind, n=n, p=p, reference=reference, **kwargs)

    @property
    def multiplicity_source(self):
        return 'empirical' if self.multiplicity_histogram else 'power_law'

    def with_kind(self, kind):
        return replace(self, kind=kind)

    def validate(self):
        """
        Raises
        ------
        EnsembleSpecError
            On any inconsistent field.
        """
        if self.kind not in KINDS:
            raise EnsembleSpecError(f'kind must be one of {KINDS}, got {self.kind!r}')
        if self.kind == 'erdos_renyi':
            if self.n < 1:
                raise EnsembleSpecError(f'n must be positive, got {self.n}')
            if not (0 < self.p < 1):
                raise EnsembleSpecError(f'p must be strictly between 0 and 1, got {self.p}')
        elif self.reference is None:
            raise EnsembleSpecError('a degree-matched ensemble needs a reference graph')
        if not self.multiplicity_exponent > 1:
            raise EnsembleSpecError('multiplicity_exponent must be greater than 1')
        if self.multiplicity_max < 1:
            raise EnsembleSpecError('multiplicity_max must be a positive integer')
        if self.swaps_per_edge < 1:
            raise EnsembleSpecError('swaps_per_edge must be positive')
        if self.multiplicity_histogram is not None:
            if any(int(m) < 1 or c < 0 for m, c in self.multiplicity_histogram.items()) \
                    or sum(self.multiplicity_histogram.values()) <= 0:
                raise EnsembleSpecError('the multiplicity histogram must have positive keys and mass')


def sample_rng(seed, index):
    """Philox (counter-based) generator for sample ``index`` of base ``seed``."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([int(seed), int(index)])))


def sample_multiplicities(rng, size, exponent=DEFAULT_EXPONENT,
                          max_multiplicity=DEFAULT_MAX_MULTIPLICITY, histogram=None):
    """
    Draw edge multiplicities.

    Parameters
    ----------
    rng : numpy.random.Generator
        Random stream.
    size : int
        Number of draws.
    exponent : float
        Power-law exponent.
    max_multiplicity : int
        Truncation of the power law.
    histogram : dict, optional
        Empirical ``{multiplicity: count}`` law used instead of the power law.

    Returns
    -------
    np.ndarray of int
        Multiplicities, all at least 1.
    """
    if histogram:
        values = np.array(sorted(histogram), dtype=np.int64)
        counts = np.array([histogram[v] for v in sorted(histogram)], dtype=np.float64)
        return rng.choice(values, size=size, p=counts / counts.sum())
    law = stats.zipfian(exponent, max_multiplicity)
    return np.asarray(law.rvs(size=size, random_state=rng), dtype=np.int64)


def multiplicities(g):
    """Recover integer multiplicities ``round(1/w)`` from a graph's weights."""
    return np.rint(1.0 / g.weights()).astype(np.int64)


def multiplicity_histogram(g):
    values, counts = np.unique(multiplicities(g), return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


def fit_multiplicity_exponent(values, max_multiplicity=DEFAULT_MAX_MULTIPLICITY):
    """
    Maximum-likelihood exponent of a truncated discrete power law.

    Parameters
    ----------
    values : array-like of int
        Observed multiplicities in ``1..max_multiplicity``.
    max_multiplicity : int
        Truncation point.

    Returns
    -------
    float
        Exponent a maximising ``sum(log P(m))`` with ``P(m) ∝ m**-a``.
    """
    values = np.asarray(values, dtype=np.float64)
    if len(values) == 0 or values.min() < 1 or values.max() > max_multiplicity:
        raise ValueError(f'multiplicities must lie in 1..{max_multiplicity}')
    support = np.arange(1, max_multiplicity + 1, dtype=np.float64)
    log_sum = np.log(values).sum()

    def negative_loglik(a):
        return a * log_sum + len(values) * np.log(np.sum(support ** -a))

    result = optimize.minimize_scalar(negative_loglik, bounds=(1.0001, 10.0), method='bounded')
    return float(result.x)


def _weighted(n, pairs, names, spec, rng):
    draws = sample_multiplicities(rng, len(pairs), spec.multiplicity_exponent,
                                  spec.multiplicity_max, spec.multiplicity_histogram)
    edges = [(u, v, 1.0 / int(m)) for (u, v), m in zip(pairs, draws)]
    return WeightedGraph(n, edges, names)


def sample_er_weighted(spec, index=0):
    """
    One weighted Erdős–Rényi graph.

    Every unordered pair is an edge independently with probability p; each
    edge gets a multiplicity m and the weight 1/m.

    Parameters
    ----------
    spec : EnsembleSpec
        Spec of kind ``erdos_renyi``.
    index : int
        Sample index; together with ``spec.seed`` it fixes the outcome.

    Returns
    -------
    WeightedGraph
        The sample, nodes named ``0..n-1``.
    """
    spec.validate()
    if spec.kind != 'erdos_renyi':
        raise EnsembleSpecError('sample_er_weighted needs an erdos_renyi spec')
    rng = sample_rng(spec.seed, index)
    rows, cols = np.triu_indices(spec.n, k=1)
    keep = rng.random(len(rows)) < spec.p
    pairs = list(zip(rows[keep].tolist(), cols[keep].tolist()))
    return _weighted(spec.n, pairs, None, spec, rng)


def rewire(reference, n_swaps, seed):
    """
    Degree-preserving rewiring by double-edge swaps.

    Each swap replaces edges (a, b), (c, d) by (a, d), (c, b) and is
    rejected if it would create a self-loop or a duplicate edge. When the
    graph admits no swap at all (a star, for instance) or the try budget
    runs out, the topology reached so far is returned with a warning.

    Returns
    -------
    list of (int, int)
        Rewired edges, sorted, as ``(u, v)`` with ``u < v``.
    """
    topology = nx.Graph()
    topology.add_nodes_from(range(reference.n_nodes))
    topology.add_edges_from((u, v) for u, v, _ in reference.edges())
    if reference.n_edges < 2:
        raise SwapError(f'at least 2 edges are needed to swap, the reference has {reference.n_edges}')
    if reference.n_nodes < 4:
        warnings.warn('fewer than 4 nodes: no double-edge swap is possible, topology kept')
    else:
        try:
            nx.double_edge_swap(topology, nswap=n_swaps, max_tries=100 * n_swaps, seed=seed)
        except nx.NetworkXAlgorithmError as exc:
            warnings.warn(f'swap budget exhausted before {n_swaps} swaps: {exc}')
    return sorted((min(u, v), max(u, v)) for u, v in topology.edges())


def sample_degree_matched(spec, index=0):
    """
    One weighted graph with the reference's exact degree sequence.

    The topology is the reference rewired by ``swaps_per_edge * |E|``
    successful double-edge swaps; multiplicities are then drawn as for
    :func:`sample_er_weighted`.

    Raises
    ------
    SwapError
        If the reference has fewer than 2 edges.
    """
    spec.validate()
    if spec.kind != 'degree_matched':
        raise EnsembleSpecError('sample_degree_matched needs a degree_matched spec')
    reference = spec.reference
    rng = sample_rng(spec.seed, index)
    swap_seed = int(rng.integers(2 ** 32))
    pairs = rewire(reference, spec.swaps_per_edge * reference.n_edges, swap_seed)
    return _weighted(reference.n_nodes, pairs, list(reference.names), spec, rng)


def sample(spec, index=0):
    if spec.kind == 'erdos_renyi':
        return sample_er_weighted(spec, index)
    return sample_degree_matched(spec, index)
