import logging
from dataclasses import dataclass, field

import numpy as np
from joblib import Parallel, delayed

from ._samplers import sample
from ..graphs import giant_component
from ..paths import NOTIONS, all_pairs_distances
from ..stats import DEFAULT_THRESHOLD, DistanceDistribution, distribution_gap

logger = logging.getLogger(__name__)

DISTANCE_NOTIONS = ('geodesic', 'weighted', 'bottleneck')


@dataclass(frozen=True)
class SampleSummary:
    """
    Analysis of one ensemble sample, restricted to its giant component.

    Attributes
    ----------
    index : int
        Sample index.
    n_nodes, n_edges : int
        Size of the whole sample.
    giant_nodes, giant_edges : int
        Size of its giant component.
    distributions : dict
        ``{notion: DistanceDistribution}`` for geodesic, weighted and
        bottleneck distances (and minimax width).
    effective_diameters : dict
        ``{notion: effective diameter}`` at the run threshold.
    ordering_violations : int
        Pairs with ``d_W > d_B`` or, all weights being at most 1,
        ``d_B > d_G``.
    """
    index: int
    n_nodes: int
    n_edges: int
    giant_nodes: int
    giant_edges: int
    distributions: dict
    effective_diameters: dict
    ordering_violations: int


@dataclass(frozen=True)
class EnsembleRun:
    """
    Outcome of :func:`run_ensemble`.

    Attributes
    ----------
    spec : EnsembleSpec
        Spec the samples were drawn from.
    threshold : float
        Effective-diameter threshold.
    samples : tuple of SampleSummary
        One summary per sample, in index order.
    """
    spec: object
    threshold: float
    samples: tuple = field(default_factory=tuple)

    @property
    def sample_count(self):
        return len(self.samples)

    def effective_diameters(self, notion):
        return np.array([s.effective_diameters[notion] for s in self.samples])

    def median_effective_diameter(self, notion):
        return float(np.median(self.effective_diameters(notion)))

    def pooled(self, notion):
        """All samples' distances of one notion merged into one distribution."""
        values = np.concatenate([s.distributions[notion].values for s in self.samples])
        unreachable = sum(s.distributions[notion].n_unreachable for s in self.samples)
        return DistanceDistribution(np.sort(values), unreachable)

    def survival(self, notion):
        return self.pooled(notion).survival()

    @property
    def ordering_violations(self):
        return sum(s.ordering_violations for s in self.samples)

    def summary(self):
        spec = self.spec
        return {
            'kind': spec.kind,
            'n': spec.n if spec.kind == 'erdos_renyi' else spec.reference.n_nodes,
            'p': spec.p if spec.kind == 'erdos_renyi' else None,
            'seed': spec.seed,
            'multiplicity_source': spec.multiplicity_source,
            'multiplicity_exponent': spec.multiplicity_exponent,
            'multiplicity_max': spec.multiplicity_max,
            'threshold': self.threshold,
            'samples': self.sample_count,
            'ordering_violations': self.ordering_violations,
            'median_effective_diameter': {
                notion: self.median_effective_diameter(notion) for notion in DISTANCE_NOTIONS},
            'per_sample': [{
                'index': s.index,
                'n_edges': s.n_edges,
                'giant_nodes': s.giant_nodes,
                'giant_edges': s.giant_edges,
                'effective_diameter': s.effective_diameters,
            } for s in self.samples],
        }


def ordering_violations(matrices, max_weight, rtol=1e-12):
    """
    Count pairs breaking ``d_W <= d_B`` and, when every weight is at most 1,
    ``d_B <= d_G``.

    ``d_W`` is a floating-point sum, so it may exceed ``d_B`` by rounding
    alone; rtol absorbs that. ``d_B <= d_G`` is checked exactly.
    """
    d_g, d_w, d_b = matrices['geodesic'], matrices['weighted'], matrices['bottleneck']
    finite = np.isfinite(d_b)
    violations = int(np.count_nonzero(d_w[finite] > d_b[finite] * (1 + rtol)))
    if max_weight <= 1:
        violations += int(np.count_nonzero(d_b[finite] > d_g[finite]))
    return violations


def analyse_graph(g, threshold=DEFAULT_THRESHOLD, strategy='parallel_sssp', workers=1):
    """
    Giant component, all-pairs distances and their distributions.

    Returns
    -------
    giant : WeightedGraph
    matrices : dict
        As returned by :func:`shortwide.paths.all_pairs_distances`.
    distributions : dict
        ``{notion: DistanceDistribution}`` for every notion.
    """
    giant = giant_component(g)
    matrices = all_pairs_distances(giant, strategy=strategy, workers=workers)
    distributions = {notion: DistanceDistribution.from_matrix(matrices[notion])
                     for notion in NOTIONS}
    return giant, matrices, distributions


def _effective_diameters(distributions, threshold):
    out = {}
    for notion in DISTANCE_NOTIONS:
        d = distributions[notion]
        out[notion] = d.effective_diameter(threshold) if d.size else 0.0
    return out


def _analyse_sample(spec, index, threshold, strategy):
    g = sample(spec, index)
    giant, matrices, distributions = analyse_graph(g, threshold, strategy)
    weights = giant.weights()
    violations = ordering_violations(matrices, weights.max() if len(weights) else 0.0)
    if violations:
        logger.error('sample %d breaks the distance ordering on %d pairs', index, violations)
    logger.info('sample %d: %d nodes, giant component %d nodes', index, g.n_nodes, giant.n_nodes)
    return SampleSummary(index, g.n_nodes, g.n_edges, giant.n_nodes, giant.n_edges,
                         distributions, _effective_diameters(distributions, threshold),
                         violations)


def run_ensemble(spec, samples, threshold=DEFAULT_THRESHOLD, strategy='parallel_sssp', workers=1):
    """
    Draw and analyse samples of an ensemble.

    Each sample is generated from ``(spec.seed, index)``, reduced to its own
    giant component (no size normalisation) and characterised by its
    geodesic, weighted and bottleneck distance distributions.

    Parameters
    ----------
    spec : EnsembleSpec
        Ensemble to sample.
    samples : int
        Number of samples.
    threshold : float, optional
        Effective-diameter threshold.
    strategy : str, optional
        All-pairs bottleneck strategy.
    workers : int, optional
        Samples analysed concurrently.

    Returns
    -------
    EnsembleRun
        Per-sample summaries in index order.
    """
    spec.validate()
    if samples < 1:
        raise ValueError('samples must be a positive integer')
    logger.info('running %d %s samples (seed %d)', samples, spec.kind, spec.seed)
    summaries = Parallel(n_jobs=workers, prefer='threads')(
        delayed(_analyse_sample)(spec, index, threshold, strategy) for index in range(samples))
    return EnsembleRun(spec, threshold, tuple(summaries))


def compare_to_reference(runs, reference_distributions, threshold=DEFAULT_THRESHOLD):
    """
    Compare ensemble medians with a reference network.

    Parameters
    ----------
    runs : dict
        ``{kind: EnsembleRun}``.
    reference_distributions : dict
        ``{notion: DistanceDistribution}`` of the reference giant component.
    threshold : float
        Effective-diameter threshold.

    Returns
    -------
    dict
        Reference and median effective diameters, Wasserstein gaps between
        pooled ensemble and reference distributions, and the verdict
        ``ordered``: degree-matched median < Erdős–Rényi median < reference
        for the bottleneck distance (using the kinds that were run).
    """
    reference = {notion: reference_distributions[notion].effective_diameter(threshold)
                 for notion in DISTANCE_NOTIONS}
    verdict = {'threshold': threshold, 'reference_effective_diameter': reference}
    chain = []
    for kind in ('degree_matched', 'erdos_renyi'):
        if kind not in runs:
            continue
        run = runs[kind]
        verdict[kind] = {
            'median_effective_diameter': {
                notion: run.median_effective_diameter(notion) for notion in DISTANCE_NOTIONS},
            'distribution_gap': {
                notion: distribution_gap(run.pooled(notion), reference_distributions[notion])
                for notion in DISTANCE_NOTIONS},
        }
        chain.append(run.median_effective_diameter('bottleneck'))
    chain.append(reference['bottleneck'])
    verdict['ordered'] = bool(all(a < b for a, b in zip(chain, chain[1:])))
    return verdict
