"""
Built-in consistency checks run by ``shortwide self-test``.

Every check returns a :class:`Check`; the suite passes when all of them do.
Checks needing a user-supplied connectome are reported as skipped when the
data directory is absent.
"""
import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy import stats

from .data import FIXTURES, load_fixture
from .graphs import distinct_weight_count, giant_component, read_edge_list
from .neuro import (BoundInput, ChannelModel, binary_awgn_capacity, consensus_time_bound,
                    gap_junction_capacity, refractory_to_bandwidth, thermal_noise_rms,
                    verify_hub_and_spoke)
from .paths import (NOTIONS, STRATEGIES, all_pairs_bottleneck, all_pairs_distances,
                    bottleneck_bounds, one_to_all_bottleneck, oracle_distances, oracle_matrix,
                    random_connected_graph, reconstruct_path)
from .stats import DistanceDistribution, fit_gamma

logger = logging.getLogger(__name__)

CONNECTOME_FILE = 'celegans.txt'


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ''
    skipped: bool = False

    def to_dict(self):
        return {'name': self.name, 'passed': self.passed, 'skipped': self.skipped,
                'detail': self.detail}


def _within(value, target, rel):
    return abs(value - target) <= rel * abs(target)


def _oracle_agrees(g, workers=1):
    """Both strategies and every baseline equal the oracle on every pair."""
    expected = {notion: np.array(oracle_matrix(g, notion), dtype=np.float64)
                for notion in NOTIONS}
    for strategy in STRATEGIES:
        matrices = all_pairs_distances(g, strategy=strategy, workers=workers)
        for notion in ('geodesic', 'bottleneck', 'minimax_width'):
            if not np.array_equal(matrices[notion], expected[notion]):
                return False, f'{strategy}: {notion} differs from the oracle'
        # summation order differs between Dijkstra and the oracle
        if not np.allclose(matrices['weighted'], expected['weighted'], rtol=1e-12, atol=0):
            return False, f'{strategy}: weighted differs from the oracle'
    return True, ''


def _ordering_holds(g):
    m = all_pairs_distances(g)
    finite = np.isfinite(m['bottleneck'])
    if np.any(m['weighted'][finite] > m['bottleneck'][finite] * (1 + 1e-12)):
        return False
    weights = g.weights()
    if len(weights) and weights.max() <= 1 and np.any(m['bottleneck'][finite] > m['geodesic'][finite]):
        return False
    return True


def check_fixtures(workers=1):
    checks = []
    for name in FIXTURES:
        g = load_fixture(name)
        if g.n_nodes <= 14:
            ok, detail = _oracle_agrees(g, workers)
            checks.append(Check(f'oracle:{name}', ok, detail))
        checks.append(Check(f'ordering:{name}', _ordering_holds(g)))
        d = DistanceDistribution.from_matrix(all_pairs_bottleneck(g).distances)
        checks.append(Check(f'effective_diameter_le_diameter:{name}',
                            d.effective_diameter() <= d.diameter()))
    return checks


def check_random_suite(count=24, max_nodes=8, seed=0, workers=1):
    """Oracle agreement and frontier bound on small random graphs."""
    rng = np.random.default_rng(seed)
    failures = []
    for k in range(count):
        n = int(rng.integers(2, max_nodes + 1))
        levels = (0.25, 0.5, 1.0) if k % 2 == 0 else None
        g = random_connected_graph(n, density=0.35, levels=levels, seed=seed * 1000 + k)
        ok, detail = _oracle_agrees(g, workers)
        if not ok:
            failures.append(f'graph {k}: {detail}')
        bound = distinct_weight_count(g)
        widest = max(one_to_all_bottleneck(g, s).max_frontier_size for s in range(n))
        if widest > bound:
            failures.append(f'graph {k}: {widest} labels at a node, W={bound}')
    return Check('oracle:random_suite', not failures, '; '.join(failures))


def check_substructure():
    g = load_fixture('substructure')
    s, x, t = (g.node_index(name) for name in ('s', 'x', 't'))
    result = one_to_all_bottleneck(g, s)
    path = reconstruct_path(result, t)
    # the optimal s-t path reaches x in one hop of weight 3, although d_B(s, x) = 2
    prefix_cost = g.weight(path[0], path[1])
    ok = (result.distance(x) == 2.0 and result.distance(t) == 6.0 and path == [s, x, t]
          and prefix_cost == 3.0 and oracle_distances(g, s, x).bottleneck == 2.0)
    return Check('substructure', ok, f'path={path} d_B(s,x)={result.distance(x)}')


def check_bounds():
    g = load_fixture('weighted50')
    distances = all_pairs_bottleneck(g, 'labelset_fw').distances
    same = np.array_equal(distances, all_pairs_bottleneck(g, 'parallel_sssp').distances)
    inside = True
    for s in range(g.n_nodes):
        lower, upper = bottleneck_bounds(g, s)
        inside &= bool(np.all(lower <= distances[s]) and np.all(distances[s] <= upper))
    return Check('weighted50:strategies_and_bounds', same and inside)


def check_golden_numbers():
    model = ChannelModel()
    capacity = gap_junction_capacity(model)
    checks = [
        Check('noise_rms', _within(thermal_noise_rms(model), 3.74e-4, 0.005),
              f'{thermal_noise_rms(model):.6g} V'),
        Check('snr', _within(capacity.snr, 2.2e3, 0.01), f'{capacity.snr:.6g}'),
        Check('bits_per_use', capacity.bits_per_use >= 0.999, f'{capacity.bits_per_use:.6g}'),
        Check('capacity', _within(capacity.bits_per_second, 1700, 0.002),
              f'{capacity.bits_per_second:.6g} bits/s'),
        Check('zero_snr_capacity', abs(binary_awgn_capacity(0.0)) < 1e-6),
    ]
    slow = gap_junction_capacity(ChannelModel(bandwidth=refractory_to_bandwidth(1.0)))
    for label, inputs, target in (
            ('bound_7_hops', (7, 10, capacity.bits_per_second), 0.041),
            ('bound_2_hops', (2, 10, capacity.bits_per_second), 0.012),
            ('bound_1ms_refractory', (7, 10, slow.bits_per_second), 0.070)):
        seconds = consensus_time_bound(BoundInput(*inputs))
        checks.append(Check(label, _within(seconds, target, 0.02), f'{seconds:.5f} s'))
    return checks


def check_hub_and_spoke(max_n=8, workers=1):
    failures = [n for n in range(3, max_n + 1)
                if not verify_hub_and_spoke(n, workers=workers).confirmed]
    return Check('hub_and_spoke', not failures, f'failed for n={failures}' if failures else '')


def check_quantile():
    d = DistanceDistribution.from_values(range(1, 21))
    return Check('quantile', d.quantile(0.95) == 19.0 and d.quantile(0.05) == 1.0)


def check_gamma_recovery(seed=0):
    x = stats.gamma.rvs(2.0, loc=0.0, scale=3.0, size=10_000, random_state=seed)
    fit = fit_gamma(x)
    ok = _within(fit.shape, 2.0, 0.05) and _within(fit.scale, 3.0, 0.05)
    return Check('gamma_recovery', ok, f'shape={fit.shape:.4f} scale={fit.scale:.4f}')


def check_connectome(data_dir):
    """Reproduction checks on a user-supplied multiplicity edge list."""
    path = Path(data_dir) / CONNECTOME_FILE if data_dir else None
    if path is None or not path.exists():
        return [Check('connectome', True, f'{CONNECTOME_FILE} not found', skipped=True)]
    giant = giant_component(read_edge_list(path, mode='multiplicities'))
    matrices = all_pairs_distances(giant)
    geodesic = DistanceDistribution.from_matrix(matrices['geodesic'])
    bottleneck = DistanceDistribution.from_matrix(matrices['bottleneck'])
    d_e = bottleneck.effective_diameter()
    return [
        Check('connectome:giant_nodes', giant.n_nodes == 248, str(giant.n_nodes)),
        Check('connectome:mean_geodesic', abs(geodesic.mean() - 4.52) <= 0.02,
              f'{geodesic.mean():.4f}'),
        Check('connectome:bottleneck_effective_diameter', 6 <= d_e <= 7, f'{d_e:g}'),
    ]


def run_self_test(with_data=None, workers=1):
    """
    Run every built-in check.

    Parameters
    ----------
    with_data : str or Path, optional
        Directory holding ``celegans.txt`` (multiplicity edge list).
    workers : int, optional
        Joblib workers for the all-pairs computations.

    Returns
    -------
    list of Check
    """
    checks = check_fixtures(workers)
    checks.append(check_random_suite(workers=workers))
    checks.append(check_substructure())
    checks.append(check_bounds())
    checks.extend(check_golden_numbers())
    checks.append(check_hub_and_spoke(workers=workers))
    checks.append(check_quantile())
    checks.append(check_gamma_recovery())
    checks.extend(check_connectome(with_data))
    for check in checks:
        log = logger.info if check.passed else logger.error
        log('%s: %s %s', check.name, 'ok' if check.passed else 'FAILED', check.detail)
    return checks
