"""
Command-line interface.

Every command reads its inputs, writes CSV/JSON files to the output
directory and exits 0 when all files were written and every internal check
passed. Failures print a JSON object ``{"error", "message", ...}`` on
standard error and exit nonzero.
"""
import argparse
import logging
import os
import sys
import warnings
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np
from joblib import Parallel, delayed

from .data import load_gamma_sample
from .ensembles import (DEFAULT_EXPONENT, DEFAULT_MAX_MULTIPLICITY, DISTANCE_NOTIONS, KINDS,
                        EnsembleSpec, analyse_graph, compare_to_reference,
                        fit_multiplicity_exponent, multiplicities, multiplicity_histogram,
                        ordering_violations, run_ensemble)
from .ensembles._samplers import DEFAULT_SWAPS_PER_EDGE
from .exceptions import (DegenerateSampleError, FitConvergenceError, InvariantError,
                         ShortWideError)
from .graphs import MODES, connected_components, giant_component, read_edge_list
from .neuro import (DEFAULT_BANDWIDTH, DEFAULT_MESSAGE_BITS, DEFAULT_RESISTANCE,
                    DEFAULT_TEMPERATURE, DEFAULT_V0, DEFAULT_V1, ChannelModel, neuro_report,
                    refractory_to_bandwidth, timescale_range)
from .paths import (NOTIONS, STRATEGIES, all_pairs_distances, bottleneck_bounds,
                    complexity_probe, oracle_distances, oracle_matrix)
from .selftest import run_self_test
from .stats import (DEFAULT_THRESHOLD, DistanceDistribution, effective_diameter_profile,
                    fit_gamma)
from .utils._output import format_path, to_json, write_json, write_matrix, write_survival

logger = logging.getLogger(__name__)

WORKERS_ENV = 'SHORTWIDE_WORKERS'
FORMATS = ('csv', 'json')
COMMANDS = ('distances', 'survival', 'fit', 'ensemble', 'neuro', 'oracle', 'self-test', 'bench')


def default_workers():
    """Worker count from ``SHORTWIDE_WORKERS``, 1 when unset."""
    value = os.environ.get(WORKERS_ENV, '1')
    try:
        workers = int(value)
    except ValueError:
        raise ValueError(f'{WORKERS_ENV} must be an integer, got {value!r}') from None
    return workers


@dataclass(frozen=True)
class RunConfig:
    """
    Settings of one command invocation.

    Attributes
    ----------
    command : str
        One of :data:`COMMANDS`.
    inputs : tuple of Path
        Input files (edge lists or samples).
    mode : {'weights', 'multiplicities'}
        How the third edge-list column is read.
    output_dir : Path
        Directory receiving the output files, created if missing.
    threshold : float
        Effective-diameter threshold in (0, 1).
    seed : int
        Base seed for every random draw.
    workers : int
        Concurrent per-source computations or ensemble samples.
    strategy : str
        All-pairs bottleneck strategy.
    whole_graph : bool
        Analyse the whole graph instead of its giant component.
    fmt : {'csv', 'json'}
        Format of tabular outputs.
    options : dict
        Command-specific settings.
    """
    command: str
    inputs: tuple = ()
    mode: str = 'weights'
    output_dir: Path = Path('.')
    threshold: float = DEFAULT_THRESHOLD
    seed: int = 0
    workers: int = 1
    strategy: str = 'parallel_sssp'
    whole_graph: bool = False
    fmt: str = 'csv'
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f'unknown command {self.command!r}')
        if self.mode not in MODES:
            raise ValueError(f'mode must be one of {MODES}, got {self.mode!r}')
        if not (0 < self.threshold < 1):
            raise ValueError(f'threshold must be in (0, 1), got {self.threshold}')
        if self.workers < 1 and self.workers != -1:
            raise ValueError(f'workers must be positive (or -1 for all cores), got {self.workers}')
        if self.strategy not in STRATEGIES:
            raise ValueError(f'strategy must be one of {STRATEGIES}, got {self.strategy!r}')
        if self.fmt not in FORMATS:
            raise ValueError(f'format must be one of {FORMATS}, got {self.fmt!r}')

    @classmethod
    def from_args(cls, args):
        command = 'self-test' if getattr(args, 'self_test', False) else args.command
        options = {k: v for k, v in vars(args).items() if k not in _SHARED_ARGS}
        inputs = getattr(args, 'inputs', None) or ()
        if isinstance(inputs, str):
            inputs = (inputs,)
        inputs = tuple(Path(p) for p in inputs)
        return cls(command=command, inputs=inputs, mode=args.mode,
                   output_dir=Path(args.output_dir), threshold=args.threshold, seed=args.seed,
                   workers=args.workers, strategy=args.strategy,
                   whole_graph=args.whole_graph, fmt=args.format, options=options)

    def output(self, name):
        self.output_dir.mkdir(parents=True, exist_ok=True)
        return self.output_dir / name

    def table_name(self, stem):
        return f'{stem}.{self.fmt}'


_SHARED_ARGS = {'command', 'inputs', 'mode', 'output_dir', 'threshold', 'seed', 'workers',
                'strategy', 'whole_graph', 'format', 'verbose', 'quiet', 'self_test'}


def _load_graph(config, index=0):
    if len(config.inputs) <= index:
        raise ValueError(f'{config.command} needs an edge-list input')
    g = read_edge_list(config.inputs[index], mode=config.mode)
    logger.info('read %s: %d nodes, %d edges', config.inputs[index], g.n_nodes, g.n_edges)
    return g


def _analysed(g, config):
    analysed = g if config.whole_graph else giant_component(g)
    if analysed.n_nodes < 2:
        raise DegenerateSampleError('the analysed component has no pair of nodes')
    return analysed


def _unreachable_pairs(g):
    sizes = connected_components(g).sizes
    n = g.n_nodes
    return int(n * (n - 1) // 2 - sum(int(s) * (int(s) - 1) // 2 for s in sizes))


def _distributions(matrices):
    # unreachable pairs are reported separately; from_matrix would warn for each notion
    with warnings.catch_warnings():
        warnings.simplefilter('ignore')
        return {notion: DistanceDistribution.from_matrix(matrices[notion]) for notion in NOTIONS}


def _check_ordering(g, matrices):
    weights = g.weights()
    violations = ordering_violations(matrices, weights.max() if len(weights) else 0.0)
    if violations:
        raise InvariantError(f'{violations} pairs break d_W <= d_B (or d_B <= d_G)')


def _notion_summary(d, threshold):
    return {
        'diameter': d.diameter(),
        'effective_diameter': d.effective_diameter(threshold),
        'mean': d.mean(),
        'pairs': d.n_pairs,
        'unreachable_pairs': d.n_unreachable,
    }


def _bounds_summary(g, threshold, workers):
    """Effective diameters of the per-pair lower and upper bottleneck bounds."""
    rows = Parallel(n_jobs=workers, prefer='threads')(
        delayed(bottleneck_bounds)(g, s) for s in range(g.n_nodes))
    lower = np.array([r[0] for r in rows]).reshape(g.n_nodes, g.n_nodes)
    upper = np.array([r[1] for r in rows]).reshape(g.n_nodes, g.n_nodes)
    with warnings.catch_warnings():
        warnings.simplefilter('ignore')
        return {
            'lower_effective_diameter':
                DistanceDistribution.from_matrix(lower).effective_diameter(threshold),
            'upper_effective_diameter':
                DistanceDistribution.from_matrix(upper).effective_diameter(threshold),
        }


def cmd_distances(config):
    """
    All-pairs matrices of the four distance notions and a JSON summary.
    """
    g = _load_graph(config)
    analysed = _analysed(g, config)
    matrices = all_pairs_distances(analysed, strategy=config.strategy, workers=config.workers)
    written = [write_matrix(matrices[notion], analysed.names,
                            config.output(config.table_name(notion)), config.fmt)
               for notion in NOTIONS]
    distributions = _distributions(matrices)
    summary = {
        'input': str(config.inputs[0]),
        'mode': config.mode,
        'threshold': config.threshold,
        'strategy': config.strategy,
        'component': 'whole_graph' if config.whole_graph else 'giant',
        'nodes': g.n_nodes,
        'edges': g.n_edges,
        'analysed_nodes': analysed.n_nodes,
        'analysed_edges': analysed.n_edges,
        'full_graph_unreachable_pairs': _unreachable_pairs(g),
        'distances': {notion: _notion_summary(distributions[notion], config.threshold)
                      for notion in NOTIONS},
        'bottleneck_bounds': _bounds_summary(analysed, config.threshold, config.workers),
    }
    written.append(write_json(summary, config.output('summary.json')))
    _check_ordering(analysed, matrices)
    return written


def cmd_survival(config):
    """Survival curve of each distance notion, plus effective-diameter profiles."""
    g = _load_graph(config)
    analysed = _analysed(g, config)
    matrices = all_pairs_distances(analysed, strategy=config.strategy, workers=config.workers)
    distributions = _distributions(matrices)
    curves = {notion: distributions[notion].survival() for notion in NOTIONS}
    written = []
    for notion, curve in curves.items():
        path = config.output(config.table_name(f'survival_{notion}'))
        if config.fmt == 'json':
            written.append(write_json({'distance': curve.values, 'survival': curve.fractions}, path))
        else:
            written.append(write_survival(curve, path))
    profiles = {notion: effective_diameter_profile(distributions[notion]) for notion in NOTIONS}
    written.append(write_json({'threshold': config.threshold, 'profiles': profiles},
                              config.output('survival_summary.json')))
    _check_ordering(analysed, matrices)
    return written


def _read_sample(path):
    return np.loadtxt(path, comments='#', ndmin=1, dtype=np.float64)


def cmd_fit(config):
    """
    Gamma fit per distance notion (or of a raw sample given with ``--sample``).

    Notions that cannot be fitted are reported in the JSON and make the
    command fail after the file is written.
    """
    sample = config.options.get('sample')
    if sample:
        values = load_gamma_sample() if sample == 'bundled' else _read_sample(sample)
        distributions = {'sample': DistanceDistribution.from_values(values)}
    else:
        analysed = _analysed(_load_graph(config), config)
        matrices = all_pairs_distances(analysed, strategy=config.strategy,
                                       workers=config.workers)
        distributions = {notion: d for notion, d in _distributions(matrices).items()
                         if notion in DISTANCE_NOTIONS}
    fits, failures = {}, []
    for notion, d in distributions.items():
        try:
            fits[notion] = fit_gamma(d, n_bins=config.options.get('bins')).to_dict()
        except (DegenerateSampleError, FitConvergenceError) as exc:
            logger.error('gamma fit of %s failed: %s', notion, exc)
            fits[notion] = {'error': type(exc).__name__, 'message': str(exc)}
            failures.append(exc)
    written = [write_json(fits, config.output('fit.json'))]
    if failures:
        raise failures[0]
    return written


def _reference(config):
    path = config.options.get('reference')
    if not path:
        return None
    g = read_edge_list(path, mode=config.mode)
    return _analysed(g, config)


def _ensemble_specs(config, reference):
    opts = config.options
    if opts['kind'] != 'both':
        kinds = (opts['kind'],)
    elif reference is None:
        logger.info('no reference graph: sampling the Erdős–Rényi ensemble only')
        kinds = ('erdos_renyi',)
    else:
        kinds = KINDS
    exponent = opts['exponent']
    histogram = None
    if reference is not None:
        if opts.get('fit_exponent'):
            exponent = fit_multiplicity_exponent(multiplicities(reference), opts['max_multiplicity'])
            logger.info('fitted multiplicity exponent %.4f', exponent)
        if opts.get('empirical_multiplicities'):
            histogram = multiplicity_histogram(reference)
    elif opts.get('fit_exponent') or opts.get('empirical_multiplicities'):
        raise ValueError('--fit-exponent and --empirical-multiplicities need --reference')
    common = dict(multiplicity_exponent=exponent, multiplicity_max=opts['max_multiplicity'],
                  multiplicity_histogram=histogram, seed=config.seed,
                  swaps_per_edge=opts['swaps_per_edge'])
    specs = {}
    for kind in kinds:
        if reference is not None:
            spec = EnsembleSpec.matching(reference, kind, **common)
        else:
            spec = EnsembleSpec(kind=kind, **common)
        if kind == 'erdos_renyi':
            spec = replace(spec, **{k: opts[k] for k in ('n', 'p') if opts.get(k) is not None})
        spec.validate()
        specs[kind] = spec
    return specs


def _write_sample_curves(config, kind, run):
    """Survival curves of every sample under ``ensemble_{kind}/``."""
    written = []
    for summary in run.samples:
        for notion in DISTANCE_NOTIONS:
            d = summary.distributions[notion]
            if not d.size:
                logger.warning('sample %d of %s has no connected pair, no %s curve',
                               summary.index, kind, notion)
                continue
            name = f'ensemble_{kind}/sample_{summary.index:03d}_survival_{notion}.csv'
            written.append(write_survival(d.survival(), config.output(name)))
    return written


def cmd_ensemble(config):
    """
    Sample null-model ensembles and summarise their distance distributions.

    With ``--reference`` the samples are matched to the reference graph and
    a comparison verdict is written.
    """
    reference = _reference(config)
    specs = _ensemble_specs(config, reference)
    runs, written = {}, []
    for kind, spec in specs.items():
        run = run_ensemble(spec, config.options['samples'], threshold=config.threshold,
                           strategy=config.strategy, workers=config.workers)
        runs[kind] = run
        written.append(write_json(run.summary(), config.output(f'ensemble_{kind}.json')))
        for notion in DISTANCE_NOTIONS:
            written.append(write_survival(run.survival(notion),
                                          config.output(f'ensemble_{kind}_survival_{notion}.csv')))
        written.extend(_write_sample_curves(config, kind, run))
    if reference is not None:
        _, _, distributions = analyse_graph(reference, config.threshold, config.strategy,
                                            config.workers)
        verdict = compare_to_reference(runs, distributions, config.threshold)
        written.append(write_json(verdict, config.output('comparison.json')))
    violations = sum(run.ordering_violations for run in runs.values())
    if violations:
        raise InvariantError(f'{violations} sampled pairs break the distance ordering')
    return written


def _channel_model(opts):
    bandwidth = opts['bandwidth']
    if opts.get('refractory_ms') is not None:
        bandwidth = refractory_to_bandwidth(opts['refractory_ms'])
    return ChannelModel(resistance=opts['resistance'], temperature=opts['temperature'],
                        bandwidth=bandwidth, v0=opts['v0'], v1=opts['v1'])


def cmd_neuro(config):
    """Gap-junction capacity and the consensus-time bound it implies."""
    opts = config.options
    model = _channel_model(opts)
    diameter, notion = opts['diameter'], opts['diameter_notion']
    if opts.get('graph'):
        analysed = _analysed(read_edge_list(opts['graph'], mode=config.mode), config)
        _, _, distributions = analyse_graph(analysed, config.threshold, config.strategy,
                                            config.workers)
        diameter = distributions[notion].effective_diameter(config.threshold)
        logger.info('%s effective diameter of %s: %g', notion, opts['graph'], diameter)
    report = neuro_report(model, effective_diameter=diameter, message_bits=opts['message_bits'],
                          junction_count=opts['junctions'], diameter_notion=notion)
    if opts.get('range'):
        report['timescale_range'] = timescale_range(message_bits=opts['message_bits'],
                                                    model=model)
    return [write_json(report, config.output('neuro.json'))]


def cmd_oracle(config):
    """
    Exhaustive simple-path distances of a small graph, for debugging.

    With ``--source`` and ``--target`` every optimal path is listed;
    otherwise the oracle matrices of the four notions are written.
    """
    g = _load_graph(config)
    max_nodes = config.options.get('max_nodes')
    source, target = config.options.get('source'), config.options.get('target')
    if (source is None) != (target is None):
        raise ValueError('--source and --target go together')
    if source is not None:
        s, t = g.node_index(source), g.node_index(target)
        result = oracle_distances(g, s, t, max_nodes=max_nodes)
        names = g.names
        report = {'source': source, 'target': target, 'path_count': result.path_count}
        for notion in NOTIONS:
            report[notion] = {
                'distance': getattr(result, notion),
                'paths': [format_path(p, names) for p in getattr(result, f'{notion}_paths')],
            }
        return [write_json(report, config.output('oracle.json'))]
    return [write_matrix(np.array(oracle_matrix(g, notion, max_nodes=max_nodes)), g.names,
                         config.output(config.table_name(f'oracle_{notion}')), config.fmt)
            for notion in NOTIONS]


def _parse_sizes(text):
    sizes = []
    for item in text.split():
        try:
            n, m, w = (int(x) for x in item.split(','))
        except ValueError:
            raise ValueError(f'sizes are n,m,W triples separated by spaces, got {item!r}') from None
        sizes.append((n, m, w))
    return sizes


def cmd_bench(config):
    """Timing table of the bottleneck algorithms on synthetic graphs (informational)."""
    opts = config.options
    table = complexity_probe(_parse_sizes(opts['sizes']), repeats=opts['repeats'],
                             with_all_pairs=not opts['no_all_pairs'], seed=config.seed)
    path = config.output(config.table_name('bench'))
    if config.fmt == 'json':
        return [write_json(table.to_dict(orient='records'), path)]
    table.to_csv(path, index=False)
    return [path]


def cmd_self_test(config):
    checks = run_self_test(with_data=config.options.get('with_data'), workers=config.workers)
    report = {'passed': all(c.passed for c in checks), 'checks': [c.to_dict() for c in checks]}
    written = [write_json(report, config.output('self_test.json'))]
    failed = [c.name for c in checks if not c.passed]
    if failed:
        raise InvariantError(f'self-test failed: {", ".join(failed)}')
    return written


COMMAND_FUNCTIONS = {
    'distances': cmd_distances,
    'survival': cmd_survival,
    'fit': cmd_fit,
    'ensemble': cmd_ensemble,
    'neuro': cmd_neuro,
    'oracle': cmd_oracle,
    'self-test': cmd_self_test,
    'bench': cmd_bench,
}


def _common_parser(with_defaults=True):
    """
    Options accepted both before and after the subcommand.

    The subcommand copies carry no defaults, so a value given before the
    subcommand is kept unless it is repeated after it.
    """
    def default(value):
        return value if with_defaults else argparse.SUPPRESS

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-o', '--output-dir', default=default('.'),
                        help='directory for output files')
    common.add_argument('--mode', choices=MODES, default=default('weights'),
                        help='third edge-list column holds weights or multiplicities (w = 1/m)')
    common.add_argument('--threshold', type=float, default=default(DEFAULT_THRESHOLD),
                        help=f'effective-diameter threshold (default {DEFAULT_THRESHOLD})')
    common.add_argument('--seed', type=int, default=default(0))
    common.add_argument('--workers', type=int, default=default(None),
                        help=f'parallel workers (default ${WORKERS_ENV} or 1)')
    common.add_argument('--strategy', choices=STRATEGIES, default=default('parallel_sssp'),
                        help='all-pairs bottleneck strategy')
    common.add_argument('--whole-graph', action='store_true', default=default(False),
                        help='analyse the whole graph instead of its giant component')
    common.add_argument('--format', choices=FORMATS, default=default('csv'),
                        help='format of tabular outputs')
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true', default=default(False))
    verbosity.add_argument('-q', '--quiet', action='store_true', default=default(False))
    return common


def build_parser():
    parser = argparse.ArgumentParser(
        prog='shortwide', parents=[_common_parser()],
        description='Short-and-wide (bottleneck) distances, distance distributions, '
                    'null ensembles and gap-junction timing bounds.')
    common = _common_parser(with_defaults=False)
    parser.add_argument('--self-test', action='store_true',
                        help='run the built-in checks (same as the self-test command)')
    parser.add_argument('--with-data', help='directory with celegans.txt for data checks')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')

    for name, text in (('distances', 'all-pairs distance matrices and summary'),
                       ('survival', 'survival curves per distance notion')):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument('inputs', nargs=1, metavar='EDGE_LIST')

    p = sub.add_parser('fit', parents=[common], help='gamma fits of distance distributions')
    p.add_argument('inputs', nargs='?', metavar='EDGE_LIST')
    p.add_argument('--sample', help="file of raw values to fit instead, or 'bundled'")
    p.add_argument('--bins', type=int, default=None, help='chi-square bins')

    p = sub.add_parser('ensemble', parents=[common], help='null-model ensembles')
    p.add_argument('--kind', choices=KINDS + ('both',), default='both')
    p.add_argument('--samples', type=int, default=100)
    p.add_argument('--n', type=int, default=None, help='Erdős–Rényi node count')
    p.add_argument('--p', type=float, default=None, help='Erdős–Rényi edge probability')
    p.add_argument('--reference', help='reference edge list to match and compare against')
    p.add_argument('--exponent', type=float, default=DEFAULT_EXPONENT,
                   help='power-law exponent of edge multiplicities')
    p.add_argument('--max-multiplicity', type=int, default=DEFAULT_MAX_MULTIPLICITY)
    p.add_argument('--fit-exponent', action='store_true',
                   help='estimate the exponent from the reference multiplicities')
    p.add_argument('--empirical-multiplicities', action='store_true',
                   help='draw multiplicities from the reference histogram')
    p.add_argument('--swaps-per-edge', type=int, default=DEFAULT_SWAPS_PER_EDGE)

    p = sub.add_parser('neuro', parents=[common], help='gap-junction capacity and timing bound')
    p.add_argument('--resistance', type=float, default=DEFAULT_RESISTANCE)
    p.add_argument('--temperature', type=float, default=DEFAULT_TEMPERATURE)
    p.add_argument('--bandwidth', type=float, default=DEFAULT_BANDWIDTH)
    p.add_argument('--refractory-ms', type=float, default=None,
                   help='set the bandwidth to 1000/ms Hz')
    p.add_argument('--v0', type=float, default=DEFAULT_V0)
    p.add_argument('--v1', type=float, default=DEFAULT_V1)
    p.add_argument('--diameter', type=float, default=7.0, help='effective diameter D_e')
    p.add_argument('--diameter-notion', choices=DISTANCE_NOTIONS, default='geodesic')
    p.add_argument('--graph', help='edge list to take D_e from (with --diameter-notion)')
    p.add_argument('--message-bits', type=float, default=DEFAULT_MESSAGE_BITS)
    p.add_argument('--junctions', type=float, default=1.0,
                   help='parallel gap junctions per link')
    p.add_argument('--range', action='store_true', help='also tabulate the timescale range')

    p = sub.add_parser('oracle', parents=[common], help='exhaustive simple-path distances')
    p.add_argument('inputs', nargs=1, metavar='EDGE_LIST')
    p.add_argument('--source')
    p.add_argument('--target')
    p.add_argument('--max-nodes', type=int, default=14)

    p = sub.add_parser('self-test', parents=[common], help='built-in checks')
    p.add_argument('--with-data', default=argparse.SUPPRESS,
                   help='directory with celegans.txt for data checks')

    p = sub.add_parser('bench', parents=[common], help='timing of the bottleneck algorithms')
    p.add_argument('--sizes', default='50,100,2 50,100,5 100,300,5 100,300,10',
                   help='space separated n,m,W triples')
    p.add_argument('--repeats', type=int, default=1)
    p.add_argument('--no-all-pairs', action='store_true')
    return parser


def _configure_logging(args):
    level = logging.DEBUG if args.verbose else logging.ERROR if args.quiet else logging.WARNING
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    logging.captureWarnings(True)


def _error_payload(exc):
    payload = {'error': type(exc).__name__, 'message': str(exc)}
    for attr, key in (('line_number', 'line'), ('source', 'source'), ('achieved', 'achieved')):
        value = getattr(exc, attr, None)
        if value is not None:
            payload[key] = value
    if isinstance(exc, OSError) and exc.filename:
        payload['source'] = str(exc.filename)
    return payload


def main(argv=None):
    """
    Entry point of the ``shortwide`` command.

    Returns
    -------
    int
        0 on success, 1 on input or computation errors, 3 when an internal
        check failed.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers is None:
        try:
            args.workers = default_workers()
        except ValueError as exc:
            sys.stderr.write(to_json(_error_payload(exc), indent=None))
            return 1
    _configure_logging(args)
    if not args.self_test and args.command is None:
        parser.print_help(sys.stderr)
        return 2
    try:
        config = RunConfig.from_args(args)
        written = COMMAND_FUNCTIONS[config.command](config)
    except InvariantError as exc:
        sys.stderr.write(to_json(_error_payload(exc), indent=None))
        return 3
    except (ShortWideError, ValueError, RuntimeError, OSError) as exc:
        logger.debug('command failed', exc_info=True)
        sys.stderr.write(to_json(_error_payload(exc), indent=None))
        return 1
    for path in written:
        logger.info('wrote %s', path)
    return 0
