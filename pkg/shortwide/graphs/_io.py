import io
import logging
import math
import re
from pathlib import Path

from ._weighted_graph import WeightedGraph
from ..exceptions import EdgeListError

logger = logging.getLogger(__name__)

MODES = ('weights', 'multiplicities')

_SEPARATOR = re.compile(r'[,\s]+')


def _parse_value(token, mode, line_number, source):
    try:
        value = float(token)
    except ValueError:
        raise EdgeListError(f'value {token!r} is not a number',
                            line_number, source) from None
    if not math.isfinite(value) or value <= 0:
        raise EdgeListError(f'value {token!r} must be positive and finite',
                            line_number, source)
    if mode == 'weights':
        return value
    if not value.is_integer():
        raise EdgeListError(f'multiplicity {token!r} must be a positive integer',
                            line_number, source)
    return 1.0 / int(value)


def _decode(line, line_number, source):
    try:
        return line.decode('utf-8-sig' if line_number == 1 else 'utf-8')
    except UnicodeDecodeError as exc:
        raise EdgeListError(f'invalid UTF-8 byte {line[exc.start:exc.start + 1]!r} '
                            f'at column {exc.start + 1}', line_number, source) from None


def parse_edge_list(text, mode='weights', source=None):
    """
    Parse an undirected edge list.

    Each record is ``u v value`` with fields separated by whitespace or
    commas; ``#`` starts a comment and blank lines are ignored. Node names
    are mapped to dense indices in order of first appearance.

    Parameters
    ----------
    text : str, bytes or file-like
        Edge-list content. Bytes are decoded as UTF-8 line by line.
    mode : {'weights', 'multiplicities'}, optional
        In ``weights`` mode the value is the edge weight. In
        ``multiplicities`` mode the value is a positive integer count m of
        parallel links (gap junctions) and the stored weight is ``1/m``.
    source : str, optional
        Label used in error messages, typically the file name.

    Returns
    -------
    WeightedGraph
        The parsed graph.

    Raises
    ------
    EdgeListError
        On a malformed line, invalid UTF-8, a non-positive value, a duplicate
        edge or a self-loop. The 1-based line number is attached.

    Examples
    --------
    >>> g = parse_edge_list("a b 1\\nb c 0.5")
    >>> g.n_nodes, g.n_edges, g.weight(1, 2)
    (3, 2, 0.5)
    >>> parse_edge_list("n1 n2 4", mode='multiplicities').weight(0, 1)
    0.25
    """
    if mode not in MODES:
        raise ValueError(f'mode must be one of {MODES}, got {mode!r}')
    if isinstance(text, str):
        text = io.StringIO(text)
    elif isinstance(text, bytes):
        text = io.BytesIO(text)

    index = {}
    edges = []
    seen = {}
    for line_number, line in enumerate(text, start=1):
        if isinstance(line, bytes):
            line = _decode(line, line_number, source)
        content = line.split('#', 1)[0].strip()
        if not content:
            continue
        tokens = [tok for tok in _SEPARATOR.split(content) if tok]
        if len(tokens) != 3:
            raise EdgeListError(
                f'expected 3 fields "u v value", got {len(tokens)}',
                line_number, source)
        u_name, v_name, token = tokens
        if u_name == v_name:
            raise EdgeListError(f'self-loop on node {u_name!r}', line_number, source)
        weight = _parse_value(token, mode, line_number, source)
        key = frozenset((u_name, v_name))
        if key in seen:
            raise EdgeListError(
                f'duplicate edge {u_name!r}-{v_name!r} (first seen on line {seen[key]})',
                line_number, source)
        seen[key] = line_number
        u = index.setdefault(u_name, len(index))
        v = index.setdefault(v_name, len(index))
        edges.append((u, v, weight))

    names = sorted(index, key=index.get)
    logger.debug('parsed %d nodes and %d edges from %s',
                 len(names), len(edges), source or '<text>')
    return WeightedGraph(len(names), edges, names)


def read_edge_list(path, mode='weights'):
    """Read an edge-list file (UTF-8). See :func:`parse_edge_list`."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f'edge list not found: {path}')
    with path.open('rb') as handle:
        return parse_edge_list(handle, mode=mode, source=str(path))


def serialize_edge_list(g, mode='weights'):
    """
    Write g in the edge-list format read by :func:`parse_edge_list`.

    Weights are written with ``repr`` so parsing the output reproduces every
    float64 weight bit for bit. In ``multiplicities`` mode each weight is
    written as the integer ``round(1/w)``.

    Examples
    --------
    >>> g = parse_edge_list("a b 0.1\\nb c 3")
    >>> parse_edge_list(serialize_edge_list(g)) == g
    True
    """
    if mode not in MODES:
        raise ValueError(f'mode must be one of {MODES}, got {mode!r}')
    lines = []
    for u, v, w in g.edges():
        value = repr(w) if mode == 'weights' else str(round(1.0 / w))
        lines.append(f'{g.names[u]} {g.names[v]} {value}')
    return '\n'.join(lines) + ('\n' if lines else '')


def write_edge_list(g, path, mode='weights'):
    Path(path).write_text(serialize_edge_list(g, mode), encoding='utf-8')
