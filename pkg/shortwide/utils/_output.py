import json
import math
from pathlib import Path

import numpy as np
import pandas as pd


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'
        if math.isnan(value):
            return None
        return value
    if isinstance(value, np.bool_):
        return bool(value)
    return value


def to_json(obj, indent=2):
    """Serialise obj deterministically; infinities become the string "inf"."""
    return json.dumps(_jsonable(obj), indent=indent, sort_keys=True) + '\n'


def write_json(obj, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(to_json(obj), encoding='utf-8')
    return path


def matrix_frame(matrix, names):
    """Distance matrix as a DataFrame labelled by node names."""
    return pd.DataFrame(np.asarray(matrix, dtype=np.float64), index=list(names), columns=list(names))


def write_matrix(matrix, names, path, fmt='csv'):
    """
    Write a distance matrix with node names as header row and column.

    Unreachable pairs are written as ``inf`` in CSV and ``"inf"`` in JSON.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if fmt == 'json':
        return write_json({'nodes': list(names), 'distances': np.asarray(matrix)}, path)
    matrix_frame(matrix, names).to_csv(path, float_format=None, na_rep='nan')
    return path


def write_survival(curve, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    curve.to_frame().to_csv(path, index=False)
    return path


def format_path(path, names):
    """Arrow-joined node names, e.g. ``a->c->b``."""
    return '->'.join(names[u] for u in path)
