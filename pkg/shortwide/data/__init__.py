"""Small graphs and samples shipped with the package for tests and self-checks."""
from importlib import resources

FIXTURES = ('triangle', 'star', 'path', 'substructure', 'unit_square', 'weighted50')


def fixture_path(name):
    """Path of a bundled fixture; edge lists end in ``.txt``."""
    filename = name if '.' in name else f'{name}.txt'
    return resources.files(__name__).joinpath(filename)


def load_fixture(name, mode='weights'):
    """Parse a bundled edge-list fixture into a WeightedGraph."""
    from ..graphs import parse_edge_list
    path = fixture_path(name)
    return parse_edge_list(path.read_text(encoding='utf-8'), mode=mode, source=name)


def load_gamma_sample():
    """Synthetic gamma(shape=2, loc=0, scale=3) sample of 2000 draws."""
    import numpy as np
    text = fixture_path('gamma_sample.csv').read_text(encoding='utf-8')
    return np.array([float(line) for line in text.split() if line and not line.startswith('#')])
