import logging
import warnings
from dataclasses import dataclass

import numpy as np
import pandas as pd
from statsmodels.distributions.empirical_distribution import ECDF

from ..exceptions import DegenerateSampleError
from ..utils.checkers import _check_probability

logger = logging.getLogger(__name__)

DEFAULT_THRESHOLD = 0.95


@dataclass(frozen=True)
class SurvivalCurve:
    """
    Empirical survival function evaluated at every distinct distance.

    Attributes
    ----------
    values : np.ndarray
        Distinct finite distances, increasing.
    fractions : np.ndarray
        Fraction of pairs whose distance is strictly greater than each value.
    """
    values: np.ndarray
    fractions: np.ndarray

    def __len__(self):
        return len(self.values)

    def points(self):
        return list(zip(self.values.tolist(), self.fractions.tolist()))

    def to_frame(self):
        return pd.DataFrame({'distance': self.values, 'survival': self.fractions})


@dataclass(frozen=True)
class DistanceDistribution:
    """
    Distances between all unordered pairs of nodes.

    Attributes
    ----------
    values : np.ndarray
        Finite pairwise distances, sorted increasingly.
    n_unreachable : int
        Number of pairs at infinite distance, kept out of ``values``.

    Examples
    --------
    >>> d = DistanceDistribution.from_values([1, 2, 2, 5])
    >>> d.quantile(0.5)
    2.0
    """
    values: np.ndarray
    n_unreachable: int = 0

    @classmethod
    def from_values(cls, values):
        values = np.asarray(values, dtype=np.float64).ravel()
        finite = np.isfinite(values)
        return cls(np.sort(values[finite]), int(np.count_nonzero(~finite)))

    @classmethod
    def from_matrix(cls, matrix):
        """
        Collect the ``n(n-1)/2`` upper-triangle entries of a distance matrix.

        Unreachable pairs are counted and excluded, with a warning.
        """
        matrix = np.asarray(matrix, dtype=np.float64)
        rows, cols = np.triu_indices(matrix.shape[0], k=1)
        dist = cls.from_values(matrix[rows, cols])
        if dist.n_unreachable:
            warnings.warn(f'{dist.n_unreachable} unreachable pairs were left out of the distribution')
        return dist

    @property
    def size(self):
        return len(self.values)

    @property
    def n_pairs(self):
        return self.size + self.n_unreachable

    def _require_values(self):
        if self.size == 0:
            raise DegenerateSampleError('the distance distribution has no finite value')

    def cdf(self, x):
        """Empirical cdf ``F(x)``: fraction of finite distances at most x."""
        self._require_values()
        return ECDF(self.values)(x)

    def mean(self):
        self._require_values()
        return float(self.values.mean())

    def quantile(self, p):
        """
        Left-continuous inverse of the empirical cdf,
        ``Q(p) = inf{x : p <= F(x)}``.

        Parameters
        ----------
        p : float
            Probability in (0, 1).

        Returns
        -------
        float
            Smallest observed distance whose cdf reaches p.

        Raises
        ------
        DegenerateSampleError
            If the distribution is empty.
        ValueError
            If p is outside (0, 1).

        Examples
        --------
        >>> DistanceDistribution.from_values(range(1, 21)).quantile(0.95)
        19.0
        """
        _check_probability(p)
        self._require_values()
        n = self.size
        levels = np.arange(1, n + 1) / n
        position = int(np.searchsorted(levels, p, side='left'))
        return float(self.values[min(position, n - 1)])

    def effective_diameter(self, threshold=DEFAULT_THRESHOLD):
        """Quantile of the distances at ``threshold`` (0.95 by default)."""
        return self.quantile(threshold)

    def diameter(self):
        """Largest finite distance. See ``has_unreachable`` for infinite pairs."""
        self._require_values()
        return float(self.values[-1])

    @property
    def has_unreachable(self):
        return self.n_unreachable > 0

    def survival(self):
        """
        Survival function ``S(x) = 1 - F(x)`` at each distinct distance.

        Examples
        --------
        >>> DistanceDistribution.from_values([5, 5]).survival().points()
        [(5.0, 0.0)]
        """
        self._require_values()
        distinct = np.unique(self.values)
        return SurvivalCurve(distinct, 1.0 - ECDF(self.values)(distinct))


def quantile(d, p):
    """Functional form of :meth:`DistanceDistribution.quantile`."""
    return d.quantile(p)


def effective_diameter(d, threshold=DEFAULT_THRESHOLD):
    """
    Effective diameter ``D_e = Q(threshold)``; never larger than the diameter.
    """
    return d.quantile(threshold)


def diameter(d):
    return d.diameter()


def survival(d):
    return d.survival()


def effective_diameter_profile(d, thresholds=(0.5, 0.75, 0.9, 0.95, 0.99)):
    """
    Effective diameter at several thresholds.

    Returns
    -------
    dict
        ``{threshold: effective diameter}``, nondecreasing in the threshold.
    """
    return {float(t): d.quantile(t) for t in thresholds}
