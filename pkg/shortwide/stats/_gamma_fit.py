import logging
from dataclasses import dataclass, asdict

import numpy as np
from scipy import stats

from ._distribution import DistanceDistribution
from ..exceptions import FitConvergenceError
from ..utils.checkers import _check_sample

logger = logging.getLogger(__name__)

MIN_FIT_SAMPLES = 50
N_FITTED_PARAMETERS = 3


@dataclass(frozen=True)
class GammaFit:
    """
    Three-parameter gamma fit with goodness-of-fit statistics.

    Attributes
    ----------
    shape, location, scale : float
        Parameters of ``scipy.stats.gamma(shape, loc=location, scale=scale)``.
    chi_square : float
        Pearson statistic over equal-probability bins.
    p_value : float
        Upper tail of the chi-square law with ``bins - 1 - 3`` degrees of
        freedom.
    ks_statistic : float
        Kolmogorov-Smirnov distance between the sample and the fit.
    bins : int
        Number of bins used for the chi-square test.
    n_samples : int
        Sample size.
    """
    shape: float
    location: float
    scale: float
    chi_square: float
    p_value: float
    ks_statistic: float
    bins: int
    n_samples: int

    def to_dict(self):
        return asdict(self)

    def frozen(self):
        return stats.gamma(self.shape, loc=self.location, scale=self.scale)


def default_bin_count(n_samples):
    """``max(5, n_samples // 50)`` capped at 20."""
    return int(min(20, max(5, n_samples // 50)))


def location_grid(x, size=21):
    """
    Candidate locations strictly below the sample minimum.

    The grid spans one sample range below ``min(x)`` up to 5% of the range
    under it, and always contains 0 when the sample is positive.
    """
    low, high = float(x.min()), float(x.max())
    span = high - low
    upper = low - 0.05 * span
    grid = np.linspace(min(0.0, upper - span), upper, size)
    if low > 0:
        grid = np.union1d(grid[grid < low], [0.0])
    return grid


def gamma_moments(x):
    """Method-of-moments gamma estimate ``(shape, scale)`` with location 0."""
    x = np.asarray(x, dtype=np.float64)
    mean, var = x.mean(), x.var()
    return mean ** 2 / var, var / mean


def chi_square_test(x, frozen, n_bins):
    """
    Pearson chi-square test of x against a fitted distribution, on
    ``n_bins`` bins of equal probability under the fit.

    Returns
    -------
    statistic, p_value : float
    """
    inner_edges = frozen.ppf(np.arange(1, n_bins) / n_bins)
    observed = np.bincount(np.searchsorted(inner_edges, x, side='right'), minlength=n_bins)
    expected = np.full(n_bins, len(x) / n_bins)
    result = stats.chisquare(observed, expected, ddof=N_FITTED_PARAMETERS)
    return float(result.statistic), float(result.pvalue)


def fit_gamma(d, n_bins=None, grid_size=21):
    """
    Fit a three-parameter gamma law to a distance distribution.

    Shape and scale are maximum-likelihood estimates for each location of a
    grid below the sample minimum; the location with the largest likelihood
    wins. A free location is avoided because the likelihood is unbounded
    when the location approaches the smallest observation.

    Parameters
    ----------
    d : DistanceDistribution or array-like
        Sample to fit (finite values only).
    n_bins : int, optional
        Chi-square bin count, :func:`default_bin_count` by default.
    grid_size : int, optional
        Number of candidate locations.

    Returns
    -------
    GammaFit
        Parameters and goodness-of-fit statistics.

    Raises
    ------
    DegenerateSampleError
        With fewer than 50 values or a constant sample.
    FitConvergenceError
        If no grid location yields finite parameters.
    """
    if isinstance(d, DistanceDistribution):
        x = d.values
    else:
        x = DistanceDistribution.from_values(d).values
    _check_sample(x, MIN_FIT_SAMPLES)

    best = None
    for loc in location_grid(x, grid_size):
        try:
            shape, _, scale = stats.gamma.fit(x, floc=loc)
        except (RuntimeError, ValueError) as exc:
            logger.debug('gamma fit failed at loc=%g: %s', loc, exc)
            continue
        if not (np.isfinite(shape) and np.isfinite(scale) and shape > 0 and scale > 0):
            continue
        loglik = stats.gamma.logpdf(x, shape, loc=loc, scale=scale).sum()
        if np.isfinite(loglik) and (best is None or loglik > best[0]):
            best = (loglik, shape, loc, scale)
    if best is None:
        raise FitConvergenceError('gamma maximum likelihood did not converge on any location')

    _, shape, loc, scale = best
    frozen = stats.gamma(shape, loc=loc, scale=scale)
    bins = n_bins or default_bin_count(len(x))
    chi2, p_value = chi_square_test(x, frozen, bins)
    ks = stats.kstest(x, frozen.cdf).statistic
    logger.info('gamma fit: shape=%.4g loc=%.4g scale=%.4g chi2=%.3g p=%.3g',
                shape, loc, scale, chi2, p_value)
    return GammaFit(float(shape), float(loc), float(scale), chi2, p_value, float(ks),
                    int(bins), int(len(x)))
