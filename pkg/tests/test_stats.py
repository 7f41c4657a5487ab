import numpy as np
import pytest
from scipy import stats

from shortwide.data import FIXTURES, load_fixture, load_gamma_sample
from shortwide.exceptions import DegenerateSampleError
from shortwide.paths import NOTIONS, all_pairs_distances
from shortwide.stats import (DistanceDistribution, GammaFit, chi_square_test, default_bin_count,
                             diameter, distribution_gap, effective_diameter,
                             effective_diameter_profile, fit_gamma, location_grid,
                             max_quantile_gap, quantile, survival)


def test_quantile_of_one_to_twenty():
    d = DistanceDistribution.from_values(range(1, 21))
    assert quantile(d, 0.95) == 19.0
    assert quantile(d, 0.05) == 1.0
    assert quantile(d, 0.051) == 2.0
    assert quantile(d, 0.5) == 10.0
    assert effective_diameter(d) == 19.0
    assert diameter(d) == 20.0


def test_quantile_is_left_continuous():
    d = DistanceDistribution.from_values([1, 2, 2, 5])
    assert d.quantile(0.25) == 1.0
    assert d.quantile(0.26) == 2.0
    assert d.quantile(0.75) == 2.0
    assert d.quantile(0.76) == 5.0


@pytest.mark.parametrize('p', [0.0, 1.0, -0.1, 1.5])
def test_quantile_rejects_probabilities_outside_open_interval(p):
    with pytest.raises(ValueError):
        DistanceDistribution.from_values([1, 2, 3]).quantile(p)


def test_empty_distribution_raises():
    d = DistanceDistribution.from_values([])
    with pytest.raises(DegenerateSampleError):
        d.quantile(0.5)
    with pytest.raises(DegenerateSampleError):
        d.survival()


def test_from_matrix_counts_unreachable_pairs():
    matrix = np.array([[0, 1, np.inf], [1, 0, np.inf], [np.inf, np.inf, 0]])
    with pytest.warns(UserWarning):
        d = DistanceDistribution.from_matrix(matrix)
    assert d.values.tolist() == [1.0]
    assert d.n_unreachable == 2
    assert d.n_pairs == 3
    assert d.has_unreachable


def test_cdf_and_mean():
    d = DistanceDistribution.from_values([3, 1, 2, 2])
    assert d.values.tolist() == [1.0, 2.0, 2.0, 3.0]
    assert d.cdf(2) == 0.75
    assert d.cdf(0.5) == 0.0
    assert d.mean() == 2.0


def test_survival_points():
    curve = survival(DistanceDistribution.from_values([1, 2, 2, 5]))
    assert curve.points() == [(1.0, 0.75), (2.0, 0.25), (5.0, 0.0)]
    frame = curve.to_frame()
    assert list(frame.columns) == ['distance', 'survival']
    assert len(curve) == 3


@pytest.mark.parametrize('name', FIXTURES)
def test_effective_diameter_never_exceeds_diameter(name):
    m = all_pairs_distances(load_fixture(name))
    for notion in NOTIONS:
        d = DistanceDistribution.from_matrix(m[notion])
        assert d.effective_diameter() <= d.diameter()


def test_survival_curves_follow_distance_ordering():
    m = all_pairs_distances(load_fixture('weighted50'))
    weighted = DistanceDistribution.from_matrix(m['weighted'])
    bottleneck = DistanceDistribution.from_matrix(m['bottleneck'])
    geodesic = DistanceDistribution.from_matrix(m['geodesic'])
    grid = np.linspace(0, geodesic.diameter(), 50)
    assert np.all(1 - weighted.cdf(grid) <= 1 - bottleneck.cdf(grid))
    assert np.all(1 - bottleneck.cdf(grid) <= 1 - geodesic.cdf(grid))


def test_triangle_bottleneck_effective_diameter(triangle):
    d = DistanceDistribution.from_matrix(all_pairs_distances(triangle)['bottleneck'])
    assert d.effective_diameter() == 2.0


def test_effective_diameter_profile_is_nondecreasing():
    d = DistanceDistribution.from_values(np.arange(1, 101))
    profile = effective_diameter_profile(d, (0.5, 0.9, 0.95))
    assert profile == {0.5: 50.0, 0.9: 90.0, 0.95: 95.0}


def test_default_bin_count():
    assert default_bin_count(100) == 5
    assert default_bin_count(600) == 12
    assert default_bin_count(100_000) == 20


def test_location_grid_contains_zero_below_minimum():
    x = np.array([1.0, 2.0, 5.0])
    grid = location_grid(x)
    assert 0.0 in grid
    assert np.all(grid < x.min())


def test_gamma_recovery():
    x = stats.gamma.rvs(2.0, loc=0.0, scale=3.0, size=10_000, random_state=42)
    fit = fit_gamma(x)
    assert isinstance(fit, GammaFit)
    assert fit.shape == pytest.approx(2.0, rel=0.05)
    assert fit.scale == pytest.approx(3.0, rel=0.05)
    assert fit.bins == 20
    assert fit.n_samples == 10_000
    assert fit.p_value > 1e-4
    assert 0 <= fit.ks_statistic < 0.05


def test_gamma_fit_of_exponential_sample():
    x = stats.expon.rvs(scale=2.0, size=10_000, random_state=5)
    fit = fit_gamma(x)
    assert fit.shape == pytest.approx(1.0, rel=0.05)
    assert fit.scale == pytest.approx(2.0, rel=0.05)


def test_chi_square_ignores_sample_order():
    x = stats.gamma.rvs(2.0, scale=3.0, size=1_000, random_state=8)
    shuffled = np.random.default_rng(0).permutation(x)
    frozen = stats.gamma(2.0, scale=3.0)
    assert chi_square_test(x, frozen, 10) == chi_square_test(shuffled, frozen, 10)
    assert chi_square_test(x[::-1], frozen, 10) == chi_square_test(x, frozen, 10)
    assert fit_gamma(shuffled) == fit_gamma(x)


def test_gamma_fit_of_bundled_sample():
    fit = fit_gamma(load_gamma_sample())
    assert fit.shape == pytest.approx(2.0, rel=0.15)
    assert fit.scale == pytest.approx(3.0, rel=0.15)
    assert set(fit.to_dict()) == {'shape', 'location', 'scale', 'chi_square', 'p_value',
                                  'ks_statistic', 'bins', 'n_samples'}


def test_gamma_fit_rejects_degenerate_samples():
    with pytest.raises(DegenerateSampleError):
        fit_gamma(np.full(200, 3.0))
    with pytest.raises(DegenerateSampleError):
        fit_gamma(np.arange(1.0, 11.0))


def test_distribution_gap_exact_and_one_dimensional():
    assert distribution_gap([1.0, 2.0], [2.0, 3.0]) == pytest.approx(1.0)
    rng = np.random.default_rng(0)
    a, b = rng.normal(size=400), rng.normal(loc=0.5, size=400)
    exact = distribution_gap(a, b)
    assert exact == pytest.approx(0.5, abs=0.15)
    assert distribution_gap(a, b, n_min=100) == pytest.approx(exact, rel=1e-6)


def test_max_quantile_gap():
    d1 = DistanceDistribution.from_values(np.arange(100))
    assert max_quantile_gap(d1, DistanceDistribution.from_values(np.arange(100) + 2)) == \
        pytest.approx(2.0)
