from ._distribution import (DistanceDistribution, SurvivalCurve, DEFAULT_THRESHOLD, quantile,
                            effective_diameter, diameter, survival, effective_diameter_profile)
from ._gamma_fit import (GammaFit, fit_gamma, gamma_moments, chi_square_test, default_bin_count,
                         location_grid)
from ._comparison import distribution_gap, max_quantile_gap
