from ._samplers import (EnsembleSpec, KINDS, DEFAULT_EXPONENT, DEFAULT_MAX_MULTIPLICITY,
                        DEFAULT_ER_NODES, DEFAULT_ER_PROBABILITY, sample,
                        sample_er_weighted, sample_degree_matched, sample_multiplicities,
                        sample_rng, rewire, multiplicities, multiplicity_histogram,
                        fit_multiplicity_exponent)
from ._runner import (EnsembleRun, SampleSummary, DISTANCE_NOTIONS, run_ensemble, analyse_graph,
                      compare_to_reference, ordering_violations)
