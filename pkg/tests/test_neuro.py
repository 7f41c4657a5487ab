import math
from dataclasses import replace

import numpy as np
import pytest
from scipy import integrate, stats

from shortwide.neuro import (GAUSSIAN_ENTROPY_BITS, MEAN_JUNCTIONS_PER_LINK, BoundInput,
                             ChannelModel, binary_awgn_capacity, consensus_time_bound,
                             gap_junction_capacity, is_star, neuro_report, output_entropy_bits,
                             parallel_capacity, prufer_to_edges, refractory_to_bandwidth,
                             thermal_noise_rms, timescale_range, tree_diameter,
                             verify_hub_and_spoke)


def test_thermal_noise_of_default_junction():
    assert thermal_noise_rms(ChannelModel()) == pytest.approx(3.74e-4, rel=0.005)


def test_default_junction_capacity():
    result = gap_junction_capacity()
    assert result.snr == pytest.approx(2.2e3, rel=0.01)
    assert result.snr == pytest.approx(2.19e3, rel=0.002)
    assert result.bits_per_use >= 0.999
    assert result.bits_per_second == pytest.approx(1700, rel=0.002)
    assert result.seconds_per_bit == pytest.approx(1 / 1700, rel=0.002)
    assert result.integration_error < 1e-6


def test_zero_snr_entropy_is_gaussian():
    # with no signal the output is a unit Gaussian
    entropy, _ = output_entropy_bits(0.0)
    assert entropy == pytest.approx(GAUSSIAN_ENTROPY_BITS, abs=1e-6)
    assert binary_awgn_capacity(0.0) == 0.0


def test_capacity_limits_and_monotonicity():
    values = [binary_awgn_capacity(snr) for snr in (0.1, 0.5, 1.0, 4.0, 25.0)]
    assert all(a < b for a, b in zip(values, values[1:]))
    assert binary_awgn_capacity(math.inf) == 1.0
    assert binary_awgn_capacity(400.0) == pytest.approx(1.0, abs=1e-6)
    with pytest.raises(ValueError):
        binary_awgn_capacity(-1.0)


def test_unit_snr_capacity_against_trapezoid():
    a = 1.0
    y = np.linspace(-12, 12, 200_001)
    density = 0.5 * (stats.norm.pdf(y, a) + stats.norm.pdf(y, -a))
    entropy = -integrate.trapezoid(density * np.log2(density), y)
    expected = entropy - GAUSSIAN_ENTROPY_BITS
    capacity = binary_awgn_capacity(1.0)
    assert capacity == pytest.approx(expected, abs=1e-6)
    assert 0.47 < capacity < 0.50


def test_capacity_below_gaussian_input_bound():
    for snr in (0.3, 1.0, 3.0):
        assert binary_awgn_capacity(snr) < 0.5 * math.log2(1 + snr)


@pytest.mark.parametrize('kwargs', [
    dict(resistance=0.0),
    dict(temperature=-1.0),
    dict(bandwidth=-5.0),
    dict(v0=-0.01, v1=-0.02),
])
def test_invalid_channel_parameters(kwargs):
    with pytest.raises(ValueError):
        ChannelModel(**kwargs)


def test_zero_bandwidth_and_equal_levels():
    silent = gap_junction_capacity(ChannelModel(bandwidth=0.0))
    assert silent.noise_rms == 0.0 and silent.bits_per_use == 1.0
    assert silent.bits_per_second == 0.0 and math.isinf(silent.seconds_per_bit)
    flat = gap_junction_capacity(ChannelModel(v0=-0.05, v1=-0.05))
    assert flat.snr == 0.0 and flat.bits_per_use == 0.0


def test_parallel_capacity():
    result = gap_junction_capacity()
    assert parallel_capacity(result, 2) == pytest.approx(2 * result.bits_per_second)
    assert parallel_capacity(1700.0, MEAN_JUNCTIONS_PER_LINK) == pytest.approx(2941.0)
    with pytest.raises(ValueError):
        parallel_capacity(result, 0)


@pytest.mark.parametrize('inputs, seconds', [
    ((7, 10, 1700), 0.041),
    ((2, 10, 1700), 0.012),
    ((7, 10, 1000), 0.070),
])
def test_consensus_time_bounds(inputs, seconds):
    assert consensus_time_bound(BoundInput(*inputs)) == pytest.approx(seconds, rel=0.02)


def test_consensus_time_bound_rejects_nonpositive_inputs():
    with pytest.raises(ValueError):
        consensus_time_bound(BoundInput(7, 10, 0))
    with pytest.raises(ValueError):
        consensus_time_bound(BoundInput(0, 10, 1700))


def test_refractory_period_sets_bandwidth():
    assert refractory_to_bandwidth(1.0) == 1000.0
    assert refractory_to_bandwidth(1 / 1.7) == pytest.approx(1700.0)
    with pytest.raises(ValueError):
        refractory_to_bandwidth(0.0)


def test_neuro_report_defaults():
    report = neuro_report()
    assert report['bound_seconds'] == pytest.approx(0.041, rel=0.02)
    assert report['inputs']['diameter_notion'] == 'geodesic'
    assert report['inputs']['effective_diameter'] == 7.0


def test_neuro_report_with_slower_junction():
    model = replace(ChannelModel(), bandwidth=refractory_to_bandwidth(1.0))
    assert neuro_report(model)['bound_seconds'] == pytest.approx(0.070, rel=0.02)
    assert neuro_report(effective_diameter=2)['bound_seconds'] == pytest.approx(0.012, rel=0.02)


def test_timescale_range_spans_both_periods():
    rows = timescale_range()
    assert len(rows) == 4
    seconds = sorted(row['bound_seconds'] for row in rows)
    assert seconds[0] == pytest.approx(0.012, rel=0.02)
    assert seconds[-1] == pytest.approx(0.070, rel=0.02)


def test_prufer_decoding():
    assert prufer_to_edges((3, 3), 4) == [(0, 3), (1, 3), (2, 3)]
    edges = prufer_to_edges((0, 1, 2), 5)
    assert len(edges) == 4
    assert tree_diameter(edges, 5) == 4
    assert not is_star(edges, 5)
    assert is_star(prufer_to_edges((2, 2, 2), 5), 5)


@pytest.mark.parametrize('n', range(3, 9))
def test_hub_and_spoke_minimises_diameter(n):
    report = verify_hub_and_spoke(n, workers=2)
    assert report.tree_count == n ** (n - 2)
    assert sum(report.diameter_counts.values()) == report.tree_count
    assert report.min_diameter == 2
    assert len(report.minimizers) == n
    assert report.all_minimizers_are_stars
    assert report.confirmed


def test_hub_and_spoke_size_limits():
    with pytest.raises(ValueError):
        verify_hub_and_spoke(2)
    with pytest.raises(ValueError):
        verify_hub_and_spoke(10)
