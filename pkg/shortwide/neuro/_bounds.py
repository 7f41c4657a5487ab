import logging
from dataclasses import dataclass, replace

from ._channel import ChannelModel, gap_junction_capacity
from ..utils.checkers import _check_positive

logger = logging.getLogger(__name__)

DEFAULT_MESSAGE_BITS = 10.0


@dataclass(frozen=True)
class BoundInput:
    """
    Inputs of the consensus-time bound.

    Attributes
    ----------
    effective_diameter : float
        Hops (or capacity-weighted hops) to cross the network.
    message_bits : float
        Message volume log M in bits.
    capacity : float
        Link capacity in bits per second.
    """
    effective_diameter: float
    message_bits: float
    capacity: float


def consensus_time_bound(bound):
    """
    Lower bound ``t = D_e log M / C`` on the time to move a message of
    log M bits across the network.

    Examples
    --------
    >>> round(consensus_time_bound(BoundInput(7, 10, 1700)), 4)
    0.0412
    """
    _check_positive(bound.effective_diameter, 'effective_diameter')
    _check_positive(bound.message_bits, 'message_bits')
    _check_positive(bound.capacity, 'capacity')
    return bound.effective_diameter * bound.message_bits / bound.capacity


def refractory_to_bandwidth(refractory_ms):
    """Symbol rate (Hz) allowed by an absolute refractory period in ms."""
    _check_positive(refractory_ms, 'refractory_ms')
    return 1000.0 / refractory_ms


def neuro_report(model=None, effective_diameter=7.0, message_bits=DEFAULT_MESSAGE_BITS,
                 junction_count=1.0, diameter_notion='geodesic'):
    """
    Capacity of the channel model and the resulting consensus-time bound.

    Returns
    -------
    dict
        ``noise_rms, snr, bits_per_use, bits_per_second, seconds_per_bit,
        link_bits_per_second, bound_seconds`` plus an ``inputs`` echo.
    """
    model = model or ChannelModel()
    capacity = gap_junction_capacity(model)
    link = junction_count * capacity.bits_per_second
    bound = consensus_time_bound(BoundInput(effective_diameter, message_bits, link))
    report = capacity.to_dict()
    report.update({
        'link_bits_per_second': link,
        'bound_seconds': bound,
        'inputs': {
            'resistance': model.resistance,
            'temperature': model.temperature,
            'bandwidth': model.bandwidth,
            'v0': model.v0,
            'v1': model.v1,
            'boltzmann': model.boltzmann,
            'effective_diameter': effective_diameter,
            'diameter_notion': diameter_notion,
            'message_bits': message_bits,
            'junction_count': junction_count,
        },
    })
    return report


def timescale_range(diameters=(2.0, 7.0), refractory_ms=(1 / 1.7, 1.0),
                    message_bits=DEFAULT_MESSAGE_BITS, model=None):
    """
    Consensus-time bounds over a grid of diameters and refractory periods.

    The bandwidth of the model is replaced by ``1000 / refractory_ms`` for
    each period, so both the symbol rate and the noise follow it.

    Returns
    -------
    list of dict
        One row per (diameter, refractory period) with keys ``diameter,
        refractory_ms, bandwidth, bits_per_second, bound_seconds``.
    """
    model = model or ChannelModel()
    rows = []
    for period in refractory_ms:
        bandwidth = refractory_to_bandwidth(period)
        capacity = gap_junction_capacity(replace(model, bandwidth=bandwidth))
        for diameter in diameters:
            seconds = consensus_time_bound(
                BoundInput(diameter, message_bits, capacity.bits_per_second))
            rows.append({'diameter': diameter, 'refractory_ms': period, 'bandwidth': bandwidth,
                         'bits_per_second': capacity.bits_per_second, 'bound_seconds': seconds})
    return rows
