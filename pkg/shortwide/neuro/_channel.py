"""
Capacity of a gap junction modelled as a binary-input AWGN channel.

The junction is a resistor with Johnson-Nyquist noise; neurons signal with
two plateau potentials, one symbol per refractory period.
"""
import logging
import math
from dataclasses import dataclass, asdict

import numpy as np
from scipy import integrate

from ..exceptions import IntegrationError
from ..utils.checkers import _check_positive

logger = logging.getLogger(__name__)

BOLTZMANN = 1.38e-23
DEFAULT_RESISTANCE = 5e9
DEFAULT_TEMPERATURE = 298.0
DEFAULT_BANDWIDTH = 1700.0
DEFAULT_V0 = -70e-3
DEFAULT_V1 = -35e-3
MEAN_JUNCTIONS_PER_LINK = 1.73

GAUSSIAN_ENTROPY_BITS = 0.5 * math.log2(2 * math.pi * math.e)
_LN2 = math.log(2.0)


@dataclass(frozen=True)
class ChannelModel:
    """
    Physical parameters of one gap junction.

    Attributes
    ----------
    resistance : float
        Ohms (200 pS conductance gives 5e9).
    temperature : float
        Kelvin.
    bandwidth : float
        Hertz; also the number of channel uses per second.
    v0, v1 : float
        The two signalling levels in volts, ``v0 <= v1``.
    boltzmann : float
        Boltzmann constant, J/K.
    """
    resistance: float = DEFAULT_RESISTANCE
    temperature: float = DEFAULT_TEMPERATURE
    bandwidth: float = DEFAULT_BANDWIDTH
    v0: float = DEFAULT_V0
    v1: float = DEFAULT_V1
    boltzmann: float = BOLTZMANN

    def __post_init__(self):
        _check_positive(self.resistance, 'resistance')
        _check_positive(self.temperature, 'temperature')
        _check_positive(self.boltzmann, 'boltzmann')
        if not math.isfinite(self.bandwidth) or self.bandwidth < 0:
            raise ValueError(f'bandwidth must be nonnegative, got {self.bandwidth!r}')
        if self.v0 > self.v1:
            raise ValueError(f'v0 must not exceed v1 (got {self.v0} > {self.v1})')

    @property
    def amplitude(self):
        """Half the level separation, the signal amplitude around the midpoint."""
        return (self.v1 - self.v0) / 2


@dataclass(frozen=True)
class CapacityResult:
    noise_rms: float
    snr: float
    bits_per_use: float
    bits_per_second: float
    seconds_per_bit: float
    integration_error: float = 0.0

    def to_dict(self):
        return asdict(self)


def thermal_noise_rms(model):
    """
    Johnson-Nyquist RMS noise voltage ``sqrt(4 k_B T R Δf)``.

    Examples
    --------
    >>> round(thermal_noise_rms(ChannelModel()), 7)
    0.0003739
    """
    return math.sqrt(4 * model.boltzmann * model.temperature * model.resistance * model.bandwidth)


def _mixture_log_density(y, a):
    # equal mixture of N(a, 1) and N(-a, 1)
    return (np.logaddexp(-(y - a) ** 2 / 2, -(y + a) ** 2 / 2)
            - math.log(2.0) - 0.5 * math.log(2 * math.pi))


def output_entropy_bits(snr, tol=1e-6):
    """
    Differential entropy, in bits, of the channel output
    ``Y = ±sqrt(snr) + N(0, 1)`` with equiprobable inputs.

    The density is symmetric, so ``[0, sqrt(snr) + 10]`` is integrated and
    doubled; the tails beyond contribute far less than tol.

    Returns
    -------
    entropy, abs_error : float
    """
    a = math.sqrt(snr)

    def integrand(y):
        log_p = _mixture_log_density(y, a)
        return -math.exp(log_p) * log_p

    value, error = integrate.quad(integrand, 0.0, a + 10.0, points=[a] if a > 0 else None,
                                  epsabs=tol * _LN2 / 10, epsrel=1e-12, limit=500)
    entropy, error = 2 * value / _LN2, 2 * error / _LN2
    if error > tol:
        raise IntegrationError(f'output entropy at snr={snr:g} missed tolerance {tol:g}', error)
    return entropy, error


def binary_awgn_capacity(snr, tol=1e-6):
    """
    Capacity in bits per use of the binary-input AWGN channel,
    ``h(Y) - 1/2 log2(2 pi e)``, clipped to [0, 1].

    Examples
    --------
    >>> binary_awgn_capacity(0.0)
    0.0
    """
    if snr == math.inf:
        return 1.0
    if not snr >= 0:
        raise ValueError(f'snr must be nonnegative, got {snr!r}')
    if snr == 0:
        return 0.0
    entropy, _ = output_entropy_bits(snr, tol)
    return min(1.0, max(0.0, entropy - GAUSSIAN_ENTROPY_BITS))


def gap_junction_capacity(model=None, tol=1e-6):
    """
    Shannon capacity of one gap junction.

    The SNR is ``((v1 - v0) / 2)**2 / v_n**2`` with both voltages in volts;
    the inputs become ``±sqrt(SNR)`` under unit-variance noise.

    Parameters
    ----------
    model : ChannelModel, optional
        Defaults to a 1700 Hz, 298 K, 5 GΩ junction signalling at -70 and -35 mV.
    tol : float
        Absolute tolerance on the capacity, in bits per use.

    Returns
    -------
    CapacityResult
        Noise, SNR and capacity per use and per second.

    Raises
    ------
    IntegrationError
        If the entropy quadrature misses tol.
    """
    model = model or ChannelModel()
    noise = thermal_noise_rms(model)
    if noise == 0:
        snr = math.inf if model.amplitude > 0 else 0.0
    else:
        snr = model.amplitude ** 2 / noise ** 2
    error = 0.0
    if math.isinf(snr):
        bits = 1.0
    elif snr == 0:
        bits = 0.0
    else:
        entropy, error = output_entropy_bits(snr, tol)
        bits = min(1.0, max(0.0, entropy - GAUSSIAN_ENTROPY_BITS))
    bits_per_second = bits * model.bandwidth
    seconds_per_bit = 1.0 / bits_per_second if bits_per_second > 0 else math.inf
    logger.debug('noise %.4g V, snr %.4g, %.6f bits/use', noise, snr, bits)
    return CapacityResult(noise, snr, bits, bits_per_second, seconds_per_bit, error)


def parallel_capacity(result, junction_count):
    """
    Capacity of a link made of ``junction_count`` independent junctions.

    junction_count may be a mean (e.g. 1.73 junctions per connected pair).

    Examples
    --------
    >>> parallel_capacity(1700.0, 2)
    3400.0
    """
    if not junction_count > 0:
        raise ValueError(f'junction_count must be positive, got {junction_count!r}')
    bits_per_second = result.bits_per_second if isinstance(result, CapacityResult) else float(result)
    return junction_count * bits_per_second
