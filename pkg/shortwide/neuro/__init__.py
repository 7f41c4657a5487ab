from ._channel import (ChannelModel, CapacityResult, BOLTZMANN, DEFAULT_BANDWIDTH,
                       DEFAULT_RESISTANCE, DEFAULT_TEMPERATURE, DEFAULT_V0, DEFAULT_V1,
                       MEAN_JUNCTIONS_PER_LINK, GAUSSIAN_ENTROPY_BITS, thermal_noise_rms,
                       output_entropy_bits, binary_awgn_capacity, gap_junction_capacity,
                       parallel_capacity)
from ._bounds import (BoundInput, DEFAULT_MESSAGE_BITS, consensus_time_bound,
                      refractory_to_bandwidth, neuro_report, timescale_range)
from ._trees import (HubSpokeReport, verify_hub_and_spoke, prufer_to_edges, tree_diameter,
                     is_star)
