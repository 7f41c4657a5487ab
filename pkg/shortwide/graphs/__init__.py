from ._weighted_graph import (WeightedGraph, ComponentPartition, connected_components,
                              giant_component, distinct_weight_count, is_connected)
from ._io import parse_edge_list, read_edge_list, serialize_edge_list, write_edge_list, MODES
