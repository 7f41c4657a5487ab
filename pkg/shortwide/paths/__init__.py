from ._labels import (Domination, Label, LabelSet, dominates, covers, consolidate, maximize_labels,
                      node_insertion)
from ._bottleneck import (OneToAllResult, AllPairsResult, STRATEGIES, one_to_all_bottleneck,
                          all_pairs_bottleneck, reconstruct_path, label_chain)
from ._baseline import (DistanceRecord, NOTIONS, geodesic_all, weighted_all, minimax_width_all,
                        geodesic_width_all, bottleneck_bounds, distance_records, all_pairs_distances)
from ._oracle import (OracleResult, MAX_ORACLE_NODES, enumerate_simple_paths, count_simple_paths,
                      oracle_distances, oracle_matrix)
from ._complexity import complexity_probe, synthetic_graph, random_connected_graph
