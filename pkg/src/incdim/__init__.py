"""Exact solvers for the incidence dimension of finite simple graphs,
its 2-packing machinery, metric-dimension comparisons, and an
executable 3-SAT reduction."""

from .graph import (INFINITE, Graph, build_graph, generate_family,
                    induced_subgraph, is_connected, is_edge_triangular,
                    neighbors, parse_edge_list, format_edge_list,
                    read_edge_list, remove_edge, write_edge_list)
from .incidence import (CLASS_EXACT, CLASS_MINUS_ONE, DimResult,
                        check_symdiff_condition, classify,
                        common_neighbor_characterization, dim_I_brute,
                        dim_I_formula, dim_I_structural,
                        is_incidence_generator, resolves)
from .metric import (MetricDimResult, dim_A, dim_e, edge_distance,
                     is_adjacency_generator)
from .packing import (CriticalPackingResult, PackingResult,
                      WitnessCapExceeded, e_critical_packing,
                      has_unique_max_packing, is_packing, max_packing)
from .reduction import (CnfFormula, ReductionOutput, assignment_to_generator,
                        basis_to_assignment, build_reduction, is_satisfiable,
                        parse_cnf, satisfying_assignment, verify_claims)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
