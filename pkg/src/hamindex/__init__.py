"""hamindex: exact distance indices, Hamiltonicity certificates, extremal
family constructors and an exhaustive statement-verification harness for
simple graphs."""

from .errors import (BudgetExceededError, CapacityError,
                     DisconnectedGraphError, FormatError, HamindexError,
                     InfeasibleScopeError, NotBalancedBipartiteError,
                     OrderMismatchError, OrderTooLargeError,
                     ParameterOutOfRangeError, ParameterOutOfStatedRangeError,
                     UnsupportedFamilyError)
from .families import FamilySpec, build, edge_count, g1_members, g2_members, parse_spec
from .graphs import (CAPACITY, Bipartition, Graph, GraphStats, basic_stats,
                     complement, complete, complete_bipartite, delete_vertex,
                     disjoint_union, edge_list_decode, edge_list_encode,
                     empty, graph6_decode, graph6_encode, is_connected, join)
from .hamilton import (DEFAULT_NODE_BUDGET, HamCertificate, HamResult,
                       find_cut_witness, is_hamiltonian, is_traceable)
from .isoenum import (CanonicalForm, EnumFilter, canonical_form,
                      count_graphs_by_edges, enumerate_balanced_bipartite,
                      enumerate_dense_via_complement, enumerate_graphs,
                      is_isomorphic, is_spanning_subgraph_of)
from .metrics import (DistanceMatrix, all_pairs_distances, check_fact_3_1,
                      check_fact_5_1, closed_form_wh, frac_str, harary_index,
                      wiener_index)
from .verify import (ExtremalResult, TheoremId, VerificationReport,
                     audit_exceptional_sets, edge_threshold, extremal_search,
                     verify_edge_lemma, verify_fact, verify_index_theorem)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
