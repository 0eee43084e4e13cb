"""Exact polynomial invariants of ribbon graphs with flags."""

from .chords import (CanonicalClass, ChordDiagram, InvariantViolation,
                     RelatedDiagrams, all_partitions, build_canonical,
                     canonical_class, default_partition, diagram_polynomial,
                     diagram_sum, diagram_to_rosette, doubling_components,
                     parse_diagram, related_diagrams, rosette_to_diagram,
                     serialize_diagram, twist_rewrite)
from .flagmoves import (EquivalenceResult, FlagMove, apply_flag_move,
                        class_polynomial, flag_equivalent, is_legal_move,
                        legal_flag_moves, move_json)
from .graph import (BRIDGE, NONTRIVIAL, REGULAR, SELF_LOOP, TRIVIAL,
                    UNDETERMINED, FormatError, GraphError, RibbonGraph,
                    classify_edge, component_map, component_subgraphs,
                    contract_edge, cut_edge, delete_edge, disjoint_union,
                    one_point_join, parse_graph, serialize_graph,
                    strip_flags, vertex_flip)
from .invariants import (classical_br_polynomial, edge_identity_holds,
                         edge_identity_report, recurrence_polynomial,
                         restricted_polynomial, state_sum_polynomial,
                         tutte_polynomial)
from .polynomial import (BASIS, ONE, S, T, W, X_MINUS_1, Y_MINUS_1, Z, ZERO,
                         BRPoly, coefficient_slice, format_poly, parse_poly,
                         serialize_poly, signatures, specialize,
                         substitute_s_inv_z)
from .randgraph import random_graph, random_two_vertex
from .topology import (BoundaryGraph, BoundaryReport, BoundaryWalk,
                       InvariantTuple, basic_invariants, boundary_graph,
                       orientability, realize_by_cutting, realize_csubgraph,
                       report_json, trace_boundary)
from .universality import (CoefficientTable, extract_coefficients,
                           orientability_bit, reconstruct_invariant,
                           sigma_tau_normalize)

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
