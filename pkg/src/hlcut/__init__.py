"""Exact laboratory for edge- and vertex-fault tolerance of hypercube-like
interconnection networks: construct family members with verifiable traces,
compute the degree-preserving edge-cut metric exactly, machine-check the
bound chain behind the closed form, and decide the vertex-variant's
existence by complete scan."""

from .build import (FIG1_EDGES, FIG1_RELABEL, FIG1_TRACE, HlGraph, Leaf, Node,
                    block_vertices, edge_level, fig1_graph, from_trace,
                    hypercube, identity_matching, oplus, random_hl,
                    read_trace, realize, trace_from_text, trace_to_text,
                    validate_trace, write_trace)
from .cuts import (BRANCH_AND_BOUND, EXHAUSTIVE, CutReport, Nonexistent,
                   canonical_cut, is_h_edge_cut, lambda_sh_exact)
from .errors import IncompleteSearchError, TraceError, UsageError
from .graph import (Graph, MAX_ORDER, SOLVER_GATE, bits, canonical_edge,
                    graph_from_text, graph_to_text, mask_of, read_graph,
                    write_graph)
from .kappa import KappaReport, is_h_vertex_cut, kappa_sh_exact, subsets_of_size
from .lemmas import (LEMMA_32, LEMMA_35, LEMMA_37, THEOREM, LemmaVerdict,
                     check_bound_lemmas, check_lemma_32, check_lemma_35,
                     check_lemma_37, check_theorem,
                     enumerate_min_degree_subsets)
from .reports import (dumps_report, parse_report, parse_report_lines,
                      report_payload, write_reports)

__version__ = "0.1.0"
