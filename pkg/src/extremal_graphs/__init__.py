"""Exact extremal invariants of weighted and unweighted graphs.

Spanning-tree counts (three agreeing routes), weighted girth/diameter
with full systole and meridian enumeration, brute-force expansion and
Cheeger constants, exact Farkas certificates of local extremality over
edge-weight polytopes, concave tree-number ascent, Laplacian eigenvalue
criticality, rotation-system embeddings with duals, graph Jacobians via
Smith normal form, and the greedy edge-insertion search that generates
the small cubic cages.
"""

from .graphs import (Domain, G2, Graph, GraphError, ParseError, WeightPoint,
                     disjoint_union, edge_switch, emit_dot, emit_graph,
                     insert_edge, parse_graph, subdivide_and_match)
from .families import make_named
from .spectral import (SpectrumReport, TreeMethod, TreeReport,
                       effective_resistances, equiarboreal_test, is_ramanujan,
                       laplacian, mckay_sigma, moore_bound, spectrum,
                       tree_number)
from .metric import CutReport, CycleSet, MeridianSet, cut_constants, diameter, girth
from .extremal import (AscentResult, CutKind, EigenCriticalityReport,
                       ExtremalCertificate, Objective, Verdict, certify_cut_max,
                       certify_diameter_min, certify_girth_max, character_check,
                       cube_family, df_const_check, eigen_criticality,
                       tree_weight_ascent)
from .surface import (EmbeddedGraph, Multigraph, RotationSystem, dual,
                      dual_embedded, lattice_entropy_square, parse_rotation,
                      rotation_from_positions, trace_faces,
                      tree_complement_check)
from .lattice import JacobianReport, jacobian, minimal_norm_growth_scan
from .search import (GreedyTrace, canonical_form, edge_switch_scan,
                     greedy_sequence, isomorphic)

__version__ = "0.1.0"
