"""Outer-independent 2-rainbow domination: exact solving, certificates, the
claw-free extremal family, graph products and verification sweeps."""
from .clawfree import (FamilyDescriptor, SpinePartition, check_k1r_bound, check_lower_bound,
                       equality_assignment, family_descriptors, find_spine_partition,
                       make_family, recognize, recognize_equality_general)
from .graph import (Graph, GraphFormatError, find_claw, from_graph6, generate,
                    independence_number, is_claw_free, is_connected, vertex_cover_number)
from .harness import Budget, TheoremReport, enumerate_labeled, run_theorem
from .products import (RootedSpec, cartesian, corona, corona_certificate, corona_formula,
                       direct, rooted, rooted_certificate, rooted_predict)
from .rainbow import (SOLVER_METHODS, Certificate, OrderTooLarge, RainbowAssignment, brute_force,
                      enumerate_optimal, frontier_order, gamma_oir2, solve_exact, verify)

__version__ = "0.1.0"
