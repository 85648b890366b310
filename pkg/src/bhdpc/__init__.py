"""Paired 3-disjoint path covers of balanced hypercubes.

A balanced hypercube BH_n has vertex set {0,1,2,3}^n.  Given three
black sources and three white sinks, this package builds three vertex
disjoint paths joining source i to sink i that together cover every
vertex, verifies arbitrary covers against the graph definition, and
provides exhaustive oracles for the small dimensions.
"""

from .dpc3 import PathCover, TerminalSpec, build_3dpc, compute_profile, construct_cover
from .errors import BHDPCError
from .pathengine import FivePathCertificate, find_8cycle, five_path_pair, ham_path, solve_kdpc, two_dpc
from .tables import load_tables, validate_all
from .topology import all_nodes, color, neighbors, partition_along, symmetric_node
from .verify_oracle import Report, oracle_exists_3dpc, oracle_find_t3, verify_kdpc

__version__ = "0.1.0"

__all__ = [
    "BHDPCError",
    "FivePathCertificate",
    "PathCover",
    "Report",
    "TerminalSpec",
    "all_nodes",
    "build_3dpc",
    "color",
    "compute_profile",
    "construct_cover",
    "find_8cycle",
    "five_path_pair",
    "ham_path",
    "load_tables",
    "neighbors",
    "oracle_exists_3dpc",
    "oracle_find_t3",
    "partition_along",
    "solve_kdpc",
    "symmetric_node",
    "two_dpc",
    "validate_all",
    "verify_kdpc",
]
