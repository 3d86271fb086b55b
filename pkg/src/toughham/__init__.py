"""Exact toughness, hamiltonicity and proof replay for small graphs."""

from .errors import *  # noqa: F401,F403
from .graph import (
    Graph,
    VertexSet,
    add_edges,
    add_vertex,
    complete,
    complete_bipartite,
    components,
    cycle,
    disjoint_union,
    empty,
    forbidden_pattern,
    induced_subgraph,
    is_connected,
    parse_edge_list,
    path,
    petersen,
    random_gnp,
    remove_vertices,
    write_edge_list,
)
from .graph6 import parse_graph6, read_graph6_stream, write_graph6, write_graph6_stream
from .hamilton import OrientedCycle, hamiltonian_cycle, is_hamiltonian, longest_cycle, validate_cycle
from .kernels import BACKEND
from .replay import replay, validate_certificate
from .structure import (
    find_induced,
    find_p2kp1,
    independence_number,
    is_k_connected,
    is_p2kp1_free,
    is_t_tough,
    min_degree,
    minimum_vertex_cut,
    toughness,
    vertex_connectivity,
)

__version__ = "0.1.0"
