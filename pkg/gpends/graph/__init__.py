"""
Simplicial graph representation and combinatorial queries
"""

from .core import (
    SimplicialGraph,
    VertexSet,
    clique_separator_exists,
    connected_components,
    find_induced_c4,
    find_long_induced_cycle,
    has_induced_c4,
    induced_subgraph,
    is_chordal,
    is_complete,
    is_separating,
    link,
    minimal_separators,
    relabel,
    universal_vertices,
    vertex_set,
)

__all__ = [
    'SimplicialGraph',
    'VertexSet',
    'clique_separator_exists',
    'connected_components',
    'find_induced_c4',
    'find_long_induced_cycle',
    'has_induced_c4',
    'induced_subgraph',
    'is_chordal',
    'is_complete',
    'is_separating',
    'link',
    'minimal_separators',
    'relabel',
    'universal_vertices',
    'vertex_set',
]
