"""
Small graph builders and brute-force references shared by the test modules
"""

import itertools
from typing import List

import networkx as nx

from gpends.graph import SimplicialGraph
from gpends.groups import GroupLabel, LabelledGraph

PETERSEN_EDGES = (
    [(i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
)


def path_graph(n: int) -> SimplicialGraph:
    return SimplicialGraph(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SimplicialGraph:
    return SimplicialGraph(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> SimplicialGraph:
    return SimplicialGraph(range(n), itertools.combinations(range(n), 2))


def edgeless_graph(n: int) -> SimplicialGraph:
    return SimplicialGraph(range(n))


def petersen_graph() -> SimplicialGraph:
    return SimplicialGraph(range(10), PETERSEN_EDGES)


def atlas_graphs() -> List[SimplicialGraph]:
    """Every graph on at most 7 vertices, one per isomorphism class"""
    return [SimplicialGraph(g.nodes, g.edges) for g in nx.graph_atlas_g()]


def cyclic(*orders: int) -> List[GroupLabel]:
    return [GroupLabel.concrete_cyclic(order) for order in orders]


def brute_separates(g: SimplicialGraph, s) -> bool:
    rest = [v for v in g.vertices if v not in s]
    if not rest:
        return False
    return nx.number_connected_components(g.nx.subgraph(rest)) >= 2


def brute_is_clique(g: SimplicialGraph, s) -> bool:
    return all(g.adjacent(u, w) for u, w in itertools.combinations(s, 2))


def brute_induced_cycles(g: SimplicialGraph) -> List[frozenset]:
    """Vertex sets of size >= 4 whose full subgraph is a cycle"""
    cycles = []
    for size in range(4, len(g) + 1):
        for s in itertools.combinations(g.vertices, size):
            sub = g.nx.subgraph(s)
            if all(d == 2 for _, d in sub.degree()) and nx.is_connected(sub):
                cycles.append(frozenset(s))
    return cycles


def is_induced_cycle(g: SimplicialGraph, cycle) -> bool:
    """cycle lists distinct vertices in cyclic order and induces exactly that cycle"""
    n = len(cycle)
    if n < 3 or len(set(cycle)) != n:
        return False
    if not all(g.adjacent(cycle[i], cycle[(i + 1) % n]) for i in range(n)):
        return False
    return g.nx.subgraph(cycle).number_of_edges() == n


def brute_minimal_separators(g: SimplicialGraph) -> set:
    """Non-empty vertex sets S such that g minus S has two components C with N(C) = S"""
    found = set()
    for size in range(1, len(g) - 1):
        for s in itertools.combinations(g.vertices, size):
            s = frozenset(s)
            rest = g.nx.subgraph(v for v in g.vertices if v not in s)
            full = [
                c for c in nx.connected_components(rest)
                if {w for v in c for w in g.nx.adj[v]} - c == s
            ]
            if len(full) >= 2:
                found.add(s)
    return found


def z2_core_join_pair(core_size: int = 3):
    """Complete core of Z2's joined to two non-adjacent Z2's: (Z2^core_size) x D-infinity"""
    core = list(range(core_size))
    pair = [core_size, core_size + 1]
    edges = list(itertools.combinations(core, 2)) + [(c, p) for c in core for p in pair]
    return LabelledGraph.build(cyclic(*[2] * (core_size + 2)), edges)


def random_cyclic_graph(rng, n: int, edge_prob: float, orders=(2, 3), name: str = ''):
    """Random graph whose labels are all concrete cyclic groups drawn from orders"""
    labels = cyclic(*[rng.choice(orders) for _ in range(n)])
    edges = [
        (u, w) for u, w in itertools.combinations(range(n), 2)
        if rng.random() < edge_prob
    ]
    return LabelledGraph.build(labels, edges, name=name)
