"""
Finite simplicial graphs and the combinatorial queries the ends classification reduces to
"""

import itertools
import logging
from collections import deque
from typing import Deque, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple

import networkx as nx

from ..config import Config
from ..exceptions import InputError

logger = logging.getLogger(__name__)

VertexSet = FrozenSet[int]

# Largest allowed set whose cliques are enumerated when the separator budget runs out
SUBSET_SEARCH_LIMIT = 20


class SimplicialGraph:
    """
    Immutable finite simplicial graph on non-negative integer vertices

    No self-loops, no multi-edges, every edge endpoint is a declared vertex.
    The networkx view in ``nx`` is frozen.
    """

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Tuple[int, int]] = ()):
        vertices = list(vertices)
        if len(set(vertices)) != len(vertices):
            raise InputError(f"Duplicate vertex ids in {vertices}")
        for v in vertices:
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise InputError(f"Vertex ids must be non-negative integers, got {v!r}")

        declared = set(vertices)
        edge_set = set()
        for u, w in edges:
            if u == w:
                raise InputError(f"Self-loop on vertex {u}")
            if u not in declared or w not in declared:
                raise InputError(f"Edge ({u}, {w}) references an undeclared vertex")
            edge_set.add(frozenset((u, w)))

        self.vertices: Tuple[int, ...] = tuple(sorted(vertices))
        self.edges: FrozenSet[FrozenSet[int]] = frozenset(edge_set)

        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(tuple(e) for e in self.edges)
        self.nx = nx.freeze(graph)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self.nx

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        pairs = sorted(tuple(sorted(e)) for e in self.edges)
        return f"SimplicialGraph(vertices={list(self.vertices)}, edges={pairs})"

    def adjacent(self, u: int, w: int) -> bool:
        return self.nx.has_edge(u, w)

    def neighbors(self, v: int) -> VertexSet:
        return frozenset(self.nx.adj[v])

    def sorted_edges(self) -> List[Tuple[int, int]]:
        """Edges as sorted pairs in ascending order"""
        return sorted(tuple(sorted(e)) for e in self.edges)


def _check_subset(g: SimplicialGraph, s: Iterable[int]) -> VertexSet:
    s = frozenset(s)
    unknown = sorted(v for v in s if v not in g)
    if unknown:
        raise InputError(f"Unknown vertices {unknown}; graph has {list(g.vertices)}")
    return s


def vertex_set(g: SimplicialGraph) -> VertexSet:
    return frozenset(g.vertices)


def is_complete(g: SimplicialGraph) -> bool:
    """True iff every pair of distinct vertices is an edge (vacuously for n <= 1)"""
    n = len(g)
    return len(g.edges) == n * (n - 1) // 2


def induced_subgraph(g: SimplicialGraph, s: Iterable[int]) -> SimplicialGraph:
    """
    Full subgraph of g spanned by s

    Raises:
        InputError: If s contains a vertex not in g
    """
    s = _check_subset(g, s)
    return SimplicialGraph(s, (tuple(e) for e in g.edges if e <= s))


def connected_components(g: SimplicialGraph) -> List[VertexSet]:
    """Connected components ordered by their smallest vertex id"""
    return sorted((frozenset(c) for c in nx.connected_components(g.nx)), key=min)


def is_separating(g: SimplicialGraph, s: Iterable[int]) -> bool:
    """
    True iff removing s leaves at least two connected components

    The empty set separates exactly the disconnected graphs.
    """
    s = _check_subset(g, s)
    rest = g.nx.subgraph(v for v in g.vertices if v not in s)
    return nx.number_connected_components(rest) >= 2 if len(rest) else False


def universal_vertices(g: SimplicialGraph) -> VertexSet:
    """Vertices adjacent to every other vertex (the complete side of a join split)"""
    n = len(g)
    return frozenset(v for v in g.vertices if g.nx.degree[v] == n - 1)


def link(g: SimplicialGraph, v: int) -> VertexSet:
    """
    Neighbors of v

    Raises:
        InputError: If v is not a vertex of g
    """
    if v not in g:
        raise InputError(f"Unknown vertex {v}")
    return g.neighbors(v)


def find_induced_c4(g: SimplicialGraph) -> Optional[Tuple[int, int, int, int]]:
    """
    Some chordless 4-cycle (u, a, w, b) in cyclic order, or None

    A square is a non-adjacent pair u, w with two non-adjacent common neighbors.
    """
    for u, w in itertools.combinations(g.vertices, 2):
        if g.adjacent(u, w):
            continue
        common = sorted(g.neighbors(u) & g.neighbors(w))
        for a, b in itertools.combinations(common, 2):
            if not g.adjacent(a, b):
                return (u, a, w, b)
    return None


def has_induced_c4(g: SimplicialGraph) -> bool:
    return find_induced_c4(g) is not None


def is_chordal(g: SimplicialGraph) -> bool:
    """True iff g has no induced cycle of length >= 4 (perfect elimination ordering test)"""
    return nx.is_chordal(g.nx)


def find_long_induced_cycle(g: SimplicialGraph) -> Optional[Tuple[int, ...]]:
    """Some induced cycle of length >= 4 in cyclic order, or None when g is chordal"""
    if is_chordal(g):
        return None
    for cycle in nx.chordless_cycles(g.nx):
        if len(cycle) >= 4:
            return tuple(cycle)
    # is_chordal and chordless_cycles disagree only if networkx is broken
    raise AssertionError("non-chordal graph without a chordless cycle of length >= 4")


def _component_neighbourhoods(g: SimplicialGraph, removed: VertexSet) -> Iterator[VertexSet]:
    """N(C) for every component C of g minus ``removed``; always a subset of ``removed``"""
    rest = g.nx.subgraph(v for v in g.vertices if v not in removed)
    for component in nx.connected_components(rest):
        yield frozenset(w for v in component for w in g.nx.adj[v] if w not in component)


def minimal_separators(g: SimplicialGraph) -> Iterator[VertexSet]:
    """
    Every minimal separator of g, each exactly once

    Seeds are N(C) for the components C of g minus N[v]; each separator S
    found is closed under S -> N(C) for the components C of g minus
    (S ∪ N(x)), x in S. Yields in discovery order, which is deterministic.
    """
    seen = set()
    queue: Deque[VertexSet] = deque()

    def discover(candidates: Iterable[VertexSet]):
        for s in candidates:
            if s and s not in seen:
                seen.add(s)
                queue.append(s)

    for v in g.vertices:
        discover(_component_neighbourhoods(g, g.neighbors(v) | {v}))

    while queue:
        separator = queue.popleft()
        yield separator
        for x in sorted(separator):
            discover(_component_neighbourhoods(g, separator | g.neighbors(x)))


def _is_clique(g: SimplicialGraph, s: Iterable[int]) -> bool:
    return all(g.adjacent(u, w) for u, w in itertools.combinations(sorted(s), 2))


def _clique_subset_search(g: SimplicialGraph, allowed: VertexSet) -> List[VertexSet]:
    # enumerate_all_cliques yields cliques by non-decreasing size, so a
    # qualifying clique is minimal iff it contains no earlier hit
    found: List[VertexSet] = []
    for clique in nx.enumerate_all_cliques(g.nx.subgraph(allowed)):
        candidate = frozenset(clique)
        if any(hit <= candidate for hit in found):
            continue
        if is_separating(g, candidate):
            found.append(candidate)
    return found


def _minimal_separator_search(
    g: SimplicialGraph,
    allowed: VertexSet,
    budget: Optional[int],
) -> Optional[List[VertexSet]]:
    """Complete minimal separators inside ``allowed``, or None once ``budget`` separators were seen"""
    found: List[VertexSet] = []
    for count, separator in enumerate(minimal_separators(g), start=1):
        if budget is not None and count > budget:
            return None
        if separator <= allowed and _is_clique(g, separator):
            found.append(separator)
    return found


def clique_separator_exists(g: SimplicialGraph, allowed: Iterable[int]) -> Optional[VertexSet]:
    """
    Find a complete separating vertex set inside ``allowed``

    The result is minimal under inclusion and, among the minimal ones, the
    lexicographically least sorted id tuple. The empty set qualifies when g
    is disconnected.

    Every complete separating set inside ``allowed`` contains a minimal
    separator of g that is again complete and inside ``allowed``, so the
    search runs over minimal separators. When more than
    Config.SEPARATOR_BUDGET of them turn up and at most
    SUBSET_SEARCH_LIMIT vertices are allowed, the cliques of ``allowed``
    are enumerated instead.

    Args:
        g: Host graph
        allowed: Vertices the separator may use

    Returns:
        The separator, or None when no complete subset of ``allowed`` separates g
    """
    allowed = _check_subset(g, allowed)

    if is_separating(g, frozenset()):
        return frozenset()

    found = _minimal_separator_search(g, allowed, Config.SEPARATOR_BUDGET)
    if found is None:
        if len(allowed) <= SUBSET_SEARCH_LIMIT:
            logger.debug(
                f"Over {Config.SEPARATOR_BUDGET} minimal separators; "
                f"enumerating cliques of {len(allowed)} allowed vertices"
            )
            found = _clique_subset_search(g, allowed)
        else:
            logger.warning(
                f"Over {Config.SEPARATOR_BUDGET} minimal separators on {len(g)} vertices; continuing without a budget"
            )
            found = _minimal_separator_search(g, allowed, None)

    minimal = [s for s in found if not any(other < s for other in found)]
    if not minimal:
        return None

    separator = min(minimal, key=lambda s: tuple(sorted(s)))
    logger.debug(f"Clique separator {sorted(separator)} chosen from {len(minimal)} minimal candidates")
    return separator


def relabel(g: SimplicialGraph, perm: Mapping[int, int]) -> SimplicialGraph:
    """
    Apply an id permutation to g

    Raises:
        InputError: If perm is not a bijection on the vertex ids
    """
    if sorted(perm) != list(g.vertices) or sorted(perm.values()) != list(g.vertices):
        raise InputError(f"Relabelling {dict(perm)} is not a permutation of {list(g.vertices)}")
    return SimplicialGraph(
        (perm[v] for v in g.vertices),
        ((perm[u], perm[w]) for u, w in g.sorted_edges()),
    )
