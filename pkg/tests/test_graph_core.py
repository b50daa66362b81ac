import itertools
import random

import pytest

from gpends.config import Config
from gpends.exceptions import InputError
from gpends.graph import (
    SimplicialGraph,
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
from tests.builders import (
    atlas_graphs,
    brute_induced_cycles,
    brute_is_clique,
    brute_minimal_separators,
    brute_separates,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    is_induced_cycle,
    path_graph,
    petersen_graph,
)


class TestSimplicialGraph:

    def test_vertices_are_sorted_and_edges_deduplicated(self):
        g = SimplicialGraph([2, 0, 1], [(0, 1), (1, 0), (2, 1)])
        assert g.vertices == (0, 1, 2)
        assert g.sorted_edges() == [(0, 1), (1, 2)]
        assert len(g) == 3

    def test_rejects_self_loop(self):
        with pytest.raises(InputError):
            SimplicialGraph([0, 1], [(1, 1)])

    def test_rejects_undeclared_endpoint(self):
        with pytest.raises(InputError):
            SimplicialGraph([0, 1], [(0, 2)])

    def test_rejects_duplicate_and_negative_ids(self):
        with pytest.raises(InputError):
            SimplicialGraph([0, 0])
        with pytest.raises(InputError):
            SimplicialGraph([-1])

    def test_networkx_view_is_frozen(self):
        g = path_graph(3)
        with pytest.raises(Exception):
            g.nx.add_edge(0, 2)

    def test_equality_and_hash(self):
        a = SimplicialGraph([0, 1, 2], [(0, 1)])
        b = SimplicialGraph([2, 1, 0], [(1, 0)])
        assert a == b
        assert hash(a) == hash(b)
        assert a != path_graph(3)


class TestBasicQueries:

    def test_is_complete(self):
        assert is_complete(complete_graph(3))
        assert not is_complete(cycle_graph(4))
        assert is_complete(edgeless_graph(1))
        assert is_complete(edgeless_graph(0))

    def test_induced_subgraph(self):
        k3 = complete_graph(3)
        assert induced_subgraph(k3, {0, 2}).sorted_edges() == [(0, 2)]

        square = cycle_graph(4)
        opposite = induced_subgraph(square, {0, 2})
        assert opposite.vertices == (0, 2)
        assert opposite.sorted_edges() == []

    def test_induced_subgraph_of_petersen_outer_ring_is_c5(self):
        ring = induced_subgraph(petersen_graph(), range(5))
        assert ring == cycle_graph(5)

    def test_induced_subgraph_unknown_vertex(self):
        with pytest.raises(InputError):
            induced_subgraph(path_graph(3), {0, 7})

    def test_connected_components(self):
        assert connected_components(edgeless_graph(4)) == [frozenset({i}) for i in range(4)]
        assert connected_components(cycle_graph(4)) == [frozenset(range(4))]
        assert connected_components(edgeless_graph(0)) == []

    def test_components_ordered_by_smallest_vertex(self):
        g = SimplicialGraph(range(5), [(3, 4), (0, 2)])
        assert connected_components(g) == [frozenset({0, 2}), frozenset({1}), frozenset({3, 4})]

    def test_is_separating(self):
        assert is_separating(path_graph(3), {1})
        assert is_separating(edgeless_graph(2), set())
        assert not is_separating(complete_graph(4), {0})
        assert not is_separating(path_graph(3), set())
        assert not is_separating(path_graph(2), {0, 1})

    def test_universal_vertices(self):
        assert universal_vertices(complete_graph(3)) == frozenset(range(3))
        assert universal_vertices(cycle_graph(4)) == frozenset()
        star = SimplicialGraph(range(4), [(0, 1), (0, 2), (0, 3)])
        assert universal_vertices(star) == frozenset({0})

    def test_link(self):
        assert link(complete_graph(3), 1) == frozenset({0, 2})
        assert link(edgeless_graph(3), 0) == frozenset()
        assert link(cycle_graph(4), 0) == frozenset({1, 3})
        with pytest.raises(InputError):
            link(path_graph(2), 5)

    def test_vertex_set(self):
        assert vertex_set(path_graph(3)) == frozenset({0, 1, 2})


class TestInducedCycles:

    def test_examples(self):
        assert has_induced_c4(cycle_graph(4))
        assert not has_induced_c4(complete_graph(4))
        assert not has_induced_c4(petersen_graph())

        k4_minus_edge = SimplicialGraph(range(4), [e for e in itertools.combinations(range(4), 2) if e != (0, 1)])
        assert is_chordal(k4_minus_edge)
        assert not is_chordal(cycle_graph(5))
        assert is_chordal(path_graph(6))

    def test_c4_witness_is_a_square(self):
        square = find_induced_c4(cycle_graph(4))
        assert square is not None
        assert is_induced_cycle(cycle_graph(4), square)

    def test_petersen_long_cycle(self):
        cycle = find_long_induced_cycle(petersen_graph())
        assert cycle is not None
        assert len(cycle) >= 5
        assert is_induced_cycle(petersen_graph(), cycle)

    def test_detectors_agree_with_brute_force_on_all_small_graphs(self):
        for g in atlas_graphs():
            cycles = brute_induced_cycles(g)
            squares = [c for c in cycles if len(c) == 4]

            assert has_induced_c4(g) == bool(squares), g
            assert is_chordal(g) == (not cycles), g

            square = find_induced_c4(g)
            if square is not None:
                assert len(square) == 4
                assert is_induced_cycle(g, square), g

            cycle = find_long_induced_cycle(g)
            assert (cycle is None) == (not cycles), g
            if cycle is not None:
                assert len(cycle) >= 4
                assert is_induced_cycle(g, cycle), g


def brute_clique_separator(g, allowed):
    hits = [
        frozenset(s)
        for size in range(len(allowed) + 1)
        for s in itertools.combinations(sorted(allowed), size)
        if brute_is_clique(g, s) and brute_separates(g, s)
    ]
    minimal = [s for s in hits if not any(t < s for t in hits)]
    if not minimal:
        return None
    return min(minimal, key=lambda s: tuple(sorted(s)))


class TestCliqueSeparator:

    def test_examples(self):
        assert clique_separator_exists(path_graph(3), range(3)) == frozenset({1})
        assert clique_separator_exists(cycle_graph(4), range(4)) is None
        assert clique_separator_exists(edgeless_graph(2), set()) == frozenset()

    def test_allowed_set_restricts_separator(self):
        assert clique_separator_exists(path_graph(3), {0, 2}) is None

    def test_lexicographically_least_minimal_separator(self):
        # two triangles glued along edge 1-2 plus a pendant on 3
        g = SimplicialGraph(range(5), [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)])
        assert clique_separator_exists(g, range(5)) == frozenset({1, 2})
        assert clique_separator_exists(g, {3}) == frozenset({3})

    def test_unknown_allowed_vertex(self):
        with pytest.raises(InputError):
            clique_separator_exists(path_graph(2), {4})

    def test_agrees_with_exhaustive_search(self):
        rng = random.Random(11)
        for g in atlas_graphs():
            everything = set(g.vertices)
            assert clique_separator_exists(g, everything) == brute_clique_separator(g, everything), g

            allowed = {v for v in g.vertices if rng.random() < 0.6}
            assert clique_separator_exists(g, allowed) == brute_clique_separator(g, allowed), (g, allowed)

    def test_clique_fallback_agrees_with_exhaustive_search(self, monkeypatch):
        monkeypatch.setattr(Config, 'SEPARATOR_BUDGET', 1)
        rng = random.Random(12)
        for g in atlas_graphs():
            allowed = {v for v in g.vertices if rng.random() < 0.7}
            assert clique_separator_exists(g, allowed) == brute_clique_separator(g, allowed), (g, allowed)

    def test_budget_overrun_on_large_allowed_set(self, monkeypatch):
        monkeypatch.setattr(Config, 'SEPARATOR_BUDGET', 1)
        assert clique_separator_exists(path_graph(30), range(30)) == frozenset({1})

    def test_dense_graph_with_one_missing_edge(self):
        n = 60
        g = SimplicialGraph(range(n), [e for e in itertools.combinations(range(n), 2) if e != (0, 1)])
        assert list(minimal_separators(g)) == [frozenset(range(2, n))]
        assert clique_separator_exists(g, range(n)) == frozenset(range(2, n))
        assert clique_separator_exists(g, range(1, n)) == frozenset(range(2, n))
        assert clique_separator_exists(g, range(3, n)) is None


class TestMinimalSeparators:

    def test_examples(self):
        assert list(minimal_separators(path_graph(3))) == [frozenset({1})]
        assert set(minimal_separators(cycle_graph(4))) == {frozenset({0, 2}), frozenset({1, 3})}
        assert list(minimal_separators(complete_graph(4))) == []

    def test_yields_each_separator_once(self):
        separators = list(minimal_separators(petersen_graph()))
        assert len(separators) == len(set(separators))

    def test_agrees_with_brute_force_on_all_small_graphs(self):
        for g in atlas_graphs():
            assert set(minimal_separators(g)) == brute_minimal_separators(g), g


class TestRelabel:

    def test_relabel_moves_edges(self):
        g = relabel(path_graph(3), {0: 2, 1: 0, 2: 1})
        assert g.sorted_edges() == [(0, 1), (0, 2)]

    def test_relabel_requires_permutation(self):
        with pytest.raises(InputError):
            relabel(path_graph(3), {0: 0, 1: 1, 2: 1})
