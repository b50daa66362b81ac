import random

from gpends.cli.documents import random_labelled_graph
from gpends.ends import AmalgamSplit, GroupTree, TreeEdge, amalgam_split, render_dot, tree_of_groups
from gpends.groups import GroupLabel, LabelledGraph
from tests.builders import cyclic


class TestAmalgamSplit:

    def test_path_splits_over_middle(self, path_z2_z3_z5):
        split = amalgam_split(path_z2_z3_z5)
        assert split == AmalgamSplit(frozenset({1}), frozenset({0, 1}), frozenset({1, 2}))
        assert split.violations(path_z2_z3_z5) == []
        assert split.to_dict(path_z2_z3_z5) == {
            'separator': ['y'],
            'left': ['x', 'y'],
            'right': ['y', 'z'],
            'edge_group_order': 3,
        }

    def test_edgeless_graph_is_a_free_product(self):
        lg = LabelledGraph.build(cyclic(2, 3, 5))
        split = amalgam_split(lg)
        assert split == AmalgamSplit(frozenset(), frozenset({0}), frozenset({1, 2}))
        assert split.to_dict(lg)['edge_group_order'] == 1

    def test_square_does_not_split(self, square_z2):
        assert amalgam_split(square_z2) is None

    def test_infinite_vertex_cannot_separate(self):
        lg = LabelledGraph.build(
            [GroupLabel.finite(2), GroupLabel.two_ended(), GroupLabel.finite(2)],
            [(0, 1), (1, 2)],
        )
        assert amalgam_split(lg) is None

    def test_violations_flag_bad_split(self, path_z2_z3_z5):
        bad = AmalgamSplit(frozenset({0}), frozenset({0, 1}), frozenset({0, 2}))
        problems = bad.violations(path_z2_z3_z5)
        assert problems
        assert any('edge joins' in p for p in problems)


class TestTreeOfGroups:

    def test_path_gives_two_node_tree(self, path_z2_z3_z5):
        tree = tree_of_groups(path_z2_z3_z5)
        assert tree.nodes == (frozenset({0, 1}), frozenset({1, 2}))
        assert tree.edges == (TreeEdge(0, 1, frozenset({1})),)
        assert tree.violations(path_z2_z3_z5) == []

        data = tree.to_dict(path_z2_z3_z5)
        assert data['nodes'][0] == {'vertices': ['x', 'y'], 'groups': {'x': 'Z2', 'y': 'Z3'}, 'order': 6}
        assert data['edges'] == [{'source': 0, 'target': 1, 'label': ['y'], 'order': 3}]

    def test_pentagon_is_a_single_node(self, pentagon):
        tree = tree_of_groups(pentagon)
        assert tree.nodes == (frozenset(range(5)),)
        assert tree.edges == ()

    def test_edgeless_pair_gives_two_leaves(self):
        lg = LabelledGraph.build(cyclic(2, 2))
        tree = tree_of_groups(lg)
        assert tree.nodes == (frozenset({0}), frozenset({1}))
        assert tree.edges == (TreeEdge(0, 1, frozenset()),)

    def test_edgeless_triple_gives_three_leaves(self):
        lg = LabelledGraph.build([GroupLabel.finite(3)] * 3)
        tree = tree_of_groups(lg)
        assert sorted(tree.nodes, key=min) == [frozenset({0}), frozenset({1}), frozenset({2})]
        assert len(tree.edges) == 2
        assert all(edge.label == frozenset() for edge in tree.edges)
        assert tree.violations(lg) == []

    def test_violations_flag_broken_tree(self, path_z2_z3_z5):
        broken = GroupTree(
            (frozenset({0, 1}), frozenset({1, 2})),
            (TreeEdge(0, 1, frozenset({0})),),
        )
        assert broken.violations(path_z2_z3_z5)

    def test_random_trees_satisfy_invariants(self):
        rng = random.Random(5)
        for index in range(200):
            lg = random_labelled_graph(rng, rng.randint(0, 7), rng.random(), name=f"tree-{index}")
            tree = tree_of_groups(lg)
            assert tree.violations(lg) == [], lg


class TestRenderDot:

    def test_path_tree(self, path_z2_z3_z5):
        dot = render_dot(tree_of_groups(path_z2_z3_z5), path_z2_z3_z5)
        assert dot == (
            'digraph group_tree {\n'
            '  node [shape=box];\n'
            '  n0 [label="x: Z2, y: Z3"];\n'
            '  n1 [label="y: Z3, z: Z5"];\n'
            '  n0 -> n1 [label="{y} Z3 (order 3)"];\n'
            '}\n'
        )

    def test_single_node_tree(self, pentagon):
        dot = render_dot(tree_of_groups(pentagon), pentagon)
        assert dot.count('[label=') == 1
        assert '->' not in dot

    def test_empty_graph(self):
        lg = LabelledGraph.build([])
        dot = render_dot(tree_of_groups(lg), lg)
        assert '  n0 [label="trivial"];' in dot

    def test_free_product_edge_is_trivial(self):
        lg = LabelledGraph.build(cyclic(2, 2))
        dot = render_dot(tree_of_groups(lg), lg)
        assert '[label="{} trivial (order 1)"]' in dot
