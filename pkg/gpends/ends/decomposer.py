"""
Amalgam witnesses and the tree-of-groups decomposition over finite clique separators
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx

from ..graph import (
    VertexSet,
    clique_separator_exists,
    connected_components,
    induced_subgraph,
    vertex_set,
)
from ..groups import LabelledGraph, special_subgroup_is_finite, special_subgroup_order

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AmalgamSplit:
    """
    G_Γ = G_left *_{G_separator} G_right with a finite edge group

    left ∪ right is every vertex and left ∩ right is the separator.
    """

    separator: VertexSet
    left: VertexSet
    right: VertexSet

    def violations(self, lg: LabelledGraph) -> List[str]:
        """Broken split invariants, empty when the split is valid for lg"""
        problems = []
        everything = vertex_set(lg.graph)

        if self.left | self.right != everything:
            problems.append("left ∪ right is not the whole vertex set")
        if self.left & self.right != self.separator:
            problems.append("left ∩ right differs from the separator")
        if self.left <= self.right or self.right <= self.left:
            problems.append("one side contains the other")
        if not special_subgroup_is_finite(lg, self.separator):
            problems.append("separator is not a complete set of finite vertex groups")

        # no edge may cross between the two private sides
        left_only = self.left - self.separator
        right_only = self.right - self.separator
        if any(lg.graph.adjacent(u, w) for u in left_only for w in right_only):
            problems.append("an edge joins left∖separator to right∖separator")

        return problems

    def to_dict(self, lg: LabelledGraph) -> Dict[str, Any]:
        return {
            'separator': lg.format_set(self.separator),
            'left': lg.format_set(self.left),
            'right': lg.format_set(self.right),
            'edge_group_order': special_subgroup_order(lg, self.separator),
        }


@dataclass(frozen=True)
class TreeEdge:
    source: int
    target: int
    label: VertexSet


@dataclass(frozen=True)
class GroupTree:
    """
    Tree of groups: nodes are full subgraphs, edges carry finite clique labels

    Edge-into-vertex maps are the canonical inclusions of vertex sets.
    """

    nodes: Tuple[VertexSet, ...]
    edges: Tuple[TreeEdge, ...]

    def as_networkx(self) -> nx.Graph:
        tree = nx.Graph()
        tree.add_nodes_from(range(len(self.nodes)))
        tree.add_edges_from((e.source, e.target) for e in self.edges)
        return tree

    def nodes_containing(self, v: int) -> List[int]:
        return [i for i, node in enumerate(self.nodes) if v in node]

    def violations(self, lg: LabelledGraph) -> List[str]:
        """Broken tree-of-groups invariants, empty when the tree is valid for lg"""
        problems = []
        tree = self.as_networkx()

        if not nx.is_tree(tree):
            problems.append("underlying graph is not a tree")

        for edge in self.edges:
            if not (edge.label <= self.nodes[edge.source] and edge.label <= self.nodes[edge.target]):
                problems.append(f"edge label {sorted(edge.label)} is not in both endpoints")
            if not special_subgroup_is_finite(lg, edge.label):
                problems.append(f"edge label {sorted(edge.label)} is not a finite complete set")

        covered = frozenset().union(*self.nodes) if self.nodes else frozenset()
        if covered != vertex_set(lg.graph):
            problems.append("nodes do not cover the vertex set")

        for v in lg.vertices:
            holders = self.nodes_containing(v)
            if holders and not nx.is_connected(tree.subgraph(holders)):
                problems.append(f"nodes containing {lg.vertex_name(v)} are not a subtree")

        for i, node in enumerate(self.nodes):
            if amalgam_split(lg.restrict(node)) is not None:
                problems.append(f"node {i} still splits over a finite clique")

        return problems

    def to_dict(self, lg: LabelledGraph) -> Dict[str, Any]:
        return {
            'nodes': [
                {
                    'vertices': lg.format_set(node),
                    'groups': {lg.vertex_name(v): lg.label(v).describe() for v in sorted(node)},
                    'order': special_subgroup_order(lg, node),
                }
                for node in self.nodes
            ],
            'edges': [
                {
                    'source': edge.source,
                    'target': edge.target,
                    'label': lg.format_set(edge.label),
                    'order': special_subgroup_order(lg, edge.label),
                }
                for edge in self.edges
            ],
        }


def amalgam_split(lg: LabelledGraph) -> Optional[AmalgamSplit]:
    """
    Split over a complete separating set of finite vertex groups, if one exists

    The left side is the separator plus the component of Γ∖S with the
    smallest vertex id; the right side takes every other component.
    """
    separator = clique_separator_exists(lg.graph, lg.finite_vertices())
    if separator is None:
        return None

    rest = vertex_set(lg.graph) - separator
    components = connected_components(induced_subgraph(lg.graph, rest))
    first = components[0]
    split = AmalgamSplit(
        separator=separator,
        left=separator | first,
        right=separator | (rest - first),
    )
    logger.debug(
        f"Split over {lg.format_set(separator)}: "
        f"{lg.format_set(split.left)} | {lg.format_set(split.right)}"
    )
    return split


def _collapse(nodes: Dict[int, VertexSet], edges: List[List]) -> None:
    # merge a node into its neighbour when the edge label is the whole node
    while True:
        for index, (a, b, label) in enumerate(edges):
            if label == nodes[a]:
                gone, keep = a, b
            elif label == nodes[b]:
                gone, keep = b, a
            else:
                continue
            del edges[index]
            for edge in edges:
                if edge[0] == gone:
                    edge[0] = keep
                if edge[1] == gone:
                    edge[1] = keep
            del nodes[gone]
            logger.debug(f"Collapsed node {gone} into {keep}")
            break
        else:
            return


def tree_of_groups(lg: LabelledGraph) -> GroupTree:
    """
    Decompose the graph product into a tree of groups over finite edge groups

    Splits are applied recursively until no node admits a finite clique
    separator; edges whose label equals an endpoint are collapsed afterwards.
    """
    nodes: Dict[int, VertexSet] = {0: vertex_set(lg.graph)}
    edges: List[List] = []
    next_id = 1
    pending = [0]

    while pending:
        node_id = pending.pop()
        split = amalgam_split(lg.restrict(nodes[node_id]))
        if split is None:
            continue

        right_id = next_id
        next_id += 1
        nodes[node_id] = split.left
        nodes[right_id] = split.right

        # an old edge label is a clique, so it lies entirely on one side
        for edge in edges:
            for end in (0, 1):
                if edge[end] == node_id and not edge[2] <= split.left:
                    edge[end] = right_id

        edges.append([node_id, right_id, split.separator])
        pending.extend([node_id, right_id])

    _collapse(nodes, edges)

    order = sorted(nodes, key=lambda k: tuple(sorted(nodes[k])))
    position = {k: i for i, k in enumerate(order)}
    tree_edges = sorted(
        (
            TreeEdge(min(position[a], position[b]), max(position[a], position[b]), label)
            for a, b, label in edges
        ),
        key=lambda e: (e.source, e.target, tuple(sorted(e.label))),
    )
    tree = GroupTree(tuple(nodes[k] for k in order), tuple(tree_edges))
    logger.debug(f"Tree of groups with {len(tree.nodes)} nodes and {len(tree.edges)} edges")
    return tree


def _dot_quote(text: str) -> str:
    return '"' + text.replace('\\', '\\\\').replace('"', '\\"') + '"'


def _group_text(lg: LabelledGraph, s: VertexSet) -> str:
    if not s:
        return 'trivial'
    return ' x '.join(lg.label(v).describe() for v in sorted(s))


def render_dot(tree: GroupTree, lg: LabelledGraph) -> str:
    """
    Graphviz DOT text for a tree of groups

    One node per tree node listing its vertices with their groups, one edge
    per tree edge annotated with its label set, group and order.
    """
    lines = ['digraph group_tree {', '  node [shape=box];']

    for i, node in enumerate(tree.nodes):
        if node:
            text = ', '.join(f"{lg.vertex_name(v)}: {lg.label(v).describe()}" for v in sorted(node))
        else:
            text = 'trivial'
        lines.append(f"  n{i} [label={_dot_quote(text)}];")

    for edge in tree.edges:
        order = special_subgroup_order(lg, edge.label)
        names = ', '.join(lg.format_set(edge.label))
        text = f"{{{names}}} {_group_text(lg, edge.label)} (order {order})"
        lines.append(f"  n{edge.source} -> n{edge.target} [label={_dot_quote(text)}];")

    lines.append('}')
    return '\n'.join(lines) + '\n'
