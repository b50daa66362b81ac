"""
Vertex-group descriptors, their ends arithmetic and finiteness of special subgroups
"""

import enum
import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from ..exceptions import InputError
from ..graph import (
    SimplicialGraph,
    VertexSet,
    induced_subgraph,
    is_complete,
    relabel,
)

logger = logging.getLogger(__name__)


class EndsClass(enum.Enum):
    """Number of ends of a finitely generated group; values are the serialised forms"""

    ZERO = '0'
    ONE = '1'
    TWO = '2'
    INFINITELY_MANY = 'infinity'

    @property
    def rank(self) -> int:
        return _ENDS_RANK[self]

    def __lt__(self, other):
        if not isinstance(other, EndsClass):
            return NotImplemented
        return self.rank < other.rank

    def __le__(self, other):
        if not isinstance(other, EndsClass):
            return NotImplemented
        return self.rank <= other.rank


_ENDS_RANK = {
    EndsClass.ZERO: 0,
    EndsClass.ONE: 1,
    EndsClass.TWO: 2,
    EndsClass.INFINITELY_MANY: 3,
}


class LabelKind(enum.Enum):
    FINITE = 'finite'
    TWO_ENDED = 'two_ended'
    ONE_ENDED = 'one_ended'
    INFINITE_ENDED = 'infinite_ended'


@dataclass(frozen=True)
class GroupLabel:
    """
    Descriptor of a vertex group

    Finite groups carry their order; ``cyclic`` marks a concrete Z_n the
    Cayley oracle can realise. Infinite groups are described by their ends
    class only.
    """

    kind: LabelKind
    order: Optional[int] = None
    cyclic: bool = False

    def __post_init__(self):
        if self.kind is LabelKind.FINITE:
            if isinstance(self.order, bool) or not isinstance(self.order, int) or self.order < 2:
                raise InputError(f"Finite vertex groups need an order >= 2, got {self.order!r}")
        else:
            if self.order is not None:
                raise InputError(f"Only finite labels carry an order ({self.kind.value})")
            if self.cyclic:
                raise InputError("Concrete cyclic presentations must be finite")

    @classmethod
    def finite(cls, order: int) -> 'GroupLabel':
        return cls(LabelKind.FINITE, order)

    @classmethod
    def concrete_cyclic(cls, order: int) -> 'GroupLabel':
        return cls(LabelKind.FINITE, order, cyclic=True)

    @classmethod
    def two_ended(cls) -> 'GroupLabel':
        return cls(LabelKind.TWO_ENDED)

    @classmethod
    def one_ended(cls) -> 'GroupLabel':
        return cls(LabelKind.ONE_ENDED)

    @classmethod
    def infinite_ended(cls) -> 'GroupLabel':
        return cls(LabelKind.INFINITE_ENDED)

    @property
    def is_finite(self) -> bool:
        return self.kind is LabelKind.FINITE

    @property
    def is_z2(self) -> bool:
        return self.is_finite and self.order == 2

    def describe(self) -> str:
        """Short human-readable name: Z3, finite(6), two-ended, ..."""
        if self.cyclic:
            return f"Z{self.order}"
        if self.is_finite:
            return f"finite({self.order})"
        return self.kind.value.replace('_', '-')


def ends_of_label(label: GroupLabel) -> EndsClass:
    """Ends of a vertex group: finite groups have 0 ends, the others are labelled by their class"""
    return {
        LabelKind.FINITE: EndsClass.ZERO,
        LabelKind.ONE_ENDED: EndsClass.ONE,
        LabelKind.TWO_ENDED: EndsClass.TWO,
        LabelKind.INFINITE_ENDED: EndsClass.INFINITELY_MANY,
    }[label.kind]


def free_product_ends(a: GroupLabel, b: GroupLabel) -> EndsClass:
    """
    Ends of the free product of two non-trivial groups

    Z2 * Z2 is infinite dihedral and two-ended; every other free product of
    non-trivial groups has infinitely many ends.
    """
    if a.is_z2 and b.is_z2:
        return EndsClass.TWO
    return EndsClass.INFINITELY_MANY


def direct_product_ends(a: EndsClass, b: EndsClass) -> EndsClass:
    """
    Ends of a direct product from the ends of its factors

    A finite factor does not change the quasi-isometry type; a product of two
    infinite groups is one-ended.
    """
    if a is EndsClass.ZERO:
        return b
    if b is EndsClass.ZERO:
        return a
    return EndsClass.ONE


class LabelledGraph:
    """
    Simplicial graph with a group label on every vertex

    This is the input object of the whole library. ``names`` maps vertex ids
    to external names (defaults to ``v<id>``); ``name`` is the document name.
    """

    def __init__(
        self,
        graph: SimplicialGraph,
        labels: Mapping[int, GroupLabel],
        names: Optional[Mapping[int, str]] = None,
        name: str = '',
    ):
        if set(labels) != set(graph.vertices):
            missing = sorted(set(graph.vertices) - set(labels))
            extra = sorted(set(labels) - set(graph.vertices))
            raise InputError(f"Labels must cover every vertex exactly (missing {missing}, extra {extra})")

        names = dict(names) if names is not None else {}
        for v in graph.vertices:
            names.setdefault(v, f"v{v}")
        if len(set(names[v] for v in graph.vertices)) != len(graph):
            raise InputError("Vertex names must be unique")

        self.graph = graph
        self.name = name
        self._labels: Dict[int, GroupLabel] = {v: labels[v] for v in graph.vertices}
        self._names: Dict[int, str] = {v: names[v] for v in graph.vertices}

    @classmethod
    def build(
        cls,
        labels: Iterable[GroupLabel],
        edges: Iterable[Tuple[int, int]] = (),
        name: str = '',
    ) -> 'LabelledGraph':
        """Labelled graph on vertices 0..n-1 from a label sequence and an edge list"""
        labels = list(labels)
        graph = SimplicialGraph(range(len(labels)), edges)
        return cls(graph, dict(enumerate(labels)), name=name)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabelledGraph):
            return NotImplemented
        return (
            self.graph == other.graph
            and self._labels == other._labels
            and self._names == other._names
            and self.name == other.name
        )

    def __repr__(self) -> str:
        labels = ', '.join(f"{self._names[v]}={self._labels[v].describe()}" for v in self.vertices)
        return f"LabelledGraph({self.name!r}, [{labels}], edges={self.graph.sorted_edges()})"

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self.graph.vertices

    @property
    def labels(self) -> Dict[int, GroupLabel]:
        return dict(self._labels)

    @property
    def names(self) -> Dict[int, str]:
        return dict(self._names)

    def label(self, v: int) -> GroupLabel:
        return self._labels[v]

    def vertex_name(self, v: int) -> str:
        return self._names[v]

    def format_set(self, s: Iterable[int]) -> List[str]:
        """External names of a vertex set, in id order"""
        return [self._names[v] for v in sorted(s)]

    def finite_vertices(self) -> VertexSet:
        return frozenset(v for v in self.vertices if self._labels[v].is_finite)

    @property
    def all_finite(self) -> bool:
        return all(label.is_finite for label in self._labels.values())

    @property
    def all_cyclic(self) -> bool:
        return all(label.cyclic for label in self._labels.values())

    def restrict(self, s: Iterable[int]) -> 'LabelledGraph':
        """Labelled full subgraph on s; vertex ids and names are preserved"""
        sub = induced_subgraph(self.graph, s)
        return LabelledGraph(
            sub,
            {v: self._labels[v] for v in sub.vertices},
            {v: self._names[v] for v in sub.vertices},
            self.name,
        )

    def relabel(self, perm: Mapping[int, int]) -> 'LabelledGraph':
        """Move every vertex, with its label and name, along an id permutation"""
        return LabelledGraph(
            relabel(self.graph, perm),
            {perm[v]: self._labels[v] for v in self.vertices},
            {perm[v]: self._names[v] for v in self.vertices},
            self.name,
        )


def special_subgroup_is_finite(lg: LabelledGraph, s: Iterable[int]) -> bool:
    """
    Finiteness of the special subgroup generated by the vertex groups in s

    Finite iff s spans a complete subgraph and every label in it is finite;
    the empty set gives the trivial group.

    Raises:
        InputError: If s contains an unknown vertex
    """
    sub = induced_subgraph(lg.graph, s)
    return is_complete(sub) and all(lg.label(v).is_finite for v in sub.vertices)


def special_subgroup_order(lg: LabelledGraph, s: Iterable[int]) -> Optional[int]:
    """Order of the special subgroup on s when it is finite, otherwise None"""
    s = frozenset(s)
    if not special_subgroup_is_finite(lg, s):
        return None
    return math.prod(lg.label(v).order for v in s)
