"""
Exact end count of a graph product from its labelled graph

Resolution order is fixed: finite (0 ends), two-ended, more than one end
(infinitely many), otherwise one end.
"""

import functools
import logging
from dataclasses import dataclass
from typing import Any, ClassVar, Dict, FrozenSet, Optional, Tuple

from ..exceptions import UnsupportedLabelError
from ..graph import (
    VertexSet,
    clique_separator_exists,
    find_induced_c4,
    find_long_induced_cycle,
    is_complete,
    universal_vertices,
    vertex_set,
)
from ..groups import (
    EndsClass,
    LabelledGraph,
    direct_product_ends,
    ends_of_label,
    special_subgroup_is_finite,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Witness:
    """Base class of the structural reasons behind an end count"""

    kind: ClassVar[str] = 'witness'
    allowed_ends: ClassVar[FrozenSet[EndsClass]] = frozenset()

    def to_dict(self, lg: LabelledGraph) -> Dict[str, Any]:
        return {'kind': self.kind}


@dataclass(frozen=True)
class CompleteAllFinite(Witness):
    kind: ClassVar[str] = 'complete_all_finite'
    allowed_ends: ClassVar[FrozenSet[EndsClass]] = frozenset({EndsClass.ZERO})


@dataclass(frozen=True)
class CompleteOneMultiEnded(Witness):
    """Complete graph, one two-ended or infinitely-ended vertex group, the rest finite"""

    vertex: int
    kind: ClassVar[str] = 'complete_one_multi_ended'
    allowed_ends: ClassVar[FrozenSet[EndsClass]] = frozenset({EndsClass.TWO, EndsClass.INFINITELY_MANY})

    def to_dict(self, lg: LabelledGraph) -> Dict[str, Any]:
        return {'kind': self.kind, 'vertex': lg.vertex_name(self.vertex)}


@dataclass(frozen=True)
class JoinTwoZ2(Witness):
    """Γ = core * pair with a finite complete core and two non-adjacent Z2 vertices"""

    core: VertexSet
    pair: VertexSet
    kind: ClassVar[str] = 'join_two_z2'
    allowed_ends: ClassVar[FrozenSet[EndsClass]] = frozenset({EndsClass.TWO})

    def to_dict(self, lg: LabelledGraph) -> Dict[str, Any]:
        return {'kind': self.kind, 'core': lg.format_set(self.core), 'pair': lg.format_set(self.pair)}


@dataclass(frozen=True)
class FiniteCliqueSeparator(Witness):
    separator: VertexSet
    kind: ClassVar[str] = 'finite_clique_separator'
    allowed_ends: ClassVar[FrozenSet[EndsClass]] = frozenset({EndsClass.TWO, EndsClass.INFINITELY_MANY})

    def to_dict(self, lg: LabelledGraph) -> Dict[str, Any]:
        return {'kind': self.kind, 'separator': lg.format_set(self.separator)}


@dataclass(frozen=True)
class OneEndedNoSeparator(Witness):
    kind: ClassVar[str] = 'no_finite_clique_separator'
    allowed_ends: ClassVar[FrozenSet[EndsClass]] = frozenset({EndsClass.ONE})


@dataclass(frozen=True)
class CompleteOneOneEnded(Witness):
    vertex: int
    kind: ClassVar[str] = 'complete_one_one_ended'
    allowed_ends: ClassVar[FrozenSet[EndsClass]] = frozenset({EndsClass.ONE})

    def to_dict(self, lg: LabelledGraph) -> Dict[str, Any]:
        return {'kind': self.kind, 'vertex': lg.vertex_name(self.vertex)}


@dataclass(frozen=True)
class CompleteManyInfinite(Witness):
    """Complete graph with at least two infinite vertex groups: a product of infinite groups"""

    infinite: VertexSet
    kind: ClassVar[str] = 'complete_many_infinite'
    allowed_ends: ClassVar[FrozenSet[EndsClass]] = frozenset({EndsClass.ONE})

    def to_dict(self, lg: LabelledGraph) -> Dict[str, Any]:
        return {'kind': self.kind, 'infinite': lg.format_set(self.infinite)}


@dataclass(frozen=True)
class EndsVerdict:
    ends: EndsClass
    witness: Witness

    def __post_init__(self):
        if self.ends not in self.witness.allowed_ends:
            raise ValueError(f"Witness {self.witness.kind} cannot justify {self.ends.value} ends")

    def to_dict(self, lg: LabelledGraph) -> Dict[str, Any]:
        return {'ends': self.ends.value, 'witness': self.witness.to_dict(lg)}


@dataclass(frozen=True)
class DictionaryReport:
    """Hyperbolicity and virtual freeness for all-finite vertex groups, with graph witnesses"""

    hyperbolic: bool
    virtually_free: bool
    induced_square: Optional[Tuple[int, ...]] = None
    induced_cycle: Optional[Tuple[int, ...]] = None

    def to_dict(self, lg: LabelledGraph) -> Dict[str, Any]:
        return {
            'hyperbolic': self.hyperbolic,
            'virtually_free': self.virtually_free,
            'induced_square': [lg.vertex_name(v) for v in self.induced_square] if self.induced_square else None,
            'induced_cycle': [lg.vertex_name(v) for v in self.induced_cycle] if self.induced_cycle else None,
        }


def _complete_product_ends(lg: LabelledGraph) -> EndsClass:
    # complete graph: G is the direct product of its vertex groups
    return functools.reduce(
        direct_product_ends,
        (ends_of_label(lg.label(v)) for v in lg.vertices),
        EndsClass.ZERO,
    )


def _infinite_vertices(lg: LabelledGraph) -> VertexSet:
    return vertex_set(lg.graph) - lg.finite_vertices()


def is_finite_group(lg: LabelledGraph) -> bool:
    """Finite iff the graph is complete and every vertex group is finite"""
    return special_subgroup_is_finite(lg, lg.vertices)


def has_more_than_one_end(lg: LabelledGraph) -> Optional[Witness]:
    """
    Witness that the graph product has more than one end, or None

    Either the graph is complete with exactly one multi-ended vertex group
    and the rest finite, or some complete set of finite vertex groups
    separates the graph.
    """
    if is_complete(lg.graph):
        if _complete_product_ends(lg) in (EndsClass.TWO, EndsClass.INFINITELY_MANY):
            (vertex,) = _infinite_vertices(lg)
            return CompleteOneMultiEnded(vertex)
        return None

    separator = clique_separator_exists(lg.graph, lg.finite_vertices())
    if separator is not None:
        return FiniteCliqueSeparator(separator)
    return None


def is_two_ended(lg: LabelledGraph) -> Optional[Witness]:
    """
    Witness that the graph product is two-ended, or None

    Either the graph is complete with exactly one two-ended vertex group and
    the rest finite, or the vertices adjacent to everything form a finite
    core and the remaining vertices are two non-adjacent Z2's.
    """
    if is_complete(lg.graph):
        if _complete_product_ends(lg) is EndsClass.TWO:
            (vertex,) = _infinite_vertices(lg)
            return CompleteOneMultiEnded(vertex)
        return None

    core = universal_vertices(lg.graph)
    pair = vertex_set(lg.graph) - core
    if len(pair) != 2:
        return None
    if not all(lg.label(v).is_z2 for v in pair):
        return None
    if not special_subgroup_is_finite(lg, core):
        return None
    return JoinTwoZ2(core, pair)


def ends(lg: LabelledGraph) -> EndsVerdict:
    """
    Number of ends of the graph product with its witness

    Examples:
        5-cycle of finite groups → ONE (connected, no complete separator)
        path Z2–Z3–Z5 → INFINITELY_MANY, separator {middle}
        two isolated Z2's → TWO (infinite dihedral)
    """
    if is_finite_group(lg):
        verdict = EndsVerdict(EndsClass.ZERO, CompleteAllFinite())
    elif (witness := is_two_ended(lg)) is not None:
        verdict = EndsVerdict(EndsClass.TWO, witness)
    elif (witness := has_more_than_one_end(lg)) is not None:
        verdict = EndsVerdict(EndsClass.INFINITELY_MANY, witness)
    elif is_complete(lg.graph):
        infinite = _infinite_vertices(lg)
        if len(infinite) == 1:
            (vertex,) = infinite
            verdict = EndsVerdict(EndsClass.ONE, CompleteOneOneEnded(vertex))
        else:
            verdict = EndsVerdict(EndsClass.ONE, CompleteManyInfinite(infinite))
    else:
        verdict = EndsVerdict(EndsClass.ONE, OneEndedNoSeparator())

    logger.debug(f"{lg.name or 'graph'}: {verdict.ends.value} ends ({verdict.witness.kind})")
    return verdict


def _require_finite_labels(lg: LabelledGraph, check: str):
    if not lg.all_finite:
        infinite = lg.format_set(_infinite_vertices(lg))
        raise UnsupportedLabelError(
            f"{check} is only decided for finite vertex groups; infinite labels on {infinite}"
        )


def is_hyperbolic(lg: LabelledGraph) -> bool:
    """
    Hyperbolicity for finite vertex groups: no induced square in the graph

    Raises:
        UnsupportedLabelError: If some vertex group is not finite
    """
    _require_finite_labels(lg, 'Hyperbolicity')
    return find_induced_c4(lg.graph) is None


def is_virtually_free(lg: LabelledGraph) -> bool:
    """
    Virtual freeness for finite vertex groups: the graph is chordal

    Raises:
        UnsupportedLabelError: If some vertex group is not finite
    """
    _require_finite_labels(lg, 'Virtual freeness')
    return find_long_induced_cycle(lg.graph) is None


def dictionary_report(lg: LabelledGraph) -> DictionaryReport:
    """Both dictionary checks together with the induced cycles that refute them"""
    _require_finite_labels(lg, 'The finite vertex group dictionary')
    square = find_induced_c4(lg.graph)
    cycle = find_long_induced_cycle(lg.graph)
    return DictionaryReport(
        hyperbolic=square is None,
        virtually_free=cycle is None,
        induced_square=square,
        induced_cycle=cycle,
    )
