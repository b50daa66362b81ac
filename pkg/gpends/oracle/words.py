"""
Normal forms for graph products of finite cyclic groups

An element is a sequence of syllables (vertex, exponent). Syllables of
adjacent vertices commute; two syllables of the same vertex that can be
shuffled next to each other merge. The canonical word is the reduced
sequence whose vertex ids are lexicographically least among all
shuffle-equivalent orderings.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Tuple

from ..exceptions import InputError, UnsupportedLabelError
from ..groups import LabelledGraph

logger = logging.getLogger(__name__)


class Syllable(NamedTuple):
    vertex: int
    exponent: int


@dataclass(frozen=True)
class CanonicalWord:
    """Canonical syllable sequence; the empty word is the identity"""

    syllables: Tuple[Syllable, ...] = ()

    def __len__(self) -> int:
        return len(self.syllables)

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def __str__(self) -> str:
        if self.is_identity:
            return '1'
        return ' '.join(f"v{s.vertex}^{s.exponent}" for s in self.syllables)


IDENTITY = CanonicalWord()


class CyclicGraphProduct:
    """
    Word arithmetic in the graph product of concrete cyclic vertex groups

    Args:
        lg: Labelled graph whose labels are all concrete cyclic groups

    Raises:
        UnsupportedLabelError: If some label has no concrete cyclic presentation
    """

    def __init__(self, lg: LabelledGraph):
        if not lg.all_cyclic:
            abstract = [lg.vertex_name(v) for v in lg.vertices if not lg.label(v).cyclic]
            raise UnsupportedLabelError(
                f"Normal forms need concrete cyclic vertex groups; abstract labels on {abstract}"
            )

        self.lg = lg
        self.orders: Dict[int, int] = {v: lg.label(v).order for v in lg.vertices}
        self.commuting: Dict[int, FrozenSet[int]] = {v: lg.graph.neighbors(v) for v in lg.vertices}
        # generating set: every non-trivial element of every vertex group
        self.generators: Tuple[Syllable, ...] = tuple(
            Syllable(v, e) for v in lg.vertices for e in range(1, self.orders[v])
        )

    def multiply_syllable(self, word: CanonicalWord, vertex: int, exponent: int) -> CanonicalWord:
        """
        Canonical form of word · vertex^exponent

        The new syllable travels left through the commuting tail of the word.
        Meeting a syllable of its own vertex it merges (and vanishes at
        exponent 0); otherwise it is inserted at the first tail position whose
        vertex id is larger, which keeps the word lexicographically least.
        """
        order = self.orders.get(vertex)
        if order is None:
            raise InputError(f"Unknown vertex {vertex} in syllable")
        exponent %= order
        if exponent == 0:
            return word

        syllables = word.syllables
        commuting = self.commuting[vertex]
        start = len(syllables)
        while start > 0:
            previous = syllables[start - 1]
            if previous.vertex == vertex:
                merged = (previous.exponent + exponent) % order
                if merged:
                    replacement = (Syllable(vertex, merged),)
                else:
                    replacement = ()
                return CanonicalWord(syllables[:start - 1] + replacement + syllables[start:])
            if previous.vertex not in commuting:
                break
            start -= 1

        position = start
        while position < len(syllables) and syllables[position].vertex < vertex:
            position += 1
        return CanonicalWord(syllables[:position] + (Syllable(vertex, exponent),) + syllables[position:])

    def canonicalize(self, syllables: Iterable[Tuple[int, int]]) -> CanonicalWord:
        word = IDENTITY
        for vertex, exponent in syllables:
            word = self.multiply_syllable(word, vertex, exponent)
        return word

    def multiply(self, a: CanonicalWord, b: CanonicalWord) -> CanonicalWord:
        word = a
        for syllable in b.syllables:
            word = self.multiply_syllable(word, syllable.vertex, syllable.exponent)
        return word

    def inverse(self, word: CanonicalWord) -> CanonicalWord:
        return self.canonicalize(
            (s.vertex, -s.exponent) for s in reversed(word.syllables)
        )

    def neighbours(self, word: CanonicalWord) -> List[CanonicalWord]:
        """Right multiples of word by every generator"""
        return [self.multiply_syllable(word, s.vertex, s.exponent) for s in self.generators]


def canonicalize(syllables: Iterable[Tuple[int, int]], lg: LabelledGraph) -> CanonicalWord:
    """
    Canonical form of a product of syllables

    Raises:
        UnsupportedLabelError: If lg has a non-cyclic label
        InputError: If a syllable names an unknown vertex
    """
    return CyclicGraphProduct(lg).canonicalize(syllables)


def multiply(a: CanonicalWord, b: CanonicalWord, lg: LabelledGraph) -> CanonicalWord:
    return CyclicGraphProduct(lg).multiply(a, b)


def inverse(word: CanonicalWord, lg: LabelledGraph) -> CanonicalWord:
    return CyclicGraphProduct(lg).inverse(word)
