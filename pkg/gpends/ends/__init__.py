"""
End classification of graph products and their amalgam decompositions
"""

from .classifier import (
    CompleteAllFinite,
    CompleteManyInfinite,
    CompleteOneMultiEnded,
    CompleteOneOneEnded,
    DictionaryReport,
    EndsVerdict,
    FiniteCliqueSeparator,
    JoinTwoZ2,
    OneEndedNoSeparator,
    Witness,
    dictionary_report,
    ends,
    has_more_than_one_end,
    is_finite_group,
    is_hyperbolic,
    is_two_ended,
    is_virtually_free,
)
from .decomposer import (
    AmalgamSplit,
    GroupTree,
    TreeEdge,
    amalgam_split,
    render_dot,
    tree_of_groups,
)

__all__ = [
    'AmalgamSplit',
    'CompleteAllFinite',
    'CompleteManyInfinite',
    'CompleteOneMultiEnded',
    'CompleteOneOneEnded',
    'DictionaryReport',
    'EndsVerdict',
    'FiniteCliqueSeparator',
    'GroupTree',
    'JoinTwoZ2',
    'OneEndedNoSeparator',
    'TreeEdge',
    'Witness',
    'amalgam_split',
    'dictionary_report',
    'ends',
    'has_more_than_one_end',
    'is_finite_group',
    'is_hyperbolic',
    'is_two_ended',
    'is_virtually_free',
    'render_dot',
    'tree_of_groups',
]
