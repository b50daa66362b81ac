"""
Vertex-group labels and labelled graphs
"""

from .labels import (
    EndsClass,
    GroupLabel,
    LabelKind,
    LabelledGraph,
    direct_product_ends,
    ends_of_label,
    free_product_ends,
    special_subgroup_is_finite,
    special_subgroup_order,
)

__all__ = [
    'EndsClass',
    'GroupLabel',
    'LabelKind',
    'LabelledGraph',
    'direct_product_ends',
    'ends_of_label',
    'free_product_ends',
    'special_subgroup_is_finite',
    'special_subgroup_order',
]
