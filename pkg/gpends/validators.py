"""
Input validation functions for gp-ends
Validates graph documents and command-line arguments before they reach the algorithms
"""

import re
from typing import Any, Iterable, List

from .exceptions import InputError


class ValidationError(InputError):
    """Base exception for validation errors"""

    def __init__(self, message: str, location: str = ''):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class DuplicateVertexError(ValidationError):
    """Raised when a vertex id is declared twice"""
    pass


class DanglingEdgeError(ValidationError):
    """Raised when an edge references an undeclared vertex"""
    pass


class SelfLoopError(ValidationError):
    """Raised when an edge joins a vertex to itself"""
    pass


class TrivialGroupError(ValidationError):
    """Raised when a vertex group would be trivial (order < 2)"""
    pass


class UnknownLabelError(ValidationError):
    """Raised when a label spec is not one of the known forms"""
    pass


# Vertex ids are printable names: letters, digits and a few separators
VERTEX_ID_PATTERN = re.compile(r'^[A-Za-z0-9_.:\-]+$')

ABSTRACT_LABELS = ('two_ended', 'one_ended', 'infinite_ended')
ORDERED_LABELS = ('finite', 'cyclic')


def validate_vertex_id(vertex_id: Any, location: str = '') -> str:
    """
    Validate that a vertex id is a non-empty printable name

    Args:
        vertex_id: Value found in the document
        location: JSON path used in error messages

    Returns:
        The validated id

    Raises:
        ValidationError: If the id is not a string of allowed characters
    """
    if not isinstance(vertex_id, str) or not VERTEX_ID_PATTERN.match(vertex_id):
        raise ValidationError(
            f"Invalid vertex id {vertex_id!r}. Expected letters, digits, '_', '.', ':' or '-'",
            location,
        )
    return vertex_id


def validate_unique_ids(ids: Iterable[str], location: str = 'vertices') -> List[str]:
    """
    Validate that vertex ids are unique

    Raises:
        DuplicateVertexError: On the first repeated id
    """
    seen = set()
    ordered = []
    for index, vertex_id in enumerate(ids):
        if vertex_id in seen:
            raise DuplicateVertexError(
                f"Duplicate vertex id {vertex_id!r}", f"{location}[{index}].id"
            )
        seen.add(vertex_id)
        ordered.append(vertex_id)
    return ordered


def validate_order(order: Any, location: str = '') -> int:
    """
    Validate a finite group order

    Vertex groups are non-trivial, so the order must be an integer >= 2.

    Raises:
        TrivialGroupError: If the order is < 2
        ValidationError: If the order is not an integer
    """
    if isinstance(order, bool) or not isinstance(order, int):
        raise ValidationError(f"Group order must be an integer, got {order!r}", location)
    if order < 2:
        raise TrivialGroupError(
            f"Vertex groups must be non-trivial: order {order} < 2", location
        )
    return order


def validate_label_spec(spec: Any, location: str = '') -> Any:
    """
    Validate the shape of a group label value

    Accepted forms: {"finite": n}, {"cyclic": n}, "two_ended", "one_ended",
    "infinite_ended".

    Returns:
        The validated value

    Raises:
        UnknownLabelError: If the value has none of the accepted forms
        TrivialGroupError: If an order is < 2
    """
    if isinstance(spec, str):
        if spec not in ABSTRACT_LABELS:
            raise UnknownLabelError(
                f"Unknown label {spec!r}. Allowed: {', '.join(ABSTRACT_LABELS)}", location
            )
        return spec

    if isinstance(spec, dict) and len(spec) == 1:
        (kind, order), = spec.items()
        if kind in ORDERED_LABELS:
            validate_order(order, f"{location}.{kind}")
            return spec

    raise UnknownLabelError(
        f"Unknown label spec {spec!r}. Expected {{\"finite\": n}}, {{\"cyclic\": n}} "
        f"or one of {', '.join(ABSTRACT_LABELS)}",
        location,
    )


def validate_edge(edge: Any, declared: Iterable[str], location: str = '') -> tuple:
    """
    Validate one edge entry of a document

    Raises:
        ValidationError: If the entry is not a pair of ids
        SelfLoopError: If both endpoints are equal
        DanglingEdgeError: If an endpoint was never declared
    """
    if not isinstance(edge, (list, tuple)) or len(edge) != 2:
        raise ValidationError(f"Edge must be a pair of vertex ids, got {edge!r}", location)

    u, w = edge
    if u == w:
        raise SelfLoopError(f"Self-loop on vertex {u!r}", location)

    declared = set(declared)
    for endpoint in (u, w):
        if endpoint not in declared:
            raise DanglingEdgeError(f"Edge references undeclared vertex {endpoint!r}", location)

    return (u, w)


def validate_edge_probability(edge_prob: float) -> float:
    """Validate a random-graph edge probability (0 <= p <= 1)"""
    if not 0.0 <= edge_prob <= 1.0:
        raise InputError(f"Edge probability must be in [0, 1], got {edge_prob}")
    return edge_prob


def validate_at_least(value: int, minimum: int, name: str) -> int:
    """Validate an integer argument against a lower bound"""
    if value < minimum:
        raise InputError(f"{name} must be >= {minimum}, got {value}")
    return value


def validate_label_pool(orders: Iterable[int]) -> List[int]:
    """
    Validate the cyclic orders allowed in the cross-check label pool

    Raises:
        InputError: If the pool is empty or holds an order other than 2 or 3
    """
    pool = sorted(set(orders))
    if not pool:
        raise InputError("Label pool must not be empty")
    bad = [order for order in pool if order not in (2, 3)]
    if bad:
        raise InputError(f"Label pool may only contain cyclic orders 2 and 3, got {bad}")
    return pool
