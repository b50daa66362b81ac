"""
Custom exceptions for graph product computations
Every exception carries the process exit code the CLI reports for it
"""

from typing import List, Optional


class GraphProductError(Exception):
    """Base exception for all gp-ends errors"""

    exit_code = 1

    def __init__(self, message: str):
        super().__init__(message)


class InputError(GraphProductError):
    """Raised for malformed documents, unknown vertices and bad arguments"""

    exit_code = 1


class UnsupportedLabelError(GraphProductError):
    """Raised when an operation does not apply to the given vertex groups"""

    exit_code = 2


class ResourceCapError(GraphProductError):
    """Raised when a Cayley ball outgrows the configured element cap"""

    exit_code = 3

    def __init__(
        self,
        message: str,
        radius_reached: int = 0,
        sphere_sizes: Optional[List[int]] = None,
    ):
        self.radius_reached = radius_reached
        self.sphere_sizes = list(sphere_sizes or [])
        super().__init__(message)


class CrossCheckDisagreement(GraphProductError):
    """Raised when the classifier and a conclusive oracle verdict differ"""

    exit_code = 4

    def __init__(self, message: str, records: Optional[list] = None):
        self.records = list(records or [])
        super().__init__(message)
