"""
Cayley-ball oracle for graph products of finite cyclic groups
"""

from .cayley import (
    EstimateReport,
    Verdict,
    ball,
    ends_estimate,
    exact_order_if_finite,
    shell_components,
    write_estimate_csv,
)
from .words import (
    IDENTITY,
    CanonicalWord,
    CyclicGraphProduct,
    Syllable,
    canonicalize,
    inverse,
    multiply,
)

__all__ = [
    'IDENTITY',
    'CanonicalWord',
    'CyclicGraphProduct',
    'EstimateReport',
    'Syllable',
    'Verdict',
    'ball',
    'canonicalize',
    'ends_estimate',
    'exact_order_if_finite',
    'inverse',
    'multiply',
    'shell_components',
    'write_estimate_csv',
]
