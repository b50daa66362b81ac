"""
gp-ends: number of ends of graph products of groups
Symbolic classifier, amalgam witnesses and a Cayley-ball oracle
"""

__version__ = '1.0.0'
