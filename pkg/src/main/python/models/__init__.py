"""Models package for graphs and domination results."""

from .graph import ExtendedNat, Graph, INFINITY, VertexSet

__all__ = [
    'ExtendedNat',
    'Graph',
    'INFINITY',
    'VertexSet',
]
