"""Bit-vector helpers shared by the graph model and the solvers.

Vertex sets are plain Python integers: bit v is set iff vertex v belongs to
the set. Python integers are arbitrary-width, so every set operation is
word-parallel without any extra machinery.
"""
from typing import Iterable, Iterator


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_from(indices: Iterable[int]) -> int:
    """Build a mask from an iterable of indices."""
    mask = 0
    for index in indices:
        mask |= 1 << index
    return mask


def popcount(mask: int) -> int:
    """Number of set bits."""
    return mask.bit_count()


def full_mask(width: int) -> int:
    """Mask with the lowest ``width`` bits set."""
    return (1 << width) - 1


def tensor_mask(mask_g: int, mask_h: int, n_h: int) -> int:
    """Flat mask of the rectangle ``mask_g x mask_h`` under g-major indexing."""
    result = 0
    for g in iter_bits(mask_g):
        result |= mask_h << (g * n_h)
    return result
