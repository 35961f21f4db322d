"""
Petits utilitaires sur les ensembles de sommets codés en entiers (bitsets).
"""

from typing import Iterator, List


def bit(v: int) -> int:
    return 1 << v


def popcount(mask: int) -> int:
    return bin(mask).count('1')


def iter_bits(mask: int) -> Iterator[int]:
    """Itère sur les indices des bits à 1, par ordre croissant."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: int) -> int:
    """Indice du plus petit bit à 1 (mask non nul)."""
    return (mask & -mask).bit_length() - 1


def to_list(mask: int) -> List[int]:
    return list(iter_bits(mask))

