"""
Canonical enumeration of assignments and subsets
"""

from itertools import combinations, product
from typing import Dict, Iterator, Sequence, Tuple

from ..errors import SearchSpaceTooLarge


def space_size(ranges: Sequence[Sequence[int]]) -> int:
    size = 1
    for values in ranges:
        size *= len(values)
    return size


def assignments(names: Sequence[str], ranges: Sequence[Sequence[int]],
                cap: int = None, what: str = "assignment space") -> Iterator[Dict[str, int]]:
    """
    Yield every assignment of names to values, lexicographic in the given
    variable order and in each range's order. Raises SearchSpaceTooLarge
    before yielding anything if the product exceeds cap.
    """
    if cap is not None:
        size = space_size(ranges)
        if size > cap:
            raise SearchSpaceTooLarge(what, size, cap)
    for values in product(*ranges):
        yield dict(zip(names, values))


def subsets_by_size(items: Sequence[str]) -> Iterator[Tuple[str, ...]]:
    """Subsets by increasing cardinality, lexicographic in the order of items."""
    for size in range(len(items) + 1):
        yield from combinations(items, size)
