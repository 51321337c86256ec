"""
Utility functions for canonical ordering and formatting
"""

from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, List, Tuple

VertexSet = FrozenSet[str]


def canonical(members: Iterable[str]) -> List[str]:
    """
    Canonical (lexicographic) listing of a vertex or edge id collection

    Args:
        members: Ids to order

    Returns:
        Sorted list of ids
    """
    return sorted(members)


def graded_key(members: Iterable[str]) -> Tuple[int, Tuple[str, ...]]:
    """Sort key ordering sets by size, then lexicographically"""
    ordered = tuple(sorted(members))
    return (len(ordered), ordered)


def graded_subsets(items: Iterable[str]) -> Iterator[VertexSet]:
    """Yield every subset of items in graded lexicographic order"""
    pool = sorted(items)
    for size in range(len(pool) + 1):
        for combo in combinations(pool, size):
            yield frozenset(combo)


def format_vertex_set(members: Iterable[str]) -> str:
    """
    Format a vertex set for display

    Args:
        members: Vertex ids

    Returns:
        String like "{a, b}" or "∅" for the empty set
    """
    ordered = canonical(members)
    if not ordered:
        return "∅"
    return "{" + ", ".join(ordered) + "}"


def subset_label(elements: Iterable[int]) -> str:
    """
    Canonical vertex id of a finite subset in the subset graph

    Args:
        elements: Integers of the subset

    Returns:
        Label like "{}" or "{1,2}"
    """
    return "{" + ",".join(str(x) for x in sorted(elements)) + "}"


def parse_subset_label(label: str) -> FrozenSet[int]:
    """
    Inverse of subset_label

    Raises:
        ValueError: If label is not of the form "{1,2,...}"
    """
    text = label.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"not a subset label: {label!r}")
    body = text[1:-1].strip()
    if not body:
        return frozenset()
    return frozenset(int(part) for part in body.split(","))
