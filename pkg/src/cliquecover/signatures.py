"""Signatures and supports of node subsets, and connected-subgraph counts."""

from __future__ import annotations

from math import comb, prod
from typing import Iterable, Mapping

from .families import enumerate_path_intersecting_over, is_path_intersecting
from .partition import GammaPartition, IndexSet, popcount
from .polynomial import CountPolynomial

Signature = dict  # IndexSet -> count, zero entries omitted


def signature_of_mask(p: GammaPartition, mask: int) -> Signature:
    counts: Signature = {}
    for J, cell in p.cells.items():
        k = popcount(cell & mask)
        if k:
            counts[J] = k
    return counts


def signature_of(p: GammaPartition, H: Iterable[object]) -> Signature:
    """Number of nodes of ``H`` in each cell, keyed by index set."""
    return signature_of_mask(p, p.node_mask(H))


def support(signature: Mapping[IndexSet, int]) -> frozenset[IndexSet]:
    return frozenset(J for J, k in signature.items() if k > 0)


def count_signatures(p: GammaPartition) -> int:
    return prod(p.gamma(J) + 1 for J in p.cells)


def count_signatures_with_support(p: GammaPartition, s: Iterable[IndexSet]) -> int:
    members = set(s)
    empty = [p.cell_label(J) for J in members if p.gamma(J) == 0]
    if empty:
        raise ValueError(f"support contains empty cells: {sorted(empty)}")
    return prod(p.gamma(J) for J in members)


def count_subgraphs_with_signature(p: GammaPartition, f: Mapping[IndexSet, int]) -> int:
    for J, k in f.items():
        if k < 0 or k > p.gamma(J):
            raise ValueError(
                f"signature asks for {k} nodes of cell {p.cell_label(J)} which has {p.gamma(J)}"
            )
    return prod(comb(p.gamma(J), k) for J, k in f.items() if k)


def is_connected_subgraph(p: GammaPartition, H: Iterable[object]) -> bool:
    mask = p.node_mask(H)
    if not mask:
        raise ValueError("H must be non-empty")
    return is_path_intersecting(p.support_of_mask(mask))


def count_connected_signatures(p: GammaPartition) -> int:
    return sum(
        prod(p.gamma(J) for J in family)
        for family in enumerate_path_intersecting_over(p.support)
    )


def connected_subgraph_gf(p: GammaPartition) -> CountPolynomial:
    """Coefficient ``k`` counts the connected induced subgraphs with ``k`` nodes."""
    factor = {J: CountPolynomial.cell_factor(p.gamma(J)) for J in p.cells}
    total = CountPolynomial()
    for family in enumerate_path_intersecting_over(p.support):
        term = factor[family[0]]
        for J in family[1:]:
            term = term * factor[J]
        total = total + term
    return total


def signature_tuple(signature: Mapping[IndexSet, int], order: Iterable[IndexSet]) -> tuple[int, ...]:
    """Dense view of a signature over a chosen ordering of index sets."""
    return tuple(signature.get(J, 0) for J in order)
