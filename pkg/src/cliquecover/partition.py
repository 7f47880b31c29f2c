"""The partition of the graph union by clique membership.

Node ``x`` lands in the cell indexed by ``J_x = {j : x in c_j}``.  Index sets
are plain ``int`` bitmasks over clique positions (bit ``j`` is clique
``j + 1``), node sets are bitmasks over internal node indices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping

from .model import CliqueCollection, check_clique_cap, graph_union, iter_bits

IndexSet = int


def popcount(x: int) -> int:
    return bin(x).count("1")


def canonical_order(index_sets: Iterable[IndexSet]) -> list[IndexSet]:
    """Cardinality of the index set first, then the bit pattern."""
    return sorted(index_sets, key=lambda J: (popcount(J), J))


@dataclass(frozen=True)
class GammaPartition:
    collection: CliqueCollection
    cell_of: tuple[IndexSet, ...]
    cells: dict[IndexSet, int]
    """Non-empty cells in canonical order, mapped to their node bitmasks."""

    @property
    def m(self) -> int:
        return self.collection.m

    @property
    def n(self) -> int:
        return self.collection.n

    @property
    def support(self) -> list[IndexSet]:
        return list(self.cells)

    def gamma(self, J: IndexSet) -> int:
        return popcount(self.cells.get(J, 0))

    def cell_mask(self, J: IndexSet) -> int:
        return self.cells.get(J, 0)

    def cell_nodes(self, J: IndexSet) -> list[str]:
        return self.collection.sorted_labels(self.cells.get(J, 0))

    def cell_label(self, J: IndexSet) -> str:
        return self.collection.cell_label(J)

    def node_mask(self, nodes: Iterable[object]) -> int:
        return self.collection.mask_of(nodes)

    def support_of_mask(self, mask: int) -> frozenset[IndexSet]:
        return frozenset(self.cell_of[i] for i in iter_bits(mask))


def _from_cells(c: CliqueCollection, cells: Mapping[IndexSet, int]) -> GammaPartition:
    ordered = {J: cells[J] for J in canonical_order(J for J, mask in cells.items() if mask)}
    cell_of = [0] * c.n
    for J, mask in ordered.items():
        for i in iter_bits(mask):
            cell_of[i] = J
    return GammaPartition(c, tuple(cell_of), ordered)


def build_gamma_partition(c: CliqueCollection, max_cliques: int | None = None) -> GammaPartition:
    check_clique_cap(c.m, max_cliques)
    cells: dict[IndexSet, int] = {}
    for x in range(c.n):
        J = 0
        for j, mask in enumerate(c.masks):
            if mask >> x & 1:
                J |= 1 << j
        cells[J] = cells.get(J, 0) | 1 << x
    return _from_cells(c, cells)


def adjacent(p: GammaPartition, u: object, v: object) -> bool:
    """Adjacency in the graph union read off the index sets of the two nodes."""
    iu, iv = p.collection.index_of(u), p.collection.index_of(v)
    if iu == iv:
        raise ValueError("no self-loops: u and v must differ")
    return p.cell_of[iu] & p.cell_of[iv] != 0


def cell_degree(p: GammaPartition, J: IndexSet) -> int:
    if J <= 0:
        raise ValueError("index set must be non-empty")
    if p.gamma(J) == 0:
        raise ValueError("empty cell has no vertices")
    return sum(p.gamma(I) for I in p.cells if I & J) - 1


def check_orbit_automorphism(p: GammaPartition, perm: Mapping[object, object]) -> bool:
    """Check that a permutation acting inside cells is an automorphism of the union.

    ``perm`` maps node labels to node labels; unlisted nodes are fixed.
    """
    c = p.collection
    image = list(range(c.n))
    for src, dst in perm.items():
        i, j = c.index_of(src), c.index_of(dst)
        if p.cell_of[i] != p.cell_of[j]:
            raise ValueError(f"permutation moves node {src!r} out of its cell")
        image[i] = j
    if len(set(image)) != c.n:
        raise ValueError("mapping is not a bijection")
    g = graph_union(c)
    return all(
        g.adjacent(image[u], image[v]) == g.adjacent(u, v)
        for u in range(c.n)
        for v in range(u + 1, c.n)
    )


def random_cell_permutation(p: GammaPartition, rng: random.Random) -> dict[str, str]:
    perm = {}
    labels = p.collection.labels
    for mask in p.cells.values():
        members = list(iter_bits(mask))
        shuffled = members[:]
        rng.shuffle(shuffled)
        perm.update({labels[a]: labels[b] for a, b in zip(members, shuffled)})
    return perm
