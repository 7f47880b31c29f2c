"""Clique counts and clique structure of the graph union."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Mapping

from .families import enumerate_intersecting_over, is_intersecting
from .model import CliqueCollection, check_clique_cap, label_key
from .partition import GammaPartition, IndexSet, popcount
from .polynomial import ONE, CountPolynomial


def binomial(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


def _alternating_sum(
    sets: list[int],
    weight: Callable[[int], int],
    vanishes: Callable[[int], bool] = lambda inter: False,
) -> int:
    """Sum of (-1)^(|S|+1) * weight(intersection of S) over non-empty S.

    ``vanishes(x)`` must imply that ``weight`` is zero on ``x`` and on every
    subset of ``x``; such branches are skipped whole.
    """
    total = 0
    stack = [(0, -1, 1)]  # (next position, running intersection, |S| parity sign)
    while stack:
        start, inter, sign = stack.pop()
        for i in range(start, len(sets)):
            x = inter & sets[i]
            if vanishes(x):
                continue
            total += sign * weight(x)
            stack.append((i + 1, x, -sign))
    return total


def count_r_cliques_pie(c: CliqueCollection, r: int, max_cliques: int | None = None) -> int:
    """Number of r-node cliques in the union, by inclusion-exclusion over the input cliques."""
    if r < 0:
        raise ValueError("r must be non-negative")
    check_clique_cap(c.m, max_cliques)
    vanishes = (lambda x: popcount(x) < r) if r > 0 else (lambda x: False)
    return _alternating_sum(list(c.masks), lambda x: binomial(popcount(x), r), vanishes)


def count_nontrivial_cliques(c: CliqueCollection, max_cliques: int | None = None) -> int:
    """Cliques with at least three nodes."""
    check_clique_cap(c.m, max_cliques)
    total = _alternating_sum(
        list(c.masks), lambda x: 2 ** popcount(x) - binomial(popcount(x), 2)
    )
    return total - c.n - 1


@dataclass(frozen=True)
class MaximalClique:
    nodes: tuple[str, ...]
    support: frozenset[IndexSet]
    mask: int

    @property
    def size(self) -> int:
        return len(self.nodes)


def _maximal_supports(p: GammaPartition) -> list[frozenset[IndexSet]]:
    """Maximal intersecting families on the support, via pivoting Bron-Kerbosch on the cells."""
    cells = p.support
    k = len(cells)
    nbrs = [sum(1 << j for j in range(k) if j != i and cells[i] & cells[j]) for i in range(k)]
    found: list[frozenset[IndexSet]] = []

    def expand(chosen: int, cand: int, excl: int) -> None:
        if not cand and not excl:
            found.append(frozenset(cells[j] for j in range(k) if chosen >> j & 1))
            return
        pool = cand | excl
        pivot = max(range(k), key=lambda u: popcount(nbrs[u] & cand) if pool >> u & 1 else -1)
        rest = cand & ~nbrs[pivot]
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            expand(chosen | low, cand & nbrs[v], excl & nbrs[v])
            cand &= ~low
            excl |= low

    if k:
        expand(0, (1 << k) - 1, 0)
    return found


def enumerate_maximal_cliques(p: GammaPartition) -> list[MaximalClique]:
    """Every maximal clique once, largest first, ties broken by sorted node labels."""
    c = p.collection
    out = []
    for family in _maximal_supports(p):
        mask = 0
        for J in family:
            mask |= p.cell_mask(J)
        out.append(MaximalClique(tuple(c.sorted_labels(mask)), family, mask))
    out.sort(key=lambda mc: (-mc.size, [label_key(x) for x in mc.nodes]))
    return out


def _clique_mask(p: GammaPartition, H: Iterable[object]) -> int:
    mask = p.node_mask(H)
    if not is_intersecting(p.support_of_mask(mask)):
        raise ValueError("H does not induce a clique")
    return mask


def is_maximal_clique(p: GammaPartition, H: Iterable[object]) -> bool:
    mask = _clique_mask(p, H)
    supp = p.support_of_mask(mask)
    if any(p.cell_mask(J) & ~mask for J in supp):
        return False
    return not any(
        J not in supp and all(J & I for I in supp) for J in p.cells
    )


def _maximal_masks_containing(p: GammaPartition, mask: int) -> list[int]:
    return [mc.mask for mc in enumerate_maximal_cliques(p) if mc.mask & mask == mask]


def count_cliques_containing(p: GammaPartition, H: Iterable[object]) -> int:
    """Cliques that contain ``H``, counting ``H`` itself.

    Inclusion-exclusion over the node-set intersections of the maximal cliques
    containing ``H``; each maximal clique is a union of whole cells, so these
    intersections are the unions of the cells its families share.
    """
    mask = _clique_mask(p, H)
    h = popcount(mask)
    maximal = _maximal_masks_containing(p, mask)
    return 1 + _alternating_sum(
        maximal, lambda x: 2 ** (popcount(x) - h) - 1, lambda x: x == mask
    )


def clique_extent(p: GammaPartition, H: Iterable[object]) -> frozenset[str]:
    """Union of the maximal cliques that contain ``H``."""
    mask = _clique_mask(p, H)
    union = 0
    for m in _maximal_masks_containing(p, mask):
        union |= m
    return p.collection.labels_of(union)


def count_r_cliques_maximal(p: GammaPartition, r: int) -> int:
    """Number of r-node cliques, by inclusion-exclusion over the maximal cliques."""
    if r < 0:
        raise ValueError("r must be non-negative")
    if r == 0:
        # the alternating sum of C(., 0) over non-empty subsets telescopes to 1
        return 1
    masks = [mc.mask for mc in enumerate_maximal_cliques(p)]
    return _alternating_sum(masks, lambda x: binomial(popcount(x), r), lambda x: popcount(x) < r)


def _accumulate_over_intersecting(p: GammaPartition, factor: Mapping[IndexSet, object], one):
    # families arrive depth-first, each extending an earlier prefix by one cell,
    # so a stack of prefix products avoids recomputing each product from scratch
    stack: list = []
    total = None
    for family in enumerate_intersecting_over(p.support):
        del stack[len(family) - 1 :]
        term = (stack[-1] if stack else one) * factor[family[-1]]
        stack.append(term)
        total = term if total is None else total + term
    return total


def clique_gf(p: GammaPartition) -> CountPolynomial:
    """Univariate clique generating function: coefficient r counts r-node cliques (r >= 1)."""
    factor = {J: CountPolynomial.cell_factor(p.gamma(J)) for J in p.cells}
    return _accumulate_over_intersecting(p, factor, ONE) or CountPolynomial()


def clique_gf_at(
    p: GammaPartition,
    values: Mapping[IndexSet, int | Fraction],
    default: int | Fraction | None = None,
) -> int | Fraction:
    """Evaluate the multivariate generating function at ``x_J = values[J]``.

    Cells missing from ``values`` take ``default``; with no default every
    non-empty cell must be assigned.
    """
    factor = {}
    for J in p.cells:
        x = values.get(J, default)
        if x is None:
            raise KeyError(f"no value for cell {p.cell_label(J)}")
        factor[J] = (1 + Fraction(x)) ** p.gamma(J) - 1
    total = _accumulate_over_intersecting(p, factor, Fraction(1)) or Fraction(0)
    return int(total) if total.denominator == 1 else total


def count_all_cliques(p: GammaPartition) -> int:
    """Cliques with at least one node."""
    factor = {J: 2 ** p.gamma(J) - 1 for J in p.cells}
    return _accumulate_over_intersecting(p, factor, 1) or 0


def count_edges_cell_formula(p: GammaPartition) -> int:
    within = sum(binomial(p.gamma(J), 2) for J in p.cells)
    across = sum(
        p.gamma(J) * sum(p.gamma(I) for I in p.cells if I != J and I & J) for J in p.cells
    )
    return within + across // 2


def count_edges_degree(p: GammaPartition) -> int:
    degree_sum = sum(
        p.gamma(J) * (sum(p.gamma(I) for I in p.cells if I & J) - 1) for J in p.cells
    )
    return degree_sum // 2


def clique_number(p: GammaPartition) -> int:
    """Size of a largest clique: the heaviest maximal intersecting family on the support."""
    return max((popcount(mc.mask) for mc in enumerate_maximal_cliques(p)), default=0)
