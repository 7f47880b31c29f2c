"""Brute-force reference computations used to cross-check the cell-based formulas.

Everything here works from the graph union's adjacency (or, for the
partition, from the raw cliques) and never from cell sizes or families.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .model import CapExceededError, CliqueCollection, GraphUnion, graph_union, iter_bits
from .partition import GammaPartition, _from_cells
from .polynomial import CountPolynomial

SUBSET_SCAN_MAX_N = 25


def _bits(mask: int) -> int:
    return bin(mask).count("1")


def is_clique(g: GraphUnion, mask: int) -> bool:
    return all(g.adj[u] & mask == mask & ~(1 << u) for u in iter_bits(mask))


def is_connected(g: GraphUnion, mask: int) -> bool:
    if not mask:
        return False
    reached = mask & -mask
    frontier = reached
    while frontier:
        grow = 0
        for u in iter_bits(frontier):
            grow |= g.adj[u]
        frontier = grow & mask & ~reached
        reached |= frontier
    return reached == mask


def _count_by_scan(g: GraphUnion, r: int) -> int:
    return sum(
        1
        for nodes in combinations(range(g.n), r)
        if all(g.adjacent(u, v) for u, v in combinations(nodes, 2))
    )


def _count_by_extension(g: GraphUnion, r: int) -> int:
    def grow(size: int, cand: int) -> int:
        if size == r:
            return 1
        total = 0
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            # only extend with later nodes so each clique is built once
            total += grow(size + 1, cand & g.adj[v])
        return total

    return grow(0, (1 << g.n) - 1)


def brute_count_r_cliques(g: GraphUnion, r: int, method: str | None = None) -> int:
    if r < 0:
        raise ValueError("r must be non-negative")
    if method is None:
        method = "scan" if g.n <= SUBSET_SCAN_MAX_N else "extend"
    if method == "scan":
        return _count_by_scan(g, r)
    if method == "extend":
        return _count_by_extension(g, r)
    raise ValueError(f"unknown method {method!r}")


def brute_count_covered_r_sets(c: CliqueCollection, r: int) -> int:
    """r-node sets lying inside at least one clique of the collection.

    This is what inclusion-exclusion over the input cliques counts; it can be
    smaller than the union's r-clique count when the union has cliques that
    no single input clique contains (e.g. a triangle closed by three cliques).
    """
    return sum(
        1
        for nodes in combinations(range(c.n), r)
        if any(all(mask >> u & 1 for u in nodes) for mask in c.masks)
    )


def brute_maximal_cliques(g: GraphUnion) -> list[frozenset[int]]:
    """Maximal cliques by recursive enumeration with pivoting (node indices)."""
    nbrs = [set(iter_bits(a)) for a in g.adj]
    out: list[frozenset[int]] = []

    def expand(R: set[int], P: set[int], X: set[int]) -> None:
        if not P and not X:
            out.append(frozenset(R))
            return
        pivot = max(P | X, key=lambda u: len(P & nbrs[u]))
        for v in list(P - nbrs[pivot]):
            expand(R | {v}, P & nbrs[v], X & nbrs[v])
            P.remove(v)
            X.add(v)

    if g.n:
        expand(set(), set(range(g.n)), set())
    return out


def brute_connected_counts(g: GraphUnion, max_n: int = 15) -> CountPolynomial:
    if g.n > max_n:
        raise CapExceededError(f"n={g.n} exceeds {max_n}: connected-subgraph scan visits 2^n subsets")
    counts = [0] * (g.n + 1)
    for mask in range(1, 1 << g.n):
        if is_connected(g, mask):
            counts[_bits(mask)] += 1
    return CountPolynomial(counts)


def brute_gamma_partition(c: CliqueCollection, max_m: int = 15) -> GammaPartition:
    """Evaluate every cell as an intersection minus a union, over all 2^m index sets."""
    if c.m > max_m:
        raise CapExceededError(f"m={c.m} exceeds {max_m}: direct evaluation visits 2^m index sets")
    everything = (1 << c.n) - 1
    cells = {}
    for J in range(1, 1 << c.m):
        inside, outside = everything, 0
        for j in range(c.m):
            if J >> j & 1:
                inside &= c.masks[j]
            else:
                outside |= c.masks[j]
        cells[J] = inside & ~outside
    return _from_cells(c, cells)


def brute_cliques_containing(g: GraphUnion, mask: int) -> int:
    """Cliques that are supersets of the clique ``mask`` (including itself)."""
    common = (1 << g.n) - 1
    for u in iter_bits(mask):
        common &= g.adj[u]
    common &= ~mask

    def count(cand: int) -> int:
        total = 1
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            total += count(cand & g.adj[v])
        return total

    return count(common)


def brute_clique_number(g: GraphUnion) -> int:
    return max((len(k) for k in brute_maximal_cliques(g)), default=0)


def random_collection(rng: random.Random, max_n: int = 15, max_m: int = 5) -> CliqueCollection:
    """Random collection with at most ``max_n`` nodes and ``max_m`` cliques."""
    m = rng.randint(1, max_m)
    pool = rng.randint(1, max_n)
    cliques = []
    for _ in range(m):
        size = rng.randint(1, max(1, min(pool, rng.choice([2, 3, 4, pool]))))
        cliques.append(rng.sample(range(1, pool + 1), size))
    return CliqueCollection.from_cliques(cliques)


@dataclass
class CheckResult:
    name: str
    formula: object
    oracle: object
    passed: bool


@dataclass
class OracleReport:
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, formula: object, oracle: object) -> None:
        self.checks.append(CheckResult(name, formula, oracle, formula == oracle))

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]


def run_checks(
    c: CliqueCollection, rng: random.Random | None = None, permutation_trials: int = 100
) -> OracleReport:
    """Compare every formula-side result for ``c`` against its brute-force counterpart."""
    from . import counting, signatures
    from .partition import adjacent, build_gamma_partition, cell_degree, check_orbit_automorphism, random_cell_permutation

    rng = rng or random.Random(0)
    report = OracleReport()
    p = build_gamma_partition(c)
    g = graph_union(c)

    cells = list(p.cells.values())
    disjoint = all(a & b == 0 for a, b in combinations(cells, 2))
    covered = sum(_bits(x) for x in cells) == c.n
    report.add("partition.disjoint_cover", disjoint and covered, True)
    rebuilt = []
    for j in range(c.m):
        union = 0
        for J, cell in p.cells.items():
            if J >> j & 1:
                union |= cell
        rebuilt.append(union)
    report.add("partition.reconstruction", rebuilt, list(c.masks))
    report.add("partition.direct_evaluation", p.cells, brute_gamma_partition(c).cells)

    labels = c.labels
    report.add(
        "partition.adjacency",
        [adjacent(p, labels[u], labels[v]) for u, v in combinations(range(c.n), 2)],
        [g.adjacent(u, v) for u, v in combinations(range(c.n), 2)],
    )
    report.add(
        "partition.cell_degree",
        [cell_degree(p, p.cell_of[u]) for u in range(c.n)],
        [g.degree(u) for u in range(c.n)],
    )
    report.add(
        "partition.orbit_automorphisms",
        all(check_orbit_automorphism(p, random_cell_permutation(p, rng)) for _ in range(permutation_trials)),
        True,
    )

    if c.n <= 15:
        report.add(
            "signatures.connected_gf",
            signatures.connected_subgraph_gf(p).to_list(),
            brute_connected_counts(g).to_list(),
        )

    gf = counting.clique_gf(p)
    pie = [counting.count_r_cliques_pie(c, r) for r in range(c.n + 2)]
    via_maximal = [counting.count_r_cliques_maximal(p, r) for r in range(c.n + 2)]
    via_gf = [1] + [gf[r] for r in range(1, c.n + 2)]
    brute = [brute_count_r_cliques(g, r) for r in range(c.n + 2)]
    covered = [brute_count_covered_r_sets(c, r) for r in range(c.n + 2)]
    report.add("counting.r_cliques_pie", pie, covered)
    report.add("counting.r_cliques_maximal", via_maximal, brute)
    report.add("counting.r_cliques_gf", via_gf, brute)
    report.add("counting.all_cliques", counting.count_all_cliques(p), sum(brute[1:]))
    report.add("counting.nontrivial", counting.count_nontrivial_cliques(c), sum(covered[3:]))
    report.add(
        "counting.edges",
        [counting.count_edges_cell_formula(p), counting.count_edges_degree(p)],
        [g.edge_count, g.edge_count],
    )
    maximal = counting.enumerate_maximal_cliques(p)
    report.add(
        "counting.maximal_cliques",
        sorted(sorted(c.index_of(x) for x in mc.nodes) for mc in maximal),
        sorted(sorted(k) for k in brute_maximal_cliques(g)),
    )
    report.add("counting.clique_number", counting.clique_number(p), brute_clique_number(g))

    seeds = [1 << u for u in range(c.n)] + [1 << u | 1 << v for u, v in g.edges()]
    report.add(
        "counting.cliques_containing",
        [counting.count_cliques_containing(p, c.labels_of(s)) for s in seeds],
        [brute_cliques_containing(g, s) for s in seeds],
    )
    return report


def verify(seed: int, instances: int, max_n: int = 15, max_m: int = 5) -> list[tuple[CliqueCollection, OracleReport]]:
    rng = random.Random(seed)
    results = []
    for _ in range(instances):
        c = random_collection(rng, max_n, max_m)
        results.append((c, run_checks(c, rng)))
    return results
