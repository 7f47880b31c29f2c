"""Clique collections, their graph union, and the text formats they are read from."""

from __future__ import annotations

import io
import json
import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import IO, Iterable, Iterator, Sequence

DEFAULT_MAX_CLIQUES = 20


class CollectionError(ValueError):
    """Raised for malformed clique input."""


class CapExceededError(ValueError):
    """Raised when a size cap guarding an exponential computation is exceeded."""


def check_clique_cap(m: int, cap: int | None) -> None:
    cap = DEFAULT_MAX_CLIQUES if cap is None else cap
    if m > cap:
        raise CapExceededError(
            f"collection has m={m} cliques but the cap is {cap}: the partition is indexed by "
            f"2^m = {2 ** m} index sets, so cost grows exponentially in m; raise the cap explicitly"
        )


def label_key(label: str) -> tuple:
    """Sort key putting integer-like labels in numeric order before other labels."""
    if label.isdigit():
        return (0, int(label), label)
    return (1, 0, label)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class CliqueCollection:
    """An ordered list of cliques over interned node labels.

    ``labels[i]`` is the label of internal node ``i``; ``masks[j]`` is the
    node bitmask of clique ``j`` (0-based).  ``names`` are display names used
    for index sets; they default to 1-based ordinals.
    """

    labels: tuple[str, ...]
    masks: tuple[int, ...]
    names: tuple[str, ...] = ()
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.masks:
            raise CollectionError("a collection needs at least one clique")
        if any(mask == 0 for mask in self.masks):
            raise CollectionError("cliques must be non-empty")
        if len(set(self.labels)) != len(self.labels):
            raise CollectionError("node labels must be unique")
        union = 0
        for mask in self.masks:
            union |= mask
        if union != (1 << len(self.labels)) - 1:
            raise CollectionError("every node must belong to at least one clique")
        if not self.names:
            object.__setattr__(self, "names", tuple(str(j + 1) for j in range(len(self.masks))))
        elif len(self.names) != len(self.masks):
            raise CollectionError(f"got {len(self.names)} clique names for {len(self.masks)} cliques")
        elif len(set(self.names)) != len(self.names):
            raise CollectionError("clique names must be unique")
        object.__setattr__(self, "_index", {label: i for i, label in enumerate(self.labels)})

    @classmethod
    def from_cliques(
        cls, cliques: Iterable[Iterable[object]], names: Sequence[str] | None = None
    ) -> CliqueCollection:
        """Build a collection, interning labels in first-appearance order."""
        index: dict[str, int] = {}
        masks = []
        for clique in cliques:
            mask = 0
            for raw in clique:
                label = str(raw)
                if label not in index:
                    index[label] = len(index)
                mask |= 1 << index[label]
            masks.append(mask)
        return cls(tuple(index), tuple(masks), tuple(names or ()))

    @property
    def m(self) -> int:
        return len(self.masks)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def cliques(self) -> list[frozenset[str]]:
        return [self.labels_of(mask) for mask in self.masks]

    @property
    def duplicate_pairs(self) -> list[tuple[int, int]]:
        """1-based ordinal pairs of cliques with identical node sets."""
        return [
            (j + 1, k + 1)
            for j, k in combinations(range(self.m), 2)
            if self.masks[j] == self.masks[k]
        ]

    @property
    def has_duplicates(self) -> bool:
        return len(set(self.masks)) != len(self.masks)

    def index_of(self, label: object) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise KeyError(f"unknown node {label!r}") from None

    def mask_of(self, nodes: Iterable[object]) -> int:
        """Node bitmask for an iterable of labels (non-strings are passed through ``str``)."""
        mask = 0
        for node in nodes:
            mask |= 1 << self.index_of(node)
        return mask

    def labels_of(self, mask: int) -> frozenset[str]:
        return frozenset(self.labels[i] for i in iter_bits(mask))

    def sorted_labels(self, mask: int) -> list[str]:
        return sorted((self.labels[i] for i in iter_bits(mask)), key=label_key)

    def index_set(self, members: Iterable[object]) -> int:
        """Index-set bitmask from clique names or 1-based ordinals."""
        by_name = {name: j for j, name in enumerate(self.names)}
        mask = 0
        for member in members:
            key = str(member)
            if key in by_name:
                j = by_name[key]
            elif key.isdigit() and 1 <= int(key) <= self.m:
                j = int(key) - 1
            else:
                raise KeyError(f"unknown clique {member!r}")
            mask |= 1 << j
        return mask

    def index_names(self, J: int) -> list[str]:
        return [self.names[j] for j in iter_bits(J)]

    def cell_label(self, J: int) -> str:
        """Compact display label for an index set, e.g. ``AC``."""
        parts = self.index_names(J)
        if all(len(name) == 1 for name in self.names):
            return "".join(parts)
        return "{" + ",".join(parts) + "}"

    def with_names(self, names: Sequence[str]) -> CliqueCollection:
        return CliqueCollection(self.labels, self.masks, tuple(names))


@dataclass(frozen=True)
class GraphUnion:
    """Simple undirected graph on nodes ``0..n-1`` stored as neighbour bitmasks."""

    labels: tuple[str, ...]
    adj: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.adj)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if v > u]

    @property
    def edge_count(self) -> int:
        return sum(bin(a).count("1") for a in self.adj) // 2

    def degree(self, u: int) -> int:
        return bin(self.adj[u]).count("1")

    def matrix(self) -> list[list[int]]:
        return [[int(self.adjacent(u, v)) for v in range(self.n)] for u in range(self.n)]


def graph_union(c: CliqueCollection) -> GraphUnion:
    adj = [0] * c.n
    for mask in c.masks:
        for u in iter_bits(mask):
            adj[u] |= mask
    return GraphUnion(c.labels, tuple(a & ~(1 << u) for u, a in enumerate(adj)))


_COMMENT = re.compile(r"#.*")


def load_collection(
    source: IO[str] | str, format: str = "lines", names: Sequence[str] | None = None
) -> CliqueCollection:
    """Read a collection from a text stream (or a string) in ``lines`` or ``json`` format."""
    text = source if isinstance(source, str) else source.read()
    if format == "lines":
        cliques = []
        lines = text.splitlines()
        for lineno, line in enumerate(lines, start=1):
            content = _COMMENT.sub("", line).split()
            if content:
                cliques.append(content)
            elif "#" in line:
                continue
            elif any(rest.strip() for rest in lines[lineno:]):
                # a blank line between cliques is an empty clique; trailing blanks are not
                raise CollectionError(f"line {lineno}: empty clique")
    elif format == "json":
        try:
            data = json.loads(text) if text.strip() else None
        except json.JSONDecodeError as exc:
            raise CollectionError(f"invalid JSON: {exc}") from None
        if data is None:
            cliques = []
        else:
            raw = data.get("cliques") if isinstance(data, dict) else data
            if not isinstance(raw, list) or not all(isinstance(c, list) for c in raw):
                raise CollectionError('expected {"cliques": [[label, ...], ...]}')
            for pos, clique in enumerate(raw, start=1):
                if not clique:
                    raise CollectionError(f"clique {pos}: empty clique")
            cliques = [[str(x) for x in clique] for clique in raw]
    else:
        raise CollectionError(f"unknown input format {format!r}")
    if not cliques:
        raise CollectionError("input contains no cliques")
    return CliqueCollection.from_cliques(cliques, names)


def serialize_collection(c: CliqueCollection, format: str = "lines") -> str:
    """Byte-stable text form: cliques in input order, labels in first-appearance order."""
    rows = [[c.labels[i] for i in iter_bits(mask)] for mask in c.masks]
    if format == "lines":
        return "".join(" ".join(row) + "\n" for row in rows)
    if format == "json":
        return json.dumps({"cliques": rows}, separators=(",", ":")) + "\n"
    raise CollectionError(f"unknown output format {format!r}")


@dataclass(frozen=True)
class ValidityReport:
    """Outcome of the three r-uniform cover conditions."""

    r: int
    n: int
    total: int
    clique_sums: tuple[int, ...]
    pair_sums: dict[tuple[int, int], int]

    @property
    def total_ok(self) -> bool:
        return self.total == self.n

    @property
    def bad_cliques(self) -> list[int]:
        return [j + 1 for j, s in enumerate(self.clique_sums) if s != self.r]

    @property
    def bad_pairs(self) -> list[tuple[int, int]]:
        return [pair for pair, s in self.pair_sums.items() if s >= self.r]

    @property
    def cliques_ok(self) -> bool:
        return not self.bad_cliques

    @property
    def pairs_ok(self) -> bool:
        return not self.bad_pairs

    @property
    def valid(self) -> bool:
        return self.total_ok and self.cliques_ok and self.pairs_ok


def validate_r_collection(c: CliqueCollection, r: int, max_cliques: int | None = None) -> ValidityReport:
    """Check the node-count, clique-size and distinctness conditions on the cell sizes."""
    from .partition import build_gamma_partition

    if r < 1:
        raise ValueError("r must be positive")
    p = build_gamma_partition(c, max_cliques=max_cliques)
    total = sum(p.gamma(J) for J in p.support)
    clique_sums = tuple(
        sum(p.gamma(J) for J in p.support if J >> j & 1) for j in range(c.m)
    )
    pair_sums = {}
    for j, k in combinations(range(c.m), 2):
        both = 1 << j | 1 << k
        pair_sums[(j + 1, k + 1)] = sum(p.gamma(J) for J in p.support if J & both == both)
    return ValidityReport(r, c.n, total, clique_sums, pair_sums)


def is_single_clique(c: CliqueCollection, I: int, r: int, max_cliques: int | None = None) -> bool:
    """True iff the r-cliques indexed by ``I`` are all the same node set.

    Decided from the cell sizes alone: the cells whose index set contains
    ``I`` must hold exactly ``r`` nodes.
    """
    from .partition import build_gamma_partition

    if I <= 0 or I >> c.m:
        raise ValueError(f"index set must be a non-empty subset of 1..{c.m}")
    wrong = [j + 1 for j in iter_bits(I) if bin(c.masks[j]).count("1") != r]
    if wrong:
        raise ValueError(f"cliques {wrong} do not have {r} nodes")
    p = build_gamma_partition(c, max_cliques=max_cliques)
    return sum(p.gamma(J) for J in p.support if J & I == I) == r


def read_path(path: str | None, format: str, names: Sequence[str] | None = None) -> CliqueCollection:
    if path is None or path == "-":
        import sys

        return load_collection(sys.stdin, format, names)
    with io.open(path, encoding="utf-8") as fh:
        return load_collection(fh, format, names)
