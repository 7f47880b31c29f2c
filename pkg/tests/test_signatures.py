from itertools import combinations
from math import prod

import pytest
from hypothesis import given

from cliquecover import (
    build_gamma_partition,
    connected_subgraph_gf,
    count_connected_signatures,
    count_signatures,
    count_signatures_with_support,
    count_subgraphs_with_signature,
    graph_union,
    is_connected_subgraph,
    load_collection,
    signature_of,
)
from cliquecover.oracle import brute_connected_counts, is_connected
from cliquecover.signatures import signature_of_mask, signature_tuple, support

from conftest import collections

A, C, AC, ABC = 0b001, 0b100, 0b101, 0b111

FIG1_CONNECTED = [0, 9, 24, 60, 103, 115, 82, 36, 9, 1]


def partition(text):
    return build_gamma_partition(load_collection(text))


def test_signature_of(fig1_p):
    assert signature_of(fig1_p, ["1", "3", "6"]) == {A: 1, AC: 1, ABC: 1}
    assert signature_of(fig1_p, ["1", "2", "3"]) == {AC: 1, ABC: 2}
    assert signature_of(fig1_p, []) == {}
    # dense view over all seven index sets in the order A, B, C, AB, AC, BC, ABC
    order = [0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111]
    assert signature_tuple(signature_of(fig1_p, ["1", "3", "6"]), order) == (1, 0, 0, 0, 1, 0, 1)
    with pytest.raises(KeyError):
        signature_of(fig1_p, ["10"])


def test_count_signatures(fig1_p):
    assert count_signatures(fig1_p) == 216
    distinct = {
        tuple(sorted(signature_of_mask(fig1_p, mask).items())) for mask in range(1 << fig1_p.n)
    }
    assert len(distinct) == 216
    assert count_signatures(partition("1 2 3 4")) == 5
    assert count_signatures(partition("1 2\n3 4")) == 9


def test_count_signatures_with_support(fig1_p):
    assert count_signatures_with_support(fig1_p, [A, AC, ABC]) == 4
    assert count_signatures_with_support(fig1_p, [ABC]) == 2
    assert count_signatures_with_support(fig1_p, fig1_p.support) == 8
    with pytest.raises(ValueError):
        count_signatures_with_support(fig1_p, [0b011])


def test_count_subgraphs_with_signature(fig1_p):
    assert count_subgraphs_with_signature(fig1_p, {A: 1, AC: 1, ABC: 1}) == 4
    assert count_subgraphs_with_signature(fig1_p, {J: fig1_p.gamma(J) for J in fig1_p.cells}) == 1
    assert count_subgraphs_with_signature(fig1_p, {ABC: 2}) == 1
    with pytest.raises(ValueError):
        count_subgraphs_with_signature(fig1_p, {C: 2})


def test_is_connected_subgraph(fig1_p):
    assert not is_connected_subgraph(fig1_p, ["5", "9"])
    assert is_connected_subgraph(fig1_p, ["5", "3", "9"])
    assert is_connected_subgraph(fig1_p, ["7"])
    with pytest.raises(ValueError):
        is_connected_subgraph(fig1_p, [])


def test_connected_counts():
    assert count_connected_signatures(partition("1 2 3 4")) == 4
    assert count_connected_signatures(partition("1 2\n3 4")) == 4
    assert connected_subgraph_gf(partition("1 2 3 4")).to_list() == [0, 4, 6, 4, 1]
    assert connected_subgraph_gf(partition("1 2\n3 4")).to_list() == [0, 4, 2]


def test_figure_connected(fig1_p):
    g = graph_union(fig1_p.collection)
    assert connected_subgraph_gf(fig1_p).to_list() == FIG1_CONNECTED
    assert brute_connected_counts(g).to_list() == FIG1_CONNECTED
    connected_sigs = {
        tuple(sorted(signature_of_mask(fig1_p, mask).items()))
        for mask in range(1, 1 << fig1_p.n)
        if is_connected(g, mask)
    }
    assert count_connected_signatures(fig1_p) == len(connected_sigs) == 179


def test_binomial_identity(fig1_p):
    # summing subgraph counts over every signature with a fixed support gives prod(2^g - 1)
    cells = fig1_p.support
    for k in range(1, len(cells) + 1):
        for s in combinations(cells, k):
            ranges = [range(1, fig1_p.gamma(J) + 1) for J in s]
            total = 0
            stack = [((), 0)]
            while stack:
                picked, i = stack.pop()
                if i == len(s):
                    total += count_subgraphs_with_signature(fig1_p, dict(zip(s, picked)))
                    continue
                stack.extend((picked + (x,), i + 1) for x in ranges[i])
            assert total == prod(2 ** fig1_p.gamma(J) - 1 for J in s)


@given(collections(max_n=9, max_m=4))
def test_connectivity_and_signatures_match_oracle(c):
    p = build_gamma_partition(c)
    g = graph_union(c)
    seen = set()
    for mask in range(1, 1 << c.n):
        sig = signature_of_mask(p, mask)
        seen.add(tuple(sorted(sig.items())))
        assert support(sig) == p.support_of_mask(mask)
        assert is_connected_subgraph(p, c.labels_of(mask)) == is_connected(g, mask)
    assert len(seen) + 1 == count_signatures(p)
    gf = connected_subgraph_gf(p).to_list()
    assert all(x >= 0 for x in gf)
    assert gf == brute_connected_counts(g).to_list()
