from itertools import combinations

import pytest

from cliquecover import (
    CapExceededError,
    enumerate_intersecting_over,
    enumerate_maximal_intersecting,
    enumerate_path_intersecting_over,
    is_intersecting,
    is_maximal_intersecting,
    is_path_intersecting,
)

A, B, C = 0b001, 0b010, 0b100
AB, AC, BC, ABC = A | B, A | C, B | C, A | B | C

LAMBDA = {1: 1, 2: 2, 3: 4, 4: 12, 5: 81}


def brute_maximal(m):
    # every intersecting family on [m], kept when no single extra set fits
    universe = range(1, 1 << m)
    out = []
    for bits in range(1, 1 << len(universe)):
        fam = [J for i, J in enumerate(universe) if bits >> i & 1]
        if is_intersecting(fam) and not any(
            J not in fam and all(J & I for I in fam) for J in universe
        ):
            out.append(frozenset(fam))
    return out


def test_intersecting():
    assert is_intersecting([A, AC, ABC])
    assert not is_intersecting([B, C])
    assert is_intersecting([])


def test_path_intersecting():
    assert is_path_intersecting([A, B, C, AB, AC])
    assert not is_intersecting([A, B, C, AB, AC])
    assert not is_path_intersecting([A, B])
    assert is_path_intersecting([])
    assert is_path_intersecting([B])


def test_maximal_intersecting():
    assert is_maximal_intersecting([C, AC, BC, ABC], 3)
    assert not is_maximal_intersecting([A, AC, ABC], 3)
    assert is_maximal_intersecting([1], 1)
    with pytest.raises(ValueError):
        is_maximal_intersecting([A, B], 3)


def test_maximal_for_three():
    found = set(enumerate_maximal_intersecting(3))
    stars = {frozenset(J for J in range(1, 8) if J & bit) for bit in (A, B, C)}
    assert found == stars | {frozenset([AB, AC, BC, ABC])}


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_maximal_matches_brute_force(m):
    found = enumerate_maximal_intersecting(m)
    assert len(found) == len(set(found)) == LAMBDA[m]
    assert set(found) == set(brute_maximal(m))
    assert all(len(f) == 2 ** (m - 1) and is_maximal_intersecting(f, m) for f in found)


def test_lambda_six():
    assert len(enumerate_maximal_intersecting(6)) == 2646


def test_cap():
    with pytest.raises(CapExceededError):
        enumerate_maximal_intersecting(8)
    with pytest.raises(ValueError):
        enumerate_maximal_intersecting(0)


def subsets(cells):
    for k in range(1, len(cells) + 1):
        yield from combinations(cells, k)


def test_streams_small():
    assert list(enumerate_intersecting_over([1])) == [(1,)]
    assert sorted(enumerate_intersecting_over([1, 2])) == [(1,), (2,)]
    assert sorted(enumerate_path_intersecting_over([1, 2])) == [(1,), (2,)]


def test_streams_over_figure_support(fig1_p):
    cells = fig1_p.support
    inter = list(enumerate_intersecting_over(cells))
    path = list(enumerate_path_intersecting_over(cells))
    assert len(inter) == len(set(inter)) == 23
    assert len(path) == len(set(path)) == 51
    assert {frozenset(f) for f in inter} == {frozenset(s) for s in subsets(cells) if is_intersecting(s)}
    assert {frozenset(f) for f in path} == {frozenset(s) for s in subsets(cells) if is_path_intersecting(s)}
    assert set(inter) <= set(path)
