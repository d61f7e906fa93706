import pytest
from hypothesis import given

from starramsey import (
    EdgeColoring,
    all_edges,
    canonical_edge,
    color_degree_profile,
    near_one_factorization,
    one_factorization,
    regular_coloring,
)
from starramsey.errors import InvalidParameterError

from .conftest import colorings


def test_near_factorization_printed_order_x5():
    m = near_one_factorization(5)
    # eliminating the last vertex pairs 1 with x-1, then 2 with x-2
    assert m[4].edges == ((1, 4), (2, 3))
    assert m[1].edges == ((1, 3), (4, 5))


def test_near_factorization_x3_forced():
    m = near_one_factorization(3)
    assert m[2].edges == ((1, 2),)
    assert m[0].edges == ((2, 3),)
    assert m[1].edges == ((1, 3),)


@pytest.mark.parametrize("x", range(3, 52, 2))
def test_near_factorization_partitions_edges(x):
    matchings = near_one_factorization(x)
    assert len(matchings) == x
    seen = set()
    for m in matchings:
        assert len(m.edges) == (x - 1) // 2
        verts = {m.center}
        for u, v in m.edges:
            assert u < v and m.center not in (u, v)
            assert u not in verts and v not in verts
            verts.update((u, v))
            assert (u, v) not in seen
            seen.add((u, v))
    assert seen == set(all_edges(x))


@pytest.mark.parametrize("x", range(3, 52, 2))
def test_near_factorization_center_sum(x):
    # edge {a, b} sits in M_i exactly when a + b = 2i (mod x)
    for m in near_one_factorization(x):
        for a, b in m.edges:
            assert (a + b) % x == (2 * m.center) % x


def test_one_factorization_small_cases():
    assert one_factorization(2) == [[(1, 2)]]
    rounds = one_factorization(4)
    assert len(rounds) == 3 and all(len(r) == 2 for r in rounds)
    assert {e for r in rounds for e in r} == set(all_edges(4))


@pytest.mark.parametrize("p", range(2, 51, 2))
def test_one_factorization_is_valid(p):
    rounds = one_factorization(p)
    assert len(rounds) == p - 1
    seen = set()
    for r in rounds:
        covered = set()
        for u, v in r:
            covered.update((u, v))
            assert (u, v) not in seen
            seen.add((u, v))
        assert covered == set(range(1, p + 1))
    assert seen == set(all_edges(p))


@pytest.mark.parametrize("bad", [0, -2, 3, 7])
def test_one_factorization_rejects_non_even(bad):
    with pytest.raises(InvalidParameterError):
        one_factorization(bad)


@pytest.mark.parametrize("bad", [1, 2, 4, -3])
def test_near_factorization_rejects_non_odd(bad):
    with pytest.raises(InvalidParameterError):
        near_one_factorization(bad)


def test_profile_monochromatic_k4():
    colors = {e: 1 for e in all_edges(4)}
    rows = color_degree_profile(EdgeColoring(4, 2, colors))
    assert rows == [[3, 0]] * 4


def test_profile_proper_k4():
    rounds = one_factorization(4)
    colors = {e: c for c, r in enumerate(rounds, 1) for e in r}
    rows = color_degree_profile(EdgeColoring(4, 3, colors))
    assert rows == [[1, 1, 1]] * 4


def test_profile_regular_coloring_k5():
    rows = color_degree_profile(regular_coloring(2, 2))
    assert rows == [[2, 2]] * 5


@given(colorings())
def test_profile_rows_sum_to_degree(coloring):
    for row in color_degree_profile(coloring):
        assert sum(row) == coloring.p - 1


def test_canonical_edge():
    assert canonical_edge(5, 2) == (2, 5)
    with pytest.raises(InvalidParameterError):
        canonical_edge(3, 3)
