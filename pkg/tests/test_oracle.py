import pytest

from starramsey import check_certificate, classify, witness_coloring
from starramsey.errors import InfeasibleInstanceError, InvalidParameterError
from starramsey.oracle import max_min_star_colors, ramsey_value

from .conftest import brute_max_min_star


def test_max_min_examples():
    assert max_min_star_colors(3, 2, 2).value == 1
    # a proper 3-edge-coloring of K_4 maximizes both of these
    assert max_min_star_colors(4, 3, 3).value == 3
    assert max_min_star_colors(4, 3, 4).value == 3
    # a 2-star holds two edges, so two colors is the ceiling
    assert max_min_star_colors(4, 2, 3).value == 2


@pytest.mark.parametrize("p", (3, 4, 5))
@pytest.mark.parametrize("t", (2, 3))
def test_pruned_search_equals_plain_enumeration(p, t):
    # instances up to 10 edges: the bound and the canonical color rule
    # must not change any value
    for n in range(1, p):
        assert max_min_star_colors(p, n, t).value == brute_max_min_star(p, n, t)


def test_ramsey_examples():
    assert ramsey_value(2, 2, 1, 6).value == 3
    assert ramsey_value(2, 3, 1, 6).value == 5
    assert ramsey_value(3, 4, 2, 5).value == 5


def test_ramsey_exceeds_p_max():
    res = ramsey_value(3, 2, 1, 5)
    assert res.value is None
    assert [p for p, _ in res.checked] == [4, 5]


def test_threshold_monotone_in_p():
    # once every coloring of K_p forces a cheap star, larger orders do too
    s = 1
    values = {p: max_min_star_colors(p, 3, 2).value for p in range(4, 7)}
    first = min((p for p, v in values.items() if v <= s), default=None)
    assert first is not None
    assert all(values[p] <= s for p in values if p >= first)


def test_budget_errors_are_explicit():
    with pytest.raises(InfeasibleInstanceError):
        max_min_star_colors(8, 3, 2)             # 28 edges over default budget
    with pytest.raises(InfeasibleInstanceError):
        max_min_star_colors(4, 2, 5)             # t over default color budget
    with pytest.raises(InvalidParameterError):
        max_min_star_colors(4, 4, 2)             # no 4-star in K_4
    # a raised budget admits the same instance
    assert max_min_star_colors(8, 3, 2, edge_budget=28).value >= 1


def test_deterministic_across_workers():
    for n, t, s in ((3, 2, 1), (3, 4, 2), (2, 3, 1)):
        runs = [ramsey_value(n, t, s, 7, threads=w) for w in (1, 2, 8)]
        assert len({r.value for r in runs}) == 1
        assert len({(r.stats.nodes, r.stats.canonical_skips, r.stats.bound_prunes)
                    for r in runs}) == 1


def test_stats_are_populated():
    res = max_min_star_colors(5, 3, 3)
    assert res.stats.nodes > 0
    assert res.stats.canonical_skips > 0


def test_certificate_pass_implies_oracle_exceeds_order():
    for n, t, s in ((2, 2, 1), (3, 3, 2), (3, 4, 2), (2, 3, 2)):
        coloring, _ = witness_coloring(n, t, s)
        assert check_certificate(coloring, n, s).passed
        res = ramsey_value(n, t, s, p_max=coloring.p + 3)
        assert res.value is None or res.value > coloring.p


def test_oracle_matches_classifier_where_feasible():
    for t in (2, 3, 4):
        budgets = [t - 1] + ([t - 2] if t >= 3 else [])
        for s in budgets:
            for n in (2, 3, 4):
                want = classify(n, t, s).value
                if want * (want - 1) // 2 > 21:
                    continue
                assert ramsey_value(n, t, s, p_max=want + 1).value == want
