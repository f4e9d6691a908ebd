import pytest

from ramsey_turan.canonical import (
    are_isomorphic,
    canonical_form,
)
from ramsey_turan.graph import (
    complete_bipartite,
    cycle,
    empty_graph,
    is_triangle_free,
    path,
)
from ramsey_turan.search import (
    BELOW_THIRD_STATUS,
    INFEASIBLE,
    LOWER_BOUND_ONLY,
    NODE_LIMIT,
    PROVEN,
    SOLVED,
    SearchException,
    SearchProblem,
    SearchReport,
    _first_witness,
    _table_row,
    best_known,
    brute_force_ex,
    conjecture_band,
    edge_bound,
    ex_search,
    verify_table,
)
from ramsey_turan.solvers import independence_number
from tests.helpers import (
    pentagon,
    wagner,
)


def _without_stats(report):
    return {k: v for k, v in report.items() if k != 'stats'}


def _check_witnesses(report):
    graphs = report.witness_graphs()
    assert graphs
    for g in graphs:
        assert g.order == report.n
        assert g.edge_count == report.max_edges
        assert is_triangle_free(g)
        assert independence_number(g) <= report.s
    return graphs


def test_search_problem_defaults():
    problem = SearchProblem(n=5, s=2)
    assert problem.witnesses is False
    assert problem.workers == 1
    assert problem.split_depth is None
    assert repr(problem) == '<SearchProblem n=5 s=2>'


@pytest.mark.parametrize('kwargs, message', [
    (dict(n=5), 'n and s are required'),
    (dict(n=15, s=3), 'n must be between 0 and 14, got 15'),
    (dict(n=5, s=6), 'need 0 <= s <= n, got n=5, s=6'),
    (dict(n=5, s=2, workers=0), 'workers must be at least 1, got 0'),
    (dict(n=5, s=2, node_limit=0), 'node_limit must be at least 1, got 0'),
    (dict(n=5, s=2, split_depth=-1), 'split_depth must be nonnegative, got -1'),
])
def test_search_problem_errors(kwargs, message):
    with pytest.raises(SearchException) as e:
        SearchProblem(**kwargs)
    assert str(e.value) == message


def test_ex_search_takes_a_problem_or_keywords():
    assert _without_stats(ex_search(SearchProblem(n=4, s=2))) == _without_stats(ex_search(n=4, s=2))
    with pytest.raises(AssertionError):
        ex_search(SearchProblem(n=4, s=2), n=4)


def test_best_known():
    assert best_known(12, 5).edge_count == 29
    assert best_known(5, 2) == pentagon()
    assert best_known(6, 3) == complete_bipartite(3, 3)
    assert best_known(7, 4) == complete_bipartite(4, 3)
    assert best_known(9, 3) is None
    assert best_known(0, 0) is None


def test_edge_bound():
    assert edge_bound(empty_graph(0), 5, 2) == 5
    assert edge_bound(pentagon(), 5, 2) == 5
    assert edge_bound(path(3), 5, 2) == 5
    assert edge_bound(empty_graph(2), 4, 3) == 6


def test_pentagon():
    report = ex_search(n=5, s=2, witnesses=True)
    assert report.status == SOLVED
    assert report.max_edges == 5
    assert report.lower_bound == 5
    assert report.witnesses == [canonical_form(cycle(5)).decode('ascii')]
    assert are_isomorphic(_check_witnesses(report)[0], pentagon())


def test_ramsey_three_three_is_infeasible():
    report = ex_search(n=6, s=2)
    assert report.status == INFEASIBLE
    assert report.max_edges is None
    assert report.lower_bound is None
    assert report.witnesses == []


@pytest.mark.parametrize('n, s, status, max_edges, witnesses', [
    (0, 0, SOLVED, 0, ['?']),
    (1, 1, SOLVED, 0, ['@']),
    (1, 0, INFEASIBLE, None, []),
    (3, 1, INFEASIBLE, None, []),
    (2, 1, SOLVED, 1, ['A_']),
])
def test_small_cases(n, s, status, max_edges, witnesses):
    report = ex_search(n=n, s=s)
    assert report.status == status
    assert report.max_edges == max_edges
    assert report.witnesses == witnesses


def test_single_witness_without_collection():
    report = ex_search(n=6, s=3)
    assert report.max_edges == 9
    assert report.witnesses == [canonical_form(complete_bipartite(3, 3)).decode('ascii')]


def test_infeasible_cases():
    assert ex_search(n=7, s=2).status == INFEASIBLE
    assert ex_search(n=4, s=1).status == INFEASIBLE
    assert ex_search(n=6, s=2, witnesses=True).witnesses == []


def test_first_witness_in_exploration_order():
    assert _first_witness(5, 2, 5) == canonical_form(cycle(5))
    assert _first_witness(4, 2, 4) == canonical_form(cycle(4))


@pytest.mark.parametrize('n', range(6))
def test_agrees_with_brute_force(n):
    for s in range(n + 1):
        report = ex_search(n=n, s=s, witnesses=True)
        expected = brute_force_ex(n, s)
        assert report.max_edges == expected.max_edges, (n, s)
        assert report.witnesses == expected.witnesses, (n, s)
        assert report.status == (INFEASIBLE if expected.max_edges is None else SOLVED)


@pytest.mark.slow
@pytest.mark.parametrize('n', [6])
def test_agrees_with_brute_force_slow(n):
    test_agrees_with_brute_force(n)


def test_brute_force_limit():
    with pytest.raises(SearchException) as e:
        brute_force_ex(8, 3)
    assert str(e.value) == 'brute force is limited to n <= 7, got 8'


def test_split_depth_does_not_change_the_result():
    expected = _without_stats(ex_search(n=7, s=3, witnesses=True))
    for depth in [0, 1, 3, 6, 10]:
        assert _without_stats(ex_search(n=7, s=3, witnesses=True, split_depth=depth)) == expected


def test_workers_do_not_change_the_result():
    single = ex_search(n=7, s=3, witnesses=True, workers=1)
    double = ex_search(n=7, s=3, witnesses=True, workers=2)
    assert _without_stats(single) == _without_stats(double)
    assert single.max_edges == 10
    assert double.stats.workers == 2
    assert double.stats.subtrees > 1


def test_node_limit_is_reported():
    report = ex_search(n=9, s=4, node_limit=10)
    assert report.status == NODE_LIMIT
    assert report.lower_bound == 17
    assert report.max_edges >= 17
    assert report.witnesses


def test_stats():
    report = ex_search(n=5, s=2)
    assert report.stats.nodes > 0
    assert report.stats.elapsed >= 0
    assert report.stats.workers == 1


def test_conjecture_band():
    assert conjecture_band(8) == []
    assert conjecture_band(11) == [4]
    assert conjecture_band(13) == []
    assert conjecture_band(19) == [7]


def test_verify_table():
    table = verify_table(5)
    assert table.passed
    assert len(table.rows) == 20
    rows = {(row.n, row.s): row for row in table.rows}
    assert rows[5, 2].status == PROVEN
    assert rows[5, 2].ex == 5
    assert rows[5, 2].construction == 5
    assert rows[5, 2].conjecture_ok is True
    assert rows[5, 1].status == INFEASIBLE
    assert rows[4, 4].ex == 4
    assert rows[1, 0].status == INFEASIBLE


def test_verify_table_limits():
    with pytest.raises(SearchException) as e:
        verify_table(15)
    assert str(e.value) == 'n_max must be between 0 and 14, got 15'


@pytest.mark.slow
@pytest.mark.parametrize('n, s, expected', [
    (5, 2, 5),
    (7, 3, 10),
    (9, 4, 17),
    (12, 5, 29),
    (8, 3, 12),
    (10, 4, 20),
    (8, 4, 16),
    (11, 4, 22),
])
def test_theorem_values(n, s, expected):
    report = ex_search(n=n, s=s, witnesses=True)
    assert report.status == SOLVED
    assert report.max_edges == expected
    _check_witnesses(report)


@pytest.mark.slow
def test_thirteen_five():
    report = ex_search(n=13, s=5, workers=8)
    assert report.status == SOLVED
    assert report.max_edges == 32


@pytest.mark.slow
def test_wagner_graph_is_among_the_witnesses():
    report = ex_search(n=8, s=3, witnesses=True)
    assert canonical_form(wagner()).decode('ascii') in report.witnesses


@pytest.mark.slow
def test_reports_are_identical_across_worker_counts():
    reports = [_without_stats(ex_search(n=10, s=4, witnesses=True, workers=workers)) for workers in [1, 2, 8]]
    assert reports[0] == reports[1] == reports[2]


@pytest.mark.slow
def test_verify_table_up_to_nine():
    table = verify_table(9)
    assert table.passed
    rows = {(row.n, row.s): row for row in table.rows}
    assert rows[9, 4].ex == 17
    assert rows[9, 4].status == PROVEN
    assert rows[9, 3].status == INFEASIBLE
    for n in range(1, 10):
        assert rows[n, n].ex == n * n // 4
        for s in range(n):
            if rows[n, s].ex is not None:
                assert rows[n, s].ex <= rows[n, s + 1].ex


@pytest.mark.slow
def test_verify_table_eleven():
    table = verify_table(11, n_min=11)
    rows = {row.s: row for row in table.rows}
    assert rows[4].status == PROVEN
    assert rows[4].ex == rows[4].trivial == 22
    assert table.passed


def _solved(n, s, max_edges):
    return SearchReport(n=n, s=s, status=SOLVED, max_edges=max_edges, lower_bound=None, witnesses=[], stats=None)


def test_table_row_in_the_conjecture_band():
    row = _table_row(_solved(30, 11, 164), None)
    assert row.k == 4
    assert row.g_floor == 164
    assert row.trivial == 165
    assert row.construction == 164
    assert row.status == LOWER_BOUND_ONLY
    assert row.conjecture_ok is True
    assert row.failures == []


def test_table_row_failures():
    row = _table_row(_solved(30, 11, 170), _table_row(_solved(30, 10, 171), None))
    assert row.conjecture_ok is False
    assert row.failures == [
        "ex = 170 exceeds the trivial bound 165",
        "ex(30,10) = 171 exceeds ex = 170",
    ]
    assert _table_row(_solved(30, 11, 160), None).failures == ["ex = 160 is below the construction with 164 edges"]


def test_table_row_below_a_third():
    row = _table_row(_solved(12, 4, 24), None)
    assert row.status == BELOW_THIRD_STATUS
    assert row.region == "below-third"
    assert row.construction is None
    assert row.failures == []


def test_table_row_proven_mismatch():
    row = _table_row(_solved(10, 4, 19), None)
    assert row.status == PROVEN
    assert row.failures == ["ex = 19 is below the construction with 20 edges", "ex = 19 differs from the proven value 20"]
