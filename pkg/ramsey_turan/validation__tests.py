import pytest

from ramsey_turan import conf
from ramsey_turan.base import (
    mask_of,
    popcount,
)
from ramsey_turan.canonical import canonical_form
from ramsey_turan.constructions import (
    andrasfai,
    extremal_blowup,
)
from ramsey_turan.graph import (
    complete_bipartite,
    complete_graph,
    empty_graph,
    new_graph,
    path,
    star,
)
from ramsey_turan.solvers import maximum_independent_set
from ramsey_turan.validation import (
    AuditReport,
    choose_q,
    expected_template,
    extremal_family_audit,
    high_degree_set,
    joined_pair_audit,
    minimal_andrasfai_template,
    prop32_audit,
    three_sets_audit,
)
from tests.helpers import (
    pentagon,
    wagner,
)


def _checks(report):
    return {c.name: c.passed for c in report.checks}


def _detail(report, name):
    return next(c.detail for c in report.checks if c.name == name)


def _unmatchable_z():
    """
    a = {0, 1}, vertex 2 is joined to a and to q = {3}, and the path 3-4-5 keeps α(G - a) at 2.
    """
    return new_graph(6, [(0, 2), (1, 2), (2, 3), (3, 4), (4, 5)]), mask_of([0, 1]), 1 << 3


def test_audit_report():
    report = AuditReport('x')
    assert report.check('first', True) is True
    report.skip('second', 'too big')
    assert report.passed
    assert report.failures() == []
    report.check('third', False, 'broken')
    assert not report.passed
    assert [c.name for c in report.failures()] == ['third']
    assert repr(report) == '<AuditReport x passed=False>'
    assert report.as_struct() == dict(
        subject='x',
        passed=False,
        checks=[
            dict(name='first', passed=True, detail=''),
            dict(name='second', passed=None, detail='too big'),
            dict(name='third', passed=False, detail='broken'),
        ],
    )


def test_audit_report_merge_is_ordered_by_subject():
    b = AuditReport('b')
    b.check('one', True)
    a = AuditReport('a')
    a.check('two', False)
    merged = AuditReport.merge([b, a])
    assert merged.subject == 'merged'
    assert [c.name for c in merged.checks] == ['a: two', 'b: one']
    assert not merged.passed


def test_high_degree_set_and_choose_q():
    assert high_degree_set(star(3), 1 << 1) == 1 << 0
    assert high_degree_set(pentagon(), mask_of([0, 1])) == 0
    assert choose_q(pentagon(), mask_of([0, 1])) == 1 << 2
    assert choose_q(complete_bipartite(3, 3), mask_of([0, 1, 2])) == mask_of([3, 4, 5])


def test_prop32_audit_on_an_extremal_blowup():
    g, _, _ = extremal_blowup(12, 5)
    a = maximum_independent_set(g)
    assert popcount(a) == 5
    report = prop32_audit(g, a, choose_q(g, a))
    assert report.passed, report.failures()
    assert report.subject == canonical_form(g).decode('ascii')
    assert [c.name for c in report.checks] == [
        'range',
        'triangle-free',
        'a independent',
        'alpha outside a',
        'q placement',
        'z matchable',
        'bound',
    ]
    assert report.checks[-1].detail == 'e=29 bound=29 tight'


def test_prop32_audit_without_hypotheses_skips_the_bound():
    report = prop32_audit(complete_graph(3), 1 << 0, 0)
    checks = _checks(report)
    assert checks['triangle-free'] is False
    assert 'bound' not in checks
    assert not report.passed


def test_prop32_audit_reports_an_unmatchable_z():
    g, a, q = _unmatchable_z()
    report = prop32_audit(g, a, q)
    checks = _checks(report)
    assert checks['alpha outside a'] is True
    assert checks['q placement'] is True
    assert checks['z matchable'] is False
    assert _detail(report, 'z matchable') == "Z'=[2] deficient=[2]"
    assert 'bound' not in checks


def test_prop32_audit_skips_large_z(monkeypatch):
    monkeypatch.setattr(conf, 'MAX_AUDITED_Z', 0)
    g, a, q = _unmatchable_z()
    report = prop32_audit(g, a, q)
    assert _checks(report)['z matchable'] is None
    assert _detail(report, 'z matchable') == 'not audited, |Z| = 1 > 0'
    assert 'bound' not in _checks(report)
    assert report.passed


def test_joined_pair_audit():
    report = joined_pair_audit(pentagon(), mask_of([0, 1]), 1 << 3)
    assert report.passed
    assert report.checks[-1].name == 'bound'
    assert report.checks[-1].detail == 'e=5 bound=5'


def test_joined_pair_audit_failure():
    report = joined_pair_audit(pentagon(), mask_of([0, 1]), 1 << 4)
    assert _checks(report)['a_prime joined to a'] is False
    assert 'bound' not in _checks(report)


def test_three_sets_audit_on_the_wagner_graph():
    report = three_sets_audit(wagner(), mask_of([0, 1, 2]), mask_of([3, 4, 5]), mask_of([4, 5, 6]))
    assert report.passed, report.failures()
    checks = _checks(report)
    for name in [
        'hypotheses',
        'structure',
        'edges non-decreasing',
        'alpha preserved',
        'triangle-free',
        'reduced order',
        'reduction: z matchable',
        'reduction: bound',
        'edge decomposition',
        'bound',
    ]:
        assert checks[name] is True, name
    assert _detail(report, 'reduced order') == 'n*=5 s*=2'
    assert _detail(report, 'reduction: q placement') == 'q=[3] z=[4]'
    assert _detail(report, 'edge decomposition') == '12 = 7 + 5'
    assert _detail(report, 'bound') == 'e=12 pipeline=12 bound=12'


def test_three_sets_audit_with_broken_hypotheses():
    report = three_sets_audit(wagner(), mask_of([0, 1, 2]), mask_of([3, 4, 5]), mask_of([3, 4, 5]))
    assert report.checks == [dict(name='hypotheses', passed=False, detail='overlap: |b∩c| = 3 exceeds n - 2s = 2')]
    assert not report.passed


@pytest.mark.parametrize('g, expected', [
    (wagner(), 3),
    (pentagon(), 2),
    (complete_bipartite(2, 3), 1),
    (empty_graph(3), 1),
    (complete_graph(3), None),
    (andrasfai(5), 5),
])
def test_minimal_andrasfai_template(g, expected):
    assert minimal_andrasfai_template(g) == expected


@pytest.mark.parametrize('n, s, expected', [
    (12, 5, 2),
    (5, 2, 3),
    (8, 3, 3),
    (13, 5, 3),
    (9, 3, None),
])
def test_expected_template(n, s, expected):
    assert expected_template(n, s) == expected


def test_extremal_family_audit():
    report = extremal_family_audit([pentagon()], 5, 2)
    assert report.passed, report.failures()
    assert report.subject == 'ex(5,2)'
    assert _detail(report, 'witness 0: template') == 'blow-up of Γ_2'


def test_extremal_family_audit_of_no_witnesses():
    report = extremal_family_audit([], 5, 2)
    assert report.checks == []
    assert report.passed


def test_extremal_family_audit_flags_a_bad_witness():
    report = extremal_family_audit([pentagon(), path(5)], 5, 2, max_edges=5)
    failed = {c.name.split(': ', 1)[1] for c in report.failures()}
    assert {'alpha', 'edges'} <= failed
    assert not report.passed


def test_extremal_family_audit_flags_a_witness_below_the_independence_bound():
    report = extremal_family_audit([wagner()], 8, 4)
    checks = _checks(report)
    assert checks['witness 0: alpha'] is True
    assert checks['witness 0: two disjoint independent sets'] is False
    assert _detail(report, 'witness 0: two disjoint independent sets') == 's=4'
    assert not report.passed


def test_extremal_family_audit_skips_disjoint_sets_above_half():
    report = extremal_family_audit([complete_bipartite(2, 3)], 5, 3)
    assert 'witness 0: two disjoint independent sets' not in _checks(report)
