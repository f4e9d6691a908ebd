"""
Auditors for the structural statements used in the upper bound proofs.

An audit never raises for a failed hypothesis: every check becomes an entry of an `AuditReport`, and the bound a
statement promises is only checked once all of its hypotheses passed. A check can also be skipped (`passed` is
None), e.g. when enumerating the independent subsets of a large set is out of reach; skipped checks do not fail
the report.
"""
from tri_struct import Struct

from ramsey_turan import conf
from ramsey_turan.base import (
    iter_bits,
    mask_of,
    members,
    popcount,
)
from ramsey_turan.canonical import canonical_form
from ramsey_turan.constructions import (
    andrasfai,
    is_blowup_of,
)
from ramsey_turan.formulas import (
    g2_value,
    g3_value,
    wagner_reduction_numbers,
)
from ramsey_turan.graph import (
    delete_vertices,
    is_independent,
    is_triangle_free,
    restrict_mask,
)
from ramsey_turan.solvers import (
    has_independent_set,
    hall_violator,
    independence_number,
    is_matchable,
    iter_independent_sets,
    two_disjoint_independent_sets,
)
from ramsey_turan.trace import (
    log,
    trace,
)
from ramsey_turan.transforms import (
    PreconditionException,
    enforce_triple_structure,
)

# Largest k for which Γ_k is small enough to serve as a blow-up template.
MAX_CLASSIFIED_K = (conf.MAX_TEMPLATE_ORDER + 1) // 3


class AuditReport:
    def __init__(self, subject):
        self.subject = subject
        self.checks = []

    def __repr__(self):
        return f'<AuditReport {self.subject} passed={self.passed}>'

    def check(self, name, passed, detail=''):
        self.checks.append(Struct(name=name, passed=passed, detail=detail))
        if passed is False:
            log.info('audit %s: %s failed %s', self.subject, name, detail)
        return passed

    def skip(self, name, detail):
        return self.check(name, None, detail)

    def extend(self, other, prefix):
        for c in other.checks:
            self.checks.append(Struct(name=f'{prefix}{c.name}', passed=c.passed, detail=c.detail))

    @property
    def passed(self):
        return all(c.passed is not False for c in self.checks)

    def failures(self):
        return [c for c in self.checks if c.passed is False]

    def as_struct(self):
        return Struct(
            subject=self.subject,
            passed=self.passed,
            checks=[Struct(c) for c in self.checks],
        )

    @staticmethod
    def merge(reports, subject='merged'):
        """
        Combine reports into one, ordered by subject so the result does not depend on the order audits finished in.
        """
        result = AuditReport(subject)
        for report in sorted(reports, key=lambda r: r.subject):
            result.extend(report, prefix=f'{report.subject}: ')
        return result


def _subject(g):
    return canonical_form(g).decode('ascii')


def _all_passed(checks):
    return all(c is True for c in checks)


def high_degree_set(g, a):
    """
    The vertices outside `a` with degree above `|a|`.
    """
    s = popcount(a)
    result = 0
    for v in iter_bits(g.all_vertices & ~a):
        if g.degree(v) > s:
            result |= 1 << v
    return result


def choose_q(g, a):
    """
    The `3s - n` lowest vertices outside `a` and its high degree set, or all of them if there are fewer.
    """
    n, s = g.order, popcount(a)
    outside = members(g.all_vertices & ~(a | high_degree_set(g, a)))
    return mask_of(outside[:max(0, 3 * s - n)])


def prop32_audit(g, a, q):
    """
    Check the hypotheses for the Andrásfai-type bound `e(G) <= n² - 4ns + 5s²` with `s = |a|`, and the bound
    itself if they hold:

    * `n/3 <= s <= n/2`, `g` triangle-free, `a` independent, `α(G - a) <= s`;
    * `q` avoids `a` and the set `Z` of vertices outside `a` with degree above `s`, and `|q| >= 3s - n`;
    * every independent `Z' ⊆ Z` is matchable into `V ∖ (a ∪ Z' ∪ q)`.
    """
    report = AuditReport(_subject(g))
    n, s = g.order, popcount(a)
    everything = g.all_vertices
    hypotheses = [
        report.check('range', n <= 3 * s and 2 * s <= n, f'n={n} s={s}'),
        report.check('triangle-free', is_triangle_free(g)),
        report.check('a independent', is_independent(g, a), f'a={members(a)}'),
        report.check('alpha outside a', not has_independent_set(g, s + 1, within=everything & ~a)),
    ]
    z = high_degree_set(g, a)
    hypotheses.append(report.check(
        'q placement',
        not q & (a | z) and popcount(q) >= 3 * s - n,
        f'q={members(q)} z={members(z)}',
    ))

    if popcount(z) > conf.MAX_AUDITED_Z:
        hypotheses.append(report.skip('z matchable', f'not audited, |Z| = {popcount(z)} > {conf.MAX_AUDITED_Z}'))
    else:
        violation = None
        for size in range(1, popcount(z) + 1):
            for z_prime in iter_independent_sets(g, size, within=z):
                target = everything & ~(a | z_prime | q)
                if not is_matchable(g, z_prime, target):
                    violation = (z_prime, hall_violator(g, z_prime, target))
                    break
            if violation:
                break
        detail = '' if violation is None else f"Z'={members(violation[0])} deficient={members(violation[1])}"
        hypotheses.append(report.check('z matchable', violation is None, detail))

    if _all_passed(hypotheses):
        bound = g2_value(n, s)
        report.check('bound', g.edge_count <= bound, f'e={g.edge_count} bound={bound}' + (' tight' if g.edge_count == bound else ''))
    return report


def joined_pair_audit(g, a, a_prime):
    """
    The simpler form of the same bound: `a` independent of size `s` with degrees at most `s`, and a disjoint
    independent `a_prime` of size at least `3s - n` whose vertices have neighbourhood exactly `a`.
    """
    report = AuditReport(_subject(g))
    n, s = g.order, popcount(a)
    hypotheses = [
        report.check('range', n <= 3 * s and 2 * s <= n, f'n={n} s={s}'),
        report.check('triangle-free', is_triangle_free(g)),
        report.check('a independent', is_independent(g, a)),
        report.check('a_prime independent', is_independent(g, a_prime) and not a & a_prime),
        report.check('a_prime size', popcount(a_prime) >= 3 * s - n, f'|a_prime|={popcount(a_prime)}'),
        report.check('degrees on a', all(g.degree(v) <= s for v in iter_bits(a))),
        report.check('a_prime joined to a', all(g.neighbors(v) == a for v in iter_bits(a_prime))),
    ]
    if _all_passed(hypotheses):
        bound = g2_value(n, s)
        report.check('bound', g.edge_count <= bound, f'e={g.edge_count} bound={bound}')
    return report


def three_sets_audit(g, a, b, c):
    """
    Wagner-range bound `e(G) <= 3n² - 15ns + 20s²` from three independent `s`-sets.

    Runs the triple-structure pipeline, then deletes `a_prime ∪ b_prime ∪ c_prime` and audits the remainder with
    `b∖a_prime` and `c∖b` against `prop32_audit`. The edges of the pipeline's graph split exactly into those at
    the deleted sets and those of the remainder.
    """
    report = AuditReport(_subject(g))
    n, s = g.order, popcount(a)
    try:
        structure = enforce_triple_structure(g, a, b, c)
    except PreconditionException as e:
        report.check('hypotheses', False, str(e))
        return report
    report.check('hypotheses', True)

    report.check('structure', structure.is_valid, '; '.join(structure.violations()))
    first, last = structure.stages[0], structure.stages[-1]
    report.check('edges non-decreasing', all(x.edges <= y.edges for x, y in zip(structure.stages, structure.stages[1:])))
    report.check('alpha preserved', all(stage.alpha == first.alpha for stage in structure.stages))
    report.check('triangle-free', all(stage.triangle_free for stage in structure.stages))

    if n <= 3 * s and 5 * s <= 2 * n and structure.is_valid:
        reduction = structure.reduction()
        g3 = structure.graph
        keep = g3.all_vertices & ~reduction.removed
        remainder = delete_vertices(g3, reduction.removed)
        n_star, s_star = wagner_reduction_numbers(n, s)
        report.check('reduced order', remainder.order == n_star and popcount(reduction.a_star) == s_star, f'n*={remainder.order} s*={popcount(reduction.a_star)}')
        nested = prop32_audit(remainder, restrict_mask(keep, reduction.a_star), restrict_mask(keep, reduction.q_star))
        report.extend(nested, prefix='reduction: ')

        t = popcount(structure.a_prime)
        at_removed = (
            popcount(b) * popcount(structure.b_prime)
            + popcount(c) * popcount(structure.c_prime)
            + popcount(a & ~(structure.b_prime | structure.c_prime)) * t
        )
        report.check(
            'edge decomposition',
            g3.edge_count == at_removed + remainder.edge_count,
            f'{g3.edge_count} = {at_removed} + {remainder.edge_count}',
        )
        bound = g3_value(n, s)
        report.check('bound', g.edge_count <= bound and last.edges <= bound, f'e={g.edge_count} pipeline={last.edges} bound={bound}')
    else:
        report.skip('reduction', 'only audited for n/3 <= s <= 2n/5 with a valid structure')
    return report


def minimal_andrasfai_template(g):
    """
    The least `k` such that `g` is a blow-up of Γ_k, or None if there is none with a template of supported size.
    """
    for k in range(1, MAX_CLASSIFIED_K + 1):
        if is_blowup_of(g, andrasfai(k)) is not None:
            return k
    return None


def expected_template(n, s):
    """
    The largest Andrásfai template extremal graphs are known to blow up: Γ_2 for `s >= 2n/5` (Γ_3 on the
    boundary), Γ_3 for `3n/8 <= s < 2n/5`, and None below.
    """
    if 5 * s > 2 * n:
        return 2
    if 8 * s >= 3 * n:
        return 3
    return None


def extremal_family_audit(witnesses, n, s, max_edges=None):
    report = AuditReport(f'ex({n},{s})')
    witnesses = sorted(witnesses, key=canonical_form)
    if not witnesses:
        return report
    if max_edges is None:
        max_edges = max(w.edge_count for w in witnesses)
    expected = expected_template(n, s)

    for i, w in enumerate(witnesses):
        prefix = f'witness {i}: '
        report.check(prefix + 'order', w.order == n, f'order={w.order}')
        report.check(prefix + 'triangle-free', is_triangle_free(w))
        alpha = independence_number(w)
        report.check(prefix + 'alpha', alpha <= s, f'alpha={alpha}')
        report.check(prefix + 'edges', w.edge_count == max_edges, f'e={w.edge_count}')
        if n >= 2 * s:
            report.check(prefix + 'two disjoint independent sets', two_disjoint_independent_sets(w, s) is not None, f's={s}')
        k = minimal_andrasfai_template(w)
        detail = f'blow-up of Γ_{k}' if k is not None else 'not a blow-up of a small Andrásfai graph'
        if expected is None:
            report.skip(prefix + 'template', detail)
        else:
            report.check(prefix + 'template', k is not None and k <= expected, detail)
        trace(f'{report.subject} {prefix}{detail}', detail=True)
    return report
