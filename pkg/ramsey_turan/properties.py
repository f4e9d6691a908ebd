"""
Seeded randomized suites for the transform and matching facts the pipelines rely on.

Each suite draws random triangle-free graphs, lets its check pick the remaining random inputs, and counts the
instances where the check applied. A check returns None when the drawn graph does not meet its hypotheses, or a
`(passed, detail)` pair.
"""
import numpy as np
from tri_declarative import (
    Refinable,
    RefinableObject,
    class_shortcut,
    dispatch,
)

from ramsey_turan import conf
from ramsey_turan.base import (
    iter_bits,
    members,
    popcount,
)
from ramsey_turan.canonical import are_isomorphic
from ramsey_turan.constructions import (
    BlowupWeights,
    andrasfai,
    blow_up,
    twin_contraction,
)
from ramsey_turan.graph import (
    Graph,
    is_independent,
    is_triangle_free,
)
from ramsey_turan.graph6 import format_graph6
from ramsey_turan.solvers import (
    independence_number,
    is_matchable,
    max_bipartite_matching,
    maximum_independent_set,
    saturating_max_matching,
    two_disjoint_independent_sets,
)
from ramsey_turan.transforms import (
    isolate_unmatched,
    sym,
)
from ramsey_turan.validation import AuditReport

# Draws per requested instance before a suite gives up on reaching its instance count.
MAX_ATTEMPT_FACTOR = 20
MAX_REPORTED_FAILURES = 5


def random_subset(rng, mask, probability=0.5):
    result = 0
    for v in iter_bits(mask):
        if rng.random() < probability:
            result |= 1 << v
    return result


def random_independent_set(rng, g, within=None):
    """
    A random maximal independent subset of `within`, built greedily in a shuffled order.
    """
    allowed = g.all_vertices if within is None else within
    result = 0
    for v in rng.permutation(members(allowed)):
        v = int(v)
        if allowed >> v & 1:
            result |= 1 << v
            allowed &= ~g.rows[v] & ~(1 << v)
    return result


def random_triangle_free_graph(rng, max_order):
    """
    Run the triangle-free process on a random order for a random number of steps: edges are offered in random order
    and accepted unless they close a triangle.
    """
    order = int(rng.integers(1, max_order + 1))
    pairs = [(u, v) for u in range(order) for v in range(u + 1, order)]
    steps = int(rng.integers(0, len(pairs) + 1))
    rows = [0] * order
    for i in rng.permutation(len(pairs))[:steps]:
        u, v = pairs[int(i)]
        if not rows[u] & rows[v]:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(order, rows)


def check_sym_edge_count(rng, g):
    a = random_subset(rng, g.all_vertices)
    size = popcount(a)
    b = 0
    for v in iter_bits(g.all_vertices & ~a):
        if g.degree(v) <= size and rng.random() < 0.5:
            b |= 1 << v
    if not b:
        return None
    result = sym(g, a, b)
    if result.edge_count < g.edge_count:
        return False, f'edges dropped from {g.edge_count} to {result.edge_count}'
    if result.edge_count == g.edge_count:
        tight = all(g.degree(v) == size for v in iter_bits(b)) and is_independent(g, b)
        if not tight:
            return False, f'equal edge count without all of b = {members(b)} independent of degree {size}'
    return True, ''


def check_sym_triangle_free(rng, g):
    a = random_independent_set(rng, g)
    b = random_subset(rng, g.all_vertices & ~a)
    if not b:
        return None
    result = sym(g, a, b)
    return is_triangle_free(result), f'a={members(a)} b={members(b)}'


def check_isolate_alpha(rng, g):
    a = maximum_independent_set(g)
    matching = max_bipartite_matching(g, g.all_vertices & ~a, a)
    result = isolate_unmatched(g, a, matching)
    alpha, after = popcount(a), independence_number(result)
    return alpha == after, f'a={members(a)} alpha {alpha} became {after}'


def check_sym_alpha(rng, g):
    alpha = independence_number(g)
    pair = two_disjoint_independent_sets(g, alpha)
    if pair is None:
        return None
    a, b = pair
    if rng.random() < 0.5:
        a, b = b, a
    matching = max_bipartite_matching(g, g.all_vertices & ~(a | b), b)
    b_prime = random_subset(rng, b & ~matching.vertices())
    after = independence_number(sym(g, a, b_prime))
    return alpha == after, f'a={members(a)} b_prime={members(b_prime)} alpha {alpha} became {after}'


def check_matchable_into_maximum(rng, g):
    a = maximum_independent_set(g)
    rest = g.all_vertices & ~a
    if not rest:
        return None
    y = random_independent_set(rng, g, within=random_subset(rng, rest, probability=0.7) or rest)
    if not y:
        return None
    return is_matchable(g, y, a), f'y={members(y)} a={members(a)}'


def check_saturating_matching(rng, g):
    r = random_subset(rng, g.all_vertices)
    s = g.all_vertices & ~r
    if not r or not s:
        return None
    # a greedy random matching gives a set that is matchable by construction
    r_prime, used = 0, 0
    for u in rng.permutation(members(r)):
        u = int(u)
        free = g.rows[u] & s & ~used
        if free and rng.random() < 0.7:
            v = int(rng.choice(members(free)))
            r_prime |= 1 << u
            used |= 1 << v
    maximum = max_bipartite_matching(g, r, s).size
    result = saturating_max_matching(g, r, s, r_prime)
    if result is None:
        return False, f'r_prime={members(r_prime)} is matchable but no saturating matching was found'
    ok = result.is_valid() and result.size == maximum and result.saturates(r_prime)
    return ok, f'size {result.size} of {maximum}, r_prime={members(r_prime)}'


class PropertySuite(RefinableObject):
    """
    A named randomized check, run on `instances` applicable random triangle-free graphs of order up to `max_order`.
    """

    name = Refinable()
    instances = Refinable()
    max_order = Refinable()
    seed = Refinable()
    check = Refinable()

    @dispatch(
        instances=1000,
        max_order=10,
        seed=conf.DEFAULT_SEED,
    )
    def __init__(self, **kwargs):
        super().__init__(**kwargs)

    def __repr__(self):
        return f'<PropertySuite {self.name}>'

    def run(self):
        rng = np.random.default_rng(self.seed)
        report = AuditReport(self.name)
        applicable = attempts = failures = 0
        while applicable < self.instances and attempts < self.instances * MAX_ATTEMPT_FACTOR:
            attempts += 1
            g = random_triangle_free_graph(rng, self.max_order)
            outcome = self.check(rng, g)
            if outcome is None:
                continue
            applicable += 1
            passed, detail = outcome
            if not passed:
                failures += 1
                if failures <= MAX_REPORTED_FAILURES:
                    report.check(f'instance {applicable}', False, f'{format_graph6(g)}: {detail}')
        report.check('violations', failures == 0, f'{failures} of {applicable} instances')
        report.check('coverage', applicable >= self.instances, f'{applicable} applicable instances in {attempts} draws')
        return report

    @classmethod
    @class_shortcut(
        name='sym-edge-count',
        check=check_sym_edge_count,
    )
    def sym_edge_count(cls, call_target=None, **kwargs):
        return call_target(**kwargs)

    @classmethod
    @class_shortcut(
        name='sym-triangle-free',
        check=check_sym_triangle_free,
    )
    def sym_triangle_free(cls, call_target=None, **kwargs):
        return call_target(**kwargs)

    @classmethod
    @class_shortcut(
        name='isolate-alpha',
        check=check_isolate_alpha,
    )
    def isolate_alpha(cls, call_target=None, **kwargs):
        return call_target(**kwargs)

    @classmethod
    @class_shortcut(
        name='sym-alpha',
        check=check_sym_alpha,
    )
    def sym_alpha(cls, call_target=None, **kwargs):
        return call_target(**kwargs)

    @classmethod
    @class_shortcut(
        name='matchable-into-maximum',
        check=check_matchable_into_maximum,
    )
    def matchable_into_maximum(cls, call_target=None, **kwargs):
        return call_target(**kwargs)

    @classmethod
    @class_shortcut(
        name='saturating-matching',
        check=check_saturating_matching,
    )
    def saturating_matching(cls, call_target=None, **kwargs):
        return call_target(**kwargs)


SUITES = [
    PropertySuite.sym_edge_count,
    PropertySuite.sym_triangle_free,
    PropertySuite.isolate_alpha,
    PropertySuite.sym_alpha,
    PropertySuite.matchable_into_maximum,
    PropertySuite.saturating_matching,
]


def random_blowup(rng, max_k=5, max_weight=3):
    k = int(rng.integers(2, max_k + 1))
    template = andrasfai(k)
    weights = [int(w) for w in rng.integers(0, max_weight + 1, size=template.order)]
    if not any(weights):
        weights[0] = 1
    return blow_up(BlowupWeights(template, weights))


def twin_confluence_suite(seed=conf.DEFAULT_SEED, instances=1000):
    """
    Twin contraction of random Andrásfai blow-ups: any merge order gives the default result, and blowing the
    contraction back up by its class sizes restores the graph.
    """
    rng = np.random.default_rng(seed)
    report = AuditReport('twin-confluence')
    failures = 0
    for i in range(instances):
        g = random_blowup(rng)
        contracted, classes = twin_contraction(g)
        shuffled, shuffled_classes = twin_contraction(g, choose=lambda pairs: pairs[int(rng.integers(len(pairs)))])
        restored = blow_up(BlowupWeights(contracted, [len(c) for c in classes]))
        ok = shuffled == contracted and shuffled_classes == classes and are_isomorphic(restored, g)
        if not ok:
            failures += 1
            if failures <= MAX_REPORTED_FAILURES:
                report.check(f'instance {i}', False, format_graph6(g))
    report.check('violations', failures == 0, f'{failures} of {instances} instances')
    return report


def run_property_suites(seed=conf.DEFAULT_SEED, instances=1000, max_order=10):
    reports = [
        suite(seed=seed, instances=instances, max_order=max_order).run()
        for suite in SUITES
    ]
    reports.append(twin_confluence_suite(seed=seed, instances=instances))
    return reports
