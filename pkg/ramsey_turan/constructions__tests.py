import numpy as np
import pytest

from ramsey_turan import conf
from ramsey_turan.canonical import are_isomorphic
from ramsey_turan.constructions import (
    BlowupWeights,
    ConstructionException,
    andrasfai,
    andrasfai_spec,
    balanced_blowup,
    blow_up,
    blowup_independence_number,
    extremal_blowup,
    extremal_weights,
    is_blowup_of,
    twin_contraction,
)
from ramsey_turan.formulas import (
    K_RANGE,
    g_value,
    region_of,
    range_index,
)
from ramsey_turan.graph import (
    complete_bipartite,
    complete_graph,
    cycle,
    degree_profile,
    empty_graph,
    is_triangle_free,
    twin_classes,
)
from ramsey_turan.solvers import independence_number
from tests.helpers import pentagon


def test_pentagon_edges():
    assert pentagon().edges() == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
    assert are_isomorphic(pentagon(), cycle(5))


def test_andrasfai_one_is_an_edge():
    assert andrasfai(1) == complete_graph(2)


@pytest.mark.parametrize('k', range(1, 9))
def test_andrasfai_graph(k):
    g = andrasfai(k)
    assert g.order == 3 * k - 1
    assert degree_profile(g) == ([k] * (3 * k - 1), k)
    assert is_triangle_free(g)
    assert independence_number(g) == k
    assert andrasfai_spec(k).is_sum_free()


def test_andrasfai_needs_positive_k():
    with pytest.raises(ConstructionException) as e:
        andrasfai(0)
    assert str(e.value) == 'k must be at least 1, got 0'


def test_andrasfai_spec():
    spec = andrasfai_spec(3)
    assert repr(spec) == '<AndrasfaiSpec k=3>'
    assert spec.connection_set == {3, 4, 5}
    assert spec.adjacent(0, 5)
    assert not spec.adjacent(0, 2)


def test_blow_up_of_the_pentagon():
    spec = BlowupWeights(pentagon(), [3, 2, 2, 3, 2])
    g = blow_up(spec)
    assert g.order == spec.total == 12
    assert g.edge_count == spec.edge_count() == 29
    assert spec.classes() == [(0, 1, 2), (3, 4), (5, 6), (7, 8, 9), (10, 11)]
    assert is_triangle_free(g)
    assert blowup_independence_number(spec) == independence_number(g) == 5


def test_blow_up_with_zero_weights():
    g = blow_up(BlowupWeights(pentagon(), [2, 0, 3, 0, 0]))
    assert g == complete_bipartite(2, 3)


@pytest.mark.parametrize('weights, message', [
    ([1, 2], 'expected 5 weights, got 2'),
    ([1, 1, -1, 1, 1], 'weights must be nonnegative integers, got -1'),
    ([1, 1, 0.5, 1, 1], 'weights must be nonnegative integers, got 0.5'),
])
def test_blowup_weights_errors(weights, message):
    with pytest.raises(ConstructionException) as e:
        BlowupWeights(pentagon(), weights)
    assert str(e.value) == message


def test_blow_up_beyond_the_maximum_order():
    with pytest.raises(ConstructionException) as e:
        blow_up(BlowupWeights(pentagon(), [13] * 5))
    assert str(e.value) == 'order 65 exceeds the supported maximum of 64'


def test_balanced_blowup():
    g = balanced_blowup(3, 2)
    assert g.order == 16
    assert g.edge_count == 48
    assert independence_number(g) == 6


@pytest.mark.parametrize('n, s, k, weights', [
    (12, 5, 2, [3, 2, 2, 3, 2]),
    (13, 5, 3, [2, 1, 2, 1, 2, 2, 1, 2]),
    (8, 3, 3, [1] * 8),
    (10, 4, 2, [2, 2, 2, 2, 2]),
])
def test_extremal_weights(n, s, k, weights):
    assert extremal_weights(n, s) == (k, weights)


def test_extremal_weights_need_the_k_range():
    with pytest.raises(ConstructionException) as e:
        extremal_weights(10, 5)
    assert str(e.value) == 'need n/3 < s < n/2, got n=10, s=5'


def test_extremal_blowups_meet_the_formula():
    for n in range(4, 41):
        for s in range(n + 1):
            if region_of(range_index(n, s)) != K_RANGE:
                continue
            k, weights = extremal_weights(n, s)
            if 3 * k - 1 > conf.MAX_TEMPLATE_ORDER:
                continue
            spec = BlowupWeights(andrasfai(k), weights)
            assert spec.total == n
            assert spec.edge_count() == g_value(n, s)
            assert blowup_independence_number(spec) == s


def test_extremal_blowup_graph():
    g, k, weights = extremal_blowup(13, 5)
    assert k == 3
    assert g.edge_count == 32
    assert is_triangle_free(g)
    assert independence_number(g) == 5
    assert is_blowup_of(g, andrasfai(3)) is not None


@pytest.mark.parametrize('n', range(4, 31))
def test_extremal_blowup_graphs_are_extremal(n):
    for s in range(n // 3 + 1, (n + 1) // 2):
        g, k, weights = extremal_blowup(n, s)
        assert k == range_index(n, s)
        assert g.order == n
        assert g.edge_count == g_value(n, s)
        assert is_triangle_free(g)
        assert independence_number(g) == s


def test_twin_contraction():
    contracted, classes = twin_contraction(complete_bipartite(3, 3))
    assert contracted == complete_graph(2)
    assert classes == [(0, 1, 2), (3, 4, 5)]


def test_twin_contraction_of_a_twin_free_graph():
    contracted, classes = twin_contraction(pentagon())
    assert contracted == pentagon()
    assert classes == [(v,) for v in range(5)]


def test_twin_contraction_merges_isolated_vertices():
    contracted, classes = twin_contraction(empty_graph(4))
    assert contracted == empty_graph(1)
    assert classes == [(0, 1, 2, 3)]


def test_twin_contraction_does_not_depend_on_merge_order():
    rng = np.random.default_rng(31)
    for _ in range(100):
        k = int(rng.integers(1, 5))
        weights = [int(w) for w in rng.integers(0, 4, size=3 * k - 1)]
        g = blow_up(BlowupWeights(andrasfai(k), weights))
        expected = twin_contraction(g)
        assert twin_contraction(g, choose=lambda pairs: pairs[-1]) == expected
        assert twin_contraction(g, choose=lambda pairs: pairs[int(rng.integers(len(pairs)))]) == expected
        contracted, classes = expected
        assert twin_classes(contracted) == [(v,) for v in range(contracted.order)]
        assert sum(len(c) for c in classes) == g.order
        assert are_isomorphic(blow_up(BlowupWeights(contracted, [len(c) for c in classes])), g)


def test_is_blowup_of():
    assert is_blowup_of(complete_bipartite(2, 3), pentagon()) == [2, 0, 3, 0, 0]
    assert is_blowup_of(complete_graph(3), andrasfai(4)) is None
    assert is_blowup_of(cycle(6), pentagon()) is None


def test_is_blowup_of_recovers_random_weights():
    rng = np.random.default_rng(37)
    for _ in range(50):
        k = int(rng.integers(2, 5))
        template = andrasfai(k)
        weights = [int(w) for w in rng.integers(0, 3, size=template.order)]
        g = blow_up(BlowupWeights(template, weights))
        found = is_blowup_of(g, template)
        assert found is not None
        assert are_isomorphic(blow_up(BlowupWeights(template, found)), g)
