from ramsey_turan import conf
from ramsey_turan.base import (
    RamseyTuranException,
    iter_bits,
    members,
)
from ramsey_turan.formulas import (
    K_RANGE,
    range_index,
    region_of,
)
from ramsey_turan.graph import (
    GraphException,
    induced_subgraph,
    new_graph,
)


class ConstructionException(RamseyTuranException):
    pass


class AndrasfaiSpec:
    """
    The Cayley graph on Z/(3k-1)Z with connection set {k, ..., 2k-1}.
    """

    def __init__(self, k):
        if k < 1:
            raise ConstructionException(f'k must be at least 1, got {k}')
        self.k = k
        self.order = 3 * k - 1
        self.connection_set = frozenset(range(k, 2 * k))

    def __repr__(self):
        return f'<AndrasfaiSpec k={self.k}>'

    def is_sum_free(self):
        m = self.order
        return not any((x + y) % m in self.connection_set for x in self.connection_set for y in self.connection_set)

    def adjacent(self, i, j):
        return (i - j) % self.order in self.connection_set

    def graph(self):
        return new_graph(self.order, [
            (i, j)
            for i in range(self.order)
            for j in range(i + 1, self.order)
            if self.adjacent(i, j)
        ])


def andrasfai_spec(k):
    return AndrasfaiSpec(k)


def andrasfai(k):
    return AndrasfaiSpec(k).graph()


class BlowupWeights:
    def __init__(self, template, weights):
        weights = list(weights)
        if len(weights) != template.order:
            raise ConstructionException(f'expected {template.order} weights, got {len(weights)}')
        for w in weights:
            if not isinstance(w, int) or w < 0:
                raise ConstructionException(f'weights must be nonnegative integers, got {w!r}')
        self.template = template
        self.weights = weights

    def __repr__(self):
        return f'<BlowupWeights {self.weights}>'

    @property
    def total(self):
        return sum(self.weights)

    def classes(self):
        """
        Vertex classes of the blow-up, in template order; class `i` is a run of `weights[i]` consecutive vertices.
        """
        result = []
        start = 0
        for w in self.weights:
            result.append(tuple(range(start, start + w)))
            start += w
        return result

    def edge_count(self):
        return sum(self.weights[i] * self.weights[j] for i, j in self.template.edges())


def blow_up(spec):
    classes = spec.classes()
    edges = [
        (u, v)
        for i, j in spec.template.edges()
        for u in classes[i]
        for v in classes[j]
    ]
    try:
        return new_graph(spec.total, edges)
    except GraphException as e:
        raise ConstructionException(str(e)) from e


def balanced_blowup(k, m):
    template = andrasfai(k)
    return blow_up(BlowupWeights(template, [m] * template.order))


def extremal_weights(n, s):
    """
    The range index `k` and the weights on the Andrásfai graph Γ_k: vertices 1, k and 2k get
    `(k-1)n - (3k-4)s`, every other vertex gets `3s - n`.
    """
    if not (3 * s > n and 2 * s < n):
        raise ConstructionException(f'need n/3 < s < n/2, got n={n}, s={s}')
    k = range_index(n, s)
    assert region_of(k) == K_RANGE
    large = (k - 1) * n - (3 * k - 4) * s
    small = 3 * s - n
    weights = [small] * (3 * k - 1)
    for v in (1, k, 2 * k):
        weights[v] = large
    return k, weights


def extremal_blowup(n, s):
    k, weights = extremal_weights(n, s)
    g = blow_up(BlowupWeights(andrasfai(k), weights))
    assert g.order == n
    return g, k, weights


def _maximum_weight_independent(rows, weights, candidates):
    if not candidates:
        return 0
    v = (candidates & -candidates).bit_length() - 1
    without = _maximum_weight_independent(rows, weights, candidates & ~(1 << v))
    with_v = weights[v] + _maximum_weight_independent(rows, weights, candidates & ~rows[v] & ~(1 << v))
    return max(without, with_v)


def blowup_independence_number(spec):
    """
    max over independent sets I of the template of the total weight on I.
    """
    if spec.template.order > conf.MAX_TEMPLATE_ORDER:
        raise ConstructionException(f'template order {spec.template.order} exceeds {conf.MAX_TEMPLATE_ORDER}')
    return _maximum_weight_independent(spec.template.rows, spec.weights, spec.template.all_vertices)


def _eligible_twin_pairs(rows, alive):
    alive_list = members(alive)
    for i, u in enumerate(alive_list):
        for v in alive_list[i + 1:]:
            if rows[u] & alive == rows[v] & alive:
                yield u, v


def twin_contraction(g, choose=None):
    """
    Merge vertices with identical open neighbourhoods until none are left.

    By default the lexicographically least eligible pair is merged; `choose` picks a pair from the list of
    eligible pairs instead. The survivor of a merge is the smaller vertex. Returns the contracted graph
    (vertices in increasing order of their survivor) and the classes, each a sorted tuple of original vertices.
    """
    alive = g.all_vertices
    classes = {v: [v] for v in range(g.order)}
    while True:
        if choose is None:
            pair = next(_eligible_twin_pairs(g.rows, alive), None)
        else:
            pairs = list(_eligible_twin_pairs(g.rows, alive))
            pair = choose(pairs) if pairs else None
        if pair is None:
            break
        u, v = pair
        survivor, merged = min(u, v), max(u, v)
        classes[survivor] += classes.pop(merged)
        alive &= ~(1 << merged)

    contracted = induced_subgraph(g, alive)
    return contracted, [tuple(sorted(classes[v])) for v in iter_bits(alive)]


def _embeddings(pattern, host):
    """
    Injective maps from the vertices of `pattern` into `host` that are induced-subgraph isomorphisms,
    trying host vertices in increasing order.
    """
    order = sorted(range(pattern.order), key=lambda v: (-pattern.degree(v), v))
    image = [None] * pattern.order

    def extend(i, used):
        if i == len(order):
            yield list(image)
            return
        v = order[i]
        for w in range(host.order):
            if used >> w & 1:
                continue
            if all(pattern.has_edge(v, order[j]) == host.has_edge(w, image[order[j]]) for j in range(i)):
                image[v] = w
                yield from extend(i + 1, used | 1 << w)
        image[v] = None

    return extend(0, 0)


def is_blowup_of(g, template):
    """
    Weights `w` with `blow_up(template, w)` isomorphic to `g`, or None.

    The twin contraction of a blow-up is an induced subgraph of the template on the support of the weights,
    so it is enough to embed the contraction of `g` into the template and use the class sizes as weights.
    """
    if template.order > conf.MAX_TEMPLATE_ORDER:
        raise ConstructionException(f'template order {template.order} exceeds {conf.MAX_TEMPLATE_ORDER}')
    contracted, classes = twin_contraction(g)
    if contracted.order > template.order:
        return None
    for image in _embeddings(contracted, template):
        weights = [0] * template.order
        for v, c in enumerate(classes):
            weights[image[v]] = len(c)
        return weights
    return None