"""
Symmetrisation and the pipelines built from it.

`sym(g, a, b)` deletes every edge meeting `b` and then joins `b` completely to `a`. Applied with an independent
`a` to a triangle-free graph it keeps the graph triangle-free, and with `|a| >= deg(v)` for all `v` in `b` it
never loses edges. The pipelines below apply it where the independence number provably survives, and check
their hypotheses and results with the exact solvers as they go.
"""
from tri_struct import Struct

from ramsey_turan.base import (
    RamseyTuranException,
    iter_bits,
    lowest_bit,
    members,
    popcount,
)
from ramsey_turan.graph import (
    Graph,
    check_vertex_set,
    is_independent,
    is_triangle_free,
)
from ramsey_turan.solvers import (
    independence_number,
    max_bipartite_matching,
    maximum_independent_set,
    saturating_max_matching,
    two_disjoint_independent_sets,
)
from ramsey_turan.trace import trace


class PreconditionException(RamseyTuranException):
    def __init__(self, hypothesis, message):
        super().__init__(f'{hypothesis}: {message}')
        self.hypothesis = hypothesis


def _least(mask, count):
    result = 0
    for v in members(mask)[:count]:
        result |= 1 << v
    return result


def _joined(g, a, b):
    return all(g.rows[v] & a == a for v in iter_bits(b))


def snapshot(stage, g):
    return Struct(
        stage=stage,
        edges=g.edge_count,
        alpha=independence_number(g),
        triangle_free=is_triangle_free(g),
    )


def sym(g, a, b):
    check_vertex_set(g, a, name='a')
    check_vertex_set(g, b, name='b')
    if a & b:
        raise PreconditionException('disjoint', f'a and b overlap in {members(a & b)}')
    rows = []
    for v, row in enumerate(g.rows):
        if b >> v & 1:
            rows.append(a)
        elif a >> v & 1:
            rows.append(row | b)
        else:
            rows.append(row & ~b)
    return Graph(g.order, rows)


def zykov_symmetrise(g, u, v):
    """
    Replace the neighbourhood of `u` by a copy of the neighbourhood of `v`.
    """
    for x in (u, v):
        if not 0 <= x < g.order:
            raise PreconditionException('vertex', f'{x} is not a vertex of a graph of order {g.order}')
    if u == v or g.has_edge(u, v):
        raise PreconditionException('non-adjacent', f'{u} and {v} must be distinct and non-adjacent')
    return sym(g, g.neighbors(v), 1 << u)


def _check_triangle_free(g):
    if not is_triangle_free(g):
        raise PreconditionException('triangle-free', 'the graph contains a triangle')


def isolate_unmatched(g, a, m):
    """
    Delete the edges at the vertices of `a` left unmatched by a maximum matching `m` from V∖a to `a`.
    """
    check_vertex_set(g, a, name='a')
    if not is_independent(g, a):
        raise PreconditionException('independent', f'a = {members(a)} is not independent')
    alpha = independence_number(g)
    if popcount(a) != alpha:
        raise PreconditionException('maximum', f'|a| = {popcount(a)} but the independence number is {alpha}')
    rest = g.all_vertices & ~a
    if m.graph != g or m.r != rest or m.s != a:
        raise PreconditionException('matching', 'm must be a matching of this graph from V∖a to a')
    maximum = max_bipartite_matching(g, rest, a).size
    if m.size != maximum:
        raise PreconditionException('matching', f'm has size {m.size}, a maximum matching has size {maximum}')

    isolated = a & ~m.vertices()
    return sym(g, 0, isolated)


class PairStructure:
    """
    Disjoint independent `s`-sets `a`, `b` with `a_prime ⊆ b`, `b_prime ⊆ a` of size `3s - n`, where `a_prime`
    is joined to all of `a` and `b_prime` to all of `b`.
    """

    def __init__(self, graph, s, a, b, a_prime, b_prime, stages=()):
        self.graph = graph
        self.s = s
        self.a = a
        self.b = b
        self.a_prime = a_prime
        self.b_prime = b_prime
        self.stages = list(stages)

    def __repr__(self):
        return f'<PairStructure a={members(self.a)} b={members(self.b)} a_prime={members(self.a_prime)} b_prime={members(self.b_prime)}>'

    def violations(self):
        g, s = self.graph, self.s
        t = max(0, 3 * s - g.order)
        result = []
        if self.a & self.b:
            result.append('a and b overlap')
        for name, mask in [('a', self.a), ('b', self.b)]:
            if popcount(mask) != s:
                result.append(f'|{name}| != {s}')
            if not is_independent(g, mask):
                result.append(f'{name} is not independent')
        for name, mask, inside in [('a_prime', self.a_prime, self.b), ('b_prime', self.b_prime, self.a)]:
            if popcount(mask) != t:
                result.append(f'|{name}| != {t}')
            if mask & ~inside:
                result.append(f'{name} is not inside its host set')
        if not _joined(g, self.a, self.a_prime):
            result.append('K(a_prime, a) is incomplete')
        if not _joined(g, self.b, self.b_prime):
            result.append('K(b_prime, b) is incomplete')
        return result

    @property
    def is_valid(self):
        return not self.violations()


class TripleStructure:
    """
    Independent `s`-sets `a`, `b`, `c` with `a` disjoint from `b` and `c`, and `(3s - n)`-sets
    `a_prime ⊆ b∩c`, `b_prime ⊆ a`, `c_prime ⊆ a∖b_prime` joined to `a`, `b` and `c` respectively.
    """

    def __init__(self, graph, s, a, b, c, a_prime, b_prime, c_prime, stages=()):
        self.graph = graph
        self.s = s
        self.a = a
        self.b = b
        self.c = c
        self.a_prime = a_prime
        self.b_prime = b_prime
        self.c_prime = c_prime
        self.stages = list(stages)

    def __repr__(self):
        return f'<TripleStructure a_prime={members(self.a_prime)} b_prime={members(self.b_prime)} c_prime={members(self.c_prime)}>'

    def violations(self):
        g, s = self.graph, self.s
        t = max(0, 3 * s - g.order)
        result = []
        for name, mask in [('a', self.a), ('b', self.b), ('c', self.c)]:
            if popcount(mask) != s:
                result.append(f'|{name}| != {s}')
            if not is_independent(g, mask):
                result.append(f'{name} is not independent')
        for name, mask in [('a_prime', self.a_prime), ('b_prime', self.b_prime), ('c_prime', self.c_prime)]:
            if popcount(mask) != t:
                result.append(f'|{name}| != {t}')
        if self.a_prime & ~(self.b & self.c):
            result.append('a_prime is not inside b∩c')
        if self.b_prime & ~self.a:
            result.append('b_prime is not inside a')
        if self.c_prime & ~(self.a & ~self.b_prime):
            result.append('c_prime is not inside a∖b_prime')
        for name, host, joined in [('a', self.a, self.a_prime), ('b', self.b, self.b_prime), ('c', self.c, self.c_prime)]:
            if not _joined(g, host, joined):
                result.append(f'K({name}_prime, {name}) is incomplete')
        return result

    @property
    def is_valid(self):
        return not self.violations()

    def reduction(self):
        """
        The remaining graph after deleting `a_prime ∪ b_prime ∪ c_prime`, with the sets `b∖a_prime` and `c∖b`,
        as masks of the original vertex indices.
        """
        removed = self.a_prime | self.b_prime | self.c_prime
        return Struct(
            removed=removed,
            a_star=self.b & ~self.a_prime,
            q_star=self.c & ~self.b,
        )


def enforce_pair_structure(g, s):
    _check_triangle_free(g)
    n = g.order
    alpha = independence_number(g)
    if alpha != s:
        raise PreconditionException('alpha', f'independence number is {alpha}, expected {s}')
    if 3 * s < n or 2 * s > n:
        raise PreconditionException('range', f'need n/3 <= s <= n/2, got n={n}, s={s}')
    pair = two_disjoint_independent_sets(g, s)
    if pair is None:
        raise PreconditionException('two disjoint independent sets', f'no two disjoint independent sets of size {s}')
    a, b = pair
    t = 3 * s - n
    x = g.all_vertices & ~(a | b)
    stages = [snapshot('input', g)]

    matching_a = max_bipartite_matching(g, x, a)
    matching_b = max_bipartite_matching(g, x, b)
    a_prime = _least(b & ~matching_b.vertices(), t)
    b_prime = _least(a & ~matching_a.vertices(), t)
    assert popcount(a_prime) == t and popcount(b_prime) == t

    g1 = sym(g, a, a_prime)
    stages.append(snapshot('join a_prime to a', g1))
    g2 = sym(g1, b, b_prime)
    stages.append(snapshot('join b_prime to b', g2))
    trace(f'pair structure: a={members(a)} b={members(b)} a_prime={members(a_prime)} b_prime={members(b_prime)}', detail=True)

    return PairStructure(g2, s, a, b, a_prime, b_prime, stages=stages)


def enforce_triple_structure(g, a, b, c):
    for name, mask in [('a', a), ('b', b), ('c', c)]:
        check_vertex_set(g, mask, name=name)
    _check_triangle_free(g)
    n = g.order
    s = popcount(a)
    if popcount(b) != s or popcount(c) != s:
        raise PreconditionException('sizes', f'|a|, |b|, |c| must be equal, got {popcount(a)}, {popcount(b)}, {popcount(c)}')
    for name, mask in [('a', a), ('b', b), ('c', c)]:
        if not is_independent(g, mask):
            raise PreconditionException('independent', f'{name} = {members(mask)} is not independent')
    alpha = independence_number(g)
    if alpha != s:
        raise PreconditionException('alpha', f'independence number is {alpha}, expected {s}')
    if a & b or a & c:
        raise PreconditionException('disjoint', 'a must be disjoint from b and c')
    if popcount(b & c) > n - 2 * s:
        raise PreconditionException('overlap', f'|b∩c| = {popcount(b & c)} exceeds n - 2s = {n - 2 * s}')

    t = max(0, 3 * s - n)
    everything = g.all_vertices
    stages = [snapshot('input', g)]

    matching_b = max_bipartite_matching(g, everything & ~(a | b), a)
    g1 = sym(g, b, a & ~matching_b.vertices())
    b_prime = _least(a & ~matching_b.vertices(), t)
    stages.append(snapshot('join a∖V(M_B) to b', g1))

    matching_c = saturating_max_matching(g1, a, everything & ~(a | c), b_prime)
    assert matching_c is not None, 'b_prime is matchable into b∖c'
    g2 = sym(g1, c, a & ~matching_c.vertices())
    c_prime = _least(a & ~matching_c.vertices(), t)
    stages.append(snapshot('join a∖V(M_C) to c', g2))

    matching_a = max_bipartite_matching(g2, everything & ~(a | b), b)
    unmatched = b & ~matching_a.vertices()
    g3 = sym(g2, a, unmatched)
    preferred = unmatched & c
    a_prime = _least(preferred if popcount(preferred) >= t else unmatched, t)
    stages.append(snapshot('join b∖V(M_A) to a', g3))
    trace(f'triple structure: a_prime={members(a_prime)} b_prime={members(b_prime)} c_prime={members(c_prime)}', detail=True)

    return TripleStructure(g3, s, a, b, c, a_prime, b_prime, c_prime, stages=stages)


def grow_disjoint_pair(g, s=None):
    """
    One step towards two disjoint maximum independent sets, following the exchange argument for edge-maximal graphs.

    With `x` a maximum independent set and `y` the largest independent set disjoint from it, the result's `case` is
    one of:

    * `pair`: `|y| = |x|`, the pair is returned.
    * `no-edge`: `g - x` has no edges, nothing to exchange.
    * `neighbourhoods`: an edge `ab` outside `x` with both degrees equal to the independence number; the two
      neighbourhoods form the pair.
    * `partner`: joining a low-degree endpoint `a` to `x` raised the independence number; the witness minus `a` is a
      partner of `x` larger than `y`.
    * `symmetrised`: joining `a` to `x` kept the independence number and gained edges; the new graph is returned.
    * `grow`: `|x| = |y| < s`; two vertices outside `x ∪ y` are joined to `y` and `x` and to each other, raising
      the edge count with the independence number still at most `s`.
    """
    _check_triangle_free(g)
    x = maximum_independent_set(g)
    alpha = popcount(x)
    y = maximum_independent_set(g, within=g.all_vertices & ~x)
    stages = [snapshot('input', g)]
    result = Struct(case=None, graph=g, x=x, y=y, stages=stages)

    if popcount(y) == alpha:
        outside = g.all_vertices & ~(x | y)
        if s is None or alpha >= s or popcount(outside) < 2:
            result.case = 'pair'
            return result
        a = lowest_bit(outside)
        b = lowest_bit(outside & ~(1 << a))
        grown = sym(sym(g, y | 1 << b, 1 << a), x | 1 << a, 1 << b)
        stages.append(snapshot('join a to y and b to x', grown))
        result.case = 'grow'
        result.graph = grown
        return result

    outside = g.all_vertices & ~x
    edge = next(((u, v) for u in iter_bits(outside) for v in iter_bits(g.rows[u] & outside) if u < v), None)
    if edge is None:
        result.case = 'no-edge'
        return result

    u, v = edge
    if g.degree(u) == alpha and g.degree(v) == alpha:
        result.case = 'neighbourhoods'
        result.x, result.y = g.neighbors(u), g.neighbors(v)
        return result

    low = u if g.degree(u) < alpha else v
    joined = sym(g, x, 1 << low)
    stages.append(snapshot('join a to x', joined))
    if independence_number(joined) > alpha:
        witness = maximum_independent_set(joined)
        assert witness >> low & 1
        result.case = 'partner'
        result.y = witness & ~(1 << low)
        return result

    result.case = 'symmetrised'
    result.graph = joined
    return result
