from ramsey_turan.base import (
    RamseyTuranException,
    iter_bits,
    lowest_bit,
    members,
    popcount,
)
from ramsey_turan.graph import check_vertex_set


class SolverException(RamseyTuranException):
    pass


def _check_disjoint(r, s, names='r and s'):
    if r & s:
        raise SolverException(f'{names} must be disjoint, both contain {members(r & s)}')


# --- independent sets ---

def _clique_cover_bound(rows, candidates):
    """
    Number of cliques in a greedy clique cover of `candidates`; an independent set takes at most one vertex per clique.
    """
    cliques = 0
    while candidates:
        v = lowest_bit(candidates)
        clique_candidates = candidates & rows[v]
        candidates &= ~(1 << v)
        while clique_candidates:
            u = lowest_bit(clique_candidates)
            candidates &= ~(1 << u)
            clique_candidates &= rows[u]
        cliques += 1
    return cliques


class _IndependentSetSearch:
    def __init__(self, rows, target=None):
        self.rows = rows
        self.target = target
        self.best_size = -1
        self.best_mask = 0

    def done(self):
        return self.target is not None and self.best_size >= self.target

    def expand(self, chosen, size, candidates):
        rows = self.rows
        # vertices without neighbours among the candidates are always taken
        while True:
            isolated = 0
            for v in iter_bits(candidates):
                if not rows[v] & candidates:
                    isolated |= 1 << v
            if not isolated:
                break
            chosen |= isolated
            size += popcount(isolated)
            candidates &= ~isolated

        if not candidates:
            if size > self.best_size:
                self.best_size = size
                self.best_mask = chosen
            return

        bound = size + _clique_cover_bound(rows, candidates)
        if bound <= self.best_size or (self.target is not None and bound < self.target):
            return

        v = max(iter_bits(candidates), key=lambda u: (popcount(rows[u] & candidates), -u))
        self.expand(chosen | 1 << v, size + 1, candidates & ~rows[v] & ~(1 << v))
        if self.done():
            return
        self.expand(chosen, size, candidates & ~(1 << v))


def maximum_independent_set(g, within=None):
    """
    A maximum independent set of `g` (restricted to `within` when given), as a bitmask.

    Exact branch and bound: branch on the vertex of largest degree among the candidates (lowest index on ties),
    bound by a greedy clique cover.
    """
    candidates = g.all_vertices if within is None else check_vertex_set(g, within, name='within')
    search = _IndependentSetSearch(g.rows)
    search.expand(0, 0, candidates)
    return search.best_mask


def independence_number(g, within=None):
    return popcount(maximum_independent_set(g, within=within))


def has_independent_set(g, t, within=None):
    """
    True iff `g` (restricted to `within`) has an independent set of size `t`. Stops at the first one found.
    """
    candidates = g.all_vertices if within is None else check_vertex_set(g, within, name='within')
    if t <= 0:
        return True
    if popcount(candidates) < t:
        return False
    search = _IndependentSetSearch(g.rows, target=t)
    search.expand(0, 0, candidates)
    return search.done()


def _independent_sets_below(rows, t, limit, allowed):
    if t == 0:
        yield 0
        return
    for top in range(t - 1, limit):
        if allowed >> top & 1:
            for rest in _independent_sets_below(rows, t - 1, top, allowed & ~rows[top]):
                yield rest | 1 << top


def iter_independent_sets(g, t, within=None):
    """
    Independent sets of size exactly `t`, in increasing order of their bitmask.
    """
    allowed = g.all_vertices if within is None else check_vertex_set(g, within, name='within')
    if t < 0 or t > g.order:
        return iter(())
    return _independent_sets_below(g.rows, t, g.order, allowed)


def independent_sets_of_size(g, t, limit=None, within=None):
    if t > g.order:
        raise SolverException(f'set size {t} exceeds the order {g.order}')
    result = []
    for mask in iter_independent_sets(g, t, within=within):
        if limit is not None and len(result) >= limit:
            break
        result.append(mask)
    return result


def two_disjoint_independent_sets(g, t):
    """
    The least pair (A, B) of disjoint independent `t`-sets, A before B in bitmask order, or None.
    """
    for a in iter_independent_sets(g, t):
        for b in iter_independent_sets(g, t, within=g.all_vertices & ~a):
            if b > a or t == 0:
                return a, b
    return None


# --- matchings ---

class Matching:
    """
    Vertex-disjoint edges of `graph` between the sides `r` and `s`; `pairs` holds `(r_vertex, s_vertex)`.
    """

    __slots__ = ('graph', 'r', 's', 'pairs')

    def __init__(self, graph, r, s, pairs):
        self.graph = graph
        self.r = r
        self.s = s
        self.pairs = tuple(sorted(pairs))
        assert self.is_valid(), f'not a matching between the given sides: {self.pairs}'

    def __len__(self):
        return len(self.pairs)

    def __repr__(self):
        return f'<Matching {list(self.pairs)}>'

    @property
    def size(self):
        return len(self.pairs)

    def is_valid(self):
        used = 0
        for u, v in self.pairs:
            if not (self.r >> u & 1 and self.s >> v & 1 and self.graph.has_edge(u, v)):
                return False
            if used >> u & 1 or used >> v & 1:
                return False
            used |= 1 << u | 1 << v
        return True

    def vertices(self):
        result = 0
        for u, v in self.pairs:
            result |= 1 << u | 1 << v
        return result

    def r_side(self):
        result = 0
        for u, _ in self.pairs:
            result |= 1 << u
        return result

    def s_side(self):
        result = 0
        for _, v in self.pairs:
            result |= 1 << v
        return result

    def saturates(self, mask):
        return mask & ~self.vertices() == 0

    def partner(self, v):
        for a, b in self.pairs:
            if a == v:
                return b
            if b == v:
                return a
        return None

    def swapped(self):
        return Matching(self.graph, self.s, self.r, [(v, u) for u, v in self.pairs])


def _try_augment(rows, s, u, match_r, match_s, visited):
    for v in iter_bits(rows[u] & s):
        if v in visited:
            continue
        visited.add(v)
        if v not in match_s or _try_augment(rows, s, match_s[v], match_r, match_s, visited):
            match_r[u] = v
            match_s[v] = u
            return True
    return False


def _augment_all(g, r, s, match_r, match_s):
    for u in iter_bits(r):
        if u not in match_r:
            _try_augment(g.rows, s, u, match_r, match_s, set())


def max_bipartite_matching(g, r, s):
    """
    Maximum matching between `r` and `s` by augmenting paths, scanning vertices in index order.

    Augmenting from every free vertex of `r` once is enough: a vertex that fails to augment never becomes
    augmentable later.
    """
    check_vertex_set(g, r, name='r')
    check_vertex_set(g, s, name='s')
    _check_disjoint(r, s)
    match_r, match_s = {}, {}
    _augment_all(g, r, s, match_r, match_s)
    return Matching(g, r, s, match_r.items())


def is_matchable(g, y, a):
    _check_disjoint(y, a, names='y and a')
    return max_bipartite_matching(g, y, a).size == popcount(y)


def saturating_max_matching(g, r, s, r_prime):
    """
    A maximum matching between `r` and `s` that saturates `r_prime`, or None if `r_prime` is not matchable into `s`.

    Start from a matching saturating `r_prime` and extend it along augmenting paths. Augmenting never unmatches a
    vertex of `r`, so `r_prime` stays saturated, and the result is maximum once no augmenting path is left.
    """
    check_vertex_set(g, r, name='r')
    check_vertex_set(g, s, name='s')
    if r_prime & ~r:
        raise SolverException(f'r_prime must be a subset of r, {members(r_prime & ~r)} are not in r')
    _check_disjoint(r, s)

    match_r, match_s = {}, {}
    _augment_all(g, r_prime, s, match_r, match_s)
    if len(match_r) < popcount(r_prime):
        return None
    _augment_all(g, r, s, match_r, match_s)
    result = Matching(g, r, s, match_r.items())
    assert result.saturates(r_prime)
    return result


def _alternating_reach(g, matching):
    """
    Vertices reachable from the unmatched `r` vertices by alternating paths (non-matching edges r->s, matching edges s->r).
    """
    r, s, rows = matching.r, matching.s, g.rows
    match_s = {v: u for u, v in matching.pairs}
    frontier = members(r & ~matching.r_side())
    reached = 0
    for u in frontier:
        reached |= 1 << u
    while frontier:
        u = frontier.pop()
        for v in iter_bits(rows[u] & s & ~reached):
            reached |= 1 << v
            w = match_s.get(v)
            if w is not None and not reached >> w & 1:
                reached |= 1 << w
                frontier.append(w)
    return reached


def minimum_vertex_cover(g, r, s):
    """
    Minimum vertex cover of the bipartite graph between `r` and `s`, by König's construction from a maximum matching.
    """
    matching = max_bipartite_matching(g, r, s)
    reached = _alternating_reach(g, matching)
    cover = (r & ~reached) | (s & reached)
    assert popcount(cover) == matching.size
    return cover


def minimum_vertex_cover_size(g, r, s):
    return popcount(minimum_vertex_cover(g, r, s))


def hall_violator(g, y, a):
    """
    A set D ⊆ y with fewer than |D| neighbours in `a`, or None if `y` is matchable into `a`.
    """
    matching = max_bipartite_matching(g, y, a)
    free = y & ~matching.r_side()
    if not free:
        return None
    match_s = {v: u for u, v in matching.pairs}
    start = lowest_bit(free)
    reached = 1 << start
    frontier = [start]
    while frontier:
        u = frontier.pop()
        for v in iter_bits(g.rows[u] & a & ~reached):
            reached |= 1 << v
            w = match_s.get(v)
            assert w is not None, "augmenting path left in a maximum matching"
            if not reached >> w & 1:
                reached |= 1 << w
                frontier.append(w)
    deficient = reached & y
    assert popcount(_neighbors_in(g, deficient, a)) < popcount(deficient)
    return deficient


def _neighbors_in(g, mask, a):
    result = 0
    for v in iter_bits(mask):
        result |= g.rows[v] & a
    return result