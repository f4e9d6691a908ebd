"""
Exhaustive computation of ex(n, s), the largest edge count of a triangle-free graph on `n` vertices with
independence number at most `s`.

Graphs are grown one vertex at a time by canonical augmentation. The new vertex gets an independent neighbourhood
among the vertices of degree below `s` that meets every independent `s`-set of the parent, so every generated graph
is triangle-free with independence number at most `s`. A child is kept only if its new vertex lies in the orbit of
the canonically chosen deletion vertex, which makes every isomorphism class appear exactly once.

A node is cut off when even the best completion permitted by the degree cap `s` can not beat the best edge count
known so far. The tree is split at a fixed depth; the subtrees are explored independently and only share the best
edge count.
"""
import multiprocessing
from contextlib import nullcontext

from tri_declarative import (
    Refinable,
    RefinableObject,
    dispatch,
)
from tri_struct import Struct

from ramsey_turan import conf
from ramsey_turan.base import (
    RamseyTuranException,
    lowest_bit,
    popcount,
)
from ramsey_turan.canonical import (
    canonical_form,
    canonical_labeling,
)
from ramsey_turan.constructions import extremal_blowup
from ramsey_turan.formulas import (
    K_RANGE,
    formula_point,
)
from ramsey_turan.graph import (
    Graph,
    complete_bipartite,
    delete_vertices,
    empty_graph,
    is_triangle_free,
    new_graph,
)
from ramsey_turan.graph6 import (
    decode_graph6,
    encode_graph6,
)
from ramsey_turan.solvers import (
    has_independent_set,
    independent_sets_of_size,
)
from ramsey_turan.trace import (
    timed,
    trace,
)

SOLVED = 'solved'
INFEASIBLE = 'infeasible'
NODE_LIMIT = 'node-limit'

PROVEN = 'proven'
LOWER_BOUND_ONLY = 'lower-bound-only'
BELOW_THIRD_STATUS = 'below-third'

MAX_BRUTE_FORCE_ORDER = 7

# Nodes a worker counts locally before publishing them to the shared counter.
_FLUSH_INTERVAL = 1024


class SearchException(RamseyTuranException):
    pass


class SearchProblem(RefinableObject):
    """
    One ex(n, s) computation.

    :param n: number of vertices, at most `conf.MAX_SEARCH_ORDER`
    :param s: bound on the independence number
    :param witnesses: collect every extremal graph up to isomorphism instead of a single one
    :param workers: number of processes exploring subtrees
    :param node_limit: give up after visiting this many nodes
    :param split_depth: order of the subtree roots handed to workers, default `n // 2`
    """

    n = Refinable()
    s = Refinable()
    witnesses = Refinable()
    workers = Refinable()
    node_limit = Refinable()
    split_depth = Refinable()

    @dispatch(
        witnesses=False,
        workers=conf.DEFAULT_WORKERS,
        node_limit=conf.DEFAULT_NODE_LIMIT,
        split_depth=None,
    )
    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        if self.n is None or self.s is None:
            raise SearchException('n and s are required')
        if not 0 <= self.n <= conf.MAX_SEARCH_ORDER:
            raise SearchException(f'n must be between 0 and {conf.MAX_SEARCH_ORDER}, got {self.n}')
        if not 0 <= self.s <= self.n:
            raise SearchException(f'need 0 <= s <= n, got n={self.n}, s={self.s}')
        if self.workers < 1:
            raise SearchException(f'workers must be at least 1, got {self.workers}')
        if self.node_limit < 1:
            raise SearchException(f'node_limit must be at least 1, got {self.node_limit}')
        if self.split_depth is not None and self.split_depth < 0:
            raise SearchException(f'split_depth must be nonnegative, got {self.split_depth}')

    def __repr__(self):
        return f'<SearchProblem n={self.n} s={self.s}>'


class SearchReport(Struct):
    def witness_graphs(self):
        return [decode_graph6(code) for code in self.witnesses]


class _Cell:
    """
    In-process stand-in for a `multiprocessing.Value`.
    """

    def __init__(self, value):
        self.value = value

    def get_lock(self):
        return nullcontext()


def best_known(n, s):
    """
    The best construction for (n, s), or None: the extremal Andrásfai blow-up for `n/3 < s < n/2`, the balanced
    complete bipartite graph from `s >= n/2` on.
    """
    if 3 * s > n and 2 * s < n:
        g, _, _ = extremal_blowup(n, s)
        return g
    if 2 * s >= n and n > 0:
        return complete_bipartite((n + 1) // 2, n // 2)
    return None


def edge_bound(g, n, s):
    """
    Most edges any completion of `g` to `n` vertices can have when every degree stays at most `s`.
    """
    remaining = n - g.order
    room = remaining * s
    to_old = min(sum(s - d for d in g.degrees()), room)
    among_new = min(remaining * remaining // 4, (room - to_old) // 2)
    return g.edge_count + to_old + among_new


def _neighbourhoods(rows, candidates, room, chosen, unhit):
    if any(not b & candidates for b in unhit):
        return
    if not candidates:
        yield chosen
        return
    v = lowest_bit(candidates)
    bit = 1 << v
    rest = candidates & ~bit
    yield from _neighbourhoods(
        rows,
        rest & ~rows[v] if room > 1 else 0,
        room - 1,
        chosen | bit,
        [b for b in unhit if not b & bit],
    )
    yield from _neighbourhoods(rows, rest, room, chosen, unhit)


def _children(g, s, blockers):
    """
    One child per admissible neighbourhood of a new vertex `g.order`: an independent set of at most `s` vertices of
    degree below `s` meeting every independent `s`-set of `g`.
    """
    order = g.order
    low = 0
    for v, row in enumerate(g.rows):
        if popcount(row) < s:
            low |= 1 << v
    for neighbourhood in _neighbourhoods(g.rows, low, s, 0, blockers):
        rows = [row | 1 << order if neighbourhood >> v & 1 else row for v, row in enumerate(g.rows)]
        rows.append(neighbourhood)
        yield Graph(order + 1, rows)


def _accepted_code(child, parent_code):
    """
    Canonical code of `child` if its newest vertex is a canonical deletion vertex, else None.

    The deletion vertex is the minimum degree vertex placed last by the canonical labeling. The new vertex is in
    its orbit exactly when deleting the deletion vertex gives back the parent up to isomorphism.
    """
    new = child.order - 1
    degrees = child.degrees()
    low = min(degrees)
    if degrees[new] > low:
        return None
    labeling = canonical_labeling(child)
    deletion = next(v for v in reversed(labeling) if degrees[v] == low)
    if deletion != new and canonical_form(delete_vertices(child, 1 << deletion)) != parent_code:
        return None
    return encode_graph6(child.relabel(labeling))


class _Explorer:
    def __init__(self, n, s, *, collect, best, nodes, node_limit, split_depth=None, first_only=False):
        self.n = n
        self.s = s
        self.collect = collect
        self.best_cell = best
        self.nodes_cell = nodes
        self.node_limit = node_limit
        self.split_depth = split_depth
        self.first_only = first_only

        self.frontier = []
        self.local_best = -1
        self.witnesses = set()
        self.nodes = 0
        self.limit_hit = False
        self.stopped = False
        self._pending = 0
        self._seen_total = nodes.value

    @property
    def best(self):
        return max(self.local_best, self.best_cell.value)

    @property
    def halted(self):
        return self.stopped or self.limit_hit

    def flush(self, check=True):
        with self.nodes_cell.get_lock():
            self.nodes_cell.value += self._pending
            self._seen_total = self.nodes_cell.value
        self._pending = 0
        if check and self.node_limit is not None and self._seen_total > self.node_limit and not self.limit_hit:
            self.limit_hit = True
            trace(f'ex({self.n},{self.s}): node limit {self.node_limit} reached', fg='red')

    def _count(self):
        self.nodes += 1
        self._pending += 1
        over = self.node_limit is not None and self._seen_total + self._pending > self.node_limit
        if over or self._pending >= _FLUSH_INTERVAL:
            self.flush()
        return not self.limit_hit

    def _publish(self, edges):
        with self.best_cell.get_lock():
            improved = edges > self.best_cell.value
            if improved:
                self.best_cell.value = edges
        if improved:
            trace(f'ex({self.n},{self.s}) >= {edges}', fg='green')

    def _pruned(self, g):
        bound = edge_bound(g, self.n, self.s)
        if self.collect:
            return bound < self.best
        return bound <= self.best

    def _leaf(self, g):
        if not self._count():
            return
        edges = g.edge_count
        best = self.best
        if edges < best or (edges == best and not self.collect):
            return
        if edges > self.local_best:
            self.local_best = edges
            self.witnesses = set()
        self.witnesses.add(canonical_form(g))
        self._publish(edges)
        if self.first_only:
            self.stopped = True

    def explore(self, g, code):
        if self.halted:
            return
        if self.split_depth is not None and g.order == self.split_depth:
            self.frontier.append((g, code))
            return
        if not self._count() or self._pruned(g):
            return

        blockers = independent_sets_of_size(g, self.s) if self.s <= g.order else []
        last = g.order + 1 == self.n
        seen = set()
        for child in _children(g, self.s, blockers):
            if last:
                self._leaf(child)
            else:
                child_code = _accepted_code(child, code)
                if child_code is not None and child_code not in seen:
                    seen.add(child_code)
                    self.explore(child, child_code)
            if self.halted:
                return


_ROOT = empty_graph(0)
_ROOT_CODE = encode_graph6(_ROOT)

_shared_best = None
_shared_nodes = None


def _init_worker(shared_best, shared_nodes):
    global _shared_best, _shared_nodes
    _shared_best = shared_best
    _shared_nodes = shared_nodes


def _run_subtree(task, best, nodes):
    n, s, collect, node_limit, g, code = task
    explorer = _Explorer(n, s, collect=collect, best=best, nodes=nodes, node_limit=node_limit)
    explorer.explore(g, code)
    explorer.flush(check=False)
    trace(f'ex({n},{s}): subtree {code.decode("ascii")} done, {explorer.nodes} nodes', detail=True)
    return explorer.local_best, sorted(explorer.witnesses), explorer.nodes, explorer.limit_hit


def _explore_subtree(task):
    return _run_subtree(task, _shared_best, _shared_nodes)


def _first_witness(n, s, edges):
    """
    The first graph with `edges` edges in exploration order.
    """
    explorer = _Explorer(n, s, collect=True, best=_Cell(edges), nodes=_Cell(0), node_limit=None, first_only=True)
    explorer.explore(_ROOT, _ROOT_CODE)
    assert explorer.witnesses, f'no graph with {edges} edges for ex({n},{s})'
    return next(iter(explorer.witnesses))


def _search(problem):
    n, s = problem.n, problem.s
    stats = Struct(nodes=0, elapsed=None, workers=problem.workers, subtrees=0)
    if n == 0:
        return SearchReport(n=n, s=s, status=SOLVED, max_edges=0, lower_bound=None, witnesses=[_ROOT_CODE.decode('ascii')], stats=stats)
    if s == 0:
        return SearchReport(n=n, s=s, status=INFEASIBLE, max_edges=None, lower_bound=None, witnesses=[], stats=stats)

    known = best_known(n, s)
    known_edges = known.edge_count if known is not None else -1
    parallel = problem.workers > 1
    if parallel:
        best = multiprocessing.Value('q', known_edges)
        nodes = multiprocessing.Value('q', 0)
    else:
        best = _Cell(known_edges)
        nodes = _Cell(0)

    depth = min(n // 2 if problem.split_depth is None else problem.split_depth, n - 1)
    splitter = _Explorer(n, s, collect=problem.witnesses, best=best, nodes=nodes, node_limit=problem.node_limit, split_depth=depth)
    splitter.explore(_ROOT, _ROOT_CODE)
    splitter.flush(check=False)

    tasks = [] if splitter.limit_hit else [
        (n, s, problem.witnesses, problem.node_limit, g, code)
        for g, code in splitter.frontier
    ]
    stats.subtrees = len(tasks)
    trace(f'ex({n},{s}): {len(tasks)} subtrees at order {depth}')

    if parallel and len(tasks) > 1:
        with multiprocessing.Pool(processes=min(problem.workers, len(tasks)), initializer=_init_worker, initargs=(best, nodes)) as pool:
            results = pool.map(_explore_subtree, tasks)
    else:
        results = [_run_subtree(task, best, nodes) for task in tasks]
    stats.nodes = nodes.value

    top = max([known_edges] + [local_best for local_best, _, _, _ in results])
    limit_hit = splitter.limit_hit or any(hit for _, _, _, hit in results)
    if limit_hit:
        status = NODE_LIMIT
    elif top < 0:
        status = INFEASIBLE
    else:
        status = SOLVED

    codes = set()
    if top >= 0:
        for local_best, found, _, _ in results:
            if local_best == top and (problem.witnesses or limit_hit):
                codes.update(found)
        if not codes:
            if known_edges == top:
                codes.add(canonical_form(known))
            elif status == SOLVED:
                codes.add(_first_witness(n, s, top))

    return SearchReport(
        n=n,
        s=s,
        status=status,
        max_edges=top if top >= 0 else None,
        lower_bound=known_edges if known is not None else None,
        witnesses=sorted(code.decode('ascii') for code in codes),
        stats=stats,
    )


def ex_search(problem=None, **kwargs):
    """
    Run `problem`, or a `SearchProblem` built from `kwargs`.

    The report is the same for any number of workers, apart from `stats`. Without witness collection a single
    witness is reported: the construction when it is extremal, otherwise the first extremal graph in exploration
    order.
    """
    if problem is None:
        problem = SearchProblem(**kwargs)
    else:
        assert not kwargs, 'pass either a SearchProblem or keyword arguments'
    with timed(f'ex({problem.n},{problem.s})', n=problem.n, s=problem.s) as timing:
        report = _search(problem)
    report.stats.elapsed = timing['duration']
    return report


def conjecture_band(n):
    """
    The integers `s` with `n/3 < s < 3n/8`, where the upper bound is conjectured but not proven.
    """
    return [s for s in range(n + 1) if 3 * s > n and 8 * s < 3 * n]


def _table_row(report, previous):
    n, s = report.n, report.s
    point = formula_point(n, s)
    construction = best_known(n, s) if point.region == K_RANGE else None
    row = Struct(
        n=n,
        s=s,
        status=report.status,
        ex=report.max_edges,
        g=point.g,
        g_floor=point.g_floor,
        trivial=point.trivial,
        mantel=point.mantel,
        k=point.k,
        region=point.region,
        construction=construction.edge_count if construction is not None else None,
        conjecture_ok=None,
        failures=[],
    )
    if report.status != SOLVED:
        return row

    ex = report.max_edges
    if ex > point.trivial:
        row.failures.append(f'ex = {ex} exceeds the trivial bound {point.trivial}')
    if previous is not None and previous.ex is not None and previous.ex > ex:
        row.failures.append(f'ex({n},{s - 1}) = {previous.ex} exceeds ex = {ex}')
    if construction is not None and ex < construction.edge_count:
        row.failures.append(f'ex = {ex} is below the construction with {construction.edge_count} edges')
    row.conjecture_ok = ex <= point.g_floor

    if 3 * s <= n:
        row.status = BELOW_THIRD_STATUS
    elif 8 * s >= 3 * n or point.g_floor == point.trivial:
        row.status = PROVEN
        if ex != point.g_floor:
            row.failures.append(f'ex = {ex} differs from the proven value {point.g_floor}')
    else:
        row.status = LOWER_BOUND_ONLY
    return row


def verify_table(n_max, n_min=1, **kwargs):
    """
    Search every (n, s) with `n_min <= n <= n_max` and compare against the closed forms.

    Rows where the formula is a theorem must match it exactly, rows in the conjecture band are only checked from
    below by the construction. `kwargs` are passed on to `SearchProblem`.
    """
    if not 0 <= n_max <= conf.MAX_SEARCH_ORDER:
        raise SearchException(f'n_max must be between 0 and {conf.MAX_SEARCH_ORDER}, got {n_max}')
    rows = []
    for n in range(n_min, n_max + 1):
        previous = None
        for s in range(0, n + 1):
            row = _table_row(ex_search(n=n, s=s, **kwargs), previous)
            for failure in row.failures:
                trace(f'table ({n},{s}): {failure}', fg='red')
            rows.append(row)
            previous = row
    return Struct(
        n_max=n_max,
        rows=rows,
        passed=not any(row.failures for row in rows),
    )


def brute_force_ex(n, s):
    """
    ex(n, s) by trying every labelled graph on `n` vertices, with the extremal graphs as sorted canonical codes.
    """
    if not 0 <= n <= MAX_BRUTE_FORCE_ORDER:
        raise SearchException(f'brute force is limited to n <= {MAX_BRUTE_FORCE_ORDER}, got {n}')
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    best = -1
    found = set()
    for mask in range(1 << len(pairs)):
        edges = popcount(mask)
        if edges < best:
            continue
        g = new_graph(n, [pair for i, pair in enumerate(pairs) if mask >> i & 1])
        if not is_triangle_free(g) or has_independent_set(g, s + 1):
            continue
        if edges > best:
            best = edges
            found = set()
        found.add(canonical_form(g))
    return Struct(
        max_edges=best if best >= 0 else None,
        witnesses=sorted(code.decode('ascii') for code in found),
    )
