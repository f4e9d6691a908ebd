from ramsey_turan import conf
from ramsey_turan.base import (
    RamseyTuranException,
    iter_bits,
    members,
    popcount,
)


class GraphException(RamseyTuranException):
    pass


class Graph:
    """
    Immutable simple graph on the vertices `0..order-1`.

    Adjacency is stored as one integer bit row per vertex: bit `j` of `rows[i]` is set iff `i` and `j` are adjacent.
    Vertex sets throughout the package are plain integer bitmasks over the same indices.
    """

    __slots__ = ('order', 'rows', '_edge_count')

    def __init__(self, order, rows):
        object.__setattr__(self, 'order', order)
        object.__setattr__(self, 'rows', tuple(rows))
        object.__setattr__(self, '_edge_count', None)

    def __setattr__(self, key, value):
        raise AttributeError(f'Graph is immutable, can not set {key}')

    def __reduce__(self):
        return Graph, (self.order, self.rows)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.rows == other.rows

    def __hash__(self):
        return hash((self.order, self.rows))

    def __repr__(self):
        return f'<Graph order={self.order} edges={self.edge_count}>'

    @property
    def all_vertices(self):
        return (1 << self.order) - 1

    @property
    def edge_count(self):
        if self._edge_count is None:
            object.__setattr__(self, '_edge_count', sum(popcount(row) for row in self.rows) // 2)
        return self._edge_count

    def has_edge(self, u, v):
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v):
        return self.rows[v]

    def degree(self, v):
        return popcount(self.rows[v])

    def degrees(self):
        return [popcount(row) for row in self.rows]

    def edges(self):
        return [
            (u, v)
            for u in range(self.order)
            for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))
        ]

    def complement(self):
        everything = self.all_vertices
        return Graph(self.order, [everything & ~row & ~(1 << v) for v, row in enumerate(self.rows)])

    def relabel(self, order):
        """
        Return the graph whose vertex `i` is vertex `order[i]` of this graph.
        """
        assert sorted(order) == list(range(self.order)), 'relabel needs a permutation of the vertices'
        position = [0] * self.order
        for i, v in enumerate(order):
            position[v] = i
        rows = []
        for v in order:
            row = 0
            for u in iter_bits(self.rows[v]):
                row |= 1 << position[u]
            rows.append(row)
        return Graph(self.order, rows)


def _check_order(order):
    if order < 0:
        raise GraphException(f'order must be nonnegative, got {order}')
    if order > conf.MAX_ORDER:
        raise GraphException(f'order {order} exceeds the supported maximum of {conf.MAX_ORDER}')


def new_graph(order, edges=()):
    _check_order(order)
    rows = [0] * order
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise GraphException(f'endpoint out of range: ({u}, {v}) in a graph of order {order}')
        if u == v:
            raise GraphException(f'self-loop at vertex {u}')
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, rows)


def graph_from_rows(order, rows):
    _check_order(order)
    rows = list(rows)
    if len(rows) != order:
        raise GraphException(f'expected {order} rows, got {len(rows)}')
    everything = (1 << order) - 1
    for v, row in enumerate(rows):
        if row & ~everything:
            raise GraphException(f'row {v} has bits outside the vertex range')
        if row >> v & 1:
            raise GraphException(f'self-loop at vertex {v}')
        for u in iter_bits(row):
            if not rows[u] >> v & 1:
                raise GraphException(f'adjacency is not symmetric at ({v}, {u})')
    return Graph(order, rows)


def empty_graph(order):
    return new_graph(order)


def complete_graph(order):
    _check_order(order)
    everything = (1 << order) - 1
    return Graph(order, [everything & ~(1 << v) for v in range(order)])


def complete_bipartite(a, b):
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    _check_order(a + b)
    return Graph(a + b, [right] * a + [left] * b)


def cycle(order):
    if order < 3:
        raise GraphException(f'a cycle needs at least 3 vertices, got {order}')
    return new_graph(order, [(v, (v + 1) % order) for v in range(order)])


def path(order):
    return new_graph(order, [(v, v + 1) for v in range(order - 1)])


def star(leaves):
    return new_graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def vertex_set(g, indices):
    result = 0
    for i in indices:
        if not 0 <= i < g.order:
            raise GraphException(f'vertex {i} out of range for a graph of order {g.order}')
        result |= 1 << i
    return result


def check_vertex_set(g, mask, name='vertex set'):
    if mask < 0 or mask >> g.order:
        raise GraphException(f'{name} {members(mask)} is not a subset of the {g.order} vertices')
    return mask


def is_triangle_free(g):
    rows = g.rows
    for u in range(g.order):
        higher = rows[u] >> (u + 1) << (u + 1)
        for v in iter_bits(higher):
            if rows[u] & rows[v]:
                return False
    return True


def find_triangle(g):
    rows = g.rows
    for u in range(g.order):
        for v in iter_bits(rows[u] >> (u + 1) << (u + 1)):
            common = rows[u] & rows[v]
            if common:
                w = (common & -common).bit_length() - 1
                return tuple(sorted((u, v, w)))
    return None


def degree_profile(g):
    degrees = g.degrees()
    return degrees, max(degrees, default=0)


def induced_subgraph(g, keep):
    check_vertex_set(g, keep, name='keep')
    kept = members(keep)
    position = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        row = 0
        for u in iter_bits(g.rows[v] & keep):
            row |= 1 << position[u]
        rows.append(row)
    return Graph(len(kept), rows)


def delete_vertices(g, removed):
    return induced_subgraph(g, g.all_vertices & ~removed)


def is_independent(g, mask):
    rows = g.rows
    return not any(rows[v] & mask for v in iter_bits(mask))


def neighborhood(g, mask):
    """
    The set of vertices adjacent to at least one member of `mask`.
    """
    result = 0
    for v in iter_bits(mask):
        result |= g.rows[v]
    return result


def common_neighbors(g, u, v):
    return g.rows[u] & g.rows[v]


def edges_between(g, a, b):
    return sum(popcount(g.rows[v] & b) for v in iter_bits(a))


def twin_classes(g):
    """
    Partition of the vertices into classes of identical open neighbourhoods, ordered by smallest member.
    """
    by_row = {}
    for v, row in enumerate(g.rows):
        by_row.setdefault(row, []).append(v)
    return sorted((tuple(c) for c in by_row.values()), key=lambda c: c[0])


def to_dot(g, name='G'):
    lines = [f'graph {name} {{']
    lines += [f'    {v};' for v in range(g.order) if not g.rows[v]]
    lines += [f'    {u} -- {v};' for u, v in g.edges()]
    lines.append('}')
    return '\n'.join(lines) + '\n'


def restrict_mask(keep, mask):
    """
    Translate `mask` into the vertex numbering of `induced_subgraph(g, keep)`.
    """
    result = 0
    for i, v in enumerate(iter_bits(keep)):
        if mask >> v & 1:
            result |= 1 << i
    return result
