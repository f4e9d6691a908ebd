from itertools import combinations

from ramsey_turan.base import (
    members,
    popcount,
)
from ramsey_turan.constructions import andrasfai
from ramsey_turan.graph import (
    is_independent,
    new_graph,
)


def pentagon():
    """
    Γ_2, the 5-cycle with edges 02, 03, 13, 14, 24.
    """
    return andrasfai(2)


def wagner():
    return andrasfai(3)


def all_graphs(order):
    pairs = list(combinations(range(order), 2))
    for mask in range(1 << len(pairs)):
        yield new_graph(order, [pair for i, pair in enumerate(pairs) if mask >> i & 1])


def brute_force_independence_number(g):
    return max(
        (popcount(mask) for mask in range(1 << g.order) if is_independent(g, mask)),
        default=0,
    )


def brute_force_vertex_cover_size(g, r, s):
    edges = [(u, v) for u in members(r) for v in members(s) if g.has_edge(u, v)]
    candidates = members(r | s)
    for size in range(len(candidates) + 1):
        for cover in combinations(candidates, size):
            if all(u in cover or v in cover for u, v in edges):
                return size


def from_networkx(nx_graph):
    return new_graph(nx_graph.number_of_nodes(), nx_graph.edges())


def to_networkx(g):
    import networkx as nx
    result = nx.Graph()
    result.add_nodes_from(range(g.order))
    result.add_edges_from(g.edges())
    return result
