"""
Canonical labeling by colour refinement and individualization.

The vertex colouring is refined until equitable; if cells remain that are not singletons, each vertex of the
first such cell is individualized in turn and the search recurses. Every discrete colouring gives a labeling;
the canonical one is the labeling whose relabeled adjacency rows compare largest. Vertices of the target cell
that are open or closed twins of an already individualized vertex are skipped: swapping twins is an
automorphism that fixes the current colouring.
"""
from ramsey_turan.base import iter_bits
from ramsey_turan.graph6 import encode_graph6


def _refine(rows, colors):
    cell_count = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in iter_bits(row))))
            for v, row in enumerate(rows)
        ]
        index = {signature: i for i, signature in enumerate(sorted(set(signatures)))}
        colors = [index[signature] for signature in signatures]
        if len(index) == cell_count:
            return colors
        cell_count = len(index)


def _individualize(colors, v):
    result = [2 * c + 1 for c in colors]
    result[v] = 2 * colors[v]
    return result


def _relabeled_rows(rows, labeling):
    position = [0] * len(labeling)
    for i, v in enumerate(labeling):
        position[v] = i
    result = []
    for v in labeling:
        row = 0
        for u in iter_bits(rows[v]):
            row |= 1 << position[u]
        result.append(row)
    return tuple(result)


class _Search:
    def __init__(self, g):
        self.rows = g.rows
        self.best_key = None
        self.best_labeling = None

    def run(self, colors):
        colors = _refine(self.rows, colors)
        n = len(colors)
        if len(set(colors)) == n:
            labeling = sorted(range(n), key=colors.__getitem__)
            key = _relabeled_rows(self.rows, labeling)
            if self.best_key is None or key > self.best_key:
                self.best_key = key
                self.best_labeling = labeling
            return

        target = min(c for c in set(colors) if colors.count(c) > 1)
        tried = set()
        for v in range(n):
            if colors[v] != target:
                continue
            open_row, closed_row = self.rows[v], self.rows[v] | 1 << v
            if (0, open_row) in tried or (1, closed_row) in tried:
                continue
            tried.add((0, open_row))
            tried.add((1, closed_row))
            self.run(_individualize(colors, v))


def canonical_labeling(g):
    """
    Return `labeling` with `labeling[i]` the vertex placed at position `i` in the canonical form.
    """
    if g.order == 0:
        return []
    search = _Search(g)
    search.run([0] * g.order)
    return search.best_labeling


def canonical_graph(g):
    return g.relabel(canonical_labeling(g))


def canonical_form(g):
    return encode_graph6(canonical_graph(g))


def are_isomorphic(g, h):
    if g.order != h.order or g.edge_count != h.edge_count:
        return False
    return canonical_form(g) == canonical_form(h)
