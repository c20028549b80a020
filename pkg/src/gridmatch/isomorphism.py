"""Graph isomorphism for small labeled graphs.

Backtracking search with iterated neighborhood-color refinement for pruning.
Everything the wedge calculus needs to recognize is tiny (single-digit to a
few dozen vertices), so the search is capped rather than made clever.
"""

from __future__ import annotations

from .errors import SizeLimitError
from .graphs import Graph

MAX_VERTICES = 64


def _refine_colors(g: Graph, rounds: int = 3):
    color = {v: g.degree(v) for v in g.vertices}
    for _ in range(rounds):
        sig = {}
        for v in g.vertices:
            sig[v] = (color[v], tuple(sorted(color[u] for u in g.adjacency[v])))
        # compress signatures to small ints, canonically
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        color = {v: palette[sig[v]] for v in g.vertices}
    return color


def are_isomorphic(g: Graph, h: Graph):
    """Return a witnessing vertex bijection g -> h, or None.

    Deterministic for fixed inputs: candidates are tried in canonical label
    order.  Raises SizeLimitError above MAX_VERTICES.
    """
    if len(g) > MAX_VERTICES or len(h) > MAX_VERTICES:
        raise SizeLimitError(f"isomorphism search capped at {MAX_VERTICES} vertices")
    if len(g) != len(h) or g.num_edges() != h.num_edges():
        return None
    gc = _refine_colors(g)
    hc = _refine_colors(h)
    if sorted(gc.values()) != sorted(hc.values()):
        return None

    h_by_color = {}
    for v in sorted(h.vertices):
        h_by_color.setdefault(hc[v], []).append(v)

    # order g's vertices: rarest color first, then canonically
    color_size = {c: len(vs) for c, vs in h_by_color.items()}
    order = sorted(g.vertices, key=lambda v: (color_size[gc[v]], gc[v], v))

    mapping = {}
    used = set()

    def extend(i):
        if i == len(order):
            return True
        v = order[i]
        for w in h_by_color[gc[v]]:
            if w in used:
                continue
            ok = True
            for u in g.adjacency[v]:
                if u in mapping and not h.has_edge(mapping[u], w):
                    ok = False
                    break
            if ok:
                # non-edges must also be preserved (same degree per color
                # does not guarantee it once partially mapped)
                for u, wu in mapping.items():
                    if g.has_edge(v, u) != h.has_edge(w, wu):
                        ok = False
                        break
            if ok:
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    if extend(0):
        return dict(mapping)
    return None
