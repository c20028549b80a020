"""The ten graph families G, B, A, D, J, O, M, Q, F, H.

Each family attaches a fixed gadget to G_n, the line graph of the 3 x n
grid.  Edge sets follow the definitions exactly, with two documented
transcription fixes (see README):

* E(G_2) is produced by instantiating the n >= 3 edge formula at n = 2.
  The ad-hoc listing duplicates (w1,v1) and omits (w1,v2), while the
  drawing of G_2 includes v2-w1; the general formula agrees with the
  drawing.
* E(O_n) for n >= 2 uses the drawn gadget {o1u1, o1v1, o1o4, o2v1, o2x1,
  o2w1, o2o4, o2o5, o3x1, o3y1, o3o6, o4o5, o5o7, o6o8, o7o9, o8o9};
  the ad-hoc listing ("(o1,v4)", "(o5 o8)", missing o5o7/o6o8) is
  inconsistent with O_1 and with every reduction step that uses O_n.
"""

from __future__ import annotations

from .errors import InvalidParameterError
from .graphs import Graph, V, VertexLabel, build_grid, edge_label, line_graph

FAMILY_TAGS = "GBADJOMQFH"


def family_id(tag: str) -> str:
    t = tag.upper()
    if t not in FAMILY_TAGS:
        raise InvalidParameterError(f"unknown family {tag!r}; expected one of {FAMILY_TAGS}")
    return t


def _grid3_line_vertices(n):
    vs = [V("v", j) for j in range(1, n + 1)] + [V("x", j) for j in range(1, n + 1)]
    for i in range(1, n):
        vs += [V("u", i), V("w", i), V("y", i)]
    return vs


def _grid3_line_edges(n):
    """E(G_n): the n >= 3 formula, also valid at n = 2; G_1 is one edge."""
    def u(i): return V("u", i)
    def v(i): return V("v", i)
    def w(i): return V("w", i)
    def x(i): return V("x", i)
    def y(i): return V("y", i)
    if n == 1:
        return [(v(1), x(1))]
    edges = []
    for i in range(1, n):
        edges += [(u(i), v(i)), (v(i), w(i)), (w(i), x(i)), (x(i), y(i)),
                  (y(i), x(i + 1)), (x(i + 1), w(i)), (w(i), v(i + 1)), (v(i + 1), u(i))]
    for i in range(1, n - 1):
        edges += [(u(i), u(i + 1)), (w(i), w(i + 1)), (y(i), y(i + 1))]
    for j in range(1, n + 1):
        edges.append((v(j), x(j)))
    return edges


def build_family(tag: str, n: int) -> Graph:
    """Build the n-th member of one of the ten families."""
    f = family_id(tag)
    if n < 1:
        raise InvalidParameterError("family index n must be >= 1")
    verts = list(_grid3_line_vertices(n))
    edges = list(_grid3_line_edges(n))
    u1, v1, w1, x1, y1 = V("u", 1), V("v", 1), V("w", 1), V("x", 1), V("y", 1)

    def aux(kind, count):
        vs = [V(kind, i) for i in range(1, count + 1)]
        verts.extend(vs)
        return vs

    if f == "G":
        pass
    elif f == "B":
        b1, b2, b3, b4 = aux("b", 4)
        if n == 1:
            edges += [(b1, v1), (b1, b2), (b2, b3), (b3, b4), (b4, x1)]
        else:
            edges += [(b1, u1), (b1, v1), (b1, b2), (b2, b3), (b3, b4), (b4, x1), (b4, y1)]
    elif f == "A":
        (a,) = aux("a", 1)
        edges += [(a, x1), (a, v1)]
        if n >= 2:
            edges.append((a, w1))
    elif f == "D":
        (d,) = aux("d", 1)
        edges.append((d, v1))
        if n >= 2:
            edges.append((d, u1))
    elif f == "J":
        j1, j2, j3, j4, j5, j6 = aux("j", 6)
        edges += [(j1, v1), (j1, x1), (j1, j3), (j1, j4), (j2, x1), (j2, j3),
                  (j2, j5), (j3, j4), (j3, j5), (j4, j6), (j5, j6)]
        if n >= 2:
            edges += [(j2, y1), (j1, w1)]
    elif f == "O":
        o1, o2, o3, o4, o5, o6, o7, o8, o9 = aux("o", 9)
        edges += [(o1, v1), (o1, o4), (o2, v1), (o2, x1), (o2, o4), (o2, o5),
                  (o3, x1), (o3, o6), (o4, o5), (o5, o7), (o6, o8), (o7, o9), (o8, o9)]
        if n >= 2:
            edges += [(o1, u1), (o2, w1), (o3, y1)]
    elif f == "M":
        m1, m2, m3 = aux("m", 3)
        edges += [(m1, v1), (m1, x1), (m1, m2), (m2, m3), (m3, x1)]
        if n >= 2:
            edges += [(m1, w1), (m3, y1)]
    elif f == "Q":
        q1, q2, q3, q4, q5, q6, q7 = aux("q", 7)
        edges += [(q1, v1), (q1, q3), (q1, q4), (q2, v1), (q2, x1), (q2, q3),
                  (q2, q5), (q3, q4), (q3, q5), (q4, q6), (q5, q6), (q5, q7), (q6, q7)]
        if n >= 2:
            edges += [(q1, u1), (q2, w1)]
    elif f == "F":
        f1, f2, f3, f4 = aux("f", 4)
        edges += [(f1, v1), (f1, x1), (f1, f2), (f2, f3), (f2, f4), (f3, f4), (f4, x1)]
        if n >= 2:
            edges += [(f1, w1), (f4, y1)]
    elif f == "H":
        h1, h2, h3, h4 = aux("h", 4)
        edges += [(h1, v1), (h1, h2), (h2, h3), (h2, h4), (h3, h4), (h4, v1), (h4, x1)]
        if n >= 2:
            edges += [(h1, u1), (h4, w1)]
    return Graph.from_edges(verts, edges)


def grid3_line_mapping(n: int) -> dict:
    """Explicit vertex bijection line_graph(grid(3,n)) -> build_family('G', n).

    Row-1/2/3 horizontal grid edges map to u_i/w_i/y_i, the column-j
    vertical edges map to v_j (rows 1-2) and x_j (rows 2-3).
    """
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    cell = lambda i, j: V("cell", i, j)
    mapping = {}
    for j in range(1, n + 1):
        mapping[edge_label(cell(1, j), cell(2, j))] = V("v", j)
        mapping[edge_label(cell(2, j), cell(3, j))] = V("x", j)
    for i, kind in ((1, "u"), (2, "w"), (3, "y")):
        for j in range(1, n):
            mapping[edge_label(cell(i, j), cell(i, j + 1))] = V(kind, j)
    return mapping


def is_isomorphism(g: Graph, h: Graph, mapping: dict) -> bool:
    """Check that mapping is a vertex bijection g -> h preserving edges both ways."""
    if set(mapping) != set(g.vertices) or set(mapping.values()) != set(h.vertices):
        return False
    if len(set(mapping.values())) != len(mapping):
        return False
    for a in g.vertices:
        for b in g.adjacency[a]:
            if not h.has_edge(mapping[a], mapping[b]):
                return False
    return g.num_edges() == h.num_edges()


def matching_grid3_graph(n: int) -> Graph:
    """L(grid(3,n)) relabeled with the canonical u/v/w/x/y names, i.e. G_n."""
    return build_family("G", n)
