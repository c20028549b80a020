"""Labeled simple graphs: vertex labels, construction, and basic operations.

Vertices are structured labels (a class letter plus integer indices) so that
derived objects, e.g. line-graph vertices named by the underlying edge pair,
stay exactly expressible instead of being flattened to strings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering
from typing import Iterable

from .errors import InvalidParameterError

# Label kinds with single-letter canonical spellings like "u1", "b4".
_LETTER_KINDS = frozenset("uvwxyabdjomqfh")


@total_ordering
@dataclass(frozen=True)
class VertexLabel:
    """A graph vertex: a label class plus index data.

    kind: one of the single-letter family classes ("u", "v", ..., "h"),
        "p" for path/cycle positions, "cell" for grid cells (row, col),
        "edge" for line-graph vertices (index holds the two endpoint
        labels, sorted), or "t" for opaque tokens read from edge-list files.
    """

    kind: str
    index: tuple = ()

    def __str__(self):
        if self.kind == "cell":
            return f"({self.index[0]},{self.index[1]})"
        if self.kind == "edge":
            a, b = self.index
            return f"{a}~{b}"
        if self.kind == "t":
            return str(self.index[0])
        return self.kind + "".join(str(i) for i in self.index)

    def __repr__(self):
        return f"VertexLabel({str(self)!r})"

    def sort_key(self):
        return (self.kind, tuple(_part_key(p) for p in self.index))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()


def _part_key(part):
    if isinstance(part, VertexLabel):
        return ("v", part.sort_key())
    if isinstance(part, int):
        return ("i", part)
    return ("s", str(part))


def V(kind: str, *index) -> VertexLabel:
    """Shorthand constructor: V('u', 1) -> u1."""
    return VertexLabel(kind, tuple(index))


def edge_label(a: VertexLabel, b: VertexLabel) -> VertexLabel:
    lo, hi = sorted((a, b))
    return VertexLabel("edge", (lo, hi))


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph over VertexLabel vertices."""

    vertices: frozenset = field(default_factory=frozenset)
    adjacency: dict = field(default_factory=dict)

    @staticmethod
    def from_edges(vertices: Iterable[VertexLabel], edges: Iterable) -> "Graph":
        verts = frozenset(vertices)
        adj = {v: set() for v in verts}
        for e in edges:
            a, b = tuple(e)
            if a == b:
                raise InvalidParameterError(f"self-loop at {a}")
            if a not in verts or b not in verts:
                raise InvalidParameterError(f"edge ({a},{b}) uses unknown vertex")
            adj[a].add(b)
            adj[b].add(a)
        return Graph(verts, {v: frozenset(ns) for v, ns in adj.items()})

    def __post_init__(self):
        for v, ns in self.adjacency.items():
            if v not in self.vertices:
                raise InvalidParameterError(f"adjacency key {v} not a vertex")
            for u in ns:
                if u not in self.vertices:
                    raise InvalidParameterError(f"neighbor {u} of {v} not a vertex")
                if v not in self.adjacency.get(u, frozenset()):
                    raise InvalidParameterError(f"asymmetric edge ({v},{u})")
            if v in ns:
                raise InvalidParameterError(f"self-loop at {v}")

    # -- queries ---------------------------------------------------------

    def neighbors(self, v: VertexLabel) -> frozenset:
        if v not in self.vertices:
            raise InvalidParameterError(f"unknown vertex {v}")
        return self.adjacency.get(v, frozenset())

    def degree(self, v: VertexLabel) -> int:
        return len(self.neighbors(v))

    def has_edge(self, a: VertexLabel, b: VertexLabel) -> bool:
        return b in self.adjacency.get(a, frozenset())

    def edges(self) -> set:
        return {frozenset((a, b)) for a in self.vertices for b in self.adjacency[a] if a < b}

    def num_edges(self) -> int:
        return sum(len(ns) for ns in self.adjacency.values()) // 2

    def sorted_vertices(self) -> list:
        return sorted(self.vertices)

    def __len__(self):
        return len(self.vertices)


# -- neighborhoods --------------------------------------------------------

def neighbors(g: Graph, s: Iterable[VertexLabel]) -> frozenset:
    """Open neighborhood N(S)."""
    s = frozenset(s)
    out = set()
    for v in s:
        out |= g.neighbors(v)
    return frozenset(out)


def closed_neighborhood(g: Graph, s: Iterable[VertexLabel]) -> frozenset:
    """Closed neighborhood N[S] = N(S) ∪ S."""
    s = frozenset(s)
    return neighbors(g, s) | s


# -- deletion / induced subgraphs ------------------------------------------

def delete_vertices(g: Graph, s: Iterable[VertexLabel]) -> Graph:
    s = frozenset(s)
    for v in s:
        if v not in g.vertices:
            raise InvalidParameterError(f"unknown vertex {v}")
    keep = g.vertices - s
    return Graph(keep, {v: g.adjacency[v] - s for v in keep})


def induced_subgraph(g: Graph, u: Iterable[VertexLabel]) -> Graph:
    u = frozenset(u)
    for v in u:
        if v not in g.vertices:
            raise InvalidParameterError(f"unknown vertex {v}")
    return Graph(u, {v: g.adjacency[v] & u for v in u})


def delete_edges(g: Graph, es: Iterable) -> Graph:
    """Remove edges, keeping all vertices."""
    gone = set()
    for e in es:
        a, b = tuple(e)
        if not g.has_edge(a, b):
            raise InvalidParameterError(f"({a},{b}) is not an edge")
        gone.add(frozenset((a, b)))
    adj = {}
    for v in g.vertices:
        adj[v] = frozenset(u for u in g.adjacency[v] if frozenset((v, u)) not in gone)
    return Graph(g.vertices, adj)


def add_edge(g: Graph, a: VertexLabel, b: VertexLabel) -> Graph:
    if a not in g.vertices or b not in g.vertices:
        raise InvalidParameterError("unknown endpoint")
    if a == b:
        raise InvalidParameterError("self-loop")
    adj = dict(g.adjacency)
    adj[a] = adj[a] | {b}
    adj[b] = adj[b] | {a}
    return Graph(g.vertices, adj)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    overlap = g.vertices & h.vertices
    if overlap:
        raise InvalidParameterError(f"vertex sets overlap: {sorted(overlap)[:3]}")
    adj = dict(g.adjacency)
    adj.update(h.adjacency)
    return Graph(g.vertices | h.vertices, adj)


# -- elementary builders ---------------------------------------------------

def build_path(r: int) -> Graph:
    """Path on vertices p1..pr."""
    if r < 1:
        raise InvalidParameterError("path needs r >= 1")
    vs = [V("p", i) for i in range(1, r + 1)]
    return Graph.from_edges(vs, [(vs[i], vs[i + 1]) for i in range(r - 1)])


def build_cycle(r: int) -> Graph:
    """Cycle on vertices p1..pr; requires r >= 3."""
    if r < 3:
        raise InvalidParameterError("cycle needs r >= 3")
    vs = [V("p", i) for i in range(1, r + 1)]
    edges = [(vs[i], vs[i + 1]) for i in range(r - 1)] + [(vs[0], vs[-1])]
    return Graph.from_edges(vs, edges)


def build_grid(m: int, n: int) -> Graph:
    """m x n grid: cells (i,j) adjacent at Manhattan distance 1."""
    if m < 1 or n < 1:
        raise InvalidParameterError("grid needs m, n >= 1")
    vs = [V("cell", i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
    edges = []
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if j < n:
                edges.append((V("cell", i, j), V("cell", i, j + 1)))
            if i < m:
                edges.append((V("cell", i, j), V("cell", i + 1, j)))
    return Graph.from_edges(vs, edges)


def line_graph(g: Graph) -> Graph:
    """Line graph: one vertex per edge; adjacency = shared endpoint."""
    evs = {}
    for e in g.edges():
        a, b = tuple(e)
        evs[e] = edge_label(a, b)
    edges = []
    items = sorted(evs.items(), key=lambda kv: kv[1])
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i][0] & items[j][0]:
                edges.append((items[i][1], items[j][1]))
    return Graph.from_edges(evs.values(), edges)


# -- edge-list text format --------------------------------------------------
#
# One edge per line: two whitespace-separated vertex tokens.  Lines starting
# with '#' are comments.  Isolated vertices are declared as 'v <token>'.

def parse_edge_list(text: str) -> Graph:
    verts = set()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "v":
            if len(parts) != 2:
                raise InvalidParameterError(f"line {lineno}: bad vertex declaration")
            verts.add(V("t", parts[1]))
            continue
        if len(parts) != 2:
            raise InvalidParameterError(f"line {lineno}: expected two tokens")
        a, b = V("t", parts[0]), V("t", parts[1])
        verts.update((a, b))
        edges.append((a, b))
    return Graph.from_edges(verts, edges)


def format_edge_list(g: Graph, name: str = "graph") -> str:
    lines = [f"# edges of {name}"]
    seen = set()
    for a in g.sorted_vertices():
        for b in sorted(g.adjacency[a]):
            if a < b:
                lines.append(f"{a} {b}")
                seen.update((a, b))
    for v in g.sorted_vertices():
        if v not in seen:
            lines.append(f"v {v}")
    return "\n".join(lines) + "\n"
