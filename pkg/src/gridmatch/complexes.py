"""Simplicial complexes stored by facets, and the operations on them.

A complex keeps its maximal faces only; full face enumeration is
materialized on demand (FaceTable) because facet lists are exponentially
smaller on everything in scope.  Complexes built directly from a graph
carry the graph along, which unlocks a much faster face enumeration
(faces = independent sets); complexes produced by link/deletion/join/...
are enumerated generically from their facets, so facet-level operations
and graph-level identities stay independently checkable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import InvalidParameterError, ResourceLimitError
from .graphs import Graph, VertexLabel, line_graph

DEFAULT_FACE_BUDGET = 50_000_000


def _antichain(sets):
    """Keep only maximal sets."""
    out = []
    for s in sorted(set(sets), key=len, reverse=True):
        if not any(s < t or s == t for t in out):
            out.append(s)
    return out


def _canon_facets(facets):
    return tuple(sorted(facets, key=lambda f: sorted(f)))


@dataclass(frozen=True)
class SimplicialComplex:
    """vertices: canonical vertex order; facets: maximal faces (antichain).

    The empty complex (only face: the empty set) has facets == (frozenset(),).
    """

    vertices: tuple
    facets: tuple
    flag_graph: Optional[Graph] = field(default=None, compare=False, repr=False)

    @staticmethod
    def from_facets(faces: Iterable, vertices: Iterable = None,
                    flag_graph: Graph = None) -> "SimplicialComplex":
        facets = _antichain(frozenset(f) for f in faces)
        if not facets:
            facets = [frozenset()]
        covered = frozenset().union(*facets)
        verts = frozenset(vertices) if vertices is not None else covered
        if not covered <= verts:
            raise InvalidParameterError("facet vertex missing from vertex set")
        if verts - covered:
            # vertices not inside any larger face are facets themselves
            facets = _antichain(facets + [frozenset((v,)) for v in verts - covered])
        return SimplicialComplex(tuple(sorted(verts)), _canon_facets(facets), flag_graph)

    def __post_init__(self):
        vs = frozenset(self.vertices)
        for f in self.facets:
            if not f <= vs:
                raise InvalidParameterError("facet vertex missing from vertex set")
        for f in self.facets:
            for g in self.facets:
                if f < g:
                    raise InvalidParameterError("facet list is not an antichain")

    # -- queries ---------------------------------------------------------

    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def is_face(self, sigma) -> bool:
        s = frozenset(sigma)
        return any(s <= f for f in self.facets)

    def __contains__(self, sigma):
        return self.is_face(sigma)


@dataclass(frozen=True)
class FaceTable:
    """Per-dimension face lists; each face a tuple of vertices in canonical order."""

    by_dimension: dict

    def counts(self) -> dict:
        return {d: len(fs) for d, fs in sorted(self.by_dimension.items())}

    def total(self) -> int:
        return sum(len(fs) for fs in self.by_dimension.values())


# -- building complexes from graphs -----------------------------------------

def _bitmask_adjacency(g: Graph):
    verts = g.sorted_vertices()
    idx = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for v in verts:
        for u in g.adjacency[v]:
            adj[idx[v]] |= 1 << idx[u]
    return verts, adj


def independence_complex(g: Graph) -> SimplicialComplex:
    """Faces = independent vertex sets of g; facets via pivoting Bron-Kerbosch."""
    verts, adj = _bitmask_adjacency(g)
    n = len(verts)
    if n == 0:
        return SimplicialComplex.from_facets([frozenset()], [], flag_graph=g)
    full = (1 << n) - 1
    comp = [full & ~adj[i] & ~(1 << i) for i in range(n)]  # complement adjacency
    facets = []

    def bk(r, p, x):
        if p == 0 and x == 0:
            facets.append(r)
            return
        pux = p | x
        # pivot: vertex of P|X with most complement-neighbors in P
        best, pivot = -1, -1
        m = pux
        while m:
            b = m & -m
            i = b.bit_length() - 1
            c = bin(p & comp[i]).count("1")
            if c > best:
                best, pivot = c, i
            m ^= b
        cand = p & ~comp[pivot]
        while cand:
            b = cand & -cand
            i = b.bit_length() - 1
            bk(r | b, p & comp[i], x & comp[i])
            p &= ~b
            x |= b
            cand ^= b

    bk(0, full, 0)
    out = []
    for mask in facets:
        fs = set()
        m = mask
        while m:
            b = m & -m
            fs.add(verts[b.bit_length() - 1])
            m ^= b
        out.append(frozenset(fs))
    return SimplicialComplex.from_facets(out, g.vertices, flag_graph=g)


def matching_complex(g: Graph) -> SimplicialComplex:
    """M(g) = Ind(L(g)); vertices are edge-pair labels."""
    return independence_complex(line_graph(g))


# -- simplicial operations ---------------------------------------------------

def link(k: SimplicialComplex, sigma) -> SimplicialComplex:
    s = frozenset(sigma)
    if not k.is_face(s):
        raise InvalidParameterError(f"{sorted(s)} is not a face")
    if not s:
        return SimplicialComplex.from_facets(k.facets, k.vertices, k.flag_graph)
    return SimplicialComplex.from_facets(f - s for f in k.facets if s <= f)


def deletion(k: SimplicialComplex, sigma) -> SimplicialComplex:
    s = frozenset(sigma)
    if not s:
        raise InvalidParameterError("deletion of the empty face is disallowed")
    new = []
    for f in k.facets:
        if s <= f:
            new.extend(f - {x} for x in s)
        else:
            new.append(f)
    return SimplicialComplex.from_facets(new)


def join(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    if set(k1.vertices) & set(k2.vertices):
        raise InvalidParameterError("join requires disjoint vertex sets")
    return SimplicialComplex.from_facets(
        (f1 | f2 for f1 in k1.facets for f2 in k2.facets),
        tuple(k1.vertices) + tuple(k2.vertices))


def cone(k: SimplicialComplex, apex: VertexLabel) -> SimplicialComplex:
    if apex in k.vertices:
        raise InvalidParameterError(f"apex {apex} already a vertex")
    return SimplicialComplex.from_facets(f | {apex} for f in k.facets)


def suspension(k: SimplicialComplex, north: VertexLabel, south: VertexLabel) -> SimplicialComplex:
    if north == south:
        raise InvalidParameterError("suspension poles must differ")
    for pole in (north, south):
        if pole in k.vertices:
            raise InvalidParameterError(f"pole {pole} already a vertex")
    facets = [f | {north} for f in k.facets] + [f | {south} for f in k.facets]
    return SimplicialComplex.from_facets(facets)


# -- face enumeration --------------------------------------------------------

def face_table(k: SimplicialComplex, max_dim: int = None,
               budget: int = DEFAULT_FACE_BUDGET) -> FaceTable:
    """All faces per dimension (downward closed by construction).

    The empty face is recorded at dimension -1.  Aborts with
    ResourceLimitError if more than `budget` faces would be produced.
    """
    if max_dim is None:
        max_dim = k.dimension()
    by_dim = {-1: [()]}
    if k.flag_graph is not None:
        gen = _faces_from_graph(k.flag_graph, max_dim)
    else:
        gen = _faces_from_facets(k, max_dim)
    count = 1
    for face in gen:
        count += 1
        if count > budget:
            raise ResourceLimitError(
                f"face budget {budget} exceeded", dimension=len(face) - 1)
        by_dim.setdefault(len(face) - 1, []).append(face)
    for d in by_dim:
        by_dim[d].sort()
    return FaceTable(by_dim)


def _faces_from_graph(g: Graph, max_dim: int):
    verts, adj = _bitmask_adjacency(g)
    n = len(verts)
    stack = [((), 0, 0)]
    while stack:
        face, start, forb = stack.pop()
        if len(face) > max_dim:
            continue
        for i in range(start, n):
            if not (forb >> i) & 1:
                nf = face + (verts[i],)
                yield nf
                if len(nf) <= max_dim:
                    stack.append((nf, i + 1, forb | adj[i] | (1 << i)))


def _faces_from_facets(k: SimplicialComplex, max_dim: int):
    verts = list(k.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    fmasks = []
    for f in k.facets:
        m = 0
        for v in f:
            m |= 1 << idx[v]
        fmasks.append(m)
    # DFS: a face extends by any vertex above its last, inside some
    # still-compatible facet; each face is produced exactly once.
    stack = [((), 0, fmasks)]
    while stack:
        face, start, compat = stack.pop()
        if len(face) > max_dim:
            continue
        union = 0
        for m in compat:
            union |= m
        union >>= start
        i = start
        while union:
            if union & 1:
                sub = [m for m in compat if (m >> i) & 1]
                nf = face + (verts[i],)
                yield nf
                if len(nf) <= max_dim:
                    stack.append((nf, i + 1, sub))
            union >>= 1
            i += 1


# -- text export --------------------------------------------------------------

def format_facets(k: SimplicialComplex, name: str = "complex") -> str:
    lines = [f"# facets of {name}"]
    for f in k.facets:
        lines.append(" ".join(str(v) for v in sorted(f)) if f else "(empty)")
    return "\n".join(lines) + "\n"
