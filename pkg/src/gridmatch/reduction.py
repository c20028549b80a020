"""Homotopy-preserving graph reductions with replayable traces.

Three rewrite rules operate at the graph level while preserving the
homotopy type of the independence complex:

* fold: if N(u) ⊆ N(u'), u ≠ u', then u' can be removed;
* cone detection: an isolated vertex makes Ind(g) a cone, hence
  contractible (this is the only contractibility certificate used);
* simplicial split: a simplicial vertex v with N(v) = {w_1..w_k} splits
  Ind(g) into the wedge of suspensions of Ind(g - N[w_i]);
* add-edge: a non-edge (a,b) may be added when Ind(g - N[{a,b}]) is
  certified contractible, here via an isolated vertex.

Each applied step records a witness that can be re-checked against the
pre-step graph, so traces replay deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InvalidParameterError
from .graphs import (Graph, VertexLabel, add_edge, closed_neighborhood,
                     delete_vertices)


@dataclass(frozen=True)
class ReductionStep:
    rule: str        # fold | cone-detect | simplicial-split | add-edge
    witness: tuple   # rule-specific: see format_step

    def __str__(self):
        return format_step(self)


@dataclass(frozen=True)
class ReductionTrace:
    initial: Graph
    steps: tuple
    terminal: object  # Graph, or the string "contractible"

    def replay(self) -> object:
        """Re-apply the recorded steps to `initial`; returns the terminal."""
        g = self.initial
        for step in self.steps:
            g = apply_step(g, step)
        if self.steps and self.steps[-1].rule == "cone-detect":
            return "contractible"
        return g


def format_step(step: ReductionStep) -> str:
    if step.rule == "fold":
        u, up = step.witness
        return f"FOLD u={u} remove={up}"
    if step.rule == "cone-detect":
        (v,) = step.witness
        return f"CONE isolated={v}"
    if step.rule == "simplicial-split":
        v, nbrs = step.witness
        return f"SPLIT at={v} neighbors=[{','.join(str(w) for w in nbrs)}]"
    if step.rule == "add-edge":
        a, b, cert = step.witness
        return f"ADDEDGE a={a} b={b} cert={cert}"
    raise InvalidParameterError(f"unknown rule {step.rule!r}")


def format_trace(trace: ReductionTrace) -> str:
    lines = [format_step(s) for s in trace.steps]
    if trace.terminal == "contractible":
        lines.append("TERMINAL contractible")
    else:
        lines.append(f"TERMINAL vertices={len(trace.terminal)}")
    return "\n".join(lines) + "\n"


def apply_step(g: Graph, step: ReductionStep) -> Graph:
    """Apply one step, re-verifying its witness condition."""
    if step.rule == "fold":
        u, up = step.witness
        if u == up or not g.neighbors(u) <= g.neighbors(up):
            raise InvalidParameterError(f"fold witness fails: N({u}) ⊄ N({up})")
        return delete_vertices(g, {up})
    if step.rule == "cone-detect":
        (v,) = step.witness
        if g.degree(v) != 0:
            raise InvalidParameterError(f"{v} is not isolated")
        return g
    if step.rule == "add-edge":
        a, b, cert = step.witness
        h = delete_vertices(g, closed_neighborhood(g, {a, b}))
        if cert not in h.vertices or h.degree(cert) != 0:
            raise InvalidParameterError(f"add-edge certificate {cert} fails")
        return add_edge(g, a, b)
    raise InvalidParameterError(f"step {step.rule!r} is not graph-to-graph")


def _find_fold(g: Graph) -> Optional[tuple]:
    """Smallest eligible u' in canonical order, with its smallest witness u."""
    verts = g.sorted_vertices()
    for up in verts:
        nup = g.neighbors(up)
        for u in verts:
            if u != up and g.neighbors(u) <= nup:
                return (u, up)
    return None


def fold_reduce(g: Graph) -> tuple:
    """Fold until no pair N(u) ⊆ N(u') remains; Ind is preserved throughout.

    Returns (terminal graph, ReductionTrace).
    """
    initial = g
    steps = []
    while True:
        hit = _find_fold(g)
        if hit is None:
            break
        steps.append(ReductionStep("fold", hit))
        g = delete_vertices(g, {hit[1]})
    return g, ReductionTrace(initial, tuple(steps), g)


def detect_contractible(g: Graph) -> Optional[VertexLabel]:
    """An isolated vertex if any (sufficient for contractibility), else None."""
    for v in g.sorted_vertices():
        if g.degree(v) == 0:
            return v
    return None


def is_simplicial(g: Graph, v: VertexLabel) -> Optional[tuple]:
    """None if v's neighborhood is a clique, else a non-adjacent pair."""
    nbrs = sorted(g.neighbors(v))
    for i in range(len(nbrs)):
        for j in range(i + 1, len(nbrs)):
            if not g.has_edge(nbrs[i], nbrs[j]):
                return (nbrs[i], nbrs[j])
    return None


def simplicial_split(g: Graph, v: VertexLabel) -> list:
    """[g - N[w] for w in N(v)], valid when v is simplicial.

    Ind(g) is then the wedge over the pieces of Σ(Ind(piece)).
    """
    if v not in g.vertices:
        raise InvalidParameterError(f"unknown vertex {v}")
    bad = is_simplicial(g, v)
    if bad is not None:
        raise InvalidParameterError(
            f"{v} is not simplicial: neighbors {bad[0]}, {bad[1]} are not adjacent")
    return [delete_vertices(g, closed_neighborhood(g, {w}))
            for w in sorted(g.neighbors(v))]


def try_add_edge(g: Graph, a: VertexLabel, b: VertexLabel) -> Optional[Graph]:
    """Add the non-edge (a,b) if an isolated vertex certifies g - N[{a,b}]
    contractible; otherwise None.  Ind's homotopy type is preserved."""
    if g.has_edge(a, b):
        raise InvalidParameterError(f"({a},{b}) is already an edge")
    h = delete_vertices(g, closed_neighborhood(g, {a, b}))
    cert = detect_contractible(h)
    if cert is None:
        return None
    return add_edge(g, a, b)


def reduce_pipeline(g: Graph) -> tuple:
    """Fold to a fixed point, then look for a cone certificate.

    Returns (terminal, trace) where terminal is a Graph or "contractible".
    simplicial_split and try_add_edge are never applied automatically: the
    former replaces one graph by several, the latter needs a caller-chosen
    non-edge.
    """
    initial = g
    g, fold_trace = fold_reduce(g)
    steps = list(fold_trace.steps)
    iso = detect_contractible(g)
    if iso is not None:
        steps.append(ReductionStep("cone-detect", (iso,)))
        return "contractible", ReductionTrace(initial, tuple(steps), "contractible")
    return g, ReductionTrace(initial, tuple(steps), g)
