import random

import pytest

from conftest import random_graph_corpus
from gridmatch.complexes import independence_complex
from gridmatch.errors import InvalidParameterError
from gridmatch.families import build_family
from gridmatch.graphs import (Graph, V, add_edge, build_cycle, build_path,
                              build_grid)
from gridmatch.homology import betti_reduced
from gridmatch.isomorphism import are_isomorphic
from gridmatch.reduction import (detect_contractible, fold_reduce,
                                 format_step, format_trace, reduce_pipeline,
                                 simplicial_split, try_add_edge)


def betti(g):
    if g == "contractible":
        return {}
    return betti_reduced(independence_complex(g), "rank").as_dict()


def test_fold_g2_removes_w1():
    g = build_family("G", 2)
    terminal, trace = fold_reduce(g)
    removed = {s.witness[1] for s in trace.steps}
    assert V("w", 1) in removed
    # after w1, the 6-cycle admits no further folds
    assert are_isomorphic(terminal, build_cycle(6)) is not None


def test_fold_collapses_edgeless_graph():
    g = Graph.from_edges([V("p", i) for i in range(1, 5)], [])
    terminal, trace = fold_reduce(g)
    assert len(terminal) == 1
    assert len(trace.steps) == 3


def test_fold_leaves_c6_alone():
    g = build_cycle(6)
    terminal, trace = fold_reduce(g)
    assert terminal == g and trace.steps == ()


def test_fold_leaves_c5_alone():
    g = build_cycle(5)
    terminal, _ = reduce_pipeline(g)
    assert terminal == g


def test_detect_contractible():
    assert detect_contractible(build_path(1)) == V("p", 1)
    assert detect_contractible(build_cycle(6)) is None


def test_simplicial_split_q1():
    g = build_family("Q", 1)
    pieces = simplicial_split(g, V("q", 7))
    assert len(pieces) == 2
    # neighbors sorted q5 < q6; the q5 piece is a 4-path
    assert are_isomorphic(pieces[0], build_path(4)) is not None


def test_simplicial_split_f1():
    g = build_family("F", 1)
    pieces = simplicial_split(g, V("f", 3))
    assert len(pieces) == 2
    for p in pieces:
        assert are_isomorphic(p, build_path(2)) is not None


def test_simplicial_split_path_leaf():
    # split at a leaf of P_3: the single piece is P_3 - N[p2], the empty
    # graph, whose Ind is the (-1)-sphere; suspension gives S^0 = Ind(P_3)
    g = build_path(3)
    pieces = simplicial_split(g, V("p", 1))
    assert len(pieces) == 1
    assert set(pieces[0].vertices) == set()
    assert betti(pieces[0]) == {-1: 1}
    assert betti(g) == {0: 1}


def test_simplicial_split_rejects_nonsimplicial():
    g = build_path(3)
    with pytest.raises(InvalidParameterError) as err:
        simplicial_split(g, V("p", 2))
    assert "p1" in str(err.value) and "p3" in str(err.value)


def test_try_add_edge_p4_refuses():
    g = build_path(4)
    assert try_add_edge(g, V("p", 1), V("p", 4)) is None


def test_try_add_edge_adjacent_pair_errors():
    g = build_path(4)
    with pytest.raises(InvalidParameterError):
        try_add_edge(g, V("p", 1), V("p", 2))


def test_try_add_edge_with_certificate():
    # path 1-2-3 plus isolated z: removing N[{1,3}] leaves z isolated
    z = V("t", "z")
    g = Graph.from_edges([V("p", 1), V("p", 2), V("p", 3), z],
                         [(V("p", 1), V("p", 2)), (V("p", 2), V("p", 3))])
    h = try_add_edge(g, V("p", 1), V("p", 3))
    assert h is not None and h.has_edge(V("p", 1), V("p", 3))
    assert betti(g) == betti(h)


def test_try_add_edge_b2_double_prime():
    # the B_2 computation's edge-deletion step: B_2'' = B_2 - N[b4] - {v1}
    # minus the edge (u1, v2); re-adding (u1, v2) is certified by the
    # isolated vertex b2 in B_2'' - N[{u1, v2}]
    from gridmatch.graphs import closed_neighborhood, delete_edges, delete_vertices
    b2 = build_family("B", 2)
    b2p = delete_vertices(b2, closed_neighborhood(b2, {V("b", 4)}))
    b2pp = delete_edges(delete_vertices(b2p, {V("v", 1)}),
                        [frozenset((V("u", 1), V("v", 2)))])
    h = delete_vertices(b2pp, closed_neighborhood(b2pp, {V("u", 1), V("v", 2)}))
    assert h.degree(V("b", 2)) == 0
    restored = try_add_edge(b2pp, V("u", 1), V("v", 2))
    assert restored is not None
    assert betti(restored) == betti(b2pp)


def test_pipeline_star_graph():
    # Ind(K_{1,3}) = (simplex on the leaves) ⊔ (center point) ≃ S^0:
    # folds stop at a 2-path worth of structure and no cone certificate
    # exists, so the pipeline must NOT report contractible.
    c = V("t", "c")
    leaves = [V("p", i) for i in range(1, 4)]
    g = Graph.from_edges([c] + leaves, [(c, l) for l in leaves])
    assert betti(g) == {0: 1}
    terminal, _ = reduce_pipeline(g)
    assert terminal != "contractible"
    assert betti(terminal) == {0: 1}


def test_pipeline_m1_contractible():
    # Ind(M_1) ≃ pt; folding cascades all the way to a cone certificate
    terminal, trace = reduce_pipeline(build_family("M", 1))
    assert terminal == "contractible"
    assert trace.steps[-1].rule == "cone-detect"
    assert betti(build_family("M", 1)) == {}


def test_trace_replay_bit_exact():
    for g in [build_family("G", 2), build_family("M", 1), build_cycle(6),
              build_grid(2, 3)]:
        terminal, trace = reduce_pipeline(g)
        assert trace.replay() == terminal
        assert trace.initial == g


def test_trace_format():
    _, trace = reduce_pipeline(build_family("M", 1))
    text = format_trace(trace)
    assert text.startswith("FOLD u=")
    assert "CONE isolated=" in text
    assert text.rstrip().endswith("TERMINAL contractible")


def test_step_format_all_rules():
    from gridmatch.reduction import ReductionStep
    assert format_step(ReductionStep("fold", (V("p", 1), V("p", 2)))) == "FOLD u=p1 remove=p2"
    assert format_step(ReductionStep("cone-detect", (V("p", 1),))) == "CONE isolated=p1"
    assert "SPLIT at=p1" in format_step(
        ReductionStep("simplicial-split", (V("p", 1), (V("p", 2),))))
    assert "ADDEDGE" in format_step(
        ReductionStep("add-edge", (V("p", 1), V("p", 3), V("t", "z"))))


def test_fold_preserves_betti_small_corpus():
    # the acceptance suite runs the full 500-graph sweep; spot-check here
    for g in random_graph_corpus(61, 40, max_vertices=9):
        before = betti(g)
        terminal, _ = fold_reduce(g)
        assert betti(terminal) == before


def test_pipeline_contractible_verdicts_are_sound():
    for g in random_graph_corpus(71, 40, max_vertices=9):
        terminal, _ = reduce_pipeline(g)
        if terminal == "contractible":
            assert betti(g) == {}


def test_simplicial_split_bookkeeping_small():
    rng = random.Random(3)
    checked = 0
    for g in random_graph_corpus(81, 120, max_vertices=8):
        vs = [v for v in sorted(g.vertices)
              if g.degree(v) > 0 and not _nonsimplicial(g, v)]
        if not vs:
            continue
        v = vs[0]
        pieces = simplicial_split(g, v)
        combined = {}
        for p in pieces:
            for d, b in betti(p).items():
                combined[d + 1] = combined.get(d + 1, 0) + b
        assert combined == betti(g)
        checked += 1
    assert checked >= 10


def _nonsimplicial(g, v):
    from gridmatch.reduction import is_simplicial
    return is_simplicial(g, v) is not None


def test_add_edge_preserves_betti_when_certified():
    rng = random.Random(13)
    hits = 0
    for g in random_graph_corpus(91, 80, max_vertices=8):
        vs = sorted(g.vertices)
        nonedges = [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]
                    if not g.has_edge(a, b)]
        if not nonedges:
            continue
        a, b = nonedges[rng.randrange(len(nonedges))]
        h = try_add_edge(g, a, b)
        if h is not None:
            assert betti(h) == betti(g)
            hits += 1
    assert hits >= 5
