import random

import pytest

from hyperhom.errors import InputError, SizeCapError
from hyperhom.hypergraph import Hypergraph, VertexSpace, empty_like
from hyperhom import randgen, topology as tp
from conftest import brute_path_distance


def expected_sets(two_faces):
    h = two_faces.total

    def mk(*edges):
        return frozenset(tuple(sorted(h.space.id_of(v) for v in e)) for e in edges)

    return h, two_faces.sub, mk


def test_operator_table(two_faces):
    h, a, mk = expected_sets(two_faces)
    assert tp.complement(h, a).edges == mk(("v2",), ("v0", "v1", "v2"))
    assert tp.closed_complement(h, a).edges == mk(
        ("v0",), ("v1",), ("v2",), ("v0", "v1"), ("v0", "v1", "v2")
    )
    assert tp.boundary(h, a).edges == mk(("v0",), ("v1",), ("v0", "v1"))
    assert tp.interior(h, a).edges == mk(("v3",), ("v0", "v1", "v3"))
    assert tp.closure(h, a).edges == a.edges


def test_operator_trivial_cases(spiked):
    h, _ = spiked
    assert tp.closure(h, empty_like(h)).edges == frozenset()
    assert tp.interior(h, h).edges == h.edges


def test_openness_flags(two_faces):
    h, a, _ = expected_sets(two_faces)
    assert tp.is_open(h, tp.complement(h, a))
    assert tp.is_closed(h, a)
    assert tp.openness(h, empty_like(h)) == (True, True)
    assert tp.openness(h, h) == (True, True)


def test_closure_equals_intersection_with_delta(rng):
    # cl(H,A) agrees with H ∩ ΔA degreewise (the closed-form identity)
    for _ in range(30):
        h = randgen.random_hypergraph(rng, max_vertices=6, max_edges=8)
        a = randgen.random_sub(rng, h)
        via_def = tp.closure(h, a)
        via_delta = h.intersection(a.delta_closure())
        assert via_def.edges == via_delta.edges


def test_disjoint_decomposition(rng):
    for _ in range(30):
        h = randgen.random_hypergraph(rng, max_vertices=6, max_edges=8)
        a = randgen.random_sub(rng, h)
        interior = tp.interior(h, a)
        bd = tp.boundary(h, a)
        comp = tp.complement(h, a)
        cc = tp.closed_complement(h, a)
        assert interior.edges | bd.edges | comp.edges == h.edges
        assert not (interior.edges & bd.edges) and not (bd.edges & comp.edges) and not (interior.edges & comp.edges)
        assert interior.edges | bd.edges == a.edges
        assert bd.edges | comp.edges == cc.edges
        assert comp <= cc
        assert cc.edges == h.intersection(comp.delta_closure()).edges
        assert tp.boundary(h, comp).edges == comp.intersection(a.delta_closure()).edges


def test_simplicial_sub_is_closed(rng):
    for _ in range(20):
        h = randgen.random_hypergraph(rng, max_vertices=6, max_edges=8)
        a = randgen.random_sub(rng, h).lower_closure()
        if a <= h:
            assert tp.is_closed(h, a)


def test_closed_iff_simplicial_inside_complex(rng):
    for _ in range(20):
        h = randgen.random_hypergraph(rng, max_vertices=5, max_edges=6).delta_closure()
        a = randgen.random_sub(rng, h)
        assert tp.is_closed(h, a) == a.is_simplicial


def test_neighborhood_examples(two_faces):
    h, a, mk = expected_sets(two_faces)
    comp = tp.complement(h, a)
    # hyperedges meeting {v2} or {v0,v1,v2}: everything but the lone {v3}
    assert tp.neighborhood(h, comp).edges == h.edges - mk(("v3",))
    assert tp.neighborhood(h, empty_like(h)).edges == frozenset()


def test_neighborhood_fixed_point_is_component_union(rng):
    for _ in range(20):
        h = randgen.random_hypergraph(rng, max_vertices=6, max_edges=8)
        a = randgen.random_sub(rng, h, allow_empty=False)
        far = tp.neighborhood(h, a, k=len(h.edges) + 1)
        touching = frozenset(
            e for comp in tp.connected_components(h) if comp.edges & a.edges for e in comp.edges
        )
        assert far.edges == touching


def test_core_examples(two_faces):
    h, a, mk = expected_sets(two_faces)
    assert tp.core(h, a).edges == mk(("v3",))
    assert tp.core(h, h).edges == h.edges
    assert tp.core(h, empty_like(h)).edges == frozenset()


def test_core_chain_and_neighborhood_identities(rng):
    for _ in range(30):
        h = randgen.random_hypergraph(rng, max_vertices=6, max_edges=8)
        a = randgen.random_sub(rng, h)
        cor = tp.core(h, a)
        interior = tp.interior(h, a)
        cl = tp.closure(h, a)
        assert cor <= interior and interior <= a and a <= cl
        assert tp.is_closed(h, cor)
        assert tp.neighborhood(h, cor) <= tp.neighborhood(h, interior)
        assert tp.neighborhood(h, a).edges == tp.neighborhood(h, cl).edges
        assert tp.neighborhood(h, cor) <= tp.neighborhood(h, a)
        assert tp.is_open(h, tp.neighborhood(h, a))
        assert tp.is_open(h, interior)
        # iterated cores keep shrinking; iterated neighborhoods keep growing
        assert tp.core(h, a, 2) <= cor
        assert tp.neighborhood(h, a) <= tp.neighborhood(h, a, 2)


def test_core_neighborhood_equality_counterexample(two_faces):
    # n(H, cor) = n(H, int) fails in general: the core keeps only hyperedges
    # disjoint from everything outside, while the interior merely avoids
    # being contained in anything outside.  Pinned so the gap stays visible.
    sp = VertexSpace(("x", "y"))
    h = Hypergraph.from_labels([["x"], ["y"], ["x", "y"]], sp)
    a = Hypergraph.from_labels([["y"], ["x", "y"]], sp)
    assert tp.interior(h, a).edges == a.edges
    assert tp.core(h, a).edges == frozenset({(sp.id_of("y"),)})
    assert tp.neighborhood(h, tp.core(h, a)).edges != tp.neighborhood(h, tp.interior(h, a)).edges
    # the bundled worked example violates it too
    ht, at = two_faces.total, two_faces.sub
    assert tp.neighborhood(ht, tp.core(ht, at)).edges != tp.neighborhood(ht, tp.interior(ht, at)).edges


def test_interior_is_largest_open(rng):
    for _ in range(10):
        h = randgen.random_hypergraph(rng, max_vertices=5, max_edges=7)
        opens = tp.enumerate_open(h)
        for a in tp.all_sub_hypergraphs(h):
            interior = tp.interior(h, a)
            for o in opens:
                if o <= a:
                    assert o <= interior


def test_closure_is_smallest_closed(rng):
    for _ in range(10):
        h = randgen.random_hypergraph(rng, max_vertices=5, max_edges=7)
        closed_sets = [h.edges - o.edges for o in tp.enumerate_open(h)]
        for a in tp.all_sub_hypergraphs(h):
            cl = tp.closure(h, a)
            for c in closed_sets:
                if a.edges <= c:
                    assert cl.edges <= c


def test_neighborhood_is_union_of_single_edge_neighborhoods(rng):
    for _ in range(20):
        h = randgen.random_hypergraph(rng, max_vertices=6, max_edges=8)
        a = randgen.random_sub(rng, h)
        union = frozenset()
        for e in a.edges:
            union |= tp.neighborhood(h, h.replace_edges([e])).edges
        assert tp.neighborhood(h, a).edges == union


def test_path_distance_examples(two_faces, spiked):
    h, a, _ = expected_sets(two_faces)
    v2 = tuple(sorted([h.space.id_of("v2")]))
    v3 = tuple(sorted([h.space.id_of("v3")]))
    assert tp.path_distance(h, v2, v2).value == 0
    assert tp.path_distance(h, v2, v3).value == 1
    tri, _subs = spiked
    p2 = (tri.space.id_of("v2"),)
    p0 = (tri.space.id_of("v0"),)
    assert tp.path_distance(tri, p2, p0).value == 0


def test_path_distance_requires_membership(two_faces):
    h = two_faces.total
    with pytest.raises(InputError):
        tp.path_distance(h, (0, 2), (0,))


def test_path_distance_infinite():
    sp = VertexSpace(("a", "b"))
    h = Hypergraph.from_labels([["a"], ["b"]], sp)
    d = tp.path_distance(h, (0,), (1,))
    assert not d.is_finite and str(d) == "inf"


def test_path_distance_against_brute_force(rng):
    for _ in range(15):
        h = randgen.random_hypergraph(rng, max_vertices=5, max_edges=5, max_dim=2)
        edges = list(h.sorted_edges)
        e1, e2 = rng.choice(edges), rng.choice(edges)
        assert tp.path_distance(h, e1, e2).value == brute_path_distance(h, e1, e2)


def test_path_distance_symmetry_and_concatenation(rng):
    for _ in range(15):
        h = randgen.random_hypergraph(rng, max_vertices=6, max_edges=7, max_dim=2)
        edges = list(h.sorted_edges)
        picks = [rng.choice(edges) for _ in range(3)]
        d01 = tp.path_distance(h, picks[0], picks[1]).value
        d10 = tp.path_distance(h, picks[1], picks[0]).value
        assert d01 == d10
        d12 = tp.path_distance(h, picks[1], picks[2]).value
        d02 = tp.path_distance(h, picks[0], picks[2]).value
        if d01 is not None and d12 is not None:
            assert d02 is not None and d02 <= d01 + d12 + 1


def test_unit_ball_remark_counterexample():
    # the distance-1 ball can be strictly larger than the neighborhood
    h = Hypergraph.from_labels([["1"], ["3"], ["1", "2"], ["2", "3"]])
    sigma = (h.space.id_of("1"),)
    same, nb, ball = tp.neighborhood_vs_unit_ball(h, sigma)
    assert not same
    assert nb <= ball


def test_enumerate_open_examples():
    single = Hypergraph.from_labels([["a"]])
    assert sorted(len(o) for o in tp.enumerate_open(single)) == [0, 1]
    h = Hypergraph.from_labels([["a"], ["a", "b"]])
    opens = {o.edges for o in tp.enumerate_open(h)}
    ab = tuple(sorted((h.space.id_of("a"), h.space.id_of("b"))))
    assert opens == {frozenset(), frozenset({ab}), h.edges}


def test_enumerate_open_cap():
    h = Hypergraph.from_labels([[f"v{i:02d}"] for i in range(17)])
    with pytest.raises(SizeCapError):
        tp.enumerate_open(h)
    assert len(tp.enumerate_open(h, cap=17)) == 2 ** 17


def test_complement_of_subcomplex_is_open(rng):
    # inside a simplicial complex, complements of subcomplexes are open
    for _ in range(10):
        h = randgen.random_hypergraph(rng, max_vertices=5, max_edges=5).delta_closure()
        if len(h.edges) > 12:
            continue
        for a in tp.all_sub_hypergraphs(h):
            if a.is_simplicial:
                assert tp.is_open(h, h.difference(a))
