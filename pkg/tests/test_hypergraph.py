import itertools
import random

import pytest

from hyperhom.errors import InputError
from hyperhom.hypergraph import (
    Hypergraph,
    HypergraphPair,
    VertexMorphism,
    VertexSpace,
    full_simplex,
    set_algebra,
)
from hyperhom import randgen


def test_delta_closure_single_edge():
    h = Hypergraph.from_labels([["a", "b", "c"]])
    closed = h.delta_closure()
    assert len(closed) == 7
    assert closed.is_simplicial


def test_delta_closure_golden(spiked):
    h, _ = spiked
    closed = h.delta_closure()
    assert closed.edges == full_simplex(2, h.space).edges
    assert len(closed) == 7


def test_delta_closure_idempotent_on_complex():
    k = full_simplex(3)
    assert k.delta_closure().edges == k.edges


def test_lower_closure_golden(spiked):
    h, _ = spiked
    # subset-check oracle, written independently of the implementation
    expected = set()
    for e in h.edges:
        faces = [f for k in range(1, len(e)) for f in itertools.combinations(e, k)]
        if all(f in h.edges for f in faces):
            expected.add(e)
    low = h.lower_closure()
    assert low.edges == frozenset(expected)
    assert sorted(low.label_edges()) == [("v0",), ("v0", "v1"), ("v1",), ("v2",)]


def test_lower_closure_trivial_cases():
    k = full_simplex(2)
    assert k.lower_closure().edges == k.edges
    lone = Hypergraph.from_labels([["a", "b"]])
    assert lone.lower_closure().edges == frozenset()


def test_skeleton(spiked):
    h, _ = spiked
    s1 = h.skeleton(1)
    assert sorted(s1.label_edges()) == [("v0",), ("v0", "v1"), ("v1",), ("v2",)]
    assert h.skeleton(h.dimension).edges == h.edges
    no_vertices = Hypergraph.from_labels([["a", "b"]])
    assert no_vertices.skeleton(0).edges == frozenset()


def test_skeleton_nested(rng):
    for _ in range(20):
        h = randgen.random_hypergraph(rng, max_vertices=6, max_edges=8)
        for n in range(h.dimension):
            assert h.skeleton(n) <= h.skeleton(n + 1)


def test_set_algebra_examples(spiked, two_faces):
    sp = VertexSpace(("x", "y"))
    a = Hypergraph.from_labels([["x"]], sp)
    b = Hypergraph.from_labels([["y"]], sp)
    assert sorted(set_algebra(a, b, "union").label_edges()) == [("x",), ("y",)]
    h, subs = spiked
    assert set_algebra(h, subs["A"], "intersection").edges == subs["A"].edges
    diff = set_algebra(two_faces.total, two_faces.sub, "difference")
    assert sorted(diff.label_edges()) == [("v0", "v1", "v2"), ("v2",)]


def test_set_algebra_space_mismatch():
    a = Hypergraph.from_labels([["x"]])
    b = Hypergraph.from_labels([["y"]])
    with pytest.raises(InputError):
        a.union(b)


def test_closure_laws(rng):
    # monotonicity and union-distributivity of the simplicial closure
    for _ in range(25):
        h = randgen.random_hypergraph(rng, max_vertices=6, max_edges=8)
        a = randgen.random_sub(rng, h)
        b = randgen.random_sub(rng, h)
        da, db = a.delta_closure(), b.delta_closure()
        if a <= b:
            assert da <= db
        assert a.union(b).delta_closure().edges == da.union(db).edges
        assert a.intersection(b).delta_closure() <= da.intersection(db)
        assert a.delta_closure().delta_closure().edges == da.edges
        low = a.lower_closure()
        assert low.lower_closure().edges == low.edges
        assert low <= a and a <= da
        assert a.is_simplicial == (low.edges == a.edges) == (da.edges == a.edges)


def test_intersection_closure_strictness():
    # the inclusion from the closure law can be strict
    sp = VertexSpace(("x", "y", "z"))
    a = Hypergraph.from_labels([["x", "y"]], sp)
    b = Hypergraph.from_labels([["x", "z"]], sp)
    lhs = a.intersection(b).delta_closure()
    rhs = a.delta_closure().intersection(b.delta_closure())
    assert lhs <= rhs and lhs.edges != rhs.edges


def test_skeleton_commutes_with_set_algebra(rng):
    for _ in range(20):
        h = randgen.random_hypergraph(rng, max_vertices=6, max_edges=8)
        a = randgen.random_sub(rng, h)
        b = randgen.random_sub(rng, h)
        for n in range(h.dimension + 1):
            assert a.union(b).skeleton(n).edges == a.skeleton(n).union(b.skeleton(n)).edges
            assert a.intersection(b).skeleton(n).edges == a.skeleton(n).intersection(b.skeleton(n)).edges


def test_pair_validation(spiked):
    h, subs = spiked
    HypergraphPair(h, subs["A"])
    stray = Hypergraph.from_labels([["v1", "v2"]], h.space)
    with pytest.raises(InputError):
        HypergraphPair(h, stray)


def test_edge_validation():
    sp = VertexSpace(("a", "b"))
    with pytest.raises(InputError):
        Hypergraph.from_edges(sp, [()])
    with pytest.raises(InputError):
        Hypergraph.from_edges(sp, [(1, 0)])
    with pytest.raises(InputError):
        Hypergraph.from_edges(sp, [(0, 5)])


def test_morphism_apply_identity(spiked):
    h, _ = spiked
    ident = VertexMorphism.identity(h.space)
    assert ident.apply(h).edges == h.edges


def test_morphism_collapse():
    sp = VertexSpace(("a", "b"))
    h = Hypergraph.from_labels([["a", "b"]], sp)
    f = VertexMorphism.from_labels(sp, sp, {"a": "a", "b": "a"})
    assert sorted(f.apply(h).label_edges()) == [("a",)]


def test_morphism_undefined_vertex():
    sp = VertexSpace(("a", "b"))
    h = Hypergraph.from_labels([["a", "b"]], sp)
    partial = VertexMorphism(sp, sp, (0, -1))
    with pytest.raises(InputError):
        partial.apply(h)


def test_inclusion_is_pair_morphism(spiked):
    h, subs = spiked
    pair = HypergraphPair(h, subs["A"])
    incl = VertexMorphism.identity(h.space)
    assert incl.is_pair_morphism(HypergraphPair(subs["A"], subs["A"]), pair)
    assert incl.is_valid(subs["A"], h)


def test_morphism_validity_check():
    sp = VertexSpace(("a", "b"))
    h = Hypergraph.from_labels([["a", "b"]], sp)
    target = Hypergraph.from_labels([["a"]], sp)
    f = VertexMorphism.identity(sp)
    assert not f.is_valid(h, target)
