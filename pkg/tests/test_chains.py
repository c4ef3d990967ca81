import random

import pytest

from hyperhom.chains import (
    AmbientChains,
    inclusion_chain_map,
    morphism_chain_map,
    quotient_complex,
    simplicial_chain_complex,
    verify_chain_map,
)
from hyperhom.errors import InputError
from hyperhom.hypergraph import Hypergraph, VertexMorphism, VertexSpace, full_simplex
from hyperhom.lattice import Lattice, mat_mul, mat_vec, quotient_presentation
from hyperhom import randgen


def test_simplicial_complex_ranks():
    cx = simplicial_chain_complex(full_simplex(2))
    assert cx.ranks() == (3, 3, 1)
    hollow = full_simplex(2).skeleton(1)
    assert simplicial_chain_complex(hollow).ranks() == (3, 3)


def test_simplicial_requires_closed(spiked):
    h, _ = spiked
    with pytest.raises(InputError):
        simplicial_chain_complex(h)
    cx = simplicial_chain_complex(h, require_simplicial=False)
    assert cx.ranks() == (3, 3, 1)  # closure taken first


def test_boundary_squares_to_zero(rng):
    for _ in range(10):
        h = randgen.random_hypergraph(rng, max_vertices=6, max_edges=6)
        cx = simplicial_chain_complex(h.delta_closure())
        cx.validate()
        for n in range(2, cx.top_dim + 1):
            prod = mat_mul(cx.boundary(n - 1), cx.boundary(n))
            assert all(not any(row) for row in prod)


def test_inf_lattices_golden(spiked):
    h, _ = spiked
    amb = AmbientChains(h)
    inf = amb.lattices(h, "inf")
    assert [l.rank for l in inf] == [3, 1, 0]
    # Inf_1 is spanned by the one solid edge
    edge_idx = amb.basis.index(1)[(0, 1)]
    gen = [0] * amb.basis.count(1)
    gen[edge_idx] = 1
    assert inf[1].basis == (tuple(gen),)


def test_inf_lattice_combination_case():
    # the second family's total: Inf_1 has rank 2 with a genuine combination
    sp = VertexSpace(("v0", "v1", "v2"))
    h = Hypergraph.from_labels(
        [["v0"], ["v1"], ["v0", "v1"], ["v1", "v2"], ["v0", "v2"], ["v0", "v1", "v2"]], sp
    )
    amb = AmbientChains(h)
    inf = amb.lattices(h, "inf")
    assert inf[1].rank == 2
    idx = amb.basis.index(1)
    combo = [0] * amb.basis.count(1)
    combo[idx[(0, 2)]] = 1
    combo[idx[(1, 2)]] = -1
    assert inf[1].contains(combo)
    solid = [0] * amb.basis.count(1)
    solid[idx[(0, 1)]] = 1
    assert inf[1].contains(solid)
    assert inf[2].rank == 1


def test_sup_lattices_golden(spiked):
    h, _ = spiked
    amb = AmbientChains(h)
    sup = amb.lattices(h, "sup")
    assert [l.rank for l in sup] == [3, 2, 1]
    idx = amb.basis.index(1)
    w = [0] * amb.basis.count(1)
    w[idx[(1, 2)]] = 1
    w[idx[(0, 2)]] = -1
    w[idx[(0, 1)]] = 1
    assert sup[1].contains(w)


def test_simplicial_complex_has_equal_flavors(rng):
    for _ in range(10):
        k = randgen.random_hypergraph(rng, max_vertices=5, max_edges=5).delta_closure()
        amb = AmbientChains(k)
        inf = amb.lattices(k, "inf")
        sup = amb.lattices(k, "sup")
        full = amb.full_complex().groups
        for a, b, c in zip(inf, sup, full):
            assert a.basis == b.basis == c.basis


def test_tower_containments(rng):
    # lower <= inf <= coordinate <= sup <= full, degreewise
    for _ in range(15):
        h = randgen.random_hypergraph(rng, max_vertices=6, max_edges=8)
        amb = AmbientChains(h)
        low = amb.lattices(h, "lower")
        inf = amb.lattices(h, "inf")
        sup = amb.lattices(h, "sup")
        for n in range(amb.top_dim + 1):
            coord = amb.coordinate_lattice(h, n)
            assert low[n].is_sublattice_of(inf[n])
            assert inf[n].is_sublattice_of(coord)
            assert coord.is_sublattice_of(sup[n])
            assert sup[n].is_sublattice_of(Lattice.full(amb.basis.count(n)))


def test_inf_maximal_sup_minimal(rng):
    # adding any missing hyperedge coordinate to Inf breaks boundary
    # closure; dropping any boundary image from Sup breaks containment
    for _ in range(10):
        h = randgen.random_hypergraph(rng, max_vertices=5, max_edges=6)
        amb = AmbientChains(h)
        inf = amb.lattices(h, "inf")
        for n in range(1, amb.top_dim + 1):
            coord = amb.coordinate_lattice(h, n)
            d = amb.boundary(n)
            target = amb.coordinate_lattice(h, n - 1)
            for row in coord.basis:
                if inf[n].contains(list(row)):
                    continue
                img = mat_vec(d, list(row))
                assert not target.contains(img)
        sup = amb.lattices(h, "sup")
        for n in range(amb.top_dim):
            d = amb.boundary(n + 1)
            for row in amb.coordinate_lattice(h, n + 1).basis:
                img = mat_vec(d, list(row))
                assert sup[n].contains(img)


def test_inf_towers_are_saturated(rng):
    # quotients of nested inf complexes are torsion-free degreewise
    for _ in range(15):
        h = randgen.random_hypergraph(rng, max_vertices=6, max_edges=8)
        a = randgen.random_sub(rng, h)
        amb = AmbientChains(h)
        ih = amb.lattices(h, "inf")
        ia = amb.lattices(a, "inf")
        for n in range(amb.top_dim + 1):
            assert ia[n].is_sublattice_of(ih[n])
            pres = quotient_presentation(ia[n], ih[n])
            assert pres.torsion == ()


def test_quotient_complex_golden(spiked):
    h, subs = spiked
    amb = AmbientChains(h)
    qc = quotient_complex(amb.complex_of(h, "inf"), amb.complex_of(subs["A"], "inf"))
    assert [qc.rank(n) for n in range(3)] == [1, 0, 0]
    # the surviving degree-0 generator is the lone vertex
    v2 = amb.basis.index(0)[(2,)]
    rep = qc.reps[0][0]
    assert rep[v2] in (1, -1)
    same = quotient_complex(amb.complex_of(h, "inf"), amb.complex_of(h, "inf"))
    assert all(same.rank(n) == 0 for n in range(3))


def test_quotient_complex_tetra(tetra):
    h, subs = tetra
    amb = AmbientChains(h)
    qc = quotient_complex(amb.complex_of(h, "inf"), amb.complex_of(subs["A3"], "inf"))
    # the sub carries its degree-2 fundamental cycle, so the quotient has
    # rank 3 there, not 4
    assert [qc.rank(n) for n in range(3)] == [0, 6, 3]


def test_quotient_complex_requires_containment(spiked):
    h, subs = spiked
    amb = AmbientChains(h)
    with pytest.raises(InputError):
        quotient_complex(amb.complex_of(subs["A"], "inf"), amb.complex_of(h, "inf"))


def test_inclusion_chain_map_commutes(spiked):
    h, subs = spiked
    sub_amb = AmbientChains(subs["A"])
    amb = AmbientChains(h)
    cm = inclusion_chain_map(sub_amb.basis, amb.basis)
    verify_chain_map(cm, sub_amb.boundary, amb.boundary, sub_amb.top_dim)
    ident = inclusion_chain_map(amb.basis, amb.basis)
    for n in range(amb.top_dim + 1):
        mat = ident.mat(n)
        assert all(mat[i][j] == (1 if i == j else 0) for i in range(len(mat)) for j in range(len(mat)))


def test_morphism_chain_map_degenerate_and_signed():
    sp = VertexSpace(("a", "b", "c"))
    src = full_simplex(2, sp)
    amb = AmbientChains(src)
    collapse = VertexMorphism.from_labels(sp, sp, {"a": "a", "b": "a", "c": "c"})
    cm = morphism_chain_map(collapse, amb.basis, amb.basis)
    verify_chain_map(cm, amb.boundary, amb.boundary, amb.top_dim)
    idx1 = amb.basis.index(1)
    ab = [0] * amb.basis.count(1)
    ab[idx1[(0, 1)]] = 1
    assert not any(cm.apply(1, ab))  # degenerate image vanishes
    # swapping the order of images picks up the permutation sign
    swap = VertexMorphism.from_labels(sp, sp, {"a": "b", "b": "a", "c": "c"})
    cm2 = morphism_chain_map(swap, amb.basis, amb.basis)
    verify_chain_map(cm2, amb.boundary, amb.boundary, amb.top_dim)
    img = cm2.apply(1, ab)
    assert img[idx1[(0, 1)]] == -1


def test_morphism_image_lattice_containment(rng):
    # a hypergraph morphism maps inf into inf and sup into sup
    for _ in range(10):
        f, src, tgt = randgen.random_pair_morphism(rng)
        amb_s = AmbientChains(src.total)
        amb_t = AmbientChains(tgt.total)
        cm = morphism_chain_map(f, amb_s.basis, amb_t.basis)
        verify_chain_map(cm, amb_s.boundary, amb_t.boundary, amb_s.top_dim)
        for flavor in ("inf", "sup"):
            ls = amb_s.lattices(src.total, flavor)
            lt = amb_t.lattices(tgt.total, flavor)
            for n in range(amb_s.top_dim + 1):
                for row in ls[n].basis:
                    img = cm.apply(n, list(row))
                    if n <= amb_t.top_dim:
                        assert lt[n].contains(img)
                    else:
                        assert not any(img)
