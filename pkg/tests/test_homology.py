import random

import pytest

from hyperhom.errors import IntegrityError, UnsupportedModeError
from hyperhom.fieldlin import GF, QQ, ZZ, Field
from hyperhom.homology import (
    HomologyGroup,
    Workspace,
    embedded_homology,
    induced_homology_map,
    presented_homology,
    relative_embedded_homology,
)
from hyperhom.hypergraph import Hypergraph, HypergraphPair, VertexSpace, empty_like, full_simplex
from hyperhom import randgen
from conftest import component_count


def groups(gs):
    return [(g.betti, g.torsion) for g in gs]


def test_presented_homology_circle():
    # hollow triangle: d1 maps three edges onto the three vertices
    d0 = [[0, 0, 0] for _ in range(0)]
    d1 = [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]
    out = presented_homology([d0, d1])
    assert groups(out) == [(1, ()), (1, ())]


def test_presented_homology_torsion():
    # 0 -> Z --2--> Z -> 0
    out = presented_homology([[], [[2]]])
    assert groups(out) == [(0, (2,)), (0, ())]


def test_presented_homology_sphere():
    sphere = full_simplex(3).skeleton(2)
    ws = Workspace(sphere)
    out = ws.groups_z(sphere)
    assert groups(out) == [(1, ()), (0, ()), (1, ())]


def test_presented_homology_rejects_bad_complex():
    with pytest.raises(IntegrityError):
        presented_homology([[], [[1]], [[1]]])


def test_relative_golden_first_family(spiked):
    h, subs = spiked
    ws = Workspace(h)
    assert groups(ws.groups_z(h, subs["A"])) == [(1, ()), (0, ()), (0, ())]
    assert groups(ws.groups_z(h, subs["A2"])) == [(0, ()), (0, ()), (0, ())]
    assert groups(ws.groups_z(h, subs["A3"])) == [(2, ()), (0, ()), (0, ())]
    assert groups(ws.groups_z(h)) == [(2, ()), (0, ()), (0, ())]


def test_relative_golden_tetra(tetra):
    h, subs = tetra
    ws = Workspace(h)
    assert groups(ws.groups_z(h, subs["A"])) == [(1, ()), (0, ()), (0, ())]
    assert groups(ws.groups_z(h, subs["A2"])) == [(0, ()), (0, ()), (4, ())]
    assert groups(ws.groups_z(h, subs["A3"])) == [(0, ()), (3, ()), (0, ())]
    assert groups(ws.groups_z(h, subs["A4"])) == [(1, ()), (0, ()), (4, ())]


def test_pair_extremes(spiked):
    h, _ = spiked
    ws = Workspace(h)
    full_pair = relative_embedded_homology(HypergraphPair(h, h), ZZ, "inf", ws)
    assert all(g.is_trivial for g in full_pair)
    absolute = relative_embedded_homology(HypergraphPair(h, empty_like(h)), ZZ, "inf", ws)
    assert groups(absolute) == groups(embedded_homology(h, ZZ, "inf", ws))


def test_flavors_agree_on_simplicial_pairs(rng):
    for _ in range(15):
        h = randgen.random_hypergraph(rng, max_vertices=6, max_edges=6).delta_closure()
        a = randgen.random_sub(rng, h).delta_closure()
        ws = Workspace(h)
        ref = groups(ws.groups_z(h, a, "inf"))
        for flavor in ("sup", "delta", "lower"):
            assert groups(ws.groups_z(h, a, flavor)) == ref


def test_inf_sup_agree_on_random_pairs(rng):
    for _ in range(40):
        pair = randgen.random_pair(rng, max_vertices=7, max_edges=9)
        ws = Workspace(pair.total)
        gi = relative_embedded_homology(pair, ZZ, "inf", ws)
        gs = relative_embedded_homology(pair, ZZ, "sup", ws)
        assert groups(gi) == groups(gs)


def test_field_dims_match_free_rank_over_q(rng):
    for _ in range(20):
        pair = randgen.random_pair(rng, max_vertices=6, max_edges=8)
        ws = Workspace(pair.total)
        gz = relative_embedded_homology(pair, ZZ, "inf", ws)
        gq = relative_embedded_homology(pair, QQ, "inf", ws)
        assert [g.betti for g in gz] == [g.betti for g in gq]
        assert all(not g.torsion for g in gq)


def test_prime_field_counts_torsion():
    # Z/2 in degree 0 shows up over GF(2) but not over GF(3)
    out2 = presented_homology([[], [[2]]])
    assert groups(out2)[0] == (0, (2,))
    sp = VertexSpace(("a",))
    # build the same check through a field: dim over GF(p) = betti + p-torsion jumps
    # (verified on the presented complex directly)
    from hyperhom.lattice import Lattice, quotient_presentation

    f2 = Field(GF(2))
    assert f2.rank([[f2.of(2)]]) == 0  # the boundary matrix degenerates mod 2
    f3 = Field(GF(3))
    assert f3.rank([[f3.of(2)]]) == 1


def test_euler_characteristic_consistency(rng):
    # alternating sum of quotient chain ranks equals alternating betti sum
    from hyperhom.chains import AmbientChains, quotient_complex

    for _ in range(15):
        pair = randgen.random_pair(rng, max_vertices=6, max_edges=7)
        ws = Workspace(pair.total)
        amb = ws.ambient
        sub = pair.sub if pair.sub.edges else None
        qc = quotient_complex(
            amb.complex_of(pair.total, "inf"),
            amb.complex_of(sub, "inf") if sub else amb.complex_of(empty_like(pair.total), "inf"),
        )
        chain_sum = sum((-1) ** n * qc.rank(n) for n in range(qc.top_dim + 1))
        gq = relative_embedded_homology(pair, QQ, "inf", ws)
        betti_sum = sum((-1) ** n * g.betti for n, g in enumerate(gq))
        assert chain_sum == betti_sum


def test_induced_map_identity(spiked):
    h, subs = spiked
    ws = Workspace(h)
    spec = (h, subs["A"])
    for n in range(ws.top_dim + 1):
        mat = induced_homology_map(ws, spec, spec, n)
        dim = ws.homology_f(h, subs["A"], "inf", QQ).dims[n]
        assert len(mat) == dim
        for i in range(dim):
            assert [mat[i][j] for j in range(dim)] == [1 if i == j else 0 for j in range(dim)]


def test_induced_map_inclusion_rank(spiked):
    # H_0(A) -> H_0(H) for the first golden pair has rank 1; the quotient
    # map out of H_0(H) is then a rank-1 surjection onto H_0(H, A)
    h, subs = spiked
    a = subs["A"]
    ws = Workspace(h)
    f = Field(QQ)
    inc = induced_homology_map(ws, (a, None), (h, None), 0)
    assert f.rank(inc) == 1
    assert component_count(a) == 1  # oracle: one connected block of hyperedges
    j = induced_homology_map(ws, (h, None), (h, a), 0)
    assert f.rank(j) == 1
    assert ws.homology_f(h, a, "inf", QQ).dims[0] == 1


def test_induced_map_composition_law(rng):
    f = Field(QQ)
    for _ in range(10):
        h, a, b = randgen.random_triple(rng, max_vertices=6, max_edges=8)
        ws = Workspace(h)
        for n in range(ws.top_dim + 1):
            ab = induced_homology_map(ws, (b, None), (a, None), n)
            ah = induced_homology_map(ws, (a, None), (h, None), n)
            bh = induced_homology_map(ws, (b, None), (h, None), n)
            composed = f.mat_mul(ah, ab) if ah and ab else []
            za = all(not any(r) for r in composed) if composed else True
            zb = all(not any(r) for r in bh) if bh else True
            assert (za and zb) or composed == bh


def test_induced_map_requires_field(spiked):
    h, subs = spiked
    ws = Workspace(h)
    with pytest.raises(UnsupportedModeError):
        induced_homology_map(ws, (h, None), (h, subs["A"]), 0, coeff=ZZ)


def test_degree_zero_betti_equals_components(rng):
    # embedded H_0 counts hyperedge components only through vertices that
    # appear as 0-hyperedges; full complexes reduce to the classical count
    for _ in range(10):
        h = randgen.random_hypergraph(rng, max_vertices=6, max_edges=6).delta_closure()
        ws = Workspace(h)
        assert ws.groups_z(h)[0].betti == component_count(h)
