"""Seeded random hypergraphs, pairs, triples, and morphisms for the
property suites.  Everything takes an explicit `random.Random` so runs are
reproducible from a seed."""

from __future__ import annotations

import random
from fractions import Fraction

from .hypergraph import Hypergraph, HypergraphPair, VertexMorphism, VertexSpace


def random_hypergraph(
    rng: random.Random,
    max_vertices: int = 10,
    max_edges: int = 14,
    max_dim: int = 3,
    min_vertices: int = 2,
) -> Hypergraph:
    nv = rng.randint(min_vertices, max_vertices)
    space = VertexSpace(tuple(f"v{i:02d}" for i in range(nv)))
    n_edges = rng.randint(1, max_edges)
    edges = set()
    for _ in range(n_edges):
        d = rng.randint(0, min(max_dim, nv - 1))
        edges.add(tuple(sorted(rng.sample(range(nv), d + 1))))
    return Hypergraph.from_edges(space, edges)


def random_sub(rng: random.Random, h: Hypergraph, allow_empty: bool = True) -> Hypergraph:
    edges = list(h.sorted_edges)
    lo = 0 if allow_empty else min(1, len(edges))
    k = rng.randint(lo, len(edges))
    return h.replace_edges(rng.sample(edges, k))


def random_pair(rng: random.Random, **kwargs) -> HypergraphPair:
    h = random_hypergraph(rng, **kwargs)
    return HypergraphPair(h, random_sub(rng, h))


def random_triple(rng: random.Random, **kwargs):
    h = random_hypergraph(rng, **kwargs)
    a = random_sub(rng, h)
    b = random_sub(rng, a)
    return h, a, b


def random_values(rng: random.Random, h: Hypergraph, levels: int = 4):
    """Exact rational filtration values on the hyperedges."""
    return {e: Fraction(rng.randint(0, levels - 1), 2) for e in h.edges}


def random_pair_morphism(rng: random.Random, max_vertices: int = 6, max_edges: int = 8):
    """A valid morphism of pairs built by pushing a random source pair
    through a random vertex collapse and padding the target."""
    src = random_pair(rng, max_vertices=max_vertices, max_edges=max_edges, max_dim=2)
    nv_src = len(src.total.space)
    nv_tgt = rng.randint(1, nv_src)
    tgt_space = VertexSpace(tuple(f"w{i:02d}" for i in range(nv_tgt)))
    mapping = tuple(rng.randrange(nv_tgt) for _ in range(nv_src))
    f = VertexMorphism(src.total.space, tgt_space, mapping)
    total_img = f.apply(src.total)
    sub_img = f.apply(src.sub)
    extra = random_hypergraph(rng, max_vertices=nv_tgt, max_edges=4, max_dim=2, min_vertices=nv_tgt)
    extra = Hypergraph.from_edges(tgt_space, extra.edges)
    tgt_total = total_img.union(extra)
    tgt = HypergraphPair(tgt_total, sub_img)
    return f, src, tgt
