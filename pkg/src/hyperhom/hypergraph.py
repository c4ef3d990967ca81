"""Hypergraphs, hypergraph pairs, and vertex morphisms.

A hypergraph is a finite set of non-empty vertex subsets (hyperedges).
Vertices are interned once per `VertexSpace` to dense 0-based ids; every
hyperedge is a strictly increasing tuple of ids.  Hyperedges are ordered
globally by (dimension, vertex sequence); that order fixes every chain-group
basis downstream, so all derived output is deterministic.

All values are immutable after construction and never mutate their inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError

Edge = tuple[int, ...]


@dataclass(frozen=True)
class VertexSpace:
    """Interned vertex labels; position in `labels` is the internal id."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise InputError("duplicate vertex labels")

    @classmethod
    def from_labels(cls, labels) -> "VertexSpace":
        return cls(tuple(sorted(set(map(str, labels)))))

    def id_of(self, label: str) -> int:
        try:
            return self._index()[label]
        except KeyError:
            raise InputError(f"unknown vertex label {label!r}") from None

    def _index(self):
        idx = getattr(self, "_idx", None)
        if idx is None:
            idx = {v: i for i, v in enumerate(self.labels)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def __len__(self):
        return len(self.labels)


def edge_key(edge: Edge):
    """Global hyperedge order: by dimension, then lexicographic."""
    return (len(edge), edge)


def _check_edge(edge, n_labels) -> Edge:
    edge = tuple(edge)
    if not edge:
        raise InputError("empty hyperedge")
    if list(edge) != sorted(set(edge)):
        raise InputError(f"hyperedge {edge} is not strictly increasing")
    if edge[0] < 0 or edge[-1] >= n_labels:
        raise InputError(f"hyperedge {edge} has a vertex id out of range")
    return edge


@dataclass(frozen=True)
class Hypergraph:
    space: VertexSpace
    edges: frozenset[Edge]

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, space: VertexSpace, edges) -> "Hypergraph":
        n = len(space)
        return cls(space, frozenset(_check_edge(e, n) for e in edges))

    @classmethod
    def from_labels(cls, label_edges, space: VertexSpace | None = None) -> "Hypergraph":
        """Build from an iterable of label iterables; the space is derived
        from the labels unless given explicitly."""
        label_edges = [tuple(map(str, e)) for e in label_edges]
        if space is None:
            space = VertexSpace.from_labels(itertools.chain.from_iterable(label_edges))
        edges = []
        for e in label_edges:
            ids = sorted({space.id_of(v) for v in e})
            edges.append(tuple(ids))
        return cls.from_edges(space, edges)

    def replace_edges(self, edges) -> "Hypergraph":
        return Hypergraph.from_edges(self.space, edges)

    # -- views -------------------------------------------------------------

    @property
    def sorted_edges(self) -> tuple[Edge, ...]:
        cached = getattr(self, "_sorted", None)
        if cached is None:
            cached = tuple(sorted(self.edges, key=edge_key))
            object.__setattr__(self, "_sorted", cached)
        return cached

    @property
    def vertex_ids(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    @property
    def dimension(self) -> int:
        """Largest hyperedge dimension; -1 for the empty hypergraph."""
        return max((len(e) - 1 for e in self.edges), default=-1)

    def edges_of_dim(self, n: int) -> tuple[Edge, ...]:
        return tuple(e for e in self.sorted_edges if len(e) == n + 1)

    def edge_labels(self, edge: Edge) -> tuple[str, ...]:
        return tuple(self.space.labels[v] for v in edge)

    def label_edges(self) -> list[tuple[str, ...]]:
        return [self.edge_labels(e) for e in self.sorted_edges]

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.sorted_edges)

    def __contains__(self, edge):
        return tuple(edge) in self.edges

    def __le__(self, other: "Hypergraph") -> bool:
        self._require_same_space(other)
        return self.edges <= other.edges

    def _require_same_space(self, other: "Hypergraph"):
        if self.space.labels != other.space.labels:
            raise InputError("hypergraphs live on different vertex label spaces")

    # -- closures and skeleta ----------------------------------------------

    def delta_closure(self) -> "Hypergraph":
        """Smallest simplicial complex containing this hypergraph: every
        non-empty subset of every hyperedge."""
        closed = set()
        for e in self.edges:
            for k in range(1, len(e) + 1):
                closed.update(itertools.combinations(e, k))
        return Hypergraph(self.space, frozenset(closed))

    def lower_closure(self) -> "Hypergraph":
        """Largest simplicial complex contained in this hypergraph: drop
        every hyperedge with a missing proper face."""
        kept = []
        for e in self.edges:
            if all(
                f in self.edges
                for k in range(1, len(e))
                for f in itertools.combinations(e, k)
            ):
                kept.append(e)
        return Hypergraph(self.space, frozenset(kept))

    @property
    def is_simplicial(self) -> bool:
        return self.lower_closure().edges == self.edges

    def skeleton(self, n: int) -> "Hypergraph":
        """Sub-hypergraph of hyperedges of dimension at most n."""
        if n < -1:
            raise InputError("skeleton dimension must be >= -1")
        return Hypergraph(self.space, frozenset(e for e in self.edges if len(e) - 1 <= n))

    # -- set algebra ---------------------------------------------------------

    def union(self, other: "Hypergraph") -> "Hypergraph":
        self._require_same_space(other)
        return Hypergraph(self.space, self.edges | other.edges)

    def intersection(self, other: "Hypergraph") -> "Hypergraph":
        self._require_same_space(other)
        return Hypergraph(self.space, self.edges & other.edges)

    def difference(self, other: "Hypergraph") -> "Hypergraph":
        self._require_same_space(other)
        return Hypergraph(self.space, self.edges - other.edges)

    __or__ = union
    __and__ = intersection
    __sub__ = difference

    def __repr__(self):
        inner = ", ".join("{" + ",".join(self.edge_labels(e)) + "}" for e in self.sorted_edges)
        return f"Hypergraph({{{inner}}})"


def set_algebra(a: Hypergraph, b: Hypergraph, op: str) -> Hypergraph:
    try:
        return {"union": a.union, "intersection": a.intersection, "difference": a.difference}[op](b)
    except KeyError:
        raise InputError(f"unknown set operation {op!r}") from None


def empty_like(h: Hypergraph) -> Hypergraph:
    return Hypergraph(h.space, frozenset())


@dataclass(frozen=True)
class HypergraphPair:
    """A hypergraph together with a sub-hypergraph; `sub` may be empty."""

    total: Hypergraph
    sub: Hypergraph

    def __post_init__(self):
        if not self.sub <= self.total:
            extra = self.sub.edges - self.total.edges
            raise InputError(f"sub-hypergraph has hyperedges outside the total: {sorted(extra)}")


@dataclass(frozen=True)
class VertexMorphism:
    """A vertex map between label spaces; applied to hyperedges vertex-wise."""

    source: VertexSpace
    target: VertexSpace
    mapping: tuple[int, ...]  # position = source id, value = target id or -1 (undefined)

    @classmethod
    def from_labels(cls, source: VertexSpace, target: VertexSpace, table: dict) -> "VertexMorphism":
        mapping = [-1] * len(source)
        for src, dst in table.items():
            mapping[source.id_of(str(src))] = target.id_of(str(dst))
        return cls(source, target, tuple(mapping))

    @classmethod
    def identity(cls, space: VertexSpace) -> "VertexMorphism":
        return cls(space, space, tuple(range(len(space))))

    def image_edge(self, edge: Edge) -> Edge:
        out = set()
        for v in edge:
            w = self.mapping[v]
            if w < 0:
                label = self.source.labels[v]
                raise InputError(f"morphism undefined on vertex {label!r}")
            out.add(w)
        return tuple(sorted(out))

    def apply(self, h: Hypergraph) -> Hypergraph:
        if h.space.labels != self.source.labels:
            raise InputError("hypergraph does not live on the morphism's source space")
        return Hypergraph(self.target, frozenset(self.image_edge(e) for e in h.edges))

    def is_valid(self, source_h: Hypergraph, target_h: Hypergraph) -> bool:
        """True when the image of every source hyperedge is a target hyperedge."""
        try:
            return all(self.image_edge(e) in target_h.edges for e in source_h.edges)
        except InputError:
            return False

    def is_pair_morphism(self, source: HypergraphPair, target: HypergraphPair) -> bool:
        return self.is_valid(source.total, target.total) and self.is_valid(source.sub, target.sub)


@lru_cache(maxsize=None)
def standard_simplex_space(n: int) -> VertexSpace:
    return VertexSpace(tuple(f"v{i}" for i in range(n + 1)))


def full_simplex(n: int, space: VertexSpace | None = None) -> Hypergraph:
    """The simplicial complex of all non-empty subsets of n+1 vertices."""
    space = space or standard_simplex_space(n)
    return Hypergraph.from_edges(space, [tuple(range(n + 1))]).delta_closure()
