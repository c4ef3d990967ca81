"""Intrinsic combinatorial topology on sub-hypergraphs.

Complements, closed complements, boundaries, interiors, closures, the
open/closed predicates, neighborhoods and cores with their iterates, the
k-path pseudo-distance, and exhaustive enumeration of open sub-hypergraphs.

All operators take (h, a) with a a sub-hypergraph of h and return
sub-hypergraphs of h on the same vertex space.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .errors import InputError, SizeCapError
from .hypergraph import Edge, Hypergraph

OPEN_ENUM_CAP = 16

TOPOLOGY_KINDS = ("complement", "closed_complement", "boundary", "interior", "closure")


def _require_pair(h: Hypergraph, a: Hypergraph):
    if not a <= h:
        raise InputError("second argument is not a sub-hypergraph of the first")


def complement(h: Hypergraph, a: Hypergraph) -> Hypergraph:
    _require_pair(h, a)
    return h.difference(a)


def closed_complement(h: Hypergraph, a: Hypergraph) -> Hypergraph:
    """Hyperedges of h contained in some hyperedge outside a; equals
    h intersected with the closure of the plain complement."""
    _require_pair(h, a)
    outside = [set(e) for e in (h.edges - a.edges)]
    kept = [e for e in h.edges if any(set(e) <= o for o in outside)]
    return h.replace_edges(kept)


def boundary(h: Hypergraph, a: Hypergraph) -> Hypergraph:
    return a.intersection(closed_complement(h, a))


def interior(h: Hypergraph, a: Hypergraph) -> Hypergraph:
    return a.difference(boundary(h, a))


def closure(h: Hypergraph, a: Hypergraph) -> Hypergraph:
    """h minus the interior of the complement; coincides with the

    hyperedges of h inside the simplicial closure of a."""
    _require_pair(h, a)
    return h.difference(interior(h, h.difference(a)))


def topology_operator(h: Hypergraph, a: Hypergraph, kind: str) -> Hypergraph:
    ops = {
        "complement": complement,
        "closed_complement": closed_complement,
        "boundary": boundary,
        "interior": interior,
        "closure": closure,
    }
    try:
        op = ops[kind]
    except KeyError:
        raise InputError(f"unknown topology operator {kind!r}") from None
    return op(h, a)


def is_open(h: Hypergraph, a: Hypergraph) -> bool:
    return not boundary(h, a).edges


def is_closed(h: Hypergraph, a: Hypergraph) -> bool:
    return is_open(h, h.difference(a))


def openness(h: Hypergraph, a: Hypergraph) -> tuple[bool, bool]:
    return is_open(h, a), is_closed(h, a)


def neighborhood(h: Hypergraph, a: Hypergraph, k: int = 1) -> Hypergraph:
    """k-iterated neighborhood: hyperedges of h meeting some hyperedge of
    the previous step."""
    _require_pair(h, a)
    if k < 1:
        raise InputError("iteration count must be >= 1")
    current = a
    for _ in range(k):
        touched = set()
        sets = [set(e) for e in current.edges]
        for e in h.edges:
            es = set(e)
            if any(es & s for s in sets):
                touched.add(e)
        nxt = h.replace_edges(touched)
        if nxt.edges == current.edges:
            return nxt
        current = nxt
    return current


def core(h: Hypergraph, a: Hypergraph, k: int = 1, literal_iteration: bool = False) -> Hypergraph:
    """k-iterated core.  The core itself is h minus the neighborhood of the
    complement; it is closed, sits inside the interior, and has the same
    neighborhood as the interior.

    Iteration convention: cores of cores, which keeps the chain decreasing
    as the filtration machinery requires.  `literal_iteration` instead takes
    neighborhoods of cores (the displayed recursion), which grows; the
    filtration builder reports the violation when fed that variant.
    """
    _require_pair(h, a)
    if k < 1:
        raise InputError("iteration count must be >= 1")
    current = h.difference(neighborhood(h, h.difference(a)))
    for _ in range(k - 1):
        if literal_iteration:
            current = neighborhood(h, current)
        else:
            current = h.difference(neighborhood(h, h.difference(current)))
    return current


@dataclass(frozen=True)
class PathDistance:
    """Minimum k admitting a k-path; value None encodes +infinity."""

    value: int | None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __str__(self):
        return "inf" if self.value is None else str(self.value)


def _levels_from(h: Hypergraph, tau: Edge) -> dict[Edge, int]:
    """BFS levels: level(sigma) = least length of a chain of pairwise-meeting
    hyperedges from a container of tau to sigma."""
    ts = set(tau)
    sets = {e: set(e) for e in h.edges}
    levels = {e: 0 for e, s in sets.items() if ts <= s}
    frontier = deque(levels)
    while frontier:
        e = frontier.popleft()
        es, k = sets[e], levels[e]
        for f, fs in sets.items():
            if f not in levels and es & fs:
                levels[f] = k + 1
                frontier.append(f)
    return levels


def path_distance(h: Hypergraph, tau: Edge, tau2: Edge) -> PathDistance:
    """Minimum length of a chain sigma_0 .. sigma_k with tau inside sigma_0,
    tau2 inside sigma_k, and consecutive hyperedges meeting; unreachable
    pairs get the infinite distance rather than an error."""
    tau, tau2 = tuple(tau), tuple(tau2)
    if tau not in h.edges or tau2 not in h.edges:
        raise InputError("path endpoints must be hyperedges of the hypergraph")
    levels = _levels_from(h, tau)
    t2s = set(tau2)
    best = [levels[e] for e in levels if t2s <= set(e)]
    return PathDistance(min(best) if best else None)


def unit_ball(h: Hypergraph, sigma: Edge) -> Hypergraph:
    """Hyperedges within path distance 1 of sigma."""
    levels = _levels_from(h, sigma)
    kept = []
    for e in h.edges:
        es = set(e)
        d = min((levels[c] for c in levels if es <= set(c)), default=None)
        if d is not None and d <= 1:
            kept.append(e)
    return h.replace_edges(kept)


def neighborhood_vs_unit_ball(h: Hypergraph, sigma: Edge) -> tuple[bool, Hypergraph, Hypergraph]:
    """Compare n(h, {sigma}) with the distance-1 ball around sigma.

    The two can differ (the ball may be strictly larger), so callers treat a
    mismatch as a warning, not an error."""
    nb = neighborhood(h, h.replace_edges([sigma]))
    ball = unit_ball(h, sigma)
    return nb.edges == ball.edges, nb, ball


def enumerate_open(h: Hypergraph, cap: int = OPEN_ENUM_CAP) -> list[Hypergraph]:
    """All open sub-hypergraphs by exhaustive subset enumeration.

    Openness of a subset S is checked directly: S may not contain a
    hyperedge lying inside some hyperedge outside S."""
    edges = h.sorted_edges
    if len(edges) > cap:
        raise SizeCapError(f"hyperedge count {len(edges)} exceeds the enumeration cap {cap}")
    sets = [set(e) for e in edges]
    n = len(edges)
    opens = []
    for mask in range(1 << n):
        inside = [i for i in range(n) if mask >> i & 1]
        outside = [i for i in range(n) if not mask >> i & 1]
        if any(sets[i] <= sets[j] for i in inside for j in outside):
            continue
        opens.append(h.replace_edges(edges[i] for i in inside))
    return opens


def connected_components(h: Hypergraph) -> list[Hypergraph]:
    """Partition of the hyperedges into path-connected pieces."""
    remaining = set(h.edges)
    sets = {e: set(e) for e in h.edges}
    out = []
    while remaining:
        seed = remaining.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            e = frontier.pop()
            es = sets[e]
            found = [f for f in remaining if es & sets[f]]
            for f in found:
                remaining.remove(f)
                comp.add(f)
                frontier.append(f)
        out.append(h.replace_edges(comp))
    return out


def subset_edges(e: Edge, f: Edge) -> bool:
    return set(e) <= set(f)


def all_sub_hypergraphs(h: Hypergraph):
    """Iterator over every sub-hypergraph (exponential; test-scale only)."""
    edges = h.sorted_edges
    for k in range(len(edges) + 1):
        for combo in itertools.combinations(edges, k):
            yield h.replace_edges(combo)
