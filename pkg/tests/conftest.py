import random
from fractions import Fraction

import pytest

from hyperhom import golden
from hyperhom.hypergraph import Hypergraph, VertexSpace


@pytest.fixture
def spiked():
    return golden.spiked_face(), golden.spiked_face_subs()


@pytest.fixture
def tetra():
    return golden.tetra_two_skeleton(), golden.tetra_two_skeleton_subs()


@pytest.fixture
def two_faces():
    return golden.two_faces_pair()


@pytest.fixture
def rng():
    return random.Random(20240811)


# ---------------------------------------------------------------------------
# independent oracles for derived expected values


def rational_nullspace(rows, ncols):
    """Plain fraction Gaussian elimination, independent of the lattice code."""
    mat = [[Fraction(v) for v in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        mat[r] = [v / mat[r][c] for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, pc in zip(mat, pivots):
            vec[pc] = -row[free]
        basis.append(vec)
    return basis


def coset_count(gen_rows, ambient, bound=12):
    """Count Z^ambient cosets of the generated sublattice by brute search in
    a box (only valid when the quotient is finite and small)."""
    import itertools

    gens = [tuple(g) for g in gen_rows]
    seen = set()
    reps = []
    for point in itertools.product(range(-bound // 2, bound // 2 + 1), repeat=ambient):
        if point in seen:
            continue
        reps.append(point)
        # mark the coset of `point` within the box
        for coeffs in itertools.product(range(-bound, bound + 1), repeat=len(gens)):
            shifted = tuple(p + sum(c * g[i] for c, g in zip(coeffs, gens)) for i, p in enumerate(point))
            if all(-bound // 2 <= x <= bound // 2 for x in shifted):
                seen.add(shifted)
    return len(reps)


def brute_path_distance(h: Hypergraph, tau, tau2, kmax=6):
    """Exhaustive search over hyperedge chains of length <= kmax."""
    import itertools

    edges = list(h.edges)
    ts, t2s = set(tau), set(tau2)
    for k in range(kmax + 1):
        for chain in itertools.product(edges, repeat=k + 1):
            if not ts <= set(chain[0]) or not t2s <= set(chain[-1]):
                continue
            if all(set(chain[i]) & set(chain[i + 1]) for i in range(k)):
                return k
    return None


def component_count(h: Hypergraph) -> int:
    from hyperhom.topology import connected_components

    return len(connected_components(h))


def make_hypergraph(edge_lists, labels=None):
    space = VertexSpace(tuple(labels)) if labels else None
    return Hypergraph.from_labels(edge_lists, space)
