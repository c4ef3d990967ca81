"""Chain complexes attached to hypergraphs.

Everything lives inside one ambient simplicial chain complex: the complex of
the smallest simplicial complex containing a governing hypergraph.  Chain
groups of sub-objects are integer lattices in the ambient coordinates, which
makes inclusions literal (identity on coordinates) and keeps one global basis
order for all of them.

The lattices provided per degree n for a sub-hypergraph h:

  * coordinate: the free group on the n-hyperedges of h;
  * inf: the largest sub-chain-complex inside the coordinate groups, computed
    degreewise as one integer kernel (boundary projected to the coordinates
    of missing simplices);
  * sup: the smallest sub-chain-complex containing the coordinate groups,
    computed degreewise as a lattice sum with the boundary image from above.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, IntegrityError
from .hypergraph import Edge, Hypergraph, VertexMorphism
from .lattice import Lattice, hermite_normal_form, kernel_basis, mat_vec

FLAVORS = ("inf", "sup", "delta", "lower")


@dataclass(frozen=True)
class SimplexBasis:
    """Simplices of a simplicial complex per dimension, in the global order."""

    by_dim: tuple[tuple[Edge, ...], ...]

    @classmethod
    def of(cls, complex_h: Hypergraph) -> "SimplexBasis":
        top = complex_h.dimension
        by_dim = tuple(complex_h.edges_of_dim(n) for n in range(top + 1))
        return cls(by_dim)

    @property
    def top_dim(self) -> int:
        return len(self.by_dim) - 1

    def count(self, n: int) -> int:
        if 0 <= n < len(self.by_dim):
            return len(self.by_dim[n])
        return 0

    def index(self, n: int) -> dict[Edge, int]:
        maps = getattr(self, "_maps", None)
        if maps is None:
            maps = [{e: i for i, e in enumerate(dim)} for dim in self.by_dim]
            object.__setattr__(self, "_maps", maps)
        return maps[n]


def boundary_entries(edge: Edge):
    """Faces of a sorted simplex with the alternating-sign orientation."""
    for i in range(len(edge)):
        yield (edge[:i] + edge[i + 1 :], -1 if i % 2 else 1)


def boundary_matrix(basis: SimplexBasis, n: int):
    """Ambient boundary matrix taking n-chains to (n-1)-chains."""
    rows = basis.count(n - 1)
    cols = basis.count(n)
    mat = [[0] * cols for _ in range(rows)]
    if n == 0 or cols == 0:
        return mat
    idx = basis.index(n - 1)
    for j, edge in enumerate(basis.by_dim[n]):
        for face, sign in boundary_entries(edge):
            mat[idx[face]][j] = sign
    return mat


@dataclass(frozen=True)
class ChainComplex:
    """Graded lattices inside the ambient simplicial chain complex.

    `boundaries[n]` is the full ambient boundary matrix in degree n; the
    chain groups are the sub-lattices `groups[n]`.
    """

    basis: SimplexBasis
    boundaries: tuple[tuple[tuple[int, ...], ...], ...]
    groups: tuple[Lattice, ...]

    @property
    def top_dim(self) -> int:
        return self.basis.top_dim

    def group(self, n: int) -> Lattice:
        if 0 <= n < len(self.groups):
            return self.groups[n]
        return Lattice.zero(self.basis.count(n))

    def boundary(self, n: int):
        if 0 <= n < len(self.boundaries):
            return [list(r) for r in self.boundaries[n]]
        return [[0] * self.basis.count(n) for _ in range(self.basis.count(n - 1))]

    def ranks(self) -> tuple[int, ...]:
        return tuple(g.rank for g in self.groups)

    def validate(self) -> None:
        """Check that the groups form a genuine sub-chain-complex."""
        for n in range(1, len(self.groups)):
            d = self.boundary(n)
            target = self.group(n - 1)
            for row in self.group(n).basis:
                img = mat_vec(d, list(row))
                if not target.contains(img):
                    raise IntegrityError(f"boundary leaves the chain groups in degree {n}")
        for n in range(2, len(self.groups)):
            d1, d2 = self.boundary(n - 1), self.boundary(n)
            for row in self.group(n).basis:
                if any(mat_vec(d1, mat_vec(d2, list(row)))):
                    raise IntegrityError(f"dd != 0 in degree {n}")


class AmbientChains:
    """Ambient data for one governing hypergraph: the chain complex of its
    associated simplicial complex plus cached sub-lattices per flavor."""

    def __init__(self, governing: Hypergraph):
        self.governing = governing
        self.delta = governing.delta_closure()
        self.basis = SimplexBasis.of(self.delta)
        self.boundaries = tuple(
            tuple(map(tuple, boundary_matrix(self.basis, n))) for n in range(self.basis.top_dim + 1)
        )
        self._lattices: dict[tuple, tuple[Lattice, ...]] = {}

    @property
    def top_dim(self) -> int:
        return self.basis.top_dim

    def boundary(self, n: int):
        if 0 <= n <= self.top_dim:
            return [list(r) for r in self.boundaries[n]]
        return [[0] * self.basis.count(n) for _ in range(self.basis.count(n - 1))]

    def chain_vector(self, chain: dict[Edge, int], n: int):
        vec = [0] * self.basis.count(n)
        idx = self.basis.index(n)
        for edge, coeff in chain.items():
            vec[idx[edge]] = coeff
        return vec

    def _require_inside(self, h: Hypergraph):
        if h.space.labels != self.governing.space.labels:
            raise InputError("hypergraph lives on a different vertex space than the ambient")
        missing = [e for e in h.edges if e not in self.delta.edges]
        if missing:
            raise InputError(f"hyperedges outside the ambient complex: {sorted(missing)}")

    # -- flavored lattices ---------------------------------------------------

    def coordinate_lattice(self, h: Hypergraph, n: int) -> Lattice:
        idx = self.basis.index(n)
        return Lattice.coordinate(self.basis.count(n), [idx[e] for e in h.edges_of_dim(n)])

    def _inf_lattice(self, h: Hypergraph, n: int) -> Lattice:
        """G(h)_n intersected with the boundary preimage of G(h)_{n-1}:
        one integer kernel on the columns of h's n-hyperedges, restricted to
        the rows of (n-1)-simplices missing from h."""
        own = h.edges_of_dim(n)
        m = self.basis.count(n)
        if not own:
            return Lattice.zero(m)
        idx = self.basis.index(n)
        cols = [idx[e] for e in own]
        if n == 0:
            return Lattice.coordinate(m, cols)
        present = {e for e in h.edges if len(e) == n}
        d = self.boundaries[n]
        rows = [
            [d[i][j] for j in cols]
            for i, face in enumerate(self.basis.by_dim[n - 1])
            if face not in present
        ]
        gens = []
        for combo in kernel_basis(rows, len(cols)):
            vec = [0] * m
            for c, j in zip(combo, cols):
                vec[j] = c
            gens.append(vec)
        return Lattice.from_rows(m, gens)

    def _sup_lattice(self, h: Hypergraph, n: int) -> Lattice:
        m = self.basis.count(n)
        idx = self.basis.index(n)
        gens = []
        for e in h.edges_of_dim(n):
            vec = [0] * m
            vec[idx[e]] = 1
            gens.append(vec)
        if n + 1 <= self.top_dim:
            d = self.boundary(n + 1)
            up = self.basis.index(n + 1)
            for e in h.edges_of_dim(n + 1):
                j = up[e]
                gens.append([d[i][j] for i in range(m)])
        return Lattice.from_rows(m, gens)

    def lattices(self, h: Hypergraph, flavor: str) -> tuple[Lattice, ...]:
        """Per-degree chain lattices of sub-hypergraph h for the flavor.

        delta / lower reduce to coordinate lattices of the associated /
        lower-associated simplicial complex.
        """
        if flavor not in FLAVORS:
            raise InputError(f"unknown flavor {flavor!r}")
        key = (h.edges, flavor)
        got = self._lattices.get(key)
        if got is not None:
            return got
        self._require_inside(h)
        if flavor == "delta":
            out = self.lattices(h.delta_closure(), "inf")
        elif flavor == "lower":
            out = self.lattices(h.lower_closure(), "inf")
        elif flavor == "inf":
            out = tuple(self._inf_lattice(h, n) for n in range(self.top_dim + 1))
        else:
            out = tuple(self._sup_lattice(h, n) for n in range(self.top_dim + 1))
        self._lattices[key] = out
        return out

    def complex_of(self, h: Hypergraph, flavor: str = "inf") -> ChainComplex:
        return ChainComplex(self.basis, self.boundaries, self.lattices(h, flavor))

    def full_complex(self) -> ChainComplex:
        groups = tuple(Lattice.full(self.basis.count(n)) for n in range(self.top_dim + 1))
        return ChainComplex(self.basis, self.boundaries, groups)


def simplicial_chain_complex(k: Hypergraph, require_simplicial: bool = True) -> ChainComplex:
    """Chain complex of the simplicial complex k (or of its closure).

    With `require_simplicial` a non-closed input is an error; otherwise the
    closure is taken first, so the chain groups are always the full
    coordinate lattices of a genuine simplicial complex.
    """
    if require_simplicial and not k.is_simplicial:
        raise InputError("input hypergraph is not a simplicial complex")
    ambient = AmbientChains(k)
    return ambient.full_complex()


# ---------------------------------------------------------------------------
# chain maps


@dataclass(frozen=True)
class ChainMap:
    """Degreewise integer matrices between two ambient bases, commuting with
    the boundary operators exactly."""

    source: SimplexBasis
    target: SimplexBasis
    mats: tuple[tuple[tuple[int, ...], ...], ...]

    def mat(self, n: int):
        if 0 <= n < len(self.mats):
            return [list(r) for r in self.mats[n]]
        return [[0] * self.source.count(n) for _ in range(self.target.count(n))]

    def apply(self, n: int, vec):
        return mat_vec(self.mat(n), list(vec))


def _permutation_sign(values) -> int:
    values = list(values)
    sign = 1
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if values[i] > values[j]:
                sign = -sign
    return sign


def morphism_chain_map(f: VertexMorphism, source: SimplexBasis, target: SimplexBasis) -> ChainMap:
    """Simplicial chain map of a vertex map: sorted image with the sorting
    sign, zero on degenerate images."""
    mats = []
    for n in range(source.top_dim + 1):
        rows = target.count(n)
        cols = source.count(n)
        mat = [[0] * cols for _ in range(rows)]
        tgt_idx = target.index(n) if n <= target.top_dim else {}
        for j, edge in enumerate(source.by_dim[n]):
            images = [f.mapping[v] for v in edge]
            if any(v < 0 for v in images):
                raise InputError("morphism undefined on a vertex of the source complex")
            if len(set(images)) != len(images):
                continue  # degenerate simplex maps to zero
            key = tuple(sorted(images))
            if key not in tgt_idx:
                raise InputError(f"image simplex {key} missing from the target complex")
            mat[tgt_idx[key]][j] = _permutation_sign(images)
        mats.append(tuple(map(tuple, mat)))
    return ChainMap(source, target, tuple(mats))


def inclusion_chain_map(source: SimplexBasis, target: SimplexBasis) -> ChainMap:
    """Coordinate embedding for a subcomplex basis inside a larger one."""
    mats = []
    for n in range(source.top_dim + 1):
        rows = target.count(n)
        cols = source.count(n)
        mat = [[0] * cols for _ in range(rows)]
        tgt_idx = target.index(n) if n <= target.top_dim else {}
        for j, edge in enumerate(source.by_dim[n]):
            if edge not in tgt_idx:
                raise InputError("source basis is not contained in the target basis")
            mat[tgt_idx[edge]][j] = 1
        mats.append(tuple(map(tuple, mat)))
    return ChainMap(source, target, tuple(mats))


def verify_chain_map(cm: ChainMap, d_source, d_target, top: int) -> None:
    from .lattice import mat_mul

    def same_map(a, b):
        # degenerate shapes (no rows / no columns) can only be the zero map
        za = all(not any(r) for r in a) if a else True
        zb = all(not any(r) for r in b) if b else True
        if za or zb:
            return za and zb
        return a == b

    for n in range(1, top + 1):
        left = mat_mul(d_target(n), cm.mat(n))
        right = mat_mul(cm.mat(n - 1), d_source(n))
        if not same_map(left, right):
            raise IntegrityError(f"chain map fails to commute with boundaries in degree {n}")


# ---------------------------------------------------------------------------
# presented quotient complexes


@dataclass(frozen=True)
class PresentedComplex:
    """Quotient chain complex presented on lifted generators.

    `orders[n]` lists one order per generator (0 = free); `boundaries[n]`
    gives the induced boundary on generator coordinates.  `reps[n]` are the
    ambient lift vectors of the generators.
    """

    orders: tuple[tuple[int, ...], ...]
    boundaries: tuple[tuple[tuple[int, ...], ...], ...]
    reps: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def top_dim(self) -> int:
        return len(self.orders) - 1

    def rank(self, n: int) -> int:
        if 0 <= n < len(self.orders):
            return len(self.orders[n])
        return 0


def quotient_complex(total: ChainComplex, sub: ChainComplex) -> PresentedComplex:
    """Present total/sub degreewise with induced boundary matrices.

    Requires sub to be a degreewise sublattice closed under the boundary,
    which is checked; dd == 0 is verified on the presentation (modulo the
    generator orders)."""
    from .lattice import quotient_presentation

    if total.basis is not sub.basis and total.basis.by_dim != sub.basis.by_dim:
        raise InputError("quotient requires complexes over the same ambient basis")
    top = len(total.groups) - 1
    orders, reps = [], []
    for n in range(top + 1):
        if not sub.group(n).is_sublattice_of(total.group(n)):
            raise InputError(f"sub complex is not contained degreewise (degree {n})")
        pres = quotient_presentation(sub.group(n), total.group(n))
        orders.append((0,) * pres.rank + pres.torsion)
        reps.append(pres.free_reps + pres.torsion_reps)
    mats = []
    for n in range(top + 1):
        cols = len(reps[n])
        rows = len(reps[n - 1]) if n else 0
        mat = [[0] * cols for _ in range(rows)]
        if n and cols and rows:
            d = total.boundary(n)
            gen_rows = [list(r) for r in reps[n - 1]]
            sub_rows = [list(r) for r in sub.group(n - 1).basis]
            stacked = gen_rows + sub_rows
            for j, rep in enumerate(reps[n]):
                img = mat_vec(d, list(rep))
                coeffs = _integer_express(stacked, img, len(gen_rows), orders[n - 1])
                if coeffs is None:
                    raise IntegrityError("induced boundary is not expressible on the lift basis")
                for i, c in enumerate(coeffs):
                    mat[i][j] = c
        mats.append(tuple(map(tuple, mat)))
    # dd == 0 modulo orders
    for n in range(2, top + 1):
        prod = [
            [
                sum(mats[n - 1][i][k] * mats[n][k][j] for k in range(len(reps[n - 1])))
                for j in range(len(reps[n]))
            ]
            for i in range(len(reps[n - 2]))
        ]
        for i, row in enumerate(prod):
            o = orders[n - 2][i]
            for v in row:
                if (o == 0 and v != 0) or (o and v % o):
                    raise IntegrityError(f"induced dd != 0 in degree {n}")
    return PresentedComplex(tuple(orders), tuple(mats), tuple(tuple(map(tuple, r)) for r in reps))


def _integer_express(rows, vec, keep: int, orders):
    """Solve vec = sum c_i rows_i over Z and return the first `keep`
    coefficients, normalized modulo the generator orders."""
    lat_rows = [list(r) for r in rows]
    width = len(vec)
    # Reduce vec against the HNF of the stacked rows while identity columns
    # track which combination of the original generators was used.
    tracked = [list(r) + [1 if t == i else 0 for t in range(len(lat_rows))] for i, r in enumerate(lat_rows)]
    h = hermite_normal_form(tracked, width + len(lat_rows))
    v = list(vec) + [0] * len(lat_rows)
    for row in h:
        j = next((t for t, x in enumerate(row[:width]) if x), None)
        if j is None:
            break
        if v[j] % row[j]:
            return None
        q = v[j] // row[j]
        if q:
            for t in range(len(v)):
                v[t] -= q * row[t]
    if any(v[:width]):
        return None
    combo = [-v[width + i] for i in range(len(lat_rows))]
    out = []
    for i in range(keep):
        c = combo[i]
        o = orders[i] if i < len(orders) else 0
        out.append(c % o if o else c)
    return out
