"""Homology of hypergraph pairs over Z, Q, and GF(p).

For a pair of chain lattices L' <= L (degreewise, inside one ambient
simplicial complex) the relative homology in degree n is

    H_n = Zbar_n / Bbar_n,
    Zbar_n = { x in L_n : d(x) in L'_{n-1} },
    Bbar_n = d(L_{n+1}) + L'_n,

computed as an integer lattice quotient (Z) or as a dimension difference of
spans (fields).  Absolute homology is the L' = 0 case.  This formulation
never materializes quotient chain groups, so it is indifferent to whether
they carry torsion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import AmbientChains, ChainComplex, ChainMap, PresentedComplex
from .errors import InputError, IntegrityError, UnsupportedModeError
from .fieldlin import QQ, CoefficientSpec, Field, ZZ
from .hypergraph import Hypergraph, HypergraphPair
from .lattice import (
    Lattice,
    QuotientPresentation,
    is_zero_matrix,
    kernel_lattice,
    mat_mul,
    mat_vec,
    preimage_lattice,
    quotient_presentation,
)


@dataclass(frozen=True)
class HomologyGroup:
    """A finitely generated abelian group: Z^betti + sum of Z/torsion_i."""

    betti: int
    torsion: tuple[int, ...] = ()

    def __str__(self):
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti:
            parts.append(f"Z^{self.betti}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    @property
    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion

    @classmethod
    def from_presentation(cls, pres: QuotientPresentation) -> "HomologyGroup":
        return cls(pres.rank, pres.torsion)


def trivial_groups(count: int) -> list[HomologyGroup]:
    return [HomologyGroup(0) for _ in range(count)]


# ---------------------------------------------------------------------------
# integer homology


def pair_homology_z(total: ChainComplex, sub: ChainComplex | None = None):
    """Relative homology over Z as quotient presentations per degree.

    Representatives (free and torsion) are ambient chain vectors."""
    top = total.top_dim
    out = []
    for n in range(top + 1):
        ln = total.group(n)
        sub_low = sub.group(n - 1) if sub and n else Lattice.zero(total.basis.count(n - 1))
        if n == 0 or ln.rank == 0:
            zbar = ln
        else:
            d = total.boundary(n)
            coords = preimage_lattice(
                mat_mul(d, [list(r) for r in _rows_as_cols(ln)]), sub_low, ln.rank
            )
            zbar = Lattice.from_rows(
                ln.ambient,
                [_combine(ln, c) for c in coords.basis],
            )
        gens = []
        if n + 1 <= top:
            d_up = total.boundary(n + 1)
            for row in total.group(n + 1).basis:
                gens.append(mat_vec(d_up, list(row)))
        if sub is not None:
            gens.extend(list(r) for r in sub.group(n).basis)
        bbar = Lattice.from_rows(ln.ambient, gens)
        out.append(quotient_presentation(bbar, zbar))
    return out


def _rows_as_cols(lat: Lattice):
    # basis rows as matrix columns: ambient x rank
    return [[lat.basis[k][i] for k in range(lat.rank)] for i in range(lat.ambient)]


def _combine(lat: Lattice, coeffs):
    out = [0] * lat.ambient
    for c, row in zip(coeffs, lat.basis):
        if c:
            for i, v in enumerate(row):
                out[i] += c * v
    return out


def homology_of_presented(pres: PresentedComplex) -> list[HomologyGroup]:
    """Homology of a presented quotient complex with free chain groups."""
    for orders in pres.orders:
        if any(orders):
            raise UnsupportedModeError("homology of presented complexes requires free chain groups")
    return presented_homology([pres.boundaries[n] for n in range(pres.top_dim + 1)])


def presented_homology(boundaries) -> list[HomologyGroup]:
    """Homology of an explicit free chain complex given by boundary matrices.

    `boundaries[n]` maps degree n to degree n-1 (boundaries[0] may have zero
    rows).  Raises IntegrityError if dd != 0."""
    top = len(boundaries) - 1
    dims = [len(boundaries[n][0]) if boundaries[n] else _cols_of(boundaries, n) for n in range(top + 1)]
    for n in range(1, top + 1):
        low, high = boundaries[n - 1], boundaries[n]
        if low and high and not is_zero_matrix(mat_mul([list(r) for r in low], [list(r) for r in high])):
            raise IntegrityError(f"dd != 0 in degree {n}")
    out = []
    for n in range(top + 1):
        dim_n = dims[n]
        if n == 0:
            zbar = Lattice.full(dim_n)
        else:
            zbar = kernel_lattice([list(r) for r in boundaries[n]], dim_n)
        if n + 1 <= top and dims[n + 1]:
            d_up = [list(r) for r in boundaries[n + 1]]
            bbar = Lattice.from_rows(dim_n, [mat_vec(d_up, _unit(dims[n + 1], j)) for j in range(dims[n + 1])])
        else:
            bbar = Lattice.zero(dim_n)
        out.append(HomologyGroup.from_presentation(quotient_presentation(bbar, zbar)))
    return out


def _cols_of(boundaries, n):
    # degree-n dimension when the boundary matrix has no rows
    if boundaries[n]:
        return len(boundaries[n][0])
    if n + 1 < len(boundaries) and boundaries[n + 1]:
        return len(boundaries[n + 1])
    return 0


def _unit(n, j):
    v = [0] * n
    v[j] = 1
    return v


# ---------------------------------------------------------------------------
# field homology with explicit bases


@dataclass
class FieldPairHomology:
    """Field homology of a lattice pair with representative cycles.

    Per degree: `dims[n]`, ambient representative vectors `reps[n]`, the
    relative-cycle span `zbar[n]` and relative-boundary span `bbar[n]`
    (RREF bases).  `express` rewrites an ambient relative cycle in the
    homology basis."""

    field: Field
    dims: list[int]
    reps: list[list[list]]
    zbar: list[list[list]]
    bbar: list[list[list]]

    def express(self, n: int, vec):
        if n < 0 or n >= len(self.dims):
            return []
        F = self.field
        cols = [list(r) for r in self.reps[n]] + [list(r) for r in self.bbar[n]]
        coeffs = F.express(cols, list(vec))
        if coeffs is None:
            raise IntegrityError("vector is not a relative cycle of the target pair")
        return coeffs[: self.dims[n]]

    def group_dims(self) -> list[int]:
        return list(self.dims)


def pair_homology_field(
    ambient: AmbientChains,
    total_lats: tuple[Lattice, ...],
    sub_lats: tuple[Lattice, ...] | None,
    field: Field,
) -> FieldPairHomology:
    F = field
    top = ambient.top_dim
    spans_total = [F.span(F.int_matrix([list(r) for r in total_lats[n].basis])) for n in range(top + 1)]
    spans_sub = [
        F.span(F.int_matrix([list(r) for r in sub_lats[n].basis])) if sub_lats else []
        for n in range(top + 1)
    ]
    dims, reps, zbars, bbars = [], [], [], []
    for n in range(top + 1):
        ln = spans_total[n]
        if n == 0 or not ln:
            zbar = ln
        else:
            d = F.int_matrix(ambient.boundary(n))
            dl = F.mat_mul(d, _cols_from_rows(F, ln))
            pre = F.preimage(dl, spans_sub[n - 1], len(ln))
            zbar = F.span([_f_combine(F, c, ln) for c in pre])
        gens = []
        if n + 1 <= top and spans_total[n + 1]:
            d_up = F.int_matrix(ambient.boundary(n + 1))
            for row in spans_total[n + 1]:
                gens.append(F.mat_vec(d_up, row))
        gens.extend(spans_sub[n])
        bbar = F.span(gens)
        ext, _ = F.extend_basis(bbar, zbar)
        dims.append(len(ext))
        reps.append(ext)
        zbars.append(zbar)
        bbars.append(bbar)
    return FieldPairHomology(F, dims, reps, zbars, bbars)


def _cols_from_rows(F: Field, rows):
    if not rows:
        return []
    return [[rows[k][i] for k in range(len(rows))] for i in range(len(rows[0]))]


def _f_combine(F: Field, coeffs, rows):
    out = [F.zero()] * len(rows[0])
    for c, row in zip(coeffs, rows):
        if c:
            for i, v in enumerate(row):
                out[i] = F.add(out[i], F.mul(c, v))
    return out


# ---------------------------------------------------------------------------
# workspace: cached engine over one governing hypergraph


class Workspace:
    """Caches ambient data, flavored lattices, and homology for the
    sub-hypergraphs of one governing hypergraph."""

    def __init__(self, governing: Hypergraph):
        self.ambient = AmbientChains(governing)
        self._hom_z: dict = {}
        self._hom_f: dict = {}

    @property
    def top_dim(self) -> int:
        return self.ambient.top_dim

    def _normalize(self, h: Hypergraph, flavor: str):
        if flavor == "delta":
            return h.delta_closure(), "inf"
        if flavor == "lower":
            return h.lower_closure(), "inf"
        return h, flavor

    def complex_of(self, h: Hypergraph, flavor: str = "inf") -> ChainComplex:
        h, flavor = self._normalize(h, flavor)
        return self.ambient.complex_of(h, flavor)

    def homology_z(self, total: Hypergraph, sub: Hypergraph | None = None, flavor: str = "inf"):
        total, nflavor = self._normalize(total, flavor)
        subn = self._normalize(sub, flavor)[0] if sub is not None else None
        key = (total.edges, subn.edges if subn is not None else None, nflavor)
        got = self._hom_z.get(key)
        if got is None:
            cx = self.ambient.complex_of(total, nflavor)
            cs = self.ambient.complex_of(subn, nflavor) if subn is not None else None
            got = pair_homology_z(cx, cs)
            self._hom_z[key] = got
        return got

    def groups_z(self, total, sub=None, flavor="inf") -> list[HomologyGroup]:
        return [HomologyGroup.from_presentation(p) for p in self.homology_z(total, sub, flavor)]

    def homology_f(
        self,
        total: Hypergraph,
        sub: Hypergraph | None = None,
        flavor: str = "inf",
        coeff: CoefficientSpec = QQ,
    ) -> FieldPairHomology:
        total, nflavor = self._normalize(total, flavor)
        subn = self._normalize(sub, flavor)[0] if sub is not None else None
        key = (str(coeff), total.edges, subn.edges if subn is not None else None, nflavor)
        got = self._hom_f.get(key)
        if got is None:
            field = Field(coeff)
            tl = self.ambient.lattices(total, nflavor)
            sl = self.ambient.lattices(subn, nflavor) if subn is not None else None
            got = pair_homology_field(self.ambient, tl, sl, field)
            self._hom_f[key] = got
        return got

    def induced_map(
        self,
        src: tuple[Hypergraph, Hypergraph | None],
        dst: tuple[Hypergraph, Hypergraph | None],
        degree: int,
        flavor: str = "inf",
        coeff: CoefficientSpec = QQ,
        src_flavor: str | None = None,
        dst_flavor: str | None = None,
    ):
        """Matrix of the map induced by inclusion on field homology.

        `src_flavor` / `dst_flavor` allow mixed-flavor verticals (the ambient
        chain map is the identity either way)."""
        if degree < 0 or degree > self.top_dim:
            return []
        hs = self.homology_f(src[0], src[1], src_flavor or flavor, coeff)
        ht = self.homology_f(dst[0], dst[1], dst_flavor or flavor, coeff)
        cols = [ht.express(degree, rep) for rep in hs.reps[degree]]
        return _transpose_coords(cols, ht.dims[degree])

    def connecting_map(
        self,
        total: Hypergraph,
        sub: Hypergraph,
        degree: int,
        flavor: str = "inf",
        coeff: CoefficientSpec = QQ,
        sub_pair: tuple[Hypergraph, Hypergraph | None] | None = None,
    ):
        """Connecting homomorphism H_n(total, sub) -> H_{n-1}(target) where
        target is the absolute sub (default) or a pair (sub, B) for triples.

        Representatives of the relative group are chains with boundary inside
        the sub complex, so the map is literally rep -> [d(rep)]."""
        hp = self.homology_f(total, sub, flavor, coeff)
        target = self.homology_f(*(sub_pair or (sub, None)), flavor, coeff)
        F = hp.field
        d = F.int_matrix(self.ambient.boundary(degree)) if degree else []
        cols = []
        for rep in hp.reps[degree]:
            img = F.mat_vec(d, rep) if degree else [F.zero()] * self.ambient.basis.count(-1)
            cols.append(target.express(degree - 1, img) if degree else [])
        return _transpose_coords(cols, target.dims[degree - 1] if degree else 0)

    def mapped_induced(
        self,
        chain_map: ChainMap,
        src_h: FieldPairHomology,
        dst_h: FieldPairHomology,
        degree: int,
    ):
        """Induced map along an explicit ambient chain map (e.g. a vertex
        morphism into a different workspace)."""
        F = dst_h.field
        mat = F.int_matrix(chain_map.mat(degree))
        cols = [dst_h.express(degree, F.mat_vec(mat, F.int_vector(rep))) for rep in src_h.reps[degree]]
        return _transpose_coords(cols, dst_h.dims[degree])


def _transpose_coords(cols, nrows):
    return [[col[i] for col in cols] for i in range(nrows)]


# ---------------------------------------------------------------------------
# public operations


def relative_embedded_homology(
    pair: HypergraphPair,
    coeff: CoefficientSpec = ZZ,
    flavor: str = "inf",
    workspace: Workspace | None = None,
) -> list[HomologyGroup]:
    """Homology of the pair's quotient complex in the requested flavor.

    Over Z the full groups (betti + torsion) are reported; over a field the
    torsion list is empty. `(H, empty)` gives the absolute homology of H."""
    ws = workspace or Workspace(pair.total)
    sub = pair.sub if pair.sub.edges else None
    if coeff.is_field:
        hf = ws.homology_f(pair.total, sub, flavor, coeff)
        return [HomologyGroup(d) for d in hf.dims]
    return ws.groups_z(pair.total, sub, flavor)


def embedded_homology(
    h: Hypergraph,
    coeff: CoefficientSpec = ZZ,
    flavor: str = "inf",
    workspace: Workspace | None = None,
) -> list[HomologyGroup]:
    from .hypergraph import empty_like

    return relative_embedded_homology(HypergraphPair(h, empty_like(h)), coeff, flavor, workspace)


def induced_homology_map(
    workspace: Workspace,
    src: tuple[Hypergraph, Hypergraph | None],
    dst: tuple[Hypergraph, Hypergraph | None],
    degree: int,
    coeff: CoefficientSpec = QQ,
    flavor: str = "inf",
):
    """Matrix of the inclusion-induced map on homology (field coefficients
    only; integer-coefficient maps are not supported)."""
    if not coeff.is_field:
        raise UnsupportedModeError("induced maps on homology require field coefficients")
    return workspace.induced_map(src, dst, degree, flavor, coeff)
