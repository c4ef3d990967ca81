"""Exact integer linear algebra over Z.

Hermite normal form, Smith normal form, integer kernels, and sublattice
arithmetic (sum, intersection, preimage, quotient presentation).  Everything
runs on arbitrary-precision Python ints; no floating point appears anywhere
in this module.

Conventions:
  * a matrix is a list of rows (lists of ints);
  * a `Lattice` stores a generating set in row-style reduced Hermite normal
    form (positive pivots, entries above a pivot reduced into [0, pivot)),
    so equal lattices have identical `basis` tuples;
  * `kernel_basis(M)` solves M @ x = 0 for column vectors x.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .errors import InputError, IntegrityError


def xgcd(a: int, b: int):
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b), g >= 0 for a,b not both 0."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


# ---------------------------------------------------------------------------
# basic dense helpers


def mat_vec(mat, vec):
    return [sum(r[j] * vec[j] for j in range(len(vec)) if vec[j]) for r in mat]


def vec_mat(vec, mat):
    n = len(mat[0]) if mat else 0
    out = [0] * n
    for i, c in enumerate(vec):
        if c:
            row = mat[i]
            for j in range(n):
                out[j] += c * row[j]
    return out


def mat_mul(a, b):
    if not a:
        return []
    n = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * n
        for k, c in enumerate(row):
            if c:
                brow = b[k]
                for j in range(n):
                    acc[j] += c * brow[j]
        out.append(acc)
    return out


def transpose(mat, ncols=None):
    if not mat:
        return [[] for _ in range(ncols)] if ncols else []
    return [list(col) for col in zip(*mat)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def is_zero_matrix(mat) -> bool:
    return all(not any(row) for row in mat)


# ---------------------------------------------------------------------------
# Hermite normal form


def _first_nonzero(vec, start=0):
    for j in range(start, len(vec)):
        if vec[j]:
            return j
    return None


def hermite_normal_form(rows, width: int | None = None):
    """Row-style reduced HNF of the lattice generated by `rows`.

    Returned rows have strictly increasing pivot columns, positive pivots,
    and entries above each pivot reduced into [0, pivot).  Zero rows are
    dropped, so the result is a canonical basis of the row lattice.
    """
    if width is None:
        width = len(rows[0]) if rows else 0
    basis: list[list[int]] = []
    pivots: list[int] = []
    for orig in rows:
        vec = list(orig)
        if len(vec) != width:
            raise InputError("ragged matrix")
        j = _first_nonzero(vec)
        while j is not None:
            k = bisect_left(pivots, j)
            if k == len(pivots) or pivots[k] != j:
                basis.insert(k, vec)
                pivots.insert(k, j)
                break
            row = basis[k]
            a, b = row[j], vec[j]
            if b % a == 0:
                q = b // a
                for t in range(j, width):
                    vec[t] -= q * row[t]
            else:
                x, y, g = xgcd(a, b)
                ag, bg = a // g, b // g
                for t in range(j, width):
                    rt, vt = row[t], vec[t]
                    row[t] = x * rt + y * vt
                    vec[t] = ag * vt - bg * rt
            j = _first_nonzero(vec, j)
    for k, row in enumerate(basis):
        if row[pivots[k]] < 0:
            basis[k] = [-v for v in row]
    # reduce rows bottom-up so later-pivot columns stay reduced
    for i in range(len(basis) - 2, -1, -1):
        ri = basis[i]
        for k in range(i + 1, len(basis)):
            j = pivots[k]
            q = ri[j] // basis[k][j]
            if q:
                rk = basis[k]
                for t in range(j, width):
                    ri[t] -= q * rk[t]
    return basis


def kernel_basis(mat, ncols: int | None = None):
    """Basis of the saturated integer kernel {x : mat @ x == 0}.

    Computed as the trailing block of the HNF of [mat^T | I]; the result
    generates every integer solution, so Z^ncols modulo the kernel is
    torsion-free.
    """
    m = len(mat)
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    aug = []
    for i in range(ncols):
        row = [mat[r][i] for r in range(m)]
        row.extend(1 if t == i else 0 for t in range(ncols))
        aug.append(row)
    out = []
    for row in hermite_normal_form(aug, m + ncols):
        if _first_nonzero(row[:m]) is None:
            out.append(row[m:])
    return out


# ---------------------------------------------------------------------------
# Smith normal form


def _min_abs_pivot(a, t, m, n):
    best = None
    where = None
    for i in range(t, m):
        row = a[i]
        for j in range(t, n):
            v = row[j]
            if v and (best is None or abs(v) < best):
                best = abs(v)
                where = (i, j)
                if best == 1:
                    return where
    return where


@dataclass(frozen=True)
class SmithDecomposition:
    """Invariant factors d_1 | d_2 | ... | d_r, optionally with unimodular
    transforms U, V such that U @ M @ V == diag(d)."""

    d: tuple[int, ...]
    left: tuple[tuple[int, ...], ...] | None = None
    right: tuple[tuple[int, ...], ...] | None = None


def _snf_core(a, n, row_hook=None, col_hook=None):
    """Diagonalize `a` in place by unimodular row/column operations,
    choosing the smallest non-zero |entry| as pivot.  Hooks observe each
    elementary operation so callers can accumulate transforms."""
    m = len(a)

    def row_sub(i, k, q):  # row_i -= q * row_k
        ri, rk = a[i], a[k]
        for t in range(n):
            ri[t] -= q * rk[t]
        if row_hook:
            row_hook("sub", i, k, q)

    def row_swap(i, k):
        a[i], a[k] = a[k], a[i]
        if row_hook:
            row_hook("swap", i, k, 0)

    def col_sub(j, k, q):  # col_j -= q * col_k
        for row in a:
            row[j] -= q * row[k]
        if col_hook:
            col_hook("sub", j, k, q)

    def col_swap(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        if col_hook:
            col_hook("swap", j, k, 0)

    t = 0
    while True:
        where = _min_abs_pivot(a, t, m, n)
        if where is None:
            break
        i, j = where
        if i != t:
            row_swap(t, i)
        if j != t:
            col_swap(t, j)
        while True:
            # clear column t below the pivot
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        row_sub(i, t, q)
                    if a[i][t]:
                        row_swap(t, i)
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        col_sub(j, t, q)
                    if a[t][j]:
                        col_swap(t, j)
                        dirty = True
                        break
            if dirty:
                continue
            break
        # enforce divisibility of the remaining block by the pivot
        p = a[t][t]
        fixed = True
        for i in range(t + 1, m):
            row = a[i]
            for j in range(t + 1, n):
                if row[j] % p:
                    row_sub(t, i, -1)  # row_t += row_i, re-run elimination at t
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            t += 1
    for i in range(min(m, n)):
        if a[i][i] < 0:
            for t2 in range(n):
                a[i][t2] = -a[i][t2]
            if row_hook:
                row_hook("neg", i, i, 0)
    return a


def smith_normal_form(mat, ncols: int | None = None, transforms: bool = False) -> SmithDecomposition:
    a = [list(r) for r in mat]
    m = len(a)
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    u = identity(m) if transforms else None
    v = identity(n) if transforms else None

    def row_hook(kind, i, k, q):
        if kind == "sub":
            ri, rk = u[i], u[k]
            for t in range(m):
                ri[t] -= q * rk[t]
        elif kind == "swap":
            u[i], u[k] = u[k], u[i]
        else:  # neg
            u[i] = [-x for x in u[i]]

    def col_hook(kind, j, k, q):
        if kind == "sub":
            for row in v:
                row[j] -= q * row[k]
        else:
            for row in v:
                row[j], row[k] = row[k], row[j]

    _snf_core(a, n, row_hook if transforms else None, col_hook if transforms else None)
    d = []
    for i in range(min(m, n)):
        if a[i][i]:
            d.append(a[i][i])
    return SmithDecomposition(
        tuple(d),
        tuple(map(tuple, u)) if transforms else None,
        tuple(map(tuple, v)) if transforms else None,
    )


def _snf_with_vinv(mat, n):
    """Invariant factors of `mat` plus the inverse right transform.

    With U @ mat @ V == D the row lattice of `mat` equals, after the
    coordinate change x -> x @ V, the lattice spanned by d_i * e_i; the rows
    of V^-1 are the pulled-back coordinate generators.
    """
    a = [list(r) for r in mat]
    vinv = identity(n)

    def col_hook(kind, j, k, q):
        # column op E on the matrix corresponds to E^-1 acting on vinv rows
        if kind == "sub":  # col_j -= q*col_k  =>  row_k += q*row_j
            rk, rj = vinv[k], vinv[j]
            for t in range(n):
                rk[t] += q * rj[t]
        else:
            vinv[j], vinv[k] = vinv[k], vinv[j]

    _snf_core(a, n, None, col_hook)
    d = [a[i][i] for i in range(min(len(a), n)) if a[i][i]]
    return d, vinv


# ---------------------------------------------------------------------------
# lattices


@dataclass(frozen=True)
class Lattice:
    """A finitely generated subgroup of Z^ambient in canonical HNF basis."""

    ambient: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, ambient: int, rows) -> "Lattice":
        rows = [list(r) for r in rows]
        for r in rows:
            if len(r) != ambient:
                raise InputError("generator length does not match ambient dimension")
        return cls(ambient, tuple(map(tuple, hermite_normal_form(rows, ambient))))

    @classmethod
    def zero(cls, ambient: int) -> "Lattice":
        return cls(ambient, ())

    @classmethod
    def full(cls, ambient: int) -> "Lattice":
        return cls(ambient, tuple(map(tuple, identity(ambient))))

    @classmethod
    def coordinate(cls, ambient: int, positions) -> "Lattice":
        rows = []
        for p in sorted(set(positions)):
            row = [0] * ambient
            row[p] = 1
            rows.append(tuple(row))
        return cls(ambient, tuple(rows))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def _pivots(self):
        return [next(j for j, v in enumerate(row) if v) for row in self.basis]

    def coordinates(self, vec):
        """Coefficients expressing `vec` over the basis rows, or None."""
        vec = list(vec)
        if len(vec) != self.ambient:
            raise InputError("vector length does not match ambient dimension")
        coeffs = []
        for row, j in zip(self.basis, self._pivots()):
            if vec[j] % row[j]:
                return None
            q = vec[j] // row[j]
            coeffs.append(q)
            if q:
                for t in range(j, self.ambient):
                    vec[t] -= q * row[t]
        return None if any(vec) else coeffs

    def contains(self, vec) -> bool:
        return self.coordinates(vec) is not None

    def is_sublattice_of(self, other: "Lattice") -> bool:
        if self.ambient != other.ambient:
            raise InputError("ambient dimension mismatch")
        return all(other.contains(row) for row in self.basis)

    def sum(self, other: "Lattice") -> "Lattice":
        if self.ambient != other.ambient:
            raise InputError("ambient dimension mismatch")
        return Lattice.from_rows(self.ambient, list(self.basis) + list(other.basis))

    def intersection(self, other: "Lattice") -> "Lattice":
        """Computed by the kernel of stacked generators: x = a@A = b@B."""
        if self.ambient != other.ambient:
            raise InputError("ambient dimension mismatch")
        ra, rb = self.rank, other.rank
        if ra == 0 or rb == 0:
            return Lattice.zero(self.ambient)
        stacked = [list(self.basis[i]) for i in range(ra)] + [list(other.basis[i]) for i in range(rb)]
        # solve (a, -b) @ stacked == 0, i.e. stacked^T @ (a,-b)^T == 0
        rows = []
        for combo in kernel_basis(transpose(stacked, self.ambient), ra + rb):
            rows.append(vec_mat(combo[:ra], [list(r) for r in self.basis]))
        return Lattice.from_rows(self.ambient, rows)

    def image_under(self, mat) -> "Lattice":
        """Lattice generated by mat @ b for basis rows b (mat maps ambient -> m)."""
        m = len(mat)
        return Lattice.from_rows(m, [mat_vec(mat, list(row)) for row in self.basis])


def lattice_meet_join(a: Lattice, b: Lattice, op: str) -> Lattice:
    if op == "sum":
        return a.sum(b)
    if op == "intersection":
        return a.intersection(b)
    raise InputError(f"unknown lattice operation {op!r}")


def kernel_lattice(mat, ncols: int | None = None) -> Lattice:
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    return Lattice.from_rows(ncols, kernel_basis(mat, ncols))


def preimage_lattice(mat, target: Lattice, ncols: int | None = None) -> Lattice:
    """{x in Z^ncols : mat @ x in target}, via one stacked kernel."""
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    m = len(mat)
    if m != target.ambient:
        raise InputError("matrix row count does not match target ambient dimension")
    r = target.rank
    if m == 0 or is_zero_matrix(mat):
        return Lattice.full(ncols)
    # solve mat @ x - basis^T @ y == 0 and project to x
    aug = [list(mat[i]) + [-target.basis[k][i] for k in range(r)] for i in range(m)]
    rows = [combo[:ncols] for combo in kernel_basis(aug, ncols + r)]
    return Lattice.from_rows(ncols, rows)


@dataclass(frozen=True)
class QuotientPresentation:
    """sup/sub as Z^rank + sum of Z/torsion_i, with lifted generators.

    `free_reps` and `torsion_reps` are ambient vectors; together with `sub`
    they generate `sup`.
    """

    rank: int
    torsion: tuple[int, ...]
    free_reps: tuple[tuple[int, ...], ...]
    torsion_reps: tuple[tuple[int, ...], ...]

    @property
    def lift_basis(self) -> tuple[tuple[int, ...], ...]:
        return self.free_reps + self.torsion_reps

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion


def quotient_presentation(sub: Lattice, sup: Lattice) -> QuotientPresentation:
    if sub.ambient != sup.ambient:
        raise InputError("ambient dimension mismatch")
    r = sup.rank
    coords = []
    for row in sub.basis:
        c = sup.coordinates(row)
        if c is None:
            raise InputError("sub is not contained in sup")
        coords.append(c)
    sup_rows = [list(b) for b in sup.basis]
    if not coords:
        return QuotientPresentation(r, (), tuple(sup.basis), ())
    d, vinv = _snf_with_vinv(coords, r)
    free_reps, torsion, torsion_reps = [], [], []
    for i in range(r):
        di = d[i] if i < len(d) else 0
        rep = tuple(vec_mat(vinv[i], sup_rows))
        if di == 0:
            free_reps.append(rep)
        elif di > 1:
            torsion.append(di)
            torsion_reps.append(rep)
    return QuotientPresentation(len(free_reps), tuple(torsion), tuple(free_reps), tuple(torsion_reps))


def check_divisibility_chain(d) -> None:
    for a, b in zip(d, d[1:]):
        if b % a:
            raise IntegrityError(f"invariant factors {d} violate the divisibility chain")
