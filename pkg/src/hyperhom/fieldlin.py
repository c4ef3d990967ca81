"""Exact linear algebra over Q and GF(p).

Rational arithmetic uses `fractions.Fraction`; prime fields use ints mod p.
Subspaces are kept as reduced-row-echelon bases, so equal subspaces have
identical bases and membership tests are plain reductions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, IntegrityError


@dataclass(frozen=True)
class CoefficientSpec:
    """Coefficient ring selector: integers, rationals, or a prime field."""

    ring: str  # "z", "q", or "zp"
    p: int | None = None

    def __post_init__(self):
        if self.ring not in ("z", "q", "zp"):
            raise InputError(f"unknown coefficient ring {self.ring!r}")
        if self.ring == "zp":
            p = self.p
            if p is None or p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
                raise InputError(f"{self.p} is not prime")

    @property
    def is_field(self) -> bool:
        return self.ring != "z"

    @classmethod
    def parse(cls, text: str) -> "CoefficientSpec":
        text = text.strip().lower()
        if text == "z":
            return cls("z")
        if text == "q":
            return cls("q")
        if text.startswith("zp:"):
            return cls("zp", int(text[3:]))
        raise InputError(f"cannot parse coefficient spec {text!r} (use z, q, or zp:<p>)")

    def __str__(self):
        return self.ring if self.ring != "zp" else f"zp:{self.p}"


ZZ = CoefficientSpec("z")
QQ = CoefficientSpec("q")


def GF(p: int) -> CoefficientSpec:
    return CoefficientSpec("zp", p)


class Field:
    """Arithmetic context for a CoefficientSpec with is_field == True."""

    def __init__(self, spec: CoefficientSpec):
        if not spec.is_field:
            raise InputError("field operations require rational or prime-field coefficients")
        self.spec = spec
        self.p = spec.p

    def of(self, n: int):
        return n % self.p if self.p else Fraction(n)

    def zero(self):
        return 0 if self.p else Fraction(0)

    def one(self):
        return 1 if self.p else Fraction(1)

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def div(self, a, b):
        if self.p:
            return (a * pow(b, self.p - 2, self.p)) % self.p
        return a / b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def int_matrix(self, mat):
        return [[self.of(v) for v in row] for row in mat]

    def int_vector(self, vec):
        return [self.of(v) for v in vec]

    # -- row reduction -----------------------------------------------------

    def rref(self, rows):
        """Reduced row echelon form; returns (rows, pivot_columns)."""
        rows = [list(r) for r in rows]
        if not rows:
            return [], []
        ncols = len(rows[0])
        pivots = []
        r = 0
        for c in range(ncols):
            pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            inv = self.div(self.one(), rows[r][c])
            rows[r] = [self.mul(inv, v) for v in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [self.sub(a, self.mul(f, b)) for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        return [row for row in rows[:r] if any(row)], pivots

    def span(self, rows):
        """Canonical basis (RREF rows) of the row span."""
        basis, _ = self.rref(rows)
        return basis

    def rank(self, rows) -> int:
        return len(self.span(rows))

    def reduce_against(self, basis, vec):
        """Reduce vec against an RREF basis; returns the remainder."""
        vec = list(vec)
        for row in basis:
            c = next(j for j, v in enumerate(row) if v)
            if vec[c]:
                f = vec[c]
                vec = [self.sub(a, self.mul(f, b)) for a, b in zip(vec, row)]
        return vec

    def in_span(self, basis, vec) -> bool:
        return not any(self.reduce_against(basis, vec))

    def spans_equal(self, basis_a, basis_b) -> bool:
        return self.span(list(basis_a)) == self.span(list(basis_b))

    # -- solving -------------------------------------------------------------

    def solve(self, mat, rhs):
        """One solution x of mat @ x == rhs, or None (mat given as rows)."""
        m = len(mat)
        n = len(mat[0]) if m else 0
        aug = [list(mat[i]) + [rhs[i]] for i in range(m)]
        reduced, pivots = self.rref(aug)
        x = [self.zero()] * n
        for row, c in zip(reduced, pivots):
            if c == n:
                return None  # pivot in the rhs column: inconsistent
            x[c] = row[n]
        return x

    def nullspace(self, mat, ncols: int | None = None):
        """Basis of {x : mat @ x == 0} (mat given as rows)."""
        if ncols is None:
            ncols = len(mat[0]) if mat else 0
        reduced, pivots = self.rref(mat)
        free = [c for c in range(ncols) if c not in pivots]
        basis = []
        for fc in free:
            vec = [self.zero()] * ncols
            vec[fc] = self.one()
            for row, pc in zip(reduced, pivots):
                vec[pc] = self.neg(row[fc])
            basis.append(vec)
        return basis

    def mat_vec(self, mat, vec):
        out = []
        for row in mat:
            acc = self.zero()
            for a, b in zip(row, vec):
                if a and b:
                    acc = self.add(acc, self.mul(a, b))
            out.append(acc)
        return out

    def mat_mul(self, a, b):
        if not a:
            return []
        n = len(b[0]) if b else 0
        out = []
        for row in a:
            acc = [self.zero()] * n
            for k, c in enumerate(row):
                if c:
                    brow = b[k]
                    for j in range(n):
                        acc[j] = self.add(acc[j], self.mul(c, brow[j]))
            out.append(acc)
        return out

    def preimage(self, mat, span_basis, ncols: int | None = None):
        """Basis of {x : mat @ x in span(span_basis)} (mat given as rows)."""
        if ncols is None:
            ncols = len(mat[0]) if mat else 0
        m = len(mat)
        r = len(span_basis)
        aug = [list(mat[i]) + [self.neg(span_basis[k][i]) for k in range(r)] for i in range(m)]
        sols = self.nullspace(aug, ncols + r)
        return self.span([s[:ncols] for s in sols])

    def extend_basis(self, inner, vectors):
        """Vectors from `vectors` extending the RREF basis `inner` to the
        span of inner + vectors; returns (extension_vectors, combined_rref)."""
        combined = [list(r) for r in inner]
        chosen = []
        for v in vectors:
            rem = self.reduce_against(self.span(combined) if combined else [], v)
            if any(rem):
                chosen.append(list(v))
                combined.append(list(v))
        return chosen, self.span(combined)

    def express(self, columns, vec):
        """Coefficients c with sum(c_i * columns_i) == vec, or None."""
        if not columns:
            return [] if not any(vec) else None
        mat = [[col[i] for col in columns] for i in range(len(vec))]
        return self.solve(mat, list(vec))

    def is_zero_matrix(self, mat) -> bool:
        return all(not any(row) for row in mat)


def field_for(spec: CoefficientSpec) -> Field:
    return Field(spec)


def require_dd_zero(field: Field, d_low, d_high, label="complex"):
    if d_low and d_high and not field.is_zero_matrix(field.mat_mul(d_low, d_high)):
        raise IntegrityError(f"boundary composition is non-zero in {label}")
