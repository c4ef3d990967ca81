"""Filtrations of hypergraphs and the persistence built on them.

Two filtration sources: the interior/closure/neighborhood/core tower of a
pair, and sublevel sets of an exact rational hyperedge function.  Barcodes
come from pairwise persistent ranks over a field; interval multiplicities
use inclusion-exclusion on the rank table.  The two-parameter side reports
the rank invariant of the level pairs on a finite grid.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError, IntegrityError
from .fieldlin import QQ, CoefficientSpec, Field
from .homology import Workspace
from .hypergraph import Edge, Hypergraph, empty_like
from .sequences import (
    ExactnessReport,
    Junction,
    Sequence,
    _compose,
    _flavored,
    _mat_rank,
    _mats_equal,
    _pair_spec,
)
from . import topology


@dataclass(frozen=True)
class Filtration:
    """Increasing chain of sub-hypergraphs with index values and labels."""

    steps: tuple[Hypergraph, ...]
    values: tuple = ()  # Fractions for sublevel filtrations, ints otherwise
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        for i in range(len(self.steps) - 1):
            if not self.steps[i] <= self.steps[i + 1]:
                name = self.labels[i] if self.labels else f"step {i}"
                raise IntegrityError(f"filtration is not increasing at {name}")

    def __len__(self):
        return len(self.steps)

    def value_str(self, i: int) -> str:
        if self.values:
            return str(self.values[i])
        return str(i)


def iterated_filtration(
    h: Hypergraph, a: Hypergraph, kmax: int, literal_core: bool = False
) -> Filtration:
    """The tower core^kmax <= ... <= core <= interior <= a <= closure <=
    neighborhood <= ... <= neighborhood^kmax inside h.

    With `literal_core` the displayed core recursion (neighborhoods of
    cores) is used instead; the containment check then reports the first
    violating step by name."""
    if kmax < 1:
        raise InputError("kmax must be >= 1")
    if not (a <= h):
        raise InputError("iterated filtration requires a <= h")
    steps, labels = [], []
    for k in range(kmax, 0, -1):
        steps.append(topology.core(h, a, k, literal_iteration=literal_core))
        labels.append(f"cor^{k}" if k > 1 else "cor")
    steps.append(topology.interior(h, a))
    labels.append("int")
    steps.append(a)
    labels.append("A")
    steps.append(topology.closure(h, a))
    labels.append("cl")
    for k in range(1, kmax + 1):
        steps.append(topology.neighborhood(h, a, k))
        labels.append(f"n^{k}" if k > 1 else "n")
    return Filtration(tuple(steps), tuple(range(len(steps))), tuple(labels))


def sublevel_filtration(h: Hypergraph, values: dict[Edge, Fraction], thresholds) -> Filtration:
    """Level hypergraphs {edges with value <= t} at the given thresholds."""
    missing = [e for e in h.edges if e not in values]
    if missing:
        raise InputError(f"filtration value missing for hyperedges: {sorted(missing)}")
    ts = sorted(set(Fraction(t) for t in thresholds))
    if not ts:
        raise InputError("at least one threshold is required")
    steps = tuple(h.replace_edges(e for e in h.edges if values[e] <= t) for t in ts)
    labels = tuple(f"t<={t}" for t in ts)
    return Filtration(steps, tuple(ts), labels)


def build_filtration(h: Hypergraph, spec: dict) -> Filtration:
    """Dispatcher used by the CLI: spec names the kind and its parameters."""
    kind = spec.get("kind")
    if kind == "iterated_core_neighborhood":
        return iterated_filtration(h, spec["a"], spec.get("kmax", 1), spec.get("literal_core", False))
    if kind == "sublevel":
        return sublevel_filtration(h, spec["values"], spec["thresholds"])
    raise InputError(f"unknown filtration kind {kind!r}")


# ---------------------------------------------------------------------------
# barcodes


@dataclass(frozen=True)
class Bar:
    birth: int
    death: int | None  # step index; None = surviving
    multiplicity: int


@dataclass
class Barcode:
    degree: int
    bars: list[Bar]
    betti: list[int]
    ranks: dict  # (i, j) -> persistent rank, i <= j

    def alive_at(self, i: int) -> int:
        return sum(b.multiplicity for b in self.bars if b.birth <= i and (b.death is None or b.death > i))

    def rank_from_bars(self, i: int, j: int) -> int:
        return sum(b.multiplicity for b in self.bars if b.birth <= i and (b.death is None or b.death > j))


def _bars_from_ranks(ranks, n_steps, betti) -> list[Bar]:
    def r(i, j):
        if i < 0:
            return 0
        if i == j:
            return betti[i]
        return ranks[(i, j)]

    bars = []
    last = n_steps - 1
    for b in range(n_steps):
        for d in range(b + 1, n_steps):
            mult = (r(b, d - 1) - r(b, d)) - (r(b - 1, d - 1) - r(b - 1, d))
            if mult < 0:
                raise IntegrityError("negative interval multiplicity; rank table is inconsistent")
            if mult:
                bars.append(Bar(b, d, mult))
        mult = r(b, last) - r(b - 1, last)
        if mult < 0:
            raise IntegrityError("negative interval multiplicity; rank table is inconsistent")
        if mult:
            bars.append(Bar(b, None, mult))
    return bars


class PersistenceEngine:
    """Shared machinery: absolute or relative homology along a filtration
    with induced maps between consecutive steps, composed for the table."""

    def __init__(self, ws: Workspace, pair_specs, degree: int, coeff: CoefficientSpec):
        self.ws = ws
        self.coeff = coeff
        self.degree = degree
        self.F = Field(coeff)
        self.specs = pair_specs
        self.homs = [ws.homology_f(*s, "inf", coeff) for s in pair_specs]
        self.step_maps = [
            ws.induced_map(pair_specs[i], pair_specs[i + 1], degree, "inf", coeff)
            for i in range(len(pair_specs) - 1)
        ]

    def betti(self) -> list[int]:
        return [h.dims[self.degree] for h in self.homs]

    def rank_table(self) -> dict:
        F = self.F
        n = len(self.specs)
        ranks = {}
        composed = {}
        for i in range(n - 1):
            composed[(i, i + 1)] = self.step_maps[i]
        for span in range(2, n):
            for i in range(n - span):
                composed[(i, i + span)] = _compose(F, self.step_maps[i + span - 1], composed[(i, i + span - 1)])
        for i in range(n):
            for j in range(i + 1, n):
                ranks[(i, j)] = _mat_rank(F, composed[(i, j)])
        return ranks

    def direct_rank(self, i: int, j: int) -> int:
        """Pairwise induced rank, bypassing composition (oracle)."""
        return _mat_rank(F := self.F, self.ws.induced_map(self.specs[i], self.specs[j], self.degree, "inf", self.coeff))


def barcode(
    filt: Filtration,
    degree: int,
    coeff: CoefficientSpec = QQ,
    flavor: str = "inf",
    workspace: Workspace | None = None,
) -> Barcode:
    """Barcode of the absolute homology along the filtration for the
    requested flavor (inf, lower, or delta)."""
    if not coeff.is_field:
        raise InputError("persistence requires field coefficients")
    ws = workspace or Workspace(filt.steps[-1])
    specs = [_pair_spec(_flavored(s, flavor), None) for s in filt.steps]
    eng = PersistenceEngine(ws, specs, degree, coeff)
    betti = eng.betti()
    ranks = eng.rank_table()
    bars = _bars_from_ranks(ranks, len(filt), betti)
    return Barcode(degree, bars, betti, ranks)


def relative_persistence(
    h: Hypergraph,
    subs: Filtration,
    degree: int,
    coeff: CoefficientSpec = QQ,
    flavor: str = "inf",
    workspace: Workspace | None = None,
) -> Barcode:
    """Relative homology H(h, step) along a filtration of sub-hypergraphs,
    with maps induced by growing the subspace."""
    for i, s in enumerate(subs.steps):
        if not (s <= h):
            raise InputError(f"filtration step {i} is not a sub-hypergraph of the total")
    ws = workspace or Workspace(h)
    ht = _flavored(h, flavor)
    specs = [_pair_spec(ht, _flavored(s, flavor) if s.edges else None) for s in subs.steps]
    eng = PersistenceEngine(ws, specs, degree, coeff)
    betti = eng.betti()
    ranks = eng.rank_table()
    bars = _bars_from_ranks(ranks, len(subs), betti)
    return Barcode(degree, bars, betti, ranks)


# ---------------------------------------------------------------------------
# persistent long exact sequence


def persistent_les_check(
    h: Hypergraph,
    a: Hypergraph,
    kmax: int = 1,
    degrees=None,
    coeff: CoefficientSpec = QQ,
    workspace: Workspace | None = None,
) -> ExactnessReport:
    """At every index of the iterated filtration the three flavor rows of
    the pair sequence are exact, all squares between consecutive indices
    commute, and the vertical flavor comparisons commute too."""
    ws = workspace or Workspace(h)
    F = Field(coeff)
    filt = iterated_filtration(h, a, kmax)
    degrees = list(degrees) if degrees is not None else list(range(ws.top_dim + 1))
    report = ExactnessReport("persistent-les")

    flavors = ("lower", "inf", "delta")
    spec_abs, spec_pair, spec_tot = {}, {}, {}
    for fl in flavors:
        tot = _flavored(h, fl)
        spec_tot[fl] = _pair_spec(tot, None)
        spec_abs[fl] = [_pair_spec(_flavored(s, fl), None) for s in filt.steps]
        spec_pair[fl] = [_pair_spec(tot, _flavored(s, fl) if s.edges else None) for s in filt.steps]

    def maps_at(fl, idx, n):
        i_n = ws.induced_map(spec_abs[fl][idx], spec_tot[fl], n, "inf", coeff)
        j_n = ws.induced_map(spec_tot[fl], spec_pair[fl][idx], n, "inf", coeff)
        sub = spec_pair[fl][idx][1]
        if sub is None:
            d_n = []
        else:
            d_n = ws.connecting_map(spec_pair[fl][idx][0], sub, n, "inf", coeff)
        return i_n, j_n, d_n

    for idx, label in enumerate(filt.labels):
        for fl in flavors:
            seq = Sequence(F, f"{fl}@{label}")
            top = ws.top_dim
            for n in range(top, -1, -1):
                i_n, j_n, d_n = maps_at(fl, idx, n)
                seq.add_node(f"H_{n}(step)", n, ws.homology_f(*spec_abs[fl][idx], "inf", coeff).dims[n])
                seq.add_map(i_n)
                seq.add_node(f"H_{n}(total)", n, ws.homology_f(*spec_tot[fl], "inf", coeff).dims[n])
                seq.add_map(j_n)
                seq.add_node(f"H_{n}(total,step)", n, ws.homology_f(*spec_pair[fl][idx], "inf", coeff).dims[n])
                seq.add_map(d_n)
            sub_report = seq.check()
            for j in sub_report.junctions:
                report.junctions.append(
                    Junction(f"{fl}@{label}:{j.label}", j.degree, j.dim, j.rank_in, j.rank_out, j.exact)
                )

    # squares between consecutive indices and between flavor rows
    for n in degrees:
        if n > ws.top_dim:
            continue
        for fl in flavors:
            for idx in range(len(filt) - 1):
                v_abs = ws.induced_map(spec_abs[fl][idx], spec_abs[fl][idx + 1], n, "inf", coeff)
                v_abs_prev = ws.induced_map(spec_abs[fl][idx], spec_abs[fl][idx + 1], n - 1, "inf", coeff) if n else []
                v_pair = ws.induced_map(spec_pair[fl][idx], spec_pair[fl][idx + 1], n, "inf", coeff)
                i1, j1, d1 = maps_at(fl, idx, n)
                i2, j2, d2 = maps_at(fl, idx + 1, n)
                squares = (
                    ("i", _compose(F, i2, v_abs), i1),
                    ("j", _compose(F, v_pair, j1), j2),
                    ("d", _compose(F, v_abs_prev, d1), _compose(F, d2, v_pair)),
                )
                for name, lhs, rhs in squares:
                    if not _mats_equal(F, lhs, rhs):
                        report.junctions.append(
                            Junction(f"square {fl} {filt.labels[idx]}->{filt.labels[idx+1]} {name}", n, -1, 0, 0, False)
                        )
        for low, high in (("lower", "inf"), ("inf", "delta")):
            for idx in range(len(filt)):
                vx = ws.induced_map(spec_abs[low][idx], spec_abs[high][idx], n, "inf", coeff)
                vt = ws.induced_map(spec_tot[low], spec_tot[high], n, "inf", coeff)
                vp = ws.induced_map(spec_pair[low][idx], spec_pair[high][idx], n, "inf", coeff)
                va_prev = ws.induced_map(spec_abs[low][idx], spec_abs[high][idx], n - 1, "inf", coeff) if n else []
                i1, j1, d1 = maps_at(low, idx, n)
                i2, j2, d2 = maps_at(high, idx, n)
                squares = (
                    ("i", _compose(F, i2, vx), _compose(F, vt, i1)),
                    ("j", _compose(F, j2, vt), _compose(F, vp, j1)),
                    ("d", _compose(F, d2, vp), _compose(F, va_prev, d1)),
                )
                for name, lhs, rhs in squares:
                    if not _mats_equal(F, lhs, rhs):
                        report.junctions.append(
                            Junction(f"flavor square {low}->{high}@{filt.labels[idx]} {name}", n, -1, 0, 0, False)
                        )
    return report


# ---------------------------------------------------------------------------
# two-parameter rank invariant


@dataclass
class RankInvariant2D:
    degree: int
    thresholds: tuple
    ranks: dict  # flavor -> {(i, j): rank H_n(step j, step i)} for i <= j
    subadditive: bool
    flavor_maps_commute: bool
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.subadditive and self.flavor_maps_commute


def rank_invariant_2d(
    h: Hypergraph,
    values: dict[Edge, Fraction],
    grid,
    degree: int,
    coeff: CoefficientSpec = QQ,
    workspace: Workspace | None = None,
    check_squares: bool = True,
) -> RankInvariant2D:
    """Rank of H_degree(level b, level a) over every grid cell a <= b for
    the three flavors, with the triple subadditivity inequalities checked on
    every a <= b <= c and the flavor comparison maps checked to commute with
    the structure maps."""
    filt = sublevel_filtration(h, values, grid)
    ws = workspace or Workspace(h)
    F = Field(coeff)
    n_steps = len(filt)
    flavors = ("lower", "inf", "delta")
    ranks = {fl: {} for fl in flavors}
    specs = {fl: {} for fl in flavors}
    violations = []
    for fl in flavors:
        for i in range(n_steps):
            for j in range(i, n_steps):
                spec = _pair_spec(_flavored(filt.steps[j], fl), _flavored(filt.steps[i], fl))
                specs[fl][(i, j)] = spec
                dims = ws.homology_f(*spec, "inf", coeff).dims
                ranks[fl][(i, j)] = dims[degree] if degree <= ws.top_dim else 0
    subadditive = True
    for fl in flavors:
        for i in range(n_steps):
            if ranks[fl][(i, i)] != 0:
                subadditive = False
                violations.append(f"{fl}: diagonal cell ({i},{i}) is non-zero")
        for i in range(n_steps):
            for j in range(i, n_steps):
                for k in range(j, n_steps):
                    if ranks[fl][(i, k)] > ranks[fl][(j, k)] + ranks[fl][(i, j)]:
                        subadditive = False
                        violations.append(f"{fl}: triple ({i},{j},{k}) violates subadditivity")
    commute = True
    if check_squares:
        for low, high in (("lower", "inf"), ("inf", "delta")):
            for i in range(n_steps):
                for j in range(i, n_steps):
                    for i2 in range(i, n_steps):
                        for j2 in range(max(j, i2), n_steps):
                            if (i2, j2) == (i, j):
                                continue
                            v1 = ws.induced_map(specs[low][(i, j)], specs[low][(i2, j2)], degree, "inf", coeff)
                            v2 = ws.induced_map(specs[high][(i, j)], specs[high][(i2, j2)], degree, "inf", coeff)
                            f1 = ws.induced_map(specs[low][(i, j)], specs[high][(i, j)], degree, "inf", coeff)
                            f2 = ws.induced_map(specs[low][(i2, j2)], specs[high][(i2, j2)], degree, "inf", coeff)
                            if not _mats_equal(F, _compose(F, v2, f1), _compose(F, f2, v1)):
                                commute = False
                                violations.append(f"{low}->{high} square ({i},{j})->({i2},{j2})")
    return RankInvariant2D(degree, filt.values, ranks, subadditive, commute, violations)
