"""Named verification suites behind `hyperhom verify --check <name>`.

Each check returns a CheckResult with a deterministic `details` payload;
random batteries are seeded, so identical invocations produce identical
reports.  Independent case evaluations run on a thread pool with results
assembled in submission order.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import golden, randgen, topology
from .errors import InputError
from .fieldlin import QQ, ZZ
from .homology import Workspace, relative_embedded_homology
from .hypergraph import Hypergraph, HypergraphPair, empty_like
from .persistence import persistent_les_check, rank_invariant_2d
from .sequences import (
    cell_structure,
    delta_h_proposition_check,
    les_check,
    les_rows_check,
    mayer_vietoris_check,
    mv_hypothesis,
    naturality_check,
    subadditivity_check,
)

DEFAULT_SEED = 0


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)


@dataclass
class VerifyOptions:
    seed: int = DEFAULT_SEED
    fuzz: int | None = None  # overrides per-check default case counts
    threads: int = 1
    kmax: int = 2


def _pool_map(options: VerifyOptions, fn, items):
    if options.threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=options.threads) as pool:
        return list(pool.map(fn, items))


def _doc_pairs(h: Hypergraph, subs: dict[str, Hypergraph]) -> list[tuple[str, HypergraphPair]]:
    pairs = [(name, HypergraphPair(h, sub)) for name, sub in sorted(subs.items())]
    if not pairs:
        pairs = [("(empty sub)", HypergraphPair(h, empty_like(h)))]
    return pairs


def _groups_tuple(groups):
    return tuple((g.betti, g.torsion) for g in groups)


# ---------------------------------------------------------------------------
# individual checks


def check_inf_sup_iso(h, subs, options: VerifyOptions) -> CheckResult:
    count = options.fuzz if options.fuzz is not None else 500
    rng = random.Random(options.seed)
    cases = [(name, p) for name, p in _doc_pairs(h, subs)]
    failures = []
    for name, pair in cases:
        ws = Workspace(pair.total)
        gi = _groups_tuple(relative_embedded_homology(pair, ZZ, "inf", ws))
        gs = _groups_tuple(relative_embedded_homology(pair, ZZ, "sup", ws))
        if gi != gs:
            failures.append({"case": name, "inf": gi, "sup": gs})

    def one(i):
        pair = randgen.random_pair(rng)
        ws = Workspace(pair.total)
        gi = _groups_tuple(relative_embedded_homology(pair, ZZ, "inf", ws))
        gs = _groups_tuple(relative_embedded_homology(pair, ZZ, "sup", ws))
        return None if gi == gs else {"case": f"random {i}", "inf": gi, "sup": gs}

    # sequential: the generator stream itself must be deterministic
    for i in range(count):
        bad = one(i)
        if bad:
            failures.append(bad)
    return CheckResult(
        "inf-sup-iso",
        not failures,
        {"document_cases": len(cases), "random_cases": count, "failures": failures},
    )


def check_les(h, subs, options: VerifyOptions) -> CheckResult:
    count = options.fuzz if options.fuzz is not None else 200
    rng = random.Random(options.seed)
    failures = []
    for name, pair in _doc_pairs(h, subs):
        rep = les_check(pair.total, pair.sub)
        if not rep.ok:
            failures.append({"case": name, "junctions": [j.label for j in rep.failures()]})
        rows = les_rows_check(pair.total, pair.sub)
        if not rows.ok:
            failures.append({"case": f"{name} (rows)", "junctions": [j.label for j in rows.failures()]})
    for i in range(count):
        pair = randgen.random_pair(rng)
        rep = les_check(pair.total, pair.sub)
        if not rep.ok:
            failures.append({"case": f"random {i}", "junctions": [j.label for j in rep.failures()]})
    return CheckResult("les", not failures, {"random_cases": count, "failures": failures})


def check_les_triple(h, subs, options: VerifyOptions) -> CheckResult:
    count = options.fuzz if options.fuzz is not None else 100
    rng = random.Random(options.seed)
    failures = []
    dh, lh = h.delta_closure(), h.lower_closure()
    rep = les_check(dh, h, lh)
    if not rep.ok:
        failures.append({"case": "(assoc, input, lower)", "junctions": [j.label for j in rep.failures()]})
    for i in range(count):
        ht, a, b = randgen.random_triple(rng)
        rep = les_check(ht, a, b)
        if not rep.ok:
            failures.append({"case": f"random {i}", "junctions": [j.label for j in rep.failures()]})
    return CheckResult("les-triple", not failures, {"random_cases": count, "failures": failures})


def check_naturality(h, subs, options: VerifyOptions) -> CheckResult:
    count = options.fuzz if options.fuzz is not None else 50
    rng = random.Random(options.seed)
    failures = []
    for name, pair in _doc_pairs(h, subs):
        from .hypergraph import VertexMorphism

        ident = VertexMorphism.identity(pair.total.space)
        for n in range(pair.total.delta_closure().dimension + 1):
            if not naturality_check(ident, pair, pair, n):
                failures.append({"case": f"{name} identity", "degree": n})
    for i in range(count):
        f, src, tgt = randgen.random_pair_morphism(rng)
        for n in range(min(2, src.total.delta_closure().dimension) + 1):
            if not naturality_check(f, src, tgt, n):
                failures.append({"case": f"random {i}", "degree": n})
    return CheckResult("naturality", not failures, {"random_cases": count, "failures": failures})


def check_mv(h, subs, options: VerifyOptions) -> CheckResult:
    count = options.fuzz if options.fuzz is not None else 25
    rng = random.Random(options.seed)
    failures = []
    warnings = []
    pairs = golden.mv_pairs()
    acc = pairs[0]
    for j in range(1, 4):
        rep = mayer_vietoris_check(acc, pairs[j])
        if rep.hypothesis_ok:
            if not rep.ok:
                failures.append({"case": f"flag pairs 1..{j+1}", "stage": "exactness"})
        else:
            warnings.append(f"flag gluing step {j+1}: hypothesis fails; no exactness claim made")
        acc = HypergraphPair(acc.total.union(pairs[j].total), acc.sub.union(pairs[j].sub))
    union = golden.mv_union_pair()
    groups = relative_embedded_homology(union, ZZ, "inf")
    details = {
        "union_groups": [str(g) for g in groups],
        "reference_degree3_rank": golden.GOLDEN_MV_REFERENCE[3],
        "computed_degree3_rank": groups[3].betti if len(groups) > 3 else 0,
    }
    if groups[3].betti != golden.GOLDEN_MV_REFERENCE[3]:
        warnings.append("mayer-vietoris union: " + golden.GOLDEN_MV_NOTE)
    # soundness of the hypothesis checker on violating inputs
    rejected = 0
    tried = 0
    for i in range(count):
        p1 = randgen.random_pair(rng, max_vertices=5, max_edges=6, max_dim=2)
        p2_h = randgen.random_hypergraph(rng, max_vertices=5, max_edges=6, max_dim=2)
        p2_h = Hypergraph.from_edges(p1.total.space, {e for e in p2_h.edges if max(e) < len(p1.total.space)})
        if not p2_h.edges:
            continue
        p2 = HypergraphPair(p2_h, randgen.random_sub(rng, p2_h))
        ok, bad = mv_hypothesis(p1.total, p2.total, p1.sub, p2.sub)
        tried += 1
        if ok:
            rep = mayer_vietoris_check(p1, p2)
            if not rep.ok:
                failures.append({"case": f"random {i}", "stage": "exactness under hypothesis"})
        else:
            rejected += 1
    details["random_cases"] = tried
    details["hypothesis_rejections"] = rejected
    details["failures"] = failures
    return CheckResult("mv", not failures, details, warnings)


def check_subadd(h, subs, options: VerifyOptions) -> CheckResult:
    count = options.fuzz if options.fuzz is not None else 200
    rng = random.Random(options.seed)
    failures = []
    dh, lh = h.delta_closure(), h.lower_closure()
    rep = subadditivity_check(dh, h, lh)
    if not rep.ok:
        failures.append({"case": "(assoc, input, lower)", "ranks": rep.ranks})
    for i in range(count):
        ht, a, b = randgen.random_triple(rng)
        rep = subadditivity_check(ht, a, b)
        if not rep.ok:
            failures.append({"case": f"random {i}", "ranks": rep.ranks})
    return CheckResult("subadd", not failures, {"random_cases": count, "failures": failures})


def check_cell(h, subs, options: VerifyOptions) -> CheckResult:
    count = options.fuzz if options.fuzz is not None else 200
    rng = random.Random(options.seed)
    failures = []
    rep = cell_structure(h)
    if not rep.ok:
        failures.append({"case": "input", "lemma": rep.lemma_ok, "betti": rep.betti_match})
    for i in range(count):
        ht = randgen.random_hypergraph(rng)
        rep = cell_structure(ht)
        if not rep.ok:
            failures.append(
                {
                    "case": f"random {i}",
                    "lemma": rep.lemma_ok,
                    "betti": rep.betti_match,
                    "dd": rep.dd_zero,
                    "z": rep.z_match,
                }
            )
    return CheckResult("cell", not failures, {"random_cases": count, "failures": failures})


def check_th1(h, subs, options: VerifyOptions) -> CheckResult:
    count = options.fuzz if options.fuzz is not None else 50
    rng = random.Random(options.seed)
    failures = []
    applicable = 0
    cases = [("input", h)] + [(f"random {i}", randgen.random_hypergraph(rng)) for i in range(count)]
    for name, ht in cases:
        top = max(ht.dimension, 1)
        for l in range(0, top):
            rep = delta_h_proposition_check(ht, l, min(l + 2, top + 1))
            if rep.applicable:
                applicable += 1
                if not rep.ok:
                    failures.append({"case": name, "window": rep.hypothesis_range, "checks": rep.checks})
    return CheckResult(
        "th1", not failures, {"cases": len(cases), "applicable_windows": applicable, "failures": failures}
    )


def check_topology_axioms(h, subs, options: VerifyOptions) -> CheckResult:
    count = options.fuzz if options.fuzz is not None else 50
    rng = random.Random(options.seed)
    failures = []
    cases = []
    if len(h.edges) <= 10:
        cases.append(("input", h))
    for i in range(count):
        cases.append((f"random {i}", randgen.random_hypergraph(rng, max_vertices=6, max_edges=8, max_dim=3)))

    def run(case):
        name, ht = case
        return name, _axioms_one(ht)

    for name, problems in _pool_map(options, run, cases):
        if problems:
            failures.append({"case": name, "problems": problems})
    return CheckResult("topology-axioms", not failures, {"cases": len(cases), "failures": failures})


def _axioms_one(ht: Hypergraph) -> list[str]:
    problems = []
    opens = topology.enumerate_open(ht)
    open_sets = {o.edges for o in opens}
    if frozenset() not in open_sets or ht.edges not in open_sets:
        problems.append("empty set or the whole hypergraph is not open")
    olist = [o.edges for o in opens]
    for i in range(len(olist)):
        for j in range(i + 1, len(olist)):
            if olist[i] | olist[j] not in open_sets:
                problems.append(f"union of opens {i},{j} not open")
            if olist[i] & olist[j] not in open_sets:
                problems.append(f"intersection of opens {i},{j} not open")
    if len(olist) <= 12:
        import itertools as it

        for r in range(3, len(olist) + 1):
            for combo in it.combinations(range(len(olist)), r):
                u = frozenset().union(*(olist[k] for k in combo))
                if u not in open_sets:
                    problems.append(f"family union of size {r} not open")
                    break
    for sub in topology.all_sub_hypergraphs(ht):
        inter = topology.interior(ht, sub)
        if not topology.is_open(ht, inter):
            problems.append(f"interior of {sorted(sub.edges)} not open")
        for o in olist:
            if o <= sub.edges and not (o <= inter.edges):
                problems.append(f"interior of {sorted(sub.edges)} is not the largest open inside")
                break
        cl = topology.closure(ht, sub)
        if not topology.is_closed(ht, cl):
            problems.append(f"closure of {sorted(sub.edges)} not closed")
        if not (sub <= cl):
            problems.append("closure does not contain its argument")
        for o in olist:
            closed = ht.edges - o
            if sub.edges <= closed and not (cl.edges <= closed):
                problems.append(f"closure of {sorted(sub.edges)} is not the smallest closed cover")
                break
        if problems:
            break
    return problems


def check_persistent_les(h, subs, options: VerifyOptions) -> CheckResult:
    count = options.fuzz if options.fuzz is not None else 50
    rng = random.Random(options.seed)
    failures = []
    for name, pair in _doc_pairs(h, subs):
        rep = persistent_les_check(pair.total, pair.sub, kmax=options.kmax)
        if not rep.ok:
            failures.append({"case": name, "junctions": [j.label for j in rep.failures()]})
    for i in range(count):
        pair = randgen.random_pair(rng, max_vertices=6, max_edges=8, max_dim=2)
        rep = persistent_les_check(pair.total, pair.sub, kmax=1)
        if not rep.ok:
            failures.append({"case": f"random {i}", "junctions": [j.label for j in rep.failures()]})
    return CheckResult("persistent-les", not failures, {"random_cases": count, "failures": failures})


def check_paper_examples(h, subs, options: VerifyOptions) -> CheckResult:
    """The full golden suite; mismatches against the pinned reference values
    fail the check, with documented inconsistencies surfaced as warnings."""
    failures = []
    warnings = []
    rows = []

    def run_case(case: golden.GoldenHomology):
        ws = Workspace(case.pair.total)
        gi = _groups_tuple(relative_embedded_homology(case.pair, ZZ, "inf", ws))
        gs = _groups_tuple(relative_embedded_homology(case.pair, ZZ, "sup", ws))
        return case, gi, gs

    for case, gi, gs in _pool_map(options, run_case, golden.golden_homology_cases()):
        match = gi == case.reference
        rows.append(
            {
                "case": case.name,
                "computed": _fmt_groups(gi),
                "reference": _fmt_groups(case.reference),
                "inf_equals_sup": gi == gs,
                "match": match,
            }
        )
        if not gi == gs:
            failures.append({"case": case.name, "problem": "inf/sup disagreement"})
        if not match:
            failures.append({"case": case.name, "problem": "reference mismatch"})
            if case.note:
                warnings.append(f"{case.name}: {case.note}")

    pair, expected, ref_cc, note = golden.golden_topology_case()
    topo_rows = []
    for kind, want in expected.items():
        got = topology.topology_operator(pair.total, pair.sub, kind)
        ok = got.edges == want.edges
        topo_rows.append({"op": kind, "match": ok})
        if not ok:
            failures.append({"case": f"topology {kind}", "problem": "operator mismatch"})
    cc = topology.closed_complement(pair.total, pair.sub)
    if cc.edges != ref_cc.edges:
        warnings.append(f"closed complement: {note}")
    flags = topology.openness(pair.total, topology.complement(pair.total, pair.sub))
    if not flags[0]:
        failures.append({"case": "topology openness", "problem": "complement not open"})
    if not topology.is_closed(pair.total, pair.sub):
        failures.append({"case": "topology openness", "problem": "sub not closed"})

    union = golden.mv_union_pair()
    groups = relative_embedded_homology(union, ZZ, "inf")
    mv_match = (
        groups[2].is_trivial and groups[3].betti == golden.GOLDEN_MV_REFERENCE[3] and not groups[3].torsion
    )
    rows.append(
        {
            "case": "mv-union",
            "computed": _fmt_groups(_groups_tuple(groups)),
            "reference": f"degree2=0, degree3=Z^{golden.GOLDEN_MV_REFERENCE[3]}",
            "match": mv_match,
        }
    )
    if not mv_match:
        failures.append({"case": "mv-union", "problem": "reference mismatch"})
        warnings.append("mv-union: " + golden.GOLDEN_MV_NOTE)

    details = {
        "homology": rows,
        "topology": topo_rows,
        "failures": failures,
    }
    return CheckResult("paper-examples", not failures, details, warnings)


def _fmt_groups(groups_tuple):
    from .homology import HomologyGroup

    return [str(HomologyGroup(b, t)) for b, t in groups_tuple]


CHECKS = {
    "les": check_les,
    "les-triple": check_les_triple,
    "mv": check_mv,
    "subadd": check_subadd,
    "cell": check_cell,
    "th1": check_th1,
    "topology-axioms": check_topology_axioms,
    "inf-sup-iso": check_inf_sup_iso,
    "naturality": check_naturality,
    "persistent-les": check_persistent_les,
    "paper-examples": check_paper_examples,
}


def run_check(name: str, h: Hypergraph, subs: dict[str, Hypergraph], options: VerifyOptions) -> CheckResult:
    if name not in CHECKS:
        raise InputError(f"unknown check {name!r} (have: {', '.join(sorted(CHECKS))})")
    return CHECKS[name](h, subs, options)
