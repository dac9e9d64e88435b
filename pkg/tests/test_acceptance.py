"""Acceptance gate: one test per headline capability, each printing a single
PASS/FAIL line with its wall time.

Every test recomputes its claims from scratch (fresh budgets, fresh random
corpora) and fails loudly on the first discrepancy; nothing here trusts
cached values. Asymptotic statements are out of scope by design: the checks
below cover exact formulas and finite instances only.
"""

import random
import time

from conftest import graph_corpus, random_graph, random_plit_qsat
from oracles import naive_chromatic, naive_clique_number, naive_stability
from vstab import Graph
from vstab.constructions import construct_prop31
from vstab.critical import find_critical_subgraph, independent_transversal, vs_ivs_pipeline
from vstab.graph import delete_vertices, is_independent, vset_list, vset_size
from vstab.invariants import Budget, chromatic_number, clique_number
from vstab.sat import hall_satisfier, is_satisfiable, satisfies, validate_plit_qsat
from vstab.stability import stability_report
from vstab.verify import run_suite


def _bad(results):
    return [(r.claim_id, r.status, r.computed, r.expected)
            for r in results if r.status != "pass"]


def _finish(label, t0, limit_s, ok, detail=""):
    seconds = time.perf_counter() - t0
    status = "PASS" if ok else "FAIL"
    line = f"[accept] {status} {label} ({seconds:.1f}s)"
    if detail:
        line += f" :: {detail}"
    print(line)
    assert ok, line
    assert seconds < limit_s, f"{label}: {seconds:.1f}s exceeds {limit_s}s"


def test_prop31_base_family():
    t0 = time.perf_counter()
    results = run_suite("prop31", chi_range=(4, 8), variant_chis=())
    bad = _bad(results)
    by_id = {r.claim_id: r for r in results}
    profile = tuple(by_id[f"prop31.chi4.{key}"].computed
                    for key in ("delta", "chi", "ivs", "vs"))
    ok = not bad and len(results) == 26 and profile == (5, 4, 3, 2)
    _finish("prop31 chi 4..8: omega=chi, delta formula, vs=2, ivs>=3, "
            "chi=4 profile (5,4,3,2)", t0, 300, ok,
            detail=f"claims={len(results)} bad={bad} profile={profile}")


def test_prop31_variant_family():
    t0 = time.perf_counter()
    results = run_suite("prop31", chi_range=(9, 8), variant_chis=(9, 16))
    bad = _bad(results)
    by_id = {r.claim_id: r for r in results}
    caps = (by_id["prop31.variant.chi9.ivs"].computed,
            by_id["prop31.variant.chi16.ivs"].computed)
    sizes_ok = True
    for chi, copies in ((9, 2), (16, 3)):
        g, meta = construct_prop31(chi, copies=copies)
        a = meta.params["a"]
        sizes_ok = sizes_ok and g.n == chi + copies * (chi - 2 + a)
    ok = not bad and caps == (3, 4) and sizes_ok
    _finish("prop31 variant chi in {9,16}: copies=ceil(chi/a)-1, vs=2, "
            "ivs=ceil(chi/a)", t0, 600, ok,
            detail=f"claims={len(results)} bad={bad} ivs={caps}")


def test_constr1_family():
    t0 = time.perf_counter()
    results = run_suite("constr1", delta_range=(3, 6))
    bad = _bad(results)
    ok = not bad and len(results) == 28
    _finish("constr1 delta 3..6: omega=chi=ceil(2(delta+1)/3)-1, "
            "vs=k+1, ivs=k+2 for both parameters", t0, 600, ok,
            detail=f"claims={len(results)} bad={bad}")


def test_c5blowup_family():
    t0 = time.perf_counter()
    results = run_suite("c5blowup", k_range=(1, 3))
    bad = _bad(results)
    by_id = {r.claim_id: r for r in results}
    parity = tuple(by_id[f"c5blowup.k{k}.vs_chi"].computed for k in (1, 2, 3))
    ok = not bad and parity == (1, 2, 1)
    _finish("c5blowup k 1..3: omega=2k, chi=ceil(5k/2), vs_omega=3, "
            "ivs_omega nonexistent, vs_chi=ivs_chi by parity", t0, 120, ok,
            detail=f"claims={len(results)} bad={bad} vs_chi={parity}")


def test_unsat_family_claims():
    t0 = time.perf_counter()
    results = run_suite("sat", m_range=(2, 4))
    bad = _bad(results)
    by_id = {r.claim_id: r for r in results}
    m2 = (by_id["sat.m2.vs_chi"].computed, by_id["sat.m2.vs_omega"].computed)
    ok = not bad and m2 == (4, 4) and "sat.m3.cert" in by_id and "sat.m4.counts" in by_id
    _finish("unsatisfiable family m 2..4: valid shape, unsat, chi(G(I))=2m, "
            "m=2 stability, m=3 certificate, m=4 counts", t0, 900, ok,
            detail=f"claims={len(results)} bad={bad} m2 vs={m2}")


def test_random_plit_qsat_hall_satisfier():
    t0 = time.perf_counter()
    rng = random.Random(67)
    checked = 0
    for p, q in ((2, 4), (3, 6)):
        for _ in range(200):
            inst = random_plit_qsat(rng, p, q, max_clauses=10, max_vars=12)
            assert validate_plit_qsat(inst, p, q)
            assignment = hall_satisfier(inst, p)
            assert satisfies(inst, assignment)
            assert is_satisfiable(inst) is not None
            checked += 1
    _finish("hall satisfier: 200 random 2-LIT 4-SAT + 200 random 3-LIT 6-SAT "
            "instances, cross-checked by exhaustive scan", t0, 120,
            checked == 400, detail=f"instances={checked}")


def test_bound_formulas():
    t0 = time.perf_counter()
    results = run_suite("fbounds")
    bad = _bad(results)
    by_id = {r.claim_id: r for r in results}
    witness_ids = [f"thm12.part1.delta{d}" for d in range(3, 11)]
    ok = (not bad and "fbounds.kdelta.window" in by_id
          and all(w in by_id for w in witness_ids))
    _finish("bound formulas: exact window delta 3..10, k_delta inequality "
            "delta 2..10^4, vs<ivs witnesses with chi=delta-1", t0, 300, ok,
            detail=f"claims={len(results)} bad={bad}")


def test_vs_equals_ivs_when_chi_at_least_delta():
    t0 = time.perf_counter()
    results = run_suite("akbari")
    bad = _bad(results)
    tested = results[0].computed.get("tested") if results[0].computed else None
    ok = not bad and tested == 1000
    _finish("random graphs n<=9 with chi>=delta: vs_chi=ivs_chi on 1000 "
            "filtered instances", t0, 600, ok,
            detail=f"bad={bad} tested={tested}")


def test_ivs_omega_exists_and_matches_vs():
    t0 = time.perf_counter()
    results = run_suite("king")
    bad = _bad(results)
    tested = results[0].computed.get("tested") if results[0].computed else None
    ok = not bad and tested == 300
    _finish("random graphs n<=10 with omega>(2/3)(delta+1): ivs_omega exists "
            "and equals vs_omega on 300 filtered instances", t0, 600, ok,
            detail=f"bad={bad} tested={tested}")


def test_solvers_match_naive_oracles():
    t0 = time.perf_counter()
    graphs = graph_corpus(seed=101, count=500, max_n=8)
    for g in graphs:
        assert chromatic_number(g, Budget()) == naive_chromatic(g)
        assert clique_number(g, Budget()) == naive_clique_number(g)
        for parameter in ("chi", "omega"):
            rep = stability_report(g, parameter, Budget())
            assert rep.exhausted
            assert (rep.value, rep.witness) == naive_stability(g, parameter, False)
            assert (rep.independent_value, rep.independent_witness) == \
                naive_stability(g, parameter, True)
    _finish("pruned vs/ivs search and exact chi/omega agree with the naive "
            "all-subsets oracles on 500 random graphs n<=8", t0, 600, True,
            detail=f"graphs={len(graphs)}")


def test_criticality_transversals_pipeline():
    t0 = time.perf_counter()
    # part 1: the peeled subgraph satisfies the criticality definition,
    # re-checked through graph surgery and the exact solver (peeling needs
    # at least one edge, so edgeless draws are redrawn)
    rng = random.Random(102)
    graphs = []
    while len(graphs) < 200:
        g = random_graph(rng, 12, min_n=2)
        if g.m:
            graphs.append(g)
    checked = 0
    for g in graphs:
        chi = chromatic_number(g, Budget())
        mask = find_critical_subgraph(g, Budget())
        outside = g.full_mask() & ~mask
        h, _ = delete_vertices(g, outside)
        assert chromatic_number(h, Budget()) == chi
        for v in vset_list(mask):
            hv, _ = delete_vertices(g, outside | (1 << v))
            assert chromatic_number(hv, Budget()) == chi - 1
        checked += 1

    # part 2: independent transversals always exist when parts have size
    # 2*maxdeg (here parts of 4 with degree capped at 2)
    rng = random.Random(103)
    transversals = 0
    for _ in range(500):
        r = rng.randint(1, 5)
        n = 4 * r
        parts = [sum(1 << (4 * i + j) for j in range(4)) for i in range(r)]
        deg = [0] * n
        edges = set()
        for u in range(n):
            while deg[u] < 2 and rng.random() < 0.7:
                w = rng.randrange(n)
                if w // 4 == u // 4 or deg[w] >= 2 or (min(u, w), max(u, w)) in edges:
                    break
                edges.add((min(u, w), max(u, w)))
                deg[u] += 1
                deg[w] += 1
        g = Graph.from_edges(n, sorted(edges))
        t = independent_transversal(g, parts)
        assert t is not None
        assert is_independent(g, t)
        assert all(vset_size(t & p) == 1 for p in parts)
        transversals += 1

    # part 3: every certificate the pipeline emits agrees with the direct
    # stability search
    certified = 0
    for g in graph_corpus(seed=104, count=60, max_n=9, min_n=2):
        cert = vs_ivs_pipeline(g, Budget())["certificate"]
        if cert is None:
            continue
        rep = stability_report(g, "chi", Budget())
        assert rep.value == cert["claims"]["vs_chi"] == cert["r"]
        assert rep.independent_value == cert["claims"]["ivs_chi"]
        certified += 1
    ok = checked == 200 and transversals == 500 and certified > 0
    _finish("criticality definition on random corpus, 500 guaranteed "
            "independent transversals, pipeline certificates agree with "
            "direct search", t0, 600, ok,
            detail=f"criticality={checked} transversals={transversals} "
                   f"certificates={certified}")
