"""Verification suites: every quantitative claim the construction families
and bound formulas make, recomputed from scratch with the exact solvers and
reported as a table of pass/fail/inconclusive results.

Claim identifiers are frozen strings; a suite's result list is sorted by
claim_id so output order is stable regardless of execution order. Nothing
here caches expected values beyond the construction metadata formulas.
"""

import random
import time
from dataclasses import dataclass

from .constructions import construct_c5blowup, construct_constr1, construct_prop31
from .graph import Graph, max_degree
from .invariants import Budget, BudgetExceededError, chromatic_number, clique_number
from .sat import (
    gen_unsat_family,
    independence_graph,
    is_satisfiable,
    stability_certificates,
    validate_plit_qsat,
)
from .stability import f_bounds, independent_vertex_stability, k_delta, vertex_stability

SUITE_NAMES = ("prop31", "constr1", "c5blowup", "sat", "fbounds", "akbari", "king")


@dataclass(frozen=True)
class VerificationResult:
    claim_id: str
    status: str  # pass / fail / inconclusive
    computed: object
    expected: object
    runtime_ms: int


def _claim(claim_id, expected, func):
    """Run one check; func returns (computed, ok). Budget exhaustion maps to
    inconclusive, never to failure."""
    t0 = time.perf_counter()
    try:
        computed, ok = func()
        status = "pass" if ok else "fail"
    except BudgetExceededError:
        computed, status = None, "inconclusive"
    ms = int((time.perf_counter() - t0) * 1000)
    return VerificationResult(claim_id, status, computed, expected, ms)


def _eq(value_func, expected):
    def run():
        got = value_func()
        return got, got == expected

    return run


def _invariant_claims(prefix, g, expected, budget):
    """Claims for the plain invariants chi/omega/delta given as expected."""
    out = []
    if "omega" in expected:
        out.append(
            _claim(f"{prefix}.omega", expected["omega"],
                   _eq(lambda: clique_number(g, budget), expected["omega"]))
        )
    if "chi" in expected:
        out.append(
            _claim(f"{prefix}.chi", expected["chi"],
                   _eq(lambda: chromatic_number(g, budget), expected["chi"]))
        )
    if "delta" in expected:
        out.append(
            _claim(f"{prefix}.delta", expected["delta"],
                   _eq(lambda: max_degree(g), expected["delta"]))
        )
    return out


def _vs(g, parameter, budget):
    rep = vertex_stability(g, parameter, budget)
    if not rep.exhausted:
        raise BudgetExceededError(budget.spent)
    return rep.value


def _ivs(g, parameter, budget):
    rep = independent_vertex_stability(g, parameter, budget)
    if not rep.exhausted:
        raise BudgetExceededError(budget.spent)
    return rep.independent_value


def suite_prop31(chi_range=(4, 8), variant_chis=(9, 16), budget_limit=None):
    results = []
    for chi in range(chi_range[0], chi_range[1] + 1):
        budget = Budget(budget_limit) if budget_limit else Budget()
        g, meta = construct_prop31(chi)
        prefix = f"prop31.chi{chi}"
        results.extend(_invariant_claims(prefix, g, meta.expected, budget))
        results.append(_claim(f"{prefix}.vs", 2, _eq(lambda: _vs(g, "chi", budget), 2)))
        results.append(
            _claim(f"{prefix}.ivs_lower", 3,
                   lambda: (lambda v: (v, v is not None and v >= 3))(_ivs(g, "chi", budget)))
        )
        if chi == 4:
            results.append(
                _claim(f"{prefix}.ivs", 3, _eq(lambda: _ivs(g, "chi", budget), 3))
            )
    for chi in variant_chis:
        budget = Budget(budget_limit) if budget_limit else Budget()
        g, meta = construct_prop31(chi, copies=meta_cap(chi) - 1)
        prefix = f"prop31.variant.chi{chi}"
        results.extend(_invariant_claims(prefix, g, meta.expected, budget))
        results.append(_claim(f"{prefix}.vs", 2, _eq(lambda: _vs(g, "chi", budget), 2)))
        cap = meta_cap(chi)
        results.append(_claim(f"{prefix}.ivs", cap, _eq(lambda: _ivs(g, "chi", budget), cap)))
    return sorted(results, key=lambda r: r.claim_id)


def meta_cap(chi):
    """ceil(chi / ceil(sqrt(chi))), the part-size cap of the first family."""
    a = 1
    while a * a < chi:
        a += 1
    return -(-chi // a)


def suite_constr1(delta_range=(3, 6)):
    results = []
    for delta in range(delta_range[0], delta_range[1] + 1):
        budget = Budget()
        g, meta = construct_constr1(delta)
        k = meta.params["k"]
        prefix = f"constr1.delta{delta}"
        results.extend(_invariant_claims(prefix, g, meta.expected, budget))
        results.append(
            _claim(f"{prefix}.vs_chi", k + 1, _eq(lambda: _vs(g, "chi", budget), k + 1))
        )
        results.append(
            _claim(f"{prefix}.vs_omega", k + 1, _eq(lambda: _vs(g, "omega", budget), k + 1))
        )
        results.append(
            _claim(f"{prefix}.ivs_chi", k + 2, _eq(lambda: _ivs(g, "chi", budget), k + 2))
        )
        results.append(
            _claim(f"{prefix}.ivs_omega", k + 2, _eq(lambda: _ivs(g, "omega", budget), k + 2))
        )
    return sorted(results, key=lambda r: r.claim_id)


def suite_c5blowup(k_range=(1, 3)):
    results = []
    for k in range(k_range[0], k_range[1] + 1):
        budget = Budget()
        g, meta = construct_c5blowup(k)
        prefix = f"c5blowup.k{k}"
        results.extend(_invariant_claims(prefix, g, meta.expected, budget))
        exp = meta.expected
        results.append(
            _claim(f"{prefix}.vs_omega", exp["vs_omega"],
                   _eq(lambda: _vs(g, "omega", budget), exp["vs_omega"]))
        )
        results.append(
            _claim(f"{prefix}.ivs_omega", None,
                   _eq(lambda: _ivs(g, "omega", budget), None))
        )
        results.append(
            _claim(f"{prefix}.vs_chi", exp["vs_chi"],
                   _eq(lambda: _vs(g, "chi", budget), exp["vs_chi"]))
        )
        results.append(
            _claim(f"{prefix}.ivs_chi", exp["ivs_chi"],
                   _eq(lambda: _ivs(g, "chi", budget), exp["ivs_chi"]))
        )
    return sorted(results, key=lambda r: r.claim_id)


def suite_sat(m_range=(2, 4)):
    results = []
    for m in range(m_range[0], m_range[1] + 1):
        budget = Budget()
        inst = gen_unsat_family(m)
        prefix = f"sat.m{m}"
        results.append(
            _claim(f"{prefix}.valid", True,
                   _eq(lambda: bool(validate_plit_qsat(inst, m, 2 * m - 1)), True))
        )
        results.append(
            _claim(f"{prefix}.unsat", True, _eq(lambda: is_satisfiable(inst) is None, True))
        )
        g_plain, _ = independence_graph(inst)
        results.append(
            _claim(f"{prefix}.chi_gi", 2 * m,
                   _eq(lambda: chromatic_number(g_plain, budget), 2 * m))
        )
        if m == 2:
            from .sat import augmented_independence_graph

            g_aug, _ = augmented_independence_graph(inst)
            c = len(inst.clauses)
            results.append(
                _claim(f"{prefix}.vs_chi", c, _eq(lambda: _vs(g_aug, "chi", budget), c))
            )
            results.append(
                _claim(f"{prefix}.vs_omega", c, _eq(lambda: _vs(g_aug, "omega", budget), c))
            )
            results.append(
                _claim(f"{prefix}.ivs_omega_min", c + 1,
                       lambda: (lambda v: (v, v is None or v >= c + 1))(_ivs(g_aug, "omega", budget)))
            )
        if m == 3:
            def cert_check():
                cert = stability_certificates(inst, 3, budget)
                good = cert["vs_chi"] == cert["vs_omega"] == len(inst.clauses)
                return {"vs_chi": cert["vs_chi"], "vs_omega": cert["vs_omega"]}, good

            results.append(_claim(f"{prefix}.cert", len(inst.clauses), cert_check))
        if m == 4:
            def counts():
                got = {
                    "variables": inst.variable_count,
                    "clauses": len(inst.clauses),
                    "width": len(inst.clauses[0].literals),
                }
                return got, got == {"variables": 7, "clauses": 8, "width": 7}

            results.append(
                _claim(f"{prefix}.counts", {"variables": 7, "clauses": 8, "width": 7}, counts)
            )
    return sorted(results, key=lambda r: r.claim_id)


def _thm12_witness(delta):
    if delta in (3, 4):
        return construct_constr1(delta)
    return construct_prop31(delta - 1)


def suite_fbounds(delta_range=(3, 10), kd_limit=10**4):
    results = []
    for d in range(delta_range[0], delta_range[1] + 1):
        def exact(d=d):
            fb = f_bounds(d)
            got = {"lower": fb.lower, "upper": fb.upper}
            return got, fb.lower == d and fb.upper == d and not fb.upper_is_asymptotic

        results.append(_claim(f"fbounds.delta{d}.exact", {"lower": d, "upper": d}, exact))

    def window():
        for d in range(2, kd_limit + 1):
            k = k_delta(d)
            if not ((k + 1) * (k + 2) <= d < (k + 3) * (k + 2)):
                return {"delta": d, "k_delta": k}, False
            if d >= 3:
                fb = f_bounds(d)
                if d <= 10:
                    ok = fb.lower == fb.upper == d
                else:
                    want = d + 2 - k if d <= k * k + 4 * k + 1 else d + 1 - k
                    ok = fb.lower == want and fb.upper == d and fb.upper_asymptotic == d + 2 - k
                if not ok:
                    return {"delta": d, "bounds": (fb.lower, fb.upper)}, False
        return {"checked": kd_limit - 1}, True

    results.append(_claim("fbounds.kdelta.window", "defining inequality", window))

    for d in range(max(delta_range[0], 3), min(delta_range[1], 10) + 1):
        def witness(d=d):
            budget = Budget()
            g, _ = _thm12_witness(d)
            got = {
                "delta": max_degree(g),
                "chi": chromatic_number(g, budget),
                "vs": _vs(g, "chi", budget),
                "ivs": _ivs(g, "chi", budget),
            }
            ok = (
                got["delta"] == d
                and got["chi"] == d - 1
                and got["ivs"] is not None
                and got["vs"] < got["ivs"]
            )
            return got, ok

        results.append(
            _claim(f"thm12.part1.delta{d}", {"delta": d, "chi": d - 1, "vs<ivs": True}, witness)
        )
    return sorted(results, key=lambda r: r.claim_id)


def _random_graph(rng, max_n):
    n = rng.randint(1, max_n)
    p = rng.random()
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def suite_akbari(count=1000, max_n=9, seed=1):
    """chi >= max degree forces vs_chi = ivs_chi (property evidence for the
    f(delta) <= delta half of the exact small-degree regime)."""
    def run():
        rng = random.Random(seed)
        tested = 0
        attempts = 0
        while tested < count:
            attempts += 1
            g = _random_graph(rng, max_n)
            budget = Budget()
            if chromatic_number(g, budget) < max_degree(g):
                continue
            vs = _vs(g, "chi", budget)
            ivs = _ivs(g, "chi", budget)
            if vs != ivs:
                return {"tested": tested, "counterexample_order": g.n}, False
            tested += 1
        return {"tested": tested, "attempts": attempts}, True

    return [_claim("akbari.vs_eq_ivs", {"tested": count, "violations": 0}, run)]


def suite_king(count=300, max_n=10, seed=2):
    """omega > (2/3)(max degree + 1) forces an independent set meeting every
    maximum clique, with ivs_omega = vs_omega."""
    def run():
        rng = random.Random(seed)
        tested = 0
        attempts = 0
        while tested < count:
            attempts += 1
            g = _random_graph(rng, max_n)
            budget = Budget()
            if 3 * clique_number(g, budget) <= 2 * (max_degree(g) + 1):
                continue
            vs = _vs(g, "omega", budget)
            ivs = _ivs(g, "omega", budget)
            if ivs is None or vs != ivs:
                return {"tested": tested, "counterexample_order": g.n}, False
            tested += 1
        return {"tested": tested, "attempts": attempts}, True

    return [_claim("king.ivs_exists_eq_vs", {"tested": count, "violations": 0}, run)]


def run_suite(name, **kwargs):
    if name == "prop31":
        return suite_prop31(**kwargs)
    if name == "constr1":
        return suite_constr1(**kwargs)
    if name == "c5blowup":
        return suite_c5blowup(**kwargs)
    if name == "sat":
        return suite_sat(**kwargs)
    if name == "fbounds":
        return suite_fbounds(**kwargs)
    if name == "akbari":
        return suite_akbari(**kwargs)
    if name == "king":
        return suite_king(**kwargs)
    if name == "all":
        out = []
        for s in SUITE_NAMES:
            out.extend(run_suite(s))
        return sorted(out, key=lambda r: r.claim_id)
    raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES + ('all',)}")
