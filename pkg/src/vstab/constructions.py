"""Deterministic generators for the extremal graph families, each paired
with the invariant values the family is claimed to have, plus a checker
that recomputes every claim with the exact solvers.

Vertex layouts are fixed (0-based, documented per generator) so that
serialized instances and solver witnesses are reproducible byte for byte.
"""

import math
from dataclasses import dataclass, field

from .graph import Graph, blow_up_cycle5, max_degree
from .invariants import Budget, BudgetExceededError, chromatic_number, clique_number
from .stability import independent_vertex_stability, vertex_stability


@dataclass(frozen=True)
class ConstructionMeta:
    """family: one of prop31, prop31_variant, constr1, c5blowup; params
    holds the generator arguments and derived integers; expected maps
    invariant names (chi, omega, delta, vs_chi, ivs_chi, ivs_chi_lower,
    vs_omega, ivs_omega) to claimed values. ivs_omega may be None, claiming
    no independent reducing set exists."""

    family: str
    params: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)


def _equal_blocks(total, count):
    """Split range(total) into `count` contiguous blocks with sizes as equal
    as possible, larger blocks first; returns a list of vertex lists."""
    base, rem = divmod(total, count)
    blocks = []
    at = 0
    for i in range(count):
        size = base + (1 if i < rem else 0)
        blocks.append(list(range(at, at + size)))
        at += size
    return blocks


def construct_prop31(chi, copies=None):
    """Graph with omega = chi(G) = chi, max degree chi + max(1, ceil(chi/a)-2)
    for a = ceil(sqrt(chi)), vs_chi = 2, and ivs_chi >= 3; with
    copies = ceil(chi/a) - 1 attached gadgets the independent stability
    rises to ivs_chi = ceil(chi/a).

    Layout: vertices 0..chi-1 form the central clique, partitioned into a
    contiguous blocks V_1..V_a (larger first). Then per gadget copy:
    chi-2 clique vertices followed by a independent vertices; independent
    vertex j of a copy is joined to that copy's clique and to V_j.
    """
    if chi < 4:
        raise ValueError("construction requires chi >= 4")
    a = math.isqrt(chi)
    if a * a < chi:
        a += 1
    cap = -(-chi // a)  # ceil(chi / a)
    if copies is None:
        copies = 2
    if copies != 2 and not 2 <= copies <= cap - 1:
        raise ValueError(f"copies must be 2 or in [2, {cap - 1}]")
    parts = _equal_blocks(chi, a)
    edges = [(u, v) for u in range(chi) for v in range(u + 1, chi)]
    at = chi
    for _ in range(copies):
        clique = list(range(at, at + chi - 2))
        indep = list(range(at + chi - 2, at + chi - 2 + a))
        at = indep[-1] + 1
        edges.extend((u, v) for i, u in enumerate(clique) for v in clique[i + 1:])
        for j, w in enumerate(indep):
            edges.extend((u, w) for u in clique)
            edges.extend((u, w) for u in parts[j])
    g = Graph.from_edges(at, edges)
    expected = {
        "omega": chi,
        "chi": chi,
        "delta": chi + max(1, cap - 2),
        "vs_chi": 2,
        "ivs_chi_lower": 3,
    }
    if copies == cap - 1:
        expected["ivs_chi"] = cap
    family = "prop31" if copies == 2 else "prop31_variant"
    meta = ConstructionMeta(family, {"chi": chi, "copies": copies, "a": a}, expected)
    return g, meta


def construct_constr1(delta):
    """Graph with omega = chi = k for k = ceil(2(delta+1)/3) - 1, max degree
    delta, vs_chi = vs_omega = k+1 and ivs_chi = ivs_omega = k+2.

    Layout: vertices 0..k-1 form the central clique. Each of the k copies
    contributes a shared vertices then k-a left vertices then k-a right
    vertices (a = 2k - delta); shared+left and shared+right are both
    k-cliques, and central vertex i is joined to copy i's shared block.
    delta=2 degenerates (a=0 gives k-cliques with no shared block and the
    stability claims fail), so it is rejected.
    """
    if delta < 3:
        raise ValueError("construction requires delta >= 3")
    k = -(-2 * (delta + 1) // 3) - 1
    a = 2 * k - delta
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    at = k
    for i in range(k):
        shared = list(range(at, at + a))
        left = list(range(at + a, at + k))
        right = list(range(at + k, at + 2 * k - a))
        at = at + 2 * k - a
        for group in (shared + left, shared + right):
            edges.extend(
                (u, v) for gi, u in enumerate(group) for v in group[gi + 1:]
            )
        edges.extend((i, v) for v in shared)
    # shared-block pairs appear in both groups above; from_edges tolerates that
    g = Graph.from_edges(at, sorted(set(edges)))
    expected = {
        "omega": k,
        "chi": k,
        "delta": delta,
        "vs_chi": k + 1,
        "vs_omega": k + 1,
        "ivs_chi": k + 2,
        "ivs_omega": k + 2,
    }
    meta = ConstructionMeta("constr1", {"delta": delta, "k": k, "a": a}, expected)
    return g, meta


def construct_c5blowup(k):
    """Blow-up of the 5-cycle by k: omega = 2k, max degree 3k-1,
    chi = ceil(5k/2), vs_omega = 3, and no independent set reduces omega.
    vs_chi = ivs_chi is 1 for odd k and 2 for even k."""
    g = blow_up_cycle5(k)
    expected = {
        "omega": 2 * k,
        "chi": -(-5 * k // 2),
        "delta": 3 * k - 1,
        "vs_omega": 3,
        "ivs_omega": None,
        "vs_chi": 1 if k % 2 else 2,
        "ivs_chi": 1 if k % 2 else 2,
    }
    meta = ConstructionMeta("c5blowup", {"k": k}, expected)
    return g, meta


def _compute_claim(g, name, budget):
    if name == "chi":
        return chromatic_number(g, budget)
    if name == "omega":
        return clique_number(g, budget)
    if name == "delta":
        return max_degree(g)
    param = "chi" if name.endswith("chi") or name == "ivs_chi_lower" else "omega"
    if name.startswith("vs"):
        rep = vertex_stability(g, param, budget)
        if not rep.exhausted:
            raise BudgetExceededError(budget.spent)
        return rep.value
    rep = independent_vertex_stability(g, param, budget)
    if not rep.exhausted:
        raise BudgetExceededError(budget.spent)
    return rep.independent_value


def expected_invariants_check(g, meta, budget=None):
    """Recompute every claim in meta.expected with the exact solvers.

    Returns {"family", "claims": [{name, expected, computed, status}],
    "all_pass": bool}; status is pass/fail, or inconclusive when the node
    budget ran out (inconclusive never counts as a failure, but blocks
    all_pass). Lower-bound claims (ivs_chi_lower) pass when computed >= value.
    """
    budget = budget or Budget()
    claims = []
    for name in sorted(meta.expected):
        want = meta.expected[name]
        try:
            got = _compute_claim(g, name.replace("_lower", ""), budget)
        except BudgetExceededError:
            claims.append(
                {"name": name, "expected": want, "computed": None, "status": "inconclusive"}
            )
            continue
        if name.endswith("_lower"):
            ok = got is not None and got >= want
        else:
            ok = got == want
        claims.append(
            {"name": name, "expected": want, "computed": got, "status": "pass" if ok else "fail"}
        )
    return {
        "family": meta.family,
        "claims": claims,
        "all_pass": all(c["status"] == "pass" for c in claims),
    }
