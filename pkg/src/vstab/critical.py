"""Chromatic-critical subgraph extraction and enumeration, connected unions
of critical subgraphs with the degree-based size bound, exact independent
transversal search, and the mechanical reduction pipeline that turns those
pieces into a vs = ivs certificate when the structure cooperates.

A subgraph H is critical here when chi(H) equals chi(g) and deleting any
single vertex of H lowers it. Deleting one vertex (or one independent set)
can lower chi by at most one, so those checks are single k-colorability
calls, never full recomputations.
"""

from dataclasses import dataclass
from itertools import combinations

from .graph import is_independent, vset_list, vset_size
from .invariants import Budget, _chromatic_with_witness, chromatic_number, kcolor_masked
from .stability import k_delta

ENUM_VERTEX_LIMIT = 16
ENUM_ORDER_LIMIT = 12


def find_critical_subgraph(g, budget=None):
    """Greedy peel: walk vertices in ascending order and delete each one
    whose removal keeps chi unchanged. Deletability is monotone under
    deletion, so one pass yields a critical induced subgraph (as a vertex
    mask in original ids)."""
    budget = budget or Budget()
    chi = chromatic_number(g, budget)
    if chi < 2:
        raise ValueError("critical extraction requires chi >= 2")
    active = g.full_mask()
    for v in range(g.n):
        test = active & ~(1 << v)
        if kcolor_masked(g, test, chi - 1, budget) is None:
            active = test
    return active


def _is_critical(g, mask, chi, budget):
    """mask induces a chi-critical subgraph: not (chi-1)-colorable itself,
    every one-vertex deletion is."""
    if kcolor_masked(g, mask, chi - 1, budget) is not None:
        return False
    for v in vset_list(mask):
        if kcolor_masked(g, mask & ~(1 << v), chi - 1, budget) is None:
            return False
    return True


def enumerate_critical_subgraphs(g, max_order, budget=None):
    """All vertex sets of order <= max_order inducing chi(g)-critical
    subgraphs, ascending by (order, vertex tuple). Subset scan, so the graph
    must be small (n <= 16) unless max_order <= 12."""
    if g.n > ENUM_VERTEX_LIMIT and max_order > ENUM_ORDER_LIMIT:
        raise ValueError(
            f"full scan needs n <= {ENUM_VERTEX_LIMIT} or max_order <= {ENUM_ORDER_LIMIT}"
        )
    budget = budget or Budget()
    chi = chromatic_number(g, budget)
    found = []
    for size in range(max(chi, 1), min(max_order, g.n) + 1):
        for subset in combinations(range(g.n), size):
            mask = 0
            for v in subset:
                mask |= 1 << v
            # critical graphs have minimum degree >= chi-1
            if any(vset_size(g.adj[v] & mask) < chi - 1 for v in subset):
                continue
            if _is_critical(g, mask, chi, budget):
                found.append(mask)
    return found


@dataclass(frozen=True)
class CriticalityReport:
    """chi with the critical subgraphs found, the connected components of
    their union (union of vertex sets and of induced edge sets; an edge
    belonging to no critical subgraph does not connect), k_delta of the
    graph's max degree (0 when the degree is below 2), and the informational
    per-component check |C| < delta + 1 + k_delta."""

    chi: int
    critical_subgraphs: list
    union_components: list
    k_delta: int
    bound_satisfied: list


def critical_union_report(g, max_order=None, budget=None):
    budget = budget or Budget()
    delta = max((vset_size(g.adj[v]) for v in range(g.n)), default=0)
    if max_order is None:
        # critical subgraphs relevant to the size bound have order <= delta+1
        max_order = min(g.n, delta + 1)
    subs = enumerate_critical_subgraphs(g, max_order, budget)
    union_adj = {}
    for mask in subs:
        for u in vset_list(mask):
            union_adj.setdefault(u, 0)
            union_adj[u] |= g.adj[u] & mask & ~(1 << u)
    components = []
    seen = 0
    for u in sorted(union_adj):
        if (1 << u) & seen:
            continue
        comp = 0
        stack = [u]
        while stack:
            v = stack.pop()
            if (1 << v) & comp:
                continue
            comp |= 1 << v
            stack.extend(w for w in vset_list(union_adj[v]) if not (1 << w) & comp)
        components.append(comp)
        seen |= comp
    kd = k_delta(delta) if delta >= 2 else 0
    chi = chromatic_number(g, budget)
    bound = [vset_size(c) < delta + 1 + kd for c in components]
    return CriticalityReport(chi, subs, components, kd, bound)


def independent_transversal(g, parts):
    """An independent set with exactly one vertex per part (parts pairwise
    disjoint vertex masks), or None. Exact backtracking choosing the most
    constrained part first (fewest remaining candidates, ties by position),
    candidates in ascending vertex order."""
    parts = list(parts)

    def rec(chosen, forbidden, remaining):
        if not remaining:
            return chosen
        sized = min(
            range(len(remaining)),
            key=lambda i: (vset_size(remaining[i] & ~forbidden), i),
        )
        cands = remaining[sized] & ~forbidden
        rest = remaining[:sized] + remaining[sized + 1:]
        for v in vset_list(cands):
            got = rec(chosen | (1 << v), forbidden | (1 << v) | g.adj[v], rest)
            if got is not None:
                return got
        return None

    return rec(0, 0, parts)


def vs_ivs_pipeline(g, budget=None):
    """Mechanical vs = ivs certificate search: components of the critical
    union, an optimal coloring, per-component sets of vertices whose color
    appears exactly once on their component, and an independent transversal
    of those sets. Any chi-reducing set must hit one critical subgraph in
    every component (they are vertex-disjoint), so vs >= r; a transversal
    that reduces chi shows ivs <= r, pinning vs = ivs = r.

    Returns {"certificate": dict or None, "trace": [str, ...]}; the trace
    records which step stopped the recipe when no certificate is produced.
    """
    budget = budget or Budget()
    trace = []
    chi, coloring = _chromatic_with_witness(g, budget)
    trace.append(f"chi={chi}")
    if chi < 2:
        trace.append("stop: chi < 2 leaves nothing to reduce")
        return {"certificate": None, "trace": trace}
    report = critical_union_report(g, budget=budget)
    r = len(report.union_components)
    trace.append(
        f"critical union: {len(report.critical_subgraphs)} subgraphs, {r} components"
    )
    if r == 0:
        trace.append("stop: no critical subgraphs within enumeration limits")
        return {"certificate": None, "trace": trace}
    singleton_sets = []
    for comp in report.union_components:
        counts = {}
        for v in vset_list(comp):
            counts[coloring.colors[v]] = counts.get(coloring.colors[v], 0) + 1
        s_mask = 0
        for v in vset_list(comp):
            if counts[coloring.colors[v]] == 1:
                s_mask |= 1 << v
        singleton_sets.append(s_mask)
    trace.append(f"singleton-color sets sizes: {[vset_size(s) for s in singleton_sets]}")
    if any(s == 0 for s in singleton_sets):
        trace.append("stop: a component has no singleton-colored vertex")
        return {"certificate": None, "trace": trace}
    transversal = independent_transversal(g, singleton_sets)
    if transversal is None:
        trace.append("stop: no independent transversal of the singleton sets")
        return {"certificate": None, "trace": trace}
    assert is_independent(g, transversal)
    if kcolor_masked(g, g.full_mask() & ~transversal, chi - 1, budget) is None:
        trace.append("stop: transversal does not lower chi")
        return {"certificate": None, "trace": trace}
    trace.append(f"certificate: vs=ivs={r}")
    certificate = {
        "r": r,
        "chi": chi,
        "chi_after": chi - 1,
        "components": [tuple(vset_list(c)) for c in report.union_components],
        "singleton_sets": [tuple(vset_list(s)) for s in singleton_sets],
        "transversal": tuple(vset_list(transversal)),
        "claims": {"vs_chi": r, "ivs_chi": r},
    }
    return {"certificate": certificate, "trace": trace}
