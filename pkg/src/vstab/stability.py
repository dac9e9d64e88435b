"""Exact vertex stability numbers vs/ivs for chi and omega, plus the f(Delta)
bound calculator.

Search contract: candidate deletion sets are scanned ascending by size and,
within a size, in lexicographic order of the sorted vertex tuple, so the
returned witness is the lexicographically least minimum one. Pruning never
skips a candidate that could win earlier in that order:

- omega drops exactly when every maximum clique is hit, so for the omega
  parameter (and for chi when chi = omega, since a surviving omega-clique
  keeps chi >= omega) candidates are restricted to hitting sets of the
  enumerated maximum cliques;
- a greedy packing of pairwise-disjoint maximum cliques lower-bounds the
  hitting-set size, so smaller sizes are skipped;
- for chi, one (chi-1)-colorability call per surviving candidate decides the
  drop on the deletion-masked graph (no graph rebuilds);
- removing the smallest color class of an optimal coloring always reduces
  chi, which bounds the chi searches and proves ivs_chi exists;
- an independent reducing set for omega exists iff some independent set hits
  all maximum cliques; minimal such sets have at most one vertex per clique,
  so scanning sizes up to the clique count decides existence exactly.
"""

from dataclasses import dataclass

from .graph import vset_list
from .invariants import (
    Budget,
    BudgetExceededError,
    _chromatic_with_witness,
    chromatic_number,
    enumerate_maximum_cliques,
    greedy_clique_partition,
    kcolor_masked,
    max_clique,
)


def k_delta(delta):
    """Largest k with (k+1)(k+2) <= delta; integer arithmetic only."""
    if delta < 2:
        raise ValueError("k_delta requires delta >= 2")
    k = 0
    while (k + 2) * (k + 3) <= delta:
        k += 1
    return k


@dataclass(frozen=True)
class FBounds:
    """Bounds on the threshold f(delta).

    upper is the unconditional bound (= delta); upper_asymptotic is the
    delta+2-k_delta bound valid only for sufficiently large delta, and
    upper_is_asymptotic records whether that tighter value rests on the
    asymptotic statement alone. For 3 <= delta <= 10 the value is exact.
    """

    delta: int
    k_delta: int
    lower: int
    upper: int
    upper_asymptotic: int
    upper_is_asymptotic: bool


def f_bounds(delta):
    if delta < 3:
        raise ValueError("f bounds require delta >= 3")
    kd = k_delta(delta)
    if delta <= 10:
        return FBounds(delta, kd, delta, delta, delta, False)
    # window: (k+1)(k+2) <= delta holds by definition of k_delta, so only
    # the upper end delta <= k^2+4k+1 needs checking
    if delta <= kd * kd + 4 * kd + 1:
        lower = delta + 2 - kd
    else:
        lower = delta + 1 - kd
    return FBounds(delta, kd, lower, delta, delta + 2 - kd, True)


@dataclass(frozen=True)
class StabilityReport:
    """vs / ivs values with canonical witnesses.

    exhausted=True means the search space was fully decided; a None value
    with exhausted=True is a proof of nonexistence (possible only for the
    independent omega search), while None with exhausted=False means the
    node budget ran out first.
    """

    parameter: str
    value: int = None
    witness: tuple = None
    independent_value: int = None
    independent_witness: tuple = None
    exhausted: bool = True


def _greedy_disjoint_count(cliques):
    taken = 0
    count = 0
    for c in cliques:
        if c & taken == 0:
            taken |= c
            count += 1
    return count


def _candidates(g, size, independent, cliques):
    """Generate candidate masks of `size` vertices in lex order; when cliques
    is nonempty every candidate hits all of them; when independent, every
    candidate is an independent set."""
    n = g.n

    def rec(start, depth, mask, forbidden, unhit):
        remaining = size - depth
        if remaining == 0:
            if not unhit:
                yield mask
            return
        if unhit:
            if _greedy_disjoint_count(unhit) > remaining:
                return
            avail = ((1 << n) - 1) >> start << start & ~forbidden
            for c in unhit:
                if c & avail == 0:
                    return
        for v in range(start, n - remaining + 1):
            vb = 1 << v
            if forbidden & vb:
                continue
            new_forbidden = forbidden | vb
            if independent:
                new_forbidden |= g.adj[v]
            yield from rec(
                v + 1, depth + 1, mask | vb, new_forbidden,
                [c for c in unhit if not c & vb],
            )

    yield from rec(0, 0, 0, 0, list(cliques))


def _stability_core(g, parameter, independent, budget):
    """Returns (value, witness_mask) or (None, None) when no (independent)
    reducing set exists; raises BudgetExceededError when the budget trips."""
    if parameter not in ("chi", "omega"):
        raise ValueError("parameter must be 'chi' or 'omega'")
    if g.n == 0:
        raise ValueError("nothing to reduce in the empty graph")
    omega_val, _ = max_clique(g, budget)
    if parameter == "chi":
        base, coloring = _chromatic_with_witness(g, budget)
        use_filter = omega_val == base
    else:
        base = omega_val
        coloring = None
        use_filter = True
    cliques = enumerate_maximum_cliques(g, budget) if use_filter else []
    lb = max(1, _greedy_disjoint_count(cliques)) if use_filter else 1

    if parameter == "chi":
        class_sizes = {}
        for v, c in enumerate(coloring.colors):
            class_sizes[c] = class_sizes.get(c, 0) + 1
        ub = min(class_sizes.values())
        parts_csr = greedy_clique_partition(g)[1:]
        full = g.full_mask()
        for s in range(lb, ub + 1):
            for mask in _candidates(g, s, independent, cliques):
                if kcolor_masked(g, full & ~mask, base - 1, budget, parts_csr) is not None:
                    return s, mask
        raise AssertionError("color-class bound guarantees a witness")

    # omega: hitting every maximum clique is the reduction itself
    smax = min(g.n, len(cliques))
    for s in range(lb, smax + 1):
        for mask in _candidates(g, s, independent, cliques):
            budget.charge(1)
            return s, mask
        budget.charge(1)
    return None, None


def vertex_stability(g, parameter, budget=None):
    """Minimum |S| with parameter(g minus S) < parameter(g), canonical
    witness; see StabilityReport for the budget semantics."""
    budget = budget or Budget()
    try:
        value, mask = _stability_core(g, parameter, False, budget)
    except BudgetExceededError:
        return StabilityReport(parameter, exhausted=False)
    return StabilityReport(parameter, value=value, witness=tuple(vset_list(mask)))


def independent_vertex_stability(g, parameter, budget=None):
    """Same minimum over independent S; proves nonexistence exactly for the
    omega parameter (None value with exhausted=True)."""
    budget = budget or Budget()
    try:
        value, mask = _stability_core(g, parameter, True, budget)
    except BudgetExceededError:
        return StabilityReport(parameter, exhausted=False)
    witness = tuple(vset_list(mask)) if mask is not None else None
    return StabilityReport(parameter, independent_value=value, independent_witness=witness)


def stability_report(g, parameter, budget=None):
    """Both searches on one shared budget, merged into a single report."""
    budget = budget or Budget()
    vs = vertex_stability(g, parameter, budget)
    ivs = independent_vertex_stability(g, parameter, budget)
    return StabilityReport(
        parameter,
        value=vs.value,
        witness=vs.witness,
        independent_value=ivs.independent_value,
        independent_witness=ivs.independent_witness,
        exhausted=vs.exhausted and ivs.exhausted,
    )


def reduce_by_color_class(g, budget=None):
    """Smallest color class of the canonical optimal coloring (ties by
    smallest color); an independent set whose removal decreases chi."""
    budget = budget or Budget()
    chi, coloring = _chromatic_with_witness(g, budget)
    if chi < 1:
        raise ValueError("chi(g) must be at least 1")
    classes = {}
    for v, c in enumerate(coloring.colors):
        classes.setdefault(c, 0)
        classes[c] |= 1 << v
    best = min(classes, key=lambda c: (classes[c].bit_count(), c))
    return classes[best]
