"""Exact chromatic number, clique number, k-colorability, and maximum-clique
enumeration on desk-scale graphs.

All searches are deterministic: branch vertices are chosen by maximum
saturation with ties broken by smallest index, candidate colors ascend, and
maximum cliques are enumerated in canonical (sorted vertex list) order.
A shared node budget separates "proven" from "gave up": exceeding it raises
BudgetExceededError, never a wrong answer.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .graph import Coloring, active_words, vset_list

DEFAULT_NODE_BUDGET = 10**8
SEARCH_VERTEX_LIMIT = 1024
MAX_KERNEL_COLORS = 63


class BudgetExceededError(RuntimeError):
    """The node budget was exhausted before the search could decide."""

    def __init__(self, spent):
        super().__init__(f"search node budget exhausted after {spent} nodes")
        self.spent = spent


class Budget:
    """Node budget shared across the solver calls of one operation."""

    def __init__(self, limit=DEFAULT_NODE_BUDGET):
        self.limit = limit
        self.spent = 0

    def remaining(self):
        return max(0, self.limit - self.spent)

    def charge(self, nodes):
        self.spent += int(nodes)
        if self.spent > self.limit:
            raise BudgetExceededError(self.spent)


def greedy_clique_partition(g):
    """First-fit clique partition (vertices in index order); returns
    (parts, part_start, part_vert) with the CSR arrays the coloring kernel
    expects. Parts restricted to any induced subgraph remain cliques."""
    parts = []
    for v in range(g.n):
        placed = False
        for i, p in enumerate(parts):
            if g.adj[v] & p == p:
                parts[i] = p | (1 << v)
                placed = True
                break
        if not placed:
            parts.append(1 << v)
    part_vert = []
    part_start = [0]
    for p in parts:
        part_vert.extend(vset_list(p))
        part_start.append(len(part_vert))
    return (
        parts,
        np.asarray(part_start, dtype=np.int64),
        np.asarray(part_vert, dtype=np.int64) if part_vert else np.zeros(0, dtype=np.int64),
    )


def _check_size(g):
    if g.n > SEARCH_VERTEX_LIMIT:
        raise ValueError(f"exact search limited to {SEARCH_VERTEX_LIMIT} vertices")


def kcolor_masked(g, active_mask, k, budget, parts_csr=None):
    """k-colorability of the subgraph induced by active_mask.

    Returns a 0-based color list indexed by original vertex ids (entries for
    inactive vertices are meaningless) or None. Raises BudgetExceededError on
    budget exhaustion and ValueError for k above the kernel's color width.
    """
    n_act = active_mask.bit_count()
    if k <= 0:
        return [] if n_act == 0 else None
    if n_act == 0:
        return []
    if k >= n_act:
        colors = [0] * g.n
        for i, v in enumerate(vset_list(active_mask)):
            colors[v] = i
        return colors
    if k > MAX_KERNEL_COLORS:
        raise ValueError(f"coloring kernel supports at most {MAX_KERNEL_COLORS} colors")
    _check_size(g)
    if parts_csr is None:
        _, part_start, part_vert = greedy_clique_partition(g)
    else:
        part_start, part_vert = parts_csr
    out = np.zeros(g.n, dtype=np.int64)
    status, nodes = kernels.kcolor_search(
        g.words(), active_words(g.n, active_mask), k,
        part_start, part_vert, budget.remaining(), out,
    )
    budget.charge(nodes)
    if status == -1:
        raise BudgetExceededError(budget.spent)
    if status == 0:
        return None
    return [int(c) for c in out]


def is_k_colorable(g, k, budget=None):
    """A proper k-coloring of g if one exists, else None; deterministic."""
    if k < 0:
        raise ValueError("color count must be non-negative")
    budget = budget or Budget()
    colors = kcolor_masked(g, g.full_mask(), k, budget)
    if colors is None:
        return None
    return Coloring(tuple(c + 1 for c in colors[: g.n]), k)


def _greedy_coloring_bound(g):
    """Greedy DSATUR upper bound (no backtracking); returns color count."""
    colors = [-1] * g.n
    used = 0
    for _ in range(g.n):
        best, best_sat, best_deg = -1, -1, -1
        for v in range(g.n):
            if colors[v] >= 0:
                continue
            seen = set()
            m = g.adj[v]
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if colors[u] >= 0:
                    seen.add(colors[u])
            sat = len(seen)
            deg = g.degree(v)
            if sat > best_sat or (sat == best_sat and deg > best_deg):
                best, best_sat, best_deg = v, sat, deg
        forbidden = set()
        m = g.adj[best]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if colors[u] >= 0:
                forbidden.add(colors[u])
        c = 0
        while c in forbidden:
            c += 1
        colors[best] = c
        used = max(used, c + 1)
    return used


def _greedy_clique(g):
    """Greedy clique by descending degree; returns a vertex mask."""
    if g.n == 0:
        return 0
    cur = max(range(g.n), key=lambda v: (g.degree(v), -v))
    clique = 1 << cur
    cand = g.adj[cur]
    while cand:
        best, best_deg = -1, -1
        m = cand
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if g.degree(u) > best_deg:
                best, best_deg = u, g.degree(u)
        clique |= 1 << best
        cand &= g.adj[best]
    return clique


def chromatic_number(g, budget=None):
    """Exact chi(g); 0 for the empty graph, 1 for edgeless nonempty graphs."""
    return _chromatic_with_witness(g, budget)[0]


def _chromatic_with_witness(g, budget=None):
    budget = budget or Budget()
    if g.n == 0:
        return 0, Coloring((), 0)
    if all(row == 0 for row in g.adj):
        return 1, Coloring((1,) * g.n, 1)
    lb = _greedy_clique(g).bit_count()
    ub = _greedy_coloring_bound(g)
    parts_csr = None
    witness = None
    if lb < ub:
        _, part_start, part_vert = greedy_clique_partition(g)
        parts_csr = (part_start, part_vert)
    while lb < ub:
        mid = (lb + ub) // 2
        colors = kcolor_masked(g, g.full_mask(), mid, budget, parts_csr)
        if colors is None:
            lb = mid + 1
        else:
            ub = mid
            witness = colors
    if witness is None:
        colors = kcolor_masked(g, g.full_mask(), ub, budget, parts_csr)
        witness = colors
    return ub, Coloring(tuple(c + 1 for c in witness[: g.n]), ub)


def max_clique(g, budget=None):
    """(omega, witness_mask) for g; exact branch and bound."""
    budget = budget or Budget()
    if g.n == 0:
        return 0, 0
    _check_size(g)
    out = np.zeros(g.n + 1, dtype=np.int64)
    status, omega, nodes = kernels.max_clique_search(
        g.words(), active_words(g.n, g.full_mask()), budget.remaining(), out
    )
    budget.charge(nodes)
    if status == -1:
        raise BudgetExceededError(budget.spent)
    mask = 0
    for i in range(int(omega)):
        mask |= 1 << int(out[i])
    return int(omega), mask


def clique_number(g, budget=None):
    """Exact omega(g)."""
    return max_clique(g, budget)[0]


def enumerate_maximum_cliques(g, budget=None):
    """All cliques of size exactly omega(g), canonically sorted (by sorted
    vertex list, lexicographic). Bron-Kerbosch with pivot, pruned to maximum
    size."""
    budget = budget or Budget()
    if g.n == 0:
        return []
    omega, _ = max_clique(g, budget)
    found = []
    full = g.full_mask()

    def bk(r_size, r_mask, p, x):
        budget.charge(1)
        if p == 0 and x == 0:
            if r_size == omega:
                found.append(r_mask)
            return
        if r_size + p.bit_count() < omega:
            return
        # pivot with most neighbors in P
        pivot, best = -1, -1
        m = p | x
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            cnt = (p & g.adj[u]).bit_count()
            if cnt > best:
                pivot, best = u, cnt
        ext = p & ~g.adj[pivot]
        while ext:
            v = (ext & -ext).bit_length() - 1
            ext &= ext - 1
            vb = 1 << v
            bk(r_size + 1, r_mask | vb, p & g.adj[v], x & g.adj[v])
            p &= ~vb
            x |= vb

    bk(0, 0, full, 0)
    found.sort(key=vset_list)
    return found


@dataclass(frozen=True)
class InvariantSummary:
    n: int
    m: int
    delta: int
    chi: int
    omega: int
    witness_coloring: Coloring
    witness_clique: int  # vertex mask


def summarize(g, budget=None):
    budget = budget or Budget()
    omega, wclique = max_clique(g, budget)
    chi, wcoloring = _chromatic_with_witness(g, budget)
    delta = max((row.bit_count() for row in g.adj), default=0)
    return InvariantSummary(
        n=g.n, m=g.m, delta=delta, chi=chi, omega=omega,
        witness_coloring=wcoloring, witness_clique=wclique,
    )
