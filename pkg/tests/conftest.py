"""Shared corpora: seeded random graphs and CNF instances.

All generators take an explicit random.Random so every test run sees the
same inputs; sizes stay small enough for the naive oracles in oracles.py.
"""

import random

import pytest

from vstab import Graph
from vstab.sat import Clause, CnfInstance, Literal


def random_graph(rng, max_n, min_n=1):
    n = rng.randint(min_n, max_n)
    p = rng.random()
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def graph_corpus(seed, count, max_n, min_n=1):
    rng = random.Random(seed)
    return [random_graph(rng, max_n, min_n) for _ in range(count)]


def random_plit_qsat(rng, p, q, max_clauses=8, max_vars=6):
    """Random valid p-LIT q-SAT instance: clauses of exactly q literals with
    every literal used at most p times instance-wide. With q <= 2p the first
    clause always completes (one variable's two literals already carry 2p
    uses), so the result is never empty."""
    nvars = rng.randint(1, max_vars)
    used = {}
    clauses = []
    for _ in range(rng.randint(1, max_clauses)):
        lits = []
        for _ in range(q):
            pool = [
                Literal(v, pos)
                for v in range(nvars)
                for pos in (True, False)
                if used.get((v, pos), 0) < p
            ]
            if not pool:
                break
            lit = rng.choice(pool)
            used[lit.variable, lit.positive] = used.get((lit.variable, lit.positive), 0) + 1
            lits.append(lit)
        if len(lits) == q:
            clauses.append(Clause(tuple(lits)))
    assert clauses
    return CnfInstance(nvars, tuple(clauses))


@pytest.fixture(scope="session")
def small_corpus():
    return graph_corpus(seed=11, count=120, max_n=8)


@pytest.fixture(scope="session")
def tiny_corpus():
    return graph_corpus(seed=12, count=60, max_n=6)
