"""CNF instances with repeated literals, the recursive unsatisfiable family,
independence-graph reductions, the highest-color removal procedure, and the
matching-based satisfier for p-LIT 2p-SAT.

Conventions: variables are 0-based indices; an instance is p-LIT q-SAT when
every clause has exactly q literal occurrences and every literal (a variable
with a fixed polarity) occurs at most p times across the whole instance.
Clause literals are stored canonically: sorted by variable, positive before
negative, repetitions kept. Assignments are tuples of bools indexed by
variable; searches return the lexicographically least satisfying one.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .graph import Graph, is_clique, vset_list, vset_size
from .invariants import Budget, is_k_colorable

SAT_VARIABLE_LIMIT = 24


@dataclass(frozen=True)
class Literal:
    variable: int
    positive: bool

    def complement(self):
        return Literal(self.variable, not self.positive)

    def __repr__(self):
        return f"x{self.variable}" if self.positive else f"~x{self.variable}"


def _canon_key(lit):
    return (lit.variable, 0 if lit.positive else 1)


@dataclass(frozen=True)
class Clause:
    """Ordered multiset of literals; canonical order is enforced on build."""

    literals: tuple

    def __post_init__(self):
        if len(self.literals) < 1:
            raise ValueError("clauses must contain at least one literal")
        object.__setattr__(self, "literals", tuple(sorted(self.literals, key=_canon_key)))

    def __len__(self):
        return len(self.literals)


@dataclass(frozen=True)
class CnfInstance:
    variable_count: int
    clauses: tuple
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(self.clauses))
        for cl in self.clauses:
            for lit in cl.literals:
                if not 0 <= lit.variable < self.variable_count:
                    raise ValueError(f"literal variable {lit.variable} out of range")


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    violation: str = None

    def __bool__(self):
        return self.ok


def validate_plit_qsat(inst, p, q):
    """Check the p-LIT q-SAT shape: every clause exactly q literals, every
    literal at most p occurrences instance-wide. Reports the first violation."""
    for i, cl in enumerate(inst.clauses):
        if len(cl) != q:
            return ValidationResult(
                False, f"clause {i} has {len(cl)} literals, expected {q}"
            )
    counts = {}
    for i, cl in enumerate(inst.clauses):
        for lit in cl.literals:
            counts[lit] = counts.get(lit, 0) + 1
            if counts[lit] > p:
                return ValidationResult(
                    False, f"literal {lit} occurs more than {p} times (clause {i})"
                )
    return ValidationResult(True)


def gen_unsat_family(m, level=None):
    """Unsatisfiable m-LIT (2m-1)-SAT instance built by the doubling
    recursion: level 0 is two clauses of 2m-2^r copies of variable 0 and its
    complement (r = ceil(log2 m)); each step sorts every clause canonically,
    deals its literals round-robin into two half-size groups, and emits
    (m copies of a fresh variable + group 1) and (m copies of its complement
    + group 2), fresh variables numbered in clause order. level defaults to
    the final level r, where clauses have 2m-1 literals each.
    """
    if m < 2:
        raise ValueError("family generator requires m >= 2")
    r = math.ceil(math.log2(m))
    if level is None:
        level = r
    if not 0 <= level <= r:
        raise ValueError(f"level must be in 0..{r}")
    width0 = 2 * m - 2**r
    clauses = [
        tuple(Literal(0, True) for _ in range(width0)),
        tuple(Literal(0, False) for _ in range(width0)),
    ]
    next_var = 1
    for i in range(1, level + 1):
        half = m - 2 ** (r - i)
        out = []
        for cl in clauses:
            lits = sorted(cl, key=_canon_key)
            group1 = lits[0::2]
            group2 = lits[1::2]
            assert len(group1) == len(group2) == half
            b = next_var
            next_var += 1
            out.append(tuple(Literal(b, True) for _ in range(m)) + tuple(group1))
            out.append(tuple(Literal(b, False) for _ in range(m)) + tuple(group2))
        clauses = out
    meta = {"m": m, "r": r, "level": level, "split_rule": "roundrobin-sorted-v1"}
    return CnfInstance(next_var, tuple(Clause(c) for c in clauses), meta)


def is_satisfiable(inst):
    """Exhaustive scan over all assignments (variable_count <= 24); returns
    the lexicographically least satisfying assignment or None."""
    n = inst.variable_count
    if n > SAT_VARIABLE_LIMIT:
        raise ValueError(f"brute-force satisfiability limited to {SAT_VARIABLE_LIMIT} variables")
    if not inst.clauses:
        return tuple(False for _ in range(n))
    # bit n-1-j encodes variable j so ascending integers scan assignments
    # in tuple-lexicographic order (False < True)
    pos = np.zeros(len(inst.clauses), dtype=np.uint64)
    neg = np.zeros(len(inst.clauses), dtype=np.uint64)
    for i, cl in enumerate(inst.clauses):
        p = 0
        ng = 0
        for lit in cl.literals:
            bit = 1 << (n - 1 - lit.variable)
            if lit.positive:
                p |= bit
            else:
                ng |= bit
        pos[i] = p
        neg[i] = ng
    found = int(kernels.sat_scan(pos, neg, n))
    if found < 0:
        return None
    return tuple(bool((found >> (n - 1 - j)) & 1) for j in range(n))


def satisfies(inst, assignment):
    for cl in inst.clauses:
        if not any(assignment[l.variable] == l.positive for l in cl.literals):
            return False
    return True


def hall_satisfier(inst, m):
    """Satisfying assignment for a valid m-LIT 2m-SAT instance via a
    clause-saturating matching to complementary-literal pairs (variables).

    Every set of j clauses carries 2mj literal slots while each variable
    covers at most 2m of them, so Hall's condition holds and the matching
    always exists; failure to find one means the input shape was wrong and
    raises RuntimeError. Matched variables are set to satisfy their clause,
    unmatched variables default to true.
    """
    check = validate_plit_qsat(inst, m, 2 * m)
    if not check:
        raise ValueError(f"not a valid {m}-LIT {2 * m}-SAT instance: {check.violation}")
    clause_vars = [sorted({l.variable for l in cl.literals}) for cl in inst.clauses]
    matched = {}  # variable -> clause index

    def augment(ci, seen):
        for v in clause_vars[ci]:
            if v in seen:
                continue
            seen.add(v)
            if v not in matched or augment(matched[v], seen):
                matched[v] = ci
                return True
        return False

    for ci in range(len(inst.clauses)):
        if not augment(ci, set()):
            raise RuntimeError(
                f"no saturating matching: clause {ci} with variables "
                f"{clause_vars[ci]} cannot be assigned a private variable"
            )
    assignment = [True] * inst.variable_count
    for v, ci in matched.items():
        polarities = {l.positive for l in inst.clauses[ci].literals if l.variable == v}
        assignment[v] = True in polarities
    return tuple(assignment)


def _literal_vertices(inst):
    """Flat list of (clause index, literal) in clause-by-clause canonical
    order; this fixes vertex ids for both independence graphs."""
    out = []
    for ci, cl in enumerate(inst.clauses):
        out.extend((ci, lit) for lit in cl.literals)
    return out


def independence_graph(inst):
    """One vertex per literal occurrence; edges join same-clause pairs and
    complementary literals. Satisfying assignments correspond exactly to
    independent sets with one vertex per clause block. Returns the graph and
    the clause blocks as a clique partition (tuple of vertex masks)."""
    verts = _literal_vertices(inst)
    n = len(verts)
    edges = []
    for u in range(n):
        cu, lu = verts[u]
        for v in range(u + 1, n):
            cv, lv = verts[v]
            if cu == cv or lu == lv.complement():
                edges.append((u, v))
    parts = []
    at = 0
    for cl in inst.clauses:
        parts.append(((1 << len(cl)) - 1) << at)
        at += len(cl)
    return Graph.from_edges(n, edges), tuple(parts)


def augmented_independence_graph(inst):
    """Independence graph plus two augment vertices per clause, each joined
    to all of that clause's literal vertices and to nothing else. Augments
    are appended after all literal vertices, clause by clause, and enter the
    returned partition as singleton parts."""
    g, parts = independence_graph(inst)
    nlit = g.n
    n = nlit + 2 * len(inst.clauses)
    edges = []
    for u in range(nlit):
        edges.extend((u, v) for v in vset_list(g.adj[u]) if v > u)
    aug_parts = []
    at = nlit
    for ci in range(len(inst.clauses)):
        block = vset_list(parts[ci])
        for _ in range(2):
            edges.extend((u, at) for u in block)
            aug_parts.append(1 << at)
            at += 1
    return Graph.from_edges(n, edges), tuple(parts) + tuple(aug_parts)


def removal_set(g, parts, coloring):
    """Highest-colored vertex of each part (ties by smallest index), for a
    proper coloring and a clique partition of g. The surviving coloring on
    g minus the result uses at most max_color-1 colors, since every vertex
    of the top color is the strict maximum of its part."""
    colors = coloring.colors
    if len(colors) != g.n:
        raise ValueError("coloring length does not match graph order")
    for u in range(g.n):
        for v in vset_list(g.adj[u]):
            if v > u and colors[u] == colors[v]:
                raise ValueError(f"improper coloring: edge {u}-{v} shares color {colors[u]}")
    cover = 0
    for p in parts:
        if not is_clique(g, p):
            raise ValueError("parts must induce cliques")
        if cover & p:
            raise ValueError("parts must be disjoint")
        cover |= p
    if cover != g.full_mask():
        raise ValueError("parts must cover every vertex")
    picked = 0
    for p in parts:
        best = min(vset_list(p), key=lambda v: (-colors[v], v))
        picked |= 1 << best
    return picked


def validate_disjoint_cliques(g, cliques, size):
    """Every mask must induce a clique of exactly `size` vertices and the
    masks must be pairwise disjoint; raises RuntimeError otherwise."""
    seen = 0
    for i, mask in enumerate(cliques):
        if vset_size(mask) != size or not is_clique(g, mask):
            raise RuntimeError(f"clique certificate invalid at index {i}")
        if mask & seen:
            raise RuntimeError(f"clique certificate overlaps at index {i}")
        seen |= mask


def _disjoint_clique_certificate(g, inst, parts):
    """One 2m-clique per clause: the clause block plus its first augment
    vertex."""
    c = len(inst.clauses)
    width = len(inst.clauses[0])
    cliques = [parts[ci] | parts[c + 2 * ci] for ci in range(c)]
    validate_disjoint_cliques(g, cliques, width + 1)
    return cliques


def stability_certificates(inst, m, budget=None):
    """Certificate-based stability values for the augmented independence
    graph of a generated unsatisfiable family instance.

    (i) clause-block-plus-augment cliques, pairwise disjoint, one per
        clause: any vertex set smaller than the clause count misses one, so
        neither omega nor chi (= omega here) can drop;
    (ii) a removal set (one vertex per clause block) plus an explicit
        extension coloring of the rest with one color fewer, so chi and
        omega both drop at the clause count;
    (iii) unsatisfiability (brute force) plus the absence of an independent
        clause-block transversal: an independent set of clause-count size
        reducing omega would be exactly such a transversal, hence none
        exists and independent omega-stability exceeds the clause count.

    Any certificate that fails validation raises RuntimeError.
    """
    from .critical import independent_transversal

    if inst.meta.get("m") != m or inst.meta.get("level") != inst.meta.get("r"):
        raise ValueError("certificates apply to final-level generated instances")
    budget = budget or Budget()
    c = len(inst.clauses)
    g_plain, blocks = independence_graph(inst)
    g_aug, parts = augmented_independence_graph(inst)

    cliques = _disjoint_clique_certificate(g_aug, inst, parts)

    base_coloring = is_k_colorable(g_plain, 2 * m, budget)
    if base_coloring is None:
        raise RuntimeError(f"expected a {2 * m}-coloring of the plain independence graph")
    s_mask = removal_set(g_plain, blocks, base_coloring)
    if vset_size(s_mask) != c:
        raise RuntimeError("removal set must take exactly one vertex per clause")
    # extend to the augmented graph minus S: each augment keeps 2m-2
    # neighbors, so a color below 2m is always free
    ext = list(base_coloring.colors) + [0] * (2 * c)
    for v in range(g_plain.n, g_aug.n):
        used = {ext[u] for u in vset_list(g_aug.adj[v]) if not (1 << u) & s_mask}
        color = next(x for x in range(1, 2 * m) if x not in used)
        ext[v] = color
    top = 0
    for v in range(g_aug.n):
        if (1 << v) & s_mask:
            continue
        top = max(top, ext[v])
        for u in vset_list(g_aug.adj[v]):
            if u > v and not (1 << u) & s_mask and ext[u] == ext[v]:
                raise RuntimeError(f"extension coloring improper at edge {v}-{u}")
    if top > 2 * m - 1:
        raise RuntimeError("extension coloring must use fewer than 2m colors")

    if is_satisfiable(inst) is not None:
        raise RuntimeError("instance unexpectedly satisfiable")
    if independent_transversal(g_plain, blocks) is not None:
        raise RuntimeError("independent clause transversal exists despite unsatisfiability")

    return {
        "m": m,
        "clause_count": c,
        "chi": 2 * m,
        "omega": 2 * m,
        "vs_chi": c,
        "vs_omega": c,
        "ivs_omega_exceeds": c,
        "disjoint_cliques": [tuple(vset_list(q)) for q in cliques],
        "removal_set": tuple(vset_list(s_mask)),
        "extension_colors_used": top,
    }


def write_dimacs_cnf(inst):
    lines = [f"p cnf {inst.variable_count} {len(inst.clauses)}"]
    for cl in inst.clauses:
        nums = [(l.variable + 1) if l.positive else -(l.variable + 1) for l in cl.literals]
        lines.append(" ".join(str(x) for x in nums) + " 0")
    return "\n".join(lines) + "\n"


def read_dimacs_cnf(text):
    nvars = nclauses = None
    tokens = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if nvars is not None:
                raise ValueError("duplicate header")
            fields = line.split()
            if len(fields) != 4 or fields[1] != "cnf":
                raise ValueError(f"malformed header: {line!r}")
            nvars, nclauses = int(fields[2]), int(fields[3])
            continue
        if nvars is None:
            raise ValueError("clause data before header")
        tokens.extend(int(t) for t in line.split())
    if nvars is None:
        raise ValueError("missing header")
    clauses = []
    current = []
    for t in tokens:
        if t == 0:
            if not current:
                raise ValueError("empty clause")
            clauses.append(Clause(tuple(current)))
            current = []
            continue
        v = abs(t) - 1
        if v >= nvars:
            raise ValueError(f"literal {t} out of range for {nvars} variables")
        current.append(Literal(v, t > 0))
    if current:
        raise ValueError("unterminated clause at end of file")
    if len(clauses) != nclauses:
        raise ValueError(f"header claims {nclauses} clauses, found {len(clauses)}")
    return CnfInstance(nvars, tuple(clauses))
