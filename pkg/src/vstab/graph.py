"""Undirected simple graphs on vertices 0..n-1 with bitset adjacency rows.

Vertex sets are plain Python ints used as bitmasks (bit v = vertex v); helper
functions convert between masks and sorted vertex lists. Graphs are immutable
after construction and safe to share. Indexing is 0-based internally and
1-based in DIMACS files.
"""

from dataclasses import dataclass

import numpy as np

MAX_VERTICES = 4096
_WORD_MASK = (1 << 64) - 1


def vset(vertices):
    """Bitmask for an iterable of vertex indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vset_list(mask):
    """Sorted vertex list of a bitmask."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def vset_size(mask):
    return mask.bit_count()


class Graph:
    """Immutable simple graph; adj[v] is the neighborhood bitmask of v."""

    __slots__ = ("n", "adj", "_words")

    def __init__(self, n, adj):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if n > MAX_VERTICES:
            raise ValueError(f"graph exceeds the {MAX_VERTICES}-vertex cap")
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError("adjacency length does not match vertex count")
        space = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~space:
                raise ValueError(f"adjacency of vertex {v} has bits >= n")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(adj):
            m = row
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = adj
        self._words = None

    @classmethod
    def from_edges(cls, n, edges):
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def m(self):
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u, v):
        return self.adj[u] >> v & 1 == 1

    def degree(self, v):
        return self.adj[v].bit_count()

    def neighbors(self, v):
        return vset_list(self.adj[v])

    def words(self):
        """(n, w) uint64 adjacency rows for the search kernels."""
        if self._words is None:
            w = max(1, (self.n + 63) // 64)
            arr = np.zeros((self.n, w), dtype=np.uint64)
            for v, row in enumerate(self.adj):
                for j in range(w):
                    arr[v, j] = (row >> (64 * j)) & _WORD_MASK
            arr.setflags(write=False)
            self._words = arr
        return self._words

    def full_mask(self):
        return (1 << self.n) - 1

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def active_words(n, mask):
    """(w,) uint64 active-vertex words for a vertex bitmask."""
    w = max(1, (n + 63) // 64)
    arr = np.empty(w, dtype=np.uint64)
    for j in range(w):
        arr[j] = (mask >> (64 * j)) & _WORD_MASK
    return arr


@dataclass(frozen=True)
class Coloring:
    """Proper coloring: colors[v] in 1..k."""

    colors: tuple
    k: int

    def used(self):
        return len(set(self.colors))


def is_proper(g, coloring):
    if len(coloring.colors) != g.n:
        return False
    for c in coloring.colors:
        if not 1 <= c <= coloring.k:
            return False
    for v in range(g.n):
        m = g.adj[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if u > v and coloring.colors[u] == coloring.colors[v]:
                return False
    return True


def is_clique(g, s):
    verts = vset_list(s)
    if s & ~g.full_mask():
        raise ValueError("vertex set has bits outside the graph")
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if not g.has_edge(u, v):
                return False
    return True


def is_independent(g, s):
    if s & ~g.full_mask():
        raise ValueError("vertex set has bits outside the graph")
    m = s
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        if g.adj[v] & s:
            return False
    return True


def is_clique_partition(g, parts):
    """parts: iterable of vertex masks; pairwise disjoint cliques covering V."""
    seen = 0
    for p in parts:
        if p == 0 or (p & seen) or not is_clique(g, p):
            return False
        seen |= p
    return seen == g.full_mask()


def complete_graph(n):
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def join(g1, g2):
    """Disjoint union plus all cross edges; g1 vertices first."""
    n = g1.n + g2.n
    mask1 = (1 << g1.n) - 1
    mask2 = ((1 << g2.n) - 1) << g1.n
    adj = [g1.adj[v] | mask2 for v in range(g1.n)]
    adj += [(g2.adj[v] << g1.n) | mask1 for v in range(g2.n)]
    return Graph(n, adj)


def disjoint_union(gs):
    """Concatenate vertex spaces with no cross edges; returns (Graph, offsets)."""
    offsets = []
    adj = []
    off = 0
    for g in gs:
        offsets.append(off)
        adj.extend(row << off for row in g.adj)
        off += g.n
    return Graph(off, adj), offsets


def blow_up_cycle5(k):
    """Each vertex of a 5-cycle replaced by a k-clique; parts P_i are the
    contiguous index blocks [i*k, (i+1)*k)."""
    if k < 1:
        raise ValueError("clique size must be at least 1")
    n = 5 * k
    part = [((1 << k) - 1) << (i * k) for i in range(5)]
    adj = []
    for i in range(5):
        block = part[i] | part[(i + 1) % 5] | part[(i + 4) % 5]
        for v in range(i * k, (i + 1) * k):
            adj.append(block & ~(1 << v))
    return Graph(n, adj)


def delete_vertices(g, s):
    """Induced subgraph on V minus s; returns (Graph, index_map) where
    index_map[old] is the new index or -1 for deleted vertices."""
    if s & ~g.full_mask():
        raise ValueError("vertex set has bits outside the graph")
    keep = vset_list(g.full_mask() & ~s)
    index_map = [-1] * g.n
    for new, old in enumerate(keep):
        index_map[old] = new
    adj = []
    for old in keep:
        row = 0
        m = g.adj[old] & ~s
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            row |= 1 << index_map[u]
        adj.append(row)
    return Graph(len(keep), adj), index_map


def max_degree(g):
    return max((row.bit_count() for row in g.adj), default=0)


def parse_dimacs_graph(text):
    """Parse DIMACS edge format; returns (Graph, info) where info carries
    'duplicate_edges' (count, deduplicated) and 'comments'. Self-loops and
    out-of-range endpoints are errors."""
    n = None
    m_declared = None
    comments = []
    duplicates = 0
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            comments.append(line[1:].lstrip())
            continue
        if line.startswith("p"):
            fields = line.split()
            if len(fields) != 4 or fields[1] != "edge":
                raise ValueError(f"line {lineno}: malformed problem line {line!r}")
            try:
                n = int(fields[2])
                m_declared = int(fields[3])
            except ValueError:
                raise ValueError(f"line {lineno}: malformed problem line {line!r}") from None
            if n < 0 or m_declared < 0:
                raise ValueError(f"line {lineno}: negative counts in problem line")
            continue
        if line.startswith("e"):
            if n is None:
                raise ValueError(f"line {lineno}: edge before problem line")
            fields = line.split()
            if len(fields) != 3:
                raise ValueError(f"line {lineno}: malformed edge line {line!r}")
            try:
                u = int(fields[1])
                v = int(fields[2])
            except ValueError:
                raise ValueError(f"line {lineno}: malformed edge line {line!r}") from None
            if u == v:
                raise ValueError(f"line {lineno}: self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"line {lineno}: vertex index out of range")
            e = (min(u, v) - 1, max(u, v) - 1)
            if e in edges:
                duplicates += 1
            else:
                edges.add(e)
            continue
        raise ValueError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise ValueError("missing problem line")
    g = Graph.from_edges(n, edges)
    return g, {"duplicate_edges": duplicates, "comments": comments}


def read_dimacs_graph(text):
    return parse_dimacs_graph(text)[0]


def write_dimacs_graph(g):
    """Canonical DIMACS edge format: 'p edge n m', then 'e u v' with
    1-indexed u < v sorted lexicographically."""
    edges = []
    for v in range(g.n):
        m = g.adj[v] >> (v + 1) << (v + 1)
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            edges.append((v + 1, u + 1))
    edges.sort()
    lines = [f"p edge {g.n} {len(edges)}"]
    lines.extend(f"e {u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def write_dot(g, name="G"):
    """DOT export (write-only, for figures)."""
    lines = [f"graph {name} {{"]
    isolated = [v for v in range(g.n) if g.adj[v] == 0]
    for v in isolated:
        lines.append(f"  {v};")
    for v in range(g.n):
        m = g.adj[v] >> (v + 1) << (v + 1)
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            lines.append(f"  {v} -- {u};")
    lines.append("}")
    return "\n".join(lines) + "\n"
