"""Hot search kernels on uint64 bitset rows.

Every kernel takes the adjacency as an (n, w) uint64 array of bitset rows plus
an active-vertex word mask, so callers can search induced subgraphs without
rebuilding the graph (deleting S = clearing its bits in `active`).

Kernels are numba-compiled when the jit path is enabled (see _accel) and run
as-is under the interpreter otherwise; both paths execute the same statements
and return identical results.

Status codes: 1 = found, 0 = proven absent, -1 = node budget exceeded.
"""

import numpy as np

from ._accel import maybe_njit

U1 = np.uint64(1)
U0 = np.uint64(0)


@maybe_njit
def popcnt64(x):
    # SWAR popcount with shift-folding; no multiply so no overflow warnings
    # on the interpreted numpy-scalar path.
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    x = x + (x >> np.uint64(8))
    x = x + (x >> np.uint64(16))
    x = x + (x >> np.uint64(32))
    return np.int64(x & np.uint64(0x7F))


@maybe_njit
def popcount_words(words):
    total = np.int64(0)
    for j in range(words.shape[0]):
        total += popcnt64(words[j])
    return total


@maybe_njit
def _trailing_zeros(x):
    # x must be nonzero
    lsb = x & ~(x - U1)
    return popcnt64(lsb - U1)


@maybe_njit
def _test_bit(words, v):
    return (words[v >> 6] >> np.uint64(v & 63)) & U1 != U0


@maybe_njit
def _active_degree(adj, active, v, w):
    d = np.int64(0)
    for j in range(w):
        d += popcnt64(adj[v, j] & active[j])
    return d


@maybe_njit
def kcolor_search(adj, active, k, part_start, part_vert, budget, out_colors):
    """Exact k-colorability of the active induced subgraph, 1 <= k <= 63.

    DSATUR branch and bound: branch vertex = maximum saturation, ties by
    smallest index; only colors up to (max used + 1) are branched on; a greedy
    clique is precolored (sound by color permutation); after every assignment
    a Hall feasibility check runs per clique part (part_start/part_vert is a
    CSR clique partition of the full graph; parts restricted to the active
    set are still cliques).

    The uncolored remainder is split into connected components, each colored
    by its own search: components interact only through the precolored
    clique, so extending the precoloring to all of them is equivalent to
    extending it to each one alone, and a refutation inside one gadget is
    never re-derived once per coloring of another.

    True twins (equal closed neighborhoods within the active set) are
    interchangeable in any proper coloring, so among the non-precolored
    members of a twin class colors are forced ascending by vertex index;
    this collapses the color permutations of substituted cliques.

    The per-part feasibility check is a full Hall test: uncolored members of
    a clique part need pairwise distinct colors, so a bipartite matching
    from members to their available colors must saturate the part; Kuhn's
    augmenting search decides that exactly (a union cardinality bound alone
    misses deficient sub-families inside a part).

    Returns (status, nodes). On status 1, out_colors[v] in 0..k-1 for every
    active v.
    """
    n = adj.shape[0]
    w = adj.shape[1]
    full = (U1 << np.uint64(k)) - U1
    nodes = np.int64(0)

    color = np.full(n, -1, dtype=np.int64)
    neigh_mask = np.zeros(n, dtype=np.uint64)
    act_deg = np.zeros(n, dtype=np.int64)
    n_active = np.int64(0)
    for v in range(n):
        if _test_bit(active, v):
            n_active += 1
            act_deg[v] = _active_degree(adj, active, v, w)
    if n_active == 0:
        return 1, nodes

    # Greedy clique precoloring: any proper coloring gives the clique
    # pairwise-distinct colors, so fixing 0,1,... on it loses no solutions.
    # Greedy runs from every active seed and the largest find wins: a bigger
    # precolored clique breaks more color symmetry, refutes k < clique size
    # without search, and separates the remainder into more components.
    members = np.empty(n, dtype=np.int64)
    best_members = np.empty(n, dtype=np.int64)
    best_size = np.int64(0)
    cand = np.empty(w, dtype=np.uint64)
    for seed in range(n):
        if not _test_bit(active, seed) or act_deg[seed] + 1 <= best_size:
            continue
        size = np.int64(0)
        for j in range(w):
            cand[j] = adj[seed, j] & active[j]
        cur = np.int64(seed)
        while True:
            members[size] = cur
            size += 1
            nxt = np.int64(-1)
            nxt_deg = np.int64(-1)
            for j in range(w):
                word = cand[j]
                while word != U0:
                    t = _trailing_zeros(word)
                    word &= word - U1
                    u = (j << 6) + t
                    if act_deg[u] > nxt_deg:
                        nxt = u
                        nxt_deg = act_deg[u]
            if nxt < 0:
                break
            for j in range(w):
                cand[j] &= adj[nxt, j]
            cur = nxt
        if size > best_size:
            best_size = size
            for i in range(size):
                best_members[i] = members[i]
    if best_size > k:
        return 0, nodes  # clique needs more than k colors
    clique_size = best_size
    fixed = np.zeros(n, dtype=np.bool_)
    for i in range(clique_size):
        cur = best_members[i]
        color[cur] = i
        fixed[cur] = True
        bit_c = U1 << np.uint64(i)
        for j in range(w):
            word = adj[cur, j] & active[j]
            while word != U0:
                t = _trailing_zeros(word)
                word &= word - U1
                u = (j << 6) + t
                if color[u] < 0:
                    neigh_mask[u] |= bit_c
    uncolored = n_active - clique_size

    if uncolored == 0:
        for v in range(n):
            if _test_bit(active, v):
                out_colors[v] = color[v]
        return 1, nodes

    # true-twin classes: twin_id[v] = smallest active vertex with the same
    # closed neighborhood (twins are adjacent, hence always distinctly
    # colored, so the ascending-color rule is a pure canonical form)
    closed = np.empty((n, w), dtype=np.uint64)
    twin_id = np.full(n, -1, dtype=np.int64)
    for v in range(n):
        if _test_bit(active, v):
            for j in range(w):
                closed[v, j] = adj[v, j] & active[j]
            closed[v, v >> 6] |= U1 << np.uint64(v & 63)
    for v in range(n):
        if _test_bit(active, v) and twin_id[v] < 0:
            twin_id[v] = v
            for u in range(v + 1, n):
                if _test_bit(active, u) and twin_id[u] < 0:
                    same = True
                    for j in range(w):
                        if closed[v, j] != closed[u, j]:
                            same = False
                            break
                    if same:
                        twin_id[u] = v

    # connected components of the uncolored remainder, BFS from ascending
    # seed vertices; comp_vert holds them grouped, CSR-indexed by comp_start
    comp_vert = np.empty(n, dtype=np.int64)
    comp_start = np.empty(n + 1, dtype=np.int64)
    visited = np.zeros(w, dtype=np.uint64)
    ncomp = np.int64(0)
    cnt = np.int64(0)
    comp_start[0] = 0
    for s in range(n):
        if _test_bit(active, s) and color[s] < 0 and not _test_bit(visited, s):
            comp_vert[cnt] = s
            cnt += 1
            visited[s >> 6] |= U1 << np.uint64(s & 63)
            qi = cnt - 1
            while qi < cnt:
                u = comp_vert[qi]
                qi += 1
                for j in range(w):
                    word = adj[u, j] & active[j] & ~visited[j]
                    while word != U0:
                        t = _trailing_zeros(word)
                        word &= word - U1
                        x = (j << 6) + t
                        if color[x] < 0:
                            visited[j] |= U1 << np.uint64(t)
                            comp_vert[cnt] = x
                            cnt += 1
            ncomp += 1
            comp_start[ncomp] = cnt

    # iterative DFS per component; st_trail_start[d] = trail mark to pop
    # when undoing the assignment that created depth d
    st_vertex = np.empty(n + 1, dtype=np.int64)
    st_tried = np.empty(n + 1, dtype=np.uint64)
    st_maxused = np.empty(n + 1, dtype=np.int64)
    st_trail_start = np.empty(n + 1, dtype=np.int64)
    trail = np.empty(n * n + 1, dtype=np.int64)
    comp_words = np.empty(w, dtype=np.uint64)

    # scratch for the per-part matching check
    avail_arr = np.empty(n, dtype=np.uint64)
    match_col = np.empty(64, dtype=np.int64)
    km_mem = np.empty(65, dtype=np.int64)
    km_col = np.empty(65, dtype=np.int64)
    km_rem = np.empty(65, dtype=np.uint64)

    nparts = part_start.shape[0] - 1

    for ci in range(ncomp):
        for j in range(w):
            comp_words[j] = U0
        for idx in range(comp_start[ci], comp_start[ci + 1]):
            u = comp_vert[idx]
            comp_words[u >> 6] |= U1 << np.uint64(u & 63)
        un_comp = comp_start[ci + 1] - comp_start[ci]
        trail_top = np.int64(0)
        depth = np.int64(0)
        sel = np.int64(-1)
        sel_sat = np.int64(-1)
        for v in range(n):
            if _test_bit(comp_words, v) and color[v] < 0:
                s = popcnt64(neigh_mask[v] & full)
                if s > sel_sat:
                    sel_sat = s
                    sel = v
        st_vertex[depth] = sel
        st_tried[depth] = U0
        st_maxused[depth] = clique_size - 1
        st_trail_start[depth] = 0

        while un_comp > 0:
            v = st_vertex[depth]
            lim = st_maxused[depth] + 2
            if lim > k:
                lim = k
            allowed = (U1 << np.uint64(lim)) - U1
            avail = full & ~neigh_mask[v] & allowed & ~st_tried[depth]
            # ascending-color canonical form among v's non-precolored twins
            tid = twin_id[v]
            lo = np.int64(-1)
            hi = np.int64(k)
            for u in range(n):
                if twin_id[u] == tid and u != v and color[u] >= 0 and not fixed[u]:
                    if u < v:
                        if color[u] > lo:
                            lo = color[u]
                    elif color[u] < hi:
                        hi = color[u]
            avail &= ((U1 << np.uint64(hi)) - U1) & ~((U1 << np.uint64(lo + 1)) - U1)

            if avail == U0:
                depth -= 1
                if depth < 0:
                    return 0, nodes
                # undo the assignment that created the abandoned depth
                pv = st_vertex[depth]
                pc = color[pv]
                bit_pc = U1 << np.uint64(pc)
                mark = st_trail_start[depth + 1]
                while trail_top > mark:
                    trail_top -= 1
                    neigh_mask[trail[trail_top]] &= ~bit_pc
                color[pv] = -1
                un_comp += 1
                st_tried[depth] |= bit_pc
                continue

            c = _trailing_zeros(avail)
            bit_c = U1 << np.uint64(c)

            nodes += 1
            if nodes > budget:
                return -1, nodes

            color[v] = c
            un_comp -= 1
            mu = st_maxused[depth]
            if c > mu:
                mu = c
            start = trail_top
            for j in range(w):
                word = adj[v, j] & active[j]
                while word != U0:
                    t = _trailing_zeros(word)
                    word &= word - U1
                    u = (j << 6) + t
                    if color[u] < 0 and (neigh_mask[u] & bit_c) == U0:
                        neigh_mask[u] |= bit_c
                        trail[trail_top] = u
                        trail_top += 1

            if un_comp == 0:
                break

            # Hall check: match each uncolored part member to a distinct
            # available color via Kuhn augmenting paths
            feasible = True
            for p in range(nparts):
                mcnt = np.int64(0)
                for idx in range(part_start[p], part_start[p + 1]):
                    u = part_vert[idx]
                    if _test_bit(active, u) and color[u] < 0:
                        au = full & ~neigh_mask[u]
                        if au == U0:
                            feasible = False
                            break
                        avail_arr[mcnt] = au
                        mcnt += 1
                if not feasible:
                    break
                if mcnt <= 1:
                    continue
                for c2 in range(k):
                    match_col[c2] = -1
                for i in range(mcnt):
                    km_visited = U0
                    top = np.int64(0)
                    km_mem[0] = i
                    km_rem[0] = avail_arr[i]
                    augmented = False
                    while top >= 0:
                        rem = km_rem[top] & ~km_visited
                        if rem == U0:
                            top -= 1
                            continue
                        c2 = _trailing_zeros(rem)
                        km_visited |= U1 << np.uint64(c2)
                        km_col[top] = c2
                        owner = match_col[c2]
                        if owner < 0:
                            for t2 in range(top + 1):
                                match_col[km_col[t2]] = km_mem[t2]
                            augmented = True
                            break
                        top += 1
                        km_mem[top] = owner
                        km_rem[top] = avail_arr[owner]
                    if not augmented:
                        feasible = False
                        break
                if not feasible:
                    break

            if not feasible:
                while trail_top > start:
                    trail_top -= 1
                    neigh_mask[trail[trail_top]] &= ~bit_c
                color[v] = -1
                un_comp += 1
                st_tried[depth] |= bit_c
                continue

            depth += 1
            sel = np.int64(-1)
            sel_sat = np.int64(-1)
            for x in range(n):
                if _test_bit(comp_words, x) and color[x] < 0:
                    s = popcnt64(neigh_mask[x] & full)
                    if s > sel_sat:
                        sel_sat = s
                        sel = x
            st_vertex[depth] = sel
            st_tried[depth] = U0
            st_maxused[depth] = mu
            st_trail_start[depth] = start

    for v in range(n):
        if _test_bit(active, v):
            out_colors[v] = color[v]
    return 1, nodes


@maybe_njit
def max_clique_search(adj, active, budget, out_best):
    """Maximum clique of the active induced subgraph.

    Branch and bound with a greedy-coloring upper bound per level; candidates
    expanded in reverse color order. Returns (status, omega, nodes); on
    status 1, out_best[:omega] holds the witness (ascending).
    """
    n = adj.shape[0]
    w = adj.shape[1]
    nodes = np.int64(0)

    cand_stack = np.zeros((n + 2, w), dtype=np.uint64)
    order_stack = np.zeros((n + 2, n), dtype=np.int64)
    bound_stack = np.zeros((n + 2, n), dtype=np.int64)
    pos_stack = np.zeros(n + 2, dtype=np.int64)
    chosen = np.zeros(n + 2, dtype=np.int64)

    best = np.int64(0)
    depth = np.int64(0)
    for j in range(w):
        cand_stack[0, j] = active[j]

    tmp = np.empty(w, dtype=np.uint64)
    sub = np.empty(w, dtype=np.uint64)

    # greedy-color the depth-0 candidate set: vertices listed class by
    # class, so color bounds are nondecreasing along the order
    cnt = np.int64(0)
    for j in range(w):
        tmp[j] = cand_stack[0, j]
    cls = np.int64(0)
    while True:
        empty = True
        for j in range(w):
            if tmp[j] != U0:
                empty = False
                break
        if empty:
            break
        cls += 1
        for j in range(w):
            sub[j] = tmp[j]
        while True:
            u = np.int64(-1)
            for j in range(w):
                if sub[j] != U0:
                    u = (j << 6) + _trailing_zeros(sub[j])
                    break
            if u < 0:
                break
            order_stack[0, cnt] = u
            bound_stack[0, cnt] = cls
            cnt += 1
            tmp[u >> 6] &= ~(U1 << np.uint64(u & 63))
            for j in range(w):
                sub[j] &= ~adj[u, j]
            sub[u >> 6] &= ~(U1 << np.uint64(u & 63))
    pos_stack[0] = cnt - 1

    if cnt == 0:
        return 1, np.int64(0), nodes

    while depth >= 0:
        p = pos_stack[depth]
        if p < 0 or depth + bound_stack[depth, p] <= best:
            # level exhausted, or bound prune (bounds only shrink leftward)
            depth -= 1
            if depth >= 0:
                ev = chosen[depth]
                cand_stack[depth, ev >> 6] &= ~(U1 << np.uint64(ev & 63))
                pos_stack[depth] -= 1
            continue

        v = order_stack[depth, p]
        nodes += 1
        if nodes > budget:
            return -1, best, nodes

        has = False
        for j in range(w):
            cand_stack[depth + 1, j] = cand_stack[depth, j] & adj[v, j]
            if cand_stack[depth + 1, j] != U0:
                has = True
        chosen[depth] = v

        if depth + 1 > best:
            best = depth + 1
            for i in range(depth):
                out_best[i] = chosen[i]
            out_best[depth] = v
            for a in range(best):
                for b in range(a + 1, best):
                    if out_best[b] < out_best[a]:
                        t = out_best[a]
                        out_best[a] = out_best[b]
                        out_best[b] = t

        if not has:
            cand_stack[depth, v >> 6] &= ~(U1 << np.uint64(v & 63))
            pos_stack[depth] -= 1
            continue

        cnt = np.int64(0)
        for j in range(w):
            tmp[j] = cand_stack[depth + 1, j]
        cls = np.int64(0)
        while True:
            empty = True
            for j in range(w):
                if tmp[j] != U0:
                    empty = False
                    break
            if empty:
                break
            cls += 1
            for j in range(w):
                sub[j] = tmp[j]
            while True:
                u = np.int64(-1)
                for j in range(w):
                    if sub[j] != U0:
                        u = (j << 6) + _trailing_zeros(sub[j])
                        break
                if u < 0:
                    break
                order_stack[depth + 1, cnt] = u
                bound_stack[depth + 1, cnt] = cls
                cnt += 1
                tmp[u >> 6] &= ~(U1 << np.uint64(u & 63))
                for j in range(w):
                    sub[j] &= ~adj[u, j]
                sub[u >> 6] &= ~(U1 << np.uint64(u & 63))
        pos_stack[depth + 1] = cnt - 1
        depth += 1

    return 1, best, nodes


@maybe_njit
def sat_scan(pos_rev, neg_rev, nvars):
    """First satisfying assignment of a CNF with <= 24 variables, or -1.

    pos_rev / neg_rev hold, per clause, the variable masks in reversed bit
    order (bit nvars-1-j = variable j), so scanning the assignment integer
    upward visits assignments in tuple-lexicographic order (variable 0 most
    significant, False before True).
    """
    nclauses = pos_rev.shape[0]
    full = (U1 << np.uint64(nvars)) - U1
    limit = np.int64(1) << np.int64(nvars)
    for a in range(limit):
        au = np.uint64(a)
        ok = True
        for i in range(nclauses):
            if (pos_rev[i] & au) == U0 and (neg_rev[i] & ~au & full) == U0:
                ok = False
                break
        if ok:
            return np.int64(a)
    return np.int64(-1)
