"""Compiled inner loops over uint64 adjacency rows.

Every function here takes ``adj`` as a ``uint64`` array where bit ``u`` of
``adj[v]`` is set iff ``uv`` is an edge.  Vertex sets are ``uint64`` masks.
All arithmetic on masks must stay in ``uint64``: mixing with signed ints
makes numba promote to float64.
"""

import numpy as np
from numba import njit, types
from numba.typed import Dict

U0 = np.uint64(0)
U1 = np.uint64(1)
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_S1 = np.uint64(1)
_S2 = np.uint64(2)
_S4 = np.uint64(4)
_S56 = np.uint64(56)
_ALL = np.uint64(0xFFFFFFFFFFFFFFFF)

_OPTS = dict(cache=True, nogil=True)


@njit(inline="always", **_OPTS)
def popcount(x):
    x = x - ((x >> _S1) & _M1)
    x = (x & _M2) + ((x >> _S2) & _M2)
    x = (x + (x >> _S4)) & _M4
    return np.int64((x * _H01) >> _S56)


@njit(inline="always", **_OPTS)
def lowbit(x):
    return x & (~x + U1)


@njit(inline="always", **_OPTS)
def ctz(x):
    return popcount(lowbit(x) - U1)


@njit(inline="always", **_OPTS)
def bit(v):
    return U1 << np.uint64(v)


@njit(inline="always", **_OPTS)
def full_mask(n):
    if n >= 64:
        return _ALL
    return (U1 << np.uint64(n)) - U1


@njit(**_OPTS)
def complement_rows(adj, n):
    out = np.empty(n, dtype=np.uint64)
    full = full_mask(n)
    for v in range(n):
        out[v] = (~adj[v]) & full & ~bit(v)
    return out


# ---------------------------------------------------------------- cliques


@njit(**_OPTS)
def has_clique(adj, cand, t):
    """True iff the subgraph induced on ``cand`` contains a ``t``-clique."""
    if t <= 0:
        return True
    if t == 1:
        return cand != U0
    if popcount(cand) < t:
        return False
    # explicit stack: cached recursive kernels are unreliable in numba
    stack = np.empty(t, dtype=np.uint64)
    stack[0] = cand
    lvl = 0
    while lvl >= 0:
        c = stack[lvl]
        need = t - lvl
        if popcount(c) < need:
            lvl -= 1
            continue
        if need == 2:
            while c != U0:
                v = ctz(c)
                c &= c - U1
                if adj[v] & c:
                    return True
            lvl -= 1
            continue
        v = ctz(c)
        c &= c - U1
        stack[lvl] = c
        stack[lvl + 1] = adj[v] & c
        lvl += 1
    return False


@njit(**_OPTS)
def max_clique_within(adj, cand):
    if cand == U0:
        return 0
    # greedy clique for a starting bound, then climb
    k = 0
    c = cand
    while c != U0:
        best = ctz(c)
        bd = -1
        r = c
        while r != U0:
            v = ctz(r)
            r &= r - U1
            d = popcount(adj[v] & c)
            if d > bd:
                bd = d
                best = v
        k += 1
        c &= adj[best]
    while has_clique(adj, cand, k + 1):
        k += 1
    return k


@njit(**_OPTS)
def max_independent_within(adj, n, cand):
    return max_clique_within(complement_rows(adj, n), cand)


@njit(**_OPTS)
def is_plus_kt(adj, n, t):
    """Every non-edge xy has a (t-2)-clique in N(x) & N(y)."""
    for x in range(n):
        non = (~adj[x]) & full_mask(n) & ~bit(x)
        non &= ~(bit(x) - U1)  # only y > x
        while non != U0:
            y = ctz(non)
            non &= non - U1
            if not has_clique(adj, adj[x] & adj[y], t - 2):
                return False
    return True


@njit(**_OPTS)
def maximal_kfree_subsets(adj, n, t):
    """All inclusion-maximal vertex sets with no ``t``-clique inside.

    Include/exclude backtracking over vertices 0..n-1; a vertex left out by
    choice must end up blocked (a (t-1)-clique of the chosen set in its
    neighbourhood), so every maximal set is produced exactly once.
    """
    cap = 64
    out = np.empty(cap, dtype=np.uint64)
    cnt = 0
    if n == 0:
        out[0] = U0
        return out[:1]
    s_stack = np.zeros(n + 1, dtype=np.uint64)
    x_stack = np.zeros(n + 1, dtype=np.uint64)
    state = np.zeros(n + 1, dtype=np.int64)
    d = 0
    while d >= 0:
        if d == n:
            s = s_stack[d]
            x = x_stack[d]
            ok = True
            while x != U0:
                v = ctz(x)
                x &= x - U1
                if not has_clique(adj, adj[v] & s, t - 1):
                    ok = False
                    break
            if ok:
                if cnt == cap:
                    cap *= 2
                    grown = np.empty(cap, dtype=np.uint64)
                    grown[:cnt] = out[:cnt]
                    out = grown
                out[cnt] = s
                cnt += 1
            d -= 1
            continue
        s = s_stack[d]
        x = x_stack[d]
        b = bit(d)
        if state[d] == 0:
            state[d] = 1
            if not has_clique(adj, adj[d] & s, t - 1):
                s_stack[d + 1] = s | b
                x_stack[d + 1] = x
                state[d + 1] = 0
                d += 1
            continue
        if state[d] == 1:
            state[d] = 2
            # exclusion: every excluded vertex must still be blockable
            later = full_mask(n) & ~(bit(d + 1) - U1)
            avail = s | later
            xs = x | b
            ok = True
            while xs != U0:
                v = ctz(xs)
                xs &= xs - U1
                if not has_clique(adj, adj[v] & avail, t - 1):
                    ok = False
                    break
            if ok:
                s_stack[d + 1] = s
                x_stack[d + 1] = x | b
                state[d + 1] = 0
                d += 1
            continue
        d -= 1
    return out[:cnt]


# --------------------------------------------------------------- arrowing


@njit(**_OPTS)
def find_coloring(adj, n, parts, order):
    """Search a colouring whose class i is K_{parts[i]}-free.

    ``parts`` ascending, all >= 2.  Returns the class index per vertex, or
    an empty array when no such colouring exists (i.e. the graph arrows).
    """
    s = parts.shape[0]
    colour = np.full(n, -1, dtype=np.int64)
    if n == 0:
        return colour
    cls = np.zeros(s, dtype=np.uint64)
    choice = np.full(n, -1, dtype=np.int64)
    d = 0
    while True:
        if d == n:
            for k in range(n):
                colour[order[k]] = choice[k]
            return colour
        v = order[d]
        bv = bit(v)
        prev = choice[d]
        if prev >= 0:
            cls[prev] &= ~bv
        i = prev + 1
        found = -1
        while i < s:
            if i > 0 and parts[i] == parts[i - 1] and cls[i - 1] == U0:
                i += 1
                continue
            a = parts[i]
            nb = adj[v] & cls[i]
            if a == 2:
                ok = nb == U0
            else:
                ok = not has_clique(adj, nb, a - 1)
            if ok:
                found = i
                break
            i += 1
        if found >= 0:
            choice[d] = found
            cls[found] |= bv
            d += 1
            if d < n:
                choice[d] = -1
        else:
            choice[d] = -1
            d -= 1
            if d < 0:
                return np.empty(0, dtype=np.int64)


# ------------------------------------------------------ canonical labeling


@njit(**_OPTS)
def _refine(adj, n, lab, cend, cnt):
    """Refine the ordered partition (lab, cend) to an equitable one."""
    changed = True
    while changed:
        changed = False
        s = 0
        while s < n:
            e = s
            while cend[e] == 0:
                e += 1
            w = U0
            for k in range(s, e + 1):
                w |= bit(lab[k])
            c = 0
            while c < n:
                ce = c
                while cend[ce] == 0:
                    ce += 1
                if ce > c:
                    lo = 1 << 30
                    hi = -1
                    for k in range(c, ce + 1):
                        x = popcount(adj[lab[k]] & w)
                        cnt[k] = x
                        if x < lo:
                            lo = x
                        if x > hi:
                            hi = x
                    if lo != hi:
                        # insertion sort of the cell by count
                        for k in range(c + 1, ce + 1):
                            kv = lab[k]
                            kc = cnt[k]
                            j = k - 1
                            while j >= c and cnt[j] > kc:
                                lab[j + 1] = lab[j]
                                cnt[j + 1] = cnt[j]
                                j -= 1
                            lab[j + 1] = kv
                            cnt[j + 1] = kc
                        for k in range(c, ce):
                            cend[k] = 1 if cnt[k] != cnt[k + 1] else 0
                        changed = True
                c = ce + 1
            s = e + 1


@njit(**_OPTS)
def _leaf_code(adj, n, lab, code):
    for j in range(n):
        vj = np.uint64(lab[j])
        x = U0
        for i in range(j):
            x = (x << U1) | ((adj[lab[i]] >> vj) & U1)
        code[j] = x


@njit(**_OPTS)
def _cmp_code(a, b, n):
    for j in range(1, n):
        if a[j] < b[j]:
            return -1
        if a[j] > b[j]:
            return 1
    return 0


@njit(**_OPTS)
def _uf_find(par, x):
    while par[x] != x:
        par[x] = par[par[x]]
        x = par[x]
    return x


@njit(**_OPTS)
def _uf_build(par, n, gens, ngens, fixv, depth):
    for v in range(n):
        par[v] = v
    for g in range(ngens):
        ok = True
        for k in range(depth):
            if gens[g, fixv[k]] != fixv[k]:
                ok = False
                break
        if not ok:
            continue
        for v in range(n):
            a = _uf_find(par, v)
            b = _uf_find(par, gens[g, v])
            if a != b:
                if a < b:
                    par[b] = a
                else:
                    par[a] = b


@njit(**_OPTS)
def canonical_search(adj, n, gcap):
    """Individualisation-refinement search.

    Returns ``(lab, orbits, status)``: ``lab[k]`` is the original vertex
    placed at canonical position k (the leaf with the least upper-triangle
    code), ``orbits`` holds the first-path orbit sizes whose product is
    |Aut(G)|, and ``status`` is 0 on success, 1 if the generator store
    overflowed (the labeling is still canonical, the orbit sizes are not
    trustworthy).
    """
    orbits = np.ones(n + 1, dtype=np.int64)
    if n <= 1:
        lab0 = np.arange(n, dtype=np.int64)
        return lab0, orbits, 0
    labs = np.zeros((n + 1, n), dtype=np.int64)
    cends = np.zeros((n + 1, n), dtype=np.uint8)
    cnt = np.zeros(n, dtype=np.int64)
    tcs = np.zeros(n + 1, dtype=np.int64)
    tce = np.zeros(n + 1, dtype=np.int64)
    nxt = np.zeros(n + 1, dtype=np.int64)
    exps = np.zeros((n + 1, n), dtype=np.int64)
    nexp = np.zeros(n + 1, dtype=np.int64)
    fixv = np.zeros(n + 1, dtype=np.int64)
    onfp = np.zeros(n + 1, dtype=np.uint8)
    par = np.zeros((n + 1, n), dtype=np.int64)
    pargen = np.full(n + 1, -1, dtype=np.int64)
    isleaf = np.zeros(n + 1, dtype=np.uint8)

    gens = np.empty((gcap, n), dtype=np.int64)
    ngens = 0
    status = 0

    code = np.zeros(n, dtype=np.uint64)
    first_code = np.zeros(n, dtype=np.uint64)
    best_code = np.zeros(n, dtype=np.uint64)
    first_lab = np.zeros(n, dtype=np.int64)
    best_lab = np.zeros(n, dtype=np.int64)
    best_fix = np.zeros(n + 1, dtype=np.int64)
    best_depth = 0
    have_first = False

    for k in range(n):
        labs[0, k] = k
        cends[0, k] = 0
    cends[0, n - 1] = 1
    _refine(adj, n, labs[0], cends[0], cnt)
    onfp[0] = 1

    # set up node 0
    d = 0
    entering = True
    while d >= 0:
        if entering:
            entering = False
            # locate target cell (first non-singleton)
            pos = 0
            ts = -1
            te = -1
            while pos < n:
                pe = pos
                while cends[d, pe] == 0:
                    pe += 1
                if pe > pos:
                    ts = pos
                    te = pe
                    break
                pos = pe + 1
            if ts < 0:
                isleaf[d] = 1
                # ---- leaf
                _leaf_code(adj, n, labs[d], code)
                if not have_first:
                    have_first = True
                    for k in range(n):
                        first_code[k] = code[k]
                        best_code[k] = code[k]
                        first_lab[k] = labs[d, k]
                        best_lab[k] = labs[d, k]
                    for k in range(d):
                        best_fix[k] = fixv[k]
                    best_depth = d
                    d -= 1
                    continue
                jump = -1
                if _cmp_code(code, first_code, n) == 0:
                    if ngens < gcap:
                        for k in range(n):
                            gens[ngens, first_lab[k]] = labs[d, k]
                        ngens += 1
                    else:
                        status = 1
                    # deepest first-path ancestor of the current leaf
                    jd = 0
                    for k in range(d + 1):
                        if onfp[k] == 1:
                            jd = k
                        else:
                            break
                    jump = jd
                else:
                    c = _cmp_code(code, best_code, n)
                    if c == 0:
                        if ngens < gcap:
                            for k in range(n):
                                gens[ngens, best_lab[k]] = labs[d, k]
                            ngens += 1
                        else:
                            status = 1
                        jd = 0
                        lim = min(d, best_depth)
                        while jd < lim and fixv[jd] == best_fix[jd]:
                            jd += 1
                        jump = jd
                    elif c < 0:
                        for k in range(n):
                            best_code[k] = code[k]
                            best_lab[k] = labs[d, k]
                        for k in range(d):
                            best_fix[k] = fixv[k]
                        best_depth = d
                if jump >= 0:
                    d = jump
                else:
                    d -= 1
                continue
            isleaf[d] = 0
            tcs[d] = ts
            tce[d] = te
            nxt[d] = ts
            nexp[d] = 0
            pargen[d] = -1
        # ---- pick next child at depth d
        advanced = False
        while nxt[d] <= tce[d]:
            w = labs[d, nxt[d]]
            nxt[d] += 1
            if nexp[d] > 0:
                if pargen[d] != ngens:
                    _uf_build(par[d], n, gens, ngens, fixv, d)
                    pargen[d] = ngens
                rw = _uf_find(par[d], w)
                skip = False
                for k in range(nexp[d]):
                    if _uf_find(par[d], exps[d, k]) == rw:
                        skip = True
                        break
                if skip:
                    continue
            exps[d, nexp[d]] = w
            nexp[d] += 1
            fixv[d] = w
            # child partition
            for k in range(n):
                labs[d + 1, k] = labs[d, k]
                cends[d + 1, k] = cends[d, k]
            ts = tcs[d]
            te = tce[d]
            for k in range(ts, te + 1):
                if labs[d + 1, k] == w:
                    labs[d + 1, k] = labs[d + 1, ts]
                    labs[d + 1, ts] = w
                    break
            cends[d + 1, ts] = 1
            _refine(adj, n, labs[d + 1], cends[d + 1], cnt)
            onfp[d + 1] = 1 if (onfp[d] == 1 and nexp[d] == 1) else 0
            d += 1
            entering = True
            advanced = True
            break
        if advanced:
            continue
        # ---- node exhausted
        if onfp[d] == 1:
            _uf_build(par[d], n, gens, ngens, fixv, d)
            pargen[d] = ngens
            r0 = _uf_find(par[d], exps[d, 0])
            size = 0
            for k in range(tcs[d], tce[d] + 1):
                if _uf_find(par[d], labs[d, k]) == r0:
                    size += 1
            orbits[d] = size
        d -= 1
    return best_lab, orbits, status


@njit(**_OPTS)
def relabel(adj, n, lab):
    """Rows of the graph whose vertex k is the original ``lab[k]``."""
    pos = np.empty(n, dtype=np.int64)
    for k in range(n):
        pos[lab[k]] = k
    out = np.zeros(n, dtype=np.uint64)
    for k in range(n):
        r = adj[lab[k]]
        x = U0
        while r != U0:
            u = ctz(r)
            r &= r - U1
            x |= bit(pos[u])
        out[k] = x
    return out


@njit(**_OPTS)
def graph6_bytes(adj, n):
    """graph6 body for n <= 62 as a uint8 array."""
    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    out = np.empty(1 + ngroups, dtype=np.uint8)
    out[0] = n + 63
    acc = 0
    k = 0
    g = 1
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | np.int64((row >> np.uint64(i)) & U1)
            k += 1
            if k == 6:
                out[g] = acc + 63
                g += 1
                acc = 0
                k = 0
    if k > 0:
        out[g] = (acc << (6 - k)) + 63
    return out


@njit(**_OPTS)
def graph6_rows(buf, n):
    """Adjacency rows from a graph6 body; ok is False on a bad byte or padding."""
    adj = np.zeros(max(n, 1), dtype=np.uint64)
    i = 0
    j = 1
    for off in range(1, buf.shape[0]):
        c = np.int64(buf[off])
        if c < 63 or c > 126:
            return adj[:n], False
        val = c - 63
        for b in range(5, -1, -1):
            on = (val >> b) & 1
            if j >= n:
                if on:
                    return adj[:n], False
                continue
            if on:
                adj[i] |= bit(j)
                adj[j] |= bit(i)
            i += 1
            if i == j:
                i = 0
                j += 1
    return adj[:n], True


@njit(**_OPTS)
def canonical_graph6(adj, n):
    lab, orbits, status = canonical_search(adj, n, n + 16)
    return graph6_bytes(relabel(adj, n, lab), n), status


# ------------------------------------------------------- extension search


@njit(**_OPTS)
def _key_len(n):
    return 1 + (n * (n - 1) // 2 + 5) // 6


@njit(**_OPTS)
def _push_key(out, cnt, key):
    if cnt == out.shape[0]:
        grown = np.empty((2 * out.shape[0] + 1, out.shape[1]), dtype=np.uint8)
        grown[:cnt] = out[:cnt]
        out = grown
    out[cnt, :] = key
    return out


@njit(**_OPTS)
def _alpha_without(comp, n, removed, memo):
    rest = full_mask(n) & ~removed
    if rest in memo:
        return memo[rest]
    a = max_clique_within(comp, rest)
    memo[rest] = a
    return a


@njit(**_OPTS)
def extend_parent(adj, n, q, r, t, subs):
    """Canonical keys of all G(N) over admissible r-multisets N of ``subs``.

    ``subs`` are the maximal K_{q-1}-free vertex sets of the parent H.  A
    multiset is admissible when its members pairwise share a K_{q-2} and
    alpha(H - union(N')) <= t - |N'| for every sub-multiset N'.  G(N) adds
    r pairwise non-adjacent vertices with neighbourhoods from N and is kept
    only if it is (+K_q).  Returns (keys, admissible multiset count).
    """
    l = subs.shape[0]
    nn = n + r
    klen = _key_len(nn)
    out = np.empty((16, klen), dtype=np.uint8)
    cnt = 0
    if l == 0 or r == 0:
        return out[:0], 0
    comp = complement_rows(adj, n)
    memo = Dict.empty(key_type=types.uint64, value_type=types.int64)
    # pairwise common (q-2)-clique
    compat = np.zeros((l, l), dtype=np.uint8)
    for i in range(l):
        for j in range(i, l):
            if has_clique(adj, subs[i] & subs[j], q - 2):
                compat[i, j] = 1
                compat[j, i] = 1
    # non-edges of H not already completed inside H
    nbad = 0
    bu = np.empty(n * n // 2 + 1, dtype=np.int64)
    bw = np.empty(n * n // 2 + 1, dtype=np.int64)
    for u in range(n):
        for w in range(u + 1, n):
            if (adj[u] >> np.uint64(w)) & U1:
                continue
            if not has_clique(adj, adj[u] & adj[w], q - 2):
                bu[nbad] = u
                bw[nbad] = w
                nbad += 1
    nw = (nbad + 63) // 64
    if nw == 0:
        nw = 1
    fix = np.zeros((l, nw), dtype=np.uint64)
    for i in range(l):
        m = subs[i]
        for e in range(nbad):
            u = bu[e]
            w = bw[e]
            if (m >> np.uint64(u)) & U1 and (m >> np.uint64(w)) & U1:
                if has_clique(adj, adj[u] & adj[w] & m, q - 3):
                    fix[i, e // 64] |= bit(e % 64)
    need = np.zeros(nw, dtype=np.uint64)
    for e in range(nbad):
        need[e // 64] |= bit(e % 64)
    # suffix unions of fix masks
    suf = np.zeros((l + 1, nw), dtype=np.uint64)
    for i in range(l - 1, -1, -1):
        for w in range(nw):
            suf[i, w] = suf[i + 1, w] | fix[i, w]
    # search state
    width = 1 << r
    un = np.zeros((r + 1, width), dtype=np.uint64)
    usz = np.zeros((r + 1, width), dtype=np.int64)
    cover = np.zeros((r + 1, nw), dtype=np.uint64)
    idx = np.zeros(r, dtype=np.int64)
    un[0, 0] = U0
    usz[0, 0] = 0
    if _alpha_without(comp, n, U0, memo) > t:
        return out[:0], 0
    admissible = 0
    rows = np.empty(nn, dtype=np.uint64)
    k = 0
    idx[0] = -1
    while k >= 0:
        idx[k] += 1
        i = idx[k]
        if i >= l:
            k -= 1
            continue
        # coverage still reachable with the remaining picks
        ok = True
        for w in range(nw):
            if (cover[k, w] | suf[i, w]) & need[w] != need[w]:
                ok = False
                break
        if not ok:
            k -= 1
            continue
        for j in range(k):
            if compat[idx[j], i] == 0:
                ok = False
                break
        if not ok:
            continue
        m = subs[i]
        half = 1 << k
        for s in range(half):
            u2 = un[k, s] | m
            sz = usz[k, s] + 1
            if _alpha_without(comp, n, u2, memo) > t - sz:
                ok = False
                break
            un[k + 1, s] = un[k, s]
            usz[k + 1, s] = usz[k, s]
            un[k + 1, s + half] = u2
            usz[k + 1, s + half] = sz
        if not ok:
            continue
        for w in range(nw):
            cover[k + 1, w] = cover[k, w] | fix[i, w]
        if k + 1 < r:
            k += 1
            idx[k] = i - 1
            continue
        # complete multiset
        full = True
        for w in range(nw):
            if cover[r, w] & need[w] != need[w]:
                full = False
                break
        if not full:
            continue
        admissible += 1
        for u in range(n):
            x = adj[u]
            for j in range(r):
                if (subs[idx[j]] >> np.uint64(u)) & U1:
                    x |= bit(n + j)
            rows[u] = x
        for j in range(r):
            rows[n + j] = subs[idx[j]]
        key, _ = canonical_graph6(rows, nn)
        out = _push_key(out, cnt, key)
        cnt += 1
    return out[:cnt], admissible


@njit(**_OPTS)
def plusk_children(adj, n, k, t, alpha_parent, min_deg=0):
    """Keys of the graphs G - e that stay (+K_k) with alpha <= t and min degree >= min_deg."""
    klen = _key_len(n)
    out = np.empty((16, klen), dtype=np.uint8)
    cnt = 0
    comp = complement_rows(adj, n)
    child = adj.copy()
    for u in range(n):
        r = adj[u] & ~(bit(u + 1) - U1)
        while r != U0:
            w = ctz(r)
            r &= r - U1
            bu = bit(u)
            bw = bit(w)
            if alpha_parent >= t:
                # an independent set of size t+1 would contain u and w
                rest = comp[u] & comp[w] & ~bu & ~bw
                if max_clique_within(comp, rest) >= t - 1:
                    continue
            child[u] = adj[u] & ~bw
            child[w] = adj[w] & ~bu
            if popcount(child[u]) < min_deg or popcount(child[w]) < min_deg:
                keep = False
            else:
                keep = is_plus_kt(child, n, k)
            if keep:
                key, _ = canonical_graph6(child, n)
                out = _push_key(out, cnt, key)
                cnt += 1
            child[u] = adj[u]
            child[w] = adj[w]
    return out[:cnt]


@njit(**_OPTS)
def deletion_children(adj, n):
    """Keys of every single-edge deletion."""
    klen = _key_len(n)
    m = 0
    for u in range(n):
        m += popcount(adj[u])
    m //= 2
    out = np.empty((max(m, 1), klen), dtype=np.uint8)
    cnt = 0
    child = adj.copy()
    for u in range(n):
        r = adj[u] & ~(bit(u + 1) - U1)
        while r != U0:
            w = ctz(r)
            r &= r - U1
            child[u] = adj[u] & ~bit(w)
            child[w] = adj[w] & ~bit(u)
            key, _ = canonical_graph6(child, n)
            out[cnt, :] = key
            cnt += 1
            child[u] = adj[u]
            child[w] = adj[w]
    return out[:cnt]


@njit(**_OPTS)
def addition_children(adj, n, q):
    """Keys of every single-edge addition that stays K_q-free."""
    klen = _key_len(n)
    out = np.empty((16, klen), dtype=np.uint8)
    cnt = 0
    child = adj.copy()
    for u in range(n):
        r = ~adj[u] & full_mask(n) & ~(bit(u + 1) - U1)
        while r != U0:
            w = ctz(r)
            r &= r - U1
            if has_clique(adj, adj[u] & adj[w], q - 2):
                continue
            child[u] = adj[u] | bit(w)
            child[w] = adj[w] | bit(u)
            key, _ = canonical_graph6(child, n)
            out = _push_key(out, cnt, key)
            cnt += 1
            child[u] = adj[u]
            child[w] = adj[w]
    return out[:cnt]
