# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled planarity kernel; mirrors ``_kernel_py`` exactly."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

IMPLEMENTATION = "cython"

cdef enum:
    NONE = -1


cdef struct LR:
    int n
    int m
    int *eu
    int *ev
    unsigned char *active
    # incidence lists (CSR over all edges, filtered by active at use)
    int *inc_start
    int *inc
    int *height
    int *parent_edge
    int *src
    int *tgt
    unsigned char *oriented
    int *lowpt
    int *lowpt2
    int *nesting
    int *ref
    int *lowpt_edge
    int *stack_bottom
    int *ordered
    int *ord_len
    int *ll
    int *lh
    int *rl
    int *rh
    int top


cdef int _alloc(LR *s, int n, int m) except -1:
    s.n = n
    s.m = m
    s.inc_start = <int *> malloc((n + 1) * sizeof(int))
    s.inc = <int *> malloc((2 * m + 1) * sizeof(int))
    s.height = <int *> malloc((n + 1) * sizeof(int))
    s.parent_edge = <int *> malloc((n + 1) * sizeof(int))
    s.src = <int *> malloc((m + 1) * sizeof(int))
    s.tgt = <int *> malloc((m + 1) * sizeof(int))
    s.oriented = <unsigned char *> malloc((m + 1))
    s.lowpt = <int *> malloc((m + 1) * sizeof(int))
    s.lowpt2 = <int *> malloc((m + 1) * sizeof(int))
    s.nesting = <int *> malloc((m + 1) * sizeof(int))
    s.ref = <int *> malloc((m + 1) * sizeof(int))
    s.lowpt_edge = <int *> malloc((m + 1) * sizeof(int))
    s.stack_bottom = <int *> malloc((m + 1) * sizeof(int))
    s.ordered = <int *> malloc((2 * m + 1) * sizeof(int))
    s.ord_len = <int *> malloc((n + 1) * sizeof(int))
    s.ll = <int *> malloc((m + 1) * sizeof(int))
    s.lh = <int *> malloc((m + 1) * sizeof(int))
    s.rl = <int *> malloc((m + 1) * sizeof(int))
    s.rh = <int *> malloc((m + 1) * sizeof(int))
    if not (s.inc_start and s.inc and s.height and s.parent_edge and s.src and s.tgt
            and s.oriented and s.lowpt and s.lowpt2 and s.nesting and s.ref
            and s.lowpt_edge and s.stack_bottom and s.ordered and s.ord_len
            and s.ll and s.lh and s.rl and s.rh):
        raise MemoryError()
    return 0


cdef void _release(LR *s):
    free(s.inc_start); free(s.inc); free(s.height); free(s.parent_edge)
    free(s.src); free(s.tgt); free(s.oriented); free(s.lowpt); free(s.lowpt2)
    free(s.nesting); free(s.ref); free(s.lowpt_edge); free(s.stack_bottom)
    free(s.ordered); free(s.ord_len); free(s.ll); free(s.lh); free(s.rl); free(s.rh)


cdef void _build_incidence(LR *s):
    cdef int v, e, n = s.n, m = s.m
    for v in range(n + 1):
        s.inc_start[v] = 0
    for e in range(m):
        s.inc_start[s.eu[e] + 1] += 1
        s.inc_start[s.ev[e] + 1] += 1
    for v in range(n):
        s.inc_start[v + 1] += s.inc_start[v]
    # ord_len doubles as a fill cursor here
    for v in range(n):
        s.ord_len[v] = s.inc_start[v]
    for e in range(m):
        s.inc[s.ord_len[s.eu[e]]] = e
        s.ord_len[s.eu[e]] += 1
        s.inc[s.ord_len[s.ev[e]]] = e
        s.ord_len[s.ev[e]] += 1


cdef inline int _imin(int a, int b) nogil:
    return a if a < b else b


cdef void _orient(LR *s, int v):
    cdef int e = s.parent_edge[v]
    cdef int k, ei, w
    for k in range(s.inc_start[v], s.inc_start[v + 1]):
        ei = s.inc[k]
        if not s.active[ei] or s.oriented[ei]:
            continue
        s.oriented[ei] = 1
        w = s.ev[ei] if s.eu[ei] == v else s.eu[ei]
        s.src[ei] = v
        s.tgt[ei] = w
        s.lowpt[ei] = s.height[v]
        s.lowpt2[ei] = s.height[v]
        if s.height[w] == NONE:
            s.parent_edge[w] = ei
            s.height[w] = s.height[v] + 1
            _orient(s, w)
        else:
            s.lowpt[ei] = s.height[w]
        s.nesting[ei] = 2 * s.lowpt[ei] + (1 if s.lowpt2[ei] < s.height[v] else 0)
        if e != NONE:
            if s.lowpt[ei] < s.lowpt[e]:
                s.lowpt2[e] = _imin(s.lowpt[e], s.lowpt2[ei])
                s.lowpt[e] = s.lowpt[ei]
            elif s.lowpt[ei] > s.lowpt[e]:
                s.lowpt2[e] = _imin(s.lowpt2[e], s.lowpt[ei])
            else:
                s.lowpt2[e] = _imin(s.lowpt2[e], s.lowpt2[ei])
        s.ordered[s.inc_start[v] + s.ord_len[v]] = ei
        s.ord_len[v] += 1


cdef void _sort_ordered(LR *s):
    # insertion sort by nesting depth; stable like Python's sort
    cdef int v, i, j, base, x, key
    for v in range(s.n):
        base = s.inc_start[v]
        for i in range(1, s.ord_len[v]):
            x = s.ordered[base + i]
            key = s.nesting[x]
            j = i - 1
            while j >= 0 and s.nesting[s.ordered[base + j]] > key:
                s.ordered[base + j + 1] = s.ordered[base + j]
                j -= 1
            s.ordered[base + j + 1] = x


cdef inline bint _conflicting(LR *s, int high, int b):
    return high != NONE and s.lowpt[high] > s.lowpt[b]


cdef inline int _lowest(LR *s, int i):
    if s.ll[i] == NONE:
        return s.lowpt[s.rl[i]]
    if s.rl[i] == NONE:
        return s.lowpt[s.ll[i]]
    return _imin(s.lowpt[s.ll[i]], s.lowpt[s.rl[i]])


cdef inline void _push(LR *s, int ll, int lh, int rl, int rh):
    s.ll[s.top] = ll
    s.lh[s.top] = lh
    s.rl[s.top] = rl
    s.rh[s.top] = rh
    s.top += 1


cdef bint _add_constraints(LR *s, int ei, int e):
    cdef int pll = NONE, plh = NONE, prl = NONE, prh = NONE
    cdef int qll, qlh, qrl, qrh, t
    while True:
        s.top -= 1
        qll = s.ll[s.top]; qlh = s.lh[s.top]; qrl = s.rl[s.top]; qrh = s.rh[s.top]
        if qll != NONE:
            t = qll; qll = qrl; qrl = t
            t = qlh; qlh = qrh; qrh = t
        if qll != NONE:
            return False
        if s.lowpt[qrl] > s.lowpt[e]:
            if prl == NONE:
                prh = qrh
            else:
                s.ref[prl] = qrh
            prl = qrl
        else:
            s.ref[qrl] = s.lowpt_edge[e]
        if s.top == s.stack_bottom[ei]:
            break
    while s.top > 0 and (_conflicting(s, s.lh[s.top - 1], ei) or _conflicting(s, s.rh[s.top - 1], ei)):
        s.top -= 1
        qll = s.ll[s.top]; qlh = s.lh[s.top]; qrl = s.rl[s.top]; qrh = s.rh[s.top]
        if _conflicting(s, qrh, ei):
            t = qll; qll = qrl; qrl = t
            t = qlh; qlh = qrh; qrh = t
        if _conflicting(s, qrh, ei):
            return False
        if prl != NONE:
            s.ref[prl] = qrh
        if qrl != NONE:
            prl = qrl
        if pll == NONE:
            plh = qlh
        else:
            s.ref[pll] = qlh
        pll = qll
    if pll != NONE or prl != NONE:
        _push(s, pll, plh, prl, prh)
    return True


cdef void _remove_back_edges(LR *s, int e):
    cdef int u = s.src[e]
    cdef int hu = s.height[u]
    cdef int pll, plh, prl, prh, hl, hr
    while s.top > 0 and _lowest(s, s.top - 1) == hu:
        s.top -= 1
    if s.top > 0:
        s.top -= 1
        pll = s.ll[s.top]; plh = s.lh[s.top]; prl = s.rl[s.top]; prh = s.rh[s.top]
        while plh != NONE and s.tgt[plh] == u:
            plh = s.ref[plh]
        if plh == NONE and pll != NONE:
            s.ref[pll] = prl
            pll = NONE
        while prh != NONE and s.tgt[prh] == u:
            prh = s.ref[prh]
        if prh == NONE and prl != NONE:
            s.ref[prl] = pll
            prl = NONE
        _push(s, pll, plh, prl, prh)
    if s.lowpt[e] < hu and s.top > 0:
        hl = s.lh[s.top - 1]
        hr = s.rh[s.top - 1]
        if hl != NONE and (hr == NONE or s.lowpt[hl] > s.lowpt[hr]):
            s.ref[e] = hl
        else:
            s.ref[e] = hr


cdef bint _test(LR *s, int v):
    cdef int e = s.parent_edge[v]
    cdef int k, ei, w
    cdef int base = s.inc_start[v]
    for k in range(s.ord_len[v]):
        ei = s.ordered[base + k]
        w = s.tgt[ei]
        s.stack_bottom[ei] = s.top
        if ei == s.parent_edge[w]:
            if not _test(s, w):
                return False
        else:
            s.lowpt_edge[ei] = ei
            _push(s, NONE, NONE, ei, ei)
        if s.lowpt[ei] < s.height[v]:
            if k == 0:
                s.lowpt_edge[e] = s.lowpt_edge[ei]
            elif not _add_constraints(s, ei, e):
                return False
    if e != NONE:
        _remove_back_edges(s, e)
    return True


cdef bint _planar(LR *s):
    cdef int v, e, m_act = 0
    for e in range(s.m):
        if s.active[e]:
            m_act += 1
    if s.n > 2 and m_act > 3 * s.n - 6:
        return False
    if m_act < 9:
        return True
    for v in range(s.n):
        s.height[v] = NONE
        s.parent_edge[v] = NONE
        s.ord_len[v] = 0
    memset(s.oriented, 0, s.m)
    for e in range(s.m):
        s.ref[e] = NONE
        s.lowpt_edge[e] = NONE
    s.top = 0
    for v in range(s.n):
        if s.height[v] == NONE:
            s.height[v] = 0
            _orient(s, v)
    _sort_ordered(s)
    for v in range(s.n):
        if s.parent_edge[v] == NONE:
            if not _test(s, v):
                return False
    return True


cdef void _strip_pendant(LR *s, int *deg, int *stack):
    cdef int v, w, e, k, sp = 0
    for v in range(s.n):
        deg[v] = 0
    for e in range(s.m):
        if s.active[e]:
            deg[s.eu[e]] += 1
            deg[s.ev[e]] += 1
    for v in range(s.n):
        if deg[v] == 1:
            stack[sp] = v
            sp += 1
    while sp > 0:
        sp -= 1
        v = stack[sp]
        if deg[v] != 1:
            continue
        for k in range(s.inc_start[v], s.inc_start[v + 1]):
            e = s.inc[k]
            if s.active[e]:
                s.active[e] = 0
                deg[v] -= 1
                w = s.ev[e] if s.eu[e] == v else s.eu[e]
                deg[w] -= 1
                if deg[w] == 1:
                    stack[sp] = w
                    sp += 1
                break


cdef bint _kuratowski(LR *s, int *deg, int *stack):
    """Shrink the active set to an edge-minimal non-planar subgraph."""
    cdef int e
    if _planar(s):
        return False
    _strip_pendant(s, deg, stack)
    for e in range(s.m):
        if not s.active[e]:
            continue
        s.active[e] = 0
        if _planar(s):
            s.active[e] = 1
        else:
            _strip_pendant(s, deg, stack)
    return True


cdef class _Graph:
    cdef LR s
    cdef int *deg
    cdef int *stack

    def __cinit__(self, int n, eu, ev, active):
        cdef int m = len(eu)
        cdef int e
        memset(&self.s, 0, sizeof(LR))
        _alloc(&self.s, n, m)
        self.s.eu = <int *> malloc((m + 1) * sizeof(int))
        self.s.ev = <int *> malloc((m + 1) * sizeof(int))
        self.s.active = <unsigned char *> malloc(m + 1)
        self.deg = <int *> malloc((n + 1) * sizeof(int))
        self.stack = <int *> malloc((2 * n + 2 * m + 1) * sizeof(int))
        if not (self.s.eu and self.s.ev and self.s.active and self.deg and self.stack):
            raise MemoryError()
        for e in range(m):
            self.s.eu[e] = eu[e]
            self.s.ev[e] = ev[e]
            if eu[e] < 0 or eu[e] >= n or ev[e] < 0 or ev[e] >= n:
                raise ValueError("edge endpoint out of range")
            self.s.active[e] = 1 if (active is None or active[e]) else 0
        _build_incidence(&self.s)

    def __dealloc__(self):
        _release(&self.s)
        free(self.s.eu)
        free(self.s.ev)
        free(self.s.active)
        free(self.deg)
        free(self.stack)


def planar(int n, eu, ev, active=None):
    """True iff the graph formed by the active edges is planar."""
    cdef _Graph g = _Graph(n, eu, ev, active)
    return bool(_planar(&g.s))


def kuratowski(int n, eu, ev, active=None):
    """Edge indices of an edge-minimal non-planar subgraph, or None if planar."""
    cdef _Graph g = _Graph(n, eu, ev, active)
    cdef int e
    if not _kuratowski(&g.s, g.deg, g.stack):
        return None
    return [e for e in range(g.s.m) if g.s.active[e]]


def kuratowski_packing(int n, eu, ev, int limit):
    """Greedy family of pairwise edge-disjoint minimal non-planar subgraphs."""
    cdef _Graph g = _Graph(n, eu, ev, None)
    cdef int m = g.s.m
    cdef int e
    cdef unsigned char *used = <unsigned char *> malloc(m + 1)
    found = []
    if not used:
        raise MemoryError()
    try:
        memset(used, 0, m)
        while len(found) < limit:
            for e in range(m):
                g.s.active[e] = 0 if used[e] else 1
            if not _kuratowski(&g.s, g.deg, g.stack):
                break
            k = []
            for e in range(m):
                if g.s.active[e]:
                    used[e] = 1
                    k.append(e)
            found.append(k)
    finally:
        free(used)
    return found
