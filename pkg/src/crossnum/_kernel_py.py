"""Pure-Python planarity kernel.

Same interface and results as the compiled ``_kernel`` extension. Graphs are
passed as a vertex count plus two parallel endpoint sequences; an optional
``active`` byte mask selects the edges that take part.

The planarity test is the left-right (LR) criterion: a DFS orientation with
lowpoints, followed by the constraint-stack test. Only the yes/no answer is
computed here; embeddings are produced elsewhere.
"""

from __future__ import annotations

from typing import Sequence

IMPLEMENTATION = "python"

_NONE = -1


class _LR:
    __slots__ = (
        "n", "adj", "height", "parent_edge", "src", "tgt", "oriented",
        "lowpt", "lowpt2", "nesting", "ref", "lowpt_edge", "stack_bottom",
        "ll", "lh", "rl", "rh", "ordered", "_eu", "_ev",
    )

    def __init__(self, n: int, eu: Sequence[int], ev: Sequence[int], active) -> None:
        m = len(eu)
        self.n = n
        adj: list[list[int]] = [[] for _ in range(n)]
        for e in range(m):
            if active is None or active[e]:
                adj[eu[e]].append(e)
                adj[ev[e]].append(e)
        self.adj = adj
        self.height = [_NONE] * n
        self.parent_edge = [_NONE] * n
        self.src = [0] * m
        self.tgt = [0] * m
        self.oriented = [False] * m
        self.lowpt = [0] * m
        self.lowpt2 = [0] * m
        self.nesting = [0] * m
        self.ref = [_NONE] * m
        self.lowpt_edge = [_NONE] * m
        self.stack_bottom = [0] * m
        # conflict-pair stack, one list per interval end
        self.ll: list[int] = []
        self.lh: list[int] = []
        self.rl: list[int] = []
        self.rh: list[int] = []
        self.ordered: list[list[int]] = [[] for _ in range(n)]
        self._eu = eu
        self._ev = ev

    # phase 1 --------------------------------------------------------------

    def orient(self, v: int) -> None:
        e = self.parent_edge[v]
        height, lowpt, lowpt2 = self.height, self.lowpt, self.lowpt2
        for ei in self.adj[v]:
            if self.oriented[ei]:
                continue
            self.oriented[ei] = True
            w = self._ev[ei] if self._eu[ei] == v else self._eu[ei]
            self.src[ei] = v
            self.tgt[ei] = w
            lowpt[ei] = height[v]
            lowpt2[ei] = height[v]
            if height[w] == _NONE:
                self.parent_edge[w] = ei
                height[w] = height[v] + 1
                self.orient(w)
            else:
                lowpt[ei] = height[w]
            self.nesting[ei] = 2 * lowpt[ei] + (1 if lowpt2[ei] < height[v] else 0)
            if e != _NONE:
                if lowpt[ei] < lowpt[e]:
                    lowpt2[e] = min(lowpt[e], lowpt2[ei])
                    lowpt[e] = lowpt[ei]
                elif lowpt[ei] > lowpt[e]:
                    lowpt2[e] = min(lowpt2[e], lowpt[ei])
                else:
                    lowpt2[e] = min(lowpt2[e], lowpt2[ei])
            self.ordered[v].append(ei)

    # phase 2 --------------------------------------------------------------

    def _conflicting(self, high: int, b: int) -> bool:
        return high != _NONE and self.lowpt[high] > self.lowpt[b]

    def _lowest(self, i: int) -> int:
        lowpt = self.lowpt
        if self.ll[i] == _NONE:
            return lowpt[self.rl[i]]
        if self.rl[i] == _NONE:
            return lowpt[self.ll[i]]
        return min(lowpt[self.ll[i]], lowpt[self.rl[i]])

    def _push(self, ll: int, lh: int, rl: int, rh: int) -> None:
        self.ll.append(ll)
        self.lh.append(lh)
        self.rl.append(rl)
        self.rh.append(rh)

    def _pop(self) -> tuple[int, int, int, int]:
        return self.ll.pop(), self.lh.pop(), self.rl.pop(), self.rh.pop()

    def test(self, v: int) -> bool:
        e = self.parent_edge[v]
        first = True
        for ei in self.ordered[v]:
            w = self.tgt[ei]
            self.stack_bottom[ei] = len(self.ll)
            if ei == self.parent_edge[w]:
                if not self.test(w):
                    return False
            else:
                self.lowpt_edge[ei] = ei
                self._push(_NONE, _NONE, ei, ei)
            if self.lowpt[ei] < self.height[v]:
                if first:
                    self.lowpt_edge[e] = self.lowpt_edge[ei]
                elif not self._add_constraints(ei, e):
                    return False
            first = False
        if e != _NONE:
            self._remove_back_edges(e)
        return True

    def _add_constraints(self, ei: int, e: int) -> bool:
        lowpt, ref = self.lowpt, self.ref
        pll = plh = prl = prh = _NONE
        while True:
            qll, qlh, qrl, qrh = self._pop()
            if qll != _NONE:
                qll, qlh, qrl, qrh = qrl, qrh, qll, qlh
            if qll != _NONE:
                return False
            if lowpt[qrl] > lowpt[e]:
                if prl == _NONE:
                    prh = qrh
                else:
                    ref[prl] = qrh
                prl = qrl
            else:
                ref[qrl] = self.lowpt_edge[e]
            if len(self.ll) == self.stack_bottom[ei]:
                break
        while self.ll and (self._conflicting(self.lh[-1], ei) or self._conflicting(self.rh[-1], ei)):
            qll, qlh, qrl, qrh = self._pop()
            if self._conflicting(qrh, ei):
                qll, qlh, qrl, qrh = qrl, qrh, qll, qlh
            if self._conflicting(qrh, ei):
                return False
            if prl != _NONE:
                ref[prl] = qrh
            if qrl != _NONE:
                prl = qrl
            if pll == _NONE:
                plh = qlh
            else:
                ref[pll] = qlh
            pll = qll
        if pll != _NONE or prl != _NONE:
            self._push(pll, plh, prl, prh)
        return True

    def _remove_back_edges(self, e: int) -> None:
        u = self.src[e]
        hu = self.height[u]
        ref, tgt = self.ref, self.tgt
        while self.ll and self._lowest(len(self.ll) - 1) == hu:
            self._pop()
        if self.ll:
            pll, plh, prl, prh = self._pop()
            while plh != _NONE and tgt[plh] == u:
                plh = ref[plh]
            if plh == _NONE and pll != _NONE:
                ref[pll] = prl
                pll = _NONE
            while prh != _NONE and tgt[prh] == u:
                prh = ref[prh]
            if prh == _NONE and prl != _NONE:
                ref[prl] = pll
                prl = _NONE
            self._push(pll, plh, prl, prh)
        if self.lowpt[e] < hu and self.ll:
            hl, hr = self.lh[-1], self.rh[-1]
            if hl != _NONE and (hr == _NONE or self.lowpt[hl] > self.lowpt[hr]):
                ref[e] = hl
            else:
                ref[e] = hr


def planar(n: int, eu: Sequence[int], ev: Sequence[int], active=None) -> bool:
    """True iff the graph formed by the active edges is planar."""
    m = len(eu) if active is None else sum(1 for a in active if a)
    if n > 2 and m > 3 * n - 6:
        return False
    if m < 9:
        return True
    lr = _LR(n, eu, ev, active)
    roots = []
    for v in range(n):
        if lr.height[v] == _NONE:
            lr.height[v] = 0
            roots.append(v)
            lr.orient(v)
    nesting = lr.nesting
    for v in range(n):
        lr.ordered[v].sort(key=nesting.__getitem__)
    for r in roots:
        if not lr.test(r):
            return False
    return True


def kuratowski(n: int, eu: Sequence[int], ev: Sequence[int], active=None) -> list[int] | None:
    """Edge indices of an edge-minimal non-planar subgraph, or None if planar.

    Edges are tried for deletion in index order; an edge is kept only if
    removing it would make the remainder planar. The result is therefore a
    subdivision of K5 or K3,3.
    """
    m = len(eu)
    mask = bytearray(m) if active is None else bytearray(active)
    if active is None:
        for e in range(m):
            mask[e] = 1
    if planar(n, eu, ev, mask):
        return None
    _strip_pendant(n, eu, ev, mask)
    for e in range(m):
        if not mask[e]:
            continue
        mask[e] = 0
        if planar(n, eu, ev, mask):
            mask[e] = 1
        else:
            _strip_pendant(n, eu, ev, mask)
    return [e for e in range(m) if mask[e]]


def _strip_pendant(n: int, eu: Sequence[int], ev: Sequence[int], mask: bytearray) -> None:
    deg = [0] * n
    inc: list[list[int]] = [[] for _ in range(n)]
    for e in range(len(eu)):
        if mask[e]:
            deg[eu[e]] += 1
            deg[ev[e]] += 1
            inc[eu[e]].append(e)
            inc[ev[e]].append(e)
    stack = [v for v in range(n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        if deg[v] != 1:
            continue
        for e in inc[v]:
            if mask[e]:
                mask[e] = 0
                deg[v] -= 1
                w = ev[e] if eu[e] == v else eu[e]
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
                break


def kuratowski_packing(n: int, eu: Sequence[int], ev: Sequence[int], limit: int) -> list[list[int]]:
    """Greedy family of pairwise edge-disjoint minimal non-planar subgraphs.

    Stops after ``limit`` subgraphs or once the remaining edges are planar.
    """
    m = len(eu)
    active = bytearray(b"\x01" * m)
    found: list[list[int]] = []
    while len(found) < limit:
        k = kuratowski(n, eu, ev, active)
        if k is None:
            break
        found.append(k)
        for e in k:
            active[e] = 0
    return found
