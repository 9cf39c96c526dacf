"""Exact crossing numbers by Kuratowski-guided branch and bound.

A search node commits to a set of crossing pairs together with the order of
the crossings along every edge. Its planarization either is planar (a drawing
is found) or contains a Kuratowski subdivision K. Any good drawing extending
the node draws K with a crossing between two independent branches of K
(Hanani-Tutte), so the node branches on those edge pairs, each at every
insertion position along both edges. Once a pair has been explored, later
siblings forbid it. At the root a whole automorphism orbit of pairs is
forbidden at once.

Pruning is a hitting-set argument. A pool of Kuratowski subgraphs of g is
collected once from random edge-deletion orders; each contributes the set of
pairs one of which every drawing must cross. At a node, the pool sets not yet
hit by a committed pair, together with the candidate sets of Kuratowski
subgraphs of the planarization, must be hit by the remaining budget of new,
non-forbidden pairs. The bound is exact for one or two remaining crossings,
an LP relaxation deeper in the tree and an integer program at the root.
"""

from __future__ import annotations

import enum
import itertools
import json
import math
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from scipy import sparse
from scipy.optimize import Bounds, LinearConstraint, milp

from . import kernel
from .drawing import (
    DrawingCertificate,
    realize,
    reinsert_edge,
    validate_certificate,
)
from .graph import Graph
from .symmetry import automorphism_group, edge_pair_orbits


@dataclass(frozen=True)
class SearchBudget:
    max_seconds: float = 4 * 3600.0
    max_nodes: int | None = None
    workers: int = 1

    def __post_init__(self) -> None:
        if self.max_seconds <= 0 or self.workers <= 0 or (self.max_nodes is not None and self.max_nodes <= 0):
            raise ValueError("budget values must be positive")


@dataclass
class SearchStats:
    nodes: int = 0
    planarity_calls: int = 0
    seconds: float = 0.0

    def add(self, other: SearchStats) -> None:
        self.nodes += other.nodes
        self.planarity_calls += other.planarity_calls
        self.seconds += other.seconds


class Status(enum.Enum):
    FOUND = "found"
    REFUTED = "refuted"
    TIMEOUT = "timeout"


@dataclass
class Decision:
    status: Status
    certificate: DrawingCertificate | None = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND

    @property
    def refuted(self) -> bool:
        return self.status is Status.REFUTED


@dataclass
class SolveResult:
    value: int | None
    certificate: DrawingCertificate | None
    refutation_k: int
    stats: SearchStats
    timed_out: bool = False
    upper_bound: int | None = None


class _OutOfBudget(Exception):
    pass


class _Done(Exception):
    def __init__(self, sequences: dict[tuple[int, int], list[tuple[int, int]]]):
        self.sequences = sequences


def euler_lower_bound(g: Graph) -> int:
    if g.vertex_count < 3:
        return 0
    return max(0, g.edge_count - 3 * g.vertex_count + 6)


@dataclass
class _Task:
    """A subtree root: committed crossings, their orders, forbidden pairs."""

    crossings: list[tuple[int, int]]
    orders: list[list[int]]
    forbidden: set[int]


class _Search:
    def __init__(self, g: Graph, k: int, *, symmetry: bool = True, seed: int | None = None,
                 deadline: float | None = None, max_nodes: int | None = None,
                 bounds: bool = True, pool_attempts: int = 2000, root_ilp_seconds: float = 120.0):
        self.g = g
        self.k = k
        self.n = g.vertex_count
        self.m = g.edge_count
        self.eu = [u for u, _ in g.edges]
        self.ev = [w for _, w in g.edges]
        m = self.m
        self.independent = [[not ({self.eu[a], self.ev[a]} & {self.eu[b], self.ev[b]}) for b in range(m)] for a in range(m)]
        self.rng = random.Random(seed) if seed is not None else None
        self.deadline = deadline
        self.max_nodes = max_nodes
        self.stats = SearchStats()
        self.orbit_members: dict[int, list[int]] | None = None
        self.orbit_of: dict[int, int] | None = None
        self.bounds = bounds
        self.noise = 0.5
        self.root_ilp_seconds = root_ilp_seconds if bounds else 0.0
        if symmetry:
            self._init_orbits()
        self._build_pool(pool_attempts if bounds else 0)

    def _init_orbits(self) -> None:
        gens, order = automorphism_group(self.g)
        if order == 1:
            return
        m = self.m
        pairs = [(a, b) for a in range(m) for b in range(a + 1, m) if self.independent[a][b]]
        label = edge_pair_orbits(self.g, gens, pairs)
        self.orbit_of = {a * m + b: lab for (a, b), lab in label.items()}
        self.orbit_members = {}
        for key, lab in self.orbit_of.items():
            self.orbit_members.setdefault(lab, []).append(key)

    # -- planarization of a node ---------------------------------------------------

    def _planarization(self, crossings, orders):
        n = self.n
        pu, pv, owner = [], [], []
        for e in range(self.m):
            prev = self.eu[e]
            for cid in orders[e]:
                x = n + cid
                pu.append(prev)
                pv.append(x)
                owner.append(e)
                prev = x
            pu.append(prev)
            pv.append(self.ev[e])
            owner.append(e)
        return n + len(crossings), pu, pv, owner

    def _candidates(self, kedges, pu, pv, owner, crossed, forbidden) -> list[tuple[int, int]]:
        inc: dict[int, list[int]] = {}
        for s in kedges:
            inc.setdefault(pu[s], []).append(s)
            inc.setdefault(pv[s], []).append(s)
        branch_vertices = [v for v, es in inc.items() if len(es) > 2]
        seen: set[int] = set()
        branches: list[tuple[frozenset[int], list[int]]] = []
        for b in branch_vertices:
            for s in inc[b]:
                if s in seen:
                    continue
                segs = []
                prev, cur = b, s
                while True:
                    seen.add(cur)
                    segs.append(cur)
                    nxt = pv[cur] if pu[cur] == prev else pu[cur]
                    if len(inc[nxt]) > 2:
                        break
                    a, c = inc[nxt]
                    prev, cur = nxt, (c if a == cur else a)
                branches.append((frozenset((b, nxt)), segs))
        m = self.m
        indep = self.independent
        out = set()
        for (ends1, segs1), (ends2, segs2) in itertools.combinations(branches, 2):
            if ends1 & ends2:
                continue
            for s1 in segs1:
                e = owner[s1]
                row = indep[e]
                for s2 in segs2:
                    f = owner[s2]
                    if not row[f]:
                        continue
                    key = e * m + f if e < f else f * m + e
                    if key in crossed or key in forbidden:
                        continue
                    out.add(key)
        return sorted(out)

    # -- search --------------------------------------------------------------------

    def _tick(self) -> None:
        st = self.stats
        st.nodes += 1
        if self.max_nodes is not None and st.nodes > self.max_nodes:
            raise _OutOfBudget
        if self.deadline is not None and time.perf_counter() > self.deadline:
            raise _OutOfBudget

    def _found(self, crossings, orders):
        seqs = {}
        for e in range(self.m):
            if orders[e]:
                seqs[self.g.edges[e]] = [self.g.edges[_partner(crossings[c], e)] for c in orders[e]]
        raise _Done(seqs)

    # -- hitting-set bounds ------------------------------------------------------

    def _build_pool(self, attempts: int) -> None:
        """Candidate sets of Kuratowski subgraphs of g itself, found by random deletion orders.

        Every drawing crosses some pair of each set, so the pool bounds every
        node of the search. Supersets are dropped since they never bind.
        """
        m = self.m
        pairs = [a * m + b for a in range(m) for b in range(a + 1, m) if self.independent[a][b]]
        self.pair_keys = pairs
        self.pair_bit = {key: i for i, key in enumerate(pairs)}
        self.pool: list[int] = []
        if attempts <= 0 or kernel.planar(self.n, self.eu, self.ev):
            return
        rng = random.Random(0x5EED)
        found: set[int] = set()
        idle = 0
        perm = list(range(m))
        for _ in range(attempts):
            if self.deadline is not None and time.perf_counter() > self.deadline:
                break  # a smaller pool is still a valid bound
            rng.shuffle(perm)
            kk = kernel.kuratowski(self.n, [self.eu[i] for i in perm], [self.ev[i] for i in perm])
            cand = self._candidates([perm[i] for i in kk], self.eu, self.ev, list(range(m)), (), ())
            mask = self._mask(cand)
            if mask in found:
                idle += 1
                if idle > 4 * m:
                    break
                continue
            idle = 0
            found.add(mask)
        masks = sorted(found, key=_popcount)
        kept: list[int] = []
        for mk in masks:
            if not any(k & mk == k for k in kept):
                kept.append(mk)
        self.pool = kept

    def _mask(self, keys) -> int:
        bit = self.pair_bit
        mask = 0
        for key in keys:
            mask |= 1 << bit[key]
        return mask

    def _keys(self, mask: int) -> list[int]:
        out = []
        keys = self.pair_keys
        while mask:
            low = mask & -mask
            out.append(keys[low.bit_length() - 1])
            mask ^= low
        return out

    def _lp_bound(self, sets: list[int], integral: bool = False) -> tuple[float, dict[int, float]]:
        """Fractional (or integral) minimum hitting set of ``sets``, with the optimal weights."""
        cols: dict[int, int] = {}
        rows, idx = [], []
        for r, mk in enumerate(sets):
            while mk:
                low = mk & -mk
                b = low.bit_length() - 1
                rows.append(r)
                idx.append(cols.setdefault(b, len(cols)))
                mk ^= low
        a = sparse.csr_matrix((np.ones(len(rows)), (rows, idx)), shape=(len(sets), len(cols)))
        c = np.ones(len(cols))
        opts = {}
        if integral:
            limit = self.root_ilp_seconds
            if self.deadline is not None:
                limit = min(limit, max(0.01, self.deadline - time.perf_counter()))
            opts["time_limit"] = limit
        res = milp(c, constraints=LinearConstraint(a, 1, np.inf), bounds=Bounds(0, 1),
                   integrality=np.full(len(cols), 1 if integral else 0), options=opts)
        if integral:
            bound = getattr(res, "mip_dual_bound", None)
            if bound is None or not np.isfinite(bound):
                bound = res.fun if res.success else 0.0
        else:
            bound = res.fun if res.status == 0 else 0.0
        weights = {}
        if res.x is not None:
            for b, j in cols.items():
                weights[self.pair_keys[b]] = float(res.x[j])
        return float(bound), weights

    # -- search ----------------------------------------------------------------------

    def expand(self, crossings, orders, forbidden, *, root: bool = False, on_branch=None, skip=None, branch=None):
        """Explore one node; raises ``_Done`` on success, returns on exhaustion."""
        self._tick()
        s = len(crossings)
        k = self.k
        r = k - s
        m = self.m
        np_, pu, pv, owner = self._planarization(crossings, orders)
        self.stats.planarity_calls += 1
        if r == 0:
            if kernel.planar(np_, pu, pv):
                self._found(crossings, orders)
            return
        bit = self.pair_bit
        cmask = 0
        for a, b in crossings:
            cmask |= 1 << bit[a * m + b]
        fmask = 0
        for key in forbidden:
            fmask |= 1 << bit[key]
        live = ~fmask
        sets = []
        for mk in self.pool:
            if not mk & cmask:
                mk &= live
                if not mk:
                    return
                sets.append(mk)
        if _disjoint_count(sets, r + 1) > r:
            return
        packs = kernel.kuratowski_packing(np_, pu, pv, r + 1)
        if not packs:
            self._found(crossings, orders)
        if len(packs) > r:
            return
        crossed = {a * m + b for a, b in crossings}
        for kedges in packs:
            cand = self._candidates(kedges, pu, pv, owner, crossed, forbidden)
            if not cand:
                return
            sets.append(self._mask(cand))
        sets.sort(key=_popcount)
        weights = None
        if r == 1:
            inter = sets[0]
            for mk in sets[1:]:
                inter &= mk
            if not inter:
                return
            choice = inter
        elif r == 2:
            choice = _pairs_hitting(sets)
            if not choice:
                return
        elif self.bounds:
            if root and self.root_ilp_seconds > 0:
                bound, weights = self._lp_bound(sets, integral=True)
            else:
                bound, weights = self._lp_bound(sets)
            if math.ceil(bound - 1e-6) > r:
                return
            choice = sets[0]
        else:
            choice = sets[0]
        best = self._keys(choice)
        if self.rng is not None:
            self.rng.shuffle(best)
            if weights:
                noise = {key: self.rng.random() * self.noise for key in best}
                best.sort(key=lambda key: -weights.get(key, 0.0) - noise[key])
        elif weights:
            best.sort(key=lambda key: -weights.get(key, 0.0))
        added: list[int] = []
        done_orbits: set[int] = set()
        try:
            for idx, key in enumerate(best):
                if key in forbidden:
                    continue
                use_orbit = root and self.orbit_of is not None
                if use_orbit and self.orbit_of[key] in done_orbits:
                    continue
                if skip is None or idx not in skip:
                    (branch or self._branch)(key, crossings, orders, forbidden)
                if on_branch is not None:
                    on_branch(idx)
                if use_orbit:
                    lab = self.orbit_of[key]
                    done_orbits.add(lab)
                    members = self.orbit_members[lab]
                else:
                    members = [key]
                for x in members:
                    if x not in forbidden:
                        forbidden.add(x)
                        added.append(x)
        finally:
            for x in added:
                forbidden.discard(x)

    def children(self, key, crossings, orders):
        """All (crossings, orders) obtained by adding pair ``key`` at every position."""
        e, f = divmod(key, self.m)
        cid = len(crossings)
        pe = range(len(orders[e]) + 1)
        pf = range(len(orders[f]) + 1)
        combos = [(p, q) for p in pe for q in pf]
        if self.rng is not None:
            self.rng.shuffle(combos)
        for p, q in combos:
            oe, of = orders[e], orders[f]
            new_orders = list(orders)
            new_orders[e] = oe[:p] + [cid] + oe[p:]
            new_orders[f] = of[:q] + [cid] + of[q:]
            yield crossings + [(e, f)], new_orders

    def _branch(self, key, crossings, orders, forbidden):
        for cr, od in self.children(key, crossings, orders):
            self.expand(cr, od, forbidden)

    def root_tasks(self) -> list[_Task]:
        """Children of the root with the forbidden sets they inherit."""
        tasks: list[_Task] = []

        def record(key, crossings, orders, forbidden):
            for cr, od in self.children(key, crossings, orders):
                tasks.append(_Task(cr, od, set(forbidden)))

        self.expand([], [[] for _ in range(self.m)], set(), root=True, branch=record)
        return tasks


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _disjoint_count(sets: list[int], stop: int) -> int:
    """Greedy count of pairwise disjoint sets, smallest first; a hitting-set lower bound."""
    used = 0
    count = 0
    for mk in sorted(sets, key=_popcount):
        if not mk & used:
            used |= mk
            count += 1
            if count >= stop:
                break
    return count


def _pairs_hitting(sets: list[int]) -> int:
    """Elements x of ``sets[0]`` such that {x, y} hits every set for some y."""
    out = 0
    first = sets[0]
    while first:
        low = first & -first
        first ^= low
        rest = -1
        for mk in sets[1:]:
            if not mk & low:
                rest &= mk
                if not rest:
                    break
        if rest:
            out |= low
    return out


def _partner(pair: tuple[int, int], e: int) -> int:
    return pair[1] if pair[0] == e else pair[0]


def _certificate(g: Graph, seqs) -> DrawingCertificate:
    """Embed a found configuration, smoothing touching crossings, and check the result."""
    cert = realize(g, seqs)
    problems = validate_certificate(cert)
    if problems:
        raise RuntimeError("solver produced an invalid certificate: " + "; ".join(problems))
    return cert


def _run_task(args):
    g, k, task, symmetry, seed, seconds, max_nodes = args
    deadline = time.perf_counter() + seconds if seconds is not None else None
    s = _Search(g, k, symmetry=False, seed=seed, deadline=deadline, max_nodes=max_nodes)
    t0 = time.perf_counter()
    try:
        s.expand(task.crossings, task.orders, task.forbidden)
        status, seqs = Status.REFUTED, None
    except _Done as d:
        status, seqs = Status.FOUND, d.sequences
    except _OutOfBudget:
        status, seqs = Status.TIMEOUT, None
    s.stats.seconds = time.perf_counter() - t0
    return status, seqs, s.stats


def decide_cr_le(g: Graph, k: int, budget: SearchBudget | None = None, *, symmetry: bool = True,
                 seed: int | None = None, checkpoint: str | os.PathLike | None = None) -> Decision:
    """Is there a good drawing of ``g`` with at most ``k`` crossings?

    ``seed`` randomises branch order (the answer never changes). With a
    ``checkpoint`` path, finished root branches are recorded there and skipped
    when the same call is repeated.
    """
    budget = budget or SearchBudget()
    t0 = time.perf_counter()
    if k < 0:
        return Decision(Status.REFUTED, stats=SearchStats())
    deadline = t0 + budget.max_seconds
    if budget.workers > 1 and checkpoint is None:
        return _decide_parallel(g, k, budget, symmetry, seed, t0)
    search = _Search(g, k, symmetry=symmetry, seed=seed, deadline=deadline, max_nodes=budget.max_nodes)
    state = _Checkpoint(checkpoint, g, k, symmetry, seed) if checkpoint is not None else None
    try:
        if state is None:
            search.expand([], [[] for _ in range(g.edge_count)], set(), root=True)
        else:
            search.expand([], [[] for _ in range(g.edge_count)], set(), root=True,
                          on_branch=state.mark, skip=state.done)
        result = Decision(Status.REFUTED)
        if state is not None:
            state.finish()
    except _Done as d:
        result = Decision(Status.FOUND, _certificate(g, d.sequences))
    except _OutOfBudget:
        result = Decision(Status.TIMEOUT)
    search.stats.seconds = time.perf_counter() - t0
    result.stats = search.stats
    return result


def sample_drawings(g: Graph, count: int, k_low: int, k_high: int, seed: int = 0, *, starts: int = 3):
    """Yield ``count`` distinct valid drawings with between ``k_low`` and ``k_high`` crossings.

    ``starts`` seeded searches for a drawing with at most ``k_low`` crossings
    supply starting points. From each, a random walk redraws one random edge
    at a time along a randomly weighted route; a step is kept when it does
    not move away from a crossing-count target that is redrawn every 50
    steps (with some slack so the walk keeps moving).
    """
    rng = random.Random(seed)
    search = _Search(g, k_low, symmetry=False, root_ilp_seconds=0.0)
    origins = []
    for i in range(starts):
        search.rng = random.Random(rng.getrandbits(64))
        search.stats = SearchStats()
        try:
            search.expand([], [[] for _ in range(g.edge_count)], set())
        except _Done as d:
            origins.append(_certificate(g, d.sequences))
        else:
            break
    if not origins:
        return
    seen: set[str] = set()
    produced = 0
    steps_per_origin = max(50, 4 * count // len(origins))
    step = 0
    while produced < count:
        cert = origins[(step // steps_per_origin) % len(origins)] if step % steps_per_origin == 0 else cert
        if step % 50 == 0:
            target = rng.randint(k_low, k_high)
        step += 1
        new = reinsert_edge(cert, rng.choice(g.edges), rng, noise=rng.choice((1.0, 5.0, 20.0, 50.0)))
        if new is None or not k_low <= new.crossing_count <= k_high:
            continue
        if abs(new.crossing_count - target) > abs(cert.crossing_count - target) + (rng.random() < 0.3):
            continue
        cert = new
        text = cert.to_text()
        if text not in seen:
            seen.add(text)
            produced += 1
            yield cert


def _decide_parallel(g, k, budget, symmetry, seed, t0) -> Decision:
    search = _Search(g, k, symmetry=symmetry, seed=seed)
    stats = SearchStats()
    try:
        tasks = search.root_tasks()
    except _Done as d:
        return Decision(Status.FOUND, _certificate(g, d.sequences), search.stats)
    stats.add(search.stats)
    remaining = budget.max_seconds - (time.perf_counter() - t0)
    args = [(g, k, t, symmetry, None if seed is None else seed + i, remaining, budget.max_nodes)
            for i, t in enumerate(tasks)]
    status = Status.REFUTED
    with ProcessPoolExecutor(max_workers=budget.workers) as pool:
        for st, seqs, sub in pool.map(_run_task, args):
            stats.add(sub)
            if st is Status.FOUND:
                stats.seconds = time.perf_counter() - t0
                pool.shutdown(cancel_futures=True)
                return Decision(Status.FOUND, _certificate(g, seqs), stats)
            if st is Status.TIMEOUT:
                status = Status.TIMEOUT
    stats.seconds = time.perf_counter() - t0
    return Decision(status, stats=stats)


class _Checkpoint:
    def __init__(self, path, g: Graph, k: int, symmetry: bool, seed: int | None):
        self.path = Path(path)
        self.key = {"graph": g.to_text(), "k": k, "symmetry": symmetry, "seed": seed}
        self.done: set[int] = set()
        if self.path.exists():
            data = json.loads(self.path.read_text())
            if data.get("key") == self.key:
                self.done = set(data.get("done", []))

    def mark(self, idx: int) -> None:
        self.done.add(idx)
        self._write(False)

    def finish(self) -> None:
        self._write(True)

    def _write(self, complete: bool) -> None:
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        tmp.write_text(json.dumps({"key": self.key, "done": sorted(self.done), "complete": complete}))
        tmp.replace(self.path)


def crossing_number(g: Graph, budget: SearchBudget | None = None, *, symmetry: bool = True,
                    start: int | None = None, max_k: int | None = None) -> SolveResult:
    """Exact crossing number by iterative deepening from the Euler bound.

    With ``max_k``, gives up (value None, ``timed_out`` False) once every
    k up to ``max_k`` has been refuted.
    """
    budget = budget or SearchBudget()
    t0 = time.perf_counter()
    stats = SearchStats()
    k = euler_lower_bound(g) if start is None else start
    refuted = k - 1
    while True:
        if max_k is not None and k > max_k:
            stats.seconds = time.perf_counter() - t0
            return SolveResult(None, None, refuted, stats)
        left = budget.max_seconds - (time.perf_counter() - t0)
        if left <= 0:
            stats.seconds = time.perf_counter() - t0
            return SolveResult(None, None, refuted, stats, timed_out=True)
        sub = SearchBudget(left, budget.max_nodes, budget.workers)
        d = decide_cr_le(g, k, sub, symmetry=symmetry)
        stats.nodes += d.stats.nodes
        stats.planarity_calls += d.stats.planarity_calls
        if d.found:
            stats.seconds = time.perf_counter() - t0
            value = d.certificate.crossing_count
            return SolveResult(value, d.certificate, value - 1, stats, upper_bound=value)
        if d.status is Status.TIMEOUT:
            stats.seconds = time.perf_counter() - t0
            return SolveResult(None, None, refuted, stats, timed_out=True)
        refuted = k
        k += 1


# -- independent brute-force oracle ------------------------------------------------------


class OracleTooLarge(ValueError):
    pass


def oracle_cost(g: Graph, kmax: int) -> int:
    """Number of crossing-pair sets the oracle enumerates up to ``kmax``."""
    p = len(independent_pairs(g))
    return sum(math.comb(p, j) for j in range(kmax + 1))


def independent_pairs(g: Graph) -> list[tuple[int, int]]:
    es = g.edges
    return [(a, b) for a in range(len(es)) for b in range(a + 1, len(es)) if not set(es[a]) & set(es[b])]


def brute_force_oracle(g: Graph, kmax: int, guard: int = 2_000_000) -> int | None:
    """Exact crossing number if it is at most ``kmax``, else None.

    Enumerates every set of independent edge pairs of size 0..kmax and every
    order of the crossings along each edge, and tests the planarization for
    planarity. No pruning at all; refuses inputs whose enumeration exceeds
    ``guard`` pair sets.
    """
    cost = oracle_cost(g, kmax)
    if cost > guard:
        raise OracleTooLarge(f"oracle would enumerate {cost} pair sets (guard {guard})")
    n, m = g.vertex_count, g.edge_count
    eu = [u for u, _ in g.edges]
    ev = [w for _, w in g.edges]
    pairs = independent_pairs(g)
    for j in range(kmax + 1):
        for chosen in itertools.combinations(pairs, j):
            on_edge: dict[int, list[int]] = {}
            for cid, (a, b) in enumerate(chosen):
                on_edge.setdefault(a, []).append(cid)
                on_edge.setdefault(b, []).append(cid)
            multi = [e for e, ids in on_edge.items() if len(ids) > 1]
            for perms in itertools.product(*(itertools.permutations(on_edge[e]) for e in multi)):
                order = {e: list(ids) for e, ids in on_edge.items()}
                for e, p in zip(multi, perms):
                    order[e] = list(p)
                pu, pv = [], []
                for e in range(m):
                    prev = eu[e]
                    for cid in order.get(e, ()):
                        pu.append(prev)
                        pv.append(n + cid)
                        prev = n + cid
                    pu.append(prev)
                    pv.append(ev[e])
                if kernel.planar(n + j, pu, pv):
                    return j
    return None
