"""Combinatorial drawings: crossing configurations, planarizations and rotation systems.

A drawing is never stored as geometry. It is a set of crossing pairs with
the order of crossings along each edge, plus a rotation system on the
planarization (each crossing replaced by a degree-4 dummy vertex).

Face tracing convention, used everywhere: the successor of dart ``(u, v)``
is ``(v, w)`` where ``w`` follows ``u`` in the cyclic rotation of ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

from . import kernel
from .graph import Edge, Graph, GraphFormatError, canon_edge

Pair = tuple[Edge, Edge]


class ConfigError(ValueError):
    """A crossing configuration breaks the good-drawing rules."""


class CertificateFormatError(ValueError):
    pass


def canon_pair(e: Edge, f: Edge) -> Pair:
    e, f = canon_edge(*e), canon_edge(*f)
    return (e, f) if e <= f else (f, e)


@dataclass(frozen=True)
class CrossingConfig:
    """Crossing pairs (crossing id = position) and per-edge crossing orders.

    ``orders[e]`` lists crossing ids along ``e`` from its smaller endpoint to
    its larger one, and is present exactly for edges with two or more
    crossings.
    """

    pairs: tuple[Pair, ...] = ()
    orders: dict[Edge, tuple[int, ...]] = field(default_factory=dict, hash=False)

    @classmethod
    def canonical(cls, sequences: dict[Edge, Sequence[Edge]]) -> CrossingConfig:
        """Build from, for each crossed edge, its crossing partners in order.

        Crossing ids follow the sorted order of the pairs, which makes the
        planarization and the serialized certificate deterministic.
        """
        pairs = sorted({canon_pair(e, f) for e, seq in sequences.items() for f in seq})
        ident = {p: i for i, p in enumerate(pairs)}
        orders = {}
        for e, seq in sequences.items():
            if len(seq) >= 2:
                orders[canon_edge(*e)] = tuple(ident[canon_pair(e, f)] for f in seq)
        return cls(tuple(pairs), dict(sorted(orders.items())))

    def crossings_on(self, e: Edge) -> tuple[int, ...]:
        if e in self.orders:
            return self.orders[e]
        return tuple(i for i, p in enumerate(self.pairs) if e in p)

    def partner_sequences(self) -> dict[Edge, list[Edge]]:
        out: dict[Edge, list[Edge]] = {}
        for e in sorted({x for p in self.pairs for x in p}):
            out[e] = [_other(self.pairs[i], e) for i in self.crossings_on(e)]
        return out

    def violations(self, g: Graph) -> list[str]:
        out = []
        seen: set[Pair] = set()
        count: dict[Edge, list[int]] = {}
        for i, (e, f) in enumerate(self.pairs):
            for x in (e, f):
                if x not in g.edge_index:
                    out.append(f"unknown edge {x} in crossing {i}")
            if e == f:
                out.append(f"self crossing: edge {e} crosses itself (crossing {i})")
            elif set(e) & set(f):
                out.append(f"adjacent edges cross: {e} and {f} (crossing {i})")
            p = canon_pair(e, f)
            if p in seen:
                out.append(f"double crossing: {e} and {f} cross more than once")
            seen.add(p)
            count.setdefault(e, []).append(i)
            if f != e:
                count.setdefault(f, []).append(i)
        for e, ids in count.items():
            if len(ids) >= 2:
                order = self.orders.get(e)
                if order is None:
                    out.append(f"missing crossing order for edge {e}")
                elif sorted(order) != sorted(ids):
                    out.append(f"crossing order for edge {e} does not match its crossings")
        for e in self.orders:
            if len(count.get(e, ())) < 2:
                out.append(f"crossing order given for edge {e} with fewer than two crossings")
        return out


def _other(p: Pair, e: Edge) -> Edge:
    return p[1] if p[0] == e else p[0]


@dataclass(frozen=True)
class Planarization:
    graph: Graph
    base_vertices: int
    paths: dict[Edge, tuple[int, ...]]  # base edge -> planarization vertex path
    owner: dict[Edge, Edge]  # planarization edge -> base edge
    dummy_pair: tuple[Pair, ...]


def planarize(g: Graph, c: CrossingConfig) -> Planarization:
    problems = c.violations(g)
    if problems:
        raise ConfigError("; ".join(problems))
    n = g.vertex_count
    paths = {}
    owner = {}
    pedges = []
    for e in g.edges:
        path = (e[0], *(n + i for i in c.crossings_on(e)), e[1])
        paths[e] = path
        for a, b in zip(path, path[1:]):
            s = canon_edge(a, b)
            owner[s] = e
            pedges.append(s)
    return Planarization(Graph(n + len(c.pairs), pedges), n, paths, owner, c.pairs)


# -- planarity with embedding or Kuratowski witness ------------------------------


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    rotation: tuple[tuple[int, ...], ...] | None = None
    witness: tuple[Edge, ...] | None = None


def is_planar(g: Graph) -> PlanarityResult:
    """Embedding (rotation system) if planar, else a Kuratowski subdivision's edges."""
    eu = [u for u, _ in g.edges]
    ev = [w for _, w in g.edges]
    k = kernel.kuratowski(g.vertex_count, eu, ev)
    if k is not None:
        return PlanarityResult(False, witness=tuple(g.edges[i] for i in k))
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.vertex_count))
    nxg.add_edges_from(g.edges)
    ok, emb = nx.check_planarity(nxg)
    if not ok:  # kernel and networkx disagree; never expected
        raise RuntimeError("planarity kernel disagrees with networkx")
    rotation = tuple(tuple(reversed(list(emb.neighbors_cw_order(v)))) if g.degree(v) else () for v in range(g.vertex_count))
    return PlanarityResult(True, rotation=rotation)


def classify_kuratowski(edges: Iterable[Edge]) -> str:
    """'K5' or 'K33' for a subdivision given by its edge set."""
    deg: dict[int, int] = {}
    for u, w in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[w] = deg.get(w, 0) + 1
    branch = [v for v, d in deg.items() if d > 2]
    if len(branch) == 5 and all(deg[v] == 4 for v in branch):
        return "K5"
    if len(branch) == 6 and all(deg[v] == 3 for v in branch):
        return "K33"
    raise ValueError("not a Kuratowski subdivision")


# -- face tracing -------------------------------------------------------------------


def trace_faces(rotation: Sequence[Sequence[int]]) -> list[list[tuple[int, int]]]:
    pos = [{w: i for i, w in enumerate(r)} for r in rotation]
    seen: set[tuple[int, int]] = set()
    faces = []
    for u in range(len(rotation)):
        for v in rotation[u]:
            if (u, v) in seen:
                continue
            face = []
            d = (u, v)
            while d not in seen:
                seen.add(d)
                face.append(d)
                a, b = d
                rb = rotation[b]
                d = (b, rb[(pos[b][a] + 1) % len(rb)])
            faces.append(face)
    return faces


def _components(g: Graph) -> list[list[int]]:
    seen = [False] * g.vertex_count
    comps = []
    for s in range(g.vertex_count):
        if seen[s] or not g.adjacency[s]:
            continue
        comp = [s]
        seen[s] = True
        i = 0
        while i < len(comp):
            for w in g.adjacency[comp[i]]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
            i += 1
        comps.append(comp)
    return comps


# -- certificates ---------------------------------------------------------------------


@dataclass(frozen=True)
class DrawingCertificate:
    base: Graph
    config: CrossingConfig
    rotation: tuple[tuple[int, ...], ...]

    @cached_property
    def plan(self) -> Planarization:
        return planarize(self.base, self.config)

    @property
    def planarization(self) -> Graph:
        return self.plan.graph

    @property
    def crossing_count(self) -> int:
        return len(self.config.pairs)

    @cached_property
    def faces(self) -> list[list[tuple[int, int]]]:
        return trace_faces(self.rotation)

    def to_text(self) -> str:
        return certificate_to_text(self)

    @classmethod
    def from_text(cls, text: str) -> DrawingCertificate:
        return certificate_from_text(text)


def validate_certificate(cert: DrawingCertificate) -> list[str]:
    """All violated drawing rules; an empty list means the certificate is valid."""
    out = cert.config.violations(cert.base)
    if out:
        return out
    plan = cert.plan
    pg = plan.graph
    n = cert.base.vertex_count
    if len(cert.rotation) != pg.vertex_count:
        return [f"rotation lists {len(cert.rotation)} vertices, planarization has {pg.vertex_count}"]
    for v in range(pg.vertex_count):
        r = cert.rotation[v]
        if len(set(r)) != len(r) or set(r) != set(pg.adjacency[v]):
            out.append(f"rotation mismatch at {_vname(v, n)}: neighbours differ from the planarization")
    if out:
        return out
    for i, (e, f) in enumerate(cert.config.pairs):
        x = n + i
        seq = [plan.owner[canon_edge(x, w)] for w in cert.rotation[x]]
        if len(seq) != 4 or seq[0] == seq[1] or seq[1] == seq[2] or seq[2] == seq[3] or seq[0] != seq[2]:
            out.append(f"non-alternating crossing x{i}: rotation does not alternate {e} and {f}")
    faces = cert.faces
    face_of = {}
    for fi, face in enumerate(faces):
        for d in face:
            face_of[d] = fi
    for comp in _components(pg):
        cs = set(comp)
        ecount = sum(len(pg.adjacency[v]) for v in comp) // 2
        fcount = len({face_of[(u, w)] for u in comp for w in pg.adjacency[u]})
        euler = len(comp) - ecount + fcount
        if euler != 2:
            out.append(f"genus > 0: component at {_vname(min(cs), n)} has V-E+F = {euler}")
    return out


def _vname(v: int, n: int) -> str:
    return str(v) if v < n else f"x{v - n}"


def certificate_from_rotation(g: Graph, config: CrossingConfig, rotation: Sequence[Sequence[int]]) -> DrawingCertificate:
    """Certificate with each rotation started at its smallest neighbour."""
    canon = []
    for r in rotation:
        r = list(r)
        if r:
            i = r.index(min(r))
            r = r[i:] + r[:i]
        canon.append(tuple(r))
    return DrawingCertificate(g, config, tuple(canon))


def crossing_counts(cert: DrawingCertificate, a: Iterable[Edge], b: Iterable[Edge]) -> tuple[int, int, int]:
    """Crossings inside ``a``, inside ``b`` and between them."""
    a, b = {canon_edge(*e) for e in a}, {canon_edge(*e) for e in b}
    if a & b:
        raise ValueError("edge sets overlap")
    na = nb = nab = 0
    for e, f in cert.config.pairs:
        if e in a and f in a:
            na += 1
        elif e in b and f in b:
            nb += 1
        elif (e in a and f in b) or (e in b and f in a):
            nab += 1
    return na, nb, nab


def nu(cert: DrawingCertificate, a: Iterable[Edge], b: Iterable[Edge] | None = None) -> int:
    """Crossings inside ``a``, or between ``a`` and ``b``."""
    if b is None:
        return crossing_counts(cert, a, ())[0]
    return crossing_counts(cert, a, b)[2]


def clean_edges(cert: DrawingCertificate) -> set[Edge]:
    crossed = {x for p in cert.config.pairs for x in p}
    return {e for e in cert.base.edges if e not in crossed}


def subdrawing(cert: DrawingCertificate, keep: Iterable[Edge]) -> DrawingCertificate:
    """Restriction to ``keep``: other edges vanish and crossings on them are smoothed."""
    keep = {canon_edge(*e) for e in keep}
    base = cert.base
    n = base.vertex_count
    plan = cert.plan
    seqs = {e: [f for f in s if f in keep] for e, s in cert.config.partner_sequences().items() if e in keep}
    config = CrossingConfig.canonical({e: s for e, s in seqs.items() if s})
    new_id = {p: i for i, p in enumerate(config.pairs)}
    renum = {n + i: n + new_id[p] for i, p in enumerate(cert.config.pairs) if p in new_id}

    def alive(v: int) -> bool:
        return v < n or v in renum

    def new_name(v: int) -> int:
        return v if v < n else renum[v]

    # next surviving vertex when leaving planarization vertex a towards b along b's owner edge
    def step(a: int, b: int) -> int:
        path = plan.paths[plan.owner[canon_edge(a, b)]]
        i, j = path.index(a), path.index(b)
        d = 1 if j > i else -1
        k = j
        while not alive(path[k]):
            k += d
        return new_name(path[k])

    rotation: list[tuple[int, ...]] = [()] * (n + len(config.pairs))
    for v in range(plan.graph.vertex_count):
        if not alive(v):
            continue
        rotation[new_name(v)] = tuple(step(v, w) for w in cert.rotation[v] if plan.owner[canon_edge(v, w)] in keep)
    return DrawingCertificate(Graph(n, sorted(keep)), config, tuple(rotation))


def realize(g: Graph, sequences: dict[Edge, Sequence[Edge]]) -> DrawingCertificate:
    """Certificate for a realizable configuration given as per-edge partner sequences.

    The planarization is embedded; any crossing whose embedding comes out
    non-alternating is a touching point and is removed, then the rest is
    embedded again.
    """
    seqs = {canon_edge(*e): [canon_edge(*f) for f in s] for e, s in sequences.items()}
    n = g.vertex_count
    while True:
        config = CrossingConfig.canonical({e: s for e, s in seqs.items() if s})
        plan = planarize(g, config)
        res = is_planar(plan.graph)
        if not res.planar:
            raise ConfigError("configuration is not realizable with these orders")
        bad = None
        for i, (e, f) in enumerate(config.pairs):
            x = n + i
            seq = [plan.owner[canon_edge(x, w)] for w in res.rotation[x]]
            if seq[0] == seq[1] or seq[1] == seq[2]:
                bad = (e, f)
                break
        if bad is None:
            return certificate_from_rotation(g, config, res.rotation)
        e, f = bad
        seqs[e].remove(f)
        seqs[f].remove(e)


def reinsert_edge(cert: DrawingCertificate, e: Edge, rng, noise: float = 1.0) -> DrawingCertificate | None:
    """Redraw edge ``e`` along a randomly weighted shortest route through the other edges' faces.

    The rest of the drawing is kept. The route never crosses an edge adjacent
    to ``e`` and is rejected (None) if it would cross some edge twice.
    ``noise`` scales the random part of each segment's weight; larger values
    give longer, more crossed routes.
    """
    import heapq

    e = canon_edge(*e)
    g = cert.base
    rest = subdrawing(cert, [f for f in g.edges if f != e])
    plan = rest.plan
    faces = rest.faces
    face_of = {}
    for fi, face in enumerate(faces):
        for d in face:
            face_of[d] = fi
    u, w = e
    starts = {face_of[(u, x)] for x in rest.rotation[u]} if rest.rotation[u] else set(range(len(faces)))
    goals = {face_of[(w, x)] for x in rest.rotation[w]} if rest.rotation[w] else set(range(len(faces)))
    weight: dict[Edge, float] = {}
    dist = {f: 0.0 for f in starts}
    back: dict[int, tuple[int, tuple[int, int]]] = {}
    heap = [(0.0, f) for f in sorted(starts)]
    done: set[int] = set()
    end = None
    while heap:
        d0, fi = heapq.heappop(heap)
        if fi in done:
            continue
        done.add(fi)
        if fi in goals:
            end = fi
            break
        for a, b in faces[fi]:
            s = canon_edge(a, b)
            f = plan.owner[s]
            if set(f) & set(e):
                continue
            if s not in weight:
                weight[s] = 1.0 + noise * rng.random()
            nf = face_of[(b, a)]
            nd = d0 + weight[s]
            if nd < dist.get(nf, float("inf")):
                dist[nf] = nd
                back[nf] = (fi, (a, b))
                heapq.heappush(heap, (nd, nf))
    if end is None:
        return None
    route = []
    fi = end
    while fi in back:
        prev, dart = back[fi]
        route.append(dart)
        fi = prev
    route.reverse()
    crossed = [plan.owner[canon_edge(*d)] for d in route]
    if len(set(crossed)) != len(crossed):
        return None
    seqs = {f: list(s) for f, s in rest.config.partner_sequences().items()}
    for (a, b), f in zip(route, crossed):
        path = plan.paths[f]
        # every inner vertex of the path is a crossing, so the segment index counts those before it
        before = min(path.index(a), path.index(b))
        seqs.setdefault(f, []).insert(before, e)
    seqs[e] = crossed
    return realize(g, seqs)


# -- regions of a subdrawing ------------------------------------------------------------


class RegionError(ValueError):
    pass


@dataclass(frozen=True)
class RegionReport:
    region_id: int
    boundary: tuple[tuple[int, int], ...]
    v_in: frozenset[int]
    v_out: frozenset[int]


class RegionMap:
    """Regions of the subdrawing on ``keep`` inside the full drawing ``cert``.

    Faces of the full planarization are merged across every segment that does
    not belong to ``keep``; each merged group is one region of the
    subdrawing. Anything not on the subdrawing (vertices, segments of other
    edges) lies in exactly one region.
    """

    def __init__(self, cert: DrawingCertificate, keep: Iterable[Edge]):
        self.cert = cert
        self.keep = frozenset(canon_edge(*e) for e in keep)
        plan = cert.plan
        faces = cert.faces
        face_of: dict[tuple[int, int], int] = {}
        for fi, face in enumerate(faces):
            for d in face:
                face_of[d] = fi
        parent = list(range(len(faces)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s, e in plan.owner.items():
            if e not in self.keep:
                a, b = find(face_of[s]), find(face_of[(s[1], s[0])])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        roots = sorted({find(f) for f in range(len(faces))})
        rid = {r: i for i, r in enumerate(roots)}
        self.face_of = face_of
        self.region_of_face = [rid[find(f)] for f in range(len(faces))]
        self.count = len(roots)
        self.boundary: list[list[tuple[int, int]]] = [[] for _ in roots]
        for d, fi in sorted(face_of.items()):
            if plan.owner[canon_edge(*d)] in self.keep:
                self.boundary[self.region_of_face[fi]].append(d)
        self._on_keep = {v for e in self.keep for v in plan.paths[e]}

    def region_of_dart(self, d: tuple[int, int]) -> int:
        return self.region_of_face[self.face_of[d]]

    def region_of_segment(self, s: Edge) -> int:
        """Region holding a segment of an edge outside ``keep``."""
        if self.cert.plan.owner[canon_edge(*s)] in self.keep:
            raise RegionError(f"segment {s} lies on the subdrawing")
        return self.region_of_dart(s)

    def region_of_vertex(self, v: int) -> int:
        if v in self._on_keep:
            raise RegionError(f"vertex {v} lies on the subdrawing")
        rot = self.cert.rotation[v]
        if not rot:
            raise RegionError(f"unanchorable vertex {v}")
        return self.region_of_dart((v, rot[0]))

    def sides_of_crossing(self, cid: int) -> tuple[int, int]:
        """Regions on the two sides of a kept edge at crossing ``cid``.

        Read off the two segments of the non-kept edge through the crossing.
        """
        cert = self.cert
        n = cert.base.vertex_count
        x = n + cid
        e, f = cert.config.pairs[cid]
        other = f if e in self.keep else e
        if other in self.keep or (e not in self.keep and f not in self.keep):
            raise RegionError(f"crossing x{cid} is not between a kept and a non-kept edge")
        nbrs = [w for w in cert.rotation[x] if cert.plan.owner[canon_edge(x, w)] == other]
        return self.region_of_dart((x, nbrs[0])), self.region_of_dart((x, nbrs[1]))


def regions(cert: DrawingCertificate, keep: Iterable[Edge], locate: Iterable[int]) -> list[RegionReport]:
    """Regions of the subdrawing on ``keep`` with the ``locate`` vertices placed in them."""
    rm = RegionMap(cert, keep)
    locate = frozenset(locate)
    where = {v: rm.region_of_vertex(v) for v in locate}
    out = []
    for r in range(rm.count):
        vin = frozenset(v for v in locate if where[v] == r)
        out.append(RegionReport(r, tuple(rm.boundary[r]), vin, locate - vin))
    return out


# -- text format -------------------------------------------------------------------------


def certificate_to_text(cert: DrawingCertificate) -> str:
    n = cert.base.vertex_count
    lines = [cert.base.to_text().rstrip("\n")]
    for i, ((a, b), (c, d)) in enumerate(cert.config.pairs):
        lines.append(f"x {i} {a} {b} {c} {d}")
    for (u, w), ids in sorted(cert.config.orders.items()):
        lines.append(f"order {u} {w} : " + " ".join(map(str, ids)))
    for v, r in enumerate(cert.rotation):
        body = " ".join(_vname(x, n) for x in r)
        lines.append(f"rot {_vname(v, n)} :" + (f" {body}" if body else ""))
    return "\n".join(lines) + "\n"


def certificate_from_text(text: str) -> DrawingCertificate:
    graph_lines, pairs, orders, rots = [], [], {}, {}
    stage = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kind = tok[0]
        rank = {"v": 0, "e": 0, "x": 1, "order": 2, "rot": 3}.get(kind)
        if rank is None:
            raise CertificateFormatError(f"line {lineno}: unknown record {kind!r}")
        if rank < stage:
            raise CertificateFormatError(f"line {lineno}: {kind!r} record out of order")
        stage = rank
        try:
            if rank == 0:
                graph_lines.append(line)
            elif kind == "x":
                if len(tok) != 6 or int(tok[1]) != len(pairs):
                    raise CertificateFormatError(f"line {lineno}: malformed crossing record")
                a, b, c, d = map(int, tok[2:])
                if not (a < b and c < d):
                    raise CertificateFormatError(f"line {lineno}: edge endpoints must satisfy u < w")
                pairs.append(((a, b), (c, d)))
            elif kind == "order":
                if len(tok) < 4 or tok[3] != ":":
                    raise CertificateFormatError(f"line {lineno}: malformed order record")
                orders[(int(tok[1]), int(tok[2]))] = tuple(int(t) for t in tok[4:])
            else:
                if len(tok) < 3 or tok[2] != ":":
                    raise CertificateFormatError(f"line {lineno}: malformed rotation record")
                rots[tok[1]] = tok[3:]
        except ValueError as exc:
            if isinstance(exc, CertificateFormatError):
                raise
            raise CertificateFormatError(f"line {lineno}: {exc}") from None
    try:
        g = Graph.from_text("\n".join(graph_lines))
    except GraphFormatError as exc:
        raise CertificateFormatError(f"graph section: {exc}") from None
    n = g.vertex_count
    total = n + len(pairs)

    def parse_name(t: str) -> int:
        if t.startswith("x"):
            i = int(t[1:])
            if not 0 <= i < len(pairs):
                raise CertificateFormatError(f"unknown crossing {t}")
            return n + i
        v = int(t)
        if not 0 <= v < n:
            raise CertificateFormatError(f"unknown vertex {t}")
        return v

    rotation: list[tuple[int, ...] | None] = [None] * total
    try:
        for name, body in rots.items():
            rotation[parse_name(name)] = tuple(parse_name(t) for t in body)
    except ValueError as exc:
        if isinstance(exc, CertificateFormatError):
            raise
        raise CertificateFormatError(str(exc)) from None
    missing = [_vname(v, n) for v in range(total) if rotation[v] is None]
    if missing:
        raise CertificateFormatError("missing rotation for " + ", ".join(missing[:5]))
    names = [str(v) for v in range(n)] + [f"x{i}" for i in range(len(pairs))]
    if list(rots) != names:
        raise CertificateFormatError("rotation records out of order")
    return DrawingCertificate(g, CrossingConfig(tuple(pairs), orders), tuple(rotation))
