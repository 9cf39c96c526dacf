"""Lower-bound checks for drawings of P(10,3), evaluated on certificates.

Each check takes a valid certificate of P(10,3) under the canonical labelling
and compares an observed crossing count against the bound a lemma promises.
A failing check on a valid certificate is a toolkit bug: the lemmas are
theorems.

Sides are indexed 1 and 2. ``D_i`` is the subdrawing on ``E_i``; its regions
come from :class:`RegionMap`, which merges faces of the full planarization
across every segment not drawn by ``D_i``.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from .drawing import DrawingCertificate, RegionMap, crossing_counts, validate_certificate
from .graph import Edge, Graph, Partition, complete_graph, cycle_graph, is_p103, p103_partition, path_graph
from .symmetry import graph_isomorphic


class AuditError(ValueError):
    """The certificate cannot be audited (invalid, or not P(10,3))."""


PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass(frozen=True)
class AuditEntry:
    name: str
    status: str
    bound: int
    observed: int
    case: str | None = None
    inputs: dict = field(default_factory=dict, compare=False)

    def line(self) -> str:
        s = f"{self.name} {self.status} bound={self.bound} observed={self.observed}"
        return s + (f" case={self.case}" if self.case else "")


@dataclass
class AuditReport:
    entries: list[AuditEntry]

    @property
    def ok(self) -> bool:
        return all(e.status != FAIL for e in self.entries)

    @property
    def failures(self) -> list[AuditEntry]:
        return [e for e in self.entries if e.status == FAIL]

    def to_text(self) -> str:
        return "".join(e.line() + "\n" for e in self.entries)


def _status(applies: bool, observed: int, bound: int) -> str:
    if not applies:
        return SKIP
    return PASS if observed >= bound else FAIL


# -- the dual graph H ----------------------------------------------------------------------


@dataclass(frozen=True)
class DualGraphH:
    """Regions of ``D_i`` hosting part of ``G_{3-i}``, joined when ``E_{3-i}`` crosses between them."""

    region_ids: tuple[int, ...]
    h_edges: frozenset[tuple[int, int]]
    f_n: int
    t: tuple[int, ...] = ()

    def as_graph(self) -> Graph:
        index = {r: j for j, r in enumerate(self.region_ids)}
        return Graph(len(self.region_ids), [(index[a], index[b]) for a, b in self.h_edges])

    def leaves(self) -> int:
        g = self.as_graph()
        return sum(1 for v in range(g.vertex_count) if g.degree(v) == 1)


def _region_map(cert: DrawingCertificate, p: Partition, i: int) -> RegionMap:
    return RegionMap(cert, p.edges(i))


def build_h(cert: DrawingCertificate, p: Partition, i: int = 1, rm: RegionMap | None = None) -> DualGraphH:
    problems = validate_certificate(cert)
    if problems:
        raise AuditError("invalid certificate: " + "; ".join(problems))
    rm = rm or _region_map(cert, p, i)
    mine, other = p.edges(i), p.edges(3 - i)
    plan = cert.plan
    hosts: set[int] = set()
    for v in p.side(3 - i):
        hosts.add(rm.region_of_vertex(v))
    for s, e in plan.owner.items():
        if e in other:
            hosts.add(rm.region_of_segment(s))
    h_edges: set[tuple[int, int]] = set()
    for cid, (e, f) in enumerate(cert.config.pairs):
        if (e in mine and f in other) or (e in other and f in mine):
            a, b = rm.sides_of_crossing(cid)
            if a != b:
                h_edges.add((min(a, b), max(a, b)))
    deg = {r: 0 for r in hosts}
    for a, b in h_edges:
        deg[a] += 1
        deg[b] += 1
    where = [rm.region_of_vertex(v) for v in p.deg3(3 - i)]
    t = tuple(sorted(where.count(r) for r in hosts))
    return DualGraphH(tuple(sorted(hosts)), frozenset(h_edges), sum(1 for d in deg.values() if d == 1), t)


def _is_path(g: Graph) -> bool:
    return graph_isomorphic(g, path_graph(g.vertex_count))[0]


def h_lower_bound(h: DualGraphH) -> int:
    g = h.as_graph()
    if not g.is_connected():
        raise ValueError("H is disconnected")
    if _is_path(g):
        return 2 * (g.vertex_count - 1)
    return len(h.h_edges) + h.f_n


def _named_graphs() -> list[tuple[str, Graph]]:
    k13 = Graph(4, [(0, 1), (0, 2), (0, 3)])
    return [
        ("K3", complete_graph(3)),
        ("C4", cycle_graph(4)),
        ("K4-e", Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])),
        ("K1,3", k13),
        ("K1,3+e", Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])),
        ("K4", complete_graph(4)),
    ]


def classify_h(h: DualGraphH) -> str:
    """Name of H among paths, K3, C4, K4-e, K1,3, K1,3+e and K4; ``other`` otherwise."""
    g = h.as_graph()
    if _is_path(g):
        return f"P{g.vertex_count}"
    for name, ref in _named_graphs():
        if graph_isomorphic(g, ref)[0]:
            return name
    return "other"


# -- individual checks ---------------------------------------------------------------------


def _counts(cert: DrawingCertificate, a: Iterable[Edge], b: Iterable[Edge]) -> tuple[int, int, int]:
    return crossing_counts(cert, a, b)


def additivity_check(cert: DrawingCertificate, p: Partition) -> AuditEntry:
    """nu(A u B) = nu(A) + nu(B) + nu(A,B) for A = E_1 and B = E_2 u E_12, by two independent counts."""
    a, b = p.e1, p.e2 | p.e12
    na, nb, nab = _counts(cert, a, b)
    whole = len(cert.config.pairs)
    rhs = na + nb + nab
    return AuditEntry("additivity", PASS if whole == rhs else FAIL, rhs, whole)


def h_bound_check(cert: DrawingCertificate, p: Partition, i: int, rm: RegionMap | None = None) -> AuditEntry:
    h = build_h(cert, p, i, rm)
    observed = _counts(cert, p.e1, p.e2)[2]
    bound = h_lower_bound(h)
    return AuditEntry(f"h-bound-{i}", _status(True, observed, bound), bound, observed, classify_h(h),
                      {"v_h": len(h.region_ids), "e_h": len(h.h_edges), "f_n": h.f_n, "t": h.t})


def region_bound_check(cert: DrawingCertificate, p: Partition, i: int, rm: RegionMap | None = None) -> AuditEntry:
    """nu(E_i) + nu(E_i, E_12) >= |V_in(R; G_{3-i})| - 3 over every region R of D_i."""
    rm = rm or _region_map(cert, p, i)
    inside = [0] * rm.count
    for v in p.deg2(3 - i):
        inside[rm.region_of_vertex(v)] += 1
    ni, _, n12 = _counts(cert, p.edges(i), p.e12)
    observed = ni + n12
    bound = max(inside) - 3
    return AuditEntry(f"region-bound-{i}", _status(True, observed, bound), bound, observed)


def _boundary_crossings(cert: DrawingCertificate, rm: RegionMap, movers: frozenset[Edge]) -> list[int]:
    """Per region of ``rm``: crossings of a ``movers`` edge with the region's boundary."""
    out = [0] * rm.count
    for cid, (e, f) in enumerate(cert.config.pairs):
        if (e in movers and f in rm.keep) or (f in movers and e in rm.keep):
            for r in set(rm.sides_of_crossing(cid)):
                out[r] += 1
    return out


def two_sided_region_check(cert: DrawingCertificate, p: Partition, i: int, rm: RegionMap | None = None) -> AuditEntry:
    """A region R of D_{3-i} with two degree-2 vertices of G_i on each side is crossed three times by E_i."""
    rm = rm or _region_map(cert, p, 3 - i)
    inside = [0] * rm.count
    for v in p.deg2(i):
        inside[rm.region_of_vertex(v)] += 1
    crossings = _boundary_crossings(cert, rm, p.edges(i))
    total = len(p.deg2(i))
    hit = [r for r in range(rm.count) if inside[r] >= 2 and total - inside[r] >= 2]
    if not hit:
        return AuditEntry(f"two-sided-region-{i}", SKIP, 3, 0)
    observed = min(crossings[r] for r in hit)
    return AuditEntry(f"two-sided-region-{i}", _status(True, observed, 3), 3, observed)


def three_degree_boundary_check(cert: DrawingCertificate, p: Partition, i: int, v: int,
                                g: Graph | None = None, rm: RegionMap | None = None) -> AuditEntry:
    """With D_{3-i} clean and V2_i - N(v) in one region of it, some E_12 edge crosses E_{3-i}."""
    if v not in p.deg3(i):
        raise ValueError(f"{v} is not a degree-3 vertex of side {i}")
    g = g or cert.base
    name = f"three-degree-boundary-{i}-v{v}"
    other = p.edges(3 - i)
    n_other, _, observed = _counts(cert, other, p.e12)
    if n_other != 0:
        return AuditEntry(name, SKIP, 1, observed)
    rm = rm or _region_map(cert, p, 3 - i)
    away = p.deg2(i) - set(g.neighbors(v))
    if len({rm.region_of_vertex(w) for w in away}) != 1:
        return AuditEntry(name, SKIP, 1, observed)
    return AuditEntry(name, _status(True, observed, 1), 1, observed)


def zero_cross_check(cert: DrawingCertificate, p: Partition) -> AuditEntry:
    """nu(E_1, E_2) = 0 forces nu(E_1) + nu(E_1,E_12) + nu(E_2) + nu(E_2,E_12) >= 6."""
    n1, n2, n12 = _counts(cert, p.e1, p.e2)
    if n12 != 0:
        return AuditEntry("zero-cross", SKIP, 6, 0)
    chain = n1 + _counts(cert, p.e1, p.e12)[2] + n2 + _counts(cert, p.e2, p.e12)[2]
    ok = len(cert.config.pairs) >= chain >= 6
    return AuditEntry("zero-cross", PASS if ok else FAIL, 6, chain)


def audit_all(cert: DrawingCertificate) -> AuditReport:
    if not is_p103(cert.base):
        raise AuditError("audit needs P(10,3) under the canonical labelling")
    problems = validate_certificate(cert)
    if problems:
        raise AuditError("invalid certificate: " + "; ".join(problems))
    g = cert.base
    p = p103_partition(g)
    maps = {i: _region_map(cert, p, i) for i in (1, 2)}
    entries = [additivity_check(cert, p)]
    entries += [h_bound_check(cert, p, i, maps[i]) for i in (1, 2)]
    entries += [region_bound_check(cert, p, i, maps[i]) for i in (1, 2)]
    entries += [two_sided_region_check(cert, p, i, maps[3 - i]) for i in (1, 2)]
    for i in (1, 2):
        for v in sorted(p.deg3(i)):
            entries.append(three_degree_boundary_check(cert, p, i, v, g, maps[3 - i]))
    entries.append(zero_cross_check(cert, p))
    return AuditReport(entries)


__all__ = [
    "AuditEntry", "AuditError", "AuditReport", "DualGraphH", "additivity_check", "audit_all", "build_h",
    "classify_h", "h_bound_check", "h_lower_bound", "region_bound_check",
    "three_degree_boundary_check", "two_sided_region_check", "zero_cross_check",
]
