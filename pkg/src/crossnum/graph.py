"""Simple undirected graphs, generalized Petersen graphs and the P(10,3) split."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Raised when a graph file cannot be parsed."""


class DegenerateParameters(ValueError):
    """Raised for generalized Petersen parameters that produce a multigraph."""


def canon_edge(u: int, w: int) -> Edge:
    return (u, w) if u < w else (w, u)


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..vertex_count-1`` with a sorted edge list."""

    vertex_count: int
    edges: tuple[Edge, ...]

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        raw = list(edges)
        canon = sorted({canon_edge(int(u), int(w)) for u, w in raw})
        if len(canon) != len(raw):
            raise ValueError("duplicate edges")
        for u, w in canon:
            if u == w:
                raise ValueError(f"loop at vertex {u}")
            if u < 0 or w >= vertex_count:
                raise ValueError(f"edge ({u},{w}) out of range for {vertex_count} vertices")
        object.__setattr__(self, "vertex_count", int(vertex_count))
        object.__setattr__(self, "edges", tuple(canon))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, w in self.edges:
            adj[u].append(w)
            adj[w].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, w: int) -> bool:
        return canon_edge(u, w) in self.edge_index

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count

    def edge_subgraph(self, keep: Iterable[Edge]) -> Graph:
        """Same vertex set, only the edges in ``keep``."""
        return Graph(self.vertex_count, [canon_edge(*e) for e in keep])

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled to ``0..len-1`` in sorted vertex order."""
        order = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(order)}
        return Graph(len(order), [(pos[u], pos[w]) for u, w in self.edges if u in pos and w in pos])

    # -- text format -------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"v {self.vertex_count}"]
        lines.extend(f"e {u} {w}" for u, w in self.edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Graph:
        count = None
        edges: list[Edge] = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            try:
                if parts[0] == "v" and len(parts) == 2 and count is None:
                    count = int(parts[1])
                elif parts[0] == "e" and len(parts) == 3 and count is not None:
                    u, w = int(parts[1]), int(parts[2])
                    if not u < w:
                        raise GraphFormatError(f"line {lineno}: edge endpoints must satisfy u < w")
                    edges.append((u, w))
                else:
                    raise GraphFormatError(f"line {lineno}: unexpected {raw!r}")
            except ValueError as exc:
                if isinstance(exc, GraphFormatError):
                    raise
                raise GraphFormatError(f"line {lineno}: {exc}") from None
        if count is None:
            raise GraphFormatError("missing 'v <count>' line")
        if edges != sorted(edges):
            raise GraphFormatError("edge lines are not sorted")
        try:
            return cls(count, edges)
        except ValueError as exc:
            raise GraphFormatError(str(exc)) from None


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, w) for u in range(n) for w in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + w) for u in range(a) for w in range(b)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


# -- generalized Petersen graphs ---------------------------------------------


@dataclass(frozen=True)
class GPParams:
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(f"n must be >= 3, got {self.n}")
        if not 1 <= self.k <= self.n - 1:
            raise ValueError(f"k must lie in 1..n-1, got {self.k}")
        if (2 * self.k) % self.n == 0:
            raise DegenerateParameters(f"degenerate parameters: 2k = 0 mod n for ({self.n},{self.k})")


def build_gp(params: GPParams | tuple[int, int]) -> Graph:
    """Generalized Petersen graph with ``x_i -> i`` and ``y_i -> n + i``."""
    if not isinstance(params, GPParams):
        params = GPParams(*params)
    n, k = params.n, params.k
    edges = set()
    for i in range(n):
        edges.add(canon_edge(i, (i + 1) % n))
        edges.add((i, n + i))
        edges.add(canon_edge(n + i, n + (i + k) % n))
    return Graph(2 * n, edges)


# -- the fixed partition of P(10,3) ----------------------------------------------

P103_V1 = frozenset({0, 1, 2, 3, 4, 10, 11, 17, 13, 14})
P103_V2 = frozenset({5, 6, 7, 8, 9, 15, 16, 12, 18, 19})

# Paths and cycles the case analysis names, as vertex walks. Each consecutive
# pair must be an edge under the v_i = x_i, v_{10+i} = y_i labelling.
P103_NAMED_WALKS: tuple[tuple[int, ...], ...] = (
    (10, 0, 1, 11, 14, 4, 3, 13, 10),
    (10, 17, 14),
    (14, 11, 1),
    (14, 4, 3),
    (10, 0, 1),
    (10, 13, 3),
    (1, 2, 3),
    (2, 12), (13, 16), (17, 7), (11, 18), (4, 5), (0, 9),
)


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    v1: frozenset[int]
    v2: frozenset[int]
    e1: frozenset[Edge]
    e2: frozenset[Edge]
    e12: frozenset[Edge]
    v1_deg2: frozenset[int]
    v1_deg3: frozenset[int]
    v2_deg2: frozenset[int]
    v2_deg3: frozenset[int]
    edge_side: dict[Edge, int] = field(compare=False, hash=False, repr=False)

    def side(self, i: int) -> frozenset[int]:
        return self.v1 if i == 1 else self.v2

    def edges(self, i: int) -> frozenset[Edge]:
        return self.e1 if i == 1 else self.e2

    def deg2(self, i: int) -> frozenset[int]:
        return self.v1_deg2 if i == 1 else self.v2_deg2

    def deg3(self, i: int) -> frozenset[int]:
        return self.v1_deg3 if i == 1 else self.v2_deg3

    def swapped(self) -> Partition:
        return make_partition_from_sides(self.v2, self.v1, self.e1 | self.e2 | self.e12)


def make_partition_from_sides(v1: Iterable[int], v2: Iterable[int], edges: Iterable[Edge]) -> Partition:
    v1, v2 = frozenset(v1), frozenset(v2)
    e1, e2, e12 = set(), set(), set()
    side = {}
    for u, w in edges:
        if u in v1 and w in v1:
            e1.add((u, w))
            side[(u, w)] = 1
        elif u in v2 and w in v2:
            e2.add((u, w))
            side[(u, w)] = 2
        else:
            e12.add((u, w))
            side[(u, w)] = 0

    def deg_in(v: int, es: set[Edge]) -> int:
        return sum(1 for e in es if v in e)

    return Partition(
        v1, v2, frozenset(e1), frozenset(e2), frozenset(e12),
        frozenset(v for v in v1 if deg_in(v, e1) == 2),
        frozenset(v for v in v1 if deg_in(v, e1) == 3),
        frozenset(v for v in v2 if deg_in(v, e2) == 2),
        frozenset(v for v in v2 if deg_in(v, e2) == 3),
        side,
    )


def is_p103(g: Graph) -> bool:
    return g == build_gp((10, 3))


def p103_partition(g: Graph) -> Partition:
    if not is_p103(g):
        raise PartitionError("graph is not P(10,3) under the canonical labelling")
    for walk in P103_NAMED_WALKS:
        for u, w in zip(walk, walk[1:]):
            if not g.has_edge(u, w):
                raise PartitionError(f"labelling self-check failed: {u}-{w} is not an edge")
    p = make_partition_from_sides(P103_V1, P103_V2, g.edges)
    sizes = (len(p.v1_deg2), len(p.v1_deg3), len(p.v2_deg2), len(p.v2_deg3))
    if sizes != (6, 4, 6, 4):
        raise PartitionError(f"unexpected degree classes {sizes}")
    return p


class ObservationViolated(AssertionError):
    pass


def check_observation1(p: Partition, g: Graph) -> dict[int, int]:
    """Map each degree-3 vertex v of one half to its partner u in the other half.

    The partner satisfies ``N(N(v)) & V_other == V2_other - N(u)`` and must be
    unique.
    """
    partner: dict[int, int] = {}
    for i in (1, 2):
        other = 3 - i
        other_side = p.side(other)
        for v in sorted(p.deg3(i)):
            nn = set()
            for w in g.neighbors(v):
                nn.update(g.neighbors(w))
            target = nn & other_side
            hits = [u for u in sorted(p.deg3(other)) if target == p.deg2(other) - set(g.neighbors(u))]
            if len(hits) != 1:
                raise ObservationViolated(f"observation violated at v={v}: {len(hits)} partners")
            partner[v] = hits[0]
    return partner
