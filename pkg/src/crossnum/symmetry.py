"""Graph isomorphism and automorphism groups for small graphs.

Colour refinement on the disjoint union of the two graphs narrows candidate
images, then a backtracking search checks adjacency against every vertex
mapped so far. Group orders come from a stabiliser chain: the order is the
product of the basic orbit lengths.
"""

from __future__ import annotations

from collections.abc import Sequence

from .graph import Edge, Graph

Perm = tuple[int, ...]


def _refine(adj: Sequence[Sequence[int]], colors: list[int]) -> list[int]:
    count = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [table[s] for s in sigs]
        if len(table) == count:
            return new
        colors, count = new, len(table)


def _joint_colors(g: Graph, h: Graph, g_marks: dict[int, int], h_marks: dict[int, int]) -> tuple[list[int], list[int]] | None:
    n = g.vertex_count
    adj = [list(a) for a in g.adjacency] + [[w + n for w in a] for a in h.adjacency]
    init = [g.degree(v) * 1000 for v in range(n)] + [h.degree(v) * 1000 for v in range(h.vertex_count)]
    for v, tag in g_marks.items():
        init[v] += tag + 1
    for v, tag in h_marks.items():
        init[n + v] += tag + 1
    colors = _refine(adj, init)
    gc, hc = colors[:n], colors[n:]
    if sorted(gc) != sorted(hc):
        return None
    return gc, hc


def _search(g: Graph, h: Graph, g_marks: dict[int, int], h_marks: dict[int, int]) -> list[int] | None:
    """One isomorphism g -> h sending each marked vertex to the equally marked one."""
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return None
    cols = _joint_colors(g, h, g_marks, h_marks)
    if cols is None:
        return None
    gc, hc = cols
    n = g.vertex_count
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(hc[v], []).append(v)
    size = {c: len(vs) for c, vs in by_color.items()}

    # smallest classes first, then grow along edges so adjacency checks bite early
    order: list[int] = []
    placed = [False] * n
    remaining = sorted(range(n), key=lambda v: (size[gc[v]], v))
    for start in remaining:
        if placed[start]:
            continue
        placed[start] = True
        queue = [start]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(g.adjacency[v], key=lambda x: (size[gc[x]], x)):
                if not placed[w]:
                    placed[w] = True
                    queue.append(w)

    gadj = [set(a) for a in g.adjacency]
    hadj = [set(a) for a in h.adjacency]
    image = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        mapped_nbrs = [(w, image[w]) for w in order[:i] if w in gadj[v]]
        for c in by_color[gc[v]]:
            if used[c]:
                continue
            if any(iw not in hadj[c] for _, iw in mapped_nbrs):
                continue
            # non-edges must stay non-edges: equal degree plus colour makes a count check enough
            if sum(1 for x in hadj[c] if used[x]) != len(mapped_nbrs):
                continue
            image[v] = c
            used[c] = True
            if extend(i + 1):
                return True
            used[c] = False
            image[v] = -1
        return False

    return image if extend(0) else None


def graph_isomorphic(g: Graph, h: Graph) -> tuple[bool, list[int] | None]:
    """Whether ``g`` and ``h`` are isomorphic, with a witness map ``v -> image[v]``."""
    image = _search(g, h, {}, {})
    return (image is not None, image)


def is_automorphism(g: Graph, perm: Sequence[int]) -> bool:
    edges = set(g.edges)
    mapped = {(min(perm[u], perm[w]), max(perm[u], perm[w])) for u, w in g.edges}
    return mapped == edges and sorted(perm) == list(range(g.vertex_count))


def automorphism_group(g: Graph) -> tuple[list[Perm], int]:
    """Generators of Aut(g) and its exact order."""
    n = g.vertex_count
    gens: list[Perm] = []
    order = 1
    fixed: list[int] = []
    while True:
        marks = {v: i for i, v in enumerate(fixed)}
        colors = _joint_colors(g, g, marks, marks)[0]
        if len(set(colors)) == n:
            break
        # base point: first vertex in a smallest non-trivial colour class
        classes: dict[int, list[int]] = {}
        for v in range(n):
            classes.setdefault(colors[v], []).append(v)
        cls = min((vs for vs in classes.values() if len(vs) > 1), key=lambda vs: (len(vs), vs[0]))
        b = cls[0]
        level_gens: list[Perm] = []
        orbit = {b}
        for c in cls[1:]:
            if c in orbit:
                continue
            g_marks = dict(marks)
            h_marks = dict(marks)
            g_marks[b] = len(fixed)
            h_marks[c] = len(fixed)
            image = _search(g, g, g_marks, h_marks)
            if image is None:
                continue
            level_gens.append(tuple(image))
            orbit = _orbit(b, level_gens)
        gens.extend(level_gens)
        order *= len(orbit)
        fixed.append(b)
    return gens, order


def _orbit(x: int, gens: Sequence[Perm]) -> set[int]:
    seen = {x}
    stack = [x]
    while stack:
        y = stack.pop()
        for p in gens:
            z = p[y]
            if z not in seen:
                seen.add(z)
                stack.append(z)
    return seen


def edge_pair_orbits(g: Graph, gens: Sequence[Perm], pairs: Sequence[tuple[int, int]]) -> dict[tuple[int, int], int]:
    """Orbit label for each unordered pair of edge indices under the generators."""
    idx = g.edge_index
    edges = g.edges

    def img(p: Perm, e: int) -> int:
        u, w = edges[e]
        a, b = p[u], p[w]
        return idx[(a, b) if a < b else (b, a)]

    label: dict[tuple[int, int], int] = {}
    next_label = 0
    for pr in pairs:
        if pr in label:
            continue
        label[pr] = next_label
        stack = [pr]
        while stack:
            e, f = stack.pop()
            for p in gens:
                a, b = img(p, e), img(p, f)
                q = (a, b) if a < b else (b, a)
                if q not in label:
                    label[q] = next_label
                    stack.append(q)
        next_label += 1
    return label


def edge_image(g: Graph, perm: Perm, e: Edge) -> Edge:
    a, b = perm[e[0]], perm[e[1]]
    return (a, b) if a < b else (b, a)
