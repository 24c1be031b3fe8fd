"""Polynomial pinning for simple multiloops with at most 3 strands.

Every innermost non-regional bigon of such a multiloop is a chain of regions
running from one triangular endpoint region to the other; the quadrangular
middle regions never help an optimal pinning set.  Dropping them leaves a
graph on triangular regions, one edge per such bigon, which is always
bipartite; its minimum vertex cover (maximum matching + the constructive
direction of Koenig's theorem) plus one forced pin per regional bigon is an
optimal pinning set.

Bipartiteness is established by direct 2-coloring rather than by orienting
edges from the surface orientation: the theorem guarantees 2-colorability
and a failed coloring yields an odd-cycle certificate for bad inputs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    MatchingNotMaximum,
    NotBipartite,
    PinloopError,
    SelfLoopDetected,
    TooManyStrands,
)
from .loopcore import Multiloop
from .mobidisc import enumerate_embedded_bigons, mobidisc_formula
from .pinsolve import verify_pinning

__all__ = [
    "BigonGraph", "build_bigon_graph", "bipartition",
    "max_matching_bipartite", "koenig_cover", "min_vertex_cover_bipartite",
    "pinning_number_3strand",
]


@dataclass(frozen=True)
class BigonGraph:
    """Triangular-region graph of the innermost non-regional bigons."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    forced_regions: frozenset[int]

    @property
    def forced_regional_count(self) -> int:
        return len(self.forced_regions)

    def to_dot(self) -> str:
        lines = ["graph bigons {"]
        for r in sorted(self.forced_regions):
            lines.append(f'  f{r} [label="{r}", shape=doublecircle];')
        for v in self.vertices:
            lines.append(f'  n{v} [label="{v}"];')
        for u, v in self.edges:
            lines.append(f"  n{u} -- n{v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _disc_corner_face(m: Multiloop, crossing: int, disc_faces) -> int | None:
    """The unique disc face at a marked crossing, or None for a reflex side."""
    corners = [d for d in range(4 * crossing, 4 * crossing + 4)
               if m.region_of_corner(d) in disc_faces]
    if len(corners) == 1:
        return m.region_of_corner(corners[0])
    return None


def build_bigon_graph(m: Multiloop) -> BigonGraph:
    """One edge per innermost non-regional bigon, endpoints its two
    triangular regions; regional bigons become forced pins."""
    if m.strand_count > 3:
        raise TooManyStrands(f"{m.strand_count} strands; the bigon-graph "
                             "construction needs at most 3")
    witnesses = enumerate_embedded_bigons(m)  # raises NotSimple when needed
    clauses = mobidisc_formula(m).clauses

    forced = set()
    edges = set()
    vertices = set()
    for clause in sorted(clauses, key=lambda c: (len(c), sorted(c))):
        if len(clause) == 1:
            forced.add(next(iter(clause)))
            continue
        endpoint_pairs = set()
        for w in witnesses:
            if w.disc_faces != clause:
                continue
            x, y = w.marked
            tx = _disc_corner_face(m, x, clause)
            ty = _disc_corner_face(m, y, clause)
            if tx is None or ty is None:
                continue
            endpoint_pairs.add(frozenset((tx, ty)))
        if not endpoint_pairs:
            raise PinloopError("innermost bigon without identifiable "
                               f"triangular endpoints: clause {sorted(clause)}")
        if len(endpoint_pairs) > 1:
            raise PinloopError("inconsistent triangular endpoints for clause "
                               f"{sorted(clause)}")
        pair = endpoint_pairs.pop()
        if len(pair) == 1:
            raise SelfLoopDetected(
                f"bigon with equal triangular endpoints {sorted(pair)}; "
                "input is not a valid oriented-surface 3-strand encoding")
        u, v = sorted(pair)
        edges.add((u, v))
        vertices.update(pair)

    graph = BigonGraph(vertices=tuple(sorted(vertices)),
                       edges=tuple(sorted(edges)),
                       forced_regions=frozenset(forced))
    degree = {v: 0 for v in graph.vertices}
    for u, v in graph.edges:
        degree[u] += 1
        degree[v] += 1
    if any(d > 3 for d in degree.values()):
        raise PinloopError("triangular region on more than 3 innermost bigons")
    return graph


# -- bipartite machinery --------------------------------------------------------

def bipartition(vertices, edges) -> tuple[set, set]:
    """2-color by breadth-first search; raises NotBipartite with an odd-cycle
    certificate when impossible."""
    adj: dict = {v: [] for v in vertices}
    for u, v in edges:
        if u == v:
            raise NotBipartite("self-loop", odd_cycle=[u])
        adj[u].append(v)
        adj[v].append(u)
    for v in adj:
        adj[v].sort()
    color: dict = {}
    parent: dict = {}
    for start in sorted(adj):
        if start in color:
            continue
        color[start] = 0
        parent[start] = None
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    raise NotBipartite("odd cycle found",
                                       odd_cycle=_odd_cycle(parent, u, w))
    left = {v for v, c in color.items() if c == 0}
    right = {v for v, c in color.items() if c == 1}
    return left, right


def _odd_cycle(parent, u, w):
    au, aw = [u], [w]
    su, sw = {u}, {w}
    while True:
        if au[-1] in sw:
            i = aw.index(au[-1])
            return au + aw[:i][::-1]
        if aw[-1] in su:
            i = au.index(aw[-1])
            return aw + au[:i][::-1]
        if parent[au[-1]] is not None:
            au.append(parent[au[-1]])
            su.add(au[-1])
        if parent[aw[-1]] is not None:
            aw.append(parent[aw[-1]])
            sw.add(aw[-1])


def max_matching_bipartite(vertices, edges) -> list[tuple]:
    """Maximum matching by Hopcroft-Karp; deterministic via sorted adjacency.

    Returns matched edges as (left_vertex, right_vertex) pairs sorted by the
    left endpoint.
    """
    left, right = bipartition(vertices, edges)
    adj: dict = {v: [] for v in left}
    for u, v in edges:
        if u in right:
            u, v = v, u
        adj[u].append(v)
    for v in adj:
        adj[v] = sorted(set(adj[v]))

    INF = float("inf")
    match_l: dict = {}
    match_r: dict = {}
    dist: dict = {}

    def bfs() -> bool:
        queue = deque()
        for u in sorted(left):
            if u not in match_l:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                nxt = match_r.get(v)
                if nxt is None:
                    found = True
                elif dist[nxt] == INF:
                    dist[nxt] = dist[u] + 1
                    queue.append(nxt)
        return found

    def dfs(u) -> bool:
        for v in adj[u]:
            nxt = match_r.get(v)
            if nxt is None or (dist.get(nxt) == dist[u] + 1 and dfs(nxt)):
                match_l[u] = v
                match_r[v] = u
                return True
        dist[u] = INF
        return False

    while bfs():
        for u in sorted(left):
            if u not in match_l:
                dfs(u)
    return sorted(match_l.items())


def koenig_cover(vertices, edges, matching) -> set:
    """Convert a maximum matching into a minimum vertex cover.

    Alternating reachability from the unmatched left vertices: the cover is
    (L minus reached) union (R intersect reached).  Finding an unmatched right
    vertex along the way exhibits an augmenting path, so the matching was not
    maximum and :class:`MatchingNotMaximum` is raised.
    """
    left, right = bipartition(vertices, edges)
    edge_set = set()
    for u, v in edges:
        edge_set.add((u, v) if u in left else (v, u))
    match_l: dict = {}
    match_r: dict = {}
    for u, v in matching:
        if u in right:
            u, v = v, u
        if (u, v) not in edge_set:
            raise ValueError(f"matched pair {(u, v)} is not an edge")
        if u in match_l or v in match_r:
            raise ValueError("matching is not vertex-disjoint")
        match_l[u] = v
        match_r[v] = u

    adj: dict = {v: [] for v in left}
    for u, v in edge_set:
        adj[u].append(v)
    reached_l = {u for u in left if u not in match_l}
    reached_r: set = set()
    queue = deque(sorted(reached_l))
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if match_l.get(u) == v:
                continue  # only unmatched edges leave L
            if v not in reached_r:
                reached_r.add(v)
                back = match_r.get(v)
                if back is None:
                    raise MatchingNotMaximum(
                        "augmenting path reaches an unmatched right vertex",
                        vertex=v)
                if back not in reached_l:
                    reached_l.add(back)
                    queue.append(back)
    cover = (left - reached_l) | (set(reached_r))
    assert len(cover) == len(match_l), "Koenig equality violated"
    assert all(u in cover or v in cover for u, v in edge_set), "cover misses an edge"
    return cover


def min_vertex_cover_bipartite(vertices, edges) -> set:
    return koenig_cover(vertices, edges, max_matching_bipartite(vertices, edges))


def pinning_number_3strand(m: Multiloop) -> tuple[int, frozenset[int]]:
    """Pinning number and one optimal pinning set for a <=3-strand simple
    multiloop: forced regional pins plus a Koenig cover of the bigon graph."""
    graph = build_bigon_graph(m)
    cover = min_vertex_cover_bipartite(graph.vertices, graph.edges)
    pins = frozenset(graph.forced_regions | cover)
    number = graph.forced_regional_count + len(cover)
    assert verify_pinning(mobidisc_formula(m), pins)
    return number, pins
