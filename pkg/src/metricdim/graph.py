"""Immutable simple graphs with exact hop distances and the metrics built on them.

Vertices are dense integer labels ``0..n-1``.  All values are frozen after
construction and every operation is a pure function of its inputs, so
concurrent use is safe.  Disconnected graphs are representable (they occur as
induced subgraphs), but distance-based operations reject them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence
from weakref import WeakKeyDictionary

from .cover import CoverSystem
from .errors import DisconnectedGraphError, GraphError

#: Distance marker for vertex pairs with no connecting path.  Allowed only in
#: raw distance matrices of disconnected graphs, never after a connectivity
#: check has passed.
UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` must be canonical: each pair ``(u, v)`` with ``u < v``, no
    duplicates, sorted.  Use :func:`build_graph` to normalise raw input.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"graph order must be >= 1, got {self.n}")
        neighbours: list[list[int]] = [[] for _ in range(self.n)]
        seen: set[tuple[int, int]] = set()
        for e in self.edges:
            u, v = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e}: endpoint out of range for n={self.n}")
            if u == v:
                raise GraphError(f"edge {e}: self-loop")
            if u > v:
                raise GraphError(f"edge {e}: not canonical, expected (min, max)")
            if e in seen:
                raise GraphError(f"edge {e}: duplicate")
            seen.add(e)
            neighbours[u].append(v)
            neighbours[v].append(u)
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in neighbours))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def vertices(self) -> range:
        return range(self.n)


@dataclass(frozen=True)
class DistMatrix:
    """All-pairs hop distances; ``rows[u][v]`` is the distance from u to v."""

    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, u: int) -> tuple[int, ...]:
        return self.rows[u]

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def connected(self) -> bool:
        return all(UNREACHABLE not in row for row in self.rows)


@dataclass(frozen=True)
class MetricProfile:
    """Eccentricities, radius, diameter and degrees of a connected graph."""

    eccentricities: tuple[int, ...]
    radius: int
    diameter: int
    degrees: tuple[int, ...]
    max_degree: int


@dataclass(frozen=True)
class TreeProfile:
    """Leaf and exterior-major-vertex statistics of a tree.

    A *major* vertex has degree at least 3.  A leaf is *terminal* for the
    major vertex strictly nearest to it; an *exterior* major vertex owns at
    least one terminal leaf.
    """

    leaf_count: int
    exterior_majors: tuple[int, ...]
    terminal_degree: dict[int, int]


class DominationResult(NamedTuple):
    value: int
    witness: tuple[int, ...]


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate and canonicalise raw edge input into a :class:`Graph`.

    Duplicate edges are an error rather than being collapsed silently:
    composition recipes that accidentally merge edges are bugs worth
    surfacing.
    """
    if n < 1:
        raise GraphError(f"graph order must be >= 1, got {n}")
    canonical: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for idx, pair in enumerate(edges):
        try:
            u, v = pair
        except (TypeError, ValueError):
            raise GraphError(f"edges[{idx}]: expected a pair, got {pair!r}") from None
        if not (isinstance(u, int) and isinstance(v, int)):
            raise GraphError(f"edges[{idx}]: endpoints must be integers, got {pair!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edges[{idx}]: endpoint out of range for n={n}: ({u}, {v})")
        if u == v:
            raise GraphError(f"edges[{idx}]: self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphError(f"edges[{idx}]: duplicate edge ({u}, {v})")
        seen.add(e)
        canonical.append(e)
    return Graph(n, tuple(sorted(canonical)))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs order >= 1, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs order >= 3, got {n}")
    edges = sorted([(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])
    return Graph(n, tuple(edges))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs order >= 1, got {n}")
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def star_graph(leaves: int) -> Graph:
    """Star with the given number of leaves; the centre is vertex 0."""
    if leaves < 1:
        raise GraphError(f"star needs at least 1 leaf, got {leaves}")
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


_STANDARD = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "star": star_graph,
}


def make_standard(kind: str, size: int) -> Graph:
    """Build one of the named families: path, cycle, complete or star.

    ``size`` is the order for path/cycle/complete and the leaf count for a
    star (order ``size + 1``, centre labelled 0).
    """
    try:
        builder = _STANDARD[kind]
    except KeyError:
        raise GraphError(f"unknown standard family {kind!r}") from None
    return builder(size)


def join_with_k1(h: Graph) -> Graph:
    """Join a fresh vertex to every vertex of ``h``.

    The new vertex is labelled ``h.n``; existing labels are preserved.  The
    input need not be connected, the result always is.
    """
    extra = tuple((v, h.n) for v in range(h.n))
    return Graph(h.n + 1, tuple(sorted(h.edges + extra)))


_dist_cache: "WeakKeyDictionary[Graph, DistMatrix]" = WeakKeyDictionary()


def _bfs_row(g: Graph, source: int) -> tuple[int, ...]:
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du + 1
                queue.append(w)
    return tuple(dist)


def all_pairs_distances(g: Graph) -> DistMatrix:
    """BFS-exact hop distances; :data:`UNREACHABLE` marks disconnected pairs."""
    cached = _dist_cache.get(g)
    if cached is None:
        cached = DistMatrix(tuple(_bfs_row(g, s) for s in range(g.n)))
        _dist_cache[g] = cached
    return cached


def is_connected(g: Graph) -> bool:
    return UNREACHABLE not in all_pairs_distances(g).rows[0]


def require_connected(g: Graph, operation: str) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError(f"{operation} requires a connected graph")


def metric_profile(g: Graph) -> MetricProfile:
    """Exact eccentricities, radius, diameter and degrees of a connected graph."""
    require_connected(g, "metric_profile")
    dist = all_pairs_distances(g)
    ecc = tuple(max(row) for row in dist.rows)
    degrees = tuple(g.degree(v) for v in range(g.n))
    return MetricProfile(
        eccentricities=ecc,
        radius=min(ecc),
        diameter=max(ecc),
        degrees=degrees,
        max_degree=max(degrees),
    )


def is_two_antipodal(g: Graph) -> bool:
    """True iff every vertex has exactly one vertex at diametral distance."""
    require_connected(g, "is_two_antipodal")
    dist = all_pairs_distances(g)
    diameter = max(max(row) for row in dist.rows)
    return all(sum(1 for d in row if d == diameter) == 1 for row in dist.rows)


def _validated_vertex_set(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    vset = frozenset(vertices)
    for v in vset:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise GraphError(f"vertex {v!r} out of range for n={g.n}")
    return vset


def isolated_after_removal(g: Graph, removed: Iterable[int]) -> frozenset[int]:
    """Vertices outside ``removed`` whose neighbours all lie inside it."""
    rem = _validated_vertex_set(g, removed)
    return frozenset(
        v for v in range(g.n) if v not in rem and all(w in rem for w in g.adj[v])
    )


def domination_number(g: Graph) -> DominationResult:
    """Exact domination number with the lexicographically least witness.

    Isolated vertices are allowed; each one is forced into every dominating
    set because only its own closed neighbourhood covers it.
    """
    masks = []
    for v in range(g.n):
        m = 1 << v
        for w in g.adj[v]:
            m |= 1 << w
        masks.append(m)
    system = CoverSystem(masks, (1 << g.n) - 1)
    size, _ = system.min_cover()
    witness = system.lex_least_cover(size)
    return DominationResult(size, tuple(witness))


def is_tree(g: Graph) -> bool:
    return is_connected(g) and len(g.edges) == g.n - 1


def is_path(g: Graph) -> bool:
    if not is_connected(g):
        return False
    if g.n == 1:
        return True
    degrees = [g.degree(v) for v in range(g.n)]
    return degrees.count(1) == 2 and degrees.count(2) == g.n - 2


def is_complete(g: Graph) -> bool:
    return len(g.edges) == g.n * (g.n - 1) // 2


def tree_profile(g: Graph) -> TreeProfile:
    """Leaf count, exterior major vertices and terminal degrees of a tree."""
    if g.n < 3:
        raise GraphError(f"tree_profile needs order >= 3, got {g.n}")
    if not is_tree(g):
        raise GraphError("tree_profile requires a tree")
    dist = all_pairs_distances(g)
    leaves = [v for v in range(g.n) if g.degree(v) == 1]
    majors = [v for v in range(g.n) if g.degree(v) >= 3]
    terminal: dict[int, int] = {}
    for u in leaves:
        # the strictly nearest major vertex, if unique, owns this leaf
        best: int | None = None
        best_d: int | None = None
        tied = False
        for m in majors:
            d = dist[u][m]
            if best_d is None or d < best_d:
                best, best_d, tied = m, d, False
            elif d == best_d:
                tied = True
        if best is not None and not tied:
            terminal[best] = terminal.get(best, 0) + 1
    exterior = tuple(sorted(terminal))
    return TreeProfile(
        leaf_count=len(leaves),
        exterior_majors=exterior,
        terminal_degree=terminal,
    )


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``keep``, relabelled densely.

    Returns the subgraph and the original labels in relabelling order, so
    ``labels[i]`` is the vertex of ``g`` that became vertex ``i``.
    """
    labels = tuple(sorted(_validated_vertex_set(g, keep)))
    if not labels:
        raise GraphError("induced subgraph needs at least one vertex")
    index = {v: i for i, v in enumerate(labels)}
    edges = tuple(
        (index[u], index[v]) for (u, v) in g.edges if u in index and v in index
    )
    return Graph(len(labels), edges), labels
