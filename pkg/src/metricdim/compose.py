"""Point-attaching compositions and the product constructions built on them.

A composition glues connected, nontrivial component graphs one at a time:
each new component has one chosen vertex identified with an existing
(composed) vertex.  Composed labels are assigned in attach order and
component-contiguous; the identified vertex keeps the host's label, which
keeps provenance stable for tests and reports.

The vertices created by identification are the attachment vertices.  Per
component they induce an attachment set, an end/internal classification, and
two structural predicates used by the closed dimension formulas:

* :func:`has_dominant_attachments` (internal components): no outside vertex
  sits farther from every attachment than an attachment itself does.
* :func:`needs_local_landmark` (end components): the component contributes at
  least one landmark of its own to any attaching generator, i.e. it has a
  single attachment vertex and is not a path rooted at a leaf.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import GraphError
from .graph import (
    Graph,
    all_pairs_distances,
    build_graph,
    complete_graph,
    domination_number,
    induced_subgraph,
    is_connected,
    is_path,
    isolated_after_removal,
    join_with_k1,
    path_graph,
    require_connected,
    star_graph,
    _validated_vertex_set,
)
from .resolve import (
    attaching_dimension,
    enumerate_bases,
    is_resolving,
    max_basis_overlap,
    metric_dimension,
    upper_metric_dimension,
)


class AttachStep(NamedTuple):
    host: int
    component: int
    vertex: int


@dataclass(eq=False)
class AttachProfile:
    """Attachment data of one component inside a composition.

    ``attachments`` are component-local labels.  ``local_landmark_needed`` is
    only evaluated for end components and is ``None`` otherwise.  Dimension
    quantities are computed on first access.
    """

    index: int
    graph: Graph
    attachments: tuple[int, ...]
    kind: str  # "end" | "internal"
    dominant_attachments: bool
    local_landmark_needed: bool | None

    @cached_property
    def dim(self) -> int:
        return metric_dimension(self.graph, witness=False).value

    @cached_property
    def attaching_dim(self) -> int:
        return attaching_dimension(self.graph, self.attachments).value

    @cached_property
    def basis_overlap(self) -> int:
        return max_basis_overlap(self.graph, self.attachments)

    @cached_property
    def upper_dim(self) -> int:
        return upper_metric_dimension(self.graph)


@dataclass(frozen=True, eq=False)
class Composition:
    """Finalised point-attaching construction with full provenance."""

    components: tuple[Graph, ...]
    steps: tuple[AttachStep, ...]
    graph: Graph
    provenance: dict[tuple[int, int], int]
    attachment_vertices: frozenset[int]
    profiles: tuple[AttachProfile, ...]

    def vertex_of(self, component: int, local: int) -> int:
        """Composed label of a component vertex."""
        return self.provenance[(component, local)]

    def composed_attachments(self, component: int) -> tuple[int, ...]:
        profile = self.profiles[component]
        return tuple(sorted(self.provenance[(component, u)] for u in profile.attachments))


def _check_component(g: Graph) -> None:
    if g.n < 2:
        raise GraphError("components must be nontrivial (order >= 2)")
    if not is_connected(g):
        raise GraphError("components must be connected")


class CompositionBuilder:
    """Mutable single-owner builder; :meth:`finalize` freezes the result."""

    def __init__(self, seed: Graph):
        _check_component(seed)
        self._components: list[Graph] = [seed]
        self._steps: list[AttachStep] = []
        self._labels: dict[tuple[int, int], int] = {(0, v): v for v in range(seed.n)}
        self._edges: list[tuple[int, int]] = list(seed.edges)
        self._order = seed.n
        self._attached: set[int] = set()

    @property
    def order(self) -> int:
        return self._order

    def label(self, component: int, vertex: int) -> int:
        return self._labels[(component, vertex)]

    def attach(self, host: int, g_new: Graph, new_vertex: int) -> "CompositionBuilder":
        """Identify ``new_vertex`` of a fresh component with composed ``host``.

        The host may already be an attachment vertex; sharing is allowed.
        """
        if not (0 <= host < self._order):
            raise GraphError(f"host vertex {host} out of range for current order {self._order}")
        _check_component(g_new)
        if not (0 <= new_vertex < g_new.n):
            raise GraphError(f"attach vertex {new_vertex} out of range for component of order {g_new.n}")
        index = len(self._components)
        for u in range(g_new.n):
            if u == new_vertex:
                self._labels[(index, u)] = host
            else:
                self._labels[(index, u)] = self._order
                self._order += 1
        for (u, w) in g_new.edges:
            a = self._labels[(index, u)]
            b = self._labels[(index, w)]
            self._edges.append((a, b) if a < b else (b, a))
        self._attached.add(host)
        self._components.append(g_new)
        self._steps.append(AttachStep(host, index, new_vertex))
        return self

    def finalize(self) -> Composition:
        if len(self._components) < 2:
            raise GraphError("a composition needs at least two components")
        assert self._order == sum(c.n for c in self._components) - len(self._steps)
        graph = build_graph(self._order, self._edges)
        require_connected(graph, "finalize")
        attached = frozenset(self._attached)
        profiles = []
        for i, comp in enumerate(self._components):
            local = tuple(
                sorted(u for u in range(comp.n) if self._labels[(i, u)] in attached)
            )
            kind = "end" if len(local) == 1 else "internal"
            profiles.append(
                AttachProfile(
                    index=i,
                    graph=comp,
                    attachments=local,
                    kind=kind,
                    dominant_attachments=has_dominant_attachments(comp, local),
                    local_landmark_needed=(
                        needs_local_landmark(comp, local) if kind == "end" else None
                    ),
                )
            )
        return Composition(
            components=tuple(self._components),
            steps=tuple(self._steps),
            graph=graph,
            provenance=dict(self._labels),
            attachment_vertices=attached,
            profiles=tuple(profiles),
        )


def has_dominant_attachments(g: Graph, attachments: Iterable[int]) -> bool:
    """For every attachment a and outside vertex z, some attachment b
    satisfies d(a, b) >= d(z, b)."""
    require_connected(g, "has_dominant_attachments")
    attached = _validated_vertex_set(g, attachments)
    if not attached:
        raise GraphError("attachment set must be nonempty")
    dist = all_pairs_distances(g)
    outside = [z for z in range(g.n) if z not in attached]
    for a in attached:
        row_a = dist[a]
        for z in outside:
            row_z = dist[z]
            if not any(row_a[b] >= row_z[b] for b in attached):
                return False
    return True


def needs_local_landmark(g: Graph, attachments: Iterable[int]) -> bool:
    """Single attachment vertex, and the component is not a leaf-rooted path.

    Equivalent to: any generator formed by the attachment set alone fails, so
    the component must contribute a landmark of its own.
    """
    require_connected(g, "needs_local_landmark")
    attached = _validated_vertex_set(g, attachments)
    if len(attached) != 1:
        return False
    (v,) = attached
    return not is_path(g) or g.degree(v) >= 2


def chain(parts: Sequence[tuple[Graph, int, int]]) -> Composition:
    """Glue each part's exit vertex to the next part's entry vertex.

    Parts are ``(graph, entry, exit)`` triples; the first entry and the last
    exit are ignored.  Internal parts need distinct entry and exit.
    """
    if len(parts) < 2:
        raise GraphError("a chain needs at least two parts")
    for i, (g, x, y) in enumerate(parts):
        if not (0 <= x < g.n and 0 <= y < g.n):
            raise GraphError(f"parts[{i}]: entry/exit vertex out of range")
        if 0 < i < len(parts) - 1 and x == y:
            raise GraphError(f"parts[{i}]: internal parts need distinct entry and exit")
    first_graph, _, first_exit = parts[0]
    builder = CompositionBuilder(first_graph)
    host = first_exit
    for i, (g, x, y) in enumerate(parts[1:], start=1):
        builder.attach(host, g, x)
        if i < len(parts) - 1:
            host = builder.label(i, y)
    return builder.finalize()


def block_graph(sizes: Sequence[int], glue: Sequence[tuple[int, int]]) -> Composition:
    """Composition of complete graphs; ``glue[i]`` is the (host, local vertex)
    pair for clique ``i + 1``."""
    if len(sizes) < 2:
        raise GraphError("a block graph needs at least two cliques")
    if len(glue) != len(sizes) - 1:
        raise GraphError(f"glue must have {len(sizes) - 1} entries, got {len(glue)}")
    builder = CompositionBuilder(complete_graph(sizes[0]))
    for (host, local), size in zip(glue, sizes[1:]):
        builder.attach(host, complete_graph(size), local)
    return builder.finalize()


def rooted_product_family(
    g: Graph, rooted: Sequence[tuple[Graph, int]]
) -> Composition:
    """Attach one rooted component copy at each vertex of the base graph.

    The base becomes the single internal component with every vertex an
    attachment; each copy is an end component attached at its root.
    """
    if not is_connected(g) or g.n < 2:
        raise GraphError("base graph must be connected with order >= 2")
    if len(rooted) != g.n:
        raise GraphError(f"need one rooted graph per base vertex ({g.n}), got {len(rooted)}")
    builder = CompositionBuilder(g)
    for i, (h, root) in enumerate(rooted):
        builder.attach(i, h, root)
    return builder.finalize()


def rooted_product_uniform(g: Graph, h: Graph, root: int) -> Composition:
    """Rooted product with one copy of ``h`` per base vertex.

    Copy ``i`` is component ``i + 1``; ``vertex_of(i + 1, b)`` recovers the
    composed label of pair ``(i, b)``.
    """
    return rooted_product_family(g, [(h, root)] * g.n)


def corona(g: Graph, family: Sequence[Graph]) -> Composition:
    """Join a fresh apex to each family member, then root-attach the joins.

    Family members may be trivial or disconnected; the join absorbs both.
    """
    if not is_connected(g) or g.n < 2:
        raise GraphError("base graph must be connected with order >= 2")
    if len(family) != g.n:
        raise GraphError(f"need one family member per base vertex ({g.n}), got {len(family)}")
    rooted = [(join_with_k1(h), h.n) for h in family]
    return rooted_product_family(g, rooted)


def build_realization_tree(a: int, b: int, n: int) -> Graph:
    """Tree of order ``n`` with ``b`` leaves and ``b - a`` exterior majors.

    A star with ``a`` leaves is glued to one end of a path, and ``b - a - 1``
    pendant vertices are added to the path's degree-two vertices nearest the
    star.  Requires ``2 <= a < b`` and ``2b <= a + n``; any pendant placement
    gives the same leaf statistics, the nearest-the-star rule is fixed for
    reproducibility.
    """
    if not 2 <= a < b:
        raise GraphError(f"need 2 <= a < b, got a={a}, b={b}")
    if 2 * b > a + n:
        raise GraphError(f"need 2b <= a + n, got a={a}, b={b}, n={n}")
    path_order = n - b + 1  # >= 2 by the constraints above
    pendants = b - a - 1
    edges: list[tuple[int, int]] = []
    # star: centre 0, leaves 1..a
    edges.extend((0, i) for i in range(1, a + 1))
    # path continues from the centre: 0, a+1, ..., a+path_order-1
    prev = 0
    for i in range(1, path_order):
        edges.append((min(prev, a + i), max(prev, a + i)))
        prev = a + i
    # pendants on the path vertices adjacent to the star side
    next_label = a + path_order
    for i in range(1, pendants + 1):
        edges.append((a + i, next_label))
        next_label += 1
    assert next_label == n
    return build_graph(n, edges)


def build_isolation_family(t: int) -> Graph:
    """Order ``2t + 1`` graph whose basis leaves a maximal isolated remainder.

    Vertex 0 is a hub joined to spokes ``1..t``; outer vertices ``t+1..2t``
    connect to every spoke except their own twin, so spoke i and outer i sit
    at distance 3 while all other cross pairs are adjacent.
    """
    if t < 3:
        raise GraphError(f"isolation family needs t >= 3, got {t}")
    edges: list[tuple[int, int]] = [(0, i) for i in range(1, t + 1)]
    for i in range(1, t + 1):
        for j in range(1, t + 1):
            if i != j:
                edges.append((i, t + j))
    return build_graph(2 * t + 1, edges)


class PathProductWitness(NamedTuple):
    product: Composition
    landmarks: tuple[int, ...]
    basis: tuple[int, ...]
    dominating: tuple[int, ...]


def path_product_generator(g: Graph, p_len: int) -> PathProductWitness:
    """Constructive resolving set for the product of ``g`` with leaf-rooted paths.

    Builds the product in which every vertex of ``g`` grows a path of order
    ``p_len``, then projects a well-chosen landmark set onto the far leaves:
    a basis of ``g`` maximising the isolated remainder, plus a minimum
    dominating set of whatever is neither in the basis nor isolated by it.
    Ties break lexicographically.  The returned set is verified to resolve
    the product and satisfies ``2 * size <= dim(g) + n - isolation(g)``.
    """
    require_connected(g, "path_product_generator")
    if g.n < 2:
        raise GraphError(f"path_product_generator needs order >= 2, got {g.n}")
    if p_len < 2:
        raise GraphError(f"path length must be >= 2, got {p_len}")

    report = enumerate_bases(g)
    best: tuple[int, ...] | None = None
    best_iso: frozenset[int] = frozenset()
    for basis in report.bases:  # lex order, so first maximiser is lex-least
        iso = isolated_after_removal(g, basis)
        if best is None or len(iso) > len(best_iso):
            best, best_iso = basis, iso
    assert best is not None
    remainder = sorted(set(range(g.n)) - set(best) - best_iso)
    if remainder:
        sub, labels = induced_subgraph(g, remainder)
        _, witness = domination_number(sub)
        dominating = tuple(labels[i] for i in witness)
    else:
        dominating = ()

    product = rooted_product_uniform(g, path_graph(p_len), 0)
    far = p_len - 1
    landmarks = tuple(
        sorted(product.vertex_of(u + 1, far) for u in set(best) | set(dominating))
    )
    if not is_resolving(product.graph, landmarks):
        raise RuntimeError("internal error: constructed landmark set fails to resolve")
    return PathProductWitness(product, landmarks, best, dominating)
