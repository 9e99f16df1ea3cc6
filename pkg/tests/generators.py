"""Seeded random instances for the property and acceptance suites."""

from __future__ import annotations

import heapq
import random

from metricdim import (
    Composition,
    CompositionBuilder,
    Graph,
    build_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform random labelled tree from a random Pruefer sequence."""
    if n < 2:
        raise ValueError("trees need n >= 2")
    if n == 2:
        return build_graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return build_graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, extra_edge_prob: float = 0.35) -> Graph:
    """Random spanning tree plus each remaining edge independently."""
    tree = random_tree(rng, n) if n >= 2 else build_graph(1, [])
    edges = set(tree.edges)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_edge_prob:
                edges.add((u, v))
    return build_graph(n, sorted(edges))


#: Small connected parts for random compositions.
PART_POOL = (
    complete_graph(3),
    complete_graph(4),
    cycle_graph(4),
    cycle_graph(6),
    star_graph(3),
    path_graph(4),
)


def random_composition(
    rng: random.Random, max_total: int = 20, pool: tuple[Graph, ...] = PART_POOL
) -> Composition:
    """Random point-attaching composition with at least two parts."""
    first = rng.choice(pool)
    builder = CompositionBuilder(first)
    total = first.n
    parts = 1
    while True:
        candidates = [g for g in pool if total + g.n - 1 <= max_total]
        if not candidates:
            break
        if parts >= 2 and rng.random() < 0.35:
            break
        g = rng.choice(candidates)
        host = rng.randrange(builder.order)
        vertex = rng.randrange(g.n)
        builder.attach(host, g, vertex)
        total += g.n - 1
        parts += 1
    return builder.finalize()
