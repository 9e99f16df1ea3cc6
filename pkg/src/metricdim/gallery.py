"""Small named graphs and compositions used by the demos and tests."""

from __future__ import annotations

from .compose import Composition, CompositionBuilder, chain
from .graph import Graph, build_graph, complete_graph, cycle_graph, star_graph


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i to i+5."""
    edges = []
    for i in range(5):
        edges.append(tuple(sorted((i, (i + 1) % 5))))
        edges.append((i, i + 5))
        edges.append(tuple(sorted((5 + i, 5 + (i + 2) % 5))))
    return build_graph(10, edges)


def chorded_hexagon() -> Graph:
    """Six-cycle 0..5 with chords (1,5) and (2,4).

    Joining an apex to this graph yields a join whose apex lies in a basis,
    which makes it the standard counterexample to apex-free corona formulas.
    """
    return build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 5), (2, 4)])


def hexagon_with_pendant_pair() -> Graph:
    """Six-cycle 0..5 with two pendant vertices 6, 7 hanging off vertex 3.

    Radius three with maximum degree four; the join with an apex has
    dimension four yet the apex belongs to no basis of the join.
    """
    return build_graph(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (3, 6), (3, 7)])


def chain_demo() -> Composition:
    """Four-part chain: star, square, triangle, triangle (12 vertices).

    The star's leaf 1 glues to the square, antipodal square vertices carry
    the link onwards, and two triangles close the chain.  Composed dimension
    is 4, split as attaching dimensions (2, 1, 0, 1).
    """
    return chain(
        [
            (star_graph(4), 1, 1),
            (cycle_graph(4), 0, 2),
            (complete_graph(3), 0, 1),
            (complete_graph(3), 0, 0),
        ]
    )


def square_hub_demo() -> Composition:
    """A square whose four corners all carry pendant components (17 vertices).

    Component order: star, square, triangle, triangle, triangle, clique.
    The square is attached to a star leaf and hosts a triangle on each of its
    other three corners; one triangle additionally carries a 4-clique, making
    it internal.  Composed dimension is 6.
    """
    builder = CompositionBuilder(star_graph(4))
    builder.attach(1, cycle_graph(4), 0)  # corners: 1, 5, 6, 7
    builder.attach(5, complete_graph(3), 0)
    builder.attach(6, complete_graph(3), 0)  # fresh vertices 10, 11
    builder.attach(7, complete_graph(3), 0)
    builder.attach(10, complete_graph(4), 0)
    return builder.finalize()
