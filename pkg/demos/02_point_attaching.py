"""Building graphs by point-attaching and reading off their dimension.

Run with: python3 demos/02_point_attaching.py
"""

from metricdim import (
    CompositionBuilder,
    block_formula_report,
    block_graph,
    chain_report,
    complete_graph,
    cycle_graph,
    lower_bound_report,
    main_equality_report,
    metric_dimension,
    star_graph,
)
from metricdim.gallery import chain_demo, square_hub_demo

print("=== a composition is built one identification at a time ===")
builder = CompositionBuilder(star_graph(4))
builder.attach(1, cycle_graph(4), 0)      # glue a square onto leaf 1
builder.attach(6, complete_graph(3), 0)   # and a triangle onto the far corner
comp = builder.finalize()
print("composed order:", comp.graph.n)
print("attachment vertices:", sorted(comp.attachment_vertices))
for p in comp.profiles:
    print(
        f"  component {p.index}: order {p.graph.n}, {p.kind},"
        f" attachments {p.attachments}, dim* {p.attaching_dim}"
    )

print()
print("=== the chain fixture: star - square - triangle - triangle ===")
chain_comp = chain_demo()
print("order:", chain_comp.graph.n)
print("attaching dimensions:", [p.attaching_dim for p in chain_comp.profiles])
print("exact dim:", metric_dimension(chain_comp.graph).value)
report = chain_report(chain_comp)
print("chain report:", report.verdict, "| formula", report.formula, "| oracle", report.oracle)

print()
print("=== the square hub fixture: every corner carries something ===")
hub = square_hub_demo()
print("order:", hub.graph.n)
print("component dims:   ", [p.dim for p in hub.profiles])
print("basis overlaps:   ", [p.basis_overlap for p in hub.profiles])
print("dim - overlap sums to", sum(p.dim - p.basis_overlap for p in hub.profiles))
print("exact dim:", metric_dimension(hub.graph).value)

print()
print("=== the additive lower bound never fails, the equality needs hypotheses ===")
low = lower_bound_report(chain_comp)
print("lower bound:", low.verdict, "| sum of dim*", low.formula, "<= dim", low.oracle)
eq = main_equality_report(chain_comp)
print("equality:", eq.verdict, "| hypotheses:", eq.hypotheses)

pair = CompositionBuilder(cycle_graph(4)).attach(0, cycle_graph(4), 0).finalize()
eq = main_equality_report(pair)
print("two squares only:", eq.verdict, "| hypotheses:", eq.hypotheses)

print()
print("=== block graphs: cliques glued along a path ===")
blocks = block_graph([3, 4, 3], [(0, 0), (4, 0)])
report = block_formula_report(blocks)
print("triangle - K4 - triangle:", report.verdict,
      "| clique terms", report.details["clique_terms"], "| dim", report.oracle)
