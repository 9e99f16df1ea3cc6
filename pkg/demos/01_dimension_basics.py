"""Resolving sets and the dimension variants on small named graphs.

Run with: python3 demos/01_dimension_basics.py
"""

from metricdim import (
    attaching_dimension,
    basis_membership,
    complete_graph,
    cycle_graph,
    enumerate_bases,
    is_resolving,
    isolation_index,
    metric_dimension,
    path_graph,
    star_graph,
    upper_metric_dimension,
)
from metricdim.gallery import petersen

print("=== metric dimension of the classic families ===")
for label, g in [
    ("P_7", path_graph(7)),
    ("C_7", cycle_graph(7)),
    ("K_7", complete_graph(7)),
    ("K_{1,6}", star_graph(6)),
    ("Petersen", petersen()),
]:
    value, basis = metric_dimension(g)
    print(f"{label:>9}: dim = {value}, least basis = {basis}")

print()
print("=== one leaf pins down a whole path ===")
p6 = path_graph(6)
print("landmarks {0} resolve P_6:", is_resolving(p6, {0}))
print("landmarks {2} resolve P_6:", is_resolving(p6, {2}), "(interior vertices see both sides)")

print()
print("=== the full basis family and who appears in it ===")
c4 = cycle_graph(4)
report = enumerate_bases(c4)
print("bases of C_4:", report.bases, "(exactly the adjacent pairs)")
print("membership flags:", report.membership)
p5 = path_graph(5)
print("P_5 vertices in some basis:", [v for v in range(5) if basis_membership(p5, v)])

print()
print("=== minimal generators can be larger than minimum ones ===")
for label, g in [("P_5", path_graph(5)), ("C_6", cycle_graph(6)), ("K_5", complete_graph(5))]:
    print(f"{label}: dim = {metric_dimension(g).value}, upper dim = {upper_metric_dimension(g)}")

print()
print("=== attaching dimension: landmarks you get for free ===")
k5 = complete_graph(5)
for attached in [set(), {0}, {0, 1}, {0, 1, 2, 3}]:
    value, witness = attaching_dimension(k5, attached)
    print(f"K_5 with attachments {sorted(attached)}: {value} extra landmark(s) {witness}")

print()
print("=== isolation index: how empty a basis can leave the rest ===")
for label, g in [("K_6", complete_graph(6)), ("C_4", cycle_graph(4)), ("C_5", cycle_graph(5))]:
    print(f"{label}: isolation index = {isolation_index(g)}")
