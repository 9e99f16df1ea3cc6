"""Rooted products, coronas, and the path-product bounds.

Run with: python3 demos/03_products.py
"""

from metricdim import (
    basis_membership,
    build_isolation_family,
    build_realization_tree,
    corona_report,
    cycle_graph,
    complete_graph,
    isolation_index,
    join_with_k1,
    k1_lemma_check,
    metric_dimension,
    path_graph,
    path_product_bounds_report,
    path_product_generator,
    rooted_family_report,
    rooted_product_uniform,
    tree_dim_report,
    verify_tree_realization,
)
from metricdim.gallery import chorded_hexagon, hexagon_with_pendant_pair

print("=== rooted products: one copy per base vertex ===")
p4, c3 = path_graph(4), cycle_graph(3)
product = rooted_product_uniform(p4, c3, 0)
print("P_4 with triangle copies: order", product.graph.n,
      "dim", metric_dimension(product.graph).value)
report = rooted_family_report(p4, [(c3, 0)] * 4)
print("report:", report.verdict, "| per-copy dims", report.details["copy_dims"],
      "| roots in bases", report.details["root_in_some_basis"])

print()
print("=== interior-rooted path copies collapse the dimension to the order ===")
product = rooted_product_uniform(c3, p4, 1)
print("C_3 with interior-rooted P_4 copies: dim",
      metric_dimension(product.graph).value, "= base order", c3.n)

print()
print("=== coronas are rooted products of joins ===")
h = chorded_hexagon()
joined = join_with_k1(h)
print("chorded hexagon join: dim", metric_dimension(joined).value,
      "| apex in a basis:", basis_membership(joined, h.n))
report = corona_report(path_graph(2), [h, h])
print("P_2 corona: ", report.verdict, "| formula", report.formula, "=", report.details["uniform_form"])

pend = hexagon_with_pendant_pair()
joined = join_with_k1(pend)
print("pendant-pair hexagon join: dim", metric_dimension(joined).value,
      "| apex in a basis:", basis_membership(joined, pend.n))
print("join lemma check:", k1_lemma_check(pend).verdict,
      "(radius 3 keeps the lemma silent, yet the apex is still excluded)")
print("join lemma on P_9:", k1_lemma_check(path_graph(9)).verdict, "(radius 4 applies)")

print()
print("=== leaf-rooted path copies: bounds instead of a formula ===")
for label, g in [("C_4", cycle_graph(4)), ("K_4", complete_graph(4))]:
    report = path_product_bounds_report(g, 2)
    d = report.details
    print(f"{label}: dim {d['base_dim']} <= product dim {d['product_dim']},"
          f" doubled upper bound {d['doubled_upper_bound']} | {report.verdict}")

print()
print("=== the isolation family meets its bounds with equality ===")
g4 = build_isolation_family(4)
print("order", g4.n, "dim", metric_dimension(g4).value, "isolation", isolation_index(g4))
witness = path_product_generator(g4, 3)
print("constructed landmark set (far leaves):", witness.landmarks,
      "| product dim", metric_dimension(witness.product.graph).value)

print()
print("=== trees realise any feasible (dim, product dim) pair ===")
tree = build_realization_tree(3, 7, 12)
print("tree formula:", tree_dim_report(tree).verdict,
      "| dim", tree_dim_report(tree).oracle)
report = verify_tree_realization(3, 7, 12, p_len=2)
print("realization (3, 7, 12):", report.verdict, "| product dim",
      report.details["product_dim"])
