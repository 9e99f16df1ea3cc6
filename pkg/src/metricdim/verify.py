"""Mechanical checks of the closed dimension formulas against brute force.

Each report evaluates one statement: its hypotheses are checked explicitly,
the formula value is computed from component quantities, and the composed
graph's dimension is recomputed by exact search as the oracle.  Hypothesis
failures never raise; they yield a ``hypotheses-unmet`` verdict so instance
families can be batch-scanned.  When the composed order exceeds the oracle
guardrail the oracle is skipped and the verdict is ``unverified``.

A ``refuted`` verdict means hypotheses passed yet formula and oracle
disagree, which signals an implementation bug and is never expected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .compose import (
    Composition,
    corona,
    build_isolation_family,
    build_realization_tree,
    needs_local_landmark,
    path_product_generator,
    rooted_product_family,
    rooted_product_uniform,
)
from .errors import GraphError
from .graph import (
    Graph,
    all_pairs_distances,
    is_complete,
    is_path,
    is_tree,
    join_with_k1,
    metric_profile,
    path_graph,
    require_connected,
    tree_profile,
)
from .resolve import (
    DIM_GUARDRAIL,
    basis_membership,
    is_resolving,
    isolation_index,
    metric_dimension,
)

FORMULA_MATCHES = "formula-matches"
BOUND_HOLDS = "bound-holds"
HYPOTHESES_UNMET = "hypotheses-unmet"
REFUTED = "refuted"
UNVERIFIED = "unverified"


@dataclass(frozen=True, eq=False)
class VerificationReport:
    statement: str
    hypotheses: dict[str, bool]
    formula: int | None
    oracle: int | None
    verdict: str
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "statement": self.statement,
            "hypotheses": dict(self.hypotheses),
            "formula": self.formula,
            "oracle": self.oracle,
            "verdict": self.verdict,
            "details": dict(self.details),
        }


def _oracle_dim(g: Graph, oracle_max_n: int) -> int | None:
    if g.n > oracle_max_n:
        return None
    return metric_dimension(g, max_n=oracle_max_n, witness=False).value


def _equality_verdict(hypotheses: dict[str, bool], formula: int, oracle: int | None) -> str:
    if not all(hypotheses.values()):
        return HYPOTHESES_UNMET
    if oracle is None:
        return UNVERIFIED
    return FORMULA_MATCHES if formula == oracle else REFUTED


def lower_bound_report(
    c: Composition, *, oracle_max_n: int = DIM_GUARDRAIL
) -> VerificationReport:
    """Composed dimension is at least the sum of attaching dimensions.

    Unconditional: there are no hypotheses to check.
    """
    terms = [p.attaching_dim for p in c.profiles]
    formula = sum(terms)
    oracle = _oracle_dim(c.graph, oracle_max_n)
    if oracle is None:
        verdict = UNVERIFIED
    else:
        verdict = BOUND_HOLDS if oracle >= formula else REFUTED
    return VerificationReport(
        statement="lower-bound",
        hypotheses={},
        formula=formula,
        oracle=oracle,
        verdict=verdict,
        details={"component_terms": terms},
    )


def _end_profiles(c: Composition):
    return [p for p in c.profiles if p.kind == "end"]


def _ends_disjoint(c: Composition) -> bool:
    labels = [c.vertex_of(p.index, p.attachments[0]) for p in _end_profiles(c)]
    return len(labels) == len(set(labels))


def _main_hypotheses(c: Composition) -> dict[str, bool]:
    return {
        "component-count>=3": len(c.profiles) >= 3,
        "internal-attachments-dominate": all(
            p.dominant_attachments for p in c.profiles if p.kind == "internal"
        ),
        "ends-need-local-landmark": all(
            bool(p.local_landmark_needed) for p in _end_profiles(c)
        ),
        "end-attachments-disjoint": _ends_disjoint(c),
    }


def main_equality_report(
    c: Composition, *, oracle_max_n: int = DIM_GUARDRAIL
) -> VerificationReport:
    """Composed dimension equals the sum of attaching dimensions."""
    hypotheses = _main_hypotheses(c)
    terms = [p.attaching_dim for p in c.profiles]
    formula = sum(terms)
    oracle = _oracle_dim(c.graph, oracle_max_n)
    return VerificationReport(
        statement="main-equality",
        hypotheses=hypotheses,
        formula=formula,
        oracle=oracle,
        verdict=_equality_verdict(hypotheses, formula, oracle),
        details={"component_terms": terms},
    )


def extremal_report(
    c: Composition, *, oracle_max_n: int = DIM_GUARDRAIL
) -> VerificationReport:
    """Composed dimension as component dimensions minus basis overlaps.

    Needs the main-equality hypotheses plus: every component whose vertices
    are not all attachments has all its minimal generators of minimum size.
    """
    hypotheses = _main_hypotheses(c)
    hypotheses["minimal-generators-all-minimum"] = all(
        p.dim == p.upper_dim
        for p in c.profiles
        if len(p.attachments) != p.graph.n
    )
    dims = [p.dim for p in c.profiles]
    overlaps = [p.basis_overlap for p in c.profiles]
    formula = sum(d - t for d, t in zip(dims, overlaps))
    oracle = _oracle_dim(c.graph, oracle_max_n)
    return VerificationReport(
        statement="extremal",
        hypotheses=hypotheses,
        formula=formula,
        oracle=oracle,
        verdict=_equality_verdict(hypotheses, formula, oracle),
        details={"component_dims": dims, "basis_overlaps": overlaps},
    )


def block_formula_report(
    c: Composition, *, oracle_max_n: int = DIM_GUARDRAIL
) -> VerificationReport:
    """Dimension of a composition of cliques from clique and attachment sizes."""
    for p in c.profiles:
        if not is_complete(p.graph):
            raise GraphError(f"component {p.index} is not complete")
    hypotheses = {
        "component-count>=3": len(c.profiles) >= 3,
        "no-end-is-an-edge": all(p.graph.n > 2 for p in _end_profiles(c)),
        "end-attachments-disjoint": _ends_disjoint(c),
    }
    terms = [
        p.graph.n - len(p.attachments) - 1
        for p in c.profiles
        if len(p.attachments) < p.graph.n
    ]
    formula = sum(terms)
    oracle = _oracle_dim(c.graph, oracle_max_n)
    return VerificationReport(
        statement="block",
        hypotheses=hypotheses,
        formula=formula,
        oracle=oracle,
        verdict=_equality_verdict(hypotheses, formula, oracle),
        details={"clique_terms": terms},
    )


def rooted_family_report(
    g: Graph,
    rooted: Sequence[tuple[Graph, int]],
    *,
    oracle_max_n: int = DIM_GUARDRAIL,
) -> VerificationReport:
    """Dimension of a rooted product from per-copy dimension and root membership.

    Copies whose root lies in some basis contribute one landmark less.
    """
    composition = rooted_product_family(g, rooted)
    hypotheses = {
        "base-order>=2": g.n >= 2,
        "roots-need-local-landmark": all(
            needs_local_landmark(h, (root,)) for h, root in rooted
        ),
    }
    member_cache: dict[tuple[Graph, int], bool] = {}
    dim_cache: dict[Graph, int] = {}
    members: list[bool] = []
    copy_dims: list[int] = []
    for h, root in rooted:
        if (h, root) not in member_cache:
            member_cache[(h, root)] = basis_membership(h, root)
        if h not in dim_cache:
            dim_cache[h] = metric_dimension(h, witness=False).value
        members.append(member_cache[(h, root)])
        copy_dims.append(dim_cache[h])
    formula = sum(d - (1 if m else 0) for d, m in zip(copy_dims, members))
    oracle = _oracle_dim(composition.graph, oracle_max_n)
    return VerificationReport(
        statement="rooted-family",
        hypotheses=hypotheses,
        formula=formula,
        oracle=oracle,
        verdict=_equality_verdict(hypotheses, formula, oracle),
        details={"copy_dims": copy_dims, "root_in_some_basis": members},
    )


def corona_report(
    g: Graph, family: Sequence[Graph], *, oracle_max_n: int = DIM_GUARDRAIL
) -> VerificationReport:
    """Dimension of a corona from the joined copies' dimensions and apex membership."""
    for i, h in enumerate(family):
        if h.n < 2:
            raise GraphError(f"family[{i}]: corona formula needs nontrivial members")
    composition = corona(g, family)
    hypotheses = {"base-order>=2": g.n >= 2}
    member_cache: dict[Graph, bool] = {}
    dim_cache: dict[Graph, int] = {}
    members: list[bool] = []
    join_dims: list[int] = []
    for h in family:
        joined = join_with_k1(h)
        if joined not in member_cache:
            member_cache[joined] = basis_membership(joined, h.n)
            dim_cache[joined] = metric_dimension(joined, witness=False).value
        members.append(member_cache[joined])
        join_dims.append(dim_cache[joined])
    formula = sum(d - (1 if m else 0) for d, m in zip(join_dims, members))
    oracle = _oracle_dim(composition.graph, oracle_max_n)
    details: dict = {"join_dims": join_dims, "apex_in_some_basis": members}
    if len(set(family)) == 1:
        # uniform family shortcut: n * dim(join) or n * (dim(join) - 1)
        details["uniform"] = True
        details["uniform_form"] = (
            f"{g.n}*({join_dims[0]}-1)" if members[0] else f"{g.n}*{join_dims[0]}"
        )
    return VerificationReport(
        statement="corona",
        hypotheses=hypotheses,
        formula=formula,
        oracle=oracle,
        verdict=_equality_verdict(hypotheses, formula, oracle),
        details=details,
    )


def tree_dim_report(t: Graph, *, oracle_max_n: int = DIM_GUARDRAIL) -> VerificationReport:
    """Tree dimension as leaf count minus exterior major vertex count."""
    if not is_tree(t):
        raise GraphError("tree_dim_report requires a tree")
    if is_path(t):
        raise GraphError("the tree formula does not apply to paths")
    profile = tree_profile(t)
    formula = profile.leaf_count - len(profile.exterior_majors)
    oracle = _oracle_dim(t, oracle_max_n)
    hypotheses = {"is-tree": True, "not-a-path": True}
    return VerificationReport(
        statement="tree",
        hypotheses=hypotheses,
        formula=formula,
        oracle=oracle,
        verdict=_equality_verdict(hypotheses, formula, oracle),
        details={
            "leaves": profile.leaf_count,
            "exterior_majors": len(profile.exterior_majors),
        },
    )


def path_product_bounds_report(
    g: Graph, p_len: int, *, oracle_max_n: int = DIM_GUARDRAIL
) -> VerificationReport:
    """Two-sided bounds on products with leaf-rooted paths.

    Checks dim(g) <= dim(product) and 2*dim(product) <= dim(g) + n - iso(g);
    the upper comparison is kept in doubled integer form to avoid rounding
    ambiguity.  When iso(g) = n - dim(g) the product dimension must equal
    dim(g) exactly.  The constructive landmark set is rebuilt and verified as
    part of the report.
    """
    witness = path_product_generator(g, p_len)
    base_dim = metric_dimension(g, witness=False).value
    iso = isolation_index(g)
    oracle = _oracle_dim(witness.product.graph, oracle_max_n)
    generator_ok = 2 * len(witness.landmarks) <= base_dim + g.n - iso
    details = {
        "base_dim": base_dim,
        "isolation_index": iso,
        "product_order": witness.product.graph.n,
        "generator_size": len(witness.landmarks),
        "doubled_upper_bound": base_dim + g.n - iso,
    }
    if oracle is None:
        verdict = UNVERIFIED if generator_ok else REFUTED
        return VerificationReport(
            "cota", {}, None, oracle, verdict, details
        )
    lower_ok = oracle >= base_dim
    upper_ok = 2 * oracle <= base_dim + g.n - iso
    equality_ok = iso != g.n - base_dim or oracle == base_dim
    details.update(
        {
            "product_dim": oracle,
            "lower_holds": lower_ok,
            "upper_holds": upper_ok,
            "extremal_equality_holds": equality_ok,
        }
    )
    ok = lower_ok and upper_ok and equality_ok and generator_ok
    return VerificationReport(
        statement="cota",
        hypotheses={},
        formula=None,
        oracle=oracle,
        verdict=BOUND_HOLDS if ok else REFUTED,
        details=details,
    )


def k1_lemma_check(h: Graph, *, oracle_max_n: int = DIM_GUARDRAIL) -> VerificationReport:
    """Membership of the apex of a join in some basis, from radius or dimension.

    If the radius is at least 4, or the join's dimension exceeds the maximum
    degree plus one, the apex belongs to no basis of the join.  When neither
    antecedent holds the statement is silent, so the verdict is
    ``hypotheses-unmet``; the converse is known to be false.
    """
    require_connected(h, "k1_lemma_check")
    profile = metric_profile(h)
    joined = join_with_k1(h)
    if joined.n > oracle_max_n:
        return VerificationReport(
            "k1-lemma", {}, None, None, UNVERIFIED, {"join_order": joined.n}
        )
    join_dim = metric_dimension(joined, witness=False).value
    member = basis_membership(joined, h.n)
    hypotheses = {
        "radius>=4": profile.radius >= 4,
        "join-dim-exceeds-max-degree-plus-1": join_dim > profile.max_degree + 1,
    }
    details = {
        "radius": profile.radius,
        "max_degree": profile.max_degree,
        "join_dim": join_dim,
        "apex_in_some_basis": member,
    }
    if any(hypotheses.values()):
        verdict = FORMULA_MATCHES if not member else REFUTED
    else:
        verdict = HYPOTHESES_UNMET
    return VerificationReport("k1-lemma", hypotheses, None, None, verdict, details)


def _is_chain_shaped(c: Composition) -> bool:
    profiles = c.profiles
    if profiles[0].kind != "end" or profiles[-1].kind != "end":
        return False
    if any(len(p.attachments) != 2 for p in profiles[1:-1]):
        return False
    for i in range(len(profiles) - 1):
        shared = set(c.composed_attachments(i)) & set(c.composed_attachments(i + 1))
        if not shared:
            return False
    return True


def chain_report(c: Composition, *, oracle_max_n: int = DIM_GUARDRAIL) -> VerificationReport:
    """Chain dimension as the sum of attaching dimensions.

    Hypotheses: both end parts need a local landmark and every internal
    part's two attachment vertices realise its diameter.
    """
    if not _is_chain_shaped(c):
        raise GraphError("composition is not chain-shaped")
    diametral = []
    for p in c.profiles[1:-1]:
        x, y = p.attachments
        dist = all_pairs_distances(p.graph)
        diameter = max(max(row) for row in dist.rows)
        diametral.append(dist[x][y] == diameter)
    hypotheses = {
        "component-count>=3": len(c.profiles) >= 3,
        "ends-need-local-landmark": all(
            bool(p.local_landmark_needed) for p in (c.profiles[0], c.profiles[-1])
        ),
        "internal-attachments-diametral": all(diametral),
    }
    terms = [p.attaching_dim for p in c.profiles]
    formula = sum(terms)
    oracle = _oracle_dim(c.graph, oracle_max_n)
    return VerificationReport(
        statement="chain",
        hypotheses=hypotheses,
        formula=formula,
        oracle=oracle,
        verdict=_equality_verdict(hypotheses, formula, oracle),
        details={"component_terms": terms},
    )


def closed_form_dim_star(kind: str, size: int, attachments: Iterable[int]) -> int:
    """Case formula for the attaching dimension of paths, cycles and cliques.

    Labelling follows :func:`metricdim.graph.make_standard` (paths and cycles
    consecutive).  For a complete graph with every vertex attached the raw
    case value would be negative; it is clamped to zero, matching the exact
    search.
    """
    if kind not in ("path", "cycle", "complete"):
        raise GraphError(f"closed form not available for family {kind!r}")
    minimum = 3 if kind == "cycle" else 1
    if size < minimum:
        raise GraphError(f"{kind} needs order >= {minimum}, got {size}")
    attached = sorted(set(attachments))
    if not attached:
        raise GraphError("attachment set must be nonempty")
    if attached[0] < 0 or attached[-1] >= size:
        raise GraphError(f"attachment vertex out of range for order {size}")

    if kind == "path":
        # a lone internal (degree two) attachment costs one extra landmark
        return 1 if len(attached) == 1 and 0 < attached[0] < size - 1 else 0
    if kind == "cycle":
        if len(attached) == 1:
            return 1
        if len(attached) == 2 and size % 2 == 0:
            u, v = attached
            if (v - u) % size == size // 2:
                return 1
        return 0
    return max(0, size - len(attached) - 1)


def verify_tree_realization(
    a: int, b: int, n: int, *, p_len: int = 2, oracle_max_n: int = DIM_GUARDRAIL
) -> VerificationReport:
    """The parametrised tree has dimension ``a`` and its path product ``b``."""
    tree = build_realization_tree(a, b, n)
    tree_dim = _oracle_dim(tree, oracle_max_n)
    product = rooted_product_uniform(tree, path_graph(p_len), 0)
    product_dim = _oracle_dim(product.graph, oracle_max_n)
    hypotheses = {"2<=a<b": 2 <= a < b, "2b<=a+n": 2 * b <= a + n}
    details = {
        "order": n,
        "tree_dim": tree_dim,
        "expected_product_dim": b,
        "product_dim": product_dim,
        "product_order": product.graph.n,
    }
    if tree_dim is None or product_dim is None:
        return VerificationReport("tree-realization", hypotheses, a, tree_dim, UNVERIFIED, details)
    ok = tree_dim == a and product_dim == b
    return VerificationReport(
        statement="tree-realization",
        hypotheses=hypotheses,
        formula=a,
        oracle=tree_dim,
        verdict=FORMULA_MATCHES if ok else REFUTED,
        details=details,
    )


def verify_isolation_family(t: int, *, oracle_max_n: int = DIM_GUARDRAIL) -> VerificationReport:
    """The isolation family member has dimension t, isolation t+1 and the
    spoke set as a basis."""
    g = build_isolation_family(t)
    dim = _oracle_dim(g, oracle_max_n)
    spokes = tuple(range(1, t + 1))
    hypotheses = {"t>=3": t >= 3}
    if dim is None:
        return VerificationReport("isolation-family", hypotheses, t, None, UNVERIFIED, {})
    iso = isolation_index(g)
    spokes_resolve = is_resolving(g, spokes)
    details = {
        "order": g.n,
        "isolation_index": iso,
        "expected_isolation": t + 1,
        "spokes_resolve": spokes_resolve,
    }
    ok = dim == t and iso == t + 1 and spokes_resolve
    return VerificationReport(
        statement="isolation-family",
        hypotheses=hypotheses,
        formula=t,
        oracle=dim,
        verdict=FORMULA_MATCHES if ok else REFUTED,
        details=details,
    )
