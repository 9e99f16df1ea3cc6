"""File-driven command line interface.

All results go to standard output as JSON (or to ``--out``), diagnostics to
standard error.  Exit codes: 0 for computed or verified results, 1 for a
``refuted`` verdict (or ``hypotheses-unmet`` under ``--strict``), 2 for
input, parse or guardrail errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import GraphError, GuardrailError, TruncationError
from .jsonio import (
    composition_to_json,
    corona_args_from_json,
    graph_to_json,
    load_graph,
    load_recipe,
    rooted_args_from_json,
    _load_json,
)
from .compose import corona, rooted_product_uniform
from .resolve import (
    BASIS_CAP,
    attaching_dimension,
    enumerate_bases,
    isolation_index,
    metric_dimension,
    upper_metric_dimension,
)
from . import verify

VERIFY_STATEMENTS = (
    "lower-bound",
    "equality",
    "extremal",
    "block",
    "rooted",
    "corona",
    "tree",
    "chain",
    "cota",
    "k1-lemma",
    "treeT",
    "familyF",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="metricdim",
        description="Exact metric dimension computations and formula verification.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-n", type=int, default=24,
                        help="guardrail for enumeration-style searches (default 24)")
    common.add_argument("--max-bases", type=int, default=BASIS_CAP,
                        help="cap on enumerated bases (default 10^6)")
    common.add_argument("--strict", action="store_true",
                        help="exit 1 on hypotheses-unmet verdicts")
    common.add_argument("--out", type=Path, default=None,
                        help="write the JSON result to this path instead of stdout")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", parents=[common], help="metric dimension and one basis")
    p.add_argument("graph", type=Path)

    p = sub.add_parser("bases", parents=[common], help="enumerate all metric bases")
    p.add_argument("graph", type=Path)

    p = sub.add_parser("updim", parents=[common], help="upper metric dimension")
    p.add_argument("graph", type=Path)

    p = sub.add_parser("attdim", parents=[common], help="attaching metric dimension")
    p.add_argument("graph", type=Path)
    p.add_argument("--attach", required=True,
                   help="comma-separated attachment vertices, e.g. 0,3")

    p = sub.add_parser("iso-index", parents=[common], help="isolation index")
    p.add_argument("graph", type=Path)

    p = sub.add_parser("compose", parents=[common],
                       help="build a composition recipe and emit graph plus profiles")
    p.add_argument("recipe", type=Path)

    p = sub.add_parser("product", parents=[common], help="rooted or corona product")
    p.add_argument("kind", choices=["rooted", "corona"])
    p.add_argument("graph", type=Path, help="base graph JSON")
    p.add_argument("h", type=Path, help="copy graph JSON")
    p.add_argument("--root", type=int, default=0, help="root vertex for rooted products")

    p = sub.add_parser("verify", parents=[common], help="check one statement")
    p.add_argument("statement", choices=VERIFY_STATEMENTS)
    p.add_argument("args", nargs="*",
                   help="statement input: a file path, or integers for treeT/familyF")
    p.add_argument("--path-len", type=int, default=2,
                   help="path order for cota/treeT products (default 2)")

    return parser


def _parse_vertex_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise GraphError(f"expected comma-separated integers, got {text!r}") from None


def _dispatch(args: argparse.Namespace) -> tuple[dict, str | None]:
    """Run one subcommand; returns the JSON payload and an optional verdict."""
    enum_max = args.max_n
    dim_max = max(64, args.max_n)
    if args.command == "dim":
        g = load_graph(args.graph)
        value, basis = metric_dimension(g, max_n=dim_max)
        return {"dim": value, "basis": list(basis)}, None
    if args.command == "bases":
        g = load_graph(args.graph)
        report = enumerate_bases(g, cap=args.max_bases, max_n=enum_max)
        return report.to_json(), None
    if args.command == "updim":
        g = load_graph(args.graph)
        return {"upper_dim": upper_metric_dimension(g, max_n=enum_max)}, None
    if args.command == "attdim":
        g = load_graph(args.graph)
        attachments = _parse_vertex_list(args.attach)
        value, witness = attaching_dimension(g, attachments, max_n=dim_max)
        return {
            "attaching_dim": value,
            "witness": list(witness),
            "attachments": sorted(set(attachments)),
        }, None
    if args.command == "iso-index":
        g = load_graph(args.graph)
        value = isolation_index(g, cap=args.max_bases, max_n=enum_max)
        return {"isolation_index": value}, None
    if args.command == "compose":
        return composition_to_json(load_recipe(args.recipe)), None
    if args.command == "product":
        base = load_graph(args.graph)
        other = load_graph(args.h)
        if args.kind == "rooted":
            composition = rooted_product_uniform(base, other, args.root)
        else:
            composition = corona(base, [other] * base.n)
        return composition_to_json(composition), None
    if args.command == "verify":
        report = _run_verify(args, dim_max)
        return report.to_json(), report.verdict
    raise AssertionError(f"unhandled command {args.command}")


def _one_path(args: argparse.Namespace) -> Path:
    if len(args.args) != 1:
        raise GraphError(f"verify {args.statement} expects exactly one input file")
    return Path(args.args[0])


def _run_verify(args: argparse.Namespace, dim_max: int) -> "verify.VerificationReport":
    statement = args.statement
    if statement in ("lower-bound", "equality", "extremal", "block", "chain"):
        composition = load_recipe(_one_path(args))
        runner = {
            "lower-bound": verify.lower_bound_report,
            "equality": verify.main_equality_report,
            "extremal": verify.extremal_report,
            "block": verify.block_formula_report,
            "chain": verify.chain_report,
        }[statement]
        return runner(composition, oracle_max_n=dim_max)
    if statement == "rooted":
        obj = _load_json(_one_path(args))
        if not isinstance(obj, dict) or "rooted" not in obj:
            raise GraphError("verify rooted expects a recipe with a 'rooted' key")
        base, rooted = rooted_args_from_json(obj["rooted"])
        return verify.rooted_family_report(base, rooted, oracle_max_n=dim_max)
    if statement == "corona":
        obj = _load_json(_one_path(args))
        if not isinstance(obj, dict) or "corona" not in obj:
            raise GraphError("verify corona expects a recipe with a 'corona' key")
        base, family = corona_args_from_json(obj["corona"])
        return verify.corona_report(base, family, oracle_max_n=dim_max)
    if statement == "tree":
        return verify.tree_dim_report(load_graph(_one_path(args)), oracle_max_n=dim_max)
    if statement == "cota":
        g = load_graph(_one_path(args))
        return verify.path_product_bounds_report(g, args.path_len, oracle_max_n=dim_max)
    if statement == "k1-lemma":
        return verify.k1_lemma_check(load_graph(_one_path(args)), oracle_max_n=dim_max)
    if statement == "treeT":
        if len(args.args) != 3:
            raise GraphError("verify treeT expects three integers: a b n")
        try:
            a, b, n = (int(x) for x in args.args)
        except ValueError:
            raise GraphError(f"verify treeT expects integers, got {args.args}") from None
        return verify.verify_tree_realization(a, b, n, p_len=args.path_len, oracle_max_n=dim_max)
    if statement == "familyF":
        if len(args.args) != 1:
            raise GraphError("verify familyF expects one integer: t")
        try:
            t = int(args.args[0])
        except ValueError:
            raise GraphError(f"verify familyF expects an integer, got {args.args[0]!r}") from None
        return verify.verify_isolation_family(t, oracle_max_n=dim_max)
    raise AssertionError(f"unhandled statement {statement}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, verdict = _dispatch(args)
    except (GraphError, GuardrailError, TruncationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(payload, indent=2)
    if args.out is not None:
        args.out.write_text(text + "\n")
    else:
        print(text)
    if verdict == verify.REFUTED:
        return 1
    if verdict == verify.HYPOTHESES_UNMET and args.strict:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
