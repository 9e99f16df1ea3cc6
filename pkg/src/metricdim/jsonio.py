"""The on-disk JSON formats: graphs, composition recipes, reports.

Graph files hold ``{"n": <int>, "edges": [[u, v], ...]}``; edge order is
irrelevant and violations raise :class:`~metricdim.errors.GraphError` naming
the offending entry.  Two parametrised families are accepted as graph
shorthands, ``{"treeT": [a, b, n]}`` and ``{"familyF": t}``.

Recipe files describe compositions, either explicitly as
``{"components": [...], "attach": [{"host", "component", "vertex"}, ...]}``
or through the named shorthands ``chain``, ``rooted`` and ``corona``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .compose import (
    Composition,
    CompositionBuilder,
    build_isolation_family,
    build_realization_tree,
    chain,
    corona,
    rooted_product_family,
)
from .errors import GraphError
from .graph import Graph, build_graph


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def _require_int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise GraphError(f"{where}: expected an integer, got {value!r}")
    return value


def graph_from_json(obj: Any) -> Graph:
    if not isinstance(obj, dict):
        raise GraphError(f"graph JSON must be an object, got {type(obj).__name__}")
    if "treeT" in obj:
        params = obj["treeT"]
        if not (isinstance(params, list) and len(params) == 3):
            raise GraphError(f"treeT: expected [a, b, n], got {params!r}")
        a, b, n = (_require_int(v, f"treeT[{i}]") for i, v in enumerate(params))
        return build_realization_tree(a, b, n)
    if "familyF" in obj:
        return build_isolation_family(_require_int(obj["familyF"], "familyF"))
    if "n" not in obj or "edges" not in obj:
        raise GraphError("graph JSON needs keys 'n' and 'edges'")
    n = _require_int(obj["n"], "n")
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise GraphError(f"edges: expected a list, got {type(edges).__name__}")
    pairs = []
    for i, entry in enumerate(edges):
        if not (isinstance(entry, list) and len(entry) == 2):
            raise GraphError(f"edges[{i}]: expected [u, v], got {entry!r}")
        pairs.append([_require_int(entry[0], f"edges[{i}][0]"),
                      _require_int(entry[1], f"edges[{i}][1]")])
    return build_graph(n, pairs)


def _load_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphError(f"{path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"{path}: invalid JSON: {exc}") from exc


def load_graph(path: str | Path) -> Graph:
    return graph_from_json(_load_json(path))


def _chain_from_json(entries: Any) -> Composition:
    if not isinstance(entries, list):
        raise GraphError("chain: expected a list of parts")
    parts = []
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict) or "graph" not in entry:
            raise GraphError(f"chain[{i}]: expected an object with a 'graph' key")
        g = graph_from_json(entry["graph"])
        x = _require_int(entry.get("x", 0), f"chain[{i}].x")
        y = _require_int(entry.get("y", 0), f"chain[{i}].y")
        parts.append((g, x, y))
    return chain(parts)


def rooted_args_from_json(obj: Any) -> tuple[Graph, list[tuple[Graph, int]]]:
    if not isinstance(obj, dict) or "graph" not in obj:
        raise GraphError("rooted: expected an object with a 'graph' key")
    base = graph_from_json(obj["graph"])
    if "copies" in obj:
        rooted = []
        for i, entry in enumerate(obj["copies"]):
            if not isinstance(entry, dict) or "graph" not in entry or "root" not in entry:
                raise GraphError(f"rooted.copies[{i}]: expected 'graph' and 'root'")
            rooted.append(
                (graph_from_json(entry["graph"]), _require_int(entry["root"], f"rooted.copies[{i}].root"))
            )
        return base, rooted
    if "h" in obj:
        h = graph_from_json(obj["h"])
        root = _require_int(obj.get("root", 0), "rooted.root")
        return base, [(h, root)] * base.n
    raise GraphError("rooted: expected either 'copies' or a uniform 'h'")


def corona_args_from_json(obj: Any) -> tuple[Graph, list[Graph]]:
    if not isinstance(obj, dict) or "graph" not in obj:
        raise GraphError("corona: expected an object with a 'graph' key")
    base = graph_from_json(obj["graph"])
    if "family" in obj:
        family = [graph_from_json(entry) for entry in obj["family"]]
        return base, family
    if "h" in obj:
        return base, [graph_from_json(obj["h"])] * base.n
    raise GraphError("corona: expected either 'family' or a uniform 'h'")


def composition_from_json(obj: Any) -> Composition:
    if not isinstance(obj, dict):
        raise GraphError(f"recipe JSON must be an object, got {type(obj).__name__}")
    if "chain" in obj:
        return _chain_from_json(obj["chain"])
    if "rooted" in obj:
        base, rooted = rooted_args_from_json(obj["rooted"])
        return rooted_product_family(base, rooted)
    if "corona" in obj:
        base, family = corona_args_from_json(obj["corona"])
        return corona(base, family)
    if "components" in obj and "attach" in obj:
        components = [graph_from_json(entry) for entry in obj["components"]]
        if not components:
            raise GraphError("components: must not be empty")
        builder = CompositionBuilder(components[0])
        steps = obj["attach"]
        if not isinstance(steps, list) or len(steps) != len(components) - 1:
            raise GraphError(
                f"attach: expected {len(components) - 1} steps for {len(components)} components"
            )
        for i, step in enumerate(steps, start=1):
            if not isinstance(step, dict):
                raise GraphError(f"attach[{i - 1}]: expected an object")
            component = _require_int(step.get("component", i), f"attach[{i - 1}].component")
            if component != i:
                raise GraphError(
                    f"attach[{i - 1}]: steps must introduce components in order, expected {i}"
                )
            host = _require_int(step.get("host"), f"attach[{i - 1}].host")
            vertex = _require_int(step.get("vertex"), f"attach[{i - 1}].vertex")
            builder.attach(host, components[i], vertex)
        return builder.finalize()
    raise GraphError(
        "recipe JSON needs 'components'/'attach' or one of 'chain', 'rooted', 'corona'"
    )


def load_recipe(path: str | Path) -> Composition:
    return composition_from_json(_load_json(path))


def composition_to_json(c: Composition) -> dict:
    profiles = []
    for p in c.profiles:
        profiles.append(
            {
                "component": p.index,
                "order": p.graph.n,
                "attachments": list(p.attachments),
                "composed_attachments": list(c.composed_attachments(p.index)),
                "kind": p.kind,
                "dominant_attachments": p.dominant_attachments,
                "local_landmark_needed": p.local_landmark_needed,
                "dim": p.dim,
                "attaching_dim": p.attaching_dim,
            }
        )
    return {
        "graph": graph_to_json(c.graph),
        "attachment_vertices": sorted(c.attachment_vertices),
        "profiles": profiles,
    }
