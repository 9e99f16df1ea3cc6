import json

import pytest

from metricdim import (
    GraphError,
    composition_from_json,
    cycle_graph,
    graph_from_json,
    graph_to_json,
    load_graph,
    load_recipe,
    metric_dimension,
    path_graph,
)


def test_graph_round_trip():
    g = cycle_graph(5)
    assert graph_from_json(graph_to_json(g)) == g
    p3 = graph_from_json({"n": 3, "edges": [[0, 1], [1, 2]]})
    assert p3 == path_graph(3)


def test_graph_parse_errors_name_the_entry():
    with pytest.raises(GraphError, match=r"edges\[1\]"):
        graph_from_json({"n": 3, "edges": [[0, 1], [1, 7]]})
    with pytest.raises(GraphError, match=r"edges\[0\]"):
        graph_from_json({"n": 3, "edges": [[0], [1, 2]]})
    with pytest.raises(GraphError, match="'n' and 'edges'"):
        graph_from_json({"edges": []})
    with pytest.raises(GraphError, match="object"):
        graph_from_json([1, 2])
    with pytest.raises(GraphError, match="integer"):
        graph_from_json({"n": True, "edges": []})


def test_graph_shorthands():
    g4 = graph_from_json({"familyF": 4})
    assert g4.n == 9 and metric_dimension(g4).value == 4
    t = graph_from_json({"treeT": [3, 7, 12]})
    assert t.n == 12
    with pytest.raises(GraphError, match="treeT"):
        graph_from_json({"treeT": [3, 7]})


def test_explicit_recipe():
    recipe = {
        "components": [
            {"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]},
            {"n": 3, "edges": [[0, 1], [1, 2], [2, 0]]},
        ],
        "attach": [{"host": 0, "component": 1, "vertex": 0}],
    }
    comp = composition_from_json(recipe)
    assert comp.graph.n == 6
    with pytest.raises(GraphError, match="in order"):
        composition_from_json(
            {**recipe, "attach": [{"host": 0, "component": 2, "vertex": 0}]}
        )
    with pytest.raises(GraphError, match="expected 1 steps"):
        composition_from_json({**recipe, "attach": []})


def test_named_recipes():
    chain_recipe = {
        "chain": [
            {"graph": {"n": 3, "edges": [[0, 1], [1, 2]]}, "x": 0, "y": 2},
            {"graph": {"n": 3, "edges": [[0, 1], [1, 2]]}, "x": 0, "y": 2},
        ]
    }
    comp = composition_from_json(chain_recipe)
    assert comp.graph.n == 5

    rooted_recipe = {
        "rooted": {
            "graph": {"n": 2, "edges": [[0, 1]]},
            "h": {"n": 3, "edges": [[0, 1], [1, 2], [2, 0]]},
            "root": 0,
        }
    }
    assert composition_from_json(rooted_recipe).graph.n == 6

    corona_recipe = {
        "corona": {
            "graph": {"n": 2, "edges": [[0, 1]]},
            "h": {"n": 2, "edges": [[0, 1]]},
        }
    }
    assert composition_from_json(corona_recipe).graph.n == 6

    with pytest.raises(GraphError):
        composition_from_json({"bouquet": []})


def test_load_from_files(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"n": 3, "edges": [[0, 1], [1, 2]]}))
    assert load_graph(path) == path_graph(3)

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(GraphError, match="invalid JSON"):
        load_graph(bad)
    with pytest.raises(GraphError):
        load_graph(tmp_path / "missing.json")

    recipe = tmp_path / "r.json"
    recipe.write_text(
        json.dumps(
            {
                "chain": [
                    {"graph": {"n": 2, "edges": [[0, 1]]}, "x": 0, "y": 1},
                    {"graph": {"n": 2, "edges": [[0, 1]]}, "x": 0, "y": 1},
                ]
            }
        )
    )
    assert load_recipe(recipe).graph.n == 3
