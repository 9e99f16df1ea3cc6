import json
import subprocess
import sys

import jsonschema
import pytest

from metricdim import complete_graph, graph_to_json, gallery
from metricdim import schemas


def run_cli(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "metricdim", *args],
        capture_output=True,
        text=True,
    )


def write_graph(tmp_path, name, g):
    path = tmp_path / name
    path.write_text(json.dumps(graph_to_json(g)))
    return path


@pytest.fixture()
def chain_recipe(tmp_path):
    recipe = {
        "chain": [
            {"graph": {"n": 5, "edges": [[0, 1], [0, 2], [0, 3], [0, 4]]}, "x": 1, "y": 1},
            {"graph": {"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]}, "x": 0, "y": 2},
            {"graph": {"n": 3, "edges": [[0, 1], [1, 2], [2, 0]]}, "x": 0, "y": 1},
            {"graph": {"n": 3, "edges": [[0, 1], [1, 2], [2, 0]]}, "x": 0, "y": 0},
        ]
    }
    path = tmp_path / "chain.json"
    path.write_text(json.dumps(recipe))
    return path


def test_dim_subcommand(tmp_path):
    path = write_graph(tmp_path, "k6.json", complete_graph(6))
    proc = run_cli("dim", str(path))
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload == {"dim": 5, "basis": [0, 1, 2, 3, 4]}
    jsonschema.validate(payload, schemas.DIM_OUTPUT)


def test_dim_disconnected_exits_2(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"n": 4, "edges": [[0, 1], [2, 3]]}))
    proc = run_cli("dim", str(path))
    assert proc.returncode == 2
    assert "error:" in proc.stderr
    assert proc.stdout == ""


def test_parse_error_exits_2(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"n": 3, "edges": [[0, 9]]}))
    proc = run_cli("dim", str(path))
    assert proc.returncode == 2
    assert "edges[0]" in proc.stderr


def test_guardrail_exits_2(tmp_path):
    path = write_graph(tmp_path, "c30.json", __import__("metricdim").cycle_graph(30))
    proc = run_cli("bases", str(path))
    assert proc.returncode == 2
    proc = run_cli("bases", str(path), "--max-n", "30")
    assert proc.returncode == 0


def test_bases_updim_attdim_isoindex(tmp_path):
    path = write_graph(tmp_path, "c4.json", __import__("metricdim").cycle_graph(4))
    payload = json.loads(run_cli("bases", str(path)).stdout)
    jsonschema.validate(payload, schemas.BASES_OUTPUT)
    assert payload["bases"] == [[0, 1], [0, 3], [1, 2], [2, 3]]

    payload = json.loads(run_cli("updim", str(path)).stdout)
    jsonschema.validate(payload, schemas.UPDIM_OUTPUT)
    assert payload["upper_dim"] == 2

    payload = json.loads(run_cli("attdim", str(path), "--attach", "0,2").stdout)
    jsonschema.validate(payload, schemas.ATTDIM_OUTPUT)
    assert payload["attaching_dim"] == 1

    payload = json.loads(run_cli("iso-index", str(path)).stdout)
    jsonschema.validate(payload, schemas.ISO_INDEX_OUTPUT)
    assert payload["isolation_index"] == 0


def test_compose_and_verify_chain(chain_recipe):
    proc = run_cli("compose", str(chain_recipe))
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    jsonschema.validate(payload, schemas.COMPOSE_OUTPUT)
    assert payload["graph"]["n"] == 12
    assert [p["attaching_dim"] for p in payload["profiles"]] == [2, 1, 0, 1]

    proc = run_cli("verify", "chain", str(chain_recipe))
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    jsonschema.validate(payload, schemas.REPORT)
    assert payload["verdict"] == "formula-matches" and payload["formula"] == 4

    proc = run_cli("verify", "equality", str(chain_recipe))
    assert json.loads(proc.stdout)["verdict"] == "formula-matches"


def test_verify_strict_exit_code(tmp_path):
    recipe = {
        "chain": [
            {"graph": {"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]}, "x": 0, "y": 2},
            {"graph": {"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]}, "x": 0, "y": 2},
        ]
    }
    path = tmp_path / "two.json"
    path.write_text(json.dumps(recipe))
    assert run_cli("verify", "equality", str(path)).returncode == 0
    assert run_cli("verify", "equality", str(path), "--strict").returncode == 1


def test_verify_tree_and_families(tmp_path):
    tree = tmp_path / "t.json"
    tree.write_text(json.dumps({"treeT": [3, 7, 12]}))
    payload = json.loads(run_cli("verify", "tree", str(tree)).stdout)
    assert payload["verdict"] == "formula-matches" and payload["formula"] == 3

    payload = json.loads(run_cli("verify", "treeT", "3", "7", "12").stdout)
    assert payload["verdict"] == "formula-matches"

    payload = json.loads(run_cli("verify", "familyF", "4").stdout)
    assert payload["verdict"] == "formula-matches"
    assert payload["details"]["isolation_index"] == 5

    proc = run_cli("verify", "treeT", "3", "8", "12")
    assert proc.returncode == 2


def test_verify_cota_and_k1(tmp_path):
    g = tmp_path / "f4.json"
    g.write_text(json.dumps({"familyF": 4}))
    payload = json.loads(run_cli("verify", "cota", str(g), "--path-len", "3").stdout)
    assert payload["verdict"] == "bound-holds"
    assert payload["details"]["product_dim"] == 4

    p9 = write_graph(tmp_path, "p9.json", __import__("metricdim").path_graph(9))
    payload = json.loads(run_cli("verify", "k1-lemma", str(p9)).stdout)
    assert payload["verdict"] == "formula-matches"


def test_verify_rooted_and_corona(tmp_path):
    rooted = tmp_path / "rooted.json"
    rooted.write_text(
        json.dumps(
            {
                "rooted": {
                    "graph": {"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]},
                    "h": {"n": 3, "edges": [[0, 1], [1, 2], [2, 0]]},
                    "root": 0,
                }
            }
        )
    )
    payload = json.loads(run_cli("verify", "rooted", str(rooted)).stdout)
    assert payload["verdict"] == "formula-matches" and payload["formula"] == 4

    corona = tmp_path / "corona.json"
    corona.write_text(
        json.dumps(
            {
                "corona": {
                    "graph": {"n": 2, "edges": [[0, 1]]},
                    "h": {"n": 2, "edges": [[0, 1]]},
                }
            }
        )
    )
    payload = json.loads(run_cli("verify", "corona", str(corona)).stdout)
    assert payload["verdict"] == "formula-matches" and payload["formula"] == 2


def test_product_subcommand(tmp_path):
    base = write_graph(tmp_path, "p4.json", __import__("metricdim").path_graph(4))
    h = write_graph(tmp_path, "c3.json", __import__("metricdim").cycle_graph(3))
    payload = json.loads(run_cli("product", "rooted", str(base), str(h), "--root", "0").stdout)
    jsonschema.validate(payload, schemas.COMPOSE_OUTPUT)
    assert payload["graph"]["n"] == 12

    payload = json.loads(run_cli("product", "corona", str(base), str(h)).stdout)
    assert payload["graph"]["n"] == 4 * 4


def test_out_flag_writes_file(tmp_path):
    path = write_graph(tmp_path, "k4.json", complete_graph(4))
    out = tmp_path / "result.json"
    proc = run_cli("dim", str(path), "--out", str(out))
    assert proc.returncode == 0 and proc.stdout == ""
    assert json.loads(out.read_text())["dim"] == 3


def test_round_trip_via_cli(tmp_path):
    g = gallery.chorded_hexagon()
    path = write_graph(tmp_path, "h.json", g)
    from metricdim import load_graph

    assert load_graph(path) == g


def test_unknown_flag_rejected(tmp_path):
    path = write_graph(tmp_path, "k4.json", complete_graph(4))
    proc = run_cli("dim", str(path), "--bogus")
    assert proc.returncode == 2
