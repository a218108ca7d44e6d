import json

from main import main
from stable_tau import silting
from stable_tau.config import EXIT_CHECK_FAILURE, EXIT_INPUT_ERROR, EXIT_PASS, EXIT_RESOURCE_ABORT


def read(path):
    return json.loads(path.read_text(encoding="utf-8"))


def test_enumerate_writes_json_and_dot(inputs_path, tmp_path):
    report_path, dot_path = tmp_path / "a2.json", tmp_path / "a2.dot"
    code = main(["enumerate", str(inputs_path / "a2.json"), "--json", str(report_path), "--dot", str(dot_path)])
    assert code == EXIT_PASS
    report = read(report_path)
    quiver = report["exchange_quiver"]
    assert report["command"] == "enumerate"
    assert quiver["vertex_count"] == 5
    assert quiver["arrow_count"] == 5
    assert quiver["stable_count"] == 5
    edges = [line for line in dot_path.read_text(encoding="utf-8").splitlines() if " -> " in line]
    assert len(edges) == quiver["arrow_count"]


def test_enumerate_is_deterministic(inputs_path, tmp_path):
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    for path in (first, second):
        assert main(["enumerate", str(inputs_path / "two_arrows_swap.json"), "--json", str(path)]) == EXIT_PASS
    assert first.read_bytes() == second.read_bytes()
    report = read(first)
    assert report["seed"] == "0xA1"
    assert report["exchange_quiver"]["stable_count"] == 6


def test_enumerate_prints_to_stdout(inputs_path, capsys):
    assert main(["enumerate", str(inputs_path / "two_arrows_trivial.json")]) == EXIT_PASS
    report = json.loads(capsys.readouterr().out)
    assert report["group"]["order"] == 1
    assert report["exchange_quiver"]["vertex_count"] == 14


def test_skew_reports_the_basic_algebra(inputs_path, tmp_path):
    path = tmp_path / "skew.json"
    assert main(["skew", str(inputs_path / "two_arrows_swap.json"), "--json", str(path)]) == EXIT_PASS
    report = read(path)
    assert report["skew_dimension"] == 10
    assert report["primitive_idempotents"] == 4
    assert report["basic"]["dimension"] == 5
    assert len(report["basic"]["simples"]) == 3
    assert len(report["basic"]["arrows"]) == 2


def test_skew_over_f7_splits_the_source(inputs_path, tmp_path):
    path = tmp_path / "skew.json"
    assert main(["skew", str(inputs_path / "three_arrows_rotation_f7.json"), "--json", str(path)]) == EXIT_PASS
    report = read(path)
    assert report["skew_dimension"] == 21
    assert report["primitive_idempotents"] == 6
    assert len(report["basic"]["simples"]) == 4
    assert len(report["basic"]["arrows"]) == 3


def test_verify_passes_under_the_swap(inputs_path, tmp_path):
    path, dot_path = tmp_path / "verify.json", tmp_path / "verify.dot"
    code = main(["verify", str(inputs_path / "two_arrows_swap.json"), "--json", str(path), "--dot", str(dot_path)])
    assert code == EXIT_PASS
    report = read(path)
    assert report["passed"]
    assert all(check["passed"] for check in report["checks"])
    assert len(report["matching"]) == 6
    assert dot_path.exists()


def test_verify_refuses_without_roots_of_unity(inputs_path, tmp_path):
    path = tmp_path / "refused.json"
    assert main(["verify", str(inputs_path / "three_arrows_rotation_q.json"), "--json", str(path)]) == EXIT_CHECK_FAILURE
    report = read(path)
    assert not report["passed"]
    assert "Fp:7" in report["refused"]


def test_invalid_action_is_an_input_error(inputs_path):
    assert main(["enumerate", str(inputs_path / "a2_invalid_swap.json")]) == EXIT_INPUT_ERROR


def test_vertex_budget_abort(inputs_path):
    assert main(["enumerate", str(inputs_path / "two_arrows_swap.json"), "--max-vertices", "3"]) == EXIT_RESOURCE_ABORT


def stable_signatures(quiver_report):
    return sorted(
        (sorted(part["dim_vector"] for part in vertex["t_parts"]), vertex["p_parts"])
        for vertex in quiver_report["vertices"]
        if vertex["stable"]
    )


def test_enumerate_lists_the_stable_pairs_under_the_swap(inputs_path, tmp_path):
    path = tmp_path / "stable.json"
    assert main(["enumerate", str(inputs_path / "two_arrows_swap.json"), "--json", str(path)]) == EXIT_PASS
    quiver = read(path)["exchange_quiver"]
    assert stable_signatures(quiver) == sorted(
        [
            ([[0, 0, 1], [0, 1, 0], [1, 1, 1]], []),
            ([[0, 0, 1], [0, 1, 0]], ["1"]),
            ([[1, 0, 1], [1, 1, 0], [1, 1, 1]], []),
            ([[1, 0, 0], [1, 0, 1], [1, 1, 0]], []),
            ([[1, 0, 0]], ["2", "2'"]),
            ([], ["1", "2", "2'"]),
        ]
    )
    tilting = [vertex for vertex in quiver["vertices"] if vertex["stable"] and vertex["classification"] == "tilting"]
    assert len(tilting) == 3


def test_verify_passes_over_f7(inputs_path, tmp_path):
    path = tmp_path / "verify.json"
    assert main(["verify", str(inputs_path / "three_arrows_rotation_f7.json"), "--json", str(path)]) == EXIT_PASS
    report = read(path)
    assert report["passed"]
    assert "refused" not in report
    assert report["characters"] == 3
    assert all(check["passed"] for check in report["checks"])
    assert len(report["matching"]) == report["base"]["stable_count"] == report["basic"]["stable_count"]


def test_verify_passes_on_swapped_blocks(inputs_path, tmp_path):
    path = tmp_path / "verify.json"
    assert main(["verify", str(inputs_path / "a2_squared_swap.json"), "--json", str(path)]) == EXIT_PASS
    report = read(path)
    assert report["passed"]
    assert report["base"]["vertex_count"] == 25
    assert len(report["matching"]) == 5
    assert "stable pairs of a swapped product match one block" in {check["name"] for check in report["checks"]}


def write_document(tmp_path, document):
    path = tmp_path / "document.json"
    path.write_text(json.dumps(document), encoding="utf-8")
    return path


def test_coefficient_without_image_in_the_field_is_an_input_error(tmp_path):
    document = {
        "field": "Fp:7",
        "quiver": {
            "vertices": ["1", "2", "3"],
            "arrows": [
                {"label": "a", "source": "1", "target": "2"},
                {"label": "b", "source": "2", "target": "3"},
            ],
            "relations": [[{"coefficient": "1/7", "path": ["a", "b"]}]],
        },
    }
    assert main(["enumerate", str(write_document(tmp_path, document))]) == EXIT_INPUT_ERROR


def test_malformed_arrow_image_coefficient_is_an_input_error(inputs_path, tmp_path):
    document = read(inputs_path / "two_arrows_swap.json")
    document["action"][0]["arrows"] = {"a": {"b": "xyz"}, "b": "a"}
    assert main(["skew", str(write_document(tmp_path, document))]) == EXIT_INPUT_ERROR


def test_arrow_image_of_the_wrong_type_is_an_input_error(inputs_path, tmp_path):
    document = read(inputs_path / "two_arrows_swap.json")
    document["action"][0]["arrows"] = {"a": 2, "b": "a"}
    assert main(["enumerate", str(write_document(tmp_path, document))]) == EXIT_INPUT_ERROR


def test_exhausted_homotopy_search_exits_with_resource_abort(inputs_path, monkeypatch):
    monkeypatch.setattr(silting, "ISO_RANDOM_TRIALS", 0)
    assert main(["verify", str(inputs_path / "two_arrows_swap.json")]) == EXIT_RESOURCE_ABORT
