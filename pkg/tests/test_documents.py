import json
from fractions import Fraction

import pytest

from stable_tau.common import InputError, parse_coefficient
from stable_tau.config import DEFAULT_MAX_VERTICES, DEFAULT_SEED
from stable_tau.documents import build_action, build_algebra, load_document, parse_document
from stable_tau.linalg import FieldSpec


def a2_document(**extra):
    document = {"quiver": {"vertices": ["1", "2"], "arrows": [{"label": "a", "source": "1", "target": "2"}]}}
    document.update(extra)
    return document


def test_defaults():
    document = parse_document(a2_document())
    assert document.field == FieldSpec.rationals()
    assert not document.has_group
    assert document.options.max_vertices == DEFAULT_MAX_VERTICES
    assert document.options.seed == DEFAULT_SEED
    assert build_algebra(document).dim == 3


def test_command_line_values_win():
    raw = a2_document(field="Q", options={"seed": "0x10", "max_vertices": 50})
    document = parse_document(raw)
    assert document.options.seed == 16
    assert document.options.max_vertices == 50
    document = parse_document(raw, field_override=FieldSpec.prime(5), max_vertices=7, seed=3)
    assert document.field == FieldSpec.prime(5)
    assert document.options.max_vertices == 7
    assert document.options.seed == 3


def test_relations_with_coefficients():
    raw = {
        "quiver": {
            "vertices": ["1", "2", "3"],
            "arrows": [{"label": "a", "source": "1", "target": "2"}, {"label": "b", "source": "2", "target": "3"}],
            "relations": [[{"coefficient": "-1/2", "path": ["a", "b"]}]],
        }
    }
    document = parse_document(raw)
    ((coefficient, path),) = document.quiver.relations[0].terms
    assert coefficient == Fraction(-1, 2)
    assert path == ("a", "b")
    assert build_algebra(document).dim == 5


def test_empty_group_block_is_the_trivial_group(inputs_path):
    document = load_document(inputs_path / "two_arrows_trivial.json")
    assert not document.has_group
    action = build_action(document, build_algebra(document))
    assert action.group.order == 1


@pytest.mark.parametrize(
    "raw",
    [
        {},
        {"quiver": []},
        a2_document(action=[{"vertices": {}, "arrows": {}}]),
        a2_document(group={"order": 2}),
        a2_document(group={"cyclic_orders": [0]}),
        a2_document(field="F9"),
        a2_document(options={"seed": "soon"}),
        a2_document(options=[]),
    ],
)
def test_malformed_documents(raw):
    with pytest.raises(InputError):
        parse_document(raw)


def test_map_count_must_match_generators():
    document = parse_document(
        a2_document(group={"cyclic_orders": [2, 2]}, action=[{"vertices": {"1": "1", "2": "2"}, "arrows": {"a": "a"}}])
    )
    with pytest.raises(InputError):
        build_action(document, build_algebra(document))


def test_unreadable_files(tmp_path):
    with pytest.raises(InputError):
        load_document(tmp_path / "missing.json")
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    with pytest.raises(InputError):
        load_document(broken)
    listing = tmp_path / "list.json"
    listing.write_text(json.dumps([1, 2]), encoding="utf-8")
    with pytest.raises(InputError):
        load_document(listing)


@pytest.mark.parametrize(
    "field, raw",
    [(FieldSpec.prime(7), "1/7"), (FieldSpec.rationals(), "xyz"), (FieldSpec.rationals(), None), (FieldSpec.prime(5), [1])],
)
def test_bad_coefficients_are_input_errors(field, raw):
    with pytest.raises(InputError, match="coefficient") as caught:
        parse_coefficient(field, raw, "Relation")
    assert caught.value.__cause__ is not None


def test_coefficients_reduce_into_the_field():
    assert parse_coefficient(FieldSpec.prime(7), "1/2", "Relation") == 4
    assert parse_coefficient(FieldSpec.rationals(), " -3/4 ", "Relation") == Fraction(-3, 4)


def test_relation_coefficient_without_image_fails_at_build():
    raw = {
        "field": "Fp:7",
        "quiver": {
            "vertices": ["1", "2", "3"],
            "arrows": [{"label": "a", "source": "1", "target": "2"}, {"label": "b", "source": "2", "target": "3"}],
            "relations": [[{"coefficient": "1/7", "path": ["a", "b"]}]],
        },
    }
    document = parse_document(raw)
    with pytest.raises(InputError, match="1/7"):
        build_algebra(document)


def test_arrow_image_coefficients_are_checked():
    document = parse_document(
        {
            "quiver": {
                "vertices": ["1", "2", "2'"],
                "arrows": [{"label": "a", "source": "1", "target": "2"}, {"label": "b", "source": "1", "target": "2'"}],
            },
            "group": {"cyclic_orders": [2]},
            "action": [{"vertices": {"2": "2'", "2'": "2"}, "arrows": {"a": {"b": "xyz"}, "b": "a"}}],
        }
    )
    with pytest.raises(InputError, match="Image of arrow a"):
        build_action(document, build_algebra(document))
