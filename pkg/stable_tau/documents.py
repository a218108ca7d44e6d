"""JSON input documents: field, bound quiver, group and action."""

import json
import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple

from stable_tau.algebra import Algebra, ArrowImage, automorphism_from_quiver_map, from_bound_quiver
from stable_tau.common import EngineOptions, InputError, parse_positive, parse_seed
from stable_tau.group_action import GroupAction, action_from_generators, trivial_action
from stable_tau.groups import FiniteGroup, cyclic_product, group_from_table
from stable_tau.linalg import FieldSpec, Matrix
from stable_tau.quiver import Arrow, QuiverPresentation, Relation


@dataclass(frozen=True)
class GeneratorMap:
    vertices: Dict[str, str]
    arrows: Dict[str, ArrowImage]


@dataclass(frozen=True)
class InputDocument:
    source: str
    field: FieldSpec
    quiver: QuiverPresentation
    group: Optional[FiniteGroup]
    generator_maps: Tuple[GeneratorMap, ...]
    options: EngineOptions

    @property
    def has_group(self) -> bool:
        return self.group is not None


def read_document(path: Path) -> Dict[str, Any]:
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as error:
        raise InputError(f"Input file {path} was not found") from error
    except json.JSONDecodeError as error:
        raise InputError(f"{path} is not valid JSON: {error.msg} at line {error.lineno}") from error
    if not isinstance(raw, dict):
        raise InputError(f"{path} must hold a JSON object")
    return raw


def _require(raw: Mapping[str, Any], key: str, kind: type, where: str) -> Any:
    if key not in raw:
        raise InputError(f"{where} is missing {key!r}")
    value = raw[key]
    if not isinstance(value, kind):
        raise InputError(f"{where}.{key} must be a {kind.__name__}")
    return value


def _parse_relation(raw: Any) -> Relation:
    if not isinstance(raw, list) or not raw:
        raise InputError("Each relation must be a non-empty list of terms")
    terms = []
    for term in raw:
        if isinstance(term, list):
            coefficient, path = "1", term
        elif isinstance(term, dict):
            coefficient, path = term.get("coefficient", "1"), term.get("path")
        else:
            raise InputError("A relation term must be a path list or an object with coefficient and path")
        if not isinstance(path, list) or not all(isinstance(label, str) for label in path):
            raise InputError("A relation path must be a list of arrow labels")
        try:
            value = Fraction(str(coefficient))
        except (ValueError, ZeroDivisionError) as error:
            raise InputError(f"Bad relation coefficient {coefficient!r}") from error
        terms.append((value, tuple(path)))
    return Relation(tuple(terms))


def parse_quiver(raw: Mapping[str, Any], nilpotency_bound: int) -> QuiverPresentation:
    vertices = _require(raw, "vertices", list, "quiver")
    arrows = []
    for entry in raw.get("arrows", []):
        if not isinstance(entry, dict):
            raise InputError("Each arrow must be an object with label, source and target")
        arrows.append(
            Arrow(
                str(_require(entry, "label", str, "arrow")),
                str(_require(entry, "source", str, "arrow")),
                str(_require(entry, "target", str, "arrow")),
            )
        )
    relations = tuple(_parse_relation(relation) for relation in raw.get("relations", []))
    bound = parse_positive(raw.get("nilpotency_bound", nilpotency_bound), "nilpotency_bound")
    return QuiverPresentation(tuple(str(vertex) for vertex in vertices), tuple(arrows), relations, bound)


def parse_group(raw: Optional[Mapping[str, Any]]) -> Optional[FiniteGroup]:
    if not raw:
        return None
    if "cyclic_orders" in raw:
        orders = _require(raw, "cyclic_orders", list, "group")
        return cyclic_product([parse_positive(order, "cyclic order") for order in orders])
    if "table" in raw:
        table = _require(raw, "table", list, "group")
        generators = _require(raw, "generators", list, "group")
        labels = raw.get("labels", [])
        try:
            rows = [[int(value) for value in row] for row in table]
            chosen = [int(value) for value in generators]
        except (TypeError, ValueError) as error:
            raise InputError("Group table entries and generators must be integers") from error
        return group_from_table(rows, chosen, [str(label) for label in labels])
    raise InputError("The group block needs cyclic_orders or a table with generators")


def _parse_generator_map(raw: Any) -> GeneratorMap:
    if not isinstance(raw, dict):
        raise InputError("Each action entry must be an object with vertices and arrows maps")
    vertices = raw.get("vertices", {})
    arrows = raw.get("arrows", {})
    if not isinstance(vertices, dict) or not isinstance(arrows, dict):
        raise InputError("Action vertices and arrows must be objects")
    for label, image in arrows.items():
        if not isinstance(image, (str, dict)):
            raise InputError(f"Image of arrow {label} must be an arrow label or an object of coefficients")
    return GeneratorMap({str(k): str(v) for k, v in vertices.items()}, dict(arrows))


def parse_options(raw: Mapping[str, Any], max_vertices: Optional[int] = None, seed: Optional[int] = None) -> EngineOptions:
    """Document options over config defaults; command-line values win."""
    options = EngineOptions()
    if "max_vertices" in raw:
        options = replace(options, max_vertices=parse_positive(raw["max_vertices"], "max_vertices"))
    if "nilpotency_bound" in raw:
        options = replace(options, nilpotency_bound=parse_positive(raw["nilpotency_bound"], "nilpotency_bound"))
    if "seed" in raw:
        options = replace(options, seed=parse_seed(str(raw["seed"])))
    if "primes" in raw:
        options = replace(options, primes=tuple(parse_positive(prime, "prime") for prime in raw["primes"]))
    if max_vertices is not None:
        options = replace(options, max_vertices=max_vertices)
    if seed is not None:
        options = replace(options, seed=seed)
    return options


def parse_document(
    raw: Mapping[str, Any],
    source: str = "<document>",
    field_override: Optional[FieldSpec] = None,
    max_vertices: Optional[int] = None,
    seed: Optional[int] = None,
) -> InputDocument:
    options_raw = raw.get("options", {})
    if not isinstance(options_raw, dict):
        raise InputError("options must be an object")
    options = parse_options(options_raw, max_vertices, seed)
    if field_override is not None:
        field = field_override
    else:
        try:
            field = FieldSpec.parse(str(raw.get("field", "Q")))
        except ValueError as error:
            raise InputError(str(error)) from error
    quiver = parse_quiver(_require(raw, "quiver", dict, "document"), options.nilpotency_bound)
    group_raw = raw.get("group")
    if group_raw is not None and not isinstance(group_raw, dict):
        raise InputError("group must be an object")
    group = parse_group(group_raw)
    action_raw = raw.get("action", [])
    if not isinstance(action_raw, list):
        raise InputError("action must be a list with one entry per group generator")
    maps = tuple(_parse_generator_map(entry) for entry in action_raw)
    if group is None and maps:
        raise InputError("An action block needs a group block")
    return InputDocument(source, field, quiver, group, maps, options)


def load_document(
    path: Path,
    field_override: Optional[FieldSpec] = None,
    max_vertices: Optional[int] = None,
    seed: Optional[int] = None,
) -> InputDocument:
    document = parse_document(read_document(path), str(path), field_override, max_vertices, seed)
    logging.info("Loaded %s over %s", path, document.field.label)
    return document


def build_algebra(document: InputDocument) -> Algebra:
    return from_bound_quiver(document.quiver, document.field)


def build_action(document: InputDocument, algebra: Algebra) -> GroupAction:
    """The group action of the document; the trivial group when the document has none."""
    group = document.group
    if group is None:
        return trivial_action(algebra)
    if len(document.generator_maps) != len(group.generators):
        raise InputError(f"The action lists {len(document.generator_maps)} maps for {len(group.generators)} generators")
    matrices: List[Matrix] = [
        automorphism_from_quiver_map(algebra, generator.vertices, generator.arrows) for generator in document.generator_maps
    ]
    return action_from_generators(algebra, group, matrices)
