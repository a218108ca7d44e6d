"""JSON and DOT output for the command surface."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import networkx as nx
from networkx.drawing.nx_pydot import to_pydot

from stable_tau.algebra import Algebra, gabriel_quiver
from stable_tau.checks import CheckResult
from stable_tau.common import format_seed
from stable_tau.config import SINK_VERTEX_COLOR, SOURCE_VERTEX_COLOR, STABLE_VERTEX_COLOR
from stable_tau.groups import FiniteGroup
from stable_tau.modules import decompose, module_label, projective, top
from stable_tau.mutation import ExchangeQuiver
from stable_tau.skew import BijectionReport, SkewAlgebra, induce, morita_restrict


Report = Dict[str, Any]


def algebra_summary(algebra: Algebra) -> Report:
    return {
        "field": algebra.field.label,
        "dimension": algebra.dim,
        "simples": [algebra.vertex_label(index) for index in range(algebra.vertex_count)],
    }


def group_summary(group: FiniteGroup) -> Report:
    return {
        "order": group.order,
        "generators": [group.label(g) for g in group.generators],
        "abelian": group.is_abelian,
    }


def quiver_report(quiver: ExchangeQuiver) -> Report:
    algebra = quiver.algebra
    vertices = []
    for position, (pair, info) in enumerate(zip(quiver.vertices, quiver.annotations)):
        vertices.append(
            {
                "index": position,
                "label": pair.label(),
                "t_parts": [
                    {"label": module_label(part), "dim_vector": list(part.dim_vector)} for part in pair.t_parts
                ],
                "p_parts": [algebra.vertex_label(index) for index in sorted(pair.p_parts)],
                "sincere": info.sincere,
                "faithful": info.faithful,
                "classification": info.classification,
                "stable": info.stable,
            }
        )
    arrows = [
        {
            "source": arrow.source,
            "target": arrow.target,
            "summand": module_label(quiver.vertices[arrow.source].t_parts[arrow.summand]),
        }
        for arrow in quiver.arrows
    ]
    return {
        "vertex_count": len(quiver),
        "arrow_count": len(quiver.arrows),
        "stable_count": len(quiver.stable_indices()),
        "source": quiver.source_index,
        "sink": quiver.sink_index,
        "vertices": vertices,
        "arrows": arrows,
    }


def enumerate_report(quiver: ExchangeQuiver, group: FiniteGroup, seed: int) -> Report:
    return {
        "command": "enumerate",
        "seed": format_seed(seed),
        "algebra": algebra_summary(quiver.algebra),
        "group": group_summary(group),
        "exchange_quiver": quiver_report(quiver),
    }


def _induction_table(skew: SkewAlgebra) -> List[Report]:
    """Basic images of the induced simples and indecomposable projectives."""
    base = skew.base
    rows = []
    for index in range(base.vertex_count):
        cover = projective(base, index)
        for module in (top(cover)[0], cover):
            image = morita_restrict(skew, induce(skew, module))
            rows.append(
                {
                    "module": module_label(module),
                    "image": [module_label(part) for part in decompose(image)],
                }
            )
    return rows


def skew_report(skew: SkewAlgebra, seed: int) -> Report:
    basic = skew.reduction.algebra
    shape = gabriel_quiver(basic)
    return {
        "command": "skew",
        "seed": format_seed(seed),
        "algebra": algebra_summary(skew.base),
        "group": group_summary(skew.group),
        "skew_dimension": skew.algebra.dim,
        "primitive_idempotents": skew.algebra.vertex_count,
        "basic": {
            "dimension": basic.dim,
            "simples": list(shape.vertices),
            "arrows": [[arrow.source, arrow.target] for arrow in shape.arrows],
        },
        "induction": _induction_table(skew),
    }


def check_report(results: Sequence[CheckResult]) -> List[Report]:
    return [{"name": result.name, "passed": result.passed, "detail": result.detail} for result in results]


def verify_report(
    results: Sequence[CheckResult],
    seed: int,
    bijection: Optional[BijectionReport] = None,
    refusal: Optional[str] = None,
) -> Report:
    report: Report = {
        "command": "verify",
        "seed": format_seed(seed),
        "passed": refusal is None and all(result.passed for result in results),
        "checks": check_report(results),
    }
    if refusal is not None:
        report["refused"] = refusal
    if bijection is not None:
        base, basic = bijection.base_quiver, bijection.basic_quiver
        report["algebra"] = algebra_summary(base.algebra)
        report["group"] = group_summary(bijection.skew.group)
        report["characters"] = len(bijection.characters)
        report["base"] = quiver_report(base)
        report["basic"] = quiver_report(basic)
        report["matching"] = [
            {"source": base.vertices[source].label(), "target": basic.vertices[target].label()}
            for source, target in sorted(bijection.matches.items())
        ]
    return report


def render_json(report: Report) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def write_json(report: Report, path: Path) -> None:
    path.write_text(render_json(report), encoding="utf-8")


def dot_graph(quiver: ExchangeQuiver) -> nx.DiGraph:
    """String-attributed copy of the exchange quiver; stable vertices are filled."""
    graph = nx.DiGraph(name="exchange_quiver")
    source, sink = quiver.source_index, quiver.sink_index
    for position, (pair, info) in enumerate(zip(quiver.vertices, quiver.annotations)):
        attributes = {"label": f'"{pair.label()}"'}
        if info.stable:
            attributes.update(color=STABLE_VERTEX_COLOR, style="filled", fillcolor=STABLE_VERTEX_COLOR)
        if position == source:
            attributes["penwidth"] = "2"
            attributes.setdefault("color", SOURCE_VERTEX_COLOR)
        elif position == sink:
            attributes["penwidth"] = "2"
            attributes.setdefault("color", SINK_VERTEX_COLOR)
        graph.add_node(str(position), **attributes)
    for arrow in quiver.arrows:
        graph.add_edge(str(arrow.source), str(arrow.target))
    return graph


def render_dot(graph: nx.Graph) -> str:
    return to_pydot(graph).to_string()


def gabriel_graph(algebra: Algebra) -> nx.MultiDiGraph:
    shape = gabriel_quiver(algebra)
    graph = nx.MultiDiGraph(name="gabriel_quiver")
    for position, vertex in enumerate(shape.vertices):
        graph.add_node(str(position), label=f'"{vertex}"')
    for arrow in shape.arrows:
        graph.add_edge(str(shape.vertex_index(arrow.source)), str(shape.vertex_index(arrow.target)))
    return graph


def emit(report: Report, json_path: Optional[Path], graph: Optional[nx.Graph], dot_path: Optional[Path]) -> None:
    """Write the report to ``json_path`` or stdout, and the graph to ``dot_path`` when given."""
    if json_path is not None:
        write_json(report, json_path)
        logging.info("Wrote %s", json_path)
    else:
        print(render_json(report), end="")
    if dot_path is not None and graph is not None:
        dot_path.write_text(render_dot(graph), encoding="utf-8")
        logging.info("Wrote %s", dot_path)
