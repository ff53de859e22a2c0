"""Instance and report serialization.

Text format, one instance per file::

    collinear <m>
    <x> <R|B>     (m lines, x strictly increasing)

    circle <n> <k> <R|B>

A JSON mirror of the same schema is accepted and emitted, e.g.
``{"kind": "collinear", "points": [{"x": 0, "color": "R"}, ...]}`` and
``{"kind": "circle", "n": 8, "k": 4, "first_chunk_color": "R"}``.
Solve reports are emitted as JSON only.
"""

from __future__ import annotations

import json
from typing import Union

from .core import (
    ArcEdge,
    ArcGraph,
    CircleInstance,
    CollinearInstance,
    Color,
    Instance,
    Page,
    SolveReport,
    StructureKind,
)


def _parse_number(token: str) -> Union[int, float]:
    try:
        return int(token)
    except ValueError:
        return float(token)


def _parse_color(token: str) -> Color:
    try:
        return Color(token.upper())
    except ValueError:
        raise ValueError(f"bad color {token!r}, expected R or B") from None


def parse_instance_text(text: str) -> Instance:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty instance file")
    head = lines[0].split()
    if head[0] == "collinear":
        if len(head) != 2:
            raise ValueError("expected: collinear <m>")
        m = int(head[1])
        if len(lines) - 1 != m:
            raise ValueError(f"expected {m} point lines, got {len(lines) - 1}")
        pts = []
        for ln in lines[1:]:
            tok = ln.split()
            if len(tok) != 2:
                raise ValueError(f"bad point line {ln!r}")
            pts.append((_parse_number(tok[0]), _parse_color(tok[1])))
        return CollinearInstance.from_pairs(pts)
    if head[0] == "circle":
        if len(head) != 4:
            raise ValueError("expected: circle <n> <k> <R|B>")
        return CircleInstance(int(head[1]), int(head[2]), _parse_color(head[3]))
    raise ValueError(f"unknown instance kind {head[0]!r}")


def format_instance_text(inst: Instance) -> str:
    if isinstance(inst, CollinearInstance):
        lines = [f"collinear {inst.n_points}"]
        lines += [f"{x} {c.value}" for x, c in zip(inst.xs, inst.colors)]
        return "\n".join(lines) + "\n"
    return f"circle {inst.n} {inst.k} {inst.first_chunk_color.value}\n"


def instance_to_json(inst: Instance) -> dict:
    if isinstance(inst, CollinearInstance):
        return {
            "kind": "collinear",
            "points": [
                {"x": x, "color": c.value} for x, c in zip(inst.xs, inst.colors)
            ],
        }
    return {
        "kind": "circle",
        "n": inst.n,
        "k": inst.k,
        "first_chunk_color": inst.first_chunk_color.value,
    }


def instance_from_json(obj: dict) -> Instance:
    kind = obj.get("kind")
    if kind == "collinear":
        pts = [(_coerce_x(p["x"]), _parse_color(p["color"])) for p in obj["points"]]
        return CollinearInstance.from_pairs(pts)
    if kind == "circle":
        return CircleInstance(
            int(obj["n"]), int(obj["k"]), _parse_color(obj["first_chunk_color"])
        )
    raise ValueError(f"unknown instance kind {kind!r}")


def _coerce_x(value):
    if isinstance(value, bool):
        raise ValueError("x must be a number")
    if isinstance(value, int):
        return value
    return float(value)


def loads_instance(text: str) -> Instance:
    """Parse either the text format or its JSON mirror (sniffed)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return instance_from_json(json.loads(text))
    return parse_instance_text(text)


def load_instance(path) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_instance(fh.read())


def save_instance(inst: Instance, path, json_format: bool = False) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        if json_format:
            json.dump(instance_to_json(inst), fh, indent=2)
            fh.write("\n")
        else:
            fh.write(format_instance_text(inst))


def report_to_json(report: SolveReport) -> dict:
    return {
        "structure": report.structure_kind.value,
        "total_weight": report.total_weight,
        "noncrossing": report.noncrossing,
        "edge_count": len(report.graph),
        "edges": [
            {"u": e.u, "v": e.v, "page": e.page.value if e.page else None}
            for e in report.graph.sorted_edges()
        ],
    }


def report_from_json(obj: dict, inst: Instance) -> SolveReport:
    edges = [
        ArcEdge(e["u"], e["v"], Page(e["page"]) if e.get("page") else None)
        for e in obj["edges"]
    ]
    report = SolveReport.build(inst, edges, StructureKind(obj["structure"]))
    if obj.get("edge_count") not in (None, len(report.graph)):
        raise ValueError("edge_count does not match edge list")
    return report
