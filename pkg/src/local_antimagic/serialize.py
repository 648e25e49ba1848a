"""JSON round-tripping for graphs and labelings, plus DOT export.

The on-disk document is a plain JSON object: a graph is
``{"n": int, "edges": [[u, v], ...], "provenance": [[...], ...]}`` and a
combined document wraps it as ``{"graph": ..., "labels": [...]}`` with
the labels in edge-index order.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from .graphs import Graph
from .labelings import EdgeLabeling, induced_coloring


def graph_to_dict(g: Graph) -> dict[str, Any]:
    return {
        "n": g.n,
        "edges": [list(e) for e in g.edges],
        "provenance": [list(p) for p in g.provenance],
    }


def graph_from_dict(data: dict[str, Any]) -> Graph:
    prov = data.get("provenance")
    return Graph(
        int(data["n"]),
        tuple((int(u), int(v)) for u, v in data["edges"]),
        tuple(tuple(p) for p in prov) if prov else (),
    )


def labeling_to_list(f: EdgeLabeling) -> list[int]:
    return list(f.labels)


def labeling_from_list(data: list[int]) -> EdgeLabeling:
    return EdgeLabeling(tuple(int(x) for x in data))


def document(g: Graph, f: Optional[EdgeLabeling] = None, **extra) -> dict[str, Any]:
    doc: dict[str, Any] = {"graph": graph_to_dict(g)}
    if f is not None:
        doc["labels"] = labeling_to_list(f)
    doc.update(extra)
    return doc


def parse_document(text: str) -> tuple[Graph, Optional[EdgeLabeling], dict[str, Any]]:
    data = json.loads(text)
    if "graph" not in data:
        raise ValueError("document is missing the 'graph' field")
    g = graph_from_dict(data["graph"])
    f = labeling_from_list(data["labels"]) if "labels" in data else None
    extra = {k: v for k, v in data.items() if k not in ("graph", "labels")}
    return g, f, extra


def to_dot(g: Graph, f: Optional[EdgeLabeling] = None) -> str:
    """Graphviz text; with a labeling, vertices show their induced sums
    and edges their labels."""
    sums = induced_coloring(g, f).sums if f is not None else None
    lines = ["graph {"]
    for v in range(g.n):
        name = g.vertex_name(v)
        label = name if sums is None else f"{name}\\n{sums[v]}"
        lines.append(f'  {v} [label="{label}"];')
    for i, (u, v) in enumerate(g.edges):
        attr = "" if f is None else f' [label="{f[i]}"]'
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines)
