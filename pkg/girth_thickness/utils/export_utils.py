"""
Serialization of decompositions: byte-stable JSON and Graphviz DOT.
"""

from typing import Callable, List, Optional

from ..models import VertexMap
from ..schemas import Decomposition, VerificationReport


def to_json(decomposition: Decomposition) -> str:
    """Compact JSON in schema field order, newline terminated."""
    return decomposition.model_dump_json() + "\n"


def from_json(raw: str) -> Decomposition:
    return Decomposition.model_validate_json(raw)


def label_function(vertex_map: Optional[VertexMap]) -> Callable[[int], str]:
    """v_j / v'_j / x / y labels when a map is given, plain integer ids otherwise."""
    if vertex_map is None:
        return str
    return vertex_map.label


def labeled_parts(decomposition: Decomposition, vertex_map: Optional[VertexMap]) -> List[List[List[str]]]:
    label = label_function(vertex_map)
    return [[[label(u), label(v)] for u, v in part] for part in decomposition.parts]


def _quote(name: str) -> str:
    return '"' + name.replace('"', '\\"') + '"'


def to_dot(
    decomposition: Decomposition,
    report: Optional[VerificationReport] = None,
    vertex_map: Optional[VertexMap] = None,
) -> str:
    """One undirected graph block per part, annotated with size, girth and planarity."""
    label = label_function(vertex_map)
    blocks = []
    for index, part in enumerate(decomposition.parts):
        annotation = f"part {index + 1} of {decomposition.parts_count}: size={len(part)}"
        if report is not None:
            result = report.part_results[index]
            annotation += f" girth={result.girth} planar={str(result.planar).lower()}"
        lines = [f"graph part_{index + 1} {{", f"  label={_quote(annotation)};"]
        for vertex in range(decomposition.n):
            lines.append(f"  {_quote(label(vertex))};")
        for u, v in part:
            lines.append(f"  {_quote(label(u))} -- {_quote(label(v))};")
        lines.append("}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"
