import networkx as nx

from abc import abstractmethod
from abc import ABCMeta
from typing import Dict
from typing import List
from typing import Type
from typing import Tuple
from typing import Optional
from cftool.misc import WithRegister

from .errors import InputError
from .config import SkeletaConfig
from .toolkit import format_rational
from .different import PLFunction
from .metric_graph import MetricGraph


renderers: Dict[str, Type["IRenderer"]] = {}


class IRenderer(WithRegister["IRenderer"], metaclass=ABCMeta):
    d = renderers

    def __init__(self, config: Optional[SkeletaConfig] = None):
        self.config = config or SkeletaConfig()

    @abstractmethod
    def render(self, graph: MetricGraph, function: Optional[PLFunction] = None) -> str:
        pass

    @staticmethod
    def check_function(graph: MetricGraph, function: Optional[PLFunction]) -> None:
        if function is not None and function.graph != graph:
            raise InputError("function does not live on the rendered graph")


def _quote(text: str) -> str:
    escaped = text.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


@IRenderer.register("dot")
class DotRenderer(IRenderer):
    """
    Deterministic Graphviz output.

    Vertices are labelled `id:mult[:g=genus]` and edges with their exact
    lengths; a supplied function adds `delta=` values to vertices and
    `slope=` values (first endpoint to second) to edges.

    """

    def render(self, graph: MetricGraph, function: Optional[PLFunction] = None) -> str:
        self.check_function(graph, function)
        lines = [f"graph {_quote(self.config.dot_graph_name)} {{"]
        for vertex in graph.vertices:
            label = f"{vertex.id}:{vertex.mult}"
            if vertex.genus:
                label += f":g={vertex.genus}"
            if function is not None:
                label += f" | delta={format_rational(function.values[vertex.id])}"
            lines.append(f"  {_quote(vertex.id)} [label={_quote(label)}];")
        for edge in graph.edges:
            label = format_rational(edge.length)
            if function is not None:
                label += f" | slope={format_rational(function.edge_slope(edge.id))}"
            lines.append(
                f"  {_quote(edge.u)} -- {_quote(edge.v)} [label={_quote(label)}];"
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def layered_layout(graph: MetricGraph) -> Dict[str, Tuple[int, int]]:
    """Breadth-first layers from the first vertex: x is the depth, y the rank in its layer."""
    root = graph.vertex_ids[0]
    depths = nx.single_source_shortest_path_length(graph.to_networkx(), root)
    layers: Dict[int, List[str]] = {}
    for vertex_id in graph.vertex_ids:
        layers.setdefault(depths[vertex_id], []).append(vertex_id)
    positions = {}
    for depth, members in layers.items():
        for rank, vertex_id in enumerate(members):
            positions[vertex_id] = depth, -rank
    return positions


@IRenderer.register("tikz")
class TikzRenderer(IRenderer):
    def render(self, graph: MetricGraph, function: Optional[PLFunction] = None) -> str:
        self.check_function(graph, function)
        names = {v: f"v{i}" for i, v in enumerate(graph.vertex_ids)}
        positions = layered_layout(graph)
        scale = format_rational(self.config.scale)
        lines = [f"\\begin{{tikzpicture}}[scale={scale}]"]
        for vertex in graph.vertices:
            x, y = positions[vertex.id]
            label = vertex.id
            if vertex.genus:
                label += f", g={vertex.genus}"
            if function is not None:
                label += f", $\\delta$={format_rational(function.values[vertex.id])}"
            lines.append(
                f"  \\node[circle, draw, label=above:{{{label}}}] "
                f"({names[vertex.id]}) at ({x}, {y}) {{{vertex.mult}}};"
            )
        for edge in graph.edges:
            label = format_rational(edge.length)
            if function is not None:
                label += f"; {format_rational(function.edge_slope(edge.id))}"
            u, v = names[edge.u], names[edge.v]
            if edge.is_loop:
                lines.append(
                    f"  \\draw ({u}) to[loop right] node[right] {{{label}}} ({u});"
                )
            else:
                lines.append(
                    f"  \\draw ({u}) -- node[midway, above, sloped] {{{label}}} ({v});"
                )
        lines.append("\\end{tikzpicture}")
        return "\n".join(lines) + "\n"


def render(
    graph: MetricGraph,
    function: Optional[PLFunction] = None,
    *,
    fmt: Optional[str] = None,
    config: Optional[SkeletaConfig] = None,
) -> str:
    config = config or SkeletaConfig()
    fmt = fmt or config.render_format
    if fmt not in IRenderer.d:
        raise InputError(f"unknown render format occurred: '{fmt}'")
    return IRenderer.make(fmt, {"config": config}).render(graph, function)


def render_dot(
    graph: MetricGraph,
    function: Optional[PLFunction] = None,
    name: str = "skeleton",
) -> str:
    return render(graph, function, fmt="dot", config=SkeletaConfig(dot_graph_name=name))


__all__ = [
    "IRenderer",
    "DotRenderer",
    "TikzRenderer",
    "layered_layout",
    "render",
    "render_dot",
]
