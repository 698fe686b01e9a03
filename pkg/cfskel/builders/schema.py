from enum import Enum
from typing import List
from typing import Tuple
from typing import Sequence
from fractions import Fraction

from ..metric_graph import Edge
from ..metric_graph import Vertex
from ..metric_graph import MetricGraph


class Locus(str, Enum):
    SPLIT = "split"
    UNRAMIFIED = "unramified"
    RAMIFIED = "ramified"
    TEMPERATE = "temperate"

    @property
    def vanishing(self) -> bool:
        return self in (Locus.SPLIT, Locus.UNRAMIFIED)


def arm(
    anchor: str,
    anchor_mult: int,
    mults: Sequence[int],
    prefix: str,
) -> Tuple[List[Vertex], List[Edge]]:
    """A chain hanging from `anchor`, vertices `{prefix}_{k}` and edges `{prefix}e_{k}`."""
    vertices = []
    edges = []
    previous, previous_mult = anchor, anchor_mult
    for k, mult in enumerate(mults):
        vid = f"{prefix}_{k}"
        vertices.append(Vertex(vid, mult))
        length = Fraction(1, previous_mult * mult)
        edges.append(Edge(f"{prefix}e_{k}", previous, vid, length))
        previous, previous_mult = vid, mult
    return vertices, edges


def star_graph(center: int, arms: Sequence[Sequence[int]]) -> MetricGraph:
    vertices = [Vertex("c", center)]
    edges: List[Edge] = []
    for i, mults in enumerate(arms):
        arm_vertices, arm_edges = arm("c", center, mults, f"a{i}")
        vertices.extend(arm_vertices)
        edges.extend(arm_edges)
    return MetricGraph(tuple(vertices), tuple(edges))


__all__ = [
    "Locus",
    "arm",
    "star_graph",
]
