import networkx as nx

from typing import Any
from typing import Dict
from typing import List
from typing import Tuple
from typing import Union
from typing import Iterable
from typing import Optional
from fractions import Fraction
from dataclasses import field
from dataclasses import replace as replace_fields
from dataclasses import dataclass

from .errors import InputError
from .errors import DisconnectedGraphError
from .errors import InconsistentDataError
from .toolkit import to_fraction
from .toolkit import format_rational
from .toolkit import require_positive
from .toolkit import require_non_negative
from .toolkit import TRational


@dataclass(frozen=True)
class Vertex:
    id: str
    mult: int
    genus: int = 0

    def __post_init__(self) -> None:
        require_positive(self.mult, f"multiplicity of '{self.id}'")
        require_non_negative(self.genus, f"genus of '{self.id}'")

    @property
    def chi(self) -> int:
        return 2 - 2 * self.genus


@dataclass(frozen=True)
class Edge:
    id: str
    u: str
    v: str
    length: Fraction

    def __post_init__(self) -> None:
        length = to_fraction(self.length)
        if length <= 0:
            raise InputError(
                f"length of '{self.id}' should be positive, "
                f"but got {format_rational(length)}"
            )
        object.__setattr__(self, "length", length)

    @property
    def ends(self) -> Tuple[str, str]:
        return self.u, self.v

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, vertex_id: str) -> str:
        if vertex_id == self.u:
            return self.v
        if vertex_id == self.v:
            return self.u
        raise InputError(f"'{vertex_id}' is not an endpoint of '{self.id}'")

    def ends_at(self, vertex_id: str) -> int:
        return int(self.u == vertex_id) + int(self.v == vertex_id)


TVertexSpec = Union[Vertex, Tuple[str, int], Tuple[str, int, int]]
TEdgeSpec = Union[Edge, Tuple[str, str, str, TRational]]


def _to_vertex(spec: TVertexSpec) -> Vertex:
    if isinstance(spec, Vertex):
        return spec
    return Vertex(*spec)


def _to_edge(spec: TEdgeSpec) -> Edge:
    if isinstance(spec, Edge):
        return spec
    return Edge(*spec)


@dataclass(frozen=True)
class MetricGraph:
    """
    A connected metric graph whose vertices carry a multiplicity and a genus.

    Vertices and edges are kept sorted by id, so every iteration over a graph
    is deterministic. Mutating operations return new graphs.

    Attributes
    ----------
    vertices : Tuple[Vertex, ...]
        The vertices, with unique ids.
    edges : Tuple[Edge, ...]
        The edges, with unique ids and positive exact lengths. Loops and
        parallel edges are allowed.

    Examples
    --------
    >>> graph = MetricGraph.create([("x", 1, 1)], [])
    >>> euler_char(graph)
    0

    """

    vertices: Tuple[Vertex, ...]
    edges: Tuple[Edge, ...]
    _vertex_index: Dict[str, Vertex] = field(
        init=False, repr=False, compare=False, hash=False
    )
    _edge_index: Dict[str, Edge] = field(
        init=False, repr=False, compare=False, hash=False
    )
    _incidence: Dict[str, List[Edge]] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        vertices = tuple(sorted(self.vertices, key=lambda vertex: vertex.id))
        edges = tuple(sorted(self.edges, key=lambda edge: edge.id))
        if not vertices:
            raise InputError("graph should contain at least one vertex")
        vertex_index: Dict[str, Vertex] = {}
        for vertex in vertices:
            if vertex.id in vertex_index:
                raise InputError(f"duplicate vertex id occurred: '{vertex.id}'")
            vertex_index[vertex.id] = vertex
        edge_index: Dict[str, Edge] = {}
        incidence: Dict[str, List[Edge]] = {vertex.id: [] for vertex in vertices}
        for edge in edges:
            if edge.id in edge_index:
                raise InputError(f"duplicate edge id occurred: '{edge.id}'")
            for end in edge.ends:
                if end not in vertex_index:
                    raise InputError(
                        f"unknown vertex '{end}' occurred in edge '{edge.id}'"
                    )
            edge_index[edge.id] = edge
            incidence[edge.u].append(edge)
            if not edge.is_loop:
                incidence[edge.v].append(edge)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_vertex_index", vertex_index)
        object.__setattr__(self, "_edge_index", edge_index)
        object.__setattr__(self, "_incidence", incidence)
        if not nx.is_connected(self.to_networkx()):
            raise DisconnectedGraphError("graph should be connected")

    @classmethod
    def create(
        cls,
        vertices: Iterable[TVertexSpec],
        edges: Iterable[TEdgeSpec],
    ) -> "MetricGraph":
        return cls(
            tuple(map(_to_vertex, vertices)),
            tuple(map(_to_edge, edges)),
        )

    @property
    def vertex_ids(self) -> List[str]:
        return [vertex.id for vertex in self.vertices]

    @property
    def edge_ids(self) -> List[str]:
        return [edge.id for edge in self.edges]

    @property
    def total_length(self) -> Fraction:
        return sum((edge.length for edge in self.edges), Fraction(0))

    @property
    def leaves(self) -> List[str]:
        return [v for v in self.vertex_ids if self.valency(v) == 1]

    def has_vertex(self, vertex_id: str) -> bool:
        return vertex_id in self._vertex_index

    def has_edge(self, edge_id: str) -> bool:
        return edge_id in self._edge_index

    def vertex(self, vertex_id: str) -> Vertex:
        vertex = self._vertex_index.get(vertex_id)
        if vertex is None:
            raise InputError(f"unknown vertex occurred: '{vertex_id}'")
        return vertex

    def edge(self, edge_id: str) -> Edge:
        edge = self._edge_index.get(edge_id)
        if edge is None:
            raise InputError(f"unknown edge occurred: '{edge_id}'")
        return edge

    def incident_edges(self, vertex_id: str) -> List[Edge]:
        """Edges incident to the vertex, a loop listed once."""
        self.vertex(vertex_id)
        return list(self._incidence[vertex_id])

    def valency(self, vertex_id: str) -> int:
        return sum(edge.ends_at(vertex_id) for edge in self.incident_edges(vertex_id))

    def neighbours(self, vertex_id: str) -> List[str]:
        others = {edge.other(vertex_id) for edge in self.incident_edges(vertex_id)}
        return sorted(others)

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        for vertex in self.vertices:
            graph.add_node(vertex.id, mult=vertex.mult, genus=vertex.genus)
        for edge in self.edges:
            graph.add_edge(edge.u, edge.v, key=edge.id, length=edge.length)
        return graph

    def fresh_vertex_id(self, prefix: str) -> str:
        return _fresh(prefix, self._vertex_index)

    def fresh_edge_id(self, prefix: str) -> str:
        return _fresh(prefix, self._edge_index)

    def replace(
        self,
        *,
        vertices: Optional[Iterable[Vertex]] = None,
        edges: Optional[Iterable[Edge]] = None,
    ) -> "MetricGraph":
        return MetricGraph(
            tuple(self.vertices if vertices is None else vertices),
            tuple(self.edges if edges is None else edges),
        )

    def with_vertex(self, vertex_id: str, **kwargs: Any) -> "MetricGraph":
        """Return a copy in which the given vertex has updated `mult` / `genus`."""
        updated = replace_fields(self.vertex(vertex_id), **kwargs)
        vertices = [updated if v.id == vertex_id else v for v in self.vertices]
        return self.replace(vertices=vertices)


def _fresh(prefix: str, taken: Dict[str, Any]) -> str:
    if prefix not in taken:
        return prefix
    i = 1
    while f"{prefix}{i}" in taken:
        i += 1
    return f"{prefix}{i}"


@dataclass(frozen=True, eq=False)
class Divisor:
    """
    A finite formal combination of vertices with exact rational coefficients.

    Zero coefficients are dropped, so two divisors compare equal iff they have
    the same support and coefficients.

    """

    coefficients: Dict[str, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        normalized: Dict[str, Fraction] = {}
        for k in sorted(self.coefficients):
            value = to_fraction(self.coefficients[k])
            if value != 0:
                normalized[k] = value
        object.__setattr__(self, "coefficients", normalized)

    def __getitem__(self, vertex_id: str) -> Fraction:
        return self.coefficients.get(vertex_id, Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __add__(self, other: "Divisor") -> "Divisor":
        merged = dict(self.coefficients)
        for k, v in other.coefficients.items():
            merged[k] = merged.get(k, Fraction(0)) + v
        return Divisor(merged)

    def __neg__(self) -> "Divisor":
        return Divisor({k: -v for k, v in self.coefficients.items()})

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __mul__(self, scalar: TRational) -> "Divisor":
        factor = to_fraction(scalar)
        return Divisor({k: factor * v for k, v in self.coefficients.items()})

    __rmul__ = __mul__

    @property
    def degree(self) -> Fraction:
        return sum(self.coefficients.values(), Fraction(0))

    @property
    def support(self) -> List[str]:
        return list(self.coefficients)

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def restrict(self, vertex_ids: Iterable[str]) -> "Divisor":
        keep = set(vertex_ids)
        return Divisor({k: v for k, v in self.coefficients.items() if k in keep})

    def check_support(self, graph: MetricGraph) -> None:
        for vertex_id in self.coefficients:
            if not graph.has_vertex(vertex_id):
                raise InputError(f"divisor is supported off the graph: '{vertex_id}'")

    def items(self) -> List[Tuple[str, Fraction]]:
        return list(self.coefficients.items())


def local_chi(graph: MetricGraph, vertex_id: str) -> int:
    return graph.vertex(vertex_id).chi - graph.valency(vertex_id)


def canonical_divisor(graph: MetricGraph) -> Divisor:
    return Divisor(
        {v.id: Fraction(v.mult * local_chi(graph, v.id)) for v in graph.vertices}
    )


def euler_char(graph: MetricGraph) -> int:
    return int(canonical_divisor(graph).degree)


def region_euler_char(graph: MetricGraph, region: Iterable[str]) -> int:
    """Sum of canonical coefficients over `region`, valencies taken in `graph`."""
    total = 0
    for vertex_id in sorted(set(region)):
        total += graph.vertex(vertex_id).mult * local_chi(graph, vertex_id)
    return total


def skeleton_criterion(chi_graph: int, chi_curve: int) -> bool:
    return chi_graph == chi_curve


def over_extension_chi(graph: MetricGraph, e: int) -> int:
    """χ of a graph whose multiplicities are over k, re-measured over an extension of index `e`."""
    require_positive(e, "ramification index")
    chi = Fraction(euler_char(graph), e)
    if chi.denominator != 1:
        raise InconsistentDataError(
            f"euler characteristic {euler_char(graph)} is not divisible by e={e}"
        )
    return chi.numerator


def _check_neat_distance(m_end: int, d: TRational) -> Fraction:
    require_positive(m_end, "end multiplicity")
    distance = to_fraction(d)
    upper = Fraction(1, m_end * m_end)
    if not 0 < distance <= upper:
        raise InputError(
            f"distance should lie in (0, {format_rational(upper)}], "
            f"but got {format_rational(distance)}"
        )
    return distance


def farey_multiplicity(m_end: int, d: TRational) -> int:
    distance = _check_neat_distance(m_end, d)
    q = m_end * m_end * distance
    return q.denominator * m_end


def stern_brocot_trace(m_end: int, d: TRational) -> List[Tuple[Fraction, int]]:
    """
    Blow up nodes of a neat interval of length 1/m² until a point at distance `d` appears.

    Returns the created points as (distance, multiplicity) pairs, the last one
    being the queried point.

    """
    distance = _check_neat_distance(m_end, d)
    left_pos, left_mult = Fraction(0), m_end
    right_pos, right_mult = Fraction(1, m_end * m_end), m_end
    if distance == right_pos:
        return [(right_pos, right_mult)]
    trace: List[Tuple[Fraction, int]] = []
    while True:
        mult = left_mult + right_mult
        pos = left_pos + Fraction(1, left_mult * mult)
        trace.append((pos, mult))
        if pos == distance:
            return trace
        if distance < pos:
            right_pos, right_mult = pos, mult
        else:
            left_pos, left_mult = pos, mult


def stern_brocot_multiplicity(m_end: int, d: TRational) -> int:
    return stern_brocot_trace(m_end, d)[-1][1]


def blowup_node(
    graph: MetricGraph,
    edge_id: str,
    vertex_id: Optional[str] = None,
) -> MetricGraph:
    edge = graph.edge(edge_id)
    m1 = graph.vertex(edge.u).mult
    m2 = graph.vertex(edge.v).mult
    if edge.length != Fraction(1, m1 * m2):
        raise InputError(
            f"edge '{edge_id}' has length {format_rational(edge.length)}, "
            f"but a node between multiplicities {m1} and {m2} has length 1/{m1 * m2}"
        )
    return subdivide_edge(
        graph,
        edge_id,
        Fraction(1, m1 * (m1 + m2)),
        m1 + m2,
        vertex_id=vertex_id,
    )


def blowup_smooth(
    graph: MetricGraph,
    vertex_id: str,
    leaf_id: Optional[str] = None,
) -> MetricGraph:
    mult = graph.vertex(vertex_id).mult
    leaf_id = leaf_id or graph.fresh_vertex_id(f"{vertex_id}_leaf")
    if graph.has_vertex(leaf_id):
        raise InputError(f"duplicate vertex id occurred: '{leaf_id}'")
    edge_id = graph.fresh_edge_id(f"{vertex_id}_{leaf_id}")
    leaf = Vertex(leaf_id, mult)
    edge = Edge(edge_id, vertex_id, leaf_id, Fraction(1, mult * mult))
    return graph.replace(
        vertices=graph.vertices + (leaf,),
        edges=graph.edges + (edge,),
    )


def subdivide_edge(
    graph: MetricGraph,
    edge_id: str,
    t: TRational,
    mult: int,
    genus: int = 0,
    *,
    vertex_id: Optional[str] = None,
) -> MetricGraph:
    """Insert a vertex on `edge_id` at distance `t` from its first endpoint."""
    edge = graph.edge(edge_id)
    position = to_fraction(t)
    if not 0 < position < edge.length:
        raise InputError(
            f"subdivision point should lie in (0, {format_rational(edge.length)}), "
            f"but got {format_rational(position)}"
        )
    vertex_id = vertex_id or graph.fresh_vertex_id(f"{edge_id}_mid")
    if graph.has_vertex(vertex_id):
        raise InputError(f"duplicate vertex id occurred: '{vertex_id}'")
    first_id = graph.fresh_edge_id(f"{edge_id}_0")
    second_id = graph.fresh_edge_id(f"{edge_id}_1")
    first = Edge(first_id, edge.u, vertex_id, position)
    second = Edge(second_id, vertex_id, edge.v, edge.length - position)
    edges = [e for e in graph.edges if e.id != edge_id] + [first, second]
    return graph.replace(
        vertices=graph.vertices + (Vertex(vertex_id, mult, genus),),
        edges=edges,
    )


def distance(graph: MetricGraph, u: str, v: str) -> Fraction:
    graph.vertex(u)
    graph.vertex(v)
    if u == v:
        return Fraction(0)
    length = nx.dijkstra_path_length(graph.to_networkx(), u, v, weight="length")
    return to_fraction(length)


def snc_violations(graph: MetricGraph) -> List[Edge]:
    violations: List[Edge] = []
    for edge in graph.edges:
        m1 = graph.vertex(edge.u).mult
        m2 = graph.vertex(edge.v).mult
        if edge.length != Fraction(1, m1 * m2):
            violations.append(edge)
    return violations


def snc_edge_check(graph: MetricGraph) -> bool:
    return not snc_violations(graph)


__all__ = [
    "Vertex",
    "Edge",
    "MetricGraph",
    "Divisor",
    "local_chi",
    "canonical_divisor",
    "euler_char",
    "region_euler_char",
    "skeleton_criterion",
    "over_extension_chi",
    "farey_multiplicity",
    "stern_brocot_trace",
    "stern_brocot_multiplicity",
    "blowup_node",
    "blowup_smooth",
    "subdivide_edge",
    "distance",
    "snc_violations",
    "snc_edge_check",
]
