from typing import Dict
from typing import List
from typing import Tuple
from typing import Optional
from fractions import Fraction
from dataclasses import dataclass

from .errors import SkeletaError
from .errors import MalformedCoverError
from .toolkit import format_rational
from .toolkit import require_positive
from .metric_graph import Divisor
from .metric_graph import MetricGraph


@dataclass(frozen=True)
class CoverMap:
    """
    A harmonic cover Γ' -> Γ of metric graphs, modelling a base change of degree n.

    Attributes
    ----------
    base : MetricGraph
        The skeleton Γ downstairs.
    total : MetricGraph
        The skeleton Γ' upstairs.
    degree : int
        The global degree n.
    vertex_map : Dict[str, str]
        Total vertex id -> base vertex id, defined on every total vertex.
    edge_map : Dict[str, str]
        Total edge id -> base edge id, defined on every total edge.

    Notes
    -----
    Construction validates incidence compatibility, surjectivity on vertices
    and edges, and integrality of every edge degree; violations raise
    `MalformedCoverError`.

    """

    base: MetricGraph
    total: MetricGraph
    degree: int
    vertex_map: Dict[str, str]
    edge_map: Dict[str, str]

    def __post_init__(self) -> None:
        try:
            require_positive(self.degree, "cover degree")
        except SkeletaError as err:
            raise MalformedCoverError(str(err))
        object.__setattr__(self, "vertex_map", dict(sorted(self.vertex_map.items())))
        object.__setattr__(self, "edge_map", dict(sorted(self.edge_map.items())))
        self._check_domains()
        self._check_incidence()
        self._check_surjectivity()
        for edge_id in self.total.edge_ids:
            edge_degree(self, edge_id)

    def _check_domains(self) -> None:
        for kind, mapping, source, target in (
            ("vertex", self.vertex_map, self.total.vertex_ids, self.base.vertex_ids),
            ("edge", self.edge_map, self.total.edge_ids, self.base.edge_ids),
        ):
            missing = sorted(set(source) - set(mapping))
            if missing:
                raise MalformedCoverError(f"{kind} map is undefined on '{missing[0]}'")
            extra = sorted(set(mapping) - set(source))
            if extra:
                raise MalformedCoverError(f"{kind} map has unknown key '{extra[0]}'")
            targets = set(target)
            for k, v in mapping.items():
                if v not in targets:
                    raise MalformedCoverError(
                        f"{kind} '{k}' is mapped to unknown base {kind} '{v}'"
                    )

    def _check_incidence(self) -> None:
        for edge in self.total.edges:
            image = self.base.edge(self.edge_map[edge.id])
            mapped = sorted(self.vertex_map[end] for end in edge.ends)
            if mapped != sorted(image.ends):
                raise MalformedCoverError(
                    f"edge '{edge.id}' with endpoint images {mapped} cannot map to "
                    f"'{image.id}' with endpoints {sorted(image.ends)}"
                )

    def _check_surjectivity(self) -> None:
        hit_vertices = set(self.vertex_map.values())
        for vertex_id in self.base.vertex_ids:
            if vertex_id not in hit_vertices:
                raise MalformedCoverError(f"base vertex '{vertex_id}' has no preimage")
        hit_edges = set(self.edge_map.values())
        for edge_id in self.base.edge_ids:
            if edge_id not in hit_edges:
                raise MalformedCoverError(f"base edge '{edge_id}' has no preimage")


def preimages(cover: CoverMap, base_vertex: str) -> List[str]:
    cover.base.vertex(base_vertex)
    return [k for k, v in cover.vertex_map.items() if v == base_vertex]


def edge_preimages(cover: CoverMap, base_edge: str) -> List[str]:
    cover.base.edge(base_edge)
    return [k for k, v in cover.edge_map.items() if v == base_edge]


def edge_degree(cover: CoverMap, edge_id: str) -> int:
    edge = cover.total.edge(edge_id)
    image = cover.base.edge(cover.edge_map[edge_id])
    ratio = image.length / edge.length
    if ratio.denominator != 1:
        raise MalformedCoverError(
            f"edge '{edge_id}' has non-integral degree {format_rational(ratio)} "
            f"over '{image.id}'"
        )
    return ratio.numerator


@dataclass(frozen=True)
class BalancingEntry:
    base_edge: str
    preimages: Tuple[Tuple[str, int], ...]
    degree: int

    @property
    def total(self) -> int:
        return sum(d for _, d in self.preimages)

    @property
    def passed(self) -> bool:
        return self.total == self.degree


@dataclass(frozen=True)
class BalancingReport:
    entries: Tuple[BalancingEntry, ...]

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    @property
    def failures(self) -> List[str]:
        return [entry.base_edge for entry in self.entries if not entry.passed]

    def lines(self) -> List[str]:
        lines = []
        for entry in self.entries:
            parts = " + ".join(f"{e}:{d}" for e, d in entry.preimages)
            status = "ok" if entry.passed else "FAILED"
            lines.append(
                f"balancing {entry.base_edge}: {parts} = {entry.total} "
                f"(degree {entry.degree}) {status}"
            )
        return lines


def check_balancing(cover: CoverMap) -> BalancingReport:
    entries = []
    for base_edge in cover.base.edge_ids:
        degrees = tuple(
            (e, edge_degree(cover, e)) for e in edge_preimages(cover, base_edge)
        )
        entries.append(BalancingEntry(base_edge, degrees, cover.degree))
    return BalancingReport(tuple(entries))


def vertex_degree(cover: CoverMap, vertex_id: str) -> int:
    """
    The local degree at a total vertex.

    For every base edge I at the image x, the degrees of the preimages of I
    that reach `vertex_id` are summed once per incident end, then divided by
    the number of ends of I at x. All base edges must give the same integer.
    A vertex of an edgeless graph gets n divided by its number of siblings.

    """
    image = cover.vertex_map[cover.total.vertex(vertex_id).id]
    base_edges = cover.base.incident_edges(image)
    if not base_edges:
        local = Fraction(cover.degree, len(preimages(cover, image)))
        if local.denominator != 1:
            raise MalformedCoverError(
                f"vertex '{vertex_id}' has non-integral degree {format_rational(local)}"
            )
        return local.numerator
    sums: Dict[str, Fraction] = {}
    for base_edge in base_edges:
        total = 0
        for edge in cover.total.incident_edges(vertex_id):
            if cover.edge_map[edge.id] == base_edge.id:
                total += edge_degree(cover, edge.id) * edge.ends_at(vertex_id)
        sums[base_edge.id] = Fraction(total, base_edge.ends_at(image))
    values = sorted(set(sums.values()))
    if len(values) != 1:
        detail = ", ".join(f"{k}:{format_rational(v)}" for k, v in sums.items())
        raise MalformedCoverError(
            f"degree at '{vertex_id}' depends on the base direction ({detail})"
        )
    local = values[0]
    if local.denominator != 1 or local < 1:
        raise MalformedCoverError(
            f"vertex '{vertex_id}' has invalid degree {format_rational(local)}"
        )
    return local.numerator


def vertex_degrees(cover: CoverMap) -> Dict[str, int]:
    return {v: vertex_degree(cover, v) for v in cover.total.vertex_ids}


@dataclass(frozen=True)
class VertexDegreeEntry:
    base_vertex: str
    preimages: Tuple[Tuple[str, int], ...]
    degree: int
    error: Optional[str] = None

    @property
    def total(self) -> int:
        return sum(d for _, d in self.preimages)

    @property
    def passed(self) -> bool:
        return self.error is None and self.total == self.degree


@dataclass(frozen=True)
class VertexDegreeReport:
    entries: Tuple[VertexDegreeEntry, ...]

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    @property
    def failures(self) -> List[str]:
        return [entry.base_vertex for entry in self.entries if not entry.passed]

    def lines(self) -> List[str]:
        lines = []
        for entry in self.entries:
            if entry.error is not None:
                lines.append(f"vertex {entry.base_vertex}: FAILED {entry.error}")
                continue
            parts = " + ".join(f"{v}:{d}" for v, d in entry.preimages)
            status = "ok" if entry.passed else "FAILED"
            lines.append(
                f"vertex {entry.base_vertex}: {parts} = {entry.total} "
                f"(degree {entry.degree}) {status}"
            )
        return lines


def check_vertex_degrees(cover: CoverMap) -> VertexDegreeReport:
    """Local degrees over every base vertex must be well defined and sum to n."""
    entries = []
    for base_vertex in cover.base.vertex_ids:
        try:
            degrees = tuple(
                (v, vertex_degree(cover, v)) for v in preimages(cover, base_vertex)
            )
        except MalformedCoverError as err:
            entries.append(VertexDegreeEntry(base_vertex, (), cover.degree, str(err)))
            continue
        entries.append(VertexDegreeEntry(base_vertex, degrees, cover.degree))
    return VertexDegreeReport(tuple(entries))


def pullback(cover: CoverMap, divisor: Divisor) -> Divisor:
    divisor.check_support(cover.base)
    coefficients = {}
    for vertex_id, image in cover.vertex_map.items():
        value = divisor[image]
        if value != 0:
            coefficients[vertex_id] = value * vertex_degree(cover, vertex_id)
    return Divisor(coefficients)


def identity_cover(graph: MetricGraph) -> CoverMap:
    return CoverMap(
        base=graph,
        total=graph,
        degree=1,
        vertex_map={v: v for v in graph.vertex_ids},
        edge_map={e: e for e in graph.edge_ids},
    )


@dataclass(frozen=True)
class GaloisReport:
    """Offending items of a degree-p cover that is not split-or-ramified everywhere."""

    p: int
    problems: Tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.problems

    def lines(self) -> List[str]:
        if self.passed:
            return [f"galois degree {self.p}: ok"]
        return [
            f"galois degree {self.p}: FAILED {problem}" for problem in self.problems
        ]


def galois_report(cover: CoverMap, p: int) -> GaloisReport:
    """
    Check the split / ramified dichotomy of a Galois cover of prime degree p.

    Every base vertex and edge has either p preimages of degree 1 (split) or
    a single preimage of degree p (ramified), and the split locus is open:
    every edge at a split vertex is itself split.

    """
    problems: List[str] = []
    if cover.degree != p:
        problems.append(f"cover degree is {cover.degree}, not {p}")
    degrees = vertex_degrees(cover)
    for base_vertex in cover.base.vertex_ids:
        above = preimages(cover, base_vertex)
        local = {degrees[v] for v in above}
        if (len(above), local) not in ((p, {1}), (1, {p})):
            problems.append(
                f"vertex '{base_vertex}' has {len(above)} preimage(s) "
                f"of degree {sorted(local)}"
            )
    for base_edge in cover.base.edge_ids:
        above = edge_preimages(cover, base_edge)
        local = {edge_degree(cover, e) for e in above}
        if (len(above), local) not in ((p, {1}), (1, {p})):
            problems.append(
                f"edge '{base_edge}' has {len(above)} preimage(s) "
                f"of degree {sorted(local)}"
            )
    for vertex_id, local_degree in degrees.items():
        if local_degree != 1:
            continue
        for edge in cover.total.incident_edges(vertex_id):
            if edge_degree(cover, edge.id) != 1:
                problems.append(
                    f"split vertex '{vertex_id}' meets ramified edge '{edge.id}'"
                )
    return GaloisReport(p, tuple(problems))


__all__ = [
    "CoverMap",
    "BalancingEntry",
    "BalancingReport",
    "VertexDegreeEntry",
    "VertexDegreeReport",
    "GaloisReport",
    "preimages",
    "edge_preimages",
    "edge_degree",
    "check_balancing",
    "vertex_degree",
    "vertex_degrees",
    "check_vertex_degrees",
    "pullback",
    "identity_cover",
    "galois_report",
]
