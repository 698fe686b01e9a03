from typing import Dict
from typing import List
from typing import Tuple
from typing import Mapping
from typing import Iterable
from fractions import Fraction
from dataclasses import dataclass
from sympy import QQ
from sympy import Matrix
from sympy import Rational
from sympy.polys.matrices import DomainMatrix

from .errors import InputError
from .errors import InconsistentDataError
from .errors import InconsistentAnchorsError
from .toolkit import to_fraction
from .toolkit import format_rational
from .toolkit import require_positive
from .toolkit import require_non_negative
from .toolkit import TRational
from .metric_graph import Divisor
from .metric_graph import MetricGraph
from .metric_graph import canonical_divisor
from .harmonic_cover import pullback
from .harmonic_cover import CoverMap


@dataclass(frozen=True, eq=False)
class PLFunction:
    """
    A continuous function on a metric graph, affine on every edge.

    Attributes
    ----------
    graph : MetricGraph
        The graph the function lives on.
    values : Dict[str, Fraction]
        Exact value at every vertex of `graph`.

    Methods
    -------
    value(vertex_id) -> Fraction
        The value at a vertex.
    edge_slope(edge_id) -> Fraction
        The slope from the first endpoint of the edge to the second one.

    """

    graph: MetricGraph
    values: Dict[str, Fraction]

    def __post_init__(self) -> None:
        values = {k: to_fraction(v) for k, v in self.values.items()}
        missing = [v for v in self.graph.vertex_ids if v not in values]
        if missing:
            raise InputError(f"function has no value at '{missing[0]}'")
        extra = sorted(k for k in values if not self.graph.has_vertex(k))
        if extra:
            raise InputError(f"function has a value at unknown vertex '{extra[0]}'")
        ordered = {v: values[v] for v in self.graph.vertex_ids}
        object.__setattr__(self, "values", ordered)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PLFunction):
            return NotImplemented
        return self.graph == other.graph and self.values == other.values

    def __add__(self, other: "PLFunction") -> "PLFunction":
        if self.graph != other.graph:
            raise InputError("cannot add functions living on different graphs")
        return PLFunction(
            self.graph,
            {k: v + other.values[k] for k, v in self.values.items()},
        )

    def __mul__(self, scalar: TRational) -> "PLFunction":
        factor = to_fraction(scalar)
        return PLFunction(self.graph, {k: factor * v for k, v in self.values.items()})

    __rmul__ = __mul__

    def value(self, vertex_id: str) -> Fraction:
        self.graph.vertex(vertex_id)
        return self.values[vertex_id]

    def edge_slope(self, edge_id: str) -> Fraction:
        edge = self.graph.edge(edge_id)
        return (self.values[edge.v] - self.values[edge.u]) / edge.length

    @classmethod
    def constant(cls, graph: MetricGraph, value: TRational = 0) -> "PLFunction":
        return cls(graph, {v: to_fraction(value) for v in graph.vertex_ids})


def outgoing_slope(function: PLFunction, vertex_id: str, edge_id: str) -> Fraction:
    edge = function.graph.edge(edge_id)
    if edge.ends_at(vertex_id) == 0:
        raise InputError(f"edge '{edge_id}' is not incident to '{vertex_id}'")
    other = edge.other(vertex_id)
    return (function.values[other] - function.values[vertex_id]) / edge.length


def branch_slopes(function: PLFunction, vertex_id: str) -> List[Tuple[str, Fraction]]:
    """Outgoing slopes of every branch at the vertex, a loop giving two branches."""
    slopes = []
    for edge in function.graph.incident_edges(vertex_id):
        slope = outgoing_slope(function, vertex_id, edge.id)
        slopes.extend([(edge.id, slope)] * edge.ends_at(vertex_id))
    return slopes


def laplacian(function: PLFunction) -> Divisor:
    coefficients = {}
    for vertex_id in function.graph.vertex_ids:
        slopes = branch_slopes(function, vertex_id)
        coefficients[vertex_id] = -sum((s for _, s in slopes), Fraction(0))
    return Divisor(coefficients)


def region_slope_sum(function: PLFunction, region: Iterable[str]) -> Fraction:
    divisor = laplacian(function)
    return sum((divisor[v] for v in sorted(set(region))), Fraction(0))


def rh_target(cover: CoverMap) -> Divisor:
    """K_{Γ'} - φ*K_Γ, the divisor the Laplacian of the different must equal."""
    return canonical_divisor(cover.total) - pullback(
        cover, canonical_divisor(cover.base)
    )


def _check_on_total(cover: CoverMap, function: PLFunction) -> None:
    if function.graph != cover.total:
        raise InputError("function does not live on the total graph of the cover")


def rh_residual(cover: CoverMap, function: PLFunction) -> Divisor:
    _check_on_total(cover, function)
    return laplacian(function) - rh_target(cover)


def extract_anchors(
    function: PLFunction,
    vertex_ids: Iterable[str],
) -> Dict[str, Fraction]:
    return {v: function.value(v) for v in sorted(set(vertex_ids))}


def _to_sympy(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)


def _to_fraction(value: Rational) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def solve_different(
    cover: CoverMap,
    anchors: Mapping[str, TRational],
    *,
    strict: bool = False,
) -> PLFunction:
    """
    Recover the different from Dirichlet data.

    Every non-anchored vertex gets the equation Δ(δ)(v) = (K' - φ*K)(v), and
    the resulting square system is solved exactly over QQ. With `strict`, the
    same equation is then required at the anchors too, and the first anchor
    (in id order) where it fails raises `InconsistentAnchorsError`.

    """
    if not anchors:
        raise InputError("at least one anchor should be provided")
    graph = cover.total
    fixed = {k: to_fraction(v) for k, v in anchors.items()}
    for vertex_id in fixed:
        graph.vertex(vertex_id)
    target = rh_target(cover)
    unknowns = [v for v in graph.vertex_ids if v not in fixed]
    index = {v: i for i, v in enumerate(unknowns)}
    n = len(unknowns)
    rows = [[Fraction(0)] * (n + 1) for _ in range(n)]
    for vertex_id, i in index.items():
        row = rows[i]
        row[n] = target[vertex_id]
        for edge in graph.incident_edges(vertex_id):
            if edge.is_loop:
                continue
            weight = 1 / edge.length
            other = edge.other(vertex_id)
            row[i] += weight
            if other in index:
                row[index[other]] -= weight
            else:
                row[n] += weight * fixed[other]
    values = dict(fixed)
    if n > 0:
        augmented = Matrix([[_to_sympy(x) for x in row] for row in rows])
        reduced, pivots = DomainMatrix.from_Matrix(augmented).convert_to(QQ).rref()
        if len(pivots) != n or n in pivots:
            raise InconsistentDataError(
                "dirichlet system is singular, every connected piece of the graph "
                "needs an anchor"
            )
        solution = reduced.to_Matrix()
        for r, c in enumerate(pivots):
            values[unknowns[c]] = _to_fraction(solution[r, n] / solution[r, c])
    function = PLFunction(graph, values)
    if strict:
        residual = rh_residual(cover, function)
        for vertex_id in sorted(fixed):
            if residual[vertex_id] != 0:
                raise InconsistentAnchorsError(vertex_id, residual[vertex_id])
    return function


def temperate_value(n: int, dlog_base: int) -> Fraction:
    require_positive(n, "extension degree")
    require_non_negative(dlog_base, "log-different")
    return Fraction(dlog_base, n)


def residual_slope(m_vertex: int, dlog_residual: int) -> int:
    require_positive(m_vertex, "multiplicity")
    require_non_negative(dlog_residual, "residual log-different")
    return m_vertex * dlog_residual


@dataclass(frozen=True)
class DifferentReport:
    """Violations of non-negativity, integral slopes and the v_k(n) bound."""

    degree: int
    bound: Fraction
    negative: Tuple[Tuple[str, Fraction], ...]
    non_integral: Tuple[Tuple[str, Fraction], ...]
    above_bound: Tuple[Tuple[str, Fraction], ...]

    @property
    def passed(self) -> bool:
        return not (self.negative or self.non_integral or self.above_bound)

    def lines(self) -> List[str]:
        fmt = format_rational
        lines = [f"different: degree {self.degree}, bound {fmt(self.bound)}"]
        lines += [f"negative value at {k}: {fmt(v)}" for k, v in self.negative]
        lines += [f"non-integral slope on {k}: {fmt(v)}" for k, v in self.non_integral]
        lines += [f"value above bound at {k}: {fmt(v)}" for k, v in self.above_bound]
        lines.append("different: ok" if self.passed else "different: FAILED")
        return lines


def validate_different(
    function: PLFunction,
    n: int,
    v_k_of_n: TRational,
) -> DifferentReport:
    require_positive(n, "extension degree")
    bound = to_fraction(v_k_of_n)
    values = function.values
    slopes = {e: function.edge_slope(e) for e in function.graph.edge_ids}
    return DifferentReport(
        degree=n,
        bound=bound,
        negative=tuple((k, v) for k, v in values.items() if v < 0),
        non_integral=tuple((k, s) for k, s in slopes.items() if s.denominator != 1),
        above_bound=tuple((k, v) for k, v in values.items() if v > bound),
    )


__all__ = [
    "PLFunction",
    "DifferentReport",
    "outgoing_slope",
    "branch_slopes",
    "laplacian",
    "region_slope_sum",
    "rh_target",
    "rh_residual",
    "extract_anchors",
    "solve_different",
    "temperate_value",
    "residual_slope",
    "validate_different",
]
