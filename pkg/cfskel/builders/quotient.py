from math import gcd
from typing import Dict
from typing import List
from typing import Tuple
from typing import Sequence
from fractions import Fraction
from dataclasses import dataclass

from .schema import arm
from .schema import Locus
from ..errors import InputError
from ..errors import InconsistentDataError
from ..toolkit import require_prime
from ..toolkit import require_positive
from ..toolkit import require_non_negative
from ..ramification import integer_valuation
from ..different import residual_slope
from ..different import temperate_value
from ..different import PLFunction
from ..metric_graph import euler_char
from ..metric_graph import region_euler_char
from ..metric_graph import Edge
from ..metric_graph import Vertex
from ..metric_graph import MetricGraph
from ..harmonic_cover import CoverMap


def chi_from_jump(p: int, j: int) -> int:
    require_prime(p)
    require_positive(j, "jump")
    return 1 - (p - 1) * j


def jump_from_chi(p: int, chi: int) -> int:
    require_prime(p)
    j, remainder = divmod(1 - chi, p - 1)
    if remainder != 0 or j < 1:
        raise InputError(f"euler characteristic {chi} is not 1 - (p - 1)j for p={p}")
    return j


def rh_genus(p: int, g_base: int, jumps: Sequence[int]) -> int:
    """Genus g' of a p-cyclic cover with one branch point per jump."""
    require_prime(p)
    require_non_negative(g_base, "genus")
    for j in jumps:
        require_positive(j, "jump")
    twice = p * (2 * g_base - 2) + (p - 1) * sum(1 + j for j in jumps) + 2
    if twice < 0 or twice % 2 != 0:
        raise InconsistentDataError(
            f"riemann-hurwitz gives 2g' = {twice} for p={p}, g={g_base}, "
            f"jumps={list(jumps)}"
        )
    return twice // 2


def crew_p_rank(p: int, gamma_base: int, d: int) -> int:
    """p-rank γ' of a p-cyclic cover branched at `d` points."""
    require_prime(p)
    require_non_negative(gamma_base, "p-rank")
    require_non_negative(d, "number of branch points")
    twice = p * (2 * gamma_base - 2) + 2 * d * (p - 1) + 2
    if twice < 0:
        raise InconsistentDataError(
            f"deuring-shafarevich gives 2γ' = {twice} for p={p}, γ={gamma_base}, d={d}"
        )
    return twice // 2


def ordinary_check(p: int, g_base: int, gamma_base: int, jumps: Sequence[int]) -> bool:
    if gamma_base > g_base:
        raise InputError(f"p-rank {gamma_base} exceeds genus {g_base}")
    ordinary = gamma_base == g_base and all(j == 1 for j in jumps)
    g_total = rh_genus(p, g_base, jumps)
    gamma_total = crew_p_rank(p, gamma_base, len(jumps))
    if (g_total == gamma_total) != ordinary:
        raise InconsistentDataError(
            f"ordinariness is not preserved: g={g_base}, γ={gamma_base} downstairs "
            f"but g'={g_total}, γ'={gamma_total} upstairs"
        )
    return ordinary


@dataclass(frozen=True)
class HirzebruchJung:
    """Coefficients c_i of p/r = c_1 - 1/(c_2 - ...) and the multiplicities m_1, m_2, ... down to 1."""

    coefficients: Tuple[int, ...]
    multiplicities: Tuple[int, ...]


def hirzebruch_jung(p: int, r: int) -> HirzebruchJung:
    require_positive(r, "r")
    if r >= p or gcd(p, r) != 1:
        raise InputError(f"r should be prime to p and lie in (0, {p}), but got {r}")
    coefficients = []
    multiplicities = [r]
    previous, current = p, r
    while current != 1:
        c = -(-previous // current)
        coefficients.append(c)
        previous, current = current, c * current - previous
        multiplicities.append(current)
    coefficients.append(previous)
    return HirzebruchJung(tuple(coefficients), tuple(multiplicities))


def build_weakly_wild_graph(p: int, r: int, chain_edges: int) -> MetricGraph:
    """
    The resolution graph of a weakly wild quotient singularity.

    A chain x = c0, c1, ..., c{chain_edges} = y of multiplicity p with steps
    1/p², then two Hirzebruch-Jung arms at y descending from r and p - r to 1.

    """
    require_prime(p)
    require_positive(chain_edges, "chain edges")
    left = hirzebruch_jung(p, r).multiplicities
    right = hirzebruch_jung(p, p - r).multiplicities
    step = Fraction(1, p * p)
    vertices = [Vertex("x", p)]
    edges = []
    for i in range(1, chain_edges + 1):
        vid = "y" if i == chain_edges else f"c{i}"
        previous = "x" if i == 1 else f"c{i - 1}"
        vertices.append(Vertex(vid, p))
        edges.append(Edge(f"e{i}", previous, vid, step))
    for prefix, mults in (("a", left), ("b", right)):
        arm_vertices, arm_edges = arm("y", p, mults, prefix)
        vertices.extend(arm_vertices)
        edges.extend(arm_edges)
    return MetricGraph(tuple(vertices), tuple(edges))


@dataclass(frozen=True)
class QuotientCounts:
    """
    Metric and numerical invariants of a quotient fixture, per region.

    `chain_edges` is the normative count jp of intervals on [x, y]; the three
    vertex counts include both ends, exclude x, and exclude both ends.

    """

    chain_edges: int
    vertices_inclusive: int
    vertices_excluding_x: int
    vertices_interior: int
    base_distance: Fraction
    total_distance: Fraction
    slope: int
    genus: int
    p_rank: int
    base_chi: int
    total_chi: int
    region_chi: int


@dataclass
class QuotientFixture:
    p: int
    j: int
    d: int
    g_base: int
    cover: CoverMap
    different: PLFunction
    markings: Dict[str, Locus]
    counts: QuotientCounts
    ramification_index: int
    bound: int
    x: str
    nodes: List[str]
    regions: Dict[str, List[str]]

    @property
    def total_x(self) -> str:
        return f"{self.x}'"

    @property
    def max_jump(self) -> Fraction:
        return Fraction(self.p * self.bound, self.p - 1)

    @property
    def fits_bound(self) -> bool:
        return self.j <= self.max_jump


def _region(q: int, chain: int) -> List[str]:
    prefix = f"q{q}"
    vertex_ids = [f"{prefix}c{i}" for i in range(1, chain)] + [f"{prefix}y"]
    return vertex_ids + [f"{prefix}w", f"{prefix}z"]


def build_quotient_cover(
    p: int,
    j: int,
    d: int,
    g_base: int,
    ramification_index: int = 1,
) -> QuotientFixture:
    """
    Build the simultaneous skeleton of a p-cyclic cover around `d` weakly wild points.

    The base has a center x (multiplicity p, genus `g_base`) and `d` regions,
    each a chain of jp steps 1/p² to a node y followed by two leaves of
    multiplicity 1. Upstairs everything is contracted by p and maps with
    degree p; the different grows with slope p(p - 1) from 0 at x' to the
    temperate value (p - 1)j/p at every y'.

    `bound` is v_k(p) for a k of absolute ramification `ramification_index`
    over Q_p. Jumps of a p-cyclic extension of such a k never exceed
    p v_k(p) / (p - 1), which `fits_bound` checks.

    """
    require_prime(p)
    require_positive(j, "jump")
    require_positive(d, "number of regions")
    require_non_negative(g_base, "genus")
    require_positive(ramification_index, "ramification index")
    g_total = rh_genus(p, g_base, [1] * d)
    chain = j * p
    slope = residual_slope(p, p - 1)
    temperate = temperate_value(p, (p - 1) * j)
    base_step = Fraction(1, p * p)
    total_step = Fraction(1, p**3)

    base_vertices = [Vertex("x", p, g_base)]
    base_edges: List[Edge] = []
    total_vertices = [Vertex("x'", p, g_total)]
    total_edges: List[Edge] = []
    values = {"x'": Fraction(0)}
    markings = {"x'": Locus.UNRAMIFIED}
    nodes = []
    regions = {}
    for q in range(1, d + 1):
        prefix = f"q{q}"
        previous = "x"
        for i in range(1, chain + 1):
            vid = f"{prefix}y" if i == chain else f"{prefix}c{i}"
            base_vertices.append(Vertex(vid, p))
            base_edges.append(Edge(f"{prefix}e{i}", previous, vid, base_step))
            mult = p if i == chain else p * p // gcd(i, p)
            total_vertices.append(Vertex(f"{vid}'", mult))
            total_edges.append(
                Edge(f"{prefix}e{i}'", f"{previous}'", f"{vid}'", total_step)
            )
            values[f"{vid}'"] = slope * total_step * i
            markings[f"{vid}'"] = Locus.TEMPERATE if i == chain else Locus.RAMIFIED
            previous = vid
        for leaf in ("w", "z"):
            vid = f"{prefix}{leaf}"
            base_vertices.append(Vertex(vid, 1))
            base_edges.append(Edge(f"{prefix}f{leaf}", previous, vid, Fraction(1, p)))
            total_vertices.append(Vertex(f"{vid}'", p))
            total_edges.append(
                Edge(f"{prefix}f{leaf}'", f"{previous}'", f"{vid}'", base_step)
            )
            values[f"{vid}'"] = temperate
            markings[f"{vid}'"] = Locus.TEMPERATE
        nodes.append(f"{prefix}y")
        regions[prefix] = _region(q, chain)

    base = MetricGraph(tuple(base_vertices), tuple(base_edges))
    total = MetricGraph(tuple(total_vertices), tuple(total_edges))
    cover = CoverMap(
        base=base,
        total=total,
        degree=p,
        vertex_map={f"{v}'": v for v in base.vertex_ids},
        edge_map={f"{e}'": e for e in base.edge_ids},
    )
    counts = QuotientCounts(
        chain_edges=chain,
        vertices_inclusive=chain + 1,
        vertices_excluding_x=chain,
        vertices_interior=chain - 1,
        base_distance=base_step * chain,
        total_distance=total_step * chain,
        slope=slope,
        genus=g_total,
        p_rank=crew_p_rank(p, g_base, d),
        base_chi=euler_char(base),
        total_chi=euler_char(total),
        region_chi=region_euler_char(base, regions["q1"]),
    )
    return QuotientFixture(
        p=p,
        j=j,
        d=d,
        g_base=g_base,
        cover=cover,
        different=PLFunction(total, values),
        markings=markings,
        counts=counts,
        ramification_index=ramification_index,
        bound=integer_valuation(p, p, ramification_index),
        x="x",
        nodes=nodes,
        regions=regions,
    )


@dataclass(frozen=True)
class RegionInvariants:
    delta: int
    p_minus_chi: int


def region_invariants(p: int, j: int) -> RegionInvariants:
    """The different (p - 1)(j + 1) and p - χ of a region with jump j."""
    return RegionInvariants(
        delta=(p - 1) * (j + 1),
        p_minus_chi=p - chi_from_jump(p, j),
    )


__all__ = [
    "HirzebruchJung",
    "QuotientCounts",
    "QuotientFixture",
    "RegionInvariants",
    "chi_from_jump",
    "jump_from_chi",
    "rh_genus",
    "crew_p_rank",
    "ordinary_check",
    "hirzebruch_jung",
    "build_weakly_wild_graph",
    "build_quotient_cover",
    "region_invariants",
]
