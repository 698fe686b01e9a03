import re

from enum import Enum
from typing import Dict
from typing import List
from typing import Tuple
from typing import Optional
from fractions import Fraction
from dataclasses import dataclass

from .schema import Locus
from .schema import star_graph
from ..errors import InputError
from ..toolkit import require_positive
from ..toolkit import require_non_negative
from ..ramification import integer_valuation
from ..ramification import log_different_bound_check
from ..different import temperate_value
from ..different import PLFunction
from ..metric_graph import Edge
from ..metric_graph import Vertex
from ..metric_graph import MetricGraph
from ..harmonic_cover import CoverMap


class KodairaKind(str, Enum):
    I0 = "I_0"
    I = "I_n"
    ISTAR = "I*_n"
    II = "II"
    III = "III"
    IV = "IV"
    IISTAR = "II*"
    IIISTAR = "III*"
    IVSTAR = "IV*"


kodaira_pattern = re.compile(r"^(I\*?)_(\d+)$")


@dataclass(frozen=True)
class KodairaType:
    """
    A Kodaira-Néron reduction type.

    Attributes
    ----------
    kind : KodairaKind
        The family of the type.
    n : int, optional
        The index of the I_n and I*_n families, `None` for the other kinds.

    Examples
    --------
    >>> str(KodairaType.parse("I*_5"))
    'I*_5'
    >>> KodairaType.i(0) == KodairaType(KodairaKind.I0)
    True

    """

    kind: KodairaKind
    n: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind == KodairaKind.I:
            require_positive(self.n, "index of I_n")  # type: ignore
        elif self.kind == KodairaKind.ISTAR:
            require_non_negative(self.n, "index of I*_n")  # type: ignore
        elif self.n is not None:
            raise InputError(f"type {self.kind.value} takes no index")

    def __str__(self) -> str:
        if self.kind == KodairaKind.I:
            return f"I_{self.n}"
        if self.kind == KodairaKind.ISTAR:
            return f"I*_{self.n}"
        return self.kind.value

    @classmethod
    def i(cls, n: int) -> "KodairaType":
        if n == 0:
            return cls(KodairaKind.I0)
        return cls(KodairaKind.I, n)

    @classmethod
    def i_star(cls, n: int) -> "KodairaType":
        return cls(KodairaKind.ISTAR, n)

    @classmethod
    def parse(cls, text: str) -> "KodairaType":
        text = text.strip()
        match = kodaira_pattern.match(text)
        if match is not None:
            n = int(match.group(2))
            if match.group(1) == "I":
                return cls.i(n)
            return cls.i_star(n)
        for kind in KodairaKind:
            if kind.value == text and kind not in (KodairaKind.I, KodairaKind.ISTAR):
                return cls(kind)
        raise InputError(f"unknown kodaira type occurred: '{text}'")


# center multiplicity and arms (multiplicities from the center outwards)
star_shapes: Dict[KodairaKind, Tuple[int, List[List[int]]]] = {
    KodairaKind.II: (6, [[1], [2], [3]]),
    KodairaKind.III: (4, [[1], [1], [2]]),
    KodairaKind.IV: (3, [[1], [1], [1]]),
    KodairaKind.IISTAR: (6, [[5, 4, 3, 2, 1], [4, 2], [3]]),
    KodairaKind.IIISTAR: (4, [[3, 2, 1], [3, 2, 1], [2]]),
    KodairaKind.IVSTAR: (3, [[2, 1], [2, 1], [2, 1]]),
}


def _cycle(n: int) -> MetricGraph:
    vertices = [Vertex(f"v{k}", 1) for k in range(n)]
    edges = [Edge(f"e{k}", f"v{k}", f"v{(k + 1) % n}", Fraction(1)) for k in range(n)]
    return MetricGraph(tuple(vertices), tuple(edges))


def _i_star(n: int) -> MetricGraph:
    quarter = Fraction(1, 4)
    half = Fraction(1, 2)
    vertices = [Vertex(f"c{k}", 2) for k in range(n + 1)]
    edges = [Edge(f"e{k}", f"c{k}", f"c{k + 1}", quarter) for k in range(n)]
    for side, anchor in (("l", "c0"), ("r", f"c{n}")):
        for k in range(2):
            vertices.append(Vertex(f"{side}{k}", 1))
            edges.append(Edge(f"f{side}{k}", anchor, f"{side}{k}", half))
    return MetricGraph(tuple(vertices), tuple(edges))


def kodaira_skeleton(kodaira_type: KodairaType) -> MetricGraph:
    """
    The minimal skeleton of a Kodaira-Néron type, with snc lengths 1/(m1 m2).

    * I_0: one vertex of genus 1.
    * I_n: a circle of n vertices with unit edges, a loop when n = 1.
    * I*_n: a chain c0..cn of multiplicity 2 with two leaves at each end.
    * the remaining types: a star around a center `c`, arm `i` made of the
      vertices `a{i}_{k}`.

    """
    kind = kodaira_type.kind
    if kind == KodairaKind.I0:
        return MetricGraph.create([("x", 1, 1)], [])
    if kind == KodairaKind.I:
        return _cycle(kodaira_type.n)  # type: ignore
    if kind == KodairaKind.ISTAR:
        return _i_star(kodaira_type.n)  # type: ignore
    center, arms = star_shapes[kind]
    return star_graph(center, arms)


def classify_pot_mult(nu: int, dlog: int) -> Tuple[KodairaType, KodairaType]:
    """Reduction types over k and over the quadratic extension k'."""
    require_positive(nu, "nu")
    require_non_negative(dlog, "log-different")
    return KodairaType.i_star(nu + 4 * dlog), KodairaType.i(2 * nu)


@dataclass
class PotMultFixture:
    """
    A simultaneous skeleton of a potentially multiplicative elliptic curve.

    Attributes
    ----------
    nu : int
        Minus the valuation of the j-invariant.
    dlog : int
        The log-different of the quadratic extension k'/k.
    cover : CoverMap
        The cover Γ' -> Γ of degree 2, with multiplicities over k.
    different : PLFunction
        The different function on Γ'.
    markings : Dict[str, Locus]
        The locus of every vertex of Γ'.
    base_type : KodairaType
        The reduction type over k.
    total_type : KodairaType
        The reduction type over k'.
    ramification_index : int
        The absolute ramification index of k over Q_2.
    bound : int
        v_k(2), read off `ramification_index`. Every value of the different
        stays at or below it when k'/k actually exists over such a k.
    x : str
        The junction of the loop and the left tail in Γ'.
    y : str
        The fork node ending the left tail in Γ'.

    """

    nu: int
    dlog: int
    cover: CoverMap
    different: PLFunction
    markings: Dict[str, Locus]
    base_type: KodairaType
    total_type: KodairaType
    ramification_index: int
    bound: int
    x: str
    y: str

    @property
    def log_different_bound(self) -> int:
        return integer_valuation(2, 2, 2 * self.ramification_index)

    @property
    def fits_bound(self) -> bool:
        return log_different_bound_check(self.dlog, self.log_different_bound)

    @property
    def base_x(self) -> str:
        return self.cover.vertex_map[self.x]

    @property
    def base_y(self) -> str:
        return self.cover.vertex_map[self.y]


def build_pot_mult_cover(
    nu: int,
    dlog: int,
    ramification_index: int = 1,
) -> PotMultFixture:
    """
    Build Γ' -> Γ for a potentially multiplicative curve with a wild quadratic twist.

    Γ is the I*_{ν+4 dlog} skeleton. Γ' is a loop of 2ν vertices mapping onto
    the middle of the chain of Γ with degree 1 (the split locus), and two
    tails of length dlog/4 contracted onto the outer parts of the chain with
    degree 2, each ending in a fork. Tail vertices sit every 1/8, where the
    Farey rule alternates multiplicities 4 and 2.

    `ramification_index` only feeds the bounds, the graphs do not depend on it.

    """
    require_positive(nu, "nu")
    require_positive(dlog, "log-different")
    require_positive(ramification_index, "ramification index")
    base_type, total_type = classify_pot_mult(nu, dlog)
    base = kodaira_skeleton(base_type)
    offset = 2 * dlog
    loop_size = 2 * nu
    quarter = Fraction(1, 4)
    eighth = Fraction(1, 8)

    vertices: List[Vertex] = []
    edges: List[Edge] = []
    vertex_map: Dict[str, str] = {}
    edge_map: Dict[str, str] = {}
    values: Dict[str, Fraction] = {}
    markings: Dict[str, Locus] = {}

    def add_vertex(
        vid: str,
        mult: int,
        image: str,
        value: Fraction,
        locus: Locus,
    ) -> None:
        vertices.append(Vertex(vid, mult))
        vertex_map[vid] = image
        values[vid] = value
        markings[vid] = locus

    def add_edge(eid: str, u: str, v: str, length: Fraction, image: str) -> None:
        edges.append(Edge(eid, u, v, length))
        edge_map[eid] = image

    # the loop, an isometric copy of two passes over the middle of the chain
    for k in range(loop_size):
        position = k if k <= nu else loop_size - k
        add_vertex(f"u{k}", 2, f"c{offset + position}", Fraction(0), Locus.SPLIT)
    for k in range(loop_size):
        image = offset + k if k < nu else offset + loop_size - k - 1
        add_edge(f"a{k}", f"u{k}", f"u{(k + 1) % loop_size}", quarter, f"e{image}")
    # the two tails, contracted by a factor 2
    temperate = temperate_value(2, dlog)
    for side, root, sign in (("l", "u0", -1), ("r", f"u{nu}", 1)):
        start = offset if sign < 0 else offset + nu
        previous = root
        for i in range(1, offset + 1):
            vid = f"{side}t{i}"
            last = i == offset
            add_vertex(
                vid,
                4 if i % 2 == 1 else 2,
                f"c{start + sign * i}",
                2 * eighth * i,
                Locus.TEMPERATE if last else Locus.RAMIFIED,
            )
            image = start - i if sign < 0 else start + i - 1
            add_edge(f"{side}te{i}", previous, vid, eighth, f"e{image}")
            previous = vid
        for k in range(2):
            leaf = f"{side}z{k}"
            add_vertex(leaf, 2, f"{side}{k}", temperate, Locus.TEMPERATE)
            add_edge(f"{side}f{k}", previous, leaf, quarter, f"f{side}{k}")

    total = MetricGraph(tuple(vertices), tuple(edges))
    cover = CoverMap(base, total, 2, vertex_map, edge_map)
    return PotMultFixture(
        nu=nu,
        dlog=dlog,
        cover=cover,
        different=PLFunction(total, values),
        markings=markings,
        base_type=base_type,
        total_type=total_type,
        ramification_index=ramification_index,
        bound=integer_valuation(2, 2, ramification_index),
        x="u0",
        y=f"lt{offset}",
    )


__all__ = [
    "KodairaKind",
    "KodairaType",
    "PotMultFixture",
    "kodaira_skeleton",
    "classify_pot_mult",
    "build_pot_mult_cover",
]
