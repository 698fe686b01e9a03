import pytest

from pathlib import Path
from fractions import Fraction
from cfskel.different import PLFunction
from cfskel.constants import FIXTURES_DIR
from cfskel.metric_graph import MetricGraph
from cfskel.harmonic_cover import CoverMap


GOLDEN_DIR = Path(__file__).absolute().parent / "golden"
EXAMPLE_DIR = FIXTURES_DIR / "genus_one"


def example_base_graph() -> MetricGraph:
    return MetricGraph.create(
        [("x0", 2), ("mid", 2), ("y", 6), ("z1", 1), ("z2", 3)],
        [
            ("e1", "x0", "mid", "1/4"),
            ("e2", "mid", "y", "1/12"),
            ("e3", "y", "z1", "1/6"),
            ("e4", "y", "z2", "1/18"),
        ],
    )


def example_total_graph() -> MetricGraph:
    return MetricGraph.create(
        [("x0'", 2, 1), ("mid'", 4), ("y'", 6), ("z1'", 2), ("z2'", 6)],
        [
            ("e1'", "x0'", "mid'", "1/8"),
            ("e2'", "mid'", "y'", "1/24"),
            ("e3'", "y'", "z1'", "1/12"),
            ("e4'", "y'", "z2'", "1/36"),
        ],
    )


def example_cover_map() -> CoverMap:
    total = example_total_graph()
    return CoverMap(
        example_base_graph(),
        total,
        2,
        {v: v[:-1] for v in total.vertex_ids},
        {e: e[:-1] for e in total.edge_ids},
    )


def example_different_function() -> PLFunction:
    values = {"x0'": 0, "mid'": Fraction(3, 4), "y'": 1, "z1'": 1, "z2'": 1}
    return PLFunction(example_total_graph(), values)


@pytest.fixture
def base_graph() -> MetricGraph:
    return example_base_graph()


@pytest.fixture
def total_graph() -> MetricGraph:
    return example_total_graph()


@pytest.fixture
def cover() -> CoverMap:
    return example_cover_map()


@pytest.fixture
def different() -> PLFunction:
    return example_different_function()


@pytest.fixture
def interval() -> MetricGraph:
    return MetricGraph.create([("a", 1), ("b", 2)], [("e", "a", "b", "1/2")])
