import pytest

from fractions import Fraction
from cfskel.errors import MalformedCoverError
from cfskel.metric_graph import Divisor
from cfskel.metric_graph import MetricGraph
from cfskel.metric_graph import canonical_divisor
from cfskel.harmonic_cover import CoverMap
from cfskel.harmonic_cover import pullback
from cfskel.harmonic_cover import preimages
from cfskel.harmonic_cover import edge_degree
from cfskel.harmonic_cover import galois_report
from cfskel.harmonic_cover import vertex_degree
from cfskel.harmonic_cover import edge_preimages
from cfskel.harmonic_cover import vertex_degrees
from cfskel.harmonic_cover import identity_cover
from cfskel.harmonic_cover import check_balancing
from cfskel.harmonic_cover import check_vertex_degrees


def segment(length="1"):
    return MetricGraph.create([("a", 1), ("b", 1)], [("e", "a", "b", length)])


def half_split_cover():
    """Split over `a`, ramified over `b`."""
    total = MetricGraph.create(
        [("a1", 1), ("a2", 1), ("b'", 1)],
        [("f1", "a1", "b'", 1), ("f2", "a2", "b'", 1)],
    )
    return CoverMap(
        segment(),
        total,
        2,
        {"a1": "a", "a2": "a", "b'": "b"},
        {"f1": "e", "f2": "e"},
    )


def test_example_balancing(cover):
    report = check_balancing(cover)
    assert report.passed
    assert report.lines()[0] == "balancing e1: e1':2 = 2 (degree 2) ok"
    assert all(edge_degree(cover, e) == 2 for e in cover.total.edge_ids)
    assert preimages(cover, "y") == ["y'"]
    assert edge_preimages(cover, "e4") == ["e4'"]


def test_example_vertex_degrees(cover):
    assert vertex_degrees(cover) == {v: 2 for v in cover.total.vertex_ids}
    report = check_vertex_degrees(cover)
    assert report.passed
    assert "vertex y: y':2 = 2 (degree 2) ok" in report.lines()


def test_example_pullback(cover):
    pulled = pullback(cover, canonical_divisor(cover.base))
    assert pulled == Divisor({"x0'": 4, "y'": -12, "z1'": 2, "z2'": 6})
    assert pulled.degree == 2 * canonical_divisor(cover.base).degree


def test_half_split_cover():
    cover = half_split_cover()
    assert vertex_degrees(cover) == {"a1": 1, "a2": 1, "b'": 2}
    assert check_balancing(cover).passed
    assert check_vertex_degrees(cover).passed
    assert galois_report(cover, 2).passed
    assert galois_report(cover, 2).lines() == ["galois degree 2: ok"]
    assert pullback(cover, Divisor({"a": 1, "b": Fraction(1, 2)})) == Divisor(
        {"a1": 1, "a2": 1, "b'": 1}
    )


def test_loops():
    circle = MetricGraph.create([("v0", 1)], [("e", "v0", "v0", 1)])
    unramified = MetricGraph.create(
        [("w1", 1), ("w2", 1)],
        [("f1", "w1", "w2", 1), ("f2", "w2", "w1", 1)],
    )
    split = CoverMap(
        circle,
        unramified,
        2,
        {"w1": "v0", "w2": "v0"},
        {"f1": "e", "f2": "e"},
    )
    assert vertex_degrees(split) == {"w1": 1, "w2": 1}
    assert check_balancing(split).passed
    assert galois_report(split, 2).passed
    ramified = MetricGraph.create([("w", 1)], [("f", "w", "w", "1/2")])
    folded = CoverMap(circle, ramified, 2, {"w": "v0"}, {"f": "e"})
    assert vertex_degree(folded, "w") == 2
    assert check_vertex_degrees(folded).passed


def test_failing_reports():
    doubled = MetricGraph.create([("a'", 1), ("b'", 1)], [("e'", "a'", "b'", "1/2")])
    cover = CoverMap(segment(), doubled, 3, {"a'": "a", "b'": "b"}, {"e'": "e"})
    balancing = check_balancing(cover)
    assert not balancing.passed
    assert balancing.failures == ["e"]
    assert balancing.lines() == ["balancing e: e':2 = 2 (degree 3) FAILED"]
    degrees = check_vertex_degrees(cover)
    assert degrees.failures == ["a", "b"]
    galois = galois_report(cover, 3)
    assert not galois.passed
    assert galois.lines()[0] == (
        "galois degree 3: FAILED vertex 'a' has 1 preimage(s) of degree [2]"
    )


def test_galois_rejects_unbalanced_ramification():
    base = MetricGraph.create([("a", 1), ("b", 1)], [("e", "a", "b", 1)])
    total = MetricGraph.create(
        [("a1", 1), ("a2", 1), ("b'", 1)],
        [("f", "a1", "b'", "1/2"), ("g", "a2", "b'", "1/2")],
    )
    vertex_map = {"a1": "a", "a2": "a", "b'": "b"}
    cover = CoverMap(base, total, 2, vertex_map, {"f": "e", "g": "e"})
    assert not check_balancing(cover).passed
    assert not galois_report(cover, 2).passed


def test_identity_cover(base_graph):
    cover = identity_cover(base_graph)
    assert cover.degree == 1
    assert check_balancing(cover).passed
    assert set(vertex_degrees(cover).values()) == {1}
    single = identity_cover(MetricGraph.create([("x", 1, 1)], []))
    assert vertex_degree(single, "x") == 1


@pytest.mark.parametrize(
    "vertex_map, edge_map, length",
    [
        ({"a'": "a", "b'": "b"}, {"e'": "e"}, "2/3"),
        ({"a'": "a"}, {"e'": "e"}, "1/2"),
        ({"a'": "a", "b'": "a"}, {"e'": "e"}, "1/2"),
        ({"a'": "a", "b'": "b"}, {}, "1/2"),
        ({"a'": "a", "b'": "nope"}, {"e'": "e"}, "1/2"),
    ],
)
def test_malformed_covers(vertex_map, edge_map, length):
    total = MetricGraph.create([("a'", 1), ("b'", 1)], [("e'", "a'", "b'", length)])
    with pytest.raises(MalformedCoverError):
        CoverMap(segment(), total, 2, vertex_map, edge_map)


def test_malformed_degree():
    with pytest.raises(MalformedCoverError):
        CoverMap(segment(), segment(), 0, {"a": "a", "b": "b"}, {"e": "e"})
