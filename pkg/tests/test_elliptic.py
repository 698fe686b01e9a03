import pytest

from fractions import Fraction
from cfskel.errors import InputError
from cfskel.different import laplacian
from cfskel.different import rh_residual
from cfskel.different import solve_different
from cfskel.different import temperate_value
from cfskel.different import outgoing_slope
from cfskel.different import extract_anchors
from cfskel.different import validate_different
from cfskel.metric_graph import distance
from cfskel.metric_graph import euler_char
from cfskel.metric_graph import snc_edge_check
from cfskel.metric_graph import farey_multiplicity
from cfskel.metric_graph import skeleton_criterion
from cfskel.harmonic_cover import edge_degree
from cfskel.harmonic_cover import galois_report
from cfskel.harmonic_cover import check_balancing
from cfskel.harmonic_cover import check_vertex_degrees
from cfskel.builders.schema import Locus
from cfskel.builders.elliptic import KodairaKind
from cfskel.builders.elliptic import KodairaType
from cfskel.builders.elliptic import kodaira_skeleton
from cfskel.builders.elliptic import classify_pot_mult
from cfskel.builders.elliptic import build_pot_mult_cover


ALL_TYPES = [
    "I_0",
    "I_1",
    "I_2",
    "I_7",
    "I*_0",
    "I*_1",
    "I*_5",
    "II",
    "III",
    "IV",
    "II*",
    "III*",
    "IV*",
]


@pytest.mark.parametrize("text", ALL_TYPES)
def test_kodaira_catalog(text):
    kodaira_type = KodairaType.parse(text)
    assert str(kodaira_type) == text
    graph = kodaira_skeleton(kodaira_type)
    assert euler_char(graph) == 0
    assert snc_edge_check(graph)


def test_kodaira_shapes():
    good = kodaira_skeleton(KodairaType.i(0))
    assert [(v.mult, v.genus) for v in good.vertices] == [(1, 1)]
    two = kodaira_skeleton(KodairaType(KodairaKind.II))
    assert two.vertex("c").mult == 6
    assert sorted(two.vertex(v).mult for v in two.leaves) == [1, 2, 3]
    star = kodaira_skeleton(KodairaType.i_star(5))
    mults = sorted(v.mult for v in star.vertices)
    assert mults == [1] * 4 + [2] * 6
    circle = kodaira_skeleton(KodairaType.i(1))
    assert circle.edges[0].is_loop
    assert len(kodaira_skeleton(KodairaType.i(7)).vertices) == 7
    e8 = kodaira_skeleton(KodairaType(KodairaKind.IISTAR))
    assert sum(v.mult for v in e8.vertices) == 30


def test_kodaira_parse_errors():
    for text in ["I_n", "I*_", "V", "I_-1", "II_2"]:
        with pytest.raises(InputError):
            KodairaType.parse(text)
    with pytest.raises(InputError):
        KodairaType(KodairaKind.I, 0)
    with pytest.raises(InputError):
        KodairaType(KodairaKind.II, 3)
    assert KodairaType.parse("I_0") == KodairaType(KodairaKind.I0)


@pytest.mark.parametrize(
    "nu, dlog, base, total",
    [
        (3, 2, "I*_11", "I_6"),
        (1, 1, "I*_5", "I_2"),
        (2, 1, "I*_6", "I_4"),
        (4, 0, "I*_4", "I_8"),
    ],
)
def test_classify_pot_mult(nu, dlog, base, total):
    base_type, total_type = classify_pot_mult(nu, dlog)
    assert (str(base_type), str(total_type)) == (base, total)
    assert euler_char(kodaira_skeleton(base_type)) == 0


def test_classify_pot_mult_needs_bad_reduction():
    with pytest.raises(InputError):
        classify_pot_mult(0, 1)


def test_pot_mult_small_fixture():
    fixture = build_pot_mult_cover(2, 1)
    cover = fixture.cover
    assert str(fixture.base_type) == "I*_6"
    assert str(fixture.total_type) == "I_4"
    assert distance(cover.total, fixture.x, fixture.y) == Fraction(1, 4)
    assert distance(cover.base, fixture.base_x, fixture.base_y) == Fraction(1, 2)
    assert outgoing_slope(fixture.different, "u0", "lte1") == 2
    assert fixture.different.value(fixture.y) == Fraction(1, 2)
    assert cover.total.vertex("lt1").mult == farey_multiplicity(2, "1/8")
    assert cover.total.vertex(fixture.y).mult == farey_multiplicity(2, "1/4")
    assert fixture.bound == 1
    assert fixture.log_different_bound == 2
    assert fixture.fits_bound


def test_pot_mult_longer_tail():
    fixture = build_pot_mult_cover(1, 2)
    assert fixture.different.value(fixture.y) == 1
    assert distance(fixture.cover.total, fixture.x, fixture.y) == Fraction(1, 2)
    assert fixture.different.edge_slope("lte1") == 2


def test_pot_mult_above_bound():
    for dlog in (3, 4):
        fixture = build_pot_mult_cover(1, dlog)
        assert fixture.bound == 1
        assert not fixture.fits_bound
        report = validate_different(fixture.different, 2, fixture.bound)
        assert not report.passed
        assert ("lz0", temperate_value(2, dlog)) in report.above_bound
        wider = build_pot_mult_cover(1, dlog, ramification_index=2)
        assert wider.bound == 2
        assert wider.fits_bound
        assert validate_different(wider.different, 2, wider.bound).passed
    with pytest.raises(InputError):
        build_pot_mult_cover(1, 1, ramification_index=0)


@pytest.mark.parametrize("nu", range(1, 9))
@pytest.mark.parametrize("dlog", range(1, 5))
def test_pot_mult_family(nu, dlog):
    fixture = build_pot_mult_cover(nu, dlog, ramification_index=2)
    cover = fixture.cover
    different = fixture.different
    assert check_balancing(cover).passed
    assert check_vertex_degrees(cover).passed
    assert galois_report(cover, 2).passed
    assert rh_residual(cover, different).is_zero
    assert fixture.fits_bound
    assert validate_different(different, 2, fixture.bound).passed
    assert euler_char(cover.total) == euler_char(cover.base) == 0
    assert skeleton_criterion(euler_char(cover.total), 0)
    assert 2 * distance(cover.base, fixture.base_x, fixture.base_y) == dlog
    assert distance(cover.total, fixture.x, fixture.y) == Fraction(dlog, 4)
    assert cover.total.vertex(fixture.y).mult == 2
    temperate = temperate_value(2, dlog)
    for vertex_id, locus in fixture.markings.items():
        value = different.value(vertex_id)
        assert (value == 0) is (locus == Locus.SPLIT)
        if locus == Locus.TEMPERATE:
            assert value == temperate
    for edge in cover.total.edges:
        split = fixture.markings[edge.u] == fixture.markings[edge.v] == Locus.SPLIT
        assert edge_degree(cover, edge.id) == (1 if split else 2)
    assert laplacian(different)[fixture.x] == -2
    if nu <= 2:
        anchors = extract_anchors(different, cover.total.leaves + [fixture.x])
        assert solve_different(cover, anchors) == different


def test_pot_mult_rejects_tame_twist():
    with pytest.raises(InputError):
        build_pot_mult_cover(2, 0)
