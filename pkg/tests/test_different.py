import pytest

from fractions import Fraction
from cfskel.errors import InputError
from cfskel.errors import InconsistentAnchorsError
from cfskel.different import PLFunction
from cfskel.different import rh_target
from cfskel.different import laplacian
from cfskel.different import rh_residual
from cfskel.different import branch_slopes
from cfskel.different import outgoing_slope
from cfskel.different import residual_slope
from cfskel.different import solve_different
from cfskel.different import temperate_value
from cfskel.different import extract_anchors
from cfskel.different import region_slope_sum
from cfskel.different import validate_different
from cfskel.metric_graph import Divisor
from cfskel.metric_graph import MetricGraph
from cfskel.harmonic_cover import identity_cover


def test_slopes(different):
    assert outgoing_slope(different, "x0'", "e1'") == 6
    assert outgoing_slope(different, "mid'", "e1'") == -6
    assert outgoing_slope(different, "mid'", "e2'") == 6
    assert branch_slopes(different, "y'") == [("e2'", -6), ("e3'", 0), ("e4'", 0)]
    assert different.edge_slope("e2'") == 6
    with pytest.raises(InputError):
        outgoing_slope(different, "x0'", "e3'")


def test_laplacian(different, total_graph):
    assert laplacian(different) == Divisor({"x0'": -6, "y'": 6})
    assert laplacian(PLFunction.constant(total_graph, 5)).is_zero


def test_loop_branches():
    circle = MetricGraph.create(
        [("v0", 1), ("v1", 1)],
        [("e", "v0", "v0", 1), ("f", "v0", "v1", 1)],
    )
    function = PLFunction(circle, {"v0": 0, "v1": 2})
    assert branch_slopes(function, "v0") == [("e", 0), ("e", 0), ("f", 2)]
    assert laplacian(function) == Divisor({"v0": -2, "v1": 2})


def test_riemann_hurwitz(cover, different):
    assert rh_target(cover) == Divisor({"x0'": -6, "y'": 6})
    assert rh_residual(cover, different).is_zero
    assert region_slope_sum(different, ["mid'", "y'", "z1'", "z2'"]) == 6


def test_riemann_hurwitz_residual_reports_offenders(cover, total_graph):
    flat = PLFunction.constant(total_graph)
    assert rh_residual(cover, flat) == Divisor({"x0'": 6, "y'": -6})
    with pytest.raises(InputError):
        rh_residual(cover, PLFunction.constant(cover.base))


def test_identity_cover_has_zero_different(base_graph):
    cover = identity_cover(base_graph)
    assert rh_residual(cover, PLFunction.constant(base_graph)).is_zero
    assert solve_different(cover, {"x0": 0}) == PLFunction.constant(base_graph)


def test_solve_different(cover, different):
    solved = solve_different(cover, {"x0'": 0, "z1'": 1, "z2'": 1})
    assert solved == different
    assert solved.value("y'") == 1
    assert solved.value("mid'") == Fraction(3, 4)
    assert solved.edge_slope("e1'") == 6


def test_solve_different_round_trips(cover, different):
    for anchors in (cover.total.leaves, cover.total.vertex_ids, ["x0'"]):
        data = extract_anchors(different, anchors)
        assert solve_different(cover, data) == different
    assert solve_different(cover, {"x0'": 0}, strict=True) == different


def test_strict_anchors(cover):
    with pytest.raises(InconsistentAnchorsError) as info:
        solve_different(cover, {"x0'": 0, "z1'": 2, "z2'": 1}, strict=True)
    assert info.value.vertex == "x0'"
    assert info.value.residual == Fraction(-4, 3)
    relaxed = solve_different(cover, {"x0'": 0, "z1'": 2, "z2'": 1})
    assert relaxed.value("y'") == Fraction(11, 9)


def test_solve_different_input_errors(cover):
    with pytest.raises(InputError):
        solve_different(cover, {})
    with pytest.raises(InputError):
        solve_different(cover, {"nope": 0})


@pytest.mark.parametrize(
    "n, dlog, expected",
    [(2, 2, Fraction(1)), (2, 1, Fraction(1, 2)), (7, 0, Fraction(0))],
)
def test_temperate_value(n, dlog, expected):
    assert temperate_value(n, dlog) == expected


@pytest.mark.parametrize(
    "m, dlog, expected",
    [(2, 3, 6), (5, 0, 0), (2, 1, 2), (3, 4, 12)],
)
def test_residual_slope(m, dlog, expected):
    assert residual_slope(m, dlog) == expected


def test_validate_different(different, total_graph):
    report = validate_different(different, 2, 1)
    assert report.passed
    assert report.lines() == ["different: degree 2, bound 1", "different: ok"]
    assert validate_different(PLFunction.constant(total_graph), 2, 0).passed


def test_validate_different_failures(total_graph):
    values = {"x0'": -1, "mid'": Fraction(-1, 2), "y'": 3, "z1'": 3, "z2'": 3}
    report = validate_different(PLFunction(total_graph, values), 2, 1)
    assert not report.passed
    assert report.negative == (("mid'", Fraction(-1, 2)), ("x0'", Fraction(-1)))
    assert [k for k, _ in report.above_bound] == ["y'", "z1'", "z2'"]
    bent = {"x0'": 0, "mid'": Fraction(1, 16), "y'": 0, "z1'": 0, "z2'": 0}
    report = validate_different(PLFunction(total_graph, bent), 2, 1)
    assert report.non_integral == (("e1'", Fraction(1, 2)), ("e2'", Fraction(-3, 2)))
    assert report.lines()[-1] == "different: FAILED"


def test_function_arithmetic(different, total_graph):
    doubled = different + different
    assert doubled == 2 * different
    assert laplacian(doubled) == laplacian(different) * 2
    with pytest.raises(InputError):
        PLFunction(total_graph, {"x0'": 0})
