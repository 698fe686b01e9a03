from ..schema import CheckConfig
from .load import IFixtureBlock
from ...errors import InputError
from ...harmonic_cover import galois_report
from ...harmonic_cover import check_balancing
from ...harmonic_cover import check_vertex_degrees


@IFixtureBlock.register("balancing")
class BalancingBlock(IFixtureBlock):
    def build(self, config: CheckConfig) -> None:
        report = check_balancing(self.fixture.cover)
        self.record(report.passed, report.lines())


@IFixtureBlock.register("vertex_degrees")
class VertexDegreesBlock(IFixtureBlock):
    def build(self, config: CheckConfig) -> None:
        report = check_vertex_degrees(self.fixture.cover)
        self.record(report.passed, report.lines())


@IFixtureBlock.register("galois")
class GaloisBlock(IFixtureBlock):
    def build(self, config: CheckConfig) -> None:
        if config.galois_p is None:
            raise InputError("'galois' needs the prime degree `galois_p`")
        report = galois_report(self.fixture.cover, config.galois_p)
        self.record(report.passed, report.lines())


__all__ = [
    "BalancingBlock",
    "VertexDegreesBlock",
    "GaloisBlock",
]
