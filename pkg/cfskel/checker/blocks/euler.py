import networkx as nx

from ..schema import CheckConfig
from .load import IFixtureBlock
from ...errors import InputError
from ...errors import SkeletaError
from ...metric_graph import euler_char
from ...metric_graph import region_euler_char
from ...metric_graph import over_extension_chi
from ...metric_graph import skeleton_criterion
from ...builders.quotient import jump_from_chi


@IFixtureBlock.register("skeleton_criterion")
class SkeletonCriterionBlock(IFixtureBlock):
    def build(self, config: CheckConfig) -> None:
        if config.curve_chi is None:
            raise InputError("'skeleton_criterion' needs the curve chi")
        total = self.fixture.cover.total
        chi = over_extension_chi(total, config.extension_index)
        passed = skeleton_criterion(chi, config.curve_chi)
        self.record(
            passed,
            [
                f"chi(total) = {euler_char(total)} over k, "
                f"{chi} with e = {config.extension_index}",
                f"chi(curve) = {config.curve_chi}: {'ok' if passed else 'FAILED'}",
            ],
        )


@IFixtureBlock.register("region_chi")
class RegionChiBlock(IFixtureBlock):
    """χ of every component of Γ minus a center, with the jump it predicts."""

    def build(self, config: CheckConfig) -> None:
        if config.center is None:
            raise InputError("'region_chi' needs a center vertex")
        base = self.fixture.cover.base
        base.vertex(config.center)
        graph = base.to_networkx()
        graph.remove_node(config.center)
        regions = sorted(sorted(c) for c in nx.connected_components(graph))
        lines = []
        for region in regions:
            chi = region_euler_char(base, region)
            line = f"region {','.join(region)}: chi={chi}"
            if config.galois_p is not None:
                try:
                    line += f" jump={jump_from_chi(config.galois_p, chi)}"
                except SkeletaError:
                    line += " jump=none"
            lines.append(line)
        self.record(True, lines)


__all__ = [
    "SkeletonCriterionBlock",
    "RegionChiBlock",
]
