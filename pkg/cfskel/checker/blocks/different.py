from ..schema import CheckConfig
from .load import IFixtureBlock
from ...errors import InputError
from ...toolkit import format_rational
from ...different import laplacian
from ...different import rh_target
from ...different import validate_different


@IFixtureBlock.register("riemann_hurwitz")
class RiemannHurwitzBlock(IFixtureBlock):
    """Compares Δ(δ) with K_{Γ'} - φ*K_Γ vertex by vertex."""

    def build(self, config: CheckConfig) -> None:
        cover = self.fixture.cover
        divisor = laplacian(self.function)
        target = rh_target(cover)
        lines = []
        for vertex_id in cover.total.vertex_ids:
            lhs, rhs = divisor[vertex_id], target[vertex_id]
            if lhs == 0 and rhs == 0:
                continue
            lines.append(
                f"rh {vertex_id}: laplacian={format_rational(lhs)} "
                f"target={format_rational(rhs)}"
            )
        residual = divisor - target
        if residual.is_zero:
            lines.append("riemann-hurwitz: ok")
        else:
            lines.append("riemann-hurwitz: FAILED")
            for vertex_id, value in residual.items():
                lines.append(f"residual {vertex_id}: {format_rational(value)}")
        self.record(residual.is_zero, lines)


@IFixtureBlock.register("different_bounds")
class DifferentBoundsBlock(IFixtureBlock):
    def build(self, config: CheckConfig) -> None:
        if config.bound is None:
            raise InputError("'different_bounds' needs the bound v_k([k':k])")
        cover = self.fixture.cover
        report = validate_different(self.function, cover.degree, config.bound)
        self.record(report.passed, report.lines())


__all__ = [
    "RiemannHurwitzBlock",
    "DifferentBoundsBlock",
]
