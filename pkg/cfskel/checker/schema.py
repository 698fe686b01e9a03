from typing import Dict
from typing import List
from typing import Type
from typing import Tuple
from typing import Optional
from dataclasses import field
from dataclasses import dataclass
from cftool.misc import ISerializableDataClass
from cftool.pipeline import IBlock


check_configs: Dict[str, Type["CheckConfig"]] = {}

DEFAULT_BLOCKS = ["balancing", "vertex_degrees", "riemann_hurwitz"]


@dataclass
class CheckConfig(ISerializableDataClass):
    """
    Describes which checks to run on a cover fixture.

    Attributes
    ----------
    cover : str
        Path to the cover document.
    function : Optional[str], default=None
        Path to the different function document (on the total graph).
    bound : Optional[str], default=None
        v_k([k':k]) as a rational string, for `different_bounds`.
    curve_chi : Optional[int], default=None
        χ of the curve over k', for `skeleton_criterion`.
    extension_index : int, default=1
        e(k'/k), used to measure χ(Γ') with multiplicities over k'.
    galois_p : Optional[int], default=None
        The prime degree of a Galois cover, for `galois` and `region_chi`.
    center : Optional[str], default=None
        A base vertex whose complementary components are the regions of `region_chi`.
    blocks : List[str]
        The check blocks to run, in order.

    """

    cover: str = ""
    function: Optional[str] = None
    bound: Optional[str] = None
    curve_chi: Optional[int] = None
    extension_index: int = 1
    galois_p: Optional[int] = None
    center: Optional[str] = None
    blocks: List[str] = field(default_factory=lambda: list(DEFAULT_BLOCKS))

    @classmethod
    def d(cls) -> Dict[str, Type["CheckConfig"]]:
        return check_configs


@CheckConfig.register("check")
class DefaultCheckConfig(CheckConfig):
    pass


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    lines: Tuple[str, ...]


@dataclass(frozen=True)
class CheckReport:
    results: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def lines(self) -> List[str]:
        lines = []
        for result in self.results:
            lines.extend(result.lines)
        lines.append("PASSED" if self.passed else "FAILED")
        return lines

    def text(self) -> str:
        return "\n".join(self.lines())


class ICheckBlock(IBlock):
    result: Optional[CheckResult] = None

    def record(self, passed: bool, lines: List[str]) -> None:
        self.result = CheckResult(self.__identifier__, passed, tuple(lines))


__all__ = [
    "DEFAULT_BLOCKS",
    "CheckConfig",
    "DefaultCheckConfig",
    "CheckResult",
    "CheckReport",
    "ICheckBlock",
]
