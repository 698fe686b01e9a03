from typing import List
from typing import Type
from cftool.pipeline import IPipeline

from .schema import *
from .blocks import *
from ..errors import InputError


def get_blocks(names: List[str]) -> List[ICheckBlock]:
    blocks: List[ICheckBlock] = [LoadFixtureBlock()]
    for name in names:
        if name == LoadFixtureBlock.__identifier__:
            continue
        if name not in ICheckBlock.d:
            raise InputError(f"unknown check block occurred: '{name}'")
        blocks.append(ICheckBlock.make(name, {}))
    return blocks


@IPipeline.register("checker")
class Checker(IPipeline):
    config: CheckConfig
    blocks: List[ICheckBlock]

    @classmethod
    def init(cls: Type["Checker"], config: CheckConfig) -> "Checker":
        self = cls()
        self.config = config
        return self

    @property
    def config_base(self) -> Type[CheckConfig]:
        return CheckConfig

    @property
    def block_base(self) -> Type[ICheckBlock]:
        return ICheckBlock

    def run(self) -> CheckReport:
        self.build(*get_blocks(self.config.blocks))
        return self.report()

    def report(self) -> CheckReport:
        results = [block.result for block in self.blocks if block.result is not None]
        return CheckReport(tuple(r for r in results if r.name != "load_fixture"))


def run_checks(config: CheckConfig) -> CheckReport:
    return Checker.init(config).run()


__all__ = [
    "Checker",
    "CheckConfig",
    "CheckReport",
    "CheckResult",
    "ICheckBlock",
    "get_blocks",
    "run_checks",
]
