from typing import Optional
from pathlib import Path

from ..schema import ICheckBlock
from ..schema import CheckConfig
from ...errors import InputError
from ...different import PLFunction
from ...documents import load_cover
from ...documents import load_function
from ...harmonic_cover import CoverMap


@ICheckBlock.register("load_fixture")
class LoadFixtureBlock(ICheckBlock):
    cover: CoverMap
    function: Optional[PLFunction]

    def build(self, config: CheckConfig) -> None:
        if not config.cover:
            raise InputError("a cover document should be provided")
        self.cover = load_cover(Path(config.cover))
        self.function = None
        if config.function is not None:
            self.function = load_function(Path(config.function), self.cover.total)
        self.record(True, [])


class IFixtureBlock(ICheckBlock):
    @property
    def fixture(self) -> LoadFixtureBlock:
        fixture = self.try_get_previous(LoadFixtureBlock)
        if fixture is None:
            raise InputError(f"'{self.__identifier__}' needs a loaded fixture")
        return fixture

    @property
    def function(self) -> PLFunction:
        function = self.fixture.function
        if function is None:
            raise InputError(f"'{self.__identifier__}' needs a function document")
        return function


__all__ = [
    "LoadFixtureBlock",
    "IFixtureBlock",
]
