import json

from typing import Any
from typing import Dict
from typing import Type
from typing import Optional
from fractions import Fraction
from dataclasses import dataclass
from cftool.misc import update_dict
from cftool.misc import ISerializableDataClass
from cftool.console import log

from .errors import InputError
from .toolkit import to_fraction
from .constants import DEFAULT_KEY
from .constants import PRESETS_SETTINGS_DIR
from .constants import DEFAULT_SETTINGS_PATH


configs: Dict[str, Type["SkeletaConfig"]] = {}


@dataclass
class SkeletaConfig(ISerializableDataClass):
    """
    Settings shared by the command line tools.

    This class is not intended to be instantiated directly, it should be generated
    by `default_config` or `load_config`. The semantics are documented here so the
    JSON files (e.g. `cfskel.json`) can be edited accordingly.

    Attributes
    ----------
    indent : int, default=2
        Indentation of every JSON document written by `cfskel`.
    render_format : str, default="dot"
        The renderer used by `cfskel render` when `--format` is not given.
    dot_graph_name : str, default="skeleton"
        The name of the emitted DOT graph.
    tikz_scale : str, default="1"
        The (rational) scale of the emitted TikZ picture.
    strict_anchors : bool, default=False
        Whether `solve-different` also imposes Riemann-Hurwitz at the anchors.
    version : Optional[str], default=None
        The `carefree-skeleta` version the file was written with.

    """

    indent: int = 2
    render_format: str = "dot"
    dot_graph_name: str = "skeleton"
    tikz_scale: str = "1"
    strict_anchors: bool = False
    version: Optional[str] = None

    @classmethod
    def d(cls) -> Dict[str, Type["SkeletaConfig"]]:
        return configs

    @property
    def scale(self) -> Fraction:
        scale = to_fraction(self.tikz_scale)
        if scale <= 0:
            raise InputError(f"tikz scale should be positive, but got {scale}")
        return scale

    def from_info(self, info: Dict[str, Any]) -> None:
        super().from_info(info)
        self._handle_version()

    def dump(self, path: str) -> None:
        with open(path, "w") as f:
            json.dump(self.to_pack().asdict(), f, indent=self.indent)

    def load(self, preset: str) -> None:
        with DEFAULT_SETTINGS_PATH.open("r") as f:
            settings = json.load(f)
        if preset != "none":
            preset_path = PRESETS_SETTINGS_DIR / f"{preset}.json"
            if not preset_path.is_file():
                raise InputError(f"unknown preset occurred: '{preset}'")
            with preset_path.open("r") as f:
                update_dict(json.load(f), settings)
        for k, v in settings.items():
            setattr(self, k, v)
        self._handle_version()

    def _handle_version(self) -> None:
        import cfskel

        if self.version is None:
            self.version = cfskel.__version__
        elif self.version != cfskel.__version__:
            log(
                f"version mismatch: config version is {self.version}, "
                f"but `carefree-skeleta` 📐 version is {cfskel.__version__}"
            )


@SkeletaConfig.register(DEFAULT_KEY)
class DefaultConfig(SkeletaConfig):
    pass


def default_config(preset: str = "none") -> SkeletaConfig:
    config = SkeletaConfig.make(DEFAULT_KEY, {})
    config.load(preset)
    return config


def load_config(path: Optional[str] = None) -> SkeletaConfig:
    if path is None:
        return default_config()
    with open(path, "r") as f:
        config = json.load(f)
    return SkeletaConfig.from_pack(config)


__all__ = [
    "SkeletaConfig",
    "DefaultConfig",
    "default_config",
    "load_config",
]
