import pytest

from fractions import Fraction
from cfskel import __version__
from cfskel.config import load_config
from cfskel.config import default_config
from cfskel.config import SkeletaConfig
from cfskel.errors import InputError


def test_default_config():
    config = default_config()
    assert config.indent == 2
    assert config.render_format == "dot"
    assert config.dot_graph_name == "skeleton"
    assert config.scale == 1
    assert not config.strict_anchors
    assert config.version == __version__
    assert load_config().render_format == "dot"


def test_presets():
    tikz = default_config("tikz")
    assert tikz.render_format == "tikz"
    assert tikz.scale == Fraction(3, 2)
    assert tikz.dot_graph_name == "skeleton"
    assert default_config("strict").strict_anchors
    with pytest.raises(InputError):
        default_config("unknown")


def test_dump_and_load(tmp_path):
    path = tmp_path / "cfskel.json"
    config = default_config("tikz")
    config.dump(str(path))
    assert "tikz" in path.read_text()
    loaded = load_config(str(path))
    assert loaded.render_format == "tikz"
    assert loaded.tikz_scale == "3/2"
    assert loaded.version == __version__


def test_invalid_scale():
    with pytest.raises(InputError):
        SkeletaConfig(tikz_scale="0").scale
    with pytest.raises(InputError):
        SkeletaConfig(tikz_scale="1.5").scale
