import json
import cfskel

from importlib.metadata import version
from click.testing import CliRunner
from conftest import GOLDEN_DIR
from conftest import EXAMPLE_DIR
from cfskel.cli import main
from cfskel.constants import FIXTURES_DIR
from cfskel.documents import parse_graph


COVER = str(EXAMPLE_DIR / "cover.json")
TOTAL = str(EXAMPLE_DIR / "total.json")
DIFFERENT = str(EXAMPLE_DIR / "different.json")
INTERVAL = str(FIXTURES_DIR / "interval.json")


def invoke(*args):
    return CliRunner().invoke(main, [str(arg) for arg in args])


def golden(name):
    return (GOLDEN_DIR / name).read_text(encoding="utf-8")


def test_check_rh():
    result = invoke("check-rh", COVER, DIFFERENT)
    assert result.exit_code == 0
    assert result.output == golden("check_rh.txt")


def test_check_cover():
    result = invoke("check-cover", COVER)
    assert result.exit_code == 0
    assert result.output == golden("check_cover.txt")
    result = invoke("check-cover", COVER, "--galois", 2)
    assert result.exit_code == 0
    assert result.output.endswith("galois degree 2: ok\nPASSED\n")
    result = invoke("check-cover", COVER, "--galois", 3)
    assert result.exit_code == 1
    assert result.output.endswith("FAILED\n")


def test_verify():
    args = ["verify", COVER, "-b", "region_chi", "--center", "x0", "--galois", 2]
    result = invoke(*args)
    assert result.exit_code == 0
    assert result.output == "region mid,y,z1,z2: chi=-2 jump=3\nPASSED\n"
    result = invoke("verify", COVER, "--different", DIFFERENT, "--bound", "1/2")
    assert result.exit_code == 0
    result = invoke(
        "verify",
        COVER,
        "--different",
        DIFFERENT,
        "--bound",
        "1/2",
        "-b",
        "different_bounds",
    )
    assert result.exit_code == 1
    assert "value above bound at mid': 3/4" in result.output
    result = invoke("verify", COVER, "-b", "riemann_hurwitz")
    assert result.exit_code == 2


def test_chi():
    result = invoke("chi", TOTAL, "--extension-index", 2, "--curve-chi", 0)
    assert result.exit_code == 0
    assert result.output == golden("chi_genus_one.txt")
    result = invoke("chi", TOTAL, "--curve-chi", -2)
    assert result.exit_code == 1
    assert result.output.endswith("skeleton criterion (0 vs -2): FAILED\n")
    result = invoke("chi", INTERVAL)
    assert result.exit_code == 0
    assert result.output == "K a: 1\nK b: 2\nchi = 3\n"


def test_check_model(tmp_path):
    result = invoke("check-model", INTERVAL)
    assert result.exit_code == 0
    assert result.output == "snc: ok (1 edges)\n"
    document = json.loads((FIXTURES_DIR / "interval.json").read_text())
    document["edges"][0]["length"] = "1/3"
    perturbed = tmp_path / "perturbed.json"
    perturbed.write_text(json.dumps(document))
    result = invoke("check-model", perturbed)
    assert result.exit_code == 1
    expected = "snc: FAILED edge e: length 1/3, expected 1/2 (1 offending edges)\n"
    assert result.output == expected


def test_farey():
    result = invoke("farey", "--mult", 2, "--dist", "1/12")
    assert result.exit_code == 0
    assert result.output == "6\n"
    result = invoke("farey", "--mult", 2, "--dist", "1/12", "--trace")
    assert result.output == golden("farey_trace.txt")
    result = invoke("farey", "--mult", 2, "--dist", "1/2")
    assert result.exit_code == 2


def test_classify_elliptic():
    result = invoke("classify-elliptic", "--nu", 3, "--dlog", 2)
    assert result.exit_code == 0
    assert result.output == golden("classify_elliptic.txt")
    assert invoke("classify-elliptic", "--nu", 0, "--dlog", 2).exit_code == 2


def test_render():
    result = invoke("render", str(EXAMPLE_DIR / "base.json"))
    assert result.exit_code == 0
    assert result.output == golden("genus_one_base.dot")
    result = invoke("render", TOTAL, "--different", DIFFERENT)
    assert result.output == golden("genus_one_total.dot")
    result = invoke("render", TOTAL, "--format", "tikz")
    assert result.exit_code == 0
    assert result.output.startswith("\\begin{tikzpicture}[scale=1]\n")
    result = invoke("render", INTERVAL, "--different", DIFFERENT)
    assert result.exit_code == 2


def test_solve_different(tmp_path):
    anchors = ["--anchor", "x0'=0", "--anchor", "z1'=1", "--anchor", "z2'=1"]
    result = invoke("solve-different", COVER, *anchors)
    assert result.exit_code == 0
    assert result.output == golden_different()
    output = tmp_path / "different.json"
    result = invoke("solve-different", COVER, *anchors, "--strict", "-o", output)
    assert result.exit_code == 0
    assert output.read_text(encoding="utf-8") == golden_different()
    anchors[3] = "z1'=2"
    result = invoke("solve-different", COVER, *anchors, "--strict")
    assert result.exit_code == 2
    assert "x0'" in result.output
    assert invoke("solve-different", COVER, *anchors).exit_code == 0
    assert invoke("solve-different", COVER, "--anchor", "x0'").exit_code == 2


def golden_different():
    return (EXAMPLE_DIR / "different.json").read_text(encoding="utf-8")


def test_config_file(tmp_path):
    target = tmp_path / "cfskel.json"
    result = invoke("config", "--preset", "strict", "-t", target)
    assert result.exit_code == 0
    assert target.is_file()
    args = ["--anchor", "x0'=0", "--anchor", "z1'=2", "--anchor", "z2'=1"]
    assert invoke("--config", target, "solve-different", COVER, *args).exit_code == 2
    assert invoke("solve-different", COVER, *args).exit_code == 0


def test_builders(tmp_path):
    elliptic = tmp_path / "elliptic"
    result = invoke("build-elliptic", "--nu", 2, "--dlog", 1, "--out", elliptic)
    assert result.exit_code == 0
    result = invoke("check-rh", elliptic / "cover.json", elliptic / "different.json")
    assert result.exit_code == 0
    assert result.output.endswith("riemann-hurwitz: ok\nPASSED\n")
    quotient = tmp_path / "quotient"
    args = ["--p", 3, "--j", 2, "--d", 2, "--genus", 1, "--out", quotient]
    assert invoke("build-quotient", *args).exit_code == 0
    result = invoke("check-rh", quotient / "cover.json", quotient / "different.json")
    assert result.exit_code == 0
    assert invoke("check-cover", quotient / "cover.json", "--galois", 3).exit_code == 0


def test_kodaira():
    result = invoke("kodaira", "--type", "I_3")
    assert result.exit_code == 0
    graph = parse_graph(result.output)
    assert graph.vertex_ids == ["v0", "v1", "v2"]
    assert invoke("kodaira", "--type", "I_0").exit_code == 0
    assert invoke("kodaira", "--type", "V").exit_code == 2


def test_input_errors():
    result = invoke("chi", "missing.json")
    assert result.exit_code == 2
    assert "error:" in result.output
    assert invoke("unknown-command").exit_code == 2
    assert invoke("render", TOTAL, "--format", "svg").exit_code == 2


def test_malformed_ends_and_encoding(tmp_path):
    graph = tmp_path / "g.json"
    vertices = [{"id": "a", "mult": 1}, {"id": "b", "mult": 1}]
    edges = [{"id": "e", "ends": [["a"], "b"], "length": "1"}]
    graph.write_text(json.dumps({"vertices": vertices, "edges": edges}))
    result = invoke("chi", graph)
    assert result.exit_code == 2
    assert "[invalid-graph]" in result.output
    latin = tmp_path / "latin.json"
    latin.write_bytes(b'{"vertices": [{"id": "\xe9", "mult": 1}], "edges": []}')
    result = invoke("chi", latin)
    assert result.exit_code == 2
    assert "[malformed-json]" in result.output


def test_version():
    installed = version("carefree-skeleta")
    assert cfskel.__version__ == installed
    result = invoke("--version")
    assert result.exit_code == 0
    assert installed in result.output
