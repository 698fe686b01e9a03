import click

from typing import Any
from typing import Dict
from typing import List
from typing import Tuple
from typing import Callable
from typing import Optional
from pathlib import Path
from functools import wraps
from cftool import console

from .config import load_config
from .config import default_config
from .config import SkeletaConfig
from .errors import InputError
from .errors import SkeletaError
from .render import render
from .render import IRenderer
from .toolkit import parse_rational
from .toolkit import format_rational
from .checker import run_checks
from .checker import CheckConfig
from .checker import CheckReport
from .constants import EXIT_FAILED
from .constants import EXIT_PASSED
from .constants import EXIT_INPUT_ERROR
from .constants import DEFAULT_CONFIG_FILE
from .constants import PRESETS_SETTINGS_DIR
from .different import solve_different
from .documents import dumps
from .documents import load_graph
from .documents import load_cover
from .documents import dump_fixture
from .documents import load_function
from .documents import graph_to_document
from .documents import function_to_document
from .metric_graph import euler_char
from .metric_graph import snc_violations
from .metric_graph import canonical_divisor
from .metric_graph import farey_multiplicity
from .metric_graph import over_extension_chi
from .metric_graph import skeleton_criterion
from .metric_graph import stern_brocot_trace
from .builders.elliptic import classify_pot_mult
from .builders.elliptic import kodaira_skeleton
from .builders.elliptic import build_pot_mult_cover
from .builders.elliptic import KodairaType
from .builders.quotient import build_quotient_cover


def handle_errors(fn: Callable[..., int]) -> Callable[..., None]:
    """Turn the returned status into the exit code, input errors into exit code 2."""

    @wraps(fn)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        ctx = click.get_current_context()
        try:
            code = fn(*args, **kwargs)
        except (SkeletaError, OSError, ValueError) as err:
            click.echo(f"error: {err}", err=True)
            ctx.exit(EXIT_INPUT_ERROR)
        ctx.exit(code)

    return wrapper


def get_config() -> SkeletaConfig:
    ctx = click.get_current_context()
    config = ctx.find_object(SkeletaConfig)
    if config is None:
        return default_config()
    return config


def echo_report(report: CheckReport) -> int:
    for line in report.lines():
        click.echo(line)
    return EXIT_PASSED if report.passed else EXIT_FAILED


def parse_anchors(anchors: Tuple[str, ...]) -> Dict[str, Any]:
    parsed = {}
    for anchor in anchors:
        if "=" not in anchor:
            raise InputError(f"anchor should look like 'id=a/b', but got '{anchor}'")
        vertex_id, value = anchor.rsplit("=", 1)
        parsed[vertex_id] = parse_rational(value)
    return parsed


def run_config(*, preset: str = "none", target: str = DEFAULT_CONFIG_FILE) -> None:
    console.rule("Generating Config")
    console.log(f"Preset: {preset}")
    config = default_config(preset)
    console.log(f"Dumping config to {target}")
    config.dump(target)
    console.log("Done!")


def run_chi(
    *,
    graph: str,
    extension_index: Optional[int] = None,
    curve_chi: Optional[int] = None,
) -> int:
    skeleton = load_graph(graph)
    divisor = canonical_divisor(skeleton)
    for vertex_id in skeleton.vertex_ids:
        click.echo(f"K {vertex_id}: {format_rational(divisor[vertex_id])}")
    chi = euler_char(skeleton)
    click.echo(f"chi = {chi}")
    if extension_index is not None:
        chi = over_extension_chi(skeleton, extension_index)
        click.echo(f"chi with e = {extension_index}: {chi}")
    if curve_chi is None:
        return EXIT_PASSED
    passed = skeleton_criterion(chi, curve_chi)
    status = "ok" if passed else "FAILED"
    click.echo(f"skeleton criterion ({chi} vs {curve_chi}): {status}")
    return EXIT_PASSED if passed else EXIT_FAILED


def run_check_model(*, graph: str) -> int:
    skeleton = load_graph(graph)
    violations = snc_violations(skeleton)
    if not violations:
        click.echo(f"snc: ok ({len(skeleton.edges)} edges)")
        return EXIT_PASSED
    edge = violations[0]
    m1 = skeleton.vertex(edge.u).mult
    m2 = skeleton.vertex(edge.v).mult
    click.echo(
        f"snc: FAILED edge {edge.id}: length {format_rational(edge.length)}, "
        f"expected 1/{m1 * m2} ({len(violations)} offending edges)"
    )
    return EXIT_FAILED


def run_verify(config: CheckConfig) -> int:
    return echo_report(run_checks(config))


def run_solve_different(
    *,
    cover: str,
    anchors: Tuple[str, ...],
    strict: Optional[bool] = None,
    output: Optional[str] = None,
) -> int:
    config = get_config()
    cover_map = load_cover(cover)
    if strict is None:
        strict = config.strict_anchors
    function = solve_different(cover_map, parse_anchors(anchors), strict=strict)
    text = dumps(function_to_document(function), config.indent)
    if output is None:
        click.echo(text, nl=False)
    else:
        Path(output).write_text(text, encoding="utf-8")
    return EXIT_PASSED


def run_classify_elliptic(*, nu: int, dlog: int) -> int:
    base_type, total_type = classify_pot_mult(nu, dlog)
    click.echo(f"{base_type} / {total_type}")
    return EXIT_PASSED


def _dump(folder: str, paths: List[Path]) -> None:
    for path in paths:
        console.log(f"Wrote {path}")
    console.rule("Congratulations")
    console.log(f"Fixture is ready in {folder}")


def run_build_elliptic(*, nu: int, dlog: int, out: str) -> int:
    config = get_config()
    console.rule("Building Potentially Multiplicative Fixture")
    console.log(f"nu={nu}, dlog={dlog}")
    fixture = build_pot_mult_cover(nu, dlog)
    console.log(
        f"Reduction types: {fixture.base_type} over k, "
        f"{fixture.total_type} over k'"
    )
    paths = dump_fixture(
        out,
        fixture.cover,
        fixture.different,
        fixture.markings,
        config.indent,
    )
    _dump(out, paths)
    return EXIT_PASSED


def run_build_quotient(*, p: int, j: int, d: int, genus: int, out: str) -> int:
    config = get_config()
    console.rule("Building Quotient Fixture")
    console.log(f"p={p}, j={j}, d={d}, genus={genus}")
    fixture = build_quotient_cover(p, j, d, genus)
    counts = fixture.counts
    console.log(
        f"g'={counts.genus}, chain edges={counts.chain_edges}, "
        f"slope={counts.slope}, region chi={counts.region_chi}"
    )
    paths = dump_fixture(
        out,
        fixture.cover,
        fixture.different,
        fixture.markings,
        config.indent,
    )
    _dump(out, paths)
    return EXIT_PASSED


def run_farey(*, mult: int, dist: str, trace: bool = False) -> int:
    d = parse_rational(dist)
    if trace:
        for position, m in stern_brocot_trace(mult, d):
            click.echo(f"blowup {format_rational(position)}: {m}")
    click.echo(farey_multiplicity(mult, d))
    return EXIT_PASSED


def run_render(*, graph: str, different: Optional[str], fmt: Optional[str]) -> int:
    config = get_config()
    skeleton = load_graph(graph)
    function = None if different is None else load_function(different, skeleton)
    click.echo(render(skeleton, function, fmt=fmt, config=config), nl=False)
    return EXIT_PASSED


def run_kodaira(*, kodaira_type: str) -> int:
    skeleton = kodaira_skeleton(KodairaType.parse(kodaira_type))
    click.echo(dumps(graph_to_document(skeleton), get_config().indent), nl=False)
    return EXIT_PASSED


@click.group()
@click.option(
    "--config",
    "config_file",
    default=None,
    type=click.Path(exists=True, dir_okay=False),
    help="A config file generated by `cfskel config`.",
)
@click.version_option(package_name="carefree-skeleta")
@click.pass_context
def main(ctx: click.Context, config_file: Optional[str]) -> None:
    if config_file is not None:
        try:
            ctx.obj = load_config(config_file)
        except (SkeletaError, ValueError) as err:
            click.echo(f"error: {err}", err=True)
            ctx.exit(EXIT_INPUT_ERROR)


@main.command()
@click.option(
    "--preset",
    default="none",
    show_default=True,
    type=click.Choice(
        ["none"] + sorted(p.stem for p in PRESETS_SETTINGS_DIR.iterdir())
    ),
    help="The preset config name.",
)
@click.option(
    "-t",
    "--target",
    default=DEFAULT_CONFIG_FILE,
    show_default=True,
    type=str,
    help="Target output path of the generated config.",
)
def config(*, preset: str, target: str) -> None:
    run_config(preset=preset, target=target)


@main.command()
@click.argument("graph")
@click.option("--extension-index", type=int, help="e(k'/k), to measure χ over k'.")
@click.option("--curve-chi", type=int, help="χ of the curve, to test the criterion.")
@handle_errors
def chi(*, graph: str, extension_index: Optional[int], curve_chi: Optional[int]) -> int:
    return run_chi(graph=graph, extension_index=extension_index, curve_chi=curve_chi)


@main.command("check-model")
@click.argument("graph")
@handle_errors
def check_model(*, graph: str) -> int:
    return run_check_model(graph=graph)


@main.command("check-cover")
@click.argument("cover")
@click.option("--galois", type=int, help="Also check the split / ramified dichotomy.")
@handle_errors
def check_cover(*, cover: str, galois: Optional[int]) -> int:
    blocks = ["balancing", "vertex_degrees"]
    if galois is not None:
        blocks.append("galois")
    return run_verify(CheckConfig(cover=cover, galois_p=galois, blocks=blocks))


@main.command("check-rh")
@click.argument("cover")
@click.argument("function")
@handle_errors
def check_rh(*, cover: str, function: str) -> int:
    config = CheckConfig(cover=cover, function=function, blocks=["riemann_hurwitz"])
    return run_verify(config)


@main.command()
@click.argument("cover")
@click.option("--different", "function", help="The different function document.")
@click.option("--bound", help="v_k([k':k]), for `different_bounds`.")
@click.option("--curve-chi", type=int, help="χ of the curve over k'.")
@click.option("--extension-index", default=1, show_default=True, type=int)
@click.option("--galois", type=int, help="The prime degree of a Galois cover.")
@click.option("--center", help="The base vertex that splits Γ into regions.")
@click.option("-b", "--block", "blocks", multiple=True, help="Check blocks to run.")
@handle_errors
def verify(
    *,
    cover: str,
    function: Optional[str],
    bound: Optional[str],
    curve_chi: Optional[int],
    extension_index: int,
    galois: Optional[int],
    center: Optional[str],
    blocks: Tuple[str, ...],
) -> int:
    config = CheckConfig(
        cover=cover,
        function=function,
        bound=bound,
        curve_chi=curve_chi,
        extension_index=extension_index,
        galois_p=galois,
        center=center,
    )
    if blocks:
        config.blocks = list(blocks)
    return run_verify(config)


@main.command("solve-different")
@click.argument("cover")
@click.option("--anchor", "anchors", multiple=True, help="Dirichlet data, 'id=a/b'.")
@click.option("--strict/--no-strict", default=None, help="Impose RH at the anchors.")
@click.option("-o", "--output", help="Write the function document here.")
@handle_errors
def solve(
    *,
    cover: str,
    anchors: Tuple[str, ...],
    strict: Optional[bool],
    output: Optional[str],
) -> int:
    return run_solve_different(
        cover=cover,
        anchors=anchors,
        strict=strict,
        output=output,
    )


@main.command("classify-elliptic")
@click.option("--nu", required=True, type=int, help="-ord_k j(E).")
@click.option("--dlog", required=True, type=int, help="The log-different of k'/k.")
@handle_errors
def classify_elliptic(*, nu: int, dlog: int) -> int:
    return run_classify_elliptic(nu=nu, dlog=dlog)


@main.command("build-elliptic")
@click.option("--nu", required=True, type=int)
@click.option("--dlog", required=True, type=int)
@click.option("--out", required=True, type=str, help="Output folder.")
@handle_errors
def build_elliptic(*, nu: int, dlog: int, out: str) -> int:
    return run_build_elliptic(nu=nu, dlog=dlog, out=out)


@main.command("build-quotient")
@click.option("--p", "p", required=True, type=int)
@click.option("--j", "j", required=True, type=int)
@click.option("--d", "d", required=True, type=int)
@click.option("--genus", default=0, show_default=True, type=int)
@click.option("--out", required=True, type=str, help="Output folder.")
@handle_errors
def build_quotient(*, p: int, j: int, d: int, genus: int, out: str) -> int:
    return run_build_quotient(p=p, j=j, d=d, genus=genus, out=out)


@main.command()
@click.option("--mult", required=True, type=int, help="Multiplicity of the end.")
@click.option("--dist", required=True, type=str, help="Distance from the end, 'a/b'.")
@click.option("--trace", is_flag=True, help="Print the blow-up descent.")
@handle_errors
def farey(*, mult: int, dist: str, trace: bool) -> int:
    return run_farey(mult=mult, dist=dist, trace=trace)


@main.command("render")
@click.argument("graph")
@click.option("--different", help="A function document to annotate with.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(sorted(IRenderer.d)),
    help="Output format, defaults to the configured one.",
)
@handle_errors
def render_graph(*, graph: str, different: Optional[str], fmt: Optional[str]) -> int:
    return run_render(graph=graph, different=different, fmt=fmt)


@main.command()
@click.option("--type", "kodaira_type", required=True, help="e.g. I_3, I*_5, II*.")
@handle_errors
def kodaira(*, kodaira_type: str) -> int:
    return run_kodaira(kodaira_type=kodaira_type)


__all__ = [
    "run_config",
    "run_chi",
    "run_check_model",
    "run_verify",
    "run_solve_different",
    "run_classify_elliptic",
    "run_build_elliptic",
    "run_build_quotient",
    "run_farey",
    "run_render",
    "run_kodaira",
]
