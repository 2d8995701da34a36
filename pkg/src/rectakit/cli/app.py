"""The ``rectakit`` console script.

Exit status is a contract: 0 when every check passes, 1 when at least one
fails, 2 for usage errors and unreadable or invalid inputs.
"""

from __future__ import annotations

import logging
from pathlib import Path
import time
from typing import Any, Callable, Dict, List, Optional

from rich.console import Console
from rich.logging import RichHandler
import typer

from .._core import CheckResult, KitConfiguration, LogLevel, OutputFormat, RectakitError
from ..gf2code import LinearCode, coset_space, describe, dual_code, weight_distribution, write_code
from ..graph import Graph, coset_graph, distance_diagram, distance_profile, format_edge_list, halved_graphs, is_locally_triangular, is_rectagraph, isomorphic
from ..rect import (
    build_covering,
    five_transitive_local_check,
    four_homogeneous_local_check,
    kernel_report,
    locally_rank3_check,
    natural_local_action_check,
    two_arc_orbit_check,
)
from .builders import GroupInput, Inputs, build_family, resolve_code, resolve_graph, resolve_group
from .reports import Report, aggregate, new_report, passed, render
from .suites import SUITE_NAMES, is_verified_isomorphism, run_cases, suite_cases

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2

CHECKS = (
    "rectagraph",
    "locally-triangular",
    "locally-rank3",
    "two-arc-orbits",
    "four-homogeneous",
    "natural-local-action",
    "five-transitive",
    "reconstruct-code",
    "iso",
    "code-info",
)

app = typer.Typer(name="rectakit", help="Rectagraphs, binary codes and locally rank 3 groups.", no_args_is_help=True, add_completion=False)
stderr = Console(stderr=True)


class State:
    """Options shared by every command."""

    def __init__(self) -> None:
        self.config = KitConfiguration()
        self.out: Optional[Path] = None


state = State()


def configure_logging(level: LogLevel) -> None:
    """Send library logs to standard error so standard output stays machine-readable."""
    root = logging.getLogger("rectakit")
    root.handlers.clear()
    root.addHandler(RichHandler(console=stderr, show_path=False, rich_tracebacks=False))
    root.setLevel(getattr(logging, level.value.upper()))
    root.propagate = False


@app.callback()
def main_options(
    log_level: LogLevel = typer.Option(LogLevel.WARNING, "--log-level", help="Logging level"),
    threads: int = typer.Option(1, "--threads", min=1, help="Worker threads; results never depend on it"),
    output_format: OutputFormat = typer.Option(OutputFormat.JSON, "--format", help="Report format"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Reserved; every algorithm is deterministic"),
    out: Optional[Path] = typer.Option(None, "--out", help="Write the output here instead of standard output"),
) -> None:
    state.config = KitConfiguration(log_level=log_level, threads=threads, seed=seed, output_format=output_format)
    state.out = out
    configure_logging(log_level)


def _emit(text: str) -> None:
    if state.out is not None:
        state.out.write_text(text)
    else:
        typer.echo(text, nl=False)


def _fail(error: Exception) -> typer.Exit:
    if isinstance(error, RectakitError):
        stderr.print(f"error: {error}", markup=False, highlight=False)
    else:
        stderr.print(f"error: {type(error).__name__}: {error}", markup=False, highlight=False)
    return typer.Exit(EXIT_ERROR)


def _guard(action: Callable[[], int]) -> None:
    """Run a command body, mapping library and input errors to exit status 2."""
    try:
        code = action()
    except (RectakitError, OSError, KeyError, ValueError) as e:
        raise _fail(e) from e
    raise typer.Exit(code)


def _finish(report: Report) -> int:
    report.status = aggregate(report.results)
    _emit(render(report, state.config))
    return report.exit_code


@app.command()
def build(family: List[str] = typer.Argument(..., help="Family expression, e.g. 'halved coset golay24'")) -> None:
    """Construct a graph and write it as an edge list."""

    def body() -> int:
        graph = build_family(family, state.config)
        text = format_edge_list(graph, state.config)
        degrees = graph.to_explicit(state.config).degrees()
        regular = bool((degrees == degrees[0]).all()) if degrees.shape[0] else True
        summary = f"N={graph.order} M={graph.edge_count} " + (f"regular of valency {int(degrees[0])}" if regular and degrees.shape[0] else "not regular")
        if state.out is not None:
            state.out.write_text(text)
            typer.echo(summary)
        else:
            typer.echo(text, nl=False)
            stderr.print(summary, markup=False, highlight=False)
        return EXIT_PASS

    _guard(body)


def _group_input(inputs: Inputs, group: Optional[str], graph: Optional[str], code: Optional[str], halved: bool) -> GroupInput:
    if group is None:
        raise ValueError("this check needs --group")
    return resolve_group(group, inputs, graph_spec=graph, code_spec=code, halved=halved, config=state.config)


def _graph_input(inputs: Inputs, graph: Optional[str], code: Optional[str], halved: bool = False) -> Graph:
    """The graph named by --graph, or else the coset graph of --code (its even half with --halved)."""
    if graph is not None:
        return resolve_graph(graph, inputs, config=state.config)
    if code is None:
        raise ValueError("this check needs --graph or --code")
    gamma = coset_graph(resolve_code(code, inputs), state.config)
    return halved_graphs(gamma)[0] if halved else gamma


def _check_rectagraph(g: Graph, base: int) -> CheckResult:
    result = is_rectagraph(g)
    details: Dict[str, Any] = {"reason": result.reason, "witness": result.witness}
    if result:
        profile = distance_profile(g, base, max_distance=3)
        details["a2"] = profile.a_values[2] if profile.depth >= 2 else []
        details["c3"] = profile.c_values[3] if profile.depth >= 3 else []
    return passed("rectagraph", bool(result), **details)


def _check_reconstruct(g: Graph, base: int, expected_spec: Optional[str], code_out: Optional[Path], inputs: Inputs) -> CheckResult:
    expected = resolve_code(expected_spec, inputs, "expected_code") if expected_spec is not None else None
    order = None
    if expected is not None and base == 0 and sorted(set(expected.column_syndromes)) == [int(v) for v in g.neighbors(0)]:
        order = list(expected.column_syndromes)
    report = kernel_report(build_covering(g, base, neighbor_order=order, config=state.config), state.config)
    code = report.to_code()
    if code is not None and code_out is not None:
        write_code(code, code_out)
    ok = code is not None and bool(report.isomorphism_verified)
    details = report.model_dump(exclude={"fibre", "twist_data"} if report.linear else {"fibre"})
    if expected is not None:
        details["matches_expected"] = code == expected
        ok = ok and code == expected
    return passed("reconstruct-code", ok, **details)


@app.command()
def check(
    name: str = typer.Argument(..., help=f"One of: {', '.join(CHECKS)}"),
    graph: Optional[str] = typer.Option(None, "--graph", help="Edge-list file or family expression"),
    graph2: Optional[str] = typer.Option(None, "--graph2", help="Second graph for 'iso'"),
    code: Optional[str] = typer.Option(None, "--code", help="Code file or builtin name (zero:N, repetition:N, golay24, ...)"),
    group: Optional[str] = typer.Option(None, "--group", help="Registry name, S<n>, A<n>, a K4[2] group or a generator file"),
    base: int = typer.Option(0, "--base", min=0, help="Base vertex"),
    halved: bool = typer.Option(False, "--halved", help="With --code: act on the even half of the coset graph"),
    code_out: Optional[Path] = typer.Option(None, "--code-out", help="reconstruct-code: write the recovered code here"),
) -> None:
    """Run one check and print its report."""

    def body() -> int:
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}; known: {', '.join(CHECKS)}")
        report = new_report(["check", name], state.config)
        inputs = Inputs()
        start = time.perf_counter()
        result: CheckResult
        if name == "rectagraph":
            result = _check_rectagraph(_graph_input(inputs, graph, code, halved), base)
        elif name == "locally-triangular":
            n = is_locally_triangular(_graph_input(inputs, graph, code, halved))
            result = passed(name, n is not None, n=n)
        elif name == "locally-rank3":
            target = _group_input(inputs, group, graph, code, halved)
            certificate = locally_rank3_check(target.graph, target.group, state.config)
            result = passed(name, certificate.accepted, **certificate.model_dump())
        elif name == "two-arc-orbits":
            target = _group_input(inputs, group, graph, code, halved)
            result = passed(name, two_arc_orbit_check(target.graph, target.group, state.config))
        elif name in ("four-homogeneous", "natural-local-action", "five-transitive"):
            target = _group_input(inputs, group, graph, code, halved)
            local_check = {
                "four-homogeneous": four_homogeneous_local_check,
                "natural-local-action": natural_local_action_check,
                "five-transitive": five_transitive_local_check,
            }[name]
            result = passed(name, local_check(target.graph, base, target.group, state.config), base=base)
        elif name == "reconstruct-code":
            result = _check_reconstruct(_graph_input(inputs, graph, code), base, code, code_out, inputs)
        elif name == "iso":
            if graph is None or graph2 is None:
                raise ValueError("iso needs --graph and --graph2")
            g = resolve_graph(graph, inputs, "graph", state.config)
            h = resolve_graph(graph2, inputs, "graph2", state.config)
            mapping = isomorphic(g, h, state.config)
            verified = is_verified_isomorphism(g, h, mapping)
            result = passed(name, verified, mapping=None if mapping is None else [int(v) for v in mapping])
        else:
            if code is None:
                raise ValueError("code-info needs --code")
            result = _code_info(resolve_code(code, inputs))
        report.timings[name] = round(time.perf_counter() - start, 6)
        report.inputs = inputs.fingerprints
        report.results.append(result)
        return _finish(report)

    _guard(body)


def _code_info(c: LinearCode) -> CheckResult:
    details: Dict[str, Any] = describe(c, state.config)
    details["weight_distribution"] = [int(v) for v in weight_distribution(c, state.config)]
    details["self_dual"] = dual_code(c) == c
    if c.codimension <= state.config.limits.max_enumeration_dimension:
        details["covering_radius"] = coset_space(c, state.config).covering_radius()
    return passed("code-info", True, **details)


@app.command("code-info")
def code_info(code: str = typer.Argument(..., help="Code file or builtin name")) -> None:
    """Parameters, weight distribution and covering radius of a code."""

    def body() -> int:
        report = new_report(["code-info", code], state.config)
        inputs = Inputs()
        start = time.perf_counter()
        report.results.append(_code_info(resolve_code(code, inputs)))
        report.timings["code-info"] = round(time.perf_counter() - start, 6)
        report.inputs = inputs.fingerprints
        return _finish(report)

    _guard(body)


@app.command()
def diagram(
    graph: List[str] = typer.Argument(..., help="Edge-list file or family expression"),
    base: int = typer.Option(0, "--base", min=0, help="Base vertex"),
) -> None:
    """Print the distance distribution diagram of a connected graph as DOT."""

    def body() -> int:
        g = resolve_graph(" ".join(graph), Inputs(), config=state.config)
        _emit(distance_diagram(g, base))
        return EXIT_PASS

    _guard(body)


@app.command()
def reproduce(suite: str = typer.Argument("all", help=f"One of: {', '.join(SUITE_NAMES)}")) -> None:
    """Run a reproduction suite and report PASS/FAIL per case."""

    def body() -> int:
        cases = suite_cases(suite)
        report = new_report(["reproduce", suite], state.config)
        for result, seconds in run_cases(cases, state.config):
            report.results.append(result)
            report.timings[result.name] = round(seconds, 6)
        return _finish(report)

    _guard(body)


def main() -> None:
    """Console-script entry point."""
    app(prog_name="rectakit")


if __name__ == "__main__":
    main()
