"""Command-line front end: parse, analyze, report.

Exit codes: 0 success, 1 parse or semantic error, 2 flag usage error,
3 I/O error. Diagnostics for code 1 follow the `path:line:col: error:`
convention so editors and CI annotators can jump to the offending token.

Both renderers are byte-deterministic: same input, same bytes. JSON keys
are emitted in a pinned order with two-space indentation; arrays follow
canonical vertex/arc order.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from .adg import ADG, build_adg, to_dot, transitive_closure, untyped
from .metrics import MetricsReport, report_from_adg
from .parser import ParseError, parse

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_USAGE = 2
EXIT_IO = 3


@dataclass(frozen=True)
class CliConfig:
    """Everything one `analyze` invocation needs."""

    input_path: str
    output_format: str = "text"  # "text" or "json"
    dot_path: str | None = None
    default_internal: bool = True
    show_closure: bool = False
    figures_dir: str | None = None


def _closure_pairs(adg: ADG) -> list[tuple[str, str]]:
    """Closure pairs in canonical order: source index, then target index."""
    index = adg.vertex_index()
    return sorted(
        transitive_closure(untyped(adg)),
        key=lambda pair: (index[pair[0]], index[pair[1]]),
    )


def render_json(report: MetricsReport, adg: ADG, config: CliConfig) -> str:
    payload: dict[str, object] = {
        "architecture": adg.name,
        "vertices": list(adg.vertices),
        "arcs": [
            {"from": arc.source, "to": arc.target, "kind": arc.kind.value}
            for arc in adg.sorted_arcs()
        ],
    }
    if config.show_closure:
        payload["closure"] = [
            {"from": source, "to": target} for source, target in _closure_pairs(adg)
        ]
    payload["metrics"] = {
        "m_t": report.m_t,
        "m_t_by_kind": dict(report.m_t_by_kind),
        "m_g": report.m_g,
        "m_t_star": report.m_t_star,
        "m_g_star": report.m_g_star,
        "m_s": report.m_s,
        "m_s_witnesses": list(report.m_s_witnesses),
        "m_s_star": report.m_s_star,
        "m_s_star_witnesses": list(report.m_s_star_witnesses),
    }
    return json.dumps(payload, indent=2) + "\n"


def _witnesses(vertices: tuple[str, ...]) -> str:
    return ", ".join(vertices) if vertices else "none"


def render_text(report: MetricsReport, adg: ADG, config: CliConfig) -> str:
    by_kind = report.m_t_by_kind
    lines = [
        f"architecture: {adg.name}",
        f"vertices: {len(adg.vertices)}",
        "arcs by kind: shared = {shared}, flow = {flow}, constrained = {constrained}".format(
            **by_kind
        ),
        f"M_T = {report.m_t}",
        f"M_G = {report.m_g}",
        f"M'_T = {report.m_t_star}",
        f"M'_G = {report.m_g_star}",
        f"M_S = {report.m_s} (witnesses: {_witnesses(report.m_s_witnesses)})",
        f"M'_S = {report.m_s_star} (witnesses: {_witnesses(report.m_s_star_witnesses)})",
    ]
    if config.show_closure:
        pairs = _closure_pairs(adg)
        lines.append(f"closure (size {len(pairs)}):")
        lines.extend(f"  {source} -> {target}" for source, target in pairs)
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adg-metrics",
        description="Dependence-graph complexity metrics for MiniADL architectures.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    analyze = commands.add_parser(
        "analyze", help="analyze one MiniADL file and print a report"
    )
    analyze.add_argument("path", help="MiniADL source file")
    fmt = analyze.add_mutually_exclusive_group()
    fmt.add_argument(
        "--json",
        dest="output_format",
        action="store_const",
        const="json",
        help="emit the JSON report",
    )
    fmt.add_argument(
        "--text",
        dest="output_format",
        action="store_const",
        const="text",
        help="emit the text report (default)",
    )
    analyze.add_argument("--dot", metavar="PATH", help="also write a DOT export here")
    analyze.add_argument(
        "--no-default-internal",
        dest="default_internal",
        action="store_false",
        help="suppress implied out-to-in flow inside components without internal declarations",
    )
    analyze.add_argument(
        "--closure",
        dest="show_closure",
        action="store_true",
        help="include the transitive-closure pair list in the report",
    )
    analyze.add_argument(
        "--figures",
        metavar="DIR",
        help="also render metric summary figures (PNG) into this directory",
    )
    analyze.set_defaults(output_format="text")
    return parser


def _analyze(config: CliConfig) -> int:
    try:
        with open(config.input_path, "rb") as handle:
            source = handle.read()
    except OSError as exc:
        print(f"adg-metrics: error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        arch = parse(source)
    except ParseError as exc:
        print(
            f"{config.input_path}:{exc.line}:{exc.column}: error: {exc.message}",
            file=sys.stderr,
        )
        return EXIT_PARSE
    adg = build_adg(arch, config.default_internal)
    report = report_from_adg(adg, [comp.complexity for comp in arch.components])
    if config.output_format == "json":
        rendered = render_json(report, adg, config)
    else:
        rendered = render_text(report, adg, config)
    sys.stdout.write(rendered)
    try:
        if config.dot_path is not None:
            with open(config.dot_path, "w", encoding="utf-8") as handle:
                handle.write(to_dot(adg))
        if config.figures_dir is not None:
            # imported on demand so plain runs never pay for matplotlib
            from .figures import save_report_figures

            save_report_figures(report, adg.name, config.figures_dir)
    except OSError as exc:
        print(f"adg-metrics: error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def run(argv: list[str]) -> int:
    """Run the CLI on argv (excluding the program name); return an exit code."""
    parser = _build_parser()
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits on usage errors and --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    config = CliConfig(
        input_path=namespace.path,
        output_format=namespace.output_format,
        dot_path=namespace.dot,
        default_internal=namespace.default_internal,
        show_closure=namespace.show_closure,
        figures_dir=namespace.figures,
    )
    return _analyze(config)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
