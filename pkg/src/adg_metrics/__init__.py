"""Dependence-graph complexity metrics for MiniADL architecture descriptions.

Typical use:

    from adg_metrics import parse, build_adg, compute_report

    arch = parse(source_text)
    report = compute_report(arch)
"""

from .adg import (
    ADG,
    build_adg,
    reachable_oracle,
    select_from,
    to_dot,
    transitive_closure,
    untyped,
)
from .cli import CliConfig, main, render_json, render_text, run
from .dependence import (
    Arc,
    DependenceKind,
    infer_all,
    infer_constrained,
    infer_flow,
    infer_shared,
)
from .metrics import (
    MetricsReport,
    compute_report,
    m_global,
    m_global_star,
    m_most_affected,
    m_most_affected_star,
    m_total,
    m_total_star,
    report_from_adg,
)
from .model import (
    AccessMode,
    Architecture,
    Attachment,
    Component,
    Direction,
    ExclusivePair,
    InternalFlow,
    Port,
    PortRef,
    Pos,
    ResourceAccess,
    ValidationOutcome,
    Violation,
    pretty_print,
    validate,
)
from .parser import ParseError, Token, parse, tokenize

__version__ = "0.1.0"

__all__ = [
    "ADG",
    "AccessMode",
    "Arc",
    "Architecture",
    "Attachment",
    "CliConfig",
    "Component",
    "DependenceKind",
    "Direction",
    "ExclusivePair",
    "InternalFlow",
    "MetricsReport",
    "ParseError",
    "Port",
    "PortRef",
    "Pos",
    "ResourceAccess",
    "Token",
    "ValidationOutcome",
    "Violation",
    "build_adg",
    "compute_report",
    "infer_all",
    "infer_constrained",
    "infer_flow",
    "infer_shared",
    "m_global",
    "m_global_star",
    "m_most_affected",
    "m_most_affected_star",
    "m_total",
    "m_total_star",
    "main",
    "parse",
    "pretty_print",
    "reachable_oracle",
    "render_json",
    "render_text",
    "report_from_adg",
    "run",
    "select_from",
    "to_dot",
    "tokenize",
    "transitive_closure",
    "untyped",
    "validate",
    "__version__",
]
