"""Render metric summaries as PNG figures.

Figures are a presentation convenience layered on top of the report; the
numbers in them are exactly the ones the text and JSON renderers print.
The Agg canvas is used directly so rendering stays headless and leaves no
global pyplot state behind.
"""

import os

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .metrics import MetricsReport

_DPI = 150


def metrics_figure(report: MetricsReport, architecture: str) -> Figure:
    """Bar chart of the six metric values for one architecture."""
    labels = ["M_T", "M_G", "M'_T", "M'_G", "M_S", "M'_S"]
    values = [
        report.m_t,
        report.m_g,
        report.m_t_star,
        report.m_g_star,
        report.m_s,
        report.m_s_star,
    ]
    fig = Figure(figsize=(6.4, 4.0), dpi=_DPI)
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(111)
    bars = ax.bar(labels, values, color="#4878a8")
    ax.bar_label(bars, padding=2)
    ax.set_ylabel("value")
    ax.set_title(f"Dependence metrics: {architecture}")
    ax.margins(y=0.15)
    fig.tight_layout()
    return fig


def kind_breakdown_figure(report: MetricsReport, architecture: str) -> Figure:
    """Bar chart of direct arc counts split by dependence kind."""
    kinds = list(report.m_t_by_kind)
    values = [report.m_t_by_kind[kind] for kind in kinds]
    fig = Figure(figsize=(4.8, 3.6), dpi=_DPI)
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(111)
    bars = ax.bar(kinds, values, color=["#a85048", "#4878a8", "#78a848"])
    ax.bar_label(bars, padding=2)
    ax.set_ylabel("direct arcs")
    ax.set_title(f"Dependence kinds: {architecture}")
    ax.margins(y=0.15)
    fig.tight_layout()
    return fig


def save_report_figures(report: MetricsReport, architecture: str, directory: str) -> list[str]:
    """Write both summary figures into directory, creating it if needed.

    Returns the paths written, in a fixed order.
    """
    os.makedirs(directory, exist_ok=True)
    paths = []
    for name, fig in (
        ("metrics.png", metrics_figure(report, architecture)),
        ("dependence_kinds.png", kind_breakdown_figure(report, architecture)),
    ):
        path = os.path.join(directory, name)
        fig.savefig(path)
        paths.append(path)
    return paths
