"""Dependence-based complexity metrics over an architecture's graph.

All six metrics are primitive counts, never weighted combinations:

* M_T: number of classified arcs (the same port pair counts once per kind);
* M_G: M_T plus the sum of declared component complexities;
* M'_T: size of the transitive closure of the untyped arc relation;
* M'_G: M'_T plus the same complexity sum;
* M_S: the largest number of distinct ports any single port directly
  depends on, with every port achieving the maximum reported as a witness;
* M'_S: the same maximum over direct-plus-indirect dependences.

M_S and M'_S count depended-upon *ports*, so they use the untyped relation;
a dependence on one port through two kinds is still one port.
"""

from dataclasses import dataclass
from typing import Sequence

from .adg import ADG, Relation, build_adg, transitive_closure, untyped
from .dependence import DependenceKind
from .model import Architecture


@dataclass(frozen=True)
class MetricsReport:
    """All six metric values plus the per-kind arc breakdown and tie sets."""

    m_t: int
    m_t_by_kind: dict[str, int]  # keys shared, flow, constrained, always all three
    m_g: int
    m_t_star: int
    m_g_star: int
    m_s: int
    m_s_witnesses: tuple[str, ...]
    m_s_star: int
    m_s_star_witnesses: tuple[str, ...]


def m_total(adg: ADG) -> int:
    """Total complexity: the number of classified dependence arcs."""
    return len(adg.arcs)


def m_global(adg: ADG, complexities: Sequence[int]) -> int:
    """Global complexity: arc count plus declared component complexities."""
    return m_total(adg) + sum(complexities)


def m_total_star(adg: ADG) -> int:
    """Total complexity including indirect dependences: closure size."""
    return len(transitive_closure(untyped(adg)))


def m_global_star(adg: ADG, complexities: Sequence[int]) -> int:
    """Global complexity including indirect dependences. The declared
    complexity of each component is used unchanged."""
    return m_total_star(adg) + sum(complexities)


def _max_fanout(adg: ADG, relation: Relation) -> tuple[int, tuple[str, ...]]:
    if not adg.vertices:
        return 0, ()
    counts = dict.fromkeys(adg.vertices, 0)
    for source, _ in relation:
        counts[source] += 1
    best = max(counts.values())
    return best, tuple(vertex for vertex in adg.vertices if counts[vertex] == best)


def m_most_affected(adg: ADG) -> tuple[int, tuple[str, ...]]:
    """Largest direct dependence fan-out over all port vertices, with every
    argmax vertex as a witness (all vertices when there are no arcs)."""
    return _max_fanout(adg, untyped(adg))


def m_most_affected_star(adg: ADG) -> tuple[int, tuple[str, ...]]:
    """Largest direct-plus-indirect dependence fan-out, same witness rules."""
    return _max_fanout(adg, transitive_closure(untyped(adg)))


def report_from_adg(adg: ADG, complexities: Sequence[int]) -> MetricsReport:
    """Fill a full report from an already-built graph."""
    relation = untyped(adg)
    closure = transitive_closure(relation)
    by_kind = {kind.value: 0 for kind in DependenceKind}
    for arc in adg.arcs:
        by_kind[arc.kind.value] += 1
    total_complexity = sum(complexities)
    m_s, m_s_witnesses = _max_fanout(adg, relation)
    m_s_star, m_s_star_witnesses = _max_fanout(adg, closure)
    return MetricsReport(
        m_t=len(adg.arcs),
        m_t_by_kind=by_kind,
        m_g=len(adg.arcs) + total_complexity,
        m_t_star=len(closure),
        m_g_star=len(closure) + total_complexity,
        m_s=m_s,
        m_s_witnesses=m_s_witnesses,
        m_s_star=m_s_star,
        m_s_star_witnesses=m_s_star_witnesses,
    )


def compute_report(arch: Architecture, default_internal: bool = True) -> MetricsReport:
    """Build the dependence graph once and compute every metric."""
    adg = build_adg(arch, default_internal)
    return report_from_adg(adg, [comp.complexity for comp in arch.components])
