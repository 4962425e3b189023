"""Infer the classified port-to-port dependences of an architecture.

Direction convention, fixed for the whole library: an arc (source, target)
means *source depends on target*. A consumer therefore points at its
producer, and a successor at its prerequisite.

Three kinds of dependence are inferred:

* flow: from attachments, `before` orderings, and intra-component flows
  (by default every out-capable port of a component depends on every
  in-capable one; explicit `internal` declarations replace the default for
  their component);
* shared: both directions between every pair of ports that access the same
  resource, whatever the access modes;
* constrained: both directions between mutually exclusive ports.

Arcs are set-unique on (source, target, kind), so repeating a declaration
never adds anything, while the same port pair may carry arcs of several
kinds at once.
"""

from dataclasses import dataclass
from enum import Enum

from .model import Architecture, PortRef


class DependenceKind(Enum):
    SHARED = "shared"
    FLOW = "flow"
    CONSTRAINED = "constrained"


KIND_ORDER: dict[DependenceKind, int] = {kind: i for i, kind in enumerate(DependenceKind)}


@dataclass(frozen=True)
class Arc:
    """One classified dependence between two port vertices."""

    source: str  # the vertex that depends, as "Component.port"
    target: str  # the vertex depended upon
    kind: DependenceKind

    def __post_init__(self) -> None:
        if self.source == self.target:
            raise ValueError(f"dependence arc from '{self.source}' to itself")


def _vertex(ref: PortRef) -> str:
    return f"{ref.component}.{ref.port}"


def infer_flow(arch: Architecture, default_internal: bool = True) -> frozenset[Arc]:
    """Flow arcs: consumers depend on producers, successors on prerequisites,
    and outputs on the inputs they are computed from."""
    arcs: set[Arc] = set()
    for att in (*arch.attachments, *arch.befores):
        arcs.add(Arc(_vertex(att.dst), _vertex(att.src), DependenceKind.FLOW))
    for comp in arch.components:
        declared = [flow for flow in arch.internal_flows if flow.component == comp.name]
        if declared:
            for flow in declared:
                arcs.add(
                    Arc(
                        f"{comp.name}.{flow.out_port}",
                        f"{comp.name}.{flow.in_port}",
                        DependenceKind.FLOW,
                    )
                )
        elif default_internal:
            for out_port in comp.ports:
                if not out_port.direction.is_out:
                    continue
                for in_port in comp.ports:
                    if in_port.direction.is_in and in_port.name != out_port.name:
                        arcs.add(
                            Arc(
                                f"{comp.name}.{out_port.name}",
                                f"{comp.name}.{in_port.name}",
                                DependenceKind.FLOW,
                            )
                        )
    return frozenset(arcs)


def infer_shared(arch: Architecture) -> frozenset[Arc]:
    """Shared arcs: both directions between every pair of distinct ports
    that access the same resource (any combination of modes)."""
    users: dict[str, set[str]] = {}
    for comp in arch.components:
        for access in comp.accesses:
            users.setdefault(access.resource, set()).add(f"{comp.name}.{access.via}")
    arcs: set[Arc] = set()
    for vertices in users.values():
        for a in vertices:
            for b in vertices:
                if a != b:
                    arcs.add(Arc(a, b, DependenceKind.SHARED))
    return frozenset(arcs)


def infer_constrained(arch: Architecture) -> frozenset[Arc]:
    """Constrained arcs: both directions for every exclusive pair."""
    arcs: set[Arc] = set()
    for pair in arch.exclusives:
        a = _vertex(pair.a)
        b = _vertex(pair.b)
        arcs.add(Arc(a, b, DependenceKind.CONSTRAINED))
        arcs.add(Arc(b, a, DependenceKind.CONSTRAINED))
    return frozenset(arcs)


def infer_all(arch: Architecture, default_internal: bool = True) -> frozenset[Arc]:
    """Union of the three inferences.

    With default_internal off, components without explicit `internal`
    declarations contribute no intra-component flow arcs; explicit
    declarations always apply.
    """
    return (
        infer_flow(arch, default_internal) | infer_shared(arch) | infer_constrained(arch)
    )
