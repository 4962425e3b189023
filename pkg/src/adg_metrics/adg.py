"""The architectural dependence graph and its relational operators.

Vertices are qualified port names ("Component.port") in canonical order:
component declaration order, then port declaration order. A Relation is a
plain frozenset of ordered vertex pairs; transitive closure, selection, and
the independent reachability oracle all operate on that representation.
"""

from dataclasses import dataclass

from .dependence import KIND_ORDER, Arc, infer_all
from .model import Architecture

Pair = tuple[str, str]
Relation = frozenset[Pair]


@dataclass(frozen=True)
class ADG:
    """Arc-classified digraph over the port vertices of one architecture."""

    name: str
    vertices: tuple[str, ...]
    arcs: frozenset[Arc]
    component_of: dict[str, str]

    def vertex_index(self) -> dict[str, int]:
        return {vertex: i for i, vertex in enumerate(self.vertices)}

    def sorted_arcs(self) -> list[Arc]:
        """Arcs in canonical order: source, then target, then kind."""
        index = self.vertex_index()
        return sorted(
            self.arcs, key=lambda arc: (index[arc.source], index[arc.target], KIND_ORDER[arc.kind])
        )


def build_adg(arch: Architecture, default_internal: bool = True) -> ADG:
    """Construct the dependence graph of a valid architecture."""
    vertices = tuple(
        f"{comp.name}.{port.name}" for comp in arch.components for port in comp.ports
    )
    component_of = {
        f"{comp.name}.{port.name}": comp.name for comp in arch.components for port in comp.ports
    }
    return ADG(arch.name, vertices, infer_all(arch, default_internal), component_of)


def untyped(adg: ADG) -> Relation:
    """Project the classified arc set to a plain binary relation; arcs that
    differ only in kind collapse to one pair."""
    return frozenset((arc.source, arc.target) for arc in adg.arcs)


def transitive_closure(relation: Relation) -> Relation:
    """Smallest transitive relation containing the input.

    Warshall's algorithm over a dense bit matrix: row i is an int whose j-th
    bit says vertex i reaches vertex j. Cycles produce reflexive pairs, as
    standard closure semantics require.
    """
    vertices = sorted({u for u, _ in relation} | {v for _, v in relation})
    index = {vertex: i for i, vertex in enumerate(vertices)}
    rows = [0] * len(vertices)
    for u, v in relation:
        rows[index[u]] |= 1 << index[v]
    for k in range(len(vertices)):
        bit = 1 << k
        for i in range(len(vertices)):
            if rows[i] & bit:
                rows[i] |= rows[k]
    return frozenset(
        (vertices[i], vertices[j])
        for i in range(len(vertices))
        for j in range(len(vertices))
        if rows[i] >> j & 1
    )


def select_from(relation: Relation, vertex: str) -> Relation:
    """Pairs of the relation whose first element is the given vertex: the
    direct dependences of that vertex."""
    return frozenset(pair for pair in relation if pair[0] == vertex)


def reachable_oracle(adg: ADG, vertex: str) -> frozenset[str]:
    """Vertices reachable from the given one by at least one arc, kind
    ignored.

    Depth-first search, written independently of transitive_closure so the
    two routes can be checked against each other.
    """
    if vertex not in adg.vertices:
        raise ValueError(f"unknown vertex '{vertex}'")
    successors: dict[str, list[str]] = {}
    for arc in adg.arcs:
        successors.setdefault(arc.source, []).append(arc.target)
    reached: set[str] = set()
    stack = [vertex]
    while stack:
        current = stack.pop()
        for nxt in successors.get(current, ()):
            if nxt not in reached:
                reached.add(nxt)
                stack.append(nxt)
    return frozenset(reached)


_EDGE_STYLE = {"flow": "solid", "shared": "dashed", "constrained": "dotted"}


def to_dot(adg: ADG) -> str:
    """Render the graph as a DOT digraph, byte-deterministic for equal input.

    One cluster per component that declares ports, one node per port vertex,
    one labeled edge per arc (flow solid, shared dashed, constrained dotted),
    everything in canonical order.
    """
    lines = [f'digraph "{adg.name}" {{']
    seen: dict[str, list[str]] = {}
    for vertex in adg.vertices:
        seen.setdefault(adg.component_of[vertex], []).append(vertex)
    for component, vertices in seen.items():
        lines.append(f'  subgraph "cluster_{component}" {{')
        lines.append(f'    label = "{component}";')
        for vertex in vertices:
            lines.append(f'    "{vertex}";')
        lines.append("  }")
    for arc in adg.sorted_arcs():
        kind = arc.kind.value
        lines.append(
            f'  "{arc.source}" -> "{arc.target}" [label="{kind}", style={_EDGE_STYLE[kind]}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
