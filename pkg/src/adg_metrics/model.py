"""Typed model of a MiniADL architecture description.

Everything dependence inference needs lives here: components with directed
ports, declared resources, attachment / ordering / exclusion / internal-flow
declarations, and a declared per-component complexity count. All values are
immutable after construction and safe to share between threads.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, NamedTuple


class Pos(NamedTuple):
    """1-based source position; (0, 0) marks nodes built by hand."""

    line: int = 0
    column: int = 0


UNKNOWN_POS = Pos(0, 0)


class Direction(Enum):
    """Port direction. An inout port acts as both wherever direction matters."""

    IN = "in"
    OUT = "out"
    INOUT = "inout"

    @property
    def is_in(self) -> bool:
        return self is not Direction.OUT

    @property
    def is_out(self) -> bool:
        return self is not Direction.IN


class AccessMode(Enum):
    READS = "reads"
    WRITES = "writes"


@dataclass(frozen=True)
class Port:
    name: str
    direction: Direction
    pos: Pos = field(default=UNKNOWN_POS, compare=False, repr=False)


@dataclass(frozen=True)
class ResourceAccess:
    """One `reads`/`writes` declaration: the owning component touches a
    resource through one of its own ports."""

    resource: str
    mode: AccessMode
    via: str  # port name of the owning component
    pos: Pos = field(default=UNKNOWN_POS, compare=False, repr=False)
    via_pos: Pos = field(default=UNKNOWN_POS, compare=False, repr=False)


@dataclass(frozen=True)
class Component:
    name: str
    ports: tuple[Port, ...] = ()
    complexity: int = 0  # declared code-level complexity, 0 when undeclared
    accesses: tuple[ResourceAccess, ...] = ()
    pos: Pos = field(default=UNKNOWN_POS, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "ports", tuple(self.ports))
        object.__setattr__(self, "accesses", tuple(self.accesses))
        if self.complexity < 0:
            raise ValueError(f"complexity of component '{self.name}' must be non-negative")

    def port(self, name: str) -> Port | None:
        for port in self.ports:
            if port.name == name:
                return port
        return None


@dataclass(frozen=True)
class PortRef:
    """A `Component.port` reference as written in a declaration."""

    component: str
    port: str
    pos: Pos = field(default=UNKNOWN_POS, compare=False, repr=False)

    def __str__(self) -> str:
        return f"{self.component}.{self.port}"


@dataclass(frozen=True)
class Attachment:
    """`attach src -> dst` (or `before src -> dst`): information flows, or
    control passes, from src to dst."""

    src: PortRef
    dst: PortRef


@dataclass(frozen=True)
class ExclusivePair:
    """`exclusive a, b`: the two ports can never be active at the same time."""

    a: PortRef
    b: PortRef


@dataclass(frozen=True)
class InternalFlow:
    """`internal C.out_port <- C.in_port`: inside one component, the named
    output is computed from the named input. Declaring any internal flow for
    a component replaces the default all-pairs assumption for it."""

    component: str
    out_port: str
    in_port: str
    out_pos: Pos = field(default=UNKNOWN_POS, compare=False, repr=False)
    in_pos: Pos = field(default=UNKNOWN_POS, compare=False, repr=False)


@dataclass(frozen=True)
class Architecture:
    name: str
    components: tuple[Component, ...] = ()
    resources: tuple[str, ...] = ()  # declaration order, duplicates collapsed
    attachments: tuple[Attachment, ...] = ()
    befores: tuple[Attachment, ...] = ()
    exclusives: tuple[ExclusivePair, ...] = ()
    internal_flows: tuple[InternalFlow, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "resources", _unique(self.resources))
        object.__setattr__(self, "attachments", tuple(self.attachments))
        object.__setattr__(self, "befores", tuple(self.befores))
        object.__setattr__(self, "exclusives", tuple(self.exclusives))
        object.__setattr__(self, "internal_flows", tuple(self.internal_flows))

    def component(self, name: str) -> Component | None:
        for comp in self.components:
            if comp.name == name:
                return comp
        return None


def _unique(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(dict.fromkeys(names))


@dataclass(frozen=True)
class Violation:
    """One semantic problem found by validate(); data, not an exception."""

    message: str
    identifier: str
    pos: Pos

    def __str__(self) -> str:
        return f"{self.pos.line}:{self.pos.column}: {self.message}"


@dataclass(frozen=True)
class ValidationOutcome:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate(arch: Architecture) -> ValidationOutcome:
    """Check every cross-reference and direction rule of the model.

    Returns all violations in a deterministic order: components (with their
    accesses) first, then attachments, befores, exclusives, and internal
    flows, each walked in declaration order.
    """
    violations: list[Violation] = []
    declared_resources = set(arch.resources)
    components: dict[str, Component] = {}

    for comp in arch.components:
        if comp.name in components:
            violations.append(
                Violation(f"duplicate component name '{comp.name}'", comp.name, comp.pos)
            )
        else:
            components[comp.name] = comp
        seen_ports: set[str] = set()
        for port in comp.ports:
            if port.name in seen_ports:
                violations.append(
                    Violation(
                        f"duplicate port name '{port.name}' in component '{comp.name}'",
                        f"{comp.name}.{port.name}",
                        port.pos,
                    )
                )
            else:
                seen_ports.add(port.name)
        for access in comp.accesses:
            if access.resource not in declared_resources:
                violations.append(
                    Violation(
                        f"undeclared resource '{access.resource}'", access.resource, access.pos
                    )
                )
            if comp.port(access.via) is None:
                violations.append(
                    Violation(
                        f"'via' references unknown port '{access.via}'"
                        f" of component '{comp.name}'",
                        f"{comp.name}.{access.via}",
                        access.via_pos,
                    )
                )

    def resolve(ref: PortRef) -> Port | None:
        comp = components.get(ref.component)
        if comp is None:
            violations.append(
                Violation(f"unknown component '{ref.component}'", ref.component, ref.pos)
            )
            return None
        port = comp.port(ref.port)
        if port is None:
            violations.append(
                Violation(
                    f"unknown port '{ref.port}' of component '{ref.component}'",
                    str(ref),
                    ref.pos,
                )
            )
        return port

    def check_attachment(att: Attachment, label: str) -> None:
        src = resolve(att.src)
        dst = resolve(att.dst)
        if src is not None and dst is not None and att.src == att.dst:
            violations.append(
                Violation(f"{label} connects port '{att.src}' to itself", str(att.src), att.src.pos)
            )
        if src is not None and not src.direction.is_out:
            violations.append(
                Violation(
                    f"{label} source '{att.src}' is not an out or inout port",
                    str(att.src),
                    att.src.pos,
                )
            )
        if dst is not None and not dst.direction.is_in:
            violations.append(
                Violation(
                    f"{label} target '{att.dst}' is not an in or inout port",
                    str(att.dst),
                    att.dst.pos,
                )
            )

    for att in arch.attachments:
        check_attachment(att, "attach")
    for att in arch.befores:
        check_attachment(att, "before")

    for pair in arch.exclusives:
        a = resolve(pair.a)
        b = resolve(pair.b)
        if a is not None and b is not None and pair.a == pair.b:
            violations.append(
                Violation(f"exclusive pair names port '{pair.a}' twice", str(pair.a), pair.a.pos)
            )

    for flow in arch.internal_flows:
        comp = components.get(flow.component)
        if comp is None:
            violations.append(
                Violation(f"unknown component '{flow.component}'", flow.component, flow.out_pos)
            )
            continue
        out_port = comp.port(flow.out_port)
        in_port = comp.port(flow.in_port)
        if out_port is None:
            violations.append(
                Violation(
                    f"unknown port '{flow.out_port}' of component '{flow.component}'",
                    f"{flow.component}.{flow.out_port}",
                    flow.out_pos,
                )
            )
        if in_port is None:
            violations.append(
                Violation(
                    f"unknown port '{flow.in_port}' of component '{flow.component}'",
                    f"{flow.component}.{flow.in_port}",
                    flow.in_pos,
                )
            )
        if out_port is not None and in_port is not None and flow.out_port == flow.in_port:
            violations.append(
                Violation(
                    f"internal flow connects port '{flow.component}.{flow.out_port}' to itself",
                    f"{flow.component}.{flow.out_port}",
                    flow.out_pos,
                )
            )
        if out_port is not None and not out_port.direction.is_out:
            violations.append(
                Violation(
                    f"internal flow out port '{flow.component}.{flow.out_port}'"
                    " is not an out or inout port",
                    f"{flow.component}.{flow.out_port}",
                    flow.out_pos,
                )
            )
        if in_port is not None and not in_port.direction.is_in:
            violations.append(
                Violation(
                    f"internal flow in port '{flow.component}.{flow.in_port}'"
                    " is not an in or inout port",
                    f"{flow.component}.{flow.in_port}",
                    flow.in_pos,
                )
            )

    return ValidationOutcome(tuple(violations))


def pretty_print(arch: Architecture) -> str:
    """Emit canonical MiniADL text for a valid architecture.

    Declarations are grouped by kind and kept in declaration order; parsing
    the output reproduces the model exactly, and pretty-printing that parse
    reproduces the same bytes (the canonical form is a fixed point).
    """
    lines = [f"architecture {arch.name} {{"]
    for comp in arch.components:
        lines.append(f"  component {comp.name} {{")
        for port in comp.ports:
            lines.append(f"    port {port.name} : {port.direction.value};")
        if comp.complexity:
            lines.append(f"    complexity {comp.complexity};")
        for access in comp.accesses:
            lines.append(f"    {access.mode.value} {access.resource} via {access.via};")
        lines.append("  }")
    for resource in arch.resources:
        lines.append(f"  resource {resource};")
    for att in arch.attachments:
        lines.append(f"  attach {att.src} -> {att.dst};")
    for att in arch.befores:
        lines.append(f"  before {att.src} -> {att.dst};")
    for pair in arch.exclusives:
        lines.append(f"  exclusive {pair.a}, {pair.b};")
    for flow in arch.internal_flows:
        lines.append(
            f"  internal {flow.component}.{flow.out_port} <- {flow.component}.{flow.in_port};"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
