"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from adg_metrics.model import (
    AccessMode,
    Architecture,
    Attachment,
    Component,
    Direction,
    ExclusivePair,
    InternalFlow,
    Port,
    PortRef,
    ResourceAccess,
)
from adg_metrics.parser import KEYWORDS

idents = st.from_regex(r"[A-Za-z_][A-Za-z0-9_]{0,7}", fullmatch=True).filter(
    lambda s: s not in KEYWORDS
)

directions = st.sampled_from((Direction.IN, Direction.OUT, Direction.INOUT))


@st.composite
def architectures(draw, max_components: int = 5, max_ports: int = 3) -> Architecture:
    """Valid architectures with freely drawn identifiers and structure."""
    comp_names = draw(
        st.lists(idents, min_size=0, max_size=max_components, unique=True)
    )
    ports_by_comp: dict[str, tuple[Port, ...]] = {}
    complexities: dict[str, int] = {}
    for cname in comp_names:
        port_names = draw(st.lists(idents, max_size=max_ports, unique=True))
        ports_by_comp[cname] = tuple(
            Port(pname, draw(directions)) for pname in port_names
        )
        complexities[cname] = draw(st.integers(0, 50))
    resources = draw(st.lists(idents, max_size=2, unique=True))

    vertices = [
        (cname, port) for cname in comp_names for port in ports_by_comp[cname]
    ]
    out_caps = [(c, p.name) for c, p in vertices if p.direction.is_out]
    in_caps = [(c, p.name) for c, p in vertices if p.direction.is_in]

    def ref(pair: tuple[str, str]) -> PortRef:
        return PortRef(pair[0], pair[1])

    links: list[Attachment] = []
    befores: list[Attachment] = []
    legal_links = [
        (src, dst) for src in out_caps for dst in in_caps if src != dst
    ]
    if legal_links:
        for src, dst in draw(
            st.lists(st.sampled_from(legal_links), max_size=5)
        ):
            bucket = links if draw(st.booleans()) else befores
            bucket.append(Attachment(ref(src), ref(dst)))

    exclusives: list[ExclusivePair] = []
    names = [(c, p.name) for c, p in vertices]
    if len(names) >= 2:
        distinct_pairs = [
            (a, b) for i, a in enumerate(names) for b in names[i + 1 :]
        ]
        for a, b in draw(st.lists(st.sampled_from(distinct_pairs), max_size=3)):
            exclusives.append(ExclusivePair(ref(a), ref(b)))

    accesses: dict[str, list[ResourceAccess]] = {c: [] for c in comp_names}
    if resources and names:
        for _ in range(draw(st.integers(0, 4))):
            cname, pname = draw(st.sampled_from(names))
            accesses[cname].append(
                ResourceAccess(
                    draw(st.sampled_from(resources)),
                    draw(st.sampled_from((AccessMode.READS, AccessMode.WRITES))),
                    pname,
                )
            )

    internals: list[InternalFlow] = []
    for cname in comp_names:
        ports = ports_by_comp[cname]
        pairs = [
            (o.name, i.name)
            for o in ports
            if o.direction.is_out
            for i in ports
            if i.direction.is_in and o.name != i.name
        ]
        if pairs and draw(st.booleans()):
            for o, i in draw(
                st.lists(st.sampled_from(pairs), max_size=len(pairs), unique=True)
            ):
                internals.append(InternalFlow(cname, o, i))

    return Architecture(
        name=draw(idents),
        components=tuple(
            Component(
                cname,
                ports_by_comp[cname],
                complexity=complexities[cname],
                accesses=tuple(accesses[cname]),
            )
            for cname in comp_names
        ),
        resources=tuple(resources),
        attachments=tuple(links),
        befores=tuple(befores),
        exclusives=tuple(exclusives),
        internal_flows=tuple(internals),
    )


@st.composite
def relations(draw, max_vertices: int = 6) -> set[tuple[str, str]]:
    """Arbitrary binary relations over a small vertex alphabet."""
    n = draw(st.integers(0, max_vertices))
    universe = [f"v{i}" for i in range(n)]
    if not universe:
        return set()
    pairs = st.tuples(st.sampled_from(universe), st.sampled_from(universe))
    return set(draw(st.lists(pairs, max_size=12)))
