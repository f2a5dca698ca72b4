"""Dynkin diagrams of reductive groups and the per-colour smoothness condition.

A diagram is an undirected decorated graph: edges carry a multiplicity in
{1, 2, 3} and, when the multiplicity exceeds 1, a marker naming the endpoint
that is the long root.  That is the minimal data separating the B and C
series.  Components are recognized structurally (no template search) and
numbered in the Bourbaki convention:

* A_n   chain a1 - a2 - ... - an
* B_n   chain with a double edge at the end, the extreme root short
* C_n   chain with a double edge at the end, the extreme root long
* D_n   chain ending in a fork with two single nodes a_{n-1}, a_n
* E_6/7/8   chain a1 - a3 - a4 - ... with a2 attached to a4
* F_4   a1 - a2 => a3 - a4 (a2 long)
* G_2   a1 <= a2 triple edge (a1 short)

The rank-2 double-edge diagram is B2 and C2 at once; `recognize_type`
reports the lexicographically smaller family (B) unless the caller pins a
node that must come first, the case the "type A_n or C_n with alpha first"
colour condition needs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import (
    BadEdge,
    BadParabolic,
    UnknownColour,
    UnknownDiagram,
    UnknownNode,
    ValidationError,
)

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


@dataclass(frozen=True)
class DynkinEdge:
    a: str
    b: str
    multiplicity: int = 1
    long: str | None = None  # long-root endpoint, only for multiplicity > 1

    def ends(self) -> frozenset[str]:
        return frozenset((self.a, self.b))


@dataclass(frozen=True)
class DynkinData:
    """Decorated graph of simple roots plus a parabolic subset."""

    nodes: tuple[str, ...]
    edges: tuple[DynkinEdge, ...]
    torus_rank: int = 0
    parabolic: frozenset[str] = field(default_factory=frozenset)

    @property
    def colours(self) -> tuple[str, ...]:
        """Universal colour set S \\ I, in diagram order."""
        return tuple(n for n in self.nodes if n not in self.parabolic)


@dataclass(frozen=True)
class TypeLabel:
    """A family, rank, and Bourbaki numbering of one connected component."""

    family: str
    rank: int
    nodes_by_index: tuple[str, ...]  # position i holds the node numbered i+1

    @property
    def numbering(self) -> dict[str, int]:
        return {v: i + 1 for i, v in enumerate(self.nodes_by_index)}


def validate_diagram(nodes, edges, parabolic=(), torus_rank: int = 0) -> DynkinData:
    """Build a DynkinData, rejecting anything outside the A-G classification."""
    nodes = tuple(str(n) for n in nodes)
    if len(set(nodes)) != len(nodes):
        raise ValidationError("duplicate node identifiers")
    if torus_rank < 0:
        raise ValidationError("negative torus rank")
    node_set = set(nodes)

    norm_edges = []
    seen_pairs = set()
    for e in edges:
        if not isinstance(e, DynkinEdge):
            e = DynkinEdge(*e)
        if e.a not in node_set or e.b not in node_set:
            raise UnknownNode(f"edge endpoint not a node: {e.a!r}-{e.b!r}")
        if e.a == e.b:
            raise BadEdge(f"self-loop at {e.a!r}")
        if e.multiplicity not in (1, 2, 3):
            raise BadEdge(f"edge multiplicity {e.multiplicity} outside {{1,2,3}}")
        if e.multiplicity == 1 and e.long is not None:
            raise BadEdge("single edge carries a direction marker")
        if e.multiplicity > 1 and e.long not in (e.a, e.b):
            raise BadEdge("multiple edge must mark one endpoint as the long root")
        pair = e.ends()
        if pair in seen_pairs:
            raise BadEdge(f"duplicate edge {e.a!r}-{e.b!r}")
        seen_pairs.add(pair)
        a, b = sorted((e.a, e.b))
        norm_edges.append(DynkinEdge(a, b, e.multiplicity, e.long))

    parabolic = frozenset(str(n) for n in parabolic)
    if not parabolic <= node_set:
        raise BadParabolic(f"parabolic nodes outside the diagram: "
                           f"{sorted(parabolic - node_set)}")

    d = DynkinData(nodes, tuple(sorted(norm_edges, key=lambda e: (e.a, e.b))),
                   torus_rank, parabolic)
    for comp in components(d):
        if not component_labels(d, comp):
            raise UnknownDiagram(f"component {sorted(comp)} is not of finite type")
    return d


@lru_cache(maxsize=None)
def _adjacency(d: DynkinData) -> dict[str, tuple[str, ...]]:
    adj: dict[str, list[str]] = {n: [] for n in d.nodes}
    for e in d.edges:
        adj[e.a].append(e.b)
        adj[e.b].append(e.a)
    return {n: tuple(sorted(vs)) for n, vs in adj.items()}


@lru_cache(maxsize=None)
def _edge_lookup(d: DynkinData) -> dict[frozenset[str], DynkinEdge]:
    return {e.ends(): e for e in d.edges}


def _reachable(d: DynkinData, start: str, allowed: frozenset[str]) -> frozenset[str]:
    adj = _adjacency(d)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w in allowed and w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def connected_component(d: DynkinData, v: str) -> frozenset[str]:
    """Vertex set of v's connected component in the full diagram."""
    if v not in d.nodes:
        raise UnknownNode(f"unknown node {v!r}")
    return _reachable(d, v, frozenset(d.nodes))


def components(d: DynkinData) -> list[frozenset[str]]:
    out = []
    seen: set[str] = set()
    for n in d.nodes:
        if n not in seen:
            comp = connected_component(d, n)
            seen |= comp
            out.append(comp)
    return out


def _branch(adj, edge_of, centre: str, first: str, within: frozenset[str]) -> list[str]:
    """Walk the chain starting centre -> first, away from centre."""
    chain = [first]
    prev, cur = centre, first
    while True:
        nxt = [w for w in adj[cur] if w != prev and w in within]
        if not nxt:
            return chain
        if len(nxt) > 1:
            raise AssertionError("branch is not a chain")
        prev, cur = cur, nxt[0]
        chain.append(cur)


@lru_cache(maxsize=None)
def component_labels(d: DynkinData, nodes: frozenset[str]) -> tuple[TypeLabel, ...]:
    """All valid (family, rank, numbering) labels of the induced subdiagram.

    Empty when the induced decorated graph is not one of A-G.  The induced
    graph must be connected.  Multiple labels appear exactly for diagrams
    with a numbering ambiguity (A_n reversal, B2/C2, D/E automorphisms).
    """
    if not nodes <= set(d.nodes):
        raise UnknownNode(f"nodes outside the diagram: {sorted(nodes - set(d.nodes))}")
    n = len(nodes)
    if n == 0:
        return ()
    some = next(iter(nodes))
    if _reachable(d, some, nodes) != nodes:
        raise ValidationError(f"node set {sorted(nodes)} is not connected")

    full_adj = _adjacency(d)
    adj = {v: tuple(w for w in full_adj[v] if w in nodes) for v in nodes}
    edge_of = _edge_lookup(d)
    in_edges = [edge_of[frozenset((a, b))]
                for a in nodes for b in adj[a] if a < b]

    if n == 1:
        return (TypeLabel("A", 1, (some,)),)
    if len(in_edges) != n - 1:
        return ()  # a cycle: not finite type
    deg = {v: len(adj[v]) for v in nodes}
    if max(deg.values()) > 3:
        return ()
    forks = sorted(v for v in nodes if deg[v] == 3)
    if len(forks) > 1:
        return ()
    multi = [e for e in in_edges if e.multiplicity > 1]

    labels: list[TypeLabel] = []

    if any(e.multiplicity == 3 for e in multi):
        if n == 2 and len(multi) == 1:
            e = multi[0]
            short = e.b if e.long == e.a else e.a
            labels.append(TypeLabel("G", 2, (short, e.long)))
        return tuple(labels)

    if len(multi) > 1:
        return ()

    if len(multi) == 1:
        if forks:
            return ()
        e = multi[0]
        ends = sorted(v for v in nodes if deg[v] == 1)
        seqs = [[end] + _branch(adj, edge_of, end, adj[end][0], nodes)
                for end in ends] if n > 2 else [[ends[0], ends[1]], [ends[1], ends[0]]]
        for seq in seqs:
            i = next(k for k in range(n - 1)
                     if frozenset((seq[k], seq[k + 1])) == e.ends())
            if i == n - 2:
                family = "B" if e.long == seq[-2] else "C"
                labels.append(TypeLabel(family, n, tuple(seq)))
            elif n == 4 and i == 1 and e.long == seq[1]:
                labels.append(TypeLabel("F", 4, tuple(seq)))
        return tuple(sorted(labels, key=lambda l: (l.family, l.nodes_by_index)))

    # single edges only
    if not forks:
        ends = sorted(v for v in nodes if deg[v] == 1)
        for end in ends:
            seq = [end] + _branch(adj, edge_of, end, adj[end][0], nodes)
            labels.append(TypeLabel("A", n, tuple(seq)))
        return tuple(sorted(set(labels), key=lambda l: l.nodes_by_index))

    c = forks[0]
    branches = sorted((_branch(adj, edge_of, c, w, nodes) for w in adj[c]),
                      key=lambda br: (len(br), br))
    lens = tuple(len(br) for br in branches)

    if lens[0] == 1 and lens[1] == 1:
        # D_n: any length-1 branch may serve as the start of the chain when
        # the chain itself has length 1 (that is D4, fully symmetric).
        rank = lens[2] + 3
        for chain_idx in range(3):
            if len(branches[chain_idx]) != lens[2]:
                continue
            rest = [branches[k] for k in range(3) if k != chain_idx]
            if any(len(br) != 1 for br in rest):
                continue
            for r0, r1 in (rest, rest[::-1]):
                seq = list(reversed(branches[chain_idx])) + [c, r0[0], r1[0]]
                labels.append(TypeLabel("D", rank, tuple(seq)))
        return tuple(sorted(set(labels), key=lambda l: l.nodes_by_index))

    if lens in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
        rank = n
        twos = [br for br in branches if len(br) == 2]
        longs = [br for br in branches if br is not branches[0] and br not in twos]
        # E6 swaps its two length-2 branches; E7/E8 are rigid.
        options = [(twos[0], twos[1]), (twos[1], twos[0])] if lens == (1, 2, 2) \
            else [(twos[0], branches[2])]
        for near_branch, far_branch in options:
            seq = [near_branch[1], branches[0][0], near_branch[0], c] + list(far_branch)
            labels.append(TypeLabel("E", rank, tuple(seq)))
        return tuple(sorted(set(labels), key=lambda l: l.nodes_by_index))

    return ()


def recognize_type(d: DynkinData, component, first: str | None = None) -> TypeLabel:
    """Deterministic TypeLabel of a connected node set.

    Ties (diagram automorphisms, the B2/C2 ambiguity) break to the
    lexicographically smallest (family, numbering).  Passing `first` keeps
    only numberings placing that node at Bourbaki index 1.
    """
    comp = frozenset(component)
    labels = list(component_labels(d, comp))
    if not labels:
        raise UnknownDiagram(f"component {sorted(comp)} is not of finite type")
    if first is not None:
        if first not in comp:
            raise UnknownNode(f"{first!r} is not in the component")
        labels = [l for l in labels if l.nodes_by_index[0] == first]
        if not labels:
            raise UnknownDiagram(
                f"no finite-type numbering of {sorted(comp)} places {first!r} first")
    return min(labels, key=lambda l: (l.family, l.rank, l.nodes_by_index))


def _adjacent_parabolic_components(d: DynkinData, alpha: str) -> list[frozenset[str]]:
    adj = _adjacency(d)
    comps: list[frozenset[str]] = []
    for w in adj[alpha]:
        if w not in d.parabolic:
            continue
        comp = _reachable(d, w, d.parabolic)
        if comp not in comps:
            comps.append(comp)
    return comps


def vivid_colour_ok(d: DynkinData, F, alpha: str) -> bool:
    """The two diagram conditions a colour must satisfy inside a cone.

    (1) alpha is the only element of F in its connected component, and
    (2) alpha touches at most one component I_alpha of the parabolic set,
        and if it touches one then I_alpha together with alpha forms an A- or
        C-type chain in which alpha is the first simple root.
    """
    F = frozenset(F)
    colour_set = set(d.colours)
    if alpha not in colour_set or alpha not in F:
        raise UnknownColour(f"{alpha!r} is not a colour of this cone")
    if not F <= colour_set:
        raise UnknownColour(
            f"colours outside the universal colour set: {sorted(F - colour_set)}")

    if connected_component(d, alpha) & F != {alpha}:
        return False

    touching = _adjacent_parabolic_components(d, alpha)
    if len(touching) > 1:
        return False
    if not touching:
        return True
    nodes = touching[0] | {alpha}
    return any(l.family in ("A", "C") and l.nodes_by_index[0] == alpha
               for l in component_labels(d, frozenset(nodes)))


def is_projective_space_product(d: DynkinData) -> bool:
    """Whether G/P is a product of projective spaces.

    Equivalent to every colour passing `vivid_colour_ok` against the full
    colour set: each diagram component then consists of one colour and its
    attached parabolic chain (or of parabolic nodes only, contributing a
    point factor).
    """
    F = frozenset(d.colours)
    return all(vivid_colour_ok(d, F, alpha) for alpha in d.colours)


_STANDARD_RANKS = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 4,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


def standard_component(family: str, rank: int, prefix: str
                       ) -> tuple[list[str], list[DynkinEdge]]:
    """Nodes and edges of a standard component, named prefix.1 .. prefix.rank."""
    family = family.upper()
    if family not in _STANDARD_RANKS or not _STANDARD_RANKS[family](rank):
        raise UnknownDiagram(f"no finite-type diagram {family}{rank}")
    name = [None] + [f"{prefix}.{i}" for i in range(1, rank + 1)]
    chain = lambda i, j: DynkinEdge(name[i], name[j])

    if family == "A":
        edges = [chain(i, i + 1) for i in range(1, rank)]
    elif family in ("B", "C"):
        edges = [chain(i, i + 1) for i in range(1, rank - 1)]
        long = name[rank - 1] if family == "B" else name[rank]
        edges.append(DynkinEdge(name[rank - 1], name[rank], 2, long))
    elif family == "D":
        edges = [chain(i, i + 1) for i in range(1, rank - 2)]
        edges += [chain(rank - 2, rank - 1), chain(rank - 2, rank)]
    elif family == "E":
        edges = [chain(1, 3), chain(2, 4)]
        edges += [chain(i, i + 1) for i in range(3, rank)]
    elif family == "F":
        edges = [chain(1, 2), DynkinEdge(name[2], name[3], 2, name[2]), chain(3, 4)]
    else:  # G
        edges = [DynkinEdge(name[1], name[2], 3, name[2])]
    return name[1:], edges


def standard_diagram(component_specs, torus_rank: int = 0, parabolic=()) -> DynkinData:
    """Assemble a diagram from (family, rank, prefix) component specs."""
    nodes: list[str] = []
    edges: list[DynkinEdge] = []
    for family, rank, prefix in component_specs:
        ns, es = standard_component(family, rank, prefix)
        nodes += ns
        edges += es
    return validate_diagram(nodes, edges, parabolic, torus_rank)
