"""Fan documents: the JSON input format and its binding to the library types.

A document describes a group (diagram components plus a central torus rank),
a parabolic subset, a coloured lattice, and a list of coloured cones:

    {
      "group": {"components": [{"family": "A", "rank": 3}], "torus_rank": 0},
      "parabolic": ["A3.1", "A3.3"],
      "lattice_rank": 1,
      "colour_points": {"A3.2": [1]},
      "cones": [{"rays": [[1]], "colours": ["A3.2"]}]
    }

Node identifiers are "<prefix>.<index>" with indices in the Bourbaki
numbering of the component.  The prefix of a component is family+rank
("A3"); if several components share family and rank the later ones get
"_2", "_3", ... suffixes ("A1", "A1_2").  `colour_points` must name every
node outside the parabolic set exactly once.

`parse` performs schema and identifier validation only; `build` constructs
the diagram, lattice and validated fan and may raise validation errors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import cones as pc
from . import dynkin as dk
from .errors import DimensionMismatch, ParseError, UnresolvedIdentifier
from .fans import ColouredCone, ColouredFan, ColouredLattice, validate_fan
from .lattice import Vec, freeze_vector


@dataclass(frozen=True)
class GroupComponent:
    family: str
    rank: int


@dataclass(frozen=True)
class FanDocument:
    components: tuple[GroupComponent, ...]
    torus_rank: int
    parabolic: tuple[str, ...]
    lattice_rank: int
    colour_points: tuple[tuple[str, Vec], ...]  # diagram order
    cones: tuple[tuple[tuple[Vec, ...], tuple[str, ...]], ...]  # (rays, colours)


def component_prefixes(components) -> list[str]:
    seen: dict[str, int] = {}
    prefixes = []
    for comp in components:
        base = f"{comp.family}{comp.rank}"
        seen[base] = seen.get(base, 0) + 1
        prefixes.append(base if seen[base] == 1 else f"{base}_{seen[base]}")
    return prefixes


def node_names(components) -> list[str]:
    names = []
    for comp, prefix in zip(components, component_prefixes(components)):
        names += [f"{prefix}.{i}" for i in range(1, comp.rank + 1)]
    return names


def _expect(obj, key, kind, where):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"{where}: missing key {key!r}")
    val = obj[key]
    if kind is int and isinstance(val, bool) or not isinstance(val, kind):
        raise ParseError(f"{where}: {key!r} must be of type {kind.__name__}")
    return val


def _int_vector(raw, length, where) -> Vec:
    if not isinstance(raw, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in raw):
        raise ParseError(f"{where}: expected a list of integers")
    if len(raw) != length:
        raise DimensionMismatch(
            f"{where}: vector of length {len(raw)}, lattice rank is {length}")
    return freeze_vector(raw)


def parse(text: str) -> FanDocument:
    """Parse and schema-check a document; identifiers are resolved here."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}",
                         line=exc.lineno, column=exc.colno) from exc
    if not isinstance(raw, dict):
        raise ParseError("document must be a JSON object")

    group = _expect(raw, "group", dict, "document")
    comp_list = _expect(group, "components", list, "group")
    torus_rank = _expect(group, "torus_rank", int, "group")
    if torus_rank < 0:
        raise ParseError("group: torus_rank must be nonnegative")
    components = []
    for i, c in enumerate(comp_list):
        fam = _expect(c, "family", str, f"group.components[{i}]").upper()
        rank = _expect(c, "rank", int, f"group.components[{i}]")
        if fam not in dk.FAMILIES:
            raise ParseError(f"group.components[{i}]: unknown family {fam!r}")
        if rank < 1:
            raise ParseError(f"group.components[{i}]: rank must be positive")
        components.append(GroupComponent(fam, rank))

    nodes = node_names(components)
    node_set = set(nodes)

    parabolic = _expect(raw, "parabolic", list, "document")
    for n in parabolic:
        if n not in node_set:
            raise UnresolvedIdentifier(f"parabolic: unknown node {n!r}")
    if len(set(parabolic)) != len(parabolic):
        raise ParseError("parabolic: duplicate node")
    parabolic_set = set(parabolic)
    colours = [n for n in nodes if n not in parabolic_set]

    lattice_rank = _expect(raw, "lattice_rank", int, "document")
    if lattice_rank < 0:
        raise ParseError("lattice_rank must be nonnegative")

    points_raw = _expect(raw, "colour_points", dict, "document")
    for name in points_raw:
        if name not in colours:
            raise UnresolvedIdentifier(f"colour_points: {name!r} is not a colour")
    missing = [c for c in colours if c not in points_raw]
    if missing:
        raise UnresolvedIdentifier(f"colour_points: missing {missing}")
    colour_points = tuple(
        (c, _int_vector(points_raw[c], lattice_rank, f"colour_points[{c!r}]"))
        for c in colours)

    cones_raw = _expect(raw, "cones", list, "document")
    cones = []
    for i, c in enumerate(cones_raw):
        rays_raw = _expect(c, "rays", list, f"cones[{i}]")
        rays = tuple(_int_vector(r, lattice_rank, f"cones[{i}].rays[{j}]")
                     for j, r in enumerate(rays_raw))
        cols_raw = _expect(c, "colours", list, f"cones[{i}]")
        for a in cols_raw:
            if a not in colours:
                raise UnresolvedIdentifier(f"cones[{i}]: unknown colour {a!r}")
        cones.append((rays, tuple(cols_raw)))

    return FanDocument(
        components=tuple(components),
        torus_rank=torus_rank,
        parabolic=tuple(n for n in nodes if n in parabolic_set),
        lattice_rank=lattice_rank,
        colour_points=colour_points,
        cones=tuple(cones),
    )


def to_mapping(doc: FanDocument) -> dict:
    return {
        "group": {
            "components": [{"family": c.family, "rank": c.rank}
                           for c in doc.components],
            "torus_rank": doc.torus_rank,
        },
        "parabolic": list(doc.parabolic),
        "lattice_rank": doc.lattice_rank,
        "colour_points": {name: list(p) for name, p in doc.colour_points},
        "cones": [{"rays": [list(r) for r in rays], "colours": list(cols)}
                  for rays, cols in doc.cones],
    }


def render(doc: FanDocument) -> str:
    """Canonical JSON text; parse(render(doc)) == doc."""
    return json.dumps(to_mapping(doc), sort_keys=True, indent=2) + "\n"


def build(doc: FanDocument) -> tuple[dk.DynkinData, ColouredLattice, ColouredFan]:
    """Construct and validate the diagram, lattice and fan of a document."""
    specs = [(c.family, c.rank, prefix) for c, prefix
             in zip(doc.components, component_prefixes(doc.components))]
    diagram = dk.standard_diagram(specs, doc.torus_rank, doc.parabolic)
    lattice_ = ColouredLattice(
        doc.lattice_rank,
        tuple(name for name, _ in doc.colour_points),
        tuple(p for _, p in doc.colour_points))
    members = []
    for rays, cols in doc.cones:
        cone = pc.cone_from_generators(rays, doc.lattice_rank) if rays \
            else pc.zero_cone(doc.lattice_rank)
        members.append(ColouredCone(cone, frozenset(cols)))
    return diagram, lattice_, validate_fan(lattice_, members)


def document_for_fan(doc: FanDocument, fan: ColouredFan,
                     lattice_rank: int | None = None) -> FanDocument:
    """A document describing `fan` with the group data of `doc`.

    Used to re-emit the results of `decolour` and `split` in a form the
    tool accepts back.  Only the maximal cones are listed.
    """
    L = fan.lattice
    rank = L.rank if lattice_rank is None else lattice_rank
    cones = tuple(
        (m.cone.rays, tuple(sorted(m.colours, key=L.colour_order)))
        for m in fan.maximal_cones())
    return FanDocument(
        components=doc.components,
        torus_rank=doc.torus_rank,
        parabolic=doc.parabolic,
        lattice_rank=rank,
        colour_points=tuple((a, L.xi(a)) for a in L.colours),
        cones=cones,
    )
