"""Coloured lattices, coloured cones, and coloured fans.

A coloured lattice is Z^rank equipped with an ordered universal colour set
and a point for each colour.  A coloured cone pairs a strongly convex cone
with a subset of colours whose points lie on the cone (away from the
origin).  A coloured fan is a finite collection of coloured cones closed
under faces and intersections; `validate_fan` completes the face closure
automatically, since callers naturally supply only the maximal cones.

A face inherits exactly the colours whose points lie on it.  That rule
forces colour consistency across the fan: two members sharing an underlying
cone must carry identical colour sets.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cones as pc
from .errors import (
    ColourPointOutsideCone,
    DimensionMismatch,
    InconsistentColours,
    NotAFace,
    OverlappingCones,
    UnknownColour,
    ZeroColourPoint,
)
from .lattice import Vec, freeze_vector


@dataclass(frozen=True)
class ColouredLattice:
    rank: int
    colours: tuple[str, ...]
    colour_points: tuple[Vec, ...]

    def __post_init__(self):
        object.__setattr__(self, "colours", tuple(self.colours))
        object.__setattr__(self, "colour_points",
                           tuple(freeze_vector(p) for p in self.colour_points))
        if len(self.colours) != len(self.colour_points):
            raise DimensionMismatch("one point per colour required")
        if len(set(self.colours)) != len(self.colours):
            raise UnknownColour("duplicate colour identifiers")
        for p in self.colour_points:
            if len(p) != self.rank:
                raise DimensionMismatch(
                    f"colour point of length {len(p)} in a rank-{self.rank} lattice")

    def xi(self, colour: str) -> Vec:
        try:
            return self.colour_points[self.colours.index(colour)]
        except ValueError:
            raise UnknownColour(f"unknown colour {colour!r}") from None

    def colour_order(self, colour: str) -> int:
        return self.colours.index(colour)


@dataclass(frozen=True)
class ColouredCone:
    cone: pc.Cone
    colours: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "colours", frozenset(self.colours))


@dataclass(frozen=True)
class ColouredFan:
    lattice: ColouredLattice
    cones: tuple[ColouredCone, ...]

    def maximal_cones(self) -> tuple[ColouredCone, ...]:
        out = []
        for m in self.cones:
            if not any(o.cone != m.cone and pc.is_face_of(m.cone, o.cone)
                       for o in self.cones):
                out.append(m)
        return tuple(out)

    def ray_members(self) -> tuple[ColouredCone, ...]:
        return tuple(m for m in self.cones if m.cone.dim == 1)

    def non_coloured_rays(self) -> tuple[Vec, ...]:
        """Primitive generators of the rays carrying no colour, sorted."""
        return tuple(sorted(m.cone.rays[0] for m in self.ray_members()
                            if not m.colours))


def _check_coloured_cone(sc: ColouredCone, L: ColouredLattice) -> None:
    if sc.cone.ambient_rank != L.rank:
        raise DimensionMismatch(
            f"cone of ambient rank {sc.cone.ambient_rank} on a rank-{L.rank} lattice")
    for alpha in sc.colours:
        u = L.xi(alpha)
        if not any(u):
            raise ZeroColourPoint(f"colour {alpha!r} has the zero point")
        if pc.contains(sc.cone, u) == pc.OUTSIDE:
            raise ColourPointOutsideCone(
                f"point of colour {alpha!r} lies outside its cone")


def coloured_face(sc: ColouredCone, t: pc.Cone, L: ColouredLattice) -> ColouredCone:
    """The coloured face of sc supported on the face t of its cone."""
    if not pc.is_face_of(t, sc.cone):
        raise NotAFace("not a face of the given coloured cone")
    kept = frozenset(a for a in sc.colours
                     if pc.contains(t, L.xi(a)) != pc.OUTSIDE)
    return ColouredCone(t, kept)


def coloured_rays(sc: ColouredCone, L: ColouredLattice
                  ) -> tuple[tuple[Vec, ...], tuple[tuple[Vec, frozenset[str]], ...]]:
    """Partition the rays of sc by whether they inherit a colour.

    Returns (non_coloured, coloured): primitive generators of the colourless
    rays, and (generator, colour set) pairs for the rest.
    """
    non_coloured = []
    coloured = []
    for r in sc.cone.rays:
        ray = pc.cone_from_generators([r], sc.cone.ambient_rank)
        cf = coloured_face(sc, ray, L)
        if cf.colours:
            coloured.append((r, cf.colours))
        else:
            non_coloured.append(r)
    return tuple(non_coloured), tuple(coloured)


def _sort_key(L: ColouredLattice):
    def key(sc: ColouredCone):
        return (sc.cone.dim, sc.cone.rays,
                tuple(sorted(L.colour_order(a) for a in sc.colours)))
    return key


def validate_fan(L: ColouredLattice, coloured_cones) -> ColouredFan:
    """Build a coloured fan: validate, close under faces, canonically order.

    Raises ColourPointOutsideCone / ZeroColourPoint for invalid coloured
    cones, OverlappingCones when two cones do not meet along a common face,
    and InconsistentColours when one underlying cone would need two
    different colour sets.  The origin cone is always a member.
    """
    inputs: list[ColouredCone] = []
    for sc in coloured_cones:
        _check_coloured_cone(sc, L)
        if sc not in inputs:
            inputs.append(sc)

    for i, a in enumerate(inputs):
        for b in inputs[i + 1:]:
            t = pc.intersect(a.cone, b.cone)
            if not (pc.is_face_of(t, a.cone) and pc.is_face_of(t, b.cone)):
                raise OverlappingCones(
                    f"cones with rays {a.cone.rays} and {b.cone.rays} "
                    f"meet outside a common face")

    members: dict[pc.Cone, ColouredCone] = {}
    members[pc.zero_cone(L.rank)] = ColouredCone(pc.zero_cone(L.rank), frozenset())
    for sc in inputs:
        for t in pc.faces(sc.cone):
            cf = coloured_face(sc, t, L)
            prev = members.get(t)
            if prev is None:
                members[t] = cf
            elif prev.colours != cf.colours:
                raise InconsistentColours(
                    f"cone with rays {t.rays} carries colour sets "
                    f"{sorted(prev.colours)} and {sorted(cf.colours)}")
    ordered = tuple(sorted(members.values(), key=_sort_key(L)))
    return ColouredFan(L, ordered)
