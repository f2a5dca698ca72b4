"""Affine local structure and decolouration.

Every coloured cone of a fan determines a local model: the same cone and
lattice, but with the universal colour set shrunk to the cone's own colours
and the diagram shrunk to the parabolic nodes plus those colours (the Levi
subdiagram).  Decolouration keeps the underlying fan and intersects every
colour set with a chosen subset; removing colours never makes a cone less
simplicial, less regular, or less vivid.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import dynkin
from .dynkin import DynkinData
from .errors import ColourSetMismatch, UnknownColour
from .fans import ColouredCone, ColouredFan, ColouredLattice, validate_fan


@dataclass(frozen=True)
class LocalModel:
    levi_diagram: DynkinData
    restricted_lattice: ColouredLattice
    cone: ColouredCone


def affine_local(sc: ColouredCone, L: ColouredLattice, d: DynkinData) -> LocalModel:
    """Local model of one coloured cone: Levi diagram on I ∪ F, colours F."""
    if set(L.colours) != set(d.colours):
        raise ColourSetMismatch(
            f"lattice colours {sorted(L.colours)} do not match the diagram "
            f"colour set {sorted(d.colours)}")
    if not sc.colours <= set(L.colours):
        raise ColourSetMismatch(
            f"cone colours outside the lattice: {sorted(sc.colours - set(L.colours))}")

    keep = set(d.parabolic) | sc.colours
    nodes = tuple(n for n in d.nodes if n in keep)
    edges = tuple(e for e in d.edges if e.a in keep and e.b in keep)
    levi = dynkin.validate_diagram(nodes, edges, d.parabolic, d.torus_rank)

    kept_colours = tuple(a for a in L.colours if a in sc.colours)
    restricted = ColouredLattice(
        L.rank, kept_colours, tuple(L.xi(a) for a in kept_colours))
    return LocalModel(levi, restricted, sc)


def decolour(fan: ColouredFan, keep) -> ColouredFan:
    """Intersect every colour set of the fan with `keep`; same underlying cones."""
    keep = frozenset(keep)
    if not keep <= set(fan.lattice.colours):
        raise UnknownColour(
            f"colours outside the universal colour set: "
            f"{sorted(keep - set(fan.lattice.colours))}")
    stripped = [ColouredCone(sc.cone, sc.colours & keep) for sc in fan.cones]
    return validate_fan(fan.lattice, stripped)
