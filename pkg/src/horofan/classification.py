"""Singularity classification of coloured fans.

Per cone, four flags: the multiset of non-coloured ray generators together
with the colour points (counted with multiplicity) is R-linearly independent
(simplicial) or part of a Z-basis (regular); every colour passes the diagram
condition (vivid); the colour set is empty (toroidal).

Globally, over the whole fan:

    Q-factorial             <=> every cone simplicial
    factorial               <=> every cone regular
    smooth                  <=> every cone regular and vivid
    quotient singularities  <=> every cone simplicial and vivid
"""

from __future__ import annotations

from dataclasses import dataclass

from . import dynkin, lattice
from .dynkin import DynkinData
from .errors import ColourSetMismatch
from .fans import ColouredCone, ColouredFan, ColouredLattice, coloured_rays
from .lattice import Vec


@dataclass(frozen=True)
class ConeClassification:
    simplicial: bool
    regular: bool
    vivid: bool
    toroidal: bool


@dataclass(frozen=True)
class Verdict:
    cones: tuple[ConeClassification, ...]  # aligned with fan.cones
    q_factorial: bool
    factorial: bool
    smooth: bool
    quotient_singularities: bool
    toroidal: bool

    @property
    def vivid(self) -> bool:
        return all(c.vivid for c in self.cones)


def simplicial_multiset(sc: ColouredCone, L: ColouredLattice) -> tuple[Vec, ...]:
    """Non-coloured ray generators plus one colour point per colour of the cone.

    Colour points are taken with multiplicity: two colours sharing a point
    contribute it twice, which makes independence fail.
    """
    non_coloured, _ = coloured_rays(sc, L)
    points = list(non_coloured)
    points += [L.xi(a) for a in sorted(sc.colours, key=L.colour_order)]
    return tuple(sorted(points))


def is_simplicial(sc: ColouredCone, L: ColouredLattice) -> bool:
    return lattice.is_linearly_independent(simplicial_multiset(sc, L))


def is_regular(sc: ColouredCone, L: ColouredLattice) -> bool:
    return lattice.extends_to_Z_basis(simplicial_multiset(sc, L), L.rank)


def is_vivid(sc: ColouredCone, L: ColouredLattice, d: DynkinData) -> bool:
    """True iff every colour of the cone passes the diagram condition."""
    return all(dynkin.vivid_colour_ok(d, sc.colours, a) for a in sc.colours)


def classify_cone(sc: ColouredCone, L: ColouredLattice, d: DynkinData
                  ) -> ConeClassification:
    simplicial = is_simplicial(sc, L)
    # part of a Z-basis implies independent, so reuse the cheaper flag
    regular = simplicial and is_regular(sc, L)
    return ConeClassification(
        simplicial=simplicial,
        regular=regular,
        vivid=is_vivid(sc, L, d),
        toroidal=not sc.colours,
    )


def classify(fan: ColouredFan, d: DynkinData) -> Verdict:
    """Per-cone flags and the global verdicts for a coloured fan."""
    if set(fan.lattice.colours) != set(d.colours):
        raise ColourSetMismatch(
            f"lattice colours {sorted(fan.lattice.colours)} do not match the "
            f"diagram colour set {sorted(d.colours)}")
    per_cone = tuple(classify_cone(sc, fan.lattice, d) for sc in fan.cones)
    q_factorial = all(c.simplicial for c in per_cone)
    factorial = all(c.regular for c in per_cone)
    vivid = all(c.vivid for c in per_cone)
    return Verdict(
        cones=per_cone,
        q_factorial=q_factorial,
        factorial=factorial,
        smooth=factorial and vivid,
        quotient_singularities=q_factorial and vivid,
        toroidal=all(c.toroidal for c in per_cone),
    )
