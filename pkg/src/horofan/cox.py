"""Combinatorial Cox construction.

Given a coloured fan without torus factors, build the lifted lattice with
one basis vector per colour and one per non-coloured ray, the projection
matrix mu sending each basis vector to its point downstairs, the lifted
coloured fan (one cone per input cone, spanned by the basis vectors of its
colours and of the non-coloured rays it contains), the divisor class group
as the cokernel of mu^T, and the rank of the quotient torus.

Torus factors are split off first: the fan is re-expressed on the saturated
sublattice spanned by all ray generators and all colour points, and the
quotient rank records the split-off torus.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cones as pc
from . import dynkin as dk
from . import lattice
from .classification import classify as classify_fan
from .errors import HasTorusFactors
from .fans import ColouredCone, ColouredFan, ColouredLattice, validate_fan
from .lattice import FGAbelianGroup, Mat, Vec

# basis_index entries: ("colour", name) or ("ray", primitive generator)
BasisTag = tuple[str, object]


@dataclass(frozen=True)
class TorusSplit:
    n_prime_basis: Mat
    quotient_rank: int
    restricted_fan: ColouredFan


@dataclass(frozen=True)
class CoxData:
    basis_index: tuple[BasisTag, ...]
    n_hat_rank: int
    mu: Mat  # rank(N) x n_hat_rank, one column per basis tag
    cox_fan: ColouredFan
    class_group: FGAbelianGroup
    k_hat_rank: int


def torus_split(fan: ColouredFan) -> TorusSplit:
    """Split off the torus factor: re-coordinatize on the saturated span
    of all ray generators and all colour points."""
    L = fan.lattice
    points = [m.cone.rays[0] for m in fan.ray_members()]
    points += list(L.colour_points)
    basis, ext = lattice.saturation_with_extension(points, L.rank)
    d = len(basis)
    binv = lattice.unimodular_inverse(ext)

    def coords(v: Vec) -> Vec:
        full = lattice.vec_mat(v, binv)
        if any(full[d:]):
            raise AssertionError("fan point outside the saturated sublattice")
        return full[:d]

    restricted_lattice = ColouredLattice(
        d, L.colours, tuple(coords(p) for p in L.colour_points))
    restricted_cones = []
    for sc in fan.cones:
        cone = pc.cone_from_generators([coords(r) for r in sc.cone.rays], d) \
            if sc.cone.rays else pc.zero_cone(d)
        restricted_cones.append(ColouredCone(cone, sc.colours))
    return TorusSplit(
        n_prime_basis=basis,
        quotient_rank=L.rank - d,
        restricted_fan=validate_fan(restricted_lattice, restricted_cones),
    )


def has_torus_factors(fan: ColouredFan) -> bool:
    return torus_split(fan).quotient_rank > 0


def cox_basis_index(fan: ColouredFan) -> tuple[BasisTag, ...]:
    """Colours in diagram order, then non-coloured rays in lexicographic order."""
    tags: list[BasisTag] = [("colour", a) for a in fan.lattice.colours]
    tags += [("ray", u) for u in fan.non_coloured_rays()]
    return tuple(tags)


def _tag_point(fan: ColouredFan, tag: BasisTag) -> Vec:
    kind, value = tag
    return fan.lattice.xi(value) if kind == "colour" else value


def cox_construct(fan: ColouredFan) -> CoxData:
    """The Cox data of a fan without torus factors."""
    if has_torus_factors(fan):
        raise HasTorusFactors(
            "the fan has torus factors; apply torus_split and construct on "
            "the restricted fan")
    L = fan.lattice
    tags = cox_basis_index(fan)
    n_hat = len(tags)
    columns = [_tag_point(fan, t) for t in tags]
    mu = tuple(tuple(col[i] for col in columns) for i in range(L.rank))

    e = lattice.identity(n_hat)
    position = {tag: i for i, tag in enumerate(tags)}
    hat_lattice = ColouredLattice(
        n_hat, L.colours, tuple(e[position[("colour", a)]] for a in L.colours))

    ray_tags = [t for t in tags if t[0] == "ray"]
    lifted = []
    for sc in fan.cones:
        gens = [e[position[("colour", a)]] for a in sc.colours]
        gens += [e[position[t]] for t in ray_tags
                 if pc.contains(sc.cone, t[1]) != pc.OUTSIDE]
        cone = pc.cone_from_generators(gens, n_hat) if gens else pc.zero_cone(n_hat)
        lifted.append(ColouredCone(cone, sc.colours))
    cox_fan = validate_fan(hat_lattice, lifted)

    class_group = lattice.cokernel_structure(lattice.transpose(mu, ncols=n_hat))
    return CoxData(
        basis_index=tags,
        n_hat_rank=n_hat,
        mu=mu,
        cox_fan=cox_fan,
        class_group=class_group,
        k_hat_rank=n_hat - L.rank,
    )


@dataclass(frozen=True)
class CoxConsistency:
    """Cross-checks tying the input fan to its Cox data.

    `orthant_shape` and `affine_space` are None unless the input fan is
    simple with full colour set (the affine case).
    """

    cox_fan_regular: bool
    mu_surjective: bool
    rank_matches_class_group: bool
    fan_vivid: bool
    cox_fan_vivid: bool
    cox_fan_smooth: bool
    projective_space_product: bool | None
    orthant_shape: bool | None
    affine_space: bool | None

    @property
    def equivalences_hold(self) -> bool:
        ok = (self.cox_fan_regular and self.mu_surjective
              and self.rank_matches_class_group
              and self.fan_vivid == self.cox_fan_vivid == self.cox_fan_smooth)
        if self.affine_space is not None:
            ok = ok and (self.projective_space_product == self.fan_vivid
                         == self.affine_space) and bool(self.orthant_shape)
        return ok


def _is_full_orthant(sc: ColouredCone, hat_lattice: ColouredLattice) -> bool:
    basis = set(lattice.identity(hat_lattice.rank))
    return set(sc.cone.rays) == basis and sc.colours == set(hat_lattice.colours)


def cox_consistency(fan: ColouredFan, d: dk.DynkinData) -> CoxConsistency:
    """Verify the structural claims of the construction on one fan."""
    data = cox_construct(fan)
    verdict = classify_fan(fan, d)
    hat_verdict = classify_fan(data.cox_fan, d)

    affine = None
    orthant = None
    psp = None
    maximal = fan.maximal_cones()
    if len(maximal) == 1 and maximal[0].colours == set(fan.lattice.colours):
        hat_maximal = data.cox_fan.maximal_cones()
        orthant = (len(hat_maximal) == 1
                   and _is_full_orthant(hat_maximal[0], data.cox_fan.lattice))
        # the lifted variety is an affine space iff it is the smooth orthant
        affine = bool(orthant) and hat_verdict.smooth
        psp = dk.is_projective_space_product(d)

    return CoxConsistency(
        cox_fan_regular=hat_verdict.factorial,
        mu_surjective=lattice.rank_of(data.mu) == fan.lattice.rank,
        rank_matches_class_group=data.k_hat_rank == data.class_group.free_rank,
        fan_vivid=verdict.vivid,
        cox_fan_vivid=hat_verdict.vivid,
        cox_fan_smooth=hat_verdict.smooth,
        projective_space_product=psp,
        orthant_shape=orthant,
        affine_space=affine,
    )
