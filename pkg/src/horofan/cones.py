"""Exact strongly convex rational polyhedral cones.

A cone is stored by its primitive extreme rays together with facet normals
that cut it out inside its linear span:

    sigma = {x : <n, x> >= 0 for every facet normal n}  intersect  span(rays)

All arithmetic is integral.  Facets are found by enumerating (d-1)-subsets
of the generators inside span coordinates, which is perfectly adequate at
desk scale (ambient rank up to ~8, a dozen rays) and easy to cross-check
against brute force.  Cones are canonical: rays and normals are primitive
and lexicographically sorted, and equality is equality of ray sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import lattice
from .errors import DimensionMismatch, NotStronglyConvex, ZeroVector
from .lattice import Mat, Vec, dot, negate, rank_of

OUTSIDE = "outside"
BOUNDARY = "boundary"
RELATIVE_INTERIOR = "relative_interior"


@dataclass(frozen=True, eq=False)
class Cone:
    ambient_rank: int
    rays: Mat
    facet_normals: Mat

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cone):
            return NotImplemented
        return self.ambient_rank == other.ambient_rank and self.rays == other.rays

    def __hash__(self) -> int:
        return hash((self.ambient_rank, self.rays))

    @property
    def dim(self) -> int:
        return rank_of(self.rays)

    def __repr__(self) -> str:
        return f"Cone(rank={self.ambient_rank}, rays={list(map(list, self.rays))})"


def zero_cone(ambient_rank: int) -> Cone:
    return Cone(ambient_rank, (), ())


def primitive(v) -> Vec:
    """v divided by the (positive) gcd of its entries; direction preserved."""
    v = lattice.freeze_vector(v)
    g = lattice.vector_gcd(v)
    if g == 0:
        raise ZeroVector("the zero vector has no primitive generator")
    return tuple(x // g for x in v)


def _span_coordinates(prims: Mat, ambient_rank: int) -> tuple[Mat, Mat]:
    """Coordinates of the generators in a saturated basis of their span.

    Returns (coords, Binv) where Binv is the inverse of the unimodular
    extension of the span basis: x in span has coordinates (x @ Binv)[:d].
    """
    _, ext = lattice.saturation_with_extension(prims, ambient_rank)
    Binv = lattice.unimodular_inverse(ext)
    d = rank_of(prims)
    coords = []
    for g in prims:
        full = lattice.vec_mat(g, Binv)
        if any(full[d:]):
            raise AssertionError("generator not in the saturated span")
        coords.append(full[:d])
    return tuple(coords), Binv


def _facet_normals(coords: Mat, d: int) -> list[Vec]:
    """Facet normals of cone(coords) in R^d, full-dimensional by assumption."""
    normals: set[Vec] = set()
    for subset in combinations(range(len(coords)), d - 1):
        M = [coords[i] for i in subset]
        if rank_of(M) != d - 1:
            continue
        K = lattice.kernel_basis(M, d)
        if len(K) != 1:
            continue
        n = primitive(K[0])
        dots = [dot(n, c) for c in coords]
        if all(x <= 0 for x in dots):
            n, dots = negate(n), [-x for x in dots]
        elif not all(x >= 0 for x in dots):
            continue
        if rank_of([coords[i] for i, x in enumerate(dots) if x == 0]) == d - 1:
            normals.add(n)
    return sorted(normals)


def cone_from_generators(gens, ambient_rank: int) -> Cone:
    """The cone spanned by the generators, with extreme rays and facets extracted."""
    frozen = []
    for g in gens:
        g = lattice.freeze_vector(g)
        if len(g) != ambient_rank:
            raise DimensionMismatch(
                f"generator of length {len(g)} in ambient rank {ambient_rank}")
        if not any(g):
            raise ZeroVector("zero vector among the cone generators")
        frozen.append(g)
    prims = tuple(sorted({primitive(g) for g in frozen}))
    if not prims:
        return zero_cone(ambient_rank)

    d = rank_of(prims)
    coords, Binv = _span_coordinates(prims, ambient_rank)
    normals_d = _facet_normals(coords, d)
    if rank_of(normals_d) != d:
        raise NotStronglyConvex("the generators span a cone containing a line")

    rays = tuple(sorted(
        g for g, c in zip(prims, coords)
        if rank_of([n for n in normals_d if dot(n, c) == 0]) == d - 1))

    amb_normals = []
    for n in normals_d:
        padded = tuple(n) + (0,) * (ambient_rank - d)
        amb_normals.append(lattice.mat_vec(Binv, padded))
    return Cone(ambient_rank, rays, tuple(sorted(amb_normals)))


def contains(c: Cone, v) -> str:
    """Classify v as outside, on the boundary, or in the relative interior of c."""
    v = lattice.freeze_vector(v)
    if len(v) != c.ambient_rank:
        raise DimensionMismatch(
            f"point of length {len(v)} against ambient rank {c.ambient_rank}")
    if not c.rays:
        return RELATIVE_INTERIOR if not any(v) else OUTSIDE
    if rank_of(c.rays + (v,)) != c.dim:
        return OUTSIDE
    dots = [dot(n, v) for n in c.facet_normals]
    if any(x < 0 for x in dots):
        return OUTSIDE
    return BOUNDARY if any(x == 0 for x in dots) else RELATIVE_INTERIOR


@lru_cache(maxsize=None)
def faces(c: Cone) -> tuple[Cone, ...]:
    """Every face of c, including the zero cone and c itself.

    Faces are intersections of c with supporting hyperplanes taken from
    subsets of the facet normals; deduplicated by ray set.
    """
    if not c.rays:
        return (c,)
    seen: dict[Mat, Cone] = {}
    for k in range(len(c.facet_normals) + 1):
        for subset in combinations(c.facet_normals, k):
            sel = tuple(r for r in c.rays
                        if all(dot(n, r) == 0 for n in subset))
            if sel not in seen:
                seen[sel] = cone_from_generators(sel, c.ambient_rank) if sel \
                    else zero_cone(c.ambient_rank)
    return tuple(sorted(seen.values(), key=lambda f: (f.dim, f.rays)))


def is_face_of(t: Cone, c: Cone) -> bool:
    """True iff t is a face of c (compared as ray sets)."""
    if t.ambient_rank != c.ambient_rank:
        raise DimensionMismatch("cones in different ambient lattices")
    if not set(t.rays) <= set(c.rays):
        return False
    return t in faces(c)


def _hrep_extreme_rays(rows: list[Vec], k: int) -> list[Vec]:
    """Extreme rays of the pointed cone {x in R^k : row @ x >= 0 for all rows}.

    Incremental double description: start from a simplicial subsystem of
    full rank and insert the remaining halfspaces one at a time, combining
    adjacent positive/negative rays.  The rows must have rank k (that is
    exactly pointedness of the cone).
    """
    if k == 0:
        return []
    rows = [r for r in dict.fromkeys(rows) if any(r)]
    if rank_of(rows) < k:
        raise NotStronglyConvex("halfspace system with a lineality space")

    base: list[Vec] = []
    rest: list[Vec] = []
    for r in rows:
        if len(base) < k and rank_of(base + [r]) > len(base):
            base.append(r)
        else:
            rest.append(r)

    rays: list[Vec] = []
    for j in range(k):
        K = lattice.kernel_basis(base[:j] + base[j + 1:], k)
        r = primitive(K[0])
        rays.append(negate(r) if dot(base[j], r) < 0 else r)

    processed = list(base)
    for m in rest:
        vals = {r: dot(m, r) for r in rays}
        minus = [r for r in rays if vals[r] < 0]
        if not minus:
            processed.append(m)
            continue
        plus = [r for r in rays if vals[r] > 0]
        new = [r for r in rays if vals[r] >= 0]
        for rp in plus:
            for rm in minus:
                tight = [p for p in processed if dot(p, rp) == 0 and dot(p, rm) == 0]
                if rank_of(tight) != k - 2:
                    continue  # not adjacent in the current cone
                comb = tuple(vals[rp] * b - vals[rm] * a for a, b in zip(rp, rm))
                new.append(primitive(comb))
        rays = list(dict.fromkeys(new))
        processed.append(m)
        if not rays:
            break
    return sorted(set(rays))


@lru_cache(maxsize=None)
def intersect(a: Cone, b: Cone) -> Cone:
    """The cone a ∩ b, computed from the combined facet systems."""
    if a.ambient_rank != b.ambient_rank:
        raise DimensionMismatch("cones in different ambient lattices")
    n = a.ambient_rank
    if a == b:
        return a
    if not a.rays or not b.rays:
        return zero_cone(n)

    eqs = lattice.kernel_basis(a.rays, n) + lattice.kernel_basis(b.rays, n)
    W = lattice.kernel_basis(eqs, n) if eqs else lattice.identity(n)
    k = len(W)
    if k == 0:
        return zero_cone(n)

    rows = []
    for nv in a.facet_normals + b.facet_normals:
        t = tuple(dot(nv, w) for w in W)
        if any(t) and t not in rows:
            rows.append(t)
    rays_w = _hrep_extreme_rays(rows, k)
    rays_amb = [lattice.vec_mat(r, W) for r in rays_w]
    return cone_from_generators(rays_amb, n)
