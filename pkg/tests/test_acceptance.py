"""Acceptance suite: the exit criteria of the build, one test per criterion.

Every test is deterministic (fixed seeds), exact (no tolerances anywhere),
and prints a single PASS line on success; pytest reports failures as usual.
Run with `pytest tests/test_acceptance.py -v -s`.
"""

import random
from itertools import product

from horofan import classification as cl
from horofan import cones as pc
from horofan import cox
from horofan import dynkin as dk
from horofan import fans as F
from horofan import lattice as lat
from horofan import sampling as S

from oracles import (example_A_rule, faces3d_oracle, member_oracle,
                     minors_gcd_invariant_factors)


def _report(n, label, detail):
    print(f"ACCEPTANCE {n} [{label}]: PASS ({detail})")


# -------------------------------------------------------------------- 1 ---

def test_acceptance_1_golden_colour_line():
    """Coloured ray on Z over A3 with both outer roots parabolic:
    regular but not vivid, so factorial without quotient singularities."""
    d = dk.standard_diagram([("A", 3, "A3")], parabolic=["A3.1", "A3.3"])
    L = F.ColouredLattice(1, ("A3.2",), ((1,),))
    fan = F.validate_fan(L, [F.ColouredCone(
        pc.cone_from_generators([(1,)], 1), frozenset({"A3.2"}))])
    v = cl.classify(fan, d)
    assert v.factorial is True
    assert v.quotient_singularities is False
    assert v.smooth is False
    per_cone = {m: c for m, c in zip(fan.cones, v.cones)}
    ray = next(m for m in fan.cones if m.cone.dim == 1)
    assert per_cone[ray].regular and not per_cone[ray].vivid
    _report(1, "golden colour line", "exact")


# -------------------------------------------------------------------- 2 ---

def test_acceptance_2_type_A_closed_form():
    """is_vivid agrees with the closed-form chain rule for all A_n, n <= 8,
    all parabolic subsets, all singleton-or-empty colour sets."""
    checked = 0
    for n in range(1, 9):
        names = [f"A{n}.{i}" for i in range(1, n + 1)]
        for bits in product((0, 1), repeat=n):
            I = [names[k] for k in range(n) if bits[k]]
            idx = {k + 1 for k in range(n) if bits[k]}
            d = dk.standard_diagram([("A", n, f"A{n}")], parabolic=I)
            L = F.ColouredLattice(1, d.colours,
                                  tuple((1,) for _ in d.colours))
            empty = F.ColouredCone(pc.cone_from_generators([(1,)], 1),
                                   frozenset())
            assert cl.is_vivid(empty, L, d) is True
            checked += 1
            for i in range(1, n + 1):
                if names[i - 1] in I:
                    continue
                sc = F.ColouredCone(pc.cone_from_generators([(1,)], 1),
                                    frozenset({names[i - 1]}))
                assert cl.is_vivid(sc, L, d) == example_A_rule(n, idx, i), \
                    (n, I, i)
                checked += 1
    _report(2, "type A closed form", f"{checked} cases, exhaustive n<=8")


# -------------------------------------------------------------------- 3 ---

def test_acceptance_3_toroidal_reduction():
    """On colour-free fans, quotient singularities coincide with
    Q-factoriality."""
    rng = random.Random(1906)
    toric = {r: dk.standard_diagram([], torus_rank=r) for r in range(1, 5)}
    count = 0
    while count < 200:
        rank = rng.randint(1, 4)
        fan = S.random_coloured_fan(
            rng, toric[rank], rank,
            n_hyperplanes=rng.randint(1, 3), max_cells=10)
        v = cl.classify(fan, toric[rank])
        assert v.toroidal
        assert v.quotient_singularities == v.q_factorial
        count += 1
    _report(3, "toroidal reduction", f"{count} colour-free fans")


# -------------------------------------------------------------------- 4 ---

def test_acceptance_4_implication_suite():
    """smooth => factorial and quotient singularities; quotient
    singularities => Q-factorial; factorial => Q-factorial; and per cone
    regular => simplicial."""
    rng = random.Random(1509)
    count = 0
    stats = {"smooth": 0, "qs": 0, "factorial": 0, "coloured": 0}
    while count < 500:
        d = S.random_diagram(rng)
        fan = S.random_coloured_fan(rng, d, rng.randint(1, 3),
                                    n_hyperplanes=rng.randint(1, 3))
        v = cl.classify(fan, d)
        if v.smooth:
            assert v.factorial and v.quotient_singularities
            stats["smooth"] += 1
        if v.quotient_singularities:
            assert v.q_factorial
            stats["qs"] += 1
        if v.factorial:
            assert v.q_factorial
            stats["factorial"] += 1
        if not v.toroidal:
            stats["coloured"] += 1
        for c in v.cones:
            if c.regular:
                assert c.simplicial
        count += 1
    _report(4, "implication suite",
            f"{count} fans, {stats['coloured']} coloured, "
            f"{stats['smooth']} smooth, {stats['qs']} quot-sing")


# -------------------------------------------------------------------- 5 ---

def test_acceptance_5_cox_suite():
    """On fans without torus factors: the lifted fan is regular on every
    cone, mu has full rank, the quotient-torus rank equals the free rank of
    the class group, and vividness downstairs equals smoothness upstairs."""
    rng = random.Random(2007)
    count = 0
    vivid_count = 0
    while count < 100:
        d = S.random_diagram(rng)
        fan = S.random_coloured_fan(rng, d, rng.randint(1, 3),
                                    n_hyperplanes=rng.randint(1, 2),
                                    complete=True)
        if cox.has_torus_factors(fan):
            continue
        data = cox.cox_construct(fan)
        hv = cl.classify(data.cox_fan, d)
        v = cl.classify(fan, d)
        assert all(c.regular for c in hv.cones)
        assert lat.rank_of(data.mu) == fan.lattice.rank
        assert data.k_hat_rank == data.class_group.free_rank
        assert v.vivid == hv.smooth
        if v.vivid:
            vivid_count += 1
        count += 1
    _report(5, "cox suite", f"{count} fans, {vivid_count} vivid")


# -------------------------------------------------------------------- 6 ---

def test_acceptance_6_class_group_goldens_and_snf():
    """Class group Z for the two golden fans, checked against the
    gcd-of-minors oracle; Smith normal form postconditions on 1000 random
    matrices up to 8x8."""
    toric = dk.standard_diagram([], torus_rank=2)
    L2 = F.ColouredLattice(2, (), ())

    def fan_of(*gens):
        return F.validate_fan(L2, [
            F.ColouredCone(pc.cone_from_generators(g, 2), frozenset())
            for g in gens])

    for rays in ([[(1, 0), (0, 1)], [(0, 1), (-1, -1)], [(-1, -1), (1, 0)]],
                 [[(1, 0), (0, 1)], [(0, 1), (-1, -2)], [(-1, -2), (1, 0)]]):
        fan = fan_of(*rays)
        data = cox.cox_construct(fan)
        assert data.class_group == lat.FGAbelianGroup(1, ())
        # independent recomputation from determinantal divisors
        mu_T = lat.transpose(data.mu, ncols=data.n_hat_rank)
        facs = minors_gcd_invariant_factors(mu_T)
        oracle_group = lat.FGAbelianGroup(
            free_rank=len(mu_T) - len(facs),
            torsion=tuple(f for f in facs if f > 1))
        assert oracle_group == data.class_group

    rng = random.Random(1851)
    for trial in range(1000):
        m = rng.randint(1, 8)
        n = rng.randint(1, 8)
        A = tuple(tuple(rng.randint(-20, 20) for _ in range(n))
                  for _ in range(m))
        U, D, V = lat.smith_normal_form(A)
        assert lat.mat_mul(lat.mat_mul(U, A), V) == D
        assert abs(lat.determinant(U)) == 1
        assert abs(lat.determinant(V)) == 1
        diag = [D[i][i] for i in range(min(m, n))]
        for a, b in zip(diag, diag[1:]):
            assert a >= 0 and b >= 0
            if a == 0:
                assert b == 0
            elif b:
                assert b % a == 0
    _report(6, "class groups + SNF", "2 goldens vs minors oracle, "
            "1000 random SNF postcondition checks")


# -------------------------------------------------------------------- 7 ---

def test_acceptance_7_affine_equivalences():
    """Full-colour simple fans without torus factors: G/P a product of
    projective spaces <=> the cone is vivid <=> the lifted fan is the
    smooth first-orthant simple coloured cone (an affine space)."""
    rng = random.Random(1925)
    count = 0
    true_count = 0
    while count < 100:
        d = S.random_diagram(rng)
        rank = rng.randint(1, 3)
        # colour points inside the positive orthant keep the cone pointed
        points = []
        for _ in d.colours:
            p = tuple(rng.randint(0, 3) for _ in range(rank))
            points.append(p if any(p) else (1,) + (0,) * (rank - 1))
        gens = list(points)
        for e in lat.identity(rank):
            if lat.rank_of(gens) == rank:
                break
            if lat.rank_of(gens + [e]) > lat.rank_of(gens):
                gens.append(e)
        L = F.ColouredLattice(rank, d.colours, tuple(points))
        sc = F.ColouredCone(pc.cone_from_generators(gens, rank),
                            frozenset(d.colours))
        fan = F.validate_fan(L, [sc])
        if cox.has_torus_factors(fan):
            continue
        rep = cox.cox_consistency(fan, d)
        assert rep.orthant_shape is True
        assert dk.is_projective_space_product(d) == rep.fan_vivid \
            == rep.affine_space
        if rep.fan_vivid:
            true_count += 1
        count += 1
    _report(7, "affine equivalences",
            f"{count} full-colour cones, {true_count} vivid")


# -------------------------------------------------------------------- 8 ---

def test_acceptance_8_polyhedral_oracle():
    """contains/faces/intersect agree with brute-force rational
    feasibility oracles in dimension <= 3."""
    rng = random.Random(1787)
    cones = []
    count = 0
    while count < 200:
        dim = rng.randint(2, 3)
        gens = [tuple(rng.randint(-3, 3) for _ in range(dim - 1))
                + (rng.randint(1, 3),) for _ in range(rng.randint(1, 5))]
        c = pc.cone_from_generators(gens, dim)
        # membership classification against the Caratheodory oracle
        for _ in range(4):
            v = tuple(rng.randint(-4, 4) for _ in range(dim))
            inside = member_oracle(gens, v)
            assert (pc.contains(c, v) != pc.OUTSIDE) == inside
        # face lattice against the cross-product oracle
        if dim == 3 and c.dim == 3:
            assert {frozenset(f.rays) for f in pc.faces(c)} \
                == faces3d_oracle(gens)
        cones.append((c, gens))
        count += 1
    # intersections: sampled membership must agree on both inputs
    inter_checked = 0
    for (a, ga), (b, gb) in zip(cones, cones[1:]):
        if a.ambient_rank != b.ambient_rank:
            continue
        i = pc.intersect(a, b)
        for r in i.rays:
            assert member_oracle(ga, r) and member_oracle(gb, r)
        for _ in range(3):
            v = tuple(rng.randint(-3, 3) for _ in range(a.ambient_rank))
            both = member_oracle(ga, v) and member_oracle(gb, v)
            assert (pc.contains(i, v) != pc.OUTSIDE) == both
        inter_checked += 1
    _report(8, "polyhedral oracle",
            f"{count} cones, {inter_checked} intersections")


# -------------------------------------------------------------------- 9 ---

def test_acceptance_9_torus_split_commutation():
    """Fans with deliberate torus factors: splitting and then running the
    construction reproduces the class group and lifted rank computed
    directly in ambient coordinates and via the block-matrix recipe."""
    rng = random.Random(1843)
    count = 0
    while count < 50:
        d = S.random_diagram(rng, max_components=1)
        base_rank = rng.randint(1, 2)
        base = S.random_coloured_fan(rng, d, base_rank,
                                     n_hyperplanes=rng.randint(1, 2),
                                     complete=True)
        if cox.has_torus_factors(base):
            continue
        q = rng.randint(1, 2)
        fan = S.embed_with_torus_factor(rng, base, q)
        split = cox.torus_split(fan)
        assert split.quotient_rank == q
        data = cox.cox_construct(split.restricted_fan)

        n_hat_direct = len(fan.lattice.colours) + len(fan.non_coloured_rays())
        assert data.n_hat_rank == n_hat_direct

        cols = [fan.lattice.xi(a) for a in fan.lattice.colours]
        cols += list(fan.non_coloured_rays())
        assert lat.cokernel_structure(lat.freeze_matrix(cols)) \
            == data.class_group

        n_prime = split.restricted_fan.lattice.rank
        block = [tuple(row) + (0,) * q for row in
                 lat.transpose(data.mu, ncols=data.n_hat_rank)]
        block += [(0,) * n_prime + tuple(1 if j == i else 0 for j in range(q))
                  for i in range(q)]
        assert lat.cokernel_structure(lat.freeze_matrix(block)) \
            == data.class_group
        count += 1
    _report(9, "torus split commutation", f"{count} fans with torus factors")
