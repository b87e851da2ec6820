from __future__ import annotations

import random
from itertools import permutations, product
from math import factorial

import pytest

from crverify import permgrp as pg
from crverify.permgrp import (
    PermGroup,
    coset_action,
    cycles,
    format_perm,
    from_cycles,
    perm_conj,
    perm_inv,
    perm_mul,
    perm_order,
    perm_pow,
)


def sl3_order(q: int) -> int:
    return (q**3 - 1) * (q**3 - q) * (q**3 - q**2) // (q - 1)


def test_perm_basics():
    p = from_cycles(5, (0, 1, 2))
    q = from_cycles(5, (1, 3))
    # left-to-right composition: apply p first, then q
    assert perm_mul(p, q) == tuple(q[p[i]] for i in range(5))
    assert perm_mul(p, perm_inv(p)) == pg.identity(5)
    assert perm_order(p) == 3 and perm_order(perm_mul(p, q)) == 4
    assert perm_pow(p, -1) == perm_inv(p) and perm_pow(p, 3) == pg.identity(5)
    assert perm_conj(p, q) == perm_mul(perm_mul(perm_inv(q), p), q)
    assert [c for c in cycles(p) if len(c) > 1] == [(0, 1, 2)]
    assert format_perm(pg.identity(3)) == "()"
    with pytest.raises(ValueError):
        pg.check_perm((0, 0, 1))


@pytest.mark.parametrize("spec,degree,order", [
    ("A5", 5, 60), ("S5", 5, 120), ("A6", 6, 360), ("A7", 7, 2520), ("PSL2(7)", 8, 168),
    ("SL2(8)", 9, 504), ("PSL2(11)", 12, 660), ("PSp4(3):40", 40, 25920),
    ("SL3(3):26", 26, sl3_order(3)), ("SL3(3):13", 13, sl3_order(3)),
])
def test_orders(spec, degree, order, group):
    G = group(spec)
    assert G.degree == degree and G.order == order


@pytest.mark.parametrize("spec", ["A5", "S5", "PSL2(7)", "SL2(8)", "PSL2(11)", "A7"])
def test_enumeration_matches_chain(spec, group):
    G = group(spec)
    els = G.elements()
    assert len(els) == len(set(els)) == G.order
    assert all(g in G for g in els[:50])


def test_symmetric_orders_against_factorial():
    for n in range(1, 8):
        assert pg.symmetric(n).order == factorial(n)
        assert pg.alternating(n).order == max(1, factorial(n) // 2)


def test_trivial_group():
    G = PermGroup([pg.identity(4)], 4)
    assert G.order == 1 and G.elements() == [pg.identity(4)]


def test_membership():
    A5 = pg.alternating(5)
    assert from_cycles(5, (0, 1, 2)) in A5
    assert from_cycles(5, (0, 1)) not in A5


def test_base_prefix_gives_same_order():
    G = pg.psl2(11)
    H = PermGroup(G.generators, G.degree, base_prefix=[11, 0])
    assert H.order == 660 and H.chain.base[:2] == [11, 0]


def test_brute_force_order_small():
    # oracle: closure by multiplication in S4
    gens = [from_cycles(4, (0, 1, 2, 3)), from_cycles(4, (0, 2))]
    seen = {pg.identity(4)}
    frontier = list(seen)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = perm_mul(x, g)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    assert PermGroup(gens, 4).order == len(seen) == 8


def test_orbits():
    assert pg.alternating(7).is_transitive()
    two = pg.direct_sum(pg.alternating(5), pg.alternating(5))
    assert len(two.orbits()) == 2 and not two.is_transitive()
    assert two.order == 3600
    diag = pg.diagonal_sum(pg.alternating(5))
    assert diag.order == 60 and len(diag.orbits()) == 2


def test_coset_action_a7_psl27(group):
    A = group("coset:A7/PSL2(7)")
    assert A.degree == 15 and A.is_transitive() and A.order == 2520
    assert A.point_stabilizer(0).order == 168


def test_blocks_sl3_3():
    G = pg.sl3_3_on_26()
    systems = G.minimal_blocks()
    assert not G.is_primitive()
    assert [(len(s), len(s[0])) for s in systems] == [(13, 2)]
    vecs = [v for v in product(range(3), repeat=3) if any(v)]
    for a, b in systems[0]:
        assert tuple((-x) % 3 for x in vecs[a]) == vecs[b]
    assert G.transitivity_degree() == 1


def test_primitivity():
    assert pg.psl2(11).is_primitive()
    assert pg.alternating(7).is_primitive()
    C4 = pg.cyclic(4)
    assert not C4.is_primitive()
    assert C4.minimal_blocks() == [[(0, 2), (1, 3)]]
    with pytest.raises(ValueError):
        pg.direct_sum(pg.cyclic(2), pg.cyclic(2)).minimal_blocks()


def test_transitivity_degrees():
    assert pg.psl2(11).transitivity_degree() == 2
    assert pg.symmetric(5).transitivity_degree(max_k=3) == 3
    H = pg.psl2_11_a5_subgroup()
    A = coset_action(pg.psl2(11), H)
    assert A.degree == 11 and A.transitivity_degree() >= 2


def test_stabilizers(group):
    H = group("SL2(8)").point_stabilizer(0)
    D = H.derived_subgroup()
    assert H.order == 56 and D.order == 8 and D.exponent() == 2 and D.is_abelian()
    assert group("A7").point_stabilizer(0).order == 360


def test_conjugacy_classes_a7(group):
    cc = group("A7").conjugacy_classes()
    assert len(cc) == 9
    assert sum(cc.sizes) == 2520
    assert sorted(s for s, o in zip(cc.sizes, cc.orders) if o == 7) == [360, 360]
    # brute-force class of a 3-cycle
    G = group("A7")
    x = from_cycles(7, (0, 1, 2))
    cls = {perm_conj(x, g) for g in G.elements()}
    assert cc.sizes[cc.class_of(x)] == len(cls) == 70


@pytest.mark.parametrize("spec,count", [("S5", 7), ("PSL2(11)", 8), ("A5", 5), ("PSL2(7)", 6)])
def test_class_counts(spec, count, group):
    assert len(group(spec).conjugacy_classes()) == count


def test_power_maps(group):
    cc = group("A7").conjugacy_classes()
    assert cc.power_map(1) == tuple(range(len(cc)))
    for k in (2, 3, 5, 7):
        for i, r in enumerate(cc.reps):
            assert cc.power_map(k)[i] == cc.class_of(perm_pow(r, k))
    labels = cc.labels()
    assert labels[0] == "1a" and sorted(l for l in labels if l.startswith("7")) == ["7a", "7b"]


def test_class_function_property_random(group):
    # conjugation preserves class membership
    rng = random.Random(7)
    G = group("PSL2(11)")
    cc = G.conjugacy_classes()
    for _ in range(200):
        x, g = G.random_element(rng), G.random_element(rng)
        assert cc.class_of(x) == cc.class_of(perm_conj(x, g))


def test_finite_fields():
    for q in (4, 8, 9, 27):
        F = pg.finite_field(q)
        for a in range(1, q):
            assert F.mul[a][F.inv(a)] == 1
            assert F.add[a][F.neg(a)] == 0
        # distributivity and a generator of the multiplicative group
        rng = random.Random(q)
        for _ in range(200):
            a, b, c = (rng.randrange(q) for _ in range(3))
            assert F.mul[a][F.add[b][c]] == F.add[F.mul[a][b]][F.mul[a][c]]
        g, x, seen = F.primitive(), 1, set()
        for _ in range(q - 1):
            x = F.mul[x][g]
            seen.add(x)
        assert len(seen) == q - 1


def test_unsupported_groups():
    with pytest.raises(pg.UnsupportedGroupError):
        pg.group_from_spec("M11")
    with pytest.raises(ValueError):
        pg.group_from_spec("nonsense")


def test_enumeration_budget():
    with pytest.raises(pg.EnumerationBudgetError):
        pg.symmetric(9).elements()


def test_find_subgroup_deterministic():
    G = pg.psl2(11)
    H1, pair1 = pg.find_subgroup_by_pair(G, 2, 5, 60, seed=3)
    H2, pair2 = pg.find_subgroup_by_pair(G, 2, 5, 60, seed=3)
    assert pair1 == pair2 and H1.order == 60


def test_s5_embedding_is_even():
    S = pg.s5_in_a7()
    assert S.order == 120 and S.is_subgroup_of(pg.alternating(7))


def test_fano_plane_collineations():
    lines = pg.fano_plane_lines()
    H = pg.a7_psl27_subgroup()
    assert len(lines) == 7 and H.order == 168
    for g in H.generators:
        assert {frozenset(g[i] for i in l) for l in lines} == set(lines)


def test_small_symmetric_conjugacy_against_cycle_types():
    # oracle: classes of S4 are cycle types
    G = pg.symmetric(4)
    types = {tuple(sorted(len(c) for c in cycles(p))) for p in permutations(range(4))}
    assert len(G.conjugacy_classes()) == len(types) == 5
