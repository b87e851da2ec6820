from __future__ import annotations

import random
from math import gcd

import pytest

from crverify import chartab, permgrp
from crverify.exactnum import ONE, ZERO, Cyclotomic
from crverify.modp import charpoly_mod_p, is_prime, nullspace_mod_p, primitive_root, roots_mod_p, rref
from crverify.reference_tables import A7_DEG10_ON_S5, PRINTED_TABLES

ALL_SPECS = ["A5", "S5", "A6", "A7", "PSL2(7)", "SL2(8)", "PSL2(11)"]


# ---------------------------------------------------------------------------
# modular helpers


def test_modp_helpers():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    g = primitive_root(31)
    assert len({pow(g, k, 31) for k in range(30)}) == 30
    rows, piv = rref([[2, 4, 6], [1, 2, 3], [0, 1, 1]], 7)
    assert piv == [0, 1] and rows[0][0] == 1
    ns = nullspace_mod_p([[1, 2, 3], [0, 1, 1]], 7)
    assert len(ns) == 1 and all(sum(a * b for a, b in zip(r, ns[0])) % 7 == 0 for r in [[1, 2, 3], [0, 1, 1]])


def test_charpoly_against_determinant():
    # oracle: det(t I - A) by cofactor expansion at every t in F_p
    rng = random.Random(5)
    p = 13
    for _ in range(20):
        n = rng.randint(1, 4)
        A = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        cp = charpoly_mod_p(A, p)
        for t in range(p):
            M = [[(t * (i == j) - A[i][j]) % p for j in range(n)] for i in range(n)]
            assert sum(c * pow(t, k, p) for k, c in enumerate(cp)) % p == _det(M) % p
        assert sorted(roots_mod_p(cp, p)) == [t for t in range(p)
                                              if sum(c * pow(t, k, p) for k, c in enumerate(cp)) % p == 0]


def _det(M):
    if len(M) == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * _det([r[:j] + r[j + 1:] for r in M[1:]]) for j in range(len(M)))


# ---------------------------------------------------------------------------
# tables


def test_dixon_prime():
    assert chartab.dixon_prime(60, 30) == 31
    p = chartab.dixon_prime(2520, 420)
    assert is_prime(p) and p % 420 == 1 and p * p > 4 * 2520


@pytest.mark.parametrize("spec", ALL_SPECS)
def test_table_is_consistent(spec, table):
    T = table(spec)
    T.verify()
    assert sum(d * d for d in T.degrees) == T.order
    assert len(T) == len(T.classes)
    assert chartab.trivial_character(T.classes) in T.irreducibles
    assert T.is_galois_stable()
    for chi in T.irreducibles:
        assert chartab.inner_product(chi, chi) == ONE
        assert T.order % T.degrees[T.irreducibles.index(chi)] == 0


def test_trivial_group_table():
    G = permgrp.PermGroup([permgrp.identity(3)], 3)
    T = chartab.dixon_character_table(G)
    assert T.degrees == [1]


@pytest.mark.parametrize("spec,degrees", [
    ("A5", [1, 3, 3, 4, 5]),
    ("S5", [1, 1, 4, 4, 5, 5, 6]),
    ("A7", [1, 6, 10, 10, 14, 14, 15, 21, 35]),
    ("PSL2(11)", [1, 5, 5, 10, 10, 11, 12, 12]),
    ("PSL2(7)", [1, 3, 3, 6, 7, 8]),
])
def test_degrees(spec, degrees, table):
    assert table(spec).degrees == degrees


def test_a7_degrees_in_window(table):
    assert sorted({d for d in table("A7").degrees if 2 <= d <= 14}) == [6, 10, 14]


@pytest.mark.parametrize("name", sorted(PRINTED_TABLES))
def test_printed_rows_match(name, table):
    ref = PRINTED_TABLES[name]
    T = table(name)
    m = chartab.match_printed_rows(T, ref["orders"], ref["rows"])
    assert m is not None
    assert sorted(m.columns) == list(range(len(T.classes)))
    for row, i in m.rows.items():
        assert [T[i][c] for c in m.columns] == [Cyclotomic.rational(v) if not isinstance(v, Cyclotomic) else v
                                                for v in ref["rows"][row]]


def test_wrong_row_is_not_matched(table):
    ref = PRINTED_TABLES["A5"]
    rows = dict(ref["rows"])
    rows["bogus"] = [3, 1, 0, -1, -1]
    assert chartab.match_printed_rows(table("A5"), ref["orders"], rows) is None


def test_class_function_algebra(table):
    T = table("A5")
    chi = T[1]
    assert (chi * chi).degree == 9
    # chi^2 = Sym^2 + Alt^2 = (1 + 5) + chi for a three-dimensional A5 character
    assert chartab.decompose(chi * chi, T) == [1, 1, 0, 0, 1]
    assert chi.conjugate().conjugate() == chi
    assert chi.power_map_values(1) == chi
    assert chartab.inner_product(T.trivial(), T.trivial()) == ONE


def test_permutation_character_transitive(group, table):
    T = table("A7")
    pi = chartab.permutation_character(T.classes)
    assert chartab.inner_product(pi, T.trivial()) == ONE
    assert chartab.decompose(pi, T) == [1, 1, 0, 0, 0, 0, 0, 0, 0]


def test_regular_character(table):
    T = table("S5")
    reg = chartab.regular_character(T.classes)
    assert chartab.decompose(reg, T) == T.degrees


def test_decompose_sum_of_two(table):
    T = table("PSL2(11)")
    fives = [i for i, d in enumerate(T.degrees) if d == 5]
    dec = chartab.decompose(T[fives[0]] + T[fives[1]], T)
    assert dec == [1 if i in fives else 0 for i in range(len(T))]


def test_decompose_rejects_non_characters(table):
    T = table("A5")
    half = chartab.ClassFunction(T.classes, [Cyclotomic.rational(1) if k == 0 else ZERO
                                             for k in range(len(T.classes))])
    with pytest.raises(ValueError):
        chartab.decompose(half, T)


def test_sym_power_degree(table):
    T = table("PSL2(11)")
    chi = T.characters_of_degree(5)[0]
    assert chartab.sym_power_character(chi, 3).degree == chartab.binomial_sym_dim(5, 3) == 35
    s2 = chartab.sym_power_character(chi, 2)
    sq = chi.power_map_values(2)
    for k in range(len(T.classes)):
        assert s2[k] == (chi[k] * chi[k] + sq[k]) / 2
    triv = T.trivial()
    assert chartab.sym_power_character(triv, 2) == triv


def test_molien_psl2_11(table):
    for chi in table("PSL2(11)").characters_of_degree(5):
        assert chartab.molien_invariant_dim(chi, 3) == 1
        assert chartab.molien_invariant_dim(chi, 4) == 0


def test_molien_psp4_3(table):
    T = table("PSp4(3):40")
    fives = T.characters_of_degree(5)
    assert len(fives) == 2
    for chi in fives + T.characters_of_degree(6):
        assert chartab.molien_invariant_dim(chi, 3) == 0
    assert max(chartab.molien_invariant_dim(chi, 4) for chi in fives) >= 1


def test_restriction_a7_to_s5(group, table):
    A7 = group("A7")
    S5 = permgrp.s5_in_a7()
    TS = chartab.dixon_character_table(S5)
    fus = chartab.subgroup_fusion(S5, A7, with_conjugators=True)
    for k, c in enumerate(fus.conjugators):
        assert permgrp.perm_conj(fus.sub_classes.reps[k], c) == A7.conjugacy_classes().reps[fus.mapping[k]]
    ref = PRINTED_TABLES["S5"]
    m = chartab.match_printed_rows(TS, ref["orders"], ref["rows"])
    for chi in table("A7").characters_of_degree(10):
        res = chartab.restrict(chi, fus)
        assert [res[c] for c in m.columns] == A7_DEG10_ON_S5
        dec = chartab.decompose(res, TS)
        order = [m.rows[name] for name in ("chi1'", "chi2'", "chi3'", "chi4'", "chi5'", "chi6'", "chi7'")]
        assert [dec[i] for i in order] == [0, 1, 0, 1, 0, 0, 0]


def test_restriction_psl2_11_to_a5(group, table):
    G = group("PSL2(11)")
    H = permgrp.psl2_11_a5_subgroup(G)
    TH = chartab.dixon_character_table(H)
    ref = PRINTED_TABLES["A5"]
    m = chartab.match_printed_rows(TH, ref["orders"], ref["rows"])
    fus = chartab.subgroup_fusion(H, G)
    for chi in table("PSL2(11)").characters_of_degree(5):
        res = chartab.restrict(chi, fus)
        assert chartab.inner_product(res, res) == ONE
        assert res == TH[m.rows["chi5'"]]


def test_coset_character_a7(group, table):
    T = table("A7")
    H = permgrp.a7_psl27_subgroup(group("A7"))
    pi = chartab.coset_character(T.classes, H)
    assert pi.degree == 15
    # oracle: fixed points of the explicit coset action
    A = group("coset:A7/PSL2(7)")
    assert chartab.inner_product(pi, T.trivial()) == 1
    assert sorted(d for d, k in zip(T.degrees, chartab.decompose(pi, T)) for _ in range(k)) == [1, 14]
    assert A.order == T.order


def test_min_faithful_degree(group, table):
    assert chartab.min_faithful_rep_degree(table("A5")) == 3
    assert chartab.min_faithful_rep_degree(table("S5")) == 4
    assert chartab.min_faithful_rep_degree(table("A6")) == 5
    H = group("SL2(8)").point_stabilizer(0)
    TH = chartab.dixon_character_table(H)
    assert sorted(set(TH.degrees)) == [1, 7]
    assert chartab.min_faithful_rep_degree(TH) == 7
    C6 = chartab.dixon_character_table(permgrp.cyclic(6))
    assert chartab.min_faithful_rep_degree(C6) == 1
    V4 = chartab.dixon_character_table(permgrp.direct_sum(permgrp.cyclic(2), permgrp.cyclic(2)))
    assert chartab.min_faithful_rep_degree(V4) == 2


def test_cyclic_group_table_is_roots_of_unity():
    T = chartab.dixon_character_table(permgrp.cyclic(5))
    assert T.degrees == [1] * 5
    vals = {v for chi in T.irreducibles for v in chi}
    assert vals == {Cyclotomic.zeta(5, k) for k in range(5)}


def test_class_matrix_structure_constants(group):
    cl = group("A5").conjugacy_classes()
    p = 31
    Ms = chartab.class_matrices_mod_p(cl, p)
    # the identity class matrix is the identity
    r = len(cl)
    assert Ms[0] == [[int(i == j) for j in range(r)] for i in range(r)]
    # oracle: brute-force count for one entry
    G = group("A5")
    j, l, k = 1, 2, 3
    z = cl.reps[k]
    cnt = sum(1 for x in cl.members[j] if cl.class_of(permgrp.perm_mul(permgrp.perm_inv(x), z)) == l)
    assert Ms[j][l][k] == cnt % p
    assert G.order == 60


def test_galois_action_permutes_rows(table):
    T = table("A7")
    rows = set(T.irreducibles)
    for k in range(1, T.classes.exponent):
        if gcd(k, T.classes.exponent) == 1:
            assert {chi.galois(k) for chi in T.irreducibles} == rows


def test_to_json_roundtrip(table):
    T = table("A5")
    js = T.to_json()
    assert [c["size"] for c in js["classes"]] == T.classes.sizes
    vals = [[Cyclotomic.from_text(v) for v in row] for row in js["characters"]]
    assert vals == [list(chi) for chi in T.irreducibles]


def test_class_function_products_bilinear(table):
    T = table("S5")
    rng = random.Random(11)
    for _ in range(50):
        a, b, c = (T[rng.randrange(len(T))] for _ in range(3))
        assert chartab.inner_product(a + b, c) == chartab.inner_product(a, c) + chartab.inner_product(b, c)
        assert chartab.inner_product(a * b, c) == chartab.inner_product(a, b.conjugate() * c)


def test_kernels(table):
    T = table("S5")
    sign = next(chi for chi in T.irreducibles if chi.degree == 1 and chi != T.trivial())
    ker = sign.kernel()
    assert sum(T.classes.sizes[k] for k in ker) == 60


def test_printed_tables_are_well_formed():
    for ref in PRINTED_TABLES.values():
        assert len(ref["columns"]) == len(ref["orders"])
        assert all(len(r) == len(ref["columns"]) for r in ref["rows"].values())
