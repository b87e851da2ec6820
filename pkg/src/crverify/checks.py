"""The registry of verification checks run by the command-line tool.

Each check returns ``(passed, witness)``; the witness always records the
inputs together with observed and expected values so that a failure can be
reproduced by hand.
"""

from __future__ import annotations

import threading
from itertools import product
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import chartab, fano, permgrp
from .polyinv import (
    VARIETIES,
    derived_subgroup,
    group_closure,
    invariance_nullity,
    invariant_space_dim_direct,
    is_invariant,
    jacobian_rank_at,
    klein_55_generators,
    klein_exponents,
    matrix_from_root_permutation,
    reduce_point,
    root_permutations,
    segre_node_orbit,
    singular_points_mod_p,
    weyl_e6,
)
from .reference_tables import A7_DEG10_ON_S5, PRINTED_TABLES

SUITES = ("orders", "permutation", "characters", "invariants", "varieties", "fano")


@dataclass(frozen=True)
class Check:
    check_id: str
    suite: str
    anchor: str
    run: Callable[["Context"], tuple[bool, dict]]
    budget: float = 60.0


class Context:
    """Memoised groups, tables and other shared objects for one run."""

    def __init__(self, seed: int = 0):
        self.seed = seed
        self._cache: dict = {}
        self._locks: dict = {}
        self._guard = threading.Lock()

    def memo(self, key, build):
        with self._guard:
            lock = self._locks.setdefault(key, threading.Lock())
        with lock:
            if key not in self._cache:
                self._cache[key] = build()
            return self._cache[key]

    def group(self, spec: str) -> permgrp.PermGroup:
        return self.memo(("group", spec), lambda: permgrp.group_from_spec(spec, seed=self.seed))

    def table(self, spec: str) -> chartab.CharacterTable:
        return self.memo(("table", spec), lambda: chartab.dixon_character_table(self.group(spec)))

    def a5_in_psl2_11(self):
        def build():
            G = self.group("PSL2(11)")
            H, pair = permgrp.find_subgroup_by_pair(G, 2, 5, 60, seed=self.seed)
            return H, pair
        return self.memo("a5<psl2(11)", build)

    def weyl(self):
        return self.memo("weyl_e6", weyl_e6)

    def weyl_derived(self):
        return self.memo("weyl_e6'", lambda: derived_subgroup(self.weyl()))

    def weyl_derived_perm(self):
        def build():
            W, D = self.weyl(), self.weyl_derived()
            perms, roots = root_permutations(W, D.generators)
            return permgrp.PermGroup(perms, len(roots)), roots
        return self.memo("weyl_e6'-roots", build)


def _row_text(f) -> list:
    return [v.to_text() for v in f]


CHECKS: list[Check] = []


def check(check_id: str, suite: str, anchor: str, budget: float = 60.0):
    def deco(fn):
        CHECKS.append(Check(check_id, suite, anchor, fn, budget))
        return fn
    return deco


# ---------------------------------------------------------------------------
# orders

GROUP_ORDERS = [
    ("A5", 60), ("A6", 360), ("A7", 2520), ("PSL2(7)", 168),
    ("SL2(8)", 504), ("PSp4(3):40", 25920), ("PSL2(11)", 660),
]


def _order_check(spec: str, expected: int):
    def run(ctx: Context):
        G = ctx.group(spec)
        enumerated = len(G.elements())
        ok = G.order == expected == enumerated
        return ok, {"group": spec, "degree": G.degree, "expected": expected,
                    "observed": G.order, "enumerated": enumerated, "base": G.chain.base}
    return run


for _spec, _order in GROUP_ORDERS:
    _slug = _spec.split(":")[0].lower().replace("(", "-").replace(")", "")
    check(f"permgrp.order-{_slug}", "orders", f"group order table: {_spec} has order {_order}")(
        _order_check(_spec, _order))


# ---------------------------------------------------------------------------
# permutation facts


@check("permgrp.sl2-8-point-stabilizer", "permutation",
       "SL2(8) on P^1(F_8): stabilizer (mu_2)^3 x| mu_7")
def _(ctx):
    G = ctx.group("SL2(8)")
    H = G.point_stabilizer(0)
    D = H.derived_subgroup()
    ok = H.order == 56 and D.order == 8 and D.exponent() == 2 and D.is_abelian()
    return ok, {"stabilizer_order": H.order, "derived_order": D.order,
                "derived_exponent": D.exponent(), "expected": [56, 8, 2]}


@check("permgrp.sl3-3-imprimitive-26", "permutation",
       "SL3(3) on the 26 nonzero vectors of F_3^3 is imprimitive")
def _(ctx):
    G = ctx.group("SL3(3):26")
    systems = G.minimal_blocks()
    vecs = [v for v in product(range(3), repeat=3) if any(v)]
    index = {v: i for i, v in enumerate(vecs)}
    pairs = sorted({tuple(sorted((index[v], index[tuple((-x) % 3 for x in v)]))) for v in vecs})
    found = [s for s in systems if len(s) == 13 and all(len(b) == 2 for b in s)]
    ok = G.order == 5616 and bool(found) and sorted(found[0]) == pairs
    return ok, {"order": G.order, "block_systems": [[len(s), len(s[0])] for s in systems],
                "blocks_are_plus_minus_pairs": bool(found) and sorted(found[0]) == pairs,
                "transitivity_degree": G.transitivity_degree()}


@check("permgrp.psl2-11-coset-11-doubly-transitive", "permutation",
       "PSL2(11) acting on the 11 cosets of A5 is doubly transitive")
def _(ctx):
    H, pair = ctx.a5_in_psl2_11()
    G = ctx.group("PSL2(11)")
    A = permgrp.coset_action(G, H)
    k = A.transitivity_degree()
    ok = A.degree == 11 and A.order == 660 and k >= 2 and A.is_primitive()
    return ok, {"a5_generators": [permgrp.format_perm(p) for p in pair], "seed": ctx.seed,
                "degree": A.degree, "order": A.order, "transitivity_degree": k,
                "note": "A5 subgroup is the first one found by the seeded search"}


@check("permgrp.psl2-11-projective-line", "permutation",
       "PSL2(11) on P^1(F_11): primitive and doubly transitive")
def _(ctx):
    G = ctx.group("PSL2(11)")
    H = G.point_stabilizer(0)
    ok = G.is_primitive() and G.transitivity_degree() >= 2 and H.order == 55
    return ok, {"primitive": G.is_primitive(), "transitivity_degree": G.transitivity_degree(),
                "stabilizer_order": H.order}


@check("permgrp.a7-coset-15", "permutation",
       "A7 acts transitively on 15 points with stabilizer PSL2(7)")
def _(ctx):
    A = ctx.group("coset:A7/PSL2(7)")
    ok = A.degree == 15 and A.is_transitive() and A.order == 2520
    return ok, {"degree": A.degree, "transitive": A.is_transitive(), "order": A.order}


@check("permgrp.a7-stabilizer-a6", "permutation", "A_n point stabilizer is A_{n-1}")
def _(ctx):
    H = ctx.group("A7").point_stabilizer(0)
    return H.order == 360, {"observed": H.order, "expected": 360}


@check("permgrp.class-counts", "permutation",
       "numbers of conjugacy classes of A7, S5, PSL2(11) match the table widths")
def _(ctx):
    want = {"A7": 9, "S5": 7, "PSL2(11)": 8}
    got = {s: len(ctx.group(s).conjugacy_classes()) for s in want}
    sevens = [sz for sz, o in zip(ctx.group("A7").conjugacy_classes().sizes,
                                  ctx.group("A7").conjugacy_classes().orders) if o == 7]
    return got == want and sevens == [360, 360], {"observed": got, "expected": want,
                                                  "a7_seven_cycle_class_sizes": sevens}


@check("permgrp.mathieu-not-constructed", "permutation",
       "Mathieu groups are outside the constructed cast")
def _(ctx):
    try:
        permgrp.group_from_spec("M11")
    except permgrp.UnsupportedGroupError as e:
        return True, {"error": str(e)}
    return False, {"error": None}


@check("chartab.min-faithful-degrees", "permutation",
       "stabilizers with a faithful representation of degree <= 4")
def _(ctx):
    want = {"A5": 3, "S5": 4, "A6": 5, "SL2(8)_stabilizer": 7}
    got = {
        "A5": chartab.min_faithful_rep_degree(ctx.table("A5")),
        "S5": chartab.min_faithful_rep_degree(ctx.table("S5")),
        "A6": chartab.min_faithful_rep_degree(ctx.table("A6")),
        "SL2(8)_stabilizer": chartab.min_faithful_rep_degree(
            chartab.dixon_character_table(ctx.group("SL2(8)").point_stabilizer(0))),
    }
    return got == want, {"observed": got, "expected": want}


@check("fano.transitive-orbit-window", "permutation",
       "orbits of 9..15 half-points: transitive actions with small faithful stabilizer representations")
def _(ctx):
    cands = fano.transitive_candidates((9, 15), 3)
    found = [(c.group, c.degree) for c in cands]
    ok = ("PSL2(11)", 11) in found
    return ok, {"candidates": [c.__dict__ for c in cands],
                "note": "numerical filter only; further cases are excluded by geometric arguments"}


# ---------------------------------------------------------------------------
# characters


def _printed_table_check(name: str):
    def run(ctx):
        ref = PRINTED_TABLES[name]
        T = ctx.table(name)
        m = chartab.match_printed_rows(T, ref["orders"], ref["rows"])
        if m is None:
            return False, {"group": name, "matched": False, "degrees": T.degrees}
        return True, {
            "group": name, "matched": True, "dixon_prime": T.prime,
            "column_bijection": dict(zip(ref["columns"], m.column_labels)),
            "row_bijection": {k: f"irr[{v}]" for k, v in m.rows.items()},
            "rows": {k: _row_text([T[v][c] for c in m.columns]) for k, v in m.rows.items()},
        }
    return run


for _name, _slug in (("A7", "a7"), ("S5", "s5"), ("PSL2(11)", "psl2-11"), ("A5", "a5")):
    check(f"chartab.{_slug}-printed-rows", "characters",
          f"{_name} character table rows (up to class relabelling and Galois pairing)")(
        _printed_table_check(_name))


@check("chartab.irreducible-degrees", "characters",
       "degree lists of A7 and PSL2(11); A7 degrees in [2,14] are 6, 10, 14")
def _(ctx):
    a7 = ctx.table("A7").degrees
    p11 = ctx.table("PSL2(11)").degrees
    ok = (a7 == [1, 6, 10, 10, 14, 14, 15, 21, 35] and sorted({d for d in a7 if 2 <= d <= 14}) == [6, 10, 14]
          and p11 == [1, 5, 5, 10, 10, 11, 12, 12])
    return ok, {"A7": a7, "PSL2(11)": p11}


@check("chartab.tables-orthogonal", "characters",
       "orthogonality and sum of squared degrees for all constructed groups")
def _(ctx):
    out = {}
    ok = True
    for spec in ("A5", "S5", "A6", "A7", "PSL2(7)", "SL2(8)", "PSL2(11)", "PSp4(3):40"):
        T = ctx.table(spec)
        T.verify()
        s = sum(d * d for d in T.degrees)
        out[spec] = {"classes": len(T), "sum_of_squares": s, "galois_stable": T.is_galois_stable()}
        ok &= s == T.order and T.is_galois_stable()
    return ok, out


@check("chartab.a7-restriction-s5", "characters",
       "degree-10 character of A7 restricted to S5 is (10,-2,-2,1,1,0,0) = chi2' + chi4'")
def _(ctx):
    A7 = ctx.group("A7")
    S5 = ctx.memo("s5<a7", permgrp.s5_in_a7)
    TA, TS = ctx.table("A7"), ctx.memo("table s5<a7", lambda: chartab.dixon_character_table(S5))
    fus = chartab.subgroup_fusion(S5, A7, with_conjugators=True)
    ref = PRINTED_TABLES["S5"]
    m = chartab.match_printed_rows(TS, ref["orders"], ref["rows"])
    results = []
    ok = m is not None
    for chi in TA.characters_of_degree(10):
        res = chartab.restrict(chi, fus)
        shown = [res[c] for c in m.columns] if m else []
        dec = chartab.decompose(res, TS)
        named = {name: dec[i] for name, i in m.rows.items()} if m else {}
        nonzero = sorted(k for k, v in named.items() if v)
        ok &= shown == A7_DEG10_ON_S5 and nonzero == ["chi2'", "chi4'"] and all(
            named[k] == 1 for k in nonzero)
        results.append({"restriction": _row_text(shown), "decomposition": named})
    return ok, {"expected": A7_DEG10_ON_S5, "restrictions": results,
                "fusion": list(fus.mapping)}


@check("chartab.psl2-11-restriction-a5", "characters",
       "degree-5 characters of PSL2(11) restrict irreducibly to A5 as chi5'")
def _(ctx):
    G = ctx.group("PSL2(11)")
    H, pair = ctx.a5_in_psl2_11()
    TH = ctx.memo("table a5<psl2(11)", lambda: chartab.dixon_character_table(H))
    ref = PRINTED_TABLES["A5"]
    m = chartab.match_printed_rows(TH, ref["orders"], ref["rows"])
    fus = chartab.subgroup_fusion(H, G)
    out = []
    ok = m is not None
    for chi in ctx.table("PSL2(11)").characters_of_degree(5):
        res = chartab.restrict(chi, fus)
        irr = chartab.inner_product(res, res) == 1
        target = TH[m.rows["chi5'"]] if m else None
        ok &= irr and res == target
        out.append({"restriction": _row_text(res), "irreducible": irr, "equals_chi5'": res == target})
    return ok, {"restrictions": out}


@check("chartab.a7-coset-15-decomposition", "characters",
       "permutation character of A7 on 15 points is 1 + (degree 14)")
def _(ctx):
    TA = ctx.table("A7")
    H = permgrp.a7_psl27_subgroup(ctx.group("A7"))
    pi = chartab.coset_character(TA.classes, H)
    dec = chartab.decompose(pi, TA)
    parts = sorted(d for d, mlt in zip(TA.degrees, dec) for _ in range(mlt))
    return parts == [1, 14], {"degrees": parts, "multiplicities": dec, "character": _row_text(pi)}


# ---------------------------------------------------------------------------
# invariants


@check("chartab.molien-psl2-11-degree-5", "invariants",
       "degree-5 representation of PSL2(11): one cubic invariant, no quartic invariants")
def _(ctx):
    res = {}
    ok = True
    for i, chi in enumerate(ctx.table("PSL2(11)").characters_of_degree(5)):
        d3, d4 = chartab.molien_invariant_dim(chi, 3), chartab.molien_invariant_dim(chi, 4)
        res[f"chi{i}"] = {"d3": d3, "d4": d4, "sym3_degree": int(chartab.sym_power_character(chi, 3).degree)}
        ok &= d3 == 1 and d4 == 0
    return ok, {"observed": res, "expected": {"d3": 1, "d4": 0}}


@check("chartab.molien-psp4-3", "invariants",
       "PSp4(3): no cubic invariants in degrees 5 (both) and 6; quartics reported per character",
       budget=120)
def _(ctx):
    T = ctx.table("PSp4(3):40")
    res = {}
    ok = True
    for d in (5, 6):
        for i, chi in enumerate(T.characters_of_degree(d)):
            d3 = chartab.molien_invariant_dim(chi, 3)
            d4 = chartab.molien_invariant_dim(chi, 4)
            res[f"degree{d}_{i}"] = {"d3": d3, "d4": d4}
            ok &= d3 == 0
    ok &= any(v["d4"] == 1 for k, v in res.items() if k.startswith("degree5"))
    return ok, {"observed": res}


@check("polyinv.weyl-e6-order", "invariants", "reflection group of order 51840", budget=300)
def _(ctx):
    W = ctx.weyl()
    return W.order == 51840, {"observed": W.order, "expected": 51840}


@check("polyinv.weyl-e6-derived-order", "invariants", "its derived subgroup has order 25920", budget=300)
def _(ctx):
    D = ctx.weyl_derived()
    return D.order == 25920, {"observed": D.order, "expected": 25920}


@check("polyinv.weyl-e6-derived-invariants", "invariants",
       "W(E6)' has no cubic invariants: direct averaging agrees with the character route",
       budget=300)
def _(ctx):
    D = ctx.weyl_derived()
    P, roots = ctx.weyl_derived_perm()
    cc = P.conjugacy_classes()
    chi = chartab.ClassFunction(
        cc, [int(matrix_from_root_permutation(r, roots).trace()) for r in cc.reps])
    direct = {d: invariant_space_dim_direct(D, d) for d in (2, 3, 4)}
    molien = {d: chartab.molien_invariant_dim(chi, d) for d in (2, 3, 4)}
    T = chartab.dixon_character_table(P)
    dec = chartab.decompose(chi, T)
    ok = direct == molien and direct[3] == 0 and P.order == 25920
    return ok, {"direct": direct, "character_route": molien, "roots": len(roots),
                "trace_character": _row_text(chi),
                "irreducible_constituents": [T.degrees[i] for i, m in enumerate(dec) if m]}


@check("polyinv.klein-55-invariants", "invariants",
       "group of order 55 generated by the 5-cycle and the diagonal: cubic invariants")
def _(ctx):
    s, t = klein_55_generators()
    G = group_closure([s, t])
    direct = invariant_space_dim_direct(G, 3)
    kernel = invariance_nullity(3, [s, t])
    klein = VARIETIES["klein_cubic"].forms[0]
    ok = G.order == 55 and direct == kernel and direct >= 1 and is_invariant(klein, [s, t])
    return ok, {"order": G.order, "direct_dim": direct, "kernel_dim": kernel,
                "monomials": 35, "klein_cubic_invariant": True}


# ---------------------------------------------------------------------------
# varieties


@check("polyinv.klein-cubic-invariance", "varieties",
       "Klein cubic is invariant under the 5-cycle and diag(zeta_11^(1,9,4,3,5))")
def _(ctx):
    a = klein_exponents()
    s, t = klein_55_generators()
    F = VARIETIES["klein_cubic"].forms[0]
    ok = a == (1, 9, 4, 3, 5) and is_invariant(F, [s, t])
    return ok, {"exponents": list(a), "form": F.to_text()}


def _invariance_check(name: str):
    def run(ctx):
        v = VARIETIES[name]
        gens = v.symmetry()
        ok = is_invariant(v.forms, gens)
        return ok, {"variety": name, "forms": [f.to_text() for f in v.forms], "generators": len(gens)}
    return run


for _name, _anchor in (
    ("palatini", "Palatini quartic is invariant under the order-55 group fixing x0"),
    ("segre_cubic", "Segre cubic forms are S6-invariant"),
    ("burkhardt", "Burkhardt forms are S6-invariant"),
    ("x6prime", "forms sigma_1, sigma_2, sigma_3 in 7 variables are A7-invariant"),
):
    check(f"polyinv.{_name.replace('_', '-')}-invariance", "varieties", _anchor)(_invariance_check(_name))


@check("polyinv.segre-cubic-nodes", "varieties",
       "Segre cubic has 10 nodes, the orbit of (1:1:1:-1:-1:-1)", budget=120)
def _(ctx):
    F = VARIETIES["segre_cubic"].forms
    orbit = segre_node_orbit()
    ranks = [jacobian_rank_at(F, pt) for pt in orbit]
    per_prime = {}
    ok = len(orbit) == 10 and all(r == 1 for r in ranks)
    for p in (31, 41, 61):
        pts = singular_points_mod_p(F, p)
        match = sorted(pts) == sorted(reduce_point(o, p) for o in orbit)
        per_prime[str(p)] = {"count": len(pts), "matches_orbit": match}
        ok &= len(pts) == 10 and match
    return ok, {"orbit": [list(o) for o in orbit], "exact_jacobian_ranks": ranks, "scans": per_prime}


@check("polyinv.klein-cubic-smooth-mod-p", "varieties",
       "Klein cubic threefold has no singular points over F_13 and F_23")
def _(ctx):
    F = VARIETIES["klein_cubic"].forms
    res = {str(p): len(singular_points_mod_p(F, p)) for p in (13, 23)}
    return all(v == 0 for v in res.values()), {"singular_counts": res}


# ---------------------------------------------------------------------------
# Fano numerics


@check("fano.genus-relations", "fano", "dim|-K| = g+1, quadric count, Lefschetz number")
def _(ctx):
    obs = {"quadric_count(5)": fano.quadric_count(5), "h0_anticanonical(12)": fano.h0_anticanonical(12),
           "lefschetz(10)": fano.lefschetz(10)}
    want = {"quadric_count(5)": 3, "h0_anticanonical(12)": 14, "lefschetz(10)": 0}
    return obs == want, {"observed": obs, "expected": want}


@check("fano.h12-table", "fano", "genus and h^{1,2} table of smooth rank-one Fano threefolds")
def _(ctx):
    want = {2: 52, 3: 30, 4: 20, 5: 14, 6: 10, 7: 7, 8: 5, 9: 3, 10: 2, 12: 0}
    got = {g: fano.fano_h12(g) for g in want}
    try:
        fano.fano_h12(11)
        missing = False
    except fano.NoSuchFanoError:
        missing = True
    return got == want and missing, {"observed": {str(k): v for k, v in got.items()},
                                     "genus_11_rejected": missing}


@check("fano.node-bound-product-cases", "fano",
       "|Sing X| <= 13 for (rho, g) in {(7,13), (8,10), (9,7)}")
def _(ctx):
    cases = fano.product_case_bounds((7, 8, 9))
    pairs = [(c["rho"], c["genus"]) for c in cases]
    ok = pairs == [(7, 13), (8, 10), (9, 7)] and max(c["bound"] for c in cases) == 13
    ok &= fano.namikawa_bound(1, fano.fano_h12(8)) == 24 and fano.namikawa_bound(9, fano.fano_h12(7)) == 18
    return ok, {"cases": cases, "max_bound": max(c["bound"] for c in cases)}


@check("fano.basket-multi-entry", "fano",
       "orbits of size >= 7 with two basket points: only n=7, r=(2,2)")
def _(ctx):
    res = fano.basket_inequality_cases(7, entries="multi")
    ok = [b.orbits for b in res] == [((7, (2, 2)),)]
    return ok, {"profiles": [b.as_dict() for b in res]}


@check("fano.basket-single-index", "fano",
       "orbits of size >= 9, one basket point each: m=1, r=2, 9 <= n <= 15")
def _(ctx):
    res = fano.basket_inequality_cases(9, entries="single")
    want = [((n, (2,)),) for n in range(9, 16)]
    loose = fano.basket_inequality_cases(9, entries="single", strict=False)
    empty = fano.basket_inequality_cases(17)
    ok = [b.orbits for b in res] == want and not empty
    return ok, {"profiles": [b.as_dict() for b in res],
                "non_strict_extra": [b.as_dict() for b in loose if b not in res],
                "min_orbit_17": len(empty)}


@check("fano.halfpoint-riemann-roch", "fano",
       "dim|-K| = (-K)^3/2 + 2 - n/4; n=11 and dim 0 force (-K)^3 = 3/2")
def _(ctx):
    d0 = fano.anticanonical_dim_halfpoints(Fraction(3, 2), 11)
    d1 = fano.anticanonical_dim_halfpoints(Fraction(7, 2), 11)
    rr = fano.anticanonical_dim_riemann_roch(Fraction(3, 2), 11)
    gor = all(fano.anticanonical_dim_halfpoints(2 * g - 2, 0) == fano.h0_anticanonical(g) - 1
              for g in range(2, 13))
    ok = d0 == 0 and d1 == 1 and rr == d0 and gor
    return ok, {"dim(3/2, 11)": str(d0), "dim(7/2, 11)": str(d1), "termwise": str(rr),
                "gorenstein_consistent": gor, "integrality": fano.solve_integrality(11, 3),
                "components_bound_for_3/2": fano.max_components(Fraction(3, 2))}


@check("fano.hurwitz-genus-7", "fano",
       "genus-7 curve, |G| >= 234, 9 | |G|, a_i <= 18: (288; 2,3,8) and (504; 2,3,7)")
def _(ctx):
    sols = fano.hurwitz_enumerate(12, 234, 18, divisible_by=9)
    want = [(288, (2, 3, 8), 0), (504, (2, 3, 7), 0)]
    got = [(s.group_order, s.signature, s.quotient_genus) for s in sols]
    beyond = fano.hurwitz_enumerate(12, 505, 18)
    return got == want and not beyond, {"solutions": [s.as_dict() for s in sols],
                                        "above_504": len(beyond)}


@check("fano.orbit-degree-divisibility", "fano",
       "m d = 14 r with m | 660 forces 7 | d; no surfaces of degree <= 6")
def _(ctx):
    rep = fano.orbit_degree_constraint(660, 14, d_max=6)
    ok = rep["forced_divisor"] == 7 and not rep["solutions_up_to_d_max"]
    return ok, {"forced_divisor": rep["forced_divisor"], "min_degree": rep["min_degree"],
                "solutions_up_to_6": rep["solutions_up_to_d_max"]}


@check("fano.diophantine-case-a", "fano", "g - 1 = 11k forces k = 1, g = 12")
def _(ctx):
    sols = fano.diophantine_case_A()
    return sols == [(1, 1, 1, 12)], {"solutions": [list(s) for s in sols], "scan_bound": 200}


@check("fano.diophantine-case-b", "fano", "alpha = 11k has no solutions with g > 2")
def _(ctx):
    sols = fano.diophantine_case_B(100)
    brute = fano.brute_force_original_system(200)
    ok = not sols and all(g == 12 or g <= 2 for _, _, g in brute["solutions"])
    return ok, {"solutions": sols, "g_max": 100, "brute_force": brute}


@check("fano.elimination-factorizations", "fano",
       "factorizations of the eliminated quadratic relations, checked at 100 random points")
def _(ctx):
    rep = fano.verify_factorizations(100, seed=ctx.seed)
    ok = rep["case_A"]["factored_form_holds"] and rep["case_B"]["factored_form_holds"]
    rep["factored_forms"] = {"case_A": "alpha (4k+1) (k alpha - 1)",
                             "case_B": "k (11 + 4(g-1)) ((g-1)k - 1)"}
    return ok, rep


def checks_for(suite: str) -> list[Check]:
    if suite == "all":
        return list(CHECKS)
    if suite not in SUITES:
        raise KeyError(suite)
    return [c for c in CHECKS if c.suite == suite]
