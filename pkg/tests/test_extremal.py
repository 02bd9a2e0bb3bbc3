import itertools
import json
from math import comb

import pytest

from monocurve.errors import (
    InfeasibleSum,
    InputError,
    NotExtremal,
    NotQuadratic,
    ParameterOutOfRange,
)
from monocurve.extremal import (
    AnalysisReport,
    bound,
    check_extremal_consequences,
    extremal_betti_formula,
    extremal_family,
    extremal_graded_betti,
    extremal_leading_ideal,
    family_relations,
    koszul_witness,
    lemma_min_product,
    linkage_colon,
    match_up_to_permutation,
    min_relation_degree_bound,
    quadratic_gap_check,
    verify_theorem,
)
from monocurve.monomideal import MonomialIdeal, betti_koszul, betti_lcm
from monocurve.polyengine import Polynomial, ideals_equal
from monocurve.semigroup import canonicalize
from monocurve.tangentcone import ACI, CI, tangent_cone
from monocurve.toric import defining_ideal


def S(*g):
    return canonicalize(g)


# -- bound ----------------------------------------------------------------

@pytest.mark.parametrize("c,d,expected", [(4, 2, 12), (2, 2, 3), (3, 3, 21), (2, 3, 7), (3, 2, 6)])
def test_bound_values(c, d, expected):
    assert bound(c, d) == expected


@pytest.mark.parametrize("c", range(2, 10))
def test_bound_quadratic_case(c):
    assert bound(c, 2) == 3 * 2 ** (c - 2) == 2 ** c - 2 ** (c - 2)


@pytest.mark.parametrize("c,d", [(1, 2), (2, 1), (0, 5)])
def test_bound_out_of_range(c, d):
    with pytest.raises(ParameterOutOfRange):
        bound(c, d)


# -- the discrete lemma -----------------------------------------------------

def test_lemma_examples():
    r = lemma_min_product(3, 3, 6)
    assert (r.minimum, r.argmins) == (6, ((1, 2, 3),))
    r = lemma_min_product(2, 2, 2)
    assert (r.minimum, r.argmins) == (1, ((1, 1),))
    assert lemma_min_product(3, 3, 7).minimum == 9


def test_lemma_infeasible():
    with pytest.raises(InfeasibleSum):
        lemma_min_product(3, 3, 10)
    with pytest.raises(InfeasibleSum):
        lemma_min_product(3, 3, 2)


def brute_min_product(c, d, s):
    vals = [eps for eps in itertools.product(range(1, d + 1), repeat=c) if sum(eps) == s]
    best = min(_prod(v) for v in vals)
    return best, sorted({tuple(sorted(v)) for v in vals if _prod(v) == best})


def _prod(v):
    out = 1
    for x in v:
        out *= x
    return out


@pytest.mark.parametrize("c,d", [(c, d) for c in range(2, 6) for d in range(2, 6)])
def test_lemma_against_ordered_tuples(c, d):
    for s in range(c, c * d + 1):
        r = lemma_min_product(c, d, s)
        assert (r.minimum, sorted(r.argmins)) == brute_min_product(c, d, s)


# -- pipeline ---------------------------------------------------------------

def test_verify_345():
    r = verify_theorem(S(3, 4, 5))
    assert (r.c, r.d, r.e, r.bound) == (2, 2, 3, 3)
    assert r.classification == ACI and r.cohen_macaulay
    assert r.theorem_ok and r.extremal
    assert r.koszul_witness == "certified"
    assert r.critical_degrees == (2, 2)


def test_verify_quadratic_fixture():
    r = verify_theorem(S(11, 13, 14, 15, 19))
    assert (r.c, r.d, r.e, r.bound) == (4, 2, 11, 12)
    assert r.classification == ACI and r.cohen_macaulay
    assert r.theorem_ok and not r.extremal


def test_verify_rejects_plane_curves():
    with pytest.raises(InputError):
        verify_theorem(S(2, 3))


def test_report_json_schema():
    r = verify_theorem(S(3, 4, 5), betti=True)
    d = json.loads(r.to_json())
    for key, typ in [("generators", list), ("c", int), ("d", int), ("e", int), ("bound", int),
                     ("class", str), ("cm", bool), ("theorem_ok", bool), ("extremal", bool),
                     ("koszul", str)]:
        assert isinstance(d[key], typ), key
    assert d["class"] in {"CI", "ACI", "other"}
    assert d["koszul"] in {"certified", "inconclusive"}
    assert d["betti_totals"] == [1, 3, 2]
    assert AnalysisReport.from_dict(d).to_dict() == d


def test_complete_intersection_report():
    r = verify_theorem(S(4, 5, 6))
    assert r.classification == CI and r.theorem_ok and not r.extremal
    assert (r.c, r.d, r.e) == (2, 2, 4)


# -- sharp family -----------------------------------------------------------

@pytest.mark.parametrize("c,d,gens", [(2, 2, (3, 4, 5)), (3, 2, (6, 7, 8, 9)), (2, 3, (7, 8, 10)),
                                      (4, 2, (12, 13, 14, 15, 18))])
def test_family_examples(c, d, gens):
    assert extremal_family(c, d).generators == gens


def test_family_out_of_range():
    with pytest.raises(ParameterOutOfRange):
        extremal_family(1, 2)


FAMILY = [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (4, 3), (5, 2)]


@pytest.mark.parametrize("c,d", FAMILY)
def test_family_relations_present_tangent_cone(c, d):
    sg = extremal_family(c, d)
    I = defining_ideal(sg)
    rels = [Polynomial.binomial(a, b) for a, b in family_relations(c, d)]
    assert all(f in I for f in rels)
    J = tangent_cone(I)
    initial = [f.initial_form() for f in rels]
    assert ideals_equal(initial, list(J.gb), J.order)


@pytest.mark.parametrize("c,d", FAMILY)
def test_family_is_extremal(c, d):
    r = verify_theorem(extremal_family(c, d))
    assert r.extremal and r.theorem_ok and r.e == bound(c, d) and r.d == d


@pytest.mark.parametrize("c,d", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_consequences_pass(c, d):
    rep = check_extremal_consequences(extremal_family(c, d))
    assert rep.passed, rep.format()
    assert [ch.name for ch in rep.checks] == [
        "leading_ideal_shape", "aci_and_cm", "betti_totals", "graded_betti",
        "betti_koszul_agrees", "linkage_colon"]


def test_consequences_reject_non_extremal():
    with pytest.raises(NotExtremal):
        check_extremal_consequences(S(11, 13, 14, 15, 19))


def test_leading_ideal_7_8_10_needs_a_swap():
    L = tangent_cone(defining_ideal(S(7, 8, 10))).leading
    target = extremal_leading_ideal(2, 3)
    perm = match_up_to_permutation(L, target)
    assert perm is not None
    if L != target:
        assert perm == (0, 2, 1)


# -- Betti formulas -----------------------------------------------------------

@pytest.mark.parametrize("c,totals", [(2, [1, 3, 2]), (3, [1, 4, 5, 2]), (4, [1, 5, 9, 7, 2])])
def test_betti_formula_values(c, totals):
    assert [extremal_betti_formula(c, i) for i in range(c + 1)] == totals
    assert sum((-1) ** i * b for i, b in enumerate(totals)) == 0


@pytest.mark.parametrize("c,d", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (4, 3), (2, 4)])
def test_graded_formula_against_both_routes(c, d):
    L = extremal_leading_ideal(c, d)
    t = betti_lcm(L)
    assert t == extremal_graded_betti(c, d)
    assert t == betti_koszul(L)
    assert t.totals == [extremal_betti_formula(c, i) for i in range(c + 1)]


def test_graded_formula_merge_at_d2():
    # at d = 2 the degrees i*d - 1 and (i-1)*d + 1 coincide
    t = extremal_graded_betti(3, 2)
    assert t.entries == {(0, 0): 1, (1, 2): 4, (2, 3): 2, (2, 4): 3, (3, 5): 2}


@pytest.mark.parametrize("c,d", [(c, d) for c in range(2, 6) for d in range(2, 5)])
def test_linkage_colon(c, d):
    got, want = linkage_colon(c, d)
    assert got == want
    m = tuple(d - 1 if k == 1 else int(k == 2) for k in range(c + 1))
    ci = [tuple(d if k == j else 0 for k in range(c + 1)) for j in range(1, c + 1)]
    for g in itertools.product(*[range(d + 1)] * (c + 1)):
        gm = tuple(a + b for a, b in zip(g, m))
        in_ci = any(all(x >= y for x, y in zip(gm, h)) for h in ci)
        assert (g in got) == in_ci


# -- Koszul witness -----------------------------------------------------------

def test_koszul_witness():
    assert koszul_witness(S(3, 4, 5)) == "certified"
    assert koszul_witness(S(7, 8, 10)) == "inconclusive"
    for c in (2, 3, 4, 5):
        assert koszul_witness(extremal_family(c, 2)) == "certified"


# -- degree reasoning -----------------------------------------------------------

@pytest.mark.parametrize("n0,c,expected", [(100, 4, 4), (8, 3, 2), (12, 4, 2), (9, 2, 3), (7, 2, 3)])
def test_min_relation_degree_bound(n0, c, expected):
    assert min_relation_degree_bound(n0, c) == expected


def test_min_relation_degree_bound_realized():
    assert extremal_family(4, 2).multiplicity == 12
    r = verify_theorem(extremal_family(4, 2))
    assert r.d == min_relation_degree_bound(12, 4)


def test_quadratic_gap():
    assert quadratic_gap_check(S(11, 13, 14, 15, 19))
    assert quadratic_gap_check(S(3, 4, 5))
    r = verify_theorem(S(4, 5, 6))
    assert r.classification == CI and r.e == 2 ** r.c and quadratic_gap_check(r)
    with pytest.raises(NotQuadratic):
        quadratic_gap_check(S(7, 8, 10))
