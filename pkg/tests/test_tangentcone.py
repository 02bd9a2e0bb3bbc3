import itertools
import random

import pytest

from monocurve.errors import InputError
from monocurve.linalg import rank_q
from monocurve.monomideal import MonomialIdeal, hilbert, hilbert_function
from monocurve.polyengine import Polynomial, ideals_equal, revlex_order, parse_polynomial
from monocurve.semigroup import canonicalize, enumerate_semigroups
from monocurve.tangentcone import (
    ACI,
    CI,
    OTHER,
    GradedIdeal,
    classify,
    graded_invariants,
    hilbert_function_from_semigroup,
    homogenize_lowest,
    is_cohen_macaulay,
    leading_ideal,
    minimal_generator_degrees,
    minimal_generators,
    tangent_cone,
)
from monocurve.toric import defining_ideal


def J_of(*gens):
    return tangent_cone(defining_ideal(canonicalize(gens)))


def mono_ideal(text, n):
    return MonomialIdeal.parse(text, n)


def hf_by_linear_algebra(J: GradedIdeal, upto: int) -> list[int]:
    """dim (P/J)_k from the span of x^g * f over the presented generators."""
    n = J.nvars
    out = []
    for k in range(upto + 1):
        basis = [m for m in itertools.product(range(k + 1), repeat=n) if sum(m) == k]
        index = {m: i for i, m in enumerate(basis)}
        rows = []
        for f in J.generators:
            df = f.degree()
            if df > k:
                continue
            for g in itertools.product(range(k - df + 1), repeat=n):
                if sum(g) != k - df:
                    continue
                rows.append({index[tuple(a + b for a, b in zip(m, g))]: c for m, c in f.terms.items()})
        out.append(len(basis) - rank_q(rows))
    return out


def test_homogenize_lowest():
    names = ["x0", "x1", "u"]
    f = parse_polynomial("x1^2 - x0^3", 2)
    assert homogenize_lowest(f) == parse_polynomial("x1^2 - u*x0^3", names)


def test_cusp():
    J = J_of(2, 3)
    assert [g.format() for g in J.gb] == ["x1^2"]
    assert leading_ideal(J) == mono_ideal("x1^2", 2)
    assert minimal_generator_degrees(J) == [2]
    inv = graded_invariants(J)
    assert (inv.dim, inv.codim, inv.multiplicity, inv.num_min_gens, inv.max_gen_degree) == (1, 1, 2, 1, 2)
    assert classify(J, inv) == CI


def test_345():
    J = J_of(3, 4, 5)
    expected = [parse_polynomial(t, 3) for t in ("x1*x2", "x1^2 - x0*x2", "x2^2")]
    assert ideals_equal(list(J.gb), expected, J.order)
    assert leading_ideal(J) == mono_ideal("x1^2, x1*x2, x2^2", 3)
    assert minimal_generator_degrees(J) == [2, 2, 2]
    inv = graded_invariants(J)
    assert (inv.dim, inv.codim, inv.multiplicity, inv.num_min_gens, inv.max_gen_degree) == (1, 2, 3, 3, 2)
    assert classify(J) == ACI
    assert is_cohen_macaulay(J)


def test_6789():
    J = J_of(6, 7, 8, 9)
    assert leading_ideal(J) == mono_ideal("x1^2, x1*x2, x2^2, x3^2", 4)
    assert graded_invariants(J).multiplicity == 6
    assert classify(J) == ACI
    assert is_cohen_macaulay(J)


def test_7_8_10_cubic():
    assert minimal_generator_degrees(J_of(7, 8, 10)) == [3, 3, 3]


def test_quadratic_fixture():
    inv = graded_invariants(J_of(11, 13, 14, 15, 19))
    assert (inv.codim, inv.multiplicity, inv.max_gen_degree) == (4, 11, 2)


@pytest.mark.parametrize("gens", [(5, 6, 13), (4, 5, 11)])
def test_non_cohen_macaulay(gens):
    J = J_of(*gens)
    assert not is_cohen_macaulay(J)
    assert classify(J) == OTHER


def test_first_non_cm_in_enumeration_order():
    first = next(S for S in enumerate_semigroups(3, 13)
                 if not is_cohen_macaulay(tangent_cone(defining_ideal(S))))
    assert first.generators == (4, 5, 11)


def test_graded_ideal_requires_homogeneous():
    with pytest.raises(InputError):
        GradedIdeal.from_generators([parse_polynomial("x1^2 - x0^3", 2)], 2)


SAMPLE = [S for e in (3, 4) for S in enumerate_semigroups(e, 13)]


@pytest.mark.parametrize("S", SAMPLE[::7], ids=str)
def test_hilbert_function_three_ways(S):
    J = tangent_cone(defining_ideal(S))
    from_lead = hilbert_function(J.leading, 12)
    assert from_lead == hilbert_function_from_semigroup(S, 12)
    assert hf_by_linear_algebra(J, 4) == from_lead[:5]


@pytest.mark.parametrize("S", SAMPLE[::5], ids=str)
def test_minimal_generators_two_routes_and_shuffle(S):
    J = tangent_cone(defining_ideal(S))
    degs = minimal_generator_degrees(J)
    assert sorted(g.degree() for g in minimal_generators(J)) == degs
    gens = list(J.gb) + [g * Polynomial.variable(0, J.nvars) for g in J.gb[:2]]
    random.Random(str(S)).shuffle(gens)
    J2 = GradedIdeal.from_generators(gens, J.nvars, S)
    assert J2.gb == J.gb
    assert minimal_generator_degrees(J2) == degs


@pytest.mark.parametrize("S", SAMPLE[::4], ids=str)
def test_dimension_codim_multiplicity(S):
    J = tangent_cone(defining_ideal(S))
    inv = graded_invariants(J)
    assert inv.dim == 1 and inv.codim == S.codim and inv.multiplicity == S.multiplicity
    reduced = hilbert(J.leading).reduced_numerator
    assert sum(reduced) == S.multiplicity
    assert sum(inv.hilbert_numerator) == 0


@pytest.mark.parametrize("S", SAMPLE[::4], ids=str)
def test_cohen_macaulay_consequences(S):
    J = tangent_cone(defining_ideal(S))
    cm = is_cohen_macaulay(J)
    # x0 is last in revlex, so x0 is regular on P/J iff it is regular on P/L
    assert cm == (J.leading.colon((1,) + (0,) * S.codim) == J.leading)
    if cm:
        hf = hilbert_function(J.leading, 20)
        assert all(a <= b for a, b in zip(hf, hf[1:]))


def test_plane_curves_are_complete_intersections():
    for S in enumerate_semigroups(2, 15):
        assert classify(tangent_cone(defining_ideal(S))) == CI


def test_order_is_revlex_order():
    assert J_of(3, 4, 5).order == revlex_order(3)
