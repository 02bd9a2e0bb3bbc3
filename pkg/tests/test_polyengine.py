import random

import pytest
from hypothesis import given, settings, strategies as st

from monocurve.config import EffortCaps
from monocurve.errors import DimensionMismatch, EffortCapExceeded, InputError
from monocurve.polyengine import (
    Polynomial,
    buchberger,
    degrevlex,
    eliminate,
    ideal_contains,
    ideals_equal,
    is_groebner_basis,
    lex,
    normal_form,
    revlex_order,
    parse_polynomial,
    quotient_by_element,
    saturate_by_variable,
)

ORD3 = revlex_order(3)


def gens(text, n=3, names=None):
    return [parse_polynomial(t, names or n) for t in text.split(",")]


# -- orders ---------------------------------------------------------------

def test_revlex_sign_convention():
    # LM(x1^d - x0^a * ...) must be x1^d as soon as x0 appears on the right
    assert ORD3.compare((0, 2, 0), (1, 0, 1)) == 1
    assert parse_polynomial("x1^2 - x0*x2", 3).leading_monomial(ORD3) == (0, 2, 0)
    o4 = revlex_order(4)
    assert parse_polynomial("x3^2 - x0*x2", 4).leading_monomial(o4) == (0, 0, 0, 2)


def test_compare_trivia():
    assert ORD3.compare((1, 1, 0), (1, 1, 0)) == 0
    assert ORD3.compare((0, 0, 3), (0, 2, 0)) == 1
    assert ORD3.compare((0, 2, 0), (0, 0, 3)) == -1
    with pytest.raises(DimensionMismatch):
        ORD3.compare((1, 0), (0, 1, 0))


monomial3 = st.tuples(*[st.integers(0, 4)] * 3)


@settings(max_examples=200, deadline=None)
@given(monomial3, monomial3, monomial3)
def test_order_is_total_and_multiplicative(a, b, c):
    for o in (ORD3, lex(3), degrevlex(3, weights=(3, 4, 5))):
        ab = o.compare(a, b)
        assert ab == -o.compare(b, a)
        assert (ab == 0) == (a == b)
        ac = tuple(x + y for x, y in zip(a, c))
        bc = tuple(x + y for x, y in zip(b, c))
        assert o.compare(ac, bc) == ab
        assert o.compare(ac, a) >= 0


# -- normal form ----------------------------------------------------------

def test_normal_form_examples():
    f, = gens("x1^2 - x0*x2")
    assert normal_form(f, [f], ORD3).is_zero()
    r = normal_form(parse_polynomial("x1^3", 3), [f], ORD3)
    assert r == parse_polynomial("x0*x1*x2", 3)
    # quotient x1 times divisor recovers the difference
    assert parse_polynomial("x1^3", 3) - r == parse_polynomial("x1", 3) * f
    x0 = parse_polynomial("x0", 2)
    assert normal_form(x0, [parse_polynomial("x1", 2)], degrevlex(2)) == x0


# -- Buchberger -----------------------------------------------------------

TORIC_345 = "x1*x2 - x0^3, x1^2 - x0*x2, x2^2 - x0^2*x1"


def test_single_generator_is_its_own_basis():
    f = parse_polynomial("x1^2 - x0", 2)
    assert buchberger([f], lex(2)) == [f]


def test_toric_345_leading_ideal():
    # the toric ideal is homogeneous for deg x_j = n_j; refine revlex by that grading
    o = degrevlex(3, weights=(3, 4, 5))
    gb = buchberger(gens(TORIC_345), o)
    assert sorted(g.leading_monomial(o) for g in gb) == [(0, 0, 2), (0, 1, 1), (0, 2, 0)]
    # standard monomials modulo x0: 1, x1, x2
    assert len(gb) == 3


def test_unit_ideal():
    o = lex(2, priority=(0, 1))
    gb = buchberger(gens("x0*x1 - 1, x0^2", 2), o)
    assert gb == [Polynomial.constant(1, 2)]
    assert normal_form(Polynomial.constant(1, 2), gb, o).is_zero()


def test_cap_is_reported_not_truncated():
    with pytest.raises(EffortCapExceeded):
        buchberger(gens(TORIC_345), ORD3, EffortCaps(max_pairs=1))
    with pytest.raises(EffortCapExceeded):
        buchberger(gens(TORIC_345), ORD3, EffortCaps(max_degree=2))


def test_caps_from_environment(monkeypatch):
    monkeypatch.setenv("MONOCURVE_MAX_PAIRS", "1")
    with pytest.raises(EffortCapExceeded):
        buchberger(gens(TORIC_345), ORD3)


def test_unknown_method_rejected():
    with pytest.raises(InputError):
        buchberger(gens(TORIC_345), ORD3, method="f4")
    with pytest.raises(InputError):
        buchberger(gens("x1^2 + x0*x2"), ORD3, method="binomial")


def _random_binomials(rng, n, k, top):
    out = []
    while len(out) < k:
        a = tuple(rng.randint(0, top) for _ in range(n))
        b = tuple(rng.randint(0, top) for _ in range(n))
        if a != b:
            out.append(Polynomial.binomial(a, b))
    return out


def _random_polys(rng, n, k, top):
    out = []
    for _ in range(k):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            terms[tuple(rng.randint(0, top) for _ in range(n))] = rng.choice([-2, -1, 1, 3])
        p = Polynomial(terms, n)
        if p:
            out.append(p)
    return out


@pytest.mark.parametrize("seed", range(12))
def test_gb_contract_on_random_inputs(seed):
    rng = random.Random(seed)
    G = _random_binomials(rng, 3, 3, 3) if seed % 2 else _random_polys(rng, 3, 3, 2)
    o = [ORD3, lex(3), degrevlex(3, weights=(2, 3, 1))][seed % 3]
    gb = buchberger(G, o)
    assert all(normal_form(g, gb, o).is_zero() for g in G)
    assert is_groebner_basis(gb, o)
    for g in gb:
        assert g.leading_coefficient(o) == 1
        others = [h.leading_monomial(o) for h in gb if h is not g]
        # reduced: no term of g lies in the leading ideal of the others
        assert not any(all(x >= y for x, y in zip(m, l)) for m in g.terms for l in others)
    shuffled = G[:]
    rng.shuffle(shuffled)
    assert buchberger(shuffled + [G[0] * G[-1]], o) == gb


@pytest.mark.parametrize("seed", range(8))
def test_binomial_kernel_matches_generic(seed):
    rng = random.Random(100 + seed)
    G = _random_binomials(rng, 4, 3, 3)
    o = revlex_order(4)
    fast = buchberger(G, o, method="binomial")
    assert fast == buchberger(G, o, method="generic")
    assert all(g.is_monomial() or g.is_pure_binomial() for g in fast)


@pytest.mark.parametrize("seed", range(6))
def test_homogeneous_input_gives_homogeneous_basis(seed):
    rng = random.Random(200 + seed)
    G = []
    while len(G) < 3:
        a = tuple(rng.randint(0, 3) for _ in range(3))
        b = list(a)
        i, j = rng.sample(range(3), 2)
        if b[i]:
            b[i] -= 1
            b[j] += 1
            G.append(Polynomial.binomial(a, tuple(b)))
    assert all(g.is_homogeneous() for g in buchberger(G, ORD3))


# -- elimination ----------------------------------------------------------

def test_eliminate_toric_345():
    names = ["x0", "x1", "x2", "t"]
    G = gens("x0 - t^3, x1 - t^4, x2 - t^5", names=names)
    elim = [g.drop_variables([3]) for g in eliminate(G, [3])]
    assert ideals_equal(elim, gens(TORIC_345), ORD3)


def test_eliminate_cusp():
    G = gens("x0 - t^2, x1 - t^3", names=["x0", "x1", "t"])
    elim = [g.drop_variables([2]) for g in eliminate(G, [2])]
    f = parse_polynomial("x1^2 - x0^3", 2)
    assert elim in ([f], [-f])


def test_eliminate_nothing_left():
    assert eliminate(gens("t*x0", names=["x0", "t"]), [1]) == []


# -- saturation and quotients ---------------------------------------------

def test_saturate_examples():
    u2 = ["x0", "x1", "v"]
    assert saturate_by_variable(gens("v*x1", names=u2), 2) == gens("x1", names=u2)
    sat = saturate_by_variable(gens("v^2*x1 - v^3*x0", names=u2), 2)
    assert len(sat) == 1 and sat[0] in (parse_polynomial("x1 - v*x0", u2), parse_polynomial("v*x0 - x1", u2))


def test_saturate_inhomogeneous_falls_back():
    names = ["x0", "v"]
    sat = saturate_by_variable(gens("v*x0 - v", names=names), 1)
    assert ideals_equal(sat, gens("x0 - 1", names=names), degrevlex(2))


QUOTIENT_CASES = [
    ("x1^2", "x1", "x1"),
    ("x1*x2, x1^2, x2^2", "x0", "x1*x2, x1^2, x2^2"),
    ("x1^2, x1*x2", "x1", "x1, x2"),
    ("x1^2 - x0*x2, x1*x2, x2^2", "x0", "x1^2 - x0*x2, x1*x2, x2^2"),
]


@pytest.mark.parametrize("ideal,f,expected", QUOTIENT_CASES)
def test_quotient_examples(ideal, f, expected):
    q = quotient_by_element(gens(ideal), parse_polynomial(f, 3))
    assert ideals_equal(q, gens(expected), ORD3)


@pytest.mark.parametrize("seed", range(6))
def test_quotient_contains_ideal(seed):
    rng = random.Random(300 + seed)
    G = _random_binomials(rng, 3, 2, 2)
    f = Polynomial.variable(rng.randrange(3), 3)
    q = quotient_by_element(G, f)
    qgb = buchberger(q, ORD3)
    assert all(ideal_contains(qgb, g, ORD3) for g in G)
    gb = buchberger(G, ORD3)
    assert all(ideal_contains(gb, h * f, ORD3) for h in q)


def test_quotient_by_zero_rejected():
    with pytest.raises(InputError):
        quotient_by_element(gens("x1"), Polynomial.constant(0, 3))


# -- text syntax ----------------------------------------------------------

@pytest.mark.parametrize("text", ["x1^2 - x0*x2", "x0^3 - x1*x2", "2*x1 + 3", "x2^2 - u*x0^2*x1"])
def test_parse_format_round_trip(text):
    names = ["x0", "x1", "x2", "u"]
    p = parse_polynomial(text, names)
    assert parse_polynomial(p.format(names), names) == p


def test_parse_rejects_unknown_variable():
    with pytest.raises(InputError):
        parse_polynomial("x7^2", 3)
