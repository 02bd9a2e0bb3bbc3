"""Tangent cone ideal ``J`` of a monomial curve and the invariants of ``G = P/J``.

``J`` is the ideal of lowest-degree forms of ``I``.  It is computed with
global orders only: a binomial ``x^a - x^b`` with ``|a| < |b|`` becomes
``x^a - u^(|b|-|a|) x^b``, which is homogeneous for the positive grading
``deg x_j = n_j - 1``, ``deg u = 1``.  Saturating by ``u`` and setting
``u = 0`` leaves generators of ``J``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .config import EffortCaps
from .errors import InputError, MonocurveError
from .monomideal import HilbertData, MonomialIdeal, hilbert, hilbert_function
from .polyengine import (
    Polynomial,
    buchberger,
    ideal_contains,
    revlex_order,
    quotient_by_element,
    saturate_by_variable,
)
from .semigroup import NumericalSemigroup
from .toric import BinomialIdeal

CI = "complete_intersection"
ACI = "almost_complete_intersection"
OTHER = "other"

SHORT_CLASS = {CI: "CI", ACI: "ACI", OTHER: "other"}


@dataclass(frozen=True)
class GradedIdeal:
    """A homogeneous ideal of ``k[x_0..x_{nvars-1}]`` with its reduced Gröbner
    basis for the reverse-lex order ``x_{n-1} > ... > x_0``."""

    nvars: int
    generators: tuple[Polynomial, ...]
    gb: tuple[Polynomial, ...]
    semigroup: NumericalSemigroup | None = None

    @classmethod
    def from_generators(cls, gens, nvars: int, semigroup=None, caps: EffortCaps | None = None):
        gens = tuple(g for g in gens if g)
        if not all(g.is_homogeneous() for g in gens):
            raise InputError("graded ideals need homogeneous generators")
        gb = tuple(buchberger(gens, revlex_order(nvars), caps))
        return cls(nvars, gens, gb, semigroup)

    @property
    def order(self):
        return revlex_order(self.nvars)

    def __contains__(self, f: Polynomial) -> bool:
        return ideal_contains(self.gb, f, self.order)

    @cached_property
    def leading(self) -> MonomialIdeal:
        return MonomialIdeal(self.nvars, tuple(g.leading_monomial(self.order) for g in self.gb))


@dataclass(frozen=True)
class GradedInvariants:
    dim: int
    codim: int
    multiplicity: int
    hilbert_numerator: tuple[int, ...]
    max_gen_degree: int
    num_min_gens: int


def homogenize_lowest(f: Polynomial) -> Polynomial:
    """Append ``u`` and pad every term up to the top degree of ``f`` with
    ``u`` placed on the higher-degree side, e.g. ``x1^2 - x0^3 -> x1^2 - u*x0^3``.
    Setting ``u = 0`` then recovers the lowest-degree form."""
    low = min(sum(m) for m in f.terms)
    return Polynomial._raw({m + (sum(m) - low,): c for m, c in f.terms.items()}, f.nvars + 1)


def tangent_cone(I: BinomialIdeal, caps: EffortCaps | None = None, check: bool = True) -> GradedIdeal:
    """``J`` = ideal of initial (lowest-degree) forms of ``I``.

    With ``check`` the result is verified to have dimension 1 and
    multiplicity ``n_0``; a failure is an internal error.
    """
    S = I.semigroup
    n = I.nvars
    u = n
    weights = tuple(g - 1 for g in S.generators) + (1,)
    hom = [homogenize_lowest(g) for g in I.generators]
    sat = saturate_by_variable(hom, u, caps, weights=weights)
    gens = [g.substitute_zero(u).drop_variables([u]) for g in sat]
    J = GradedIdeal.from_generators(gens, n, S, caps)
    if check:
        h = hilbert(J.leading)
        if h.dim != 1 or h.multiplicity != S.multiplicity:
            raise MonocurveError(
                f"tangent cone of <{S}> has dim {h.dim}, e {h.multiplicity}; expected 1 and {S.multiplicity}")
    return J


def leading_ideal(J: GradedIdeal) -> MonomialIdeal:
    return J.leading


def minimal_generator_degrees(J: GradedIdeal, caps: EffortCaps | None = None) -> list[int]:
    """Degrees of a minimal homogeneous generating set of ``J``, ascending.

    In degree ``e`` there are ``dim J_e - dim (m J)_e`` minimal generators;
    both dimensions come from standard monomials of leading ideals.
    """
    if not J.gb:
        return []
    n = J.nvars
    mj = [g.mul_term(tuple(int(k == i) for k in range(n))) for g in J.gb for i in range(n)]
    top = max(g.degree() for g in J.gb)
    lead_mj = MonomialIdeal(n, tuple(g.leading_monomial(J.order) for g in buchberger(mj, J.order, caps)))
    hf_j = hilbert_function(J.leading, top)
    hf_mj = hilbert_function(lead_mj, top)
    out = []
    for e in range(top + 1):
        out.extend([e] * (hf_mj[e] - hf_j[e]))
    return out


def minimal_generators(J: GradedIdeal, caps: EffortCaps | None = None) -> list[Polynomial]:
    """A minimal generating set, chosen greedily by degree from the reduced basis."""
    chosen: list[Polynomial] = []
    gb: list[Polynomial] = []
    for g in sorted(J.gb, key=lambda p: (p.degree(), J.order.key(p.leading_monomial(J.order)))):
        if gb and ideal_contains(gb, g, J.order):
            continue
        chosen.append(g)
        gb = buchberger(chosen, J.order, caps)
    return chosen


def graded_invariants(J: GradedIdeal, caps: EffortCaps | None = None) -> GradedInvariants:
    h: HilbertData = hilbert(J.leading)
    degs = minimal_generator_degrees(J, caps)
    return GradedInvariants(
        dim=h.dim,
        codim=J.nvars - h.dim,
        multiplicity=h.multiplicity,
        hilbert_numerator=h.numerator,
        max_gen_degree=max(degs) if degs else 0,
        num_min_gens=len(degs),
    )


def classify(J: GradedIdeal, invariants: GradedInvariants | None = None) -> str:
    inv = invariants or graded_invariants(J)
    if inv.num_min_gens == inv.codim:
        return CI
    if inv.num_min_gens == inv.codim + 1:
        return ACI
    return OTHER


def is_cohen_macaulay(J: GradedIdeal, caps: EffortCaps | None = None) -> bool:
    """``G`` (one-dimensional) is Cohen-Macaulay iff ``x_0`` is a nonzerodivisor,
    i.e. ``J : x_0 = J``."""
    x0 = Polynomial.variable(0, J.nvars)
    return all(q in J for q in quotient_by_element(list(J.gb), x0, caps))


def hilbert_function_from_semigroup(S: NumericalSemigroup, upto: int) -> list[int]:
    """``HF(G, k)`` = number of ``s`` in ``S`` whose longest factorization has ``k`` parts.

    Uses only semigroup arithmetic; an independent check on ``J``.
    """
    limit = (upto + 1) * S.generators[-1]
    order = [-1] * (limit + 1)
    order[0] = 0
    for v in range(1, limit + 1):
        for g in S.generators:
            if g <= v and order[v - g] >= 0:
                order[v] = max(order[v], order[v - g] + 1)
    hf = [0] * (upto + 1)
    for v in range(limit + 1):
        if 0 <= order[v] <= upto:
            hf[order[v]] += 1
    return hf
