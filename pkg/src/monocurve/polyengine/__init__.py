"""Exact polynomial kernel: orders, polynomials, Gröbner bases."""

from .groebner import (
    buchberger,
    divide_exact,
    eliminate,
    ideal_contains,
    ideals_equal,
    intersect_with_principal,
    is_binomial_ideal,
    is_groebner_basis,
    leading_monomials,
    normal_form,
    quotient_by_element,
    s_polynomial,
    saturate_by_variable,
)
from .orders import (
    Monomial,
    MonomialOrder,
    coprime,
    degrevlex,
    divides,
    elimination,
    lcm,
    lex,
    revlex_order,
)
from .polynomial import Polynomial, default_names, format_monomial, parse_polynomial

__all__ = [
    "Monomial", "MonomialOrder", "Polynomial",
    "buchberger", "coprime", "default_names", "degrevlex", "divide_exact", "divides",
    "eliminate", "elimination", "format_monomial", "ideal_contains", "ideals_equal",
    "intersect_with_principal", "is_binomial_ideal", "is_groebner_basis", "lcm",
    "leading_monomials", "lex", "normal_form", "revlex_order", "parse_polynomial",
    "quotient_by_element", "s_polynomial", "saturate_by_variable",
]
