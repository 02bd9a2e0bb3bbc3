"""The defining ideal of a monomial curve and its pure-power relations.

``I`` is the kernel of ``x_j -> t^{n_j}``.  It is produced by eliminating
``t``; independently, :func:`critical_degree` and :func:`power_witness`
construct pure-power binomials ``x_i^d - x^alpha`` by semigroup arithmetic
alone, so the two routes can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .config import EffortCaps
from .errors import DegreeTooSmall, InputError, MonocurveError
from .polyengine import (
    MonomialOrder,
    Polynomial,
    degrevlex,
    eliminate,
    ideal_contains,
)
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class BinomialIdeal:
    """Defining ideal of ``k[[S]]`` in ``x_0..x_c``.

    ``generators`` is the reduced Gröbner basis of ``I`` for :attr:`order`
    (weighted reverse lex, weights ``n_j``), so it doubles as a membership
    certificate.
    """

    semigroup: NumericalSemigroup
    generators: tuple[Polynomial, ...]

    def __post_init__(self):
        w = self.semigroup.generators
        for g in self.generators:
            if not (g.is_pure_binomial() or g.is_monomial()):
                raise MonocurveError(f"{g} is not a binomial")
            if g.evaluate_monomial_map(w):
                raise MonocurveError(f"{g} does not vanish on t^n")

    @property
    def nvars(self) -> int:
        return self.semigroup.embdim

    @cached_property
    def order(self) -> MonomialOrder:
        return degrevlex(self.nvars, weights=self.semigroup.generators)

    def __contains__(self, f: Polynomial) -> bool:
        return ideal_contains(self.generators, f, self.order)


def defining_ideal(S: NumericalSemigroup, caps: EffortCaps | None = None) -> BinomialIdeal:
    """Kernel of ``x_j -> t^{n_j}``, from eliminating ``t`` out of ``x_j - t^{n_j}``."""
    if S.embdim < 2:
        raise InputError("defining_ideal needs at least two generators")
    n = S.embdim
    t = n  # t is the trailing variable
    gens = []
    for j, nj in enumerate(S.generators):
        x = [0] * (n + 1)
        x[j] = 1
        tp = [0] * (n + 1)
        tp[t] = nj
        gens.append(Polynomial.binomial(x, tp))
    weights = tuple(S.generators) + (1,)
    elim = eliminate(gens, [t], caps, weights=weights)
    return BinomialIdeal(S, tuple(g.drop_variables([t]) for g in elim))


def _max_parts(values: Sequence[int], limit: int) -> list[int]:
    """``best[v]`` = most summands from ``values`` adding to ``v`` (-1 if impossible)."""
    best = [-1] * (limit + 1)
    best[0] = 0
    for v in range(1, limit + 1):
        for g in values:
            if g <= v and best[v - g] >= 0 and best[v - g] + 1 > best[v]:
                best[v] = best[v - g] + 1
    return best


def critical_degree(S: NumericalSemigroup, i: int) -> int:
    """Least ``delta >= 1`` with ``delta*n_i = sum alpha_j n_j``, ``alpha != delta*e_i``,
    ``sum alpha_j >= delta``.

    A minimizing ``alpha`` never uses ``x_i`` itself (cancel the common
    power), so only the other generators are searched.
    """
    if not 1 <= i <= S.codim:
        raise InputError(f"index {i} outside 1..{S.codim}")
    gens = S.generators
    ni = gens[i]
    others = [g for k, g in enumerate(gens) if k != i]
    best = _max_parts(others, gens[0] * ni)
    for delta in range(1, gens[0] + 1):
        if best[delta * ni] >= delta:
            return delta
    raise MonocurveError("no pure-power relation up to degree n_0")  # x_i^{n0} - x_0^{n_i} exists


def factorizations(value: int, gens: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All ``alpha`` with ``sum alpha_j gens[j] = value``, lexicographically increasing."""
    k = len(gens)

    def rec(j: int, rest: int, prefix: tuple[int, ...]):
        if j == k - 1:
            if rest % gens[j] == 0:
                yield prefix + (rest // gens[j],)
            return
        for a in range(rest // gens[j] + 1):
            yield from rec(j + 1, rest - a * gens[j], prefix + (a,))

    if value == 0:
        yield (0,) * k
        return
    yield from rec(0, value, ())


def power_witness(S: NumericalSemigroup, i: int, d: int) -> Polynomial:
    """A binomial ``x_i^d - x^alpha`` in ``I`` with ``|alpha| >= d``.

    Among admissible ``alpha`` the largest total degree wins, then the
    lexicographically least exponent vector.
    """
    di = critical_degree(S, i)
    if d < di:
        raise DegreeTooSmall(f"d={d} is below the critical degree {di} of x_{i}")
    gens = S.generators
    pure = tuple(d if k == i else 0 for k in range(len(gens)))
    best = None
    for alpha in factorizations(d * gens[i], gens):
        if alpha == pure or sum(alpha) < d:
            continue
        if best is None or sum(alpha) > sum(best):
            best = alpha
    assert best is not None
    return Polynomial.binomial(pure, best)
