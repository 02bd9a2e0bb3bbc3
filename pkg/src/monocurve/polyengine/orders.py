"""Monomial orders on exponent tuples.

Monomials are plain tuples of nonnegative ints.  An order is realised as a
sort key: ``order.key(a) > order.key(b)`` iff ``a`` is larger than ``b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from ..errors import DimensionMismatch, InputError

Monomial = tuple  # tuple[int, ...]

KINDS = ("lex", "degrevlex", "weighted-degrevlex", "elimination-block")


@dataclass(frozen=True)
class MonomialOrder:
    """A global monomial order.

    ``priority`` lists variable indices from the largest variable to the
    smallest.  ``weights`` (one per variable) grade the degree comparison of
    the degree orders and drive pair selection in Buchberger's algorithm.
    ``block`` is the set of variables eliminated by an elimination order;
    it is compared first, by its own (unweighted) degrevlex.
    """

    kind: str
    priority: tuple[int, ...]
    weights: tuple[int, ...] | None = None
    block: frozenset[int] = frozenset()
    key: Callable[[Monomial], tuple] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown order kind {self.kind!r}")
        n = len(self.priority)
        if sorted(self.priority) != list(range(n)):
            raise InputError(f"priority must be a permutation of 0..{n - 1}")
        if self.weights is not None and len(self.weights) != n:
            raise DimensionMismatch("one weight per variable required")
        object.__setattr__(self, "key", self._build_key())

    @property
    def nvars(self) -> int:
        return len(self.priority)

    @property
    def grading(self) -> tuple[int, ...]:
        return self.weights if self.weights is not None else (1,) * self.nvars

    def _build_key(self):
        pri = self.priority
        if self.kind == "lex":
            return lambda m: tuple(m[i] for i in pri)
        w = self.grading
        if self.kind in ("degrevlex", "weighted-degrevlex"):
            rev = tuple(reversed(pri))
            if self.weights is None:
                return lambda m: (sum(m), *(-m[i] for i in rev))
            return lambda m: (sum(a * b for a, b in zip(m, w)), *(-m[i] for i in rev))
        blk = tuple(i for i in pri if i in self.block)
        rest = tuple(i for i in pri if i not in self.block)
        brev, rrev = tuple(reversed(blk)), tuple(reversed(rest))
        return lambda m: (
            sum(m[i] for i in blk),
            *(-m[i] for i in brev),
            sum(m[i] * w[i] for i in rest),
            *(-m[i] for i in rrev),
        )

    def compare(self, a: Monomial, b: Monomial) -> int:
        """Return -1, 0 or 1 as ``a`` is smaller, equal or larger than ``b``."""
        if len(a) != self.nvars or len(b) != self.nvars:
            raise DimensionMismatch(f"monomials {a}, {b} do not live in {self.nvars} variables")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def wdeg(self, m: Monomial) -> int:
        return sum(a * b for a, b in zip(m, self.grading))


def _descending(nvars: int) -> tuple[int, ...]:
    return tuple(range(nvars - 1, -1, -1))


def lex(nvars: int, priority: Sequence[int] | None = None) -> MonomialOrder:
    return MonomialOrder("lex", tuple(priority) if priority is not None else _descending(nvars))


def degrevlex(nvars: int, priority: Sequence[int] | None = None,
              weights: Sequence[int] | None = None) -> MonomialOrder:
    """Graded reverse lexicographic order.

    The default priority makes ``x_{n-1}`` the largest variable and ``x_0``
    the smallest, so ``x1^2 > x0*x2``.
    """
    pri = tuple(priority) if priority is not None else _descending(nvars)
    if weights is None:
        return MonomialOrder("degrevlex", pri)
    return MonomialOrder("weighted-degrevlex", pri, tuple(weights))


def revlex_order(nvars: int) -> MonomialOrder:
    """Reverse lexicographic order with ``x_c > ... > x_1 > x_0``."""
    return degrevlex(nvars)


def elimination(nvars: int, drop: Sequence[int], priority: Sequence[int] | None = None,
                weights: Sequence[int] | None = None) -> MonomialOrder:
    """Block order with the ``drop`` variables in the greatest block."""
    pri = tuple(priority) if priority is not None else _descending(nvars)
    return MonomialOrder("elimination-block", pri, tuple(weights) if weights else None, frozenset(drop))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mgcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x < y else y for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))
