"""Numerical semigroups: minimal generators, membership, Apéry sets."""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable, Iterator, Sequence

from .errors import EmptyInput, NotInSemigroup, NotNumerical, InputError


def _apery(gens: Sequence[int], m: int) -> list[int]:
    # Dijkstra over residues mod m; edge weights are the generators.
    inf = float("inf")
    dist: list = [inf] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        w, r = heapq.heappop(heap)
        if w > dist[r]:
            continue
        for g in gens:
            w2 = w + g
            r2 = w2 % m
            if w2 < dist[r2]:
                dist[r2] = w2
                heapq.heappush(heap, (w2, r2))
    return dist


def _in_monoid(n: int, gens: Sequence[int]) -> bool:
    """Membership of ``n`` in the monoid spanned by ``gens`` (any gcd)."""
    if n == 0:
        return True
    if not gens:
        return False
    m = min(gens)
    table = _apery(gens, m)
    return table[n % m] <= n


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup given by its minimal generators ``n_0 < ... < n_c``.

    Construct through :func:`canonicalize` unless the generators are known
    to be minimal; the constructor validates but does not repair.
    """

    generators: tuple[int, ...]
    _apery_cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        gens = tuple(int(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise EmptyInput("a numerical semigroup needs at least one generator")
        if any(g < 1 for g in gens):
            raise InputError(f"generators must be positive: {gens}")
        if any(a >= b for a, b in zip(gens, gens[1:])):
            raise InputError(f"generators must be strictly increasing: {gens}")
        if gcd(*gens) != 1:
            raise NotNumerical(f"gcd of {gens} is {gcd(*gens)}")
        for i, g in enumerate(gens):
            if _in_monoid(g, gens[:i]):
                raise InputError(f"generator {g} is redundant in {gens}")

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embdim(self) -> int:
        return len(self.generators)

    @property
    def codim(self) -> int:
        """Codimension c of the monomial curve, ``embdim - 1``."""
        return len(self.generators) - 1

    @cached_property
    def _apery_n0(self) -> list[int]:
        return _apery(self.generators, self.generators[0])

    def __contains__(self, n: int) -> bool:
        return contains(self, n)

    def __str__(self) -> str:
        return ",".join(map(str, self.generators))

    def __repr__(self) -> str:
        return f"NumericalSemigroup({self})"


def canonicalize(raw: Iterable[int]) -> NumericalSemigroup:
    """Return the semigroup generated by ``raw`` with its minimal generating set.

    >>> canonicalize([3, 4, 5, 7])
    NumericalSemigroup(3,4,5)
    """
    vals = sorted(set(int(v) for v in raw))
    if not vals:
        raise EmptyInput("no generators given")
    if vals[0] < 1:
        raise InputError(f"generators must be positive: {vals}")
    if gcd(*vals) != 1:
        raise NotNumerical(f"gcd of {vals} is {gcd(*vals)}")
    minimal: list[int] = []
    for v in vals:
        if not _in_monoid(v, minimal):
            minimal.append(v)
    return NumericalSemigroup(tuple(minimal))


def parse_semigroup(text: str) -> NumericalSemigroup:
    """Parse the ``"3,4,5"`` text format."""
    parts = [p.strip() for p in text.replace(" ", ",").split(",") if p.strip()]
    if not parts:
        raise EmptyInput("empty generator list")
    try:
        vals = [int(p) for p in parts]
    except ValueError as exc:
        raise InputError(f"cannot parse generator list {text!r}") from exc
    if any(v < 1 for v in vals):
        raise InputError(f"generators must be positive: {vals}")
    return canonicalize(vals)


def contains(S: NumericalSemigroup, n: int) -> bool:
    if n < 0:
        return False
    table = S._apery_n0
    return table[n % S.multiplicity] <= n


def apery_set(S: NumericalSemigroup, m: int) -> list[int]:
    """Least element of ``S`` in each residue class modulo ``m`` (index = residue)."""
    if m <= 0 or not contains(S, m):
        raise NotInSemigroup(f"{m} is not a positive element of <{S}>")
    if m not in S._apery_cache:
        S._apery_cache[m] = [int(x) for x in _apery(S.generators, m)]
    return list(S._apery_cache[m])


def frobenius(S: NumericalSemigroup) -> int:
    """Largest integer not in ``S``; ``-1`` when ``S`` is all of N."""
    return max(S._apery_n0) - S.multiplicity


def enumerate_semigroups(embdim: int, max_generator: int) -> Iterator[NumericalSemigroup]:
    """Yield all semigroups with exactly ``embdim`` minimal generators, all ``<= max_generator``.

    Order is lexicographic in the generator tuple.
    """
    if embdim < 1:
        return
    for tup in itertools.combinations(range(2 if embdim > 1 else 1, max_generator + 1), embdim):
        if gcd(*tup) != 1:
            continue
        # increasing tuple: each entry only needs testing against the smaller ones
        if any(_in_monoid(g, tup[:i]) for i, g in enumerate(tup) if i):
            continue
        yield NumericalSemigroup(tup)
