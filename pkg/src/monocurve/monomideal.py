"""Monomial ideals: Hilbert series, multiplicity, colon ideals and Betti numbers.

Betti numbers are computed two independent ways:

* :func:`betti_lcm` uses the lcm lattice.  For a multidegree ``b`` in the
  lattice, ``beta_{i,b}(P/L)`` is the dimension of the reduced homology
  ``H_{i-2}`` of the crosscut complex of ``[1, b]``: subsets of the
  generators dividing ``b`` whose lcm is strictly below ``b``.
* :func:`betti_koszul` computes ``Tor_i(P/L, k)`` as homology of the Koszul
  complex on all variables tensored with ``P/L``, multidegree by
  multidegree, over a monomial basis of ``P/L``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, prod
from typing import Iterable, Sequence

from .config import DEFAULT_MAX_BETTI_GENS
from .errors import CapExceeded, DimensionMismatch, InputError, MonocurveError
from .linalg import rank_q
from .polyengine.orders import Monomial, coprime, divides, lcm, mgcd, revlex_order
from .polyengine.polynomial import format_monomial, parse_monomial, default_names


def minimalize(gens: Iterable[Monomial]) -> list[Monomial]:
    """Drop every monomial divisible by another one (duplicates collapse)."""
    out: list[Monomial] = []
    for m in sorted(set(gens), key=lambda m: (sum(m), m)):
        if not any(divides(g, m) for g in out):
            out.append(m)
    return out


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in ``nvars`` variables, stored by minimal generators.

    Generators are sorted by degree, then by the reverse-lex order with
    ``x_{n-1} > ... > x_0``.
    """

    nvars: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        gens = [tuple(int(e) for e in g) for g in self.gens]
        if any(len(g) != self.nvars for g in gens):
            raise DimensionMismatch(f"generators must have {self.nvars} exponents")
        if any(e < 0 for g in gens for e in g):
            raise InputError("negative exponent")
        key = revlex_order(self.nvars).key if self.nvars else (lambda m: m)
        object.__setattr__(self, "gens", tuple(sorted(minimalize(gens), key=key)))

    @classmethod
    def parse(cls, text: str, nvars: int, names: Sequence[str] | None = None) -> "MonomialIdeal":
        """Parse ``"x1^2,x1*x2,x2^2"``."""
        names = list(names) if names is not None else default_names(nvars)
        gens = []
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            c, m = parse_monomial(part, names)
            if c == 0:
                raise InputError("zero is not a monomial generator")
            gens.append(m)
        return cls(nvars, tuple(gens))

    def __contains__(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return all(g in other for g in self.gens)

    def is_proper(self) -> bool:
        return not any(sum(g) == 0 for g in self.gens)

    def add(self, *more: Monomial) -> "MonomialIdeal":
        return MonomialIdeal(self.nvars, self.gens + tuple(more))

    def colon(self, m: Monomial) -> "MonomialIdeal":
        return colon(self, m)

    def format(self, names: Sequence[str] | None = None) -> str:
        return "(" + ", ".join(format_monomial(g, names) for g in self.gens) + ")"

    def __str__(self):
        return self.format()


def colon(L: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """``L : m`` with generators ``g / gcd(g, m)``."""
    if len(m) != L.nvars:
        raise DimensionMismatch("monomial lives in a different ring")
    return MonomialIdeal(L.nvars, tuple(
        tuple(a - b for a, b in zip(g, mgcd(g, m))) for g in L.gens))


# Hilbert series --------------------------------------------------------------


def _poly_add(p: list[int], q: list[int], shift: int = 0) -> list[int]:
    out = list(p) + [0] * max(0, len(q) + shift - len(p))
    for i, c in enumerate(q):
        out[i + shift] += c
    return out


@lru_cache(maxsize=200_000)
def _numerator(gens: tuple[Monomial, ...]) -> tuple[int, ...]:
    if not gens:
        return (1,)
    # pairwise coprime generators form a regular sequence
    if all(coprime(a, b) for a, b in itertools.combinations(gens, 2)):
        out = [1]
        for g in gens:
            out = _poly_add(out, [-c for c in out], sum(g))
        return tuple(out)
    n = len(gens[0])
    counts = [0] * n
    weight = [0] * n
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
                weight[i] += e
    v = max(range(n), key=lambda i: (counts[i], weight[i], -i))
    p = tuple(1 if i == v else 0 for i in range(n))
    left = tuple(minimalize(gens + (p,)))
    right = tuple(minimalize(tuple(g[:v] + (max(g[v] - 1, 0),) + g[v + 1:] for g in gens)))
    return tuple(_strip(_poly_add(list(_numerator(left)), list(_numerator(right)), 1)))


def _strip(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def hilbert_numerator(L: MonomialIdeal) -> list[int]:
    """Coefficients ``N_0, N_1, ...`` with ``HS(P/L) = N(t) / (1 - t)^nvars``.

    Pivot recursion ``N(L) = N(L + (x_v)) + t * N(L : x_v)`` on the most
    frequent variable, memoized on the canonical generator tuple.
    """
    return list(_numerator(tuple(sorted(L.gens))))


@dataclass(frozen=True)
class HilbertData:
    numerator: tuple[int, ...]
    reduced_numerator: tuple[int, ...]
    dim: int
    multiplicity: int


def hilbert(L: MonomialIdeal) -> HilbertData:
    """Hilbert numerator, Krull dimension and multiplicity of ``P/L``."""
    if not L.is_proper():
        raise InputError("hilbert() needs a proper ideal")
    num = hilbert_numerator(L)
    q = list(num)
    k = 0
    while sum(q) == 0:
        # synthetic division by (1 - t)
        out, acc = [], 0
        for c in q[:-1]:
            acc += c
            out.append(acc)
        q = out
        k += 1
    return HilbertData(tuple(num), tuple(q), L.nvars - k, sum(q))


def hilbert_function(L: MonomialIdeal, upto: int) -> list[int]:
    """Values ``HF(P/L, 0..upto)`` expanded from the numerator."""
    num = hilbert_numerator(L)
    n = L.nvars
    return [sum(c * comb(k - j + n - 1, n - 1) for j, c in enumerate(num) if j <= k)
            for k in range(upto + 1)]


def standard_monomials(L: MonomialIdeal, degree: int) -> list[Monomial]:
    out = []
    for combo in itertools.combinations_with_replacement(range(L.nvars), degree):
        m = [0] * L.nvars
        for i in combo:
            m[i] += 1
        m = tuple(m)
        if m not in L:
            out.append(m)
    return out


def box_count(mu: Sequence[int], d: int) -> int:
    """Number of lattice points ``gamma`` with ``mu_j <= gamma_j < d``, i.e. ``prod(d - mu_j)``.

    The closed form is checked against a direct count of the box.
    """
    if any(e < 0 or e > d for e in mu):
        raise InputError(f"exponents must lie in [0, {d}]")
    closed = prod(d - e for e in mu)
    brute = sum(1 for _ in itertools.product(*(range(e, d) for e in mu)))
    if closed != brute:
        raise MonocurveError(f"box count mismatch {closed} != {brute}")
    return closed


# Betti tables --------------------------------------------------------------


@dataclass
class BettiTable:
    """Graded Betti numbers ``beta_{i,j}`` of a cyclic module ``P/L``."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}

    @property
    def totals(self) -> list[int]:
        if not self.entries:
            return []
        top = max(i for i, _ in self.entries)
        out = [0] * (top + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def graded(self) -> list[list[int]]:
        return [[i, j, v] for (i, j), v in sorted(self.entries.items())]

    def numerator(self) -> list[int]:
        """``sum (-1)^i beta_{i,j} t^j``, the Hilbert numerator it determines."""
        top = max((j for _, j in self.entries), default=0)
        out = [0] * (top + 1)
        for (i, j), v in self.entries.items():
            out[j] += (-1) ** i * v
        return _strip(out)

    def to_json(self) -> str:
        return json.dumps({"totals": self.totals, "graded": self.graded()})

    @classmethod
    def from_json(cls, text: str) -> "BettiTable":
        data = json.loads(text)
        return cls({(i, j): v for i, j, v in data["graded"]})

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def format(self) -> str:
        """Macaulay2-style table: row ``j - i``, column ``i``."""
        if not self.entries:
            return "(empty)"
        cols = max(i for i, _ in self.entries) + 1
        rows = max(j - i for i, j in self.entries) + 1
        lines = ["       " + " ".join(f"{i:>4}" for i in range(cols)),
                 "total: " + " ".join(f"{t:>4}" for t in self.totals)]
        for r in range(rows):
            cells = [self[(i, i + r)] for i in range(cols)]
            lines.append(f"{r:>5}: " + " ".join(f"{c if c else '.':>4}" for c in cells))
        return "\n".join(lines)


def _reduced_homology_dims(faces_by_dim: dict[int, list[int]]) -> dict[int, int]:
    """Reduced homology over Q of a complex given as bitmask faces grouped by dimension
    (dimension -1 holds the empty face)."""
    index = {k: {f: n for n, f in enumerate(v)} for k, v in faces_by_dim.items()}
    ranks: dict[int, int] = {}
    for k, faces in faces_by_dim.items():
        if k < 0 or (k - 1) not in index:
            ranks[k] = 0
            continue
        lower = index[k - 1]
        rows = []
        for f in faces:
            row = {}
            pos = 0
            bits = f
            while bits:
                low = bits & -bits
                row[lower[f ^ low]] = -1 if pos % 2 else 1
                pos += 1
                bits ^= low
            rows.append(row)
        ranks[k] = rank_q(rows)
    out = {}
    for k, faces in faces_by_dim.items():
        h = len(faces) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if h:
            out[k] = h
    return out


def betti_lcm(L: MonomialIdeal, cap: int = DEFAULT_MAX_BETTI_GENS) -> BettiTable:
    """Graded Betti numbers of ``P/L`` from the lcm lattice (exact, over Q)."""
    gens = L.gens
    m = len(gens)
    if m > cap:
        raise CapExceeded(f"{m} generators exceed the lcm-lattice cap {cap}")
    if not L.is_proper():
        raise InputError("betti_lcm needs a proper ideal")
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    if m == 0:
        return BettiTable(entries)
    one = (0,) * L.nvars
    lcm_of = [one] * (1 << m)
    for mask in range(1, 1 << m):
        low = (mask & -mask).bit_length() - 1
        lcm_of[mask] = lcm(lcm_of[mask & (mask - 1)], gens[low])
    for b in set(lcm_of[1:]):
        atoms = 0
        for k, g in enumerate(gens):
            if divides(g, b):
                atoms |= 1 << k
        faces: dict[int, list[int]] = {}
        sub = atoms
        while True:
            if lcm_of[sub] != b:
                faces.setdefault(bin(sub).count("1") - 1, []).append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & atoms
        for k, h in _reduced_homology_dims(faces).items():
            key = (k + 2, sum(b))
            entries[key] = entries.get(key, 0) + h
    return BettiTable(entries)


def betti_koszul(L: MonomialIdeal, max_degree: int | None = None, cap: int = 2_000_000) -> BettiTable:
    """Graded Betti numbers of ``P/L`` as Koszul homology, up to ``max_degree``.

    The default ``max_degree`` is the degree of the lcm of all generators
    (the Taylor-resolution bound).
    """
    n = L.nvars
    if not L.is_proper():
        raise InputError("betti_koszul needs a proper ideal")
    if max_degree is None:
        top = (0,) * n
        for g in L.gens:
            top = lcm(top, g)
        max_degree = sum(top)
    std: set[Monomial] = set()
    for deg in range(max_degree + 1):
        std.update(standard_monomials(L, deg))
        if len(std) > cap:
            raise CapExceeded(f"Koszul basis exceeds {cap} monomials")
    subsets = [s for r in range(n + 1) for s in itertools.combinations(range(n), r)]
    # basis of K(b): pairs (sigma, x^{b - sigma}) with x^{b - sigma} standard
    by_b: dict[Monomial, dict[int, list[tuple[int, ...]]]] = {}
    for mono in std:
        room = max_degree - sum(mono)
        for s in subsets:
            if len(s) > room:
                continue
            b = list(mono)
            for v in s:
                b[v] += 1
            by_b.setdefault(tuple(b), {}).setdefault(len(s), []).append(s)
    entries: dict[tuple[int, int], int] = {}
    for b, cells in by_b.items():
        index = {i: {s: k for k, s in enumerate(v)} for i, v in cells.items()}
        ranks = {}
        for i, sigmas in cells.items():
            if i == 0 or (i - 1) not in index:
                ranks[i] = 0
                continue
            lower = index[i - 1]
            rows = []
            for s in sigmas:
                row = {}
                for pos, v in enumerate(s):
                    t = s[:pos] + s[pos + 1:]
                    if t in lower:
                        row[lower[t]] = -1 if pos % 2 else 1
                rows.append(row)
            ranks[i] = rank_q(rows)
        for i, sigmas in cells.items():
            h = len(sigmas) - ranks.get(i, 0) - ranks.get(i + 1, 0)
            if h:
                entries[(i, sum(b))] = entries.get((i, sum(b)), 0) + h
    return BettiTable(entries)
