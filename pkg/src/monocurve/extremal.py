"""Multiplicity bound for non-complete-intersection tangent cones and its sharp cases.

For a tangent cone of codimension ``c`` defined in degrees ``<= d`` that is
not a complete intersection, ``e <= d^c - (d-1) d^(c-2)``.  This module
computes the bound, checks it on concrete semigroups, builds the family
attaining it, and tests the structure forced at equality.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import asdict, dataclass, field
from math import comb, prod
from typing import Sequence

from .config import EffortCaps
from .errors import InfeasibleSum, InputError, MonocurveError, NotExtremal, NotQuadratic, ParameterOutOfRange
from .monomideal import BettiTable, MonomialIdeal, betti_koszul, betti_lcm, colon
from .semigroup import NumericalSemigroup, canonicalize
from .tangentcone import (
    ACI,
    CI,
    SHORT_CLASS,
    GradedIdeal,
    classify,
    graded_invariants,
    is_cohen_macaulay,
    tangent_cone,
)
from .toric import critical_degree, defining_ideal

CERTIFIED = "certified"
INCONCLUSIVE = "inconclusive"


def bound(c: int, d: int) -> int:
    """``d^c - (d-1) d^(c-2)``."""
    if c < 2 or d < 2:
        raise ParameterOutOfRange(f"bound needs c, d >= 2 (got c={c}, d={d})")
    return d ** c - (d - 1) * d ** (c - 2)


# discrete lemma ----------------------------------------------------------------


@dataclass(frozen=True)
class LemmaResult:
    c: int
    d: int
    target_sum: int
    minimum: int
    argmins: tuple[tuple[int, ...], ...]


def lemma_min_product(c: int, d: int, target_sum: int) -> LemmaResult:
    """Minimum of ``prod(eps)`` over multisets ``1 <= eps_1 <= ... <= eps_c <= d``
    with the given sum, by exhaustive enumeration."""
    if c < 2 or d < 2:
        raise ParameterOutOfRange("lemma_min_product needs c, d >= 2")
    if not c <= target_sum <= c * d:
        raise InfeasibleSum(f"sum {target_sum} unreachable with {c} entries in [1, {d}]")
    best = None
    arg: list[tuple[int, ...]] = []
    for eps in itertools.combinations_with_replacement(range(1, d + 1), c):
        if sum(eps) != target_sum:
            continue
        p = prod(eps)
        if best is None or p < best:
            best, arg = p, [eps]
        elif p == best:
            arg.append(eps)
    return LemmaResult(c, d, target_sum, best, tuple(arg))


# reports -----------------------------------------------------------------------


@dataclass
class AnalysisReport:
    generators: tuple[int, ...]
    c: int
    d: int
    e: int
    bound: int | None
    classification: str
    cohen_macaulay: bool
    theorem_ok: bool
    extremal: bool
    koszul_witness: str
    betti_totals: list[int] | None = None
    critical_degrees: tuple[int, ...] = ()
    leading_ideal: str = ""
    elapsed_ms: float = field(default=0.0, compare=False)

    @property
    def semigroup(self) -> NumericalSemigroup:
        return NumericalSemigroup(self.generators)

    def to_dict(self) -> dict:
        out = {
            "generators": list(self.generators),
            "c": self.c,
            "d": self.d,
            "e": self.e,
            "bound": self.bound,
            "class": SHORT_CLASS[self.classification],
            "cm": self.cohen_macaulay,
            "theorem_ok": self.theorem_ok,
            "extremal": self.extremal,
            "koszul": self.koszul_witness,
        }
        if self.betti_totals is not None:
            out["betti_totals"] = list(self.betti_totals)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisReport":
        long = {v: k for k, v in SHORT_CLASS.items()}
        return cls(
            generators=tuple(data["generators"]),
            c=data["c"], d=data["d"], e=data["e"], bound=data["bound"],
            classification=long[data["class"]],
            cohen_macaulay=data["cm"], theorem_ok=data["theorem_ok"],
            extremal=data["extremal"], koszul_witness=data["koszul"],
            betti_totals=data.get("betti_totals"),
        )

    def summary(self) -> str:
        lines = [
            f"semigroup   <{','.join(map(str, self.generators))}>",
            f"c={self.c}  d={self.d}  e={self.e}  bound={self.bound}",
            f"class       {SHORT_CLASS[self.classification]}  (Cohen-Macaulay: {self.cohen_macaulay})",
            f"leading     {self.leading_ideal}",
            f"theorem_ok  {self.theorem_ok}   extremal {self.extremal}   koszul {self.koszul_witness}",
        ]
        if self.betti_totals is not None:
            lines.append(f"betti       {self.betti_totals}")
        return "\n".join(lines)


def koszul_witness(target: GradedIdeal | NumericalSemigroup, caps: EffortCaps | None = None) -> str:
    """``certified`` when the reverse-lex leading ideal is generated by quadrics.

    That is only a sufficient condition, so the alternative is
    ``inconclusive``, never "not Koszul".
    """
    J = target if isinstance(target, GradedIdeal) else tangent_cone(defining_ideal(target, caps), caps)
    gens = J.leading.gens
    return CERTIFIED if gens and all(sum(g) == 2 for g in gens) else INCONCLUSIVE


def verify_theorem(S: NumericalSemigroup, caps: EffortCaps | None = None,
                   betti: bool = False) -> AnalysisReport:
    """Run the full pipeline on ``S`` and check the multiplicity bound.

    ``theorem_ok`` holds when ``G`` is a complete intersection or
    ``e <= bound``, and an equality case is also ACI and Cohen-Macaulay.
    """
    if S.embdim < 3:
        raise InputError(f"<{S}> has codimension {S.codim}; need c >= 2")
    start = time.perf_counter()
    I = defining_ideal(S, caps)
    J = tangent_cone(I, caps)
    inv = graded_invariants(J, caps)
    c, d, e = inv.codim, inv.max_gen_degree, inv.multiplicity
    if c != S.codim or e != S.multiplicity:
        raise MonocurveError(f"<{S}>: codim {c}, e {e} disagree with the semigroup")
    crit = tuple(critical_degree(S, i) for i in range(1, c + 1))
    if max(crit) > d:
        raise MonocurveError(f"<{S}>: critical degrees {crit} exceed d={d}")
    cls = classify(J, inv)
    cm = is_cohen_macaulay(J, caps)
    b = bound(c, d)
    extremal = cls != CI and e == b
    ok = cls == CI or e <= b
    if extremal and not (cls == ACI and cm):
        ok = False
    totals = betti_lcm(J.leading).totals if betti else None
    return AnalysisReport(
        generators=S.generators, c=c, d=d, e=e, bound=b, classification=cls,
        cohen_macaulay=cm, theorem_ok=ok, extremal=extremal,
        koszul_witness=koszul_witness(J), betti_totals=totals, critical_degrees=crit,
        leading_ideal=str(J.leading), elapsed_ms=(time.perf_counter() - start) * 1000,
    )


# sharp family ------------------------------------------------------------------


def extremal_family(c: int, d: int) -> NumericalSemigroup:
    """Semigroup ``<e, e+1, e+d, e+(d^2-d+1)d^(i-3) for 3 <= i <= c>`` with ``e = bound(c, d)``."""
    e = bound(c, d)
    gens = [e, e + 1, e + d] + [e + (d * d - d + 1) * d ** (i - 3) for i in range(3, c + 1)]
    if not all(a < b for a, b in zip(gens, gens[1:])) or gens[-1] >= 2 * e:
        raise MonocurveError(f"family generators {gens} are not in (e, 2e)")
    S = canonicalize(gens)
    if S.generators != tuple(gens):
        raise MonocurveError(f"family generators {gens} are not minimal")
    return S


def family_relations(c: int, d: int):
    """The binomials ``f_0, ..., f_c`` exhibited for the family, as exponent pairs."""
    n = c + 1

    def mono(**exps):
        v = [0] * n
        for k, a in exps.items():
            v[int(k[1:])] += a
        return tuple(v)

    if c == 2:
        return [
            (mono(x1=1, x2=d - 1), mono(x0=d + 1)),
            (mono(x1=d), mono(x0=d - 1, x2=1)),
            (mono(x2=d), mono(x0=2, x1=d - 1)),
        ]
    rels = [(mono(x1=1, x2=d - 1), mono(x0=d - 1, x3=1))]
    for i in range(1, c + 1):
        if i == 2:
            rels.append((mono(x2=d), mono(x1=d - 1, x3=1)))
        elif i == c:
            rels.append((mono(**{f"x{c}": d}), mono(x0=d + 1)))
        else:
            # x_0^(d-1) x_(i+1) balances the weights for every i != 2, c
            rels.append((mono(**{f"x{i}": d}), mono(**{"x0": d - 1, f"x{i + 1}": 1})))
    return rels


def extremal_betti_formula(c: int, i: int) -> int:
    """``C(c-2, i) + 3 C(c-2, i-1) + 2 C(c-2, i-2)`` (zero outside ``0..c``)."""
    if c < 2:
        raise ParameterOutOfRange("c >= 2 required")

    def C(n, k):
        return comb(n, k) if 0 <= k <= n else 0

    return C(c - 2, i) + 3 * C(c - 2, i - 1) + 2 * C(c - 2, i - 2)


def extremal_graded_betti(c: int, d: int) -> BettiTable:
    """Graded Betti table of ``P/L`` for ``L = (x_1^d, ..., x_c^d, x_1^(d-1) x_2)``."""

    def C(n, k):
        return comb(n, k) if 0 <= k <= n else 0

    entries: dict[tuple[int, int], int] = {}
    for i in range(c + 1):
        for j, v in ((i * d, C(c - 2, i) + 3 * C(c - 2, i - 1)),
                     (i * d - 1, C(c - 2, i - 2)),
                     ((i - 1) * d + 1, C(c - 2, i - 2))):
            if v:
                entries[(i, j)] = entries.get((i, j), 0) + v
    return BettiTable(entries)


def extremal_leading_ideal(c: int, d: int) -> MonomialIdeal:
    n = c + 1
    gens = [tuple(d if k == j else 0 for k in range(n)) for j in range(1, n)]
    gens.append(tuple(d - 1 if k == 1 else int(k == 2) for k in range(n)))
    return MonomialIdeal(n, tuple(gens))


def linkage_colon(c: int, d: int) -> tuple[MonomialIdeal, MonomialIdeal]:
    """``(x_1^d..x_c^d) : x_1^(d-1) x_2`` and the expected ``(x_1, x_2^(d-1), x_3^d..x_c^d)``."""
    n = c + 1
    ci = MonomialIdeal(n, tuple(tuple(d if k == j else 0 for k in range(n)) for j in range(1, n)))
    m = tuple(d - 1 if k == 1 else int(k == 2) for k in range(n))
    expected = [tuple(int(k == 1) for k in range(n)), tuple(d - 1 if k == 2 else 0 for k in range(n))]
    expected += [tuple(d if k == j else 0 for k in range(n)) for j in range(3, n)]
    return colon(ci, m), MonomialIdeal(n, tuple(expected))


def match_up_to_permutation(L: MonomialIdeal, target: MonomialIdeal) -> tuple[int, ...] | None:
    """A permutation of ``x_1..x_c`` (``x_0`` fixed) carrying ``L`` onto ``target``, if any."""
    n = L.nvars
    if n != target.nvars or len(L.gens) != len(target.gens):
        return None
    for perm in itertools.permutations(range(1, n)):
        full = (0,) + perm
        moved = MonomialIdeal(n, tuple(tuple(g[full.index(k)] for k in range(n)) for g in L.gens))
        if moved.gens == target.gens:
            return full
    return None


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ConsequenceReport:
    semigroup: NumericalSemigroup
    c: int
    d: int
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(ch.passed for ch in self.checks)

    def format(self) -> str:
        lines = [f"extremal consequences for <{self.semigroup}> (c={self.c}, d={self.d})"]
        for ch in self.checks:
            lines.append(f"  [{'PASS' if ch.passed else 'FAIL'}] {ch.name}: {ch.detail}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"generators": list(self.semigroup.generators), "c": self.c, "d": self.d,
                "passed": self.passed, "checks": [asdict(ch) for ch in self.checks]}


def check_extremal_consequences(S: NumericalSemigroup, caps: EffortCaps | None = None) -> ConsequenceReport:
    """Check the structure forced when ``e`` equals the bound.

    Checks, in order: leading-ideal shape up to renaming ``x_1..x_c``; ACI
    and Cohen-Macaulay; Betti totals; graded Betti numbers (lcm lattice, then
    the Koszul-homology cross-check); the one-step linkage colon identity.
    """
    report = verify_theorem(S, caps)
    if not report.extremal:
        raise NotExtremal(f"<{S}> has e={report.e} < bound {report.bound} or is a complete intersection")
    c, d = report.c, report.d
    J = tangent_cone(defining_ideal(S, caps), caps)
    L = J.leading
    checks = []

    target = extremal_leading_ideal(c, d)
    perm = match_up_to_permutation(L, target)
    checks.append(Check("leading_ideal_shape", perm is not None,
                        f"{L} vs {target}" + (f" via x-permutation {perm}" if perm else "")))

    checks.append(Check("aci_and_cm", report.classification == ACI and report.cohen_macaulay,
                        f"class={SHORT_CLASS[report.classification]}, cm={report.cohen_macaulay}"))

    table = betti_lcm(L)
    expected_totals = [extremal_betti_formula(c, i) for i in range(c + 1)]
    checks.append(Check("betti_totals", table.totals == expected_totals,
                        f"{table.totals} vs formula {expected_totals}"))

    expected = extremal_graded_betti(c, d)
    checks.append(Check("graded_betti", table == expected,
                        f"{table.graded()} vs formula {expected.graded()}"))

    kz = betti_koszul(L)
    checks.append(Check("betti_koszul_agrees", kz == table, f"koszul {kz.graded()}"))

    got, want = linkage_colon(c, d)
    checks.append(Check("linkage_colon", got == want, f"{got} vs {want}"))
    return ConsequenceReport(S, c, d, tuple(checks))


# degree reasoning ----------------------------------------------------------------


def _factors_into(n: int, parts: int, lo: int, hi: int) -> bool:
    """Whether ``n`` is a product of ``parts`` integers in ``[lo, hi]``."""
    if parts == 0:
        return n == 1
    for f in range(lo, hi + 1):
        if n % f == 0 and _factors_into(n // f, parts - 1, f, hi):
            return True
    return False


def min_relation_degree_bound(n0: int, c: int) -> int:
    """Least ``d >= 2`` for which a tangent cone with ``e = n0`` and codimension ``c``
    could be defined in degrees ``<= d``.

    A complete intersection needs ``n0`` to be a product of ``c`` degrees in
    ``[2, d]``; otherwise ``n0 <= bound(c, d)`` is required.
    """
    if n0 < 3 or c < 2:
        raise ParameterOutOfRange("need n0 >= 3 and c >= 2")
    d = 2
    while True:
        if _factors_into(n0, c, 2, d) or n0 <= bound(c, d):
            return d
        d += 1


def quadratic_gap_check(target: NumericalSemigroup | AnalysisReport, caps: EffortCaps | None = None) -> bool:
    """For a quadratic tangent cone: ``e <= 2^c - 2^(c-2)`` or ``e == 2^c``."""
    report = target if isinstance(target, AnalysisReport) else verify_theorem(target, caps)
    if report.d != 2:
        raise NotQuadratic(f"<{','.join(map(str, report.generators))}> has relations up to degree {report.d}")
    c, e = report.c, report.e
    return e <= 2 ** c - 2 ** (c - 2) or e == 2 ** c
