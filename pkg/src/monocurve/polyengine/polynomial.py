"""Exact multivariate polynomials over Q on exponent-tuple monomials."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..errors import DimensionMismatch, InputError
from .orders import Monomial, MonomialOrder


def default_names(nvars: int) -> list[str]:
    return [f"x{i}" for i in range(nvars)]


class Polynomial:
    """Sparse polynomial ``{exponent tuple: nonzero Fraction}`` in ``nvars`` variables."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Mapping[Monomial, object] | None = None, nvars: int | None = None):
        clean: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            m = tuple(int(e) for e in m)
            if any(e < 0 for e in m):
                raise InputError(f"negative exponent in {m}")
            c = Fraction(c)
            if c:
                clean[m] = clean.get(m, Fraction(0)) + c
                if not clean[m]:
                    del clean[m]
        if nvars is None:
            if not clean:
                raise InputError("nvars is required for the zero polynomial")
            nvars = len(next(iter(clean)))
        if any(len(m) != nvars for m in clean):
            raise DimensionMismatch(f"all monomials must have {nvars} exponents")
        self.terms = clean
        self.nvars = nvars

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> "Polynomial":
        p = cls.__new__(cls)
        p.terms = terms
        p.nvars = nvars
        return p

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "Polynomial":
        return cls({tuple(exps): coeff}, len(exps))

    @classmethod
    def binomial(cls, a: Sequence[int], b: Sequence[int]) -> "Polynomial":
        """The pure difference ``x^a - x^b``."""
        return cls({tuple(a): 1, tuple(b): -1}, len(a))

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        e = [0] * nvars
        e[i] = 1
        return cls.monomial(e)

    @classmethod
    def constant(cls, c, nvars: int) -> "Polynomial":
        return cls({(0,) * nvars: c}, nvars)

    # arithmetic -------------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if other.nvars != self.nvars:
            raise DimensionMismatch(f"{self.nvars} vs {other.nvars} variables")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(other, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m, 0) + c
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return Polynomial._raw(t, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = t.get(m, 0) + c1 * c2
                if v:
                    t[m] = v
                else:
                    t.pop(m, None)
        return Polynomial._raw(t, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def mul_term(self, m: Monomial, c=1) -> "Polynomial":
        c = Fraction(c)
        return Polynomial._raw(
            {tuple(a + b for a, b in zip(k, m)): v * c for k, v in self.terms.items()}, self.nvars
        )

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # structure --------------------------------------------------------------

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        if weights is None:
            degs = {sum(m) for m in self.terms}
        else:
            degs = {sum(a * w for a, w in zip(m, weights)) for m in self.terms}
        return len(degs) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_pure_binomial(self) -> bool:
        """True for ``c*(x^a - x^b)``."""
        if len(self.terms) != 2:
            return False
        c1, c2 = self.terms.values()
        return c1 + c2 == 0

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        if not self.terms:
            raise InputError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        lc = self.leading_coefficient(order)
        return Polynomial._raw({m: c / lc for m, c in self.terms.items()}, self.nvars)

    def sorted_terms(self, order: MonomialOrder) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: order.key(kv[0]), reverse=True)

    def initial_form(self) -> "Polynomial":
        """Lowest-degree homogeneous component."""
        if not self.terms:
            return self
        low = min(sum(m) for m in self.terms)
        return Polynomial._raw({m: c for m, c in self.terms.items() if sum(m) == low}, self.nvars)

    def substitute_zero(self, var: int) -> "Polynomial":
        return Polynomial._raw({m: c for m, c in self.terms.items() if m[var] == 0}, self.nvars)

    def drop_variables(self, drop: Iterable[int]) -> "Polynomial":
        """Project to the ring without ``drop``; those exponents must be zero."""
        drop = set(drop)
        keep = [i for i in range(self.nvars) if i not in drop]
        t = {}
        for m, c in self.terms.items():
            if any(m[i] for i in drop):
                raise InputError("polynomial involves a dropped variable")
            t[tuple(m[i] for i in keep)] = c
        return Polynomial._raw(t, len(keep))

    def extend(self, extra: int = 1) -> "Polynomial":
        """Embed into a ring with ``extra`` new trailing variables."""
        return Polynomial._raw({m + (0,) * extra: c for m, c in self.terms.items()}, self.nvars + extra)

    def evaluate_monomial_map(self, weights: Sequence[int]) -> dict[int, Fraction]:
        """Image under ``x_j -> t^{weights[j]}`` as ``{power of t: coefficient}``."""
        out: dict[int, Fraction] = {}
        for m, c in self.terms.items():
            k = sum(a * w for a, w in zip(m, weights))
            out[k] = out.get(k, 0) + c
            if not out[k]:
                del out[k]
        return out

    # text -------------------------------------------------------------------

    def format(self, names: Sequence[str] | None = None, order: MonomialOrder | None = None) -> str:
        names = list(names) if names is not None else default_names(self.nvars)
        if not self.terms:
            return "0"
        if order is None:
            from .orders import revlex_order
            order = revlex_order(self.nvars)
        items = self.sorted_terms(order)
        out = []
        for k, (m, c) in enumerate(items):
            mono = format_monomial(m, names)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono == "1":
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if k == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.format()!r}, nvars={self.nvars})"


def format_monomial(m: Monomial, names: Sequence[str] | None = None) -> str:
    names = list(names) if names is not None else default_names(len(m))
    parts = []
    for e, name in zip(m, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


_TERM_RE = re.compile(r"\s*([+-]?)\s*([^+-]+)")


def parse_monomial(text: str, names: Sequence[str]) -> tuple[Fraction, Monomial]:
    """Parse ``"3*x1^2*x0"`` into ``(3, (1, 2, ...))``."""
    index = {n: i for i, n in enumerate(names)}
    coeff = Fraction(1)
    exps = [0] * len(names)
    for factor in text.split("*"):
        factor = factor.strip()
        if not factor:
            raise InputError(f"empty factor in {text!r}")
        base, _, power = factor.partition("^")
        base = base.strip()
        k = int(power) if power else 1
        if base in index:
            exps[index[base]] += k
        else:
            try:
                coeff *= Fraction(base) ** k
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"unknown symbol {base!r} (variables: {', '.join(names)})") from exc
    return coeff, tuple(exps)


def parse_polynomial(text: str, names: Sequence[str] | int) -> Polynomial:
    """Parse text such as ``"x1^2 - x0*x2"``.

    ``names`` is the variable list, or an int ``n`` for ``x0..x{n-1}``.
    """
    if isinstance(names, int):
        names = default_names(names)
    src = text.strip()
    if not src:
        raise InputError("empty polynomial")
    terms: dict[Monomial, Fraction] = {}
    pos = 0
    while pos < len(src):
        m = _TERM_RE.match(src, pos)
        if not m or m.end() == pos:
            raise InputError(f"cannot parse {text!r}")
        sign, body = m.group(1), m.group(2)
        c, e = parse_monomial(body, names)
        if sign == "-":
            c = -c
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
    return Polynomial(terms, len(names))
