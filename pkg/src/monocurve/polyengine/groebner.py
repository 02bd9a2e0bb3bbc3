"""Buchberger's algorithm, normal forms and derived ideal operations.

Two interchangeable kernels compute reduced Gröbner bases:

* a generic kernel on :class:`Polynomial` with exact rational coefficients;
* a binomial kernel for ideals generated by monomials and pure differences
  ``x^a - x^b``.  That class is closed under S-polynomials and reduction, so
  every element is stored as a ``(lead, tail)`` pair of exponent tuples
  (``tail is None`` for a monomial) and no coefficient arithmetic happens.

Both share the Gebauer-Möller pair update and the normal selection
strategy (smallest graded degree of the lcm, ties broken by the order).
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Sequence

from ..config import EffortCaps, resolve_caps
from ..errors import EffortCapExceeded, InputError
from .orders import Monomial, MonomialOrder, coprime, divides, elimination, lcm, degrevlex
from .polynomial import Polynomial


def _mask(m: Monomial) -> int:
    bits = 0
    for i, e in enumerate(m):
        if e:
            bits |= 1 << i
    return bits


class _PairSet:
    """Critical pairs with the Gebauer-Möller criteria."""

    def __init__(self, order: MonomialOrder, caps: EffortCaps):
        self.order = order
        self.caps = caps
        self.heap: list = []
        self.alive: dict[tuple[int, int], Monomial] = {}
        self.seq = 0
        self.processed = 0

    def update(self, leads: list[Monomial], active: list[int], h: int) -> None:
        lh = leads[h]
        cand = [(g, lcm(leads[g], lh)) for g in active]
        kept = []
        for idx, (g, m) in enumerate(cand):
            if coprime(leads[g], lh):
                kept.append((g, m, True))
                continue
            if any(divides(m2, m) for _, m2 in cand[idx + 1:]):
                continue
            if any(divides(m2, m) for _, m2, _ in kept):
                continue
            kept.append((g, m, False))
        for (i, j), m in list(self.alive.items()):
            if divides(lh, m) and lcm(leads[i], lh) != m and lcm(leads[j], lh) != m:
                del self.alive[(i, j)]
        for g, m, cop in kept:
            if cop:
                continue
            if sum(m) > self.caps.max_degree:
                raise EffortCapExceeded(
                    f"S-pair degree {sum(m)} exceeds max_degree={self.caps.max_degree}")
            self.alive[(g, h)] = m
            self.seq += 1
            heapq.heappush(self.heap, (self.order.wdeg(m), self.order.key(m), self.seq, g, h))

    def pop(self):
        while self.heap:
            *_, g, h = heapq.heappop(self.heap)
            if self.alive.pop((g, h), None) is not None:
                self.processed += 1
                if self.processed > self.caps.max_pairs:
                    raise EffortCapExceeded(
                        f"more than max_pairs={self.caps.max_pairs} S-pairs processed")
                return g, h
        return None


def _prune_active(active: list[int], leads: list[Monomial], h: int) -> list[int]:
    lh = leads[h]
    return [g for g in active if not divides(lh, leads[g])] + [h]


# --------------------------------------------------------------------------
# binomial kernel


class _BinomialBasis:
    def __init__(self, order: MonomialOrder):
        self.key = order.key
        self.elems: list[tuple[Monomial, Monomial | None]] = []
        self.leads: list[Monomial] = []
        self.masks: list[int] = []
        self.active: list[int] = []

    def reducer(self, m: Monomial, mmask: int, pool: Iterable[int]):
        leads, masks = self.leads, self.masks
        for i in pool:
            if masks[i] & ~mmask == 0:
                l = leads[i]
                if all(a >= b for a, b in zip(m, l)):
                    return i
        return None

    def top_reduce(self, A, B, pool):
        key = self.key
        while True:
            r = self.reducer(A, _mask(A), pool)
            if r is None:
                return A, B
            l, t = self.elems[r]
            if t is None:
                if B is None:
                    return None
                A, B = B, None
                continue
            A2 = tuple(a - x + y for a, x, y in zip(A, l, t))
            if B is None:
                A = A2
            elif A2 == B:
                return None
            elif key(A2) > key(B):
                A = A2
            else:
                A, B = B, A2

    def tail_reduce(self, A, B, pool):
        while B is not None:
            r = self.reducer(B, _mask(B), pool)
            if r is None:
                break
            l, t = self.elems[r]
            if t is None:
                B = None
                break
            B = tuple(b - x + y for b, x, y in zip(B, l, t))
        return A, B

    def add(self, A, B) -> int:
        self.elems.append((A, B))
        self.leads.append(A)
        self.masks.append(_mask(A))
        return len(self.elems) - 1


def _to_binomial(p: Polynomial, key) -> tuple[Monomial, Monomial | None]:
    if len(p.terms) == 1:
        (m,) = p.terms
        return m, None
    a, b = p.terms
    return (a, b) if key(a) > key(b) else (b, a)


def _binomial_gb(gens: Sequence[Polynomial], order: MonomialOrder, caps: EffortCaps) -> list[Polynomial]:
    n = gens[0].nvars
    key = order.key
    basis = _BinomialBasis(order)
    pairs = _PairSet(order, caps)
    todo = sorted((_to_binomial(g, key) for g in gens), key=lambda e: key(e[0]))
    queue = list(todo)

    def insert(A, B):
        h = basis.add(A, B)
        pairs.update(basis.leads, basis.active, h)
        basis.active = _prune_active(basis.active, basis.leads, h)

    for A, B in queue:
        red = basis.top_reduce(A, B, basis.active)
        if red is not None:
            if not any(red[0]):
                return [Polynomial.constant(1, n)]
            insert(*red)

    while True:
        nxt = pairs.pop()
        if nxt is None:
            break
        i, j = nxt
        (l1, t1), (l2, t2) = basis.elems[i], basis.elems[j]
        if t1 is None and t2 is None:
            continue
        m = lcm(l1, l2)
        s1 = None if t1 is None else tuple(a - x + y for a, x, y in zip(m, l1, t1))
        s2 = None if t2 is None else tuple(a - x + y for a, x, y in zip(m, l2, t2))
        if s1 is None:
            A, B = s2, None
        elif s2 is None:
            A, B = s1, None
        elif s1 == s2:
            continue
        elif key(s1) > key(s2):
            A, B = s1, s2
        else:
            A, B = s2, s1
        red = basis.top_reduce(A, B, basis.active)
        if red is None:
            continue
        if not any(red[0]):
            return [Polynomial.constant(1, n)]
        insert(*red)

    # minimalize, then tail-reduce against the minimal leads
    act = sorted(set(basis.active), key=lambda i: key(basis.leads[i]))
    minimal = []
    for i in act:
        li = basis.leads[i]
        if not any(divides(basis.leads[j], li) for j in minimal):
            minimal = [j for j in minimal if not divides(li, basis.leads[j])]
            minimal.append(i)
    out = []
    for i in minimal:
        A, B = basis.elems[i]
        others = [j for j in minimal if j != i]
        A, B = basis.tail_reduce(A, B, others)
        terms = {A: Fraction(1)} if B is None else {A: Fraction(1), B: Fraction(-1)}
        out.append(Polynomial._raw(terms, n))
    out.sort(key=lambda p: key(max(p.terms, key=key)))
    return out


# --------------------------------------------------------------------------
# generic kernel


def _reduce_generic(f: Polynomial, basis: Sequence[Polynomial], lms: Sequence[Monomial],
                    order: MonomialOrder, full: bool = True) -> Polynomial:
    key = order.key
    terms = dict(f.terms)
    rem: dict = {}
    while terms:
        m = max(terms, key=key)
        c = terms[m]
        for b, lm in zip(basis, lms):
            if all(x >= y for x, y in zip(m, lm)):
                q = tuple(x - y for x, y in zip(m, lm))
                factor = c / b.terms[lm]
                for bm, bc in b.terms.items():
                    t = tuple(x + y for x, y in zip(bm, q))
                    v = terms.get(t, 0) - factor * bc
                    if v:
                        terms[t] = v
                    else:
                        terms.pop(t, None)
                break
        else:
            if not full:
                rem.update(terms)
                break
            rem[m] = c
            del terms[m]
    return Polynomial._raw(rem, f.nvars)


def _generic_gb(gens: Sequence[Polynomial], order: MonomialOrder, caps: EffortCaps) -> list[Polynomial]:
    n = gens[0].nvars
    key = order.key
    G: list[Polynomial] = []
    leads: list[Monomial] = []
    active: list[int] = []
    pairs = _PairSet(order, caps)

    def insert(p: Polynomial):
        nonlocal active
        p = p.monic(order)
        G.append(p)
        leads.append(p.leading_monomial(order))
        h = len(G) - 1
        pairs.update(leads, active, h)
        active = _prune_active(active, leads, h)

    for g in sorted(gens, key=lambda p: key(p.leading_monomial(order))):
        r = _reduce_generic(g, [G[i] for i in active], [leads[i] for i in active], order)
        if r:
            if r.degree() == 0:
                return [Polynomial.constant(1, n)]
            insert(r)
    while True:
        nxt = pairs.pop()
        if nxt is None:
            break
        i, j = nxt
        m = lcm(leads[i], leads[j])
        s = G[i].mul_term(tuple(a - b for a, b in zip(m, leads[i]))) - \
            G[j].mul_term(tuple(a - b for a, b in zip(m, leads[j])))
        r = _reduce_generic(s, [G[k] for k in active], [leads[k] for k in active], order)
        if r:
            if r.degree() == 0:
                return [Polynomial.constant(1, n)]
            insert(r)
    act = sorted(active, key=lambda i: key(leads[i]))
    minimal: list[int] = []
    for i in act:
        if not any(divides(leads[j], leads[i]) for j in minimal):
            minimal = [j for j in minimal if not divides(leads[i], leads[j])]
            minimal.append(i)
    out = []
    for i in minimal:
        others = [k for k in minimal if k != i]
        r = _reduce_generic(G[i], [G[k] for k in others], [leads[k] for k in others], order)
        out.append(r.monic(order))
    out.sort(key=lambda p: key(p.leading_monomial(order)))
    return out


# --------------------------------------------------------------------------
# public API


def is_binomial_ideal(gens: Iterable[Polynomial]) -> bool:
    return all(g.is_monomial() or g.is_pure_binomial() for g in gens)


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder, caps: EffortCaps | None = None,
               method: str = "auto") -> list[Polynomial]:
    """Reduced Gröbner basis of ``ideal(gens)`` with respect to ``order``.

    The result is monic, auto-reduced and sorted by increasing leading
    monomial, hence canonical.  ``method`` is ``"auto"``, ``"binomial"`` or
    ``"generic"``; ``"auto"`` takes the binomial kernel whenever every
    generator is a monomial or a pure difference of two monomials.
    Raises :class:`EffortCapExceeded` when the pair or degree cap is hit.
    """
    caps = resolve_caps(caps)
    gens = [g for g in gens if g]
    if not gens:
        return []
    n = gens[0].nvars
    if any(g.nvars != n for g in gens) or order.nvars != n:
        raise InputError("generators and order must share the variable count")
    if method == "auto":
        method = "binomial" if is_binomial_ideal(gens) else "generic"
    if method == "binomial":
        if not is_binomial_ideal(gens):
            raise InputError("binomial kernel needs monomials and pure-difference binomials")
        return _binomial_gb(gens, order, caps)
    if method == "generic":
        return _generic_gb(gens, order, caps)
    raise InputError(f"unknown method {method!r}")


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Remainder of ``f`` under division by ``basis`` (first applicable divisor wins)."""
    basis = [b for b in basis if b]
    return _reduce_generic(f, basis, [b.leading_monomial(order) for b in basis], order)


def leading_monomials(basis: Sequence[Polynomial], order: MonomialOrder) -> list[Monomial]:
    return [b.leading_monomial(order) for b in basis]


def ideal_contains(gb: Sequence[Polynomial], f: Polynomial, order: MonomialOrder) -> bool:
    """Membership test; ``gb`` must be a Gröbner basis for ``order``."""
    return normal_form(f, gb, order).is_zero()


def ideals_equal(gens1: Sequence[Polynomial], gens2: Sequence[Polynomial], order: MonomialOrder,
                 caps: EffortCaps | None = None) -> bool:
    gb1 = buchberger(gens1, order, caps)
    gb2 = buchberger(gens2, order, caps)
    return all(ideal_contains(gb1, g, order) for g in gens2) and \
        all(ideal_contains(gb2, g, order) for g in gens1)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    m = lcm(lf, lg)
    return f.mul_term(tuple(a - b for a, b in zip(m, lf)), 1 / f.terms[lf]) - \
        g.mul_term(tuple(a - b for a, b in zip(m, lg)), 1 / g.terms[lg])


def is_groebner_basis(basis: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if normal_form(s_polynomial(basis[i], basis[j], order), basis, order):
                return False
    return True


def eliminate(gens: Sequence[Polynomial], drop: Iterable[int], caps: EffortCaps | None = None,
              weights: Sequence[int] | None = None) -> list[Polynomial]:
    """Generators of ``ideal(gens)`` intersected with the subring without ``drop``.

    Polynomials keep the full variable count; the dropped exponents are zero.
    ``weights`` grade the kept block (and pair selection) and may make a
    weighted-homogeneous input much cheaper to process.
    """
    gens = [g for g in gens if g]
    if not gens:
        return []
    n = gens[0].nvars
    drop = frozenset(drop)
    order = elimination(n, drop, weights=weights)
    gb = buchberger(gens, order, caps)
    return [g for g in gb if not any(m[v] for m in g.terms for v in drop)]


def divide_by_variable_power(f: Polynomial, v: int) -> Polynomial:
    k = min(m[v] for m in f.terms)
    if not k:
        return f
    return Polynomial._raw(
        {tuple(e - k if i == v else e for i, e in enumerate(m)): c for m, c in f.terms.items()}, f.nvars)


def saturate_by_variable(gens: Sequence[Polynomial], v: int, caps: EffortCaps | None = None,
                         weights: Sequence[int] | None = None) -> list[Polynomial]:
    """Generators of ``ideal(gens) : x_v^infinity``.

    When every generator is homogeneous for ``weights`` (standard grading by
    default) this uses one reverse-lex basis with ``x_v`` least and strips
    powers of ``x_v``.  Otherwise it falls back to eliminating ``y`` from
    ``gens + (1 - y*x_v)``.
    """
    gens = [g for g in gens if g]
    if not gens:
        return []
    n = gens[0].nvars
    if all(g.is_homogeneous(weights) for g in gens):
        priority = [i for i in range(n - 1, -1, -1) if i != v] + [v]
        order = degrevlex(n, priority, weights)
        gb = buchberger(gens, order, caps)
        return [divide_by_variable_power(g, v) for g in gb]
    ext = [g.extend() for g in gens]
    y = Polynomial.variable(n, n + 1)
    ext.append(1 - y * Polynomial.variable(v, n + 1))
    return [g.drop_variables([n]) for g in eliminate(ext, [n], caps)]


def divide_exact(f: Polynomial, d: Polynomial) -> Polynomial:
    """Quotient ``f / d``; raises if ``d`` does not divide ``f``."""
    if d.is_monomial():
        (dm, dc), = d.terms.items()
        out = {}
        for m, c in f.terms.items():
            q = tuple(a - b for a, b in zip(m, dm))
            if any(e < 0 for e in q):
                raise InputError("inexact division")
            out[q] = c / dc
        return Polynomial._raw(out, f.nvars)
    from .orders import lex
    order = lex(f.nvars)
    ld = d.leading_monomial(order)
    rest = dict(f.terms)
    quot: dict = {}
    while rest:
        m = max(rest, key=order.key)
        if not divides(ld, m):
            raise InputError("inexact division")
        q = tuple(a - b for a, b in zip(m, ld))
        c = rest[m] / d.terms[ld]
        quot[q] = quot.get(q, 0) + c
        for bm, bc in d.terms.items():
            t = tuple(x + y for x, y in zip(bm, q))
            val = rest.get(t, 0) - c * bc
            if val:
                rest[t] = val
            else:
                rest.pop(t, None)
    return Polynomial._raw({m: c for m, c in quot.items() if c}, f.nvars)


def intersect_with_principal(gens: Sequence[Polynomial], f: Polynomial,
                             caps: EffortCaps | None = None,
                             weights: Sequence[int] | None = None) -> list[Polynomial]:
    """Generators of ``ideal(gens) ∩ (f)`` via a tag variable ``t``:
    eliminate ``t`` from ``t*gens + (1 - t)*f``."""
    n = f.nvars
    t = Polynomial.variable(n, n + 1)
    ext = [t * g.extend() for g in gens if g]
    ext.append((1 - t) * f.extend())
    w = None if weights is None else tuple(weights) + (0,)
    return [g.drop_variables([n]) for g in eliminate(ext, [n], caps, weights=w)]


def quotient_by_element(gens: Sequence[Polynomial], f: Polynomial,
                        caps: EffortCaps | None = None) -> list[Polynomial]:
    """Generators of ``ideal(gens) : (f)``, computed as ``(I ∩ (f)) / f``."""
    if not f:
        raise InputError("quotient by the zero polynomial")
    return [divide_exact(g, f) for g in intersect_with_principal(gens, f, caps)]
