"""Exact rank of sparse rational matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


def rank_q(rows: Iterable[Mapping[int, int | Fraction]]) -> int:
    """Rank over Q of a matrix given as sparse rows ``{column: value}``.

    Gaussian elimination with exact ``Fraction`` arithmetic; pivots are
    chosen on the sparsest remaining row to limit fill-in.
    """
    pending = [{c: Fraction(v) for c, v in r.items() if v} for r in rows]
    pending = [r for r in pending if r]
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    pending.sort(key=len)
    for row in pending:
        row = dict(row)
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                inv = 1 / row[col]
                pivots[col] = {c: v * inv for c, v in row.items()}
                rank += 1
                break
            f = row[col]
            for c, v in piv.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return rank
