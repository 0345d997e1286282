"""Exact linear algebra kernels: GF(2) bit matrices and integer elimination.

GF(2) matrices are packed one row per Python int, so a row operation is a
single word-parallel XOR.  Rational ranks are computed on the integers by
sparse row elimination: pivots prefer unit entries and low-degree columns,
rows are combined integrally, and each combined row is divided by its
content, so every intermediate value stays an exact int.  No floating point
appears anywhere in this module.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank of a GF(2) matrix given as packed row bitmasks."""
    pivots: dict[int, int] = {}
    for row in rows:
        r = row
        while r:
            c = (r & -r).bit_length() - 1
            p = pivots.get(c)
            if p is None:
                pivots[c] = r
                break
            r ^= p
    return len(pivots)


def gf2_kernel_basis(rows: Iterable[int], ncols: int) -> list[int]:
    """Basis of the null space of a GF(2) matrix, as packed column vectors."""
    pivots: dict[int, int] = {}
    for row in rows:
        r = row
        while r:
            c = (r & -r).bit_length() - 1
            p = pivots.get(c)
            if p is None:
                pivots[c] = r
                break
            r ^= p
    # reduce to RREF so each pivot column appears in exactly one row
    cols = sorted(pivots)
    for i, c in enumerate(cols):
        row = pivots[c]
        for c2 in cols[:i]:
            if (pivots[c2] >> c) & 1:
                pivots[c2] ^= row
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = 1 << free
        for c, row in pivots.items():
            if (row >> free) & 1:
                vec |= 1 << c
        basis.append(vec)
    return basis


def _row_content(row: dict[int, int]) -> int:
    return reduce(gcd, row.values())


def int_rank(rows: Iterable[dict[int, int]]) -> int:
    """Rank over Q of an integer matrix given as sparse rows.

    Exact fraction-free elimination.  The pivot is chosen in the active
    column with the fewest entries, preferring rows with a unit coefficient
    there and few entries overall (Markowitz-style fill control).
    """
    active: dict[int, dict[int, int]] = {}
    cols: defaultdict[int, set[int]] = defaultdict(set)
    for i, row in enumerate(rows):
        entries = {c: v for c, v in row.items() if v}
        if entries:
            active[i] = entries
            for c in entries:
                cols[c].add(i)
    rank = 0
    while cols:
        c = min(cols, key=lambda cc: (len(cols[cc]), cc))
        in_col = cols[c]
        r = min(in_col, key=lambda rr: (abs(active[rr][c]) != 1,
                                        abs(active[rr][c]), len(active[rr]), rr))
        pivot = active.pop(r)
        pval = pivot[c]
        for cc in pivot:
            s = cols.get(cc)
            if s is not None:
                s.discard(r)
                if not s:
                    del cols[cc]
        rank += 1
        targets = list(cols.pop(c, ()))
        for rr in targets:
            row = active[rr]
            a = row.pop(c)
            if pval == 1:
                f_row, f_piv = 1, -a
            elif pval == -1:
                f_row, f_piv = 1, a
            else:
                g = gcd(pval, a)
                f_row, f_piv = pval // g, -(a // g)
            if f_row != 1:
                for cc in row:
                    row[cc] *= f_row
            for cc, v in pivot.items():
                if cc == c:
                    continue
                nv = row.get(cc, 0) + f_piv * v
                if nv:
                    if cc not in row:
                        cols[cc].add(rr)
                    row[cc] = nv
                elif cc in row:
                    del row[cc]
                    s = cols[cc]
                    s.discard(rr)
                    if not s:
                        del cols[cc]
            if row:
                if f_row != 1:
                    g = _row_content(row)
                    if g > 1:
                        for cc in row:
                            row[cc] //= g
            else:
                del active[rr]
    return rank


def rational_kernel_basis(rows: list[dict[int, int]], ncols: int) -> list[dict[int, int]]:
    """Basis of the null space over Q of a small integer matrix.

    Dense Gauss-Jordan on ``Fraction`` entries; the basis vectors are scaled
    to integers.  Intended for the small matrices of the brute-force
    tightness check, not for the big boundary matrices.
    """
    dense = [[Fraction(row.get(c, 0)) for c in range(ncols)] for row in rows]
    pivots: list[tuple[int, int]] = []  # (row, col)
    prow = 0
    for col in range(ncols):
        sel = None
        for i in range(prow, len(dense)):
            if dense[i][col]:
                sel = i
                break
        if sel is None:
            continue
        dense[prow], dense[sel] = dense[sel], dense[prow]
        pv = dense[prow][col]
        dense[prow] = [x / pv for x in dense[prow]]
        for i in range(len(dense)):
            if i != prow and dense[i][col]:
                f = dense[i][col]
                dense[i] = [x - f * y for x, y in zip(dense[i], dense[prow])]
        pivots.append((prow, col))
        prow += 1
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = {free: Fraction(1)}
        for r, c in pivots:
            val = dense[r][free]
            if val:
                vec[c] = -val
        scale = reduce(lambda a, b: a * b // gcd(a, b),
                       (f.denominator for f in vec.values()), 1)
        basis.append({c: int(f * scale) for c, f in sorted(vec.items())})
    return basis
