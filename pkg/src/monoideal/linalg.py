"""Exact matrix ranks: fraction-free over the rationals, direct over GF(p)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _rank_int(rows):
    """Rank of an integer matrix by one-step fraction-free elimination."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        pv = pr[col]
        for r in range(rank + 1, nrows):
            row = m[r]
            f = row[col]
            for c in range(col, ncols):
                row[c] = (row[c] * pv - f * pr[c]) // prev
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def _rank_modp(rows, p):
    m = [[v % p for v in r] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        pv = pr[col]
        for r in range(rank + 1, nrows):
            f = m[r][col]
            if f:
                row = m[r]
                for c in range(col, ncols):
                    row[c] = (row[c] * pv - f * pr[c]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank(rows, field):
    """Exact rank of a matrix of field elements (list of rows)."""
    if not rows or not rows[0]:
        return 0
    p = field.characteristic
    if p:
        return _rank_modp(rows, p)
    cleared = []
    for r in rows:
        den = 1
        for v in r:
            if isinstance(v, Fraction):
                den = den * v.denominator // gcd(den, v.denominator)
        cleared.append([int(v * den) for v in r])
    return _rank_int(cleared)
