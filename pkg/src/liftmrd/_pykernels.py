"""Pure-Python linear algebra kernels over GF(q).

Matrices are sequences of rows of integer-encoded field elements. GF(2)
work is done on int bitmasks; other fields use the addition and
multiplication tables of the field (or its arithmetic methods when the
field is too large for tables).

The compiled module ``_ckernels`` exposes the same functions with the same
signatures.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .galois import FieldSpec

Rows = Sequence[Sequence[int]]


def _mask(row: Sequence[int]) -> int:
    # column 0 is the most significant bit so leading bits follow pivot order
    v = 0
    for x in row:
        v = (v << 1) | x
    return v


def _rank_masks(masks) -> int:
    pivots: dict[int, int] = {}
    for v in masks:
        while v:
            h = v.bit_length()
            w = pivots.get(h)
            if w is None:
                pivots[h] = v
                break
            v ^= w
    return len(pivots)


class _Arith:
    __slots__ = ("add", "mul", "neg", "inv")

    def __init__(self, field: FieldSpec) -> None:
        if field.add_table is not None:
            add_t = field.add_table.tolist()
            mul_t = field.mul_table.tolist()
            self.add = lambda a, b: add_t[a][b]
            self.mul = lambda a, b: mul_t[a][b]
            self.neg = field.neg_table.tolist().__getitem__
            self.inv = field.inv_table.tolist().__getitem__
        else:
            self.add, self.mul, self.neg, self.inv = field.add, field.mul, field.neg, field.inv


def _eliminate(work: list[list[int]], ncols: int, ar: _Arith, full: bool) -> int:
    """Row-reduce ``work`` in place; return the rank.

    With ``full`` the result is the reduced row echelon form, otherwise
    only entries below each pivot are cleared.
    """
    add, mul, neg, inv = ar.add, ar.mul, ar.neg, ar.inv
    nrows = len(work)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if work[i][c]), -1)
        if piv < 0:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        f = inv(prow[c])
        if f != 1:
            for j in range(c, ncols):
                prow[j] = mul(f, prow[j])
        targets = range(nrows) if full else range(r + 1, nrows)
        for i in targets:
            if i == r:
                continue
            row = work[i]
            t = row[c]
            if t:
                nt = neg(t)
                for j in range(c, ncols):
                    if prow[j]:
                        row[j] = add(row[j], mul(nt, prow[j]))
        r += 1
    return r


def rank(rows: Rows, ncols: int, field: FieldSpec) -> int:
    if field.q == 2:
        return _rank_masks(_mask(r) for r in rows)
    work = [list(r) for r in rows]
    return _eliminate(work, ncols, _Arith(field), full=False)


def rref(rows: Rows, ncols: int, field: FieldSpec) -> tuple[list[list[int]], int]:
    work = [list(r) for r in rows]
    r = _eliminate(work, ncols, _Arith(field), full=True)
    return work, r


def _rank_fn(field: FieldSpec, ncols: int):
    if field.q == 2:
        return None
    ar = _Arith(field)

    def fn(rows):
        return _eliminate([list(r) for r in rows], ncols, ar, full=False)

    return fn


def min_pair_injection(bases: Sequence[Rows], n: int, field: FieldSpec) -> int:
    """Least positive ``k - dim(U cap V)`` over pairs of equal-dimension bases.

    Returns -1 when no pair of distinct subspaces exists.
    """
    count = len(bases)
    if count < 2:
        return -1
    k = len(bases[0])
    best = -1
    if field.q == 2:
        masks = [[_mask(r) for r in b] for b in bases]
        for a in range(count):
            ma = masks[a]
            for b in range(a + 1, count):
                dist = _rank_masks(ma + masks[b]) - k
                if dist > 0 and (best < 0 or dist < best):
                    best = dist
                    if best == 1:
                        return 1
        return best
    rank_of = _rank_fn(field, n)
    for a in range(count):
        ba = list(bases[a])
        for b in range(a + 1, count):
            dist = rank_of(ba + list(bases[b])) - k
            if dist > 0 and (best < 0 or dist < best):
                best = dist
                if best == 1:
                    return 1
    return best


def min_pair_rank_distance(mats: Sequence[Rows], cols: int, field: FieldSpec) -> int:
    """Least positive ``rank(A - B)`` over pairs; -1 when all matrices coincide."""
    count = len(mats)
    if count < 2:
        return -1
    if field.add_table is not None:
        return _min_pair_rank_tabled(mats, cols, field)
    best = -1
    rank_of = _rank_fn(field, cols)
    sub = field.sub
    for a in range(count):
        ma = mats[a]
        for b in range(a + 1, count):
            diff = [[sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(ma, mats[b])]
            d = rank_of(diff)
            if d > 0 and (best < 0 or d < best):
                best = d
                if best == 1:
                    return best
    return best


def _min_pair_rank_tabled(mats: Sequence[Rows], cols: int, field: FieldSpec) -> int:
    # Differences are formed a row of pairs at a time through the field tables;
    # each distinct difference matrix is ranked once.
    rows = len(mats[0])
    if rows == 0 or cols == 0:
        return -1
    arr = np.asarray(mats, dtype=np.int32).reshape(len(mats), rows * cols)
    neg = field.neg_table[arr]
    add = field.add_table
    if field.q == 2:
        def rank_of(flat):
            return _rank_masks(_mask(flat[i:i + cols]) for i in range(0, rows * cols, cols))
    else:
        ar = _Arith(field)

        def rank_of(flat):
            return _eliminate([list(flat[i:i + cols]) for i in range(0, rows * cols, cols)], cols, ar, full=False)

    seen: set[bytes] = set()
    best = -1
    for a in range(len(arr) - 1):
        diff = add[arr[a + 1:], neg[a]].astype(np.uint8)
        for key in set(map(bytes, diff)) - seen:
            seen.add(key)
            d = rank_of(key)
            if d > 0 and (best < 0 or d < best):
                best = d
                if best == 1:
                    return best
    return best


def min_nonzero_rank(mats: Sequence[Rows], cols: int, field: FieldSpec) -> int:
    """Least positive rank among ``mats``; -1 when every matrix is zero."""
    best = -1
    if field.q == 2:
        for m in mats:
            d = _rank_masks(_mask(r) for r in m)
            if d > 0 and (best < 0 or d < best):
                best = d
        return best
    rank_of = _rank_fn(field, cols)
    for m in mats:
        d = rank_of(m)
        if d > 0 and (best < 0 or d < best):
            best = d
    return best


def max_cross_intersection(left: Sequence[Rows], right: Sequence[Rows], n: int, field: FieldSpec) -> int:
    """Largest ``dim(U cap V)`` over U in ``left`` and V in ``right``; -1 if either is empty."""
    best = -1
    if not left or not right:
        return best
    if field.q == 2:
        lm = [[_mask(r) for r in b] for b in left]
        rm = [[_mask(r) for r in b] for b in right]
        for a in lm:
            for b in rm:
                inter = len(a) + len(b) - _rank_masks(a + b)
                best = max(best, inter)
        return best
    rank_of = _rank_fn(field, n)
    for a in left:
        for b in right:
            inter = len(a) + len(b) - rank_of(list(a) + list(b))
            best = max(best, inter)
    return best
