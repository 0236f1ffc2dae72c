"""Exact linear algebra over GF(q): matrices, subspaces and their metrics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .errors import (
    AmbientMismatch,
    CapExceeded,
    DimensionMismatch,
    InvalidParams,
    ShapeMismatch,
    SpecMismatch,
    TooFewCodewords,
)
from .galois import FieldSpec

MAX_MATRIX_FIELD = 1 << 16
DEFAULT_VERIFICATION_CAP = 5000


@dataclass(frozen=True)
class MatrixGFq:
    """Dense ``rows x cols`` matrix of integer-encoded GF(q) elements."""

    field: FieldSpec
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.field.q > MAX_MATRIX_FIELD:
            raise InvalidParams(f"matrix entries limited to q <= {MAX_MATRIX_FIELD}")
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows:
            raise ShapeMismatch(f"expected {self.rows} rows, got {len(self.entries)}")
        q = self.field.q
        for row in self.entries:
            if len(row) != self.cols:
                raise ShapeMismatch(f"row of length {len(row)} in a matrix with {self.cols} columns")
            for x in row:
                if not 0 <= x < q:
                    raise InvalidParams(f"entry {x} is not a GF({q}) digit")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Sequence[int]], cols: int | None = None) -> MatrixGFq:
        entries = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            if not entries:
                raise ShapeMismatch("column count is required for a matrix without rows")
            cols = len(entries[0])
        return cls(field, len(entries), cols, entries)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> MatrixGFq:
        return cls(field, rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field: FieldSpec, k: int) -> MatrixGFq:
        return cls(field, k, k, tuple(tuple(int(i == j) for j in range(k)) for i in range(k)))

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def _check_compatible(self, other: MatrixGFq) -> None:
        if self.field != other.field:
            raise SpecMismatch("matrices over different fields")
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: MatrixGFq) -> MatrixGFq:
        self._check_compatible(other)
        add = self.field.add
        return MatrixGFq(self.field, self.rows, self.cols, tuple(
            tuple(add(x, y) for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)
        ))

    def __sub__(self, other: MatrixGFq) -> MatrixGFq:
        self._check_compatible(other)
        sub = self.field.sub
        return MatrixGFq(self.field, self.rows, self.cols, tuple(
            tuple(sub(x, y) for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)
        ))

    def scale(self, c: int) -> MatrixGFq:
        mul = self.field.mul
        return MatrixGFq(self.field, self.rows, self.cols, tuple(tuple(mul(c, x) for x in r) for r in self.entries))

    def transpose(self) -> MatrixGFq:
        return MatrixGFq(self.field, self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)))

    def hstack(self, other: MatrixGFq) -> MatrixGFq:
        if self.rows != other.rows:
            raise ShapeMismatch(f"cannot hstack {self.shape} and {other.shape}")
        if self.field != other.field:
            raise SpecMismatch("matrices over different fields")
        return MatrixGFq(self.field, self.rows, self.cols + other.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def vstack(self, other: MatrixGFq) -> MatrixGFq:
        if self.cols != other.cols:
            raise ShapeMismatch(f"cannot vstack {self.shape} and {other.shape}")
        if self.field != other.field:
            raise SpecMismatch("matrices over different fields")
        return MatrixGFq(self.field, self.rows + other.rows, self.cols, self.entries + other.entries)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def rref(M: MatrixGFq) -> tuple[MatrixGFq, int]:
    """Reduced row echelon form (zero rows kept at the bottom) and rank."""
    if M.rows == 0 or M.cols == 0:
        return M, 0
    rows, r = kernels.backend.rref(M.entries, M.cols, M.field)
    return MatrixGFq(M.field, M.rows, M.cols, tuple(tuple(row) for row in rows)), r


def rank(M: MatrixGFq) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    return kernels.backend.rank(M.entries, M.cols, M.field)


def rank_distance(A: MatrixGFq, B: MatrixGFq) -> int:
    return rank(A - B)


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_q^n held by its RREF basis (no zero rows).

    Two subspaces are equal exactly when their bases are identical.
    Build instances through :func:`row_space` unless the basis is already
    known to be canonical.
    """

    ambient_dim: int
    basis: MatrixGFq

    def __post_init__(self) -> None:
        if self.basis.cols != self.ambient_dim:
            raise ShapeMismatch(f"basis has {self.basis.cols} columns, ambient dimension is {self.ambient_dim}")

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def field(self) -> FieldSpec:
        return self.basis.field

    @property
    def q(self) -> int:
        return self.basis.field.q

    def pivots(self) -> tuple[int, ...]:
        """Zero-based pivot columns of the basis."""
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.basis.entries)

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self.basis.entries


def row_space(M: MatrixGFq) -> Subspace:
    R, r = rref(M)
    basis = MatrixGFq(M.field, r, M.cols, R.entries[:r])
    return Subspace(M.cols, basis)


def _check_pair(U: Subspace, V: Subspace) -> None:
    if U.field != V.field:
        raise SpecMismatch("subspaces over different fields")
    if U.ambient_dim != V.ambient_dim:
        raise AmbientMismatch(f"ambient dimensions {U.ambient_dim} and {V.ambient_dim}")


def intersection_dim(U: Subspace, V: Subspace) -> int:
    _check_pair(U, V)
    return U.dim + V.dim - rank(U.basis.vstack(V.basis))


def injection_distance(U: Subspace, V: Subspace) -> int:
    """``k - dim(U cap V)``; defined only for subspaces of equal dimension k."""
    _check_pair(U, V)
    if U.dim != V.dim:
        raise DimensionMismatch(f"dimensions {U.dim} and {V.dim} differ")
    return U.dim - intersection_dim(U, V)


def _uniform(codewords: Sequence[Subspace]) -> tuple[FieldSpec, int, int]:
    first = codewords[0]
    for c in codewords:
        if c.field != first.field:
            raise SpecMismatch("codewords over different fields")
        if c.ambient_dim != first.ambient_dim:
            raise AmbientMismatch(f"ambient dimensions {first.ambient_dim} and {c.ambient_dim}")
        if c.dim != first.dim:
            raise DimensionMismatch(f"dimensions {first.dim} and {c.dim}")
    return first.field, first.ambient_dim, first.dim


def min_injection_distance(codewords: Sequence[Subspace], cap: int = DEFAULT_VERIFICATION_CAP) -> int:
    """Minimum injection distance over all pairs of distinct codewords."""
    codewords = list(codewords)
    if len(codewords) > cap:
        raise CapExceeded(len(codewords), cap)
    if len(codewords) < 2:
        raise TooFewCodewords(f"need at least two codewords, got {len(codewords)}")
    field, n, _ = _uniform(codewords)
    distinct = list(dict.fromkeys(codewords))
    if len(distinct) < 2:
        raise TooFewCodewords("need at least two distinct codewords")
    return kernels.backend.min_pair_injection([c.rows() for c in distinct], n, field)


def max_cross_intersection(left: Sequence[Subspace], right: Sequence[Subspace]) -> int:
    """Largest ``dim(U cap V)`` for U in ``left``, V in ``right`` (-1 if either is empty)."""
    if not left or not right:
        return -1
    _uniform(left)
    _uniform(right)
    _check_pair(left[0], right[0])
    field, n = left[0].field, left[0].ambient_dim
    return kernels.backend.max_cross_intersection([u.rows() for u in left], [v.rows() for v in right], n, field)
