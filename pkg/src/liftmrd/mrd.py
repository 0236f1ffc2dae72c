"""Maximum rank distance codes in F_q^{k x w} via Gabidulin codes.

A message ``(f_0, ..., f_{kappa-1})`` over GF(q^M), ``M = max(k, w)``, is
mapped to the symbols ``c_i = sum_t f_t * g_i^(q^t)`` at the evaluation
points ``g_i = alpha^i`` (``i < min(k, w)``). Each symbol is expanded over
GF(q) in the basis ``1, alpha, ..., alpha^(M-1)``; the expansions become the
rows of the codeword when ``k <= w`` and its columns otherwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from . import kernels
from .errors import CapExceeded, InvalidParams, LengthMismatch, TrivialCode
from .galois import FieldElement, FieldSpec, field_create, field_of_size, prime_power, subfield_embedding
from .linalg import MAX_MATRIX_FIELD, MatrixGFq

DEFAULT_MRD_CAP = 5000


def singleton_bound(q: int, rows: int, cols: int, d: int) -> int:
    """``ceil(q ** (max(rows, cols) * (min(rows, cols) - d + 1)))`` as an exact int."""
    if d < 1:
        raise InvalidParams(f"minimum distance must be >= 1, got {d}")
    exponent = max(rows, cols) * (min(rows, cols) - d + 1)
    return q**exponent if exponent > 0 else 1


@dataclass(frozen=True)
class MrdParams:
    q: int
    k: int
    w: int
    d: int

    def __post_init__(self) -> None:
        prime_power(self.q)
        if self.q > MAX_MATRIX_FIELD:
            raise InvalidParams(f"q must be <= {MAX_MATRIX_FIELD}")
        if self.k < 1:
            raise InvalidParams(f"rows must be >= 1, got {self.k}")
        if self.w < 0:
            raise InvalidParams(f"cols must be >= 0, got {self.w}")
        if not 1 <= self.d <= self.k:
            raise InvalidParams(f"need 1 <= d <= k, got d={self.d}, k={self.k}")


@dataclass(frozen=True)
class MrdCode:
    """A Gabidulin code viewed as a set of ``k x w`` matrices over GF(q).

    The extension field and the encoder tables are built on first use, so
    sizing a code never touches GF(q^M).
    """

    params: MrdParams

    @property
    def ext_degree(self) -> int:
        return max(self.params.k, self.params.w)

    @property
    def length(self) -> int:
        return min(self.params.k, self.params.w)

    @property
    def msg_dim(self) -> int:
        return max(0, self.length - self.params.d + 1)

    @property
    def orientation(self) -> str:
        return "rows" if self.params.k <= self.params.w else "columns"

    @property
    def trivial(self) -> bool:
        return self.msg_dim == 0

    @property
    def size(self) -> int:
        return self.params.q ** (self.ext_degree * self.msg_dim) if self.msg_dim else 1

    @cached_property
    def base_field(self) -> FieldSpec:
        return field_of_size(self.params.q)

    @cached_property
    def field(self) -> FieldSpec | None:
        """GF(q^M), or None for the one-word code."""
        if self.trivial:
            return None
        base = self.base_field
        return field_create(base.p, base.m * self.ext_degree)

    @cached_property
    def _generator(self) -> int:
        F = self.field
        return F.p if F.m > 1 else 1

    @cached_property
    def eval_points(self) -> tuple[int, ...]:
        F = self.field
        if F is None:
            return ()
        return tuple(F.pow(self._generator, i) for i in range(self.length))

    @cached_property
    def _frobenius_powers(self) -> tuple[tuple[int, ...], ...]:
        # row i holds g_i^(q^t) for t < kappa
        F, q = self.field, self.params.q
        return tuple(
            tuple(F.pow(g, pow(q, t, F.q - 1) or F.q - 1) for t in range(self.msg_dim))
            for g in self.eval_points
        )

    @cached_property
    def _coordinates(self):
        """Map an encoded element of GF(q^M) to its GF(q)-coordinates."""
        F, base, M = self.field, self.base_field, self.ext_degree
        if base.m == 1:
            return F.digits
        embed = subfield_embedding(F, base)
        basis = [F.pow(self._generator, j) for j in range(M)]
        table: dict[int, tuple[int, ...]] = {}
        for coords in itertools.product(range(base.q), repeat=M):
            acc = 0
            for c, b in zip(coords, basis):
                acc = F.add(acc, F.mul(embed[c], b))
            table[acc] = coords
        return table.__getitem__

    def zero_word(self) -> MatrixGFq:
        return MatrixGFq.zeros(self.base_field, self.params.k, self.params.w)

    def encode(self, message: Sequence[int | FieldElement]) -> MatrixGFq:
        if self.trivial:
            raise TrivialCode("the one-word code has no messages to encode")
        F = self.field
        if len(message) != self.msg_dim:
            raise LengthMismatch(f"message length {len(message)}, expected {self.msg_dim}")
        f = []
        for x in message:
            if isinstance(x, FieldElement):
                if x.spec != F:
                    raise InvalidParams(f"message symbol from {x.spec!r}, expected {F!r}")
                x = x.value
            f.append(F.check(int(x)))
        return self._encode_values(f)

    def _encode_values(self, f: Sequence[int]) -> MatrixGFq:
        F = self.field
        add, mul = F.add, F.mul
        coords = self._coordinates
        expansions = []
        for powers in self._frobenius_powers:
            c = 0
            for ft, gp in zip(f, powers):
                if ft:
                    c = add(c, mul(ft, gp))
            expansions.append(coords(c))
        if self.orientation == "rows":
            entries = tuple(tuple(e) for e in expansions)
        else:
            entries = tuple(zip(*expansions))
        return MatrixGFq(self.base_field, self.params.k, self.params.w, entries)

    def messages(self) -> Iterator[tuple[int, ...]]:
        """All messages in counter order, least significant symbol first."""
        Q = self.field.q
        for digits in itertools.product(range(Q), repeat=self.msg_dim):
            yield digits[::-1]


def build_mrd(params: MrdParams) -> MrdCode:
    return MrdCode(params)


def enumerate_mrd(code: MrdCode, cap: int = DEFAULT_MRD_CAP) -> list[MatrixGFq]:
    """Every codeword once, ordered by message counter."""
    if code.size > cap:
        raise CapExceeded(code.size, cap)
    if code.trivial:
        return [code.zero_word()]
    return [code._encode_values(m) for m in code.messages()]


def min_rank_distance(code: MrdCode, cap: int = DEFAULT_MRD_CAP, pairwise: bool = False) -> int:
    """Minimum rank distance of ``code``.

    The default uses linearity (least rank of a nonzero codeword);
    ``pairwise=True`` evaluates ``rank(A - B)`` over every pair instead.
    """
    if code.size < 2:
        raise TrivialCode("a one-word code has no minimum distance")
    words = enumerate_mrd(code, cap)
    entries = [w.entries for w in words]
    be = kernels.backend
    if pairwise:
        return be.min_pair_rank_distance(entries, code.params.w, code.base_field)
    return be.min_nonzero_rank(entries, code.params.w, code.base_field)
