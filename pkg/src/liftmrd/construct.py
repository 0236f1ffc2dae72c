"""Lifted MRD codes and their multi-component unions.

Component ``j`` of the union consists of the row spaces of
``[0_{k x jd} | I_k | M]`` for ``M`` in an MRD code of width ``n - k - jd``.
Components occupy distinct pivot columns, so the union is disjoint.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterable

from .errors import CapExceeded, InvalidParams, LiftMrdError, ShapeMismatch
from .galois import field_of_size, prime_power
from .linalg import (
    DEFAULT_VERIFICATION_CAP,
    MAX_MATRIX_FIELD,
    MatrixGFq,
    Subspace,
    min_injection_distance,
    row_space,
)
from .mrd import MrdCode, MrdParams, build_mrd, enumerate_mrd


@dataclass(frozen=True)
class CodeParams:
    q: int
    n: int
    k: int
    d: int

    def __post_init__(self) -> None:
        prime_power(self.q)
        if self.q > MAX_MATRIX_FIELD:
            raise InvalidParams(f"q must be <= {MAX_MATRIX_FIELD}")
        if not 1 <= self.d <= self.k:
            raise InvalidParams(f"need 1 <= d <= k, got d={self.d}, k={self.k}")
        if self.n < 2 * self.k:
            raise InvalidParams(f"need n >= 2k, got n={self.n}, k={self.k}")


def lift(A: MatrixGFq) -> Subspace:
    """Row space of ``[I_k | A]``."""
    return shifted_lift(A, 0)


def shifted_lift(A: MatrixGFq, shift: int) -> Subspace:
    """Row space of ``[0_{k x shift} | I_k | A]``; the block matrix is already in RREF."""
    if shift < 0:
        raise InvalidParams(f"shift must be >= 0, got {shift}")
    k, w = A.rows, A.cols
    zeros = (0,) * shift
    rows = tuple(
        zeros + tuple(int(i == j) for j in range(k)) + A.entries[i]
        for i in range(k)
    )
    n = shift + k + w
    return Subspace(n, MatrixGFq(A.field, k, n, rows))


@dataclass(frozen=True)
class LiftedCode:
    size: int
    codewords: tuple[Subspace, ...]


def lift_code(mrd: MrdCode, n: int, cap: int = DEFAULT_VERIFICATION_CAP) -> LiftedCode:
    """Lift every codeword of ``mrd`` into G_q(k, n)."""
    k, w = mrd.params.k, mrd.params.w
    if w != n - k:
        raise ShapeMismatch(f"MRD code is {k}x{w}, lifting to n={n} needs width {n - k}")
    return LiftedCode(mrd.size, tuple(lift(A) for A in enumerate_mrd(mrd, cap)))


@dataclass(frozen=True)
class ComponentCode:
    j: int
    shift: int
    mrd: MrdCode

    @property
    def width(self) -> int:
        return self.mrd.params.w

    @property
    def size(self) -> int:
        return self.mrd.size

    def pivot_columns(self) -> tuple[int, ...]:
        return tuple(range(self.shift, self.shift + self.mrd.params.k))

    def codewords(self, cap: int = DEFAULT_VERIFICATION_CAP) -> list[Subspace]:
        return [shifted_lift(A, self.shift) for A in enumerate_mrd(self.mrd, cap)]


@dataclass(frozen=True)
class MultiComponentCode:
    params: CodeParams
    components: tuple[ComponentCode, ...]

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)


def component_count(params: CodeParams) -> int:
    return (params.n - params.k) // params.d + 1


def build_multi(params: CodeParams) -> MultiComponentCode:
    q, n, k, d = params.q, params.n, params.k, params.d
    comps = tuple(
        ComponentCode(j, j * d, build_mrd(MrdParams(q, k, n - k - j * d, d)))
        for j in range(component_count(params))
    )
    return MultiComponentCode(params, comps)


def _ceil_pow(q: int, e: int) -> int:
    # ceil(q^e) for integer e: exact power, or 1 for a proper fraction
    return q**e if e >= 0 else 1


def size_formula(params: CodeParams) -> int:
    """Cardinality of the union, summed term by term over both index ranges."""
    q, n, k, d = params.q, params.n, params.k, params.d
    split = (n - 2 * k) // d
    last = (n - k) // d
    full = sum(q ** ((k - d + 1) * (n - k - d * i)) for i in range(split + 1))
    narrow = sum(_ceil_pow(q, k * (n - k + 1 - d * (i + 1))) for i in range(split + 1, last + 1))
    return full + narrow


def size_closed_form_kd(q: int, n: int, k: int) -> int:
    """Cardinality for ``d = k``: ``(q^n - q^(r+k)) / (q^k - 1) + 1`` with ``r = n mod k``."""
    CodeParams(q, n, k, k)
    r = n % k
    num = q**n - q ** (r + k)
    den = q**k - 1
    quotient, rem = divmod(num, den)
    if rem:
        raise AssertionError(f"closed form not integral for q={q}, n={n}, k={k}")
    return quotient + 1


def lifted_size(params: CodeParams) -> int:
    """Size of the single lifted MRD code ``q^((n-k)(k-d+1))``."""
    q, n, k, d = params.q, params.n, params.k, params.d
    return q ** ((n - k) * (k - d + 1))


def enumerate_multi(code: MultiComponentCode, cap: int = DEFAULT_VERIFICATION_CAP) -> list[Subspace]:
    if code.size > cap:
        raise CapExceeded(code.size, cap)
    out: list[Subspace] = []
    for comp in code.components:
        out.extend(comp.codewords(cap))
    return out


@dataclass(frozen=True)
class VerifyReport:
    cardinality: int
    min_distance: int
    components_disjoint: bool


def verify_multi(code: MultiComponentCode, cap: int = DEFAULT_VERIFICATION_CAP) -> VerifyReport:
    """Recount the union by canonical form and brute-force its minimum distance."""
    if code.size > cap:
        raise CapExceeded(code.size, cap)
    lists = [c.codewords(cap) for c in code.components]
    words = [U for ws in lists for U in ws]
    union = set(words)
    disjoint = sum(len(set(ws)) for ws in lists) == len(union)
    for comp, ws in zip(code.components, lists):
        expected = comp.pivot_columns()
        disjoint = disjoint and all(U.pivots() == expected for U in ws)
    return VerifyReport(len(union), min_injection_distance(words, cap), disjoint)


# -- JSON interchange ---------------------------------------------------------


def export_document(code: MultiComponentCode, with_codewords: bool = True,
                    cap: int = DEFAULT_VERIFICATION_CAP) -> dict[str, Any]:
    p = code.params
    doc: dict[str, Any] = {
        "q": p.q,
        "n": p.n,
        "k": p.k,
        "d": p.d,
        "N": str(code.size),
        "components": [{"j": c.j, "width": c.width, "size": str(c.size)} for c in code.components],
    }
    if with_codewords:
        doc["codewords"] = [U.basis.tolist() for U in enumerate_multi(code, cap)]
    return doc


def dumps_document(doc: dict[str, Any]) -> str:
    return json.dumps(doc, separators=(",", ":")) + "\n"


class MalformedDocument(LiftMrdError, ValueError):
    pass


@dataclass(frozen=True)
class DocumentReport:
    cardinality_ok: bool
    min_distance_ok: bool
    components_ok: bool
    cardinality: int
    min_distance: int | None

    @property
    def ok(self) -> bool:
        return self.cardinality_ok and self.min_distance_ok and self.components_ok


def _int_field(doc: dict[str, Any], key: str) -> int:
    value = doc.get(key)
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise MalformedDocument(f"field {key!r} missing or not an integer")
    try:
        return int(value)
    except ValueError:
        raise MalformedDocument(f"field {key!r} is not an integer: {value!r}") from None


def _parse_codewords(raw: Iterable[Any], q: int, n: int, k: int) -> list[MatrixGFq]:
    field = field_of_size(q)
    out = []
    for idx, word in enumerate(raw):
        if not isinstance(word, list) or len(word) != k:
            raise MalformedDocument(f"codeword {idx} must be a list of {k} rows")
        for row in word:
            if not isinstance(row, list) or len(row) != n or not all(
                isinstance(x, int) and not isinstance(x, bool) and 0 <= x < q for x in row
            ):
                raise MalformedDocument(f"codeword {idx} has a row that is not {n} GF({q}) digits")
        out.append(MatrixGFq.from_rows(field, word, n))
    return out


def verify_document(doc: dict[str, Any], cap: int = DEFAULT_VERIFICATION_CAP) -> DocumentReport:
    """Check an exported code against its own header.

    Raises :class:`MalformedDocument` for structural problems and
    :class:`InvalidParams` when the header parameters are invalid. A header
    distance larger than k is not rejected here; no k-dimensional code can
    reach it, so it simply fails the distance check.
    """
    if not isinstance(doc, dict):
        raise MalformedDocument("document must be a JSON object")
    q, n, k, d = (_int_field(doc, key) for key in ("q", "n", "k", "d"))
    declared_n = _int_field(doc, "N")
    if d < 1:
        raise InvalidParams(f"need d >= 1, got d={d}")
    CodeParams(q, n, k, min(d, k))
    raw = doc.get("codewords")
    if not isinstance(raw, list):
        raise MalformedDocument("document carries no codewords")
    comps = doc.get("components")
    if not isinstance(comps, list):
        raise MalformedDocument("document carries no components")
    if len(raw) > cap:
        raise CapExceeded(len(raw), cap)

    matrices = _parse_codewords(raw, q, n, k)
    spaces = [row_space(M) for M in matrices]
    full_rank = [U for U in spaces if U.dim == k]
    distinct = list(dict.fromkeys(full_rank))
    cardinality_ok = len(distinct) == declared_n == len(raw)

    min_distance = None
    if len(distinct) >= 2:
        min_distance = min_injection_distance(distinct, cap)
    min_distance_ok = min_distance == d

    patterns: dict[tuple[int, ...], int] = {}
    declared_total = 0
    for c in comps:
        if not isinstance(c, dict):
            raise MalformedDocument("component entries must be objects")
        j, size = _int_field(c, "j"), _int_field(c, "size")
        declared_total += size
        patterns[tuple(range(j * d, j * d + k))] = size
    counts = dict.fromkeys(patterns, 0)
    components_ok = declared_total == declared_n
    for U in distinct:
        piv = U.pivots()
        if piv in counts:
            counts[piv] += 1
        else:
            components_ok = False
    components_ok = components_ok and all(counts[pat] <= size for pat, size in patterns.items())
    return DocumentReport(cardinality_ok, min_distance_ok, components_ok, len(distinct), min_distance)
