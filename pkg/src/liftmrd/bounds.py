"""Lower bounds on A_q(n, d, k) from multi-component lifted MRD codes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .construct import CodeParams, component_count, lifted_size
from .errors import InvalidParams
from .mrd import singleton_bound

DRule = Callable[[int], Iterable[int]]


def all_distances(k: int) -> range:
    return range(1, k + 1)


def distance_equals_k(k: int) -> range:
    return range(k, k + 1)


def lower_bound_aq(params: CodeParams) -> int:
    """Lower bound on A_q(n, d, k).

    Evaluated as the sum of the MRD bounds of the component widths
    ``n - k - jd``; this is computed independently of
    :func:`liftmrd.construct.size_formula` and must agree with it.
    """
    q, n, k, d = params.q, params.n, params.k, params.d
    return sum(singleton_bound(q, k, n - k - j * d, d) for j in range(component_count(params)))


def ratio_string(num: int, den: int, places: int = 4) -> str:
    """Exact ``num/den`` rounded half-up to ``places`` decimals."""
    scale = 10**places
    scaled, rem = divmod(num * scale, den)
    if 2 * rem >= den:
        scaled += 1
    whole, frac = divmod(scaled, scale)
    return f"{whole}.{frac:0{places}d}"


@dataclass(frozen=True)
class BoundRow:
    params: CodeParams
    lifted_size: int
    multi_size: int

    @property
    def ratio(self) -> str:
        return ratio_string(self.multi_size, self.lifted_size)

    def cells(self) -> list[str]:
        p = self.params
        return [str(p.q), str(p.n), str(p.k), str(p.d), str(self.lifted_size), str(self.multi_size), self.ratio]


HEADER = ["q", "n", "k", "d", "lifted_size", "multi_size", "ratio"]


def bound_table(q_list: Sequence[int], n_range: Iterable[int], k_range: Iterable[int],
                d_rule: DRule = all_distances) -> list[BoundRow]:
    """Rows for every valid (q, n, k, d) cell, in lexicographic order.

    Cells that are not valid code parameters are skipped.
    """
    n_values = sorted(set(n_range))
    k_values = sorted(set(k_range))
    rows = []
    for q in sorted(set(q_list)):
        for n in n_values:
            for k in k_values:
                for d in sorted(set(d_rule(k))):
                    try:
                        params = CodeParams(q, n, k, d)
                    except InvalidParams:
                        continue
                    rows.append(BoundRow(params, lifted_size(params), lower_bound_aq(params)))
    return rows


def render_csv(rows: Iterable[BoundRow]) -> str:
    lines = [",".join(HEADER)]
    lines.extend(",".join(r.cells()) for r in rows)
    return "\n".join(lines) + "\n"


def render_markdown(rows: Iterable[BoundRow]) -> str:
    lines = ["| " + " | ".join(HEADER) + " |", "|" + "|".join("---:" for _ in HEADER) + "|"]
    lines.extend("| " + " | ".join(r.cells()) + " |" for r in rows)
    return "\n".join(lines) + "\n"
