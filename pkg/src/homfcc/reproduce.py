"""Summary rows of redundancy bounds over Z_{2^s}, each paired with exact search."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

from .bounds import (linear_plotkin_bound, plotkin_bound_generic, plotkin_bound_z4,
                     three_point_matrix, upper_bound_from_lambda)
from .functions import table_function
from .ring import RingParams
from .search import exact_Nh
from .verify import exact_optimal_redundancy
from .witnesses import clipped_weight, example_linear, three_value_function

MISSING = "—"


@dataclass
class Row:
    family: str
    s: int
    t: int
    formula: str
    bound: str
    exact: str
    note: str = ""

    def as_dict(self):
        return asdict(self)


def _fmt(v) -> str:
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else str(v.numerator)
    return str(v)


def _exact(res) -> str:
    if res.exhausted and res.certificate is not None:
        return str(res.value)
    return MISSING


def table_rows(s: int, ts, budget: int = 200_000) -> list[Row]:
    """Rows for each t in ``ts``. Exact entries that blow the budget read "—"."""
    ring = RingParams(s)
    rows: list[Row] = []
    binary = table_function(ring, 1, [0] * ring.half + [1] * ring.half, name="half-split")
    for t in ts:
        # locally (2, 2t): r = t
        res = exact_optimal_redundancy(binary, t, budget=budget)
        rows.append(Row("locally (2,2t)", s, t, "r = t", str(t), _exact(res), "witness: x < 2^{s-1}"))
        # locally (4, 2t): r <= 2t
        if s >= 2:
            res = exact_optimal_redundancy(clipped_weight(ring, 2, 3), t, budget=budget)
            ex, note = _exact(res), f"witness: min(w_h, 3) on Z_{ring.modulus}^2"
        else:
            ex, note = MISSING, "no witness at s = 1"
        rows.append(Row("locally (4,2t)", s, t, "r <= 2t", str(2 * t), ex, note))
        # locally (lambda, 2t) with lambda = 3, tight over Z_4
        ub = upper_bound_from_lambda(3, t)
        if s == 2:
            res = exact_optimal_redundancy(three_value_function(), t, budget=budget)
            ex = _exact(res)
        else:
            ex = MISSING
        formula = "r <= lam*t/2" if t % 2 == 0 else "r <= (lam(t+1)-2)/2"
        rows.append(Row("locally (3,2t)", s, t, formula, str(ub), ex, "lambda = 3"))
        # Plotkin rows on the three-point matrix (M = 3)
        D = three_point_matrix(t)
        nh = exact_Nh(D, ring, budget=budget)
        rows.append(Row("Plotkin generic", s, t, "sum D / M^2", str(plotkin_bound_generic(D)),
                        _exact(nh), "M = 3"))
        if s == 2:
            rows.append(Row("Plotkin Z_4", s, t, "sum D / (M^2 - 1), M odd",
                            str(plotkin_bound_z4(D, ring)), _exact(nh), "M = 3"))
        # linear-function bound
        if s == 2:
            f = example_linear()
            lb = linear_plotkin_bound(f, t)
            # M = 64 messages; only small t finishes within a modest budget
            res = exact_optimal_redundancy(f, t, budget=min(budget, 20_000))
            ex = _exact(res)
            note = "f(u) = (u1+u2, u2+u3)" + ("" if ex != MISSING else "; search budget exceeded")
            rows.append(Row("linear", s, t, "(2t+1)(1-2^{-sl}) - k + A/2^{sk}", _fmt(lb), ex, note))
    return rows


def render(rows: list[Row]) -> str:
    head = ("family", "s", "t", "formula", "bound", "exact", "note")
    cells = [head] + [(r.family, str(r.s), str(r.t), r.formula, r.bound, r.exact, r.note) for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(head))]
    return "\n".join("  ".join(c[i].ljust(widths[i]) for i in range(len(head))).rstrip() for c in cells)
