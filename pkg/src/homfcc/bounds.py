"""Distance requirement matrices and closed-form redundancy bounds.

Every formula is evaluated with :class:`fractions.Fraction` and only rounded
at the very end.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, HypothesisError, ShapeError
from .functions import FunctionSpec, Kind, analyze_linear, evaluate, image
from .ring import RingParams, Word, hom_distance


@dataclass(frozen=True)
class RequirementMatrix:
    entries: tuple[tuple[int, ...], ...]
    t: int | None = None
    source_vectors: tuple[Word, ...] | None = None
    ring: RingParams | None = None

    def __post_init__(self):
        e = tuple(tuple(int(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", e)
        m = len(e)
        if any(len(row) != m for row in e):
            raise ShapeError("requirement matrix must be square")
        for i in range(m):
            if e[i][i] != 0:
                raise DomainError(f"diagonal entry ({i},{i}) must be 0")
            for j in range(m):
                if e[i][j] < 0:
                    raise DomainError("requirement entries must be non-negative")
                if e[i][j] != e[j][i]:
                    raise DomainError(f"requirement matrix not symmetric at ({i},{j})")
                if self.t is not None and e[i][j] > 2 * self.t + 1:
                    raise DomainError(f"entry ({i},{j})={e[i][j]} exceeds 2t+1={2 * self.t + 1}")

    @property
    def size(self) -> int:
        return len(self.entries)

    def total(self) -> int:
        return sum(map(sum, self.entries))

    def to_json(self) -> dict:
        out = {"t": self.t, "entries": [list(r) for r in self.entries]}
        if self.source_vectors is not None:
            out["vectors"] = [list(v) for v in self.source_vectors]
        if self.ring is not None:
            out["s"] = self.ring.s
        return out

    @classmethod
    def from_json(cls, data: dict | str) -> "RequirementMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        vecs = data.get("vectors")
        return cls(
            entries=tuple(tuple(r) for r in data["entries"]),
            t=data.get("t"),
            source_vectors=tuple(tuple(v) for v in vecs) if vecs is not None else None,
            ring=RingParams(data["s"]) if data.get("s") is not None else None,
        )


def requirement_matrix(f: FunctionSpec, t: int, vectors: Sequence[Sequence[int]]) -> RequirementMatrix:
    if t < 1:
        raise DomainError("t must be a positive integer")
    vecs = [f.ring.word(v) for v in vectors]
    if len(set(vecs)) != len(vecs):
        raise DomainError("requirement matrix vectors must be distinct")
    for v in vecs:
        if len(v) != f.k:
            raise ShapeError(f"vector {v} has length {len(v)}, function expects {f.k}")
    vals = [evaluate(f, v) for v in vecs]
    m = len(vecs)
    e = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            if vals[i] != vals[j]:
                e[i][j] = e[j][i] = max(0, 2 * t + 1 - hom_distance(vecs[i], vecs[j], f.ring))
    return RequirementMatrix(tuple(map(tuple, e)), t, tuple(vecs), f.ring)


def three_point_matrix(t: int) -> RequirementMatrix:
    """Requirements for three f-distinct messages at mutual distances 1, 1, 2."""
    return RequirementMatrix(((0, 2 * t, 2 * t), (2 * t, 0, 2 * t - 1), (2 * t, 2 * t - 1, 0)), t)


def plotkin_fraction_generic(D: RequirementMatrix) -> Fraction:
    if D.size == 0:
        return Fraction(0)
    return Fraction(D.total(), D.size ** 2)


def plotkin_bound_generic(D: RequirementMatrix) -> int:
    return math.ceil(plotkin_fraction_generic(D))


def plotkin_fraction_z4(D: RequirementMatrix, ring: RingParams | None = None) -> Fraction:
    ring = ring or D.ring
    if ring is not None and ring.s != 2:
        raise DomainError(f"the improved Plotkin bound holds over Z_4 only, got Z_{ring.modulus}")
    m = D.size
    if m <= 1:
        return Fraction(0)
    return Fraction(D.total(), m * m if m % 2 == 0 else m * m - 1)


def plotkin_bound_z4(D: RequirementMatrix, ring: RingParams | None = None) -> int:
    return math.ceil(plotkin_fraction_z4(D, ring))


def best_plotkin(D: RequirementMatrix, ring: RingParams) -> int:
    lb = plotkin_bound_generic(D)
    if ring.s == 2:
        lb = max(lb, plotkin_bound_z4(D, ring))
    return lb


def redundancy_lower_bound(f: FunctionSpec, t: int, vectors: Sequence[Sequence[int]],
                           exact: bool = True, budget: int | None = None) -> int:
    """Best lower bound on the optimal redundancy obtainable from ``vectors``."""
    from .search import exact_Nh

    D = requirement_matrix(f, t, vectors)
    lb = best_plotkin(D, f.ring)
    if f.ring.s >= 2:
        try:
            if len(image(f)) >= 2:
                lb = max(lb, t)
        except Exception:  # image not enumerable; the floor is simply skipped
            pass
    if exact:
        kwargs = {} if budget is None else {"budget": budget}
        res = exact_Nh(D, f.ring, **kwargs)
        if res.exhausted:
            lb = max(lb, res.value)
    return lb


@dataclass(frozen=True)
class ModularSumBound:
    value: Fraction
    ceiling: int
    optimal: int | None  # set when the lower and upper bounds meet at 2t


def modular_sum_lower_bound(s: int, t: int) -> ModularSumBound:
    if s < 1 or t < 1:
        raise DomainError("s and t must be positive")
    value = 2 * t - Fraction(2 * t + 1, 2 ** s)
    optimal = 2 * t if Fraction(t) < Fraction(2 ** s - 1, 2) else None
    return ModularSumBound(value, math.ceil(value), optimal)


def linear_plotkin_bound(f: FunctionSpec, t: int) -> Fraction:
    """Lower bound on r for a surjective linear f, using the kernel weight sum."""
    if f.kind is not Kind.LINEAR:
        raise DomainError("linear_plotkin_bound needs a linear function")
    if t < 1:
        raise DomainError("t must be a positive integer")
    info = analyze_linear(f)
    if not info.surjective:
        raise HypothesisError("linear Plotkin bound requires an onto linear function")
    s, k, ell = f.ring.s, f.k, f.ell
    return (2 * t + 1) * (1 - Fraction(1, 2 ** (s * ell))) - k + Fraction(info.kernel_weight_sum, 2 ** (s * k))


def bijective_length_bound(ring: RingParams, k: int, t: int) -> Fraction:
    """Lower bound on total length k + r when f is a bijection."""
    q = 2 ** (ring.s * k)
    return (2 * t + 1) * Fraction(q - 1, q)


def upper_bound_from_lambda(lam: int, t: int) -> int:
    """Length of the explicit lam-word code of minimum distance 2t."""
    if lam < 2 or t < 1:
        raise DomainError("need lambda >= 2 and t >= 1")
    if t % 2 == 0:
        val = Fraction(lam * t, 2)
    else:
        val = Fraction(lam * (t + 1) - 2, 2)
    # t even or t+1 even makes both branches integral
    assert val.denominator == 1
    return int(val)
