"""Exhaustive FCC verification, channel simulation and exact optimal redundancy."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .bounds import requirement_matrix
from .encoders import SystematicEncoder, encoder_from_parities
from .errors import PreconditionError, ShapeError
from .functions import FunctionSpec, evaluate, image, value_ids
from .ring import Word, all_words, check_enumerable, hom_distance, hom_weight, weights_of
from .search import DEFAULT_BUDGET, SearchResult, exact_Nh

VERIFIED = "verified"
VIOLATED = "violated"


@dataclass(frozen=True)
class Counterexample:
    x: Word
    y: Word
    distance: int
    required: int


@dataclass(frozen=True)
class VerificationReport:
    status: str
    counterexample: Counterexample | None
    pairs_checked: int
    violations: int = 0
    pairs_total: int = 0

    @property
    def ok(self) -> bool:
        return self.status == VERIFIED

    def to_json(self) -> dict:
        out = {"schema": 1, "status": self.status, "pairs_checked": self.pairs_checked,
               "violations": self.violations, "pairs_total": self.pairs_total,
               "counterexample": None}
        if self.counterexample is not None:
            c = self.counterexample
            out["counterexample"] = {"x": list(c.x), "y": list(c.y),
                                     "distance": c.distance, "required": c.required}
        return out


def _check_compatible(enc: SystematicEncoder, f: FunctionSpec) -> None:
    if enc.ring != f.ring or enc.k != f.k:
        raise ShapeError("encoder and function live on different message spaces")


def verify_fcc(enc: SystematicEncoder, f: FunctionSpec, t: int) -> VerificationReport:
    """Check d_h(Enc(x), Enc(y)) >= 2t+1 for every pair with f(x) != f(y).

    ``pairs_total`` counts all unordered message pairs scanned and
    ``pairs_checked`` only those with distinct function values.
    """
    _check_compatible(enc, f)
    check_enumerable(f.ring, f.k)
    E = enc.codeword_array
    ids, _ = value_ids(f)
    need = 2 * t + 1
    checked = violations = 0
    first = None
    for i in range(len(E) - 1):
        distinct = ids[i + 1:] != ids[i]
        if not distinct.any():
            continue
        d = weights_of(E[i + 1:] - E[i], f.ring)
        checked += int(distinct.sum())
        bad = distinct & (d < need)
        n_bad = int(bad.sum())
        if n_bad:
            violations += n_bad
            if first is None:
                j = int(np.argmax(bad))
                first = Counterexample(tuple(int(a) for a in E[i, :f.k]),
                                       tuple(int(a) for a in E[i + 1 + j, :f.k]),
                                       int(d[j]), need)
    n = len(E)
    return VerificationReport(VIOLATED if first else VERIFIED, first, checked, violations, n * (n - 1) // 2)


def counterexample_holds(enc: SystematicEncoder, f: FunctionSpec, c: Counterexample) -> bool:
    """Re-evaluate a reported counterexample from scratch."""
    return (evaluate(f, c.x) != evaluate(f, c.y)
            and hom_distance(enc.encode(c.x), enc.encode(c.y), f.ring) == c.distance
            and c.distance < c.required)


@dataclass(frozen=True)
class DecodeResult:
    value: object
    message: Word
    distance: int
    warning: str | None = None


def decode_function_value(enc: SystematicEncoder, f: FunctionSpec, received: Sequence[int]) -> DecodeResult:
    """Nearest-encoding decoding; ties go to the lexicographically least message."""
    E = enc.codeword_array
    if len(received) != E.shape[1]:
        raise ShapeError(f"received word has length {len(received)}, expected {E.shape[1]}")
    d = weights_of(E - np.asarray(received, dtype=np.int64), f.ring)
    i = int(np.argmin(d))
    msg = tuple(int(a) for a in E[i, :f.k])
    return DecodeResult(evaluate(f, msg), msg, int(d[i]))


def simulate_channel(enc: SystematicEncoder, f: FunctionSpec, t: int, x: Sequence[int],
                     e: Sequence[int], report: VerificationReport | None = None) -> DecodeResult:
    """Send Enc(x) through an additive error ``e`` and decode the function value."""
    _check_compatible(enc, f)
    n = enc.k + enc.r
    if len(e) != n:
        raise ShapeError(f"error word must have length k+r={n}")
    if hom_weight(e, f.ring) > t:
        raise PreconditionError(f"error weight {hom_weight(e, f.ring)} exceeds t={t}")
    sent = enc.encode(x)
    received = tuple((a + b) & f.ring.mask for a, b in zip(sent, e))
    res = decode_function_value(enc, f, received)
    if report is None or not report.ok:
        res = DecodeResult(res.value, res.message, res.distance,
                           f"encoder not verified for (f, t={t}); decoding is best effort")
    return res


def error_patterns(n: int, t: int, ring) -> list[Word]:
    """All error words of length n with homogeneous weight <= t."""
    out: list[Word] = []

    def rec(pos, budget, acc):
        if pos == n:
            out.append(tuple(acc))
            return
        for a in range(ring.modulus):
            w = int(ring.weight_table[a])
            if w <= budget:
                acc.append(a)
                rec(pos + 1, budget - w, acc)
                acc.pop()

    rec(0, t, [])
    return out


def exact_optimal_redundancy(f: FunctionSpec, t: int, r_max: int | None = None,
                             budget: int = DEFAULT_BUDGET, messages=None) -> SearchResult:
    """Least r admitting an (f, t)-FCC, found by exact search.

    The parities of a code meeting the full requirement matrix over all
    messages form an FCC, and every FCC's parities meet it, so the two minima
    coincide. With ``messages`` only that subset is constrained (a lower bound
    in general) and the certificate stays a plain list of parities.
    """
    if t < 1:
        raise PreconditionError("t must be a positive integer")
    full = messages is None
    if full:
        check_enumerable(f.ring, f.k)
        messages = [tuple(int(a) for a in w) for w in all_words(f.ring, f.k)]
    D = requirement_matrix(f, t, messages)
    floor = t if f.ring.s >= 2 and len(image(f)) >= 2 else 0
    res = exact_Nh(D, f.ring, r_max=r_max, budget=budget, floor=floor)
    if full and res.certificate is not None:
        res.certificate = encoder_from_parities(f, res.certificate, "exact-search", t=t)
    return res
