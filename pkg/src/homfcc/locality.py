"""Function balls, local boundedness and the tau labelling."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError, HypothesisError
from .functions import FunctionSpec, Kind, value_ids, word_rank
from .ring import RingParams, Word, all_words, check_enumerable, distances_to, weights_of

_CHUNK_CELLS = 1 << 22


def function_ball(f: FunctionSpec, x: Sequence[int], rho: int) -> list:
    """``{f(y) : d_h(x, y) <= rho}`` in image order."""
    if rho < 0:
        raise DomainError("rho must be non-negative")
    x = f.ring.word(x)
    words = all_words(f.ring, f.k)
    ids, order = value_ids(f, words)
    near = distances_to(words, x, f.ring) <= rho
    return [order[i] for i in np.unique(ids[near])]


def _ranks(arr: np.ndarray, ring: RingParams) -> np.ndarray:
    r = np.zeros(arr.shape[:-1], dtype=np.int64)
    for j in range(arr.shape[-1]):
        r = (r << ring.s) | arr[..., j]
    return r


def _ball_value_ids(f: FunctionSpec, rho: int, rank_of_id: np.ndarray | None = None):
    """Yield ``(start, block)`` where block[i] holds the value ranks seen in the
    ball around word ``start + i``.

    Uses translation invariance: B(x, rho) = x + B(0, rho).
    """
    ring = f.ring
    check_enumerable(ring, f.k)
    words = all_words(ring, f.k)
    ids, _ = value_ids(f, words)
    if rank_of_id is not None:
        ids = rank_of_id[ids]
    offsets = words[weights_of(words, ring) <= rho]
    step = max(1, _CHUNK_CELLS // (len(offsets) * f.k))
    for start in range(0, len(words), step):
        xs = words[start:start + step]
        nb = (xs[:, None, :] + offsets[None, :, :]) & ring.mask
        yield start, ids[_ranks(nb, ring)]


def _distinct_per_row(block: np.ndarray) -> np.ndarray:
    srt = np.sort(block, axis=1)
    return 1 + (np.diff(srt, axis=1) != 0).sum(axis=1)


@dataclass(frozen=True)
class LocalityProfile:
    rho: int
    lambda0: int
    witness: Word
    per_value_bounds: tuple[int, int] | None = None


def lambda0(f: FunctionSpec, rho: int) -> LocalityProfile:
    """Smallest lambda for which ``f`` is rho-locally lambda-bounded."""
    if rho < 0:
        raise DomainError("rho must be non-negative")
    best, arg = 0, 0
    for start, block in _ball_value_ids(f, rho):
        counts = _distinct_per_row(block)
        i = int(np.argmax(counts))
        if counts[i] > best:
            best, arg = int(counts[i]), start + i
    witness = tuple(int(a) for a in all_words(f.ring, f.k)[arg])
    bounds = None
    if f.kind in (Kind.HOM_WEIGHT, Kind.WEIGHT_DISTRIBUTION):
        bounds = theoretical_locality_bounds(f.kind, rho, f.threshold)
    return LocalityProfile(rho, best, witness, bounds)


def check_locally_bounded(f: FunctionSpec, lam: int, rho: int) -> bool:
    if lam < 1:
        return False
    return lambda0(f, rho).lambda0 <= lam


def theoretical_locality_bounds(kind: Kind, rho: int, T: int | None = None) -> tuple[int, int]:
    """Closed-form ``(lower, upper)`` bracket on lambda0.

    Both brackets presume ``rho <= 2k``; beyond that the ball saturates.
    """
    if kind is Kind.HOM_WEIGHT:
        return rho + 1, 2 * rho + 2
    if kind is Kind.WEIGHT_DISTRIBUTION:
        if not T or T < 1:
            raise DomainError("weight distribution needs a threshold T >= 1")
        return rho // T + 1, (2 * rho) // T + 2
    raise DomainError(f"no locality bracket is known for {kind.value}")


def _order_ranks(f: FunctionSpec, order: Sequence | None) -> tuple[list, np.ndarray]:
    """Map value ids (image-sorted) to positions in ``order``."""
    _, image_sorted = value_ids(f)
    if order is None:
        return image_sorted, np.arange(len(image_sorted), dtype=np.int64)
    order = list(order)
    pos = {}
    for i, v in enumerate(order):
        v = tuple(v) if isinstance(v, list) else v
        if v in pos:
            raise DomainError(f"order lists {v!r} twice")
        pos[v] = i
    if set(pos) != set(image_sorted):
        missing = [v for v in image_sorted if v not in pos]
        extra = [v for v in pos if v not in set(image_sorted)]
        raise DomainError(f"order is not a total order on Im(f): missing {missing}, extra {extra}")
    return order, np.array([pos[v] for v in image_sorted], dtype=np.int64)


def contiguous_block_check(f: FunctionSpec, order: Sequence | None = None, rho: int = 0) -> bool:
    """True iff every radius-rho function ball is an interval under ``order``.

    ``order`` lists Im(f) from least to greatest; None means the natural order.
    """
    if rho < 0:
        raise DomainError("rho must be non-negative")
    _, rank_of_id = _order_ranks(f, order)
    for _, block in _ball_value_ids(f, rho, rank_of_id):
        span = block.max(axis=1) - block.min(axis=1) + 1
        if np.any(span != _distinct_per_row(block)):
            return False
    return True


@dataclass(frozen=True)
class TauMap:
    lam: int
    rho: int
    ring: RingParams
    k: int
    assignment: tuple[int, ...]  # label in 1..lam, indexed by word rank

    def __call__(self, x: Sequence[int]) -> int:
        return self.assignment[word_rank(x, self.ring)]


def tau_violation(tau: TauMap, f: FunctionSpec) -> tuple[Word, Word] | None:
    """First pair (lexicographic) with distinct f-values within rho sharing a label."""
    words = all_words(f.ring, f.k)
    ids, _ = value_ids(f, words)
    labels = np.asarray(tau.assignment, dtype=np.int64)
    for i, x in enumerate(words):
        y = words[i + 1:]
        bad = ((distances_to(y, x, f.ring) <= tau.rho)
               & (ids[i + 1:] != ids[i]) & (labels[i + 1:] == labels[i]))
        if bad.any():
            j = i + 1 + int(np.argmax(bad))
            return tuple(int(a) for a in x), tuple(int(a) for a in words[j])
    return None


def build_tau(f: FunctionSpec, lam: int, rho: int, order: Sequence | None = None) -> TauMap:
    """Label each word by (rank of f(x) in ``order``) mod lam, plus one."""
    if lam < 1:
        raise HypothesisError("lambda must be >= 1")
    _, rank_of_id = _order_ranks(f, order)
    if not contiguous_block_check(f, order, rho):
        raise HypothesisError(f"contiguous block condition fails at rho={rho}")
    prof = lambda0(f, rho)
    if prof.lambda0 > lam:
        raise HypothesisError(
            f"f is not locally ({lam},{rho})-bounded: ball at {prof.witness} has {prof.lambda0} values")
    ids, _ = value_ids(f)
    labels = rank_of_id[ids] % lam + 1
    tau = TauMap(lam, rho, f.ring, f.k, tuple(int(v) for v in labels))
    bad = tau_violation(tau, f)
    if bad is not None:
        raise HypothesisError(f"tau labelling collides on {bad}")
    return tau
