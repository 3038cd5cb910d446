"""Arithmetic and the homogeneous metric over Z_{2^s}.

Words are plain tuples of canonical residues in ``[0, 2^s)``; the ring they
live over is passed alongside as a :class:`RingParams`.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, ResourceLimitError, ShapeError, UndefinedDistanceError

Word = tuple[int, ...]

DEFAULT_ENUM_CAP_BITS = 24


def enum_cap_bits() -> int:
    """Largest ``s*k`` for which the full message space may be enumerated."""
    raw = os.environ.get("FCC_ENUM_CAP")
    if raw is None:
        return DEFAULT_ENUM_CAP_BITS
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"FCC_ENUM_CAP must be an integer, got {raw!r}") from None


def check_enumerable(ring: "RingParams", k: int, cap_bits: int | None = None) -> None:
    cap = enum_cap_bits() if cap_bits is None else cap_bits
    if ring.s * k > cap:
        raise ResourceLimitError(
            f"enumerating Z_{ring.modulus}^{k} needs {ring.s * k} bits, cap is {cap}")


@dataclass(frozen=True)
class RingParams:
    s: int
    modulus: int = field(init=False)
    half: int = field(init=False)

    def __post_init__(self):
        if not isinstance(self.s, (int, np.integer)) or self.s < 1:
            raise DomainError(f"ring exponent s must be a positive integer, got {self.s!r}")
        object.__setattr__(self, "s", int(self.s))
        object.__setattr__(self, "modulus", 1 << self.s)
        object.__setattr__(self, "half", 1 << (self.s - 1))

    @property
    def mask(self) -> int:
        return self.modulus - 1

    @cached_property
    def weight_table(self) -> np.ndarray:
        # s = 1 gives w(1) = 2: the "1" branch is empty and 1 = 2^{s-1}.
        tab = np.ones(self.modulus, dtype=np.int64)
        tab[0] = 0
        tab[self.half] = 2
        return tab

    def check_symbol(self, a: int) -> int:
        if not 0 <= a < self.modulus:
            raise DomainError(f"symbol {a} not in Z_{self.modulus}")
        return int(a)

    def word(self, symbols: Iterable[int]) -> Word:
        """Validate and canonicalise a word (no reduction is performed)."""
        return tuple(self.check_symbol(int(a)) for a in symbols)

    def add(self, x: Word, y: Word) -> Word:
        _same_length(x, y)
        return tuple((a + b) & self.mask for a, b in zip(x, y))

    def sub(self, x: Word, y: Word) -> Word:
        _same_length(x, y)
        return tuple((a - b) & self.mask for a, b in zip(x, y))

    def scale(self, c: int, x: Word) -> Word:
        return tuple((c * a) & self.mask for a in x)

    def zero(self, n: int) -> Word:
        return (0,) * n


def _same_length(x: Sequence[int], y: Sequence[int]) -> None:
    if len(x) != len(y):
        raise ShapeError(f"length mismatch: {len(x)} vs {len(y)}")


def hom_weight_symbol(a: int, ring: RingParams) -> int:
    ring.check_symbol(a)
    if a == 0:
        return 0
    return 2 if a == ring.half else 1


def hom_weight(x: Sequence[int], ring: RingParams) -> int:
    tab = ring.weight_table
    return int(sum(tab[ring.check_symbol(a)] for a in x))


def hom_distance(x: Sequence[int], y: Sequence[int], ring: RingParams) -> int:
    _same_length(x, y)
    tab = ring.weight_table
    m = ring.mask
    for a in (*x, *y):
        ring.check_symbol(a)
    return int(sum(tab[(a - b) & m] for a, b in zip(x, y)))


def all_words(ring: RingParams, k: int, cap_bits: int | None = None) -> np.ndarray:
    """Every word of ``Z_{2^s}^k`` as rows of an array, in lexicographic order."""
    check_enumerable(ring, k, cap_bits)
    n = ring.modulus ** k
    idx = np.arange(n, dtype=np.int64)
    out = np.empty((n, k), dtype=np.int64)
    for j in range(k - 1, -1, -1):
        out[:, j] = idx & ring.mask
        idx >>= ring.s
    return out


def weights_of(arr: np.ndarray, ring: RingParams) -> np.ndarray:
    """Row-wise homogeneous weights of an integer array."""
    arr = np.asarray(arr, dtype=np.int64)
    return ring.weight_table[arr & ring.mask].sum(axis=-1)


def distances_to(arr: np.ndarray, x: Sequence[int], ring: RingParams) -> np.ndarray:
    return weights_of(np.asarray(arr, dtype=np.int64) - np.asarray(x, dtype=np.int64), ring)


def ball(center: Sequence[int], radius: int, ring: RingParams,
         cap_bits: int | None = None) -> list[Word]:
    """Words within homogeneous distance ``radius`` of ``center``, lexicographically."""
    if radius < 0:
        raise DomainError("radius must be non-negative")
    center = ring.word(center)
    words = all_words(ring, len(center), cap_bits)
    d = distances_to(words, center, ring)
    return [tuple(int(a) for a in row) for row in words[d <= radius]]


def sphere(center: Sequence[int], radius: int, ring: RingParams,
           cap_bits: int | None = None) -> list[Word]:
    if radius < 0:
        raise DomainError("radius must be non-negative")
    center = ring.word(center)
    words = all_words(ring, len(center), cap_bits)
    d = distances_to(words, center, ring)
    return [tuple(int(a) for a in row) for row in words[d == radius]]


@dataclass(frozen=True)
class Code:
    """An ordered collection of distinct words of one length.

    The order matters to encoders that pick "the i-th codeword".
    """
    ring: RingParams
    words: tuple[Word, ...]

    def __post_init__(self):
        words = tuple(self.ring.word(w) for w in self.words)
        if len({len(w) for w in words}) > 1:
            raise ShapeError("codewords must share one length")
        if len(set(words)) != len(words):
            raise DomainError("duplicate codewords")
        object.__setattr__(self, "words", words)

    @classmethod
    def from_words(cls, ring: RingParams, words: Iterable[Sequence[int]]) -> "Code":
        """Build a code with its codewords in lexicographic order."""
        return cls(ring, tuple(sorted({tuple(w) for w in words})))

    @property
    def length(self) -> int:
        return len(self.words[0]) if self.words else 0

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def as_array(self) -> np.ndarray:
        return np.array(self.words, dtype=np.int64).reshape(len(self.words), self.length)


def min_distance(code: Code) -> int:
    if len(code) < 2:
        raise UndefinedDistanceError("minimum distance needs at least two codewords")
    arr = code.as_array()
    best = None
    for i in range(len(arr) - 1):
        d = int(weights_of(arr[i + 1:] - arr[i], code.ring).min())
        best = d if best is None else min(best, d)
    return best


def distance_profile(code: Code) -> dict[tuple[int, int], int]:
    """All pairwise distances keyed by index pairs ``(i, j)`` with ``i < j``."""
    return {(i, j): hom_distance(a, b, code.ring)
            for (i, a), (j, b) in combinations(enumerate(code.words), 2)}
