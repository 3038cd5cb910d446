"""Exact search for N_h(D), the shortest code meeting a requirement matrix.

Two complete strategies are available:

``columns``
    A code of length r is a multiset of r columns, each an M-tuple over the
    ring. Translating a column so its first entry is 0 and discarding columns
    whose pairwise-distance contribution is dominated by another column loses
    nothing, so the search runs over multisets of non-dominated column types.
    Cheap whenever (2^s)^(M-1) is small.

``codewords``
    Backtracking over p_1..p_M with forward checking of candidate domains.
    p_1 is fixed to zero (translation) and p_2 to a canonical representative
    under coordinate permutations and unit scalings, both of which fix zero
    and preserve every homogeneous distance.

Duplicate codewords are allowed wherever the requirement is 0: the parity
assignment of an FCC may repeat parities across messages with equal values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .bounds import RequirementMatrix, best_plotkin, upper_bound_from_lambda
from .errors import DomainError
from .ring import RingParams, Word, all_words, hom_distance, weights_of

DEFAULT_BUDGET = 2_000_000
COLUMN_TYPE_CAP = 1 << 10
CODEWORD_BITS_CAP = 12


class _BudgetExceeded(Exception):
    pass


@dataclass
class SearchResult:
    """Outcome of an exact length search.

    ``exhausted`` is True when the search was carried to completion. With a
    certificate, ``value`` is then exact; without one it is a proven lower
    bound (nothing of length <= r_max exists). When the node budget runs out
    ``exhausted`` is False, ``value`` is the sentinel ``r_max + 1`` and
    ``refuted_below`` records the lengths already ruled out.
    """
    value: int
    certificate: Any
    lower_bound_used: int
    exhausted: bool
    refuted_below: int = 0
    nodes: int = 0
    strategy: str = ""
    notes: list[str] = field(default_factory=list)


def default_r_max(D: RequirementMatrix) -> int:
    """Length of an explicit code meeting every entry of ``D``."""
    top = max((max(r) for r in D.entries), default=0)
    if D.size < 2 or top == 0:
        return 0
    return upper_bound_from_lambda(D.size, math.ceil(top / 2))


def certificate_ok(D: RequirementMatrix, words, ring: RingParams) -> bool:
    m = D.size
    if words is None or len(words) != m:
        return False
    return all(hom_distance(words[i], words[j], ring) >= D.entries[i][j]
               for i in range(m) for j in range(i + 1, m))


def exact_Nh(D: RequirementMatrix, ring: RingParams, r_max: int | None = None,
             budget: int = DEFAULT_BUDGET, strategy: str = "auto", floor: int = 0) -> SearchResult:
    """Shortest length r admitting words p_1..p_M with d_h(p_i, p_j) >= D_ij.

    Lengths are tried upward from the best Plotkin bound (or ``floor``, a
    lower bound known to the caller, if larger).
    """
    m = D.size
    lb = best_plotkin(D, ring)
    if r_max is None:
        r_max = default_r_max(D)
    if m == 0 or not any(any(r) for r in D.entries):
        return SearchResult(0, tuple(() for _ in range(m)), lb, True, 0, 0, "trivial")
    if strategy == "auto":
        strategy = "columns" if ring.modulus ** (m - 1) <= COLUMN_TYPE_CAP else "codewords"
    if strategy == "columns":
        search = _ColumnSearch(D, ring, budget)
    elif strategy == "codewords":
        search = _CodewordSearch(D, ring, budget)
    else:
        raise DomainError(f"unknown search strategy {strategy!r}")

    lb = max(lb, floor)
    r = lb
    try:
        while r <= r_max:
            cert = search.solve(r)
            if cert is not None:
                return SearchResult(r, cert, lb, True, r, search.nodes, strategy)
            r += 1
    except _BudgetExceeded:
        return SearchResult(r_max + 1, None, lb, False, r, search.nodes, strategy,
                            [f"node budget {budget} exhausted at r={r}"])
    return SearchResult(max(r_max + 1, lb), None, lb, True, max(r_max + 1, lb), search.nodes, strategy,
                        [f"no code of length <= {r_max}"])


class _ColumnSearch:
    def __init__(self, D: RequirementMatrix, ring: RingParams, budget: int):
        self.ring = ring
        self.budget = budget
        self.nodes = 0
        m = D.size
        self.m = m
        self.pairs = [(i, j) for i in range(m) for j in range(i + 1, m) if D.entries[i][j] > 0]
        self.req = np.array([D.entries[i][j] for i, j in self.pairs], dtype=np.int64)
        cols = np.hstack([np.zeros((ring.modulus ** (m - 1), 1), dtype=np.int64), all_words(ring, m - 1)])
        contrib = np.stack([ring.weight_table[(cols[:, i] - cols[:, j]) & ring.mask]
                            for i, j in self.pairs], axis=1)
        # first (lexicographically least) column per contribution vector
        vecs, first = np.unique(contrib, axis=0, return_index=True)
        keep = []
        for a in range(len(vecs)):
            ge = np.all(vecs >= vecs[a], axis=1)
            ge[a] = False
            if not ge.any():
                keep.append(a)
        vecs, first = vecs[keep], first[keep]
        order = sorted(range(len(vecs)), key=lambda a: (-int(vecs[a].sum()), tuple(-vecs[a])))
        self.vecs = vecs[order]
        self.cols = cols[first[order]]
        # suffix maxima for pruning
        self.suf_pair = np.maximum.accumulate(self.vecs[::-1], axis=0)[::-1]
        self.suf_total = np.maximum.accumulate(self.vecs.sum(axis=1)[::-1])[::-1]
        self.failed: dict[tuple, int] = {}
        self.vec_list = [tuple(int(v) for v in row) for row in self.vecs]

    def solve(self, r: int):
        chosen: list[int] = []
        if self._dfs(0, r, tuple(int(v) for v in self.req), chosen):
            cols = [self.cols[c] for c in chosen] + [np.zeros(self.m, dtype=np.int64)] * (r - len(chosen))
            return tuple(tuple(int(col[i]) for col in cols) for i in range(self.m))
        return None

    def _dfs(self, idx: int, remaining: int, deficit: tuple, chosen: list) -> bool:
        if not any(deficit):
            return True
        if remaining == 0 or idx >= len(self.vec_list):
            return False
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExceeded
        if sum(deficit) > remaining * int(self.suf_total[idx]):
            return False
        sp = self.suf_pair[idx]
        if any(d > remaining * int(c) for d, c in zip(deficit, sp)):
            return False
        key = (idx, deficit)
        if self.failed.get(key, -1) >= remaining:
            return False
        for c in range(idx, len(self.vec_list)):
            v = self.vec_list[c]
            nd = tuple(d - x if d > x else 0 for d, x in zip(deficit, v))
            chosen.append(c)
            if self._dfs(c, remaining - 1, nd, chosen):
                return True
            chosen.pop()
        self.failed[key] = max(self.failed.get(key, -1), remaining)
        return False


class _CodewordSearch:
    def __init__(self, D: RequirementMatrix, ring: RingParams, budget: int):
        self.D = np.array(D.entries, dtype=np.int64)
        self.m = D.size
        self.ring = ring
        self.budget = budget
        self.nodes = 0

    def _canonical_mask(self, cands: np.ndarray) -> np.ndarray:
        # unit-orbit representatives are 0 and the powers of two
        reps = {0} | {1 << j for j in range(self.ring.s)}
        ok = np.isin(cands, list(reps)).all(axis=1)
        if cands.shape[1] > 1:
            ok &= np.all(cands[:, :-1] >= cands[:, 1:], axis=1)
        return ok

    def solve(self, r: int):
        ring = self.ring
        if r == 0:
            return None
        if r * ring.s > CODEWORD_BITS_CAP:
            raise _BudgetExceeded
        cands = all_words(ring, r)
        self.cands = cands
        self._dist_cache: dict[int, np.ndarray] = {}
        doms = np.ones((self.m, len(cands)), dtype=bool)
        doms[0] = False
        doms[0, 0] = True
        if self.m > 1:
            doms[1] &= self._canonical_mask(cands)
        assign = [-1] * self.m
        if self._dfs(doms, assign):
            return tuple(tuple(int(a) for a in cands[c]) for c in assign)
        return None

    def _dist(self, c: int) -> np.ndarray:
        d = self._dist_cache.get(c)
        if d is None:
            d = weights_of(self.cands - self.cands[c], self.ring)
            self._dist_cache[c] = d
        return d

    def _dfs(self, doms: np.ndarray, assign: list) -> bool:
        free = [i for i in range(self.m) if assign[i] < 0]
        if not free:
            return True
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExceeded
        sizes = doms[free].sum(axis=1)
        # p_1 and p_2 first so the symmetry breaking stays sound
        var = free[0] if free[0] < 2 else free[int(np.argmin(sizes))]
        for c in np.flatnonzero(doms[var]):
            d = self._dist(int(c))
            nd = doms.copy()
            nd[var] = False
            nd[var, c] = True
            dead = False
            for j in free:
                if j == var:
                    continue
                need = self.D[var, j]
                if need:
                    nd[j] &= d >= need
                    if not nd[j].any():
                        dead = True
                        break
            if dead:
                continue
            assign[var] = int(c)
            if self._dfs(nd, assign):
                return True
            assign[var] = -1
        return False
