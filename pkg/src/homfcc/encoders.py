"""Systematic encoders Enc(x) = (x, parity(x)) and the explicit codes behind them."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Sequence

import numpy as np

from .errors import DomainError, HypothesisError, ShapeError
from .functions import (FunctionSpec, Kind, evaluate_all, function_from_json,
                        function_to_json, image, word_rank)
from .locality import TauMap, check_locally_bounded, contiguous_block_check, tau_violation
from .ring import Code, RingParams, Word, all_words, check_enumerable, min_distance

SCHEMA = 1


@dataclass(frozen=True)
class SystematicEncoder:
    ring: RingParams
    k: int
    r: int
    # parity word per message, indexed by lexicographic message rank
    parities: tuple[Word, ...]
    provenance: dict = field(default_factory=dict, compare=False, hash=False)
    function: FunctionSpec | None = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        if len(self.parities) != self.ring.modulus ** self.k:
            raise ShapeError("parity map must be total on the message space")
        if any(len(p) != self.r for p in self.parities):
            raise ShapeError(f"every parity word must have length r={self.r}")

    @property
    def tag(self) -> str:
        return self.provenance.get("construction", "custom")

    def parity(self, x: Sequence[int]) -> Word:
        if len(x) != self.k:
            raise ShapeError(f"message length {len(x)} != k={self.k}")
        return self.parities[word_rank(self.ring.word(x), self.ring)]

    def encode(self, x: Sequence[int]) -> Word:
        return tuple(x) + self.parity(x)

    @cached_property
    def codeword_array(self) -> np.ndarray:
        """All encodings, rows in lexicographic message order."""
        msgs = all_words(self.ring, self.k)
        par = np.array(self.parities, dtype=np.int64).reshape(len(msgs), self.r)
        return np.hstack([msgs, par])

    def to_json(self) -> dict:
        out = {"schema": SCHEMA, "s": self.ring.s, "k": self.k, "r": self.r,
               "provenance": self.provenance,
               "parity": [list(p) for p in self.parities]}
        if self.function is not None:
            out["function"] = function_to_json(self.function)
        return out

    @classmethod
    def from_json(cls, data: dict | str) -> "SystematicEncoder":
        if isinstance(data, str):
            data = json.loads(data)
        if data.get("schema") != SCHEMA:
            raise DomainError(f"unsupported encoder schema {data.get('schema')!r}")
        fn = function_from_json(data["function"]) if "function" in data else None
        return cls(RingParams(data["s"]), data["k"], data["r"],
                   tuple(tuple(p) for p in data["parity"]), data.get("provenance", {}), fn)


def _check_t(t: int) -> None:
    if t < 1:
        raise DomainError("t must be a positive integer")


def _from_parity_fn(f: FunctionSpec, r: int, parity_of, provenance: dict) -> SystematicEncoder:
    check_enumerable(f.ring, f.k)
    msgs = all_words(f.ring, f.k)
    pars = tuple(tuple(int(a) for a in parity_of(i, m)) for i, m in enumerate(msgs))
    return SystematicEncoder(f.ring, f.k, r, pars, provenance, f)


def explicit_code(lam: int, t: int, ring: RingParams) -> Code:
    """lam codewords built from runs of 2^{s-1}, minimum distance exactly 2t.

    Codewords are listed in construction order.
    """
    if lam < 2 or t < 1:
        raise DomainError("explicit code needs lambda >= 2 and t >= 1")
    a = ring.half
    if t % 2 == 0:
        run = t // 2
        n = lam * run
        words = []
        for i in range(lam):
            w = [0] * n
            w[i * run:(i + 1) * run] = [a] * run
            words.append(tuple(w))
    else:
        n = (lam * (t + 1) - 2) // 2
        words = [tuple([a] * ((t - 1) // 2) + [0] * (n - (t - 1) // 2))]
        run = (t + 1) // 2
        for i in range(2, lam + 1):
            off = ((i - 2) * (t + 1) + (t - 1)) // 2
            w = [0] * n
            w[off:off + run] = [a] * run
            words.append(tuple(w))
    return Code(ring, tuple(words))


_LAMBDA4_PAIRS = {1: (0, 0), 2: (0, 1), 3: (1, 0), 4: (1, 1)}


def _check_tau(f: FunctionSpec, tau: TauMap, t: int) -> None:
    if tau.ring != f.ring or tau.k != f.k:
        raise ShapeError("tau map and function live on different message spaces")
    if tau.rho < 2 * t:
        raise HypothesisError(f"tau separates only within radius {tau.rho}, need 2t={2 * t}")
    bad = tau_violation(tau, f)
    if bad is not None:
        raise HypothesisError(f"tau assigns one label to f-distinct nearby words {bad}")


def encoder_lambda4(f: FunctionSpec, t: int, tau: TauMap) -> SystematicEncoder:
    """Redundancy-2t encoder: the tau label picks one of 00, 0a, a0, aa, repeated t times."""
    _check_t(t)
    if tau.lam != 4:
        raise HypothesisError(f"tau must take 4 labels, got {tau.lam}")
    if not check_locally_bounded(f, 4, 2 * t):
        raise HypothesisError(f"f is not locally (4,{2 * t})-bounded")
    if not contiguous_block_check(f, None, 2 * t):
        raise HypothesisError("contiguous block condition fails under the natural order")
    _check_tau(f, tau, t)
    a = f.ring.half

    def parity(i, _):
        p, q = _LAMBDA4_PAIRS[tau.assignment[i]]
        return (p * a, q * a) * t

    return _from_parity_fn(f, 2 * t, parity, {"construction": "lambda4", "t": t,
                                              "tau": list(tau.assignment)})


def encoder_via_tau(f: FunctionSpec, t: int, tau: TauMap, code: Code) -> SystematicEncoder:
    """parity(x) = the tau(x)-th codeword of ``code``."""
    _check_t(t)
    if len(code) != tau.lam:
        raise HypothesisError(f"code has {len(code)} codewords, tau uses {tau.lam} labels")
    if len(code) >= 2 and min_distance(code) < 2 * t:
        raise HypothesisError(f"code minimum distance {min_distance(code)} < 2t={2 * t}")
    if code.ring != f.ring:
        raise ShapeError("code and function are over different rings")
    _check_tau(f, tau, t)
    return _from_parity_fn(f, code.length, lambda i, _: code.words[tau.assignment[i] - 1],
                           {"construction": "tau", "t": t, "tau": list(tau.assignment),
                            "code": [list(w) for w in code.words]})


def modular_sum_parity_symbol(v: int, ring: RingParams) -> int:
    return (2 * v if v < ring.half else 2 * v + 1) & ring.mask


def encoder_modular_sum(ring: RingParams, k: int, t: int) -> SystematicEncoder:
    from .functions import modular_sum

    _check_t(t)
    f = modular_sum(ring, k)
    symbols = [modular_sum_parity_symbol(v, ring) for v in range(ring.modulus)]
    if len(set(symbols)) != ring.modulus:
        raise HypothesisError("modular-sum parity symbol map is not injective")
    sums = evaluate_all(f)
    return _from_parity_fn(f, 2 * t, lambda i, _: (symbols[sums[i]],) * (2 * t),
                           {"construction": "msum", "t": t})


def code_from_generator(G: Sequence[Sequence[int]], ring: RingParams) -> Code:
    """The submodule spanned by the rows of G, lexicographically ordered."""
    G = np.array([[ring.check_symbol(int(a)) for a in row] for row in G], dtype=np.int64)
    if G.ndim != 2 or G.shape[0] == 0:
        raise ShapeError("generator matrix needs at least one row")
    coeffs = all_words(ring, G.shape[0])
    words = np.unique((coeffs @ G) & ring.mask, axis=0)
    return Code(ring, tuple(tuple(int(a) for a in w) for w in words))


def linear_injective_on_image(f: FunctionSpec, G: Sequence[Sequence[int]]) -> bool:
    """Whether v -> v.G separates the values of f."""
    G = np.array(G, dtype=np.int64)
    vals = np.array(image(f), dtype=np.int64).reshape(-1, G.shape[0])
    prods = (vals @ G) & f.ring.mask
    return len(np.unique(prods, axis=0)) == len(vals)


def encoder_linear(f: FunctionSpec, G: Sequence[Sequence[int]], t: int | None = None) -> SystematicEncoder:
    """parity(x) = f(x).G; the resulting code {(x, f(x).G)} is a submodule.

    Construction never refuses a non-injective G; the provenance records
    ``injective_on_image``, ``code_min_distance`` and, given ``t``, whether the
    sufficient condition (injective and d_h(C) >= 2t) holds.
    """
    if f.kind is not Kind.LINEAR:
        raise DomainError("encoder_linear needs a linear function")
    if t is not None:
        _check_t(t)
    Gm = np.array([[f.ring.check_symbol(int(a)) for a in row] for row in G], dtype=np.int64)
    if Gm.ndim != 2 or Gm.shape[0] != f.ell:
        raise ShapeError(f"G must have {f.ell} rows to match the output arity of f")
    vals = np.array(evaluate_all(f), dtype=np.int64).reshape(-1, f.ell)
    pars = (vals @ Gm) & f.ring.mask
    code = code_from_generator(Gm.tolist(), f.ring)
    dC = min_distance(code) if len(code) >= 2 else None
    injective = linear_injective_on_image(f, Gm)
    prov: dict[str, Any] = {"construction": "linear", "G": Gm.tolist(),
                            "injective_on_image": injective, "code_min_distance": dC}
    if t is not None:
        prov["t"] = t
        prov["sufficient_condition"] = bool(injective and dC is not None and dC >= 2 * t)
    return _from_parity_fn(f, Gm.shape[1], lambda i, _: pars[i], prov)


def encoder_from_parities(f: FunctionSpec, parities: Sequence[Sequence[int]], tag: str = "custom",
                          **meta) -> SystematicEncoder:
    r = len(parities[0]) if len(parities) else 0
    return SystematicEncoder(f.ring, f.k, r, tuple(tuple(int(a) for a in p) for p in parities),
                             {"construction": tag, **meta}, f)


def identity_encoder(f: FunctionSpec) -> SystematicEncoder:
    """No parity at all (r = 0)."""
    return encoder_from_parities(f, [()] * f.ring.modulus ** f.k, "identity")
