"""Target functions f: Z_{2^s}^k -> Im(f).

Values come in two carriers: plain ``int`` (weight, weight distribution,
modular sum, most tables) and ``Word`` tuples (linear maps, tuple-valued
tables). Values compare by structural equality.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from .errors import DomainError, IntegrityError, ResourceLimitError, ShapeError
from .ring import RingParams, Word, all_words, check_enumerable, weights_of


class Kind(enum.Enum):
    HOM_WEIGHT = "wh"
    WEIGHT_DISTRIBUTION = "wdist"
    MODULAR_SUM = "msum"
    LINEAR = "linear"
    TABLE = "table"


@dataclass(frozen=True)
class FunctionSpec:
    kind: Kind
    ring: RingParams
    k: int
    threshold: int | None = None
    matrix: tuple[tuple[int, ...], ...] | None = None
    # values of a table function, indexed by the lexicographic rank of the word
    table: tuple[Any, ...] | None = None
    name: str | None = None

    def __post_init__(self):
        if self.k < 1:
            raise DomainError("message length k must be >= 1")
        if self.kind is Kind.WEIGHT_DISTRIBUTION and (self.threshold is None or self.threshold < 1):
            raise DomainError("weight-distribution threshold T must be >= 1")
        if self.kind is Kind.LINEAR:
            if not self.matrix or any(len(row) != self.k for row in self.matrix):
                raise ShapeError(f"linear map needs an l x {self.k} matrix with l >= 1")
            for row in self.matrix:
                for a in row:
                    self.ring.check_symbol(a)
        if self.kind is Kind.TABLE:
            if self.table is None or len(self.table) != self.ring.modulus ** self.k:
                raise IntegrityError(
                    f"table must define all {self.ring.modulus ** self.k} words of length {self.k}")

    @property
    def ell(self) -> int:
        if self.kind is not Kind.LINEAR:
            raise DomainError("output arity is only defined for linear functions")
        return len(self.matrix)

    def __call__(self, x: Sequence[int]):
        return evaluate(self, x)

    def label(self) -> str:
        if self.name:
            return self.name
        if self.kind is Kind.WEIGHT_DISTRIBUTION:
            return f"wdist:{self.threshold}"
        return self.kind.value


def hom_weight_function(ring: RingParams, k: int) -> FunctionSpec:
    return FunctionSpec(Kind.HOM_WEIGHT, ring, k)


def weight_distribution(ring: RingParams, k: int, T: int) -> FunctionSpec:
    return FunctionSpec(Kind.WEIGHT_DISTRIBUTION, ring, k, threshold=T)


def modular_sum(ring: RingParams, k: int) -> FunctionSpec:
    return FunctionSpec(Kind.MODULAR_SUM, ring, k)


def linear(ring: RingParams, matrix: Sequence[Sequence[int]]) -> FunctionSpec:
    matrix = tuple(tuple(int(a) for a in row) for row in matrix)
    k = len(matrix[0]) if matrix else 0
    return FunctionSpec(Kind.LINEAR, ring, k, matrix=matrix)


def modular_sum_as_linear(ring: RingParams, k: int) -> FunctionSpec:
    """The modular sum as a 1 x k all-ones linear map (values are 1-tuples)."""
    return linear(ring, [[1] * k])


def table_function(ring: RingParams, k: int, values: Sequence[Any], name: str | None = None) -> FunctionSpec:
    """Function given by its values on all words in lexicographic order."""
    values = tuple(_normalize_value(v) for v in values)
    if len({type(v) for v in values}) > 1:
        raise DomainError("table values must all be integers or all be tuples")
    return FunctionSpec(Kind.TABLE, ring, k, table=values, name=name)


def table_from_callable(ring: RingParams, k: int, fn, name: str | None = None) -> FunctionSpec:
    words = all_words(ring, k)
    return table_function(ring, k, [fn(tuple(int(a) for a in w)) for w in words], name=name)


def _normalize_value(v):
    if isinstance(v, (tuple, list, np.ndarray)):
        return tuple(int(a) for a in v)
    return int(v)


def word_rank(x: Sequence[int], ring: RingParams) -> int:
    r = 0
    for a in x:
        r = (r << ring.s) | a
    return r


def _check_input(f: FunctionSpec, x: Sequence[int]) -> Word:
    if len(x) != f.k:
        raise ShapeError(f"function expects words of length {f.k}, got {len(x)}")
    return f.ring.word(x)


def evaluate(f: FunctionSpec, x: Sequence[int]):
    x = _check_input(f, x)
    ring = f.ring
    if f.kind is Kind.HOM_WEIGHT:
        return int(weights_of(np.array(x), ring))
    if f.kind is Kind.WEIGHT_DISTRIBUTION:
        return int(weights_of(np.array(x), ring)) // f.threshold
    if f.kind is Kind.MODULAR_SUM:
        return sum(x) & ring.mask
    if f.kind is Kind.LINEAR:
        return tuple(sum(c * a for c, a in zip(row, x)) & ring.mask for row in f.matrix)
    try:
        return f.table[word_rank(x, ring)]
    except IndexError:
        raise IntegrityError(f"table has no value for {x}") from None


def evaluate_all(f: FunctionSpec, words: np.ndarray | None = None) -> list:
    """Values of ``f`` on every word (or on the given rows), in row order."""
    ring = f.ring
    if words is None:
        words = all_words(ring, f.k)
    if f.kind is Kind.TABLE and words.shape[0] == ring.modulus ** f.k:
        return list(f.table)
    if f.kind is Kind.HOM_WEIGHT:
        return [int(v) for v in weights_of(words, ring)]
    if f.kind is Kind.WEIGHT_DISTRIBUTION:
        return [int(v) // f.threshold for v in weights_of(words, ring)]
    if f.kind is Kind.MODULAR_SUM:
        return [int(v) for v in words.sum(axis=1) & ring.mask]
    if f.kind is Kind.LINEAR:
        img = (words @ np.array(f.matrix, dtype=np.int64).T) & ring.mask
        return [tuple(int(a) for a in row) for row in img]
    return [evaluate(f, tuple(int(a) for a in w)) for w in words]


def value_ids(f: FunctionSpec, words: np.ndarray | None = None) -> tuple[np.ndarray, list]:
    """Integer id per word plus the id -> value list (ids follow the image order)."""
    values = evaluate_all(f, words)
    order = sorted(set(values))
    pos = {v: i for i, v in enumerate(order)}
    return np.array([pos[v] for v in values], dtype=np.int64), order


def image(f: FunctionSpec) -> list:
    """Exact image, ascending (integers naturally, tuples lexicographically)."""
    # over Z_2 every nonzero symbol weighs 2, so only even weights occur
    weights = range(0, 2 * f.k + 1, 2 if f.ring.s == 1 else 1)
    if f.kind is Kind.HOM_WEIGHT:
        return list(weights)
    if f.kind is Kind.MODULAR_SUM:
        return list(range(f.ring.modulus))
    if f.kind is Kind.WEIGHT_DISTRIBUTION:
        return sorted({w // f.threshold for w in weights})
    try:
        return sorted(set(evaluate_all(f)))
    except ResourceLimitError:
        raise ResourceLimitError(f"image of {f.label()} needs full enumeration beyond the cap") from None


@dataclass(frozen=True)
class LinearFunctionAnalysis:
    kernel: tuple[Word, ...]
    kernel_size: int
    kernel_weight_sum: int
    surjective: bool
    image_size: int


def analyze_linear(f: FunctionSpec) -> LinearFunctionAnalysis:
    if f.kind is not Kind.LINEAR:
        raise DomainError("analyze_linear needs a linear function")
    ring = f.ring
    check_enumerable(ring, f.k)
    words = all_words(ring, f.k)
    img = (words @ np.array(f.matrix, dtype=np.int64).T) & ring.mask
    in_kernel = ~img.any(axis=1)
    kernel = words[in_kernel]
    # distinct images via their base-2^s rank
    ranks = np.zeros(len(img), dtype=np.int64)
    for j in range(img.shape[1]):
        ranks = (ranks << ring.s) | img[:, j]
    image_size = len(np.unique(ranks))
    return LinearFunctionAnalysis(
        kernel=tuple(tuple(int(a) for a in row) for row in kernel),
        kernel_size=int(in_kernel.sum()),
        kernel_weight_sum=int(weights_of(kernel, ring).sum()),
        surjective=image_size == ring.modulus ** f.ell,
        image_size=image_size,
    )


# ---------------------------------------------------------------------------
# text formats

def _parse_value(text: str):
    text = text.strip()
    if text.startswith("("):
        if not text.endswith(")"):
            raise DomainError(f"unterminated tuple value {text!r}")
        inner = text[1:-1].strip()
        return tuple(int(a) for a in inner.split(",")) if inner else ()
    return int(text)


def parse_table(text: str, ring: RingParams) -> FunctionSpec:
    """Parse ``x_1,...,x_k;value`` lines; every word of length k must appear once."""
    entries = {}
    k = None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            lhs, rhs = line.split(";")
            word = ring.word(int(a) for a in lhs.split(","))
            value = _parse_value(rhs)
        except (ValueError, DomainError) as exc:
            raise DomainError(f"line {lineno}: {exc}") from None
        if k is None:
            k = len(word)
        elif len(word) != k:
            raise ShapeError(f"line {lineno}: word of length {len(word)}, expected {k}")
        if word in entries:
            raise IntegrityError(f"line {lineno}: duplicate entry for {word}")
        entries[word] = value
    if k is None:
        raise IntegrityError("empty table")
    n = ring.modulus ** k
    if len(entries) != n:
        raise IntegrityError(f"table defines {len(entries)} of {n} words")
    values = [None] * n
    for w, v in entries.items():
        values[word_rank(w, ring)] = v
    return table_function(ring, k, values)


def format_table(f: FunctionSpec) -> str:
    lines = []
    for w, v in zip(all_words(f.ring, f.k), evaluate_all(f)):
        val = "(" + ",".join(map(str, v)) + ")" if isinstance(v, tuple) else str(v)
        lines.append(",".join(str(int(a)) for a in w) + ";" + val)
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> tuple[RingParams, list[list[int]]]:
    """Parse a matrix file: header ``s k l`` then l rows of k residues."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not rows or len(rows[0]) != 3:
        raise DomainError("matrix file must start with 's k l'")
    s, k, l = (int(a) for a in rows[0])
    ring = RingParams(s)
    body = [[ring.check_symbol(int(a)) for a in r] for r in rows[1:]]
    if len(body) != l or any(len(r) != k for r in body):
        raise ShapeError(f"expected {l} rows of {k} entries")
    return ring, body


def format_matrix(ring: RingParams, matrix: Sequence[Sequence[int]]) -> str:
    k = len(matrix[0]) if matrix else 0
    out = [f"{ring.s} {k} {len(matrix)}"] + [" ".join(map(str, r)) for r in matrix]
    return "\n".join(out) + "\n"


def parse_selector(selector: str, ring: RingParams, k: int) -> FunctionSpec:
    """Build a function from a CLI selector.

    ``wh``, ``wdist:T``, ``msum``, ``msum-linear``, ``linear:PATH``,
    ``table:PATH`` or ``const:V``.
    """
    head, _, arg = selector.partition(":")
    if head == "wh":
        return hom_weight_function(ring, k)
    if head == "wdist":
        if not arg:
            raise DomainError("wdist needs a threshold, e.g. wdist:2")
        return weight_distribution(ring, k, int(arg))
    if head == "msum":
        return modular_sum(ring, k)
    if head == "msum-linear":
        return modular_sum_as_linear(ring, k)
    if head == "const":
        return table_function(ring, k, [int(arg or 0)] * ring.modulus ** k, name=f"const:{arg or 0}")
    if head == "linear":
        mring, mat = parse_matrix(Path(arg).read_text())
        if mring != ring or len(mat[0]) != k:
            raise ShapeError(f"matrix file is over Z_{mring.modulus} with k={len(mat[0])}")
        return linear(ring, mat)
    if head == "table":
        f = parse_table(Path(arg).read_text(encoding="utf-8"), ring)
        if f.k != k:
            raise ShapeError(f"table has k={f.k}, expected {k}")
        return f
    raise DomainError(f"unknown function selector {selector!r}")


def function_to_json(f: FunctionSpec) -> dict:
    out: dict[str, Any] = {"kind": f.kind.value, "s": f.ring.s, "k": f.k}
    if f.threshold is not None:
        out["threshold"] = f.threshold
    if f.matrix is not None:
        out["matrix"] = [list(r) for r in f.matrix]
    if f.table is not None:
        out["table"] = [list(v) if isinstance(v, tuple) else v for v in f.table]
    if f.name:
        out["name"] = f.name
    return out


def function_from_json(data: dict) -> FunctionSpec:
    ring = RingParams(int(data["s"]))
    kind = Kind(data["kind"])
    k = int(data["k"])
    if kind is Kind.LINEAR:
        return linear(ring, data["matrix"])
    if kind is Kind.TABLE:
        return table_function(ring, k, data["table"], name=data.get("name"))
    return FunctionSpec(kind, ring, k, threshold=data.get("threshold"))
