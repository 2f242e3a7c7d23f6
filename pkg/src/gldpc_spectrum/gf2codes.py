"""GF(2) matrices and exhaustive local enumerators of short binary codes.

Rows and columns are handled as Python int bitsets: bit ``j`` of a row mask
is entry ``(i, j)``, bit ``i`` of a column mask is entry ``(i, j)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from gldpc_spectrum.enumerators import Enumerator
from gldpc_spectrum.errors import BudgetError

#: Largest number of rows (for codeword sweeps) or columns (for erasure
#: pattern sweeps) handled by exhaustive enumeration.
MAX_ENUM_BITS = 24


@dataclass(frozen=True)
class GF2Matrix:
    rows: int
    cols: int
    bits: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"matrix must be at least 1x1, got {self.rows}x{self.cols}")
        if len(self.bits) != self.rows or any(len(r) != self.cols for r in self.bits):
            raise ValueError("bits do not match the declared shape")
        if any(b not in (0, 1) for r in self.bits for b in r):
            raise ValueError("entries must be 0 or 1")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> GF2Matrix:
        bits = tuple(tuple(int(b) for b in r) for r in rows)
        return cls(len(bits), len(bits[0]) if bits else 0, bits)

    @classmethod
    def from_text(cls, text: str) -> GF2Matrix:
        """Parse ``"rows cols"`` followed by one line of 0/1 entries per row."""
        lines = [ln.split() for ln in text.splitlines() if ln.strip()]
        if not lines or len(lines[0]) != 2:
            raise ValueError("first line must be 'rows cols'")
        try:
            nrows, ncols = int(lines[0][0]), int(lines[0][1])
            body = [[int(tok) for tok in ln] for ln in lines[1:]]
        except ValueError as exc:
            raise ValueError(f"non-integer entry in matrix text: {exc}") from None
        if len(body) != nrows:
            raise ValueError(f"expected {nrows} rows, found {len(body)}")
        for i, row in enumerate(body, start=2):
            if len(row) != ncols:
                raise ValueError(f"line {i}: expected {ncols} entries, found {len(row)}")
        return cls(nrows, ncols, tuple(tuple(r) for r in body))

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        lines += [" ".join(str(b) for b in r) for r in self.bits]
        return "\n".join(lines) + "\n"

    def row_masks(self) -> list[int]:
        return [sum(b << j for j, b in enumerate(r)) for r in self.bits]

    def column_masks(self) -> list[int]:
        return [sum(self.bits[i][j] << i for i in range(self.rows)) for j in range(self.cols)]

    def transpose(self) -> GF2Matrix:
        return GF2Matrix(self.cols, self.rows, tuple(zip(*self.bits)))

    def has_zero_column(self) -> bool:
        return any(m == 0 for m in self.column_masks())


def read_matrix(path: str | Path) -> GF2Matrix:
    return GF2Matrix.from_text(Path(path).read_text())


def _rank_of_masks(vectors: Iterable[int]) -> int:
    basis: dict[int, int] = {}
    for v in vectors:
        v = _reduce(v, basis)
        if v:
            basis[v.bit_length() - 1] = v
    return len(basis)


def _reduce(v: int, basis: dict[int, int]) -> int:
    # basis maps leading bit -> vector with that leading bit
    while v:
        b = basis.get(v.bit_length() - 1)
        if b is None:
            return v
        v ^= b
    return 0


def rank(m: GF2Matrix) -> int:
    """Rank of ``m`` over GF(2)."""
    return _rank_of_masks(m.row_masks())


def _codeword_masks(row_masks: list[int], cols: int) -> np.ndarray | list[int]:
    if cols <= 64:
        words = np.zeros(1, dtype=np.uint64)
        for r in row_masks:
            words = np.concatenate([words, words ^ np.uint64(r)])
        return words
    words_py = [0]
    for r in row_masks:
        words_py += [w ^ r for w in words_py]
    return words_py


def enumerate_wef(g: GF2Matrix) -> Enumerator:
    """Weight enumerator of the row space of generator matrix ``g``."""
    if g.rows > MAX_ENUM_BITS:
        raise BudgetError(f"{g.rows} rows means 2**{g.rows} codewords; limit is 2**{MAX_ENUM_BITS}")
    masks = g.row_masks()
    if _rank_of_masks(masks) != g.rows:
        raise ValueError(f"generator matrix is rank deficient (rank {rank(g)} < {g.rows} rows)")
    words = _codeword_masks(masks, g.cols)
    if isinstance(words, np.ndarray):
        counts = np.bincount(np.bitwise_count(words), minlength=g.cols + 1)
        coeffs = {u: int(c) for u, c in enumerate(counts)}
    else:
        coeffs = {}
        for w in words:
            u = w.bit_count()
            coeffs[u] = coeffs.get(u, 0) + 1
    return Enumerator(g.cols, coeffs)


def contains_all_ones(g: GF2Matrix) -> bool:
    """Whether the all-ones word lies in the row space of ``g``."""
    masks = g.row_masks()
    ones = (1 << g.cols) - 1
    return _rank_of_masks(masks + [ones]) == _rank_of_masks(masks)


def map_ssef(g: GF2Matrix) -> Enumerator:
    """Local stopping-set enumerator under MAP erasure decoding.

    An erased set ``E`` counts when every erased column is linearly
    independent of the span of the non-erased columns, so no erased bit can
    be recovered. The empty pattern contributes the constant term.
    """
    s = g.cols
    if s > MAX_ENUM_BITS:
        raise BudgetError(f"{s} columns means 2**{s} erasure patterns; limit is 2**{MAX_ENUM_BITS}")
    cols = g.column_masks()
    counts = [0] * (s + 1)

    # Depth-first over columns: each column is either erased or kept. The
    # basis of kept columns only grows, so once an erased column falls in
    # its span the whole subtree is dead.
    def walk(j: int, basis: dict[int, int], erased: list[int]) -> None:
        if j == s:
            counts[len(erased)] += 1
            return
        c = cols[j]
        if _reduce(c, basis):
            erased.append(c)
            walk(j + 1, basis, erased)
            erased.pop()
        red = _reduce(c, basis)
        if red:
            grown = dict(basis)
            grown[red.bit_length() - 1] = red
            if all(_reduce(e, grown) for e in erased):
                walk(j + 1, grown, erased)
        else:
            walk(j + 1, basis, erased)

    walk(0, {}, [])
    return Enumerator(s, {u: c for u, c in enumerate(counts) if c})


def bd_ssef(s: int, r: int) -> Enumerator:
    """Local stopping-set enumerator ``1 + sum_{u=r}^{s} C(s,u) z**u`` under bounded-distance decoding."""
    if r < 2 or r > s:
        raise ValueError(f"need 2 <= r <= s, got r={r}, s={s}")
    coeffs = {0: 1}
    coeffs.update({u: math.comb(s, u) for u in range(r, s + 1)})
    return Enumerator(s, coeffs)


def hamming74_generator() -> GF2Matrix:
    return GF2Matrix.from_rows(
        [
            [1, 0, 0, 0, 1, 1, 0],
            [0, 1, 0, 0, 1, 0, 1],
            [0, 0, 1, 0, 0, 1, 1],
            [0, 0, 0, 1, 1, 1, 1],
        ]
    )


def spc_generator(s: int) -> GF2Matrix:
    """Systematic generator of the length-``s`` single parity-check code."""
    if s < 2:
        raise ValueError(f"SPC length must be >= 2, got {s}")
    return GF2Matrix.from_rows([[int(i == j) for j in range(s - 1)] + [1] for i in range(s - 1)])


def repetition_generator(q: int) -> GF2Matrix:
    return GF2Matrix.from_rows([[1] * q])


def identity(s: int) -> GF2Matrix:
    return GF2Matrix.from_rows([[int(i == j) for j in range(s)] for i in range(s)])
