"""Multilevel cell arrays and single-threshold reads."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence, Tuple

from .errors import ChainError, DimensionError, ParameterError
from .gf2 import BitVector, leq


@dataclass(frozen=True)
class CellState:
    """Levels of ``n`` cells, each in ``0..q-1``.

    ``q`` is stored explicitly: an all-zero array still needs to know how many
    thresholds its code uses.
    """

    levels: Tuple[int, ...]
    q: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "levels", tuple(self.levels))
        if self.q < 2:
            raise ParameterError(f"q must be at least 2, got {self.q}")
        if not self.levels:
            raise ParameterError("a cell state needs at least one cell")
        for k, lv in enumerate(self.levels):
            if not isinstance(lv, int) or not 0 <= lv < self.q:
                raise ParameterError(f"cell {k + 1} level {lv!r} outside 0..{self.q - 1}")

    @property
    def n(self) -> int:
        return len(self.levels)

    @classmethod
    def from_string(cls, text: str, q: int) -> "CellState":
        """Parse a digit string such as ``"021"`` or a JSON array."""
        text = text.strip()
        if text.startswith("["):
            try:
                levels = json.loads(text)
            except json.JSONDecodeError as exc:
                raise ParameterError(f"bad cell array: {exc}") from None
            if not isinstance(levels, list) or not all(isinstance(v, int) for v in levels):
                raise ParameterError("cell array must hold integers")
            return cls(tuple(levels), q)
        if not text.isdigit():
            raise ParameterError(f"not a digit string: {text!r}")
        return cls(tuple(int(ch) for ch in text), q)

    def __str__(self) -> str:
        if self.q <= 10:
            return "".join(str(v) for v in self.levels)
        return json.dumps(list(self.levels))


def read_threshold(c: CellState, i: int) -> BitVector:
    """Cells whose level is at least ``i`` read as 1."""
    if not 1 <= i <= c.q - 1:
        raise ParameterError(f"threshold {i} outside 1..{c.q - 1}")
    mask = 0
    for k, lv in enumerate(c.levels):
        if lv >= i:
            mask |= 1 << k
    return BitVector.from_int(mask, c.n)


def cell_from_chain(chain: Sequence[BitVector]) -> CellState:
    """Sum a chain ``c_1 <= c_2 <= ... <= c_t`` into a ``(t+1)``-level state."""
    if not chain:
        raise ChainError("chain must hold at least one vector")
    n = chain[0].n
    for a, b in zip(chain, chain[1:]):
        if b.n != n:
            raise DimensionError("chain vectors differ in length")
        if not leq(a, b):
            raise ChainError(f"chain is not monotone: {a} then {b}")
    levels = [0] * n
    for v in chain:
        bits = v.value
        for k in range(n):
            levels[k] += (bits >> k) & 1
    return CellState(tuple(levels), len(chain) + 1)
