"""Canonical Hamming parity-check matrices, syndromes and V-sets.

Column ``j`` of ``H_r`` is the binary expansion of ``j`` with row 1 holding the
least significant bit.  A syndrome is an ``r``-bit :class:`BitVector` printed in
row order, so its integer value is exactly the index of the column equal to it.
That makes the syndrome of a support set the XOR of its indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from .errors import DimensionError, ParameterError
from .gf2 import BitVector, SupportSet

MIN_R = 2
MAX_R = 6

Syndrome = BitVector


@dataclass(frozen=True)
class ParityCheckMatrix:
    """``r x (2^r - 1)`` matrix whose columns list every nonzero ``r``-bit vector."""

    r: int

    def __post_init__(self) -> None:
        if not isinstance(self.r, int) or not MIN_R <= self.r <= MAX_R:
            raise ParameterError(f"r must be an integer in {MIN_R}..{MAX_R}, got {self.r!r}")

    @property
    def n(self) -> int:
        return (1 << self.r) - 1

    def column(self, j: int) -> BitVector:
        if not 1 <= j <= self.n:
            raise ParameterError(f"column {j} outside 1..{self.n}")
        return BitVector.from_int(j, self.r)

    @property
    def columns(self) -> List[BitVector]:
        return [self.column(j) for j in range(1, self.n + 1)]

    def rows(self) -> List[str]:
        """Each row as a bit string over columns 1..n."""
        return [
            "".join(str((j >> k) & 1) for j in range(1, self.n + 1))
            for k in range(self.r)
        ]

    def to_json(self) -> dict:
        return {"r": self.r, "n": self.n, "rows": self.rows()}


def build_parity_check(r: int) -> ParityCheckMatrix:
    return ParityCheckMatrix(r)


def syndrome_of_mask(mask: int) -> int:
    """Syndrome (as an int) of the support encoded in ``mask``."""
    s = 0
    while mask:
        low = mask & -mask
        s ^= low.bit_length()
        mask ^= low
    return s


@lru_cache(maxsize=None)
def syndrome_table(n: int) -> Tuple[int, ...]:
    """``table[mask]`` is the syndrome of every ``mask`` over ``n`` cells."""
    table = [0] * (1 << n)
    for k in range(n):
        step = 1 << k
        col = k + 1
        for m in range(step, step << 1):
            table[m] = table[m - step] ^ col
    return tuple(table)


def syndrome(H: ParityCheckMatrix, x: BitVector) -> Syndrome:
    """``x H^T``: XOR of the columns indexed by the support of ``x``."""
    if x.n != H.n:
        raise DimensionError(f"vector length {x.n} does not match n={H.n}")
    return BitVector.from_int(syndrome_of_mask(x.value), H.r)


@dataclass(frozen=True)
class VSet:
    """Supports of weight one or two whose columns sum to ``syndrome``."""

    syndrome: Syndrome
    singleton: SupportSet
    pairs: Tuple[SupportSet, ...]

    def members(self) -> List[SupportSet]:
        return [self.singleton, *self.pairs]

    def __contains__(self, item: object) -> bool:
        return item == self.singleton or item in self.pairs


def v_pairs(n: int, s: int) -> Tuple[Tuple[int, int], ...]:
    """Index pairs ``(j, j ^ s)`` with ``j < j ^ s``, sorted, excluding ``s`` itself."""
    return tuple((j, j ^ s) for j in range(1, n + 1) if j != s and j < (j ^ s))


def v_set(H: ParityCheckMatrix, s: Syndrome) -> VSet:
    if s.n != H.r:
        raise DimensionError(f"syndrome length {s.n} does not match r={H.r}")
    if s.is_zero():
        raise ParameterError("V(s) is only defined for a nonzero syndrome")
    pairs = tuple(frozenset(p) for p in v_pairs(H.n, s.value))
    return VSet(s, frozenset({s.value}), pairs)
