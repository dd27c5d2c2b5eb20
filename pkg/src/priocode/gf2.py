"""Fixed-length binary vectors and support sets.

Positions are 1-based throughout the public API: position ``i`` of a vector is
stored in bit ``i - 1`` of an ``int``.  Strings are written position 1 first,
so ``BitVector.from_string("0100010").support() == {2, 6}``.
"""

from __future__ import annotations

from typing import AbstractSet, FrozenSet, Iterable, Iterator, Sequence

from .errors import DimensionError, ParameterError

MAX_LENGTH = 63
"""Largest vector length supported; one machine word holds every vector."""

SupportSet = FrozenSet[int]


def mask_of(indices: Iterable[int]) -> int:
    """Bitmask with bit ``i - 1`` set for every position ``i``."""
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def positions_of(mask: int) -> SupportSet:
    """Inverse of :func:`mask_of`."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return frozenset(out)


class BitVector:
    """Immutable vector over GF(2) of fixed length ``n`` (1 <= n <= 63)."""

    __slots__ = ("_n", "_bits")

    def __init__(self, bits: Sequence[int]):
        n = len(bits)
        _check_length(n)
        value = 0
        for k, b in enumerate(bits):
            if b not in (0, 1):
                raise ParameterError(f"bit {k + 1} is {b!r}, expected 0 or 1")
            value |= b << k
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_bits", value)

    @classmethod
    def from_int(cls, value: int, n: int) -> "BitVector":
        """Build from an integer whose bit ``i - 1`` holds position ``i``."""
        _check_length(n)
        if value < 0 or value >> n:
            raise ParameterError(f"value {value} does not fit in {n} bits")
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_n", n)
        object.__setattr__(obj, "_bits", value)
        return obj

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        text = text.strip()
        if not text or any(ch not in "01" for ch in text):
            raise ParameterError(f"not a bit string: {text!r}")
        return cls([int(ch) for ch in text])

    @classmethod
    def from_support(cls, indices: Iterable[int], n: int) -> "BitVector":
        indices = list(indices)
        for i in indices:
            if not 1 <= i <= n:
                raise ParameterError(f"position {i} outside 1..{n}")
        return cls.from_int(mask_of(indices), n)

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls.from_int(0, n)

    def __setattr__(self, name, value):
        raise AttributeError("BitVector is immutable")

    @property
    def n(self) -> int:
        return self._n

    @property
    def value(self) -> int:
        """Integer encoding (position ``i`` in bit ``i - 1``)."""
        return self._bits

    def bit(self, i: int) -> int:
        """Bit at 1-based position ``i``."""
        if not 1 <= i <= self._n:
            raise IndexError(f"position {i} outside 1..{self._n}")
        return (self._bits >> (i - 1)) & 1

    def support(self) -> SupportSet:
        return positions_of(self._bits)

    def weight(self) -> int:
        return bin(self._bits).count("1")

    def is_zero(self) -> bool:
        return self._bits == 0

    def __len__(self) -> int:
        return self._n

    def __iter__(self) -> Iterator[int]:
        return ((self._bits >> k) & 1 for k in range(self._n))

    def __xor__(self, other: "BitVector") -> "BitVector":
        return xor(self, other)

    def __le__(self, other: "BitVector") -> bool:
        return leq(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self._n == other._n and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self._n, self._bits))

    def __str__(self) -> str:
        return "".join("1" if (self._bits >> k) & 1 else "0" for k in range(self._n))

    def __repr__(self) -> str:
        return f"BitVector('{self}')"


def _check_length(n: int) -> None:
    if not 1 <= n <= MAX_LENGTH:
        raise ParameterError(f"length {n} outside 1..{MAX_LENGTH}")


def _same_length(a: BitVector, b: BitVector) -> None:
    if a.n != b.n:
        raise DimensionError(f"length mismatch: {a.n} vs {b.n}")


def xor(a: BitVector, b: BitVector) -> BitVector:
    """Componentwise sum over GF(2)."""
    _same_length(a, b)
    return BitVector.from_int(a.value ^ b.value, a.n)


def support(v: BitVector) -> SupportSet:
    """Positions holding a 1."""
    return v.support()


def leq(a: BitVector, b: BitVector) -> bool:
    """``a_i <= b_i`` for every position."""
    _same_length(a, b)
    return a.value & ~b.value == 0


def disjoint(sets: Iterable[AbstractSet[int]]) -> bool:
    """True iff no position appears in two of the given sets."""
    seen: set = set()
    for s in sets:
        if not seen.isdisjoint(s):
            return False
        seen.update(s)
    return True
