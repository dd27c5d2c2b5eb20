"""Support-assignment tables for the parallel [15,4,8] and [7,3,4] codes.

Pages are addressed by *slot*: slot ``k`` is the ``k``-th page after grouping
equal syndromes (largest group first), so slots ``1..m1`` hold the first
repeated value, the next ``m2`` slots the second, and so on.  Single pages
are never listed here; each simply takes the column equal to its syndrome.

Entries name sigma-positions, not columns.  A table is a list of steps:

``Fixed(slot, positions)``
    the page in ``slot`` takes ``{sigma(p) for p in positions}``.
``Choose(slots, starts, shape, avoid, label)``
    pick ``len(slots) // len(shape)`` distinct starts, smallest combination
    first; start ``a`` yields one support per offset tuple in ``shape``.  The
    picked positions must miss every set named in ``avoid``: ``"A1"``/``"A2"``
    (sigma-positions of single pages inside the low/high region) or the
    ``label`` of an earlier step.
``ChooseInV(slots, firsts, seconds, avoid, label)``
    pick pairs ``(a, b)`` from ``firsts x seconds`` with distinct ``a`` whose
    columns sum to the slot's own syndrome.
``ByA2(branches)``
    choose a sub-table from the sigma-position of the single page in ``A2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple, Union


@dataclass(frozen=True)
class Fixed:
    slot: int
    positions: Tuple[int, ...]


@dataclass(frozen=True)
class Choose:
    slots: Tuple[int, ...]
    starts: Tuple[int, ...]
    shape: Tuple[Tuple[int, ...], ...]
    avoid: Tuple[str, ...] = ()
    label: str = ""


@dataclass(frozen=True)
class ChooseInV:
    slots: Tuple[int, ...]
    firsts: Tuple[int, ...]
    seconds: Tuple[int, ...]
    avoid: Tuple[str, ...] = ()
    label: str = ""


@dataclass(frozen=True)
class ByA2:
    branches: Tuple[Tuple[Tuple[int, ...], tuple], ...]


Step = Union[Fixed, Choose, ChooseInV]


def F(slot: int, *positions: int) -> Fixed:
    return Fixed(slot, positions)


def C(slots, starts, shape, avoid=(), label="") -> Choose:
    return Choose(tuple(slots), tuple(starts), tuple(map(tuple, shape)), tuple(avoid), label)


def V(slots, firsts, seconds, avoid=()) -> ChooseInV:
    return ChooseInV(tuple(slots), tuple(firsts), tuple(seconds), tuple(avoid))


ADJ = ((0, 1),)        # {a, a+1}
STRIDE2 = ((0, 2),)    # {a, a+2}
STRIDE4 = ((0, 4),)    # {a, a+4}
TWO_ADJ = ((0, 1), (2, 3))
HIGH_STRIDE2 = (8, 9, 12, 13)

# --- [7,3,4] ----------------------------------------------------------------

# one repeated value: blocks {a, a+1} for the copies after the first
SMALL_ONE_GROUP_STARTS = (2, 4, 6)
SMALL_TWO_GROUPS = (F(1, 1), F(2, 2, 3), F(3, 4, 6), F(4, 5, 7))

# --- [15,4,8] ---------------------------------------------------------------

ONE_GROUP_STARTS = (2, 4, 6, 8, 10, 12, 14)

# two repeated values, keyed (m1, m2, a1, a2); A1 covers sigma(3..7), A2 sigma(8..15)
TWO_GROUPS: Dict[Tuple[int, int, int, int], tuple] = {
    (2, 2, 0, 4): (F(1, 1), F(2, 2, 3), F(3, 4, 6), F(4, 5, 7)),
    (2, 2, 1, 3): (F(1, 1), C([2], (4, 6), ADJ, ["A1"]), F(3, 2),
                   C([4], HIGH_STRIDE2, STRIDE2, ["A2"])),
    (2, 2, 2, 2): (F(1, 1), C([2], (2, 4, 6), ADJ, ["A1"]),
                   C([3, 4], HIGH_STRIDE2, STRIDE2, ["A2"])),
    (2, 2, 3, 1): (F(1, 1), C([2], (8, 10), ADJ, ["A2"]), F(3, 2),
                   C([4], (12, 13), STRIDE2, ["A2"])),
    (2, 2, 4, 0): (F(1, 1), F(2, 8, 9), F(3, 2), F(4, 12, 14)),
    (3, 2, 0, 3): (F(1, 1), F(2, 4, 5), F(3, 6, 7), F(4, 2),
                   C([5], HIGH_STRIDE2, STRIDE2, ["A2"])),
    (3, 2, 1, 2): (F(1, 1), C([2, 3], (2, 4, 6), ADJ, ["A1"]),
                   C([4, 5], HIGH_STRIDE2, STRIDE2, ["A2"])),
    (3, 2, 2, 1): (F(1, 1), C([2, 3], (8, 12), TWO_ADJ, ["A2"], "alpha"), F(4, 2),
                   C([5], HIGH_STRIDE2, STRIDE2, ["A2", "alpha"])),
    (3, 2, 3, 0): (F(1, 1), F(2, 8, 9), F(3, 10, 11), F(4, 2), F(5, 12, 14)),
    (3, 3, 0, 2): (F(1, 1), F(2, 4, 5), F(3, 6, 7), F(4, 2),
                   C([5, 6], HIGH_STRIDE2, STRIDE2, ["A2"])),
    (3, 3, 1, 1): (F(1, 1), C([2, 3], (2, 4, 6), ADJ, ["A1"]),
                   C([4, 5, 6], HIGH_STRIDE2, STRIDE2, ["A2"])),
    (3, 3, 2, 0): (F(1, 1), F(2, 8, 9), F(3, 10, 11), F(4, 2), F(5, 12, 14), F(6, 13, 15)),
    (4, 2, 0, 2): (F(1, 1), F(2, 2, 3), F(3, 4, 5), F(4, 6, 7),
                   C([5, 6], HIGH_STRIDE2, STRIDE2, ["A2"])),
    (4, 2, 1, 1): (F(1, 1), C([2], (4, 6), ADJ, ["A1"]),
                   C([3, 4], (8, 12), TWO_ADJ, ["A2"], "beta"), F(5, 2),
                   C([6], HIGH_STRIDE2, STRIDE2, ["A2", "beta"])),
    (4, 2, 2, 0): (F(1, 1), F(2, 8, 9), F(3, 10, 11), C([4], (2, 4, 6), ADJ, ["A1"]),
                   F(5, 12, 14), F(6, 13, 15)),
    (4, 3, 0, 1): (F(1, 1), F(2, 2, 3), F(3, 4, 5), F(4, 6, 7),
                   C([5, 6, 7], HIGH_STRIDE2, STRIDE2, ["A2"])),
    # The first page takes a pair here, not the singleton; kept as published.
    (4, 3, 1, 0): (F(1, 8, 9), F(2, 10, 11), F(3, 12, 13), F(4, 14, 15), F(5, 2),
                   C([6, 7], (1, 4, 5), STRIDE2, ["A1"])),
    (4, 4, 0, 0): (F(1, 1), F(2, 2, 3), F(3, 4, 5), F(4, 6, 7),
                   F(5, 8, 10), F(6, 9, 11), F(7, 12, 14), F(8, 13, 15)),
    (5, 2, 0, 1): (F(1, 1), F(2, 4, 5), F(3, 6, 7),
                   C([4, 5], (8, 12), TWO_ADJ, ["A2"], "alpha"), F(6, 2),
                   C([7], HIGH_STRIDE2, STRIDE2, ["A2", "alpha"])),
    (5, 2, 1, 0): (F(1, 1), F(2, 8, 9), F(3, 10, 11), F(4, 12, 13), F(5, 14, 15), F(6, 2),
                   C([7], (4, 5), STRIDE2, ["A1"])),
    (5, 3, 0, 0): (F(1, 1), F(2, 4, 5), F(3, 6, 7), F(4, 8, 9), F(5, 10, 11), F(6, 2),
                   F(7, 12, 14), F(8, 13, 15)),
    (6, 2, 0, 0): (F(1, 1), F(2, 2, 3), F(3, 4, 5), F(4, 6, 7), F(5, 8, 9), F(6, 10, 11),
                   F(7, 12, 14), F(8, 13, 15)),
}

# three repeated values whose first syndromes are independent (sigma masks 1, 2, 4);
# keyed (m1, m2, m3, a1, a2) with A1 = sigma{3,5,6,7}, A2 = sigma(8..15)
THREE_GROUPS_INDEPENDENT: Dict[Tuple[int, ...], object] = {
    (2, 2, 2, 0, 2): (F(1, 1), F(2, 2, 3), F(3, 4, 6), F(4, 5, 7),
                      C([5, 6], (8, 9, 10, 11), STRIDE4, ["A2"])),
    (2, 2, 2, 1, 1): (
        (F(1, 1), F(3, 2), F(5, 4)),
        ByA2((
            ((8, 15), (F(2, 10, 11), F(4, 12, 14), F(6, 9, 13))),
            ((9, 14), (F(2, 12, 13), F(4, 8, 10), F(6, 11, 15))),
            ((10, 13), (F(2, 8, 9), F(4, 12, 14), F(6, 11, 15))),
            ((11, 12), (F(2, 14, 15), F(4, 8, 10), F(6, 9, 13))),
        )),
    ),
    (2, 2, 2, 2, 0): (F(1, 1), F(2, 8, 9), F(3, 2), F(4, 12, 14), F(5, 4), F(6, 11, 15)),
    (3, 2, 2, 0, 1): (
        (F(1, 1), F(2, 4, 5), F(3, 6, 7), F(4, 2)),
        ByA2((
            ((8, 10), (F(5, 12, 14), F(6, 9, 13), F(7, 11, 15))),
            ((9, 11), (F(5, 13, 15), F(6, 8, 12), F(7, 10, 14))),
            ((12, 14), (F(5, 8, 10), F(6, 9, 13), F(7, 11, 15))),
            ((13, 15), (F(5, 9, 11), F(6, 8, 12), F(7, 10, 14))),
        )),
    ),
    (3, 2, 2, 1, 0): (F(1, 1), C([2, 3], (2, 4, 6), ADJ, ["A1"]),
                      F(4, 8, 10), F(5, 12, 14), F(6, 9, 13), F(7, 11, 15)),
    (3, 3, 2, 0, 0): (F(1, 1), F(2, 4, 5), F(3, 6, 7), F(4, 2), F(5, 8, 10), F(6, 12, 14),
                      F(7, 9, 13), F(8, 11, 15)),
    (4, 2, 2, 0, 0): (F(1, 1), F(2, 2, 3), F(3, 4, 5), F(4, 6, 7), F(5, 8, 10), F(6, 12, 14),
                      F(7, 9, 13), F(8, 11, 15)),
}

# three repeated values with s1 ^ s2 == s3 (sigma masks 1, 2, 3); A1 = sigma(4..7)
THREE_GROUPS_DEPENDENT: Dict[Tuple[int, ...], object] = {
    (2, 2, 2, 0, 2): (F(1, 1), F(2, 2, 3), F(3, 4, 6), F(4, 5, 7),
                      V([5, 6], HIGH_STRIDE2, (10, 11, 14, 15), ["A2"])),
    (2, 2, 2, 1, 1): (F(1, 1), C([2], (4, 6), ADJ, ["A1"]), F(3, 2),
                      C([4], HIGH_STRIDE2, STRIDE2, ["A2"], "beta"), F(5, 3),
                      V([6], HIGH_STRIDE2, (10, 11, 14, 15), ["A2", "beta"])),
    (2, 2, 2, 2, 0): (F(1, 1), F(2, 2, 3), F(3, 8, 10), F(4, 9, 11), F(5, 12, 15),
                      F(6, 13, 14)),
    (3, 2, 2, 0, 1): (F(1, 1), F(2, 4, 5), F(3, 6, 7), F(4, 2),
                      C([5], (8, 9), STRIDE2, ["A2"]), F(6, 3),
                      V([7], (12, 13), (14, 15), ["A2"])),
    (3, 2, 2, 1, 0): (F(1, 1), F(2, 2, 3), C([3], (4, 6), ADJ, ["A1"]),
                      F(4, 8, 10), F(5, 9, 11), F(6, 12, 15), F(7, 13, 14)),
    (3, 3, 2, 0, 0): (F(1, 1), F(2, 4, 5), F(3, 6, 7), F(4, 2), F(5, 8, 10), F(6, 9, 11),
                      F(7, 3), F(8, 12, 15)),
    (4, 2, 2, 0, 0): (F(1, 1), F(2, 2, 3), F(3, 4, 5), F(4, 6, 7), F(5, 8, 10), F(6, 9, 11),
                      F(7, 12, 15), F(8, 13, 14)),
}

# four values, each twice; the dependent-triple case reorders the groups first
FOUR_GROUPS: Dict[str, tuple] = {
    "A": (F(1, 1), F(2, 2, 3), F(3, 4, 6), F(4, 9, 11), F(5, 8, 12), F(6, 10, 14),
          F(7, 5, 13), F(8, 7, 15)),
    "B": (F(1, 1), F(2, 2, 3), F(3, 4, 6), F(4, 5, 7), F(5, 8, 11), F(6, 12, 15),
          F(7, 9, 13), F(8, 10, 14)),
    "C": (F(1, 1), F(2, 2, 3), F(3, 4, 6), F(4, 5, 7), F(5, 8, 12), F(6, 11, 15),
          F(7, 9, 14), F(8, 10, 13)),
}

A1_TWO_GROUPS = frozenset(range(3, 8))
A1_INDEPENDENT = frozenset({3, 5, 6, 7})
A1_DEPENDENT = frozenset(range(4, 8))
A2_REGION = frozenset(range(8, 16))
