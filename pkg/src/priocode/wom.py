"""Sequential write-once-memory coding by coset coding, and the [3,2,2] table code.

Data is the syndrome of the cell vector.  A write adds a vector whose support
avoids the cells already set, so cells only ever go from 0 to 1.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from .errors import CapacityExhausted, DimensionError, ParameterError
from .gf2 import BitVector
from .hamming import ParityCheckMatrix, Syndrome, syndrome, syndrome_of_mask, syndrome_table

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class WomState:
    cells: BitVector
    writes_done: int = 0


def _check(H: ParityCheckMatrix, d: Syndrome, c: BitVector) -> None:
    if c.n != H.n:
        raise DimensionError(f"state length {c.n} does not match n={H.n}")
    if d.n != H.r:
        raise DimensionError(f"datum length {d.n} does not match r={H.r}")


def _min_increment(n: int, used: int, target: int) -> Optional[int]:
    """Lowest-weight mask avoiding ``used`` with syndrome ``target``; lexicographic ties."""
    if target == 0:
        return 0
    free = [j for j in range(1, n + 1) if not used >> (j - 1) & 1]
    for w in range(1, len(free) + 1):
        for combo in itertools.combinations(free, w):
            acc = 0
            for j in combo:
                acc ^= j
            if acc == target:
                m = 0
                for j in combo:
                    m |= 1 << (j - 1)
                return m
    return None


def wom_encode(H: ParityCheckMatrix, d: Syndrome, c: BitVector) -> BitVector:
    """Next state ``c + x`` storing ``d``; ``x`` is the lightest admissible increment."""
    _check(H, d, c)
    target = d.value ^ syndrome_of_mask(c.value)
    x = _min_increment(H.n, c.value, target)
    if x is None:
        raise CapacityExhausted(f"no write of {d} fits on top of {c}")
    return BitVector.from_int(c.value | x, H.n)


def wom_decode(H: ParityCheckMatrix, c: BitVector) -> Syndrome:
    return syndrome(H, c)


# --- write guarantee --------------------------------------------------------


def _superset_or(values: np.ndarray, n: int) -> np.ndarray:
    """``out[c] = OR of values[c']`` over all ``c' ⊇ c``."""
    out = values.copy()
    for k in range(n):
        view = out.reshape(-1, 2, 1 << k)
        view[:, 0, :] |= view[:, 1, :]
    return out


def _subset_or(values: np.ndarray, n: int) -> np.ndarray:
    """``out[c] = OR of values[c']`` over all ``c' ⊆ c``."""
    out = values.copy()
    for k in range(n):
        view = out.reshape(-1, 2, 1 << k)
        view[:, 1, :] |= view[:, 0, :]
    return out


@dataclass
class WriteGuaranteeReport:
    r: int
    writes: int
    guaranteed: bool
    max_guaranteed_writes: int
    counterexample: Optional[Dict[str, object]]
    states_explored: int
    winning_states: List[int] = field(default_factory=list)
    reachable_states: List[int] = field(default_factory=list)
    greedy_guaranteed: bool = False
    greedy_counterexample: Optional[Dict[str, object]] = None
    greedy_states_explored: int = 0

    def to_json(self) -> dict:
        return dict(self.__dict__)


def verify_write_guarantee(H: ParityCheckMatrix, t: int) -> WriteGuaranteeReport:
    """Decide whether every sequence of ``t`` data writes can be stored.

    The question is a game: the writer must pick, for each datum, a successor
    state that keeps every later datum writable.  ``win[k][c]`` says ``k`` more
    writes are guaranteed from state ``c``; the code guarantees ``t`` writes iff
    ``win[t][0]``.  The report also lists the states reachable from zero while
    following only guarantee-preserving writes, and separately checks whether
    the deterministic :func:`wom_encode` rule alone achieves the same bound.
    """
    if H.r not in (3, 4):
        raise ParameterError(f"write guarantees are checked for r in {{3, 4}}, got {H.r}")
    if t < 0:
        raise ParameterError("number of writes must be non-negative")
    n, r = H.n, H.r
    size = 1 << n
    syn = np.array(syndrome_table(n), dtype=np.int64)
    full = (1 << (1 << r)) - 1
    bit_of_state = np.left_shift(np.int64(1), syn)

    win = [np.ones(size, dtype=bool)]
    for _ in range(t):
        reach = _superset_or(np.where(win[-1], bit_of_state, 0), n)
        win.append(reach == full)
    winning = [int(w.sum()) for w in win]
    max_k = max(k for k in range(t + 1) if win[k][0])
    guaranteed = bool(win[t][0])

    counterexample = None
    if not guaranteed:
        # first datum from the empty state that defeats every choice
        reach = _superset_or(np.where(win[max_k], bit_of_state, 0), n)
        lost = [d for d in range(1 << r) if not reach[0] >> d & 1]
        counterexample = {
            "state": str(BitVector.zeros(n)),
            "depth": 0,
            "datum": str(BitVector.from_int(lost[0], r)),
            "detail": f"no write of this datum keeps {max_k} further writes guaranteed",
        }

    reachable: List[int] = []
    explored = 0
    if guaranteed:
        frontier = np.zeros(size, dtype=bool)
        frontier[0] = True
        for depth in range(t + 1):
            count = int(frontier.sum())
            reachable.append(count)
            explored += count
            if depth == t:
                break
            frontier = _subset_or(frontier, n) & win[t - depth - 1]
    else:
        explored = size * t
    log.info("write guarantee r=%d t=%d: winning per level %s, reachable per depth %s",
             r, t, winning, reachable)

    greedy_ok, greedy_cx, greedy_explored = _greedy_guarantee(H, t)
    return WriteGuaranteeReport(
        r=r, writes=t, guaranteed=guaranteed, max_guaranteed_writes=max_k,
        counterexample=counterexample, states_explored=explored,
        winning_states=winning, reachable_states=reachable,
        greedy_guaranteed=greedy_ok, greedy_counterexample=greedy_cx,
        greedy_states_explored=greedy_explored,
    )


def _greedy_guarantee(H: ParityCheckMatrix, t: int):
    n, r = H.n, H.r
    frontier = {0}
    explored = 0
    cache: Dict[tuple, Optional[int]] = {}
    for depth in range(t):
        nxt = set()
        for state in sorted(frontier):
            explored += 1
            base = syndrome_of_mask(state)
            for d in range(1 << r):
                key = (state, d)
                if key not in cache:
                    cache[key] = _min_increment(n, state, d ^ base)
                x = cache[key]
                if x is None:
                    return False, {
                        "state": str(BitVector.from_int(state, n)),
                        "depth": depth,
                        "datum": str(BitVector.from_int(d, r)),
                    }, explored
                nxt.add(state | x)
        frontier = nxt
    return True, None, explored + len(frontier)


# --- [3,2,2] table code -----------------------------------------------------

RS322_FIRST = {"00": "000", "01": "100", "10": "010", "11": "001"}
RS322_SECOND = {"00": "111", "01": "011", "10": "101", "11": "110"}


def rs322_decode(state: BitVector) -> BitVector:
    """Datum stored in a 3-cell state of the [3,2,2] code."""
    if state.n != 3:
        raise DimensionError("the [3,2,2] code uses three cells")
    text = str(state)
    for table in (RS322_FIRST, RS322_SECOND):
        for d, word in table.items():
            if word == text:
                return BitVector.from_string(d)
    raise ParameterError(f"{text} is not a codeword")  # unreachable: tables cover {0,1}^3


def rs322_encode(d: BitVector, state: BitVector, write_index: int) -> BitVector:
    if d.n != 2 or state.n != 3:
        raise DimensionError("the [3,2,2] code stores 2 bits in 3 cells")
    key = str(d)
    if write_index == 1:
        if not state.is_zero():
            raise ParameterError("the first write starts from the erased state")
        return BitVector.from_string(RS322_FIRST[key])
    if write_index == 2:
        if str(state) not in RS322_FIRST.values():
            raise ParameterError(f"{state} is not a first-write codeword")
        if rs322_decode(state) == d:
            return state
        # a first-generation word that still covers the state costs fewer level shifts
        first = BitVector.from_string(RS322_FIRST[key])
        if state <= first:
            return first
        return BitVector.from_string(RS322_SECOND[key])
    raise ParameterError(f"write index must be 1 or 2, got {write_index}")


def rs322_rio_cell(page1: BitVector, page2: BitVector):
    """Two pages in three 3-level cells: first write carries page 1, second page 2."""
    from .cell import cell_from_chain

    c1 = rs322_encode(page1, BitVector.zeros(3), 1)
    return cell_from_chain([c1, rs322_encode(page2, c1, 2)])


def rs322_rio_read(cell) -> tuple:
    """Both pages back; page ``i`` uses threshold ``3 - i``."""
    from .cell import read_threshold

    return rs322_decode(read_threshold(cell, 2)), rs322_decode(read_threshold(cell, 1))
