"""Parallel RIO codes: all ``t`` pages are written at once into ``(t+1)``-level cells.

Page ``i`` is read with a single threshold.  Encoding turns the pages into
difference syndromes ``s_i = d_i ^ d_(i-1)``, finds pairwise disjoint supports
``I(x_i)`` of weight at most two with ``x_i H^T = s_i``, and stacks the
cumulative vectors ``c_i = x_1 + ... + x_i`` into the cell levels.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import cases
from .cell import CellState, cell_from_chain, read_threshold
from .errors import DimensionError, DispatchGap, ParameterError
from .gf2 import BitVector, disjoint, mask_of, positions_of
from .hamming import ParityCheckMatrix, Syndrome, build_parity_check, syndrome, syndrome_of_mask
from .sigma import classify_quad, classify_triple, sigma_images

PAGES_FOR_R = {3: 4, 4: 8}

PageSet = Tuple[BitVector, ...]


@dataclass(frozen=True)
class PRioCode:
    """The [7,3,4] code (``r=3``) or the [15,4,8] code (``r=4``)."""

    r: int

    def __post_init__(self) -> None:
        if self.r not in PAGES_FOR_R:
            raise ParameterError(f"parallel codes exist here for r in (3, 4), got {self.r!r}")

    @property
    def n(self) -> int:
        return (1 << self.r) - 1

    @property
    def l(self) -> int:  # noqa: E743 - conventional name for bits per page
        return self.r

    @property
    def t(self) -> int:
        return PAGES_FOR_R[self.r]

    @property
    def H(self) -> ParityCheckMatrix:
        return build_parity_check(self.r)

    @property
    def name(self) -> str:
        return f"[{self.n},{self.l},{self.t}]"


@dataclass(frozen=True)
class SupportAssignment:
    """Per-page supports plus a label naming the branch that produced them."""

    supports: Tuple[FrozenSet[int], ...]
    case: str = ""

    def masks(self) -> Tuple[int, ...]:
        return tuple(mask_of(s) for s in self.supports)


def parse_pages(code: PRioCode, text: str) -> PageSet:
    """Comma-separated bit strings, one per page."""
    pages = tuple(BitVector.from_string(p) for p in text.split(","))
    validate_pages(code, pages)
    return pages


def validate_pages(code: PRioCode, pages: Sequence[BitVector]) -> None:
    if len(pages) != code.t:
        raise ParameterError(f"{code.name} stores {code.t} pages, got {len(pages)}")
    for k, p in enumerate(pages, 1):
        if not isinstance(p, BitVector) or p.n != code.l:
            raise DimensionError(f"page {k} must be {code.l} bits")


def syndromes_from_pages(code: PRioCode, pages: Sequence[BitVector]) -> List[Syndrome]:
    validate_pages(code, pages)
    prev = BitVector.zeros(code.l)
    out = []
    for p in pages:
        out.append(p ^ prev)
        prev = p
    return out


def check_solution(H: ParityCheckMatrix, s: Sequence[Syndrome], a: SupportAssignment) -> bool:
    """Each support realizes its syndrome, and no two supports share a cell."""
    if len(s) != len(a.supports):
        return False
    for target, sup in zip(s, a.supports):
        if target.n != H.r or any(not 1 <= j <= H.n for j in sup):
            return False
        if syndrome_of_mask(mask_of(sup)) != target.value:
            return False
    return disjoint(a.supports)


# --- table interpreter -------------------------------------------------------


def _evaluate(steps, sig, slot_syn, regions, out) -> None:
    for step in steps:
        if isinstance(step, tuple):
            _evaluate(step, sig, slot_syn, regions, out)
        elif isinstance(step, cases.Fixed):
            out[step.slot] = step.positions
        elif isinstance(step, cases.ByA2):
            where = regions["A2"]
            for keys, branch in step.branches:
                if where & mask_of(keys):
                    _evaluate(branch, sig, slot_syn, regions, out)
                    break
            else:
                raise DispatchGap(f"no branch for A2 positions {sorted(positions_of(where))}")
        else:
            _choose(step, sig, slot_syn, regions, out)


@lru_cache(maxsize=None)
def _options(step: "cases.Choose"):
    """Admissible combinations of a choice step as ``(position_mask, groups)``."""
    k = len(step.slots) // len(step.shape)
    per_start = [[tuple(a + o for o in sh) for sh in step.shape] for a in step.starts]
    out = []
    for combo in itertools.combinations(per_start, k):
        groups = tuple(g for option in combo for g in option)
        flat = [p for g in groups for p in g]
        if len(set(flat)) == len(flat):
            out.append((mask_of(flat), groups))
    return tuple(out)


def _choose(step, sig, slot_syn, regions, out) -> None:
    blocked = 0
    for name in step.avoid:
        blocked |= regions[name]
    if isinstance(step, cases.Choose):
        options = _options(step)
    else:
        k = len(step.slots)
        target = slot_syn[step.slots[0]]
        pairs = [(a, b) for a in step.firsts for b in step.seconds
                 if sig[a - 1] ^ sig[b - 1] == target]
        options = []
        for combo in itertools.combinations(pairs, k):
            flat = [p for g in combo for p in g]
            if len({g[0] for g in combo}) == k and len(set(flat)) == len(flat):
                options.append((mask_of(flat), combo))
    for pos_mask, groups in options:
        if pos_mask & blocked:
            continue
        for slot, g in zip(step.slots, groups):
            out[slot] = g
        if step.label:
            regions[step.label] = pos_mask
        return
    raise DispatchGap(
        f"no admissible choice for slots {step.slots} avoiding {sorted(positions_of(blocked))}")


# --- dispatch ----------------------------------------------------------------


def _group(syn: Sequence[int]):
    """Slot order: repeated values by multiplicity (then first appearance), then singles."""
    counts = Counter(syn)
    first: Dict[int, int] = {}
    for i, v in enumerate(syn):
        first.setdefault(v, i)
    repeated = sorted((v for v in counts if counts[v] > 1), key=lambda v: (-counts[v], first[v]))
    order = [i for v in repeated for i, w in enumerate(syn) if w == v]
    order += [i for i, v in enumerate(syn) if counts[v] == 1]
    return order, [(v, counts[v]) for v in repeated]


def _pad(r: int, syn: Sequence[int], t: int) -> Tuple[int, ...]:
    """Fill up to ``t`` pages with fresh distinct syndromes so the full tables apply."""
    taken = set(syn)
    fresh = [v for v in range(1, 1 << r) if v not in taken][: t - len(syn)]
    return tuple(syn) + tuple(fresh)


@lru_cache(maxsize=1 << 16)
def _solve_nonzero(r: int, syn: Tuple[int, ...]) -> Tuple[Tuple[int, ...], str]:
    """Column masks for exactly ``t`` nonzero syndromes, in input order."""
    order, groups = _group(syn)
    t = len(syn)
    slot_syn = {k + 1: syn[i] for k, i in enumerate(order)}
    n_grouped = sum(m for _, m in groups)
    single_values = [slot_syn[k] for k in range(n_grouped + 1, t + 1)]
    label, out, sig = _dispatch(r, groups, single_values, slot_syn)
    masks = [0] * t
    for k, i in enumerate(order, 1):
        if k > n_grouped:
            masks[i] = 1 << (slot_syn[k] - 1)
            continue
        if k not in out:
            raise DispatchGap(f"{label}: slot {k} left unassigned")
        masks[i] = mask_of(sig[p - 1] for p in out[k])
    return tuple(masks), label


def _dispatch(r, groups, single_values, slot_syn):
    out: Dict[int, tuple] = {}
    if not groups:
        return "distinct", out, ()
    ms = tuple(m for _, m in groups)
    heads = [v for v, _ in groups]
    if len(groups) == 1:
        sig = sigma_images("single", (heads[0],), r)
        inverse = {c: p for p, c in enumerate(sig, 1)}
        regions = {"S": mask_of(inverse[v] for v in single_values)}
        starts = cases.SMALL_ONE_GROUP_STARTS if r == 3 else cases.ONE_GROUP_STARTS
        steps = (cases.F(1, 1),)
        if ms[0] > 1:
            steps += (cases.C(range(2, ms[0] + 1), starts, cases.ADJ, ["S"]),)
        _evaluate(steps, sig, slot_syn, regions, out)
        return f"one-repeat m={ms[0]}", out, sig
    if r == 3:
        if ms != (2, 2):
            raise DispatchGap(f"[7,3,4]: unhandled multiplicity profile {ms}")
        sig = sigma_images("pair", tuple(heads), 3)
        _evaluate(cases.SMALL_TWO_GROUPS, sig, slot_syn, {}, out)
        return "two-repeats m=(2,2)", out, sig
    if len(groups) == 2:
        sig = sigma_images("pair", tuple(heads), 4)
        name = "two-repeats"
        table, a1_region = cases.TWO_GROUPS, cases.A1_TWO_GROUPS
    elif len(groups) == 3:
        kind = classify_triple(*heads)
        sig = sigma_images(f"triple-{kind.value}", tuple(heads), 4)
        if kind.value == "A":
            name = "three-repeats-independent"
            table, a1_region = cases.THREE_GROUPS_INDEPENDENT, cases.A1_INDEPENDENT
        else:
            name = "three-repeats-dependent"
            table, a1_region = cases.THREE_GROUPS_DEPENDENT, cases.A1_DEPENDENT
    elif len(groups) == 4 and ms == (2, 2, 2, 2):
        kind = classify_quad(tuple(heads))
        ordered = tuple(heads[t - 1] for t in kind.tau)
        sig = sigma_images(f"quad-{kind.variant}", ordered, 4)
        # relabel slots so group g of the reordered list occupies slots 2g-1, 2g
        moved = {}
        for g, t_idx in enumerate(kind.tau):
            for off in (1, 2):
                moved[2 * g + off] = 2 * (t_idx - 1) + off
        reordered_syn = {k: slot_syn[moved[k]] for k in moved}
        tmp: Dict[int, tuple] = {}
        _evaluate(cases.FOUR_GROUPS[kind.variant], sig, reordered_syn, {}, tmp)
        for k, g in tmp.items():
            out[moved[k]] = g
        return f"four-pairs-{kind.variant}", out, sig
    else:
        raise DispatchGap(f"[15,4,8]: unhandled multiplicity profile {ms}")
    inverse = {c: p for p, c in enumerate(sig, 1)}
    single_pos = [inverse[v] for v in single_values]
    a1 = [p for p in single_pos if p in a1_region]
    a2 = [p for p in single_pos if p in cases.A2_REGION]
    if len(a1) + len(a2) != len(single_pos):
        raise DispatchGap(f"{name} m={ms}: single pages at sigma-positions {sorted(single_pos)}")
    key = ms + (len(a1), len(a2))
    if key not in table:
        raise DispatchGap(f"{name}: no table for m={ms} a=({len(a1)},{len(a2)})")
    _evaluate(table[key], sig, slot_syn, {"A1": mask_of(a1), "A2": mask_of(a2)}, out)
    return f"{name} m={ms} a=({len(a1)},{len(a2)})", out, sig


def solve_masks(r: int, syn: Sequence[int]) -> Tuple[Tuple[int, ...], str]:
    """Integer-level solver: column masks per page and the branch label."""
    t = PAGES_FOR_R[r]
    if len(syn) != t:
        raise ParameterError(f"expected {t} syndromes, got {len(syn)}")
    nonzero = [v for v in syn if v]
    if not nonzero:
        return (0,) * t, "all-zero"
    masks, label = _solve_nonzero(r, _pad(r, nonzero, t))
    if len(nonzero) < t:
        label = f"{label} (with {t - len(nonzero)} zero pages)"
    it = iter(masks)
    return tuple(next(it) if v else 0 for v in syn), label


def _solve(H: ParityCheckMatrix, s: Sequence[Syndrome], r: int) -> SupportAssignment:
    if H.r != r:
        raise ParameterError(f"this solver needs r={r}, got r={H.r}")
    for v in s:
        if v.n != r:
            raise DimensionError(f"syndrome {v} is not {r} bits")
    masks, label = solve_masks(r, [v.value for v in s])
    return SupportAssignment(tuple(positions_of(m) for m in masks), label)


def solve_supports_7_3_4(H: ParityCheckMatrix, s: Sequence[Syndrome]) -> SupportAssignment:
    return _solve(H, s, 3)


def solve_supports_15_4_8(H: ParityCheckMatrix, s: Sequence[Syndrome]) -> SupportAssignment:
    return _solve(H, s, 4)


def solve_supports(H: ParityCheckMatrix, s: Sequence[Syndrome]) -> SupportAssignment:
    return _solve(H, s, H.r)


# --- encode / decode ---------------------------------------------------------


def encode_chain(code: PRioCode, pages: Sequence[BitVector]):
    """Supports and the cumulative chain ``c_1 <= ... <= c_t`` for the pages."""
    s = syndromes_from_pages(code, pages)
    a = solve_supports(code.H, s)
    chain, acc = [], 0
    for m in a.masks():
        acc |= m
        chain.append(BitVector.from_int(acc, code.n))
    return a, chain


def prio_encode(code: PRioCode, pages: Sequence[BitVector]) -> CellState:
    _, chain = encode_chain(code, pages)
    return cell_from_chain(chain)


def prio_decode_page(code: PRioCode, cell: CellState, i: int) -> BitVector:
    """Page ``i`` (1-based) from the single read at threshold ``t + 1 - i``."""
    if not 1 <= i <= code.t:
        raise ParameterError(f"page index {i} outside 1..{code.t}")
    if cell.q != code.t + 1 or cell.n != code.n:
        raise DimensionError(f"{code.name} needs {code.n} cells with {code.t + 1} levels")
    return syndrome(code.H, read_threshold(cell, code.t + 1 - i))


def prio_decode(code: PRioCode, cell: CellState) -> List[BitVector]:
    return [prio_decode_page(code, cell, i) for i in range(1, code.t + 1)]
