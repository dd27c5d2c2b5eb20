"""Brute-force support search and the cross-validation engine.

The search is deliberately independent of the constructive solver: it derives
its candidate supports by scanning column pairs of the matrix, and it knows
nothing about permutations or case tables.  Candidates are restricted to
weight one or two, so "infeasible" here means infeasible within pairs only.
"""

from __future__ import annotations

import itertools
import logging
import math
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import ParameterError
from .gf2 import BitVector, positions_of
from .hamming import ParityCheckMatrix, Syndrome, build_parity_check, syndrome_table
from .prio import PRioCode, SupportAssignment, check_solution, solve_masks

log = logging.getLogger(__name__)

INFEASIBLE = "infeasible-within-pairs"


@lru_cache(maxsize=None)
def _candidates(r: int) -> Dict[int, Tuple[int, ...]]:
    """Masks of weight <= 2 realizing each nonzero syndrome, singleton first."""
    H = build_parity_check(r)
    cols = [c.value for c in H.columns]
    out: Dict[int, List[int]] = {v: [] for v in range(1, 1 << r)}
    for j, c in enumerate(cols):
        out[c].append(1 << j)
    for (j1, c1), (j2, c2) in itertools.combinations(enumerate(cols), 2):
        if c1 != c2:
            out[c1 ^ c2].append((1 << j1) | (1 << j2))
    return {v: tuple(ms) for v, ms in out.items()}


def _search_masks(r: int, syn: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """Backtracking over values, most copies first; ``None`` when nothing fits."""
    cands = _candidates(r)
    counts = Counter(v for v in syn if v)
    order = sorted(counts, key=lambda v: (-counts[v], v))
    chosen: Dict[int, Tuple[int, ...]] = {}

    def place(k: int, used: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        free = [m for m in cands[v] if not m & used]
        for combo in itertools.combinations(free, counts[v]):
            acc = 0
            clash = False
            for m in combo:
                if acc & m:
                    clash = True
                    break
                acc |= m
            if clash:
                continue
            chosen[v] = combo
            if place(k + 1, used | acc):
                return True
        return False

    if not place(0, 0):
        return None
    nxt = {v: iter(ms) for v, ms in chosen.items()}
    return tuple(next(nxt[v]) if v else 0 for v in syn)


def brute_force_supports(H: ParityCheckMatrix, s: Sequence[Syndrome]) -> Optional[SupportAssignment]:
    """First disjoint weight-<=2 assignment in search order, or ``None``."""
    masks = _search_masks(H.r, [v.value for v in s])
    if masks is None:
        return None
    result = SupportAssignment(tuple(positions_of(m) for m in masks), "oracle")
    assert check_solution(H, s, result)
    return result


def enumerate_syndrome_multisets(r: int, t: int) -> Iterator[Tuple[Syndrome, ...]]:
    """One sorted representative per multiset of ``t`` syndromes (zero included)."""
    if r not in (3, 4):
        raise ParameterError(f"r must be 3 or 4, got {r}")
    for combo in itertools.combinations_with_replacement(range(1 << r), t):
        yield tuple(BitVector.from_int(v, r) for v in combo)


def multiset_count(r: int, t: int) -> int:
    return math.comb((1 << r) + t - 1, t)


# --- reports -----------------------------------------------------------------


@dataclass
class VerificationReport:
    instances_checked: int = 0
    failures: List[Dict[str, object]] = field(default_factory=list)
    elapsed: float = 0.0
    scope: str = ""
    branches: Dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> int:
        return self.instances_checked - len({tuple(f["syndromes"]) for f in self.failures})

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """Combine two partial reports; the result does not depend on merge order."""
        branches = dict(self.branches)
        for k, v in other.branches.items():
            branches[k] = branches.get(k, 0) + v
        failures = sorted(self.failures + other.failures,
                          key=lambda f: (f["syndromes"], f["stage"], f["detail"]))
        scopes = sorted({s for s in (self.scope, other.scope) if s})
        return VerificationReport(
            instances_checked=self.instances_checked + other.instances_checked,
            failures=failures,
            elapsed=self.elapsed + other.elapsed,
            scope="+".join(scopes),
            branches=dict(sorted(branches.items())),
        )

    def to_json(self, max_failures: int = 50) -> dict:
        return {
            "scope": self.scope,
            "total": self.instances_checked,
            "passed": self.passed,
            "failed": self.instances_checked - self.passed,
            "elapsed_seconds": round(self.elapsed, 3),
            "branches": self.branches,
            "failures": self.failures[:max_failures],
        }


# --- cross validation --------------------------------------------------------


def _batch_check(r: int, syn: np.ndarray, masks: np.ndarray) -> np.ndarray:
    """Per row: supports realize syndromes, are disjoint, and the cells read back.

    The read-back builds the cell levels from the cumulative chain and decodes
    every page through its own threshold, exactly as the device would.
    """
    n = (1 << r) - 1
    t = syn.shape[1]
    table = np.asarray(syndrome_table(n), dtype=np.int64)
    ok = (table[masks] == syn).all(axis=1)
    weights = np.zeros(masks.shape[0], dtype=np.int64)
    union = np.zeros(masks.shape[0], dtype=np.int64)
    for i in range(t):
        weights += np.bitwise_count(masks[:, i].astype(np.uint64)).astype(np.int64)
        union |= masks[:, i]
    ok &= np.bitwise_count(union.astype(np.uint64)).astype(np.int64) == weights
    ok &= (np.bitwise_count(masks.astype(np.uint64)) <= 2).all(axis=1)
    # cell levels from the chain c_i = x_1 | ... | x_i
    chain = np.bitwise_or.accumulate(masks, axis=1)
    bits = (chain[:, :, None] >> np.arange(n)) & 1
    levels = bits.sum(axis=1)
    pages = np.bitwise_xor.accumulate(syn, axis=1)
    weight_of_cell = 1 << np.arange(n)
    for i in range(1, t + 1):
        read = ((levels >= t + 1 - i) * weight_of_cell).sum(axis=1)
        ok &= table[read] == pages[:, i - 1]
    return ok


def _validate_batch(r: int, batch: Sequence[Tuple[int, ...]], report: VerificationReport) -> None:
    t = len(batch[0])
    rows, oracle_rows, solved = [], [], []
    for syn in batch:
        report.instances_checked += 1
        try:
            masks, label = solve_masks(r, syn)
        except Exception as exc:  # a solver crash is a finding, not a reason to stop
            report.failures.append({"syndromes": _fmt(r, syn), "stage": "solve",
                                    "detail": f"{type(exc).__name__}: {exc}"})
            masks, label = None, ""
        label = label.split(" (")[0]
        if masks is not None:
            report.branches[label] = report.branches.get(label, 0) + 1
        oracle = _search_masks(r, syn)
        if oracle is None:
            report.failures.append({"syndromes": _fmt(r, syn), "stage": "oracle",
                                    "detail": INFEASIBLE})
        else:
            oracle_rows.append((syn, oracle))
        if masks is not None:
            rows.append((syn, masks, label))
    if rows:
        syn_arr = np.array([s for s, _, _ in rows], dtype=np.int64).reshape(-1, t)
        mask_arr = np.array([m for _, m, _ in rows], dtype=np.int64).reshape(-1, t)
        for (s, m, label), good in zip(rows, _batch_check(r, syn_arr, mask_arr)):
            if not good:
                report.failures.append({"syndromes": _fmt(r, s), "stage": "constructive",
                                        "detail": f"{label}: supports {_fmt_masks(m)} fail "
                                                  "the check or the read-back"})
    if oracle_rows:
        syn_arr = np.array([s for s, _ in oracle_rows], dtype=np.int64).reshape(-1, t)
        mask_arr = np.array([m for _, m in oracle_rows], dtype=np.int64).reshape(-1, t)
        for (s, m), good in zip(oracle_rows, _batch_check(r, syn_arr, mask_arr)):
            if not good:
                report.failures.append({"syndromes": _fmt(r, s), "stage": "oracle-check",
                                        "detail": f"supports {_fmt_masks(m)} invalid"})


def _fmt(r: int, syn: Sequence[int]) -> List[str]:
    return [str(BitVector.from_int(v, r)) for v in syn]


def _fmt_masks(masks: Sequence[int]) -> List[List[int]]:
    return [sorted(positions_of(m)) for m in masks]


def _run(r: int, instances, scope: str, batch_size: int = 4096) -> VerificationReport:
    report = VerificationReport(scope=scope)
    start = time.perf_counter()
    batch: List[Tuple[int, ...]] = []
    for syn in instances:
        batch.append(syn)
        if len(batch) == batch_size:
            _validate_batch(r, batch, report)
            batch = []
            if report.instances_checked % (batch_size * 25) == 0:
                log.info("%s: %d instances checked", scope, report.instances_checked)
    if batch:
        _validate_batch(r, batch, report)
    report.elapsed = time.perf_counter() - start
    report.branches = dict(sorted(report.branches.items()))
    return report


def random_page_syndromes(r: int, t: int, count: int, seed: int,
                          chunk: int = 1 << 16) -> Iterator[Tuple[int, ...]]:
    """Syndrome tuples of ``count`` uniform random ordered page sets."""
    rng = np.random.default_rng(seed)
    left = count
    while left:
        k = min(chunk, left)
        pages = rng.integers(0, 1 << r, size=(k, t), dtype=np.int64)
        prev = np.concatenate([np.zeros((k, 1), dtype=np.int64), pages[:, :-1]], axis=1)
        for row in (pages ^ prev).tolist():
            yield tuple(row)
        left -= k


def cross_validate(code: PRioCode, scope: str = "multisets", *,
                   seed: Optional[int] = None, count: int = 0) -> VerificationReport:
    """Validate the constructive solver against the oracle over a scope.

    ``"exhaustive"`` covers every ordered syndrome tuple (``r=3`` only),
    ``"multisets"`` one sorted tuple per multiset, and ``"random"`` ``count``
    uniform page sets drawn from ``seed``.
    """
    r, t = code.r, code.t
    if scope == "exhaustive":
        if r != 3:
            raise ParameterError("exhaustive scope is only tractable for r=3")
        return _run(r, itertools.product(range(1 << r), repeat=t), scope)
    if scope == "multisets":
        return _run(r, itertools.combinations_with_replacement(range(1 << r), t), scope)
    if scope == "random":
        if seed is None:
            raise ParameterError("random scope needs an explicit seed")
        if count < 1:
            raise ParameterError("random scope needs a positive count")
        return _run(r, random_page_syndromes(r, t, count, seed), f"random(seed={seed})")
    raise ParameterError(f"unknown scope {scope!r}")
