"""End-to-end acceptance checks, one test per criterion.

Each test records a one-line verdict; the lines are printed in the terminal
summary (see ``conftest.py``) and immediately with ``-s``.
"""

import itertools
import math
import time

import numpy as np
import pytest

from priocode import (
    BitVector,
    PRioCode,
    SupportAssignment,
    brute_force_supports,
    build_parity_check,
    cell_from_chain,
    check_solution,
    cross_validate,
    prio_decode,
    prio_encode,
    read_threshold,
    rs322_encode,
    rs322_rio_cell,
    rs322_rio_read,
    sigma_pair,
    sigma_quad,
    sigma_single,
    sigma_triple,
    solve_supports_7_3_4,
    syndromes_from_pages,
    v_set,
    verify_write_guarantee,
)
from priocode import cases
from priocode.cli import sum_rate_table
from priocode.sigma import check_sigma_pair, check_sigma_quad, check_sigma_single, check_sigma_triple

VERDICTS = []

RANDOM_PAGE_SETS = 1_000_000
RANDOM_SEED = 20240229


def record(number, ok, detail):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    VERDICTS.append(line)
    print(line)
    assert ok, line


def bv(text):
    return BitVector.from_string(text)


@pytest.fixture(scope="module")
def small_sweep():
    return cross_validate(PRioCode(3), "exhaustive")


@pytest.fixture(scope="module")
def large_sweep():
    code = PRioCode(4)
    multisets = cross_validate(code, "multisets")
    random = cross_validate(code, "random", seed=RANDOM_SEED, count=RANDOM_PAGE_SETS)
    return multisets, random


def test_criterion_01_small_code_exhaustive(small_sweep):
    code = PRioCode(3)
    H = code.H
    start = time.perf_counter()
    bad = 0
    for vals in itertools.product(range(8), repeat=4):
        pages = [BitVector.from_int(v, 3) for v in vals]
        s = syndromes_from_pages(code, pages)
        if not check_solution(H, s, solve_supports_7_3_4(H, s)):
            bad += 1
        elif prio_decode(code, prio_encode(code, pages)) != pages:
            bad += 1
    elapsed = time.perf_counter() - start
    ok = bad == 0 and small_sweep.ok and small_sweep.instances_checked == 4096 and elapsed < 5
    record(1, ok, f"[7,3,4] 4096 page sets / syndrome tuples, {bad} scalar failures, "
                  f"{len(small_sweep.failures)} sweep failures, {elapsed:.2f} s (+ sweep "
                  f"{small_sweep.elapsed:.2f} s)")


def test_criterion_02_large_code_sweep(large_sweep):
    multisets, random = large_sweep
    elapsed = multisets.elapsed + random.elapsed
    expected_branches = (
        {f"two-repeats m={k[:2]} a=({k[2]},{k[3]})" for k in cases.TWO_GROUPS}
        | {f"three-repeats-independent m={k[:3]} a=({k[3]},{k[4]})"
           for k in cases.THREE_GROUPS_INDEPENDENT}
        | {f"three-repeats-dependent m={k[:3]} a=({k[3]},{k[4]})"
           for k in cases.THREE_GROUPS_DEPENDENT}
        | {f"four-pairs-{v}" for v in "ABC"}
    )
    missing = expected_branches - set(multisets.branches)
    ok = (multisets.ok and random.ok and multisets.instances_checked == math.comb(23, 8)
          and random.instances_checked >= 10**6 and not missing and elapsed < 120)
    record(2, ok, f"[15,4,8] {multisets.instances_checked} multisets + "
                  f"{random.instances_checked} random (seed {RANDOM_SEED}), "
                  f"{len(multisets.failures) + len(random.failures)} failures, "
                  f"{len(expected_branches) - len(missing)}/{len(expected_branches)} table "
                  f"branches hit, {elapsed:.1f} s")


def test_criterion_03_wom_guarantees():
    start = time.perf_counter()
    r3 = verify_write_guarantee(build_parity_check(3), 3)
    t3 = time.perf_counter() - start
    start = time.perf_counter()
    r4 = verify_write_guarantee(build_parity_check(4), 6)
    t4 = time.perf_counter() - start
    ok = r3.guaranteed and r4.guaranteed and t4 < 60
    record(3, ok, f"[7,3,3] states per depth {r3.reachable_states} ({t3:.2f} s); "
                  f"[15,4,6] states per depth {r4.reachable_states} ({t4:.2f} s)")


def test_criterion_04_sum_rates():
    got = [(r["sum_rate"], r["upper_bound"]) for r in sum_rate_table()]
    want = [("1.2857", "2"), ("1.7142", "2.3219"), ("1.6", "2.8073"), ("2.1333", "3.1699")]
    record(4, got == want, f"sum-rate/bound rows {got}")


def test_criterion_05_worked_witnesses():
    H = build_parity_check(3)
    witnesses = [
        ("111,100,110,101", [{7}, {1}, {3}, {5}]),
        ("001,110,100,001", [{4}, {3}, {1}, {2, 6}]),
        ("010,101,010,101", [{2}, {1, 4}, {5, 7}, {3, 6}]),
    ]
    results = []
    for text, supports in witnesses:
        s = [bv(x) for x in text.split(",")]
        results.append(check_solution(H, s, SupportAssignment(tuple(map(frozenset, supports)))))
    record(5, all(results), f"three worked assignments pass the checker: {results}")


def test_criterion_06_v_set_listing():
    H = build_parity_check(3)
    listing = {
        "100": [{1}, {2, 3}, {4, 5}, {6, 7}],
        "010": [{2}, {1, 3}, {4, 6}, {5, 7}],
        "110": [{3}, {1, 2}, {4, 7}, {5, 6}],
        "001": [{4}, {1, 5}, {2, 6}, {3, 7}],
        "101": [{5}, {1, 4}, {2, 7}, {3, 6}],
        "011": [{6}, {1, 7}, {2, 4}, {3, 5}],
        "111": [{7}, {1, 6}, {2, 5}, {3, 4}],
    }
    matches = sum(v_set(H, bv(s)).members() == [frozenset(m) for m in ms]
                  for s, ms in listing.items())
    record(6, matches == 7, f"{matches}/7 V-set families match the listing")


def test_criterion_07_column_permutations():
    start = time.perf_counter()
    counts = {}
    bad = 0
    for r in (3, 4):
        H = build_parity_check(r)
        vals = [BitVector.from_int(v, r) for v in range(1, 1 << r)]
        for s in vals:
            bad += not check_sigma_single(H, s, sigma_single(H, s))
        for s1, s2 in itertools.permutations(vals, 2):
            bad += not check_sigma_pair(H, s1, s2, sigma_pair(H, s1, s2))
        counts[f"r{r} single"] = len(vals)
        counts[f"r{r} pair"] = len(vals) * (len(vals) - 1)
    H = build_parity_check(4)
    vals = [BitVector.from_int(v, 4) for v in range(1, 16)]
    n_triples = n_quads = 0
    for t in itertools.permutations(vals, 3):
        perm, kind = sigma_triple(H, *t)
        bad += not check_sigma_triple(H, *t, perm, kind)
        n_triples += 1
    for q in itertools.permutations(vals, 4):
        perm, kind = sigma_quad(H, *q)
        bad += not check_sigma_quad(H, *q, perm, kind)
        n_quads += 1
    elapsed = time.perf_counter() - start
    ok = bad == 0 and n_triples == 2730 and n_quads == 32760 and elapsed < 60
    record(7, ok, f"{n_triples} triples, {n_quads} quadruples, singles/pairs {counts}, "
                  f"{bad} violations, {elapsed:.1f} s")


def test_criterion_08_threshold_identity():
    rng = np.random.default_rng(8)
    bad = 0
    for n, t in ((7, 4), (15, 8)):
        for _ in range(10_000):
            acc, chain = 0, []
            for _ in range(t):
                acc |= int(rng.integers(0, 1 << n)) & int(rng.integers(0, 1 << n))
                chain.append(BitVector.from_int(acc, n))
            cell = cell_from_chain(chain)
            bad += any(read_threshold(cell, t + 1 - i) != c for i, c in enumerate(chain, 1))
    exhaustive = 0
    vs = [BitVector.from_int(v, 3) for v in range(8)]
    for c1, c2 in itertools.product(vs, repeat=2):
        if c1 <= c2:
            cell = cell_from_chain([c1, c2])
            bad += read_threshold(cell, 2) != c1 or read_threshold(cell, 1) != c2
            exhaustive += 1
    record(8, bad == 0, f"2 x 10000 random chains + {exhaustive} exhaustive (3,2) chains, "
                        f"{bad} violations")


def test_criterion_09_table_fixtures():
    table_two = {"00": ("000", "111"), "01": ("100", "011"),
                 "10": ("010", "101"), "11": ("001", "110")}
    # rows: page 2 data; columns: page 1 data 00, 01, 10, 11
    table_three = {
        "00": ["000", "211", "121", "112"],
        "01": ["100", "200", "021", "012"],
        "10": ["010", "201", "020", "102"],
        "11": ["001", "210", "120", "002"],
    }
    bad = 0
    for d, (first, second) in table_two.items():
        bad += str(rs322_encode(bv(d), bv("000"), 1)) != first
        other = "01" if d != "01" else "10"
        bad += str(rs322_encode(bv(d), bv(table_two[other][0]), 2)) != second
    for p2, row in table_three.items():
        for p1, expected in zip(("00", "01", "10", "11"), row):
            cell = rs322_rio_cell(bv(p1), bv(p2))
            bad += str(cell) != expected
            bad += [str(x) for x in rs322_rio_read(cell)] != [p1, p2]
    record(9, bad == 0, f"8 WOM table entries + 16 RIO cell states, {bad} mismatches "
                        f"(worked example 10/01 -> {rs322_rio_cell(bv('10'), bv('01'))})")


def test_criterion_10_oracle_agreement(small_sweep, large_sweep):
    reports = [small_sweep, *large_sweep]
    oracle_failures = [f for rep in reports for f in rep.failures
                       if f["stage"] in ("oracle", "oracle-check")]
    total = sum(rep.instances_checked for rep in reports)
    H = build_parity_check(3)
    spot = brute_force_supports(H, [bv(x) for x in ("111", "100", "110", "101")])
    ok = not oracle_failures and all(rep.ok for rep in reports) and spot is not None
    record(10, ok, f"oracle feasible and both assignments valid on all {total} instances of "
                   f"criteria 1-2 ({len(oracle_failures)} oracle failures)")
