"""Command-line front end.

Exit codes: 0 success, 1 a verification found failures, 2 bad usage.
Every subcommand accepts ``--json``; with it, stdout is a single JSON document
on every path, errors included.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from dataclasses import asdict, dataclass
from decimal import ROUND_DOWN, Decimal
from typing import List, Optional, Sequence

from . import sigma as sigma_mod
from .cell import CellState
from .errors import PRioError
from .gf2 import BitVector
from .hamming import build_parity_check
from .oracle import VerificationReport, cross_validate
from .prio import PRioCode, encode_chain, parse_pages, prio_decode, prio_decode_page
from .wom import verify_write_guarantee, wom_decode, wom_encode

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would print and exit on its own
        raise UsageError(f"{self.prog}: {message}")


# --- sum-rate table ----------------------------------------------------------


@dataclass(frozen=True)
class SumRateRow:
    code_name: str
    n: int
    l: int  # noqa: E741
    t: int

    @property
    def sum_rate(self) -> float:
        return self.l * self.t / self.n

    @property
    def upper_bound(self) -> float:
        return math.log2(self.t + 1)


SUM_RATE_ROWS = (
    SumRateRow("[7,3,3] RIO", 7, 3, 3),
    SumRateRow("[7,3,4] P-RIO", 7, 3, 4),
    SumRateRow("[15,4,6] RIO", 15, 4, 6),
    SumRateRow("[15,4,8] P-RIO", 15, 4, 8),
)


def truncate4(x) -> str:
    """Cut (not round) to four decimals and drop trailing zeros: 12/7 -> ``1.7142``."""
    d = Decimal(str(x)).quantize(Decimal("0.0001"), rounding=ROUND_DOWN)
    text = format(d, "f").rstrip("0").rstrip(".")
    return text or "0"


def sum_rate_table() -> List[dict]:
    rows = []
    for row in SUM_RATE_ROWS:
        exact = Decimal(row.l * row.t) / Decimal(row.n)
        rows.append({
            "code": row.code_name, "n": row.n, "l": row.l, "t": row.t,
            "sum_rate": truncate4(exact), "upper_bound": truncate4(row.upper_bound),
        })
    return rows


# --- helpers -----------------------------------------------------------------


def _color(text: str, good: bool) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\033[{32 if good else 31}m{text}\033[0m"


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _bits(text: str, length: int, what: str) -> BitVector:
    v = BitVector.from_string(text)
    if v.n != length:
        raise UsageError(f"{what} must be {length} bits, got {text!r}")
    return v


def _code(r: int) -> PRioCode:
    return PRioCode(r)


# --- prio --------------------------------------------------------------------


def cmd_encode(args) -> int:
    code = _code(args.r)
    pages = parse_pages(code, args.pages)
    assignment, chain = encode_chain(code, pages)
    from .cell import cell_from_chain

    cell = cell_from_chain(chain)
    decoded = prio_decode(code, cell)
    ok = list(decoded) == list(pages)
    payload = {
        "code": code.name, "pages": [str(p) for p in pages], "cell": str(cell),
        "levels": list(cell.levels),
        "supports": [sorted(s) for s in assignment.supports], "branch": assignment.case,
        "decoded": [str(p) for p in decoded], "roundtrip": ok,
    }
    lines = [f"cell state: {cell}",
             f"supports:   {[sorted(s) for s in assignment.supports]} ({assignment.case})"]
    for i, (p, d) in enumerate(zip(pages, decoded), 1):
        lines.append(f"page {i}: {p} -> read {d} {_color('ok' if p == d else 'MISMATCH', p == d)}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAILED


def cmd_decode(args) -> int:
    code = _code(args.r)
    cell = CellState.from_string(args.cell, code.t + 1)
    if args.page is not None:
        page = prio_decode_page(code, cell, args.page)
        _emit(args, {"code": code.name, "cell": str(cell), "page": args.page, "data": str(page)},
              str(page))
    else:
        pages = prio_decode(code, cell)
        _emit(args, {"code": code.name, "cell": str(cell), "pages": [str(p) for p in pages]},
              "\n".join(f"page {i}: {p}" for i, p in enumerate(pages, 1)))
    return EXIT_OK


def cmd_verify(args) -> int:
    code = _code(args.r)
    reports: List[VerificationReport] = []
    if args.exhaustive:
        reports.append(cross_validate(code, "exhaustive"))
    if args.multisets:
        reports.append(cross_validate(code, "multisets"))
    if args.random:
        if args.seed is None:
            raise UsageError("--random needs an explicit --seed")
        reports.append(cross_validate(code, "random", seed=args.seed, count=args.random))
    if not reports:
        raise UsageError("choose at least one of --exhaustive, --multisets, --random N")
    total = reports[0]
    for rep in reports[1:]:
        total = total.merge(rep)
    payload = total.to_json()
    payload["code"] = code.name
    status = _color("PASS" if total.ok else "FAIL", total.ok)
    text = (f"{code.name} {total.scope}: {payload['passed']}/{payload['total']} passed "
            f"in {payload['elapsed_seconds']} s {status}")
    for f in payload["failures"][:10]:
        text += f"\n  {f['stage']}: {' '.join(f['syndromes'])}: {f['detail']}"
    _emit(args, payload, text)
    return EXIT_OK if total.ok else EXIT_FAILED


# --- wom ---------------------------------------------------------------------


def cmd_wom_encode(args) -> int:
    H = build_parity_check(args.r)
    d = _bits(args.data, H.r, "--data")
    state = _bits(args.state, H.n, "--state") if args.state else BitVector.zeros(H.n)
    new = wom_encode(H, d, state)
    _emit(args, {"state": str(state), "data": str(d), "new_state": str(new)}, str(new))
    return EXIT_OK


def cmd_wom_decode(args) -> int:
    H = build_parity_check(args.r)
    state = _bits(args.state, H.n, "--state")
    d = wom_decode(H, state)
    _emit(args, {"state": str(state), "data": str(d)}, str(d))
    return EXIT_OK


def cmd_wom_verify(args) -> int:
    H = build_parity_check(args.r)
    rep = verify_write_guarantee(H, args.writes)
    verdict = _color("guaranteed" if rep.guaranteed else "NOT guaranteed", rep.guaranteed)
    text = [f"[{H.n},{H.r},{args.writes}] coset WOM: {verdict}",
            f"  most writes guaranteed: {rep.max_guaranteed_writes}",
            f"  guarantee-preserving states per depth: {rep.reachable_states}",
            f"  minimum-weight encoder alone: "
            f"{'guaranteed' if rep.greedy_guaranteed else 'fails'}"]
    if rep.counterexample:
        text.append(f"  counterexample: {rep.counterexample}")
    if rep.greedy_counterexample:
        text.append(f"  encoder counterexample: {rep.greedy_counterexample}")
    _emit(args, rep.to_json(), "\n".join(text))
    return EXIT_OK if rep.guaranteed else EXIT_FAILED


# --- misc ----------------------------------------------------------------------


def cmd_sigma(args) -> int:
    H = build_parity_check(args.r)
    syn = [_bits(s, H.r, "syndrome") for s in args.syndromes.split(",")]
    info = sigma_mod.describe(H, syn)
    lines = [f"sigma = {info['sigma']}"]
    if info["kind"]:
        lines[0] += f"  kind {info['kind']}" + (f" tau={info['tau']}" if info["tau"] else "")
    for lay in info["layouts"]:
        lines.append(f"V({lay['syndrome']}) = {lay['columns']}  at sigma-positions "
                     f"{lay['sigma_positions']}")
    _emit(args, info, "\n".join(lines))
    return EXIT_OK


def cmd_sumrates(args) -> int:
    rows = sum_rate_table()
    text = [f"{'code':<16}{'sum-rate':>10}{'upper bound':>14}"]
    text += [f"{r['code']:<16}{r['sum_rate']:>10}{r['upper_bound']:>14}" for r in rows]
    _emit(args, {"rows": rows}, "\n".join(text))
    return EXIT_OK


def cmd_matrix(args) -> int:
    H = build_parity_check(args.r)
    _emit(args, H.to_json(), "\n".join(H.rows()))
    return EXIT_OK


# --- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")

    p = _Parser(prog="priocode", description="Parallel RIO codes over Hamming cosets.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    prio = sub.add_parser("prio", help="parallel multi-page encode/decode/verify")
    psub = prio.add_subparsers(dest="action", required=True, parser_class=_Parser)
    e = psub.add_parser("encode", parents=[common], help="encode t pages into cell levels")
    e.add_argument("--r", type=int, choices=(3, 4), required=True)
    e.add_argument("--pages", required=True, help="comma-separated bit strings, e.g. 111,011,101,000")
    e.set_defaults(func=cmd_encode)
    d = psub.add_parser("decode", parents=[common], help="read pages back from a cell state")
    d.add_argument("--r", type=int, choices=(3, 4), required=True)
    d.add_argument("--cell", required=True, help="digit string such as 3020104")
    d.add_argument("--page", type=int, help="page index (default: all pages)")
    d.set_defaults(func=cmd_decode)
    v = psub.add_parser("verify", parents=[common], help="cross-validate solver against the oracle")
    v.add_argument("--r", type=int, choices=(3, 4), required=True)
    v.add_argument("--exhaustive", action="store_true", help="every syndrome tuple (r=3)")
    v.add_argument("--multisets", action="store_true", help="one tuple per syndrome multiset")
    v.add_argument("--random", type=int, metavar="N", default=0, help="N random page sets")
    v.add_argument("--seed", type=int, help="seed for --random (required with it)")
    v.set_defaults(func=cmd_verify)

    wom = sub.add_parser("wom", help="sequential coset WOM coding")
    wsub = wom.add_subparsers(dest="action", required=True, parser_class=_Parser)
    we = wsub.add_parser("encode", parents=[common], help="write a datum on top of a state")
    we.add_argument("--r", type=int, choices=(2, 3, 4, 5, 6), required=True)
    we.add_argument("--data", required=True)
    we.add_argument("--state", help="current cells (default: erased)")
    we.set_defaults(func=cmd_wom_encode)
    wd = wsub.add_parser("decode", parents=[common], help="datum stored in a state")
    wd.add_argument("--r", type=int, choices=(2, 3, 4, 5, 6), required=True)
    wd.add_argument("--state", required=True)
    wd.set_defaults(func=cmd_wom_decode)
    wv = wsub.add_parser("verify", parents=[common], help="decide a write guarantee")
    wv.add_argument("--r", type=int, choices=(3, 4), required=True)
    wv.add_argument("--writes", type=int, required=True)
    wv.set_defaults(func=cmd_wom_verify)

    sg = sub.add_parser("sigma", help="column permutations")
    ssub = sg.add_subparsers(dest="action", required=True, parser_class=_Parser)
    ss = ssub.add_parser("show", parents=[common], help="print sigma and its V-set layouts")
    ss.add_argument("--r", type=int, choices=(3, 4), required=True)
    ss.add_argument("--syndromes", required=True, help="1 to 4 comma-separated syndromes")
    ss.set_defaults(func=cmd_sigma)

    sr = sub.add_parser("sumrates", parents=[common], help="sum-rate versus upper bound")
    sr.set_defaults(func=cmd_sumrates)

    mx = sub.add_parser("matrix", help="parity-check matrices")
    msub = mx.add_subparsers(dest="action", required=True, parser_class=_Parser)
    ms = msub.add_parser("show", parents=[common], help="print the rows of H_r")
    ms.add_argument("--r", type=int, choices=(2, 3, 4, 5, 6), required=True)
    ms.set_defaults(func=cmd_matrix)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        return args.func(args)
    except (UsageError, PRioError) as exc:
        if want_json:
            print(json.dumps({"error": str(exc), "type": type(exc).__name__,
                              "exit_code": EXIT_USAGE}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
