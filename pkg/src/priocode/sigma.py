"""Permutations of column indices that line up several V-sets at once.

For ``H_r`` with ``n = 2^r - 1`` columns, each builder returns a bijection
``sigma`` on ``1..n`` such that, for every input syndrome ``s``, the family
``V(s)`` is laid out on sigma-positions by a fixed XOR rule: there is a
position ``m`` (the *mask* of ``s``) with ``V(s) = {{sigma(m)}} ∪
{{sigma(j), sigma(j ^ m)} : j < j ^ m, j != m}``.

* one syndrome: mask 1
* two syndromes: masks 1, 2
* three syndromes, ``s1 ^ s2 != s3``: masks 1, 2, 4;  ``s1 ^ s2 == s3``: masks 1, 2, 3
* four syndromes: independent -> 1, 2, 4, 8;  a 3-term relation under a
  reordering ``tau`` -> 1, 2, 3, 4 on the reordered syndromes;
  ``s1 ^ s2 == s3 ^ s4`` -> 1, 2, 4, 7

Construction follows the existence proofs step by step.  Each step either
takes the smallest unused index (a *free* step) or is forced by an XOR
relation with an earlier step.  Forced steps never collide for admissible
inputs; should one ever do so, the builder backtracks over the free steps and
logs that it had to.
"""

from __future__ import annotations

import enum
import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import DimensionError, DispatchGap, ParameterError
from .gf2 import BitVector
from .hamming import ParityCheckMatrix, Syndrome, v_set

log = logging.getLogger(__name__)


class Permutation:
    """Bijection on ``1..n``; ``perm(j)`` gives the image of ``j``."""

    __slots__ = ("_images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ParameterError(f"not a permutation of 1..{n}: {images}")
        self._images = images

    def __call__(self, j: int) -> int:
        if not 1 <= j <= len(self._images):
            raise ParameterError(f"position {j} outside 1..{len(self._images)}")
        return self._images[j - 1]

    @property
    def images(self) -> Tuple[int, ...]:
        return self._images

    def __len__(self) -> int:
        return len(self._images)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        return f"Permutation({self._images})"


class TripleKind(enum.Enum):
    A = "A"  # s1 ^ s2 != s3
    B = "B"  # s1 ^ s2 == s3


@dataclass(frozen=True)
class QuadKind:
    """Classification of four distinct nonzero syndromes.

    ``tau`` is a 1-based reordering; it is the identity unless ``variant`` is
    ``"B"``, where ``s[tau[0]] ^ s[tau[1]] == s[tau[2]]``.
    """

    variant: str
    tau: Tuple[int, int, int, int] = (1, 2, 3, 4)


# --- step programs ---------------------------------------------------------
#
# A program lists, for sigma-positions 1..n in order, how alpha_k is obtained:
#   ("col", i)      alpha_k is the column equal to syndrome i
#   ("free",)       smallest unused index
#   ("xor", i, k')  alpha_k = syndrome i XOR alpha_k'   (h_alpha = s_i + h_alpha_k')

Step = Tuple


def _blocks(n: int, start: int, size: int, head: Dict[int, Step]) -> List[Step]:
    """Steps for positions ``start..n`` grouped into blocks of ``size``.

    ``head`` maps a block start to its step; by default blocks start free.
    Within a block of four, offsets follow ``+1 = s1 ^ b``, ``+2 = s2 ^ b``,
    ``+3 = s1 ^ (b+2)``; within a block of two, ``+1 = s1 ^ b``.
    """
    steps: List[Step] = []
    for b in range(start, n + 1, size):
        steps.append(head.get(b, ("free",)))
        if size == 2:
            steps.append(("xor", 0, b))
        else:
            steps += [("xor", 0, b), ("xor", 1, b), ("xor", 0, b + 2)]
    return steps


def _program_single(n: int) -> List[Step]:
    return [("col", 0)] + _blocks(n, 2, 2, {})


def _program_pair(n: int) -> List[Step]:
    return [("col", 0), ("col", 1), ("xor", 0, 2)] + _blocks(n, 4, 4, {})


def _program_four(head: Dict[int, Step]) -> List[Step]:
    return [("col", 0), ("col", 1), ("xor", 0, 2)] + _blocks(15, 4, 4, head)


# r = 4 programs; syndrome indices are 0-based into the (possibly reordered) list
_PROGRAMS_R4 = {
    "triple-A": _program_four({4: ("col", 2), 12: ("xor", 2, 8)}),
    "triple-B": _program_four({}),
    "quad-A": _program_four({4: ("col", 2), 8: ("col", 3), 12: ("xor", 2, 8)}),
    "quad-B": _program_four({4: ("col", 3), 12: ("xor", 3, 8)}),
    "quad-C": _program_four({4: ("col", 2), 12: ("xor", 2, 8)}),
}

MASKS = {
    "single": (1,),
    "pair": (1, 2),
    "triple-A": (1, 2, 4),
    "triple-B": (1, 2, 3),
    "quad-A": (1, 2, 4, 8),
    "quad-B": (1, 2, 3, 4),
    "quad-C": (1, 2, 4, 7),
}


def _run(program: List[Step], syn: Tuple[int, ...], n: int) -> Tuple[int, ...]:
    alpha: List[int] = []
    used = 0
    greedy = [True]

    def forced(step: Step) -> int:
        if step[0] == "col":
            return syn[step[1]]
        return syn[step[1]] ^ alpha[step[2] - 1]

    def go(k: int) -> bool:
        nonlocal used
        if k == len(program):
            return True
        step = program[k]
        if step[0] == "free":
            cands: Iterator[int] = (j for j in range(1, n + 1) if not used >> j & 1)
        else:
            cands = iter((forced(step),))
        first = True
        for j in cands:
            if not first:
                greedy[0] = False
            first = False
            if not 1 <= j <= n or used >> j & 1:
                continue
            alpha.append(j)
            used |= 1 << j
            if go(k + 1):
                return True
            alpha.pop()
            used &= ~(1 << j)
        return False

    if not go(0):
        raise DispatchGap(f"no permutation exists for syndromes {syn}")
    if not greedy[0]:
        log.warning("sigma construction for %s needed backtracking", syn)
    return tuple(alpha)


@lru_cache(maxsize=None)
def sigma_images(name: str, syn: Tuple[int, ...], r: int) -> Tuple[int, ...]:
    """Images ``(sigma(1), ..., sigma(n))`` for a program name and int syndromes."""
    n = (1 << r) - 1
    if name == "single":
        program = _program_single(n)
    elif name == "pair":
        program = _program_pair(n)
    else:
        program = _PROGRAMS_R4[name]
    return _run(program, syn, n)


def classify_triple(s1: int, s2: int, s3: int) -> TripleKind:
    return TripleKind.B if s1 ^ s2 == s3 else TripleKind.A


def _independent(values: Sequence[int]) -> bool:
    for k in range(1, len(values) + 1):
        for combo in itertools.combinations(values, k):
            acc = 0
            for v in combo:
                acc ^= v
            if acc == 0:
                return False
    return True


@lru_cache(maxsize=None)
def classify_quad(s: Tuple[int, int, int, int]) -> QuadKind:
    """Relation first (B, scanning ``tau`` lexicographically), then C, then A."""
    for tau in itertools.permutations(range(4)):
        if s[tau[0]] ^ s[tau[1]] == s[tau[2]]:
            return QuadKind("B", tuple(t + 1 for t in tau))
    if s[0] ^ s[1] == s[2] ^ s[3]:
        return QuadKind("C")
    if _independent(s):
        return QuadKind("A")
    raise DispatchGap(f"unclassified quadruple {s}")


# --- public builders --------------------------------------------------------


def _ints(H: ParityCheckMatrix, syndromes: Sequence[Syndrome]) -> Tuple[int, ...]:
    out = []
    for s in syndromes:
        if not isinstance(s, BitVector):
            raise ParameterError(f"expected a BitVector syndrome, got {s!r}")
        if s.n != H.r:
            raise DimensionError(f"syndrome length {s.n} does not match r={H.r}")
        if s.is_zero():
            raise ParameterError("syndromes must be nonzero")
        out.append(s.value)
    if len(set(out)) != len(out):
        raise ParameterError("syndromes must be pairwise distinct")
    return tuple(out)


def _need_r4(H: ParityCheckMatrix) -> None:
    if H.r != 4:
        raise ParameterError(f"this construction is defined for r=4 only, got r={H.r}")


def sigma_single(H: ParityCheckMatrix, s: Syndrome) -> Permutation:
    return Permutation(sigma_images("single", _ints(H, [s]), H.r))


def sigma_pair(H: ParityCheckMatrix, s1: Syndrome, s2: Syndrome) -> Permutation:
    return Permutation(sigma_images("pair", _ints(H, [s1, s2]), H.r))


def sigma_triple(
    H: ParityCheckMatrix, s1: Syndrome, s2: Syndrome, s3: Syndrome
) -> Tuple[Permutation, TripleKind]:
    _need_r4(H)
    syn = _ints(H, [s1, s2, s3])
    kind = classify_triple(*syn)
    return Permutation(sigma_images(f"triple-{kind.value}", syn, 4)), kind


def sigma_quad(
    H: ParityCheckMatrix, s1: Syndrome, s2: Syndrome, s3: Syndrome, s4: Syndrome
) -> Tuple[Permutation, QuadKind]:
    _need_r4(H)
    syn = _ints(H, [s1, s2, s3, s4])
    kind = classify_quad(syn)
    ordered = tuple(syn[t - 1] for t in kind.tau)
    return Permutation(sigma_images(f"quad-{kind.variant}", ordered, 4)), kind


# --- pattern layouts and validators -----------------------------------------


def layout(mask: int, n: int) -> List[Tuple[int, ...]]:
    """Sigma-positions of V(s) for a syndrome with the given mask, singleton first."""
    pairs = [(j, j ^ mask) for j in range(1, n + 1) if j != mask and j < j ^ mask]
    return [(mask,), *pairs]


def check_layout(
    H: ParityCheckMatrix,
    perm: Permutation,
    syndromes: Sequence[Syndrome],
    masks: Sequence[int],
) -> bool:
    """True iff each ``V(syndromes[i])`` equals the layout for ``masks[i]`` under ``perm``."""
    if len(perm) != H.n or len(syndromes) != len(masks):
        return False
    for s, mask in zip(syndromes, masks):
        expected = set(map(frozenset, v_set(H, s).members()))
        got = {frozenset(perm(j) for j in group) for group in layout(mask, H.n)}
        if got != expected:
            return False
    return True


def check_sigma_single(H: ParityCheckMatrix, s: Syndrome, perm: Permutation) -> bool:
    return check_layout(H, perm, [s], MASKS["single"])


def check_sigma_pair(
    H: ParityCheckMatrix, s1: Syndrome, s2: Syndrome, perm: Permutation
) -> bool:
    return check_layout(H, perm, [s1, s2], MASKS["pair"])


def check_sigma_triple(
    H: ParityCheckMatrix, s1: Syndrome, s2: Syndrome, s3: Syndrome,
    perm: Permutation, kind: TripleKind,
) -> bool:
    if kind is not classify_triple(s1.value, s2.value, s3.value):
        return False
    return check_layout(H, perm, [s1, s2, s3], MASKS[f"triple-{kind.value}"])


def check_sigma_quad(
    H: ParityCheckMatrix, s1: Syndrome, s2: Syndrome, s3: Syndrome, s4: Syndrome,
    perm: Permutation, kind: QuadKind,
) -> bool:
    syn = [s1, s2, s3, s4]
    if kind.variant == "B":
        a, b, c, _ = (syn[t - 1] for t in kind.tau)
        if a.value ^ b.value != c.value:
            return False
    elif kind.variant == "C":
        if s1.value ^ s2.value != s3.value ^ s4.value:
            return False
    elif not _independent([s.value for s in syn]):
        return False
    ordered = [syn[t - 1] for t in kind.tau]
    return check_layout(H, perm, ordered, MASKS[f"quad-{kind.variant}"])


def describe(H: ParityCheckMatrix, syndromes: Sequence[Syndrome]) -> dict:
    """Sigma and its V-set layouts for one to four syndromes (debug aid)."""
    k = len(syndromes)
    kind: Optional[str] = None
    tau = (1, 2, 3, 4)
    if k == 1:
        perm, name = sigma_single(H, *syndromes), "single"
    elif k == 2:
        perm, name = sigma_pair(H, *syndromes), "pair"
    elif k == 3:
        perm, tk = sigma_triple(H, *syndromes)
        name, kind = f"triple-{tk.value}", tk.value
    elif k == 4:
        perm, qk = sigma_quad(H, *syndromes)
        name, kind, tau = f"quad-{qk.variant}", qk.variant, qk.tau
    else:
        raise ParameterError("give between one and four syndromes")
    ordered = [syndromes[t - 1] for t in tau[:k]] if k == 4 else list(syndromes)
    layouts = []
    for s, mask in zip(ordered, MASKS[name]):
        layouts.append({
            "syndrome": str(s),
            "sigma_positions": [list(g) for g in layout(mask, H.n)],
            "columns": [sorted(perm(j) for j in g) for g in layout(mask, H.n)],
        })
    return {"sigma": list(perm.images), "kind": kind, "tau": list(tau) if k == 4 else None,
            "layouts": layouts}
