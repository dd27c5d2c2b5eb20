"""Parallel RIO codes built from Hamming-code cosets."""

from .cell import CellState, cell_from_chain, read_threshold
from .errors import (
    CapacityExhausted,
    ChainError,
    DimensionError,
    DispatchGap,
    ParameterError,
    PRioError,
)
from .gf2 import MAX_LENGTH, BitVector, disjoint, leq, support, xor
from .hamming import ParityCheckMatrix, VSet, build_parity_check, syndrome, v_set
from .oracle import (
    VerificationReport,
    brute_force_supports,
    cross_validate,
    enumerate_syndrome_multisets,
)
from .prio import (
    PRioCode,
    SupportAssignment,
    check_solution,
    prio_decode,
    prio_decode_page,
    prio_encode,
    solve_supports,
    solve_supports_7_3_4,
    solve_supports_15_4_8,
    syndromes_from_pages,
)
from .sigma import (
    Permutation,
    QuadKind,
    TripleKind,
    sigma_pair,
    sigma_quad,
    sigma_single,
    sigma_triple,
)
from .wom import (
    rs322_decode,
    rs322_encode,
    rs322_rio_cell,
    rs322_rio_read,
    verify_write_guarantee,
    wom_decode,
    wom_encode,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
