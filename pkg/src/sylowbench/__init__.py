"""Explicit permutation-group computations around Sylow numbers."""

from .arith import (candidate_scan, evaluate_candidate, frobenius_pseudo_filter,
                    legendre_valuation, mhall_product_test, phall_solvable_test)
from .catalog import builtin, parse_catalog, resolve
from .errors import (CapExceeded, CycleParseError, DegreeMismatch, IndexCapExceeded,
                     NonDivisorOrder, NotAbelianSylow, NotASubgroup, NotCyclicSylow2,
                     OrbitCapExceeded, PreconditionFailed, SylowBenchError, SylowNotPrimeOrder)
from .groups import (Caps, PermGroup, centralizer, coset_action, group_order, normalizer,
                     orbit_and_stabilizer, subgroups_of_order)
from .perm import Permutation, compose, element_order, inverse, parity, parse_cycles
from .pipeline import DerivationTrace, Verdict, prove
from .sylow import (brodkey_pair, count_sylow, cyc2_complement, find_sylow, frobenius_counts,
                    nc_check, p_core_and_kernel, verify_centalt)
from .trace_check import validate_trace

__version__ = "0.1.0"
