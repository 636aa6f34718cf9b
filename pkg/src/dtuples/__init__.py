"""Diophantine m-tuples with the property D(n): verification, construction, search."""
from .arith import isqrt, sqrtmod, square_witness
from .bounds import BoundReport, bennett_gamma_lambda, theorem_bounds
from .errors import (
    CacheError,
    DomainError,
    DTupleError,
    InapplicableBoundError,
    IncompatibleError,
    InputError,
)
from .extension import compute_e, gap_check, gap_lower_bounds, lemma1_defect, regular_fourth
from .families import catalog, d1_quadruple, dsq_triple
from .search import SearchReport, cn_scan, compatibility_pairs, max_tuple
from .sieve import SieveSpec, admissible_residues, gallagher_bound, solve_system
from .tuples import DTuple, compatible, pair_regular_extension, verify

__version__ = "0.1.0"
