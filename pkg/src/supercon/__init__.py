"""Exact and modular arithmetic for truncated hypergeometric congruences.

The pieces: `arith` has the residue/cyclotomic scalar types, `gamma` the
p-adic gamma function, `hyper` the series evaluators, `eta` the q-expansion,
`congruences` the checkers and the sweep, and `cli` the command-line front
end.  Everything a caller normally needs is re-exported here.
"""

from .arith import (
    INFINITY,
    MAX_PRECISION,
    OMEGA,
    CycloElem,
    PadicCapped,
    PrimePowerResidue,
    check_odd_prime,
    cyclo_reduce,
    is_prime,
    least_residue,
    primes_in,
    reduce_mod,
    vp,
)
from .congruences import (
    CATALOG,
    CongruenceReport,
    SweepConfig,
    sweep,
    verify_cor_6f5,
    verify_cor_quarter,
    verify_ff1,
    verify_ff2,
    verify_ff3,
    verify_gamma_laws,
    verify_gs,
    verify_kilbourn,
    verify_long_ramakrishna,
    verify_main,
    verify_mccarthy_osburn,
    verify_zudilin,
)
from .errors import (
    AlphaOutOfRange,
    HypothesisViolated,
    LimitExceeded,
    NonInvertible,
    NonUnitDenominator,
    OracleMismatch,
    PoleInRange,
    PrecisionExhausted,
    PrecisionOutOfRange,
    RangeUnsupported,
    SuperconError,
)
from .eta import QSeries, a_p, eta_product_qexp
from .gamma import GammaBatch, gamma_map, gamma_p, gamma_p_batch, pochhammer_gamma, residue_rep
from .hyper import (
    GSParams,
    PfqSpec,
    alpha_window_residue,
    ff1_build,
    gs_lhs,
    gs_rhs,
    pfq_exact,
    pfq_mod,
    pochhammer,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaOutOfRange",
    "CATALOG",
    "CongruenceReport",
    "CycloElem",
    "GammaBatch",
    "GSParams",
    "HypothesisViolated",
    "INFINITY",
    "LimitExceeded",
    "MAX_PRECISION",
    "NonInvertible",
    "NonUnitDenominator",
    "OMEGA",
    "OracleMismatch",
    "PadicCapped",
    "PfqSpec",
    "PoleInRange",
    "PrecisionExhausted",
    "PrecisionOutOfRange",
    "PrimePowerResidue",
    "QSeries",
    "RangeUnsupported",
    "SuperconError",
    "SweepConfig",
    "a_p",
    "alpha_window_residue",
    "check_odd_prime",
    "cyclo_reduce",
    "eta_product_qexp",
    "ff1_build",
    "gamma_map",
    "gamma_p",
    "gamma_p_batch",
    "gs_lhs",
    "gs_rhs",
    "is_prime",
    "least_residue",
    "pfq_exact",
    "pfq_mod",
    "pochhammer",
    "pochhammer_gamma",
    "primes_in",
    "reduce_mod",
    "residue_rep",
    "sweep",
    "verify_cor_6f5",
    "verify_cor_quarter",
    "verify_ff1",
    "verify_ff2",
    "verify_ff3",
    "verify_gamma_laws",
    "verify_gs",
    "verify_kilbourn",
    "verify_long_ramakrishna",
    "verify_main",
    "verify_mccarthy_osburn",
    "verify_zudilin",
    "vp",
]
