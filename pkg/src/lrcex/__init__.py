"""Exact Littlewood-Richardson coefficients, Kronecker-quiver semi-invariants
and log-concavity counterexample families."""

from .families import (
    ComparisonRecord,
    RectangleSequence,
    construct_D,
    construct_E,
    counterexample_report,
    horn_count_two_rows,
    horn_nonvanishing_two_rows,
    kostka_family,
    log_concavity_check,
    okounkov_family,
    parabolic_kostka,
    remark_identity_check,
)
from .lr import (
    LRFilling,
    enumerate_lr_fillings,
    fit_polynomial,
    is_lattice_word,
    is_lr_filling,
    lr_coefficient,
    multi_lr_coefficient,
    stretched_values,
)
from .partition import Partition, SkewShape, conjugate, parse_partition, skew, stretch
from .quiver import (
    Quiver,
    euler_form,
    embed,
    kronecker_quiver,
    kronecker_si_dim,
    kronecker_si_dim_general,
    paper_quiver_K4star,
    paper_quiver_T434,
    weight_of,
)

__version__ = "0.1.0"
