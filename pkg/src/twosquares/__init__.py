"""Finite sequences of integers that are all sums of two squares.

Constructions return :class:`SequenceCertificate` objects carrying an
explicit (a, b) for every term, checkable by integer arithmetic alone.
"""
from .certificate import (
    CertificateError,
    CertificateFormatError,
    SequenceCertificate,
    Term,
)
from .families import (
    consecutive_triple,
    quad_n124,
    solve_x2_plus_2,
    triple_nonzero_17m5,
    upgrade_rep,
)
from .littlewood import (
    DegenerateOffsets,
    NonIntegralSolution,
    ParamSet,
    SingularParams,
    construct,
    dispatch,
    expand_family,
    solve_xy,
)
from .ntcore import (
    Factorization,
    FactorizationTimeout,
    TwoSquareRep,
    factorize,
    has_nonzero_two_square_rep,
    is_prime,
    is_sum_of_two_squares,
    two_square_decompositions,
    verify_rep,
)
from .pell import (
    MalformedSource,
    PellKind,
    PellSolution,
    ap_certificate,
    ap_x_values,
    gen_pell_solutions,
    neg_pell_solutions,
    quint_certificate,
    quint_x_values,
)

__version__ = "0.1.0"
