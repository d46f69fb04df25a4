"""Exact verification of the slalom and giant-slalom identities for
Gaussian binomials, their Fibonacci specializations, and their limits:
Euler's pentagonal number theorem and the Rogers-Ramanujan identities.
"""

from .polyring import (
    ONE,
    X,
    ZERO,
    Poly,
    TruncationError,
    geometric_factor,
    poly_add,
    poly_eval_int,
    poly_mul,
    poly_shift,
    poly_sub,
)
from .qbinom import QBinomTable, binomial, gaussian_binomial, gaussian_binomial_pure
from .alpine import (
    ExponentKind,
    IdentityReport,
    IdentityRow,
    amateur_rec,
    amateur_sum,
    exponent,
    gs1_rec,
    gs1_sum,
    gs2_rec,
    gs2_sum,
    slalom_rec,
    slalom_sum,
    verify_identity,
)
from .partitions import (
    Partition,
    PartitionPredicate,
    RRCheck,
    box,
    enumerate_partitions,
    euler_E,
    euler_product,
    iter_partitions,
    kangaroo,
    mod5_product,
    rr_check,
    theta_series,
    weight_poly,
)
from .bijection import (
    MatchReport,
    MatchingError,
    SignedTerm,
    enumerate_terms,
    leftmatch,
    match_term,
    path_area,
    rightmatch,
    verify_matching,
)

__version__ = "0.1.0"
