"""rootmean: exact mean-value tables over polynomial root families.

The engine writes a monic degree-D polynomial in terms of its root-mean
parameters (the mean of all i-fold root products, order i), computes the
exact mean of any derived function over the root family of any other derived
function, discovers every universal linear relation among those means by
exact nullspace computation, and cross-validates everything against an
independent floating-point oracle.
"""

from .exact import ExactRational, PartitionVector, binomial, multinomial, partitions
from .means import PhiKey, PhiResult, phi, phi_table, statistical_moments
from .powersums import gw_coefficient, newton_residual, power_sum_mean
from .relations import (
    RelationVector,
    check_inheritance,
    check_odd_binomial,
    find_relations,
    nullspace,
    relation_space_dim,
)
from .sympoly import (
    Monomial,
    QuasiBinomialVector,
    SymPoly,
    Symbol,
    extend_params,
    quasi_binomial_coeffs,
    root_param,
    truncate_params,
)

__version__ = "0.1.0"

__all__ = [
    "ExactRational",
    "Monomial",
    "PartitionVector",
    "PhiKey",
    "PhiResult",
    "QuasiBinomialVector",
    "RelationVector",
    "SymPoly",
    "Symbol",
    "binomial",
    "check_inheritance",
    "check_odd_binomial",
    "extend_params",
    "find_relations",
    "gw_coefficient",
    "multinomial",
    "newton_residual",
    "nullspace",
    "partitions",
    "phi",
    "phi_table",
    "power_sum_mean",
    "quasi_binomial_coeffs",
    "relation_space_dim",
    "root_param",
    "statistical_moments",
    "truncate_params",
]
