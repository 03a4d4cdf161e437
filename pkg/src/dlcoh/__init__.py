"""Combinatorial cohomology tables of parabolic Deligne-Lusztig varieties of type A."""

from .partitions import Partition, BetaSet, beta_set, partition_of, d_core, restrictions, partitions
from .cyclo import CycloPolynomial, ZetaSpec, generic_degree, craven_C, craven_delta
from .tables import (
    CohomologyTable, conja_table, pi_variety_table, block_table, triangle_check,
    conjecture1_check, restriction_uniqueness_check,
)
from .braid import BraidWord, garside_nf, v_d_word, j_d_set, periodicity_check

__all__ = [
    "Partition", "BetaSet", "beta_set", "partition_of", "d_core", "restrictions", "partitions",
    "CycloPolynomial", "ZetaSpec", "generic_degree", "craven_C", "craven_delta",
    "CohomologyTable", "conja_table", "pi_variety_table", "block_table", "triangle_check",
    "conjecture1_check", "restriction_uniqueness_check",
    "BraidWord", "garside_nf", "v_d_word", "j_d_set", "periodicity_check",
]

__version__ = "0.1.0"
