"""Spectral shape of check-hybrid GLDPC code ensembles.

Weight and stopping-set size growth rates for ensembles whose variable
nodes are length-q repetition codes and whose check nodes mix several
short linear block codes.
"""

from gldpc_spectrum.enumerators import Enumerator, hamming74, spc
from gldpc_spectrum.ensemble import (
    CNType,
    Ensemble,
    design_rate,
    max_weight_fraction,
    normalize_fractions,
)
from gldpc_spectrum.errors import (
    BudgetError,
    ConfigError,
    DomainError,
    NoCrossingError,
    NumericalAssertionError,
)
from gldpc_spectrum.gf2codes import GF2Matrix, bd_ssef, enumerate_wef, map_ssef, rank
from gldpc_spectrum.spectral import (
    SpectrumPoint,
    SymmetryReport,
    asymptotic_growth,
    cardano_ldpc36_inverse,
    growth_rate,
    growth_rate_tanner,
    relative_min_distance,
    symmetry_map,
    symmetry_report,
    weight_fraction,
    weight_fraction_inverse,
    weight_fraction_prime,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "CNType",
    "ConfigError",
    "DomainError",
    "Ensemble",
    "Enumerator",
    "GF2Matrix",
    "NoCrossingError",
    "NumericalAssertionError",
    "SpectrumPoint",
    "SymmetryReport",
    "asymptotic_growth",
    "bd_ssef",
    "cardano_ldpc36_inverse",
    "design_rate",
    "enumerate_wef",
    "growth_rate",
    "growth_rate_tanner",
    "hamming74",
    "map_ssef",
    "max_weight_fraction",
    "normalize_fractions",
    "rank",
    "relative_min_distance",
    "spc",
    "symmetry_map",
    "symmetry_report",
    "weight_fraction",
    "weight_fraction_inverse",
    "weight_fraction_prime",
]
