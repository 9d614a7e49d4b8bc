"""Exact rates of profit for periodic and randomly mixed Parrondo games."""
from .chain import (
    ChainClassification,
    ChainStructureError,
    Distribution,
    absorption_probability,
    classify,
    stationary,
)
from .closed_form import (
    ZDistribution,
    binom_negbinom_identity_check,
    theorem2_rate,
    z_mean,
    z_parity,
    z_pmf,
    z_sample_alternative,
    z_samples,
)
from .games import (
    GameSpec,
    Pattern,
    PatternSyntaxError,
    PayoffMatrix,
    StochasticMatrix,
    ab_block_pattern,
    build_pA,
    build_pB,
    build_payoff,
    make_game_spec,
    parse_pattern,
    render,
)
from .rates import RateReport, mixture_rate, pattern_rate, profit_increment_vector
from .search import SweepRow, best_gamma, best_s, rho_sweep, sup_demo
from .simulator import SimConfig, SimResult, block_profiles, simulate, simulate_block_profile

__version__ = "0.1.0"
