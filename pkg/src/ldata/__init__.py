"""Numerical toolkit for L-data.

An L-datum packages arithmetic coefficients, an archimedean kernel, and a
multiplicity function into the triple that parametrizes an explicit
formula.  This package builds such data for concrete L-functions, verifies
the explicit-formula identity against zero tables, computes the degree and
analytic conductor, runs low-degree classification diagnostics, and
evaluates nonlinear exponential twists and gamma-factor asymptotics.
"""

from .classifier import (
    CharacterMatch,
    ClassificationVerdict,
    classify,
    degree_gate,
    detect_periodicity,
    match_character,
    triviality_diagnostic,
    vanishing_order_gate,
)
from .coefficient_algebra import (
    CoefficientStream,
    exp_transform,
    growth_diagnostics,
    linear_combination,
    log_transform,
    vonmangoldt_stream,
    vonmangoldt_values,
)
from .errors import (
    CoverageError,
    DomainError,
    FitError,
    LDataError,
    NonPrimitiveCharacterError,
    NormalizationError,
    PoleError,
    QuadratureError,
    ResonanceError,
    SpecDocumentError,
    StripError,
    SupportError,
    ZeroTableError,
)
from .explicit_formula import EFReport, arithmetic_side, verify, zero_side
from .instances import (
    DirichletCharacter,
    build_dirichlet,
    build_from_spec,
    build_zeta,
    bundled_zeta_zeros,
    character_group,
    parse_zero_table,
    primitive_characters,
)
from .ldatum_core import (
    GammaSpec,
    LDatum,
    MultiplicityEntry,
    ZeroData,
    axiom_report,
    combine,
    conductor,
    degree,
    degree_numeric,
    kernel_eval,
    positivity_report,
)
from .special_functions import (
    StirlingSeries,
    digamma,
    gamma_r_logderiv,
    log_gamma,
    stirling_log_gamma,
)
from .test_functions import (
    QuadratureResult,
    TestFunction,
    integrate_adaptive,
    make_bump,
    transform_h,
    transform_h_many,
)
from .twists import (
    GammaAsymptotics,
    TwistSpec,
    delta_shift,
    g_factor,
    gamma_asymptotics,
    log_gamma_factor,
    s_sum,
    twist_sum,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
