"""Combinatorial neural codes under the asymmetric discrepancy metric."""
from .bounds import (
    BoundStatus,
    ChannelParams,
    OptimalityReport,
    channel_r,
    classify_optimality,
    hamming_check,
    plotkin_check,
    singleton_check,
)
from .boolean import (
    BooleanFunction,
    EvaluationSet,
    WalshSpectrum,
    autocorrelation,
    code_from_functions,
    delta_via_sums,
    is_bent,
    parse_anf,
    restricted_min_discrepancy,
    support,
    walsh,
)
from .constructions import (
    PredictedParams,
    VerificationReport,
    construction_a,
    construction_b,
    construction_c,
    hadamard_code,
    puncture_first,
    sylvester_hadamard,
    verify,
)
from .errors import CNCodeError
from .gf2 import FieldCtx, FieldElement, field_new, kerdock_function, kerdock_set
from .metric import (
    Code,
    DiscrepancyPair,
    DiscrepancyProfile,
    Word,
    delta_r,
    discrepancy_pair,
    hamming_distance,
    min_discrepancy,
    min_hamming,
    profile,
)
from .ratio import Ratio, format_ratio, parse_ratio

__version__ = "0.1.0"
