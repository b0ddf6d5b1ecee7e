"""Coherence conversion toolkit for pure states.

Everything works on the diagonal part of a pure state: the probability
vector of squared amplitude moduli in the fixed reference basis.  The
library decides deterministic convertibility (majorization), computes the
optimal stochastic conversion probability, decides catalytic and
entanglement-assisted convertibility, searches for catalysts, and builds
explicit incoherent Kraus channels realizing the deterministic conversions.
"""

from .catalyst_search import (
    CatalystInterval,
    SelfCatalysisResult,
    extend_catalyst_split,
    grid_search_catalyst,
    qubit_interval_d4,
    self_catalysis_order,
)
from .ent_assist import (
    EntAssistVerdict,
    c_r,
    c_s,
    coherence_gain_bound,
    ent_assisted_closure,
    ent_assisted_feasible,
    search_assisting_joint,
)
from .errors import (
    AllZeroError,
    CohcatError,
    DimensionBlowupError,
    DimensionMismatchError,
    DimTooSmallError,
    EpsOutOfRangeError,
    EpsTooLargeError,
    IdenticalStatesError,
    InvalidChannelError,
    MarginalMismatchError,
    NotMajorizedError,
    ZeroEntryInSourceError,
)
from .kraus import (
    ChannelReport,
    KrausSet,
    PureState,
    apply,
    compose,
    qutrit_ground_channel,
    realize_deterministic,
    stochastic_subset_probability,
    verify,
)
from .majorize import Comparison, ComparisonOutcome, compare, interconvertible, majorized_by, prefix_sums
from .renyi import (
    AlphaGrid,
    Decision,
    FeasibilityVerdict,
    catalytic_feasible_closure,
    catalytic_feasible_nonneg,
    catalytic_feasible_strict,
    delta_curve,
    delta_curve_csv,
    normalized_family,
    power_mean,
    renyi_entropy,
    shortcut_check,
)
from .report import ConversionReport, build_report
from .statevec import ProbVector, StateSpec, canonicalize, pad, perturb, tensor, uniform
from .stochastic import (
    MonotoneProfile,
    catalytic_probability,
    enhancement_possible,
    monotone_profile,
    optimal_probability,
)

__version__ = "0.1.0"

__all__ = [
    "AllZeroError",
    "AlphaGrid",
    "CatalystInterval",
    "ChannelReport",
    "CohcatError",
    "Comparison",
    "ComparisonOutcome",
    "ConversionReport",
    "Decision",
    "DimTooSmallError",
    "DimensionBlowupError",
    "DimensionMismatchError",
    "EntAssistVerdict",
    "EpsOutOfRangeError",
    "EpsTooLargeError",
    "FeasibilityVerdict",
    "IdenticalStatesError",
    "InvalidChannelError",
    "KrausSet",
    "MarginalMismatchError",
    "MonotoneProfile",
    "NotMajorizedError",
    "ProbVector",
    "PureState",
    "SelfCatalysisResult",
    "StateSpec",
    "ZeroEntryInSourceError",
    "apply",
    "build_report",
    "c_r",
    "c_s",
    "canonicalize",
    "catalytic_feasible_closure",
    "catalytic_feasible_nonneg",
    "catalytic_feasible_strict",
    "catalytic_probability",
    "coherence_gain_bound",
    "compare",
    "compose",
    "delta_curve",
    "delta_curve_csv",
    "enhancement_possible",
    "ent_assisted_closure",
    "ent_assisted_feasible",
    "extend_catalyst_split",
    "grid_search_catalyst",
    "interconvertible",
    "majorized_by",
    "monotone_profile",
    "normalized_family",
    "optimal_probability",
    "pad",
    "perturb",
    "power_mean",
    "prefix_sums",
    "qubit_interval_d4",
    "qutrit_ground_channel",
    "realize_deterministic",
    "renyi_entropy",
    "search_assisting_joint",
    "self_catalysis_order",
    "shortcut_check",
    "stochastic_subset_probability",
    "tensor",
    "uniform",
    "verify",
]
