"""Dempster-Shafer belief functions with isopignistic canonical decomposition."""

from .ben import BeliefEvolutionNetwork, ppt_network, revise
from .classic import mass_from_sigma, mass_from_t, mass_from_v, pichon_t, smets_sigma, smets_v
from .errors import (
    BeliefError,
    DecompositionUndefined,
    DomainError,
    FrameMismatchError,
    InconsistentIsoError,
    InvalidMassError,
    NotBeliefFunctionError,
    NotIsopignisticError,
    UnreachableTargetError,
)
from .fusion import FusionOperator, bold, cautious, combine, conjunctive, disjunctive, hyper_cautious, hyper_cautious_k
from .isopignistic import (
    IsoCommitment,
    IsoDecomposition,
    PossibilityDistribution,
    apply_tau,
    apply_zeta,
    canonicalize_pc,
    consonant_from_possibility,
    decompose,
    isotransform,
    propensity,
    reconstruct,
    reconstruct_tau,
    reconstruct_zeta,
)
from .lattice import Frame, MassFunction, classify, validate
from .measures import MeasureReport, measure
from .transforms import betp, set_transform, shannon_entropy

__version__ = "0.1.0"
