"""Combination rules: conjunctive, disjunctive, cautious, bold and the hyper-cautious family."""

from __future__ import annotations

import enum
from functools import reduce
from typing import Sequence

import numpy as np

from .classic import mass_from_sigma, mass_from_v, smets_sigma, smets_v, WeightFunction
from .errors import DomainError
from .isopignistic import (
    IsoCommitment,
    IsoDecomposition,
    PossibilityDistribution,
    decompose,
    reconstruct_tau,
)
from .lattice import EPS_SUM, MassFunction, as_mass, same_frame, validate
from .transforms import subset_mobius, subset_sum, superset_mobius, superset_sum


class FusionOperator(enum.Enum):
    """Binary operators applied to the propensities of the hyper-cautious rules."""

    T_MIN = "t_min"
    T_PROD = "t_prod"
    S_MAX = "s_max"
    S_PROBSUM = "s_probsum"

    def __call__(self, a, b):
        if self is FusionOperator.T_MIN:
            return np.minimum(a, b)
        if self is FusionOperator.T_PROD:
            return a * b
        if self is FusionOperator.S_MAX:
            return np.maximum(a, b)
        return a + b - a * b

    @property
    def conjunctive(self) -> bool:
        return self in (FusionOperator.T_MIN, FusionOperator.T_PROD)

    @classmethod
    def parse(cls, op) -> "FusionOperator":
        if isinstance(op, cls):
            return op
        try:
            return cls(str(op).lower())
        except ValueError:
            raise DomainError(f"unknown fusion operator {op!r}") from None


def _clean(vec: np.ndarray) -> MassFunction:
    # product/inversion round-off can leave -1e-17 entries
    vec = np.where(np.abs(vec) < 1e-15, 0.0, vec)
    return validate(vec)


def conjunctive(m1, m2) -> MassFunction:
    """Unnormalized conjunctive rule: pointwise product of commonalities."""
    m1, m2 = as_mass(m1), as_mass(m2)
    same_frame(m1, m2)
    return _clean(superset_mobius(superset_sum(m1.masses) * superset_sum(m2.masses)))


def disjunctive(m1, m2) -> MassFunction:
    """Disjunctive rule: pointwise product of implicabilities."""
    m1, m2 = as_mass(m1), as_mass(m2)
    same_frame(m1, m2)
    return _clean(subset_mobius(subset_sum(m1.masses) * subset_sum(m2.masses)))


def normalize(m) -> MassFunction:
    """Dempster normalization: drop m(empty) and rescale."""
    m = as_mass(m)
    if m.masses[0] >= 1.0 - EPS_SUM:
        raise DomainError("total conflict: cannot normalize m(empty) = 1")
    vec = m.masses.copy()
    vec[0] = 0.0
    return validate(vec / vec.sum())


def cautious(m1, m2) -> MassFunction:
    """Pointwise minimum of diffidence weights."""
    m1, m2 = as_mass(m1), as_mass(m2)
    same_frame(m1, m2)
    w1, w2 = smets_sigma(m1), smets_sigma(m2)
    w = {F: min(w1[F], w2[F]) for F in w1.values}
    return mass_from_sigma(WeightFunction(m1.frame, "sigma", w))


def bold(m1, m2) -> MassFunction:
    """Pointwise minimum of the dual (disjunctive) weights."""
    m1, m2 = as_mass(m1), as_mass(m2)
    same_frame(m1, m2)
    w1, w2 = smets_v(m1), smets_v(m2)
    w = {F: min(w1[F], w2[F]) for F in w1.values}
    return mass_from_v(WeightFunction(m1.frame, "v", w))


def hyper_cautious_k(ms: Sequence, op) -> MassFunction:
    """k-source hyper-cautious rule in a single pass.

    Propensities are folded with ``op``, commitment ratios are averaged over
    the k sources and the empty set takes 1 - max of the fused propensity.
    Not the same as chaining the binary rule: averaging is not associative.
    """
    op = FusionOperator.parse(op)
    ms = [as_mass(m) for m in ms]
    if len(ms) < 2:
        raise DomainError("hyper-cautious fusion needs at least two mass functions")
    same_frame(*ms)
    parts = [decompose(m, "tau") for m in ms]
    poss = reduce(op, (d.propensity.poss for d in parts))
    poss = np.clip(poss, 0.0, 1.0)
    keys = parts[0].commitment.values.keys()
    tau = {F: sum(d.commitment[F] for d in parts) / len(parts) for F in keys}
    fused = IsoDecomposition(
        PossibilityDistribution(ms[0].frame, poss),
        IsoCommitment("tau", tau),
        1.0 - float(poss.max()),
    )
    return reconstruct_tau(fused)


def hyper_cautious(m1, m2, op) -> MassFunction:
    return hyper_cautious_k([m1, m2], op)


RULES = {
    "ccr": conjunctive,
    "dcr": disjunctive,
    "cautious": cautious,
    "bold": bold,
    "hmin": lambda a, b: hyper_cautious(a, b, FusionOperator.T_MIN),
    "hprod": lambda a, b: hyper_cautious(a, b, FusionOperator.T_PROD),
    "hmax": lambda a, b: hyper_cautious(a, b, FusionOperator.S_MAX),
    "hprobsum": lambda a, b: hyper_cautious(a, b, FusionOperator.S_PROBSUM),
}

HYPER_OPS = {
    "hmin": FusionOperator.T_MIN,
    "hprod": FusionOperator.T_PROD,
    "hmax": FusionOperator.S_MAX,
    "hprobsum": FusionOperator.S_PROBSUM,
}


def combine(rule: str, ms: Sequence) -> MassFunction:
    """Fuse two or more BPAs with a named rule.

    Hyper-cautious rules use their single-pass k-source form; the others
    are associative and folded left to right.
    """
    if rule not in RULES:
        raise DomainError(f"unknown rule {rule!r}; expected one of {sorted(RULES)}")
    if len(ms) < 2:
        raise DomainError("fusion needs at least two mass functions")
    if rule in HYPER_OPS:
        return hyper_cautious_k(ms, HYPER_OPS[rule])
    return reduce(RULES[rule], ms)
