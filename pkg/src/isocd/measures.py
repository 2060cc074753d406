"""Specificity measures, including the split into propensity and commitment specificity."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .errors import DomainError
from .isopignistic import PossibilityDistribution, consonant_from_possibility, decompose, propensity
from .lattice import EPS_SUM, as_mass, cardinalities
from .transforms import betp, shannon_entropy

EPS_DENOM = 1e-12


def _require_normalized(m):
    m = as_mass(m)
    if m.masses[0] > EPS_SUM:
        raise DomainError(f"specificity needs a normalized BPA, got m(empty) = {m.masses[0]:.6g}")
    return m


def yager_specificity(m) -> float:
    """Sum of m(F) / |F| over nonempty F."""
    m = _require_normalized(m)
    card = cardinalities(m.n)
    # fsum: correctly rounded, so the result does not depend on term order
    return math.fsum(m.masses[1:] / card[1:])


def possibility_specificity(poss) -> float:
    """Specificity of a possibility distribution as the telescoping sum of its level cuts."""
    values = poss.poss if isinstance(poss, PossibilityDistribution) else np.asarray(poss, dtype=float)
    levels = np.append(np.sort(values)[::-1], 0.0)
    steps = levels[:-1] - levels[1:]
    return math.fsum(steps / np.arange(1, values.size + 1))


def propensity_specificity(m) -> float:
    m = _require_normalized(m)
    return possibility_specificity(propensity(m))


def commitment_specificity(m) -> Optional[float]:
    """Committed mass relative to the largest possible commitment; ``None`` when undefined.

    The denominator is the total distance (in lattice layers) the consonant
    mass would travel to reach singletons; it vanishes for a deterministic
    BPA, where the measure has no meaning.
    """
    m = _require_normalized(m)
    d = decompose(m, "zeta")
    base = consonant_from_possibility(d.propensity)
    card = cardinalities(m.n)
    multi = card >= 2
    denom = float(((card[multi] - 1) * base.masses[multi]).sum())
    if denom < EPS_DENOM:
        return None
    return float(sum(d.commitment.values.values()) / denom)


@dataclass(frozen=True)
class MeasureReport:
    yager: float
    propensity_spec: float
    commitment_spec: Optional[float]
    entropy_bits: float

    def to_dict(self) -> dict:
        out = asdict(self)
        if out["commitment_spec"] is None:
            out["commitment_spec"] = "undefined"
        return out


def measure(m) -> MeasureReport:
    m = _require_normalized(m)
    return MeasureReport(
        yager=yager_specificity(m),
        propensity_spec=propensity_specificity(m),
        commitment_spec=commitment_specificity(m),
        entropy_bits=shannon_entropy(betp(m, normalize=True)),
    )
