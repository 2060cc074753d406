"""Smets' diffidence weights (and their disjunctive dual) and Pichon's t-function."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import DecompositionUndefined, DomainError, NotBeliefFunctionError
from .lattice import Frame, MassFunction, as_mass, validate
from .transforms import (
    singleton_plausibility,
    subset_mobius,
    subset_sum,
    superset_mobius,
    superset_sum,
)

EPS_WEIGHT = 1e-12


@dataclass(frozen=True, eq=False)
class WeightFunction:
    """``sigma`` lives on every proper subset (empty set included), ``v`` on every nonempty one."""

    frame: Frame
    kind: str
    values: Mapping[int, float]

    def __post_init__(self):
        if self.kind not in ("sigma", "v"):
            raise DomainError(f"weight kind must be 'sigma' or 'v', got {self.kind!r}")
        values = {int(k): float(v) for k, v in self.values.items()}
        full = self.frame.full
        domain = range(0, full) if self.kind == "sigma" else range(1, full + 1)
        stray = [k for k in values if k not in domain]
        if stray:
            raise DomainError(f"{self.kind} is not defined on subset {stray[0]}")
        bad = [k for k, v in values.items() if not (v > 0 and np.isfinite(v))]
        if bad:
            raise DomainError(f"{self.kind}[{bad[0]}] = {values[bad[0]]} is not a positive finite weight")
        object.__setattr__(self, "values", {k: values.get(k, 1.0) for k in domain})

    def __getitem__(self, bits):
        return self.values[bits]

    def vector(self) -> np.ndarray:
        """Weights as a 2^n vector with 1 on the subset outside the domain."""
        out = np.ones(self.frame.size)
        for k, v in self.values.items():
            out[k] = v
        return out


def smets_sigma(m) -> WeightFunction:
    """Diffidence weights of a non-dogmatic mass function."""
    m = as_mass(m)
    full = m.frame.full
    if m.masses[full] <= EPS_WEIGHT:
        raise DecompositionUndefined("diffidence weights need m(frame) > 0 (non-dogmatic BPA)")
    log_q = np.log(superset_sum(m.masses))
    log_w = -superset_mobius(log_q)
    return WeightFunction(m.frame, "sigma", {F: float(np.exp(log_w[F])) for F in range(full)})


def smets_v(m) -> WeightFunction:
    """Disjunctive dual weights; need m(empty) > 0."""
    m = as_mass(m)
    if m.masses[0] <= EPS_WEIGHT:
        raise DecompositionUndefined("dual weights need m(empty) > 0 (subnormal BPA)")
    log_b = np.log(subset_sum(m.masses))
    log_w = -subset_mobius(log_b)
    return WeightFunction(m.frame, "v", {F: float(np.exp(log_w[F])) for F in range(1, m.frame.full + 1)})


def _weights_to_mass(vec: np.ndarray, what: str) -> MassFunction:
    try:
        return validate(vec)
    except ValueError as exc:
        raise NotBeliefFunctionError(f"{what} weights do not form a belief function: {exc}") from exc


def sigma_to_vector(w: WeightFunction) -> np.ndarray:
    """Unchecked masses of the conjunctive combination of the simple BPAs A^w(A).

    Uses q(C) = product of w(A) over the A that do not contain C.
    """
    if w.kind != "sigma":
        raise DomainError("expected sigma weights")
    log_w = np.log(w.vector())
    log_q = log_w.sum() - superset_sum(log_w)
    return superset_mobius(np.exp(log_q))


def v_to_vector(w: WeightFunction) -> np.ndarray:
    if w.kind != "v":
        raise DomainError("expected v weights")
    log_w = np.log(w.vector())
    log_b = log_w.sum() - subset_sum(log_w)
    return subset_mobius(np.exp(log_b))


def mass_from_sigma(w: WeightFunction) -> MassFunction:
    return _weights_to_mass(sigma_to_vector(w), "sigma")


def mass_from_v(w: WeightFunction) -> MassFunction:
    return _weights_to_mass(v_to_vector(w), "v")


@dataclass(frozen=True, eq=False)
class TFunction:
    frame: Frame
    values: np.ndarray

    def __getitem__(self, bits):
        return self.values[bits]

    @property
    def contour(self) -> np.ndarray:
        return np.array([self.values[1 << i] for i in range(self.frame.n)])


def _central_moments(masses: np.ndarray, pl: np.ndarray) -> np.ndarray:
    # per element: [[1, 1], [-pl, 1 - pl]] acting on (absent, present)
    out = np.array(masses, dtype=float)
    for i, p in enumerate(pl):
        view = out.reshape(-1, 2, 1 << i)
        absent, present = view[:, 0, :].copy(), view[:, 1, :].copy()
        view[:, 0, :] = absent + present
        view[:, 1, :] = -p * absent + (1 - p) * present
    return out


def pichon_t(m) -> TFunction:
    """t(F) = sum_A m(A) prod_{w in F} (1[w in A] - Pl({w})); singletons hold Pl itself."""
    m = as_mass(m)
    pl = singleton_plausibility(m)
    values = _central_moments(m.masses, pl)
    values[0] = 1.0
    for i, p in enumerate(pl):
        values[1 << i] = p
    values.setflags(write=False)
    return TFunction(m.frame, values)


def t_to_vector(t) -> np.ndarray:
    """Unchecked inverse of :func:`pichon_t`; the per-element matrices all have determinant 1."""
    vals = np.array(t.values if isinstance(t, TFunction) else t, dtype=float)
    n = vals.size.bit_length() - 1
    pl = np.array([vals[1 << i] for i in range(n)])
    vals[0] = 1.0
    for i in range(n):
        vals[1 << i] = 0.0
    for i, p in enumerate(pl):
        view = vals.reshape(-1, 2, 1 << i)
        r0, r1 = view[:, 0, :].copy(), view[:, 1, :].copy()
        view[:, 0, :] = (1 - p) * r0 - r1
        view[:, 1, :] = p * r0 + r1
    return vals


def mass_from_t(t) -> MassFunction:
    try:
        return validate(t_to_vector(t))
    except ValueError as exc:
        raise NotBeliefFunctionError(f"t-function does not form a belief function: {exc}") from exc
