"""Set-function transforms of a mass function and the pignistic transformation.

All lattice sums use the in-place subset (zeta) and superset transforms,
one pass per element, so every transform costs O(n 2^n).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidMassError, NotBeliefFunctionError
from .lattice import EPS_SUM, Frame, MassFunction, as_mass, cardinalities, validate

KINDS = ("bel", "pl", "b", "q")


def _n_of(vec: np.ndarray) -> int:
    return vec.size.bit_length() - 1


def subset_sum(values) -> np.ndarray:
    """out[F] = sum of values[G] over G subset of F."""
    out = np.array(values, dtype=float)
    n = _n_of(out)
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 1, :] += view[:, 0, :]
    return out


def superset_sum(values) -> np.ndarray:
    """out[F] = sum of values[G] over G superset of F."""
    out = np.array(values, dtype=float)
    n = _n_of(out)
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 0, :] += view[:, 1, :]
    return out


def subset_mobius(values) -> np.ndarray:
    """Inverse of :func:`subset_sum`."""
    out = np.array(values, dtype=float)
    n = _n_of(out)
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 1, :] -= view[:, 0, :]
    return out


def superset_mobius(values) -> np.ndarray:
    """Inverse of :func:`superset_sum`."""
    out = np.array(values, dtype=float)
    n = _n_of(out)
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 0, :] -= view[:, 1, :]
    return out


@dataclass(frozen=True, eq=False)
class SetFunction:
    frame: Frame
    kind: str
    values: np.ndarray

    def __getitem__(self, bits):
        return self.values[bits]


def set_transform(m, kind: str) -> SetFunction:
    """Belief, plausibility, implicability or commonality of ``m``.

    ``kind`` is one of ``"bel"``, ``"pl"``, ``"b"``, ``"q"``.
    """
    m = as_mass(m)
    kind = kind.lower()
    if kind == "q":
        values = superset_sum(m.masses)
    elif kind == "b":
        values = subset_sum(m.masses)
    elif kind == "bel":
        values = subset_sum(m.masses) - m.masses[0]
        values[0] = 0.0
    elif kind == "pl":
        b = subset_sum(m.masses)
        # Pl(F) = 1 - b(complement of F)
        values = m.masses.sum() - b[::-1]
        values[0] = 0.0
    else:
        raise DomainError(f"unknown set-function kind {kind!r}; expected one of {KINDS}")
    values.setflags(write=False)
    return SetFunction(m.frame, kind, values)


def _values(f) -> np.ndarray:
    return f.values if isinstance(f, SetFunction) else np.asarray(f, dtype=float)


def _to_mass(vec: np.ndarray) -> MassFunction:
    try:
        return validate(vec)
    except InvalidMassError as exc:
        raise NotBeliefFunctionError(f"not a belief function: {exc}") from exc


def mass_from_q(q) -> MassFunction:
    return _to_mass(superset_mobius(_values(q)))


def mass_from_b(b) -> MassFunction:
    return _to_mass(subset_mobius(_values(b)))


def singleton_plausibility(m) -> np.ndarray:
    """Contour function Pl({w_i}) for each element."""
    m = as_mass(m)
    q = superset_sum(m.masses)
    return np.array([q[1 << i] for i in range(m.n)])


@dataclass(frozen=True, eq=False)
class PignisticDistribution:
    frame: Frame
    probs: np.ndarray
    normalized: bool

    def __getitem__(self, i):
        return self.probs[i]

    def __len__(self):
        return self.probs.size


def _betp_raw(masses: np.ndarray) -> np.ndarray:
    n = _n_of(masses)
    card = cardinalities(n)
    share = np.zeros_like(masses)
    share[1:] = masses[1:] / card[1:]
    return np.array([share[np.arange(masses.size) >> i & 1 == 1].sum() for i in range(n)])


def betp(m, normalize: bool = False) -> PignisticDistribution:
    """Pignistic probability: each focal set's mass split evenly over its elements.

    The empty set is skipped, so an unnormalized BPA yields a distribution
    summing to 1 - m(empty) unless ``normalize`` rescales it.
    """
    m = as_mass(m)
    probs = _betp_raw(m.masses)
    if normalize:
        if m.masses[0] >= 1.0 - EPS_SUM:
            raise DomainError("cannot normalize the pignistic distribution of m(empty) = 1")
        probs = probs / (1.0 - m.masses[0])
    probs.setflags(write=False)
    return PignisticDistribution(m.frame, probs, normalize)


def shannon_entropy(p) -> float:
    """Entropy in bits of a normalized distribution (0 log 0 = 0)."""
    if isinstance(p, PignisticDistribution):
        probs = p.probs
        if not p.normalized and abs(probs.sum() - 1.0) > EPS_SUM:
            raise DomainError("entropy needs a normalized distribution")
    else:
        probs = np.asarray(p, dtype=float)
    if abs(probs.sum() - 1.0) > 1e-3:
        raise DomainError(f"distribution sums to {probs.sum():.6g}, not 1")
    nz = probs[probs > 0]
    return float(-(nz * np.log2(nz)).sum())
