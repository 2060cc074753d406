"""Belief evolution network: mass flowing down the subset lattice one layer at a time."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

import numpy as np

from .errors import DomainError, FrameMismatchError
from .lattice import Frame, MassFunction, as_mass, children, popcount, subsets_by_cardinality

XI_TOL = 1e-9


@dataclass(frozen=True)
class BeliefEvolutionNetwork:
    """Transfer ratios ``tau[F]`` for |F| >= 2 and split ratios ``xi[(F, child)]``.

    Missing ``tau`` entries mean no transfer; a parent with no ``xi`` entries
    splits uniformly.  A parent with only some entries given is completed
    uniformly over the remaining share.
    """

    frame: Frame
    tau: Mapping[int, float] = field(default_factory=dict)
    xi: Mapping[tuple, float] = field(default_factory=dict)

    def __post_init__(self):
        n = self.frame.n
        tau = {int(k): float(v) for k, v in self.tau.items()}
        for bits, value in tau.items():
            if not 0 <= bits < 1 << n:
                raise DomainError(f"tau key {bits} is not a subset of the frame")
            if popcount(bits) < 2:
                raise DomainError(f"tau is only defined for subsets with >= 2 elements, got {bits}")
            if not 0.0 <= value <= 1.0:
                raise DomainError(f"tau[{bits}] = {value} outside [0, 1]")
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "xi", self._complete_xi(n))

    def _complete_xi(self, n: int) -> dict:
        given = {(int(p), int(c)): float(v) for (p, c), v in self.xi.items()}
        for (p, c), v in given.items():
            if not 0 <= p < 1 << n or popcount(p) < 2 or c not in children(p):
                raise DomainError(f"({p}, {c}) is not a lattice edge with |parent| >= 2")
            if not 0.0 <= v <= 1.0:
                raise DomainError(f"xi[{p}>{c}] = {v} outside [0, 1]")
        xi = {}
        for k in range(2, n + 1):
            for p in subsets_by_cardinality(n, k):
                kids = children(p)
                known = {c: given[(p, c)] for c in kids if (p, c) in given}
                rest = [c for c in kids if c not in known]
                remaining = 1.0 - sum(known.values())
                if rest:
                    if remaining < -XI_TOL:
                        raise DomainError(f"xi ratios out of parent {p} exceed 1")
                    share = max(remaining, 0.0) / len(rest)
                    known.update({c: share for c in rest})
                elif abs(remaining) > XI_TOL:
                    raise DomainError(f"xi ratios out of parent {p} sum to {1 - remaining:.12g}, not 1")
                for c in kids:
                    xi[(p, c)] = known[c]
        return xi

    def tau_of(self, bits: int) -> float:
        return self.tau.get(bits, 0.0)


def ppt_network(frame) -> BeliefEvolutionNetwork:
    """Network whose revision reproduces the pignistic transformation."""
    frame = frame if isinstance(frame, Frame) else Frame(int(frame))
    tau = {F: 1.0 for k in range(2, frame.n + 1) for F in subsets_by_cardinality(frame, k)}
    return BeliefEvolutionNetwork(frame, tau)


def revise(m, net: BeliefEvolutionNetwork) -> MassFunction:
    """Apply the network to ``m`` layer by layer from the whole frame down to pairs."""
    m = as_mass(m)
    if net.frame.n != m.n:
        raise FrameMismatchError(f"network frame has {net.frame.n} elements, mass function {m.n}")
    work = m.masses.copy()
    for k in range(m.n, 1, -1):
        for F in subsets_by_cardinality(m.n, k):
            moved = net.tau_of(F) * work[F]
            if moved == 0.0:
                continue
            work[F] -= moved
            for child in children(F):
                work[child] += net.xi[(F, child)] * moved
    return MassFunction(work, m.frame)


def network_from_json(doc: Mapping) -> BeliefEvolutionNetwork:
    """Parse ``{"n": .., "tau": {"7": ..}, "xi": {"7>3": ..}}``."""
    frame = Frame(int(doc["n"]))
    tau = {int(k): v for k, v in doc.get("tau", {}).items()}
    xi = {}
    for key, v in doc.get("xi", {}).items():
        parent, _, child = str(key).partition(">")
        xi[(int(parent), int(child))] = v
    return BeliefEvolutionNetwork(frame, tau, xi)


def network_to_json(net: BeliefEvolutionNetwork, tau_only: Optional[bool] = False) -> dict:
    doc = {"n": net.frame.n, "tau": {str(k): v for k, v in sorted(net.tau.items())}}
    if not tau_only:
        doc["xi"] = {f"{p}>{c}": v for (p, c), v in sorted(net.xi.items())}
    return doc


def singleton_vector(m) -> np.ndarray:
    m = as_mass(m)
    return np.array([m.masses[1 << i] for i in range(m.n)])
