"""Isopignistic transformation and canonical decomposition.

A mass function is split into a *propensity* (a possibility distribution
over the elements, computed from the pignistic probability) and a
*commitment* describing how mass must move, layer by layer on the subset
lattice, to turn the consonant BPA of that possibility distribution into
the original one.  The commitment comes in two forms:

* ``zeta``: the amount of mass each subset F with |F| >= 2 sends to its
  children (split evenly).  Negative amounts flow upward, i.e. F pulls
  |zeta| / |F| from each child.
* ``tau``: the same moves expressed as ratios in [-1, 1].  A positive ratio
  is the share of F's current mass pushed down; a negative ratio is the
  share of F's smallest child taken from every child.

Both forms are applied with a forward sweep (largest subsets first) for
downward moves and a backward sweep (smallest subsets first, ascending
index inside a layer) for upward moves.  The backward order matters for
``tau`` because a ratio refers to the current minimum child mass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import (
    DomainError,
    FrameMismatchError,
    InconsistentIsoError,
    InvalidMassError,
    NotIsopignisticError,
    UnreachableTargetError,
)
from .lattice import (
    EPS_SUM,
    Frame,
    MassFunction,
    as_mass,
    children,
    popcount,
    same_frame,
    subsets_by_cardinality,
    validate,
)
from .transforms import betp

FORMS = ("zeta", "tau")
# amounts below this are float residue, not transfers
ZERO_FLOW = 1e-13
TAU_SLACK = 1e-9


@dataclass(frozen=True, eq=False)
class PossibilityDistribution:
    frame: Frame
    poss: np.ndarray

    def __post_init__(self):
        poss = np.array(self.poss, dtype=float).ravel()
        if poss.size != self.frame.n:
            raise FrameMismatchError(f"{poss.size} possibility degrees for a frame of size {self.frame.n}")
        if np.any(poss < -EPS_SUM) or np.any(poss > 1 + EPS_SUM):
            raise DomainError("possibility degrees must lie in [0, 1]")
        poss = np.clip(poss, 0.0, 1.0)
        poss.setflags(write=False)
        object.__setattr__(self, "poss", poss)

    @classmethod
    def of(cls, values) -> "PossibilityDistribution":
        values = np.asarray(values, dtype=float).ravel()
        return cls(Frame(values.size), values)

    @property
    def normal(self) -> bool:
        return bool(abs(self.poss.max() - 1.0) <= EPS_SUM)

    def __getitem__(self, i):
        return self.poss[i]

    def __len__(self):
        return self.poss.size


@dataclass(frozen=True, eq=False)
class IsoCommitment:
    """Commitment values keyed by subset index, one per subset with >= 2 elements."""

    form: str
    values: Mapping[int, float]

    def __post_init__(self):
        if self.form not in FORMS:
            raise DomainError(f"commitment form must be one of {FORMS}, got {self.form!r}")
        values = {int(k): float(v) for k, v in self.values.items()}
        for bits in values:
            if popcount(bits) < 2:
                raise DomainError(f"commitment is only defined on subsets with >= 2 elements, got {bits}")
        if self.form == "tau":
            bad = [k for k, v in values.items() if not -1.0 - TAU_SLACK <= v <= 1.0 + TAU_SLACK]
            if bad:
                raise DomainError(f"tau[{bad[0]}] = {values[bad[0]]} outside [-1, 1]")
        object.__setattr__(self, "values", values)

    def __getitem__(self, bits):
        return self.values.get(bits, 0.0)

    def negated(self) -> "IsoCommitment":
        return IsoCommitment(self.form, {k: -v for k, v in self.values.items()})

    def nonzero(self, tol: float = 0.0) -> dict:
        return {k: v for k, v in self.values.items() if abs(v) > tol}


@dataclass(frozen=True, eq=False)
class IsoDecomposition:
    propensity: PossibilityDistribution
    commitment: IsoCommitment
    empty_mass: float

    @property
    def frame(self) -> Frame:
        return self.propensity.frame

    @property
    def form(self) -> str:
        return self.commitment.form

    def vector(self) -> np.ndarray:
        """The isopignistic function as a 2^n vector (empty set, singletons, commitment)."""
        n = self.frame.n
        out = np.zeros(1 << n)
        out[0] = self.empty_mass
        for i in range(n):
            out[1 << i] = self.propensity.poss[i]
        for bits, v in self.commitment.values.items():
            out[bits] = v
        return out

    @classmethod
    def from_vector(cls, vec, form: str) -> "IsoDecomposition":
        vec = np.asarray(vec, dtype=float).ravel()
        n = vec.size.bit_length() - 1
        if vec.size != 1 << n or n < 1:
            raise DomainError(f"isopignistic vector length {vec.size} is not 2^n")
        frame = Frame(n)
        poss = PossibilityDistribution(frame, [vec[1 << i] for i in range(n)])
        commitment = {F: vec[F] for F in range(vec.size) if popcount(F) >= 2}
        return cls(poss, IsoCommitment(form, commitment), float(vec[0]))


def _full_commitment(n: int, values: Mapping[int, float]) -> dict:
    return {F: float(values.get(F, 0.0)) for k in range(2, n + 1) for F in subsets_by_cardinality(n, k)}


def propensity(m) -> PossibilityDistribution:
    """Possibility degree of w_j = sum over i of min(BetP(w_i), BetP(w_j))."""
    m = as_mass(m)
    p = betp(m).probs
    poss = np.minimum(p[:, None], p[None, :]).sum(axis=0)
    return PossibilityDistribution(m.frame, np.minimum(poss, 1.0))


def _chain_order(poss: np.ndarray) -> list:
    # descending possibility, ties by ascending element index
    return sorted(range(poss.size), key=lambda i: (-poss[i], i))


def consonant_from_possibility(poss) -> MassFunction:
    """Consonant BPA whose contour function is ``poss``; m(empty) = 1 - max(poss)."""
    if not isinstance(poss, PossibilityDistribution):
        poss = PossibilityDistribution.of(poss)
    n = poss.frame.n
    pi = poss.poss
    order = _chain_order(pi)
    levels = [pi[i] for i in order] + [0.0]
    vec = np.zeros(1 << n)
    vec[0] = 1.0 - levels[0]
    if abs(vec[0]) < ZERO_FLOW:
        # a propensity summed to 1 - 2e-16 is still normal
        vec[0] = 0.0
    chain = 0
    for t, i in enumerate(order):
        chain |= 1 << i
        vec[chain] = levels[t] - levels[t + 1]
    return MassFunction(vec, poss.frame)


def same_pignistic(m1, m2, tol: float = 1e-9) -> bool:
    m1, m2 = as_mass(m1), as_mass(m2)
    same_frame(m1, m2)
    return bool(np.max(np.abs(betp(m1).probs - betp(m2).probs)) <= tol)


def isotransform(m1, m2, tol: float = 1e-6) -> tuple:
    """Commitment moving ``m1`` onto ``m2`` inside their isopignistic domain.

    Returns ``(tau, zeta)``.  The amount attached to a subset F is the mass
    it must shed once every larger subset has made its move, including the
    upward pulls that are only executed in the backward sweep.  With that
    accounting the amounts satisfy, for every F,

        m2(F) = m1(F) - zeta(F) + sum over parents P of zeta(P) / |P|

    so they compose additively and negate into the inverse transformation.
    """
    m1, m2 = as_mass(m1), as_mass(m2)
    n = same_frame(m1, m2)
    if not same_pignistic(m1, m2, tol):
        raise NotIsopignisticError("the two mass functions have different pignistic probabilities")
    target = m2.masses
    work = m1.masses.copy()
    pending = np.zeros_like(work)
    zeta, tau = {}, {}

    for k in range(n, 1, -1):
        for F in subsets_by_cardinality(n, k):
            z = work[F] + pending[F] - target[F]
            if abs(z) <= ZERO_FLOW:
                z = 0.0
            zeta[F] = z
            tau[F] = 0.0
            if z > 0:
                tau[F] = z / work[F]
                work[F] -= z
                for c in children(F):
                    work[c] += z / k
            elif z < 0:
                for c in children(F):
                    pending[c] += z / k

    for k in range(2, n + 1):
        for F in subsets_by_cardinality(n, k):
            z = zeta[F]
            if z >= 0:
                continue
            kids = children(F)
            d = min(work[c] for c in kids)
            if d <= 0 or -z / k > d + TAU_SLACK:
                raise UnreachableTargetError(f"subset {F} cannot pull {-z:.6g} from children holding at least {d:.6g}")
            tau[F] = max(z / (k * d), -1.0)
            work[F] -= z
            for c in kids:
                work[c] += z / k
            if min(work[c] for c in kids) < -TAU_SLACK:
                raise UnreachableTargetError(f"negative intermediate mass below subset {F}")

    residual = np.max(np.abs(work - target))
    if residual > max(EPS_SUM, n * tol):
        raise UnreachableTargetError(f"transformation ends {residual:.3g} away from the target")
    return IsoCommitment("tau", tau), IsoCommitment("zeta", zeta)


def _finish(work: np.ndarray, frame: Frame, what: str) -> MassFunction:
    try:
        return validate(work, frame)
    except InvalidMassError as exc:
        raise InconsistentIsoError(f"{what} does not yield a BPA: {exc}") from exc


def apply_zeta(m, zeta) -> MassFunction:
    """Move mass by the amounts in ``zeta`` (largest subsets first)."""
    m = as_mass(m)
    values = zeta.values if isinstance(zeta, IsoCommitment) else zeta
    work = m.masses.copy()
    for k in range(m.n, 1, -1):
        for F in subsets_by_cardinality(m.n, k):
            z = values.get(F, 0.0)
            if z == 0.0:
                continue
            work[F] -= z
            for c in children(F):
                work[c] += z / k
    return _finish(work, m.frame, "isotransformation function")


def tau_to_vector(m, tau) -> np.ndarray:
    """Unchecked result of moving mass by the ratios in ``tau``.

    Downward pushes run first (largest subsets first), then upward pulls
    (smallest subsets first, ascending index inside a layer).
    """
    m = as_mass(m)
    values = tau.values if isinstance(tau, IsoCommitment) else tau
    n = m.n
    work = m.masses.copy()
    for k in range(n, 1, -1):
        for F in subsets_by_cardinality(n, k):
            r = values.get(F, 0.0)
            if r > 0:
                # transfer amount taken from the mass before the update
                moved = r * work[F]
                work[F] -= moved
                for c in children(F):
                    work[c] += moved / k
    for k in range(2, n + 1):
        for F in subsets_by_cardinality(n, k):
            r = values.get(F, 0.0)
            if r < 0:
                kids = children(F)
                d = min(work[c] for c in kids)
                work[F] -= d * r * k
                for c in kids:
                    work[c] += d * r
    return work


def apply_tau(m, tau) -> MassFunction:
    m = as_mass(m)
    return _finish(tau_to_vector(m, tau), m.frame, "isotransformation ratio")


def decompose(m, form: str = "zeta") -> IsoDecomposition:
    """Propensity plus commitment (in ``form``) of ``m``."""
    if form not in FORMS:
        raise DomainError(f"form must be one of {FORMS}, got {form!r}")
    m = as_mass(m)
    poss = propensity(m)
    base = consonant_from_possibility(poss)
    tau, zeta = isotransform(base, m, tol=1e-6)
    return IsoDecomposition(poss, tau if form == "tau" else zeta, float(m.masses[0]))


def decompose_both(m) -> tuple:
    m = as_mass(m)
    poss = propensity(m)
    tau, zeta = isotransform(consonant_from_possibility(poss), m, tol=1e-6)
    empty = float(m.masses[0])
    return IsoDecomposition(poss, tau, empty), IsoDecomposition(poss, zeta, empty)


def _base_of(d: IsoDecomposition, check: float) -> MassFunction:
    expected = 1.0 - float(d.propensity.poss.max())
    if abs(d.empty_mass - expected) > check:
        raise InconsistentIsoError(
            f"empty-set mass {d.empty_mass:.6g} differs from 1 - max possibility = {expected:.6g}"
        )
    return consonant_from_possibility(d.propensity)


def reconstruct_zeta(d: IsoDecomposition) -> MassFunction:
    if d.form != "zeta":
        raise DomainError("reconstruct_zeta needs a decomposition in zeta form")
    return apply_zeta(_base_of(d, 1e-6), d.commitment)


def reconstruct_tau(d: IsoDecomposition) -> MassFunction:
    if d.form != "tau":
        raise DomainError("reconstruct_tau needs a decomposition in tau form")
    return apply_tau(_base_of(d, 1e-6), d.commitment)


def reconstruct(d: IsoDecomposition) -> MassFunction:
    return reconstruct_tau(d) if d.form == "tau" else reconstruct_zeta(d)


def bounds(poss) -> tuple:
    """Least committed (consonant) and most committed (Bayesian) BPAs sharing ``poss``."""
    lower = consonant_from_possibility(poss)
    n = lower.n
    upper = apply_tau(lower, _full_commitment(n, {F: 1.0 for F in range(1 << n)}))
    return lower, upper


def canonicalize_pc(d: IsoDecomposition) -> IsoDecomposition:
    """Replace a ratio map by the canonical ratio of the BPA it reconstructs."""
    return decompose(reconstruct_tau(d), "tau")


def full_commitment(n: int, form: str, values: Mapping[int, float] = None) -> IsoCommitment:
    """A commitment with an explicit entry for every subset of >= 2 elements."""
    return IsoCommitment(form, _full_commitment(n, values or {}))
