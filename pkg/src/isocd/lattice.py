"""Subset indexing, mass-function values and their classification.

A subset F of the frame {w_1, ..., w_n} is an integer whose bit i is set
when w_{i+1} belongs to F, so index 0 is the empty set and 2**n - 1 is
the whole frame.  A mass function is a dense vector over these indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import DomainError, FrameMismatchError, InvalidMassError

MAX_N = 16
EPS_CLAMP = 1e-12
EPS_SUM = 1e-9
ORDER = "binary-lsb-w1"


def popcount(bits: int) -> int:
    return bin(bits).count("1")


@dataclass(frozen=True)
class Frame:
    n: int
    labels: Optional[tuple] = None

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or not 1 <= self.n <= MAX_N:
            raise DomainError(f"frame size must be an integer in [1, {MAX_N}], got {self.n!r}")
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.n or len(set(labels)) != self.n:
                raise DomainError("labels must be distinct and one per element")
            object.__setattr__(self, "labels", labels)

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def elements(self, bits: int) -> list:
        """Element positions (0-based) contained in subset ``bits``."""
        return [i for i in range(self.n) if bits >> i & 1]

    def name(self, bits: int) -> str:
        if bits == 0:
            return "{}"
        labels = self.labels or tuple(f"w{i + 1}" for i in range(self.n))
        return "{" + ",".join(labels[i] for i in self.elements(bits)) + "}"


@lru_cache(maxsize=None)
def _layers(n: int) -> tuple:
    layers = [[] for _ in range(n + 1)]
    for bits in range(1 << n):
        layers[popcount(bits)].append(bits)
    return tuple(tuple(layer) for layer in layers)


@lru_cache(maxsize=None)
def cardinalities(n: int) -> np.ndarray:
    card = np.array([popcount(b) for b in range(1 << n)], dtype=np.int64)
    card.setflags(write=False)
    return card


def _as_n(frame) -> int:
    return frame.n if isinstance(frame, Frame) else int(frame)


def subsets_by_cardinality(frame, k: int) -> tuple:
    """All subset indices with exactly ``k`` elements, in ascending order."""
    n = _as_n(frame)
    if not 0 <= k <= n:
        raise DomainError(f"cardinality {k} outside [0, {n}]")
    return _layers(n)[k]


def children(bits: int) -> list:
    """Subsets obtained by removing exactly one element, ascending."""
    if bits <= 0:
        raise DomainError("the empty set has no children")
    out = []
    rest = bits
    while rest:
        low = rest & -rest
        out.append(bits ^ low)
        rest ^= low
    return sorted(out)


def parents(frame, bits: int) -> list:
    """Subsets obtained by adding exactly one element, ascending."""
    n = _as_n(frame)
    if not 0 <= bits < (1 << n):
        raise DomainError(f"subset index {bits} outside frame of size {n}")
    return [bits | (1 << i) for i in range(n) if not bits >> i & 1]


@dataclass(frozen=True)
class BodyKind:
    normalized: bool
    bayesian: bool
    simple: bool
    non_dogmatic: bool
    consonant: bool


@dataclass(frozen=True, eq=False)
class MassFunction:
    """An immutable, validated mass function.

    Build instances through :func:`validate` (or :meth:`from_dict`); the
    constructor itself checks the invariants too, so an instance is always
    a proper basic probability assignment.
    """

    masses: np.ndarray
    frame: Frame = field(default=None)

    def __post_init__(self):
        arr = _checked(self.masses)
        n = arr.size.bit_length() - 1
        frame = self.frame if self.frame is not None else Frame(n)
        if frame.n != n:
            raise FrameMismatchError(f"vector of length {arr.size} does not match frame of size {frame.n}")
        arr.setflags(write=False)
        object.__setattr__(self, "masses", arr)
        object.__setattr__(self, "frame", frame)

    @property
    def n(self) -> int:
        return self.frame.n

    def __getitem__(self, bits):
        return self.masses[bits]

    def __len__(self):
        return self.masses.size

    def __eq__(self, other):
        if not isinstance(other, MassFunction):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.masses, other.masses)

    def __hash__(self):
        return hash((self.n, self.masses.tobytes()))

    def __repr__(self):
        vals = ", ".join(f"{v:.4g}" for v in self.masses)
        return f"MassFunction(n={self.n}, [{vals}])"

    def focal_sets(self, tol: float = 0.0) -> list:
        return [int(i) for i in np.flatnonzero(self.masses > tol)]

    @property
    def kind(self) -> BodyKind:
        return classify(self)

    @classmethod
    def from_dict(cls, n: int, masses: dict) -> "MassFunction":
        """Build from ``{subset_index: mass}``; missing subsets get 0."""
        vec = np.zeros(1 << n)
        for bits, value in masses.items():
            vec[int(bits)] += value
        return cls(vec)

    @classmethod
    def vacuous(cls, n: int) -> "MassFunction":
        vec = np.zeros(1 << n)
        vec[-1] = 1.0
        return cls(vec)

    @classmethod
    def empty(cls, n: int) -> "MassFunction":
        vec = np.zeros(1 << n)
        vec[0] = 1.0
        return cls(vec)


def _checked(raw, sum_tol: float = EPS_SUM) -> np.ndarray:
    arr = np.array(raw, dtype=float).ravel()
    size = arr.size
    if size < 2 or size & (size - 1):
        raise InvalidMassError(f"length {size} is not a power of two (2^n, n >= 1)")
    if size > 1 << MAX_N:
        raise InvalidMassError(f"frames larger than {MAX_N} elements are not supported")
    if not np.all(np.isfinite(arr)):
        bad = int(np.flatnonzero(~np.isfinite(arr))[0])
        raise InvalidMassError(f"non-finite mass at index {bad}", bad)
    neg = np.flatnonzero(arr < -EPS_CLAMP)
    if neg.size:
        i = int(neg[0])
        raise InvalidMassError(f"negative mass {arr[i]:.6g} at index {i}", i)
    arr[arr < 0] = 0.0
    big = np.flatnonzero(arr > 1.0 + EPS_SUM)
    if big.size:
        i = int(big[0])
        raise InvalidMassError(f"mass {arr[i]:.6g} exceeds 1 at index {i}", i)
    total = arr.sum()
    if abs(total - 1.0) > sum_tol:
        raise InvalidMassError(f"masses sum to {total:.12g}, not 1")
    return arr


def validate(raw, frame: Optional[Frame] = None, sum_tol: float = EPS_SUM) -> MassFunction:
    """Check a raw vector and return it as a :class:`MassFunction`.

    ``sum_tol`` can be relaxed to replay vectors printed with rounded
    decimals; the stored masses are never rescaled.
    """
    if isinstance(raw, MassFunction):
        return raw
    arr = _checked(raw, sum_tol)
    if sum_tol <= EPS_SUM:
        return MassFunction(arr, frame)
    # rounded fixture: skip the strict sum check done by __post_init__
    m = object.__new__(MassFunction)
    arr.setflags(write=False)
    object.__setattr__(m, "masses", arr)
    object.__setattr__(m, "frame", frame if frame is not None else Frame(arr.size.bit_length() - 1))
    return m


def as_mass(m) -> MassFunction:
    return m if isinstance(m, MassFunction) else validate(m)


def same_frame(*ms: MassFunction) -> int:
    ns = {m.n for m in ms}
    if len(ns) != 1:
        raise FrameMismatchError(f"mass functions live on different frames: sizes {sorted(ns)}")
    return ns.pop()


def classify(m, tol: float = 0.0) -> BodyKind:
    """Compute the five classification flags of ``m``.

    Consonance is a pairwise comparability check on the focal sets.
    """
    m = as_mass(m)
    focal = m.focal_sets(tol)
    full = m.frame.full
    consonant = all(a & b in (a, b) for i, a in enumerate(focal) for b in focal[i + 1:])
    return BodyKind(
        normalized=bool(m.masses[0] <= tol),
        bayesian=all(popcount(f) == 1 for f in focal),
        simple=len(focal) == 2 and full in focal,
        non_dogmatic=bool(m.masses[full] > tol),
        consonant=consonant,
    )
