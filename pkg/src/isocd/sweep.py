"""Reconstruction sweeps: vary decomposition values and record whether a BPA comes back.

Three decompositions are compared.  The isopignistic ratio map always
reconstructs a valid mass function when its values stay in [-1, 1];
diffidence weights and t-functions edited the same way often do not.
Invalid reconstructions are data here, not errors.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .classic import WeightFunction, sigma_to_vector, smets_sigma, pichon_t, t_to_vector
from .errors import DomainError, InvalidMassError
from .generate import rng_from
from .io import fixed
from .isopignistic import consonant_from_possibility, decompose, tau_to_vector
from .lattice import as_mass, popcount, validate

SWEEP_KINDS = ("iso_tau", "sigma", "t")
DEFAULT_RANGES = {"iso_tau": (-1.0, 1.0), "sigma": (0.0, 2.0), "t": (-1.0, 1.0)}


@dataclass(frozen=True)
class SweepSpec:
    kind: str
    targets: tuple
    lo: float = None
    hi: float = None
    steps: int = 41

    def __post_init__(self):
        if self.kind not in SWEEP_KINDS:
            raise DomainError(f"sweep kind must be one of {SWEEP_KINDS}, got {self.kind!r}")
        lo, hi = DEFAULT_RANGES[self.kind]
        object.__setattr__(self, "lo", lo if self.lo is None else float(self.lo))
        object.__setattr__(self, "hi", hi if self.hi is None else float(self.hi))
        object.__setattr__(self, "targets", tuple(int(t) for t in self.targets))
        if not self.lo < self.hi:
            raise DomainError(f"sweep range needs lo < hi, got [{self.lo}, {self.hi}]")
        if int(self.steps) < 2:
            raise DomainError("a sweep needs at least 2 steps")
        if not self.targets:
            raise DomainError("a sweep needs at least one target subset")
        for t in self.targets:
            if popcount(t) < 2:
                raise DomainError(f"sweep targets must have at least two elements, got subset {t}")

    @property
    def grid(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, int(self.steps))


@dataclass
class SweepRow:
    value: float
    masses: np.ndarray
    valid: bool


@dataclass
class TrialReport:
    kind: str
    trials: int
    invalid: int
    examples: list = field(default_factory=list)


def is_valid(vec) -> bool:
    try:
        validate(vec)
    except InvalidMassError:
        return False
    return True


def _reconstructor(kind: str, base):
    """Base decomposition values plus a function turning edited values into raw masses."""
    base = as_mass(base)
    if kind == "iso_tau":
        d = decompose(base, "tau")
        start = consonant_from_possibility(d.propensity)
        values = dict(d.commitment.values)
        return values, lambda v: tau_to_vector(start, v)
    if kind == "sigma":
        w = smets_sigma(base)
        return dict(w.values), lambda v: sigma_to_vector(WeightFunction(base.frame, "sigma", v))
    t = pichon_t(base).values
    return dict(enumerate(t.tolist())), lambda v: t_to_vector([v[k] for k in range(base.frame.size)])


def _edit(values: dict, targets, x: float) -> dict:
    out = dict(values)
    for t in targets:
        if t not in out:
            raise DomainError(f"subset {t} is not part of this decomposition")
        out[t] = float(x)
    return out


def _attempt(rebuild, values: dict, kind: str) -> np.ndarray:
    if kind == "sigma" and min(values.values()) <= 0:
        # a zero weight has no reconstruction at all
        return None
    return rebuild(values)


def sweep(spec: SweepSpec, base) -> list:
    values, rebuild = _reconstructor(spec.kind, base)
    rows = []
    for x in spec.grid:
        vec = _attempt(rebuild, _edit(values, spec.targets, x), spec.kind)
        if vec is None:
            vec = np.full(len(as_mass(base).masses), np.nan)
        rows.append(SweepRow(float(x), vec, bool(np.all(np.isfinite(vec))) and is_valid(vec)))
    return rows


def sweep_csv(rows: list, digits: int = 6) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    size = len(rows[0].masses) if rows else 0
    writer.writerow(["value"] + [f"m{k}" for k in range(size)] + ["valid"])
    for row in rows:
        cells = [fixed(v, digits) for v in row.masses]
        writer.writerow([fixed(row.value, digits)] + cells + [str(row.valid).lower()])
    return buf.getvalue()


def perturbation_trials(kind: str, base, trials: int, seed=None, lo=None, hi=None, keep: int = 5) -> TrialReport:
    """Randomly edit the multi-element values and count invalid reconstructions.

    Each trial picks a random nonempty set of the multi-element subsets of
    the decomposition and gives each an independent uniform value in the
    kind's range.
    """
    if kind not in SWEEP_KINDS:
        raise DomainError(f"kind must be one of {SWEEP_KINDS}, got {kind!r}")
    d_lo, d_hi = DEFAULT_RANGES[kind]
    lo = d_lo if lo is None else lo
    hi = d_hi if hi is None else hi
    rng = rng_from(seed)
    values, rebuild = _reconstructor(kind, base)
    multi = sorted(k for k in values if popcount(k) >= 2)
    report = TrialReport(kind, trials, 0)
    for _ in range(trials):
        count = int(rng.integers(1, len(multi) + 1))
        chosen = rng.choice(multi, size=count, replace=False)
        edited = dict(values)
        for k in chosen:
            edited[int(k)] = float(rng.uniform(lo, hi))
        vec = _attempt(rebuild, edited, kind)
        if vec is None or not is_valid(vec):
            report.invalid += 1
            if len(report.examples) < keep:
                report.examples.append({int(k): edited[int(k)] for k in chosen})
    return report
