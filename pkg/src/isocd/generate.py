"""Seeded random mass functions.

Draws use numpy's PCG64 generator (``numpy.random.default_rng``), whose
stream is fixed by the seed on every platform.  Masses are symmetric
Dirichlet over the support allowed by ``kind``.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError
from .lattice import MassFunction, popcount, subsets_by_cardinality

KINDS = ("any", "normalized", "consonant", "bayesian", "nondogmatic", "subnormal")


def rng_from(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def _support(rng: np.random.Generator, n: int, kind: str) -> list:
    size = 1 << n
    if kind in ("any", "subnormal"):
        return list(range(size))
    if kind in ("normalized", "nondogmatic"):
        return list(range(1, size))
    if kind == "bayesian":
        return list(subsets_by_cardinality(n, 1))
    if kind == "consonant":
        chain, bits = [], 0
        for i in rng.permutation(n):
            bits |= 1 << int(i)
            chain.append(bits)
        return chain
    raise DomainError(f"unknown random kind {kind!r}; expected one of {KINDS}")


def random_mass(seed, n: int, kind: str = "any", alpha: float = 1.0) -> MassFunction:
    rng = rng_from(seed)
    support = _support(rng, n, kind)
    vec = np.zeros(1 << n)
    vec[support] = rng.dirichlet(np.full(len(support), alpha))
    vec /= vec.sum()
    return MassFunction(vec)


def random_masses(seed, n: int, count: int, kind: str = "any") -> list:
    rng = rng_from(seed)
    return [random_mass(rng, n, kind) for _ in range(count)]


def random_tau(seed, n: int, low: float = -1.0, high: float = 1.0) -> dict:
    """Uniform ratios on every subset with at least two elements."""
    rng = rng_from(seed)
    multi = [F for F in range(1 << n) if popcount(F) >= 2]
    return dict(zip(multi, rng.uniform(low, high, len(multi)).tolist()))


def random_possibility(seed, n: int, normal: bool = True) -> np.ndarray:
    rng = rng_from(seed)
    poss = rng.uniform(0.0, 1.0, n)
    if normal:
        poss[rng.integers(n)] = 1.0
    return poss
