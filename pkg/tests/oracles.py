"""Slow reference implementations written straight from the definitions.

Everything here works on frozensets and explicit loops, and shares no code
with the package beyond the subset-index convention (bit i <-> element i).
"""

from itertools import combinations
from math import prod

import numpy as np


def as_set(bits):
    return frozenset(i for i in range(bits.bit_length()) if bits >> i & 1)


def as_bits(s):
    return sum(1 << i for i in s)


def all_subsets(n):
    return [frozenset(c) for k in range(n + 1) for c in combinations(range(n), k)]


def table(masses):
    """Mass vector as a dict frozenset -> mass."""
    return {as_set(k): float(v) for k, v in enumerate(masses)}


def vector(d, n):
    out = np.zeros(1 << n)
    for s, v in d.items():
        out[as_bits(s)] += v
    return out


def naive_transform(masses, kind):
    n = len(masses).bit_length() - 1
    m = table(masses)
    out = {}
    for A in all_subsets(n):
        if kind == "b":
            out[A] = sum(v for B, v in m.items() if B <= A)
        elif kind == "bel":
            out[A] = sum(v for B, v in m.items() if B and B <= A)
        elif kind == "pl":
            out[A] = sum(v for B, v in m.items() if B & A)
        elif kind == "q":
            out[A] = sum(v for B, v in m.items() if A <= B)
    return vector(out, n)


def naive_betp(masses):
    n = len(masses).bit_length() - 1
    p = [0.0] * n
    for A, v in table(masses).items():
        for i in A:
            p[i] += v / len(A)
    return np.array(p)


def naive_conjunctive(m1, m2):
    n = len(m1).bit_length() - 1
    a, b = table(m1), table(m2)
    out = {}
    for A, x in a.items():
        for B, y in b.items():
            out[A & B] = out.get(A & B, 0.0) + x * y
    return vector(out, n)


def naive_disjunctive(m1, m2):
    n = len(m1).bit_length() - 1
    a, b = table(m1), table(m2)
    out = {}
    for A, x in a.items():
        for B, y in b.items():
            out[A | B] = out.get(A | B, 0.0) + x * y
    return vector(out, n)


def naive_yager(masses):
    return sum(v / len(A) for A, v in table(masses).items() if A)


def naive_propensity(masses):
    p = naive_betp(masses)
    return np.array([sum(min(pi, pj) for pi in p) for pj in p])


def naive_sigma(masses):
    """sigma(A) = prod over B containing A of q(B)^((-1)^(|B|-|A|+1))."""
    n = len(masses).bit_length() - 1
    q = {as_set(k): v for k, v in enumerate(naive_transform(masses, "q"))}
    full = frozenset(range(n))
    out = {}
    for A in all_subsets(n):
        if A == full:
            continue
        out[as_bits(A)] = prod(q[B] ** ((-1) ** (len(B) - len(A) + 1)) for B in q if A <= B)
    return out


def naive_zeta(m_from, m_to):
    """Transfer amounts from the balance m_to(F) = m_from(F) - z(F) + sum_P z(P)/|P|.

    Solved top-down, the largest subsets first.
    """
    n = len(m_from).bit_length() - 1
    a, b = table(m_from), table(m_to)
    z = {}
    for k in range(n, 1, -1):
        for F in (s for s in all_subsets(n) if len(s) == k):
            inflow = sum(z[P] / len(P) for P in z if F < P and len(P) == k + 1)
            z[F] = a[F] + inflow - b[F]
    return {as_bits(F): v for F, v in z.items()}


def kron_t(masses, pl):
    """t as a Kronecker product of per-element 2x2 matrices, element n outermost."""
    n = len(pl)
    M = np.array([[1.0]])
    for i in reversed(range(n)):
        M = np.kron(M, np.array([[1.0, 1.0], [-pl[i], 1.0 - pl[i]]]))
    return M @ np.asarray(masses, dtype=float)


def consonant_chain(poss):
    """Nested focal sets from a possibility distribution, largest degree first."""
    order = sorted(range(len(poss)), key=lambda i: (-poss[i], i))
    levels = [poss[i] for i in order] + [0.0]
    out = {frozenset(): 1.0 - levels[0]}
    for t in range(len(order)):
        out[frozenset(order[: t + 1])] = levels[t] - levels[t + 1]
    return vector(out, len(poss))
