import numpy as np
import pytest
from hypothesis import given

from isocd import fixtures
from isocd.errors import DomainError, NotBeliefFunctionError
from isocd.generate import random_mass
from isocd.lattice import MassFunction
from isocd.transforms import (
    betp,
    mass_from_b,
    mass_from_q,
    set_transform,
    shannon_entropy,
    singleton_plausibility,
    subset_mobius,
    subset_sum,
    superset_mobius,
    superset_sum,
)
from oracles import naive_betp, naive_transform
from strategies import masses

KINDS = ("bel", "pl", "b", "q")


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_fast_transforms_match_naive(n):
    rng = np.random.default_rng(n)
    worst = 0.0
    for _ in range(200):
        m = random_mass(rng, n, "any")
        for kind in KINDS:
            worst = max(worst, np.abs(set_transform(m, kind).values - naive_transform(m.masses, kind)).max())
    assert worst < 1e-12


def test_q_of_e4(e4):
    q = set_transform(e4, "q").values
    assert q[1] == pytest.approx(0.6)
    assert q[3] == pytest.approx(0.2)
    assert q[6] == pytest.approx(0.4)
    assert q[0] == pytest.approx(1.0)


def test_singleton_plausibility_of_e4(e4):
    assert singleton_plausibility(e4) == pytest.approx([0.6, 0.6, 0.5])


@given(masses(kind="any"))
def test_boundary_values(m):
    assert set_transform(m, "bel").values[0] == 0
    assert set_transform(m, "pl").values[0] == 0
    assert set_transform(m, "b").values[0] == m.masses[0]
    assert set_transform(m, "q").values[0] == pytest.approx(1.0)


@given(masses(kind="any"))
def test_pl_bel_duality(m):
    full = m.frame.full
    bel = set_transform(m, "bel").values
    pl = set_transform(m, "pl").values
    for F in range(1 << m.n):
        assert pl[F] == pytest.approx(1 - m.masses[0] - bel[full ^ F], abs=1e-12)


@given(masses(kind="any"))
def test_monotonicity(m):
    b, q = set_transform(m, "b").values, set_transform(m, "q").values
    for F in range(1 << m.n):
        for i in range(m.n):
            G = F | 1 << i
            assert b[F] <= b[G] + 1e-12
            assert q[G] <= q[F] + 1e-12


@given(masses(kind="any"))
def test_inverse_round_trips(m):
    assert mass_from_q(set_transform(m, "q")).masses == pytest.approx(m.masses, abs=1e-10)
    assert mass_from_b(set_transform(m, "b")).masses == pytest.approx(m.masses, abs=1e-10)


@given(masses(kind="any"))
def test_mobius_inverts_sums(m):
    assert subset_mobius(subset_sum(m.masses)) == pytest.approx(m.masses, abs=1e-12)
    assert superset_mobius(superset_sum(m.masses)) == pytest.approx(m.masses, abs=1e-12)


def test_constant_set_functions():
    assert mass_from_q(np.ones(8)).masses[7] == 1.0
    assert mass_from_b(np.ones(8)).masses[0] == 1.0


def test_inconsistent_q_is_rejected():
    with pytest.raises(NotBeliefFunctionError):
        mass_from_q(np.array([1.0, 0.2, 0.9, 0.8]))


def test_betp_examples():
    assert betp(fixtures.load("e1_m1")).probs == pytest.approx([0.15, 0.7, 0.15])
    assert betp(fixtures.load("e5_m4")).probs == pytest.approx([0.6, 0.2, 0.2])


@given(masses(kind="any"))
def test_betp_matches_naive_and_sums(m):
    p = betp(m).probs
    assert p == pytest.approx(naive_betp(m.masses), abs=1e-12)
    assert p.sum() == pytest.approx(1 - m.masses[0], abs=1e-9)
    if m.masses[0] < 1 - 1e-9:
        assert betp(m, normalize=True).probs.sum() == pytest.approx(1.0)


@given(masses(kind="bayesian"))
def test_betp_of_bayesian_is_identity(m):
    singles = np.array([m.masses[1 << i] for i in range(m.n)])
    assert np.array_equal(betp(m).probs, singles)


def test_betp_normalize_total_conflict():
    with pytest.raises(DomainError):
        betp(MassFunction.empty(3), normalize=True)


def test_entropy():
    assert shannon_entropy([0.4783, 0.2546, 0.2672]) == pytest.approx(1.5202, abs=5e-4)
    assert shannon_entropy(np.full(3, 1 / 3)) == pytest.approx(np.log2(3))
    assert shannon_entropy([1.0, 0.0, 0.0]) == 0.0


def test_entropy_rejects_unnormalized():
    m = MassFunction.from_dict(2, {0: 0.5, 1: 0.5})
    with pytest.raises(DomainError):
        shannon_entropy(betp(m))
    assert shannon_entropy(betp(m, normalize=True)) == 0.0
