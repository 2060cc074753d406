"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run under pytest (``pytest tests/test_acceptance.py -v -s``) or directly
with ``python3 tests/test_acceptance.py``.
"""

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from isocd import fixtures  # noqa: E402
from isocd.ben import ppt_network, revise, singleton_vector  # noqa: E402
from isocd.classic import pichon_t, smets_sigma  # noqa: E402
from isocd.fusion import FusionOperator, combine, hyper_cautious, hyper_cautious_k  # noqa: E402
from isocd.generate import random_mass, random_possibility, random_tau  # noqa: E402
from isocd.isopignistic import (  # noqa: E402
    apply_tau,
    apply_zeta,
    bounds,
    consonant_from_possibility,
    decompose,
    decompose_both,
    isotransform,
    propensity,
    reconstruct_tau,
)
from isocd.lattice import MassFunction, classify  # noqa: E402
from isocd.measures import (  # noqa: E402
    commitment_specificity,
    possibility_specificity,
    propensity_specificity,
    yager_specificity,
)
from isocd.sweep import perturbation_trials  # noqa: E402
from isocd.tables import decision_order  # noqa: E402
from isocd.transforms import betp, set_transform, shannon_entropy, singleton_plausibility  # noqa: E402
from oracles import kron_t, naive_betp, naive_conjunctive, naive_disjunctive, naive_transform  # noqa: E402

# printed values from the worked examples
E4_ISO_ZETA = [0, 1, 0.95, 0.45, 0.65, 0.05, -0.05, 0.45]
E4_ISO_TAU = [0, 1, 0.95, 1, 0.65, 0.3333, -1, 0.6923]
E4_SIGMA = [1.5, 0.5, 0.6667, 1, 1.2, 0.6667, 0.5]
E4_T = [1, 0.6, 0.6, -0.16, 0.5, 0, 0.1, 0.04]
TABLE2 = [
    ([0.3333, 0.3333, 0.3333], 1, 0.3333, 1),
    ([0.3333, 0.3333, 0.3333], 0.3333, 0.3333, 0),
    ([0.3333, 0.3333, 0.3333], 0.5, 0.3333, 0.5),
    ([0.6, 0.2, 0.2], 0.6, 0.6, 0),
    ([0.6, 0.2, 0.2], 0.7, 0.6, 0.3333),
    ([0.4, 0.4, 0.2], 0.4, 0.4, 0),
    ([0.3, 0.4, 0.3], 0.4, 0.4, 0.1111),
]
TABLE3 = {
    "ccr": [0.2780, 0.2272, 0.1317, 0.0928, 0.1161, 0.1422, 0.0102, 0.0018],
    "hprod": [0.0984, 0.1547, 0.1131, 0.1919, 0.0803, 0.2445, 0.0293, 0.0879],
    "dcr": [0.0014, 0.0130, 0.0262, 0.1897, 0.0154, 0.2267, 0.0410, 0.4866],
    "hprobsum": [0.0016, 0.0314, 0.1488, 0.2406, 0.1195, 0.3023, 0.0390, 0.1168],
    "cautious": [0.9356, 0.0370, 0.0098, 0.0016, 0.0131, 0.0024, 0.0004, 0.0001],
    "hmin": [0.0800, 0.0764, 0.1254, 0.2447, 0.0880, 0.2595, 0.0315, 0.0945],
    "bold": [0.0043, 0.0213, 0.0213, 0.1437, 0.0128, 0.1235, 0.0239, 0.6494],
    "hmax": [0.0200, 0.0611, 0.1333, 0.2155, 0.1014, 0.3292, 0.0349, 0.1046],
}
TABLE4 = {
    "ccr": ([0.4783, 0.2546, 0.2672], "w1>w3>w2", 1.5202),
    "hprod": ([0.4461, 0.2806, 0.2733], "w1>w2>w3", 1.5454),
    "dcr": ([0.3839, 0.3042, 0.3119], "w1>w3>w2", 1.5768),
    "hprobsum": ([0.3424, 0.3281, 0.3296], "w1>w3>w2", 1.5874),
    "cautious": ([0.6061, 0.1686, 0.2253], "w1>w3>w2", 1.3553),
    "hmin": ([0.3913, 0.3207, 0.2880], "w1>w2>w3", 1.5731),
    "bold": ([0.3729, 0.3229, 0.3042], "w1>w2>w3", 1.5796),
    "hmax": ([0.3759, 0.2993, 0.3248], "w1>w3>w2", 1.5784),
}
# the printed hprobsum entropy disagrees with the printed hprobsum BetP row
INCONSISTENT_ENTROPY = "hprobsum"


def _max_diff(a, b):
    return float(np.max(np.abs(np.asarray(a, dtype=float) - np.asarray(b, dtype=float))))


def _pairs(seed, count=200, ns=(2, 3, 4, 5), kind="any"):
    rng = np.random.default_rng(seed)
    return [(random_mass(rng, ns[i % 4], kind), random_mass(rng, ns[i % 4], kind)) for i in range(count)]


def _singles(seed, count=200, ns=(2, 3, 4, 5), kind="any"):
    rng = np.random.default_rng(seed)
    return [random_mass(rng, ns[i % 4], kind) for i in range(count)]


def criterion_1():
    tau, zeta = isotransform(fixtures.load("e1_m2"), fixtures.load("e1_m1"))
    dt = _max_diff([tau[F] for F in (3, 5, 6, 7)], [-1, 1, -1, 0.6667])
    dz = _max_diff([zeta[F] for F in (3, 5, 6, 7)], [-0.1667, 0.0667, -0.1667, 0.2])
    return max(dt, dz) <= 1e-3, f"tau diff {dt:.2e}, zeta diff {dz:.2e} (tol 1e-3)"


def criterion_2():
    m = fixtures.load("e4")
    d_tau, d_zeta = decompose_both(m)
    diffs = {
        "iso_zeta": _max_diff(d_zeta.vector(), E4_ISO_ZETA),
        "iso_tau": _max_diff(d_tau.vector(), E4_ISO_TAU),
        "sigma": _max_diff([smets_sigma(m)[F] for F in range(7)], E4_SIGMA),
        "t": _max_diff(pichon_t(m).values, E4_T),
    }
    worst = max(diffs.values())
    return worst <= 1e-3, ", ".join(f"{k} {v:.1e}" for k, v in diffs.items()) + " (tol 1e-3)"


def criterion_3():
    worst = 0.0
    for i, (p, s, sp, sc) in enumerate(TABLE2, start=1):
        m = fixtures.load(f"e5_m{i}")
        worst = max(
            worst,
            _max_diff(betp(m).probs, p),
            abs(yager_specificity(m) - s),
            abs(propensity_specificity(m) - sp),
            abs(commitment_specificity(m) - sc),
        )
    return worst <= 1e-4, f"7 rows, worst diff {worst:.1e} (tol 1e-4)"


def criterion_4():
    pair = [fixtures.load("e6_m1"), fixtures.load("e6_m2")]
    worst_mass = worst_p = worst_h = 0.0
    orders_ok = True
    for rule, row in TABLE3.items():
        fused = combine(rule, pair)
        worst_mass = max(worst_mass, _max_diff(fused.masses, row))
        p = betp(fused, normalize=True).probs
        probs, order, entropy = TABLE4[rule]
        worst_p = max(worst_p, _max_diff(p, probs))
        orders_ok &= decision_order(p) == order
        if rule != INCONSISTENT_ENTROPY:
            worst_h = max(worst_h, abs(shannon_entropy(p) - entropy))
    # the excluded entry is still checked against the entropy of its own printed BetP row
    self_h = abs(shannon_entropy(betp(combine(INCONSISTENT_ENTROPY, pair), normalize=True).probs)
                 - shannon_entropy(TABLE4[INCONSISTENT_ENTROPY][0]))
    ok = max(worst_mass, worst_p, worst_h, self_h) <= 5e-4 and orders_ok
    return ok, (
        f"masses {worst_mass:.1e}, BetP {worst_p:.1e}, entropy {worst_h:.1e}, orders {'ok' if orders_ok else 'WRONG'}; "
        f"hprobsum entropy vs its BetP row {self_h:.1e}, printed 1.5874 excluded (strict xfail)"
    )


def criterion_5():
    pc = fixtures.load("e3_pc")
    m = reconstruct_tau(pc)
    expected = np.zeros(16)
    expected[15] = 0.5
    expected[[7, 11, 13, 14]] = 0.125
    canon = decompose(m, "tau").commitment
    target = {F: (0.5 if F == 15 else 0.0) for F in canon.values}
    dm = _max_diff(m.masses, expected)
    dc = max(abs(canon[F] - v) for F, v in target.items())
    return max(dm, dc) <= 1e-12, f"mass diff {dm:.1e}, ratio diff {dc:.1e} (tol 1e-12)"


def _prop_suites():
    tol = 1e-9
    results = {}
    singles = _singles(50)

    ok = True
    rng = np.random.default_rng(51)
    for m in singles:
        tau, xi = {}, {}
        for F in range(1 << m.n):
            if bin(F).count("1") >= 2:
                tau[F] = 1.0
                kids = [F ^ (1 << i) for i in range(m.n) if F >> i & 1]
                xi.update({(F, c): float(s) for c, s in zip(kids, rng.dirichlet(np.ones(len(kids))))})
        from isocd.ben import BeliefEvolutionNetwork

        p = singleton_vector(revise(m, BeliefEvolutionNetwork(m.frame, tau, xi)))
        idx = [1 << i for i in range(m.n)]
        ok &= bool(np.all(set_transform(m, "bel").values[idx] - tol <= p))
        ok &= bool(np.all(p <= set_transform(m, "pl").values[idx] + tol))
    results["P1 bounds"] = ok

    results["P2 BEN=BetP"] = all(
        _max_diff(singleton_vector(revise(m, ppt_network(m.n))), naive_betp(m.masses)) < tol for m in singles
    )

    ok = True
    for m in singles:
        d = decompose(m, "zeta")
        ok &= _max_diff(apply_zeta(m, d.commitment.negated()).masses, consonant_from_possibility(d.propensity).masses) < tol
    results["P3 inversion"] = ok

    rng = np.random.default_rng(52)
    failures = 0
    for i in range(10_000):
        n = 2 + i % 4
        base = consonant_from_possibility(random_possibility(rng, n, normal=bool(i % 3)))
        try:
            apply_tau(base, random_tau(rng, n))
        except ValueError:
            failures += 1
    results["P4 validity (10000)"] = failures == 0

    rng = np.random.default_rng(53)
    ok5 = ok6 = True
    for i in range(200):
        n = 2 + i % 4
        base = consonant_from_possibility(random_possibility(rng, n))
        m1, m2, m3 = (apply_tau(base, random_tau(rng, n)) for _ in range(3))
        t12, z12 = isotransform(m1, m2)
        _, z23 = isotransform(m2, m3)
        _, z13 = isotransform(m1, m3)
        ok5 &= all(abs(z13[F] - z12[F] - z23[F]) < tol for F in z13.values)
        ok6 &= _max_diff(apply_zeta(m1, z12).masses, m2.masses) < tol
        ok6 &= _max_diff(apply_tau(m1, t12).masses, m2.masses) < tol
    results["P5 additivity"] = ok5
    results["P6 reachability"] = ok6

    ok = True
    for m in _singles(54, kind="normalized"):
        lower, upper = bounds(propensity(m))
        ok &= classify(lower).consonant and classify(upper).bayesian
        ok &= _max_diff(betp(upper).probs, betp(m).probs) < tol
        ok &= max(abs(v) for v in decompose(lower, "zeta").commitment.values.values()) < 1e-12
    results["P7 bounds"] = ok

    ok = True
    for m in _singles(55, kind="normalized"):
        ok &= 1 / m.n - tol <= propensity_specificity(m) <= 1 + tol
        sc = commitment_specificity(m)
        ok &= sc is not None and -tol <= sc <= 1 + tol
    for m in _singles(56, kind="consonant"):
        sc = commitment_specificity(m)
        ok &= sc is None or abs(sc) < tol
    for m in _singles(57, kind="bayesian"):
        ok &= abs(commitment_specificity(m) - 1) < tol
    ok &= propensity_specificity(MassFunction.from_dict(3, {1: 1.0})) == 1.0
    results["P9/P10 measures"] = ok

    ops = list(FusionOperator)
    ok11 = ok13 = ok15 = True
    for a, b in _pairs(58):
        for op in ops:
            fused = hyper_cautious(a, b, op)
            ok11 &= np.array_equal(fused.masses, hyper_cautious(b, a, op).masses)
            pf, pa, pb = propensity(fused).poss, propensity(a).poss, propensity(b).poss
            ok15 &= bool(np.all(pf <= np.minimum(pa, pb) + tol) if op.conjunctive else np.all(pf >= np.maximum(pa, pb) - tol))
        for op in (FusionOperator.T_MIN, FusionOperator.S_MAX):
            ok13 &= _max_diff(hyper_cautious(a, a, op).masses, a.masses) < tol
    results["P11 commutativity"] = ok11
    results["P13 idempotency"] = ok13
    results["P15 monotonicity"] = ok15

    ok = True
    for m in _singles(59, kind="normalized"):
        sc = commitment_specificity(m)
        for op, neutral in ((FusionOperator.T_PROD, MassFunction.vacuous(m.n)), (FusionOperator.S_PROBSUM, MassFunction.empty(m.n))):
            fused = hyper_cautious(m, neutral, op)
            ok &= _max_diff(betp(fused).probs, betp(m).probs) < tol
            ok &= sc is None or commitment_specificity(fused) <= sc + tol
    for m in _singles(60, kind="consonant"):
        if m.masses[0] == 0:
            ok &= _max_diff(hyper_cautious(m, MassFunction.vacuous(m.n), "t_prod").masses, m.masses) < tol
            ok &= _max_diff(hyper_cautious(m, MassFunction.empty(m.n), "s_probsum").masses, m.masses) < tol
    results["P14 quasi-neutral"] = ok

    base = MassFunction.from_dict(2, {1: 0.2, 2: 0.2, 3: 0.6})
    pure = MassFunction.from_dict(2, {1: 0.5, 2: 0.5})
    chained = hyper_cautious(hyper_cautious(base, base, "t_min"), pure, "t_min")
    single = hyper_cautious_k([base, base, pure], "t_min")
    ok = _max_diff(chained.masses, single.masses) > 1e-3
    ok &= all(
        np.array_equal(hyper_cautious_k([a, b], op).masses, hyper_cautious(a, b, op).masses)
        for a, b in _pairs(61, count=20) for op in ops
    )
    ok &= all(_max_diff(hyper_cautious_k([m, m, m], "t_min").masses, m.masses) < tol for m in _singles(62, count=50))
    results["P12 k-ary"] = ok
    return results


def criterion_6():
    results = _prop_suites()
    failed = [k for k, v in results.items() if not v]
    return not failed, f"{len(results) - len(failed)}/{len(results)} suites" + (f"; failed: {failed}" if failed else "")


def criterion_7():
    worst_t = worst_f = worst_m = 0.0
    exact = True
    for n in (2, 3, 4, 5, 6):
        rng = np.random.default_rng(70 + n)
        for _ in range(40):
            a, b = random_mass(rng, n, "any"), random_mass(rng, n, "any")
            for kind in ("bel", "pl", "b", "q"):
                worst_m = max(worst_m, _max_diff(set_transform(a, kind).values, naive_transform(a.masses, kind)))
            worst_f = max(
                worst_f,
                _max_diff(combine("ccr", [a, b]).masses, naive_conjunctive(a.masses, b.masses)),
                _max_diff(combine("dcr", [a, b]).masses, naive_disjunctive(a.masses, b.masses)),
            )
            pl = singleton_plausibility(a)
            raw = kron_t(a.masses, pl)
            t = pichon_t(a).values
            mask = np.array([bin(F).count("1") >= 2 for F in range(1 << n)])
            worst_t = max(worst_t, _max_diff(t[mask], raw[mask]))
            poss = random_possibility(rng, n)
            exact &= possibility_specificity(poss) == yager_specificity(consonant_from_possibility(poss))
    ok = max(worst_m, worst_f, worst_t) < 1e-12 and exact
    return ok, (
        f"transforms {worst_m:.1e}, fusion {worst_f:.1e}, t moments {worst_t:.1e} (tol 1e-12); "
        f"level-sum specificity {'exact' if exact else 'NOT exact'}"
    )


def criterion_8():
    m = fixtures.load("e4")
    iso = perturbation_trials("iso_tau", m, 10_000, seed=80)
    sigma = perturbation_trials("sigma", m, 100, seed=81)
    t = perturbation_trials("t", m, 100, seed=82)
    ok = iso.invalid == 0 and sigma.invalid >= 1 and t.invalid >= 1
    return ok, f"invalid: iso_tau {iso.invalid}/10000, sigma {sigma.invalid}/100, t {t.invalid}/100"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


def _line(i, ok, detail):
    return f"criterion {i}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("i", range(1, 9))
def test_criterion(i, capsys):
    ok, detail = CRITERIA[i - 1]()
    with capsys.disabled():
        print("\n" + _line(i, ok, detail))
    assert ok, detail


@pytest.mark.xfail(strict=True, reason="printed hprobsum entropy 1.5874 does not match its printed BetP row (1.5847)")
def test_hprobsum_entropy_as_printed():
    pair = [fixtures.load("e6_m1"), fixtures.load("e6_m2")]
    p = betp(combine("hprobsum", pair), normalize=True).probs
    assert shannon_entropy(p) == pytest.approx(1.5874, abs=5e-4)


if __name__ == "__main__":
    outcomes = [CRITERIA[i - 1]() for i in range(1, 9)]
    for i, (ok, detail) in enumerate(outcomes, start=1):
        print(_line(i, ok, detail))
    sys.exit(0 if all(ok for ok, _ in outcomes) else 1)
