"""CSV tables for the worked examples, regenerated from the shipped fixtures.

Every number is written with a fixed ``.6f`` format (negative zero folded
to zero) and rows end in ``\\n`` so the output is byte-stable.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path

from . import fixtures
from .classic import pichon_t, smets_sigma
from .fusion import combine
from .io import fixed
from .isopignistic import decompose, decompose_both, isotransform, reconstruct_tau
from .measures import commitment_specificity, propensity_specificity, yager_specificity
from .transforms import betp, shannon_entropy

# row order of the fusion comparison: each classic rule next to its hyper-cautious counterpart
FUSION_ROWS = ("ccr", "hprod", "dcr", "hprobsum", "cautious", "hmin", "bold", "hmax")


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([c if isinstance(c, str) else fixed(c) for c in row])
    return buf.getvalue()


def _subset_header(n: int) -> list:
    return [f"F{k}" for k in range(1 << n)]


def decision_order(probs) -> str:
    order = sorted(range(len(probs)), key=lambda i: (-probs[i], i))
    return ">".join(f"w{i + 1}" for i in order)


def table1() -> str:
    """Masses and isopignistic functions (zeta form) of the seven e5 BPAs."""
    rows = []
    for i, m in enumerate(fixtures.e5(), start=1):
        rows.append([f"m{i}", "mass", *m.masses])
        rows.append([f"m{i}", "iso_zeta", *decompose(m, "zeta").vector()])
    return _csv(["bpa", "row", *_subset_header(3)], rows)


def table2() -> str:
    rows = []
    for i, m in enumerate(fixtures.e5(), start=1):
        rows.append([
            f"m{i}", *betp(m).probs,
            yager_specificity(m), propensity_specificity(m), commitment_specificity(m),
        ])
    return _csv(["bpa", "betp_w1", "betp_w2", "betp_w3", "S", "S_p", "S_c"], rows)


def fusion_results() -> dict:
    pair = [fixtures.load("e6_m1"), fixtures.load("e6_m2")]
    return {rule: combine(rule, pair) for rule in FUSION_ROWS}


def fusion_table(ms) -> str:
    """One row per rule; the shape of the e6 comparison for any list of BPAs."""
    n = ms[0].n
    rows = [[rule, *combine(rule, ms).masses] for rule in FUSION_ROWS]
    return _csv(["rule", *_subset_header(n)], rows)


def table3() -> str:
    return fusion_table([fixtures.load("e6_m1"), fixtures.load("e6_m2")])


def table4() -> str:
    rows = []
    for rule, m in fusion_results().items():
        p = betp(m, normalize=True).probs
        rows.append([rule, *p, decision_order(p), shannon_entropy(p)])
    return _csv(["rule", "betp_w1", "betp_w2", "betp_w3", "order", "entropy_bits"], rows)


def example_e1() -> str:
    m1, m2 = fixtures.load("e1_m1"), fixtures.load("e1_m2")
    tau, zeta = isotransform(m2, m1, tol=1e-3)
    rows = [[f"F{k}", tau[k], zeta[k]] for k in sorted(tau.values)]
    return _csv(["subset", "tau", "zeta"], rows)


def example_e3() -> str:
    pc = fixtures.load("e3_pc")
    m = reconstruct_tau(pc)
    canon = decompose(m, "tau").vector()
    rows = [[f"F{k}", m.masses[k], pc.vector()[k], canon[k]] for k in range(m.frame.size)]
    return _csv(["subset", "mass", "pc", "iso_tau"], rows)


def example_e4() -> str:
    m = fixtures.load("e4")
    tau, zeta = decompose_both(m)
    sigma = smets_sigma(m).vector()
    t = pichon_t(m).values
    rows = []
    for k in range(m.frame.size):
        s = "" if k == m.frame.full else fixed(sigma[k])
        rows.append([f"F{k}", m.masses[k], zeta.vector()[k], tau.vector()[k], t[k], s])
    return _csv(["subset", "mass", "iso_zeta", "iso_tau", "t", "sigma"], rows)


TABLES = {
    "table1": table1,
    "table2": table2,
    "table3": table3,
    "table4": table4,
    "e1": example_e1,
    "e3": example_e3,
    "e4": example_e4,
}


def write_tables(out_dir) -> list:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, build in TABLES.items():
        target = out / f"{name}.csv"
        with open(target, "w", newline="") as fh:
            fh.write(build())
        written.append(target)
    return written
