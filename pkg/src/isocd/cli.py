"""Command-line front end: ``isocd <verb> ...``.

Mass functions are read as canonical JSON documents (one object, an array
of objects, or one object per line) from files or stdin, and results are
written one JSON object per line.  Exit status is 1 for a rejected value
(invalid BPA, undefined decomposition, ...) and 2 for unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import fixtures
from .ben import network_from_json, ppt_network, revise
from .classic import mass_from_sigma, mass_from_t, mass_from_v, pichon_t, smets_sigma, smets_v
from .errors import BeliefError
from .fusion import RULES, combine, normalize
from .generate import KINDS, random_masses
from .io import (
    DocumentError,
    decomposition_from_json,
    decomposition_to_json,
    dumps,
    mass_from_json,
    mass_to_json,
    read_documents,
    set_function_to_json,
    weights_from_json,
    weights_to_json,
)
from .isopignistic import decompose, reconstruct
from .lattice import EPS_SUM
from .measures import measure
from .sweep import SWEEP_KINDS, SweepSpec, perturbation_trials, sweep, sweep_csv
from .tables import fusion_table, write_tables
from .transforms import betp, set_transform

TRANSFORM_KINDS = ("bel", "pl", "b", "q", "betp", "betpn")
DECOMPOSE_FORMS = ("zeta", "tau", "sigma", "v", "t")


def _read_masses(paths, sum_tol: float) -> list:
    docs = []
    for path in paths or ["-"]:
        docs.extend(read_documents(path))
    return [mass_from_json(doc, sum_tol=sum_tol) for doc in docs]


def _map(fn, items, jobs: int) -> list:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _emit(out, text: str):
    out.write(text if text.endswith("\n") else text + "\n")


def _transform_one(args):
    m, kind = args
    if kind in ("betp", "betpn"):
        return set_function_to_json(betp(m, normalize=kind == "betpn"))
    return set_function_to_json(set_transform(m, kind))


def _decompose_one(args):
    m, form = args
    if form in ("zeta", "tau"):
        return decomposition_to_json(decompose(m, form))
    if form == "sigma":
        return weights_to_json(smets_sigma(m))
    if form == "v":
        return weights_to_json(smets_v(m))
    return weights_to_json(pichon_t(m))


def _measure_one(m):
    return measure(m).to_dict()


def cmd_transform(ns, out):
    ms = _read_masses(ns.inputs, ns.sum_tol)
    for doc in _map(_transform_one, [(m, ns.kind) for m in ms], ns.jobs):
        _emit(out, dumps(doc))


def cmd_decompose(ns, out):
    ms = _read_masses(ns.inputs, ns.sum_tol)
    for doc in _map(_decompose_one, [(m, ns.form) for m in ms], ns.jobs):
        _emit(out, dumps(doc))


def cmd_reconstruct(ns, out):
    docs = []
    for path in ns.inputs or ["-"]:
        docs.extend(read_documents(path))
    for doc in docs:
        if "form" in doc:
            m = reconstruct(decomposition_from_json(doc))
        elif doc.get("kind") in ("sigma", "v", "t"):
            w = weights_from_json(doc)
            m = {"sigma": mass_from_sigma, "v": mass_from_v, "t": mass_from_t}[doc["kind"]](w)
        else:
            raise DocumentError("expected a decomposition document (with 'form') or a weight document (with 'kind')")
        _emit(out, dumps(mass_to_json(m)))


def cmd_fuse(ns, out):
    ms = _read_masses(ns.inputs, ns.sum_tol)
    if ns.table:
        _emit(out, fusion_table(ms))
        return
    if ns.rule is None:
        raise BeliefError("fuse needs --rule (or --table)")
    m = combine(ns.rule, ms)
    if ns.normalize:
        m = normalize(m)
    _emit(out, dumps(mass_to_json(m)))


def cmd_measure(ns, out):
    ms = _read_masses(ns.inputs, ns.sum_tol)
    for doc in _map(_measure_one, ms, ns.jobs):
        _emit(out, dumps(doc))


def cmd_ben(ns, out):
    ms = _read_masses(ns.inputs, ns.sum_tol)
    if ns.network:
        docs = read_documents(ns.network)
        if len(docs) != 1:
            raise DocumentError("the network file must hold exactly one object")
        try:
            net = network_from_json(docs[0])
        except (KeyError, TypeError, AttributeError) as exc:
            raise DocumentError(f"not a network document: {exc}") from exc
    else:
        net = None
    for m in ms:
        _emit(out, dumps(mass_to_json(revise(m, net or ppt_network(m.frame)))))


def cmd_sweep(ns, out):
    if ns.inputs:
        ms = _read_masses(ns.inputs, ns.sum_tol)
        if len(ms) != 1:
            raise DocumentError("sweep takes a single base mass function")
        base = ms[0]
    else:
        base = fixtures.load("e4")
    if ns.trials:
        report = perturbation_trials(ns.kind, base, ns.trials, seed=ns.seed, lo=ns.lo, hi=ns.hi)
        _emit(out, dumps({"kind": report.kind, "trials": report.trials, "invalid": report.invalid}))
        return
    targets = ns.target or [base.frame.full]
    spec = SweepSpec(ns.kind, targets, ns.lo, ns.hi, ns.steps)
    _emit(out, sweep_csv(sweep(spec, base)))


def cmd_random(ns, out):
    for m in random_masses(ns.seed, ns.n, ns.count, ns.kind):
        _emit(out, dumps(mass_to_json(m)))


def cmd_tables(ns, out):
    for path in write_tables(ns.out):
        _emit(out, str(path))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isocd", description="Belief functions and isopignistic decompositions.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    masses = argparse.ArgumentParser(add_help=False)
    masses.add_argument("inputs", nargs="*", help="JSON files ('-' or none for stdin)")
    masses.add_argument("--sum-tol", type=float, default=EPS_SUM,
                        help="tolerance on the mass total, e.g. 1e-3 for rounded inputs")
    masses.add_argument("--jobs", type=int, default=1, help="worker processes for independent inputs")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("transform", parents=[common, masses], help="bel, pl, b, q or pignistic values")
    p.add_argument("--kind", choices=TRANSFORM_KINDS, required=True)
    p.set_defaults(run=cmd_transform)

    p = sub.add_parser("decompose", parents=[common, masses], help="isopignistic, Smets or Pichon decomposition")
    p.add_argument("--form", choices=DECOMPOSE_FORMS, default="tau")
    p.set_defaults(run=cmd_decompose)

    p = sub.add_parser("reconstruct", parents=[common], help="mass function from a decomposition document")
    p.add_argument("inputs", nargs="*")
    p.set_defaults(run=cmd_reconstruct)

    p = sub.add_parser("fuse", parents=[common, masses], help="combine two or more mass functions")
    p.add_argument("--rule", choices=sorted(RULES))
    p.add_argument("--normalize", action="store_true", help="Dempster normalization of the result")
    p.add_argument("--table", action="store_true", help="CSV with one row per rule")
    p.set_defaults(run=cmd_fuse)

    p = sub.add_parser("measure", parents=[common, masses], help="specificity measures and BetP entropy")
    p.set_defaults(run=cmd_measure)

    p = sub.add_parser("ben", parents=[common, masses], help="revise through a belief evolution network")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--network", help="network JSON file")
    group.add_argument("--ppt", action="store_true", help="pignistic network (the default)")
    p.set_defaults(run=cmd_ben)

    p = sub.add_parser("sweep", parents=[common, masses], help="vary decomposition values and check reconstructions")
    p.add_argument("--kind", choices=SWEEP_KINDS, default="iso_tau")
    p.add_argument("--target", type=int, action="append", help="subset index to vary (repeatable)")
    p.add_argument("--lo", type=float)
    p.add_argument("--hi", type=float)
    p.add_argument("--steps", type=int, default=41)
    p.add_argument("--trials", type=int, default=0, help="random perturbations instead of a grid")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_sweep)

    p = sub.add_parser("random", parents=[common], help="seeded random mass functions")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--kind", choices=KINDS, default="any")
    p.set_defaults(run=cmd_random)

    p = sub.add_parser("tables", parents=[common], help="regenerate the example CSV tables")
    p.add_argument("--out", default="tables", help="output directory")
    p.set_defaults(run=cmd_tables)
    return parser


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        if ns.output:
            with open(ns.output, "w", newline="") as out:
                ns.run(ns, out)
        else:
            ns.run(ns, sys.stdout)
    except (DocumentError, OSError, json.JSONDecodeError) as exc:
        print(f"isocd: input error: {exc}", file=sys.stderr)
        return 2
    except BeliefError as exc:
        print(f"isocd: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
