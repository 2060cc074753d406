"""Canonical JSON documents for mass functions, decompositions and weights.

Floats are written with 17 significant digits so every document parses
back to bit-identical values.
"""

from __future__ import annotations

import json
import math
import sys
from pathlib import Path

import numpy as np

from .classic import TFunction, WeightFunction
from .errors import DomainError
from .isopignistic import IsoCommitment, IsoDecomposition, PossibilityDistribution
from .lattice import EPS_SUM, ORDER, Frame, MassFunction, validate
from .transforms import PignisticDistribution, SetFunction


class DocumentError(ValueError):
    """Malformed or unreadable input document (I/O level, not a domain error)."""


def _float(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"cannot serialize non-finite value {x}")
    if x == 0.0:
        return "0.0"
    text = format(x, ".17g")
    if "." not in text and "e" not in text:
        text += ".0"
    return text


def fixed(x, digits: int = 6) -> str:
    """Fixed-point text for CSV output; negative zero is folded to zero."""
    if x is None:
        return "undefined"
    if not math.isfinite(float(x)):
        return "nan"
    text = f"{float(x):.{digits}f}"
    return text[1:] if text.startswith("-") and float(text) == 0 else text


def dumps(obj) -> str:
    """Compact canonical JSON with fixed float formatting."""
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    if isinstance(obj, (bool, np.bool_)) or obj is None or isinstance(obj, str):
        return json.dumps(obj.item() if isinstance(obj, np.bool_) else obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    return _float(obj)


def mass_to_json(m: MassFunction) -> dict:
    return {"n": m.n, "order": ORDER, "masses": [float(v) for v in m.masses]}


def mass_from_json(doc: dict, sum_tol: float = EPS_SUM) -> MassFunction:
    try:
        n = int(doc["n"])
        masses = doc["masses"]
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"not a mass-function document: {exc}") from exc
    if doc.get("order", ORDER) != ORDER:
        raise DocumentError(f"unsupported subset order {doc.get('order')!r}; expected {ORDER!r}")
    if len(masses) != 1 << n:
        raise DocumentError(f"'masses' has {len(masses)} entries, expected 2^{n} = {1 << n}")
    return validate(masses, Frame(n), sum_tol=sum_tol)


def decomposition_to_json(d: IsoDecomposition) -> dict:
    return {
        "n": d.frame.n,
        "form": d.form,
        "empty": d.empty_mass,
        "poss": [float(v) for v in d.propensity.poss],
        "commitment": {str(k): v for k, v in sorted(d.commitment.values.items())},
    }


def decomposition_from_json(doc: dict) -> IsoDecomposition:
    try:
        n = int(doc["n"])
        form = doc["form"]
        poss = doc["poss"]
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"not a decomposition document: {exc}") from exc
    frame = Frame(n)
    propensity = PossibilityDistribution(frame, poss)
    commitment = IsoCommitment(form, {int(k): v for k, v in doc.get("commitment", {}).items()})
    empty = doc.get("empty")
    if empty is None:
        empty = 1.0 - float(propensity.poss.max())
    return IsoDecomposition(propensity, commitment, float(empty))


def weights_to_json(w) -> dict:
    if isinstance(w, WeightFunction):
        return {"n": w.frame.n, "kind": w.kind, "values": {str(k): v for k, v in sorted(w.values.items())}}
    if isinstance(w, TFunction):
        return {"n": w.frame.n, "kind": "t", "values": {str(k): float(v) for k, v in enumerate(w.values)}}
    raise TypeError(f"cannot serialize {type(w).__name__}")


def weights_from_json(doc: dict):
    try:
        n, kind, values = int(doc["n"]), doc["kind"], doc["values"]
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"not a weight document: {exc}") from exc
    frame = Frame(n)
    if kind in ("sigma", "v"):
        return WeightFunction(frame, kind, {int(k): v for k, v in values.items()})
    if kind == "t":
        vec = np.zeros(1 << n)
        for k, v in values.items():
            vec[int(k)] = v
        return TFunction(frame, vec)
    raise DocumentError(f"unknown weight kind {kind!r}")


def set_function_to_json(f) -> dict:
    if isinstance(f, SetFunction):
        return {"n": f.frame.n, "order": ORDER, "kind": f.kind, "values": [float(v) for v in f.values]}
    if isinstance(f, PignisticDistribution):
        kind = "betpn" if f.normalized else "betp"
        return {"n": f.frame.n, "kind": kind, "normalized": f.normalized, "values": [float(v) for v in f.probs]}
    raise TypeError(f"cannot serialize {type(f).__name__}")


def parse_documents(text: str) -> list:
    """A single object, a JSON array of objects, or one object per line."""
    text = text.strip()
    if not text:
        return []
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        try:
            return [json.loads(line) for line in text.splitlines() if line.strip()]
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from exc
    return list(doc) if isinstance(doc, list) else [doc]


def read_documents(path) -> list:
    try:
        text = sys.stdin.read() if str(path) == "-" else Path(path).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    return parse_documents(text)
