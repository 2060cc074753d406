"""Worked-example inputs shipped with the package."""

from __future__ import annotations

import json
from importlib import resources

from .io import decomposition_from_json, mass_from_json

NAMES = (
    "e1_m1", "e1_m2", "e3_pc", "e4",
    "e5_m1", "e5_m2", "e5_m3", "e5_m4", "e5_m5", "e5_m6", "e5_m7",
    "e6_m1", "e6_m2",
)


def path(name: str):
    if name not in NAMES:
        raise KeyError(f"no fixture named {name!r}")
    return resources.files("isocd") / "data" / f"{name}.json"


def load(name: str):
    """MassFunction for BPA fixtures, IsoDecomposition for ``e3_pc``."""
    doc = json.loads(path(name).read_text())
    return decomposition_from_json(doc) if "form" in doc else mass_from_json(doc)


def e5() -> list:
    return [load(f"e5_m{i}") for i in range(1, 8)]
