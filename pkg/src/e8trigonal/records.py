"""Serialization of characters and curve records.

Rationals travel as canonical "p/q" strings (plain "p" for integers).
Character files carry a mode and exactly 8 values ordered by the default
simple system; curve records carry f0 and the coefficient lists of f2,
f4, f6 plus the marked-fiber data.
"""

from __future__ import annotations

import json
from fractions import Fraction as Q

from .curve import TrigonalCurve
from .exact import BinaryForm
from .lattice import Character
from .pipeline import MarkedCurve, PipelineResult


def rational_to_str(x) -> str:
    return str(Q(x))


def rational_from_str(s: str) -> Q:
    return Q(s)


def character_to_dict(chi: Character) -> dict:
    return {
        "mode": chi.mode,
        "values": [rational_to_str(v) for v in chi.values],
    }


def character_from_dict(d: dict) -> Character:
    mode = d.get("mode")
    values = d.get("values")
    if mode not in ("mult", "add"):
        raise ValueError("character mode must be 'mult' or 'add'")
    if not isinstance(values, list) or len(values) != 8:
        raise ValueError("character needs exactly 8 values")
    return Character(mode, tuple(rational_from_str(v) for v in values))


def curve_to_dict(curve: MarkedCurve, provenance: dict | None = None) -> dict:
    out = {
        "f0": rational_to_str(curve.f0),
        "f2": [rational_to_str(c) for c in curve.f2.coeffs],
        "f4": [rational_to_str(c) for c in curve.f4.coeffs],
        "f6": [rational_to_str(c) for c in curve.f6.coeffs],
        "marked_fiber": [rational_to_str(c) for c in curve.marked_fiber],
        "w0": rational_to_str(curve.w0),
        "ram_index": curve.ram_index,
    }
    if provenance is not None:
        out["provenance"] = provenance
    return out


def result_to_dict(result: PipelineResult) -> dict:
    return curve_to_dict(result.curve, provenance=result.provenance())


def trigonal_from_dict(d: dict) -> TrigonalCurve:
    return TrigonalCurve(
        rational_from_str(d["f0"]),
        BinaryForm([rational_from_str(c) for c in d["f2"]]),
        BinaryForm([rational_from_str(c) for c in d["f4"]]),
        BinaryForm([rational_from_str(c) for c in d["f6"]]),
    )


def fiber_from_dict(d: dict) -> tuple[Q, Q]:
    s0, t0 = d["marked_fiber"]
    return rational_from_str(s0), rational_from_str(t0)


def dump_json(data, path=None) -> str:
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text


def load_json(path) -> dict:
    with open(path) as fh:
        return json.load(fh)
