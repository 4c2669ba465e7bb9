"""JSON formats for YD data, zesting data and exported structure constants."""

from __future__ import annotations

import json

import numpy as np

from .cochain import NormalizedCochain
from .group import Bicharacter, Character, Projection, Subgroup, group_from_json, subgroup_generated
from .ydmodule import DiagonalAction, IndexPermutationAction, YetterDrinfeldDatum

__all__ = [
    "yd_to_json",
    "yd_from_json",
    "datum_to_json",
    "datum_from_json",
    "export_structure_constants",
    "load_structure_constants",
    "dumps",
    "load_file",
]


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def load_file(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _subgroup_to_json(H: Subgroup) -> list:
    return [H.parent.element_to_json(g) for g in H.generators]


def _subgroup_from_json(G, obj) -> Subgroup:
    return subgroup_generated(G, [G.element_from_json(x) for x in obj])


def yd_to_json(V: YetterDrinfeldDatum) -> dict:
    G = V.group
    if isinstance(V.action, DiagonalAction):
        action = {"type": "diagonal", "characters": [list(c.exponents()) for c in V.action.characters]}
    else:
        action = {"type": "index-permutation", "trivially_acting": _subgroup_to_json(V.action.trivially_acting)}
    return {
        "group": G.to_json(),
        "degrees": [G.element_to_json(g) for g in V.degrees],
        "action": action,
        "name": V.name,
    }


def yd_from_json(obj: dict) -> YetterDrinfeldDatum:
    G = group_from_json(obj["group"])
    degrees = tuple(G.element_from_json(x) for x in obj["degrees"])
    spec = obj["action"]
    if spec["type"] == "diagonal":
        action = DiagonalAction(tuple(Character.from_exponents(G, e) for e in spec["characters"]))
    elif spec["type"] == "index-permutation":
        action = IndexPermutationAction(_subgroup_from_json(G, spec["trivially_acting"]))
    else:
        raise ValueError(f"unknown action type {spec['type']!r}")
    return YetterDrinfeldDatum(G, degrees, action, name=obj.get("name", ""))


def _projection_to_json(p: Projection) -> dict:
    return {"target": p.target.to_json(), "image": p.image.tolist()}


def _projection_from_json(G, obj) -> Projection:
    return Projection(G, group_from_json(obj["target"]), np.array(obj["image"], dtype=np.int64))


def _assoc_to_json(d) -> dict:
    return {
        "format": "assoc-zesting",
        "yd": yd_to_json(d.yd),
        "grading": _projection_to_json(d.grading),
        "gamma0": _subgroup_to_json(d.gamma0),
        "phi": [list(chi.exponents()) for chi in d.phi.images],
        "lambda": d.lam.to_json(),
        "omega": d.omega.to_json(),
        "meta": dict(d.meta),
    }


def datum_to_json(d) -> dict:
    """Serialize an associative or braided zesting datum."""
    from .zesting import BraidedZestingDatum

    if isinstance(d, BraidedZestingDatum):
        return {
            "format": "braided-zesting",
            "assoc": _assoc_to_json(d.assoc),
            "r0": d.r0.to_json(),
            "t": d.t.to_json(),
            "meta": dict(d.meta),
        }
    return _assoc_to_json(d)


def _assoc_from_json(obj: dict):
    from .zesting import AssociativeZestingDatum, CharacterMap

    yd = yd_from_json(obj["yd"])
    G = yd.group
    grading = _projection_from_json(G, obj["grading"])
    gamma0 = _subgroup_from_json(G, obj["gamma0"])
    phi = CharacterMap(gamma0, tuple(Character.from_exponents(G, e) for e in obj["phi"]))
    lam = NormalizedCochain.from_json(obj["lambda"])
    omega = NormalizedCochain.from_json(obj["omega"])
    return AssociativeZestingDatum(yd, grading, gamma0, phi, lam, omega, dict(obj.get("meta", {})))


def datum_from_json(obj: dict):
    from .zesting import BraidedZestingDatum

    fmt = obj.get("format")
    if fmt == "assoc-zesting":
        return _assoc_from_json(obj)
    if fmt == "braided-zesting":
        assoc = _assoc_from_json(obj["assoc"])
        r0 = Bicharacter.from_json(assoc.group, obj["r0"])
        t = NormalizedCochain.from_json(obj["t"])
        return BraidedZestingDatum(assoc, r0, t, dict(obj.get("meta", {})))
    raise ValueError(f"unknown datum format {fmt!r}")


def export_structure_constants(d, force: bool = False) -> dict:
    """``m^λ``, ``Ω`` (and ``r^λ`` for braided data) with the datum embedded."""
    from .coquasi import build_braided_zested, build_zested
    from .zesting import BraidedZestingDatum

    if isinstance(d, BraidedZestingDatum):
        Z = build_braided_zested(d, force=force)
    else:
        Z = build_zested(d, force=force)
    return {"format": "structure-constants", "datum": datum_to_json(d), "tables": Z.to_json()}


def load_structure_constants(obj: dict):
    from .coquasi import ZestedGroupAlgebra

    if obj.get("format") != "structure-constants":
        raise ValueError("not a structure-constant file")
    return ZestedGroupAlgebra.from_json(obj["tables"])
