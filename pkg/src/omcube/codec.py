"""JSON reading and writing for oriented matroids, point configurations and
localizations.

Written files are canonical: canonical signed-set representatives, sorted,
with a fixed layout, so ``write(read(b)) == b`` for any file this module
wrote.  Schema violations raise :class:`CodecError` naming the JSON path of
the offending value.  Non-canonical signed sets are accepted, normalized,
and reported with a :class:`NonCanonicalWarning`.
"""
from __future__ import annotations

import json
import warnings
from typing import Any

import jsonschema

from .extensions import Localization, NotALocalization
from .om import OMError, OrientedMatroid
from .realization import PointConfig, RealizationError
from .signed import Ground, SignedSet, canonical_pair


class CodecError(ValueError):
    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class NonCanonicalWarning(UserWarning):
    def __init__(self, path: str, message: str = "signed set is not the canonical representative"):
        super().__init__(f"{path}: {message}")
        self.path = path


_LABEL = {"type": "string", "minLength": 1}
_SIGNED = {
    "type": "object",
    "properties": {
        "plus": {"type": "array", "items": _LABEL},
        "minus": {"type": "array", "items": _LABEL},
    },
    "required": ["plus", "minus"],
    "additionalProperties": False,
}
OM_SCHEMA = {
    "type": "object",
    "properties": {
        "ground": {"type": "array", "items": _LABEL, "minItems": 1},
        "rank": {"type": "integer", "minimum": 0},
        "circuits": {"type": "array", "items": _SIGNED},
        "cocircuits": {"type": "array", "items": _SIGNED},
    },
    "required": ["ground", "rank"],
    "anyOf": [{"required": ["circuits"]}, {"required": ["cocircuits"]}],
    "additionalProperties": False,
}
_RATIONAL = {"type": "string", "pattern": r"^\s*[+-]?\d+(/\d+)?\s*$"}
CONFIG_SCHEMA = {
    "type": "object",
    "properties": {
        "mode": {"enum": ["affine", "linear"]},
        "points": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "properties": {"label": _LABEL, "coords": {"type": "array", "items": _RATIONAL}},
                "required": ["label", "coords"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["mode", "points"],
    "additionalProperties": False,
}
LOCALIZATION_SCHEMA = {
    "type": "object",
    "properties": {
        "half_family": {"type": "array", "items": _SIGNED},
        "sigma": {"type": "string", "pattern": "^[+0-]*$"},
    },
    "required": ["half_family", "sigma"],
    "additionalProperties": False,
}
MATRIX_SCHEMA = {
    "type": "array",
    "minItems": 1,
    "items": {"type": "array", "minItems": 1, "items": {"anyOf": [_RATIONAL, {"type": "integer"}]}},
}


def _load(data: bytes | str | dict | list) -> Any:
    if isinstance(data, (dict, list)):
        return data
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        return json.loads(data)
    except json.JSONDecodeError as exc:
        raise CodecError(f"invalid JSON ({exc.msg} at line {exc.lineno} column {exc.colno})") from None


def _validate(obj: Any, schema: dict) -> None:
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(obj), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        raise CodecError(err.message, err.json_path)


def _signed(ground: Ground, item: dict, path: str) -> SignedSet:
    for side in ("plus", "minus"):
        for k, x in enumerate(item[side]):
            if x not in ground:
                raise CodecError(f"unknown label {x!r}", f"{path}.{side}[{k}]")
    if set(item["plus"]) & set(item["minus"]):
        raise CodecError("plus and minus overlap", path)
    if not item["plus"] and not item["minus"]:
        raise CodecError("empty signed set", path)
    return SignedSet.from_labels(ground, item["plus"], item["minus"])


def _family(ground: Ground, items: list, path: str) -> list[tuple[int, int]]:
    out = []
    for k, item in enumerate(items):
        x = _signed(ground, item, f"{path}[{k}]")
        canon = canonical_pair(x.plus, x.minus)
        if canon != (x.plus, x.minus):
            warnings.warn(NonCanonicalWarning(f"{path}[{k}]"), stacklevel=3)
        out.append(canon)
    return out


# -- layout -----------------------------------------------------------------


def _compact(x: Any) -> str:
    return json.dumps(x, ensure_ascii=False, separators=(", ", ": "))


def dumps(obj: dict) -> bytes:
    """Top-level keys one per line; list-of-record values one record per
    line; everything else compact."""
    lines = ["{"]
    items = list(obj.items())
    for k, (key, value) in enumerate(items):
        tail = "," if k < len(items) - 1 else ""
        head = f"  {json.dumps(key)}: "
        if isinstance(value, list) and value and all(isinstance(v, (dict, list)) for v in value):
            lines.append(head + "[")
            for j, v in enumerate(value):
                lines.append("    " + _compact(v) + ("," if j < len(value) - 1 else ""))
            lines.append("  ]" + tail)
        else:
            lines.append(head + _compact(value) + tail)
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


# -- oriented matroids ---------------------------------------------------------


def om_to_json(om: OrientedMatroid) -> dict:
    return {
        "ground": list(om.ground.labels),
        "rank": om.rank,
        "circuits": [x.to_json() for x in om.sorted_circuits()],
        "cocircuits": [x.to_json() for x in om.sorted_cocircuits()],
    }


def write_om(om: OrientedMatroid) -> bytes:
    return dumps(om_to_json(om))


def read_om(data: bytes | str | dict) -> OrientedMatroid:
    obj = _load(data)
    _validate(obj, OM_SCHEMA)
    labels = obj["ground"]
    seen = set()
    for k, x in enumerate(labels):
        if x in seen:
            raise CodecError(f"duplicate label {x!r}", f"$.ground[{k}]")
        seen.add(x)
    ground = Ground(labels)
    circuits = _family(ground, obj["circuits"], "$.circuits") if "circuits" in obj else None
    cocircuits = _family(ground, obj["cocircuits"], "$.cocircuits") if "cocircuits" in obj else None
    try:
        om = OrientedMatroid(ground, circuits, cocircuits)
        actual = om.rank_of(ground.full)
    except OMError as exc:
        raise CodecError(str(exc)) from None
    if actual != obj["rank"]:
        raise CodecError(f"declared rank {obj['rank']} but the families give {actual}", "$.rank")
    return om


# -- point configurations -----------------------------------------------------


def write_config(config: PointConfig) -> bytes:
    return dumps(config.to_json())


def read_config(data: bytes | str | dict) -> PointConfig:
    obj = _load(data)
    _validate(obj, CONFIG_SCHEMA)
    dims = {len(p["coords"]) for p in obj["points"]}
    if len(dims) > 1:
        k = next(i for i, p in enumerate(obj["points"]) if len(p["coords"]) != len(obj["points"][0]["coords"]))
        raise CodecError("points have different dimensions", f"$.points[{k}].coords")
    try:
        return PointConfig.from_json(obj)
    except (RealizationError, ValueError, ZeroDivisionError) as exc:
        raise CodecError(str(exc), "$.points") from None


def read_matrix(data: bytes | str | list) -> list[list]:
    from .linalg import frac

    obj = _load(data)
    _validate(obj, MATRIX_SCHEMA)
    if len({len(row) for row in obj}) != 1:
        raise CodecError("rows of different lengths")
    try:
        return [[frac(x) for x in row] for row in obj]
    except (ValueError, ZeroDivisionError) as exc:
        raise CodecError(str(exc)) from None


# -- localizations --------------------------------------------------------------


def localization_to_json(loc: Localization) -> dict:
    return {
        "half_family": [x.to_json() for x in loc.signed_members()],
        "sigma": loc.sigma_string,
    }


def write_localization(loc: Localization) -> bytes:
    return dumps(localization_to_json(loc))


def read_localization(data: bytes | str | dict, base: OrientedMatroid) -> Localization:
    """The half family keeps its file order (sigma is positional), so its
    members are not normalized."""
    obj = _load(data)
    _validate(obj, LOCALIZATION_SCHEMA)
    members = []
    for k, item in enumerate(obj["half_family"]):
        path = f"$.half_family[{k}]"
        x = _signed(base.ground, item, path)
        if not base.has_cocircuit(x):
            raise CodecError("not a cocircuit of the base", path)
        members.append(x)
    if len(obj["sigma"]) != len(members):
        raise CodecError(f"expected {len(members)} sign characters, got {len(obj['sigma'])}", "$.sigma")
    try:
        return Localization.from_string(base, members, obj["sigma"])
    except NotALocalization as exc:
        raise CodecError(str(exc), "$.half_family") from None
