"""Parametric structural base plans: models, drawings, capsules and sections."""

import json as _json

from ._podosnova import (
    Model,
    PodoError,
    catalog_list,
    check,
    decode_capsule,
    derive_ceiling,
    derive_foundation,
    encode_capsule,
    format_elevation,
    load_text,
    parse_mark,
    parse_text,
    render_dxf,
    render_svg,
)
from . import _podosnova as _core

__all__ = [
    "Model",
    "PodoError",
    "apply_op",
    "catalog_list",
    "check",
    "decode_capsule",
    "derive_ceiling",
    "derive_foundation",
    "display",
    "encode_capsule",
    "format_elevation",
    "load_file",
    "load_text",
    "parse_mark",
    "parse_text",
    "preview_op",
    "render_dxf",
    "render_svg",
    "section",
]


def load_file(path):
    with open(path, "rb") as f:
        data = f.read()
    if data.startswith(b"PODO"):
        return decode_capsule(data)[0]
    return load_text(data.decode("utf-8"))


def apply_op(model, op, **params):
    """apply_op(model, "place_text", lines=[...], ...) -> (model, affected ids)."""
    if isinstance(op, str):
        op = {"op": op, "params": params}
    return _core.apply_op(model, _json.dumps(op, ensure_ascii=False))


def preview_op(model, op, **params):
    if isinstance(op, str):
        op = {"op": op, "params": params}
    return _json.loads(_core.preview_op(model, _json.dumps(op, ensure_ascii=False)))


def display(model, overall=False):
    """Plan drawing as a list of tagged primitive dicts."""
    return _json.loads(_core.display_json(model, overall))


def section(spec_text, plans):
    svg, levels, warnings, cuts = _core.section(spec_text, plans)
    return {"svg": svg, "level_marks": levels, "warnings": warnings, "cuts": cuts}
