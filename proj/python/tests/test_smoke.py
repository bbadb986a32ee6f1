import os
from pathlib import Path

import pytest

import podosnova as podo

DATA = Path(os.environ.get("PODO_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def load(name):
    return podo.load_file(DATA / name)


def test_reference_floor_loads_and_checks():
    m = load("reference_floor.podo.json")
    assert m.kind == "floor"
    assert podo.check(m) == []
    assert podo.load_text(m.to_text()) == m


def test_capsule_round_trip():
    m = load("reference_floor.podo.json")
    data = podo.encode_capsule(m)
    assert data[:4] == b"PODO"
    assert len(data) <= 4096
    back, stub = podo.decode_capsule(data)
    assert back == m
    assert stub.startswith("[")


def test_corrupt_capsule_raises():
    data = bytearray(podo.encode_capsule(load("reference_floor.podo.json")))
    data[-1] ^= 0xFF
    with pytest.raises(podo.PodoError) as err:
        podo.decode_capsule(bytes(data))
    assert err.value.code == "CorruptBody"


def test_apply_op_and_errors():
    m = load("reference_floor.podo.json")
    out, ids = podo.apply_op(m, "place_text", lines=["Привет"], origin=[0, 0], leader_target=[10, 10])
    assert ids == [m.next_id]
    assert out.entity_count == m.entity_count + 1
    with pytest.raises(podo.PodoError) as err:
        podo.apply_op(m, "delete_entity", id=999)
    assert err.value.code == "UnknownEntity"


def test_parse_mark():
    r = podo.parse_mark("2Ф 18.9-2 (1800 x 1800 x 900, 1.60)")
    assert r["dims"] == [1800, 1800, 900]
    assert r["metric"] == "1.60"
    assert podo.parse_mark("Немаркированная") == {"unmarked": "Немаркированная"}
    with pytest.raises(podo.PodoError):
        podo.parse_mark("ОР 15-6 (1460 x")


def test_render_and_display():
    m = load("reference_floor.podo.json")
    svg = podo.render_svg(m)
    assert svg.startswith("<?xml") or svg.startswith("<svg")
    assert svg == podo.render_svg(m)
    assert "AC1009" in podo.render_dxf(m, transliterate=True)
    kinds = {p["kind"] for p in podo.display(m)}
    assert {"segment", "axis_bubble", "dim_linear", "leader"} <= kinds


def test_derivations():
    floor = load("reference_floor.podo.json")
    assert podo.derive_foundation(floor).kind == "foundation"
    assert podo.derive_ceiling(floor).kind == "ceiling"


def test_section_levels():
    plans = {n: load(n) for n in ("reference_floor.podo.json", "reference_ceiling.podo.json",
                                  "reference_foundation.podo.json")}
    out = podo.section((DATA / "reference_section.json").read_text(encoding="utf-8"), plans)
    assert out["level_marks"] == ["−1.800", "±0.000", "+6.000"]
    assert podo.format_elevation(0) == "±0.000"
