import copy
import json
import threading

import pytest

from flagtrans.catalog import CatalogError, load, parse, validate
from flagtrans.designs import develop
from flagtrans.group import PermGroup, is_primitive, set_orbit

PUBLISHED_GROUPS = ["A5", "S5", "A6", "S6", "M10", "PGL2_9", "PGammaL2_9", "A7", "S7", "A8", "S8",
                    "A9", "S9", "A10", "S10"]


def test_reference_catalog_shape(catalog):
    assert [g.id for g in catalog.groups] == PUBLISHED_GROUPS
    assert len(catalog.designs) == 87
    assert [d.design_id for d in catalog.designs] == [f"D{i}" for i in range(1, 88)]


def test_reference_catalog_validates(catalog):
    rep = validate(catalog)
    assert rep.ok, rep.failures[:5]


@pytest.mark.parametrize("gid,order", [("S10", 3628800), ("A6", 360), ("PGammaL2_9", 1440), ("M10", 720)])
def test_group_orders(catalog, gid, order):
    assert catalog.natural_group(gid).order() == order


def test_orbit_stabilizer_on_catalog_groups(catalog):
    for g in catalog.groups:
        G = catalog.natural_group(g.id)
        for x in (1, g.natural_degree):
            assert len(G.orbit(x)) * G.stabilizer(x).order() == G.order()


def test_orbit_stabilizer_on_catalog_actions(catalog):
    for m in catalog.max_subgroups:
        if m.expected_index > 400:
            continue
        act = catalog.resolve_action(m.group_id, m.subgroup_id)
        G = act.group
        assert len(G.orbit(1)) * G.stabilizer(1).order() == G.order()
        assert G.stabilizer(1).order() * m.expected_index == G.order()


def test_resolved_actions(catalog):
    a = catalog.resolve_action("A5", "D10")
    assert a.degree == 6 and a.group.order() == 60 and is_primitive(a.group)
    assert a.group.stabilizer(1).order() == 10
    b = catalog.resolve_action("S9", "3^3:(2xS4)")
    assert b.degree == 280 and b.group.order() == 362880
    assert catalog.resolve_action("A10", "(A5xA5):4").degree == 126
    assert catalog.resolve_action("A7", "L2(7)").degree == 15


def test_every_action_is_primitive(catalog):
    for m in catalog.max_subgroups:
        assert is_primitive(catalog.resolve_action(m.group_id, m.subgroup_id).group), m


def test_set_orbit_of_d22_block(catalog):
    rec = catalog.design("D22")
    G = catalog.resolve_action(rec.group_id, rec.action_ref).group
    assert len(set_orbit(G, rec.base_block)) == 10


def test_resolve_action_is_cached_across_threads(catalog):
    out = []
    ts = [threading.Thread(target=lambda: out.append(catalog.resolve_action("S6", "S4x2"))) for _ in range(6)]
    for t in ts:
        t.start()
    for t in ts:
        t.join()
    assert all(o is out[0] for o in out)


def test_unknown_ids(catalog):
    with pytest.raises(CatalogError, match="unknown group"):
        catalog.group("NOPE")
    with pytest.raises(CatalogError):
        catalog.design("D99")
    with pytest.raises(CatalogError):
        catalog.resolve_action("A5", "NOPE")


def test_empty_file(tmp_path):
    p = tmp_path / "empty.json"
    p.write_text("")
    with pytest.raises(CatalogError, match="no groups"):
        load(p)


def test_json_syntax_error_has_location(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"schema_version": 1,\n "groups": [}')
    with pytest.raises(CatalogError, match="line 2"):
        load(p)


def test_non_bijective_generator_names_record(catalog_json):
    data = copy.deepcopy(catalog_json)
    data["groups"][2]["generators"][0] = "[1,1,2,3,4,5]"
    with pytest.raises(CatalogError, match=r"groups\[2\] \(A6\)"):
        parse(data)


def test_out_of_range_block_names_design(catalog_json):
    data = copy.deepcopy(catalog_json)
    rec = next(d for d in data["designs"] if d["design_id"] == "D22")
    rec["base_block"] = [1, 2, 99]
    with pytest.raises(CatalogError, match="D22"):
        parse(data)


def test_unknown_action_reference(catalog_json):
    data = copy.deepcopy(catalog_json)
    data["designs"][0]["action_ref"] = "XYZ"
    with pytest.raises(CatalogError, match="unknown action"):
        parse(data)


def test_wrong_schema_version(catalog_json):
    data = dict(catalog_json, schema_version=2)
    with pytest.raises(CatalogError, match="schema version"):
        parse(data)


def _small(catalog_json, gids=("A5",)):
    data = copy.deepcopy(catalog_json)
    data["groups"] = [g for g in data["groups"] if g["id"] in gids]
    for key in ("max_subgroups", "stabilizer_candidates", "candidate_coverage", "designs"):
        data[key] = [r for r in data[key] if r["group_id"] in gids]
    for d in data["designs"]:
        d["also_under"] = [a for a in d.get("also_under", []) if a["group_id"] in gids]
    return data


def test_validate_reports_wrong_order(catalog_json):
    data = _small(catalog_json)
    data["groups"][0]["expected_order"] = 120
    rep = validate(parse(data))
    assert not rep.ok
    assert any(e.record == "group A5" and e.check == "order" for e in rep.failures)


def test_validate_reports_bad_arithmetic(catalog_json):
    data = _small(catalog_json)
    data["designs"][0]["lambda"] += 1
    rep = validate(parse(data))
    assert any(e.check == "arithmetic" and e.record == f"design {data['designs'][0]['design_id']}"
               for e in rep.failures)


def test_validate_reports_non_member_subgroup(catalog_json):
    data = _small(catalog_json, ("A5",))
    data["max_subgroups"][0]["generators"] = ["(1,2)"]
    rep = validate(parse(data))
    assert any(e.check == "membership" for e in rep.failures)


def test_validation_report_serializes(catalog_json):
    rep = validate(parse(_small(catalog_json)))
    assert json.loads(json.dumps(rep.to_json()))["ok"] is True
