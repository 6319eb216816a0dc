import pytest

from qsikit import catalog
from qsikit.errors import IntegrityError, NotFoundError
from qsikit.lietype import group_order
from qsikit.perm import format_generator_file, parse_generator_file, PermGroup


EXPECTED_ORDERS = {
    "A5": 60, "A6": 360, "A7": 2520, "A8": 20160, "A9": 181440,
    "S4": 24, "SL23": 24, "PSL27": 168, "PSL211": 660,
    "M11": 7920, "PSU42": 25920,
}


def test_all_entries_load_with_expected_orders():
    listed = catalog.group_ids()
    assert sorted(EXPECTED_ORDERS) == listed
    for group_id, order in EXPECTED_ORDERS.items():
        assert catalog.load(group_id).order == order


def test_unknown_id():
    with pytest.raises(NotFoundError):
        catalog.load("M12")


def test_round_trip_through_generator_format():
    for group_id in EXPECTED_ORDERS:
        group = catalog.load(group_id)
        text = format_generator_file(group)
        degree, gens = parse_generator_file(text)
        rebuilt = PermGroup(degree, gens)
        assert rebuilt.order == group.order
        assert list(rebuilt.generators) == list(group.generators)


def test_orders_agree_with_lie_type_formulas():
    correspondences = [
        ("A5", ("PSL", 2, 5)),
        ("A5", ("PSL", 2, 4)),
        ("A6", ("PSL", 2, 9)),
        ("PSL27", ("PSL", 2, 7)),
        ("PSL27", ("PSL", 3, 2)),
        ("PSL211", ("PSL", 2, 11)),
        ("PSU42", ("PSU", 4, 2)),
        ("PSU42", ("PSp", 2, 3)),
    ]
    for group_id, (family, n, q) in correspondences:
        assert catalog.load(group_id).order == \
            group_order(family, n, q).simple


def test_bsgs_orders_match_exhaustive_closure():
    # every catalog entry fits the enumeration bound, so the plain
    # multiplicative closure is an independent order oracle
    from qsikit.perm import closure_order

    for group_id in EXPECTED_ORDERS:
        group = catalog.load(group_id)
        assert closure_order(group.generators, group.degree) == group.order


def test_subgroup_fixture_loads_and_embeds():
    parent, sub, entry = catalog.load_subgroup("PSU42_U160")
    assert parent.order == 25920
    assert sub.order == 160
    assert parent.order // sub.order == 162
    assert sub.is_subgroup_of(parent)
    assert isinstance(entry["witness_linear_char_index"], int)


def test_unknown_subgroup():
    with pytest.raises(NotFoundError):
        catalog.load_subgroup("NOPE")


def test_ad_hoc_subgroup_datum():
    parent, sub, _ = catalog.load_subgroup({
        "parent": "A5",
        "generators": ["(1,2,3)", "(1,2)(3,4)"],
        "order": 12,
    })
    assert parent.order == 60 and sub.order == 12
    # a parent registered inside itself works too
    a5 = catalog.load("A5")
    _, whole, _ = catalog.load_subgroup({
        "parent": "A5",
        "generators": [g.cycle_string() for g in a5.generators],
        "order": 60,
    })
    assert whole.order == 60
    with pytest.raises(IntegrityError):
        catalog.load_subgroup({"parent": "A5",
                               "generators": ["(1,2,3)"],
                               "order": 12})


def test_load_file_and_resolve(tmp_path):
    group = catalog.load("S4")
    path = tmp_path / "custom.gens"
    path.write_text(format_generator_file(group))
    loaded = catalog.load_file(path)
    assert loaded.order == 24
    assert catalog.resolve(str(path)).order == 24
    with pytest.raises(NotFoundError):
        catalog.resolve("does-not-exist")


def test_corrupted_fixture_detected(tmp_path):
    # copy fixtures, then tamper with one expected order
    import json
    import shutil

    src = catalog._fixture_root()
    dst = tmp_path / "fixtures"
    shutil.copytree(src, dst)
    manifest = json.loads((dst / "manifest.json").read_text())
    manifest["groups"]["A5"]["order"] = 61
    (dst / "manifest.json").write_text(json.dumps(manifest))
    with pytest.raises(IntegrityError):
        catalog.load("A5", fixtures_path=dst)
