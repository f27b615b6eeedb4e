import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gradedquot.algebra import build_algebra
from gradedquot.catalog import CATALOG, build
from gradedquot.fields import GF, QQ
from gradedquot.fixtures import (
    Fixture,
    FixtureError,
    bundled_dir,
    dumps_fixture,
    fixture_to_dict,
    get,
    load_fixture,
    loads_fixture,
    resolve,
    save_fixture,
)

BUNDLED = sorted(p.stem for p in bundled_dir().glob("*.json"))
FAST = [n for n in BUNDLED if n not in ("m6_transpose_33", "m5_transpose")]


def sl2_dict():
    return json.loads((bundled_dir() / "sl2.json").read_text())


def test_load_sl2():
    fx = load_fixture(bundled_dir() / "sl2.json")
    assert fx.name == "sl2" and fx.algebra.dim == 3
    assert fx.grading.support == (-1, 0, 1)


def test_every_catalog_entry_is_bundled():
    assert sorted(CATALOG) == BUNDLED


@pytest.mark.parametrize("name", FAST)
def test_bundled_round_trip(name, tmp_path):
    path = bundled_dir() / f"{name}.json"
    text = path.read_text()
    fx = load_fixture(path)
    assert dumps_fixture(fx) == text
    save_fixture(fx, tmp_path / "again.json")
    assert (tmp_path / "again.json").read_bytes() == path.read_bytes()


@pytest.mark.slow
@pytest.mark.parametrize("name", ["m5_transpose", "m6_transpose_33"])
def test_bundled_round_trip_large(name):
    path = bundled_dir() / f"{name}.json"
    assert dumps_fixture(load_fixture(path)) == path.read_text()


@pytest.mark.parametrize("name", ["sl2_f5", "m3", "sl2_affine_f3", "gl2_f5"])
def test_bundled_matches_catalog(name):
    assert dumps_fixture(build(name)) == (bundled_dir() / f"{name}.json").read_text()


def test_alternation_error_names_triple():
    obj = sl2_dict()
    obj["structure"].append([0, 0, 0, "1"])
    with pytest.raises(FixtureError) as err:
        loads_fixture(json.dumps(obj))
    assert err.value.where == (0, 0, 0)
    assert err.value.path == "structure"


@pytest.mark.parametrize("mutate,path", [
    (lambda o: o.pop("dim"), "dim"),
    (lambda o: o.update(extra=1), "extra"),
    (lambda o: o.update(kind="jordan"), "kind"),
    (lambda o: o.update(dim=-1), "dim"),
    (lambda o: o["structure"].__setitem__(2, [0, 1, 7, "1"]), "structure[2][2]"),
    (lambda o: o["structure"].__setitem__(1, [0, 1, 1]), "structure[1]"),
    (lambda o: o["structure"].__setitem__(0, [0, 1, 1, 1.5]), "structure[0][3]"),
    (lambda o: o["structure"].__setitem__(0, [0, 1, 1, "1/0"]), "structure[0][3]"),
    (lambda o: o.update(labels=["a"]), "labels"),
    (lambda o: o["grading"].update({"x": []}), "grading"),
    (lambda o: o["grading"]["0"][0].pop(), "grading.0[0]"),
    (lambda o: o.update(field={"kind": "R"}), "field"),
    (lambda o: o.update(elements={"z": ["1"]}), "elements.z"),
])
def test_schema_errors(mutate, path):
    obj = sl2_dict()
    mutate(obj)
    with pytest.raises(FixtureError) as err:
        loads_fixture(json.dumps(obj))
    assert err.value.path == path


def test_duplicate_triple():
    obj = sl2_dict()
    obj["structure"].append(list(obj["structure"][0]))
    with pytest.raises(FixtureError, match="duplicate"):
        loads_fixture(json.dumps(obj))


def test_bad_grading_is_reported():
    obj = sl2_dict()
    obj["grading"] = {"0": [["1", "0", "0"], ["0", "1", "0"]], "-1": [["0", "0", "1"]]}
    with pytest.raises(FixtureError) as err:
        loads_fixture(json.dumps(obj))
    assert err.value.path == "grading" and err.value.where is not None


def test_invalid_json():
    with pytest.raises(FixtureError, match="invalid JSON"):
        loads_fixture("{")


def test_missing_file(tmp_path):
    with pytest.raises(FixtureError, match="cannot read"):
        load_fixture(tmp_path / "nope.json")
    with pytest.raises(FixtureError, match="not found"):
        resolve("nope", tmp_path)


def test_directory_resolution(tmp_path, monkeypatch):
    fx = build("abelian2_f3")
    save_fixture(Fixture("mine", fx.algebra, fx.grading), tmp_path / "mine.json")
    assert get("mine", tmp_path).name == "mine"
    monkeypatch.setenv("ALG_FIXTURES", str(tmp_path))
    assert get("mine").name == "mine"
    assert get(str(tmp_path / "mine.json")).name == "mine"


def test_scalars_lowest_terms():
    A = build_algebra(QQ, 1, "associative", {(0, 0): {0: QQ("2/4")}})
    d = fixture_to_dict(Fixture("half", A))
    assert d["structure"] == [[0, 0, 0, "1/2"]]


@given(st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)),
                       st.fractions(min_value=-4, max_value=4, max_denominator=5).filter(bool), max_size=4))
def test_round_trip_property(entries):
    # e_i e_i = c e_i and all other products zero: always associative
    struct = {(i, i): {i: QQ(c)} for (i, j), c in entries.items() if i == j}
    A = build_algebra(QQ, 3, "associative", struct)
    fx = Fixture("t", A, elements={"x": tuple(QQ(c) for c in (1, 0, -1))})
    text = dumps_fixture(fx)
    assert dumps_fixture(loads_fixture(text)) == text


def test_fp_fixture_scalars():
    fx = build("sl2_f5")
    assert fx.field == GF(5)
    text = dumps_fixture(fx)
    assert '"-2"' not in text  # residues are written in 0..p-1
