import json

import pytest
from hypothesis import given, strategies as st

from symcomm.errors import ArgumentError
from symcomm.io import dumps, element_from_dict, element_to_dict, load_element, save_element
from symcomm.linalg import QI, Matrix
from symcomm import catalog

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(fractions, min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
def test_round_trip_rational(rows):
    m = Matrix.from_rows(rows)
    d = element_to_dict(m)
    assert d["field"] == "Q"
    assert element_from_dict(json.loads(json.dumps(d))) == m


def test_round_trip_gaussian(tmp_path):
    m = Matrix.from_rows([[QI(1, 2), 0], [QI(0, -1), QI(3, 0)]])
    path = tmp_path / "x.json"
    save_element(m, path)
    back = load_element(path)
    assert back == m and back.field == "Q(i)"


def test_catalog_element_file(tmp_path):
    z, _ = catalog.sp12_elements()
    save_element(z, tmp_path / "z.json")
    assert load_element(tmp_path / "z.json") == z


@pytest.mark.parametrize("bad", [
    {"entries": [["1"]]},
    {"n": 2, "entries": [["1", "0"]]},
    {"n": 1, "field": "R", "entries": [["1"]]},
    {"n": 1, "entries": [["1/0"]]},
    {"n": 1, "entries": [["abc"]]},
    {"n": 1, "field": "Q", "entries": [["1+1*i"]]},
])
def test_malformed(bad):
    with pytest.raises(ArgumentError):
        element_from_dict(bad)


def test_missing_file(tmp_path):
    with pytest.raises(ArgumentError):
        load_element(tmp_path / "nope.json")
    (tmp_path / "bad.json").write_text("{not json")
    with pytest.raises(ArgumentError):
        load_element(tmp_path / "bad.json")


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1, 2]}) == dumps({"a": [1, 2], "b": 1})
