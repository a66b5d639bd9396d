import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from shiftpois.documents import Document, DocumentError, from_json, load, parse, serialize, to_json
from shiftpois.simplicial import interpolate
from shiftpois.linfinity import PolyvectorFamily
from shiftpois.polyvectors import PolyvectorSpace
from shiftpois.suites import koszul_tate, mixed_plane, plane, random_members, truncated_tower

PRESENTATIONS = [(plane, 0), (koszul_tate, -1), (mixed_plane, -1), (mixed_plane, 1)]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, len(PRESENTATIONS) - 1), st.integers(0, 10**6), st.booleans())
def test_round_trip(which, seed, with_simplex):
    make, n = PRESENTATIONS[which]
    rng = random.Random(seed)
    space = PolyvectorSpace(make(), n, 4, 1)
    members = random_members(space, rng, [2, 3], 2)
    doc = Document(make(), n, {"degree": 4, "weight": 5}, members)
    if with_simplex:
        other = PolyvectorFamily(space, truncated_tower(space, 3, 1, rng))
        S = interpolate(PolyvectorFamily(space, members), other)
        doc.simplex = (1, S.members)
    text = serialize(doc)
    back = parse(text)
    assert to_json(back) == json.loads(text)
    assert back.family == doc.family
    assert back.cdga == doc.cdga and back.n == n and back.caps == doc.caps
    if with_simplex:
        assert back.simplex == doc.simplex


def test_rationals_are_strings():
    data = {
        "format": 1,
        "cdga": {"generators": [{"name": "x", "degree": 0}, {"name": "y", "degree": 0}]},
        "n": 0,
        "family": {"2": [{"coefficient": " 3 / 6 ", "monomial": {"x": 1}, "d": ["x", "y"]},
                         {"coefficient": 2, "monomial": {}, "d": ["y", "x"]}]},
    }
    doc = from_json(data)
    out = to_json(doc)["family"]["2"]
    coeffs = sorted(t["coefficient"] for t in out)
    assert coeffs == ["-2", "1/2"]
    assert Fraction(1, 2) in doc.family[2].terms.values()


def test_odd_squares_vanish_on_input():
    data = {"format": 1,
            "cdga": {"generators": [{"name": "x", "degree": 0}, {"name": "xi", "degree": -1}],
                     "differential": {"xi": [{"coefficient": 1, "monomial": {"x": 2}},
                                             {"coefficient": 1, "monomial": {"xi": 2}}]}}}
    doc = from_json(data)
    assert doc.cdga.dvalues[1] == {(2, 0): 1}


def error_for(text, **kw):
    with pytest.raises(DocumentError) as e:
        parse(text, **kw)
    return e.value


def test_schema_error_is_located():
    text = '{\n  "cdga": {\n    "generators": [\n      {"name": "x", "degree": "zero"}\n    ]\n  }\n}\n'
    e = error_for(text)
    assert (e.line, e.column) == (4, 31)
    assert "schema" in str(e) and "line 4" in str(e)


def test_undeclared_generator_is_located():
    text = ('{"cdga": {"generators": [{"name": "x", "degree": 0}]},\n'
            ' "n": 0,\n'
            ' "family": {"2": [{"coefficient": "1", "monomial": {"q": 1}, "d": ["x", "x"]}]}}')
    e = error_for(text)
    assert e.line == 3 and "undeclared generator 'q'" in str(e)


def test_bad_json_and_zero_denominator():
    e = error_for('{"cdga": {"generators": [}')
    assert e.line == 1
    e = error_for('{"cdga": {"generators": [{"name": "x", "degree": 0}],\n'
                  ' "differential": {"x": [{"coefficient": "1/0"}]}}}')
    assert e.line == 2
    with pytest.raises(DocumentError):
        load("/nonexistent/document.json")


def test_family_with_wrong_degree_is_a_document_error():
    text = json.dumps({"cdga": {"generators": [{"name": "x", "degree": 0}]}, "n": 0,
                       "family": {"2": [{"coefficient": "1", "d": ["x"]}]}})
    assert "invalid family" in str(error_for(text))


def test_linfinity_block():
    data = {"cdga": {"generators": [{"name": "x", "degree": 0}, {"name": "y", "degree": 0}]}, "n": 0,
            "linfinity": {"2": [{"inputs": [{"y": 1}, {"x": 1}], "value": [{"coefficient": "-1"}]}]}}
    doc = from_json(data)
    q2 = doc.linfinity_family().maps[2]
    x, y = (1, 0), (0, 1)
    # x and y are odd in A[1], so swapping them flips the sign
    assert q2(x, y) == {(0, 0): 1} and q2(y, x) == {(0, 0): -1}
    assert to_json(doc)["linfinity"] == {"2": [{"inputs": [{"y": 1}, {"x": 1}],
                                                 "value": [{"coefficient": "-1", "monomial": {}}]}]}
    bad = dict(data, linfinity={"2": [{"inputs": [{"x": 1}], "value": []}]})
    with pytest.raises(DocumentError, match="needs 2 inputs"):
        from_json(bad)
    with pytest.raises(DocumentError, match="q_1"):
        from_json(dict(data, linfinity={"1": []})).linfinity_family()


def test_overrides():
    data = {"cdga": {"generators": [{"name": "x", "degree": 0}]}, "n": 0, "caps": {"degree": 2}}
    doc = from_json(data, n=-1, degree_cap=5, weight_cap=6)
    assert (doc.n, doc.degree_cap, doc.weight_cap, doc.probe_cap) == (-1, 5, 6, 1)
    nodoc = from_json({"cdga": data["cdga"]})
    with pytest.raises(DocumentError, match="shift n"):
        nodoc.space()
