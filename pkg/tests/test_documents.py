import json

import pytest
from hypothesis import given, settings

from corpus import F1, full_corpus
from pioformula import RecurrenceSpec, SpecError, classify
from pioformula.documents import AnalysisDocument, dump_spec, parse_spec
from strategies import specs


def test_parse_f1():
    text = json.dumps({"k": 7, "coeffs": [str(a) for a in F1.coeffs], "initial": [str(v) for v in F1.initial]})
    assert parse_spec(text) == F1


def test_big_integers_survive_as_strings():
    big = str(10**60 + 7)
    spec = parse_spec(json.dumps({"k": 1, "coeffs": ["-1"], "initial": [big]}))
    assert spec.initial == (10**60 + 7,)
    assert json.loads(dump_spec(spec))["initial"] == [big]


@pytest.mark.parametrize(
    "doc,field",
    [
        ("[1, 2]", "document"),
        ("{", "document"),
        ('{"coeffs": [], "initial": []}', "k"),
        ('{"k": 1, "coeffs": ["0"], "initial": ["1"]}', "coeffs"),
        ('{"k": 2, "coeffs": ["1"], "initial": ["1", "1"]}', "coeffs"),
        ('{"k": 1, "coeffs": ["1.5"], "initial": ["1"]}', "coeffs[0]"),
        ('{"k": 1, "coeffs": ["1"], "initial": [true]}', "initial[0]"),
        ('{"k": -1, "coeffs": [], "initial": []}', "k"),
    ],
)
def test_malformed_specs_name_the_field(doc, field):
    with pytest.raises(SpecError) as e:
        parse_spec(doc)
    assert e.value.field == field


def test_f1_document_layout():
    d = json.loads(AnalysisDocument.from_classification(classify(F1)).to_json())
    assert list(d) == ["format_version", "spec", "minimal_order", "minimal_coeffs", "m", "X", "classes"]
    assert d["format_version"] == 1
    assert d["m"] == 2 and d["X"] == [1]
    assert d["classes"][0] == {"residue": 1, "kind": "polynomial", "poly_coeffs": ["0", "-2", "0", "0", "1"]}
    assert d["classes"][1]["kind"] == "exponential"


def test_rational_coefficients_round_trip():
    # f(n) = n(n+1)/2 has coefficient 1/2
    spec = RecurrenceSpec((1, -3, 3), (1, 3, 6))
    text = AnalysisDocument.from_classification(classify(spec)).to_json()
    assert '"1/2"' in text
    assert AnalysisDocument.from_json(text).to_json() == text


def test_round_trip_corpus():
    for _, spec in full_corpus():
        text = AnalysisDocument.from_classification(classify(spec)).to_json()
        assert AnalysisDocument.from_json(text).to_json() == text


@given(specs(allow_zero=True))
@settings(max_examples=50, deadline=None)
def test_round_trip_is_byte_identical(spec):
    text = AnalysisDocument.from_classification(classify(spec)).to_json()
    assert AnalysisDocument.from_json(text).to_json() == text
    assert parse_spec(dump_spec(spec)) == spec


def test_rejects_non_canonical_rational():
    doc = json.loads(AnalysisDocument.from_classification(classify(F1)).to_json())
    doc["classes"][0]["poly_coeffs"][0] = "2/4"
    with pytest.raises(SpecError) as e:
        AnalysisDocument.from_json(json.dumps(doc))
    assert e.value.field == "classes[0].poly_coeffs[0]"
    doc["format_version"] = 2
    with pytest.raises(SpecError):
        AnalysisDocument.from_json(json.dumps(doc))
