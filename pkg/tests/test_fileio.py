import json
from fractions import Fraction

import pytest

from liegeo.fileio import (
    ParseError,
    Report,
    emit,
    emit_algebra,
    parse,
    serialize_algebra,
)
from liegeo.catalog import catalog_entry
from liegeo.filiform import heis3
from liegeo.linalg import unit_vec


L3_DOC = '{"dim":3,"brackets":[{"i":1,"j":2,"coeffs":[[3,"1"]]}]}'


def test_parse_heisenberg():
    doc = parse(L3_DOC)
    assert doc.dim == 3
    assert doc.algebra._table == heis3()._table
    assert doc.metric is None


def test_parse_gram_fraction():
    text = json.dumps(
        {
            "dim": 2,
            "brackets": [],
            "metric": {"gram": [["1", "1/2"], ["1/2", "1"]]},
        }
    )
    doc = parse(text)
    assert doc.metric.gram[0][1] == Fraction(1, 2)


def test_parse_rejects_equal_indices():
    bad = '{"dim":3,"brackets":[{"i":2,"j":2,"coeffs":[[3,"1"]]}]}'
    with pytest.raises(ParseError) as exc:
        parse(bad)
    assert exc.value.path == "brackets[0].i"


def test_parse_error_paths():
    cases = [
        ('{"brackets":[]}', "dim"),
        ('{"dim":3,"brackets":[{"i":1,"j":9,"coeffs":[]}]}', "brackets[0].j"),
        ('{"dim":3,"brackets":[{"i":1,"j":2,"coeffs":[[3,"0.5"]]}]}', "brackets[0].coeffs[0]"),
        ('{"dim":2,"brackets":[],"metric":{"gram":[["1","0"]]}}', "metric.gram"),
        ("not json", ""),
    ]
    for text, path in cases:
        with pytest.raises(ParseError) as exc:
            parse(text)
        assert exc.value.path == path


def test_parse_rejects_non_jacobi():
    bad = json.dumps(
        {
            "dim": 4,
            "brackets": [
                {"i": 1, "j": 2, "coeffs": [[3, "1"]]},
                {"i": 1, "j": 3, "coeffs": [[4, "1"]]},
                {"i": 2, "j": 3, "coeffs": [[3, "1"]]},
            ],
        }
    )
    with pytest.raises(ParseError) as exc:
        parse(bad)
    assert exc.value.path == "brackets"


def test_parse_rejects_indefinite_gram():
    bad = json.dumps(
        {"dim": 2, "brackets": [], "metric": {"gram": [["1", "2"], ["2", "1"]]}}
    )
    with pytest.raises(ParseError) as exc:
        parse(bad)
    assert exc.value.path == "metric.gram"


def test_roundtrip_is_idempotent():
    for name, params in (
        ("Ln", (6,)),
        ("LC", (2, 3, 4)),
        ("irreg6", ()),
        ("so3", ()),
        ("solv_rot", ()),
    ):
        g, metric, subs = catalog_entry(name, params)
        text = emit_algebra(serialize_algebra(g, metric, subs))
        doc = parse(text)
        text2 = emit_algebra(
            serialize_algebra(doc.algebra, doc.metric, doc.subalgebras)
        )
        assert text == text2
        doc2 = parse(text2)
        assert doc2.algebra._table == doc.algebra._table
        assert (doc2.metric is None) == (doc.metric is None)
        if doc.metric is not None:
            assert doc2.metric.gram == doc.metric.gram
        assert doc2.subalgebras == doc.subalgebras


def test_report_roundtrip():
    r = Report(
        "tg",
        verdicts={"totally_geodesic": "pass"},
        witnesses={"vector": ["1", "-1/2"]},
        residuals={"residual_sq": "0"},
        notes=["note"],
        elapsed="0.001",
    )
    again = Report.from_json(r.to_json())
    assert again == r
    assert Report.from_json(again.to_json()) == again
    text = emit(r, "text")
    assert "totally_geodesic" in text and "pass" in text
    # json output has sorted keys
    j = r.to_json()
    assert j == json.dumps(json.loads(j), sort_keys=True, indent=2) + "\n"


def test_subalgebra_named_parse():
    g, metric, subs = catalog_entry("Ln", (4,))
    text = emit_algebra(serialize_algebra(g, metric, subs))
    doc = parse(text)
    assert set(doc.subalgebras) == {"even", "center"}
    assert doc.subalgebras["even"].rows == (unit_vec(4, 1), unit_vec(4, 3))
