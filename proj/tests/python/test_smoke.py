import json
import os

import jsonschema
import pytest

import linpoly


def test_factor_round_trip():
    r = linpoly.factor("2", "X^7+X")
    degrees = sorted(f["degree"] for f in r["factors"] for _ in range(f["multiplicity"]))
    assert sum(degrees) == 7


def test_group_orders():
    assert linpoly.group_order(3, 2) == 168
    assert linpoly.group_order(4, 2, 2) == 360


def test_classify_certifies():
    r = linpoly.classify("2", "1:1;3:1")
    assert r["verdict"] == "CertifiedGL"


def test_errors_raise():
    with pytest.raises(linpoly.LinpolyError):
        linpoly.factor("6", "X")
    with pytest.raises(ValueError):
        linpoly.verify_theorem(2, 4)


def test_reproduce_matches_schema():
    doc = linpoly.reproduce_paper(seed=linpoly.DEFAULT_SEED, meta=False)
    with open(os.environ["LINPOLY_SCHEMA"]) as fh:
        schema = json.load(fh)
    jsonschema.validate(doc, schema)
    assert doc["pass"] is True
    again = linpoly.reproduce_paper(seed=linpoly.DEFAULT_SEED, meta=False)
    assert json.dumps(doc) == json.dumps(again)
