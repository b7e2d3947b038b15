"""Smoke tests for the python bindings."""

import json

import pytest

import mincq

CATENOID_PHI = {
    "type": "phi",
    "phi": [
        {"exp": 0, "coef": [["0", "0"], ["1/2", "0"], ["0", "-1/2"], ["0", "0"]]},
        {"exp": -1, "coef": [["0", "0"], ["0", "0"], ["0", "0"], ["-1", "0"]]},
        {"exp": -2, "coef": [["0", "0"], ["-1/2", "0"], ["0", "-1/2"], ["0", "0"]]},
    ],
}


def test_verify_catenoid():
    ok, lines = mincq.verify(json.dumps(CATENOID_PHI))
    assert ok
    assert lines


def test_convert_round_trip():
    pair = mincq.convert(json.dumps(CATENOID_PHI), "pair")
    assert json.loads(pair)["type"] == "pair"
    back = json.loads(mincq.phi(pair))
    want = {t["exp"]: t["coef"] for t in CATENOID_PHI["phi"]}
    got = {t["exp"]: t["coef"] for t in back["phi"]}
    # Exact rational coefficients survive the round trip.
    assert {e: [[str(x) for x in c] for c in cs] for e, cs in got.items()} == want


def test_surface_obj():
    obj = mincq.surface_obj(json.dumps(CATENOID_PHI), 0.5, 1.5, 0.5, 1.5, nu=5, nv=5)
    lines = obj.splitlines()
    assert sum(1 for l in lines if l.startswith("v ")) == 25
    assert sum(1 for l in lines if l.startswith("f ")) == 16


def test_sylvester_rank():
    i = json.dumps([["0", "0"], ["1", "0"], ["0", "0"], ["0", "0"]])
    ni = json.dumps([["0", "0"], ["-1", "0"], ["0", "0"], ["0", "0"]])
    assert mincq.sylvester_rank(i, ni) == "Rank2"


def test_ph_samples():
    # A = t + k: hodograph ((t^2 - 1), 2t, 0).
    spec = {
        "A": [
            {"exp": 1, "coef": [["1", "0"], ["0", "0"], ["0", "0"], ["0", "0"]]},
            {"exp": 0, "coef": [["0", "0"], ["0", "0"], ["0", "0"], ["1", "0"]]},
        ]
    }
    rows = mincq.ph_samples(json.dumps(spec), 0.0, 1.0, 3)
    assert len(rows) == 3
    t, x, y, z = rows[2]
    assert t == 1.0
    assert abs(x - (1.0 / 3 - 1.0)) < 1e-12
    assert abs(y - 1.0) < 1e-12
    assert z == 0.0


def test_parse_error():
    with pytest.raises(mincq.ParseError):
        mincq.verify("{ not json")


def test_examples(tmp_path):
    names = mincq.example_names()
    assert "catenoid" in names
    rep = mincq.run_example("catenoid", str(tmp_path))
    assert rep["ok"]
    with pytest.raises(mincq.UnknownExample):
        mincq.run_example("nope", str(tmp_path))
