import json
import os
from fractions import Fraction
from math import comb

import pytest

import apolar

FIXTURES = os.environ.get("APOLAR_FIXTURES", os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"))


def power_sum(d, terms):
    coeffs = [Fraction(0)] * (d + 1)
    for (a, b), c in terms:
        for i in range(d + 1):
            coeffs[i] += c * comb(d, i) * Fraction(a) ** (d - i) * Fraction(b) ** i
    return [str(c) for c in coeffs]


F1 = power_sum(5, [((1, 0), -2), ((0, 1), 2), ((1, -1), 1)])
F2 = power_sum(5, [((1, 0), -6), ((0, 1), 3), ((1, -1), 2)])


def test_closed_forms():
    assert apolar.kmin_formula(5, 2) == 4
    assert apolar.kmin_formula(19, 3) == 15
    assert apolar.vssp_dim_formula(5, 2, 3) is None
    assert apolar.vssp_dim_formula(5, 2, 5) == 3


def test_worked_pair():
    assert [apolar.graded_intersection_dim(5, [F1, F2], k) for k in (3, 4, 5)] == [1, 2, 4]
    k, witness = apolar.kmin(5, [F1, F2])
    assert k == 3
    dec = apolar.decompose(5, [F1, F2], 3)
    assert dec["exact"]
    forms = {tuple(Fraction(x) for x in l) for l in dec["linear_forms"]}
    assert forms == {(1, 0), (0, 1), (1, -1)}
    assert apolar.decompose(5, [F1, F2], 2) is None


def test_predict_and_errors():
    assert apolar.predict(5, 3) == [(0, 3, None), (1, 4, 0), (2, 5, 3)]
    with pytest.raises(ValueError):
        apolar.kmin(5, [F1, F1])
    with pytest.raises(ValueError):
        apolar.kmin(2, [["1", "2"]])


def test_cli_json():
    code, out, _ = apolar.run_cli(["--json", "vsps", os.path.join(FIXTURES, "quintic_pair.json"), "--k", "3"])
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "apolar/1"
    assert doc["projective_dim"] == 0
