# Copyright 2026 The tadic Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from fractions import Fraction

import pytest

import tadic


def test_polygons():
    assert tadic.arithmetic_polygon("0..3", 5, 6) == [0, 2, 2, 4, 6, 6]
    assert tadic.hodge_polygon("0..3", 4) == [0, Fraction(1, 3), Fraction(2, 3), 1]
    assert tadic.varpi("0..3", 11, 2) == 6


def test_hasse():
    polys = dict(tadic.hasse("0..3", 11))
    assert polys[2] == "2*y1*y3^3 + 3*y2^2*y3^2"
    assert tadic.hasse_value(11, 1, "0..3", {1: 4, 2: 1, 3: 1}) == 0
    assert tadic.hasse_value(11, 1, "0..3", {1: 1, 3: 1}) == 2


def test_lfun_kloosterman():
    out = tadic.lfun(5, "-1..1", {-1: 1, 1: 1})
    assert out["L"]["degree"] == 2
    assert out["report"]["np_L"]["slopes"] == [0, 4]
    assert out["report"]["equal"]


def test_lfun_non_generic():
    report = tadic.lfun(11, "0..3", {1: 4, 2: 1, 3: 1})["report"]
    assert not report["equal"]
    assert not report["hasse_nonzero"]
    assert report["consistent"]


def test_certify():
    assert tadic.certify(7, "0..2", {1: 1, 2: 1})["status"] == "granted"
    assert tadic.certify(11, "0..3", {1: 4, 2: 1, 3: 1})["status"] == "denied"


def test_errors():
    with pytest.raises(tadic.BudgetError):
        tadic.lfun(5, "0..3", {3: 1}, budget=10)
    with pytest.raises(tadic.PreconditionError):
        tadic.lfun(5, "0..3", {2: 1})
    assert issubclass(tadic.BudgetError, tadic.TadicError)


def test_verify():
    results = tadic.verify([2, 9])
    assert [r["verdict"] for r in results] == ["PASS", "PASS"]
    assert results[1]["line"].startswith("criterion 9 [trace-formula]: PASS")
