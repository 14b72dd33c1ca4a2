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

"""T-adic exponential sums over the one-dimensional torus.

Coefficients are given as a mapping from exponent to the index of a field
element (base-p digits of the polynomial-basis coordinates, constant first).
"""

import json
from fractions import Fraction

from ._tadic import (
    BudgetError,
    PrecisionError,
    PreconditionError,
    PropertyViolation,
    TadicError,
    hasse,
    hasse_value,
    varpi,
    verify,
)
from . import _tadic

__all__ = [
    "BudgetError",
    "PrecisionError",
    "PreconditionError",
    "PropertyViolation",
    "TadicError",
    "arithmetic_polygon",
    "certify",
    "hasse",
    "hasse_value",
    "hodge_polygon",
    "lfun",
    "varpi",
    "verify",
]


def arithmetic_polygon(delta, p, length):
    """Slopes of the arithmetic polygon as Fractions."""
    return [Fraction(s) for s in _tadic.arithmetic_polygon(delta, p, length)]


def hodge_polygon(delta, length):
    """Slopes of the Hodge polygon as Fractions."""
    return [Fraction(s) for s in _tadic.hodge_polygon(delta, length)]


def lfun(p, delta, coeffs, a=1, m=1, budget=100_000_000):
    """L-function coefficients, valuations and the polygon report."""
    return json.loads(_tadic.lfun_json(p, a, delta, dict(coeffs), m, budget))


def certify(p, delta, coeffs, a=1, prec_p=2):
    """Turning-point certificate from the Dwork operator."""
    return json.loads(_tadic.certify_json(p, a, delta, dict(coeffs), prec_p))
