"""Weighted complete intersection threefolds.

Thin wrappers over the C++ core. Reports come back as plain dicts with the same
layout as the CLI's ``--format json`` output; series coefficients are ints.
"""

import json
from fractions import Fraction

from . import _core
from ._core import BasketInconsistency, Candidate, InvalidInput, PreconditionError

__all__ = [
    "BasketInconsistency",
    "Candidate",
    "InvalidInput",
    "PreconditionError",
    "basket_series",
    "chi_m",
    "classify",
    "initial_basket",
    "k3",
    "screen",
    "series",
    "table_method",
]


def _candidate(c):
    return c if isinstance(c, Candidate) else Candidate.parse(c)


def screen(candidate):
    """Numerical screen report for a Candidate or its text form."""
    return json.loads(_core._screen_json(_candidate(candidate)))


def series(candidate, bound):
    """Hilbert series coefficients c_0..c_bound."""
    return [int(c) for c in _core._series(_candidate(candidate), bound)]


def basket_series(basket, chi, chi2, alpha, bound):
    return [int(c) for c in _core._basket_series(basket, chi, chi2, alpha, bound)]


def table_method(coefficients):
    """Recover {weights, degrees, clean} from series coefficients."""
    return json.loads(_core._table_method([str(int(c)) for c in coefficients]))


def k3(basket, chi, chi2):
    return Fraction(_core._k3(basket, chi, chi2))


def chi_m(basket, chi, chi2, m):
    return Fraction(_core._chi_m(basket, chi, chi2, m))


def initial_basket(basket):
    return _core._initial_basket(basket)


def classify(alpha, bound=None, full=False, codims=(), tuple=None, jobs=1):
    """Run a classification driver and return the run report."""
    return json.loads(_core._classify(alpha, bound, full, set(codims), tuple, jobs))
