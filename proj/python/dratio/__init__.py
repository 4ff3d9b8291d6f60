"""Exact D-ratios of polynomial maps of the plane and height experiments.

Exact values come back as ``fractions.Fraction`` (or ``math.inf`` for an
infinite D-ratio); report functions return lists of dicts.
"""

import json
import math
from fractions import Fraction

from . import _dratio
from ._dratio import (
    DimensionUnsupported,
    IrrationalBasePoint,
    MapFileError,
    MapSpec,
    NotJointlyRegular,
    PairSpec,
    ParseError,
    TowerBudgetExceeded,
    base_points,
    compose,
    configuration_diagram,
    is_jointly_regular,
    load_map,
    load_pair,
    parse_map,
    parse_pair,
    pullback_table,
)

__all__ = [
    "DimensionUnsupported", "IrrationalBasePoint", "MapFileError", "MapSpec", "NotJointlyRegular",
    "PairSpec", "ParseError", "TowerBudgetExceeded", "base_points", "compose", "configuration_diagram",
    "d_ratio", "delta_s", "deficit", "expansion", "is_jointly_regular", "line_deficit", "load_map",
    "load_pair", "map_from_components", "monoid", "mu_weight", "orbit", "pair_deficit", "parse_map",
    "parse_pair", "preperiodic", "properties", "pullback_table", "resolve", "weil_height",
    "word_identity_check",
]


def _exact(text):
    if text in ("infinity", "inf"):
        return math.inf
    return Fraction(text)


def _ext_str(r):
    if r is None:
        return None
    if r == math.inf:
        return "inf"
    return str(Fraction(r))


def _records(jsonl):
    return [json.loads(line) for line in jsonl.splitlines() if line]


def _coords(point):
    return [str(Fraction(c)) for c in point]


def map_from_components(*components, vars=None):
    """Build a map of A^n from polynomial strings, e.g. ("x^3 + y", "x + y^2")."""
    n = len(components)
    names = list(vars) if vars else (["x", "y"] if n == 2 else [f"x{i + 1}" for i in range(n)])
    return parse_map(f"n = {n}\nvars = {', '.join(names)}\nf = ({', '.join(components)})\n")


def d_ratio(f, tower_cap=64):
    return _exact(_dratio.d_ratio(f, tower_cap))


def weil_height(point):
    """h(P) as (M, log M)."""
    m = int(_dratio.weil_height(_coords(point)))
    return m, math.log(m)


def delta_s(d1, d2, r):
    return Fraction(_dratio.delta_s(d1, d2, _ext_str(r)))


def mu_weight(word, d1, d2):
    return Fraction(_dratio.mu_weight(list(word), d1, d2))


def word_identity_check(m, d1, d2, r):
    return [(k, Fraction(lhs), Fraction(rhs), ok) for k, lhs, rhs, ok in _dratio.word_identity_check(m, d1, d2, _ext_str(r))]


def resolve(f, tower_cap=64):
    return _records(_dratio.resolve_report(f, tower_cap))


def properties(f, g=None):
    return _records(_dratio.properties_report(f, g))


def orbit(f, start, budget=64):
    return _records(_dratio.orbit_report(f, _coords(start), budget))


def preperiodic(f, bound="log 20", budget=64):
    return _records(_dratio.preper_report(f, bound, budget))


def deficit(f, bounds=("log 50",), r=None):
    return _records(_dratio.deficit_report(f, list(bounds), None if r is None else str(Fraction(r))))


def line_deficit(f, base, direction, parameters):
    return _records(_dratio.line_deficit_report(f, _coords(base), _coords(direction), list(parameters)))


def pair_deficit(pair, bounds=("log 50",), r1=None, r2=None):
    return _records(_dratio.pair_deficit_report(pair, list(bounds), _ext_str(r1), _ext_str(r2)))


def monoid(pair, words=12, bounds=("log 20",), node_budget=100000, max_depth=64, r1=None, r2=None):
    return _records(_dratio.monoid_report(pair, words, list(bounds), node_budget, max_depth, _ext_str(r1), _ext_str(r2)))


def expansion(f, windows, samples=2000, seed=1):
    return _records(_dratio.expansion_report(f, [(str(lo), str(hi)) for lo, hi in windows], samples, seed))
