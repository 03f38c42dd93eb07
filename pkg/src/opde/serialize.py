"""JSON wire formats.

Rationals travel as strings "p/q" ("p" when the denominator is 1); decimals
are rejected, never parsed.  A polynomial is a list of [i, j, "p/q"] triples,
leading terms first (total degree descending, then the y-power ascending,
matching the monomial-vector ordering within each degree).  A matrix is a
row-major nested list of rational strings.  Parsing is strict: anything the
emitter cannot produce is a ValueError.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Dict, List

from .matrix import RationalMatrix
from .pde import HypergeometricPDE
from .poly import BivariatePoly
from .vectors import PolyVector
from .weights import WeightSpec

_RAT = re.compile(r"^-?\d+(/[1-9]\d*)?$")

PDE_FIELDS = ("a", "b1", "c1", "b2", "c2", "b3", "c3", "d3", "e", "f1", "f2")


def format_rational(q: Fraction) -> str:
    return str(q)


def parse_rational(s: Any) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str) or not _RAT.match(s):
        raise ValueError(f"not an exact rational string: {s!r}")
    return Fraction(s)


def poly_to_json(p: BivariatePoly) -> List[list]:
    triples = [(i, j, format_rational(c)) for (i, j), c in p.terms()]
    triples.sort(key=lambda t: (-(t[0] + t[1]), t[1]))
    return [list(t) for t in triples]


def poly_from_json(data: Any) -> BivariatePoly:
    if not isinstance(data, list):
        raise ValueError("polynomial must be a list of [i, j, coeff] triples")
    terms = {}
    for item in data:
        if not (isinstance(item, list) and len(item) == 3):
            raise ValueError(f"bad polynomial term: {item!r}")
        i, j, c = item
        if not (isinstance(i, int) and isinstance(j, int) and i >= 0 and j >= 0):
            raise ValueError(f"bad exponents in term: {item!r}")
        if (i, j) in terms:
            raise ValueError(f"duplicate exponent pair {(i, j)}")
        terms[(i, j)] = parse_rational(c)
    return BivariatePoly(terms)


def matrix_to_json(m: RationalMatrix) -> List[List[str]]:
    return [[format_rational(v) for v in row] for row in m.rows]


def matrix_from_json(data: Any) -> RationalMatrix:
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ValueError("matrix must be a nested list")
    return RationalMatrix([[parse_rational(v) for v in row] for row in data])


def vector_to_json(v: PolyVector) -> List[list]:
    return [poly_to_json(p) for p in v]


def vector_from_json(data: Any) -> PolyVector:
    if not isinstance(data, list):
        raise ValueError("polynomial vector must be a list of polynomials")
    return PolyVector([poly_from_json(p) for p in data])


def pde_to_json(pde: HypergeometricPDE) -> Dict[str, str]:
    return {k: format_rational(getattr(pde, k)) for k in PDE_FIELDS}


def pde_from_json(data: Any) -> HypergeometricPDE:
    if not isinstance(data, dict):
        raise ValueError("equation must be a flat JSON object of coefficients")
    unknown = set(data) - set(PDE_FIELDS)
    if unknown:
        raise ValueError(f"unknown coefficient keys: {sorted(unknown)}")
    missing = set(PDE_FIELDS) - set(data)
    if missing:
        raise ValueError(f"missing coefficient keys: {sorted(missing)}")
    return HypergeometricPDE(**{k: parse_rational(data[k]) for k in PDE_FIELDS})


def weight_to_json(w: WeightSpec) -> Dict[str, Any]:
    return {
        "u": format_rational(w.u),
        "v": format_rational(w.v),
        "factors": [[poly_to_json(q), format_rational(e)] for q, e in w.factors],
    }


def weight_from_json(data: Any) -> WeightSpec:
    if not isinstance(data, dict) or not {"u", "v"} <= set(data):
        raise ValueError("weight must be an object with keys u, v, factors")
    factors = []
    for item in data.get("factors", []):
        if not (isinstance(item, list) and len(item) == 2):
            raise ValueError(f"bad weight factor: {item!r}")
        factors.append((poly_from_json(item[0]), parse_rational(item[1])))
    return WeightSpec(parse_rational(data["u"]), parse_rational(data["v"]),
                      tuple(factors))
