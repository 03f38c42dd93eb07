"""Closed-form entry tables for the monic triangle family.

Every matrix of the recurrence (B, C), structure (W, S, T) and derivative
representation (V, Y, Z) of the monic family orthogonal for x^(alpha-1)
y^(beta-1) on the triangle has explicit banded entries in (alpha, beta, n, i).
They are kept verbatim here, physically separate from the general
constructions in ``relations``/``monic``, so that agreement tests between the
two are meaningful.  Entries that failed the exact identity oracle were
corrected; see ERRATA.md for the list.

Validity ranges: B from n = 0, C/W/S/T from n = 1, V/Y/Z from n = 2
(derivative representations need three derivative layers).  Outside these,
IndexOutOfPrintedRange is raised.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict

from .errors import IndexOutOfPrintedRange
from .matrix import RationalMatrix
from .poly import Scalar, rat


def _b1(a: Fraction, b: Fraction, n: int) -> RationalMatrix:
    d0, d1 = 2 * n - 1 + a + b, 2 * n + 1 + a + b
    m = RationalMatrix.zeros(n + 1, n + 1).tolist()
    for i in range(n + 1):
        m[i][i] = (-Fraction((n - i) * 1) * (a + n - 1 - i) / d0
                   + (n + 1 - i) * (a + n - i) / d1)
    for i in range(n):
        m[i + 1][i] = Fraction(-2 * (i + 1)) * (b + i) / (d0 * d1)
    return RationalMatrix(m)


def _b2(a: Fraction, b: Fraction, n: int) -> RationalMatrix:
    d0, d1 = 2 * n - 1 + a + b, 2 * n + 1 + a + b
    m = RationalMatrix.zeros(n + 1, n + 1).tolist()
    for i in range(n + 1):
        m[i][i] = 1 + i * (2 * n - i + a) / d0 - (i + 1) * (a + 2 * n + 1 - i) / d1
    for i in range(n):
        m[i][i + 1] = -2 * (n - i) * (a + n - 1 - i) / (d0 * d1)
    return RationalMatrix(m)


def _c_den(a: Fraction, b: Fraction, n: int) -> Fraction:
    return (2 * n + a + b) * (2 * n - 1 + a + b) ** 2 * (2 * n - 2 + a + b)


def _c1(a: Fraction, b: Fraction, n: int) -> RationalMatrix:
    d = _c_den(a, b, n)
    m = RationalMatrix.zeros(n + 1, n).tolist()
    for i in range(n):
        m[i][i] = (n - i) * (a + n - 1 - i) * (n + i + b) * (n - 1 + i + a + b) / d
        m[i + 1][i] = (-(i + 1) * (b + i)
                       * (2 * (n - i - 1) * (n + i + b) + a * (2 * n + a + b - 2)) / d)
    for i in range(n - 1):
        m[i + 2][i] = (i + 2) * (i + 1) * (b + i) * (b + i + 1) / d
    return RationalMatrix(m)


def _c2(a: Fraction, b: Fraction, n: int) -> RationalMatrix:
    d = _c_den(a, b, n)
    m = RationalMatrix.zeros(n + 1, n).tolist()
    for i in range(n):
        m[i][i] = (-(n - i) * (a + n - 1 - i)
                   * (b * (2 * n - 2 + b) + a * (2 * i + b) + 2 * i * (2 * n - 1 - i)) / d)
        m[i + 1][i] = (i + 1) * (a + 2 * n - 1 - i) * (b + i) * (a + b + 2 * n - 2 - i) / d
    for i in range(n - 1):
        m[i][i + 1] = (n - i) * (n - 1 - i) * (a + n - 1 - i) * (a + n - 2 - i) / d
    return RationalMatrix(m)


def _w1(a: Fraction, b: Fraction, n: int) -> RationalMatrix:
    m = RationalMatrix.zeros(n + 1, n + 2).tolist()
    for i in range(n + 1):
        m[i][i] = m[i][i + 1] = Fraction(i - n)
    return RationalMatrix(m)


def _w2(a: Fraction, b: Fraction, n: int) -> RationalMatrix:
    m = RationalMatrix.zeros(n + 1, n + 2).tolist()
    for i in range(n + 1):
        m[i][i] = m[i][i + 1] = Fraction(-i)
    return RationalMatrix(m)


def _s1(a: Fraction, b: Fraction, n: int) -> RationalMatrix:
    d = (2 * n - 1 + a + b) * (2 * n + 1 + a + b)
    m = RationalMatrix.zeros(n + 1, n + 1).tolist()
    for i in range(n):
        m[i][i] = (-(n - i) * (-n + (2 * n - 1) * i - 4 * i * i
                               + (n - 2 - 3 * i) * b
                               + a * (n - 1 + i + a + b)) / d)
        m[i][i + 1] = -(n - i) * (n - 1 - i + a) * (2 * i + 1 + a + b) / d
    for i in range(n - 1):
        m[i + 1][i] = 2 * (i + 1) * (n - 1 - i) * (b + i) / d
    return RationalMatrix(m)


def _s2(a: Fraction, b: Fraction, n: int) -> RationalMatrix:
    d = (2 * n - 1 + a + b) * (2 * n + 1 + a + b)
    m = RationalMatrix.zeros(n + 1, n + 1).tolist()
    for i in range(1, n + 1):
        m[i][i] = i * (b - b * b - i + b * i + 4 * i * i
                       - a * (-2 + b + 3 * i - 2 * n)
                       - 2 * (-1 + b + 3 * i) * n + 2 * n * n) / d
    for i in range(n):
        m[i + 1][i] = -(1 + i) * (b + i) * (-1 + a + b - 2 * i + 2 * n) / d
        m[i][i + 1] = 2 * i * (n - i) * (-1 + a - i + n) / d
    return RationalMatrix(m)


def _t1(a: Fraction, b: Fraction, n: int) -> RationalMatrix:
    d = _c_den(a, b, n)
    m = RationalMatrix.zeros(n + 1, n).tolist()
    for i in range(n):
        m[i][i] = ((n - i) * (n - 1 + a - i)
                   * (b * b * (1 + i) + i * i * (1 + 3 * i) + a * b * (1 + n)
                      + a * a * (n - i)
                      + b * (i * (3 + 4 * i) + n * (-2 * i + n))
                      + n * (-((-2 + i) * i) + n * (-1 - i + n))
                      + a * (i * (2 + i) + n * (-1 - 2 * i + 2 * n))) / d)
    for i in range(n - 1):
        m[i][i + 1] = ((n - i) * (n - i - 1) * (a + n - 2 - i) * (a + n - i - 1)
                       * (a + b + n + i) / d)
        m[i + 1][i] = ((b + i) * (n - i - 1) * (i + 1)
                       * (a * (a + b + n + i - 1) + b * (n - 2 * i - 3)
                          + (-2 + (2 * n - 5) * i - 3 * i * i)) / d)
    for i in range(n - 2):
        m[i + 2][i] = -(b + i) * (b + i + 1) * (n - i - 2) * (i + 1) * (i + 2) / d
    return RationalMatrix(m)


def _t2(a: Fraction, b: Fraction, n: int) -> RationalMatrix:
    d = _c_den(a, b, n)
    m = RationalMatrix.zeros(n + 1, n).tolist()
    for i in range(1, n):
        m[i][i] = (i * (n - i) * (-1 + a - i + n)
                   * (a * b + b * b - i * (1 + 3 * i - 4 * n)
                      - b * (2 + i - 2 * n) + a * (-1 + 2 * i - n)
                      - n * (1 + n)) / d)
    for i in range(1, n - 1):
        m[i][i + 1] = (-i * (n - 1 - i) * (n - i) * (-2 + a - i + n)
                       * (-1 + a - i + n) / d)
    for i in range(n):
        m[i + 1][i] = ((1 + i) * (b + i)
                       * (-3 * (1 + i) ** 3
                          + (1 + n) * (a + n) * (a + b + 2 * n)
                          + (1 + i) ** 2 * (1 + 4 * a + b + 8 * n)
                          - (1 + i) * (a * (3 + a) - (-2 + b) * b
                                       + 4 * n + 6 * a * n + 6 * n * n)) / d)
    for i in range(n - 1):
        m[i + 2][i] = ((1 + i) * (2 + i) * (b + i) * (1 + b + i)
                       * (-2 + a + b - i + 2 * n) / d)
    return RationalMatrix(m)


def _v1(a: Fraction, b: Fraction, n: int) -> RationalMatrix:
    return RationalMatrix.from_function(
        n + 1, n + 1, lambda i, k: Fraction(1, n + 1 - i) if i == k else 0)


def _v2(a: Fraction, b: Fraction, n: int) -> RationalMatrix:
    return RationalMatrix.from_function(
        n + 1, n + 1, lambda i, k: Fraction(1, i + 1) if i == k else 0)


def _y1(a: Fraction, b: Fraction, n: int) -> RationalMatrix:
    d = (2 * n + 1 + a + b) * (2 * n - 1 + a + b)
    m = RationalMatrix.zeros(n + 1, n).tolist()
    for i in range(n):
        m[i][i] = (2 * i + 1 - a + b) / d
        m[i + 1][i] = -2 * (i + 1) * (b + i) / ((n - i) * d)
    return RationalMatrix(m)


def _y2(a: Fraction, b: Fraction, n: int) -> RationalMatrix:
    d = (2 * n + 1 + a + b) * (2 * n - 1 + a + b)
    m = RationalMatrix.zeros(n + 1, n).tolist()
    for i in range(n):
        m[i][i] = -2 * (n - i) * (n - 1 - i + a) / ((1 + i) * d)
        m[i + 1][i] = (2 * n - 1 - 2 * i + a - b) / d
    return RationalMatrix(m)


def _z1(a: Fraction, b: Fraction, n: int) -> RationalMatrix:
    d = _c_den(a, b, n)
    m = RationalMatrix.zeros(n + 1, n - 1).tolist()
    for i in range(n - 1):
        m[i][i] = -(n - i) * (n - 1 - i + a) * (n + i + b) / d
        m[i + 1][i] = (i + 1) * (-2 * (i + 1) + a - b) * (b + i) / d
        m[i + 2][i] = ((i + 1) * (i + 2) * (b + i) * (b + i + 1)
                       / ((n - 1 - i) * d))
    return RationalMatrix(m)


def _z2(a: Fraction, b: Fraction, n: int) -> RationalMatrix:
    d = _c_den(a, b, n)
    m = RationalMatrix.zeros(n + 1, n - 1).tolist()
    for i in range(n - 1):
        m[i][i] = ((n - 1 - i) * (n - i) * (-2 + a - i + n) * (-1 + a - i + n)
                   / ((1 + i) * d))
        m[i + 1][i] = -((n - 1 - i) * (-2 + a - i + n) * (a - b + 2 * (n - 1 - i))) / d
        m[i + 2][i] = -((2 + i) * (1 + b + i) * (-2 + a - i + 2 * n)) / d
    return RationalMatrix(m)


_TABLE: Dict[str, tuple] = {
    "B1": (_b1, 0), "B2": (_b2, 0),
    "C1": (_c1, 1), "C2": (_c2, 1),
    "W1": (_w1, 1), "W2": (_w2, 1),
    "S1": (_s1, 1), "S2": (_s2, 1),
    "T1": (_t1, 1), "T2": (_t2, 1),
    "V1": (_v1, 2), "V2": (_v2, 2),
    "Y1": (_y1, 2), "Y2": (_y2, 2),
    "Z1": (_z1, 2), "Z2": (_z2, 2),
}


def golden_matrix(alpha: Scalar, beta: Scalar, n: int, which: str) -> RationalMatrix:
    if which not in _TABLE:
        raise KeyError(f"unknown matrix kind {which!r}; choose from {sorted(_TABLE)}")
    builder, n_min = _TABLE[which]
    if n < n_min:
        raise IndexOutOfPrintedRange(f"{which} entry table starts at n = {n_min}")
    return builder(rat(alpha), rat(beta), n)
