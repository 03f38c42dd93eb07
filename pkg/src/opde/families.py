"""Built-in golden instances: the triangle families with weight x^(u) y^(v).

Three polynomial families solve the same equation and are orthogonal for the
same weight x^(alpha-1) y^(beta-1) on the triangle x > 0, y > 0, x + y < 1:

  * the monic family, produced here directly by a terminating double
    hypergeometric sum (independent of the recurrence construction);
  * a non-monic family given by a Rodrigues formula with an explicit
    rising-factorial normalization;
  * a nested-Jacobi family built by substitution.

The latter two are connected to the monic family by explicit invertible
matrices, which the test suite verifies against three independent
construction routes.  The moment functional is normalized to L[1] = 1 so
every moment is an exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .matrix import RationalMatrix
from .pde import HypergeometricPDE
from .poly import BivariatePoly, Scalar, pochhammer, rat
from .rodrigues import rodrigues_eval
from .vectors import PolyVector, PolyVectorFamily
from .weights import PhiCase, WeightSpec, classify_phi
from . import golden

_X = BivariatePoly.variable(1)
_Y = BivariatePoly.variable(2)


@dataclass(frozen=True)
class AppellParams:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", rat(self.alpha))
        object.__setattr__(self, "beta", rat(self.beta))
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError("parameters must be positive")


def params(alpha: Scalar, beta: Scalar) -> AppellParams:
    return AppellParams(rat(alpha), rat(beta))


def appell_pde(p: AppellParams) -> HypergeometricPDE:
    return HypergeometricPDE.from_coeffs(
        a=-1, b1=1, b2=1, e=-(p.alpha + p.beta + 1), f1=p.alpha, f2=p.beta)


def appell_weight(p: AppellParams) -> WeightSpec:
    return WeightSpec(p.alpha - 1, p.beta - 1)


@lru_cache(maxsize=None)
def appell_phi_case(p: AppellParams) -> PhiCase:
    return classify_phi(appell_pde(p))[0]


# -- moment functional ------------------------------------------------------

def moment(p: AppellParams, i: int, j: int) -> Fraction:
    """L[x^i y^j] with L normalized to L[1] = 1: a ratio of rising
    factorials.  The closed form is pinned against a brute-force iterated
    polynomial integration oracle in the test suite."""
    if i < 0 or j < 0:
        raise ValueError("need i, j >= 0")
    return (pochhammer(p.alpha, i) * pochhammer(p.beta, j)
            / pochhammer(p.alpha + p.beta + 1, i + j))


def functional(p: AppellParams, poly: BivariatePoly) -> Fraction:
    """L applied to an arbitrary polynomial, term by term."""
    total = Fraction(0)
    for (i, j), c in poly.terms():
        total += c * moment(p, i, j)
    return total


def orthogonality_blocks(p: AppellParams, fam: PolyVectorFamily,
                         n: int, m: int) -> RationalMatrix:
    """The (m+1) x (n+1) matrix L[xvec(m) P_n^T]; zero when m < n, and an
    invertible matrix H_n when m = n."""
    rows = []
    for i in range(m + 1):
        mono = BivariatePoly.monomial(m - i, i)
        rows.append([functional(p, mono * q) for q in fam.vector(n)])
    return RationalMatrix(rows)


# -- monic family by terminating double series --------------------------------

def monic_appell_series(p: AppellParams, n: int, m: int) -> BivariatePoly:
    """Monic degree-(n+m) eigensolution via the terminating double
    hypergeometric sum; leading monomial x^n y^m with coefficient 1."""
    if n < 0 or m < 0:
        raise ValueError("need n, m >= 0")
    a, b = p.alpha, p.beta
    nm = n + m
    pref = (Fraction(-1) ** nm) * pochhammer(a, n) * pochhammer(b, m) \
        / pochhammer(a + b + nm, nm)
    out = BivariatePoly.zero()
    for j in range(n + 1):
        for k in range(m + 1):
            c = (pochhammer(a + b + nm, j + k)
                 * pochhammer(-n, j) * pochhammer(-m, k)
                 / (pochhammer(a, j) * pochhammer(b, k)
                    * factorial(j) * factorial(k)))
            out = out + BivariatePoly.monomial(j, k, c)
    return out * pref


def monic_appell_vector(p: AppellParams, n: int) -> PolyVector:
    return PolyVector([monic_appell_series(p, n - k, k) for k in range(n + 1)])


def monic_appell_family(p: AppellParams, big_n: int) -> PolyVectorFamily:
    return PolyVectorFamily([monic_appell_vector(p, n) for n in range(big_n + 1)])


# -- classical univariate building block ---------------------------------------

def jacobi(a: Scalar, b: Scalar, n: int) -> BivariatePoly:
    """Degree-n Jacobi polynomial in x, classical normalization
    P_n(1) = (a+1)_n / n!, by the exact three-term recurrence."""
    a, b = rat(a), rat(b)
    if a <= -1 or b <= -1:
        raise ValueError("need a, b > -1")
    if n < 0:
        raise ValueError("need n >= 0")
    p_prev = BivariatePoly.const(1)
    if n == 0:
        return p_prev
    p_cur = BivariatePoly({(1, 0): (a + b + 2) / 2, (0, 0): (a - b) / 2})
    for k in range(2, n + 1):
        c0 = 2 * k * (k + a + b) * (2 * k + a + b - 2)
        c1 = (2 * k + a + b - 1) * (a * a - b * b)
        c2 = (2 * k + a + b - 1) * (2 * k + a + b) * (2 * k + a + b - 2)
        c3 = 2 * (k + a - 1) * (k + b - 1) * (2 * k + a + b)
        nxt = ((c2 * _X + BivariatePoly.const(c1)) * p_cur - c3 * p_prev) * (1 / c0)
        p_prev, p_cur = p_cur, nxt
    return p_cur


# -- nested-Jacobi family -------------------------------------------------------

def koornwinder(p: AppellParams, n: int, m: int) -> BivariatePoly:
    """P_n^(2m+beta, alpha-1)(2x-1) (1-x)^m P_m^(0, beta-1)(2y/(1-x) - 1),
    expanded exactly: the (1-x)^m prefactor clears every denominator of the
    inner substitution."""
    inner_poly = jacobi(0, p.beta - 1, m)
    one_minus_x = BivariatePoly.const(1) - _X
    lever = 2 * _Y - one_minus_x  # (1-x) * (2y/(1-x) - 1)
    inner = BivariatePoly.zero()
    for k in range(m + 1):
        c = inner_poly.coefficient(k, 0)
        if c != 0:
            inner = inner + c * lever**k * one_minus_x**(m - k)
    outer_poly = jacobi(2 * m + p.beta, p.alpha - 1, n)
    t = 2 * _X - BivariatePoly.const(1)
    outer = BivariatePoly.zero()
    for k in range(n + 1):
        c = outer_poly.coefficient(k, 0)
        if c != 0:
            outer = outer + c * t**k
    return outer * inner


def koornwinder_vector(p: AppellParams, n: int) -> PolyVector:
    return PolyVector([koornwinder(p, n - i, i) for i in range(n + 1)])


# -- Rodrigues-normalized non-monic family --------------------------------------

def nonmonic_F(p: AppellParams, n: int, m: int) -> BivariatePoly:
    """x^(1-alpha) y^(1-beta) d^(n+m)/dx^n dy^m [x^(n+alpha-1) y^(m+beta-1)
    (1-x-y)^(n+m)] / ((alpha)_n (beta)_m), via the Rodrigues engine."""
    raw = rodrigues_eval(appell_weight(p), appell_phi_case(p), n, m)
    return raw * (1 / (pochhammer(p.alpha, n) * pochhammer(p.beta, m)))


def nonmonic_F_vector(p: AppellParams, n: int) -> PolyVector:
    return PolyVector([nonmonic_F(p, n - i, i) for i in range(n + 1)])


# -- connection matrices ---------------------------------------------------------

def connection_F(p: AppellParams, n: int) -> RationalMatrix:
    """Invertible matrix carrying the monic vector to the Rodrigues-normalized
    family: entry (i, j) is (-1)^n C(n, j) (alpha+n-i)_(n-j) (beta+i)_j /
    ((alpha)_(n-j) (beta)_j)."""
    a, b = p.alpha, p.beta
    sign = Fraction(-1) ** n

    def entry(i: int, j: int) -> Fraction:
        return (sign * comb(n, j) * pochhammer(a + n - i, n - j)
                * pochhammer(b + i, j)
                / (pochhammer(a, n - j) * pochhammer(b, j)))

    return RationalMatrix.from_function(n + 1, n + 1, entry)


def connection_K(p: AppellParams, n: int) -> RationalMatrix:
    """Lower-triangular invertible matrix carrying the monic vector to the
    nested-Jacobi family: entry (i, j) is (alpha+beta+n+i)_(n-i) (beta+j)_i /
    ((n-i)! j! (i-j)!) for i >= j, zero above the diagonal."""
    a, b = p.alpha, p.beta

    def entry(i: int, j: int) -> Fraction:
        if i < j:
            return Fraction(0)
        return (pochhammer(a + b + n + i, n - i) * pochhammer(b + j, i)
                / (factorial(n - i) * factorial(j) * factorial(i - j)))

    return RationalMatrix.from_function(n + 1, n + 1, entry)


GOLDEN_KINDS = ("B1", "B2", "C1", "C2", "W1", "W2", "S1", "S2",
                "T1", "T2", "V1", "V2", "Y1", "Y2", "Z1", "Z2")


def golden_matrices(p: AppellParams, n: int, which: str) -> RationalMatrix:
    """Closed-form entry tables for the monic triangle family's recurrence,
    structure and derivative-representation matrices (kept in a separate
    module so that agreement tests against the general constructions are
    genuinely independent)."""
    return golden.golden_matrix(p.alpha, p.beta, n, which)
