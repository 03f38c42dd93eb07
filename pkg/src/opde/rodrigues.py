"""Symbolic evaluation of Rodrigues-type formulas.

A weighted expression is

    F_0^(e_0) * F_1^(e_1) * ... * F_k^(e_k) * poly

over a factor basis fixed per computation (x, y, the supplied weight factors,
plus whatever extra factors the weight-shift polynomials contribute).  The
representation is closed under partial differentiation: one derivative
decrements every factor exponent and folds the product rule, cleared of
denominators, into the polynomial part.

The degree-(n+m) eigensolution attached to a weight rho and factor pair
(phi10, phi01) is

    (1 / rho) * d^(n+m) / dx^n dy^m [ rho * phi10^n * phi01^m ]

with the normalizing constant fixed to 1.  Division by rho is exponent
subtraction; leftover integer exponents are folded back into the polynomial
part by expansion or exact division.  Weights whose residual exponents are
not integers are outside the supported class and are rejected, never
approximated.

The derivative-order variant produces, for every admissible index tuple, an
exact polynomial eigensolution of the (r, s)-derived equation.  It agrees
with the literal mixed derivative of the base output (up to a nonzero
rational) on univariate chains (n = 0 or m = 0), at full depth
(r, s) = (n, m) and at (r, s) = (0, 0); for intermediate mixed orders the
two are distinct members of the same multi-dimensional eigenspace (see
ERRATA.md).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .errors import DegreeMismatch, NotDivisible, NotReducible
from .poly import BivariatePoly
from .weights import PhiCase, WeightSpec

_X = BivariatePoly.variable(1)
_Y = BivariatePoly.variable(2)


@dataclass(frozen=True)
class WeightedExpr:
    factors: Tuple[BivariatePoly, ...]
    exponents: Tuple[Fraction, ...]
    poly: BivariatePoly

    def __post_init__(self):
        if len(self.factors) != len(self.exponents):
            raise ValueError("one exponent per factor")


def weighted_diff(expr: WeightedExpr, axis: int) -> WeightedExpr:
    """Exact partial derivative.  Every exponent drops by one; the polynomial
    part becomes sum_i e_i * dF_i * prod_{j != i} F_j * poly + prod F_j * dpoly."""
    facs = expr.factors
    k = len(facs)
    # prefix[i] = F_0 ... F_{i-1},  suffix[i] = F_{i+1} ... F_{k-1}
    prefix = [BivariatePoly.const(1)]
    for f in facs:
        prefix.append(prefix[-1] * f)
    suffix = [BivariatePoly.const(1)] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = facs[i] * suffix[i + 1]
    new_poly = prefix[k] * expr.poly.diff(axis)
    for i, f in enumerate(facs):
        df = f.diff(axis)
        if expr.exponents[i] != 0 and not df.is_zero():
            new_poly = new_poly + (expr.exponents[i] * df) * (prefix[i] * suffix[i + 1]) * expr.poly
    return WeightedExpr(facs, tuple(e - 1 for e in expr.exponents), new_poly)


def _peel(phi: BivariatePoly, basis: List[BivariatePoly]
          ) -> Tuple[List[int], Fraction]:
    """Write phi as const * prod basis[i]^mult[i], extending the basis with
    one opaque residual factor if needed."""
    counts = [0] * len(basis)
    rem = phi
    for idx, f in enumerate(basis):
        while True:
            try:
                rem = rem.exact_div(f)
                counts[idx] += 1
            except NotDivisible:
                break
    if rem.degree() == 0:
        return counts, rem.coefficient(0, 0)
    basis.append(rem)
    counts.append(1)
    return counts, Fraction(1)


def _assemble(w: WeightSpec, case: PhiCase, pow10: int, pow01: int):
    """Factor basis, the weight's own exponents, the phi multiplicity
    vectors, and the scalar contents of the two phi factors."""
    basis: List[BivariatePoly] = [_X, _Y] + [q for q, _ in w.factors]
    m10, c10 = _peel(case.phi10, basis)
    m01, c01 = _peel(case.phi01, basis)
    size = len(basis)
    m10 += [0] * (size - len(m10))
    m01 += [0] * (size - len(m01))
    rho_exps = [w.u, w.v] + [wt for _, wt in w.factors] + [Fraction(0)] * (size - 2 - len(w.factors))
    return basis, rho_exps, m10, c10, m01, c01


def _divide_out(expr: WeightedExpr, rho_exps: List[Fraction]) -> BivariatePoly:
    """Divide a differentiated expression by the weight: subtract exponents
    and fold the integer residuals back into the polynomial part."""
    poly = expr.poly
    for f, have, want in zip(expr.factors, expr.exponents, rho_exps):
        res = have - want
        if res.denominator != 1:
            raise NotReducible(f"residual exponent {res} on factor {f} is not an integer")
        t = int(res)
        if t > 0:
            poly = poly * f**t
        elif t < 0:
            try:
                poly = poly.exact_div(f**(-t))
            except NotDivisible:
                raise NotReducible(
                    f"polynomial part is not divisible by {f}^{-t}") from None
    return poly


def rodrigues_eval(w: WeightSpec, case: PhiCase, n: int, m: int) -> BivariatePoly:
    """The (n, m) Rodrigues output for weight w and factor pair ``case``,
    normalized with constant 1; the result must have total degree n + m."""
    if n < 0 or m < 0:
        raise ValueError("need n, m >= 0")
    basis, rho_exps, m10, c10, m01, c01 = _assemble(w, case, n, m)
    exps = [rho_exps[i] + n * m10[i] + m * m01[i] for i in range(len(basis))]
    expr = WeightedExpr(tuple(basis), tuple(exps),
                        BivariatePoly.const(c10**n * c01**m))
    for _ in range(n):
        expr = weighted_diff(expr, 1)
    for _ in range(m):
        expr = weighted_diff(expr, 2)
    out = _divide_out(expr, rho_exps)
    if out.degree() != n + m:
        raise DegreeMismatch(
            f"Rodrigues output has degree {out.degree()}, expected {n + m}")
    return out


def rodrigues_derivative_eval(w: WeightSpec, case: PhiCase,
                              n: int, m: int, r: int, s: int) -> BivariatePoly:
    """Rodrigues form of the (r, s) partial derivative of the (n, m) output:
    differentiate the same bracket n-r and m-s times and divide by the
    shifted weight rho * phi10^r * phi01^s.  Degree is n + m - r - s."""
    if not (0 <= r <= n and 0 <= s <= m):
        raise ValueError("need 0 <= r <= n and 0 <= s <= m")
    basis, rho_exps, m10, c10, m01, c01 = _assemble(w, case, n, m)
    exps = [rho_exps[i] + n * m10[i] + m * m01[i] for i in range(len(basis))]
    expr = WeightedExpr(tuple(basis), tuple(exps),
                        BivariatePoly.const(c10**(n - r) * c01**(m - s)))
    for _ in range(n - r):
        expr = weighted_diff(expr, 1)
    for _ in range(m - s):
        expr = weighted_diff(expr, 2)
    shifted = [rho_exps[i] + r * m10[i] + s * m01[i] for i in range(len(basis))]
    out = _divide_out(expr, shifted)
    if out.degree() != n + m - r - s:
        raise DegreeMismatch(
            f"Rodrigues derivative has degree {out.degree()}, expected {n + m - r - s}")
    return out
