"""Recurrence, structure and derivative representations for vector families.

Everything here works from the expansion matrices G_{n,k} of an orthogonal
vector polynomial family (monic or not):

  * three-term recurrence       x_j P_n  = A P_{n+1} + B P_n + C P_{n-1}
  * derivative-family recurrence x_j Q_n = A~ Q_{n+1} + B~ Q_n + C~ Q_{n-1}
    where Q_n is d/dx_j P_{n+1} with one edge entry dropped through the
    shift matrix; Q_n has square invertible leading matrices, so this
    recurrence is unique (unlike any recurrence on the raw derivatives)
  * first structure relation     phi_j dP_n/dx_j = W P_{n+1} + S P_n + T P_{n-1}
  * derivative representation    P_n = V dP_{n+1}/dx_j + Y dP_n/dx_j + Z dP_{n-1}/dx_j

The derivative representation is produced in two layouts: the wide form (V,
Y, Z) acting on the raw derivative vectors, and the compact form acting on
the Q vectors.  The compact form is the unique one and is what closed-form
entry tables list; the wide form follows by composing with shift matrices.

Monic families additionally admit closed-form routes (structure relations
for n >= 3, derivative representations for n >= 2) built purely from the
equation coefficients; below their validity range the general route is used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import PhiDegreeTooHigh, SingularLeading, SingularMatrix
from .matrix import RationalMatrix
from .monic import subleading_matrices
from .pde import HypergeometricPDE
from .poly import BivariatePoly
from .vectors import (PolyVectorFamily, apply_matrix, derivative_matrix,
                      expansion_matrices, shift_matrix)


@dataclass(frozen=True)
class TtrrSet:
    n: int
    a1: RationalMatrix
    b1: RationalMatrix
    c1: Optional[RationalMatrix]
    a2: RationalMatrix
    b2: RationalMatrix
    c2: Optional[RationalMatrix]

    def axis(self, j: int):
        return (self.a1, self.b1, self.c1) if j == 1 else (self.a2, self.b2, self.c2)


@dataclass(frozen=True)
class QTtrr:
    """Recurrence triple of the derivative family, for its own axis."""

    n: int
    axis: int
    a: RationalMatrix
    b: RationalMatrix
    c: Optional[RationalMatrix]


@dataclass(frozen=True)
class StructureSet:
    n: int
    w1: RationalMatrix
    s1: RationalMatrix
    t1: RationalMatrix
    w2: RationalMatrix
    s2: RationalMatrix
    t2: RationalMatrix

    def axis(self, j: int):
        return (self.w1, self.s1, self.t1) if j == 1 else (self.w2, self.s2, self.t2)


@dataclass(frozen=True)
class DerivRep:
    """Derivative representation along one axis, wide and compact layouts."""

    n: int
    axis: int
    v: RationalMatrix
    y: RationalMatrix
    z: RationalMatrix
    v_compact: RationalMatrix
    y_compact: RationalMatrix
    z_compact: RationalMatrix


def _inv_leading(fam: PolyVectorFamily, k: int) -> RationalMatrix:
    try:
        return fam.G(k, k).inverse()
    except SingularMatrix:
        raise SingularLeading(k) from None


def _ttrr_axis(fam: PolyVectorFamily, n: int, j: int
               ) -> Tuple[RationalMatrix, RationalMatrix, Optional[RationalMatrix]]:
    a = fam.G(n, n) @ shift_matrix(n, j) @ _inv_leading(fam, n + 1)
    if n == 0:
        b = -(a @ fam.G(1, 0)) @ _inv_leading(fam, 0)
        return a, b, None
    b = (fam.G(n, n - 1) @ shift_matrix(n - 1, j) - a @ fam.G(n + 1, n)) @ _inv_leading(fam, n)
    if n == 1:
        c = -(a @ fam.G(2, 0) + b @ fam.G(1, 0)) @ _inv_leading(fam, 0)
    else:
        c = (fam.G(n, n - 2) @ shift_matrix(n - 2, j)
             - a @ fam.G(n + 1, n - 1)
             - b @ fam.G(n, n - 1)) @ _inv_leading(fam, n - 1)
    return a, b, c


def general_ttrr(fam: PolyVectorFamily, n: int) -> TtrrSet:
    """Recurrence matrices of an orthogonal family from its expansion
    matrices; requires the family through degree n+1."""
    a1, b1, c1 = _ttrr_axis(fam, n, 1)
    a2, b2, c2 = _ttrr_axis(fam, n, 2)
    return TtrrSet(n, a1, b1, c1, a2, b2, c2)


class DerivativeFamily(PolyVectorFamily):
    """The family Q_n = shift(n, axis) @ d/dx_axis P_{n+1}."""

    def __init__(self, source: PolyVectorFamily, axis: int, up_to: Optional[int] = None):
        if axis not in (1, 2):
            raise ValueError("axis must be 1 or 2")
        if up_to is None:
            up_to = source.max_n - 1
        if up_to + 1 > source.max_n:
            raise ValueError("source family too short")
        vectors = [
            apply_matrix(shift_matrix(n, axis), source.vector(n + 1).diff(axis))
            for n in range(up_to + 1)
        ]
        super().__init__(vectors)
        self.source = source
        self.axis = axis


def derivative_family(fam: PolyVectorFamily, axis: int,
                      up_to: Optional[int] = None) -> DerivativeFamily:
    return DerivativeFamily(fam, axis, up_to)


def derivative_ttrr(qfam: DerivativeFamily, n: int) -> QTtrr:
    """Unique recurrence of the derivative family along its own axis,
    read off the Q family's expansion matrices."""
    a, b, c = _ttrr_axis(qfam, n, qfam.axis)
    return QTtrr(n, qfam.axis, a, b, c)


def phi_coefficients(phi: BivariatePoly):
    """Coefficients (quad_x2, quad_xy, quad_y2, lin_x, lin_y, const) of a
    weight-shift factor; the structure relations need it quadratic."""
    if phi.degree() > 2:
        raise PhiDegreeTooHigh(f"structure relations need deg(phi) <= 2, got {phi.degree()}")
    return (phi.coefficient(2, 0), phi.coefficient(1, 1), phi.coefficient(0, 2),
            phi.coefficient(1, 0), phi.coefficient(0, 1), phi.coefficient(0, 0))


def _structure_axis(fam: PolyVectorFamily, phi: BivariatePoly, n: int, j: int):
    if n < 1:
        raise ValueError("structure relations start at n = 1")
    phi_coefficients(phi)  # degree gate
    lhs = fam.vector(n).diff(j).scale(phi)
    h = expansion_matrices(lhs, n + 1)  # [H_{n+1}, H_n, ..., H_0]
    w = h[0] @ _inv_leading(fam, n + 1)
    s = (h[1] - w @ fam.G(n + 1, n)) @ _inv_leading(fam, n)
    t = (h[2] - w @ fam.G(n + 1, n - 1) - s @ fam.G(n, n - 1)) @ _inv_leading(fam, n - 1)
    return w, s, t


def structure_matrices(fam: PolyVectorFamily, phi1: BivariatePoly,
                       phi2: BivariatePoly, n: int) -> StructureSet:
    """W, S, T for both axes by coefficient matching (valid for any
    orthogonal family, n >= 1; family needed through degree n+1)."""
    w1, s1, t1 = _structure_axis(fam, phi1, n, 1)
    w2, s2, t2 = _structure_axis(fam, phi2, n, 2)
    return StructureSet(n, w1, s1, t1, w2, s2, t2)


def monic_structure_matrices(pde: HypergeometricPDE, phi1: BivariatePoly,
                             phi2: BivariatePoly, n: int) -> StructureSet:
    """Closed-form W, S, T for the monic family (valid for n >= 3), built
    from the equation coefficients alone."""
    if n < 3:
        raise ValueError("closed-form structure relations need n >= 3")
    gn1, gn2 = subleading_matrices(pde, n)
    gp1, gp2 = subleading_matrices(pde, n + 1)
    out = {}
    for j, phi in ((1, phi1), (2, phi2)):
        qx2, qxy, qy2, lx, ly, cst = phi_coefficients(phi)
        e_n = derivative_matrix(n, j)
        e_n1 = derivative_matrix(n - 1, j)
        e_n2 = derivative_matrix(n - 2, j)

        def quad(m: int) -> RationalMatrix:
            # qx2 * x^2 + qxy * xy + qy2 * y^2 acting from degree m to m+2
            return (qx2 * (shift_matrix(m, 1) @ shift_matrix(m + 1, 1))
                    + qxy * (shift_matrix(m, 2) @ shift_matrix(m + 1, 1))
                    + qy2 * (shift_matrix(m, 2) @ shift_matrix(m + 1, 2)))

        def lin(m: int) -> RationalMatrix:
            return lx * shift_matrix(m, 1) + ly * shift_matrix(m, 2)

        w = e_n @ quad(n - 1)
        s = e_n @ lin(n - 1) - w @ gp1 + gn1 @ (e_n1 @ quad(n - 2))
        t = (cst * e_n + gn1 @ (e_n1 @ lin(n - 2)) - w @ gp2 - s @ gn1
             + gn2 @ (e_n2 @ quad(n - 3)))
        out[j] = (w, s, t)
    return StructureSet(n, *out[1], *out[2])


def derivative_representation(fam: PolyVectorFamily, n: int, axis: int,
                              qfam: Optional[DerivativeFamily] = None) -> DerivRep:
    """General route (any orthogonal family, n >= 2): match coefficients of
    P_n against the Q family, whose leading matrices are invertible; this
    compact triple is unique.  The wide triple follows by composing with the
    shift matrix, since Q_k is by definition shift @ dP_{k+1}.

    (A construction via recurrence differences against a lifted derivative
    recurrence is only valid when the family's edge entries are univariate,
    which holds for monic families but not in general; see ERRATA.md.)
    """
    if n < 2:
        raise ValueError("derivative representation starts at n = 2")
    if qfam is None:
        qfam = DerivativeFamily(fam, axis, n)
    vq = fam.G(n, n) @ _inv_leading(qfam, n)
    yq = (fam.G(n, n - 1) - vq @ qfam.G(n, n - 1)) @ _inv_leading(qfam, n - 1)
    zq = (fam.G(n, n - 2) - vq @ qfam.G(n, n - 2)
          - yq @ qfam.G(n - 1, n - 2)) @ _inv_leading(qfam, n - 2)
    return DerivRep(n, axis,
                    vq @ shift_matrix(n, axis),
                    yq @ shift_matrix(n - 1, axis),
                    zq @ shift_matrix(n - 2, axis),
                    vq, yq, zq)


def monic_derivative_representation(pde: HypergeometricPDE, n: int, axis: int) -> DerivRep:
    """Closed-form route for the monic family, n >= 2.  The compact leading
    matrix shift @ derivative_matrix is diagonal with entries n+1-i (axis 1)
    or i+1 (axis 2), hence always invertible."""
    if n < 2:
        raise ValueError("derivative representation starts at n = 2")

    def v_compact(m: int) -> RationalMatrix:
        return (shift_matrix(m, axis) @ derivative_matrix(m + 1, axis)).inverse()

    gn1, gn2 = subleading_matrices(pde, n)
    gp1, gp2 = subleading_matrices(pde, n + 1)
    vq = v_compact(n)
    yq = (gn1 - vq @ shift_matrix(n, axis) @ gp1 @ derivative_matrix(n, axis)) @ v_compact(n - 1)
    zq = (gn2
          - vq @ shift_matrix(n, axis) @ gp2 @ derivative_matrix(n - 1, axis)
          - yq @ shift_matrix(n - 1, axis) @ gn1 @ derivative_matrix(n - 1, axis)
          ) @ v_compact(n - 2)
    return DerivRep(n, axis,
                    vq @ shift_matrix(n, axis),
                    yq @ shift_matrix(n - 1, axis),
                    zq @ shift_matrix(n - 2, axis),
                    vq, yq, zq)
