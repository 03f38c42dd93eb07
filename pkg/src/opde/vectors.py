"""Polynomial column vectors in the graded monomial basis.

Position k of the degree-n monomial vector holds x^(n-k) * y^k, for
0 <= k <= n.  Every module in the package depends on this ordering and none
may redefine it.  The structural matrices built here are the bookkeeping
devices for that basis:

  * shift_matrix(n, axis): the 0/1 matrix L with  L @ xvec(n+1) == x_axis * xvec(n)
  * derivative_matrix(n, axis): the matrix E with  E @ xvec(n-1) == d/dx_axis xvec(n)
  * joint_left_inverse(n): the exact left inverse of the stacked shift matrices
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Sequence

from .errors import DegreeOverflow
from .matrix import RationalMatrix
from .poly import BivariatePoly

def monomial_vector(n: int) -> "PolyVector":
    """The column vector (x^n, x^(n-1)y, ..., y^n)."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return PolyVector([BivariatePoly.monomial(n - k, k) for k in range(n + 1)])


def shift_matrix(n: int, axis: int) -> RationalMatrix:
    """(n+1) x (n+2) selection matrix mapping the degree-(n+1) basis onto
    x * basis(n) (axis 1) or y * basis(n) (axis 2)."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if axis == 1:
        return RationalMatrix.from_function(n + 1, n + 2, lambda i, k: int(k == i))
    if axis == 2:
        return RationalMatrix.from_function(n + 1, n + 2, lambda i, k: int(k == i + 1))
    raise ValueError("axis must be 1 or 2")


def derivative_matrix(n: int, axis: int) -> RationalMatrix:
    """(n+1) x n matrix E with d/dx_axis xvec(n) = E @ xvec(n-1).

    d/dx x^(n-k)y^k = (n-k) x^(n-k-1)y^k lands at position k of xvec(n-1),
    so axis 1 is diagonal with entries n-k and a zero last row; axis 2 is
    subdiagonal with entries 1..n and a zero first row.
    """
    if n < 1:
        raise ValueError("derivative_matrix needs n >= 1")
    if axis == 1:
        return RationalMatrix.from_function(n + 1, n, lambda i, k: (n - i) if k == i else 0)
    if axis == 2:
        return RationalMatrix.from_function(n + 1, n, lambda i, k: i if k == i - 1 else 0)
    raise ValueError("axis must be 1 or 2")


def stacked_shift(n: int) -> RationalMatrix:
    """The (2n+2) x (n+2) joint matrix stacking the x shift over the y shift."""
    return shift_matrix(n, 1).vstack(shift_matrix(n, 2))


def joint_left_inverse(n: int) -> RationalMatrix:
    """(n+2) x (2n+2) generalized inverse D with D @ stacked_shift(n) == I."""
    ln = stacked_shift(n)
    lt = ln.transpose()
    return (lt @ ln).inverse() @ lt


class PolyVector:
    """Immutable column vector of exact bivariate polynomials."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[BivariatePoly]):
        self.entries = tuple(entries)
        if not self.entries:
            raise ValueError("empty polynomial vector")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k: int) -> BivariatePoly:
        return self.entries[k]

    def __eq__(self, other):
        if not isinstance(other, PolyVector):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other: "PolyVector") -> "PolyVector":
        if len(self) != len(other):
            raise ValueError("length mismatch")
        return PolyVector([a + b for a, b in zip(self, other)])

    def __sub__(self, other: "PolyVector") -> "PolyVector":
        if len(self) != len(other):
            raise ValueError("length mismatch")
        return PolyVector([a - b for a, b in zip(self, other)])

    def scale(self, p: BivariatePoly) -> "PolyVector":
        return PolyVector([p * q for q in self])

    def diff(self, axis: int) -> "PolyVector":
        return PolyVector([p.diff(axis) for p in self])

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self)

    def max_degree(self):
        return max(p.degree() for p in self)

    def __repr__(self) -> str:
        return "PolyVector(" + ", ".join(str(p) for p in self) + ")"


def apply_matrix(m: RationalMatrix, v: PolyVector) -> PolyVector:
    """Matrix-vector product of a rational matrix with a polynomial vector."""
    if m.ncols != len(v):
        raise ValueError(f"shape mismatch: {m.shape} @ vector of length {len(v)}")
    out = []
    for i in range(m.nrows):
        acc = BivariatePoly.zero()
        for k, p in enumerate(v):
            c = m[i, k]
            if c != 0:
                acc = acc + p * c
        out.append(acc)
    return PolyVector(out)


def expansion_matrices(v: PolyVector, n: int) -> List[RationalMatrix]:
    """Expand v over the monomial vectors: v = sum_k G_k @ xvec(k).

    Returns [G_n, G_{n-1}, ..., G_0] where G_k has shape len(v) x (k+1).
    Raises DegreeOverflow if an entry of v has total degree above n.
    """
    if v.max_degree() > n:
        raise DegreeOverflow(f"vector has degree {v.max_degree()} > {n}")
    out = []
    for k in range(n, -1, -1):
        g = [[p.coefficient(k - c, c) for c in range(k + 1)] for p in v]
        out.append(RationalMatrix(g))
    return out


class PolyVectorFamily:
    """Vectors indexed by total degree, with cached monomial expansions."""

    def __init__(self, vectors: Sequence[PolyVector]):
        self.vectors = list(vectors)
        for n, v in enumerate(self.vectors):
            if len(v) != n + 1:
                raise ValueError(f"vector at degree {n} has length {len(v)}")
            if v.max_degree() > n:
                raise DegreeOverflow(f"vector at degree {n} has degree {v.max_degree()}")
        self._gcache: Dict[int, List[RationalMatrix]] = {}

    @property
    def max_n(self) -> int:
        return len(self.vectors) - 1

    def vector(self, n: int) -> PolyVector:
        return self.vectors[n]

    def G(self, n: int, k: int) -> RationalMatrix:
        """Expansion matrix G_{n,k} of the degree-n vector, 0 <= k <= n."""
        if not 0 <= k <= n <= self.max_n:
            raise ValueError(f"G({n},{k}) out of range")
        if n not in self._gcache:
            self._gcache[n] = expansion_matrices(self.vectors[n], n)
        return self._gcache[n][n - k]
