from fractions import Fraction

import pytest

from opde.errors import SingularMatrix
from opde.matrix import RationalMatrix


def test_matmul_and_identity():
    m = RationalMatrix([[1, 2], [3, 4]])
    assert m @ RationalMatrix.identity(2) == m


def test_inverse_exact():
    m = RationalMatrix([[2, 1], [1, 1]])
    inv = m.inverse()
    assert inv == RationalMatrix([[1, -1], [-1, 2]])
    assert m @ inv == RationalMatrix.identity(2)


def test_singular_inverse_raises():
    with pytest.raises(SingularMatrix):
        RationalMatrix([[1, 2], [2, 4]]).inverse()


def test_det():
    assert RationalMatrix([[Fraction(1, 2), 1], [1, 4]]).det() == 1
    assert RationalMatrix([[1, 2], [2, 4]]).det() == 0


def test_rank_fraction_free():
    assert RationalMatrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]]).rank() == 2
    assert RationalMatrix([[Fraction(1, 3), 0], [0, Fraction(2, 7)]]).rank() == 2
    assert RationalMatrix.zeros(3, 2).rank() == 0


def test_nullspace():
    m = RationalMatrix([[1, 2, 3], [2, 4, 6]])
    basis = m.nullspace()
    assert len(basis) == 2
    for vec in basis:
        out = [sum(a * b for a, b in zip(row, vec)) for row in m.rows]
        assert all(v == 0 for v in out)


def test_stacking():
    a = RationalMatrix([[1, 0]])
    b = RationalMatrix([[0, 1]])
    assert a.vstack(b) == RationalMatrix.identity(2)
    assert a.transpose().hstack(b.transpose()) == RationalMatrix.identity(2)


def test_shape_mismatch_raises():
    with pytest.raises(ValueError):
        RationalMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        RationalMatrix([[1]]) @ RationalMatrix([[1, 2], [3, 4]])
