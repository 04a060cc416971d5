from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st
from sympy.physics.quantum import TensorProduct

from hopfint.errors import DimMismatch, NotInvertible
from hopfint.linalg import EchelonBuilder, Matrix, Subspace, kronecker, matrix_order
from hopfint.scalars import prime_field, rationals

Q = rationals()
entries = st.integers(-3, 3)


@st.composite
def int_matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [draw(st.lists(entries, min_size=c, max_size=c)) for _ in range(r)]


def to_ours(rows, field=Q):
    return Matrix(field, [[field(x) for x in r] for r in rows], len(rows[0]))


def to_frac(m: Matrix):
    return [[Fraction(str(x)) for x in r] for r in m.rows]


@given(int_matrices())
def test_rref_matches_sympy(rows):
    red, pivots = to_ours(rows).rref()
    s_red, s_piv = sympy.Matrix(rows).rref()
    assert tuple(pivots) == tuple(s_piv)
    assert to_frac(red) == [[Fraction(str(x)) for x in s_red.row(i)] for i in range(s_red.rows)]


@given(int_matrices())
def test_nullspace_dimension_and_membership(rows):
    m = to_ours(rows)
    ns = m.nullspace()
    assert ns.dim == len(sympy.Matrix(rows).nullspace())
    for v in ns:
        assert all(x == 0 for x in m.apply(v))
    assert m.rank() + ns.dim == m.ncols


@given(int_matrices(4, 4).filter(lambda r: len(r) == len(r[0])))
def test_inverse_matches_sympy(rows):
    m = to_ours(rows)
    sm = sympy.Matrix(rows)
    if sm.det() == 0:
        with pytest.raises(NotInvertible):
            m.inverse()
    else:
        inv = sm.inv()
        assert to_frac(m.inverse()) == [[Fraction(str(x)) for x in inv.row(i)] for i in range(inv.rows)]
        assert (m @ m.inverse()).is_identity()


def test_arithmetic_over_prime_field():
    F = prime_field(3)
    m = Matrix(F, [[F(1), F(2)], [F(2), F(1)]], 2)
    # det = 1 - 4 = 0 mod 3
    assert m.rank() == 1
    with pytest.raises(NotInvertible):
        m.inverse()


def test_matrix_order():
    rot = to_ours([[0, -1], [1, 0]])
    assert matrix_order(rot) == 4
    shear = to_ours([[1, 1], [0, 1]])
    assert matrix_order(shear, cap=100) is None
    F = prime_field(5)
    assert matrix_order(Matrix(F, [[F(1), F(1)], [F(0), F(1)]], 2)) == 5


@given(int_matrices(3, 3), int_matrices(3, 3))
def test_kronecker_matches_sympy(a, b):
    ours = to_frac(kronecker(to_ours(a), to_ours(b)))
    ref = TensorProduct(sympy.Matrix(a), sympy.Matrix(b))
    assert ours == [[Fraction(str(x)) for x in ref.row(i)] for i in range(ref.rows)]


@given(int_matrices(4, 5).filter(lambda r: len(r[0]) == 5), int_matrices(4, 5).filter(lambda r: len(r[0]) == 5))
def test_subspace_sum_and_intersection(a, b):
    U = Subspace(Q, 5, [[Q(x) for x in r] for r in a])
    W = Subspace(Q, 5, [[Q(x) for x in r] for r in b])
    total, meet = U + W, U & W
    assert total.dim + meet.dim == U.dim + W.dim
    assert meet <= U and meet <= W
    assert U <= total and W <= total


def test_echelon_builder_reports_novelty():
    eb = EchelonBuilder(Q, 3)
    assert eb.add([Q(1), Q(2), Q(0)])
    assert not eb.add([Q(2), Q(4), Q(0)])
    assert eb.add([Q(0), Q(0), Q(5)])
    assert eb.dim == 2
    assert eb.subspace() == Subspace(Q, 3, [[Q(1), Q(2), Q(0)], [Q(0), Q(0), Q(1)]])


def test_subspace_rejects_wrong_length():
    with pytest.raises(DimMismatch):
        Subspace(Q, 3, [[Q(1), Q(0)]])


def test_complement_indices():
    S = Subspace(Q, 4, [[Q(1), Q(1), Q(0), Q(0)]])
    assert S.complement_indices() == [1, 2, 3]
