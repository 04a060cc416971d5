import itertools

import pytest

from hopfint.algebra import (
    FiniteAlgebra,
    Ideal,
    center,
    commutator_ideal,
    fixed_subalgebra,
    ideal_generated,
    is_algebra_automorphism,
    jacobson_radical,
    quotient_algebra,
    radical_layers,
)
from hopfint.errors import ImproperIdeal, NotAutomorphism, UnsupportedCharacteristic
from hopfint.linalg import Matrix, Subspace
from hopfint.presets import group_algebra, sweedler, taft_finite
from hopfint.scalars import prime_field, rationals

Q = rationals()


def matrix_units(field=Q):
    """M_2(k) on the basis e11, e12, e21, e22."""
    idx = {(i, j): 2 * i + j for i in range(2) for j in range(2)}
    triples = [(idx[a, b], idx[c, d], idx[a, d], 1)
               for (a, b), (c, d) in itertools.product(idx, repeat=2) if b == c]
    unit = [field(1), field(0), field(0), field(1)]
    return FiniteAlgebra.from_triples(field, 4, triples, unit, ["e11", "e12", "e21", "e22"])


def truncated_polynomial(n, field=Q):
    """k[x]/(x^n) on 1, x, ..., x^{n-1}."""
    triples = [(i, j, i + j, 1) for i in range(n) for j in range(n) if i + j < n]
    unit = [field(1)] + [field(0)] * (n - 1)
    return FiniteAlgebra.from_triples(field, n, triples, unit, ["1"] + [f"x^{i}" for i in range(1, n)])


def brute_force_span(a, vectors):
    """Span of {b v c : b, c basis elements}, a two-sided ideal in a unital algebra."""
    out = []
    for v in vectors:
        for i, j in itertools.product(range(a.dim), repeat=2):
            out.append(a.mul(a.mul(a.basis_vector(i), v), a.basis_vector(j)))
    return Subspace(a.field, a.dim, out)


def test_matrix_algebra_is_associative_with_unit():
    a = matrix_units()
    assert not a.associativity_failures()
    assert not a.unit_failures()


def test_commutator_ideal_of_matrix_algebra_is_everything():
    a = matrix_units()
    ideal = commutator_ideal(a)
    # e11 = e12 e21 and [e12, e21] = e11 - e22 already generate M_2
    assert ideal.dim == 4
    with pytest.raises(ImproperIdeal):
        quotient_algebra(a, ideal)


def test_ideal_generated_matches_brute_force():
    a = taft_finite(3).algebra
    x = a.element({"x": 1})
    ideal = ideal_generated(a, [x])
    assert ideal.space == brute_force_span(a, [x])
    assert ideal.dim == 6
    assert ideal.is_two_sided()


def test_quotient_by_power_of_x():
    a = truncated_polynomial(5)
    ideal = ideal_generated(a, [a.basis_vector(3)])
    q, proj = quotient_algebra(a, ideal)
    assert q.dim == 3
    assert q.labels == ["1", "x^1", "x^2"]
    assert proj.apply(a.basis_vector(4)) == [Q(0)] * 3


@pytest.mark.parametrize("h,oracle_dim", [(sweedler(), 2), (taft_finite(3), 6), (taft_finite(4), 12)])
def test_radical_is_ideal_generated_by_x(h, oracle_dim):
    # (x) is nilpotent and H/(x) is a split group algebra, so rad H = (x)
    a = h.algebra
    rad = jacobson_radical(a)
    assert rad.dim == oracle_dim
    assert rad == ideal_generated(a, [a.element({"x": 1})]).space


def test_radical_of_semisimple_and_local_algebras():
    assert jacobson_radical(matrix_units()).dim == 0
    assert jacobson_radical(group_algebra("s3").algebra).dim == 0
    assert radical_layers(truncated_polynomial(4)) == [1, 1, 1, 1]


def test_radical_in_small_characteristic_is_unsupported():
    with pytest.raises(UnsupportedCharacteristic):
        jacobson_radical(group_algebra("z3", prime_field(3)).algebra)


def test_center_of_matrix_algebra_is_scalars():
    c = center(matrix_units())
    assert c.dim == 1 and c.contains(matrix_units().unit)


def test_automorphism_detection():
    a = group_algebra("z3").algebra
    # g -> g^2 is a group automorphism of Z3
    perm = Matrix.from_columns(Q, [a.basis_vector(0), a.basis_vector(2), a.basis_vector(1)], 3)
    assert is_algebra_automorphism(a, perm)
    b = truncated_polynomial(3)
    swap = Matrix.from_columns(Q, [b.basis_vector(0), b.basis_vector(2), b.basis_vector(1)], 3)
    assert not is_algebra_automorphism(b, swap)
    with pytest.raises(NotAutomorphism):
        fixed_subalgebra(b, [swap])


def test_fixed_subalgebra_of_inversion():
    a = group_algebra("z3").algebra
    inv = Matrix.from_columns(Q, [a.basis_vector(0), a.basis_vector(2), a.basis_vector(1)], 3)
    fixed = fixed_subalgebra(a, [inv])
    assert fixed.dim == 2
    assert fixed.contains(a.element({"g": 1, "g^2": 1}))


def test_non_ideal_is_detected():
    a = truncated_polynomial(3)
    not_ideal = Ideal(a, Subspace(Q, 3, [a.basis_vector(1)]))
    assert not not_ideal.is_two_sided()
