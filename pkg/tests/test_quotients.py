import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfint.algebra import commutator_ideal, fixed_subalgebra, ideal_generated
from hopfint.errors import NotHopfIdeal
from hopfint.hopf import verify_axioms
from hopfint.integrals import compute_integrals, integral_order, winding_group
from hopfint.linalg import Subspace
from hopfint.presets import group_algebra, sweedler, taft_finite
from hopfint.quotients import (
    abelianization,
    coinvariant_algebra,
    coinvariants,
    hopf_ideal_check,
    hopf_quotient,
    integral_quotient,
)

SMALL = [sweedler(), taft_finite(3), group_algebra("s3"), group_algebra("z4")]


def tensor_span_oracle(h, space):
    """I (x) H + H (x) I as a subspace of k^(n*n), from explicit spanning tensors."""
    n = h.dim
    vecs = []
    for u in space:
        for j in range(n):
            left = [h.field.zero] * (n * n)
            right = [h.field.zero] * (n * n)
            for i, c in enumerate(u):
                left[i * n + j] = c
                right[j * n + i] = c
            vecs += [left, right]
    return Subspace(h.field, n * n, vecs)


def is_hopf_ideal_oracle(h, ideal):
    space = ideal.space
    if space.dim == h.dim:
        return False
    big = tensor_span_oracle(h, space)
    n = h.dim
    for v in space:
        flat = [h.field.zero] * (n * n)
        for (j, k), c in h.comul_vector(v).items():
            flat[j * n + k] = c
        if not big.contains(flat):
            return False
    return all(h.counit_of(v) == 0 for v in space) and all(space.contains(h.apply_antipode(v)) for v in space)


def named_ideal(h, coeffs):
    return ideal_generated(h.algebra, [h.algebra.element(coeffs)])


@pytest.mark.parametrize("h,coeffs,expected", [
    (sweedler(), {"x": 1}, True),
    (sweedler(), {"g": 1, "1": -1}, True),
    (sweedler(), {"x": 1, "g": 1}, False),
    (taft_finite(3), {"x": 1}, True),
    (group_algebra("s3"), {"(213)": 1, "1": -1}, True),
    (group_algebra("z4"), {"g^2": 1, "1": -1}, True),
    (group_algebra("z4"), {"g^2": 1, "1": 1}, False),
])
def test_hopf_ideal_check_agrees_with_span_oracle(h, coeffs, expected):
    ideal = named_ideal(h, coeffs)
    assert hopf_ideal_check(h, ideal) == is_hopf_ideal_oracle(h, ideal) == expected


@pytest.mark.parametrize("h", SMALL, ids=lambda h: h.name)
def test_hopf_ideal_check_on_random_ideals(h):
    @given(st.lists(st.integers(-2, 2), min_size=h.dim, max_size=h.dim))
    def check(coeffs):
        v = [h.field(c) for c in coeffs]
        ideal = ideal_generated(h.algebra, [v])
        assert hopf_ideal_check(h, ideal) == is_hopf_ideal_oracle(h, ideal)

    check()


def test_sweedler_ideal_of_g_minus_one_is_augmentation():
    h = sweedler()
    ideal = named_ideal(h, {"g": 1, "1": -1})
    # g - 1 generates x - gx as well, so the quotient is k
    assert ideal.dim == 3
    assert hopf_quotient(h, ideal).dim == 1


def test_quotient_by_non_hopf_ideal_raises():
    h = sweedler()
    with pytest.raises(NotHopfIdeal):
        hopf_quotient(h, named_ideal(h, {"x": 1, "g": 1}))


def test_abelianization_properties(finite_hopf):
    h = finite_hopf
    ab = abelianization(h)
    assert ab.quotient.algebra.is_commutative()
    assert verify_axioms(ab.quotient).passed
    assert ab.dim % integral_order(h) == 0
    assert ab.kernel.space == commutator_ideal(h.algebra).space


@pytest.mark.parametrize("h,dim", [(sweedler(), 2), (taft_finite(3), 3), (group_algebra("s3"), 2),
                                   (group_algebra("klein"), 4)])
def test_abelianization_dims(h, dim):
    assert abelianization(h).dim == dim


def test_integral_quotient_has_integral_order_dim(finite_hopf):
    h = finite_hopf
    iq = integral_quotient(h)
    assert iq.dim == integral_order(h)
    assert iq.quotient.algebra.is_commutative()
    assert verify_axioms(iq.quotient).passed


def test_coinvariants_are_winding_fixed_points(finite_hopf):
    h = finite_hopf
    data = compute_integrals(h)
    iq = integral_quotient(h, data=data)
    co = coinvariants(h, iq, data=data)
    assert co == fixed_subalgebra(h.algebra, winding_group(h, data))
    assert co.dim * iq.dim == h.dim


@pytest.mark.parametrize("n", [2, 3, 4])
def test_taft_coinvariants_are_polynomials_in_x(n):
    h = taft_finite(n)
    co = coinvariants(h, integral_quotient(h))
    powers = ["1"] + (["x"] if n == 2 else ["x"] + [f"x^{j}" for j in range(2, n)])
    assert co == Subspace(h.field, h.dim, [h.algebra.element({p: 1}) for p in powers])
    assert coinvariant_algebra(h, co).is_commutative()


def test_group_quotient_coinvariants_are_the_kernel_subgroup():
    # k[S3] -> k[Z2] via the sign; coinvariants are k[A3]
    h = group_algebra("s3")
    ab = abelianization(h)
    co = coinvariants(h, ab)
    assert co.dim == 3
    even = ["1", "(231)", "(312)"]
    assert co == Subspace(h.field, h.dim, [h.algebra.element({p: 1}) for p in even])
