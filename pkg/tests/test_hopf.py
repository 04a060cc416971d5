import itertools
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfint.errors import FieldMismatch, IncompatibleExtension, NotACharacter
from hopfint.hopf import (
    FiniteHopfAlgebra,
    base_change,
    compose_antipode,
    convolution,
    convolution_order,
    dual_hopf,
    is_character,
    tensor_hopf,
    verify_axioms,
    verify_hopf_isomorphism,
    verify_hopf_morphism,
)
from hopfint.linalg import Matrix
from hopfint.presets import (
    abelian_group,
    circle_hopf,
    circle_to_group_witness,
    cyclic_group,
    group_algebra,
    sweedler,
    taft_finite,
    trivial_hopf,
)
from hopfint.scalars import cyclotomic_field, prime_field, rationals

Q = rationals()
K4 = cyclotomic_field(4)


def with_antipode(h, antipode):
    return FiniteHopfAlgebra(h.algebra, h.comul, h.counit, antipode, name=h.name)


def test_presets_satisfy_axioms(finite_hopf):
    rep = verify_axioms(finite_hopf)
    assert rep.passed, rep.lines()


def test_identity_antipode_breaks_sweedler():
    h = sweedler()
    rep = verify_axioms(with_antipode(h, Matrix.identity(Q, 4)))
    assert not rep.passed
    assert "antipode axiom" in rep.failures
    # S(x) = -gx is what fails, so the witnesses are x and gx
    assert rep.failures["antipode axiom"] == [2, 3]


def test_broken_coassociativity_is_named():
    h = sweedler()
    comul = [dict(d) for d in h.comul]
    comul[2] = {(2, 0): Q(1)}  # Delta(x) = x (x) 1 drops g (x) x
    bad = FiniteHopfAlgebra(h.algebra, comul, h.counit, h.antipode)
    assert "comultiplication is multiplicative" in verify_axioms(bad).failures


def test_dual_structure_is_transposed(finite_hopf):
    h = finite_hopf
    d = dual_hopf(h)
    for i, j, k, c in h.algebra.triples():
        assert d.comul[k][(i, j)] == c
    for i in range(h.dim):
        for (j, k), c in h.comul[i].items():
            assert d.algebra.table[j][k][i] == c
    assert d.unit == list(h.counit)
    assert d.counit == list(h.unit)
    assert d.antipode == h.antipode.transpose()


def test_dual_is_hopf_and_involutive(finite_hopf):
    h = finite_hopf
    d = dual_hopf(h)
    assert verify_axioms(d).passed
    dd = dual_hopf(d)
    assert dd.algebra.table == h.algebra.table
    assert dd.comul == h.comul
    assert dd.antipode == h.antipode


def test_sweedler_is_self_dual_in_dimension():
    assert dual_hopf(sweedler()).dim == 4


@pytest.mark.parametrize("a,b", [(sweedler(), group_algebra("z2")), (trivial_hopf(), trivial_hopf()),
                                 (group_algebra("z3"), group_algebra("s3"))])
def test_tensor_product_dims_and_axioms(a, b):
    t = tensor_hopf(a, b)
    assert t.dim == a.dim * b.dim
    assert verify_axioms(t).passed
    assert t.labels[-1] == f"{a.labels[-1]}⊗{b.labels[-1]}"


def test_tensor_requires_one_field():
    with pytest.raises(FieldMismatch):
        tensor_hopf(sweedler(), taft_finite(3))


def test_base_change_keeps_axioms(finite_hopf):
    big = base_change(finite_hopf, cyclotomic_field(12))
    assert verify_axioms(big).passed
    assert big.field.spec() == "cyc:12"


def test_base_change_rejects_non_extensions():
    with pytest.raises(IncompatibleExtension):
        base_change(taft_finite(3), prime_field(7))


@given(st.integers(0, 5), st.integers(0, 5))
def test_characters_of_cyclic_group_multiply(a, b):
    # chi_a(g^k) = zeta^{ak} and chi_a * chi_b = chi_{a+b}
    h = group_algebra("z6", cyclotomic_field(6))
    z = cyclotomic_field(6).gen

    def chi(s):
        return [z ** (s * k) for k in range(6)]

    assert is_character(h, chi(a))
    assert convolution(h, chi(a), chi(b)) == chi(a + b)
    assert convolution_order(h, chi(a)) == 6 // gcd(a, 6)
    assert compose_antipode(h, chi(a)) == chi(-a)


def test_convolution_rejects_non_characters():
    h = group_algebra("z2")
    with pytest.raises(NotACharacter):
        convolution_order(h, [Q(1), Q(2)])


def circle_characters(h):
    """All characters of the circle algebra: points of x^2 + y^2 = 1, xy = 0."""
    f = h.field
    pts = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    return [[f(1), f(a), f(b), f(a * a)] for a, b in pts]


def test_circle_character_group_is_cyclic_of_order_four():
    h = circle_hopf()
    chars = circle_characters(h)
    assert all(is_character(h, c) for c in chars)
    orders = sorted(convolution_order(h, c) for c in chars)
    assert orders == [1, 2, 4, 4]


def test_circle_witness_to_cyclic_group():
    h = base_change(circle_hopf(), K4)
    z4 = cyclic_group(4)
    f = circle_to_group_witness(h, z4, 1)
    assert verify_hopf_isomorphism(f, h, group_algebra(z4, K4))


def test_no_circle_witness_to_klein_group():
    # every element of Z2 x Z2 squares to 1, but z = x + iy has order 4;
    # the candidate maps are Hopf maps that collapse y, never isomorphisms
    h = base_change(circle_hopf(), K4)
    klein = abelian_group((2, 2))
    target = group_algebra(klein, K4)
    for g in klein.elements:
        f = circle_to_group_witness(h, klein, g)
        assert verify_hopf_morphism(f, h, target)
        assert not verify_hopf_isomorphism(f, h, target)


def test_group_like_count_of_circle_algebra_over_gaussian_field():
    # group-likes of H are the characters of H*, so count them on the dual
    h = base_change(circle_hopf(), K4)
    d = dual_hopf(h)
    f = K4
    values = [f(0), f(1), f(-1), f(2), f(-2), f.gen, -f.gen]
    found = [list(v) for v in itertools.product(values, repeat=4) if is_character(d, list(v))]
    assert len(found) == 4
    assert sorted(convolution_order(d, c) for c in found) == [1, 2, 4, 4]
