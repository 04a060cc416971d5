from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hopfint.errors import DivisionByZero, FieldMismatch, InputError, RootUnavailable
from hopfint.scalars import (
    cyclotomic_field,
    multiplicative_order,
    parse_field,
    prime_field,
    primitive_root_of_unity,
    rationals,
)

FIELDS = [
    rationals(),
    prime_field(7),
    cyclotomic_field(5),
    cyclotomic_field(12),
    cyclotomic_field(5, prime_field(2)),
    cyclotomic_field(3, prime_field(7)),
]

small = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def scalars(draw, field):
    if field.kind == "cyclotomic":
        if field.characteristic:
            coeffs = draw(st.lists(st.integers(0, field.characteristic - 1),
                                   min_size=field.degree, max_size=field.degree))
        else:
            coeffs = draw(st.lists(small, min_size=field.degree, max_size=field.degree))
        return field.from_coefficients(coeffs)
    if field.characteristic:
        return field(draw(st.integers(-50, 50)))
    return field(draw(small))


def triples(field):
    return st.tuples(scalars(field), scalars(field), scalars(field))


@pytest.mark.parametrize("field", FIELDS, ids=lambda f: f.spec())
def test_ring_axioms(field):
    @given(triples(field))
    def check(abc):
        a, b, c = abc
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        assert a - a == field.zero
        if a:
            assert a * a.inverse() == field.one

    check()


@pytest.mark.parametrize("field", FIELDS, ids=lambda f: f.spec())
def test_canonical_string_round_trip(field):
    @given(scalars(field))
    def check(a):
        text = str(a)
        again = field(text)
        assert again == a
        assert str(again) == text

    check()


@pytest.mark.parametrize("n", [3, 4, 5, 7, 8, 12])
def test_cyclotomic_product_matches_sympy(n):
    K = cyclotomic_field(n)
    x = sympy.symbols("x")
    phi = sympy.cyclotomic_poly(n, x)

    @given(st.lists(small, min_size=K.degree, max_size=K.degree),
           st.lists(small, min_size=K.degree, max_size=K.degree))
    def check(ca, cb):
        a, b = K.from_coefficients(ca), K.from_coefficients(cb)
        pa = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(ca))
        pb = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(cb))
        expected = sympy.Poly(sympy.rem(sympy.expand(pa * pb), phi, x), x)
        coeffs = [Fraction(str(c)) for c in reversed(expected.all_coeffs())]
        coeffs += [Fraction(0)] * (K.degree - len(coeffs))
        assert a * b == K.from_coefficients(coeffs)

    check()


@pytest.mark.filterwarnings("ignore::DeprecationWarning")
@pytest.mark.parametrize("n,p", [(5, 2), (3, 7), (7, 2), (8, 3), (12, 5), (5, 11)])
def test_prime_cyclotomic_modulus_is_smallest_irreducible_factor(n, p):
    K = cyclotomic_field(n, prime_field(p))
    x = sympy.symbols("x")
    _, factors = sympy.factor_list(sympy.cyclotomic_poly(n, x), modulus=p)
    # sympy uses symmetric residues; normalise to 0..p-1, constant term first
    polys = [tuple(int(c) % p for c in reversed(sympy.Poly(f, x).all_coeffs())) for f, _ in factors]
    monic = sorted(polys, key=lambda c: tuple(reversed(c[:-1])))
    assert K.modulus == monic[0]
    assert K.degree == len(monic[0]) - 1


def test_rationals_canonical_form():
    Q = rationals()
    assert str(Q("-6/4")) == "-3/2"
    assert Q("2/4") == Q(Fraction(1, 2))


def test_prime_field_reduces():
    F = prime_field(5)
    assert F(7) == F(2)
    assert str(F(-1)) == "4"
    assert F(2).inverse() == F(3)


def test_zero_has_no_inverse():
    for field in FIELDS:
        with pytest.raises(DivisionByZero):
            field.zero.inverse()


def test_mixing_fields_raises():
    with pytest.raises(FieldMismatch):
        prime_field(5)(1) + prime_field(7)(1)


def test_base_field_scalars_promote():
    K = cyclotomic_field(4)
    assert K.gen + rationals()(1) == K.from_coefficients([1, 1])


@pytest.mark.parametrize("field,n", [(cyclotomic_field(12), 12), (cyclotomic_field(12), 4),
                                     (cyclotomic_field(5), 10), (prime_field(7), 6),
                                     (rationals(), 2), (cyclotomic_field(5, prime_field(2)), 5)])
def test_primitive_root_has_exact_order(field, n):
    assert multiplicative_order(primitive_root_of_unity(field, n)) == n


def test_missing_root_of_unity():
    with pytest.raises(RootUnavailable):
        primitive_root_of_unity(rationals(), 3)
    with pytest.raises(RootUnavailable):
        primitive_root_of_unity(prime_field(3), 3)


def test_order_cap_returns_none():
    assert multiplicative_order(rationals()(2), cap=50) is None


@pytest.mark.parametrize("text,spec", [("q", "q"), ("fp:13", "fp:13"), ("cyc:6", "cyc:6"),
                                       ("cyc:5:fp:2", "cyc:5:fp:2"),
                                       ({"kind": "prime", "p": 3}, "fp:3"),
                                       ({"kind": "cyclotomic", "n": 4}, "cyc:4")])
def test_parse_field(text, spec):
    assert parse_field(text).spec() == spec


@pytest.mark.parametrize("bad", ["fp:8", "cyc:6:fp:3", "reals", {"kind": "complex"}])
def test_parse_field_rejects(bad):
    with pytest.raises(InputError):
        parse_field(bad)
