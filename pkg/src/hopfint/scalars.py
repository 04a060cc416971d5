"""Exact base fields: the rationals, prime fields, and cyclotomic extensions.

A field is an interned :class:`Field` object; elements are immutable
:class:`Scalar` values that keep a reference to their field.  Arithmetic
between scalars of different fields raises :class:`FieldMismatch`; plain
Python ints (and :class:`fractions.Fraction` over characteristic 0) are
coerced on the fly.

Text format::

    rationals      "3", "-1/2"
    prime fields   "5"              (residue in [0, p))
    cyclotomic     "1-z", "1/2*z^2"  (z is the fixed root of the modulus)
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd

from gmpy2 import mpq

from .errors import (
    DivisionByZero,
    FieldMismatch,
    IncompatibleExtension,
    InputError,
    InvalidParams,
    RootUnavailable,
)

DEFAULT_ORDER_CAP = 10_000


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients (constant term first) of the n-th cyclotomic polynomial."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num = _int_poly_exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def _int_poly_exact_div(a, b):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] // b[-1]
        q[k] = c
        for i, bi in enumerate(b):
            a[k + i] -= c * bi
    assert not any(a), "inexact cyclotomic division"
    return q


# --- fields -----------------------------------------------------------------


class Field:
    """Common interface of the three field kinds."""

    characteristic: int
    kind: str

    def __call__(self, value):
        return self.coerce(value)

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def __repr__(self):
        return f"<{self.spec()}>"

    def __reduce__(self):
        return (parse_field, (self.spec(),))

    def contains(self, other: Field) -> bool:
        try:
            self._embedding(other)
        except IncompatibleExtension:
            return False
        return True

    def embed(self, s: Scalar) -> Scalar:
        """Image of ``s`` under the fixed embedding of ``s.field`` into this field."""
        if s.field is self:
            return s
        return self._embedding(s.field)(s)

    def elements(self):
        raise NotImplementedError(f"{self.spec()} is infinite")


class RationalField(Field):
    kind = "rational"
    characteristic = 0

    def coerce(self, value):
        if isinstance(value, Scalar):
            if value.field is self:
                return value
            raise FieldMismatch(f"{value.field.spec()} scalar used in {self.spec()}")
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return Rational(self, mpq(value.numerator, value.denominator))
        return Rational(self, mpq(value))

    def parse(self, text):
        t = "".join(str(text).split())
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", t):
            raise InputError(f"not a rational: {text!r}")
        num, _, den = t.partition("/")
        if den and int(den) == 0:
            raise InputError(f"zero denominator: {text!r}")
        return Rational(self, mpq(int(num), int(den or 1)))

    def spec(self):
        return "q"

    def to_json(self):
        return {"kind": "rational"}

    def _embedding(self, other):
        if other is self:
            return lambda s: s
        raise IncompatibleExtension(f"{other.spec()} does not embed in {self.spec()}")


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p):
        self.p = p
        self.characteristic = p

    def coerce(self, value):
        if isinstance(value, Scalar):
            if value.field is self:
                return value
            raise FieldMismatch(f"{value.field.spec()} scalar used in {self.spec()}")
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero(f"{value} has no image in F_{self.p}")
            return Residue(self, value.numerator * pow(value.denominator, -1, self.p) % self.p)
        return Residue(self, int(value) % self.p)

    def parse(self, text):
        t = "".join(str(text).split())
        if not re.fullmatch(r"\d+", t):
            raise InputError(f"not a residue mod {self.p}: {text!r}")
        return Residue(self, int(t) % self.p)

    def spec(self):
        return f"fp:{self.p}"

    def to_json(self):
        return {"kind": "prime", "p": self.p}

    def elements(self):
        return [Residue(self, a) for a in range(self.p)]

    def _embedding(self, other):
        if other is self:
            return lambda s: s
        raise IncompatibleExtension(f"{other.spec()} does not embed in {self.spec()}")


class CyclotomicField(Field):
    """``base(zeta_n)``, elements stored as polynomials in z modulo a fixed modulus.

    Over the rationals the modulus is the n-th cyclotomic polynomial; over F_p
    it is the smallest monic factor of it, comparing coefficient tuples from
    the top non-leading coefficient down.
    """

    kind = "cyclotomic"

    def __init__(self, base, n):
        self.base = base
        self.n = n
        self.characteristic = base.characteristic
        phi = cyclotomic_polynomial(n)
        if isinstance(base, RationalField):
            self.modulus = tuple(mpq(c) for c in phi)
            self._norm = None
        else:
            p = base.p
            self.modulus = _smallest_factor_mod_p(n, p)
            self._norm = p
        self.degree = len(self.modulus) - 1

    # raw polynomial helpers; coefficient lists, constant term first
    def _reduce(self, c):
        d = self.degree
        m = self.modulus
        for k in range(len(c) - 1, d - 1, -1):
            top = c[k]
            if top:
                off = k - d
                for i in range(d):
                    if m[i]:
                        c[off + i] -= top * m[i]
        del c[d:]
        c.extend([0] * (d - len(c)))
        if self._norm is None:
            return tuple(mpq(x) for x in c)
        p = self._norm
        return tuple(x % p for x in c)

    def _wrap(self, coeffs):
        return Cyclotomic(self, self._reduce(list(coeffs)))

    def coerce(self, value):
        if isinstance(value, Scalar):
            if value.field is self:
                return value
            if value.field is not self.base:
                return self.embed(value)
            b = value.v
        elif isinstance(value, str):
            return self.parse(value)
        else:
            b = self.base.coerce(value).v
        return Cyclotomic(self, self._reduce([b]))

    @property
    def gen(self):
        """The fixed root z."""
        return self._wrap([0, 1])

    def from_coefficients(self, coeffs):
        return self._wrap([self.base.coerce(c).v for c in coeffs])

    def parse(self, text):
        t = "".join(str(text).split())
        if not t:
            raise InputError("empty cyclotomic scalar")
        coef_re = r"\d+(?:/\d+)?" if isinstance(self.base, RationalField) else r"\d+"
        term_re = re.compile(
            rf"([+-]?)(?:({coef_re})(?:\*z(?:\^(\d+))?)?|z(?:\^(\d+))?)"
        )
        pos = 0
        acc = [0] * max(self.degree, 1)
        while pos < len(t):
            m = term_re.match(t, pos)
            if not m or m.end() == pos or (pos > 0 and not m.group(1)):
                raise InputError(f"malformed cyclotomic scalar {text!r} at {pos}")
            sign, coef, e1, e2 = m.groups()
            if coef is None:
                exp = int(e2) if e2 else 1
                c = self.base.one
            else:
                c = self.base.parse(coef)
                if "*z" in m.group(0):
                    exp = int(e1) if e1 else 1
                else:
                    exp = 0
            if sign == "-":
                c = -c
            if exp >= len(acc):
                acc.extend([0] * (exp + 1 - len(acc)))
            acc[exp] += c.v
            pos = m.end()
        return self._wrap(acc)

    def spec(self):
        if isinstance(self.base, RationalField):
            return f"cyc:{self.n}"
        return f"cyc:{self.n}:fp:{self.base.p}"

    def to_json(self):
        return {"kind": "cyclotomic", "n": self.n, "base": self.base.to_json()}

    def elements(self):
        base = self.base.elements()
        return [Cyclotomic(self, tuple(b.v for b in reversed(cs)))
                for cs in product(base, repeat=self.degree)]

    def _embedding(self, other):
        if other is self:
            return lambda s: s
        if other is self.base:
            return self.coerce
        if isinstance(other, RationalField) and self.characteristic == 0:
            return lambda s: self.coerce(self.base.coerce(_raw_to_py(s.v)))
        if isinstance(other, CyclotomicField) and other.base is self.base:
            root = self._root_of(other)

            def image(s):
                acc = self.zero
                power = self.one
                for c in s.v:
                    if c:
                        acc = acc + power * self.base.coerce(_raw_to_py(c))
                    power = power * root
                return acc

            return image
        raise IncompatibleExtension(f"{other.spec()} does not embed in {self.spec()}")

    def _root_of(self, other):
        """A root of ``other``'s modulus inside this field (a power of a primitive root)."""
        try:
            w = primitive_root_of_unity(self, other.n)
        except RootUnavailable:
            raise IncompatibleExtension(f"{other.spec()} does not embed in {self.spec()}") from None
        for k in range(1, other.n + 1):
            if gcd(k, other.n) != 1:
                continue
            r = w ** k
            acc = self.zero
            for c in reversed(other.modulus):
                acc = acc * r + self.base.coerce(_raw_to_py(c))
            if not acc:
                return r
        raise IncompatibleExtension(f"{other.spec()} does not embed in {self.spec()}")


def _raw_to_py(c):
    if isinstance(c, int):
        return c
    return Fraction(int(c.numerator), int(c.denominator))


def _smallest_factor_mod_p(n, p):
    """Smallest monic degree-d divisor of Phi_n over F_p, d = ord of p mod n.

    Every irreducible factor of Phi_n mod p (p not dividing n) has the same
    degree d, so any monic degree-d divisor is irreducible.  Candidates are
    enumerated with the coefficient of z^(d-1) varying slowest.
    """
    phi = [c % p for c in cyclotomic_polynomial(n)]
    d = 1
    while pow(p, d, n) != 1 % n:
        d += 1
    for coeffs in product(range(p), repeat=d):
        cand = list(reversed(coeffs)) + [1]
        if _divides_mod_p(cand, phi, p):
            return tuple(cand)
    raise AssertionError("cyclotomic polynomial has no factor of the expected degree")


def _divides_mod_p(b, a, p):
    a = list(a)
    db = len(b) - 1
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] % p
        if c:
            for i in range(db + 1):
                a[k - db + i] = (a[k - db + i] - c * b[i]) % p
    return not any(x % p for x in a[:db])


@lru_cache(maxsize=None)
def rationals() -> RationalField:
    return RationalField()


@lru_cache(maxsize=None)
def prime_field(p: int) -> PrimeField:
    if not _is_prime(p):
        raise InvalidParams(f"{p} is not prime")
    return PrimeField(p)


@lru_cache(maxsize=None)
def _cyclotomic(n, base):
    return CyclotomicField(base, n)


def cyclotomic_field(n: int, base: Field | None = None) -> Field:
    """The interned field ``base(zeta_n)``; ``base`` defaults to the rationals."""
    base = base or rationals()
    if n < 1:
        raise InvalidParams(f"cyclotomic order must be positive, got {n}")
    if isinstance(base, CyclotomicField):
        raise InvalidParams("nested cyclotomic extensions are not supported")
    if isinstance(base, PrimeField) and n % base.p == 0:
        raise InvalidParams(f"p={base.p} divides n={n}")
    return _cyclotomic(n, base)


def parse_field(text) -> Field:
    """Accepts ``q``, ``fp:P``, ``cyc:N``, ``cyc:N:fp:P`` or the JSON object form."""
    if isinstance(text, Field):
        return text
    if isinstance(text, dict):
        try:
            kind = text["kind"]
            if kind == "rational":
                return rationals()
            if kind == "prime":
                return prime_field(int(text["p"]))
            if kind == "cyclotomic":
                return cyclotomic_field(int(text["n"]), parse_field(text.get("base", {"kind": "rational"})))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad field object {text!r}: {exc}") from exc
        raise InputError(f"unknown field kind {text.get('kind')!r}")
    t = "".join(str(text).split()).lower()
    try:
        if t in ("q", "qq", "rational"):
            return rationals()
        m = re.fullmatch(r"(?:fp|gf|f):(\d+)", t)
        if m:
            return prime_field(int(m.group(1)))
        m = re.fullmatch(r"cyc:(\d+)(?::(?:fp|gf|f):(\d+))?", t)
        if m:
            base = prime_field(int(m.group(2))) if m.group(2) else rationals()
            return cyclotomic_field(int(m.group(1)), base)
    except InvalidParams as exc:
        raise InputError(str(exc)) from exc
    raise InputError(f"unrecognised field spec {text!r}")


# --- scalars ----------------------------------------------------------------


class Scalar:
    __slots__ = ("field", "v")

    def __init__(self, field, v):
        self.field = field
        self.v = v

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field:
                if getattr(self.field, "base", None) is other.field:
                    return self.field.coerce(other)
                raise FieldMismatch(f"{self.field.spec()} vs {other.field.spec()}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return None

    def __radd__(self, other):
        return self + other

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else o - self

    def __rmul__(self, other):
        return self * other

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else o / self

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        try:
            o = self._other(other)
        except FieldMismatch:
            return False
        if o is None:
            return NotImplemented
        return self.v == o.v

    def __hash__(self):
        return hash((self.field.spec(), self.v))

    def __bool__(self):
        raise NotImplementedError

    def __repr__(self):
        return f"Scalar({str(self)!r}, {self.field.spec()})"

    def __reduce__(self):
        return (_rebuild_scalar, (self.field.spec(), str(self)))

    def is_one(self):
        return self == 1


def _rebuild_scalar(spec, text):
    return parse_field(spec).parse(text)


class Rational(Scalar):
    __slots__ = ()

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Rational(self.field, self.v + o.v)

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Rational(self.field, self.v - o.v)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Rational(self.field, self.v * o.v)

    def __neg__(self):
        return Rational(self.field, -self.v)

    def __bool__(self):
        return self.v != 0

    def inverse(self):
        if self.v == 0:
            raise DivisionByZero("inverse of 0")
        return Rational(self.field, 1 / self.v)

    def __str__(self):
        if self.v.denominator == 1:
            return str(self.v.numerator)
        return f"{self.v.numerator}/{self.v.denominator}"


class Residue(Scalar):
    __slots__ = ()

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Residue(self.field, (self.v + o.v) % self.field.p)

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Residue(self.field, (self.v - o.v) % self.field.p)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Residue(self.field, self.v * o.v % self.field.p)

    def __neg__(self):
        return Residue(self.field, -self.v % self.field.p)

    def __bool__(self):
        return self.v != 0

    def inverse(self):
        if self.v == 0:
            raise DivisionByZero("inverse of 0")
        return Residue(self.field, pow(self.v, -1, self.field.p))

    def __str__(self):
        return str(self.v)


class Cyclotomic(Scalar):
    __slots__ = ()

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        f = self.field
        if f._norm is None:
            return Cyclotomic(f, tuple(a + b for a, b in zip(self.v, o.v)))
        p = f._norm
        return Cyclotomic(f, tuple((a + b) % p for a, b in zip(self.v, o.v)))

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        f = self.field
        if f._norm is None:
            return Cyclotomic(f, tuple(a - b for a, b in zip(self.v, o.v)))
        p = f._norm
        return Cyclotomic(f, tuple((a - b) % p for a, b in zip(self.v, o.v)))

    def __neg__(self):
        f = self.field
        if f._norm is None:
            return Cyclotomic(f, tuple(-a for a in self.v))
        return Cyclotomic(f, tuple(-a % f._norm for a in self.v))

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b = self.v, o.v
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(self.field, self.field._reduce(prod))

    def __bool__(self):
        return any(self.v)

    def inverse(self):
        if not self:
            raise DivisionByZero("inverse of 0")
        f = self.field
        inv = _poly_inverse(list(self.v), list(f.modulus), f._norm)
        return f._wrap(inv)

    def __str__(self):
        terms = []
        for k, c in enumerate(self.v):
            if not c:
                continue
            cs = str(c) if isinstance(c, int) else _mpq_str(c)
            neg = cs.startswith("-")
            mag = cs[1:] if neg else cs
            if k == 0:
                body = mag
            else:
                zpart = "z" if k == 1 else f"z^{k}"
                body = zpart if mag == "1" else f"{mag}*{zpart}"
            if terms:
                terms.append(("-" if neg else "+") + body)
            else:
                terms.append(("-" if neg else "") + body)
        return "".join(terms) or "0"


def _mpq_str(c):
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _poly_inverse(a, m, p):
    """Inverse of ``a`` modulo the monic polynomial ``m`` over Q (p None) or F_p."""

    def norm(x):
        return x % p if p else x

    def inv(x):
        return pow(x, -1, p) if p else 1 / x

    def trim(f):
        f = [norm(x) for x in f]
        while f and not f[-1]:
            f.pop()
        return f

    def sub_mul(f, g, c, shift):
        f = f + [0] * max(0, len(g) + shift - len(f))
        for i, x in enumerate(g):
            f[i + shift] -= c * x
        return trim(f)

    r0, r1 = trim(list(m)), trim(list(a))
    s0, s1 = [], [1]
    while r1:
        s_new, r_new = s0, r0
        lead = inv(r1[-1])
        while r_new and len(r_new) >= len(r1):
            c = norm(r_new[-1] * lead)
            shift = len(r_new) - len(r1)
            r_new = sub_mul(r_new, r1, c, shift)
            s_new = sub_mul(s_new, s1, c, shift)
        r0, r1, s0, s1 = r1, r_new, s1, s_new
    # r0 is a nonzero constant since m is irreducible and a != 0 mod m
    c = inv(r0[0])
    return [norm(x * c) for x in s0]


# --- roots of unity ---------------------------------------------------------


def multiplicative_order(s: Scalar, cap: int = DEFAULT_ORDER_CAP):
    """Smallest n <= cap with s**n == 1, or None."""
    if not s:
        raise DivisionByZero("order of 0 is undefined")
    acc = s
    for n in range(1, cap + 1):
        if acc == 1:
            return n
        acc = acc * s
    return None


def _field_size(field):
    if isinstance(field, PrimeField):
        return field.p
    if isinstance(field, CyclotomicField) and isinstance(field.base, PrimeField):
        return field.base.p ** field.degree
    return None


def primitive_root_of_unity(field: Field, n: int) -> Scalar:
    """An element of exact multiplicative order ``n``.

    Prefers ``z**(M/n)`` in ``base(zeta_M)``; in finite fields falls back to the
    first element of order ``n`` in canonical enumeration order.
    """
    if n < 1:
        raise InvalidParams("root order must be positive")
    if n == 1:
        return field.one
    if field.characteristic and n % field.characteristic == 0:
        raise RootUnavailable(f"no element of order {n} in characteristic {field.characteristic}")
    cand = None
    if isinstance(field, CyclotomicField):
        m = field.n
        if field.characteristic == 0:
            w, order_w = (field.gen, m) if m % 2 == 0 else (-(field.gen ** ((m + 1) // 2)), 2 * m)
        else:
            w, order_w = field.gen, m
        if order_w % n == 0:
            cand = w ** (order_w // n)
    elif isinstance(field, RationalField) and n == 2:
        cand = -field.one
    if cand is None:
        size = _field_size(field)
        if size is not None and (size - 1) % n == 0:
            for x in field.elements():
                if x and multiplicative_order(x, n) == n:
                    cand = x
                    break
    if cand is None or multiplicative_order(cand, n) != n:
        raise RootUnavailable(f"{field.spec()} has no primitive {n}-th root of unity")
    return cand
