"""Infinite-dimensional Hopf algebras given by a normal-form oracle and a
chain of normal elements.

Each chain level is a :class:`PresentedAlgebra`.  A basis monomial is an
exponent tuple ``e`` aligned with ``algebra.gens`` and stands for the ordered
product g_0^{e_0} g_1^{e_1} ...; negative exponents are allowed only for
generators declared invertible (these must be group-like).  The preset
supplies ``mul_monomials``, the rewriting rule that returns the normal form
of a product of two monomials.

A :class:`ReductionStep` records a normal element w with ``w g = tau(g) w``
for every generator g, a witness that (w) is a Hopf ideal, and the
projection to the next level (or to the terminal finite Hopf algebra).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import (
    FiniteAlgebra,
    fixed_subalgebra,
    format_vector,
    is_commutative_subspace,
    radical_layers,
)
from .errors import (
    ConsistencyFailure,
    InvalidParams,
    OrderInfinite,
    RelatorViolation,
    TruncationUndeclared,
)
from .hopf import FiniteHopfAlgebra, apply_character, dual_hopf
from .integrals import compute_integrals
from .linalg import EchelonBuilder, Matrix
from .scalars import DEFAULT_ORDER_CAP


# --- presented algebras and their elements -----------------------------------


class Elem:
    """Finite linear combination of normal-form monomials."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms=None):
        self.alg = alg
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    def _lift(self, other):
        if isinstance(other, Elem):
            if other.alg is not self.alg:
                raise ConsistencyFailure(f"elements of {self.alg.name} and {other.alg.name} mixed")
            return other
        return self.alg.scalar(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return Elem(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return Elem(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Elem):
            c = self.alg.field(other)
            return Elem(self.alg, {m: c * x for m, x in self.terms.items()})
        return self.alg.mul(self, self._lift(other))

    def __rmul__(self, other):
        c = self.alg.field(other)
        return Elem(self.alg, {m: c * x for m, x in self.terms.items()})

    def __pow__(self, e):
        if e < 0:
            return self.alg.term_inverse(self) ** (-e)
        acc = self.alg.one()
        for _ in range(e):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if isinstance(other, Elem):
            return self.alg is other.alg and self.terms == other.terms
        return self == self.alg.scalar(other)

    def __hash__(self):
        return hash(tuple(sorted((m, str(c)) for m, c in self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return self.alg.format(self)

    __repr__ = __str__


class PresentedAlgebra:
    """Hopf algebra presented by generators and a normal-form oracle.

    ``delta[g]`` is a list of ``(coeff, m1, m2)`` with monomials m1, m2;
    ``antipode[g]`` an :class:`Elem`; ``relators`` a list of elements written
    as lists of ``(coeff, word)`` where a word is a list of ``(gen, exp)``.
    """

    def __init__(self, name, field, gens, mul_monomials, invertible=(), relators=(),
                 delta=None, counit=None, antipode=None):
        self.name = name
        self.field = field
        self.gens = tuple(gens)
        self.invertible = frozenset(invertible)
        self._mul_monomials = mul_monomials
        self.relators = list(relators)
        self.delta = {}
        self.counit = {}
        self.antipode = {}
        if delta:
            self.set_hopf(delta, counit, antipode)

    def set_hopf(self, delta, counit, antipode):
        f = self.field
        self.delta = {g: [(f(c), tuple(a), tuple(b)) for c, a, b in delta[g]] for g in self.gens}
        self.counit = {g: f(counit[g]) for g in self.gens}
        self.antipode = dict(antipode)

    # construction helpers
    def index(self, g):
        return self.gens.index(g)

    def mono(self, **exps):
        return tuple(exps.get(g, 0) for g in self.gens)

    def unit_mono(self):
        return (0,) * len(self.gens)

    def one(self):
        return Elem(self, {self.unit_mono(): self.field.one})

    def scalar(self, c):
        return Elem(self, {self.unit_mono(): self.field(c)})

    def monomial(self, m, c=1):
        return Elem(self, {tuple(m): self.field(c)})

    def gen(self, g):
        e = [0] * len(self.gens)
        e[self.index(g)] = 1
        return self.monomial(e)

    def word(self, word):
        """Normal form of the ordered product of ``(gen, exp)`` factors."""
        acc = self.one()
        for g, e in word:
            if e < 0 and g not in self.invertible:
                raise ConsistencyFailure(f"{g} is not invertible in {self.name}")
            m = [0] * len(self.gens)
            m[self.index(g)] = 1 if e >= 0 else -1
            step = self.monomial(m)
            for _ in range(abs(e)):
                acc = acc * step
        return acc

    def expression(self, terms):
        acc = Elem(self)
        for c, w in terms:
            acc = acc + self.word(w) * c
        return acc

    def mul_monomials(self, m1, m2):
        return self._mul_monomials(tuple(m1), tuple(m2))

    def mul(self, u: Elem, v: Elem) -> Elem:
        out = {}
        for m1, a in u.terms.items():
            for m2, b in v.terms.items():
                ab = a * b
                for m, c in self.mul_monomials(m1, m2).items():
                    out[m] = out[m] + ab * c if m in out else ab * c
        return Elem(self, out)

    def term_inverse(self, u: Elem) -> Elem:
        """Inverse of a single-term element whose monomial has invertible factors."""
        if len(u.terms) != 1:
            raise ConsistencyFailure(f"cannot invert {u} (not a single term)")
        (m, c), = u.terms.items()
        acc = self.scalar(c.inverse())
        for g, e in reversed(list(zip(self.gens, m))):
            if e:
                if g not in self.invertible:
                    raise ConsistencyFailure(f"cannot invert {u}: {g} is not invertible")
                acc = acc * self.word([(g, -e)])
        return acc

    def format_monomial(self, m):
        parts = []
        for g, e in zip(self.gens, m):
            if e == 1:
                parts.append(g)
            elif e:
                parts.append(f"{g}^{e}" if e > 0 else f"{g}^({e})")
        return "".join(parts) or "1"

    def format(self, u: Elem):
        if not u.terms:
            return "0"
        ms = sorted(u.terms, key=_mono_key)
        return format_vector([u.terms[m] for m in ms], [self.format_monomial(m) for m in ms])

    # Hopf structure, extended multiplicatively
    def comul_generator(self, g, inverse=False):
        if inverse:
            m = [0] * len(self.gens)
            m[self.index(g)] = -1
            return {(tuple(m), tuple(m)): self.field.one}
        return {(a, b): c for c, a, b in self.delta[g]}

    def tensor_mul(self, s, t):
        out = {}
        for (a, b), x in s.items():
            for (c, d), y in t.items():
                xy = x * y
                left = self.mul_monomials(a, c)
                right = self.mul_monomials(b, d)
                for m1, p in left.items():
                    for m2, q in right.items():
                        k = (m1, m2)
                        v = xy * p * q
                        out[k] = out[k] + v if k in out else v
        return {k: v for k, v in out.items() if v}

    def comul_monomial(self, m):
        acc = {(self.unit_mono(), self.unit_mono()): self.field.one}
        for g, e in zip(self.gens, m):
            if e < 0 and g not in self.invertible:
                raise ConsistencyFailure(f"{g} is not invertible")
            factor = self.comul_generator(g, inverse=e < 0)
            for _ in range(abs(e)):
                acc = self.tensor_mul(acc, factor)
        return acc

    def comul(self, u: Elem):
        out = {}
        for m, c in u.terms.items():
            for k, v in self.comul_monomial(m).items():
                out[k] = out[k] + c * v if k in out else c * v
        return {k: v for k, v in out.items() if v}

    def tensor(self, left: Elem, right: Elem):
        out = {}
        for a, x in left.terms.items():
            for b, y in right.terms.items():
                out[(a, b)] = out.get((a, b), self.field.zero) + x * y
        return {k: v for k, v in out.items() if v}

    def counit_of(self, u: Elem):
        return self.evaluate(self.counit, u)

    def antipode_of_monomial(self, m):
        acc = self.one()
        for g, e in zip(self.gens, m):
            if e > 0:
                factor = self.antipode[g]
            elif e < 0:
                factor = self.word([(g, 1)])  # S(g^{-1}) = g for group-like g
            else:
                continue
            for _ in range(abs(e)):
                acc = factor * acc
        return acc

    def apply_antipode(self, u: Elem):
        acc = Elem(self)
        for m, c in u.terms.items():
            acc = acc + self.antipode_of_monomial(m) * c
        return acc

    # characters
    def evaluate(self, values, u: Elem):
        """chi(u) for the multiplicative map with generator values ``values``."""
        f = self.field
        acc = f.zero
        for m, c in u.terms.items():
            term = c
            for g, e in zip(self.gens, m):
                if e:
                    term = term * (values[g] ** e)
            acc = acc + term
        return acc

    def substitute(self, images, u: Elem, target=None) -> Elem:
        """Algebra map given on generators by ``images`` (Elems of ``target``)."""
        target = target or self
        out = Elem(target)
        for m, c in u.terms.items():
            acc = target.one()
            for g, e in zip(self.gens, m):
                if e > 0:
                    acc = acc * images[g] ** e
                elif e < 0:
                    acc = acc * target.term_inverse(images[g]) ** (-e)
            out = out + acc * c
        return out

    def relator_elements(self):
        return [self.expression(r) for r in self.relators]

    def __repr__(self):
        return f"PresentedAlgebra({self.name}, gens={self.gens}, field={self.field.spec()})"


def _mono_key(m):
    return tuple((abs(e), -e) for e in m)


# --- characters ---------------------------------------------------------------


@dataclass(frozen=True)
class FamilyCharacter:
    gens: tuple
    values: tuple

    @classmethod
    def from_dict(cls, alg: PresentedAlgebra, values):
        return cls(alg.gens, tuple(values[g] for g in alg.gens))

    def as_dict(self):
        return dict(zip(self.gens, self.values))

    def __getitem__(self, g):
        return self.values[self.gens.index(g)]

    def __str__(self):
        return "(" + ", ".join(f"{g}↦{v}" for g, v in zip(self.gens, self.values)) + ")"


def check_character(alg: PresentedAlgebra, chi: FamilyCharacter):
    values = chi.as_dict()
    for g in alg.invertible:
        if not values[g]:
            raise RelatorViolation(f"{chi} sends the invertible generator {g} to 0")
    for r in alg.relators:
        # the oracle already reduces relators to 0; evaluate the raw words instead
        raw = alg.field.zero
        for c, w in r:
            t = alg.field(c)
            for g, e in w:
                t = t * values[g] ** e
            raw = raw + t
        if raw:
            raise RelatorViolation(f"{chi} does not kill the relator {_format_relator(r)}")
    return chi


def _format_relator(r):
    return " + ".join(f"{c}*" + "".join(f"{g}^{e}" for g, e in w) for c, w in r)


def counit_character(alg: PresentedAlgebra) -> FamilyCharacter:
    return FamilyCharacter.from_dict(alg, alg.counit)


def family_convolution(alg: PresentedAlgebra, chi: FamilyCharacter, psi: FamilyCharacter):
    """(chi * psi)(g) = sum c chi(g_1) psi(g_2) over Delta(g) for each generator."""
    a, b = chi.as_dict(), psi.as_dict()
    out = {}
    for g in alg.gens:
        acc = alg.field.zero
        for c, m1, m2 in alg.delta[g]:
            acc = acc + c * alg.evaluate(a, alg.monomial(m1)) * alg.evaluate(b, alg.monomial(m2))
        out[g] = acc
    return check_character(alg, FamilyCharacter.from_dict(alg, out))


def compose_antipode(alg: PresentedAlgebra, chi: FamilyCharacter) -> FamilyCharacter:
    values = chi.as_dict()
    out = {g: alg.evaluate(values, alg.antipode[g]) for g in alg.gens}
    return check_character(alg, FamilyCharacter.from_dict(alg, out))


# --- reduction chains -----------------------------------------------------------


@dataclass
class ReductionStep:
    algebra: PresentedAlgebra
    normal_element: Elem
    tau: dict
    tau_inverse: dict
    witness: list
    # generator -> Elem of the next level, or -> vector of the terminal algebra
    projection: dict


@dataclass
class Truncation:
    """Finite quotients H/J^s spanned by declared monomials."""

    basis: object  # s -> list of monomials
    in_kernel: object  # (monomial, s) -> bool
    kernel_generators: object  # s -> list of monomials generating J^s
    fixed_basis: object = None  # s -> list of monomials (expected fixed subalgebra)


@dataclass
class PresentedHopfFamily:
    name: str
    chain: list
    terminal: FiniteHopfAlgebra
    truncation: Truncation = None
    pi_degree: object = None
    params: dict = dc_field(default_factory=dict)
    golden: dict = dc_field(default_factory=dict)

    @property
    def algebra(self) -> PresentedAlgebra:
        return self.chain[0].algebra

    @property
    def field(self):
        return self.algebra.field


@dataclass
class ChainReport:
    checks: list = dc_field(default_factory=list)  # (step, name, ok, detail)

    def record(self, step, name, ok, detail=""):
        self.checks.append((step, name, bool(ok), detail))

    @property
    def passed(self):
        return all(ok for _, _, ok, _ in self.checks)

    @property
    def failures(self):
        return [(s, n, d) for s, n, ok, d in self.checks if not ok]

    def __bool__(self):
        return self.passed


def _next_level(family, i):
    return family.chain[i + 1].algebra if i + 1 < len(family.chain) else family.terminal


def _project(family, i, u: Elem):
    """Image of u under the projection of step i (an Elem or a terminal vector)."""
    step = family.chain[i]
    nxt = _next_level(family, i)
    if isinstance(nxt, PresentedAlgebra):
        return u.alg.substitute(step.projection, u, target=nxt)
    images = {g: list(v) for g, v in step.projection.items()}
    out = [nxt.field.zero] * nxt.dim
    for m, c in u.terms.items():
        acc = list(nxt.unit)
        for g, e in zip(u.alg.gens, m):
            acc = nxt.mul(acc, _terminal_power(nxt, images[g], e))
        out = [x + c * y for x, y in zip(out, acc)]
    return out


def _terminal_power(h: FiniteHopfAlgebra, v, e):
    if e < 0:
        lm = h.algebra.left_mult_matrix(list(v))
        if not lm.is_invertible():
            raise ConsistencyFailure("projection sends an invertible generator to a non-unit")
        v, e = lm.inverse().apply(list(h.unit)), -e
    acc = list(h.unit)
    for _ in range(e):
        acc = h.mul(acc, list(v))
    return acc


def _project_tensor(family, i, t):
    alg = family.chain[i].algebra
    nxt = _next_level(family, i)
    out = {}
    for (a, b), c in t.items():
        pa = _project(family, i, alg.monomial(a))
        pb = _project(family, i, alg.monomial(b))
        if isinstance(nxt, PresentedAlgebra):
            for k, v in nxt.tensor(pa, pb).items():
                out[k] = out[k] + c * v if k in out else c * v
        else:
            for j, x in enumerate(pa):
                if x:
                    for k, y in enumerate(pb):
                        if y:
                            out[(j, k)] = out.get((j, k), nxt.field.zero) + c * x * y
    return {k: v for k, v in out.items() if v}


def verify_chain(family: PresentedHopfFamily) -> ChainReport:
    rep = ChainReport()
    for i, step in enumerate(family.chain):
        alg = step.algebra
        w = step.normal_element
        for r, expr in zip(alg.relators, alg.relator_elements()):
            rep.record(i, "relator normal form", not expr, _format_relator(r))
        for g in alg.gens:
            x = alg.gen(g)
            rep.record(i, "normality", w * x == step.tau[g] * w, f"w*{g} = tau({g})*w")
            back = alg.substitute(step.tau, step.tau_inverse[g])
            forth = alg.substitute(step.tau_inverse, step.tau[g])
            rep.record(i, "twist inverse", back == x and forth == x, g)
        # Delta(w) against the declared witness
        wt = {}
        for side, a, b in step.witness:
            left, right = (a * w, b) if side == "left" else (a, w * b)
            for k, v in alg.tensor(left, right).items():
                wt[k] = wt[k] + v if k in wt else v
        wt = {k: v for k, v in wt.items() if v}
        rep.record(i, "hopf ideal witness", wt == alg.comul(w), "Delta(w)")
        rep.record(i, "counit kills w", not alg.counit_of(w), "eps(w)")
        nxt = _next_level(family, i)
        pw = _project(family, i, w)
        rep.record(i, "projection kills w", not (pw.terms if isinstance(pw, Elem) else any(pw)), "p(w)")
        for r in alg.relators:
            total = None
            for c, word in r:
                acc = _project_word(family, i, word)
                total = _scaled_add(total, c, acc)
            zero = (not total.terms) if isinstance(total, Elem) else not any(total)
            rep.record(i, "projection respects relators", zero, _format_relator(r))
        for g in alg.gens:
            lhs = _project_tensor(family, i, alg.comul_generator(g))
            pg = _project(family, i, alg.gen(g))
            if isinstance(nxt, PresentedAlgebra):
                rhs = nxt.comul(pg)
                eps_ok = nxt.counit_of(pg) == alg.counit[g]
            else:
                rhs = nxt.comul_vector(pg)
                eps_ok = nxt.counit_of(pg) == alg.counit[g]
            rep.record(i, "projection is comultiplicative", lhs == rhs, g)
            rep.record(i, "projection is counital", eps_ok, g)
    return rep


def _project_word(family, i, word):
    nxt = _next_level(family, i)
    if isinstance(nxt, PresentedAlgebra):
        acc = nxt.one()
        for g, e in word:
            img = family.chain[i].projection[g]
            acc = acc * (img ** e if e >= 0 else nxt.term_inverse(img) ** (-e))
        return acc
    acc = list(nxt.unit)
    for g, e in word:
        acc = nxt.mul(acc, _terminal_power(nxt, family.chain[i].projection[g], e))
    return acc


def _scaled_add(total, c, acc):
    if isinstance(acc, Elem):
        return acc * c if total is None else total + acc * c
    scaled = [c * x for x in acc]
    return scaled if total is None else [a + b for a, b in zip(total, scaled)]


# --- integral characters ----------------------------------------------------------


def integral_character(family: PresentedHopfFamily, check=True) -> FamilyCharacter:
    """Character of the right action on the left integral.

    Start from alpha_left of the terminal algebra, then walk the chain
    backwards: chi_i = (chi_{i+1} o p_i) o tau_i^{-1}.
    """
    if check:
        rep = verify_chain(family)
        if not rep.passed:
            raise ConsistencyFailure(f"reduction chain fails: {rep.failures[:3]}")
    data = compute_integrals(family.terminal)
    chi = list(data.alpha_left)  # covector on the terminal algebra
    for i in reversed(range(len(family.chain))):
        step = family.chain[i]
        alg = step.algebra
        nxt = _next_level(family, i)
        if isinstance(nxt, PresentedAlgebra):
            prev = chi.as_dict()
            pulled = {g: nxt.evaluate(prev, step.projection[g]) for g in alg.gens}
        else:
            pulled = {g: apply_character(chi, list(step.projection[g])) for g in alg.gens}
        values = {g: alg.evaluate(pulled, step.tau_inverse[g]) for g in alg.gens}
        chi = check_character(alg, FamilyCharacter.from_dict(alg, values))
    return chi


def right_integral_character(family: PresentedHopfFamily, alpha=None) -> FamilyCharacter:
    """Sigma^r = alpha_left o S."""
    alpha = alpha or integral_character(family)
    return compose_antipode(family.algebra, alpha)


def convolution_powers(alg, chi, cap=DEFAULT_ORDER_CAP):
    """[eps, chi, chi^2, ...] up to the first return to eps, or None past ``cap``."""
    eps = counit_character(alg)
    powers = [eps]
    acc = chi
    for _ in range(cap):
        if acc == eps:
            return powers
        powers.append(acc)
        acc = family_convolution(alg, acc, chi)
    return None


def family_integral_order(family: PresentedHopfFamily, cap=DEFAULT_ORDER_CAP, sigma=None):
    sigma = sigma or right_integral_character(family)
    powers = convolution_powers(family.algebra, sigma, cap)
    return None if powers is None else len(powers)


def clique_of_trivial(family: PresentedHopfFamily, cap=DEFAULT_ORDER_CAP, sigma=None):
    """The orbit {(Sigma^r)^{*t} : 0 <= t < io}."""
    alg = family.algebra
    sigma = sigma or right_integral_character(family)
    powers = convolution_powers(alg, sigma, cap)
    if powers is None:
        return None
    if len(set(powers)) != len(powers):
        raise ConsistencyFailure("clique characters are not distinct")
    for chi in powers:
        if family_convolution(alg, chi, sigma) not in powers:
            raise ConsistencyFailure("clique not closed under convolution by Sigma^r")
    return powers


@dataclass
class FamilyQuotient:
    quotient: FiniteHopfAlgebra
    images: dict  # generator -> vector in the quotient
    characters: list


def family_integral_quotient(family: PresentedHopfFamily, cap=DEFAULT_ORDER_CAP, sigma=None):
    """H_iq as the function algebra on the clique group, which is cyclic of order io.

    The basis vector d_i is dual to (Sigma^r)^{*i}; a generator maps to
    sum_i chi_i(g) d_i.  The map is checked to be a Hopf map on generators.
    """
    from .presets import group_algebra  # presets imports this module

    alg = family.algebra
    clique = clique_of_trivial(family, cap, sigma)
    if clique is None:
        raise OrderInfinite(f"integral order exceeds the cap {cap}")
    n = len(clique)
    q = dual_hopf(group_algebra(f"z{n}", alg.field), name=f"({family.name})_iq")
    q.algebra.labels = [f"δ{i}" for i in range(n)]

    def image(u: Elem):
        return [alg.evaluate(chi.as_dict(), u) for chi in clique]

    images = {g: image(alg.gen(g)) for g in alg.gens}
    for g in alg.gens:
        lhs = {}
        for c, m1, m2 in alg.delta[g]:
            a, b = image(alg.monomial(m1)), image(alg.monomial(m2))
            for i, x in enumerate(a):
                for j, y in enumerate(b):
                    if x and y:
                        lhs[(i, j)] = lhs.get((i, j), alg.field.zero) + c * x * y
        lhs = {k: v for k, v in lhs.items() if v}
        if lhs != q.comul_vector(images[g]) or q.counit_of(images[g]) != alg.counit[g]:
            raise ConsistencyFailure(f"integral quotient map is not a coalgebra map on {g}")
    if not q.algebra.is_commutative():
        raise ConsistencyFailure("integral quotient is not commutative")
    return FamilyQuotient(q, images, clique)


# --- truncations -------------------------------------------------------------------


@dataclass
class TruncationResult:
    algebra: FiniteAlgebra
    windings: list
    basis: list
    s: int

    def radical_layers(self):
        return radical_layers(self.algebra)

    def fixed_subalgebra(self):
        return fixed_subalgebra(self.algebra, self.windings)

    def fixed_is_commutative(self):
        return is_commutative_subspace(self.algebra, self.fixed_subalgebra())


def winding_on_generators(alg: PresentedAlgebra, pi: FamilyCharacter):
    """sigma_pi(g) = sum g_1 pi(g_2) for every generator."""
    values = pi.as_dict()
    out = {}
    for g in alg.gens:
        acc = Elem(alg)
        for c, m1, m2 in alg.delta[g]:
            acc = acc + alg.monomial(m1) * (c * alg.evaluate(values, alg.monomial(m2)))
        out[g] = acc
    return out


def truncate(family: PresentedHopfFamily, s: int, cap=DEFAULT_ORDER_CAP) -> TruncationResult:
    """The finite algebra H/J^s together with the descended winding automorphisms."""
    tr = family.truncation
    if tr is None:
        raise TruncationUndeclared(f"{family.name} declares no truncation data")
    s = int(s)
    if s < 1:
        raise InvalidParams("truncation level s must be at least 1")
    alg = family.algebra
    f = alg.field
    basis = [tuple(m) for m in tr.basis(s)]
    index = {m: i for i, m in enumerate(basis)}
    n = len(basis)

    def to_vector(u: Elem):
        v = [f.zero] * n
        for m, c in u.terms.items():
            if tr.in_kernel(m, s):
                continue
            if m not in index:
                raise ConsistencyFailure(f"monomial {alg.format_monomial(m)} outside the truncation basis")
            v[index[m]] = c
        return v

    table = []
    for a in basis:
        row = []
        for b in basis:
            prod = alg.mul(alg.monomial(a), alg.monomial(b))
            row.append({k: c for k, c in enumerate(to_vector(prod)) if c})
        table.append(row)
    labels = [alg.format_monomial(m) for m in basis]
    fin = FiniteAlgebra(f, table, to_vector(alg.one()), labels)

    sigma = right_integral_character(family)
    powers = convolution_powers(alg, sigma, cap) or [counit_character(alg)]
    windings = []
    for pi in powers:
        images = winding_on_generators(alg, pi)
        for m in tr.kernel_generators(s):
            img = alg.substitute(images, alg.monomial(m))
            if any(not tr.in_kernel(k, s) for k in img.terms):
                raise ConsistencyFailure(f"winding by {pi} does not preserve J^{s}")
        cols = [to_vector(alg.substitute(images, alg.monomial(m))) for m in basis]
        windings.append(Matrix.from_columns(f, cols, n))
    return TruncationResult(fin, windings, basis, s)


def nonzerodivisor_evidence(family: PresentedHopfFamily, s: int) -> bool:
    """Left multiplication by w is injective from H/J^(s-1) into H/J^s.

    Supporting evidence only; the hypothesis itself is asserted by the preset.
    """
    tr = family.truncation
    if tr is None or s < 2:
        return True
    step = family.chain[0]
    alg = step.algebra
    w = step.normal_element
    target = {tuple(m): i for i, m in enumerate(tr.basis(s))}
    eb = EchelonBuilder(alg.field, len(target))
    count = 0
    for m in tr.basis(s - 1):
        prod = w * alg.monomial(m)
        v = [alg.field.zero] * len(target)
        for k, c in prod.terms.items():
            if not tr.in_kernel(k, s):
                v[target[k]] = c
        count += 1
        if not eb.add(v):
            return False
    return eb.dim == count
