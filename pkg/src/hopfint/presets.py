"""Named Hopf algebras from the literature, finite and presented, with golden values.

Preset strings have the form ``preset:NAME(key=value,...)`` (the ``preset:``
prefix is optional here).  Positional values fill the builder's parameters in
order, so ``group_algebra(z3)`` and ``group_algebra(group=z3)`` agree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations, product
from math import comb, gcd

from .algebra import FiniteAlgebra
from .errors import InputError, InvalidParams
from .family import (
    PresentedAlgebra,
    PresentedHopfFamily,
    ReductionStep,
    Truncation,
)
from .hopf import FiniteHopfAlgebra, hopf_from_generators
from .linalg import Matrix, unit_vector
from .scalars import (
    cyclotomic_field,
    multiplicative_order,
    parse_field,
    primitive_root_of_unity,
    rationals,
)

# --- finite groups ----------------------------------------------------------


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    elements: tuple
    labels: tuple
    mul: object
    inv: object


def cyclic_group(n):
    labels = tuple("1" if i == 0 else ("g" if i == 1 else f"g^{i}") for i in range(n))
    return FiniteGroup(f"z{n}", tuple(range(n)), labels,
                       lambda a, b: (a + b) % n, lambda a: -a % n)


def abelian_group(orders, gen_names=None):
    """Direct product of cyclic groups; elements are exponent tuples."""
    gen_names = gen_names or "abcdefgh"[: len(orders)]
    elements = tuple(product(*(range(o) for o in orders)))

    def label(e):
        parts = []
        for name, k in zip(gen_names, e):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return "".join(parts) or "1"

    return FiniteGroup("x".join(f"z{o}" for o in orders), elements,
                       tuple(label(e) for e in elements),
                       lambda a, b: tuple((x + y) % o for x, y, o in zip(a, b, orders)),
                       lambda a: tuple(-x % o for x, o in zip(a, orders)))


def symmetric_group(n):
    elements = tuple(sorted(permutations(range(n))))
    labels = tuple("1" if p == tuple(range(n)) else "(" + "".join(str(i + 1) for i in p) + ")"
                   for p in elements)

    def mul(a, b):  # (a b)(i) = a(b(i))
        return tuple(a[b[i]] for i in range(n))

    def inv(a):
        out = [0] * n
        for i, ai in enumerate(a):
            out[ai] = i
        return tuple(out)

    return FiniteGroup(f"s{n}", elements, labels, mul, inv)


def parse_group(spec) -> FiniteGroup:
    s = str(spec).strip().lower()
    if s in ("klein", "klein_four", "v4"):
        return abelian_group((2, 2))
    m = re.fullmatch(r"z(\d+)", s)
    if m:
        return cyclic_group(int(m.group(1)))
    m = re.fullmatch(r"z\d+(?:xz\d+)+", s)
    if m:
        return abelian_group(tuple(int(t) for t in re.findall(r"\d+", s)))
    m = re.fullmatch(r"s(\d)", s)
    if m:
        return symmetric_group(int(m.group(1)))
    raise InvalidParams(f"unknown group {spec!r}; use zN, zAxzB..., klein or sN")


def group_algebra(group, field=None) -> FiniteHopfAlgebra:
    """kG with Delta(g) = g (x) g, eps(g) = 1, S(g) = g^{-1}."""
    if not isinstance(group, FiniteGroup):
        group = parse_group(group)
    field = field or rationals()
    idx = {g: i for i, g in enumerate(group.elements)}
    n = len(idx)
    one = field.one
    table = [[{idx[group.mul(a, b)]: one} for b in group.elements] for a in group.elements]
    e = next(g for g in group.elements if group.mul(g, g) == g)
    alg = FiniteAlgebra(field, table, unit_vector(field, n, idx[e]), group.labels)
    comul = [{(i, i): one} for i in range(n)]
    anti = Matrix.from_columns(field, [unit_vector(field, n, idx[group.inv(g)]) for g in group.elements], n)
    return FiniteHopfAlgebra(alg, comul, [one] * n, anti, name=f"k[{group.name}]")


def trivial_hopf(field=None) -> FiniteHopfAlgebra:
    field = field or rationals()
    one = field.one
    alg = FiniteAlgebra(field, [[{0: one}]], [one], ["1"])
    return FiniteHopfAlgebra(alg, [{(0, 0): one}], [one], Matrix.identity(field, 1), name="k")


# --- Taft-type algebras -----------------------------------------------------


def taft_labels(n, s):
    def g(i):
        return "" if i == 0 else ("g" if i == 1 else f"g^{i}")

    def x(j):
        return "" if j == 0 else ("x" if j == 1 else f"x^{j}")

    return [(g(i) + x(j)) or "1" for j in range(s) for i in range(n)]


def taft_algebra(n, q, s, field) -> FiniteAlgebra:
    """k<g, x>/(g^n - 1, xg - q gx, x^s) in the basis g^i x^j, index j*n + i."""
    table = []
    powers = [q ** k for k in range(n)]
    for b in range(s):
        for a in range(n):
            row = []
            for d in range(s):
                for c in range(n):
                    if b + d >= s:
                        row.append({})
                    else:
                        # x^b g^c = q^{bc} g^c x^b
                        row.append({(b + d) * n + (a + c) % n: powers[(b * c) % n]})
            table.append(row)
    return FiniteAlgebra(field, table, unit_vector(field, n * s, 0), taft_labels(n, s))


def _default_root_field(n):
    return rationals() if n <= 2 else cyclotomic_field(n)


def taft_finite(n=2, m=1, t=1, field=None, xi=None) -> FiniteHopfAlgebra:
    """Taft-type algebra modulo x^n; needs xi^(m t) of exact order n.

    Delta(g) = g (x) g, Delta(x) = x (x) 1 + g^t (x) x, S(g) = g^{-1},
    S(x) = -g^{-t} x.
    """
    n, m, t = int(n), int(m), int(t)
    if n < 2:
        raise InvalidParams("taft_finite needs n >= 2")
    field = parse_field(field) if field is not None else _default_root_field(n)
    xi = field(xi) if xi is not None else primitive_root_of_unity(field, n)
    if multiplicative_order(xi, n) != n:
        raise InvalidParams(f"xi={xi} is not a primitive {n}-th root of unity")
    if multiplicative_order(xi ** (m * t), n) != n:
        raise InvalidParams(
            f"xi^(m t) must have order exactly n={n} for (x^n) to be a Hopf ideal "
            f"(m={m}, t={t})")
    q = xi ** m
    alg = taft_algebra(n, q, n, field)
    dim = n * n

    def e(i, j):
        return unit_vector(field, dim, j * n + i)

    gens = {
        "g": {"vector": e(1, 0), "delta": [(1, e(1, 0), e(1, 0))], "counit": 1,
              "antipode": e(n - 1, 0)},
        "x": {"vector": e(0, 1), "delta": [(1, e(0, 1), e(0, 0)), (1, e(t % n, 0), e(0, 1))],
              "counit": 0, "antipode": [-c for c in e((-t) % n, 1)]},
    }
    words = [["g"] * i + ["x"] * j for j in range(n) for i in range(n)]
    name = "sweedler" if (n, m, t) == (2, 1, 1) else f"taft_finite(n={n},m={m},t={t})"
    return hopf_from_generators(alg, words, gens, name=name)


def sweedler(field=None) -> FiniteHopfAlgebra:
    return taft_finite(2, 1, 1, field=field)


# --- circle Hopf algebra ----------------------------------------------------


def circle_hopf(xi=1, field=None) -> FiniteHopfAlgebra:
    """k[x, y]/(x^2 + xi y^2 - 1, xy) with Delta(x) = x (x) x - xi y (x) y,
    Delta(y) = x (x) y + y (x) x, eps(x) = 1, eps(y) = 0, S(x) = x, S(y) = -y.

    Basis 1, x, y, x^2.
    """
    field = parse_field(field) if field is not None else rationals()
    xi = field(xi)
    if not xi:
        raise InvalidParams("circle_hopf needs xi != 0")
    o, z = field.one, field.zero
    inv = xi.inverse()
    one, x, y, x2 = 0, 1, 2, 3
    products = {
        (x, x): {x2: o}, (x, y): {}, (x, x2): {x: o},
        (y, y): {one: inv, x2: -inv}, (y, x2): {},
        (x2, x2): {x2: o},
    }
    table = [[{} for _ in range(4)] for _ in range(4)]
    for i in range(4):
        table[one][i] = {i: o}
        table[i][one] = {i: o}
    for (i, j), v in products.items():
        table[i][j] = dict(v)
        table[j][i] = dict(v)
    alg = FiniteAlgebra(field, table, unit_vector(field, 4, 0), ["1", "x", "y", "x^2"])

    def e(i):
        return unit_vector(field, 4, i)

    gens = {
        "x": {"vector": e(x), "delta": [(1, e(x), e(x)), (-xi, e(y), e(y))], "counit": 1,
              "antipode": e(x)},
        "y": {"vector": e(y), "delta": [(1, e(x), e(y)), (1, e(y), e(x))], "counit": 0,
              "antipode": [z, z, -o, z]},
    }
    name = "circle_hopf" if xi == 1 else f"circle_hopf(xi={xi})"
    return hopf_from_generators(alg, [[], ["x"], ["y"], ["x", "x"]], gens, name=name)


def circle_to_group_witness(h: FiniteHopfAlgebra, group: FiniteGroup, image_of_z):
    """Linear map H_1 -> kG determined by z = x + i y |-> image_of_z.

    Uses x = (z + z^{-1})/2, y = (z - z^{-1})/(2i), x^2 = (z^2 + 2 + z^{-2})/4.
    ``h`` must be the circle algebra (xi = 1) over a field containing i.
    """
    f = h.field
    i_unit = primitive_root_of_unity(f, 4)
    idx = {g: k for k, g in enumerate(group.elements)}
    n = len(idx)
    e_id = next(g for g in group.elements if group.mul(g, g) == g)

    def vec(g):
        return unit_vector(f, n, idx[g])

    z = image_of_z
    zi = group.inv(z)
    z2, zm2 = group.mul(z, z), group.mul(zi, zi)
    half, quarter = f(1) / 2, f(1) / 4
    cols = [
        vec(e_id),
        [half * (a + b) for a, b in zip(vec(z), vec(zi))],
        [(a - b) / (2 * i_unit) for a, b in zip(vec(z), vec(zi))],
        [quarter * (a + 2 * c + b) for a, b, c in zip(vec(z2), vec(zm2), vec(e_id))],
    ]
    return Matrix.from_columns(f, cols, n)


# --- presented families -----------------------------------------------------


def _primitive(alg, g):
    m = alg.mono(**{g: 1})
    return [(1, m, alg.unit_mono()), (1, alg.unit_mono(), m)]


def _group_like(alg, g):
    m = alg.mono(**{g: 1})
    return [(1, m, m)]


def taft_family(n=3, m=1, t=1, field=None, xi=None) -> PresentedHopfFamily:
    """k<g, x>/(g^n - 1, xg - xi^m gx), g group-like, x (g^t, 1)-primitive.

    One reduction step: w = x with w g = xi^m g w, terminal kZ_n.
    """
    n, m, t = int(n), int(m), int(t)
    if n < 2:
        raise InvalidParams("taft_family needs n >= 2")
    field = parse_field(field) if field is not None else _default_root_field(n)
    xi = field(xi) if xi is not None else primitive_root_of_unity(field, n)
    if multiplicative_order(xi, n) != n:
        raise InvalidParams(f"xi={xi} is not a primitive {n}-th root of unity")
    q = xi ** m
    qpow = [q ** k for k in range(n)]

    def mul(e1, e2):
        (a, b), (c, d) = e1, e2
        return {((a + c) % n, b + d): qpow[(b * c) % n]}

    alg = PresentedAlgebra(
        f"taft(n={n},m={m},t={t})", field, ("g", "x"), mul, invertible=("g",),
        relators=[[(1, [("g", n)]), (-1, [])],
                  [(1, [("x", 1), ("g", 1)]), (-q, [("g", 1), ("x", 1)])]])
    g, x = alg.gen("g"), alg.gen("x")
    alg.set_hopf(
        {"g": _group_like(alg, "g"),
         "x": [(1, (0, 1), (0, 0)), (1, (t % n, 0), (0, 1))]},
        {"g": 1, "x": 0},
        {"g": alg.monomial(((n - 1), 0)), "x": -alg.monomial(((-t) % n, 1))})
    term = group_algebra(f"z{n}", field)
    step = ReductionStep(
        alg, x, tau={"g": g * q, "x": x}, tau_inverse={"g": g * q.inverse(), "x": x},
        witness=[("left", alg.one(), alg.one()), ("right", g ** t, alg.one())],
        projection={"g": unit_vector(field, n, 1), "x": [field.zero] * n})
    trunc = None
    if gcd(m, n) == 1:
        trunc = Truncation(
            basis=lambda s: [(a, b) for b in range(s) for a in range(n)],
            in_kernel=lambda mono, s: mono[1] >= s,
            kernel_generators=lambda s: [(a, s) for a in range(n)],
            fixed_basis=lambda s: [(0, b) for b in range(s)])
    return PresentedHopfFamily(
        f"taft_family(n={n},m={m},t={t})", [step], term, truncation=trunc,
        pi_degree=n if gcd(m, n) == 1 else None, params={"n": n, "m": m, "t": t, "xi": xi})


def polynomial_level(field, name="y") -> PresentedAlgebra:
    alg = PresentedAlgebra(f"k[{name}]", field, (name,), lambda e1, e2: {(e1[0] + e2[0],): field.one})
    alg.set_hopf({name: _primitive(alg, name)}, {name: 0}, {name: -alg.gen(name)})
    return alg


def solvable_enveloping(field=None) -> PresentedHopfFamily:
    """U(L) for the 2-dimensional Lie algebra [x, y] = x, basis y^a x^b.

    Chain: w = x (x y = (y + 1) x), then w = y in k[y], terminal k.
    """
    field = parse_field(field) if field is not None else rationals()

    def mul(e1, e2):
        # y^a x^b y^c x^d = y^a (y + b)^c x^(b + d)
        (a, b), (c, d) = e1, e2
        out = {}
        for k in range(c + 1):
            coef = field(comb(c, k) * b ** (c - k))
            if coef:
                out[(a + k, b + d)] = coef
        return out

    alg = PresentedAlgebra("U(L)", field, ("y", "x"), mul,
                           relators=[[(1, [("x", 1), ("y", 1)]), (-1, [("y", 1), ("x", 1)]),
                                      (-1, [("x", 1)])]])
    x, y = alg.gen("x"), alg.gen("y")
    alg.set_hopf({"x": _primitive(alg, "x"), "y": _primitive(alg, "y")},
                 {"x": 0, "y": 0}, {"x": -x, "y": -y})
    poly = polynomial_level(field, "y")
    step0 = ReductionStep(
        alg, x, tau={"x": x, "y": y + 1}, tau_inverse={"x": x, "y": y - 1},
        witness=[("left", alg.one(), alg.one()), ("right", alg.one(), alg.one())],
        projection={"x": poly.scalar(0), "y": poly.gen("y")})
    yy = poly.gen("y")
    step1 = ReductionStep(
        poly, yy, tau={"y": yy}, tau_inverse={"y": yy},
        witness=[("left", poly.one(), poly.one()), ("right", poly.one(), poly.one())],
        projection={"y": [field.zero]})
    return PresentedHopfFamily("solvable_enveloping", [step0, step1], trivial_hopf(field),
                               params={})


def _group_family_algebra(name, field, gens, mul, relators):
    alg = PresentedAlgebra(name, field, gens, mul, invertible=gens, relators=relators)
    antipode = {}
    for g in gens:
        m = [0] * len(gens)
        m[alg.index(g)] = -1
        antipode[g] = alg.monomial(m)
    alg.set_hopf({g: _group_like(alg, g) for g in gens}, {g: 1 for g in gens}, antipode)
    return alg


def _dihedral_algebra(field):
    def mul(e1, e2):
        (e, k), (f, l) = e1, e2
        return {((e + f) % 2, (-k if f % 2 else k) + l): field.one}

    return _group_family_algebra(
        "kD", field, ("g", "x"), mul,
        [[(1, [("g", 2)]), (-1, [])],
         [(1, [("g", 1), ("x", 1), ("g", 1)]), (-1, [("x", -1)])]])


def _dihedral_step(alg, field):
    x = alg.gen("x")
    return ReductionStep(
        alg, x - 1,
        tau={"g": -alg.monomial((1, -1)), "x": x},
        tau_inverse={"g": -alg.monomial((1, 1)), "x": x},
        witness=[("left", alg.one(), x), ("right", alg.one(), alg.one())],
        projection={"g": unit_vector(field, 2, 1), "x": unit_vector(field, 2, 0)})


def infinite_dihedral(field=None) -> PresentedHopfFamily:
    """kD for D = <g, x | g^2 = 1, gxg = x^-1>, basis g^e x^k.

    One step: w = x - 1 with w g = (-g x^-1) w, terminal kZ_2.
    """
    field = parse_field(field) if field is not None else rationals()
    alg = _dihedral_algebra(field)
    return PresentedHopfFamily("infinite_dihedral", [_dihedral_step(alg, field)],
                               group_algebra("z2", field), pi_degree=2)


def example85(field=None) -> PresentedHopfFamily:
    """kG for G = <g, x, y | g^2 = 1, gxg = x^-1, gyg = y^-1, xy = yx>.

    Two steps: w = y - 1 down to kD, then the dihedral step.
    """
    field = parse_field(field) if field is not None else rationals()

    def mul(e1, e2):
        (e, a, b), (f, c, d) = e1, e2
        s = -1 if f % 2 else 1
        return {((e + f) % 2, s * a + c, s * b + d): field.one}

    alg = _group_family_algebra(
        "kG", field, ("g", "x", "y"), mul,
        [[(1, [("g", 2)]), (-1, [])],
         [(1, [("g", 1), ("x", 1), ("g", 1)]), (-1, [("x", -1)])],
         [(1, [("g", 1), ("y", 1), ("g", 1)]), (-1, [("y", -1)])],
         [(1, [("x", 1), ("y", 1)]), (-1, [("y", 1), ("x", 1)])]])
    x, y = alg.gen("x"), alg.gen("y")
    dih = _dihedral_algebra(field)
    step0 = ReductionStep(
        alg, y - 1,
        tau={"g": -alg.monomial((1, 0, -1)), "x": x, "y": y},
        tau_inverse={"g": -alg.monomial((1, 0, 1)), "x": x, "y": y},
        witness=[("left", alg.one(), y), ("right", alg.one(), alg.one())],
        projection={"g": dih.gen("g"), "x": dih.gen("x"), "y": dih.one()})
    return PresentedHopfFamily("example85", [step0, _dihedral_step(dih, field)],
                               group_algebra("z2", field))


def laurent(field=None) -> PresentedHopfFamily:
    """k[x, x^-1] = kZ with the central normal element x - 1, terminal k."""
    field = parse_field(field) if field is not None else rationals()
    alg = _group_family_algebra("kZ", field, ("x",), lambda e1, e2: {(e1[0] + e2[0],): field.one}, [])
    x = alg.gen("x")
    step = ReductionStep(alg, x - 1, tau={"x": x}, tau_inverse={"x": x},
                         witness=[("left", alg.one(), x), ("right", alg.one(), alg.one())],
                         projection={"x": [field.one]})
    return PresentedHopfFamily("laurent", [step], trivial_hopf(field))


# --- registry ---------------------------------------------------------------


@dataclass
class PresetDescriptor:
    """A named builder plus a function producing its golden record.

    ``golden(obj, params)`` returns ``{report_key: (value, provenance)}``;
    values use the report's canonical encoding (scalars as strings).
    """

    name: str
    kind: str  # "FINITE" or "FAMILY"
    builder: object
    params: tuple = ()
    doc: str = ""
    golden: object = None


REGISTRY: dict = {}


def register(desc: PresetDescriptor):
    REGISTRY[desc.name] = desc
    return desc


def _xi_of(obj, params, n):
    xi = params.get("xi")
    return obj.field(xi) if xi is not None else primitive_root_of_unity(obj.field, n)


def _semisimple_group(obj, order):
    return bool(obj.field(order))


def _golden_trivial(obj, params):
    return {"dim": (1, "TRIVIAL"), "io": (1, "TRIVIAL"), "unimodular": (True, "TRIVIAL"),
            "semisimple_by_integral": (True, "TRIVIAL"), "iq_dim": (1, "TRIVIAL")}


_ABELIANIZATION_ORDER = {"s3": 2}


def _golden_group(obj, params):
    group = parse_group(params.get("group", "klein" if obj.name == "k[z2xz2]" else "z2"))
    order = len(group.elements)
    g = {
        "dim": (order, "TRIVIAL: |G|"),
        "io": (1, "TRIVIAL: group algebras are unimodular"),
        "unimodular": (True, "TRIVIAL: Sigma^r = eps"),
        "epsilon_of_integral": (str(obj.field(order)), "TRIVIAL: eps(sum of G) = |G|"),
        "semisimple_by_integral": (_semisimple_group(obj, order), "TRIVIAL: Maschke, |G| != 0 in k"),
        "S_squared_is_id": (True, "TRIVIAL: S(g) = g^-1"),
        "iq_dim": (1, "TRIVIAL: io = 1"),
    }
    ab = _ABELIANIZATION_ORDER.get(group.name, order if group.name[0] == "z" else None)
    if ab is not None:
        g["ab_dim"] = (ab, "TRIVIAL: |G/[G,G]|")
    return g


def _golden_taft(obj, params):
    n = int(params.get("n", 2))
    m = int(params.get("m", 1))
    t = int(params.get("t", 1))
    xi = _xi_of(obj, params, n)
    io = multiplicative_order(xi ** m, n)
    g = {
        "dim": (n * n, "PAPER: dimension n^2 modulo x^n"),
        "io": (io, "PAPER: io = order(xi^m)"),
        "unimodular": (io == 1, "PAPER: io = order(xi^m)"),
        "antipode_order": (2 * multiplicative_order(xi ** (m * t), n),
                           "PAPER: order of S is 2 order(xi^{mt})"),
        "epsilon_of_integral": ("0", "DERIVED: right integral x^{n-1} sum g^i, eps(x) = 0"),
        "semisimple_by_integral": (False, "DERIVED: eps of the integral vanishes"),
        "iq_dim": (io, "PAPER: dim H_iq = io"),
        "ab_dim": (n, "DERIVED: commutator ideal is (x) since xi^m != 1"),
    }
    if obj.field.characteristic == 0:
        g["radical_dim"] = (n * n - n, "DERIVED: radical (x), quotient kZ_n")
    return g


def _golden_circle(obj, params):
    g = {
        "dim": (4, "PAPER: basis 1, x, y, x^2"),
        "io": (1, "TRIVIAL: commutative"),
        "unimodular": (True, "TRIVIAL: commutative"),
        "S_squared_is_id": (True, "TRIVIAL: commutative"),
        "antipode_order": (2, "DERIVED: S(y) = -y"),
        "iq_dim": (1, "TRIVIAL: io = 1"),
        "ab_dim": (4, "TRIVIAL: commutative"),
    }
    if obj.field.characteristic == 0:
        g["semisimple_by_integral"] = (True, "DERIVED: eps(x + x^2) = 2 != 0")
        g["radical_dim"] = (0, "DERIVED: reduced algebra")
    return g


def _char(values):
    return {k: str(v) for k, v in values.items()}


def _golden_taft_family(obj, params):
    n, m = obj.params["n"], obj.params["m"]
    xi = obj.params["xi"]
    io = multiplicative_order(xi ** m, n)
    g = {
        "integral_character": (_char({"g": xi ** (-m), "x": obj.field.zero}),
                               "PAPER: int^l = H/(x, g - xi^{-m})"),
        "sigma_r": (_char({"g": xi ** m, "x": obj.field.zero}),
                    "PAPER: int^r = H/(x, g - xi^m)"),
        "io": (io, "PAPER: io = order(xi^m)"),
        "clique_size": (io, "PAPER: orbit of Sigma^r"),
        "iq_dim": (io, "PAPER: dim H_iq = io"),
    }
    if obj.pi_degree is not None:
        g["pi_degree"] = (n, "PAPER: prime of PI degree n")
    return g


def _golden_enveloping(obj, params):
    p = obj.field.characteristic
    io = p or None
    return {
        "integral_character": ({"y": str(obj.field(-1)), "x": "0"},
                               "PAPER: int^l = H/(x, y + 1)"),
        "io": (io, "PAPER: io = char k, infinite in char 0"),
        "clique_size": (io, "PAPER: clique is the orbit of Sigma^r"),
    }


def _golden_dihedral(obj, params):
    return {
        "sigma_r": ({"g": str(obj.field(-1)), "x": "1"}, "PAPER: int^r = H/(g + 1, x - 1)"),
        "io": (2, "PAPER: io(H) = 2"),
        "clique_size": (2, "PAPER: orbit of Sigma^r"),
        "iq_dim": (2, "PAPER: dim H_iq = io"),
    }


def _golden_trivial_family(obj, params):
    values = {g: "1" for g in obj.algebra.gens}
    return {
        "integral_character": (values, "PAPER: trivial integral"),
        "sigma_r": (values, "PAPER: trivial integral"),
        "io": (1, "PAPER: io(kG) = 1"),
        "clique_size": (1, "TRIVIAL: unimodular"),
        "iq_dim": (1, "TRIVIAL: unimodular"),
    }


register(PresetDescriptor("trivial", "FINITE", lambda field=None: trivial_hopf(field), (),
                          "the one-dimensional Hopf algebra k", _golden_trivial))
register(PresetDescriptor(
    "group_algebra", "FINITE", lambda group="z2", field=None: group_algebra(group, field), ("group",),
    "group algebra kG for G in zN, zAxzB..., klein, sN", _golden_group))
register(PresetDescriptor(
    "klein_four", "FINITE", lambda field=None: group_algebra("klein", field), (),
    "k(Z2 x Z2)", _golden_group))
register(PresetDescriptor(
    "sweedler", "FINITE", lambda field=None: sweedler(field), (),
    "Sweedler's 4-dimensional algebra: Taft n=2, m=t=1, xi=-1, modulo x^2",
    lambda obj, params: {
        **_golden_taft(obj, {"n": 2}),
        "radical_dim": (2, "DERIVED: radical span{x, gx}"),
        "ab_dim": (2, "DERIVED: commutator ideal span{x, gx}"),
        "cond1_holds": (False, "DERIVED: Sigma^r != eps"),
    }))
register(PresetDescriptor(
    "taft_finite", "FINITE", taft_finite, ("n", "m", "t"),
    "Taft algebra modulo x^n over Q(zeta_n); needs xi^(m t) of order n", _golden_taft))
register(PresetDescriptor(
    "circle_hopf", "FINITE", circle_hopf, ("xi",),
    "circle Hopf algebra k[x,y]/(x^2 + xi y^2 - 1, xy)", _golden_circle))
register(PresetDescriptor(
    "taft_family", "FAMILY", taft_family, ("n", "m", "t"),
    "Taft algebra k<g,x>/(g^n - 1, xg - xi^m gx), GK dimension 1", _golden_taft_family))
register(PresetDescriptor(
    "solvable_enveloping", "FAMILY", solvable_enveloping, (),
    "enveloping algebra of the Lie algebra [x, y] = x", _golden_enveloping))
register(PresetDescriptor(
    "infinite_dihedral", "FAMILY", infinite_dihedral, (),
    "group algebra of the infinite dihedral group", _golden_dihedral))
register(PresetDescriptor(
    "example85", "FAMILY", example85, (),
    "group algebra of <g,x,y | g^2, gxg = x^-1, gyg = y^-1, xy = yx>", _golden_trivial_family))
register(PresetDescriptor(
    "laurent", "FAMILY", laurent, (),
    "Laurent polynomials kZ", _golden_trivial_family))

ALIASES = {"enveloping": "solvable_enveloping", "dihedral_rank2": "example85",
           "dihedral": "infinite_dihedral", "klein": "klein_four", "k": "trivial"}


def parse_preset(text):
    """``preset:NAME(args)`` -> (name, args list, kwargs dict)."""
    s = "".join(str(text).split())
    if s.startswith("preset:"):
        s = s[len("preset:"):]
    m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)(?:\((.*)\))?", s)
    if not m:
        raise InputError(f"malformed preset string {text!r}")
    name, body = m.group(1), m.group(2)
    args, kwargs = [], {}
    if body:
        for part in body.split(","):
            if not part:
                raise InputError(f"empty parameter in {text!r}")
            if "=" in part:
                k, _, v = part.partition("=")
                kwargs[k] = v
            else:
                if kwargs:
                    raise InputError(f"positional parameter after keyword in {text!r}")
                args.append(part)
    return name, args, kwargs


def _convert(value):
    if re.fullmatch(r"[+-]?\d+", value):
        return int(value)
    return value


def build_preset(name, params=None, field=None):
    """Build a registered preset; ``name`` may be a full preset string.

    The returned object carries ``golden`` (``{key: (value, provenance)}``)
    and ``preset`` (the canonical preset string).
    """
    args = []
    kwargs = dict(params or {})
    if "(" in name or name.startswith("preset:"):
        name, args, extra = parse_preset(name)
        kwargs.update(extra)
    name = ALIASES.get(name, name)
    desc = REGISTRY.get(name)
    if desc is None:
        raise InputError(f"unknown preset {name!r}; known: {', '.join(sorted(REGISTRY))}")
    if len(args) > len(desc.params):
        raise InvalidParams(f"{name} takes at most {len(desc.params)} positional parameters")
    for p, v in zip(desc.params, args):
        kwargs[p] = v
    kwargs = {k: _convert(v) if isinstance(v, str) else v for k, v in kwargs.items()}
    if field is not None:
        kwargs["field"] = field
    if "field" in kwargs and kwargs["field"] is not None:
        kwargs["field"] = parse_field(kwargs["field"])
    try:
        obj = desc.builder(**kwargs)
    except TypeError as exc:
        raise InvalidParams(f"bad parameters for {name}: {exc}") from exc
    obj.golden = desc.golden(obj, kwargs) if desc.golden else {}
    shown = ",".join(f"{k}={v.spec() if k == 'field' else v}" for k, v in sorted(kwargs.items()))
    obj.preset = f"preset:{name}({shown})" if shown else f"preset:{name}"
    obj.kind = desc.kind
    return obj


def finite_presets():
    """Default instances of the finite presets used by property suites."""
    k4 = cyclotomic_field(4)
    return [
        trivial_hopf(),
        group_algebra("z2"),
        group_algebra("z3"),
        group_algebra("z4"),
        group_algebra("klein"),
        group_algebra("s3"),
        sweedler(),
        taft_finite(3),
        taft_finite(4),
        taft_finite(3, m=2, t=1),
        taft_finite(4, m=1, t=3, field=k4),
        circle_hopf(),
        circle_hopf(xi=2),
    ]
