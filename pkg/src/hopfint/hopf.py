"""Finite-dimensional Hopf algebras: structure data, axiom checks, characters,
tensor products, duals and base change.

Tensors in H (x) H are sparse dicts ``{(j, k): coeff}`` meaning
sum coeff * e_j (x) e_k.  Flattened, (j, k) sits at index j*dim + k, the same
convention as :func:`hopfint.linalg.kronecker`.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import FiniteAlgebra, format_vector
from .errors import DimMismatch, FieldMismatch, IncompatibleExtension, NotACharacter
from .linalg import Matrix, kronecker, unit_vector, zero_vector
from .scalars import DEFAULT_ORDER_CAP


class FiniteHopfAlgebra:
    def __init__(self, algebra: FiniteAlgebra, comul, counit, antipode: Matrix, name=None):
        self.algebra = algebra
        self.field = algebra.field
        self.dim = algebra.dim
        self.comul = [{jk: c for jk, c in d.items() if c} for d in comul]
        self.counit = list(counit)
        self.antipode = antipode
        self.name = name
        if len(self.comul) != self.dim or len(self.counit) != self.dim:
            raise DimMismatch("comultiplication/counit size differs from the algebra dimension")
        if antipode.shape != (self.dim, self.dim):
            raise DimMismatch(f"antipode of shape {antipode.shape} for dim {self.dim}")

    @property
    def labels(self):
        return self.algebra.labels

    @property
    def unit(self):
        return self.algebra.unit

    def mul(self, u, v):
        return self.algebra.mul(u, v)

    def basis_vector(self, i):
        return self.algebra.basis_vector(i)

    def comul_vector(self, v):
        out = {}
        for i, a in enumerate(v):
            if a:
                for jk, c in self.comul[i].items():
                    out[jk] = out.get(jk, self.field.zero) + a * c
        return {jk: c for jk, c in out.items() if c}

    def counit_of(self, v):
        acc = self.field.zero
        for a, e in zip(v, self.counit):
            if a and e:
                acc = acc + a * e
        return acc

    def apply_antipode(self, v):
        return self.antipode.apply(v)

    def epsilon_character(self):
        return list(self.counit)

    def format_vector(self, v):
        return format_vector(v, self.labels)

    def __repr__(self):
        name = f"{self.name}, " if self.name else ""
        return f"FiniteHopfAlgebra({name}dim={self.dim}, field={self.field.spec()})"


# --- tensor helpers ---------------------------------------------------------


def outer(u, v):
    out = {}
    nv = [(k, b) for k, b in enumerate(v) if b]
    for j, a in enumerate(u):
        if a:
            for k, b in nv:
                out[(j, k)] = a * b
    return out


def tensor_add(s, t, field):
    out = dict(s)
    for key, c in t.items():
        out[key] = out.get(key, field.zero) + c
    return {k: c for k, c in out.items() if c}


def tensor_mul(alg_left: FiniteAlgebra, alg_right: FiniteAlgebra, s, t):
    """Product in A (x) B of two sparse 2-tensors."""
    field = alg_left.field
    out = {}
    for (a, b), c1 in s.items():
        row_a = alg_left.table[a]
        row_b = alg_right.table[b]
        for (c, d), c2 in t.items():
            ac = row_a[c]
            bd = row_b[d]
            if not ac or not bd:
                continue
            cc = c1 * c2
            for k1, x in ac.items():
                for k2, y in bd.items():
                    key = (k1, k2)
                    out[key] = out.get(key, field.zero) + cc * x * y
    return {k: c for k, c in out.items() if c}


def tensor_to_flat(t, dim_right, size, field):
    v = zero_vector(field, size)
    for (j, k), c in t.items():
        v[j * dim_right + k] = c
    return v


# --- axioms -----------------------------------------------------------------


@dataclass
class AxiomReport:
    results: dict = dc_field(default_factory=dict)

    def record(self, name, witnesses):
        self.results[name] = list(witnesses)

    @property
    def passed(self):
        return all(not w for w in self.results.values())

    @property
    def failures(self):
        return {name: w for name, w in self.results.items() if w}

    def __bool__(self):
        return self.passed

    def lines(self):
        out = []
        for name, w in self.results.items():
            if w:
                out.append(f"FAIL {name}: witnesses {w[:5]}")
            else:
                out.append(f"pass {name}")
        return out


AXIOMS = (
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "comultiplication is multiplicative",
    "comultiplication is unital",
    "counit is multiplicative",
    "counit is unital",
    "antipode axiom",
    "antipode is an anti-homomorphism",
)


def verify_axioms(h: FiniteHopfAlgebra, limit=5) -> AxiomReport:
    """Check every Hopf algebra axiom exactly; failures carry basis-index witnesses."""
    a = h.algebra
    f = h.field
    n = h.dim
    rep = AxiomReport()
    rep.record("associativity", a.associativity_failures(limit))
    rep.record("unit", a.unit_failures()[:limit])

    bad = []
    for i in range(n):
        left, right = {}, {}
        for (j, k), c in h.comul[i].items():
            for (p, q), d in h.comul[j].items():
                key = (p, q, k)
                left[key] = left.get(key, f.zero) + c * d
            for (p, q), d in h.comul[k].items():
                key = (j, p, q)
                right[key] = right.get(key, f.zero) + c * d
        if {k: v for k, v in left.items() if v} != {k: v for k, v in right.items() if v}:
            bad.append(i)
    rep.record("coassociativity", bad[:limit])

    bad = []
    for i in range(n):
        l_side = zero_vector(f, n)
        r_side = zero_vector(f, n)
        for (j, k), c in h.comul[i].items():
            if h.counit[j]:
                l_side[k] = l_side[k] + h.counit[j] * c
            if h.counit[k]:
                r_side[j] = r_side[j] + h.counit[k] * c
        e = h.basis_vector(i)
        if l_side != e or r_side != e:
            bad.append(i)
    rep.record("counit", bad[:limit])

    bad_delta, bad_eps, bad_anti = [], [], []
    for i in range(n):
        for j in range(n):
            prod = a._cell_vector(i, j)
            if h.comul_vector(prod) != tensor_mul(a, a, h.comul[i], h.comul[j]):
                bad_delta.append((i, j))
            if h.counit_of(prod) != h.counit[i] * h.counit[j]:
                bad_eps.append((i, j))
            s_prod = h.apply_antipode(prod)
            s_rev = a.mul(h.antipode.column(j), h.antipode.column(i))
            if s_prod != s_rev:
                bad_anti.append((i, j))
    rep.record("comultiplication is multiplicative", bad_delta[:limit])
    rep.record("comultiplication is unital", [] if h.comul_vector(h.unit) == outer(h.unit, h.unit) else ["unit"])
    rep.record("counit is multiplicative", bad_eps[:limit])
    rep.record("counit is unital", [] if h.counit_of(h.unit) == 1 else ["unit"])

    bad = []
    s_cols = [h.antipode.column(i) for i in range(n)]
    for i in range(n):
        lhs = zero_vector(f, n)
        rhs = zero_vector(f, n)
        for (j, k), c in h.comul[i].items():
            lhs = _axpy(lhs, c, a.mul(s_cols[j], h.basis_vector(k)))
            rhs = _axpy(rhs, c, a.mul(h.basis_vector(j), s_cols[k]))
        target = [h.counit[i] * u for u in h.unit]
        if lhs != target or rhs != target:
            bad.append(i)
    rep.record("antipode axiom", bad[:limit])
    rep.record("antipode is an anti-homomorphism", bad_anti[:limit])
    return rep


def _axpy(acc, c, v):
    return [x + c * y if y else x for x, y in zip(acc, v)]


# --- characters -------------------------------------------------------------


def is_character(h: FiniteHopfAlgebra, phi) -> bool:
    """phi(1) = 1 and phi(e_i e_j) = phi(e_i) phi(e_j) for all basis pairs."""
    if len(phi) != h.dim:
        return False
    a = h.algebra
    if _apply_covector(phi, a.unit) != 1:
        return False
    zero = h.field.zero
    for i, row in enumerate(a.table):
        for j, cell in enumerate(row):
            acc = zero
            for k, c in cell.items():
                if phi[k]:
                    acc = acc + c * phi[k]
            if acc != phi[i] * phi[j]:
                return False
    return True


def _apply_covector(phi, v):
    acc = phi[0] - phi[0]
    for a, b in zip(phi, v):
        if a and b:
            acc = acc + a * b
    return acc


def apply_character(phi, v):
    return _apply_covector(phi, v)


def convolution(h: FiniteHopfAlgebra, phi, psi, check=True):
    """(phi * psi)(e_i) = sum d_i^{jk} phi(e_j) psi(e_k)."""
    f = h.field
    out = []
    for i in range(h.dim):
        acc = f.zero
        for (j, k), c in h.comul[i].items():
            if phi[j] and psi[k]:
                acc = acc + c * phi[j] * psi[k]
        out.append(acc)
    if check and not is_character(h, out):
        raise NotACharacter("convolution of characters is not a character")
    return out


def convolution_power(h, phi, n):
    acc = h.epsilon_character()
    for _ in range(n):
        acc = convolution(h, acc, phi, check=False)
    return acc


def convolution_order(h: FiniteHopfAlgebra, phi, cap=DEFAULT_ORDER_CAP):
    """Smallest n <= cap with phi^{*n} = epsilon, else None."""
    if not is_character(h, phi):
        raise NotACharacter("convolution order of a non-character")
    eps = h.epsilon_character()
    acc = list(phi)
    for n in range(1, cap + 1):
        if acc == eps:
            return n
        acc = convolution(h, acc, phi, check=False)
    return None


def compose_antipode(h: FiniteHopfAlgebra, phi):
    """The covector phi o S."""
    return [_apply_covector(phi, h.antipode.column(i)) for i in range(h.dim)]


# --- constructions ----------------------------------------------------------


def tensor_hopf(h: FiniteHopfAlgebra, k: FiniteHopfAlgebra, name=None) -> FiniteHopfAlgebra:
    """H (x) K with basis e_i (x) f_a at index i*dim(K) + a."""
    if h.field is not k.field:
        raise FieldMismatch(f"{h.field.spec()} vs {k.field.spec()}")
    m = k.dim
    ah, ak = h.algebra, k.algebra
    table = []
    for i in range(h.dim):
        for a in range(m):
            row = []
            for j in range(h.dim):
                for b in range(m):
                    cell = {}
                    for p, x in ah.table[i][j].items():
                        for q, y in ak.table[a][b].items():
                            cell[p * m + q] = x * y
                    row.append(cell)
            table.append(row)
    unit = [x * y for x in h.unit for y in k.unit]
    labels = [f"{lh}⊗{lk}" for lh in h.labels for lk in k.labels]
    alg = FiniteAlgebra(h.field, table, unit, labels)
    comul = []
    for i in range(h.dim):
        for a in range(m):
            d = {}
            for (j, jj), x in h.comul[i].items():
                for (b, bb), y in k.comul[a].items():
                    d[(j * m + b, jj * m + bb)] = x * y
            comul.append(d)
    counit = [x * y for x in h.counit for y in k.counit]
    anti = kronecker(h.antipode, k.antipode)
    default = f"({h.name or 'H'})⊗({k.name or 'K'})"
    return FiniteHopfAlgebra(alg, comul, counit, anti, name=name or default)


def dual_hopf(h: FiniteHopfAlgebra, name=None) -> FiniteHopfAlgebra:
    """H* in the dual basis: product transposes the coproduct and vice versa."""
    n = h.dim
    table = [[{} for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for (j, k), c in h.comul[i].items():
            table[j][k][i] = c
    comul = [{} for _ in range(n)]
    for i, j, k, c in h.algebra.triples():
        comul[k][(i, j)] = c
    labels = [f"{lab}*" for lab in h.labels]
    alg = FiniteAlgebra(h.field, table, list(h.counit), labels)
    return FiniteHopfAlgebra(alg, comul, list(h.unit), h.antipode.transpose(),
                             name=name or f"({h.name or 'H'})*")


def base_change(h: FiniteHopfAlgebra, target) -> FiniteHopfAlgebra:
    """Same structure constants read in an extension field."""
    if not target.contains(h.field):
        raise IncompatibleExtension(f"{h.field.spec()} does not embed in {target.spec()}")
    emb = target.embed
    a = h.algebra
    table = [[{k: emb(c) for k, c in cell.items()} for cell in row] for row in a.table]
    alg = FiniteAlgebra(target, table, [emb(c) for c in a.unit], a.labels)
    comul = [{jk: emb(c) for jk, c in d.items()} for d in h.comul]
    anti = Matrix(target, [[emb(c) for c in r] for r in h.antipode.rows], h.dim)
    return FiniteHopfAlgebra(alg, comul, [emb(c) for c in h.counit], anti, name=h.name)


def verify_hopf_morphism(f: Matrix, h: FiniteHopfAlgebra, k: FiniteHopfAlgebra) -> bool:
    return not hopf_morphism_failures(f, h, k)


def hopf_morphism_failures(f: Matrix, h: FiniteHopfAlgebra, k: FiniteHopfAlgebra):
    """Names of the morphism conditions that ``f`` (dim K x dim H) violates."""
    if f.shape != (k.dim, h.dim):
        return ["shape"]
    bad = []
    if f.apply(h.unit) != k.unit:
        bad.append("unital")
    images = [f.column(i) for i in range(h.dim)]
    for i in range(h.dim):
        for j in range(h.dim):
            if f.apply(h.algebra._cell_vector(i, j)) != k.mul(images[i], images[j]):
                bad.append("multiplicative")
                break
        else:
            continue
        break
    for i in range(h.dim):
        pushed = {}
        for (j, jj), c in h.comul[i].items():
            pushed = tensor_add(pushed, {key: c * v for key, v in outer(images[j], images[jj]).items()}, k.field)
        if pushed != k.comul_vector(images[i]):
            bad.append("comultiplicative")
            break
    if any(k.counit_of(images[i]) != h.counit[i] for i in range(h.dim)):
        bad.append("counital")
    if f @ h.antipode != k.antipode @ f:
        bad.append("antipode")
    return bad


def verify_hopf_isomorphism(f: Matrix, h: FiniteHopfAlgebra, k: FiniteHopfAlgebra) -> bool:
    return verify_hopf_morphism(f, h, k) and f.is_invertible()


# --- generator-based builder ------------------------------------------------


def hopf_from_generators(algebra: FiniteAlgebra, words, generators, name=None) -> FiniteHopfAlgebra:
    """Extend Hopf data given on algebra generators to the whole basis.

    ``words[b]`` is the generator word (list of names) whose product is basis
    element b.  ``generators[name]`` is a dict with keys ``vector``, ``delta``
    (list of ``(coeff, left_vector, right_vector)``), ``counit`` and
    ``antipode`` (a vector).
    """
    f = algebra.field
    n = algebra.dim
    gvec = {g: list(d["vector"]) for g, d in generators.items()}
    gdelta = {}
    for g, d in generators.items():
        t = {}
        for c, u, v in d["delta"]:
            t = tensor_add(t, {key: f(c) * x for key, x in outer(u, v).items()}, f)
        gdelta[g] = t
    comul, counit, s_cols = [], [], []
    for b, word in enumerate(words):
        vec = list(algebra.unit)
        delta = outer(algebra.unit, algebra.unit)
        eps = f.one
        anti = list(algebra.unit)
        for g in word:
            vec = algebra.mul(vec, gvec[g])
            delta = tensor_mul(algebra, algebra, delta, gdelta[g])
            eps = eps * f(generators[g]["counit"])
            anti = algebra.mul(list(generators[g]["antipode"]), anti)
        if vec != unit_vector(f, n, b):
            raise DimMismatch(f"word {word} does not multiply to basis element {algebra.labels[b]}")
        comul.append(delta)
        counit.append(eps)
        s_cols.append(anti)
    return FiniteHopfAlgebra(algebra, comul, counit, Matrix.from_columns(f, s_cols, n), name=name)
