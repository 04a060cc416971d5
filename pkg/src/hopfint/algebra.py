"""Finite-dimensional associative algebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimMismatch,
    ImproperIdeal,
    NotAutomorphism,
    UnsupportedCharacteristic,
)
from .linalg import (
    EchelonBuilder,
    Matrix,
    Subspace,
    unit_vector,
    zero_vector,
)


class FiniteAlgebra:
    """Algebra with basis e_0..e_{n-1} and e_i e_j = sum_k table[i][j][k] e_k.

    ``table[i][j]`` is a sparse dict ``{k: scalar}`` with zero entries dropped.
    """

    def __init__(self, field, table, unit, labels=None):
        self.field = field
        self.dim = len(table)
        self.table = [[{k: c for k, c in cell.items() if c} for cell in row] for row in table]
        self.unit = list(unit)
        self.labels = list(labels) if labels is not None else [f"e{i}" for i in range(self.dim)]
        if len(self.unit) != self.dim or len(self.labels) != self.dim:
            raise DimMismatch("unit/labels length differs from the table size")

    @classmethod
    def from_triples(cls, field, dim, triples, unit, labels=None):
        """Build from ``(i, j, k, coeff)`` entries; unlisted constants are zero."""
        table = [[{} for _ in range(dim)] for _ in range(dim)]
        for i, j, k, c in triples:
            c = field(c)
            cell = table[i][j]
            cell[k] = cell.get(k, field.zero) + c
        return cls(field, table, unit, labels)

    def triples(self):
        for i, row in enumerate(self.table):
            for j, cell in enumerate(row):
                for k in sorted(cell):
                    yield i, j, k, cell[k]

    def basis_vector(self, i):
        return unit_vector(self.field, self.dim, i)

    def element(self, coeffs):
        """Vector from a ``{label: coeff}`` mapping."""
        v = zero_vector(self.field, self.dim)
        for label, c in coeffs.items():
            v[self.labels.index(label)] = self.field(c)
        return v

    def mul(self, u, v):
        if len(u) != self.dim or len(v) != self.dim:
            raise DimMismatch(f"vectors must have length {self.dim}")
        out = zero_vector(self.field, self.dim)
        nv = [(j, b) for j, b in enumerate(v) if b]
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.table[i]
            for j, b in nv:
                ab = a * b
                for k, c in row[j].items():
                    out[k] = out[k] + ab * c
        return out

    def power(self, u, e):
        acc = list(self.unit)
        for _ in range(e):
            acc = self.mul(acc, u)
        return acc

    def left_mult_matrix(self, a):
        if len(a) != self.dim:
            raise DimMismatch(f"vector of length {len(a)} in algebra of dim {self.dim}")
        return Matrix.from_columns(self.field, [self.mul(a, self.basis_vector(j)) for j in range(self.dim)], self.dim)

    def right_mult_matrix(self, a):
        if len(a) != self.dim:
            raise DimMismatch(f"vector of length {len(a)} in algebra of dim {self.dim}")
        return Matrix.from_columns(self.field, [self.mul(self.basis_vector(j), a) for j in range(self.dim)], self.dim)

    def associativity_failures(self, limit=None):
        """Basis triples (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k)."""
        bad = []
        basis = [self.basis_vector(i) for i in range(self.dim)]
        prods = [[self._cell_vector(i, j) for j in range(self.dim)] for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    if self.mul(prods[i][j], basis[k]) != self.mul(basis[i], prods[j][k]):
                        bad.append((i, j, k))
                        if limit and len(bad) >= limit:
                            return bad
        return bad

    def unit_failures(self):
        bad = []
        for i in range(self.dim):
            e = self.basis_vector(i)
            if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                bad.append(i)
        return bad

    def _cell_vector(self, i, j):
        v = zero_vector(self.field, self.dim)
        for k, c in self.table[i][j].items():
            v[k] = c
        return v

    def is_commutative(self):
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(self.dim) for j in range(i + 1, self.dim))

    def trace_vector(self):
        """trace(L_{e_k}) for each k."""
        z = self.field.zero
        out = []
        for k in range(self.dim):
            acc = z
            for j in range(self.dim):
                c = self.table[k][j].get(j)
                if c:
                    acc = acc + c
            out.append(acc)
        return out

    def format_vector(self, v):
        return format_vector(v, self.labels)

    def __repr__(self):
        return f"FiniteAlgebra(dim={self.dim}, field={self.field.spec()})"


def format_vector(v, labels):
    parts = []
    for c, label in zip(v, labels):
        if not c:
            continue
        cs = str(c)
        if label == "1":
            body = cs
        elif cs == "1":
            body = label
        elif cs == "-1":
            body = "-" + label
        elif any(ch in cs[1:] for ch in "+-"):
            body = f"({cs})*{label}"
        else:
            body = f"{cs}*{label}"
        if parts and not body.startswith("-"):
            parts.append("+" + body)
        else:
            parts.append(body)
    return "".join(parts) or "0"


@dataclass
class Ideal:
    parent: FiniteAlgebra
    space: Subspace

    @property
    def dim(self):
        return self.space.dim

    def is_two_sided(self):
        a = self.parent
        for v in self.space:
            nz = [(j, c) for j, c in enumerate(v) if c]
            for i in range(a.dim):
                for side in ("left", "right"):
                    if not self.space.contains(_basis_product(a, i, nz, side)):
                        return False
        return True


def _basis_product(a: FiniteAlgebra, i, nz, side):
    """e_i v (side='left') or v e_i, for v given by its nonzero entries."""
    out = [a.field.zero] * a.dim
    for j, c in nz:
        cell = a.table[i][j] if side == "left" else a.table[j][i]
        for k, x in cell.items():
            out[k] = out[k] + c * x
    return out


def left_mult_matrix(a: FiniteAlgebra, x):
    return a.left_mult_matrix(x)


def right_mult_matrix(a: FiniteAlgebra, x):
    return a.right_mult_matrix(x)


def ideal_generated(a: FiniteAlgebra, gens) -> Ideal:
    """Two-sided ideal generated by ``gens``, by saturation under basis products.

    New vectors are multiplied by e_0..e_{n-1} on the left, then on the right,
    in discovery order; the worklist empties once nothing new appears.
    """
    span = EchelonBuilder(a.field, a.dim)
    queue = []
    for g in gens:
        if len(g) != a.dim:
            raise DimMismatch(f"generator of length {len(g)} in algebra of dim {a.dim}")
        if span.add(g):
            queue.append(list(g))
    while queue and span.dim < a.dim:
        v = queue.pop(0)
        nz = [(j, c) for j, c in enumerate(v) if c]
        for side in ("left", "right"):
            for i in range(a.dim):
                w = _basis_product(a, i, nz, side)
                if span.add(w):
                    queue.append(w)
    ideal = Ideal(a, span.subspace())
    assert ideal.is_two_sided()
    return ideal


def zero_ideal(a: FiniteAlgebra) -> Ideal:
    return Ideal(a, Subspace(a.field, a.dim))


def quotient_algebra(a: FiniteAlgebra, ideal: Ideal):
    """``(A/I, projection)`` in the basis of non-pivot coordinates of I."""
    if ideal.dim >= a.dim:
        raise ImproperIdeal("quotient by the whole algebra")
    proj = projection_matrix(ideal.space)
    comp = ideal.space.complement_indices()
    table = []
    for i in comp:
        row = []
        for j in comp:
            img = proj.apply(a._cell_vector(i, j))
            row.append({k: c for k, c in enumerate(img) if c})
        table.append(row)
    labels = [a.labels[i] for i in comp]
    q = FiniteAlgebra(a.field, table, proj.apply(a.unit), labels)
    return q, proj


def projection_matrix(space: Subspace) -> Matrix:
    """Matrix of V -> V/space in the non-pivot coordinate basis."""
    comp = space.complement_indices()
    cols = []
    for j in range(space.ambient_dim):
        r = space.reduce(unit_vector(space.field, space.ambient_dim, j))
        cols.append([r[c] for c in comp])
    return Matrix.from_columns(space.field, cols, len(comp))


def commutator_ideal(a: FiniteAlgebra) -> Ideal:
    gens = []
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            ij, ji = a.table[i][j], a.table[j][i]
            if ij != ji:
                d = a._cell_vector(i, j)
                for k, c in ji.items():
                    d[k] = d[k] - c
                gens.append(d)
    return ideal_generated(a, gens)


def largest_ideal_in(a: FiniteAlgebra, space: Subspace) -> Subspace:
    """Largest two-sided ideal contained in ``space``."""
    n = a.dim
    z = a.field.zero
    current = space
    while True:
        ann = [[(k, x) for k, x in enumerate(c) if x] for c in current.annihilator()]
        conds = EchelonBuilder(a.field, n)
        for c in ann:
            conds.add(_densify(c, n, z))
        for i in range(n):
            for c in ann:
                cv = dict(c)
                # c . L_{e_i} and c . R_{e_i}
                left = [z] * n
                right = [z] * n
                for j in range(n):
                    for k, y in a.table[i][j].items():
                        if k in cv:
                            left[j] = left[j] + cv[k] * y
                    for k, y in a.table[j][i].items():
                        if k in cv:
                            right[j] = right[j] + cv[k] * y
                conds.add(left)
                conds.add(right)
            if conds.dim == n:
                break
        nxt = conds.subspace().annihilator() if conds.dim else current
        if nxt.dim == current.dim:
            return nxt
        current = nxt


def _densify(sparse, n, z):
    v = [z] * n
    for k, x in sparse:
        v[k] = x
    return v


def jacobson_radical(a: FiniteAlgebra) -> Subspace:
    """Radical as the null space of the trace form trace(L_x L_y).

    Valid in characteristic 0 and in characteristic p > dim A.
    """
    p = a.field.characteristic
    if p and p <= a.dim:
        raise UnsupportedCharacteristic(
            f"trace-form radical needs characteristic 0 or > {a.dim}, got {p}")
    tr = a.trace_vector()
    z = a.field.zero
    gram = []
    for i in range(a.dim):
        row = []
        for j in range(a.dim):
            acc = z
            for k, c in a.table[i][j].items():
                if tr[k]:
                    acc = acc + c * tr[k]
            row.append(acc)
        gram.append(row)
    kernel = Matrix(a.field, gram, a.dim).nullspace()
    rad = largest_ideal_in(a, kernel)
    assert rad.dim == kernel.dim
    assert _is_nilpotent(a, rad)
    return rad


def ideal_product(a: FiniteAlgebra, i: Subspace, j: Subspace) -> Subspace:
    """Span of the products of two two-sided ideals."""
    z = a.field.zero
    span = EchelonBuilder(a.field, a.dim)
    left = [dict(b) for b in i._sparse]
    right = [dict(b) for b in j._sparse]
    for u in left:
        for v in right:
            span.add(_densify(_sparse_mul(a, u, v).items(), a.dim, z))
            if span.dim == min(i.dim, j.dim):
                # IJ lies in both factors
                return span.subspace()
    return span.subspace()


def _is_nilpotent(a, space):
    power = space
    for _ in range(a.dim + 1):
        if power.dim == 0:
            return True
        power = ideal_product(a, power, space)
    return power.dim == 0


def radical_layers(a: FiniteAlgebra):
    """dim J^t / J^{t+1} for t = 0, 1, ... until J^t = 0 (J^0 = A)."""
    rad = jacobson_radical(a)
    dims = [a.dim]
    power = rad
    while power.dim:
        dims.append(power.dim)
        power = ideal_product(a, power, rad)
    dims.append(0)
    return [dims[t] - dims[t + 1] for t in range(len(dims) - 1)]


def _sparse_mul(a: FiniteAlgebra, u: dict, v: dict) -> dict:
    out = {}
    for i, x in u.items():
        row = a.table[i]
        for j, y in v.items():
            xy = x * y
            for k, c in row[j].items():
                out[k] = out[k] + xy * c if k in out else xy * c
    return {k: c for k, c in out.items() if c}


def is_algebra_automorphism(a: FiniteAlgebra, m: Matrix) -> bool:
    if m.shape != (a.dim, a.dim):
        return False
    if m.apply(a.unit) != a.unit:
        return False
    images = [{r: x for r, x in enumerate(m.column(i)) if x} for i in range(a.dim)]
    for i, row in enumerate(a.table):
        for j, cell in enumerate(row):
            lhs = {}
            for k, c in cell.items():
                for r, x in images[k].items():
                    lhs[r] = lhs[r] + c * x if r in lhs else c * x
            lhs = {r: x for r, x in lhs.items() if x}
            if lhs != _sparse_mul(a, images[i], images[j]):
                return False
    return m.is_invertible()


def fixed_subalgebra(a: FiniteAlgebra, autos) -> Subspace:
    """Joint fixed space of the given automorphisms."""
    conds = []
    for m in autos:
        if not is_algebra_automorphism(a, m):
            raise NotAutomorphism("fixed_subalgebra needs algebra automorphisms")
        conds.extend((m - Matrix.identity(a.field, a.dim)).rows)
    fixed = Matrix(a.field, conds, a.dim).nullspace() if conds else Subspace.whole(a.field, a.dim)
    assert fixed.contains(a.unit)
    assert is_subalgebra(a, fixed)
    return fixed


def is_subalgebra(a: FiniteAlgebra, space: Subspace) -> bool:
    vecs = list(space)
    return all(space.contains(a.mul(u, v)) for u in vecs for v in vecs)


def is_commutative(a: FiniteAlgebra) -> bool:
    return a.is_commutative()


def is_commutative_subspace(a: FiniteAlgebra, space: Subspace) -> bool:
    vecs = list(space)
    return all(a.mul(u, v) == a.mul(v, u) for i, u in enumerate(vecs) for v in vecs[i + 1:])


def center(a: FiniteAlgebra) -> Subspace:
    rows = []
    for i in range(a.dim):
        e = a.basis_vector(i)
        rows.extend((a.right_mult_matrix(e) - a.left_mult_matrix(e)).rows)
    return Matrix(a.field, rows, a.dim).nullspace()


def subalgebra(a: FiniteAlgebra, space: Subspace) -> FiniteAlgebra:
    """Structure constants of a subalgebra in its echelon basis."""
    basis = list(space)
    table = []
    for u in basis:
        row = []
        for v in basis:
            coords = space.coordinates(a.mul(u, v))
            row.append({k: c for k, c in enumerate(coords) if c})
        table.append(row)
    unit = space.coordinates(a.unit)
    labels = [format_vector(b, a.labels) for b in basis]
    return FiniteAlgebra(a.field, table, unit, labels)
