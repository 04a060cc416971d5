"""Dense exact linear algebra over any :mod:`hopfint.scalars` field.

Vectors are plain lists of scalars.  Matrices act on column vectors, so the
j-th column of the matrix of a linear map is the image of the j-th basis
vector.  Row reduction pivots on the leftmost nonzero column and the topmost
row holding a nonzero entry there.
"""

from __future__ import annotations

from .errors import AmbientMismatch, DimMismatch, FieldMismatch, NotInvertible
from .scalars import DEFAULT_ORDER_CAP


def zero_vector(field, n):
    z = field.zero
    return [z] * n


def unit_vector(field, n, i):
    v = zero_vector(field, n)
    v[i] = field.one
    return v


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, v):
    return [c * a for a in v]


def dot(u, v):
    acc = u[0] - u[0]
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


def is_zero_vector(v):
    return not any(v)


class Matrix:
    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows, ncols=None):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = ncols if ncols is not None else (len(self.rows[0]) if self.rows else 0)
        for r in self.rows:
            if len(r) != self.ncols:
                raise DimMismatch("ragged matrix rows")

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n):
        return cls(field, [unit_vector(field, n, i) for i in range(n)], n)

    @classmethod
    def from_columns(cls, field, columns, nrows=None):
        columns = [list(c) for c in columns]
        nrows = nrows if nrows is not None else (len(columns[0]) if columns else 0)
        rows = [[c[i] for c in columns] for i in range(nrows)]
        return cls(field, rows, len(columns))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return [r[j] for r in self.rows]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return Matrix(self.field, [self.column(j) for j in range(self.ncols)], self.nrows)

    T = property(transpose)

    def _check(self, other):
        if other.field is not self.field:
            raise FieldMismatch(f"{self.field.spec()} vs {other.field.spec()}")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    __hash__ = None

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimMismatch(f"{self.shape} + {other.shape}")
        return Matrix(self.field, [vec_add(a, b) for a, b in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimMismatch(f"{self.shape} - {other.shape}")
        return Matrix(self.field, [vec_sub(a, b) for a, b in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self):
        return Matrix(self.field, [[-a for a in r] for r in self.rows], self.ncols)

    def scale(self, c):
        return Matrix(self.field, [vec_scale(c, r) for r in self.rows], self.ncols)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._check(other)
            if self.ncols != other.nrows:
                raise DimMismatch(f"{self.shape} @ {other.shape}")
            z = self.field.zero
            out = []
            brows = other.rows
            for row in self.rows:
                acc = [z] * other.ncols
                for k, a in enumerate(row):
                    if a:
                        for j, b in enumerate(brows[k]):
                            if b:
                                acc[j] = acc[j] + a * b
                out.append(acc)
            return Matrix(self.field, out, other.ncols)
        return self.apply(other)

    def apply(self, v):
        """Matrix times column vector."""
        if len(v) != self.ncols:
            raise DimMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        z = self.field.zero
        nz = [(k, a) for k, a in enumerate(v) if a]
        out = []
        for row in self.rows:
            acc = z
            for k, a in nz:
                b = row[k]
                if b:
                    acc = acc + b * a
            out.append(acc)
        return out

    def is_identity(self):
        if self.nrows != self.ncols:
            return False
        for i, r in enumerate(self.rows):
            for j, a in enumerate(r):
                if (i == j and a != 1) or (i != j and a):
                    return False
        return True

    def is_zero(self):
        return not any(any(r) for r in self.rows)

    def rref(self):
        """Reduced row echelon form and the list of pivot columns."""
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            if r == len(rows):
                break
            piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = rows[r][c].inverse()
            prow = [a * inv if a else a for a in rows[r]]
            rows[r] = prow
            nzcols = [j for j in range(c, self.ncols) if prow[j]]
            for i in range(len(rows)):
                if i != r:
                    f = rows[i][c]
                    if f:
                        row_i = rows[i]
                        for j in nzcols:
                            row_i[j] = row_i[j] - f * prow[j]
            pivots.append(c)
            r += 1
        return Matrix(self.field, rows, self.ncols), pivots

    def rank(self):
        return len(self.rref()[1])

    def nullspace(self):
        """Right null space {v : M v = 0} as a :class:`Subspace`."""
        return rref_and_nullspace(self)[2]

    def inverse(self):
        if self.nrows != self.ncols:
            raise NotInvertible("non-square matrix")
        n = self.nrows
        aug = Matrix(self.field, [r + unit_vector(self.field, n, i) for i, r in enumerate(self.rows)], 2 * n)
        red, pivots = aug.rref()
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise NotInvertible("singular matrix")
        return Matrix(self.field, [r[n:] for r in red.rows], n)

    def is_invertible(self):
        return self.nrows == self.ncols and self.rank() == self.nrows

    def __pow__(self, e):
        if self.nrows != self.ncols:
            raise DimMismatch("power of non-square matrix")
        if e < 0:
            return self.inverse() ** (-e)
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def __repr__(self):
        body = "; ".join(", ".join(str(a) for a in r) for r in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols}]({body})"


def rref_and_nullspace(m: Matrix):
    """Return ``(rref, rank, kernel)`` with ``rank + kernel.dim == m.ncols``."""
    red, pivots = m.rref()
    field = m.field
    free = [j for j in range(m.ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = zero_vector(field, m.ncols)
        v[f] = field.one
        for r, p in enumerate(pivots):
            a = red.rows[r][f]
            if a:
                v[p] = -a
        basis.append(v)
    return red, len(pivots), Subspace(field, m.ncols, basis)


class Subspace:
    """Subspace of field^n held as the rows of a reduced echelon basis."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots", "_sparse")

    def __init__(self, field, ambient_dim, vectors=()):
        self.field = field
        self.ambient_dim = ambient_dim
        vectors = [list(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimMismatch(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        if vectors:
            red, pivots = Matrix(field, vectors, ambient_dim).rref()
            self.basis = [tuple(r) for r in red.rows[: len(pivots)]]
            self.pivots = tuple(pivots)
        else:
            self.basis = []
            self.pivots = ()
        self._sparse = [[(j, y) for j, y in enumerate(b) if y] for b in self.basis]

    @classmethod
    def whole(cls, field, n):
        return cls(field, n, [unit_vector(field, n, i) for i in range(n)])

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return self.dim

    def __iter__(self):
        return (list(b) for b in self.basis)

    def _check(self, other):
        if other.ambient_dim != self.ambient_dim:
            raise AmbientMismatch(f"ambient {self.ambient_dim} vs {other.ambient_dim}")
        if other.field is not self.field:
            raise FieldMismatch(f"{self.field.spec()} vs {other.field.spec()}")

    def reduce(self, v):
        """Remainder of ``v`` after clearing the pivot coordinates."""
        v = list(v)
        for b, p in zip(self._sparse, self.pivots):
            c = v[p]
            if c:
                for j, y in b:
                    v[j] = v[j] - c * y
        return v

    def contains(self, v):
        return not any(self.reduce(v))

    __contains__ = contains

    def coordinates(self, v):
        """Coefficients of ``v`` in the echelon basis (``v`` must lie in the span)."""
        return [v[p] for p in self.pivots]

    def sum(self, other):
        self._check(other)
        return Subspace(self.field, self.ambient_dim, list(self) + list(other))

    __add__ = sum

    def annihilator(self):
        """Covectors vanishing on the subspace, as a subspace of the dual."""
        if not self.basis:
            return Subspace.whole(self.field, self.ambient_dim)
        return Matrix(self.field, list(self), self.ambient_dim).nullspace()

    def intersect(self, other):
        self._check(other)
        conds = list(self.annihilator()) + list(other.annihilator())
        if not conds:
            return Subspace.whole(self.field, self.ambient_dim)
        return Matrix(self.field, conds, self.ambient_dim).nullspace()

    __and__ = intersect

    def is_subspace_of(self, other):
        self._check(other)
        return all(other.contains(b) for b in self.basis)

    __le__ = is_subspace_of

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and self.field is other.field
                and self.basis == other.basis)

    __hash__ = None

    def complement_indices(self):
        """Non-pivot coordinates; their unit vectors span a complement."""
        piv = set(self.pivots)
        return [j for j in range(self.ambient_dim) if j not in piv]

    def matrix(self):
        return Matrix(self.field, list(self), self.ambient_dim)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


class EchelonBuilder:
    """Incrementally grown span; ``add`` reports whether the vector was new.

    Each stored vector is reduced against the earlier ones, so a single
    ordered pass clears every pivot of an incoming vector.
    """

    def __init__(self, field, ambient_dim):
        self.field = field
        self.ambient_dim = ambient_dim
        self.vectors = []
        self.pivots = []
        self._sparse = []

    def reduce(self, v):
        v = list(v)
        for b, p in zip(self._sparse, self.pivots):
            c = v[p]
            if c:
                for j, y in b:
                    v[j] = v[j] - c * y
        return v

    def add(self, v):
        r = self.reduce(v)
        for p, a in enumerate(r):
            if a:
                inv = a.inverse()
                vec = [x * inv for x in r]
                self.vectors.append(vec)
                self.pivots.append(p)
                self._sparse.append([(j, y) for j, y in enumerate(vec) if y])
                return True
        return False

    @property
    def dim(self):
        return len(self.vectors)

    def subspace(self):
        return Subspace(self.field, self.ambient_dim, self.vectors)


def subspace_ops(a: Subspace, b: Subspace, op: str):
    if op == "intersect":
        return a.intersect(b)
    if op == "sum":
        return a.sum(b)
    if op == "contains":
        return b.is_subspace_of(a)
    raise ValueError(f"unknown subspace op {op!r}")


def matrix_order(m: Matrix, cap: int = DEFAULT_ORDER_CAP):
    """Smallest n <= cap with m**n == identity, or None."""
    if not m.is_invertible():
        raise NotInvertible("matrix order of a singular matrix")
    acc = m
    for n in range(1, cap + 1):
        if acc.is_identity():
            return n
        acc = acc @ m
    return None


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; row/column index (i, j) of the factors maps to i*dim(b) + j."""
    if a.field is not b.field:
        raise FieldMismatch(f"{a.field.spec()} vs {b.field.spec()}")
    z = a.field.zero
    rows = []
    for ra in a.rows:
        for rb in b.rows:
            row = []
            for x in ra:
                if x:
                    row.extend(x * y if y else z for y in rb)
                else:
                    row.extend([z] * b.ncols)
            rows.append(row)
    return Matrix(a.field, rows, a.ncols * b.ncols)
