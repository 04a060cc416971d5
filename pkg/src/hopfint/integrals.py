"""Integrals of finite-dimensional Hopf algebras and the invariants built on them.

A left integral t_l satisfies h t_l = eps(h) t_l; a right integral t_r
satisfies t_r h = eps(h) t_r.  The right action on the left integral and the
left action on the right integral are characters, ``alpha_left`` and
``sigma_r``.  The integral order is the convolution order of ``sigma_r``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import is_algebra_automorphism, jacobson_radical
from .errors import (
    ConsistencyFailure,
    IntegralDimNotOne,
    NotACharacter,
    NotInvertible,
    UnsupportedCharacteristic,
)
from .hopf import (
    FiniteHopfAlgebra,
    compose_antipode,
    convolution,
    convolution_order,
    convolution_power,
    is_character,
)
from .linalg import EchelonBuilder, Matrix, matrix_order
from .scalars import DEFAULT_ORDER_CAP

UNSUPPORTED = "UNSUPPORTED"


@dataclass(frozen=True)
class IntegralData:
    left_integral: tuple
    right_integral: tuple
    alpha_left: tuple
    sigma_r: tuple


def _side_product(h: FiniteHopfAlgebra, i, v, side):
    """e_i v (side='left') or v e_i (side='right'), using the sparse table."""
    a = h.algebra
    out = [h.field.zero] * h.dim
    for j, c in enumerate(v):
        if not c:
            continue
        cell = a.table[i][j] if side == "left" else a.table[j][i]
        for k, x in cell.items():
            out[k] = out[k] + c * x
    return out


def _invariant_space(h: FiniteHopfAlgebra, side):
    """Basis of {v : e_i v = eps(e_i) v for all i} (or v e_i for side='right').

    The candidate space is cut down one basis element at a time, so each step
    only solves a system in the current (usually small) kernel coordinates.
    """
    f = h.field
    basis = [h.basis_vector(j) for j in range(h.dim)]
    for i in range(h.dim):
        if not basis:
            break
        e = h.counit[i]
        images = []
        for v in basis:
            w = _side_product(h, i, v, side)
            images.append([x - e * y for x, y in zip(w, v)])
        if not any(any(w) for w in images):
            continue
        # coefficient vectors c with sum c_r images[r] = 0
        m = Matrix.from_columns(f, images, h.dim)
        kernel = m.nullspace()
        basis = [_combine(f, h.dim, basis, c) for c in kernel]
    return basis


def _combine(f, n, vectors, coeffs):
    out = [f.zero] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, x in enumerate(v):
                if x:
                    out[k] = out[k] + c * x
    return out


def _normalize(v):
    lead = next(x for x in v if x)
    inv = lead.inverse()
    return tuple(x * inv for x in v)


def _action_character(h: FiniteHopfAlgebra, t, side):
    """chi with e_i t = chi(e_i) t (side='left') or t e_i = chi(e_i) t."""
    p = next(k for k, x in enumerate(t) if x)
    chi = []
    for i in range(h.dim):
        w = _side_product(h, i, t, side)
        c = w[p] / t[p]
        if any(x != c * y for x, y in zip(w, t)):
            raise ConsistencyFailure("integral space is not stable under the action")
        chi.append(c)
    return tuple(chi)


def compute_integrals(h: FiniteHopfAlgebra) -> IntegralData:
    left = _invariant_space(h, "left")
    right = _invariant_space(h, "right")
    if len(left) != 1 or len(right) != 1:
        raise IntegralDimNotOne(
            f"integral spaces of dimension {len(left)} (left) and {len(right)} (right); "
            "the input is not a Hopf algebra")
    t_l = _normalize(left[0])
    t_r = _normalize(right[0])
    alpha = _action_character(h, t_l, "right")
    sigma = _action_character(h, t_r, "left")
    for name, chi in (("alpha_left", alpha), ("sigma_r", sigma)):
        if not is_character(h, list(chi)):
            raise NotACharacter(f"{name} is not multiplicative")
    return IntegralData(t_l, t_r, alpha, sigma)


def winding_automorphism(h: FiniteHopfAlgebra, pi, check=True) -> Matrix:
    """Matrix of h -> sum h_1 pi(h_2); column i is the image of e_i."""
    pi = list(pi)
    if check and not is_character(h, pi):
        raise NotACharacter("winding automorphism needs a character")
    f = h.field
    cols = []
    for i in range(h.dim):
        col = [f.zero] * h.dim
        for (j, k), c in h.comul[i].items():
            if pi[k]:
                col[j] = col[j] + c * pi[k]
        cols.append(col)
    m = Matrix.from_columns(f, cols, h.dim)
    if check:
        inverse = winding_automorphism(h, compose_antipode(h, pi), check=False)
        if not (m @ inverse).is_identity() or not (inverse @ m).is_identity():
            raise ConsistencyFailure("winding by pi o S does not invert winding by pi")
        if not is_algebra_automorphism(h.algebra, m):
            raise ConsistencyFailure("winding map is not an algebra automorphism")
    return m


def integral_order(h: FiniteHopfAlgebra, cap=DEFAULT_ORDER_CAP, data: IntegralData = None):
    """Convolution order of sigma_r, cross-checked against its winding matrix."""
    data = data or compute_integrals(h)
    sigma = list(data.sigma_r)
    by_convolution = convolution_order(h, sigma, cap)
    by_winding = matrix_order(winding_automorphism(h, sigma), cap)
    if by_convolution != by_winding:
        raise ConsistencyFailure(
            f"integral order {by_convolution} by convolution but {by_winding} by winding")
    return by_convolution


def is_unimodular(h: FiniteHopfAlgebra, data: IntegralData = None) -> bool:
    data = data or compute_integrals(h)
    eps = tuple(h.counit)
    right = data.sigma_r == eps
    left = data.alpha_left == eps
    if right != left:
        raise ConsistencyFailure("sigma_r and alpha_left disagree about unimodularity")
    return right


def _eigen_space(h: FiniteHopfAlgebra, chi):
    """{v in H : e_i v = chi(e_i) v for all i}, i.e. Hom_H(k_chi, H)."""
    f = h.field
    n = h.dim
    table = h.algebra.table
    rows = EchelonBuilder(f, n)
    for i in range(n):
        # row r of L_{e_i} - chi(e_i) I
        mat = [[f.zero] * n for _ in range(n)]
        for j in range(n):
            for r, c in table[i][j].items():
                mat[r][j] = c
        for r in range(n):
            if chi[i]:
                mat[r][r] = mat[r][r] - chi[i]
            rows.add(mat[r])
        if rows.dim == n:
            break
    return rows.subspace().annihilator()


def _hom_to_trivial_dim(h: FiniteHopfAlgebra, chi):
    """dim Hom_H(k_chi, k): solutions c of (chi(e_i) - eps(e_i)) c = 0."""
    return 1 if all(a == b for a, b in zip(chi, h.counit)) else 0


def cond1_holds(h: FiniteHopfAlgebra, data: IntegralData = None) -> bool:
    """Whether eps induces a bijection Hom_H(int^r, H) -> Hom_H(int^r, k)."""
    data = data or compute_integrals(h)
    v = _eigen_space(h, data.sigma_r)
    w_dim = _hom_to_trivial_dim(h, data.sigma_r)
    if v.dim != w_dim:
        return False
    images = [h.counit_of(b) for b in v]
    # injective on V iff the 1 x dim(V) matrix of eps|V has rank dim(V)
    return Matrix(h.field, [images], v.dim).rank() == v.dim if v.dim else True


def cond2_holds(h: FiniteHopfAlgebra, characters, data: IntegralData = None) -> bool:
    """Hom_H(k_chi, k) = 0 for each listed character chi other than sigma_r."""
    data = data or compute_integrals(h)
    return all(_hom_to_trivial_dim(h, chi) == 0
               for chi in characters if tuple(chi) != data.sigma_r)


def known_characters(h: FiniteHopfAlgebra, data: IntegralData, cap=DEFAULT_ORDER_CAP):
    """eps, alpha_left and the convolution powers of sigma_r (up to its order)."""
    out = [tuple(h.counit)]

    def add(chi):
        if chi not in out:
            out.append(chi)

    add(data.alpha_left)
    power = list(data.sigma_r)
    for _ in range(cap):
        if tuple(power) in out and tuple(power) == tuple(h.counit):
            break
        add(tuple(power))
        power = convolution(h, power, list(data.sigma_r), check=False)
    return out


@dataclass(frozen=True)
class MaschkeReport:
    epsilon_of_integral: object
    semisimple_by_integral: bool
    radical_dim: object
    cond1_holds: bool
    cond2_holds: bool

    def triangle_holds(self):
        if self.radical_dim == UNSUPPORTED:
            return self.semisimple_by_integral == self.cond1_holds
        return self.semisimple_by_integral == (self.radical_dim == 0) == self.cond1_holds


def maschke_report(h: FiniteHopfAlgebra, data: IntegralData = None, cap=DEFAULT_ORDER_CAP):
    data = data or compute_integrals(h)
    eps_t = h.counit_of(data.right_integral)
    try:
        rad = jacobson_radical(h.algebra).dim
    except UnsupportedCharacteristic:
        rad = UNSUPPORTED
    return MaschkeReport(
        epsilon_of_integral=eps_t,
        semisimple_by_integral=bool(eps_t),
        radical_dim=rad,
        cond1_holds=cond1_holds(h, data),
        cond2_holds=cond2_holds(h, known_characters(h, data, cap), data),
    )


@dataclass(frozen=True)
class AntipodeReport:
    order_of_S: object
    S_squared_is_id: bool


def antipode_report(h: FiniteHopfAlgebra, cap=DEFAULT_ORDER_CAP) -> AntipodeReport:
    s = h.antipode
    try:
        order = matrix_order(s, cap)
    except NotInvertible:
        order = None
    return AntipodeReport(order, (s @ s).is_identity())


def s_twist_identity_check(h: FiniteHopfAlgebra, data: IntegralData = None) -> bool:
    """alpha_left == sigma_r o S."""
    data = data or compute_integrals(h)
    return tuple(compose_antipode(h, list(data.sigma_r))) == data.alpha_left


def winding_group(h: FiniteHopfAlgebra, data: IntegralData = None, cap=DEFAULT_ORDER_CAP):
    """Winding automorphisms of the powers (sigma_r)^{*i}, i < io."""
    data = data or compute_integrals(h)
    io = integral_order(h, cap, data)
    if io is None:
        return None
    return [winding_automorphism(h, convolution_power(h, list(data.sigma_r), i))
            for i in range(io)]


# --- estimator-style facade -------------------------------------------------


class NotFittedError(ValueError, AttributeError):
    pass


def check_is_fitted(obj, attributes=("integrals_",)):
    if any(not hasattr(obj, a) for a in attributes):
        raise NotFittedError(f"{type(obj).__name__} is not fitted yet; call fit() first")


class IntegralAnalyzer:
    """Fit on a finite Hopf algebra, then wind vectors by sigma_r.

    >>> from hopfint.presets import sweedler
    >>> ana = IntegralAnalyzer().fit(sweedler())
    >>> ana.integral_order_
    2
    """

    def __init__(self, order_cap=DEFAULT_ORDER_CAP, radical=True):
        self.order_cap = order_cap
        self.radical = radical

    def get_params(self, deep=True):
        return {"order_cap": self.order_cap, "radical": self.radical}

    def set_params(self, **params):
        for k, v in params.items():
            if k not in self.get_params():
                raise ValueError(f"invalid parameter {k!r} for IntegralAnalyzer")
            setattr(self, k, v)
        return self

    def fit(self, h: FiniteHopfAlgebra, y=None):
        data = compute_integrals(h)
        self.hopf_ = h
        self.integrals_ = data
        self.integral_order_ = integral_order(h, self.order_cap, data)
        self.unimodular_ = is_unimodular(h, data)
        self.winding_ = winding_automorphism(h, data.sigma_r)
        self.antipode_ = antipode_report(h, self.order_cap)
        if self.radical:
            self.maschke_ = maschke_report(h, data, self.order_cap)
        return self

    def transform(self, vectors):
        """Apply the winding automorphism of sigma_r to each vector."""
        check_is_fitted(self)
        return [self.winding_.apply(list(v)) for v in vectors]

    def inverse_transform(self, vectors):
        check_is_fitted(self)
        inv = winding_automorphism(self.hopf_, compose_antipode(self.hopf_, list(self.integrals_.sigma_r)))
        return [inv.apply(list(v)) for v in vectors]

    def fit_transform(self, h, vectors=None):
        self.fit(h)
        if vectors is None:
            vectors = [h.basis_vector(i) for i in range(h.dim)]
        return self.transform(vectors)

    def __repr__(self):
        return f"IntegralAnalyzer(order_cap={self.order_cap}, radical={self.radical})"
