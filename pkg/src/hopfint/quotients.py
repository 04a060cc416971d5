"""Hopf quotients: abelianization, the integral quotient, and coinvariants."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    FiniteAlgebra,
    Ideal,
    commutator_ideal,
    fixed_subalgebra,
    is_subalgebra,
    quotient_algebra,
    subalgebra,
)
from .errors import ConsistencyFailure, NotHopfIdeal, OrderInfinite
from .hopf import (
    FiniteHopfAlgebra,
    convolution_power,
    hopf_morphism_failures,
)
from .integrals import (
    IntegralData,
    compute_integrals,
    integral_order,
    winding_group,
)
from .linalg import Matrix, Subspace
from .scalars import DEFAULT_ORDER_CAP


@dataclass
class HopfQuotientResult:
    quotient: FiniteHopfAlgebra
    projection: Matrix
    kernel: Ideal
    kind: str = "generic"

    @property
    def dim(self):
        return self.quotient.dim


def _pushed_comul(h: FiniteHopfAlgebra, proj: Matrix, v):
    """(pi (x) pi) Delta(v) as a sparse tensor in Q (x) Q."""
    cols = {}
    f = h.field
    out = {}
    for (j, k), c in h.comul_vector(v).items():
        pj = cols.setdefault(j, proj.column(j))
        pk = cols.setdefault(k, proj.column(k))
        for a, x in enumerate(pj):
            if not x:
                continue
            for b, y in enumerate(pk):
                if y:
                    out[(a, b)] = out.get((a, b), f.zero) + c * x * y
    return {ab: c for ab, c in out.items() if c}


def hopf_ideal_failures(h: FiniteHopfAlgebra, ideal: Ideal):
    """Names of the Hopf-ideal conditions that fail for ``ideal``.

    Delta(I) in I (x) H + H (x) I is tested as (pi (x) pi) Delta(v) = 0 for the
    projection pi: H -> H/I; the kernel of pi (x) pi is exactly that subspace.
    """
    space = ideal.space
    bad = []
    if any(h.counit_of(v) for v in space):
        bad.append("counit")
    if any(not space.contains(h.apply_antipode(v)) for v in space):
        bad.append("antipode")
    if space.dim < h.dim:
        _, proj = quotient_algebra(h.algebra, ideal)
        if any(_pushed_comul(h, proj, v) for v in space):
            bad.append("comultiplication")
    elif space.dim:
        bad.append("proper")
    return bad


def hopf_ideal_check(h: FiniteHopfAlgebra, ideal: Ideal) -> bool:
    return not hopf_ideal_failures(h, ideal)


def hopf_quotient(h: FiniteHopfAlgebra, ideal: Ideal, name=None, kind="generic",
                  check=True) -> HopfQuotientResult:
    """H/I with the inherited Hopf structure, in the non-pivot basis of I."""
    if check:
        bad = hopf_ideal_failures(h, ideal)
        if bad:
            raise NotHopfIdeal(f"not a Hopf ideal: fails {', '.join(bad)}")
    alg, proj = quotient_algebra(h.algebra, ideal)
    comp = ideal.space.complement_indices()
    comul = [_pushed_comul(h, proj, h.basis_vector(c)) for c in comp]
    counit = [h.counit[c] for c in comp]
    anti = Matrix.from_columns(h.field, [proj.apply(h.antipode.column(c)) for c in comp], alg.dim)
    q = FiniteHopfAlgebra(alg, comul, counit, anti, name=name)
    if check:
        bad = hopf_morphism_failures(proj, h, q)
        if bad:
            raise ConsistencyFailure(f"projection is not a Hopf map: {', '.join(bad)}")
    return HopfQuotientResult(q, proj, ideal, kind)


def abelianization(h: FiniteHopfAlgebra) -> HopfQuotientResult:
    ideal = commutator_ideal(h.algebra)
    res = hopf_quotient(h, ideal, name=f"({h.name or 'H'})_ab", kind="abelianization")
    assert res.quotient.algebra.is_commutative()
    return res


def integral_kernel(h: FiniteHopfAlgebra, data: IntegralData, io) -> Subspace:
    """Intersection of the kernels of (sigma_r)^{*i}, i = 0..io-1."""
    rows = [convolution_power(h, list(data.sigma_r), i) for i in range(io)]
    return Matrix(h.field, rows, h.dim).nullspace()


def integral_quotient(h: FiniteHopfAlgebra, cap=DEFAULT_ORDER_CAP,
                      data: IntegralData = None) -> HopfQuotientResult:
    data = data or compute_integrals(h)
    io = integral_order(h, cap, data)
    if io is None:
        raise OrderInfinite(f"integral order exceeds the cap {cap}")
    # kernels of characters are two-sided ideals, no saturation needed
    ideal = Ideal(h.algebra, integral_kernel(h, data, io))
    res = hopf_quotient(h, ideal, name=f"({h.name or 'H'})_iq", kind="integral")
    if res.dim != io:
        raise ConsistencyFailure(f"integral quotient has dim {res.dim}, integral order {io}")
    if not res.quotient.algebra.is_commutative():
        raise ConsistencyFailure("integral quotient is not commutative")
    return res


def quotient_character(res: HopfQuotientResult, chi):
    """A character of H vanishing on the kernel, read on the quotient basis."""
    comp = res.kernel.space.complement_indices()
    return [chi[c] for c in comp]


def coinvariants(h: FiniteHopfAlgebra, res: HopfQuotientResult, cap=DEFAULT_ORDER_CAP,
                 data: IntegralData = None) -> Subspace:
    """{v : (id (x) pi) Delta(v) = v (x) pi(1)}."""
    qd = res.quotient.dim
    proj = res.projection
    one = proj.apply(h.unit)
    f = h.field
    cols = []
    for i in range(h.dim):
        col = [f.zero] * (h.dim * qd)
        for (j, k), c in h.comul[i].items():
            for b, y in enumerate(proj.column(k)):
                if y:
                    col[j * qd + b] = col[j * qd + b] + c * y
        for b, y in enumerate(one):
            if y:
                col[i * qd + b] = col[i * qd + b] - y
        cols.append(col)
    space = Matrix.from_columns(f, cols, h.dim * qd).nullspace()
    if not space.contains(h.unit) or not is_subalgebra(h.algebra, space):
        raise ConsistencyFailure("coinvariants are not a unital subalgebra")
    if res.kind == "integral":
        fixed = fixed_subalgebra(h.algebra, winding_group(h, data, cap))
        if fixed != space:
            raise ConsistencyFailure("coinvariants differ from the winding-fixed subalgebra")
    return space


def coinvariant_algebra(h: FiniteHopfAlgebra, space: Subspace) -> FiniteAlgebra:
    return subalgebra(h.algebra, space)
