"""Canonical report documents for finite Hopf algebras and presented families.

Reports are plain dicts built in a fixed key order; scalars are rendered by
their canonical string form, so identical inputs give byte-identical JSON.
"""

from __future__ import annotations

import json
from math import gcd

from .algebra import is_commutative_subspace
from .errors import HopfError, OrderInfinite, TruncationUndeclared
from .family import (
    PresentedHopfFamily,
    clique_of_trivial,
    family_integral_order,
    family_integral_quotient,
    integral_character,
    nonzerodivisor_evidence,
    right_integral_character,
    truncate,
    verify_chain,
)
from .hopf import FiniteHopfAlgebra, verify_axioms
from .integrals import (
    UNSUPPORTED,
    antipode_report,
    compute_integrals,
    integral_order,
    is_unimodular,
    maschke_report,
    s_twist_identity_check,
)
from .quotients import abelianization, coinvariants, integral_quotient, quotient_character
from .scalars import DEFAULT_ORDER_CAP

DEFAULT_TRUNCATION_LEVELS = (1, 2, 3)


def _s(x):
    return str(x)


def _covector(h, chi):
    return {lab: _s(c) for lab, c in zip(h.labels, chi)}


def _family_char(chi):
    return {g: _s(v) for g, v in zip(chi.gens, chi.values)}


def _lcm(a, b):
    return a * b // gcd(a, b)


def axioms_block(h: FiniteHopfAlgebra):
    rep = verify_axioms(h)
    return {"passed": rep.passed, "failures": failure_lines(rep)}


def failure_lines(rep):
    return [line for line in rep.lines() if line.startswith("FAIL")]


def finite_report(h: FiniteHopfAlgebra, cap=DEFAULT_ORDER_CAP, source=None, check_axioms=True,
                  radical=True):
    """Full invariant pipeline; stops after the axiom block if axioms fail."""
    doc = {"input": source or getattr(h, "preset", None) or h.name, "kind": "finite",
           "name": h.name, "field": h.field.spec(), "dim": h.dim, "basis": list(h.labels)}
    if check_axioms:
        doc["axioms"] = axioms_block(h)
        if not doc["axioms"]["passed"]:
            return doc
    else:
        doc["axioms"] = {"passed": None, "failures": [], "note": "not checked"}
    data = compute_integrals(h)
    doc["integrals"] = {
        "left": h.format_vector(data.left_integral),
        "right": h.format_vector(data.right_integral),
        "alpha_left": _covector(h, data.alpha_left),
        "sigma_r": _covector(h, data.sigma_r),
        "alpha_left_equals_sigma_r_o_S": s_twist_identity_check(h, data),
    }
    io = integral_order(h, cap, data)
    doc["io"] = io
    doc["unimodular"] = is_unimodular(h, data)
    if radical:
        m = maschke_report(h, data, cap)
        doc["maschke"] = {
            "epsilon_of_integral": _s(m.epsilon_of_integral),
            "semisimple_by_integral": m.semisimple_by_integral,
            "radical_dim": m.radical_dim,
            "cond1_holds": m.cond1_holds,
            "cond2_holds_on_known_characters": m.cond2_holds,
            "triangle_holds": m.triangle_holds(),
        }
    a = antipode_report(h, cap)
    doc["antipode"] = {"order_of_S": a.order_of_S, "S_squared_is_id": a.S_squared_is_id}
    ab = abelianization(h)
    doc["abelianization"] = {
        "dim": ab.dim,
        "commutative": ab.quotient.algebra.is_commutative(),
        "io_divides_dim": io is not None and ab.dim % io == 0,
    }
    if io is None:
        doc["integral_quotient"] = None
        doc["coinvariants"] = None
    else:
        iq = integral_quotient(h, cap, data)
        doc["integral_quotient"] = {
            "dim": iq.dim,
            "kernel_dim": iq.kernel.dim,
            "basis": list(iq.quotient.labels),
            "commutative": iq.quotient.algebra.is_commutative(),
            "sigma_r": [_s(c) for c in quotient_character(iq, data.sigma_r)],
        }
        co = coinvariants(h, iq, cap, data)
        doc["coinvariants"] = {
            "dim": co.dim,
            "commutative": is_commutative_subspace(h.algebra, co),
            "equals_winding_fixed": True,
            "basis": [h.format_vector(v) for v in co],
        }
    _attach_golden(doc, h)
    return doc


def tensor_report(h, k, t, cap=DEFAULT_ORDER_CAP, check_axioms=False, radical=True):
    """Report of H (x) K plus the lcm law; factor axioms are always checked."""
    doc = finite_report(t, cap, source=f"{_src(h)} ⊗ {_src(k)}", check_axioms=check_axioms,
                        radical=radical)
    if not check_axioms:
        fa, fb = verify_axioms(h), verify_axioms(k)
        doc["axioms"] = {"passed": fa.passed and fb.passed,
                         "failures": failure_lines(fa) + failure_lines(fb),
                         "note": "checked on both factors; tensor products of Hopf algebras are Hopf"}
    io_h, io_k = integral_order(h, cap), integral_order(k, cap)
    law = None if None in (io_h, io_k, doc.get("io")) else _lcm(io_h, io_k)
    doc["lcm_law"] = {"io_left": io_h, "io_right": io_k, "lcm": law,
                      "holds": law is not None and law == doc.get("io")}
    return doc


def _src(obj):
    return getattr(obj, "preset", None) or obj.name


def truncation_block(family: PresentedHopfFamily, s, cap=DEFAULT_ORDER_CAP):
    tr = truncate(family, s, cap)
    fixed = tr.fixed_subalgebra()
    layers = tr.radical_layers()
    return {
        "s": s,
        "dim": tr.algebra.dim,
        "radical_layers": layers,
        "semisimple": len(layers) == 1,
        "fixed_basis": [tr.algebra.format_vector(v) for v in fixed],
        "fixed_commutative": is_commutative_subspace(tr.algebra, fixed),
        "windings_descend": True,
        "multiplication_by_w_injective": nonzerodivisor_evidence(family, s),
    }


def family_report(family: PresentedHopfFamily, cap=DEFAULT_ORDER_CAP, source=None,
                  truncation_levels=DEFAULT_TRUNCATION_LEVELS):
    doc = {"input": source or getattr(family, "preset", None) or family.name, "kind": "family",
           "name": family.name, "field": family.field.spec(),
           "generators": list(family.algebra.gens)}
    rep = verify_chain(family)
    doc["chain"] = {
        "passed": rep.passed,
        "steps": [str(step.normal_element) for step in family.chain],
        "terminal": family.terminal.name,
        "failures": [f"step {s}: {n} ({d})" for s, n, d in rep.failures],
    }
    if not rep.passed:
        return doc
    alpha = integral_character(family, check=False)
    sigma = right_integral_character(family, alpha)
    doc["integral_character"] = _family_char(alpha)
    doc["sigma_r"] = _family_char(sigma)
    io = family_integral_order(family, cap, sigma)
    doc["io"] = io
    if io is None:
        doc["io_note"] = f"infinite or > {cap}"
    doc["unimodular"] = io == 1
    clique = clique_of_trivial(family, cap, sigma)
    doc["clique"] = None if clique is None else [_family_char(c) for c in clique]
    doc["clique_size"] = None if clique is None else len(clique)
    if io is None:
        doc["integral_quotient"] = None
    else:
        q = family_integral_quotient(family, cap, sigma)
        doc["integral_quotient"] = {
            "dim": q.quotient.dim,
            "commutative": q.quotient.algebra.is_commutative(),
            "images": {g: [_s(c) for c in v] for g, v in q.images.items()},
        }
    if family.pi_degree is not None:
        doc["pi_degree"] = family.pi_degree
    if family.truncation is not None:
        doc["truncations"] = [truncation_block(family, s, cap) for s in truncation_levels]
    _attach_golden(doc, family)
    return doc


def build_report(obj, cap=DEFAULT_ORDER_CAP, source=None):
    if isinstance(obj, PresentedHopfFamily):
        return family_report(obj, cap, source)
    return finite_report(obj, cap, source)


# --- golden comparison --------------------------------------------------------

_LOOKUP = {
    "epsilon_of_integral": ("maschke", "epsilon_of_integral"),
    "semisimple_by_integral": ("maschke", "semisimple_by_integral"),
    "radical_dim": ("maschke", "radical_dim"),
    "cond1_holds": ("maschke", "cond1_holds"),
    "antipode_order": ("antipode", "order_of_S"),
    "S_squared_is_id": ("antipode", "S_squared_is_id"),
    "iq_dim": ("integral_quotient", "dim"),
    "ab_dim": ("abelianization", "dim"),
}

_MISSING = object()


def report_value(doc, key):
    """Read a golden key from a report; None-valued blocks read as None."""
    if key in _LOOKUP:
        block, sub = _LOOKUP[key]
        b = doc.get(block, _MISSING)
        if b is _MISSING:
            return _MISSING
        return None if b is None else b.get(sub, _MISSING)
    return doc.get(key, _MISSING)


def golden_comparison(doc, golden):
    out = {}
    for key in sorted(golden):
        expected, provenance = golden[key]
        actual = report_value(doc, key)
        if actual is _MISSING:
            continue
        out[key] = {"expected": expected, "actual": actual, "match": actual == expected,
                    "provenance": provenance}
    return out


def _attach_golden(doc, obj):
    golden = getattr(obj, "golden", None)
    if golden:
        cmp = golden_comparison(doc, golden)
        doc["golden"] = cmp
        doc["golden_ok"] = all(v["match"] for v in cmp.values())


# --- rendering ------------------------------------------------------------------


def to_json(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def to_text(doc) -> str:
    lines = []
    _render(doc, 0, lines)
    return "\n".join(lines) + "\n"


def _fmt(v):
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _render(node, indent, lines):
    pad = "  " * indent
    if isinstance(node, dict):
        for k, v in node.items():
            if isinstance(v, dict) and v:
                if all(not isinstance(x, (dict, list)) for x in v.values()) and len(v) <= 12 and indent >= 1:
                    lines.append(f"{pad}{k}: " + ", ".join(f"{a}={_fmt(b)}" for a, b in v.items()))
                else:
                    lines.append(f"{pad}{k}:")
                    _render(v, indent + 1, lines)
            elif isinstance(v, list) and v and any(isinstance(x, (dict, list)) for x in v):
                lines.append(f"{pad}{k}:")
                for item in v:
                    if isinstance(item, dict) and all(not isinstance(x, (dict, list)) for x in item.values()):
                        lines.append(f"{pad}  - " + ", ".join(f"{a}={_fmt(b)}" for a, b in item.items()))
                    else:
                        lines.append(f"{pad}  -")
                        _render(item, indent + 2, lines)
            elif isinstance(v, list):
                lines.append(f"{pad}{k}: [" + ", ".join(_fmt(x) for x in v) + "]")
            else:
                lines.append(f"{pad}{k}: {_fmt(v)}")
    else:
        lines.append(f"{pad}{_fmt(node)}")


__all__ = [
    "UNSUPPORTED",
    "HopfError",
    "OrderInfinite",
    "TruncationUndeclared",
    "build_report",
    "family_report",
    "finite_report",
    "golden_comparison",
    "tensor_report",
    "to_json",
    "to_text",
    "truncation_block",
]
