"""Exact integrals and integral quotients of Hopf algebras."""

__version__ = "0.1.0"

from .errors import HopfError, InputError
from .family import (
    PresentedHopfFamily,
    family_integral_order,
    integral_character,
    right_integral_character,
    truncate,
    verify_chain,
)
from .hopf import (
    FiniteHopfAlgebra,
    base_change,
    dual_hopf,
    tensor_hopf,
    verify_axioms,
    verify_hopf_morphism,
)
from .integrals import (
    IntegralAnalyzer,
    antipode_report,
    compute_integrals,
    integral_order,
    is_unimodular,
    maschke_report,
    winding_automorphism,
)
from .presets import build_preset
from .quotients import abelianization, coinvariants, integral_quotient
from .report import build_report, to_json, to_text
from .scalars import cyclotomic_field, parse_field, prime_field, rationals
from .serialization import dump_hopf_json, load_hopf_json

__all__ = [
    "FiniteHopfAlgebra",
    "HopfError",
    "InputError",
    "IntegralAnalyzer",
    "PresentedHopfFamily",
    "abelianization",
    "antipode_report",
    "base_change",
    "build_preset",
    "build_report",
    "coinvariants",
    "compute_integrals",
    "cyclotomic_field",
    "dual_hopf",
    "dump_hopf_json",
    "family_integral_order",
    "integral_character",
    "integral_order",
    "integral_quotient",
    "is_unimodular",
    "load_hopf_json",
    "maschke_report",
    "parse_field",
    "prime_field",
    "rationals",
    "right_integral_character",
    "tensor_hopf",
    "to_json",
    "to_text",
    "truncate",
    "verify_axioms",
    "verify_chain",
    "verify_hopf_morphism",
    "winding_automorphism",
]
