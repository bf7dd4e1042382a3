"""Divisor-class pullback calculus on CM abelian surfaces, with genus-2 Jacobian checks."""

from .calculus import (
    CalculusContext,
    ClassVector,
    IdentityVerdict,
    RefutationCertificate,
    Verdict,
    context_build,
    diagonal_preperiodic,
    full_context,
    n_plus_alpha,
    polarization_scalar,
    quadratic_normal_form,
    reduce,
    refute_scalar_hypothesis,
    verify,
)
from .jacobian import CurveParams, Jacobian, MumfordDivisor, curve_validate
from .language import ParseError, ParsedIdentity, parse_identity, parse_ring_element
from .rings import (
    FIFTH_ROOT,
    GAUSSIAN,
    SIXTH_ROOT,
    RingElement,
    RingKind,
    RingSpec,
    is_root_of_unity,
    norm,
    ratio_is_root_of_unity,
    ring_make,
)

__version__ = "0.1.0"

__all__ = [
    "CalculusContext",
    "ClassVector",
    "context_build",
    "curve_validate",
    "CurveParams",
    "diagonal_preperiodic",
    "FIFTH_ROOT",
    "full_context",
    "GAUSSIAN",
    "IdentityVerdict",
    "is_root_of_unity",
    "Jacobian",
    "MumfordDivisor",
    "n_plus_alpha",
    "norm",
    "parse_identity",
    "parse_ring_element",
    "ParsedIdentity",
    "ParseError",
    "polarization_scalar",
    "quadratic_normal_form",
    "ratio_is_root_of_unity",
    "reduce",
    "RefutationCertificate",
    "refute_scalar_hypothesis",
    "ring_make",
    "RingElement",
    "RingKind",
    "RingSpec",
    "SIXTH_ROOT",
    "Verdict",
    "verify",
]
