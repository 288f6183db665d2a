"""Identity templates, the built-in catalog, sampling, verification and search."""

from .catalog import builtin_catalog, control_templates, get_template, pseudo_bracket_template
from .sampler import SamplerConfig, sample_tuple
from .templates import (
    ELEMENT,
    VECTOR_FIELD,
    IdentityTemplate,
    SignExponent,
    SlotSpec,
    TemplateTerm,
    evaluate,
    evaluate_with,
)
from .verify import (
    HOLDS,
    VIOLATED,
    SearchResult,
    VerificationReport,
    check_ternary_parity,
    search_counterexample,
    verify,
)

__all__ = [
    "ELEMENT",
    "VECTOR_FIELD",
    "HOLDS",
    "VIOLATED",
    "IdentityTemplate",
    "SignExponent",
    "SlotSpec",
    "TemplateTerm",
    "SamplerConfig",
    "SearchResult",
    "VerificationReport",
    "builtin_catalog",
    "control_templates",
    "get_template",
    "pseudo_bracket_template",
    "evaluate",
    "evaluate_with",
    "sample_tuple",
    "verify",
    "search_counterexample",
    "check_ternary_parity",
]
