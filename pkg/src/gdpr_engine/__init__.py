"""GDPR compliance rule engine over typed instance models.

Load an instance model of an organization's processing landscape, tailor
the generic rule set for a legal context by resolving variation points,
evaluate the compliance rules, and emit a diagnostics report traceable to
the regulation's articles.
"""

from .glossary import glossary_lookup
from .ingest import (
    LoadError,
    graph_fingerprint,
    load_instance,
    load_profile,
    serialize_instance,
)
from .model import InstanceGraph, Violation, validate_graph
from .registry import trace_articles
from .rules import (
    ComplianceReport,
    Finding,
    RuleVerdict,
    check_applicability,
    check_child_consent,
    check_transfer_legality,
    compute_max_fine,
    evaluate_all,
    evaluate_rule,
)
from .variability import (
    Resolution,
    SpecializationProfile,
    apply_resolution,
    build_profile,
    default_profile,
    finalize_profile,
    resolution_table,
)

__all__ = [
    "ComplianceReport",
    "Finding",
    "InstanceGraph",
    "LoadError",
    "Resolution",
    "RuleVerdict",
    "SpecializationProfile",
    "Violation",
    "apply_resolution",
    "build_profile",
    "check_applicability",
    "check_child_consent",
    "check_transfer_legality",
    "compute_max_fine",
    "default_profile",
    "evaluate_all",
    "evaluate_rule",
    "finalize_profile",
    "glossary_lookup",
    "graph_fingerprint",
    "load_instance",
    "load_profile",
    "resolution_table",
    "serialize_instance",
    "trace_articles",
    "validate_graph",
]

__version__ = "0.1.0"
