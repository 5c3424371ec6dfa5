"""Theorem checkers, small-graph enumeration and the exhaustive suite."""

from .checks import SkeletonFacts, TheoremReport, check_bounds, check_deletion_lemmas, check_interlacing
from .enumerate import canonical_form, enumerate_underlying_graphs, signature_representatives
from .suite import SuiteOptions, SuiteSummary, run_suite

__all__ = [
    "SkeletonFacts",
    "SuiteOptions",
    "SuiteSummary",
    "TheoremReport",
    "canonical_form",
    "check_bounds",
    "check_deletion_lemmas",
    "check_interlacing",
    "enumerate_underlying_graphs",
    "run_suite",
    "signature_representatives",
]
