"""End-to-end census over the built-in catalog of completions."""

from .cases import BIPRIMITIVE_AUTS, CASES, NAMED_SEMISYMMETRIC_ORDERS, TIERS, CatalogCase, cases_for, skipped_for
from .g51 import FactCheck, FactReport, check_g51_facts
from .runner import SCHEMA, CaseReport, CensusReport, group_fingerprint, run_case, run_catalog

__all__ = [name for name in dir() if not name.startswith("_")]
