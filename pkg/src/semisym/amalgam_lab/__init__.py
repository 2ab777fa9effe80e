"""Goldschmidt amalgams: representation, verification, classification and search."""

from .amalgam import TYPE_LABELS, Amalgam, VerificationReport, is_sylow_completion, subamalgam, type_class, verify_goldschmidt
from .catalog import MEMBER_NAMES, SAMPLE_COMPLETIONS, AmalgamNotFound, catalog_amalgam, locate_type
from .classify import AmalgamTypeEvidence, ClassificationError, classify_type, oriented
from .io import AmalgamFileError, amalgam_from_dict, amalgam_to_dict, dumps_amalgam, loads_amalgam, read_amalgam
from .search import (
    OvergroupSearch,
    SymmetrizerResult,
    find_index3_overgroups,
    find_symmetrizing_element,
    locate_amalgams,
)

__all__ = [name for name in dir() if not name.startswith("_")]
