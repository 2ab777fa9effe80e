"""Coset graphs of amalgams, quotients by normal subgroups and regular normal subgroups."""

from .graph import (
    DEFAULT_VERTEX_CAP,
    CosetGraph,
    GraphBudgetExceeded,
    action_kernel,
    build,
    build_from_subgroups,
    is_semiregular,
    quotient,
    quotient_group,
)
from .regular import RadicalTooLarge, RegularNormalReport, max_regular_normal, odd_radical, regular_normal_scan

__all__ = [name for name in dir() if not name.startswith("_")]
