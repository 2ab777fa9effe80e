"""Permutation and permutation-group arithmetic."""

from .blocks import BlockSystem, block_systems, is_primitive, minimal_block
from .group import (
    DEFAULT_ENUMERATION_BOUND,
    EnumerationBoundExceeded,
    GeneratedGroup,
    Subgroup,
    contains,
    group_order,
    orbits,
)
from .io import GroupFileError, dumps_group, group_from_dict, group_to_dict, loads_group, read_group
from .permutation import Permutation, p_part, p_prime_part
from .structure import (
    ChiefFactorReport,
    StructureDescriptor,
    center,
    centralizer,
    commutator_subgroup,
    conjugacy_class,
    core_in,
    derived_length,
    derived_subgroup,
    eta_count,
    intersect,
    is_normal,
    is_p_group,
    is_soluble,
    join,
    make_subgroup,
    normal_closure,
    normalizer,
    o_upper_p,
    omega1,
    orbit_stabilizer,
    p_core,
    structure_probe,
    sylow_subgroup,
)

__all__ = [name for name in dir() if not name.startswith("_")]
