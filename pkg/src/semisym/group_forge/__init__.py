"""Constructors for the permutation groups used by the census."""

from .fields import GF, FieldElement, field, least_irreducible
from .literature import FeatureDisabled, LiteratureCheckError, aut_m12, g2_2, literature_group, m12
from .matrices import (
    MatrixGroupSpec,
    pgammal2,
    pgammau3_spec,
    pgl2,
    projective_action,
    psigmal2,
    psl2,
    psl2_order,
    psl3,
    psl3_order,
    psl3_polarity,
    psu3,
    psu3_order,
)
from .named import named_group
from .products import affine_group, direct_product, wreath_product
from .standard import alt, cyclic, dihedral, make_standard, sym

__all__ = [name for name in dir() if not name.startswith("_")]
