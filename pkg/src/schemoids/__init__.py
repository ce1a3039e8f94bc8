"""Finite categories with partitioned morphism sets (schemoids) and their invariants."""

from .core import (AxiomViolation, NotTameError, PartitionError, Schemoid, SchemoidError, SchemoidMorphism,
                   identity_morphism, quotient_category, schemoid_from_blocks, structure_constants,
                   tameness_report, validate_morphism, validate_schemoid)
from .fields import GF, QQ, Field, parse_field
from .fincat import FinCat, make_category, validate_category

__all__ = [
    "AxiomViolation", "Field", "FinCat", "GF", "NotTameError", "PartitionError", "QQ", "Schemoid",
    "SchemoidError", "SchemoidMorphism", "identity_morphism", "make_category", "parse_field",
    "quotient_category", "schemoid_from_blocks", "structure_constants", "tameness_report",
    "validate_category", "validate_morphism", "validate_schemoid",
]
