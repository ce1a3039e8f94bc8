"""Representations of schemoids, Kan extensions, modules and Morita checks."""

from .bimodule import bimodule_functors, bimodule_schemoid, hom_functor, regular_bimodule, tensor
from .kan import AdjunctionCheck, adjunction_check, kan_left, kan_right
from .modules import (AlgModule, eta, ext_dims, mitchell, mitchell_algebra, projective_resolution,
                      schemoid_cohomology)
from .morita import MoritaReport, hamming_witness, morita_witness_check, swap_automorphism
from .reps import (FunctorRep, HomSpace, RepError, check_rep, constant_rep, enumerate_functor_reps,
                   find_isomorphism, is_natural, lc_hom, nat_hom, restrict, validate_functor_rep, zero_rep)

__all__ = [
    "AdjunctionCheck", "AlgModule", "FunctorRep", "HomSpace", "MoritaReport", "RepError",
    "adjunction_check", "bimodule_functors", "bimodule_schemoid", "check_rep", "constant_rep",
    "enumerate_functor_reps", "eta", "ext_dims", "find_isomorphism", "hamming_witness",
    "hom_functor", "is_natural", "kan_left", "kan_right", "lc_hom", "mitchell", "mitchell_algebra",
    "morita_witness_check", "nat_hom", "projective_resolution", "regular_bimodule", "restrict",
    "schemoid_cohomology", "swap_automorphism", "tensor", "validate_functor_rep", "zero_rep",
]
