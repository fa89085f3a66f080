"""Exact-arithmetic A-infinity algebras over semisimple rings.

The package implements a suspension construction on pairs (A inside B) of
A-infinity algebras over K^m, the bimodule calculus feeding it (diagonal,
restriction, shift, dual, quotient, trivial extension), twisted complexes
with mapping cones, simplicial cochain dga's, and exact verification
pipelines tying them together.  All arithmetic is over Q or F_p; there is
no floating point anywhere.  Sign conventions are listed in CONVENTIONS.md
at the repository root.
"""

from .fields import QQ, GF, field_from_descriptor
from .core import GradedSpace, MultiMap, koszul_exponent, apply_multimap
from .ainf import (AInfAlgebra, AInfHomomorphism, CheckError, check_relations,
                   check_strict_unital, cohomology, directed_subalgebra,
                   double_objects, check_homomorphism, is_quasi_iso,
                   subalgebra_pair, ground_field_algebra)
from .bimod import (AInfBimodule, BimoduleMorphism, check_bimodule_morphism,
                    check_bimodule_relations, diagonal_bimodule, dual_bimodule,
                    is_bimodule_quasi_iso, quotient_bimodule,
                    restriction_bimodule, shift_bimodule, trivial_extension)
from .susp import (double_suspension_model, split_after_suspension, suspend,
                   suspend_dga, suspend_morphism, tensor_with_endC)
from .tw import (TwistedComplex, cone, cone_endomorphism_algebra, hom_twisted,
                 lemma_alg_check, tilde_directed, twisted_category)
from .simplicial import (SimplicialComplex, SimplicialPair, cochain_dga,
                         complex_from_vertex_sets, glue_double, pair_algebra,
                         sandwich_map)

__all__ = [
    "QQ", "GF", "field_from_descriptor",
    "GradedSpace", "MultiMap", "koszul_exponent", "apply_multimap",
    "AInfAlgebra", "AInfHomomorphism", "CheckError", "check_relations",
    "check_strict_unital", "cohomology", "directed_subalgebra",
    "double_objects", "check_homomorphism", "is_quasi_iso",
    "subalgebra_pair", "ground_field_algebra",
    "AInfBimodule", "BimoduleMorphism", "check_bimodule_morphism",
    "check_bimodule_relations", "diagonal_bimodule", "dual_bimodule",
    "is_bimodule_quasi_iso", "quotient_bimodule", "restriction_bimodule",
    "shift_bimodule", "trivial_extension",
    "double_suspension_model", "split_after_suspension", "suspend",
    "suspend_dga", "suspend_morphism", "tensor_with_endC",
    "TwistedComplex", "cone", "cone_endomorphism_algebra", "hom_twisted",
    "lemma_alg_check", "tilde_directed", "twisted_category",
    "SimplicialComplex", "SimplicialPair", "cochain_dga",
    "complex_from_vertex_sets", "glue_double", "pair_algebra", "sandwich_map",
]
