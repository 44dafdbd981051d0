"""Finite strict 2-categories: constructions, nerves and homology probes."""
from .kernel import (ArtifactError, BudgetExceeded, MissingTableEntry, NotComposable, TwoCat,
                     TwoCatPresentation, ValidationReport, dual, group_2cat, ordinal, point,
                     product, validate)
from .morphisms import (LaxFunctor, Transformation, compose_functors, identity_functor,
                        strict_functor, validate_functor, validate_transformation)
from .comma import comma, fiber, slice
from .integration import Diagram, integrate, jk_pair
from .nerve import classical_nerve, nerve, nerve_strict, sup, we_probe
from .homology import homology
from .simplicial import TruncatedBiSSet, TruncatedSSet, category_of_simplices, diagonal, pi0_sset

__all__ = [
    "ArtifactError", "BudgetExceeded", "MissingTableEntry", "NotComposable", "TwoCat",
    "TwoCatPresentation", "ValidationReport", "dual", "group_2cat", "ordinal", "point",
    "product", "validate", "LaxFunctor", "Transformation", "compose_functors",
    "identity_functor", "strict_functor", "validate_functor", "validate_transformation",
    "comma", "fiber", "slice", "Diagram", "integrate", "jk_pair", "classical_nerve", "nerve",
    "nerve_strict", "sup", "we_probe", "homology", "TruncatedBiSSet", "TruncatedSSet",
    "category_of_simplices", "diagonal", "pi0_sset",
]
