"""Exact computations in affine Weyl groups: roots, words, translations and normalizers."""
from .cartan import CartanData, TypeLabel, load_builtin
from .lattice import CoweightVec, RootVec
from .weylgroup import GroupElement, evaluate_word, reflection_through, simple_reflection
from .translations import as_translation, quasi_translation_analysis, translation_element

__all__ = [
    "CartanData",
    "TypeLabel",
    "load_builtin",
    "CoweightVec",
    "RootVec",
    "GroupElement",
    "evaluate_word",
    "reflection_through",
    "simple_reflection",
    "as_translation",
    "quasi_translation_analysis",
    "translation_element",
]
