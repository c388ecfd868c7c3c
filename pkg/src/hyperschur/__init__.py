"""Hyperoctahedral Schur category, symmetric webs, and the evaluation functor between them."""
from .hypercomb import HYPER, PLAIN, Hypercomposition, SymmetryMode, enumerate_hypercompositions
from .schurcat import Morphism, OrbitMatrix, compose, enumerate_hmat, identity_morphism

__all__ = [
    "HYPER",
    "PLAIN",
    "Hypercomposition",
    "Morphism",
    "OrbitMatrix",
    "SymmetryMode",
    "compose",
    "enumerate_hmat",
    "enumerate_hypercompositions",
    "identity_morphism",
]
