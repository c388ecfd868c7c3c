"""Textual web diagrams, their evaluation in the Schur category, and normal forms."""
from .diagram import (
    Chain,
    DiagramError,
    DiagramExpr,
    Generator,
    InterfaceError,
    Kind,
    Layer,
    gen,
)
from .semantics import layer_matrix, normalize, phi, reduced_cfd
from .syntax import DiagramSyntaxError, format_expr, parse
from .transforms import hflip, make_chain, make_expr, make_gen, make_layer, vflip

__all__ = [
    "Chain",
    "DiagramError",
    "DiagramExpr",
    "DiagramSyntaxError",
    "Generator",
    "InterfaceError",
    "Kind",
    "Layer",
    "format_expr",
    "gen",
    "hflip",
    "layer_matrix",
    "make_chain",
    "make_expr",
    "make_gen",
    "make_layer",
    "normalize",
    "parse",
    "phi",
    "reduced_cfd",
    "vflip",
]
