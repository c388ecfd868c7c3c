"""Diagram builders that tolerate zero thicknesses, and the two mirror symmetries."""
from __future__ import annotations

from ..hypercomb import HYPER, SymmetryMode
from .diagram import Chain, DiagramError, DiagramExpr, Generator, Kind, Layer

_AXIS_OF = {"M": Kind.AXIS_MERGE, "S": Kind.AXIS_SPLIT, "X": Kind.AXIS_CROSS}


def make_gen(name: str, *args):
    """A generator, or the strands it degenerates to when a thickness is 0.

    Off-axis: ``m/s/x`` with a 0 argument become ``id`` of the other one and
    ``id(0)`` vanishes.  Axis: ``M/S/X(0, 2b)`` become ``ID(2b)`` and ``ID(0)``
    vanishes.  Returns ``None`` for a vanished generator.
    """
    args = tuple(int(a) for a in args)
    if name == "id":
        return Generator(Kind.ID, args) if args[0] else None
    if name == "ID":
        return Generator(Kind.AXIS_ID, args) if args[0] else None
    if name in ("m", "s", "x"):
        a, b = args
        if a and b:
            return Generator(Kind(name), args)
        return make_gen("id", a + b)
    if name in _AXIS_OF:
        a, mid = args
        if a:
            return Generator(_AXIS_OF[name], args)
        return make_gen("ID", mid)
    raise DiagramError(f"unknown generator {name!r}")


def make_layer(left, axis=None, mode=HYPER):
    """``left`` is a list of ``(name, *args)`` tuples; zero-thickness pieces are dropped."""
    gens = []
    for spec in left:
        g = make_gen(*spec)
        if g is None:
            continue
        gens.append(g)
    ax = make_gen(*axis) if axis is not None else None
    if not gens and ax is None:
        return None
    return Layer(tuple(gens), ax, SymmetryMode.parse(mode))


def is_identity_layer(layer: Layer) -> bool:
    return all(g.kind is Kind.ID for g in layer.left) and (
        layer.axis is None or layer.axis.kind is Kind.AXIS_ID
    )


def make_chain(layer_specs, coefficient=1, mode=HYPER) -> Chain:
    """Build a chain, dropping vanished and pure-identity layers (one identity layer is kept if nothing remains)."""
    layers = [make_layer(*spec, mode=mode) if isinstance(spec, tuple) else spec for spec in layer_specs]
    layers = [l for l in layers if l is not None]
    if not layers:
        raise DiagramError("chain has no strands")
    kept = [l for l in layers if not is_identity_layer(l)]
    return Chain(coefficient, tuple(kept) if kept else (layers[0],))


def make_expr(terms, mode=HYPER) -> DiagramExpr:
    """``terms`` is a list of ``(coefficient, layer_specs)``; zero coefficients are dropped."""
    mode = SymmetryMode.parse(mode)
    chains = tuple(make_chain(specs, c, mode) for c, specs in terms if c)
    return DiagramExpr(chains, mode)


_VFLIP = {
    Kind.MERGE: Kind.SPLIT,
    Kind.SPLIT: Kind.MERGE,
    Kind.AXIS_MERGE: Kind.AXIS_SPLIT,
    Kind.AXIS_SPLIT: Kind.AXIS_MERGE,
}


def _vflip_gen(g: Generator) -> Generator:
    if g.kind is Kind.CROSS:
        return Generator(Kind.CROSS, g.thicknesses[::-1])
    return Generator(_VFLIP.get(g.kind, g.kind), g.thicknesses)


def vflip(d: DiagramExpr) -> DiagramExpr:
    """Upside-down mirror; on the Schur side this transposes every orbit matrix."""
    chains = tuple(
        Chain(
            ch.coefficient,
            tuple(
                Layer(tuple(_vflip_gen(g) for g in l.left), None if l.axis is None else _vflip_gen(l.axis), l.mode)
                for l in reversed(ch.layers)
            ),
        )
        for ch in d.chains
    )
    return DiagramExpr(chains, d.mode, d.target if not chains else None, d.source if not chains else None)


def has_axis_generator(d: DiagramExpr) -> bool:
    return any(
        l.axis is not None and l.axis.kind is not Kind.AXIS_ID for ch in d.chains for l in ch.layers
    )


def hflip(d: DiagramExpr) -> DiagramExpr:
    """Left-right mirror of the off-axis part; only defined when no axis generator is used."""
    if has_axis_generator(d):
        raise DiagramError("horizontal mirror is only defined for diagrams without axis generators")

    def flip_gen(g: Generator) -> Generator:
        return Generator(g.kind, g.thicknesses[::-1])

    chains = tuple(
        Chain(ch.coefficient, tuple(Layer(tuple(flip_gen(g) for g in reversed(l.left)), l.axis, l.mode) for l in ch.layers))
        for ch in d.chains
    )
    return DiagramExpr(chains, d.mode)
