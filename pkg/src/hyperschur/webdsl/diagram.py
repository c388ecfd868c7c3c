"""Layered-word representation of symmetric web diagrams."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from ..hypercomb import HYPER, PLAIN, Hypercomposition, SymmetryMode


class DiagramError(ValueError):
    pass


class InterfaceError(DiagramError):
    """Adjacent layers (or chains of a sum) disagree on the object between them."""

    def __init__(self, message, layer_index=None, below=None, above=None):
        super().__init__(message)
        self.layer_index = layer_index
        self.below = below
        self.above = above


class Kind(enum.Enum):
    MERGE = "m"
    SPLIT = "s"
    CROSS = "x"
    ID = "id"
    AXIS_MERGE = "M"
    AXIS_SPLIT = "S"
    AXIS_CROSS = "X"
    AXIS_ID = "ID"

    @property
    def on_axis(self) -> bool:
        return self.value[0].isupper()


@dataclass(frozen=True)
class Generator:
    kind: Kind
    thicknesses: tuple

    def __post_init__(self):
        t = tuple(int(x) for x in self.thicknesses)
        object.__setattr__(self, "thicknesses", t)
        k = self.kind
        arity = 1 if k in (Kind.ID, Kind.AXIS_ID) else 2
        if len(t) != arity:
            raise DiagramError(f"{k.value} takes {arity} thickness argument(s), got {len(t)}")
        if k is Kind.AXIS_ID:
            if t[0] % 2 or t[0] < 2:
                raise DiagramError(f"ID needs an even positive thickness, got {t[0]}")
        elif k.on_axis:
            if t[0] < 1:
                raise DiagramError(f"{k.value}: off-axis thickness must be positive, got {t[0]}")
            if t[1] % 2 or t[1] < 0:
                raise DiagramError(f"{k.value}: middle thickness must be even and >= 0, got {t[1]}")
        elif any(x < 1 for x in t):
            raise DiagramError(f"{k.value}: thicknesses must be positive, got {t}")

    @property
    def on_axis(self) -> bool:
        return self.kind.on_axis

    def inputs(self) -> tuple:
        """Bottom strands; for axis generators this is the centred palindrome."""
        k, t = self.kind, self.thicknesses
        if k in (Kind.ID, Kind.AXIS_ID):
            return t
        a, b = t
        if k is Kind.MERGE or k is Kind.CROSS:
            return (a, b)
        if k is Kind.SPLIT:
            return (a + b,)
        if k is Kind.AXIS_SPLIT:
            return (2 * a + b,)
        return (a, b, a)

    def outputs(self) -> tuple:
        k, t = self.kind, self.thicknesses
        if k in (Kind.ID, Kind.AXIS_ID):
            return t
        a, b = t
        if k is Kind.MERGE:
            return (a + b,)
        if k is Kind.SPLIT:
            return (a, b)
        if k is Kind.CROSS:
            return (b, a)
        if k is Kind.AXIS_MERGE:
            return (2 * a + b,)
        return (a, b, a)

    def block(self) -> tuple:
        """Rows are outputs, columns inputs."""
        k, t = self.kind, self.thicknesses
        if k in (Kind.ID, Kind.AXIS_ID):
            return ((t[0],),)
        a, b = t
        if k is Kind.MERGE:
            return ((a, b),)
        if k is Kind.SPLIT:
            return ((a,), (b,))
        if k is Kind.CROSS:
            return ((0, b), (a, 0))
        if k is Kind.AXIS_MERGE:
            return ((a, b, a),)
        if k is Kind.AXIS_SPLIT:
            return ((a,), (b,), (a,))
        return ((0, 0, a), (0, b, 0), (a, 0, 0))

    def __str__(self) -> str:
        return f"{self.kind.value}({','.join(map(str, self.thicknesses))})"


def gen(name: str, *args) -> Generator:
    return Generator(Kind(name), tuple(args))


def _interface(left: tuple, center: tuple, mode) -> Hypercomposition:
    if mode is PLAIN:
        return Hypercomposition(left, PLAIN)
    if not center:
        center = (0,)
    return Hypercomposition(left + center + left[::-1], HYPER)


@dataclass(frozen=True)
class Layer:
    """One horizontal slice: the left half explicitly, the mirror half implied."""

    left: tuple = ()
    axis: Generator | None = None
    mode: SymmetryMode = HYPER

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        for g in self.left:
            if g.on_axis:
                raise DiagramError(f"axis generator {g} placed among the off-axis generators")
        if self.axis is not None:
            if self.mode is PLAIN:
                raise DiagramError("axis generators do not exist in plain mode")
            if not self.axis.on_axis:
                raise DiagramError(f"{self.axis} is not an axis generator")
        if not self.left and self.axis is None:
            raise DiagramError("empty layer")

    def _halves(self, side):
        left = tuple(x for g in self.left for x in getattr(g, side)())
        if self.axis is None:
            return left, ()
        full = getattr(self.axis, side)()
        k = len(full) // 2
        return left + full[:k], (full[k],)

    @property
    def source(self) -> Hypercomposition:
        return _interface(*self._halves("inputs"), self.mode)

    @property
    def target(self) -> Hypercomposition:
        return _interface(*self._halves("outputs"), self.mode)

    def __str__(self) -> str:
        body = ",".join(map(str, self.left))
        if self.axis is None:
            return f"[{body}]"
        if not body:
            return f"[{self.axis}]"
        return f"[{body} | {self.axis}]"


@dataclass(frozen=True)
class Chain:
    coefficient: int
    layers: tuple

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))
        object.__setattr__(self, "coefficient", int(self.coefficient))
        if not self.layers:
            raise DiagramError("a chain needs at least one layer")
        for idx in range(1, len(self.layers)):
            below, above = self.layers[idx - 1].target, self.layers[idx].source
            if below != above:
                raise InterfaceError(
                    f"layer {idx} expects {above} but the layer below produces {below}",
                    idx,
                    below,
                    above,
                )

    @property
    def source(self) -> Hypercomposition:
        return self.layers[0].source

    @property
    def target(self) -> Hypercomposition:
        return self.layers[-1].target

    def body(self) -> str:
        return " ; ".join(map(str, self.layers))


@dataclass(frozen=True)
class DiagramExpr:
    """A formal integer combination of layered diagrams in one Hom space."""

    chains: tuple
    mode: SymmetryMode = HYPER
    source: Hypercomposition | None = field(default=None)
    target: Hypercomposition | None = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "chains", tuple(self.chains))
        if self.chains:
            src, tgt = self.chains[0].source, self.chains[0].target
            for n, ch in enumerate(self.chains[1:], start=1):
                if (ch.source, ch.target) != (src, tgt):
                    raise InterfaceError(
                        f"term {n} maps {ch.source} -> {ch.target}, expected {src} -> {tgt}"
                    )
            if self.source is not None and (self.source, self.target) != (src, tgt):
                raise InterfaceError("declared objects disagree with the chains")
            object.__setattr__(self, "source", src)
            object.__setattr__(self, "target", tgt)
        elif self.source is None or self.target is None:
            raise DiagramError("an empty sum needs explicit source and target")

    @classmethod
    def single(cls, layers, coefficient=1, mode=HYPER) -> "DiagramExpr":
        return cls((Chain(coefficient, tuple(layers)),), SymmetryMode.parse(mode))

    def __add__(self, other: "DiagramExpr") -> "DiagramExpr":
        return DiagramExpr(self.chains + other.chains, self.mode, self.source, self.target)

    def scaled(self, c: int) -> "DiagramExpr":
        chains = tuple(Chain(ch.coefficient * c, ch.layers) for ch in self.chains if ch.coefficient * c)
        return DiagramExpr(chains, self.mode, self.source, self.target)

    def then(self, above: "DiagramExpr") -> "DiagramExpr":
        """Stack ``above`` on top of this expression, expanding bilinearly."""
        chains = tuple(
            Chain(lo.coefficient * hi.coefficient, lo.layers + hi.layers)
            for lo in self.chains
            for hi in above.chains
        )
        return DiagramExpr(chains, self.mode, self.source, above.target)

    def __str__(self) -> str:
        from .syntax import format_expr

        return format_expr(self)

    def to_json(self) -> dict:
        return {
            "mode": self.mode.value,
            "source": list(self.source.parts),
            "target": list(self.target.parts),
            "terms": [
                {
                    "coefficient": ch.coefficient,
                    "layers": [
                        {
                            "left": [str(g) for g in layer.left],
                            "axis": None if layer.axis is None else str(layer.axis),
                        }
                        for layer in ch.layers
                    ],
                }
                for ch in self.chains
            ],
        }
