"""Evaluation of diagrams in the Schur category and reduced chicken-foot diagrams."""
from __future__ import annotations

import functools

from ..hypercomb import HYPER, PLAIN
from ..schurcat import Morphism, OrbitMatrix, compose
from .diagram import Chain, DiagramExpr, Generator, Kind, Layer


def _block_diag(blocks) -> tuple:
    R = sum(len(b) for b in blocks)
    C = sum(len(b[0]) for b in blocks)
    out = [[0] * C for _ in range(R)]
    r0 = c0 = 0
    for b in blocks:
        for r, row in enumerate(b):
            out[r0 + r][c0 : c0 + len(row)] = row
        r0, c0 = r0 + len(b), c0 + len(b[0])
    return tuple(tuple(r) for r in out)


def _rot180(block) -> tuple:
    return tuple(tuple(reversed(r)) for r in reversed(block))


@functools.lru_cache(maxsize=None)
def layer_matrix(layer: Layer) -> OrbitMatrix:
    """The orbit matrix of a layer: left blocks, centre block, rotated mirror blocks."""
    left = [g.block() for g in layer.left]
    if layer.mode is PLAIN:
        blocks = left
    else:
        center = layer.axis.block() if layer.axis is not None else ((0,),)
        blocks = left + [center] + [_rot180(b) for b in reversed(left)]
    return OrbitMatrix(_block_diag(blocks), layer.target, layer.source)


@functools.lru_cache(maxsize=None)
def _phi_layers(layers: tuple) -> Morphism:
    if len(layers) == 1:
        return Morphism.basis(layer_matrix(layers[0]))
    # fold bottom-to-top; caching prefixes helps sums that share a common start
    return compose(Morphism.basis(layer_matrix(layers[-1])), _phi_layers(layers[:-1]))


def phi_chain(chain: Chain) -> Morphism:
    return _phi_layers(chain.layers) * chain.coefficient


def phi(d: DiagramExpr) -> Morphism:
    total = Morphism.zero(d.source, d.target)
    for ch in d.chains:
        total = total + phi_chain(ch)
    return total


class _Strands:
    """Running interface while emitting layers; ``left`` is the left half, ``center`` the axis strand."""

    def __init__(self, left, center, mode):
        self.left = list(left)
        self.center = center
        self.mode = mode
        self.layers = []

    def emit(self, ops: dict, axis: Generator | None = None):
        """``ops`` maps a left index to a generator consuming one (or two, for m/x) strands."""
        gens, new_left, k = [], [], 0
        while k < len(self.left):
            g = ops.get(k)
            if g is None:
                gens.append(Generator(Kind.ID, (self.left[k],)))
                new_left.append(self.left[k])
                k += 1
                continue
            gens.append(g)
            new_left.extend(g.outputs())
            k += len(g.inputs())
        if axis is None and self.center:
            axis = Generator(Kind.AXIS_ID, (self.center,))
        if axis is not None:
            out = axis.outputs()
            h = len(out) // 2
            # axis generators touch the innermost left strand, which is not in ``gens``
            if len(axis.inputs()) == 3:
                gens.pop()
                new_left.pop()
            new_left.extend(out[:h])
            self.center = out[h]
        self.left = new_left
        self.layers.append(Layer(tuple(gens), axis, self.mode))

    def identity_layer(self):
        self.emit({})


def reduced_cfd(A: OrbitMatrix) -> DiagramExpr:
    """The reduced chicken-foot diagram ``[A]``: splits, then crossings, then merges."""
    mode = A.mode
    rows = A.entries
    R, C = len(rows), len(rows[0])
    cols = [[rows[r][c] for r in range(R)] for c in range(C)]
    if mode is HYPER:
        mr, mc = R // 2, C // 2
        src_left = list(A.source.parts[:mc])
        st = _Strands(src_left, A.source.parts[mc], mode)
        half_cols = mc
    else:
        st = _Strands(list(A.source.parts), 0, mode)
        half_cols = C

    # split stage: column j splits into its nonzero entries, top to bottom
    pending = [[x for x in cols[j] if x] for j in range(half_cols)]
    groups = [list(p) for p in pending]  # each left strand carries its remaining pieces
    axis_pieces = []
    if mode is HYPER:
        mid_col = cols[mc]
        axis_pieces = [x for x in mid_col[:mr] if x]  # outer pieces peeled first
    while any(len(g) > 1 for g in groups) or axis_pieces:
        ops, new_groups, pos = {}, [], 0
        for g in groups:
            if len(g) > 1:
                ops[pos] = Generator(Kind.SPLIT, (sum(g[:-1]), g[-1]))
                new_groups.extend([g[:-1], g[-1:]])
            else:
                new_groups.append(g)
            pos += 1
        axis = None
        if axis_pieces:
            piece = axis_pieces.pop(0)
            axis = Generator(Kind.AXIS_SPLIT, (piece, st.center - 2 * piece))
            new_groups.append([piece])
        st.emit(ops, axis)
        groups = new_groups

    # crossing stage: strands are nonzero cells, sorted from column-major to row-major reading
    if mode is HYPER:
        col_major = [(r, c) for c in range(C) for r in range(R) if rows[r][c]]
        row_major = [(r, c) for r in range(R) for c in range(C) if rows[r][c]]
        centre = (mr, mc)
        N = len(col_major) // 2
        if not rows[mr][mc]:
            col_major.insert(N, centre)
            row_major.insert(N, centre)
        rank = {cell: p for p, cell in enumerate(row_major)}
        t = [rank[cell] for cell in col_major]
        thick = [rows[r][c] for r, c in col_major]
        while True:
            p = next((p for p in range(N - 1) if t[p] > t[p + 1]), None)
            if p is not None:
                st.emit({p: Generator(Kind.CROSS, (thick[p], thick[p + 1]))})
                for a, b in ((p, p + 1), (2 * N - p, 2 * N - p - 1)):
                    t[a], t[b] = t[b], t[a]
                    thick[a], thick[b] = thick[b], thick[a]
                continue
            if N >= 1 and t[N - 1] > t[N + 1]:
                st.emit({}, Generator(Kind.AXIS_CROSS, (thick[N - 1], thick[N])))
                t[N - 1], t[N + 1] = t[N + 1], t[N - 1]
                continue
            break
    else:
        col_major = [(r, c) for c in range(C) for r in range(R) if rows[r][c]]
        row_major = [(r, c) for r in range(R) for c in range(C) if rows[r][c]]
        rank = {cell: p for p, cell in enumerate(row_major)}
        t = [rank[cell] for cell in col_major]
        thick = [rows[r][c] for r, c in col_major]
        while True:
            p = next((p for p in range(len(t) - 1) if t[p] > t[p + 1]), None)
            if p is None:
                break
            st.emit({p: Generator(Kind.CROSS, (thick[p], thick[p + 1]))})
            t[p], t[p + 1] = t[p + 1], t[p]
            thick[p], thick[p + 1] = thick[p + 1], thick[p]

    # merge stage: each row merges left-nested; the middle row folds into the axis innermost first
    half_rows = R // 2 if mode is HYPER else R
    groups = [[x for x in rows[r][: (C // 2 if mode is HYPER and r == R // 2 else C)] if x] for r in range(half_rows)]
    axis_pieces = []
    if mode is HYPER:
        axis_pieces = [x for x in rows[mr][:mc] if x]
        groups.append(list(axis_pieces))
    while True:
        ops, new_groups, pos, axis = {}, [], 0, None
        for n, g in enumerate(groups):
            is_axis_group = mode is HYPER and n == len(groups) - 1
            if is_axis_group:
                new_groups.append(g)
                pos += len(g)
                continue
            if len(g) > 1:
                ops[pos] = Generator(Kind.MERGE, (g[0], g[1]))
                new_groups.append([g[0] + g[1]] + g[2:])
            else:
                new_groups.append(g)
            pos += len(g)
        if mode is HYPER and groups[-1]:
            piece = groups[-1][-1]
            axis = Generator(Kind.AXIS_MERGE, (piece, st.center))
            new_groups[-1] = groups[-1][:-1]
        if not ops and axis is None:
            break
        st.emit(ops, axis)
        groups = new_groups

    if not st.layers:
        st.identity_layer()
    return DiagramExpr.single(st.layers, 1, mode)


def normalize(d: DiagramExpr) -> DiagramExpr:
    """Rewrite ``d`` as an integer combination of reduced chicken-foot diagrams."""
    value = phi(d)
    chains = []
    for A, c in value.items:
        chains.append(Chain(c, reduced_cfd(A).chains[0].layers))
    return DiagramExpr(tuple(chains), d.mode, d.source, d.target)
