"""Independent dense check of composition.

Each basis element is realised as its 0/1 matrix on the label-tuple bases
(rows indexed by target tuples, columns by source tuples), products are plain
matrix products, and results are read back into the orbit basis.
"""
from __future__ import annotations

import functools
import random
from dataclasses import dataclass

import numpy as np

from .hypercomb import Hypercomposition, enumerate_hypercompositions, tuple_labels
from .schurcat import (
    CompositionError,
    Morphism,
    OrbitMatrix,
    canonical_pair,
    compose,
    enumerate_hmat,
    pair_counts,
)


class NotInSpanError(ValueError):
    """The dense matrix is not an integer combination of orbit-matrix indicators."""


_INT64_SAFE = 2**62


@dataclass(frozen=True)
class DenseMatrix:
    target: Hypercomposition
    source: Hypercomposition
    data: np.ndarray

    @property
    def row_labels(self) -> tuple:
        return tuple_labels(self.target)

    @property
    def col_labels(self) -> tuple:
        return tuple_labels(self.source)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DenseMatrix)
            and (self.target, self.source) == (other.target, other.source)
            and np.array_equal(self.data, other.data)
        )

    def __add__(self, other: "DenseMatrix") -> "DenseMatrix":
        return DenseMatrix(self.target, self.source, _exact(self.data) + _exact(other.data))

    def scaled(self, c: int) -> "DenseMatrix":
        return DenseMatrix(self.target, self.source, _exact(self.data) * int(c))

    def to_json(self) -> dict:
        return {
            "target": list(self.target.parts),
            "source": list(self.source.parts),
            "rows": [list(r) for r in self.row_labels],
            "cols": [list(c) for c in self.col_labels],
            "data": [[int(x) for x in row] for row in self.data.tolist()],
        }


def _exact(a: np.ndarray) -> np.ndarray:
    return a.astype(object) if a.dtype != object else a


def zeros(target: Hypercomposition, source: Hypercomposition) -> DenseMatrix:
    shape = (len(tuple_labels(target)), len(tuple_labels(source)))
    return DenseMatrix(target, source, np.zeros(shape, dtype=np.int64))


@functools.lru_cache(maxsize=4096)
def dense_of(A: OrbitMatrix) -> DenseMatrix:
    """The indicator matrix ``E_A``."""
    rows, cols = tuple_labels(A.target), tuple_labels(A.source)
    key = A.flat
    R, C = A.target.length, A.source.length
    data = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for r, i in enumerate(rows):
        for c, j in enumerate(cols):
            if pair_counts(i, j, R, C) == key:
                data[r, c] = 1
    data.setflags(write=False)  # shared through the cache
    return DenseMatrix(A.target, A.source, data)


def dense_of_morphism(f: Morphism) -> DenseMatrix:
    out = zeros(f.target, f.source)
    for A, c in f.items:
        out = out + dense_of(A).scaled(c)
    return out


def _bound(a: np.ndarray) -> int:
    return int(max((abs(int(x)) for x in a.flat), default=0))


def multiply(E: DenseMatrix, F: DenseMatrix) -> DenseMatrix:
    """``E F`` with exact integers; falls back to Python ints when int64 could overflow."""
    if E.source != F.target:
        raise CompositionError(f"cannot multiply: {E.source} is not {F.target}")
    inner = E.data.shape[1]
    if _bound(E.data) * _bound(F.data) * max(inner, 1) < _INT64_SAFE:
        data = E.data.astype(np.int64) @ F.data.astype(np.int64)
    else:
        data = _exact(E.data).dot(_exact(F.data))
    return DenseMatrix(E.target, F.source, data)


def decompose(E: DenseMatrix) -> Morphism:
    """Read ``E`` in the orbit basis, or raise ``NotInSpanError``."""
    rows = {t: r for r, t in enumerate(tuple_labels(E.target))}
    cols = {t: c for c, t in enumerate(tuple_labels(E.source))}
    items = []
    for A in enumerate_hmat(E.target, E.source):
        i, j = canonical_pair(A)
        c = int(E.data[rows[i], cols[j]])
        if c:
            items.append((A, c))
    f = Morphism(E.source, E.target, tuple(items))
    if not np.array_equal(_exact(dense_of_morphism(f).data), _exact(E.data)):
        raise NotInSpanError("dense matrix is not constant on orbits")
    return f


def oracle_compose(f: Morphism, g: Morphism) -> Morphism:
    """``f`` after ``g`` computed densely."""
    if g.target != f.source:
        raise CompositionError(f"cannot compose: target {g.target} is not source {f.source}")
    if f.target.size != g.source.size:
        return Morphism.zero(g.source, f.target)
    return decompose(multiply(dense_of_morphism(f), dense_of_morphism(g)))


def composable_pairs(n: int, mode):
    """Every ``(A, B)`` with ``A: mu -> lambda`` and ``B: nu -> mu`` at degree ``n``."""
    objs = enumerate_hypercompositions(n, mode)
    for lam in objs:
        for mu in objs:
            for nu in objs:
                for A in enumerate_hmat(lam, mu):
                    for B in enumerate_hmat(mu, nu):
                        yield A, B


def sample_pairs(n: int, mode, samples: int, seed: int):
    """``samples`` composable basis pairs drawn uniformly by object triple, then by basis element."""
    rng = random.Random(seed)
    objs = enumerate_hypercompositions(n, mode)
    for _ in range(samples):
        lam, mu, nu = (rng.choice(objs) for _ in range(3))
        yield rng.choice(enumerate_hmat(lam, mu)), rng.choice(enumerate_hmat(mu, nu))


def oracle_sweep(pairs) -> list:
    """``(A, B, ok)`` for each pair, comparing structure constants with dense products."""
    out = []
    for A, B in pairs:
        f, g = Morphism.basis(A), Morphism.basis(B)
        out.append((A, B, compose(f, g) == oracle_compose(f, g)))
    return out
