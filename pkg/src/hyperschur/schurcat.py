"""The hyperoctahedral Schur category: orbit-matrix basis and composition.

A morphism ``mu -> lambda`` is a finite integer combination of orbit matrices
``A`` with row sums ``lambda`` and column sums ``mu`` (180-degree symmetric in
hyper mode).  Composition is computed from structure constants that count
label tuples, so no dense matrix is ever built here.
"""
from __future__ import annotations

import functools
import json
import re
from dataclasses import dataclass
from typing import Iterator, Mapping

from .hypercomb import (
    HYPER,
    PLAIN,
    Hypercomposition,
    LabelTuple,
    SymmetryMode,
    tuple_labels,
)


class CompositionError(ValueError):
    """Raised when the target of one morphism is not the source of the next."""


@dataclass(frozen=True)
class OrbitMatrix:
    """A basis element ``xi_A``; ``entries`` are rows (target blocks) by columns (source blocks)."""

    entries: tuple
    target: Hypercomposition
    source: Hypercomposition

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if self.target.mode is not self.source.mode:
            raise ValueError("source and target live in different modes")
        if len(rows) != self.target.length or any(len(r) != self.source.length for r in rows):
            raise ValueError(f"matrix shape does not match {self.target} x {self.source}")
        if any(x < 0 for r in rows for x in r):
            raise ValueError("orbit matrices have nonnegative entries")
        if tuple(sum(r) for r in rows) != self.target.parts:
            raise ValueError(f"row sums of {rows} are not {self.target}")
        if tuple(sum(c) for c in zip(*rows)) != self.source.parts:
            raise ValueError(f"column sums of {rows} are not {self.source}")
        if self.mode is HYPER and rows != tuple(tuple(reversed(r)) for r in reversed(rows)):
            raise ValueError(f"{rows} is not invariant under 180-degree rotation")

    @classmethod
    def from_rows(cls, rows, mode=HYPER) -> "OrbitMatrix":
        """Build from entries alone; the objects are read off the margins."""
        mode = SymmetryMode.parse(mode)
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        target = Hypercomposition(tuple(sum(r) for r in rows), mode)
        source = Hypercomposition(tuple(sum(c) for c in zip(*rows)), mode)
        return cls(rows, target, source)

    @property
    def mode(self) -> SymmetryMode:
        return self.target.mode

    @property
    def flat(self) -> tuple:
        return tuple(x for r in self.entries for x in r)

    def sort_key(self):
        return self.flat

    def transpose(self) -> "OrbitMatrix":
        return OrbitMatrix(tuple(zip(*self.entries)), self.source, self.target)

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in self.entries) + "]"

    def to_json(self):
        return [list(r) for r in self.entries]


def _bounded_rows(total: int, caps: list, weights: list) -> Iterator[tuple]:
    """Nonnegative vectors summing to ``total`` with ``weights[j]*v[j] <= caps[j]``."""
    k = len(caps)
    cur = [0] * k

    def rec(j, left):
        if j == k - 1:
            if weights[j] * left <= caps[j]:
                cur[j] = left
                yield tuple(cur)
            return
        top = min(left, caps[j] // weights[j])
        for v in range(top + 1):
            cur[j] = v
            yield from rec(j + 1, left - v)

    if k == 0:
        if total == 0:
            yield ()
        return
    yield from rec(0, total)


@functools.lru_cache(maxsize=None)
def _hmat_cached(target: Hypercomposition, source: Hypercomposition) -> tuple:
    if target.mode is not source.mode:
        raise ValueError("source and target live in different modes")
    if target.size != source.size:
        return ()
    R, C = target.length, source.length
    found = []
    if target.mode is PLAIN:
        rows: list = []

        def fill(i, caps):
            if i == R - 1:
                if sum(caps) == target.parts[i]:
                    found.append(tuple(rows) + (tuple(caps),))
                return
            for row in _bounded_rows(target.parts[i], caps, [1] * C):
                rows.append(row)
                fill(i + 1, [c - x for c, x in zip(caps, row)])
                rows.pop()

        fill(0, list(source.parts))
    else:
        half_rows, mid_col = R // 2, C // 2
        rows = []

        # a top-half row r uses column j on both sides of the axis: r[j] + r[C-1-j]
        def fill(i, caps):
            if i == half_rows:
                middle = tuple(caps[min(j, C - 1 - j)] for j in range(C))
                top = tuple(rows)
                bottom = tuple(tuple(reversed(r)) for r in reversed(top))
                found.append(top + (middle,) + bottom)
                return
            for row in _bounded_rows(target.parts[i], _expand(caps, C), [1] * C):
                use = [row[j] + row[C - 1 - j] for j in range(mid_col + 1)]
                if any(u > c for u, c in zip(use, caps)):
                    continue
                rows.append(row)
                fill(i + 1, [c - u for c, u in zip(caps, use)])
                rows.pop()

        fill(0, list(source.parts[: mid_col + 1]))
    mats = [OrbitMatrix(e, target, source) for e in found]
    return tuple(sorted(mats, key=OrbitMatrix.sort_key))


def _expand(half_caps: list, C: int) -> list:
    mid = C // 2
    return [half_caps[min(j, C - 1 - j)] // (2 if j == mid else 1) for j in range(C)]


def enumerate_hmat(target: Hypercomposition, source: Hypercomposition) -> list:
    """The basis of ``Hom(source, target)`` in row-major lexicographic order."""
    return list(_hmat_cached(target, source))


def _raw(t) -> tuple:
    return t.labels if isinstance(t, LabelTuple) else tuple(t)


def pair_counts(i: tuple, j: tuple, rows: int, cols: int) -> tuple:
    """Flat row-major count matrix of label pairs ``(i_d, j_d)``."""
    counts = [0] * (rows * cols)
    for a, b in zip(i, j):
        counts[(a - 1) * cols + (b - 1)] += 1
    return tuple(counts)


def matrix_of_pair(i, j, target: Hypercomposition, source: Hypercomposition) -> OrbitMatrix:
    """The orbit matrix of ``(i, j)`` with ``i`` in ``I_target`` and ``j`` in ``I_source``."""
    flat = pair_counts(_raw(i), _raw(j), target.length, source.length)
    C = source.length
    return OrbitMatrix(tuple(flat[r * C : (r + 1) * C] for r in range(target.length)), target, source)


def canonical_pair(A: OrbitMatrix) -> tuple:
    """Representative ``(i, j)`` of the orbit of ``A``: ``i`` is the base tuple of the target."""
    i, j = [], []
    for r, row in enumerate(A.entries, start=1):
        for c, x in enumerate(row, start=1):
            i.extend([r] * x)
            j.extend([c] * x)
    return tuple(i), tuple(j)


def structure_constant(A: OrbitMatrix, B: OrbitMatrix, C: OrbitMatrix) -> int:
    """Coefficient of ``xi_C`` in ``xi_A . xi_B`` (``A: mu -> lambda``, ``B: nu -> mu``)."""
    if A.source != B.target or C.target != A.target or C.source != B.source:
        raise CompositionError("incompatible objects for a structure constant")
    lam, mu, nu = A.target, A.source, B.source
    i, k = canonical_pair(C)
    fa, fb = A.flat, B.flat
    return sum(
        1
        for j in tuple_labels(mu)
        if pair_counts(i, j, lam.length, mu.length) == fa
        and pair_counts(j, k, mu.length, nu.length) == fb
    )


@dataclass(frozen=True)
class Morphism:
    """A sparse integer combination of orbit matrices, stored in canonical order."""

    source: Hypercomposition
    target: Hypercomposition
    items: tuple = ()

    def __post_init__(self):
        if self.source.mode is not self.target.mode:
            raise ValueError("source and target live in different modes")
        merged: dict = {}
        for A, c in self.items:
            if A.source != self.source or A.target != self.target:
                raise ValueError(f"basis element {A} does not belong to Hom({self.source}, {self.target})")
            merged[A] = merged.get(A, 0) + int(c)
        items = tuple(sorted(((A, c) for A, c in merged.items() if c), key=lambda p: p[0].sort_key()))
        object.__setattr__(self, "items", items)

    @classmethod
    def from_terms(cls, source, target, terms: Mapping) -> "Morphism":
        return cls(source, target, tuple(terms.items()))

    @classmethod
    def basis(cls, A: OrbitMatrix, coefficient: int = 1) -> "Morphism":
        return cls(A.source, A.target, ((A, coefficient),))

    @classmethod
    def zero(cls, source, target) -> "Morphism":
        return cls(source, target, ())

    @property
    def mode(self) -> SymmetryMode:
        return self.source.mode

    @property
    def terms(self) -> dict:
        return dict(self.items)

    def coefficient(self, A: OrbitMatrix) -> int:
        return self.terms.get(A, 0)

    def is_zero(self) -> bool:
        return not self.items

    def _check(self, other: "Morphism"):
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("cannot add morphisms between different objects")

    def __add__(self, other: "Morphism") -> "Morphism":
        self._check(other)
        return Morphism(self.source, self.target, self.items + other.items)

    def __neg__(self) -> "Morphism":
        return Morphism(self.source, self.target, tuple((A, -c) for A, c in self.items))

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + (-other)

    def __mul__(self, scalar: int) -> "Morphism":
        return Morphism(self.source, self.target, tuple((A, c * int(scalar)) for A, c in self.items))

    __rmul__ = __mul__

    def __matmul__(self, other: "Morphism") -> "Morphism":
        """``f @ g`` is ``f`` after ``g``."""
        return compose(self, other)

    def render(self) -> str:
        """``2*[[1,0,0],[0,2,0],[0,0,1]] + [[...]]``; the zero morphism renders as ``0``."""
        if not self.items:
            return "0"
        out = []
        for n, (A, c) in enumerate(self.items):
            body = str(A) if c in (1, -1) else f"{abs(c)}*{A}"
            if n == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __str__(self) -> str:
        return self.render()

    def to_json(self) -> dict:
        return {
            "mode": self.mode.value,
            "source": list(self.source.parts),
            "target": list(self.target.parts),
            "terms": [{"coefficient": c, "matrix": A.to_json()} for A, c in self.items],
        }

    @classmethod
    def from_json(cls, data) -> "Morphism":
        if isinstance(data, str):
            data = json.loads(data)
        mode = SymmetryMode.parse(data.get("mode", "hyper"))
        source = Hypercomposition(tuple(data["source"]), mode)
        target = Hypercomposition(tuple(data["target"]), mode)
        items = tuple((OrbitMatrix(t["matrix"], target, source), t["coefficient"]) for t in data["terms"])
        return cls(source, target, items)


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*)?\s*(\[\s*\[[\d\s,\[\]]*\]\s*\])")


def parse_morphism(text: str, mode=HYPER) -> Morphism:
    """Inverse of ``Morphism.render``; objects are read off the matrix margins."""
    mode = SymmetryMode.parse(mode)
    pos, items, objects = 0, [], None
    text = text.strip()
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or (items and not m.group(1)):
            raise ValueError(f"cannot parse morphism at offset {pos}: {text[pos:pos + 20]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = sign * int(m.group(2) or 1)
        A = OrbitMatrix.from_rows(json.loads(m.group(3)), mode)
        if objects is None:
            objects = (A.source, A.target)
        elif objects != (A.source, A.target):
            raise ValueError("terms of a morphism must share source and target")
        items.append((A, coeff))
        pos = m.end()
    if not items:
        raise ValueError("empty morphism")
    return Morphism(objects[0], objects[1], tuple(items))


def identity_morphism(lam: Hypercomposition) -> Morphism:
    diag = tuple(tuple(p if r == c else 0 for c in range(lam.length)) for r, p in enumerate(lam.parts))
    return Morphism.basis(OrbitMatrix(diag, lam, lam))


@functools.lru_cache(maxsize=8192)
def compose(f: Morphism, g: Morphism) -> Morphism:
    """``f`` after ``g``; bilinear in both arguments."""
    if g.target != f.source:
        raise CompositionError(f"cannot compose: target {g.target} is not source {f.source}")
    lam, mu, nu = f.target, f.source, g.source
    if f.is_zero() or g.is_zero() or lam.size != nu.size:
        return Morphism.zero(nu, lam)
    fmap = {A.flat: c for A, c in f.items}
    gmap = {B.flat: c for B, c in g.items}
    L, M, N = lam.length, mu.length, nu.length
    # every canonical pair shares the same first tuple, so the j's that can
    # contribute are fixed up front
    base = canonical_pair(next(iter(_hmat_cached(lam, nu))))[0]
    linked = []
    for j in tuple_labels(mu):
        a = fmap.get(pair_counts(base, j, L, M))
        if a is not None:
            linked.append((j, a))
    out = []
    for C in _hmat_cached(lam, nu):
        k = canonical_pair(C)[1]
        total = 0
        for j, a in linked:
            b = gmap.get(pair_counts(j, k, M, N))
            if b is not None:
                total += a * b
        if total:
            out.append((C, total))
    return Morphism(nu, lam, tuple(out))
