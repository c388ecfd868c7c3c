"""Hypercompositions, label tuples and the hyperoctahedral group acting on them.

Everything here works in one of two symmetry modes.  In ``HYPER`` mode the
objects are hypercompositions (odd-length palindromes summing to ``2n``) and
the group is ``H_n`` realised inside ``S_{2n}`` as the permutations commuting
with the flip ``i -> 2n+1-i``.  In ``PLAIN`` mode the objects are ordinary
compositions of ``n`` and the group is ``S_n``; all symmetry checks are off.
"""
from __future__ import annotations

import enum
import itertools
import math
import os
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

DEFAULT_GROUP_CAP = 10**6


def group_cap() -> int:
    """Exhaustive group enumeration cap (``HYPERSCHUR_GROUP_CAP`` overrides)."""
    return int(os.environ.get("HYPERSCHUR_GROUP_CAP", DEFAULT_GROUP_CAP))


class SymmetryMode(enum.Enum):
    HYPER = "hyper"
    PLAIN = "plain"

    @classmethod
    def parse(cls, value) -> "SymmetryMode":
        if isinstance(value, cls):
            return value
        return cls(str(value).lower())


HYPER = SymmetryMode.HYPER
PLAIN = SymmetryMode.PLAIN


@dataclass(frozen=True)
class Hypercomposition:
    """An object of the Schur/web categories.

    ``parts`` are block thicknesses.  In hyper mode a zero middle part is
    stored explicitly, so ``(2, 2)`` must be written ``(2, 0, 2)``.
    """

    parts: tuple
    mode: SymmetryMode = HYPER

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("empty composition")
        if self.mode is PLAIN:
            if any(p < 1 for p in parts):
                raise ValueError(f"composition parts must be positive: {parts}")
            return
        k = len(parts)
        if k % 2 == 0:
            raise ValueError(f"hypercomposition must have odd length: {parts}")
        if parts != parts[::-1]:
            raise ValueError(f"hypercomposition must be a palindrome: {parts}")
        mid = k // 2
        if parts[mid] % 2 or parts[mid] < 0:
            raise ValueError(f"middle part must be even and >= 0: {parts}")
        if any(p < 1 for i, p in enumerate(parts) if i != mid):
            raise ValueError(f"off-axis parts must be positive: {parts}")
        if sum(parts) == 0:
            raise ValueError("hypercomposition of degree 0")

    @classmethod
    def parse(cls, text: str, mode=HYPER) -> "Hypercomposition":
        """Read ``"(1,2,1)"`` (parentheses optional)."""
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        if not re.fullmatch(r"\s*\d+(\s*,\s*\d+)*\s*,?\s*", body):
            raise ValueError(f"cannot parse composition {text!r}")
        return cls(tuple(int(x) for x in body.split(",") if x.strip()), SymmetryMode.parse(mode))

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        """Length ``m`` of the label tuples (``2n`` or ``n``)."""
        return sum(self.parts)

    @property
    def degree(self) -> int:
        return self.size // 2 if self.mode is HYPER else self.size

    @property
    def middle(self) -> int:
        return self.length // 2

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def __repr__(self) -> str:
        suffix = "" if self.mode is HYPER else ", PLAIN"
        return f"Hypercomposition({self.parts}{suffix})"

    def sort_key(self):
        return (self.length, self.parts)


def _compositions(total: int) -> Iterator[tuple]:
    """Compositions of ``total`` into positive parts (including the empty one)."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def enumerate_hypercompositions(n: int, mode=HYPER) -> list:
    """All objects of degree ``n``, ordered shortest first then lexicographically."""
    mode = SymmetryMode.parse(mode)
    if n < 1:
        raise ValueError("degree must be positive")
    found = []
    if mode is PLAIN:
        for parts in _compositions(n):
            found.append(Hypercomposition(parts, PLAIN))
    else:
        for c in range(n + 1):
            for half in _compositions(n - c):
                found.append(Hypercomposition(half + (2 * c,) + half[::-1], HYPER))
    return sorted(found, key=Hypercomposition.sort_key)


def labelling_function(lam: Hypercomposition, position: int) -> int:
    """Block index (1-based) containing ``position`` (1-based); empty blocks are skipped."""
    if not 1 <= position <= lam.size:
        raise ValueError(f"position {position} out of range 1..{lam.size}")
    upto = 0
    for j, part in enumerate(lam.parts, start=1):
        upto += part
        if position <= upto:
            return j
    raise AssertionError("unreachable")


def base_tuple(lam: Hypercomposition) -> tuple:
    return tuple(j for j, part in enumerate(lam.parts, start=1) for _ in range(part))


@dataclass(frozen=True)
class LabelTuple:
    """An element of ``I_lambda``."""

    labels: tuple
    shape: Hypercomposition

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if not is_label_tuple(self.labels, self.shape):
            raise ValueError(f"{self.labels} is not in I_{self.shape}")

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.labels)) + ")"

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)


def is_label_tuple(labels: Sequence[int], lam: Hypercomposition) -> bool:
    if len(labels) != lam.size:
        return False
    counts = [0] * (lam.length + 1)
    for x in labels:
        if not 1 <= x <= lam.length:
            return False
        counts[x] += 1
    if counts[1:] != list(lam.parts):
        return False
    if lam.mode is HYPER:
        m, ell = lam.size, lam.length
        return all(labels[d] + labels[m - 1 - d] == ell + 1 for d in range(m))
    return True


_tuple_cache: dict = {}


def tuple_labels(lam: Hypercomposition) -> tuple:
    """Raw label tuples of ``I_lambda`` in ascending lexicographic order (cached)."""
    hit = _tuple_cache.get(lam)
    if hit is not None:
        return hit
    ell = lam.length
    remaining = [0] + list(lam.parts)
    out = []
    if lam.mode is PLAIN:
        m = lam.size
        cur = []

        def fill():
            if len(cur) == m:
                out.append(tuple(cur))
                return
            for x in range(1, ell + 1):
                if remaining[x]:
                    remaining[x] -= 1
                    cur.append(x)
                    fill()
                    cur.pop()
                    remaining[x] += 1

        fill()
    else:
        half = lam.size // 2
        cur = []

        # choosing label x at position d forces ell+1-x at the mirrored position
        def fill():
            if len(cur) == half:
                out.append(tuple(cur) + tuple(ell + 1 - x for x in reversed(cur)))
                return
            for x in range(1, ell + 1):
                partner = ell + 1 - x
                need = 2 if partner == x else 1
                if remaining[x] >= need and remaining[partner] >= 1:
                    remaining[x] -= 1
                    remaining[partner] -= 1
                    cur.append(x)
                    fill()
                    cur.pop()
                    remaining[x] += 1
                    remaining[partner] += 1

        fill()
    result = tuple(out)
    _tuple_cache[lam] = result
    return result


def enumerate_tuples(lam: Hypercomposition, mode=None) -> list:
    """``I_lambda`` as ``LabelTuple`` values, ascending lexicographic; the base tuple comes first."""
    if mode is not None and SymmetryMode.parse(mode) is not lam.mode:
        raise ValueError(f"{lam!r} is not a {SymmetryMode.parse(mode).value} object")
    return [LabelTuple(t, lam) for t in tuple_labels(lam)]


@dataclass(frozen=True)
class GroupElement:
    """A permutation in one-line notation: ``images[i-1] = w(i)``."""

    images: tuple
    mode: SymmetryMode = HYPER

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        m = len(images)
        if sorted(images) != list(range(1, m + 1)):
            raise ValueError(f"{images} is not a permutation")
        if self.mode is HYPER:
            if m % 2:
                raise ValueError("hyperoctahedral elements act on an even number of points")
            if any(images[m - 1 - i] != m + 1 - images[i] for i in range(m)):
                raise ValueError(f"{images} does not commute with the flip")

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self):
        return len(self.images)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        """``(g * h)(i) = g(h(i))``."""
        if len(self) != len(other):
            raise ValueError("length mismatch")
        return GroupElement(tuple(self.images[h - 1] for h in other.images), self.mode)

    def inverse(self) -> "GroupElement":
        inv = [0] * len(self.images)
        for i, w in enumerate(self.images, start=1):
            inv[w - 1] = i
        return GroupElement(tuple(inv), self.mode)

    @classmethod
    def identity(cls, m: int, mode=HYPER) -> "GroupElement":
        return cls(tuple(range(1, m + 1)), SymmetryMode.parse(mode))

    @classmethod
    def generator(cls, i: int, n: int, mode=HYPER) -> "GroupElement":
        """``sigma_i``; in hyper mode ``sigma_i`` (i<n) is the symmetric pair of swaps and ``sigma_n`` the middle swap."""
        mode = SymmetryMode.parse(mode)
        m = 2 * n if mode is HYPER else n
        w = list(range(1, m + 1))

        def swap(p):
            w[p - 1], w[p] = w[p], w[p - 1]

        if mode is PLAIN:
            if not 1 <= i < n:
                raise ValueError(f"S_{n} has generators 1..{n - 1}")
            swap(i)
        else:
            if not 1 <= i <= n:
                raise ValueError(f"H_{n} has generators 1..{n}")
            if i == n:
                swap(n)
            else:
                swap(i)
                swap(m - i)
        return cls(tuple(w), mode)


def group_order(n: int, mode=HYPER) -> int:
    mode = SymmetryMode.parse(mode)
    return (2**n if mode is HYPER else 1) * math.factorial(n)


def group_elements(n: int, mode=HYPER, cap: int | None = None) -> Iterator[GroupElement]:
    """Every element of ``H_n`` (or ``S_n``) exactly once."""
    mode = SymmetryMode.parse(mode)
    cap = group_cap() if cap is None else cap
    if group_order(n, mode) > cap:
        raise ValueError(f"group of order {group_order(n, mode)} exceeds enumeration cap {cap}")
    if mode is PLAIN:
        for perm in itertools.permutations(range(1, n + 1)):
            yield GroupElement(perm, PLAIN)
        return
    m = 2 * n
    for perm in itertools.permutations(range(1, n + 1)):
        for flips in itertools.product((False, True), repeat=n):
            left = [m + 1 - p if f else p for p, f in zip(perm, flips)]
            yield GroupElement(tuple(left) + tuple(m + 1 - x for x in reversed(left)), HYPER)


def act(g: GroupElement, t):
    """``(g . t)_r = t_{g^{-1}(r)}``; accepts a ``LabelTuple`` or a raw tuple."""
    labels = t.labels if isinstance(t, LabelTuple) else tuple(t)
    if len(labels) != len(g):
        raise ValueError(f"length mismatch: group acts on {len(g)} points, tuple has {len(labels)}")
    out = [0] * len(labels)
    for d, w in enumerate(g.images):
        out[w - 1] = labels[d]
    if isinstance(t, LabelTuple):
        return LabelTuple(tuple(out), t.shape)
    return tuple(out)


def stabilizer_order(lam: Hypercomposition) -> int:
    """Order of the parabolic subgroup fixing the blocks of ``lam``."""
    if lam.mode is PLAIN:
        return math.prod(math.factorial(p) for p in lam.parts)
    c = lam.parts[lam.middle] // 2
    off = math.prod(math.factorial(p) for p in lam.parts[: lam.middle])
    return off * 2**c * math.factorial(c)
