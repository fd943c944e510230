"""KU-valued functions, their cut sets and the induced equivalence on X.

A KU-function sends each label of a finite domain to an element of a
KU-algebra.  Its q-cut is the set of domain positions ``i`` with
``q * f(i) == 0``, i.e. ``f(i) <= q``.  Passing ``literal=True`` to the cut
helpers swaps the operands (``f(i) * q == 0``) for comparison.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .core import KUAlgebra, infimum
from .errors import MalformedTable, OutOfRange, RepresentationFailure


class KUFunction:
    """A map from ``labels`` (the domain) into ``algebra``."""

    def __init__(self, algebra: KUAlgebra, labels: Sequence[str], image: Sequence[int]):
        labels = tuple(str(s) for s in labels)
        image = tuple(int(v) for v in image)
        if len(labels) != len(image):
            raise MalformedTable("one image element is required per domain label")
        if len(set(labels)) != len(labels):
            raise MalformedTable("domain labels must be distinct")
        for v in image:
            if not 0 <= v < algebra.order:
                raise OutOfRange(f"image element {v} is not in [0, {algebra.order - 1}]")
        self.algebra = algebra
        self.labels = labels
        self.image = image

    @classmethod
    def identity(cls, algebra: KUAlgebra) -> "KUFunction":
        return cls(algebra, algebra.names, range(algebra.order))

    @classmethod
    def from_mapping(cls, algebra: KUAlgebra, mapping: dict) -> "KUFunction":
        """Build from ``{label: element name or index}``, keeping key order."""
        image = [v if isinstance(v, int) else algebra.index(v) for v in mapping.values()]
        return cls(algebra, list(mapping), image)

    @property
    def size(self) -> int:
        return len(self.labels)

    @cached_property
    def image_set(self) -> frozenset[int]:
        return frozenset(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def __eq__(self, other):
        return (
            isinstance(other, KUFunction)
            and self.algebra == other.algebra
            and self.labels == other.labels
            and self.image == other.image
        )

    def __hash__(self):
        return hash((self.algebra, self.labels, self.image))

    def __repr__(self):
        pairs = ", ".join(f"{l}->{self.algebra.names[v]}" for l, v in zip(self.labels, self.image))
        return f"KUFunction({pairs})"

    def label_set(self, positions) -> frozenset[str]:
        return frozenset(self.labels[i] for i in positions)

    @cached_property
    def _bits(self) -> np.ndarray:
        return _cut_bits(self, literal=False)


def _cut_bits(f: KUFunction, literal: bool) -> np.ndarray:
    T = f.algebra.table
    img = np.asarray(f.image, dtype=np.int64)
    if literal:
        bits = T[img].T == 0  # row q, column i: f(i) * q
    else:
        bits = T[:, img] == 0  # row q, column i: q * f(i)
    bits = bits.astype(np.uint8)
    bits.setflags(write=False)
    return bits


@dataclass(frozen=True, eq=False)
class CutMatrix:
    """``bits[q, i] == 1`` iff position ``i`` lies in the q-cut."""

    function: KUFunction
    bits: np.ndarray

    def row(self, q: int) -> frozenset[int]:
        return frozenset(int(i) for i in np.flatnonzero(self.bits[q]))

    def word(self, q: int) -> str:
        return "".join(str(int(b)) for b in self.bits[q])

    def rows(self) -> list[frozenset[int]]:
        return [self.row(q) for q in range(self.bits.shape[0])]

    def words(self) -> list[str]:
        return [self.word(q) for q in range(self.bits.shape[0])]

    def to_text(self) -> str:
        f = self.function
        width = max(len(s) for s in f.algebra.names)
        head = " " * width + " " + " ".join(f.labels)
        lines = [head]
        for q, name in enumerate(f.algebra.names):
            cells = " ".join(str(int(b)).rjust(len(l)) for b, l in zip(self.bits[q], f.labels))
            lines.append(f"{name.rjust(width)} {cells}")
        return "\n".join(lines)


def cut_set(f: KUFunction, q: int, literal: bool = False) -> frozenset[int]:
    """Positions ``i`` with ``f(i) <= q``."""
    f.algebra._check_element(q)
    if literal:
        return frozenset(int(i) for i in np.flatnonzero(_cut_bits(f, True)[q]))
    return frozenset(int(i) for i in np.flatnonzero(f._bits[q]))


def cut_matrix(f: KUFunction, literal: bool = False) -> CutMatrix:
    return CutMatrix(f, _cut_bits(f, True) if literal else f._bits)


def infimum_representation(f: KUFunction, i: int) -> int:
    """Recover ``f(i)`` as the infimum of ``{q : i in cut(q)}``."""
    if not 0 <= i < f.size:
        raise OutOfRange(f"position {i} is not in [0, {f.size - 1}]")
    qs = [int(q) for q in np.flatnonzero(f._bits[:, i])]
    inf = infimum(f.algebra, qs) if qs else None
    if inf != f.image[i]:
        raise RepresentationFailure(
            f"infimum of the cuts containing {f.labels[i]!r} is {inf}, expected {f.image[i]}"
        )
    return inf


def principal_downset(X: KUAlgebra, q: int) -> frozenset[int]:
    """``{x : q * x == 0}``, the elements below ``q``."""
    X._check_element(q)
    return frozenset(int(x) for x in np.flatnonzero(X.table[q] == 0))


@dataclass(frozen=True)
class ThetaPartition:
    classes: tuple[tuple[int, ...], ...]

    def class_of(self, q: int) -> tuple[int, ...]:
        for c in self.classes:
            if q in c:
                return c
        raise OutOfRange(f"element {q} is not partitioned")

    def __len__(self):
        return len(self.classes)


def theta_partition(f: KUFunction) -> ThetaPartition:
    """Group elements whose cut rows coincide.

    Classes are ordered by their smallest index.  Every class that contains
    an image point ``f(x)`` is checked to have ``f(x)`` as its least element.
    """
    bits = f._bits
    groups: dict[bytes, list[int]] = {}
    for q in range(bits.shape[0]):
        groups.setdefault(bits[q].tobytes(), []).append(q)
    classes = tuple(tuple(g) for g in sorted(groups.values(), key=lambda g: g[0]))
    leq = f.algebra.natural_order.leq
    for c in classes:
        for p in f.image_set.intersection(c):
            if not all(leq[p, q] for q in c):
                raise RepresentationFailure(
                    f"image point {p} is not the least element of its class {c}"
                )
    return ThetaPartition(classes)


def class_minimum(X: KUAlgebra, cls: Sequence[int]) -> int | None:
    leq = X.natural_order.leq
    for p in cls:
        if all(leq[p, q] for q in cls):
            return p
    return None
