"""Binary block codes generated by KU-functions, and Hasse diagram export."""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .core import KUAlgebra, OrderRelation
from .errors import DuplicateWord, EmptyCode, LengthMismatch, ParseError
from .function import KUFunction, class_minimum, theta_partition


class BlockCode:
    """An ordered, duplicate-free collection of equal-length binary words."""

    def __init__(self, words: Sequence[str], labels: Sequence[str] | None = None):
        words = tuple(str(w) for w in words)
        if not words:
            raise EmptyCode("a block code needs at least one word")
        length = len(words[0])
        seen = set()
        for k, w in enumerate(words):
            if len(w) != length:
                raise LengthMismatch(f"word {k} ({w!r}) has length {len(w)}, expected {length}")
            if set(w) - {"0", "1"}:
                raise ParseError("code word", f"word {w!r} has characters other than 0/1")
            if w in seen:
                raise DuplicateWord(f"word {w!r} occurs more than once")
            seen.add(w)
        if labels is not None:
            labels = tuple(None if l is None else str(l) for l in labels)
            if len(labels) != len(words):
                raise LengthMismatch("one label per word is required")
        self.words = words
        self.labels = labels
        self.length = length

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w):
        return w in self.words

    def __eq__(self, other):
        return isinstance(other, BlockCode) and self.words == other.words

    def __hash__(self):
        return hash(self.words)

    def __repr__(self):
        return f"BlockCode({list(self.words)})"

    def as_set(self) -> frozenset[str]:
        return frozenset(self.words)

    def as_array(self) -> np.ndarray:
        return np.array([[int(c) for c in w] for w in self.words], dtype=np.uint8)

    def order(self) -> OrderRelation:
        """The bitwise order on the words, as an OrderRelation."""
        A = self.as_array().astype(bool)
        leq = ~(A[:, None, :] & ~A[None, :, :]).any(axis=2)
        return OrderRelation(leq, names=self.words)


def codeword_leq(u: str, v: str) -> bool:
    if len(u) != len(v):
        raise LengthMismatch(f"cannot compare words of lengths {len(u)} and {len(v)}")
    return all(a <= b for a, b in zip(u, v))


def generate_code(f: KUFunction, per_element: bool = False) -> BlockCode:
    """Distinct cut rows of ``f``, one word per equivalence class.

    Words are taken in element-index order; bit ``i`` of the word for ``q``
    is 1 iff ``f(i) <= q``.  A class is labelled by its least element when
    it has one.  With ``per_element=True`` every element contributes its own
    labelled row (rows may then repeat, so the result is a plain list).
    """
    X = f.algebra
    rows = ["".join(map(str, r)) for r in f._bits.tolist()]
    if per_element:
        return [(X.names[q], rows[q]) for q in range(X.order)]
    words, labels = [], []
    for cls in theta_partition(f).classes:
        words.append(rows[cls[0]])
        least = class_minimum(X, cls)
        labels.append(None if least is None else X.names[least])
    return BlockCode(words, labels)


def verify_order_isomorphism(X: KUAlgebra):
    """Check that ``q -> word(q)`` is an order isomorphism onto the code.

    Returns ``(holds, mapping)`` with ``mapping`` from element names to words.
    """
    f = KUFunction.identity(X)
    code = generate_code(f)
    rows = ["".join(map(str, r)) for r in f._bits.tolist()]
    mapping = {X.names[q]: rows[q] for q in range(X.order)}
    leq = X.natural_order.leq
    ok = len(set(rows)) == X.order and set(rows) == code.as_set()
    if ok:
        for p in range(X.order):
            for q in range(X.order):
                if bool(leq[p, q]) != codeword_leq(rows[p], rows[q]):
                    ok = False
                    break
            if not ok:
                break
    return ok, mapping


def _quote(s):
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_hasse(obj, name: str = "hasse") -> str:
    """DOT digraph of the covering relation, edges pointing upward.

    Accepts an OrderRelation, a KUAlgebra (its natural order) or a
    BlockCode (bitwise order, nodes labelled by codeword).
    """
    if isinstance(obj, KUAlgebra):
        obj = obj.natural_order
    if isinstance(obj, BlockCode):
        P = obj.order()
        labels = list(obj.words)
    elif isinstance(obj, OrderRelation):
        P = obj
        labels = list(obj.names)
    else:
        raise TypeError(f"cannot draw {type(obj).__name__}")
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for k, label in enumerate(labels):
        lines.append(f"  n{k} [label={_quote(label)}];")
    for x, y in P.covers():
        lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"
