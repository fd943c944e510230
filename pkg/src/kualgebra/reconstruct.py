"""Build a KU-algebra and KU-function whose generated code contains a given code.

Construction (meet closure):

1. for each column ``i`` let ``m_i`` be the bitwise AND of the words with a
   1 in column ``i``;
2. add all ``m_i`` to the code;
3. use the bitwise minimum of the result as bottom, or adjoin ``0...0``;
4. order elements bottom first, then by (popcount, word);
5. take the canonical poset algebra of the bitwise order;
6. send column ``i`` to ``m_i``.

The code generated by the result is exactly the element set, so it always
contains the input, and equals it when no word had to be added.
"""
from __future__ import annotations

from dataclasses import dataclass

from .codes import BlockCode, codeword_leq, generate_code
from .core import KUAlgebra, are_isomorphic, from_poset, verify_axioms
from .errors import ZeroColumn
from .function import KUFunction

ORIGINAL = "original"
SYNTHESIZED = "synthesized-meet"
BOTTOM = "bottom-adjoined"


@dataclass(frozen=True)
class ReconstructionResult:
    algebra: KUAlgebra
    function: KUFunction
    word_of: dict[int, str]
    provenance: dict[int, str]
    exact: bool

    @property
    def words(self) -> list[str]:
        return [self.word_of[q] for q in range(self.algebra.order)]


def _and(words, m):
    out = ["1"] * m
    for w in words:
        out = ["1" if a == "1" and b == "1" else "0" for a, b in zip(out, w)]
    return "".join(out)


def _column_meets(code: BlockCode) -> list[str]:
    meets = []
    for i in range(code.length):
        support = [w for w in code.words if w[i] == "1"]
        if not support:
            raise ZeroColumn(f"column {i} is all zeros; no element can be assigned to it")
        meets.append(_and(support, code.length))
    return meets


def _minimum(words):
    for w in words:
        if all(codeword_leq(w, v) for v in words):
            return w
    return None


def _as_code(V) -> BlockCode:
    return V if isinstance(V, BlockCode) else BlockCode(list(V))


def reconstruct(V, column_labels=None) -> ReconstructionResult:
    code = _as_code(V)
    m = code.length
    meets = _column_meets(code)
    closure = set(code.words) | set(meets)
    bottom = _minimum(sorted(closure))
    if bottom is None:
        bottom = "0" * m
    rest = sorted(closure - {bottom}, key=lambda w: (w.count("1"), w))
    elements = [bottom] + rest

    leq = [[codeword_leq(u, v) for v in elements] for u in elements]
    algebra = from_poset(leq, names=elements)
    index = {w: k for k, w in enumerate(elements)}
    labels = column_labels if column_labels is not None else [str(i + 1) for i in range(m)]
    function = KUFunction(algebra, labels, [index[w] for w in meets])

    original = set(code.words)
    meet_set = set(meets)
    provenance = {}
    for k, w in enumerate(elements):
        if w in original:
            provenance[k] = ORIGINAL
        elif w in meet_set:
            provenance[k] = SYNTHESIZED
        else:
            provenance[k] = BOTTOM
    exact = meet_set <= original and bottom in original

    assert verify_axioms(algebra).passed
    assert generate_code(function).as_set() == set(elements)
    return ReconstructionResult(algebra, function, dict(enumerate(elements)), provenance, exact)


def exact_reconstructible(V):
    """Whether every column meet and a bitwise minimum already lie in ``V``.

    Returns ``(ok, certificate)``; the certificate lists the columns whose
    meet is missing and whether the minimum is missing.
    """
    code = _as_code(V)
    meets = _column_meets(code)
    missing = [i for i, w in enumerate(meets) if w not in code]
    no_minimum = _minimum(code.words) is None
    cert = {"missing_meet_columns": missing, "missing_minimum": no_minimum}
    return not missing and not no_minimum, cert


def roundtrip_check(X: KUAlgebra) -> bool:
    """Code of the identity function, reconstructed: exact and isomorphic to X."""
    code = generate_code(KUFunction.identity(X))
    result = reconstruct(code)
    return result.exact and are_isomorphic(result.algebra, X) is not None


def roundtrip_report(X: KUAlgebra) -> dict:
    """Finer-grained view of :func:`roundtrip_check`."""
    code = generate_code(KUFunction.identity(X))
    result = reconstruct(code)
    order_iso = are_isomorphic(from_poset(X.natural_order), result.algebra) is not None
    return {
        "exact": result.exact,
        "same_code": generate_code(result.function).as_set() == code.as_set(),
        "order_isomorphic": order_iso,
        "isomorphic": are_isomorphic(result.algebra, X) is not None,
    }
