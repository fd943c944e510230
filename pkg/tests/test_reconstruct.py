import itertools

import pytest

import fixtures as F
import oracle
from kualgebra import (
    BlockCode,
    KUAlgebra,
    KUFunction,
    are_isomorphic,
    exact_reconstructible,
    from_poset,
    generate_code,
    natural_order,
    reconstruct,
    roundtrip_check,
    roundtrip_report,
    verify_axioms,
)
from kualgebra.errors import DuplicateWord, EmptyCode, LengthMismatch, ZeroColumn
from kualgebra.formats import format_kua, format_kuf


def test_four_code_exact(four):
    r = reconstruct(F.FOUR_CODE)
    assert r.exact
    assert r.algebra.order == 4
    assert generate_code(r.function).as_set() == set(F.FOUR_CODE)
    assert r.words == ["1000", "1001", "1100", "1110"]
    assert set(r.provenance.values()) == {"original"}
    # same order as the source algebra, canonical operation
    assert are_isomorphic(r.algebra, from_poset(natural_order(four))) is not None


def test_antichain_gets_bottom():
    r = reconstruct(["10", "01"])
    assert not r.exact
    assert r.words == ["00", "01", "10"]
    assert r.provenance == {0: "bottom-adjoined", 1: "original", 2: "original"}
    assert generate_code(r.function).as_set() == {"00", "10", "01"}


def test_single_word():
    r = reconstruct(["1"])
    assert r.exact and r.algebra.order == 1 and r.words == ["1"]


def test_synthesized_meet():
    r = reconstruct(["110", "011", "111"])
    assert r.words == ["010", "011", "110", "111"]
    assert r.provenance[0] == "synthesized-meet"
    assert not r.exact


def test_errors():
    with pytest.raises(ZeroColumn):
        reconstruct(["10", "11"][:1] + ["00"])
    with pytest.raises(EmptyCode):
        reconstruct([])
    with pytest.raises(DuplicateWord):
        reconstruct(["10", "10"])
    with pytest.raises(LengthMismatch):
        reconstruct(["10", "1"])


def test_exact_reconstructible():
    assert exact_reconstructible(F.FOUR_CODE) == (
        True,
        {"missing_meet_columns": [], "missing_minimum": False},
    )
    ok, cert = exact_reconstructible(["10", "01"])
    assert not ok and cert["missing_minimum"]
    assert exact_reconstructible(["11"])[0]
    ok, cert = exact_reconstructible(["110", "011", "111"])
    assert cert["missing_meet_columns"] == [1]


def _codes(max_words, max_len):
    for m in range(1, max_len + 1):
        words = ["".join(b) for b in itertools.product("01", repeat=m)]
        for k in range(1, max_words + 1):
            for V in itertools.combinations(words, k):
                if all(any(w[i] == "1" for w in V) for i in range(m)):
                    yield list(V)


def test_containment_exhaustive():
    count = 0
    for V in _codes(4, 4):
        r = reconstruct(V)
        generated = generate_code(r.function).as_set()
        assert set(V) <= generated
        assert r.exact == (generated == set(V))
        assert r.algebra.order <= len(V) + len(V[0]) + 1
        count += 1
    assert count == 2084


def test_deterministic_output():
    V = ["0110", "1100", "0011"]
    a, b = reconstruct(V), reconstruct(list(V))
    assert format_kua(a.algebra) == format_kua(b.algebra)
    assert format_kuf(a.function) == format_kuf(b.function)


def test_roundtrip_exact_and_order_preserving(small_algebras):
    for X in small_algebras:
        rep = roundtrip_report(X)
        assert rep["exact"] and rep["same_code"] and rep["order_isomorphic"]


def test_roundtrip_isomorphic_only_for_canonical_tables(small_algebras):
    for X in small_algebras:
        canonical = X == from_poset(natural_order(X))
        assert roundtrip_check(X) == (are_isomorphic(X, from_poset(natural_order(X))) is not None)
        if canonical:
            assert roundtrip_check(X)


def test_identity_code_forgets_the_operation():
    # two non-isomorphic algebras on the chain 0 < 1 < 2 share one code
    A = KUAlgebra([[0, 1, 2], [0, 0, 1], [0, 0, 0]])
    B = KUAlgebra([[0, 1, 2], [0, 0, 2], [0, 0, 0]])
    assert not oracle.isomorphic(A.to_rows(), B.to_rows())
    assert generate_code(KUFunction.identity(A)) == generate_code(KUFunction.identity(B))
    assert roundtrip_check(B) and not roundtrip_check(A)


def test_reconstructed_algebra_valid_on_random_codes():
    import random

    rng = random.Random(7)
    for _ in range(200):
        m = rng.randint(1, 8)
        k = rng.randint(1, 12)
        words = sorted({"".join(rng.choice("01") for _ in range(m)) for _ in range(k)})
        if not all(any(w[i] == "1" for w in words) for i in range(m)):
            continue
        r = reconstruct(words)
        assert verify_axioms(r.algebra).passed
        assert set(words) <= generate_code(r.function).as_set()
        assert r.algebra.order <= len(words) + m + 1
