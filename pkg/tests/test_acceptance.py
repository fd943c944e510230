"""Exit criteria.  Each test prints one ``[PASS]``/``[FAIL]`` line.

Run ``pytest tests/test_acceptance.py -s`` (or ``python tests/test_acceptance.py``)
to see the lines; a summary is also printed at the end of every pytest run.
Every check is exact: no numeric tolerances are involved.
"""
import itertools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import fixtures as F  # noqa: E402
import oracle  # noqa: E402
from kualgebra import (  # noqa: E402
    KUAlgebra,
    KUFunction,
    are_isomorphic,
    cut_matrix,
    enumerate_algebras,
    evaluate_claim,
    from_poset,
    gcd_algebra,
    generate_code,
    audit_propositions,
    natural_order,
    reconstruct,
    roundtrip_check,
    theta_partition,
    verify_axioms,
    verify_order_isomorphism,
)
from kualgebra.audit import CORRECTED, LITERAL  # noqa: E402

RESULTS = {}


def report(key, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {detail}"
    RESULTS[key] = line
    print(line)
    assert ok, line


def _small():
    return [X for n in range(1, 5) for X in enumerate_algebras(n)]


def test_criterion_1_fixture_validation():
    tables = {"five": F.FIVE, "abcd": F.ABCD, "four": F.FOUR}
    passing = {k: verify_axioms(T).passed for k, T in tables.items()}
    gcd_ok = gcd_algebra(9).to_rows() == [[v - 1 for v in r] for r in F.GCD9]
    gcd_ok = gcd_ok and verify_axioms(gcd_algebra(9)).passed

    # single-entry mutations; expected verdicts come from the brute-force oracle
    mismatches, accepted = [], []
    T = F.FOUR
    for x, y in itertools.product(range(1, 4), repeat=2):
        if x == y:
            continue
        for v in range(4):
            if v == T[x][y]:
                continue
            M = [r[:] for r in T]
            M[x][y] = v
            got = verify_axioms(M).passed
            if got:
                accepted.append((x, y, v))
            if got != oracle.is_ku(M):
                mismatches.append((x, y, v))
    ok = all(passing.values()) and gcd_ok and not mismatches and accepted == [(1, 2, 2)]
    report(
        "1",
        ok,
        f"fixtures {passing}, gcd(9) table match={gcd_ok}; 18 mutations, "
        f"{18 - len(accepted)} rejected, accepted={accepted} (oracle agrees: {not mismatches})",
    )


def test_criterion_2_code_generation():
    four = KUAlgebra(F.FOUR, names=F.FOUR_NAMES)
    c4 = list(generate_code(KUFunction.identity(four)).words)
    c9 = list(generate_code(KUFunction.identity(gcd_algebra(9))).words)
    ok = c4 == F.FOUR_CODE and c9 == F.GCD9_CODE
    report("2", ok, f"four-element code {c4}; gcd(9) code matches nine words: {c9 == F.GCD9_CODE}")


def test_criterion_3_cut_tables():
    X = gcd_algebra(9)
    f = KUFunction(X, list(F.GCD_FUNCTION), [k - 1 for k in F.GCD_FUNCTION.values()])
    rows = cut_matrix(f).words()
    classes = [sorted(X.names[q] for q in c) for c in theta_partition(f).classes]
    expected = [["a_1", "a_3", "a_5", "a_9"], ["a_2"], ["a_4", "a_8"], ["a_6"], ["a_7"]]
    ok = rows == F.GCD_CUTS and classes == expected
    report("3", ok, f"9x5 cut table bit-exact: {rows == F.GCD_CUTS}; classes {classes}")


def test_criterion_4_order_isomorphism_suite():
    counts = {n: sum(1 for _ in enumerate_algebras(n)) for n in range(1, 5)}
    failures = [X for X in _small() if not verify_order_isomorphism(X)[0]]
    ok = counts == {1: 1, 2: 1, 3: 5, 4: 67} and not failures
    report("4", ok, f"counts {counts} (frozen 1,1,5,67); order-isomorphism failures: {len(failures)}")


@pytest.mark.order5
def test_criterion_4_order5():
    algebras = list(enumerate_algebras(5, bound=5))
    failures = [X for X in algebras if not verify_order_isomorphism(X)[0]]
    report("4/order5", not failures and len(algebras) == 1735, f"{len(algebras)} algebras, failures {len(failures)}")


def test_criterion_5a_reconstruct_four_element_code():
    four = KUAlgebra(F.FOUR, names=F.FOUR_NAMES)
    r = reconstruct(F.FOUR_CODE)
    iso = are_isomorphic(r.algebra, four)
    ok = r.exact and r.algebra.order == 4 and iso is not None
    ia, ib = r.algebra.index("1100"), r.algebra.index("1110")
    ab = r.algebra.names[r.algebra.op(ia, ib)]
    report(
        "5a",
        ok,
        f"exact={r.exact}, order={r.algebra.order}, isomorphic to source={iso is not None} "
        f"(reconstructed 1100*1110={ab}, i.e. a*b=b; source has a*b=a)",
    )


def test_criterion_5b_roundtrip_all_small():
    algebras = _small()
    good = sum(1 for X in algebras if roundtrip_check(X))
    report("5b", good == len(algebras), f"roundtrip_check true for {good}/{len(algebras)} algebras of order <= 4")


def test_criterion_5c_containment():
    checked, bad = 0, []
    for m in range(1, 5):
        words = ["".join(b) for b in itertools.product("01", repeat=m)]
        for k in range(1, 5):
            for V in itertools.combinations(words, k):
                if not all(any(w[i] == "1" for w in V) for i in range(m)):
                    continue
                checked += 1
                if not set(V) <= generate_code(reconstruct(list(V)).function).as_set():
                    bad.append(V)
    report("5c", not bad and checked == 2084, f"{checked} codes checked, containment failures {len(bad)}")


def test_criterion_6_erratum_audit():
    X = KUAlgebra(F.ABCD, names=F.ABCD_NAMES)
    f = KUFunction.from_mapping(X, {"x": "a", "y": "b"})
    rep = audit_propositions(f)
    lit = rep.get("meet_cut", LITERAL)
    a, b = X.index("a"), X.index("b")
    held, detail = evaluate_claim(f, "meet_cut", LITERAL, (a, b))
    literal_ok = (
        not lit.passed
        and (a, b) in lit.counterexamples
        and not held
        and detail["A_inf"] == frozenset()
        and detail["union"] == {"x", "y"}
    )
    corrected_ok = rep.get("meet_cut", CORRECTED).passed and evaluate_claim(f, "meet_cut", CORRECTED, (a, b))[0]

    claims = ("meet_cut", "cut_cover", "cut_principal", "theta_downset")
    instances, bad = 0, []
    for Y in _small():
        for image in itertools.product(range(Y.order), repeat=3):
            g = KUFunction(Y, ["x", "y", "z"], image)
            r = audit_propositions(g, claims=claims)
            instances += 1
            bad += [(Y.to_rows(), image, e.claim) for e in r.entries if e.variant == CORRECTED and not e.passed]
    ok = literal_ok and corrected_ok and not bad
    report(
        "6",
        ok,
        f"literal union law FAIL at Y={{a,b}} (A_inf={{}} vs {{x,y}}): {literal_ok}; "
        f"intersection law PASS: {corrected_ok}; corrected sweep {instances} instances, failures {len(bad)}",
    )


def test_criterion_7_canonical_construction():
    checked, bad = 0, []
    for k in range(1, 6):
        for L in oracle.posets_with_bottom(k):
            X = from_poset(L)
            checked += 1
            if not (verify_axioms(X).passed and natural_order(X).leq.tolist() == L):
                bad.append(L)
    report("7", not bad and checked == 1 + 1 + 3 + 19 + 219, f"{checked} posets, failures {len(bad)}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
