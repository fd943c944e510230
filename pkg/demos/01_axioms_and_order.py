# Checking a Cayley table, reading off its order, and counting small algebras.
import numpy as np

from kualgebra import (
    KUAlgebra,
    check_derived_identities,
    enumerate_algebras,
    from_poset,
    gcd_algebra,
    infimum,
    natural_order,
    verify_axioms,
)

# A four-element table: 0 < a < b and 0 < c.
four = KUAlgebra(
    [[0, 1, 2, 3],
     [0, 0, 1, 3],
     [0, 0, 0, 3],
     [0, 1, 2, 0]],
    names="0abc",
)
print(verify_axioms(four).summary())
print(check_derived_identities(four).summary())

P = natural_order(four)
print("strict pairs:", [(four.names[x], four.names[y]) for x, y in P.strict_pairs()])
print(P.leq.astype(int))

# Breaking the diagonal breaks ku4; the report lists every witness.
broken = four.table.copy()
broken[1, 1] = 1
print(verify_axioms(broken).describe("ku4", names=four.names))

# The gcd algebra orders a_1..a_n by divisibility.
g = gcd_algebra(12)
print("inf{a_8, a_12} =", g.names[infimum(g, {7, 11})])

# Any poset with a least element carries a canonical KU operation.
diamond = np.array([[1, 1, 1, 1], [0, 1, 0, 1], [0, 0, 1, 1], [0, 0, 0, 1]], dtype=bool)
print(from_poset(diamond).table)

for n in range(1, 6):
    labelled = sum(1 for _ in enumerate_algebras(n, bound=5))
    classes = sum(1 for _ in enumerate_algebras(n, up_to_iso=True, bound=5))
    print(f"order {n}: {labelled} tables, {classes} up to isomorphism")
