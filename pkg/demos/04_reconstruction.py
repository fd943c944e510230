# From a code back to a KU-algebra.
from kualgebra import (
    KUAlgebra,
    KUFunction,
    are_isomorphic,
    exact_reconstructible,
    generate_code,
    reconstruct,
    roundtrip_report,
)

for V in (["1000", "1100", "1110", "1001"], ["10", "01"], ["110", "011", "111"]):
    print(V, exact_reconstructible(V))
    r = reconstruct(V)
    for q in range(r.algebra.order):
        print("   ", q, r.word_of[q], r.provenance[q])
    print("    regenerated:", sorted(generate_code(r.function).as_set()), "exact:", r.exact)

# The identity code only records the order, so the operation can change.
four = KUAlgebra([[0, 1, 2, 3], [0, 0, 1, 3], [0, 0, 0, 3], [0, 1, 2, 0]], names="0abc")
print(roundtrip_report(four))
r = reconstruct(generate_code(KUFunction.identity(four)))
print("operation-isomorphic:", are_isomorphic(r.algebra, four) is not None)
