# Block codes from KU-functions, the bitwise order, and Hasse diagrams.
from kualgebra import (
    KUAlgebra,
    KUFunction,
    export_hasse,
    gcd_algebra,
    generate_code,
    verify_order_isomorphism,
)

four = KUAlgebra([[0, 1, 2, 3], [0, 0, 1, 3], [0, 0, 0, 3], [0, 1, 2, 0]], names="0abc")
code = generate_code(KUFunction.identity(four))
print(list(zip(code.labels, code.words)))

ok, mapping = verify_order_isomorphism(four)
print("order isomorphism:", ok, mapping)

# Divisibility on 1..9 turns into nine words; the DOT output can be fed to `dot -Tpng`.
g = gcd_algebra(9)
print(export_hasse(generate_code(KUFunction.identity(g))))
