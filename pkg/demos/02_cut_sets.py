# Cut sets of a KU-function and the equivalence they induce.
from kualgebra import (
    KUFunction,
    cut_matrix,
    gcd_algebra,
    infimum_representation,
    theta_partition,
)

X = gcd_algebra(9)
f = KUFunction.from_mapping(X, {"a": "a_4", "b": "a_6", "c": "a_7", "d": "a_1", "e": "a_2"})

# Row q lists which labels land at or below q.
print(cut_matrix(f).to_text())

# Each value is recovered as the infimum of the cuts containing it.
for i, label in enumerate(f.labels):
    print(label, "->", X.names[infimum_representation(f, i)])

# Elements with the same cut row are identified.
for cls in theta_partition(f).classes:
    print({X.names[q] for q in cls})
