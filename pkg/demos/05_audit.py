# Auditing cut-set laws on one instance, in literal and corrected form.
from kualgebra import KUAlgebra, KUFunction, audit_propositions

X = KUAlgebra(
    [[0, 1, 2, 3, 4],
     [0, 0, 2, 2, 1],
     [0, 1, 0, 1, 4],
     [0, 0, 0, 0, 1],
     [0, 0, 2, 2, 0]],
    names="0abcd",
)
f = KUFunction.from_mapping(X, {"x": "a", "y": "b"})
report = audit_propositions(f)
print(report.to_text())
print("corrected forms all hold:", report.passed("corrected"))
