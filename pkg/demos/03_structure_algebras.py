"""Structure-constant algebras: products, validation, ideals, quotients.

An algebra is a table: entry (i, j) holds the coordinates of the product of
basis elements i and j, plus an explicit unit vector.  Validation checks
associativity on every basis triple and the unit law on every basis index,
exactly.
"""

from algdeform import Subspace, ideal_closure, quotient
from algdeform.constructions import (
    dual_numbers,
    matrix_unit_algebra,
    upper_triangular_algebra,
)

m2 = matrix_unit_algebra(2)
print("M2 on matrix units:", m2)
print("validation:", m2.validate())

e12 = m2.basis_element(m2.labels.index("e12"))
e21 = m2.basis_element(m2.labels.index("e21"))
print("e12 * e21 =", e12 * e21)

# the left regular representation is multiplicative: L_(ab) = L_a L_b
a = m2.element([1, 2, 0, 1])
b = m2.element([0, 1, 1, 0])
assert m2.left_regular(a * b) == m2.left_regular(a) @ m2.left_regular(b)
print("left regular representation is multiplicative: ok")

# M2 is simple: any nonzero seed generates everything
seed = Subspace.from_vectors(4, [[1, 0, 0, 0]])
print("\nideal closure of span{e11} in M2 has dimension",
      ideal_closure(m2, seed).dim)

# upper-triangular matrices are not: the strictly-upper part is an ideal
ut = upper_triangular_algebra(2)
strict = Subspace.from_vectors(3, [[0, 1, 0]])
print("strictly-upper ideal is already closed:",
      ideal_closure(ut, strict) == strict)

q, projection = quotient(ut, strict)
print("quotient by it:", q, "- the split commutative algebra")
print("projection is an algebra map, table is diagonal:",
      (q.basis_element(0) * q.basis_element(1)).is_zero())

# the dual numbers: one nilpotent direction
dn = dual_numbers()
x = dn.basis_element(1)
print("\ndual numbers: x*x =", x * x)
