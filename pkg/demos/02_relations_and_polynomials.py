"""Noncommutative polynomials and the relation syntax.

Relations are written in a small expression language: `*` for products,
`^` for powers, `t` for the deformation parameter, `i` for the imaginary
unit.  Words never commute, so x*y and y*x are different monomials.
"""

from fractions import Fraction

from algdeform import parse_ncpoly
from algdeform.ncpoly import TPoly

gens = ("x", "y")

p = parse_ncpoly("x*y + y*x", gens)
print("p =", p)

q = parse_ncpoly("y^6 - x^3 - y^2*x", gens)
print("q =", q, " (word lengths:", sorted(len(w) for w in q.terms), ")")

# products keep the order of the factors
x = parse_ncpoly("x", gens)
y = parse_ncpoly("y", gens)
print("(x + y)(x - y) =", (x + y) * (x - y))

# coefficients may be polynomials in t: one parser serves static relations
# and deformation templates alike
family_relation = parse_ncpoly("x^2 - t", ("x",))
print("\ndeformed relation:", family_relation)
for word, coeff in family_relation.at_t(Fraction(1, 4)):
    print(f"  at t=1/4, word {word or '()':} has coefficient {coeff}")

# t-polynomials evaluate by exact Horner
poly = TPoly([1, -2, 1])  # 1 - 2t + t^2 = (1 - t)^2
print("\n(1-t)^2 at t=1/3:", poly.eval(Fraction(1, 3)))

# printing and parsing are inverse to each other
assert parse_ncpoly(str(q), gens) == q
print("\nround trip through text: ok")
