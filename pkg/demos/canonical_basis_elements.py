"""
Dual canonical basis elements
=============================

ch(T) is a signed sum of Pluecker monomials weighted by Kazhdan-Lusztig
polynomials at q = 1.
"""
from tabprime import ch, kl_polynomial
from tabprime.tableaux import one_column, validate

for w in [(3, 4, 1, 2), (4, 2, 3, 1), (2, 1, 4, 3)]:
    print(f"P(e, {w}) =", kl_polynomial((1, 2, 3, 4), w))

t = validate([[1, 3], [2, 4]], 4)
print("ch =", ch(t))
print("with frozen coordinates set to 1:", ch(t, quotient=True))

# a fundamental column is its own Pluecker coordinate
print("ch([1,2,4]) =", ch(one_column((1, 2, 4), 6)))
