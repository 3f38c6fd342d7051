"""
Dominant monomials and tableaux
===============================

Every tableau class corresponds to a dominant monomial.  Frozen columns
(consecutive runs) map to the empty monomial, so they drop out.
"""
from tabprime import format_monomial, format_tableau, parse_monomial, monomial_to_tableau, tableau_to_monomial
from tabprime.tableaux import from_rows, reduce_with_factors, validate

t = validate([[1, 2, 4, 6], [3, 5, 7, 8]], 8)
print(format_tableau(t), "->", format_monomial(tableau_to_monomial(t)))

# and back again
m = parse_monomial("Y[1,-7]*Y[2,-4]*Y[1,-5]*Y[3,-1]*Y[2,-2]*Y[3,1]", 4, 8)
print(format_monomial(m), "->", format_tableau(monomial_to_tableau(m)))

# a 2-row tableau with two frozen factors
t = from_rows([[1, 2, 2, 3, 3, 4], [3, 5, 5, 6, 8, 9]], 9)
red, frozen = reduce_with_factors(t)
print("reduced:", format_tableau(red), "frozen:", frozen)
print("monomial:", format_monomial(tableau_to_monomial(t)))
