# Betti tables of monomial ideals, by lcm lattice and by Koszul homology.
from monocurve import MonomialIdeal, betti_koszul, betti_lcm, hilbert
from monocurve.extremal import extremal_betti_formula, extremal_leading_ideal

L = extremal_leading_ideal(4, 2)
print("L =", L)
table = betti_lcm(L)
print(table.format())
print("totals      ", table.totals)
print("formula     ", [extremal_betti_formula(4, i) for i in range(5)])
print("Koszul agree", betti_koszul(L) == table)

# the alternating graded sum is the Hilbert numerator
h = hilbert(L)
print("numerator   ", table.numerator())
print("reduced     ", list(h.reduced_numerator), "-> e =", h.multiplicity)

# a Hilbert-Burch example: two syzygies in different degrees
print()
print(betti_lcm(MonomialIdeal.parse("x1^3, x2^3, x1^2*x2", 3)).format())
