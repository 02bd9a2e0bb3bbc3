# Walk from a semigroup to the tangent cone of its monomial curve.
from monocurve import canonicalize, defining_ideal, graded_invariants, is_cohen_macaulay, tangent_cone
from monocurve.semigroup import apery_set, frobenius
from monocurve.tangentcone import classify, hilbert_function_from_semigroup

S = canonicalize([6, 7, 8, 9, 13])  # 13 = 6 + 7 is redundant and gets dropped
print("semigroup     ", S)
print("frobenius     ", frobenius(S))
print("apery set     ", apery_set(S, S.multiplicity))

I = defining_ideal(S)
print("\ntoric ideal I (reduced basis):")
for g in I.generators:
    print("   ", g.format())

J = tangent_cone(I)
print("\ntangent cone J (reduced basis, revlex x3 > x2 > x1 > x0):")
for g in J.gb:
    print("   ", g.format())
print("leading ideal ", J.leading)

inv = graded_invariants(J)
print("\ndim, codim    ", inv.dim, inv.codim)
print("multiplicity  ", inv.multiplicity, "(always the smallest generator)")
print("generators    ", inv.num_min_gens, "of degree <=", inv.max_gen_degree)
print("class         ", classify(J, inv))
print("Cohen-Macaulay", is_cohen_macaulay(J))

# the Hilbert function of G counts semigroup elements by longest factorization
print("HF(G)         ", hilbert_function_from_semigroup(S, 8))

# a curve whose tangent cone is not Cohen-Macaulay: x0*x2 lies in J but x2 does not
J = tangent_cone(defining_ideal(canonicalize([5, 6, 13])))
print("\n<5,6,13>      ", [g.format() for g in J.gb], "CM:", is_cohen_macaulay(J))
