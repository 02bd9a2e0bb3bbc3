# The integer minimization behind the bound, and what it says about relation degrees.
from monocurve import lemma_min_product, min_relation_degree_bound

c, d = 4, 3
print(f"multisets of {c} integers in [1, {d}]")
for s in range(c, c * d + 1):
    r = lemma_min_product(c, d, s)
    print(f"  sum {s:>2}: min product {r.minimum:>3} at {list(r.argmins)}")

print(f"\nat sum (c-1)d = {(c - 1) * d}: (d-1)d^(c-2) = {(d - 1) * d ** (c - 2)}")
print(f"at sum (c-1)d+1 = {(c - 1) * d + 1}: at least d^(c-1) = {d ** (c - 1)}")

# a curve of multiplicity 100 in 5-space cannot be cut out by quadrics and cubics
for n0 in (12, 50, 100, 200):
    print(f"n0 = {n0:>3}, c = 4: some minimal relation has degree >= {min_relation_degree_bound(n0, 4)}")
