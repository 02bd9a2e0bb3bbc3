# Semigroups whose tangent cones reach the multiplicity bound.
from monocurve import bound, check_extremal_consequences, extremal_family, verify_theorem

print(f"{'c':>2} {'d':>2} {'bound':>6}  semigroup")
for c in (2, 3, 4, 5):
    for d in (2, 3):
        if c == 5 and d == 3:
            continue
        print(f"{c:>2} {d:>2} {bound(c, d):>6}  <{extremal_family(c, d)}>")

# every member is an almost complete intersection with e = bound
S = extremal_family(3, 3)
r = verify_theorem(S)
print()
print(r.summary())

# and its leading ideal, Betti table and linkage colon have a fixed shape
print()
print(check_extremal_consequences(S).format())
