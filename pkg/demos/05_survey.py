# A small survey: every semigroup with 3 or 4 generators up to 14.
from collections import Counter

from monocurve.survey import run_survey

rows, summary = run_survey([3, 4], 14)
print(summary.format())

# how close do non-complete-intersections get to the bound?
gap = Counter()
for row in rows:
    r = row.report
    if r.classification != "complete_intersection":
        gap[r.bound - r.e] += 1
print("\nbound - e   count")
for k in sorted(gap)[:10]:
    print(f"{k:>9}   {gap[k]}")
