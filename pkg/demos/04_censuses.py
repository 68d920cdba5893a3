"""Indicator censuses: closed forms against vectorized enumeration.

Dimension 2 has a complete closed-form census (+1 / -1 / 0) for every
even degree; odd dimensions have a closed +1 / 0 census.  The bulk
engine reproduces the same tallies by enumerating the stratum and
evaluating the congruence conditions row-wise -- including the
skew-module counts that are only reachable by enumeration for even
dimensions above 2.
"""

from bismash import CountContext, count_I_odd, count_I_t2
from bismash.bulk import census_by_dimension

print("dimension-2 censuses (plus, minus, zero) for even degrees:")
for n in range(4, 41, 4):
    plus, minus, zero = count_I_t2(CountContext(n))
    print(f"  n={n:>3}: +1: {plus:>6,}  -1: {minus:>4}  0: {zero:>8,}")

print()
print("skew-module counts by enumeration (dimension above 2):")
for n, t in [(12, 6), (16, 4), (24, 4), (24, 6), (36, 6), (48, 4)]:
    plus, minus, zero = census_by_dimension(n, t)
    print(f"  n={n:>3}, t={t}: -1 count {minus:>5,}   (+1: {plus:>9,})")

print()
print("odd dimensions never go negative; their +1 share thins out:")
for n, t in [(9, 3), (12, 3), (15, 3), (15, 5), (21, 3), (25, 5)]:
    plus, zero = count_I_odd(CountContext(n), t)
    print(f"  n={n:>3}, t={t}: +1: {plus:>8,}  0: {zero:>10,}")
