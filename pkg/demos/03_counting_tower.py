"""The counting tower: stabilizer censuses without factorial scans.

A permutation stabilized by a^t is pinned down by where it sends
1..t, so each stratum can be counted (and constructed) from seeds of
size ~ (n/t)^t instead of scanned among (n-1)!.  The recursions remove
strata with finer stabilizers over the divisor lattice; every count has
an enumeration oracle to answer to.
"""

import math

from bismash import (
    CountContext,
    count_M,
    count_O,
    count_R,
    count_T,
    count_X,
    divisors,
    enumerate_involutions,
    enumerate_involutions_fixed,
    enumerate_orbit_reps,
)

n = 12
ctx = CountContext(n)
print(f"permutations of degree {n} fixing the top point, by stabilizer order:")
for t in divisors(n):
    print(f"  t={t:>2}: {count_M(ctx, t):>12,}")
total = sum(count_M(ctx, t) for t in divisors(n))
print(f"  sum = {total:,} = 11! = {math.factorial(11):,}")

print()
print("involutions with stabilizer <a^3> at degree 6:")
for x in enumerate_involutions(6, 3):
    print(f"  {x}")
print(f"count_T agrees: {count_T(CountContext(6), 3)}")

print()
print("involutions with stabilizer <a^4> and two fixed points, degree 8:")
for x in enumerate_involutions_fixed(8, 4, 2):
    print(f"  {x}")
print(f"count_R agrees: {count_R(CountContext(8), 4, 2)}")

print()
print("orbits of length 3 with exactly one involution, degree 12:")
for orb in enumerate_orbit_reps(12, 3, 1):
    print(f"  representative {orb.representative}")
print(f"count_O agrees: {count_O(ctx, 3, 1)}; count_X = {count_X(ctx, 3, 1)}")
