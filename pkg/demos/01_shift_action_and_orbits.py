"""The factorization S_n = C_n * S_{n-1} and the shift action, pointwise.

Every permutation of {1..n} splits uniquely as (power of the n-cycle) *
(permutation fixing n), and refactorizing products the other way round
gives an action of shifts on the point stabilizer:

    (x <| a^r)(u) = x(u + r) - x(r)   (mod n).

This script walks the basic machinery on small degrees: the split, the
action, stabilizer orders, orbits, and the inversion-shift data that
feeds the indicator formula.
"""

from bismash import (
    Permutation,
    act_left,
    act_right,
    compose,
    factorize,
    from_cycles,
    inv_transporter_set,
    inversion_data,
    orbit,
    stabilizer,
)

n = 6
x = from_cycles(n, [(1, 2), (3, 4, 5)])
print(f"x = {x} as a map: {x.one_line()}")

# the unique split of an arbitrary permutation
lam = compose(Permutation.standard_cycle(n), x)
r, core = factorize(lam)
print(f"a*x = {lam} splits as a^{r} * {core}")

# acting by one shift: computed pointwise, no cycle multiplication
y = act_left(x, 1)
print(f"x <| a = {y}   (pointwise: u -> x(u+1) - x(1))")
print(f"x |> a = a^{act_right(x, 1)}")

# stabilizer and orbit
info = stabilizer(x)
print(f"stabilizer of x: <a^{info.t}> with x(t) = {info.j}*{info.t}")
orb = orbit(x)
print(f"orbit (size {len(orb.members)}):")
for member in orb.members:
    print(f"   {member}")
print(f"canonical representative: {orb.representative}")

# inversion data: where (if anywhere) the inverse sits inside the orbit
print()
big = from_cycles(16, [(1, 5, 9, 13), (3, 7, 11, 15)])
inv = inversion_data(big)
print(f"x = {big}  (degree 16)")
print(f"stabilizer <a^{stabilizer(big).t}>, inverse reached at shift s={inv.s}")
print(f"reduced exponents: u1={inv.u1}, u2={inv.u2}  (mod n/t)")
print(f"transporter exponents carrying x^-1 back to x: {inv_transporter_set(big)}")
