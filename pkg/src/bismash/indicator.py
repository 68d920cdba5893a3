"""Frobenius-Schur indicators of the irreducible modules of k^{S_{n-1}} # kC_n.

Irreducible modules are induced from characters of the cyclic stabilizer
of a permutation: a module is named by (orbit representative x, t, i)
where <a^t> is the stabilizer of x and the inducing character sends a^t
to zeta^i for zeta a primitive (n/t)-th root of unity.  The module's
dimension is t, and its indicator lies in {-1, 0, +1}.

Two independent evaluation routes are provided:

``indicator_reduced``
    The fast path.  With s the smallest shift carrying x^{-1} to x and
    u1, u2 the reduced exponents of x(t)+t and x(s)+s, the indicator is
    0 unless i*u1 = 0 mod n/t; otherwise it is +1 when n/t is odd, and
    zeta^{-i*u2} = +-1 when n/t is even.  Everything is plain modular
    integer arithmetic; no complex numbers are ever touched.

``indicator_bruteforce``
    The oracle.  It evaluates the averaged character sum

        (1/n) sum_{y in orbit} sum_{b : y^{-1} <| a^b = y} chi(a^{y(b)+b})

    literally, scanning all of C_n for transporters and accumulating
    exact roots of unity, then reducing the sum to an integer.

The two must agree on every module; the test suite proves it
exhaustively for small degrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CyclotomicAccumulator
from .matched_pair import (
    Orbit,
    act_left,
    inversion_data,
    orbit,
    stabilizer,
)
from .perm import Permutation, inverse

__all__ = [
    "IrrepDescriptor",
    "indicator_reduced",
    "indicator_bruteforce",
    "group_indicator_cn",
    "indicator_table",
    "tally_indicators",
]


@dataclass(frozen=True)
class IrrepDescriptor:
    """(orbit representative, stabilizer order t, character index i).

    The map (orbit, i) -> irreducible module is a bijection, so with the
    representative canonicalized these descriptors name each module
    exactly once.  The dimension of the module equals t.
    """

    orbit_rep: Permutation
    t: int
    i: int

    def __post_init__(self) -> None:
        n = self.orbit_rep.n
        if not self.orbit_rep.fixes_top():
            raise ValueError("orbit representative must fix the top point")
        if n % self.t:
            raise ValueError(f"t={self.t} does not divide n={n}")
        if not 0 <= self.i < n // self.t:
            raise ValueError(f"character index {self.i} out of range mod {n // self.t}")

    @property
    def n(self) -> int:
        return self.orbit_rep.n

    @property
    def dimension(self) -> int:
        return self.t

    @classmethod
    def from_permutation(cls, x: Permutation, i: int) -> "IrrepDescriptor":
        """Canonicalize x to its orbit representative and validate t."""
        orb = orbit(x)
        return cls(orb.representative, len(orb.members), i)


def indicator_reduced(d: IrrepDescriptor) -> int:
    """Indicator via the closed congruence conditions; exact and fast."""
    x = d.orbit_rep
    n = x.n
    t = stabilizer(x).t
    if t != d.t:
        raise ValueError(f"descriptor t={d.t} but stabilizer order is {t}")
    m = n // t
    inv = inversion_data(x)
    if not inv.in_orbit:
        return 0
    if (d.i * inv.u1) % m:
        return 0
    if m % 2:
        return 1
    k = (d.i * inv.u2) % m
    if k == 0:
        return 1
    if (2 * k) % m == 0:
        return -1
    # i*u1 = 0 mod m forces i*u2 into {0, m/2}; anything else would mean
    # the congruence data is inconsistent, so fail loudly.
    raise ArithmeticError(
        f"i*u2 = {k} mod {m} is not 0 or {m}/2 although i*u1 = 0 (x={x})"
    )


def indicator_bruteforce(d: IrrepDescriptor) -> int:
    """Indicator via the literal averaged character sum (the oracle).

    For each orbit member y, every b in {0..n-1} is tested for
    y^{-1} <| a^b = y; a matching b contributes chi_i(a^{y^{-1}(b)+b}),
    which is zeta^{i e / t} when t divides the exponent e and 0
    otherwise.  The accumulated sum, divided by n, must land in
    {-1, 0, +1}.
    """
    x = d.orbit_rep
    n = x.n
    t = stabilizer(x).t
    if t != d.t:
        raise ValueError(f"descriptor t={d.t} but stabilizer order is {t}")
    m = n // t
    acc = CyclotomicAccumulator(m)
    for y in orbit(x).members:
        yi = inverse(y)
        yi_word = yi.word
        for b in range(n):
            if act_left(yi, b) == y:
                e = (yi_word[b] + b) % n
                if e % t == 0:
                    acc.add(d.i * (e // t))
    total = acc.value() / n
    if total.denominator != 1 or total not in (-1, 0, 1):
        raise ArithmeticError(f"indicator sum {total} is not in {{-1, 0, 1}}")
    return int(total)


def group_indicator_cn(n: int, i: int) -> int:
    """Indicator of the C_n character a -> zeta_n^i: +1 iff n | 2i, else 0."""
    if not 0 <= i < n:
        raise ValueError(f"character index {i} out of range 0..{n - 1}")
    return 1 if (2 * i) % n == 0 else 0


def indicator_table(
    n: int,
    filter_t: int | None = None,
    max_work: int | None = None,
) -> list[tuple[IrrepDescriptor, int]]:
    """One (descriptor, indicator) row per irreducible module at degree n,
    optionally restricted to dimension ``filter_t``.

    Orbit representatives are generated by stabilizer-constrained
    construction rather than a scan of all (n-1)! permutations; the
    workload guard of the enumeration layer applies.  Rows are sorted by
    (t, representative one-line form, i) so output is deterministic.
    """
    from .construct import enumerate_orbit_reps  # local: avoids import cycle

    from .matched_pair import divisors

    if n < 2:
        raise ValueError("degree must be at least 2")
    ts = [filter_t] if filter_t is not None else divisors(n)
    if filter_t is not None and n % filter_t:
        raise ValueError(f"t={filter_t} does not divide n={n}")
    rows: list[tuple[IrrepDescriptor, int]] = []
    for t in ts:
        m = n // t
        for orb in enumerate_orbit_reps(n, t, max_work=max_work):
            rep = orb.representative
            for i in range(m):
                d = IrrepDescriptor(rep, t, i)
                rows.append((d, indicator_reduced(d)))
    rows.sort(key=lambda row: (row[0].t, row[0].orbit_rep.one_line(), row[0].i))
    return rows


def tally_indicators(
    rows: list[tuple[IrrepDescriptor, int]], weighted: bool = True
) -> dict[int, int]:
    """Tally {+1, -1, 0} over table rows.

    With ``weighted`` (the census convention) each row counts once per
    orbit member, i.e. with multiplicity t: the census bookkeeping is
    per (permutation, character) pair, while a table row stands for a
    whole orbit.  Unweighted tallies count isomorphism classes.
    """
    out = {1: 0, -1: 0, 0: 0}
    for d, v in rows:
        out[v] += d.t if weighted else 1
    return out
