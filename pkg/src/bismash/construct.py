"""Stabilizer-constrained generation of permutation families.

A permutation x fixing n whose stabilizer contains a^t is linear over
the residue classes mod t: writing x(t) = j*t and, for 0 < i < t,
x(i) = u_i*t + sigma(i) with sigma the permutation of {1..t-1} given by
reduction mod t, the whole of x is

    x(q*t + w) = q*j*t + x(w)   (mod n).

The triple (j, sigma, u) is a *seed*; seeds are in bijection with the
permutations stabilized by a^t, which is what lets these enumerators
replace (n-1)!-sized scans.  An involution corresponds exactly to a
seed with j^2 = 1 mod n/t, sigma an involution, and u_i = -j*u_sigma(i).

Streams are generated in lexicographic seed order (j ascending, sigma in
one-line lexicographic order, u as a big-endian odometer), making runs
deterministic and partitionable.  A workload guard caps the number of
generated candidates; the factorial growth of the problem makes large
(n, t) infeasible and the guard turns that into a clean error.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .matched_pair import Orbit, divisors, orbit, stabilizer
from .perm import Permutation, is_involution

__all__ = [
    "WorkloadExceeded",
    "default_max_work",
    "RemainderSeed",
    "build_from_seed",
    "extract_seed",
    "enumerate_stabilized",
    "enumerate_exact_stabilizer",
    "enumerate_involutions",
    "enumerate_involutions_fixed",
    "enumerate_orbit_reps",
]

DEFAULT_MAX_WORK = 10**8


class WorkloadExceeded(RuntimeError):
    """Raised when an enumeration would generate more candidates than allowed."""


def default_max_work() -> int:
    env = os.environ.get("BISMASH_MAX_WORK")
    return int(env) if env else DEFAULT_MAX_WORK


class _WorkMeter:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None):
        self.limit = default_max_work() if limit is None else limit
        self.used = 0

    def charge(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise WorkloadExceeded(
                f"workload guard: {self.used} candidates exceeds limit {self.limit}"
            )


@dataclass(frozen=True)
class RemainderSeed:
    """(n, t, j, sigma, u) determining one a^t-stabilized permutation.

    ``sigma`` is a permutation of degree t fixing t (the remainder
    permutation, embedded); ``u`` lists u_1..u_{t-1} reduced mod n/t;
    ``j`` is coprime to n/t.
    """

    n: int
    t: int
    j: int
    sigma: Permutation
    u: tuple[int, ...]

    def __post_init__(self) -> None:
        n, t = self.n, self.t
        if t < 1 or n % t:
            raise ValueError(f"t={t} must divide n={n}")
        m = n // t
        if math.gcd(self.j, m) != 1:
            raise ValueError(f"j={self.j} is not coprime to n/t={m}")
        if self.sigma.n != t or not self.sigma.fixes_top():
            raise ValueError("sigma must be a degree-t permutation fixing t")
        if len(self.u) != t - 1:
            raise ValueError(f"u must list t-1={t - 1} residues")
        object.__setattr__(self, "j", self.j % m)
        object.__setattr__(self, "u", tuple(v % m for v in self.u))


def build_from_seed(seed: RemainderSeed) -> Permutation:
    """The permutation with x(i) = u_i*t + sigma(i), x(qt) = q*j*t."""
    n, t, j = seed.n, seed.t, seed.j
    word = [0] * n
    base = [0] * t  # base[w] = x(w) for w = 0..t-1, with x(0) = 0
    for i in range(1, t):
        base[i] = (seed.u[i - 1] * t + seed.sigma.word[i]) % n
    jt = (j * t) % n
    for q in range(n // t):
        off = (q * jt) % n
        for w in range(t):
            word[q * t + w] = (off + base[w]) % n
    return Permutation(tuple(word))


def extract_seed(x: Permutation) -> RemainderSeed:
    """Recover (j, sigma, u) from x; inverse of build_from_seed."""
    n = x.n
    t, j = stabilizer(x)
    sigma_word = [0] + [x.word[i] % t for i in range(1, t)]
    u = tuple((x.word[i] - sigma_word[i]) // t % (n // t) for i in range(1, t))
    return RemainderSeed(n, t, j, Permutation(tuple(sigma_word)), u)


def _units(m: int) -> list[int]:
    if m == 1:
        return [0]
    return [j for j in range(1, m) if math.gcd(j, m) == 1]


def _sym_words(k: int) -> Iterator[tuple[int, ...]]:
    # Degree-(k+1) words fixing the top point, lex order over one-line forms.
    from itertools import permutations

    for images in permutations(range(1, k + 1)):
        yield (0,) + images


def _involution_words(k: int) -> Iterator[tuple[int, ...]]:
    # Involutions of {1..k}, embedded as degree-(k+1) words fixing 0,
    # in lex order over one-line forms.  Built by assigning the smallest
    # open point either to itself or to a larger partner.
    word = list(range(k + 1))
    taken = [False] * (k + 1)

    def rec(p: int) -> Iterator[tuple[int, ...]]:
        while p <= k and taken[p]:
            p += 1
        if p > k:
            yield tuple(word)
            return
        taken[p] = True
        word[p] = p
        yield from rec(p + 1)
        for q in range(p + 1, k + 1):
            if not taken[q]:
                taken[q] = True
                word[p], word[q] = q, p
                yield from rec(p + 1)
                word[q] = q
                taken[q] = False
        word[p] = p
        taken[p] = False

    yield from rec(1)


def _exact_stab_t(x: Permutation, t: int) -> bool:
    # Exact stabilizer equals <a^t> iff no maximal proper divisor of t
    # stabilizes x: testing t/p for each prime p | t suffices.
    n = x.n
    w = x.word
    tt = t
    p = 2
    primes = []
    while tt > 1:
        if tt % p == 0:
            primes.append(p)
            while tt % p == 0:
                tt //= p
        p += 1
    for p in primes:
        d = t // p
        xd = w[d % n]
        if all((w[(u + d) % n] - xd) % n == w[u] for u in range(n)):
            return False
    return True


def enumerate_stabilized(
    n: int, t: int, max_work: int | None = None
) -> Iterator[Permutation]:
    """All x fixing n with a^t in the stabilizer (exactness not required)."""
    if t < 1 or n % t:
        raise ValueError(f"t={t} must divide n={n}")
    m = n // t
    meter = _WorkMeter(max_work)
    for j in _units(m):
        for sigma_word in _sym_words(t - 1):
            sigma = Permutation(sigma_word) if t > 1 else Permutation((0,))
            for u in product(range(m), repeat=t - 1):
                meter.charge()
                yield build_from_seed(RemainderSeed(n, t, j, sigma, u))


def enumerate_exact_stabilizer(
    n: int, t: int, max_work: int | None = None
) -> Iterator[Permutation]:
    """The x fixing n whose stabilizer is exactly <a^t>: the set counted
    by the stabilizer census.  Yields in deterministic seed order."""
    for x in enumerate_stabilized(n, t, max_work):
        if _exact_stab_t(x, t):
            yield x


def enumerate_involutions(
    n: int, t: int, max_work: int | None = None
) -> Iterator[Permutation]:
    """Involutions with stabilizer exactly <a^t>.

    Seeds are constrained at the source: j ranges over square roots of 1
    mod n/t, sigma over involutions of {1..t-1}, and u honors
    u_i = -j*u_sigma(i) (so fixed points of sigma need (j+1)u_i = 0 and
    each 2-cycle of sigma leaves one free residue).
    """
    if t < 1 or n % t:
        raise ValueError(f"t={t} must divide n={n}")
    m = n // t
    meter = _WorkMeter(max_work)
    roots = [j for j in _units(m) if (j * j) % m == 1 % m]
    k_by_root = {j: [u for u in range(m) if (u * (j + 1)) % m == 0] for j in roots}
    for j in roots:
        k_set = k_by_root[j]
        for sigma_word in _involution_words(t - 1):
            sigma = Permutation(sigma_word)
            fixed = [i for i in range(1, t) if sigma_word[i] == i]
            pairs = [(i, sigma_word[i]) for i in range(1, t) if sigma_word[i] > i]
            choice_sets = [k_set] * len(fixed) + [list(range(m))] * len(pairs)
            for choice in product(*choice_sets):
                meter.charge()
                u = [0] * (t - 1)
                for i, v in zip(fixed, choice[: len(fixed)]):
                    u[i - 1] = v
                for (i, i2), v in zip(pairs, choice[len(fixed) :]):
                    u[i - 1] = v
                    u[i2 - 1] = (-j * v) % m
                x = build_from_seed(RemainderSeed(n, t, j, sigma, tuple(u)))
                if _exact_stab_t(x, t):
                    yield x


def enumerate_involutions_fixed(
    n: int, t: int, r: int, max_work: int | None = None
) -> Iterator[Permutation]:
    """Involutions with stabilizer exactly <a^t> and exactly r fixed
    points, the point n included.  Empty when n - r is odd."""
    if (n - r) % 2 or r < 1:
        return
    for x in enumerate_involutions(n, t, max_work):
        if sum(1 for i, v in enumerate(x.word) if v == i) == r:
            yield x


def enumerate_orbit_reps(
    n: int, t: int, r: int | None = None, max_work: int | None = None
) -> Iterator[Orbit]:
    """One Orbit per equivalence class with stabilizer order t, keyed by
    the canonical (lexicographically smallest) representative;
    optionally only orbits containing exactly r involutions."""
    for x in enumerate_exact_stabilizer(n, t, max_work):
        orb = orbit(x)
        if orb.representative != x:
            continue
        if r is not None:
            if sum(1 for y in orb.members if is_involution(y)) != r:
                continue
        yield orb
