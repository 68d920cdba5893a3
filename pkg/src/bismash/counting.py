"""Closed-form and recursive counts over the divisor lattice of n.

The quantities counted, for x ranging over permutations fixing n:

    M_{n/t}      x with stabilizer exactly <a^t>
    T_{n/t}      involutions among them
    R_{n/t,r}    ... with exactly r fixed points (point n included)
    X_{n/t,r}    involutions whose orbit contains exactly r involutions
    C_{n,t,s,r}  the overcount removed from X: involutions generated by a
                 degree-t remainder with r fixed points but actually of
                 stabilizer <a^s>, s | t
    O_{n/t,r}    orbits of length t containing r involutions
    O_{n/t,r,j}  ... restricted to orbits with y(t) = j*t

and, on top of those, census totals of indicator values: I_odd counts
the +1 / 0 split for odd dimensions, I_t2 the +1 / -1 / 0 split for
dimension 2.  Indicator censuses use the per-(permutation, character)
convention: every x with stabilizer <a^t> contributes n/t entries, so an
orbit is counted once per member.

Each "remove the overcount" recursion runs over proper divisors and is
memoized in a CountContext; all arithmetic is exact arbitrary-width
integer arithmetic ((n-1)! overflows 64 bits already at n = 22).

Every count here has an independent enumeration oracle in the
construction layer, and the test suite holds the two equal on all
parameters up to degree 12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, gcd

from .matched_pair import divisors

__all__ = [
    "euler_phi",
    "omega",
    "involution_count",
    "e_set",
    "k_set",
    "alpha",
    "p_set",
    "p_c_set",
    "delta_pc",
    "beta",
    "delta_exists",
    "m_ratio",
    "ebar_set",
    "kbar_set",
    "delta_kc",
    "k_prime_set",
    "delta_bar",
    "delta_zero",
    "delta_nonzero",
    "HelperTables",
    "helper_tables",
    "CountContext",
    "count_M",
    "count_T",
    "count_R",
    "count_C",
    "count_C_tilde",
    "count_X",
    "count_O",
    "count_O_j",
    "count_I_odd",
    "count_I_t2",
    "ratio_report",
]


# -- elementary number theory -----------------------------------------


def _factorize(m: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def euler_phi(m: int) -> int:
    """Count of residues coprime to m."""
    if m < 1:
        raise ValueError("m must be positive")
    out = 1
    for p, e in _factorize(m).items():
        out *= p ** (e - 1) * (p - 1)
    return out


def omega(m: int) -> int:
    """Number of distinct prime divisors of m."""
    if m < 1:
        raise ValueError("m must be positive")
    return len(_factorize(m))


def involution_count(m: int) -> int:
    """Number of self-inverse permutations of {1..m}, identity included."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    a, b = 1, 1  # counts for degrees k-2, k-1
    for k in range(2, m + 1):
        a, b = b, b + (k - 1) * a
    return b


# -- residue sets and gate values --------------------------------------
#
# All residues are normalized to {0..m-1}; sets are returned as sorted
# tuples so they are hashable and deterministic.


def e_set(m: int) -> tuple[int, ...]:
    """Square roots of 1 mod m: the legal values of x(t)/t for involutions."""
    return tuple(j for j in range(m) if (j * j) % m == 1 % m)


def k_set(j: int, m: int) -> tuple[int, ...]:
    """u with u(j+1) = 0 mod m."""
    return tuple(u for u in range(m) if (u * (j + 1)) % m == 0)


def alpha(j: int, m: int) -> int:
    """gcd(j+1, m) = |k_set(j, m)|."""
    return gcd(j + 1, m)


def beta(j: int, m: int) -> int:
    """gcd(j-1, m): the fixed-point multiplicity attached to j."""
    return gcd(j - 1, m)


def p_set(j: int, m: int) -> tuple[int, ...]:
    """Multiples q(j-1) mod m: the subgroup generated by beta(j, m)."""
    return tuple(range(0, m, beta(j, m)))


def p_c_set(j: int, m: int) -> tuple[int, ...]:
    """k_set minus p_set (p_set always sits inside k_set)."""
    p = set(p_set(j, m))
    return tuple(u for u in k_set(j, m) if u not in p)


def delta_pc(j: int, m: int) -> int:
    """|p_c_set| with the empty set read as 1, avoiding 0^0 in products."""
    return len(p_c_set(j, m)) or 1


def delta_exists(j: int, m: int, r: int, cap: int) -> int:
    """1 iff an involution with these (j, r) data can exist: beta | r and
    r <= cap * beta (cap is the remainder degree the u_i live under)."""
    b = beta(j, m)
    return 1 if r % b == 0 and r <= cap * b else 0


def m_ratio(j: int, m: int, r: int) -> int:
    """r / beta(j, m): how many fixed-point blocks the r fixed points form."""
    b = beta(j, m)
    if r % b:
        raise ValueError(f"beta={b} does not divide r={r}")
    return r // b


def ebar_set(j_sigma: int, n: int, t: int, s: int) -> tuple[int, ...]:
    """Values j' mod n/s over j_sigma + multiples of t/s that are square
    roots of 1 mod n/s: the possible x(s)/s compatible with a remainder
    permutation having sigma(s) = j_sigma * s."""
    ns = n // s
    ts = t // s
    legal = set(e_set(ns))
    seen = []
    for mb in range(1, n // t + 1):
        jp = (j_sigma + mb * ts) % ns
        if jp in legal and jp not in seen:
            seen.append(jp)
    return tuple(sorted(seen))


def kbar_set(
    j_prime: int, j_sigma: int, n: int, t: int, s: int, complement: bool = False
) -> tuple[int, ...]:
    """u mod n/t with (u*(t/s) + m_i)(1 + j') = 0 mod n/s for some m_i
    drawn from p_set(j_sigma, t/s) (or its complement p_c_set)."""
    ns = n // s
    ts = t // s
    pool = p_c_set(j_sigma, ts) if complement else p_set(j_sigma, ts)
    out = []
    for u in range(n // t):
        if any(((u * ts + mi) * (1 + j_prime)) % ns == 0 for mi in pool):
            out.append(u)
    return tuple(out)


def delta_kc(j_prime: int, j_sigma: int, n: int, t: int, s: int) -> int:
    """|kbar complement set| with the empty set read as 1."""
    return len(kbar_set(j_prime, j_sigma, n, t, s, complement=True)) or 1


def k_prime_set(j: int, m: int) -> tuple[int, ...]:
    """u with (u+1)(j-1) = 0 mod m: the x(1) = 2u+1 giving non-involutions
    of stabilizer order 2 whose inverse still lies in the orbit."""
    return tuple(u for u in range(m) if ((u + 1) * (j - 1)) % m == 0)


def delta_bar(u: int, j: int, m: int) -> int:
    """1 iff j != 2u+1 mod m, i.e. the full-stabilizer case is excluded."""
    return 0 if (2 * u + 1) % m == j % m else 1


def delta_zero(i: int, u: int, m: int) -> int:
    """1 iff i(u+1) = 0 mod m (the +1 branch of the dimension-2 split)."""
    return 1 if (i * (u + 1)) % m == 0 else 0


def delta_nonzero(i: int, u: int, m: int) -> int:
    """1 iff i(u+1) != 0 mod m (the -1 branch of the dimension-2 split)."""
    return 1 - delta_zero(i, u, m)


def _delta_l(j: int, m: int, r: int, l: int, cap: int) -> int:
    # When p_c_set is empty every remainder fixed point forces a block of
    # fixed points, pinning the transposition count to 2l = cap - r/beta.
    if p_c_set(j, m):
        return 1
    return 1 if 2 * l == cap - m_ratio(j, m, r) else 0


@dataclass(frozen=True)
class HelperTables:
    """The commonly cited residue sets and gate values for one parameter
    tuple; entries whose parameters were not supplied are None."""

    n: int
    t: int
    e_set: tuple[int, ...]
    k_set: tuple[int, ...] | None = None
    alpha: int | None = None
    p_set: tuple[int, ...] | None = None
    p_c_set: tuple[int, ...] | None = None
    delta_pc: int | None = None
    kbar_set: tuple[int, ...] | None = None
    kbar_c_set: tuple[int, ...] | None = None
    delta_kc: int | None = None
    ebar_set: tuple[int, ...] | None = None
    beta: int | None = None
    delta_exists: int | None = None
    m_ratio: int | None = None
    k_prime_set: tuple[int, ...] | None = None
    delta_bar: int | None = None
    delta_zero: int | None = None
    delta_nonzero: int | None = None


def helper_tables(
    n: int,
    t: int,
    *,
    s: int | None = None,
    j: int | None = None,
    j_sigma: int | None = None,
    j_prime: int | None = None,
    r: int | None = None,
    u: int | None = None,
    i: int | None = None,
) -> HelperTables:
    """Assemble the helper entries applicable to the given parameters.

    Raises on non-divisor arguments; all residues are normalized to
    {0..m-1} before use.
    """
    if n < 1 or t < 1 or n % t:
        raise ValueError(f"t={t} must divide n={n}")
    if s is not None and (s < 1 or t % s):
        raise ValueError(f"s={s} must divide t={t}")
    m = n // t
    out: dict = {"n": n, "t": t, "e_set": e_set(m)}
    if j is not None:
        j %= m
        out.update(
            k_set=k_set(j, m),
            alpha=alpha(j, m),
            p_set=p_set(j, m),
            p_c_set=p_c_set(j, m),
            delta_pc=delta_pc(j, m),
            beta=beta(j, m),
        )
        if r is not None:
            out["delta_exists"] = delta_exists(j, m, r, t)
            if r % beta(j, m) == 0:
                out["m_ratio"] = m_ratio(j, m, r)
        if t == 2:
            out["k_prime_set"] = k_prime_set(j, m)
            if u is not None:
                out["delta_bar"] = delta_bar(u, j, m)
            if u is not None and i is not None:
                out["delta_zero"] = delta_zero(i, u, m)
                out["delta_nonzero"] = delta_nonzero(i, u, m)
    if s is not None and j_sigma is not None:
        out["ebar_set"] = ebar_set(j_sigma, n, t, s)
        if j_prime is not None:
            out["kbar_set"] = kbar_set(j_prime, j_sigma, n, t, s)
            out["kbar_c_set"] = kbar_set(j_prime, j_sigma, n, t, s, complement=True)
            out["delta_kc"] = delta_kc(j_prime, j_sigma, n, t, s)
    return HelperTables(**out)


# -- the counting tower -------------------------------------------------


@dataclass
class CountContext:
    """Degree plus a memo store for the divisor-lattice recursions.

    Memoized values are written once and never mutated; use one context
    per thread, or share a finished one freely.
    """

    n: int
    memo: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("degree must be positive")


def _check_t(ctx: CountContext, t: int) -> None:
    if t < 1 or ctx.n % t:
        raise ValueError(f"t={t} must divide n={ctx.n}")


def count_M(ctx: CountContext, t: int) -> int:
    """|M_{n/t}|: permutations fixing n with stabilizer exactly <a^t>.

    phi(n/t) choices of x(t) times the falling product of slot choices
    for x(1)..x(t-1), minus the counts already claimed by proper
    divisors of t.
    """
    _check_t(ctx, t)
    key = ("M", t)
    if key not in ctx.memo:
        m = ctx.n // t
        total = euler_phi(m) * m ** (t - 1) * factorial(t - 1)
        total -= sum(count_M(ctx, s) for s in divisors(t)[:-1])
        ctx.memo[key] = total
    return ctx.memo[key]


def count_T(ctx: CountContext, t: int) -> int:
    """|T_{n/t}|: involutions with stabilizer exactly <a^t>.

    Sum over square roots j of 1 mod n/t and over the number l of
    transpositions in the remainder involution: fixed remainder points
    contribute alpha choices of shift each, transposed pairs a free
    residue each.
    """
    _check_t(ctx, t)
    key = ("T", t)
    if key not in ctx.memo:
        m = ctx.n // t
        total = 0
        for j in e_set(m):
            a = alpha(j, m)
            for l in range((t - 1) // 2 + 1):
                total += (
                    a ** (t - 1 - 2 * l)
                    * m**l
                    * factorial(t - 1)
                    // (factorial(t - 1 - 2 * l) * 2**l * factorial(l))
                )
        total -= sum(count_T(ctx, s) for s in divisors(t)[:-1])
        ctx.memo[key] = total
    return ctx.memo[key]


def count_R(ctx: CountContext, t: int, r: int) -> int:
    """|R_{n/t,r}|: involutions with stabilizer exactly <a^t> and exactly
    r fixed points, the point n included.  Zero when n - r is odd."""
    _check_t(ctx, t)
    n = ctx.n
    if r < 1 or r > n or (n - r) % 2:
        return 0
    key = ("R", t, r)
    if key not in ctx.memo:
        m = ctx.n // t
        total = 0
        for j in e_set(m):
            if not delta_exists(j, m, r, t):
                continue
            mr = m_ratio(j, m, r)
            psize = len(p_set(j, m))
            dpc = delta_pc(j, m)
            for l in range((t - mr) // 2 + 1):
                if not _delta_l(j, m, r, l, t):
                    continue
                if t - 1 - 2 * l < mr - 1:
                    continue
                total += (
                    comb(t - 1 - 2 * l, mr - 1)
                    * psize ** (mr - 1)
                    * dpc ** (t - 2 * l - mr)
                    * m**l
                    * factorial(t - 1)
                    // (factorial(t - 1 - 2 * l) * 2**l * factorial(l))
                )
        total -= sum(count_R(ctx, s, r) for s in divisors(t)[:-1])
        ctx.memo[key] = total
    return ctx.memo[key]


def _coupled_shift_count(
    j_prime: int, j_sigma: int, n: int, t: int, s: int, complement: bool
) -> int:
    """Choices of the degree-s shift l_i at a fixed point of the degree-s
    remainder: l_i must satisfy the involution congruence
    l(1+j') = 0 mod n/s while its residue mod t/s lies in
    p_set(j_sigma, t/s) (or the complement).

    The residue and the shift are coupled by one congruence, so they are
    counted jointly; factoring the count as |p_set| times a set of u's
    overstates it whenever the compatible shifts differ between
    residues, and an empty compatible set must kill the term outright
    (0^k for k > 0) rather than be papered over by a placeholder 1.
    """
    ns = n // s
    ts = t // s
    pool = set(p_c_set(j_sigma, ts) if complement else p_set(j_sigma, ts))
    return sum(
        1 for l in range(ns) if (l * (1 + j_prime)) % ns == 0 and l % ts in pool
    )


def count_C(ctx: CountContext, t: int, s: int, r: int, j_gate: int | None = None) -> int:
    """|C_{n,t,s,r}|: the overcount term of the orbit-involution count.

    Counts involutions that a degree-t remainder with r fixed points
    would generate but whose stabilizer is exactly <a^s> for the proper
    divisor s of t.  With ``j_gate`` given, only those with
    x(t) = j_gate * t are kept (the per-j refinement); the overcount
    recursion carries the gate down unchanged.
    """
    _check_t(ctx, t)
    if s < 1 or t % s or s == t:
        raise ValueError(f"s={s} must be a proper divisor of t={t}")
    key = ("C", t, s, r, j_gate)
    if key not in ctx.memo:
        n = ctx.n
        ts = t // s
        ns = n // s
        nt = n // t
        total = 0
        for j_sigma in e_set(ts):
            if not delta_exists(j_sigma, ts, r, s):
                continue
            mr = m_ratio(j_sigma, ts, r)
            for j_prime in ebar_set(j_sigma, n, t, s):
                if j_gate is not None and (j_prime - j_gate) % nt:
                    continue
                in_p = _coupled_shift_count(j_prime, j_sigma, n, t, s, False)
                in_pc = _coupled_shift_count(j_prime, j_sigma, n, t, s, True)
                for l in range((s - mr) // 2 + 1):
                    if s - 1 - 2 * l < mr - 1:
                        continue
                    total += (
                        comb(s - 1 - 2 * l, mr - 1)
                        * in_p ** (mr - 1)
                        * in_pc ** (s - 2 * l - mr)
                        * factorial(s - 1)
                        // (factorial(s - 1 - 2 * l) * 2**l * factorial(l))
                        * ns**l
                    )
        total -= sum(count_C(ctx, t, p, r, j_gate) for p in divisors(s)[:-1])
        ctx.memo[key] = total
    return ctx.memo[key]


def count_C_tilde(ctx: CountContext, t: int, s: int, r: int, j: int) -> int:
    """The j-gated overcount used by the per-j orbit count."""
    return count_C(ctx, t, s, r, j_gate=j)


def count_X(ctx: CountContext, t: int, r: int) -> int:
    """|X_{n/t,r}|: involutions of stabilizer exactly <a^t> whose orbit
    contains exactly r involutions.  Zero when t - r is negative or odd."""
    _check_t(ctx, t)
    if r < 1 or t - r < 0 or (t - r) % 2:
        return 0
    if t == 1:
        return count_T(ctx, 1)
    key = ("X", t, r)
    if key not in ctx.memo:
        m = ctx.n // t
        half = (t - r) // 2
        shape = factorial(t - 1) // (factorial(r - 1) * 2**half * factorial(half))
        total = sum(alpha(j, m) ** (r - 1) for j in e_set(m)) * m**half * shape
        total -= sum(count_C(ctx, t, s, r) for s in divisors(t)[:-1])
        ctx.memo[key] = total
    return ctx.memo[key]


def count_O(ctx: CountContext, t: int, r: int) -> int:
    """|O_{n/t,r}|: orbits of length t containing exactly r involutions."""
    _check_t(ctx, t)
    if r:
        x = count_X(ctx, t, r)
        if x % r:
            raise ArithmeticError(f"X_{{{ctx.n}/{t},{r}}}={x} not divisible by r={r}")
        return x // r
    total = count_M(ctx, t)
    if total % t:
        raise ArithmeticError("M count not divisible by orbit length")
    return total // t - sum(count_O(ctx, t, rr) for rr in range(1, t + 1))


def count_O_j(ctx: CountContext, t: int, r: int, j: int) -> int:
    """|O_{n/t,r,j}|: orbits of length t, r involutions, and y(t) = j*t.

    Defined for 1 < t < n; the boundary dimensions have no j refinement
    (t = 1 orbits are singletons, t = n has a trivial character group).
    """
    _check_t(ctx, t)
    if not 1 < t < ctx.n:
        raise ValueError(f"per-j orbit counts need 1 < t < n, got t={t}")
    m = ctx.n // t
    if j % m not in e_set(m):
        raise ValueError(f"j={j} is not a square root of 1 mod {m}")
    if r < 1 or t - r < 0 or (t - r) % 2:
        return 0
    key = ("Oj", t, r, j % m)
    if key not in ctx.memo:
        half = (t - r) // 2
        shape = factorial(t - 1) // (factorial(r - 1) * 2**half * factorial(half))
        total = alpha(j, m) ** (r - 1) * m**half * shape
        total -= sum(count_C(ctx, t, s, r, j_gate=j % m) for s in divisors(t)[:-1])
        if total % r:
            raise ArithmeticError(f"r*O count {total} not divisible by r={r}")
        ctx.memo[key] = total // r
    return ctx.memo[key]


def count_I_odd(ctx: CountContext, t: int) -> tuple[int, int]:
    """(plus, zero): indicator census for the odd dimension t.

    Odd-dimensional modules never have indicator -1; the +1 entries come
    exactly from orbits containing an involution, each orbit member
    contributing alpha(j, n/t) characters.  Census convention is
    per (permutation, character): totals add up to (n/t) * |M_{n/t}|.
    """
    if t % 2 == 0:
        raise ValueError(f"dimension t={t} must be odd")
    _check_t(ctx, t)
    n = ctx.n
    m = n // t
    if t == 1:
        plus = sum(alpha(j, m) for j in e_set(m))
    elif t == n:
        plus = n * sum(count_O(ctx, n, r) for r in range(1, n + 1))
    else:
        plus = t * sum(
            alpha(j, m) * count_O_j(ctx, t, r, j)
            for j in e_set(m)
            for r in range(1, t + 1)
        )
    zero = m * count_M(ctx, t) - plus
    return plus, zero


def count_I_t2(ctx: CountContext) -> tuple[int, int, int]:
    """(plus, minus, zero): indicator census for dimension 2, n even.

    A permutation of stabilizer order 2 is pinned by x(2) = 2j and
    x(1) = 2u+1.  Involutions (u(j+1) = 0) contribute alpha(j, n/2)
    characters of indicator +1 each; non-involutions whose inverse sits
    in the orbit ((u+1)(j-1) = 0) split their alpha nonzero characters
    by i(u+1) = 0 into +1 versus -1.  Residues u with j = 2u+1 are full
    stabilizer and excluded.  The enumeration of u covers both members
    of every orbit, so the totals are already per (permutation,
    character).
    """
    n = ctx.n
    if n % 2:
        raise ValueError(f"dimension-2 census needs even n, got {n}")
    m = n // 2
    plus = minus = 0
    for j in e_set(m):
        a = alpha(j, m)
        k = k_set(j, m)
        plus += a * sum(delta_bar(u, j, m) for u in k_set(j, m))
        for u in k_prime_set(j, m):
            if not delta_bar(u, j, m):
                continue
            for i in k:
                ki = (i * (u + 1)) % m
                if ki == 0:
                    plus += 1
                elif (2 * ki) % m == 0:
                    minus += 1
                else:
                    raise ArithmeticError(
                        f"i*(u+1) = {ki} mod {m} escaped {{0, m/2}}"
                    )
    zero = m * count_M(ctx, 2) - plus - minus
    return plus, minus, zero


# -- asymptotic trend report -------------------------------------------


def ratio_report(t: int, m_values) -> list[dict]:
    """Empirical sparsity trends for dimension t across n = m*t.

    For each m, reports the fraction of dimension-t census entries with
    nonzero indicator, the involution share |T|/|M|, the stabilizer
    share |M|/i_{n-1}, and the analytic bound data (root-of-1 count
    against 2^(omega+2), omega against 1.3841 log m / log log m, phi
    against sqrt(m/2)).  Supported for odd t and t = 2, where censuses
    have closed forms.  Rows with an empty census (|M| = 0) are skipped.
    """
    if t != 2 and t % 2 == 0:
        raise ValueError("trend report needs odd t or t = 2")
    rows = []
    for m in m_values:
        if m < 2:
            raise ValueError("m must be at least 2")
        n = m * t
        ctx = CountContext(n)
        m_count = count_M(ctx, t)
        if m_count == 0:
            continue
        total = (n // t) * m_count
        if t == 2:
            plus, minus, _zero = count_I_t2(ctx)
        else:
            plus, _zero = count_I_odd(ctx, t)
            minus = 0
        t_count = count_T(ctx, t)
        inv = involution_count(n - 1)
        e_size = len(e_set(n // t))
        rows.append(
            {
                "m": m,
                "n": n,
                "plus": plus,
                "minus": minus,
                "total": total,
                "ratio_nonzero": Fraction(plus + minus, total),
                "t_over_m": Fraction(t_count, m_count),
                "m_over_inv": Fraction(m_count, inv),
                "e_size": e_size,
                "e_bound": 2 ** (omega(n // t) + 2),
                "omega": omega(m),
                "omega_bound": (
                    1.3841 * math.log(m) / math.log(math.log(m)) if m >= 3 else None
                ),
                "phi": euler_phi(m),
                "phi_bound": math.sqrt(m / 2),
            }
        )
    return rows
