"""Vectorized batch engine for indicator sweeps and censuses.

Rows are residue words stored as numpy arrays of shape (N, n): column u
holds x(u) mod n, column 0 is identically 0 (the fixed top point).  All
the scalar operations of the package (shift action, stabilizer order,
inverse, smallest inverting shift, both indicator routes) have
array-level counterparts here so that full sweeps over S_{n-1} -- about
40 million permutations at n = 12 -- stay inside a few minutes.

Nothing here is approximate: the work is integer array arithmetic, and
the brute-force route reduces its root-of-unity sums through the same
integer cyclotomic basis matrices as the scalar oracle.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .cyclotomic import power_basis_rows
from .matched_pair import divisors

__all__ = [
    "perm_block",
    "stabilizer_orders",
    "shift_rows",
    "inverse_rows",
    "orbit_rep_mask",
    "inversion_rows",
    "reduced_indicator_rows",
    "bruteforce_indicator_rows",
    "stabilized_rows",
    "exact_stabilizer_rows",
    "census_by_dimension",
    "sweep",
    "SweepResult",
]


def _dtype(n: int):
    return np.int8 if n <= 120 else np.int16


def _unit_count(m: int) -> int:
    return sum(1 for j in range(1, m) if math.gcd(j, m) == 1) if m > 1 else 1


def perm_block(n: int, start: int, stop: int) -> np.ndarray:
    """Rows ``start..stop-1`` of the lexicographic listing of S_{n-1}.

    Decoded from ranks in the factorial number system, fully vectorized;
    row r is the r-th word (x(1), ..., x(n-1)) over symbols {1..n-1}.
    """
    k = n - 1
    ranks = np.arange(start, stop, dtype=np.int64)
    count = len(ranks)
    out = np.zeros((count, n), dtype=_dtype(n))
    avail = np.ones((count, k), dtype=bool)
    rows = np.arange(count)
    rem = ranks.copy()
    for col in range(k):
        f = math.factorial(k - 1 - col)
        idx = rem // f
        rem %= f
        csum = np.cumsum(avail, axis=1)
        pos = np.argmax(csum == (idx + 1)[:, None], axis=1)
        out[:, col + 1] = pos + 1
        avail[rows, pos] = False
    return out


def shift_rows(X: np.ndarray, l: int) -> np.ndarray:
    """Row-wise x <| a^l: (x <| a^l)(u) = x(u+l) - x(l) mod n."""
    n = X.shape[1]
    cols = (np.arange(n) + l) % n
    return (X[:, cols] - X[:, [l % n]]) % n


def _stabilized_by(X: np.ndarray, d: int) -> np.ndarray:
    n = X.shape[1]
    cols = (np.arange(n) + d) % n
    return ((X[:, cols] - X[:, [d]]) % n == X).all(axis=1)


def stabilizer_orders(X: np.ndarray) -> np.ndarray:
    """Per-row minimal divisor t of n with a^t stabilizing the row."""
    n = X.shape[1]
    t = np.zeros(len(X), dtype=np.int16)
    for d in divisors(n):
        open_rows = t == 0
        if not open_rows.any():
            break
        if d == n:
            t[open_rows] = n
            break
        idx = np.flatnonzero(open_rows)
        ok = _stabilized_by(X[idx], d)
        t[idx[ok]] = d
    return t


def inverse_rows(X: np.ndarray) -> np.ndarray:
    n = X.shape[1]
    out = np.empty_like(X)
    rows = np.arange(len(X))[:, None]
    out[rows, X.astype(np.intp)] = np.arange(n, dtype=X.dtype)[None, :]
    return out


def _row_keys(X: np.ndarray) -> np.ndarray:
    # Base-n encoding of the one-line form; fits int64 for n <= 16.
    n = X.shape[1]
    weights = n ** np.arange(n - 2, -1, -1, dtype=np.int64)
    return X[:, 1:].astype(np.int64) @ weights


def orbit_rep_mask(X: np.ndarray, t: int) -> np.ndarray:
    """True where the row is the lexicographically smallest in its orbit.

    Rows already beaten by an earlier shift are dropped from later
    comparisons, so the expected work decays harmonically in l.
    """
    keys = _row_keys(X)
    mask = np.ones(len(X), dtype=bool)
    for l in range(1, t):
        idx = np.flatnonzero(mask)
        if not len(idx):
            break
        sub = X[idx]
        mask[idx] = keys[idx] < _row_keys(shift_rows(sub, l))
    return mask


def orbit_involution_counts(X: np.ndarray, t: int) -> np.ndarray:
    """Per-row count of involutions among the t orbit members.

    Definition-level: each member y = x <| a^l is tested for y*y = id
    by gathering y over itself.
    """
    n = X.shape[1]
    idx = np.arange(n, dtype=X.dtype)
    out = np.zeros(len(X), dtype=np.int16)
    for l in range(1, t + 1):
        Y = shift_rows(X, l)
        out += (np.take_along_axis(Y, Y.astype(np.intp), axis=1) == idx).all(axis=1)
    return out


def inversion_rows(X: np.ndarray, t: int):
    """(in_orbit, s, u1, u2) per row; all rows must have stabilizer order t.

    u2 is 0 on rows whose inverse is outside the orbit (and unused there).
    """
    n = X.shape[1]
    m = n // t
    xt = X[:, t % n].astype(np.int64)
    if t != n and (xt % t).any():
        raise AssertionError("x(t) not a multiple of t; wrong t for these rows")
    u1 = ((xt + t) // t) % m
    Xi = inverse_rows(X)
    s = np.zeros(len(X), dtype=np.int16)
    u2 = np.zeros(len(X), dtype=np.int64)
    found = np.zeros(len(X), dtype=bool)
    for l in range(1, t + 1):
        cand = ~found & ((X[:, (1 + l) % n] - X[:, l % n]) % n == Xi[:, 1])
        hit = np.zeros(len(X), dtype=bool)
        idx = np.flatnonzero(cand)
        if len(idx):
            hit[idx] = (shift_rows(X[idx], l) == Xi[idx]).all(axis=1)
        if hit.any():
            vals = X[hit, l % n].astype(np.int64) + l
            if (vals % t).any():
                raise AssertionError("x(s)+s not a multiple of t")
            s[hit] = l
            u2[hit] = (vals // t) % m
            found |= hit
    return found, s, u1, u2


def reduced_indicator_rows(X: np.ndarray, t: int) -> np.ndarray:
    """(N, n/t) matrix of indicators via the congruence conditions."""
    n = X.shape[1]
    m = n // t
    found, _s, u1, u2 = inversion_rows(X, t)
    out = np.zeros((len(X), m), dtype=np.int8)
    for i in range(m):
        nz = found & ((i * u1) % m == 0)
        if m % 2:
            out[nz, i] = 1
        else:
            k = (i * u2) % m
            neg = nz & (k != 0)
            if ((2 * k[neg]) % m != 0).any():
                raise ArithmeticError("i*u2 escaped {0, m/2} although i*u1 = 0")
            out[nz & (k == 0), i] = 1
            out[neg, i] = -1
    return out


def bruteforce_indicator_rows(X: np.ndarray, t: int) -> np.ndarray:
    """(N, n/t) matrix of indicators via the literal averaged character sum.

    Transporters are found by scanning every power of the n-cycle for
    every orbit member; exponent classes are tallied and the resulting
    root-of-unity sums reduced exactly through the integer cyclotomic
    basis matrix.
    """
    n = X.shape[1]
    m = n // t
    N = len(X)
    counts = np.zeros((N, m), dtype=np.int64)
    for l in range(1, t + 1):
        Y = shift_rows(X, l)
        Yi = inverse_rows(Y)
        for b in range(n):
            # cheap one-column necessary condition before the full match
            cand = np.flatnonzero((Yi[:, (1 + b) % n] - Yi[:, b]) % n == Y[:, 1])
            if not len(cand):
                continue
            sub = Yi[cand]
            full = (shift_rows(sub, b) == Y[cand]).all(axis=1)
            hit = cand[full]
            if not len(hit):
                continue
            e = (Yi[hit, b].astype(np.int64) + b) % n
            ok = e % t == 0
            np.add.at(counts, (hit[ok], (e[ok] // t) % m), 1)
    basis = np.array(power_basis_rows(m), dtype=np.int64)
    out = np.empty((N, m), dtype=np.int8)
    for i in range(m):
        eclass = (i * np.arange(m)) % m
        d = np.zeros((N, m), dtype=np.int64)
        for c in range(m):
            d[:, eclass[c]] += counts[:, c]
        coords = d @ basis
        if coords[:, 1:].any():
            raise ArithmeticError("indicator sum is not a rational integer")
        v = coords[:, 0]
        if (v % n).any():
            raise ArithmeticError("indicator sum is not divisible by |C_n|")
        v //= n
        if ((v < -1) | (v > 1)).any():
            raise ArithmeticError("indicator outside {-1, 0, +1}")
        out[:, i] = v
    return out


def stabilized_rows(n: int, t: int, max_work: int | None = None) -> np.ndarray:
    """All rows stabilized by a^t, built directly from (j, sigma, u) seeds.

    The number of candidates is phi(n/t) * (n/t)^(t-1) * (t-1)!; the
    workload guard rejects strata that would not fit in memory anyway.
    """
    from .construct import WorkloadExceeded, _sym_words, default_max_work

    limit = default_max_work() if max_work is None else max_work
    m = n // t
    candidates = (
        math.factorial(n - 1)
        if t == n
        else _unit_count(m) * m ** (t - 1) * math.factorial(t - 1)
    )
    if candidates > limit:
        raise WorkloadExceeded(
            f"workload guard: stratum (n={n}, t={t}) has {candidates} "
            f"candidates, limit {limit}"
        )
    if t == n:
        # a^n = 1 stabilizes everything; the seeds degenerate to S_{n-1}.
        return perm_block(n, 0, math.factorial(n - 1))
    units = [j for j in range(m) if math.gcd(j, m) == 1] if m > 1 else [0]
    sigmas = np.array(list(_sym_words(t - 1)), dtype=np.int64)  # (S, t)
    n_u = m ** (t - 1)
    u_grid = np.empty((n_u, t - 1), dtype=np.int64)
    for i in range(t - 1):
        u_grid[:, i] = (np.arange(n_u) // m ** (t - 2 - i)) % m
    blocks = []
    for j in units:
        jt = (j * t) % n
        for sw in sigmas:
            base = (u_grid * t + sw[None, 1:]) % n  # x(w), w = 1..t-1
            block = np.zeros((n_u, n), dtype=_dtype(n))
            for q in range(m):
                off = (q * jt) % n
                block[:, (q * t) % n] = off
                for w in range(1, t):
                    block[:, q * t + w] = (off + base[:, w - 1]) % n
            blocks.append(block)
    return np.concatenate(blocks, axis=0)


def exact_stabilizer_rows(n: int, t: int, max_work: int | None = None) -> np.ndarray:
    """Rows whose stabilizer is exactly <a^t> (the degree-t census set)."""
    X = stabilized_rows(n, t, max_work)
    keep = np.ones(len(X), dtype=bool)
    tt, primes = t, []
    p = 2
    while tt > 1:
        if tt % p == 0:
            primes.append(p)
            while tt % p == 0:
                tt //= p
        p += 1
    for p in primes:
        keep &= ~_stabilized_by(X, t // p)
    return X[keep]


def census_by_dimension(n: int, t: int, max_work: int | None = None) -> tuple[int, int, int]:
    """(plus, minus, zero) tallies over all (x, i) pairs of dimension t.

    x runs over the permutations with stabilizer exactly <a^t> and i over
    the n/t characters, i.e. one entry per permutation and character --
    each orbit is counted once per member.
    """
    X = exact_stabilizer_rows(n, t, max_work)
    m = n // t
    N = len(X)
    if N == 0:
        return 0, 0, 0
    ind = reduced_indicator_rows(X, t)
    plus = int((ind == 1).sum())
    minus = int((ind == -1).sum())
    zero = N * m - plus - minus
    return plus, minus, zero


@dataclass
class SweepResult:
    """Exhaustive verification data for one degree n."""

    n: int
    mismatches: int = 0
    permutations: int = 0
    m_counts: dict[int, int] = field(default_factory=dict)  # |{x : stab t}|
    orbit_counts: dict[int, int] = field(default_factory=dict)
    tallies: dict[int, dict[int, int]] = field(default_factory=dict)  # per-(x,i)
    # t -> {r: number of orbits containing exactly r involutions}
    orbit_involutions: dict[int, dict[int, int]] = field(default_factory=dict)

    @property
    def irrep_classes(self) -> int:
        return sum(c * (self.n // t) for t, c in self.orbit_counts.items())

    @property
    def dim_squared_sum(self) -> int:
        return sum(
            c * (self.n // t) * t * t for t, c in self.orbit_counts.items()
        )


def sweep(n: int, chunk: int = 2_000_000, threads: int = 0) -> SweepResult:
    """Verify the two indicator routes against each other over every
    orbit of S_{n-1} and collect census tallies.

    Streams the (n-1)! permutations in chunks, keeps one canonical
    representative per orbit, then evaluates both indicator routes on
    every representative and every character index.  Tallies use the
    per-(permutation, character) convention (orbit rows weighted by t).
    """
    total = math.factorial(n - 1)
    res = SweepResult(n=n, permutations=total)
    buffers: dict[int, list[np.ndarray]] = {t: [] for t in divisors(n)}
    for t in divisors(n):
        res.m_counts[t] = 0

    def handle(bounds: tuple[int, int]) -> list[tuple[int, int, np.ndarray]]:
        X = perm_block(n, *bounds)
        t_arr = stabilizer_orders(X)
        out = []
        for t in divisors(n):
            Xt = X[t_arr == t]
            count = len(Xt)
            if count and t > 1:
                Xt = Xt[orbit_rep_mask(Xt, t)]
            out.append((t, count, Xt))
        return out

    spans = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = pool.map(handle, spans)
            for parts in results:
                for t, count, Xt in parts:
                    res.m_counts[t] += count
                    if len(Xt):
                        buffers[t].append(Xt)
    else:
        for bounds in spans:
            for t, count, Xt in handle(bounds):
                res.m_counts[t] += count
                if len(Xt):
                    buffers[t].append(Xt)

    for t in divisors(n):
        parts = buffers[t]
        reps = (
            np.concatenate(parts, axis=0)
            if parts
            else np.zeros((0, n), dtype=_dtype(n))
        )
        res.orbit_counts[t] = len(reps)
        tally = {1: 0, -1: 0, 0: 0}
        hist: dict[int, int] = {}
        if len(reps):
            red = reduced_indicator_rows(reps, t)
            bru = bruteforce_indicator_rows(reps, t)
            res.mismatches += int((red != bru).sum())
            for v in (1, -1, 0):
                tally[v] = int((red == v).sum()) * t
            counts = orbit_involution_counts(reps, t)
            vals, freq = np.unique(counts, return_counts=True)
            hist = {int(v): int(c) for v, c in zip(vals, freq)}
        res.tallies[t] = tally
        res.orbit_involutions[t] = hist
    return res
