"""Exact genus of the modular curve X0(N).

The genus is assembled from four multiplicative quantities:

    g0(N) = 1 + mu/12 - nu2/4 - nu3/3 - nu_inf/2

where mu is the index of the level-N congruence subgroup in SL2(Z), nu2 and
nu3 count solutions in Z/NZ of x^2 + 1 = 0 and x^2 + x + 1 = 0, and nu_inf
counts cusps.  Each has a closed form over the prime factorization of N,
implemented here next to brute-force counterparts (exhaustive residue scans
and divisor sums) that serve as independent oracles in the test suite.

All arithmetic is integer-exact: the genus is computed from the identity
12*(g - 1) = mu - 3*nu2 - 4*nu3 - 6*nu_inf, whose left side must be
divisible by 12.  A divisibility failure signals a formula bug and raises
ConsistencyError rather than rounding.

For batch ranges there is a segmented, numpy-vectorized sieve
(breakdown_block / iter_blocks) that computes all five quantities for every
level in a window.  Segments are fixed-size and independent, so results are
identical no matter how work is sharded across threads.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterator

import numpy as np

from .arith import Factorization, SpfTable, factorize, primes_up_to

# Exhaustive residue scans are O(n); refuse far-too-large inputs instead of
# silently grinding.  Overridable via the environment for bigger sessions.
DEFAULT_BRUTE_CEILING = 10**6
BRUTE_CEILING_ENV = "X0GENUS_BRUTE_CEILING"

# Fixed segment width for batch scans.  Sharding over segments of this size
# is what --threads parallelizes; keeping the width constant makes every
# aggregate bit-identical regardless of thread count.
SEGMENT = 1 << 17


class ConsistencyError(RuntimeError):
    """Internal identity 12 | mu - 3*nu2 - 4*nu3 - 6*nu_inf failed."""


def _brute_ceiling() -> int:
    raw = os.environ.get(BRUTE_CEILING_ENV)
    return int(raw) if raw else DEFAULT_BRUTE_CEILING


@dataclass(frozen=True)
class GenusBreakdown:
    """The quintuple (mu, nu2, nu3, nu_inf, genus) for one level n."""

    n: int
    mu: int
    nu2: int
    nu3: int
    nu_inf: int
    genus: int

    def __post_init__(self):
        if 12 * (self.genus - 1) != self.mu - 3 * self.nu2 - 4 * self.nu3 - 6 * self.nu_inf:
            raise ConsistencyError(f"breakdown identity fails at n={self.n}")


def mu(f: Factorization) -> int:
    """Index of the level-n subgroup: prod (p+1) * p**(e-1)."""
    m = 1
    for p, e in f.factors:
        m *= (p + 1) * p ** (e - 1)
    return m


def nu2(f: Factorization) -> int:
    """Solutions of x^2 + 1 = 0 in Z/nZ.

    Zero when 4 | n or some prime factor is 3 mod 4; otherwise 2**s with
    s the number of prime factors that are 1 mod 4.  The prime 2 (to the
    first power) neither kills the count nor contributes a factor of 2.
    """
    count = 1
    for p, e in f.factors:
        if p == 2:
            if e >= 2:
                return 0
        elif p % 4 == 3:
            return 0
        else:
            count *= 2
    return count


def nu3(f: Factorization) -> int:
    """Solutions of x^2 + x + 1 = 0 in Z/nZ.

    Zero when 9 | n or some prime factor is 2 mod 3; otherwise 2**t with
    t the number of prime factors that are 1 mod 3.  The prime 3 itself
    behaves like 2 in nu2: only its square kills the count.
    """
    count = 1
    for p, e in f.factors:
        if p == 3:
            if e >= 2:
                return 0
        elif p % 3 == 2:
            return 0
        else:
            count *= 2
    return count


def theta(p: int, r: int) -> int:
    """Cusp count contribution of one prime power p**r.

    theta(p, 2R+1) = 2 * p**R    and    theta(p, 2R) = (p+1) * p**(R-1).
    """
    if r < 1:
        raise ValueError(f"exponent must be >= 1, got {r}")
    if r % 2:
        return 2 * p ** (r // 2)
    return (p + 1) * p ** (r // 2 - 1)


def nu_infinity(f: Factorization) -> int:
    """Number of cusps: prod theta(p, e) over the factorization."""
    count = 1
    for p, e in f.factors:
        count *= theta(p, e)
    return count


def nu2_brute(n: int, ceiling: int | None = None) -> int:
    """Count x in Z/nZ with x^2 + 1 = 0 by exhaustive scan."""
    _check_brute(n, ceiling)
    x = np.arange(n, dtype=np.int64)
    return int(np.count_nonzero((x * x + 1) % n == 0))


def nu3_brute(n: int, ceiling: int | None = None) -> int:
    """Count x in Z/nZ with x^2 + x + 1 = 0 by exhaustive scan."""
    _check_brute(n, ceiling)
    x = np.arange(n, dtype=np.int64)
    return int(np.count_nonzero((x * x + x + 1) % n == 0))


def nu_infinity_brute(n: int, ceiling: int | None = None) -> int:
    """Cusp count via the divisor sum  sum_{d | n} phi(gcd(d, n/d))."""
    _check_brute(n, ceiling)
    from .arith import euler_phi

    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += euler_phi(factorize(gcd(d, n // d)))
            q = n // d
            if q != d:
                total += euler_phi(factorize(gcd(q, d)))
    return total


def _check_brute(n: int, ceiling: int | None) -> None:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    limit = _brute_ceiling() if ceiling is None else ceiling
    if n > limit:
        raise ValueError(
            f"n={n} exceeds brute-force ceiling {limit}"
            f" (raise via {BRUTE_CEILING_ENV} or the ceiling argument)"
        )


def breakdown_from_factorization(f: Factorization) -> GenusBreakdown:
    m = mu(f)
    n2 = nu2(f)
    n3 = nu3(f)
    ni = nu_infinity(f)
    twelve_g = m - 3 * n2 - 4 * n3 - 6 * ni + 12
    if twelve_g % 12:
        raise ConsistencyError(f"12 does not divide genus numerator at n={f.n}")
    return GenusBreakdown(f.n, m, n2, n3, ni, twelve_g // 12)


def genus(n: int) -> GenusBreakdown:
    """Exact genus breakdown for a single level n >= 1."""
    return breakdown_from_factorization(factorize(n))


def genus_range(lo: int, hi: int, spf: SpfTable) -> Iterator[GenusBreakdown]:
    """Breakdowns for every level in [lo, hi], ascending.

    Factorizations come from the smallest-prime-factor table, so the total
    work is O((hi - lo) * log hi).
    """
    if lo < 1:
        raise ValueError(f"need lo >= 1, got {lo}")
    if hi > spf.limit:
        raise ValueError(f"hi={hi} exceeds table limit {spf.limit}")
    for n in range(lo, hi + 1):
        yield breakdown_from_factorization(spf.factorize(n))


@dataclass(frozen=True)
class GenusBlock:
    """Vectorized breakdowns for the contiguous window [lo, hi].

    Arrays are indexed by n - lo and carry exact int64 values.
    """

    lo: int
    hi: int
    mu: np.ndarray
    nu2: np.ndarray
    nu3: np.ndarray
    nu_inf: np.ndarray
    genus: np.ndarray

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    @property
    def levels(self) -> np.ndarray:
        return np.arange(self.lo, self.hi + 1, dtype=np.int64)

    def breakdown(self, n: int) -> GenusBreakdown:
        i = n - self.lo
        if not 0 <= i < len(self):
            raise ValueError(f"{n} outside block [{self.lo}, {self.hi}]")
        return GenusBreakdown(
            n, int(self.mu[i]), int(self.nu2[i]), int(self.nu3[i]),
            int(self.nu_inf[i]), int(self.genus[i]),
        )


def breakdown_block(lo: int, hi: int, primes: np.ndarray | None = None) -> GenusBlock:
    """Compute all five quantities for every level in [lo, hi] at once.

    A segmented multiplicative sieve: each prime p <= sqrt(hi) strips its
    powers out of every level in the window while accumulating the closed
    forms; whatever remains of a level afterwards is 1 or a single large
    prime, absorbed in one vectorized pass at the end.
    """
    if lo < 1:
        raise ValueError(f"need lo >= 1, got {lo}")
    if hi < lo:
        raise ValueError(f"empty range [{lo}, {hi}]")
    if primes is None:
        primes = primes_up_to(isqrt(hi))
    size = hi - lo + 1
    rem = np.arange(lo, hi + 1, dtype=np.int64)
    mu_a = rem.copy()
    nu2_a = np.ones(size, dtype=np.int64)
    nu3_a = np.ones(size, dtype=np.int64)
    nui_a = np.ones(size, dtype=np.int64)

    for p in primes:
        p = int(p)
        if p * p > hi:
            break
        start = ((lo + p - 1) // p) * p
        if start > hi:
            continue
        sl = slice(start - lo, size, p)
        mu_a[sl] = mu_a[sl] // p * (p + 1)
        if p == 2:
            if 4 <= hi:
                s4 = ((lo + 3) // 4) * 4
                if s4 <= hi:
                    nu2_a[s4 - lo :: 4] = 0
        elif p % 4 == 1:
            nu2_a[sl] *= 2
        else:
            nu2_a[sl] = 0
        if p == 3:
            if 9 <= hi:
                s9 = ((lo + 8) // 9) * 9
                if s9 <= hi:
                    nu3_a[s9 - lo :: 9] = 0
        elif p % 3 == 1:
            nu3_a[sl] *= 2
        else:
            nu3_a[sl] = 0
        # cusp factor: lift each level from theta(p, j-1) to theta(p, j)
        # while dividing rem by one power of p per pass
        pj = p
        j = 1
        th_prev = 1
        while pj <= hi:
            start_j = ((lo + pj - 1) // pj) * pj
            if start_j > hi:
                break
            slj = slice(start_j - lo, size, pj)
            th = theta(p, j)
            nui_a[slj] = nui_a[slj] // th_prev * th
            rem[slj] //= p
            th_prev = th
            pj *= p
            j += 1

    # leftover cofactor is 1 or a prime > sqrt(hi), always to the first power
    big = rem > 1
    if np.any(big):
        r = rem[big]
        mu_a[big] = mu_a[big] // r * (r + 1)
        nui_a[big] *= 2
        nu2_a[big] *= np.where(r % 4 == 1, 2, np.where(r % 4 == 3, 0, 1))
        nu3_a[big] *= np.where(r % 3 == 1, 2, np.where(r % 3 == 2, 0, 1))

    twelve_g = mu_a - 3 * nu2_a - 4 * nu3_a - 6 * nui_a + 12
    if np.any(twelve_g % 12):
        bad = int(np.nonzero(twelve_g % 12)[0][0]) + lo
        raise ConsistencyError(f"12 does not divide genus numerator at n={bad}")
    g = twelve_g // 12
    if np.any(g < 0):
        bad = int(np.nonzero(g < 0)[0][0]) + lo
        raise ConsistencyError(f"negative genus at n={bad}")
    return GenusBlock(lo, hi, mu_a, nu2_a, nu3_a, nui_a, g)


def iter_blocks(
    lo: int,
    hi: int,
    segment: int = SEGMENT,
    threads: int = 1,
) -> Iterator[GenusBlock]:
    """Yield breakdown blocks covering [lo, hi] in order.

    Segmentation is fixed by `segment`, never by `threads`; worker count
    only changes how many segments are in flight, so every consumer sees
    the same blocks in the same order.
    """
    if hi < lo:
        return
    primes = primes_up_to(isqrt(hi))
    starts = range(lo, hi + 1, segment)
    if threads <= 1:
        for a in starts:
            yield breakdown_block(a, min(a + segment - 1, hi), primes)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        window = threads * 2
        pending = []
        it = iter(starts)
        for a in it:
            pending.append(pool.submit(breakdown_block, a, min(a + segment - 1, hi), primes))
            if len(pending) >= window:
                yield pending.pop(0).result()
        while pending:
            yield pending.pop(0).result()


def genus_table(limit: int, threads: int = 1) -> GenusBlock:
    """Single block covering [1, limit] (convenience for whole-range scans)."""
    blocks = list(iter_blocks(1, limit, threads=threads))
    if len(blocks) == 1:
        return blocks[0]
    return GenusBlock(
        1,
        limit,
        np.concatenate([b.mu for b in blocks]),
        np.concatenate([b.nu2 for b in blocks]),
        np.concatenate([b.nu3 for b in blocks]),
        np.concatenate([b.nu_inf for b in blocks]),
        np.concatenate([b.genus for b in blocks]),
    )
