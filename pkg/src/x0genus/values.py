"""The set of attained genus values and its complement.

If n = g0(N) for some level N, then N < 12n + 18*sqrt(n) + 40 (a direct
consequence of the lower bound), so scanning all levels up to that bound
decides attainability for every n <= x at once.  The attained set is kept
as a bitmap: one bit per candidate value, so x = 10**8 is still feasible.

Parity is governed by a short classification: g0(N) is even exactly when N
falls in one of six explicit families (small exceptional levels, four
prime-power shapes, and two 2*p**r / 4*p**r shapes).  The classification is
implemented both as a per-level predicate and as a constructive enumeration
used for whole-range verification.

Levels divisible by more than two distinct odd primes satisfy the stronger
congruence g0(N) = 1 (mod 2**(s-2)), s the number of those primes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt, log
from typing import Optional

import numpy as np

from .arith import factorize, primes_up_to
from .genus import iter_blocks

# attained_genera refuses scans past this many levels (time, not memory)
DEFAULT_SCAN_CAPACITY = 3 * 10**8

EXCEPTIONAL_EVEN_LEVELS = frozenset({1, 2, 3, 4, 8, 16})


def scan_limit_for(x: int) -> int:
    """Smallest level budget guaranteeing completeness for values up to x.

    ceil(12x + 18*sqrt(x) + 40) with sqrt rounded up, plus one defensively;
    the underlying inequality is strict, so rounding up is the safe side.
    """
    s = isqrt(x)
    if s * s < x:
        s += 1
    return 12 * x + 18 * s + 40 + 1


@dataclass(frozen=True)
class MissedValuesReport:
    """Positive integers up to x that are not the genus of any level."""

    x: int
    scan_limit: int
    missed: tuple[int, ...]
    attained_count: int
    odd_missed: tuple[int, ...]
    first_odd_position: Optional[int]  # 1-based index into missed


def attained_genera(x: int, capacity: int = DEFAULT_SCAN_CAPACITY, threads: int = 1) -> np.ndarray:
    """Bitmap over [0, x]: bit n set iff some level has genus n.

    Completeness is guaranteed by scanning every level below
    scan_limit_for(x).
    """
    if x < 1:
        raise ValueError(f"need x >= 1, got {x}")
    limit = scan_limit_for(x)
    if limit > capacity:
        raise ValueError(
            f"x={x} needs a scan over {limit} levels, beyond capacity {capacity}"
        )
    attained = np.zeros(x + 1, dtype=bool)
    for blk in iter_blocks(1, limit, threads=threads):
        g = blk.genus
        attained[g[g <= x]] = True
    return attained


def missed_values(x: int, capacity: int = DEFAULT_SCAN_CAPACITY, threads: int = 1) -> MissedValuesReport:
    """Complement of the attained set within [1, x], with parity bookkeeping.

    Zero is attained (level 1 has genus 0) and excluded from the counts,
    which cover positive n only.
    """
    attained = attained_genera(x, capacity=capacity, threads=threads)
    missed = np.nonzero(~attained[1:])[0] + 1
    odd = missed[missed % 2 == 1]
    first_odd = None
    if len(odd):
        first_odd = int(np.searchsorted(missed, odd[0])) + 1
    return MissedValuesReport(
        x=x,
        scan_limit=scan_limit_for(x),
        missed=tuple(int(v) for v in missed),
        attained_count=x - len(missed),
        odd_missed=tuple(int(v) for v in odd),
        first_odd_position=first_odd,
    )


@dataclass(frozen=True)
class ParityFamily:
    """Which of the six even-genus families a level belongs to, if any."""

    family_id: Optional[int]
    witness: str


def _matching_families(n: int) -> list[tuple[int, str]]:
    matches: list[tuple[int, str]] = []
    if n in EXCEPTIONAL_EVEN_LEVELS:
        matches.append((1, f"n = {n}, one of {sorted(EXCEPTIONAL_EVEN_LEVELS)}"))
    factors = factorize(n).factors
    if len(factors) == 1:
        p, r = factors[0]
        if p % 8 == 5:
            matches.append((2, f"n = {p}^{r} with {p} = 5 (mod 8)"))
        if p % 8 == 7 and r % 2 == 1:
            matches.append((3, f"n = {p}^{r} with {p} = 7 (mod 8), odd exponent"))
        if p % 8 == 3 and r % 2 == 0:
            matches.append((4, f"n = {p}^{r} with {p} = 3 (mod 8), even exponent"))
    elif len(factors) == 2 and factors[0][0] == 2:
        two_exp = factors[0][1]
        p, r = factors[1]
        if two_exp == 1 and p % 8 in (3, 5):
            matches.append((5, f"n = 2 * {p}^{r} with {p} = +-3 (mod 8)"))
        if two_exp == 2 and p % 4 == 3 and r % 2 == 1:
            matches.append((6, f"n = 4 * {p}^{r} with {p} = 3 (mod 4), odd exponent"))
    return matches


def even_genus_family(n: int) -> ParityFamily:
    """Classify n among the six families with even genus (or none)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    matches = _matching_families(n)
    if not matches:
        return ParityFamily(None, "no family matches; genus is odd")
    if len(matches) > 1:
        # the six cases are mutually exclusive by construction
        raise RuntimeError(f"families {[m[0] for m in matches]} overlap at n={n}")
    fid, witness = matches[0]
    return ParityFamily(fid, witness)


def family_membership_bitmap(limit: int) -> np.ndarray:
    """Bool array over [0, limit]: constructive enumeration of all six families.

    Enumerating members directly (primes and their powers) is far cheaper
    than classifying every level, and gives an independent route for
    whole-range verification against genus parity.
    """
    member = np.zeros(limit + 1, dtype=bool)
    for n in EXCEPTIONAL_EVEN_LEVELS:
        if n <= limit:
            member[n] = True
    ps = primes_up_to(limit)
    odd = ps[ps % 2 == 1]
    for p in odd:
        p = int(p)
        m8 = p % 8
        pr = p
        r = 1
        while pr <= limit:
            if m8 == 5:
                member[pr] = True
            elif m8 == 7 and r % 2 == 1:
                member[pr] = True
            elif m8 == 3 and r % 2 == 0:
                member[pr] = True
            if m8 in (3, 5) and 2 * pr <= limit:
                member[2 * pr] = True
            if p % 4 == 3 and r % 2 == 1 and 4 * pr <= limit:
                member[4 * pr] = True
            pr *= p
            r += 1
    return member


def verify_parity_classification(limit: int, threads: int = 1) -> list[int]:
    """Levels <= limit where family membership disagrees with genus parity.

    Expected empty.
    """
    member = family_membership_bitmap(limit)
    bad: list[int] = []
    for blk in iter_blocks(1, limit, threads=threads):
        even = blk.genus % 2 == 0
        mism = np.nonzero(even != member[blk.lo : blk.hi + 1])[0]
        bad.extend(int(i) + blk.lo for i in mism)
    return bad


def distinct_odd_prime_counts(limit: int) -> np.ndarray:
    """Number of distinct odd prime divisors for every n <= limit."""
    counts = np.zeros(limit + 1, dtype=np.int8)
    for p in primes_up_to(limit):
        p = int(p)
        if p == 2:
            continue
        counts[p::p] += 1
    return counts


def power_of_two_congruence_check(limit: int, threads: int = 1) -> list[int]:
    """Levels <= limit violating g0(N) = 1 (mod 2**(s-2)).

    Only levels with s > 2 distinct odd prime divisors are in scope.
    Expected empty.
    """
    s_counts = distinct_odd_prime_counts(limit)
    bad: list[int] = []
    for blk in iter_blocks(1, limit, threads=threads):
        s = s_counts[blk.lo : blk.hi + 1].astype(np.int64)
        in_scope = s > 2
        if not np.any(in_scope):
            continue
        modulus_mask = (np.int64(1) << np.maximum(s - 2, 0)) - 1
        viol = in_scope & (((blk.genus - 1) & modulus_mask) != 0)
        bad.extend(int(i) + blk.lo for i in np.nonzero(viol)[0])
    return bad


def even_attained_count(x: int, capacity: int = DEFAULT_SCAN_CAPACITY, threads: int = 1) -> tuple[int, float]:
    """Count of even attained values in [1, x], and its ratio to x/log x.

    The ratio is a slow-convergence diagnostic (the count is asymptotically
    proportional to x/log x); it is reported, never gated.
    """
    attained = attained_genera(x, capacity=capacity, threads=threads)
    count = int(np.count_nonzero(attained[2::2]))
    return count, count / (x / log(x))
