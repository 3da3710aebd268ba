"""Independent oracles built from definitions, not closed forms.

mu(N) = N * prod_{p | N} (1 + 1/p) equals the divisor sum
sum_{d | N, d squarefree} N/d, and nu_inf(N) = sum_{d | N} phi(gcd(d, N/d)).
Both sums sieve over d in O(limit log limit), touching none of the
multiplicative machinery they are meant to check.
"""

from __future__ import annotations

from math import gcd, isqrt

import numpy as np


def squarefree_mask(limit: int) -> np.ndarray:
    mask = np.ones(limit + 1, dtype=bool)
    mask[0] = False
    for p in range(2, isqrt(limit) + 1):
        if mask[p] and all(p % q for q in range(2, p)):
            mask[p * p :: p * p] = False
    return mask


def mu_divisor_sum(limit: int) -> np.ndarray:
    """mu(N) for all N <= limit via sum over squarefree divisors."""
    sf = squarefree_mask(limit)
    out = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        if sf[d]:
            out[d::d] += np.arange(1, limit // d + 1, dtype=np.int64)
    return out


def nu_inf_divisor_sum(limit: int) -> np.ndarray:
    """nu_inf(N) for all N <= limit via the phi-of-gcd divisor sum."""
    phi = _phi_by_counting(isqrt(limit))
    out = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        k = np.arange(1, limit // d + 1, dtype=np.int64)
        # N = d*k, so gcd(d, N/d) = gcd(d, k) <= sqrt(N)
        out[d::d] += phi[np.gcd(d, k)]
    return out


def _phi_by_counting(limit: int) -> np.ndarray:
    """phi(m) by literally counting coprime residues, m <= limit."""
    phi = np.zeros(limit + 1, dtype=np.int64)
    for m in range(1, limit + 1):
        phi[m] = sum(1 for a in range(1, m + 1) if gcd(a, m) == 1)
    return phi


def factor_dumb(n: int) -> tuple[tuple[int, int], ...]:
    """Factor by dividing out every d = 2, 3, 4, ... in turn."""
    m = n
    out = []
    d = 2
    while m > 1:
        e = 0
        while m % d == 0:
            m //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1
    return tuple(out)
