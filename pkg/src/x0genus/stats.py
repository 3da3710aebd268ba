"""Statistics of the genus across levels.

Averages: (1/B) sum g0(N)/N tends to 5/(4 pi^2) and (1/B^2) sum g0(N) to
5/(8 pi^2).  Behind both sits the Dirichlet series

    F(s) = sum_{N >= 1} (mu(N)/N) N^(-s) = zeta(s) zeta(s+1) / zeta(2s+2)

for s > 1, evaluated here two ways (partial sums with a rigorous tail
bound, and the zeta product via Euler-Maclaurin) so each route checks the
other.

Residue classes mod an odd prime ell: the density of levels with
g0(N) = 1 (mod ell) is

    P(ell) = 1 - (1 - 1/ell^3) prod (1 - 1/(s^2 + s)),

the product over primes s = -1 (mod ell).  Truncating the product at
prime_limit under-counts P(ell) by at most 1/prime_limit, so exact_value
plus truncation_error is a certified upper bound for the true density.
For squarefree N the cusp count is a power of two, which biases g0(N)
toward the classes {1 - 2^k mod ell}; histograms expose that bias.

The growth constants a0, b, c of the attained-value counting function
are derived from roots of two transcendental equations in (0, 1), found
by bracketed root finding.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, fsum, isqrt, log, pi
from typing import Optional

import numpy as np
from scipy.optimize import brentq

from .arith import factorize, primes_in_progression, primes_up_to
from .genus import ConsistencyError, iter_blocks

AVG_RATIO_TARGET = 5.0 / (4.0 * pi**2)  # limit of (1/B) sum g0(N)/N
AVG_SUM_TARGET = 5.0 / (8.0 * pi**2)  # limit of (1/B^2) sum g0(N)
SQUAREFREE_DENSITY = 6.0 / pi**2

# upper bounds on P(ell) that residue_density_exact certifies rigorously
DENSITY_BOUND_TABLE = {
    3: 1 / 4,
    5: 1 / 78,
    7: 1 / 105,
    11: 1 / 653,
    13: 1 / 1542,
    17: 1 / 1793,
    19: 1 / 978,
    23: 1 / 5821,
}

DEFAULT_PRIME_LIMIT = 10**7
DEFAULT_DIRICHLET_TERMS = 10**6

# mu(N)/N = prod_{p | N} (1 + 1/p) first reaches 4 when N has the eleven
# primes up to 31, so mu/N < 4 for every N below their product
MU_RATIO_BELOW_FOUR_LIMIT = 2 * 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23 * 29 * 31


def _require_odd_prime(ell: int) -> None:
    if ell == 2:
        raise ValueError("ell = 2 is covered by the parity classification, not densities")
    f = factorize(ell)
    if f.factors != ((ell, 1),):
        raise ValueError(f"ell must be an odd prime, got {ell}")


# ---------------------------------------------------------------------------
# zeta via Euler-Maclaurin

_ZETA_CUTOFF = 32
# B_2, B_4, ..., B_16; B_18 bounds the remainder
_BERNOULLI_EVEN = (
    1 / 6,
    -1 / 30,
    1 / 42,
    -1 / 30,
    5 / 66,
    -691 / 2730,
    7 / 6,
    -3617 / 510,
)
_B18 = 43867 / 798


def zeta_with_error(s: float) -> tuple[float, float]:
    """Riemann zeta at real s > 1 with a rigorous remainder bound.

    Euler-Maclaurin with cutoff M:

        zeta(s) = sum_{n<=M} n^-s + M^(1-s)/(s-1) - M^-s/2
                  + sum_j B_2j/(2j)! * s(s+1)...(s+2j-2) * M^(-s-2j+1) + R

    For real s the remainder R is bounded by the first omitted term, which
    is what the second return value reports (far below 1e-15 here).
    """
    if s <= 1.0:
        raise ValueError(f"zeta is evaluated only for s > 1 (pole at s = 1), got {s}")
    m = float(_ZETA_CUTOFF)
    n = np.arange(1.0, m + 1.0)
    value = float(np.sum(n ** (-s))) + m ** (1.0 - s) / (s - 1.0) - 0.5 * m ** (-s)
    rising = s  # s(s+1)...(s+2j-2), updated per term
    power = m ** (-s - 1.0)  # M^(-s-2j+1)
    for j, b2j in enumerate(_BERNOULLI_EVEN, start=1):
        value += b2j / factorial(2 * j) * rising * power
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        power /= m * m
    remainder = abs(_B18) / factorial(18) * rising * power
    return value, remainder


def zeta(s: float) -> float:
    """Riemann zeta at real s > 1."""
    return zeta_with_error(s)[0]


# ---------------------------------------------------------------------------
# averages and the Dirichlet identity


@dataclass(frozen=True)
class AverageReport:
    """Partial averages of the genus up to a bound, with their common target.

    avg_ratio is (1/B) sum g0(N)/N, converging to target = 5/(4 pi^2);
    avg_genus_over_b is (1/B^2) sum g0(N), converging to half the target.
    """

    bound: int
    avg_ratio: float
    avg_genus_over_b: float
    target: float = AVG_RATIO_TARGET


def average_partial(bound: int, threads: int = 1) -> AverageReport:
    """Partial averages of g0 over all levels up to bound.

    The genus sum is accumulated exactly in integers; the ratio sum uses
    pairwise block sums combined by fsum, with relative error below 1e-13.
    """
    if bound < 1:
        raise ValueError(f"need bound >= 1, got {bound}")
    ratio_parts = []
    genus_total = 0
    for blk in iter_blocks(1, bound, threads=threads):
        n = np.arange(blk.lo, blk.hi + 1, dtype=np.float64)
        ratio_parts.append(float(np.sum(blk.genus / n)))
        genus_total += int(blk.genus.sum())
    return AverageReport(
        bound=bound,
        avg_ratio=fsum(ratio_parts) / bound,
        avg_genus_over_b=genus_total / bound**2,
    )


def dirichlet_F(s: float, n_terms: int = DEFAULT_DIRICHLET_TERMS, threads: int = 1) -> float:
    """Partial sum of F(s) = sum (mu(N)/N) N^(-s) over N <= n_terms.

    The omitted tail is positive and below dirichlet_tail_bound(s, n_terms).
    """
    if s <= 1.0:
        raise ValueError(f"F has a pole at s = 1 and is summed only for s > 1, got {s}")
    if n_terms < 1:
        raise ValueError(f"need n_terms >= 1, got {n_terms}")
    parts = []
    for blk in iter_blocks(1, n_terms, threads=threads):
        n = np.arange(blk.lo, blk.hi + 1, dtype=np.float64)
        parts.append(float(np.sum(blk.mu * n ** (-s - 1.0))))
    return fsum(parts)


def dirichlet_tail_bound(s: float, n_terms: int) -> float:
    """Upper bound for the tail sum_{N > n_terms} (mu(N)/N) N^(-s).

    Two pieces: mu/N < 4 up to the eleven-prime threshold, and
    mu(N)/N <= sum_{d | N} 1/d <= 1 + ln N beyond it; both tails are then
    bounded by integrals.
    """
    if s <= 1.0:
        raise ValueError(f"the tail converges only for s > 1, got {s}")
    k = float(MU_RATIO_BELOW_FOUR_LIMIT - 1)
    small = 4.0 * n_terms ** (1.0 - s) / (s - 1.0)
    large = k ** (1.0 - s) * ((1.0 + log(k)) / (s - 1.0) + 1.0 / (s - 1.0) ** 2)
    return small + large


@dataclass(frozen=True)
class DirichletCheck:
    """Partial Dirichlet sum against the zeta product, with error budget."""

    s: float
    n_terms: int
    lhs: float
    rhs: float
    gap: float
    tail_bound: float
    rhs_error: float

    @property
    def ok(self) -> bool:
        # 1e-11 covers float accumulation in the partial sum
        return self.gap <= self.tail_bound + self.rhs_error + 1e-11 * (1.0 + abs(self.rhs))


def zeta_identity_check(
    s: float, n_terms: int = DEFAULT_DIRICHLET_TERMS, threads: int = 1
) -> DirichletCheck:
    """Compare the partial sum of F(s) with zeta(s) zeta(s+1) / zeta(2s+2).

    The gap must sit inside the computed tail bound plus the zeta remainder
    budget; nothing is fitted.
    """
    lhs = dirichlet_F(s, n_terms, threads=threads)
    z1, e1 = zeta_with_error(s)
    z2, e2 = zeta_with_error(s + 1.0)
    z3, e3 = zeta_with_error(2.0 * s + 2.0)
    rhs = z1 * z2 / z3
    rhs_error = abs(rhs) * (e1 / z1 + e2 / z2 + e3 / z3)
    return DirichletCheck(
        s=s,
        n_terms=n_terms,
        lhs=lhs,
        rhs=rhs,
        gap=abs(rhs - lhs),
        tail_bound=dirichlet_tail_bound(s, n_terms),
        rhs_error=rhs_error,
    )


# ---------------------------------------------------------------------------
# residue densities mod ell


@dataclass(frozen=True)
class ResidueDensity:
    """Density of levels with g0(N) = 1 (mod ell), with truncation budget.

    exact_value under-counts the true density by at most truncation_error,
    so exact_value + truncation_error is a certified upper bound.
    """

    ell: int
    exact_value: float
    truncation_error: float
    prime_limit: int
    empirical_frequency: Optional[float] = None
    sample_bound: Optional[int] = None


def residue_density_exact(ell: int, prime_limit: int = DEFAULT_PRIME_LIMIT) -> ResidueDensity:
    """P(ell) from the Euler product truncated at prime_limit.

    The dropped factors multiply to at least 1 - sum 1/(s^2+s) over the
    dropped primes.  Those all lie in one residue class mod ell, so the
    sum is at most 1/(ell*prime_limit) + 1/prime_limit^2 (integral bound
    over the progression; crudely at most 1/prime_limit).  That is the
    truncation_error, and it matters: the certified table bound for
    ell = 23 is only about 2e-8 above the true density.
    """
    _require_odd_prime(ell)
    if prime_limit < 2 * ell:
        raise ValueError(f"need prime_limit >= 2*ell = {2 * ell}, got {prime_limit}")
    s = np.asarray(primes_in_progression(ell, ell - 1, prime_limit), dtype=np.float64)
    product = float(np.prod(1.0 - 1.0 / (s * s + s)))
    exact = 1.0 - (1.0 - float(ell) ** -3) * product
    return ResidueDensity(
        ell=ell,
        exact_value=exact,
        truncation_error=1.0 / (ell * prime_limit) + 1.0 / prime_limit**2,
        prime_limit=prime_limit,
    )


def bound_3_over_ell_squared(ell: int, prime_limit: int = DEFAULT_PRIME_LIMIT) -> bool:
    """Certify P(ell) < 3/ell^2, truncation error included."""
    d = residue_density_exact(ell, prime_limit)
    return d.exact_value + d.truncation_error < 3.0 / ell**2


def residue_density_empirical(ell: int, bound: int, threads: int = 1) -> float:
    """Frequency of g0(N) = 1 (mod ell) over all levels N <= bound."""
    _require_odd_prime(ell)
    hits = 0
    for blk in iter_blocks(1, bound, threads=threads):
        hits += int(np.count_nonzero(blk.genus % ell == 1))
    return hits / bound


def even_genus_frequency(bound: int, threads: int = 1) -> float:
    """Frequency of even g0(N) over all levels N <= bound (the ell = 2 case)."""
    hits = 0
    for blk in iter_blocks(1, bound, threads=threads):
        hits += int(np.count_nonzero(blk.genus % 2 == 0))
    return hits / bound


def flagged_residue_classes(ell: int) -> tuple[int, ...]:
    """The classes {1 - 2^k mod ell}, enriched when N is squarefree.

    For squarefree N the cusp count is a power of two, so g0(N) lands in
    one of these classes.
    """
    _require_odd_prime(ell)
    classes = set()
    v = 1
    while True:
        classes.add((1 - v) % ell)
        v = v * 2 % ell
        if v == 1:
            break
    return tuple(sorted(classes))


def two_is_primitive_root(ell: int) -> bool:
    """Whether 2 generates the full multiplicative group mod ell."""
    _require_odd_prime(ell)
    order = 1
    v = 2 % ell
    while v != 1:
        v = v * 2 % ell
        order += 1
    return order == ell - 1


@dataclass(frozen=True)
class ResidueHistogram:
    """Counts of g0(N) mod ell over N <= bound, with the flagged classes.

    enrichment_holds compares the least flagged count against the largest
    non-flagged count; it is None when 2 is a primitive root mod ell (the
    flagged set then covers every class but one, and no enrichment claim
    is asserted).
    """

    ell: int
    bound: int
    counts: tuple[int, ...]
    flagged: tuple[int, ...]
    two_primitive_root: bool
    enrichment_holds: Optional[bool]


def residue_histogram(ell: int, bound: int, threads: int = 1) -> ResidueHistogram:
    """Histogram of g0(N) mod ell over all levels N <= bound."""
    _require_odd_prime(ell)
    if bound < 1:
        raise ValueError(f"need bound >= 1, got {bound}")
    counts = np.zeros(ell, dtype=np.int64)
    for blk in iter_blocks(1, bound, threads=threads):
        counts += np.bincount(blk.genus % ell, minlength=ell)
    flagged = flagged_residue_classes(ell)
    primitive = two_is_primitive_root(ell)
    enrichment = None
    if not primitive:
        rest = [int(c) for r, c in enumerate(counts) if r not in flagged]
        enrichment = min(int(counts[f]) for f in flagged) > max(rest)
    return ResidueHistogram(
        ell=ell,
        bound=bound,
        counts=tuple(int(c) for c in counts),
        flagged=flagged,
        two_primitive_root=primitive,
        enrichment_holds=enrichment,
    )


def restricted_congruence_check(ell: int, bound: int, threads: int = 1) -> list[int]:
    """Violations of g0(N) = 1 - nu_inf/2 (mod ell) on the restricted levels.

    Restricted means N divisible by some prime q = -1 (mod 12*ell); such a
    factor forces nu2 = nu3 = 0 and 12*ell | mu, leaving only the cusp
    term.  Expected empty.
    """
    _require_odd_prime(ell)
    qs = primes_in_progression(12 * ell, 12 * ell - 1, bound)
    mask = np.zeros(bound + 1, dtype=bool)
    for q in qs:
        mask[int(q) :: int(q)] = True
    bad: list[int] = []
    for blk in iter_blocks(1, bound, threads=threads):
        sel = mask[blk.lo : blk.hi + 1]
        if not np.any(sel):
            continue
        g = blk.genus[sel]
        ni = blk.nu_inf[sel]
        if np.any(ni % 2):
            raise ConsistencyError("odd cusp count on a level with a factor = -1 mod 12*ell")
        levels = np.nonzero(sel)[0] + blk.lo
        viol = (g - 1 + ni // 2) % ell != 0
        bad.extend(int(n) for n in levels[viol])
    return bad


def squarefree_fraction(bound: int) -> float:
    """Fraction of levels N <= bound free of square factors (target 6/pi^2)."""
    if bound < 1:
        raise ValueError(f"need bound >= 1, got {bound}")
    squarefree = np.ones(bound + 1, dtype=bool)
    for p in primes_up_to(isqrt(bound)):
        p2 = int(p) * int(p)
        squarefree[p2::p2] = False
    return int(np.count_nonzero(squarefree[1:])) / bound


# ---------------------------------------------------------------------------
# growth constants


@dataclass(frozen=True)
class AsymptoticConstants:
    """Roots A, B and the derived exponents a0, b, c.

    B solves 1/B + log B = 1 + log 2 on (0, 1); A solves
    sum A^n ((n+1) log(n+1) - n log n - 1) = 1 on (0, 1); then
    a0 = -1/(2 log A), b = B log 2, c = (B log 2)/(2 - 2B).
    """

    A: float
    B: float
    a0: float
    b: float
    c: float


def asymptotic_constants(tolerance: float = 1e-10) -> AsymptoticConstants:
    """Solve both defining equations by bracketed root finding.

    1/B + log B - 1 - log 2 is strictly decreasing on (0, 1) with a sign
    change, so the B root is unique.  The A series has positive increasing
    coefficients (n+1)log(n+1) - n log n - 1 < log(n+1), so it is strictly
    increasing in A; truncation keeps the geometric tail below tolerance/10
    at the bracket top 0.95.
    """
    if not 0.0 < tolerance <= 1e-6:
        raise ValueError(f"tolerance must be in (0, 1e-6], got {tolerance}")
    xtol = max(tolerance / 10.0, 1e-15)
    log2 = log(2.0)
    root_b = float(brentq(lambda t: 1.0 / t + log(t) - 1.0 - log2, 1e-12, 1.0 - 1e-12, xtol=xtol))

    hi = 0.95
    n_max = 1
    while hi**n_max * log(n_max + 2.0) >= tolerance * (1.0 - hi) / 10.0:
        n_max += 1
    n = np.arange(1.0, n_max + 1.0)
    coeff = (n + 1.0) * np.log(n + 1.0) - n * np.log(n) - 1.0

    def series(a: float) -> float:
        return float(np.sum(a**n * coeff)) - 1.0

    root_a = float(brentq(series, 1e-6, hi, xtol=xtol))
    return AsymptoticConstants(
        A=root_a,
        B=root_b,
        a0=-1.0 / (2.0 * log(root_a)),
        b=root_b * log2,
        c=root_b * log2 / (2.0 - 2.0 * root_b),
    )
