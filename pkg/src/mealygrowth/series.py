"""Closed-form growth analytics: recurrences, series, partitions, asymptotics.

The word growth delta of the mask/successor monoid obeys the exact recurrence

    delta(0) = 1,   delta(n + 1) = delta(n) + delta(n // m),

its generating series factors through the nested product

    S(X) = sum_k  prod_{i<k} X^(m^i) / (1 - X^(m^i)),

with word series S/(1-X) and ball series S/(1-X)^2, and the second difference
of the ball growth counts partitions of n into "sequential" powers of m (every
power from m^0 up to some m^k used with multiplicity >= 1).  All identities
here are exact over unbounded integers; the asymptotic statements (growth
order n^(log n / 2 log m)) are exposed only as numeric diagnostics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .growth import GrowthTable


def word_growth_values(m, max_n):
    """delta(0..max_n) by the recurrence delta(n+1) = delta(n) + delta(n//m)."""
    if m < 2:
        raise ValueError(f"alphabet size must be >= 2, got {m}")
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    vals = [0] * (max_n + 1)
    vals[0] = 1
    for n in range(max_n):
        vals[n + 1] = vals[n] + vals[n // m]
    return vals


def word_growth_recurrence(m, max_n):
    return GrowthTable(m, "word", "recurrence", word_growth_values(m, max_n))


def ball_growth_recurrence(m, max_n):
    """Ball growth as partial sums of the word growth recurrence."""
    vals = word_growth_values(m, max_n)
    total = 0
    balls = []
    for v in vals:
        total += v
        balls.append(total)
    return GrowthTable(m, "ball", "recurrence", balls)


def word_growth_at(m, n):
    """delta(n) alone, keeping only the prefix the recurrence looks back into."""
    if n < 0:
        raise ValueError("n must be >= 0")
    keep = n // m
    prefix = [1]
    cur = 1
    for i in range(n):
        cur = cur + prefix[i // m]
        if len(prefix) <= keep:
            prefix.append(cur)
    return cur


@dataclass(frozen=True)
class SeriesCoefficients:
    m: int
    which: str   # "S" | "Delta" | "Gamma"
    coeffs: tuple

    def __post_init__(self):
        if self.which not in ("S", "Delta", "Gamma"):
            raise ValueError(f"unknown series {self.which!r}")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))


def _series_s_values(m, max_n):
    """Coefficients of S(X) up to degree max_n.

    Product terms are accumulated one nesting level at a time; the level-k
    factor has minimal degree 1 + m + ... + m^(k-1), so only O(log max_n)
    levels contribute below the truncation degree.
    """
    coeffs = [0] * (max_n + 1)
    term = [0] * (max_n + 1)
    term[0] = 1
    k = 0
    min_deg = 0
    while True:
        for i in range(min_deg, max_n + 1):
            coeffs[i] += term[i]
        d = m ** k
        min_deg += d
        if min_deg > max_n:
            return coeffs
        # multiply the running product by X^d / (1 - X^d)
        new = [0] * (max_n + 1)
        for i in range(max_n + 1 - d):
            new[i + d] = term[i]
        for i in range(d, max_n + 1):
            new[i] += new[i - d]
        term = new
        k += 1


def _partial_sums(values):
    total = 0
    out = []
    for v in values:
        total += v
        out.append(total)
    return out


def series_coefficients(m, max_n):
    """(S, Delta, Gamma) truncated at degree max_n.

    Delta is S convolved with 1/(1-X) (partial sums) and Gamma repeats the
    convolution, so the three share one expansion of the nested product.
    """
    if m < 2:
        raise ValueError(f"alphabet size must be >= 2, got {m}")
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    s = _series_s_values(m, max_n)
    delta = _partial_sums(s)
    gamma = _partial_sums(delta)
    return (SeriesCoefficients(m, "S", s),
            SeriesCoefficients(m, "Delta", delta),
            SeriesCoefficients(m, "Gamma", gamma))


def word_growth_series(m, max_n):
    _, delta, _ = series_coefficients(m, max_n)
    return GrowthTable(m, "word", "series", delta.coeffs)


def ball_growth_series(m, max_n):
    _, _, gamma = series_coefficients(m, max_n)
    return GrowthTable(m, "ball", "series", gamma.coeffs)


def check_ball_word_identity(m, max_n):
    """Check gamma(n) = (delta(m(n+1)) - 1) / m exactly for n <= max_n.

    Returns (True, None) or (False, first failing n).  Exact division is part
    of the claim: a nonzero remainder is a failure even if the quotient
    matches.
    """
    delta = word_growth_values(m, m * (max_n + 1))
    gamma = _partial_sums(delta[:max_n + 1])
    for n in range(max_n + 1):
        q, rem = divmod(delta[m * (n + 1)] - 1, m)
        if rem != 0 or q != gamma[n]:
            return False, n
    return True, None


def sequential_partition_values(m, max_n):
    """Counts of partitions n = sum p_i m^i with every p_i >= 1, for n <= max_n.

    Level dynamic program: with B_k(n) the count using powers m^0..m^k
    exactly, B_k(n) = B_k(n - m^k) + B_{k-1}(n - m^k).
    """
    if m < 2:
        raise ValueError(f"alphabet size must be >= 2, got {m}")
    totals = [0] * (max_n + 1)
    prev = None  # B_{k-1}
    k = 0
    need = 1  # minimal sum 1 + m + ... + m^k
    while need <= max_n:
        step = m ** k
        cur = [0] * (max_n + 1)
        if k == 0:
            for n in range(1, max_n + 1):
                cur[n] = 1
        else:
            for n in range(step, max_n + 1):
                cur[n] = cur[n - step] + prev[n - step]
        for n in range(max_n + 1):
            totals[n] += cur[n]
        prev = cur
        k += 1
        need += m ** k
    return totals


def sequential_power_partitions(n, m):
    """Number of partitions of n into sequential powers of m (n >= 1)."""
    if n < 1:
        raise ValueError("partition counts are defined for n >= 1")
    return sequential_partition_values(m, n)[n]


def second_difference_values(m, max_n):
    """Second difference of the ball growth: delta(n) - delta(n-1), with the
    boundary convention value 1 at n = 0."""
    delta = word_growth_values(m, max_n)
    out = [1]
    for n in range(1, max_n + 1):
        out.append(delta[n] - delta[n - 1])
    return out


@dataclass(frozen=True)
class DifferenceTable:
    """values[j] is the order-th finite difference at n = order + j."""

    base: tuple
    order: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(self, "values", tuple(self.values))


def finite_difference(seq, order):
    """Iterated finite difference g(n) - g(n-1) of a sequence or GrowthTable."""
    if order < 1:
        raise ValueError("difference order must be >= 1")
    base = tuple(seq.values if isinstance(seq, GrowthTable) else seq)
    if len(base) <= order:
        raise ValueError(f"sequence of length {len(base)} too short for order {order}")
    vals = list(base)
    for _ in range(order):
        vals = [vals[i] - vals[i - 1] for i in range(1, len(vals))]
    return DifferenceTable(base, order, vals)


def second_difference_repetition_check(m, max_n):
    """Each block gamma''(mn+1) .. gamma''(mn+m) holds one repeated value."""
    table = second_difference_values(m, max_n)
    n = 0
    while m * n + 2 <= max_n:
        block = table[m * n + 1: min(m * n + m, max_n) + 1]
        if any(v != block[0] for v in block):
            return False
        n += 1
    return True


def multisection_identity_check(m, max_n):
    """Coefficientwise check of sum_n delta(m(n+1)) X^n = 1/(1-X) + m S(X)/(1-X)^2.

    The left side comes from the recurrence, the right side from the series
    expansion, so the check ties the two routes together exactly.
    """
    delta = word_growth_values(m, m * (max_n + 1))
    s = _series_s_values(m, max_n)
    rhs = [1 + m * g for g in _partial_sums(_partial_sums(s))]
    return all(delta[m * (n + 1)] == rhs[n] for n in range(max_n + 1))


def mahler_pointwise_estimate(m, n):
    """The sharp growth scale n^(log n / (2 log m))."""
    if n < 2:
        raise ValueError("estimate needs n >= 2")
    return n ** (math.log(n) / (2 * math.log(m)))


def mahler_bracket(m, z):
    """The unique n >= 1 with m^(n-1) n <= z < m^n (n+1)."""
    if z < 1:
        raise ValueError("bracketing needs z >= 1")
    n = 1
    while not z < m ** n * (n + 1):
        n += 1
    return n


def mahler_functional_estimate(m, z):
    """Solution scale m^(-n(n-1)/2) z^n / n! of the functional equation
    f(z+1) - f(z) = f(z/m), with n from the bracketing inequality."""
    n = mahler_bracket(m, z)
    log_value = (-0.5 * n * (n - 1) * math.log(m)
                 + n * math.log(z) - math.lgamma(n + 1))
    return math.exp(log_value)


def growth_exponent_diagnostic(m, max_n):
    """log delta(N) * 2 log m / (log N)^2; drifts toward 1 like 1/log N."""
    if max_n < 2:
        raise ValueError("diagnostic needs N >= 2")
    value = word_growth_at(m, max_n)
    return math.log(value) * 2 * math.log(m) / math.log(max_n) ** 2


def quadratic_limit_growth(n):
    """Pointwise limit of the ball growths as the alphabet grows: (n+1)(n+2)/2."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return (n + 1) * (n + 2) // 2


def linear_limit_growth(n):
    """Ball growth 3n (n >= 1) of the relabelled limit monoid."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return 1 if n == 0 else 3 * n


def companion_recurrence(max_n):
    """Second-difference sequence a(1..max_n) of a companion three-state
    binary transducer: a(n) = 2a(n-1) - a(n-2) + a((n-3)//2) for n >= 5,
    from the initial values 1, 2, 3, 5."""
    if max_n < 4:
        raise ValueError("need max_n >= 4 to cover the initial values")
    vals = [0, 1, 2, 3, 5]  # 1-indexed; vals[0] unused
    for n in range(5, max_n + 1):
        vals.append(2 * vals[n - 1] - vals[n - 2] + vals[(n - 3) // 2])
    return vals[1:]
