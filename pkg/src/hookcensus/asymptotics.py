"""Floating-point main terms and numeric leading-order verification.

Counts of size-n hooks grow like exp(pi sqrt(n/3)), so every predicted
value here is carried as a log-space float; ratios of exact counts to
predictions are formed by log subtraction and never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import exp, expm1, log, log1p, pi, sqrt

import mpmath as mp

from . import exactconst, qseries
from .partitions import PartitionClass

DEFAULT_PRECISION = exactconst.DEFAULT_PRECISION
MAX_SERIES_ORDER = 3000


def _class_constant(cls: PartitionClass, h: int, prec: int) -> mp.mpf:
    if cls is PartitionClass.ODD:
        return exactconst.numeric_value(exactconst.odd_hook_constant(h), prec)
    if cls is PartitionClass.DISTINCT:
        return exactconst.distinct_hook_constant(h).value(prec)
    raise ValueError(f"no proven hook constant for class {cls.value!r}")


def main_term_log(h: int, n: int, cls: PartitionClass, prec: int = DEFAULT_PRECISION) -> float:
    """log of c * 3^{1/4}/(2 pi n^{1/4}) * exp(pi sqrt(n/3)) with c the
    class constant for hook length h."""
    if h < 1 or n < 1:
        raise ValueError("h and n must be positive")
    with mp.workprec(prec):
        c = _class_constant(cls, h, prec)
        val = mp.log(c) + mp.log(3) / 4 - mp.log(2 * mp.pi) - mp.log(n) / 4 \
            + mp.pi * mp.sqrt(mp.mpf(n) / 3)
        return float(val)


def main_term(h: int, n: int, cls: PartitionClass) -> float:
    """Linear-scale main term; overflows for n beyond roughly 4*10^5."""
    return exp(main_term_log(h, n, cls))


def partition_count_log(n: int) -> float:
    """log of the shared main term 3^{3/4}/(12 n^{3/4}) exp(pi sqrt(n/3)) of
    the odd-parts and distinct-parts partition counts."""
    if n < 1:
        raise ValueError("n must be positive")
    return 0.75 * log(3) - log(12) - 0.75 * log(n) + pi * sqrt(n / 3)


def parts_count_log(n: int, cls: PartitionClass) -> float:
    """log of the main term of the total number of parts over all class
    members of n: 3^{1/4} log(n)/(8 pi n^{1/4}) e^{pi sqrt(n/3)} for odd
    parts, 3^{1/4} log(2)/(2 pi n^{1/4}) e^{pi sqrt(n/3)} for distinct."""
    if n < 2:
        raise ValueError("n must be at least 2")
    base = 0.25 * log(3) - 0.25 * log(n) + pi * sqrt(n / 3)
    if cls is PartitionClass.ODD:
        return base + log(log(n)) - log(8 * pi)
    if cls is PartitionClass.DISTINCT:
        return base + log(log(2)) - log(2 * pi)
    raise ValueError(f"no parts-count asymptotic for class {cls.value!r}")


def avg_hooks(h: int, n: int, cls: PartitionClass, prec: int = DEFAULT_PRECISION) -> float:
    """Asymptotic mean number of h-hooks per class member: (6c/pi) sqrt(n/3)."""
    if n < 1:
        raise ValueError("n must be positive")
    c = float(_class_constant(cls, h, prec))
    return 6 * c / pi * sqrt(n / 3)


def row_probability(h: int, n: int, cls: PartitionClass, prec: int = DEFAULT_PRECISION) -> float:
    """Asymptotic probability that a uniformly chosen row among class members
    of n contains an h-hook: 4c/log(n) for odd parts (vanishing), c/log(2)
    for distinct parts (n-independent)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    c = float(_class_constant(cls, h, prec))
    if cls is PartitionClass.ODD:
        return 4 * c / log(n)
    return c / log(2)


# -- numeric kernels and their leading-order gaps ---------------------------

def kernel_odd_value(j: int, k: int, l: int, z: float) -> float:
    """Direct numeric summation of sum_m (q^{2m+k};q^2)_j q^{lm} at q = e^{-z}."""
    if l <= 0:
        raise ValueError("kernel_odd_value needs l >= 1 for convergence")
    if z <= 0:
        raise ValueError("z must be positive")
    q = exp(-z)
    total = 0.0
    m = 0
    while True:
        envelope = q ** (l * m)
        if envelope < 1e-18:
            return total
        prod = 1.0
        for i in range(j):
            prod *= 1 - q ** (2 * m + k + 2 * i)
        total += prod * envelope
        m += 1


def kernel_distinct_value(j: int, k: int, z: float) -> float:
    """Direct numeric summation of sum_m q^{jm} / (-q^{m+1};q)_k at q = e^{-z}."""
    if j < 1:
        raise ValueError("kernel_distinct_value needs j >= 1 for convergence")
    if z <= 0:
        raise ValueError("z must be positive")
    q = exp(-z)
    total = 0.0
    m = 0
    while True:
        envelope = q ** (j * m)
        if envelope < 1e-18:
            return total
        prod = 1.0
        for i in range(k):
            prod *= 1 + q ** (m + 1 + i)
        total += envelope / prod
        m += 1


def kernel_leading_gap(kind: str, j: int, k: int, z: float,
                       l: int | None = None) -> tuple[float, float, float]:
    """(z * kernel value, exact kernel integral, absolute gap) at q = e^{-z}.

    As z -> 0 the scaled sum tends to the integral; the gap at finite z is
    the first-order summation error, of size proportional to z.
    """
    if not 0 < z <= 0.2:
        raise ValueError("z must lie in (0, 0.2]")
    if kind == "odd":
        if l is None:
            raise ValueError("the odd kernel needs the exponent step l")
        lhs = z * kernel_odd_value(j, k, l, z)
        rhs = float(exactconst.numeric_value(exactconst.kernel_odd_integral(j, l)))
    elif kind == "distinct":
        lhs = z * kernel_distinct_value(j, k, z)
        rhs = float(exactconst.kernel_distinct_integral(j, k).value())
    else:
        raise ValueError("kind must be 'odd' or 'distinct'")
    return lhs, rhs, abs(lhs - rhs)


def eta_product_gap(z: float) -> tuple[float, float, float]:
    """(log lhs, log rhs, relative gap) for the infinite product
    prod_k (1 + e^{-kz}) against 2^{-1/2} exp(pi^2/(12 z)).

    The product is summed in log space until the tail drops below 1e-15.
    """
    if not 0 < z <= 0.2:
        raise ValueError("z must lie in (0, 0.2]")
    # tail bound: sum_{k>K} log(1+e^{-kz}) < e^{-(K+1)z}/(1-e^{-z})
    K = 1
    while exp(-(K + 1) * z) / -expm1(-z) > 1e-15:
        K += 1
    log_lhs = sum(log1p(exp(-k * z)) for k in range(1, K + 1))
    log_rhs = pi * pi / (12 * z) - 0.5 * log(2)
    return log_lhs, log_rhs, abs(log_lhs - log_rhs) / abs(log_rhs)


# -- convergence reports -----------------------------------------------------

@dataclass(frozen=True)
class AsymptoticRow:
    """One comparison of an exact count against its predicted main term."""

    formula: str
    h: int | None
    n_or_z: float
    predicted_log: float
    observed: int | None
    ratio: float | None


@dataclass(frozen=True)
class ConvergenceReport:
    rows: list[AsymptoticRow] = field(default_factory=list)
    non_monotone: list[tuple[str, int]] = field(default_factory=list)


def exact_hook_counts(cls: PartitionClass, h: int, order: int) -> tuple[int, ...]:
    """Exact counts of h-hooks for all n <= order, from the series engine."""
    if order > MAX_SERIES_ORDER:
        raise ValueError(f"order {order} exceeds the configured cap {MAX_SERIES_ORDER}")
    if cls is PartitionClass.ODD:
        return qseries.hook_gf_odd(h, order).coeffs
    if cls is PartitionClass.DISTINCT:
        return qseries.hook_gf_distinct(h, order).coeffs
    raise ValueError(f"no hook generating function for class {cls.value!r}")


def exact_partition_counts(order: int) -> tuple[int, ...]:
    """Exact odd-parts partition counts for all n <= order, from the inverse
    of the odd-exponent product (equal to the distinct-parts counts)."""
    odd_product = qseries.pochhammer_infinite(1, order, 1, 2)
    return qseries.geometric_inverse(odd_product, order).coeffs


def exact_total_parts(cls: PartitionClass, order: int) -> tuple[int, ...]:
    """Exact totals of parts over all class members of each n <= order.

    Distinct side: (-q;q)_inf times sum_k q^k/(1+q^k).  Odd side: the
    odd-parts count series times sum_{k odd} q^k/(1-q^k).
    """
    if cls is PartitionClass.DISTINCT:
        return (qseries.pochhammer_infinite(-1, order) * qseries.lambert_sum(order)).coeffs
    if cls is PartitionClass.ODD:
        weights = [0] * (order + 1)
        for k in range(1, order + 1, 2):
            for e in range(k, order + 1, k):
                weights[e] += 1
        counts = qseries.FormalSeries(exact_partition_counts(order), order)
        return (counts * qseries.FormalSeries(weights, order)).coeffs
    raise ValueError(f"no parts-count series for class {cls.value!r}")


def row_hook_frequency(h: int, n: int, cls: PartitionClass) -> Fraction:
    """Exact fraction of diagram rows, over all class members of n, whose row
    contains an h-hook.  Hook lengths strictly decrease along a row, so rows
    carry at most one h-hook and the numerator is the plain h-hook count."""
    from .partitions import count_hooks, total_parts

    rows = total_parts(cls, n)
    if rows == 0:
        raise ValueError(f"no rows among class members of {n}")
    return Fraction(count_hooks(cls, h, n), rows)


def convergence_report(h_list: list[int], n_list: list[int], cls: PartitionClass,
                       prec: int = DEFAULT_PRECISION) -> ConvergenceReport:
    """Tabulate exact counts against main terms on the (h, n) grid and flag
    any h whose |ratio - 1| fails to shrink as n grows."""
    if any(n < 1 for n in n_list):
        raise ValueError("all n must be positive")
    rows = []
    non_monotone = []
    formula = f"{cls.value}-main-term"
    if n_list:
        order = max(n_list)
        for h in h_list:
            coeffs = exact_hook_counts(cls, h, order)
            errors = []
            for n in sorted(n_list):
                predicted = main_term_log(h, n, cls, prec)
                observed = coeffs[n]
                with mp.workprec(prec):
                    ratio = float(mp.exp(mp.log(observed) - predicted)) if observed else None
                rows.append(AsymptoticRow(formula, h, n, predicted, observed, ratio))
                if ratio is not None:
                    errors.append(abs(ratio - 1))
            if any(a < b for a, b in zip(errors, errors[1:])):
                non_monotone.append((formula, h))
    return ConvergenceReport(rows, non_monotone)
