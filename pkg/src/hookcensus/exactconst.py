"""Exact evaluation of the hook-density constants of the two partition classes.

The odd-parts constant for hook length h is a rational number; the
distinct-parts constant lives in the rational span of {1, log 2} and is
rational exactly when h is even.  Both come in two independent forms — a
binomial-weighted sum of kernel integrals, and a simplified closed form —
which must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, ceil, floor

import mpmath as mp

DEFAULT_PRECISION = 120  # bits; enough to separate every gap we compare


@dataclass(frozen=True)
class Log2Number:
    """Exact number r + s*log(2) with rational r, s.

    Since log 2 is irrational, equality of the (r, s) pairs is equality of
    the numbers, so comparisons stay exact.  Scalar arithmetic keeps values
    inside the span.
    """

    r: Fraction
    s: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "r", Fraction(self.r))
        object.__setattr__(self, "s", Fraction(self.s))

    @property
    def is_rational(self) -> bool:
        return self.s == 0

    def __add__(self, other):
        other = _as_log2(other)
        return Log2Number(self.r + other.r, self.s + other.s)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_log2(other)
        return Log2Number(self.r - other.r, self.s - other.s)

    def __rsub__(self, other):
        return _as_log2(other) - self

    def __neg__(self):
        return Log2Number(-self.r, -self.s)

    def __mul__(self, scalar):
        if isinstance(scalar, Log2Number):
            raise TypeError("product of two log-2 numbers leaves the span")
        return Log2Number(self.r * scalar, self.s * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return Log2Number(self.r / scalar, self.s / scalar)

    def value(self, prec: int = DEFAULT_PRECISION) -> mp.mpf:
        with mp.workprec(prec):
            return _to_mpf(self.r) + _to_mpf(self.s) * mp.log(2)


def _as_log2(x) -> Log2Number:
    if isinstance(x, Log2Number):
        return x
    return Log2Number(Fraction(x))


def _to_mpf(x: Fraction) -> mp.mpf:
    return mp.mpf(x.numerator) / x.denominator


def numeric_value(x, prec: int = DEFAULT_PRECISION) -> mp.mpf:
    """High-precision value of a Fraction or Log2Number."""
    if isinstance(x, Log2Number):
        return x.value(prec)
    with mp.workprec(prec):
        return _to_mpf(Fraction(x))


# -- harmonic numbers ------------------------------------------------------

_HARMONIC: list[Fraction] = [Fraction(0)]


def harmonic(n: int) -> Fraction:
    """H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_HARMONIC) <= n:
        k = len(_HARMONIC)
        _HARMONIC.append(_HARMONIC[-1] + Fraction(1, k))
    return _HARMONIC[n]


# -- kernel integrals ------------------------------------------------------

def kernel_odd_integral(j: int, l: int) -> Fraction:
    """integral_0^inf (1 - e^{-2x})^j e^{-lx} dx for even l >= 2.

    Substituting u = e^{-2x} turns this into a beta-type integral with the
    exact value (1/2) sum_k (j choose k)(-1)^k / (l/2 + k).
    """
    if j < 0:
        raise ValueError("j must be nonnegative")
    if l <= 0 or l % 2 != 0:
        raise ValueError("the exact form is defined for positive even l only")
    half = l // 2
    return sum((Fraction(comb(j, k) * (-1) ** k, 2 * (half + k)) for k in range(j + 1)),
               Fraction(0))


def kernel_distinct_integral(j: int, k: int) -> Log2Number:
    """integral_0^inf e^{-jx} / (1 + e^{-x})^k dx for j >= 1, as r + s*log 2.

    Substituting v = 1 + e^{-x} gives integral_1^2 (v-1)^{j-1} v^{-k} dv;
    expanding (v-1)^{j-1} binomially, the exponent -1 term contributes
    log 2 and every other term a rational number.
    """
    if j < 1:
        raise ValueError("j must be positive")
    if k < 0:
        raise ValueError("k must be nonnegative")
    r, s = Fraction(0), Fraction(0)
    for i in range(j):
        c = comb(j - 1, i) * (-1) ** (j - 1 - i)
        p = i - k
        if p == -1:
            s += c
        else:
            r += c * (Fraction(2) ** (p + 1) - 1) / (p + 1)
    return Log2Number(r, s)


def odd_hook_constant_from_integrals(h: int) -> Fraction:
    """Binomial-weighted sum of odd-class kernel integrals over both coarm parities."""
    if h < 1:
        raise ValueError("h must be positive")
    total = sum((comb(h - j - 1, j) * kernel_odd_integral(j, 2 * h - 4 * j)
                 for j in range(ceil(h / 2))), Fraction(0))
    total += sum((comb(h - j - 2, j) * kernel_odd_integral(j, 2 * h - 4 * j - 2)
                  for j in range(floor(h / 2))), Fraction(0))
    return total


def distinct_hook_constant_from_integrals(h: int) -> Log2Number:
    """Binomial-weighted sum of distinct-class kernel integrals."""
    if h < 1:
        raise ValueError("h must be positive")
    total = Log2Number(Fraction(0))
    for j in range(ceil(h / 2)):
        total = total + kernel_distinct_integral(j + 1, h - j) * comb(h - j - 1, j)
    return total


# -- closed forms ----------------------------------------------------------

def harmonic_tail(h: int) -> Fraction:
    """H_h - H_{floor(h/2)}, the harmonic tail over (h/2, h]."""
    if h < 0:
        raise ValueError("h must be nonnegative")
    return harmonic(h) - harmonic(h // 2)


def harmonic_tail_from_double_sum(h: int) -> Fraction:
    """The same tail as the defining double binomial sum
    sum_j sum_k (h-j-1 choose j)(j choose k)(-1)^k/(h-2j+k)."""
    if h < 0:
        raise ValueError("h must be nonnegative")
    total = Fraction(0)
    for j in range((h - 1) // 2 + 1) if h >= 1 else range(0):
        for k in range(j + 1):
            total += Fraction(comb(h - j - 1, j) * comb(j, k) * (-1) ** k, h - 2 * j + k)
    return total


def odd_hook_constant(h: int) -> Fraction:
    """Closed form (H_h - H_{ceil((h-1)/2)} + H_{h-1} - H_{ceil((h-2)/2)})/2,
    the mean of consecutive harmonic tails."""
    if h < 1:
        raise ValueError("h must be positive")
    return (harmonic_tail(h) + harmonic_tail(h - 1)) / 2


def binomial_log_sum(n: int, x: Fraction) -> Fraction:
    """sum_{k=1}^n (n choose k)(-1)^k x^k / k, the series of
    integral_0^x ((1-t)^n - 1)/t dt."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = Fraction(x)
    return sum((Fraction(comb(n, k) * (-1) ** k, k) * x ** k for k in range(1, n + 1)),
               Fraction(0))


def _tail_log_integral(n: int) -> Log2Number:
    """integral_{1/2}^1 (1-x)^n / x dx, exactly log 2 + R(1) - R(1/2) with R
    the binomial log sum."""
    return Log2Number(binomial_log_sum(n, Fraction(1)) - binomial_log_sum(n, Fraction(1, 2)),
                      Fraction(1))


def distinct_hook_constant(h: int) -> Log2Number:
    """Explicit closed form of the distinct-class constant.

    Even h = 2n:  sum_{c<n} 1/((2c+1) 2^{2c+1})              (rational).
    Odd  h = 2n+1: sum_{c<n} 1/((c+1) 2^{c+1})
                   - sum_{c<n} 1/((2c+2) 2^{2c+2})
                   + integral_{1/2}^1 (1-x)^n / x dx          (log-2 part 1).
    """
    if h < 1:
        raise ValueError("h must be positive")
    if h % 2 == 0:
        n = h // 2
        r = sum((Fraction(1, (2 * c + 1) * 2 ** (2 * c + 1)) for c in range(n)), Fraction(0))
        return Log2Number(r)
    n = (h - 1) // 2
    r = sum((Fraction(1, (c + 1) * 2 ** (c + 1)) for c in range(n)), Fraction(0))
    r -= sum((Fraction(1, (2 * c + 2) * 2 ** (2 * c + 2)) for c in range(n)), Fraction(0))
    return Log2Number(r) + _tail_log_integral(n)


def incomplete_beta_sum(n: int, m: int, x: Fraction) -> Fraction:
    """sum_k (n choose k)(-1)^k x^{m+k}/(m+k) = integral_0^x t^{m-1}(1-t)^n dt."""
    if m < 1:
        raise ValueError("m must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = Fraction(x)
    return sum((Fraction(comb(n, k) * (-1) ** k, m + k) * x ** (m + k) for k in range(n + 1)),
               Fraction(0))


def incomplete_beta_closed(n: int, m: int, x: Fraction) -> Fraction:
    """Product closed form x^m sum_{j<=n} (1-x)^{n-j} (n+m-1-j choose m-1) / (m (n+m choose m));
    binomial factors vanish for j > n, so the sum is finite."""
    if m < 1:
        raise ValueError("m must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = Fraction(x)
    total = sum((1 - x) ** (n - j) * comb(n + m - 1 - j, m - 1) for j in range(n + 1))
    return x ** m * total / (m * comb(n + m, m))


def diagonal_binomial_sum(n: int) -> Fraction:
    """sum_{k<=floor(n/2)} (n-k choose k) 2^k / (n-2k+1).

    Equals (2^{n+1}-1)/(n+1) for even n and (2^{(n+1)/2}-1)^2/(n+1) for odd n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    m = n // 2
    return sum((Fraction(comb(n - k, k) * 2 ** k, n - 2 * k + 1) for k in range(m + 1)),
               Fraction(0))


def diagonal_binomial_closed(n: int) -> Fraction:
    if n % 2 == 0:
        return Fraction(2 ** (n + 1) - 1, n + 1)
    m = (n - 1) // 2
    return Fraction((2 ** (m + 1) - 1) ** 2, n + 1)


# -- the ratio constant and diagnostics ------------------------------------

def hook_ratio(h: int, prec: int = DEFAULT_PRECISION) -> mp.mpf:
    """Numeric odd/distinct constant ratio; tends to log(4)/log(3)."""
    with mp.workprec(prec):
        return numeric_value(odd_hook_constant(h), prec) / distinct_hook_constant(h).value(prec)


def hook_ratio_exact(h: int) -> Fraction | None:
    """Exact rational ratio when the distinct-class constant is rational (even h)."""
    beta = distinct_hook_constant(h)
    if not beta.is_rational:
        return None
    return odd_hook_constant(h) / beta.r


@dataclass(frozen=True)
class ConstantsRecord:
    """One row of the constants table, with the formula that produced each value."""

    h: int
    alpha: Fraction
    beta: Log2Number
    gamma_float: mp.mpf
    provenance: dict = field(default_factory=dict)

    def to_json_dict(self, digits: int = 30) -> dict:
        return {
            "h": self.h,
            "alpha": f"{self.alpha.numerator}/{self.alpha.denominator}",
            "beta": {
                "r": f"{self.beta.r.numerator}/{self.beta.r.denominator}",
                "s": f"{self.beta.s.numerator}/{self.beta.s.denominator}",
            },
            "gamma": mp.nstr(self.gamma_float, digits),
        }


def constants_record(h: int, prec: int = DEFAULT_PRECISION) -> ConstantsRecord:
    alpha = odd_hook_constant(h)
    beta = distinct_hook_constant(h)
    return ConstantsRecord(
        h=h,
        alpha=alpha,
        beta=beta,
        gamma_float=hook_ratio(h, prec),
        provenance={
            "alpha": "harmonic-tail closed form",
            "beta": "explicit even/odd closed form",
            "gamma": "numeric alpha/beta",
        },
    )


@dataclass(frozen=True)
class LimitReport:
    """Exact/numeric structure checks for the constants up to h_max."""

    h_max: int
    alpha_increasing: bool
    beta_recurrence_exact: bool
    alpha_exceeds_beta: bool
    first_violation: str | None
    alpha_gap: float
    beta_gap: float
    gamma_gap: float


def limit_diagnostics(h_max: int, prec: int = DEFAULT_PRECISION) -> LimitReport:
    """Check monotonicity, the odd-index recurrence, and the strict ordering
    of the two constants, and report numeric gaps to their limits at h_max.

    Monotonicity and the recurrence are exact; the ordering is numeric at
    ``prec`` bits (the smallest tested gap is far above the rounding floor).
    """
    if h_max < 4:
        raise ValueError("h_max must be at least 4")
    violation = None

    alphas = [odd_hook_constant(h) for h in range(1, h_max + 1)]
    alpha_increasing = all(a < b for a, b in zip(alphas, alphas[1:]))
    if not alpha_increasing:
        violation = "alpha not strictly increasing"

    beta_recurrence_exact = True
    for n in range(1, (h_max - 1) // 2 + 1):
        delta = distinct_hook_constant(2 * n + 1) - distinct_hook_constant(2 * n - 1)
        if delta.s != 0 or delta.r != Fraction(-1, n * 2 ** (2 * n + 1)):
            beta_recurrence_exact = False
            violation = violation or f"odd-index recurrence fails at n={n}"
            break

    with mp.workprec(prec):
        log2 = mp.log(2)
        half_log3 = mp.log(3) / 2
        limit_ratio = mp.log(4) / mp.log(3)
        alpha_exceeds_beta = True
        harmonic_vals = [mp.mpf(0)] * (h_max + 1)
        for k in range(1, h_max + 1):
            harmonic_vals[k] = harmonic_vals[k - 1] + mp.mpf(1) / k

        def tail(t):
            return harmonic_vals[t] - harmonic_vals[t // 2]

        def alpha_num(h):
            return (tail(h) + tail(h - 1)) / 2

        def log_tail_integral(n):
            # integral_{1/2}^1 (1-x)^n/x dx = sum_{i>=0} 2^{-(n+i+1)}/(n+i+1)
            total = mp.mpf(0)
            i = 0
            while True:
                term = mp.mpf(1) / ((n + i + 1) * mp.mpf(2) ** (n + i + 1))
                total += term
                if term < mp.eps * (total + 1):
                    return total
                i += 1

        # incremental rational parts of the explicit closed forms
        beta_even = mp.mpf(0)
        odd_r1 = mp.mpf(0)
        odd_r2 = mp.mpf(0)
        beta_at = {1: log_tail_integral(0)}
        for h in range(2, h_max + 1):
            if h % 2 == 0:
                beta_even += mp.mpf(1) / ((h - 1) * 2 ** (h - 1))
                beta_num = beta_even
            else:
                n = (h - 1) // 2
                odd_r1 += mp.mpf(1) / (n * 2 ** n)
                odd_r2 += mp.mpf(1) / (2 * n * 2 ** (2 * n))
                beta_num = odd_r1 - odd_r2 + log_tail_integral(n)
            beta_at[h] = beta_num
            if alpha_exceeds_beta and alpha_num(h) <= beta_num:
                alpha_exceeds_beta = False
                violation = violation or f"ordering fails at h={h}"
        alpha_gap = float(abs(alpha_num(h_max) - log2))
        beta_gap = float(abs(beta_at[h_max] - half_log3))
        gamma_gap = float(abs(alpha_num(h_max) / beta_at[h_max] - limit_ratio))

    return LimitReport(
        h_max=h_max,
        alpha_increasing=alpha_increasing,
        beta_recurrence_exact=beta_recurrence_exact,
        alpha_exceeds_beta=alpha_exceeds_beta,
        first_violation=violation,
        alpha_gap=alpha_gap,
        beta_gap=beta_gap,
        gamma_gap=gamma_gap,
    )
