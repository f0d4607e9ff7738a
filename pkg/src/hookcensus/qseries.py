"""Exact truncated power series in q, and the hook-count generating functions.

Coefficients are arbitrary-precision integers throughout.  A series is
either truncated at a known order or flagged ``exact`` (a polynomial whose
coefficients are known to every order); ring operations propagate the
smaller knowledge window, so no coefficient is ever claimed beyond what
the operands support.
"""

from __future__ import annotations

from functools import lru_cache
from math import ceil, floor
from typing import Iterable

INF = float("inf")


class FormalSeries:
    """A truncated power series sum c_t q^t with exact integer coefficients."""

    __slots__ = ("coeffs", "order", "exact")

    def __init__(self, coeffs: Iterable[int], order: int | None = None, exact: bool = False):
        coeffs = list(coeffs)
        if exact:
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
            order = len(coeffs) - 1
        elif order is None:
            order = len(coeffs) - 1
        else:
            del coeffs[order + 1 :]
            coeffs.extend([0] * (order + 1 - len(coeffs)))
        self.coeffs = tuple(coeffs)
        self.order = order
        self.exact = exact

    # -- basic protocol -------------------------------------------------

    def _known(self) -> float:
        return INF if self.exact else self.order

    def coefficient(self, t: int) -> int:
        if t < 0:
            return 0
        if t < len(self.coeffs):
            return self.coeffs[t]
        if self.exact:
            return 0
        raise IndexError(f"coefficient {t} beyond truncation order {self.order}")

    def coefficients(self, up_to: int | None = None) -> tuple[int, ...]:
        if up_to is None:
            return self.coeffs
        return tuple(self.coefficient(t) for t in range(up_to + 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalSeries):
            return NotImplemented
        if self.exact and other.exact:
            return self.coeffs == other.coeffs
        common = min(self._known(), other._known())
        common = int(common)
        return self.coefficients(common) == other.coefficients(common)

    def __hash__(self):
        return hash((self.coeffs, self.exact))

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if len(self.coeffs) > 8 else ""
        kind = "poly" if self.exact else f"O(q^{self.order + 1})"
        return f"FormalSeries([{head}{tail}]; {kind})"

    # -- ring operations ------------------------------------------------

    def _result_order(self, other: "FormalSeries") -> tuple[int | None, bool]:
        known = min(self._known(), other._known())
        if known is INF:
            return None, True
        return int(known), False

    def __add__(self, other: "FormalSeries") -> "FormalSeries":
        order, exact = self._result_order(other)
        n = max(len(self.coeffs), len(other.coeffs)) - 1 if exact else order
        out = [self.coefficient(t) + other.coefficient(t) for t in range(n + 1)]
        return FormalSeries(out, order, exact)

    def __sub__(self, other: "FormalSeries") -> "FormalSeries":
        return self + other.scale(-1)

    def __mul__(self, other: "FormalSeries") -> "FormalSeries":
        order, exact = self._result_order(other)
        n = len(self.coeffs) + len(other.coeffs) - 2 if exact else order
        out = [0] * (n + 1)
        for i, ci in enumerate(self.coeffs):
            if i > n:
                break
            if not ci:
                continue
            for j, cj in enumerate(other.coeffs):
                if i + j > n:
                    break
                if cj:
                    out[i + j] += ci * cj
        return FormalSeries(out, order, exact)

    def scale(self, c: int) -> "FormalSeries":
        return FormalSeries([c * x for x in self.coeffs],
                            None if self.exact else self.order, self.exact)

    def shift(self, e: int) -> "FormalSeries":
        """Multiply by q^e (e >= 0)."""
        if e < 0:
            raise ValueError("negative shift")
        coeffs = (0,) * e + self.coeffs
        order = None if self.exact else self.order + e
        return FormalSeries(coeffs, order, self.exact)

    def truncate(self, order: int) -> "FormalSeries":
        return FormalSeries(self.coefficients(order), order)


class QPolynomial(FormalSeries):
    """A series known to be exactly polynomial; coefficients vanish past its degree."""

    __slots__ = ()

    def __init__(self, coeffs: Iterable[int]):
        super().__init__(coeffs, exact=True)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else 0


def series_add(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    return a + b


def series_mul(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    return a * b


def series_scale(a: FormalSeries, c: int) -> FormalSeries:
    return a.scale(c)


# -- in-place list kernels (internal) ------------------------------------

def _mul_binomial(c: list[int], coef: int, e: int) -> None:
    """c *= (1 + coef q^e) within the truncation window."""
    for t in range(len(c) - 1, e - 1, -1):
        if c[t - e]:
            c[t] += coef * c[t - e]


def _div_binomial(c: list[int], coef: int, e: int) -> None:
    """c *= 1/(1 - coef q^e) within the truncation window."""
    for t in range(e, len(c)):
        if c[t - e]:
            c[t] += coef * c[t - e]


def geometric_inverse(p: FormalSeries, N: int) -> FormalSeries:
    """Series s with p*s = 1 up to order N; requires constant coefficient 1."""
    if p.coefficient(0) != 1:
        raise ValueError("geometric_inverse needs constant term 1")
    if not p.exact and p.order < N:
        raise ValueError(f"operand order {p.order} cannot support an order-{N} inverse")
    support = [(e, c) for e, c in enumerate(p.coefficients(min(N, len(p.coeffs) - 1))) if e and c]
    out = [0] * (N + 1)
    out[0] = 1
    for t in range(1, N + 1):
        acc = 0
        for e, c in support:
            if e > t:
                break
            acc += c * out[t - e]
        out[t] = -acc
    return FormalSeries(out, N)


def pochhammer(a_exp: int, base_exp: int, j: int, N: int | None = None, sign: int = 1) -> FormalSeries:
    """The finite symbol (sign*q^a_exp; q^base_exp)_j = prod_{i<j} (1 - sign*q^{a_exp + i*base_exp}).

    Returned exactly when N is None, else truncated to order N.
    """
    if a_exp < 0 or base_exp < 1 or j < 0:
        raise ValueError("pochhammer needs a_exp >= 0, base_exp >= 1, j >= 0")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    degree = j * a_exp + base_exp * j * (j - 1) // 2
    c = [0] * (degree + 1)
    c[0] = 1
    for i in range(j):
        _mul_binomial(c, -sign, a_exp + i * base_exp)
    poly = QPolynomial(c)
    return poly if N is None else poly.truncate(N)


@lru_cache(maxsize=None)
def pochhammer_infinite(sign: int, N: int, a_exp: int = 1, base_exp: int = 1) -> FormalSeries:
    """The infinite symbol (sign*q^a_exp; q^base_exp)_inf truncated to order N.

    Factors whose exponent exceeds N contribute nothing and are skipped.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    c = [0] * (N + 1)
    c[0] = 1
    e = a_exp
    while e <= N:
        _mul_binomial(c, -sign, e)
        e += base_exp
    return FormalSeries(c, N)


def _exact_div_binomial(c: list[int], coef: int, e: int) -> list[int]:
    """Quotient of the exact polynomial c by (1 - coef q^e); division must be exact."""
    out = [0] * (len(c) - e)
    for t in range(len(out)):
        out[t] = c[t] + (coef * out[t - e] if t >= e else 0)
    for t in range(len(out), len(c)):
        rem = c[t] + (coef * out[t - e] if 0 <= t - e < len(out) else 0)
        if rem != 0:
            raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=4096)
def _q_binomial_exact(n: int, k: int, base_exp: int) -> QPolynomial:
    c = [1]
    for i in range(1, k + 1):
        e1 = base_exp * (n - k + i)
        c = c + [0] * e1
        _mul_binomial(c, -1, e1)
        c = _exact_div_binomial(c, 1, base_exp * i)
    return QPolynomial(c)


def q_binomial(n: int, k: int, base_exp: int = 1, N: int | None = None) -> FormalSeries:
    """Gaussian binomial coefficient [n choose k] in the variable q^base_exp.

    One when k = 0 (for any n, by the empty-product convention), zero when
    k < 0 or k > n.  Built by alternately multiplying in (1 - q^{b(n-k+i)})
    and dividing out (1 - q^{b i}); every intermediate division is exact.
    """
    if k == 0:
        poly: FormalSeries = QPolynomial([1])
    elif k < 0 or k > n:
        poly = QPolynomial([])
    else:
        poly = _q_binomial_exact(n, k, base_exp)
    return poly if N is None else poly.truncate(N)


def lambert_sum(N: int) -> FormalSeries:
    """sum_{k>=1} q^k/(1+q^k) to order N.

    The coefficient of q^t is the number of odd divisors of t minus the
    number of even divisors.
    """
    out = [0] * (N + 1)
    for k in range(1, N + 1):
        e = k
        sign = 1
        while e <= N:
            out[e] += sign
            e += k
            sign = -sign
    return FormalSeries(out, N)


def kernel_odd(j: int, k: int, l: int, N: int) -> FormalSeries:
    """sum_{m>=0} (q^{2m+k}; q^2)_j q^{lm} to order N.

    Requires l >= 1 so the m-th summand has minimal exponent l*m, strictly
    increasing in m, which makes the truncation finite.
    """
    if l < 1:
        raise ValueError("kernel_odd needs l >= 1")
    if j < 0 or k < 0:
        raise ValueError("kernel_odd needs j, k >= 0")
    out = [0] * (N + 1)
    # expansion of prod_{i<j} (1 - q^{2m+k+2i}) over subsets of factors
    terms = []
    for mask in range(1 << j):
        size = bin(mask).count("1")
        twice_sum = 2 * sum(i for i in range(j) if mask >> i & 1)
        terms.append(((-1) ** size, size, twice_sum))
    for m in range(N // l + 1):
        base = l * m
        for sign, size, twice_sum in terms:
            e = base + size * (2 * m + k) + twice_sum
            if e <= N:
                out[e] += sign
    return FormalSeries(out, N)


def kernel_distinct(j: int, k: int, N: int) -> FormalSeries:
    """sum_{m>=0} q^{jm} / (-q^{m+1}; q)_k to order N.

    Requires j >= 1 so the m-th summand has minimal exponent j*m.
    """
    if j < 1:
        raise ValueError("kernel_distinct needs j >= 1")
    if k < 0:
        raise ValueError("kernel_distinct needs k >= 0")
    out = [0] * (N + 1)
    for m in range(N // j + 1):
        window = N - j * m
        c = [0] * (window + 1)
        c[0] = 1
        for i in range(k):
            _div_binomial(c, -1, m + 1 + i)
        base = j * m
        for t, v in enumerate(c):
            if v:
                out[base + t] += v
    return FormalSeries(out, N)


def _times_distinct_gf(acc: list[int]) -> list[int]:
    """acc * (-q;q)_inf, applied factor by factor within the window."""
    out = list(acc)
    for e in range(1, len(out)):
        _mul_binomial(out, 1, e)
    return out


def _add_shifted_product(acc: list[int], poly: FormalSeries, series: FormalSeries, shift: int) -> None:
    N = len(acc) - 1
    for i, ci in enumerate(poly.coeffs):
        if ci == 0 or i + shift > N:
            continue
        base = i + shift
        for t, v in enumerate(series.coeffs):
            if base + t > N:
                break
            if v:
                acc[base + t] += ci * v
    # series operands are always truncated at least to N - shift


def hook_gf_odd(h: int, N: int) -> FormalSeries:
    """Generating function whose q^n coefficient counts h-hooks among the
    partitions of n into odd parts, to order N.

    Built from the two coarm-parity families of cells: for even coarm the
    inner sum is kernel_odd(j, 1, 2h-4j) with prefactor q^h, for odd coarm
    it is kernel_odd(j, 3, 2h-4j-2) with prefactor q^{3h-4j-3}.
    """
    if h < 1:
        raise ValueError("h must be positive")
    acc = [0] * (N + 1)
    for j in range(ceil(h / 2)):
        if h > N:
            break
        poly = q_binomial(h - j - 1, j, base_exp=2)
        inner = kernel_odd(j, 1, 2 * h - 4 * j, N - h)
        _add_shifted_product(acc, poly, inner, h)
    for j in range(floor(h / 2)):
        prefix = 3 * h - 4 * j - 3
        if prefix > N:
            continue
        poly = q_binomial(h - j - 2, j, base_exp=2)
        inner = kernel_odd(j, 3, 2 * h - 4 * j - 2, N - prefix)
        _add_shifted_product(acc, poly, inner, prefix)
    return FormalSeries(_times_distinct_gf(acc), N)


def hook_gf_distinct(h: int, N: int) -> FormalSeries:
    """Generating function whose q^n coefficient counts h-hooks among the
    partitions of n into distinct parts, to order N.

    The j-th term carries prefactor q^{h + j(j-1)/2} against the inner sum
    kernel_distinct(j+1, h-j).
    """
    if h < 1:
        raise ValueError("h must be positive")
    acc = [0] * (N + 1)
    for j in range(ceil(h / 2)):
        prefix = h + j * (j - 1) // 2
        if prefix > N:
            continue
        poly = q_binomial(h - j - 1, j)
        inner = kernel_distinct(j + 1, h - j, N - prefix)
        _add_shifted_product(acc, poly, inner, prefix)
    return FormalSeries(_times_distinct_gf(acc), N)


def hook_gf_odd_closed(h: int, N: int) -> FormalSeries:
    """Same series as :func:`hook_gf_odd`, with each coarm sum collapsed by
    geometric summation into finitely many terms (-1)^k q^{e0(k)}/(1-q^{e(k)}).

    The odd-coarm prefactor exponent is 3h-4j-3; the off-by-one variant
    3h-4j-2 is wrong (it fails against enumeration for every h >= 2, see
    tests).
    """
    if h < 1:
        raise ValueError("h must be positive")
    acc = [0] * (N + 1)

    def add_collapsed(outer: FormalSeries, j: int, e0: int, pole: int, extra: int) -> None:
        # outer * sum_k [j choose k]_{q^2} (-1)^k q^{e0 + k^2 + extra*k} / (1 - q^{pole + 2k})
        for k in range(j + 1):
            shift = e0 + k * k + extra * k
            if shift > N:
                continue
            poly = (outer * q_binomial(j, k, base_exp=2)).truncate(N - shift)
            term = [0] * (N + 1)
            for t, v in enumerate(poly.coeffs):
                term[t + shift] = v if k % 2 == 0 else -v
            _div_binomial(term, 1, pole + 2 * k)
            for t in range(N + 1):
                acc[t] += term[t]

    for j in range(ceil(h / 2)):
        add_collapsed(q_binomial(h - j - 1, j, base_exp=2), j, h, 2 * h - 4 * j, 0)
    for j in range(floor(h / 2)):
        add_collapsed(q_binomial(h - j - 2, j, base_exp=2), j, 3 * h - 4 * j - 3,
                      2 * h - 4 * j - 2, 2)
    return FormalSeries(_times_distinct_gf(acc), N)


# -- pinned small closed forms -------------------------------------------

def _ratio_series(numerator: dict[int, int], denominator: list[tuple[int, int]], N: int) -> FormalSeries:
    """numerator / prod (1 - coef q^e), denominator factors given as (coef, e)."""
    c = [0] * (N + 1)
    for e, v in numerator.items():
        if e <= N:
            c[e] += v
    for coef, e in denominator:
        _div_binomial(c, coef, e)
    return FormalSeries(c, N)


# Rational parts of the h <= 3 hook generating functions after dividing out
# the distinct-partition product; odd h on the distinct side carries an extra
# lambert_sum term on top of these.
SMALL_FORM_ODD = {
    1: ({1: 1}, [(1, 2)]),
    2: ({5: 1, 3: 1, 2: 1}, [(1, 4)]),
    3: ({10: 1, 9: 1, 7: 2, 5: 3, 4: -1, 3: 2}, [(1, 6), (-1, 2)]),
}
SMALL_FORM_DISTINCT = {
    1: ({}, []),
    2: ({2: 1}, [(1, 2)]),
    3: ({5: 1, 2: -1, 1: -1}, [(1, 4), (-1, 1)]),
}


def rational_form_check(h: int, N: int) -> bool:
    """Check the pinned h <= 3 closed forms against the defining double sums.

    Odd-parts side: hook_gf_odd(h) = (-q;q)_inf * R_h(q).  Distinct side:
    hook_gf_distinct(h) = (-q;q)_inf * (S_h(q) + lambert_sum) for odd h and
    (-q;q)_inf * S_h(q) for even h, with R_h, S_h the pinned rational forms.
    """
    if h not in SMALL_FORM_ODD:
        raise ValueError("closed forms are pinned only for h in {1, 2, 3}")
    eta = pochhammer_infinite(-1, N)
    num, den = SMALL_FORM_ODD[h]
    if hook_gf_odd(h, N) != eta * _ratio_series(num, den, N):
        return False
    num, den = SMALL_FORM_DISTINCT[h]
    rational = _ratio_series(num, den, N)
    if h % 2 == 1:
        rational = rational + lambert_sum(N)
    return hook_gf_distinct(h, N) == eta * rational


def identity_suite(N: int, limit: int = 6) -> list[str]:
    """Verify the three summation identities used to collapse the coarm sums,
    as exact series identities to order N for parameters up to ``limit``.

    Returns a list of failure descriptions; an empty list means every
    identity holds.  Each failure names the identity, its parameters, and
    the first disagreeing exponent.
    """
    if N < 1:
        raise ValueError("N must be positive")
    failures = []

    def first_mismatch(a: FormalSeries, b: FormalSeries) -> int | None:
        for t in range(N + 1):
            if a.coefficient(t) != b.coefficient(t):
                return t
        return None

    # (1) (q^{2m+1}; q^2)_n = sum_k [n choose k]_{q^2} (-1)^k q^{2mk+k^2}
    for n in range(limit + 1):
        for m in range(limit + 1):
            lhs = pochhammer(2 * m + 1, 2, n, N)
            rhs = FormalSeries([0] * (N + 1), N)
            for k in range(n + 1):
                e = 2 * m * k + k * k
                if e <= N:
                    rhs = rhs + q_binomial(n, k, base_exp=2, N=N - e).shift(e).scale((-1) ** k).truncate(N)
            t = first_mismatch(lhs.truncate(N), rhs)
            if t is not None:
                failures.append(f"pochhammer-expansion n={n} m={m} exponent={t}")
    # (2) 1/(-q^{m+1}; q)_n = sum_k [n+k-1 choose k]_q (-1)^k q^{(m+1)k}
    for n in range(limit + 1):
        for m in range(limit + 1):
            lhs = geometric_inverse(pochhammer(m + 1, 1, n, N, sign=-1), N)
            rhs = FormalSeries([0] * (N + 1), N)
            k = 0
            while (m + 1) * k <= N:
                e = (m + 1) * k
                rhs = rhs + q_binomial(n + k - 1, k, N=N - e).shift(e).scale((-1) ** k).truncate(N)
                k += 1
            t = first_mismatch(lhs, rhs)
            if t is not None:
                failures.append(f"inverse-pochhammer-expansion n={n} m={m} exponent={t}")
    # (3) sum_k (-q)^k/(1-q^k) = -sum_k q^k/(1+q^k)
    lhs = [0] * (N + 1)
    for k in range(1, N + 1):
        sign = -1 if k % 2 == 1 else 1
        for e in range(k, N + 1, k):
            lhs[e] += sign
    t = first_mismatch(FormalSeries(lhs, N), lambert_sum(N).scale(-1))
    if t is not None:
        failures.append(f"alternating-lambert exponent={t}")
    return failures
