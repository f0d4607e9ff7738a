"""Restricted partition classes and brute-force hook statistics.

A partition is represented as a tuple of weakly decreasing positive
integers; the empty tuple is the unique partition of 0.  Everything in
this module is computed by direct enumeration, which makes it the
independent oracle that the series machinery in :mod:`hookcensus.qseries`
is validated against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

Partition = tuple[int, ...]


class PartitionClass(Enum):
    """Membership classes for partitions, keyed by their CLI tag."""

    UNRESTRICTED = "all"
    ODD = "odd"
    DISTINCT = "distinct"
    SELF_CONJUGATE = "selfconjugate"
    DISTINCT_ODD = "distinctodd"

    def contains(self, parts: Partition) -> bool:
        if self is PartitionClass.ODD:
            return all(p % 2 == 1 for p in parts)
        if self is PartitionClass.DISTINCT:
            return all(a > b for a, b in zip(parts, parts[1:]))
        if self is PartitionClass.SELF_CONJUGATE:
            return conjugate(parts) == parts
        if self is PartitionClass.DISTINCT_ODD:
            return PartitionClass.ODD.contains(parts) and PartitionClass.DISTINCT.contains(parts)
        return True

    @classmethod
    def from_tag(cls, tag: str) -> "PartitionClass":
        for member in cls:
            if member.value == tag:
                return member
        raise ValueError(f"unknown partition class tag {tag!r}")


def is_partition(parts) -> bool:
    """True if ``parts`` is a weakly decreasing tuple of positive integers."""
    return all(p >= 1 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def conjugate(parts: Partition) -> Partition:
    """Transpose of the Ferrers diagram (an involution preserving size)."""
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def _first_part(remaining: int, cap: int, step: int) -> int:
    s = min(remaining, cap)
    if step == 2 and s % 2 == 0:
        s -= 1
    return s


def enumerate_partitions(cls: PartitionClass, n: int) -> Iterator[Partition]:
    """Stream the partitions of ``n`` in ``cls``, in decreasing lexicographic order.

    The walk is an explicit-stack descent over first parts; nothing is
    materialized beyond the current prefix, so memory stays proportional
    to the longest partition produced.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    step = 2 if cls in (PartitionClass.ODD, PartitionClass.DISTINCT_ODD) else 1
    if cls is PartitionClass.DISTINCT:
        gap = 1
    elif cls is PartitionClass.DISTINCT_ODD:
        gap = 2
    else:
        gap = 0
    filtered = cls is PartitionClass.SELF_CONJUGATE

    prefix: list[int] = []
    stack = [(n, _first_part(n, n, step))]
    while stack:
        remaining, part = stack[-1]
        if part <= 0:
            stack.pop()
            if prefix:
                prefix.pop()
            continue
        stack[-1] = (remaining, part - step)
        if part == remaining:
            out = tuple(prefix) + (part,)
            if not filtered or conjugate(out) == out:
                yield out
            continue
        nxt = _first_part(remaining - part, part - gap, step)
        if nxt <= 0:
            continue
        prefix.append(part)
        stack.append((remaining - part, nxt))


def cell_stats(parts: Partition, i: int, j: int) -> tuple[int, int, int, int]:
    """Return (arm, leg, coarm, coleg) for the 1-indexed cell (i, j).

    The hook length of the cell is arm + leg + 1.
    """
    if not (1 <= i <= len(parts)) or not (1 <= j <= parts[i - 1]):
        raise ValueError(f"cell ({i}, {j}) is outside the diagram of {parts}")
    arm = parts[i - 1] - j
    leg = sum(1 for p in parts[i:] if p >= j)
    return arm, leg, j - 1, i - 1


def hook_multiset(parts: Partition) -> list[int]:
    """All hook lengths of the diagram, one entry per cell (row-major)."""
    conj = conjugate(parts)
    hooks = []
    for i, row in enumerate(parts, 1):
        for j in range(1, row + 1):
            hooks.append(row - j + conj[j - 1] - i + 1)
    return hooks


@lru_cache(maxsize=None)
def _hook_tally(cls: PartitionClass, n: int) -> tuple[tuple[int, ...], int, int]:
    """(counts, members, rows): counts[h] = number of h-hooks among class
    members of n, rows = total number of parts over all members."""
    counts = [0] * (n + 1)
    members = 0
    rows = 0
    for parts in enumerate_partitions(cls, n):
        members += 1
        rows += len(parts)
        conj = conjugate(parts)
        for i, row in enumerate(parts, 1):
            for j in range(1, row + 1):
                counts[row - j + conj[j - 1] - i + 1] += 1
    return tuple(counts), members, rows


def class_size(cls: PartitionClass, n: int) -> int:
    """Number of partitions of ``n`` in the class."""
    return _hook_tally(cls, n)[1]


def total_parts(cls: PartitionClass, n: int) -> int:
    """Total number of parts (diagram rows) over all class members of ``n``."""
    return _hook_tally(cls, n)[2]


def count_hooks(cls: PartitionClass, h: int, n: int) -> int:
    """Total number of hooks equal to ``h`` over all class members of size ``n``."""
    if h < 1:
        raise ValueError("h must be positive")
    if h > n:
        return 0
    return _hook_tally(cls, n)[0][h]


def balanced_identity_check(cls: PartitionClass, n: int) -> bool:
    """Whether the hooks of all class members of ``n`` total n times the member count.

    Every diagram of size n carries exactly n cells, hence n hooks, so the
    identity holds for any class; failures indicate a counting bug.
    """
    counts, members, _ = _hook_tally(cls, n)
    return sum(counts) == n * members


@dataclass(frozen=True)
class HookCountTable:
    """Exact hook counts for one class over a rectangular (h, n) window."""

    cls: PartitionClass
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def entry(self, h: int, n: int) -> int:
        if h > n:
            return 0
        return self.entries[(h, n)]


def build_hook_table(cls: PartitionClass, h_range: range, n_range: range) -> HookCountTable:
    entries = {}
    for n in n_range:
        counts = _hook_tally(cls, n)[0]
        for h in h_range:
            entries[(h, n)] = counts[h] if h <= n else 0
    return HookCountTable(cls, entries)


def _power_series(exponent: int, n_max: int) -> list[int]:
    """Coefficients of prod_{k>=1} (1 - x^k)^exponent up to x^n_max."""
    coeffs = [0] * (n_max + 1)
    coeffs[0] = 1
    for k in range(1, n_max + 1):
        if exponent >= 0:
            for _ in range(exponent):
                for t in range(n_max, k - 1, -1):
                    coeffs[t] -= coeffs[t - k]
        else:
            for _ in range(-exponent):
                for t in range(k, n_max + 1):
                    coeffs[t] += coeffs[t - k]
    return coeffs


def nekrasov_okounkov_check(n_max: int, z: int) -> bool:
    """Check the hook-product identity
    sum_{partitions} x^|L| prod_{h} (1 - z/h^2) = prod_k (1 - x^k)^{z-1}
    coefficientwise for all n <= n_max, exactly over the rationals.

    Only integer z is supported: both sides are then exactly computable,
    the left by rational hook products, the right by an integer series.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    rhs = _power_series(z - 1, n_max)
    for n in range(n_max + 1):
        lhs = Fraction(0)
        for parts in enumerate_partitions(PartitionClass.UNRESTRICTED, n):
            prod = Fraction(1)
            for h in hook_multiset(parts):
                prod *= 1 - Fraction(z, h * h)
                if prod == 0:
                    break
            lhs += prod
        if lhs != rhs[n]:
            return False
    return True
