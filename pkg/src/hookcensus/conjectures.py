"""Desk-scale evidence scans for the starred partition classes.

The starred counts track hooks among self-conjugate partitions and among
partitions into distinct odd parts.  No generating functions or limit
constants are proven for them, so everything here is exhaustive
enumeration over a stated range: an empty counterexample list is evidence
on that range, never a proof.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .partitions import PartitionClass, class_size, count_hooks


@dataclass(frozen=True)
class ScanResult:
    """Outcome of one conjecture scan over an explicit parameter range."""

    conjecture: str
    scanned: dict
    counterexamples: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def to_json_dict(self) -> dict:
        return {
            "conjecture": self.conjecture,
            "range": self.scanned,
            "counterexamples": self.counterexamples,
            "summary": self.summary,
        }


def star_counts(h: int, n: int) -> tuple[int, int]:
    """(self-conjugate, distinct-odd) counts of h-hooks among partitions of n."""
    return (count_hooks(PartitionClass.SELF_CONJUGATE, h, n),
            count_hooks(PartitionClass.DISTINCT_ODD, h, n))


def divisibility_scan(m_max: int, n_max: int) -> ScanResult:
    """Check that the self-conjugate count of 2m-hooks is divisible by 2m
    for every m <= m_max, n <= n_max."""
    if m_max < 1 or n_max < 1:
        raise ValueError("m_max and n_max must be positive")
    counterexamples = []
    checked = 0
    for m in range(1, m_max + 1):
        for n in range(n_max + 1):
            count = count_hooks(PartitionClass.SELF_CONJUGATE, 2 * m, n)
            checked += 1
            if count % (2 * m) != 0:
                counterexamples.append({"m": m, "n": n, "count": count})
    return ScanResult(
        conjecture="selfconjugate-even-hook-divisibility",
        scanned={"m_max": m_max, "n_max": n_max},
        counterexamples=counterexamples,
        summary={"checked": checked, "violations": len(counterexamples)},
    )


def star_class_bijection_scan(n_max: int) -> ScanResult:
    """Check |self-conjugate partitions of n| = |distinct-odd partitions of n|
    for n <= n_max (the classical diagonal-hook folding bijection)."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    counterexamples = []
    for n in range(n_max + 1):
        sc = class_size(PartitionClass.SELF_CONJUGATE, n)
        do = class_size(PartitionClass.DISTINCT_ODD, n)
        if sc != do:
            counterexamples.append({"n": n, "selfconjugate": sc, "distinctodd": do})
    return ScanResult(
        conjecture="selfconjugate-distinctodd-bijection",
        scanned={"n_max": n_max},
        counterexamples=counterexamples,
        summary={"checked": n_max + 1, "violations": len(counterexamples)},
    )


def star_balanced_scan(n_max: int) -> ScanResult:
    """Check that hooks in each starred class total n times the class size
    for every n <= n_max (each size-n diagram carries exactly n hooks)."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    counterexamples = []
    for cls in (PartitionClass.SELF_CONJUGATE, PartitionClass.DISTINCT_ODD):
        for n in range(n_max + 1):
            total = sum(count_hooks(cls, h, n) for h in range(1, n + 1))
            expected = n * class_size(cls, n)
            if total != expected:
                counterexamples.append({"class": cls.value, "n": n,
                                        "total": total, "expected": expected})
    return ScanResult(
        conjecture="starred-balanced-identity",
        scanned={"n_max": n_max},
        counterexamples=counterexamples,
        summary={"checked": 2 * (n_max + 1), "violations": len(counterexamples)},
    )


def star_ratio_evidence(h: int, n_list: list[int]) -> ScanResult:
    """Tabulate the self-conjugate/distinct-odd count ratio over n_list.

    Entries with a zero denominator are marked and excluded from the
    summary statistics; no convergence is asserted.
    """
    if h < 2:
        raise ValueError("the ratio conjecture concerns h >= 2")
    rows = []
    ratios = []
    for n in sorted(n_list):
        a_star, b_star = star_counts(h, n)
        if b_star == 0:
            rows.append({"n": n, "a_star": a_star, "b_star": b_star, "ratio": None})
            continue
        ratio = Fraction(a_star, b_star)
        rows.append({"n": n, "a_star": a_star, "b_star": b_star,
                     "ratio": float(ratio)})
        ratios.append(float(ratio))
    summary: dict = {"rows": rows, "skipped_zero_denominator":
                     sum(1 for r in rows if r["ratio"] is None)}
    if ratios:
        summary.update({"min_ratio": min(ratios), "max_ratio": max(ratios),
                        "last_ratio": ratios[-1]})
    return ScanResult(
        conjecture="starred-ratio-trend",
        scanned={"h": h, "n_list": sorted(n_list)},
        counterexamples=[],
        summary=summary,
    )
