"""Exact hook-length statistics for restricted partition classes.

Submodules: enumeration oracle (:mod:`partitions`), exact q-series engine
(:mod:`qseries`), exact limit constants (:mod:`exactconst`), main-term
asymptotics (:mod:`asymptotics`), starred-class scans (:mod:`conjectures`),
and the command-line surface (:mod:`cli`).
"""

from .exactconst import (Log2Number, distinct_hook_constant, hook_ratio,
                         odd_hook_constant)
from .partitions import (Partition, PartitionClass, conjugate, count_hooks,
                         enumerate_partitions, hook_multiset)
from .qseries import FormalSeries, QPolynomial, hook_gf_distinct, hook_gf_odd

__version__ = "0.1.0"

__all__ = [
    "FormalSeries",
    "Log2Number",
    "Partition",
    "PartitionClass",
    "QPolynomial",
    "conjugate",
    "count_hooks",
    "distinct_hook_constant",
    "enumerate_partitions",
    "hook_gf_distinct",
    "hook_gf_odd",
    "hook_multiset",
    "hook_ratio",
    "odd_hook_constant",
    "__version__",
]
