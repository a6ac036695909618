"""Exact checks of hook-length, content and symplectic-content partition identities."""
from .arith import Poly, Rational
from .partitions import Family, Partition, conjugate, enumerate_partitions
from .kernels import Kernel, partition_sum
from .qseries import QSeries
from .identities import BUILTINS, lhs_series, rhs_series, verify

__all__ = [
    "Poly", "Rational", "Partition", "Family", "conjugate", "enumerate_partitions",
    "Kernel", "partition_sum", "QSeries", "BUILTINS", "lhs_series", "rhs_series", "verify",
]
__version__ = "0.1.0"
