"""Exact combinatorial engine for toric arrangements."""

from toric_arrangements._core import (
    Arrangement,
    hnf,
    partition_lattice_size,
    snf_divisors,
)

__all__ = ["Arrangement", "hnf", "partition_lattice_size", "snf_divisors"]
