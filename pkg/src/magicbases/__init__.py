"""Sidon sets, thin additive bases, edge-magic labellings and their bounds."""

from .intset import (
    IntSet,
    RepCounts,
    diffset,
    from_ap,
    is_sidon,
    missing_in_interval,
    rep_counts,
    restricted_sumset,
    sumset,
)
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "IntSet",
    "RepCounts",
    "diffset",
    "from_ap",
    "is_sidon",
    "missing_in_interval",
    "rep_counts",
    "restricted_sumset",
    "sumset",
]
