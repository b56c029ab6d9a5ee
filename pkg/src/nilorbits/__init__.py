"""Nilpotent orbits, Lusztig-Spaltenstein induction and jet-scheme reducibility certificates."""

from .partitions import EpsClass, Partition, collapse, dual, enumerate_partitions, make_partition, parse_partition
from .orbits import Algebra, Orbit, orbit_dim, is_little, is_rigid, parse_algebra, parse_orbit

__all__ = [
    "Algebra", "EpsClass", "Orbit", "Partition", "collapse", "dual", "enumerate_partitions",
    "is_little", "is_rigid", "make_partition", "orbit_dim", "parse_algebra", "parse_orbit",
    "parse_partition",
]
