"""Exact enumeration of integer tetrahedra by perimeter and diameter."""

from tetracount.errors import (
    CapacityError,
    CeilingError,
    CountOverflowError,
    IntegrityError,
    TetraError,
)
from tetracount.geometry import EdgeLabeling, is_valid_tetrahedron

__all__ = [
    "CapacityError",
    "CeilingError",
    "CountOverflowError",
    "EdgeLabeling",
    "IntegrityError",
    "TetraError",
    "is_valid_tetrahedron",
]

__version__ = "0.1.0"
