"""Exact spectrum and eigenfunctions of a charge on a sphere around a magnetic monopole."""

__version__ = "0.1.0"

from .errors import DomainError, EmptyTableError, NumericError  # noqa: E402
from .spectrum import EnergyLevel, PhysicalScale, QuantumNumbers, epsilon  # noqa: E402

__all__ = [
    "DomainError",
    "EmptyTableError",
    "NumericError",
    "EnergyLevel",
    "PhysicalScale",
    "QuantumNumbers",
    "epsilon",
    "__version__",
]
