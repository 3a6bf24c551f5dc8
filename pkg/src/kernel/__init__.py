from .complex import FlagSystem, IncidenceComplex, canonical_cycle
from .kernel_model import CellRef, FVector, Orientability, OrientabilityReport, ValidationReport
from .kernel_service import KernelService

__all__ = [
    "CellRef",
    "FVector",
    "FlagSystem",
    "IncidenceComplex",
    "KernelService",
    "Orientability",
    "OrientabilityReport",
    "ValidationReport",
    "canonical_cycle",
]
