import logging

from ..errors import NonRegularComplexError, SerializationError
from ..kernel import FlagSystem, IncidenceComplex, KernelService
from ..kernel import serialization as ser

logger = logging.getLogger(__name__)

FORMATS = ("cxc", "cxf", "edge-list", "face-list")
LOSSY = ("edge-list", "face-list")


class ExportService:
    """复形导出"""

    @staticmethod
    def export(X: IncidenceComplex | FlagSystem, fmt: str, strict: bool = False) -> str:
        if fmt not in FORMATS:
            raise SerializationError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
        if strict and fmt in LOSSY:
            raise SerializationError(f"{fmt} keeps only part of the complex; refused with --strict")
        if fmt == "cxf":
            return ser.to_cxf(X if isinstance(X, FlagSystem) else KernelService.to_flags(X))
        if isinstance(X, FlagSystem):
            try:
                X = KernelService.from_flags(X)
            except NonRegularComplexError as e:
                raise SerializationError(f"{fmt} refused: {e}") from e
        if fmt == "cxc":
            return ser.to_cxc(X)
        if fmt == "edge-list":
            return ser.to_edge_list(X)
        return ser.to_face_list(X)
