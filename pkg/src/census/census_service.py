import logging
from collections import defaultdict

from ..errors import ComplexError, NotClosedError
from ..kernel import CellRef, FlagSystem, IncidenceComplex, KernelService
from . import certificate as cert
from .catalog import lookup
from .census_model import CanonicalCertificate, CensusEntry, CensusReport, IsomorphismResult

logger = logging.getLogger(__name__)


class CensusService:
    """胞腔提取, 规范证书与普查"""

    @staticmethod
    def extract_cell(X: IncidenceComplex, c: CellRef | int) -> IncidenceComplex:
        """Boundary surface of a top cell, vertices numbered in the complex's order."""
        ref = c if isinstance(c, CellRef) else CellRef(rank=X.dim, id=c)
        if ref.rank != X.dim or X.dim != 3:
            raise ComplexError(f"extract_cell needs a 3-cell of a rank-3 complex, got rank {ref.rank} of {X.dim}")
        if ref.id >= X.count(3):
            raise ComplexError(f"3-cell {ref.id} does not exist (complex has {X.count(3)})")
        faces = X.cells[3][ref.id]
        polygons = [X.face_vertices(p) for p in faces]
        order = sorted({v for poly in polygons for v in poly})
        return IncidenceComplex.from_polygons(polygons, vertex_order=order)

    @staticmethod
    def certificate_flags(F: FlagSystem) -> CanonicalCertificate:
        return CanonicalCertificate(scheme=f"{cert.SCHEME}/r{F.dim}", digest=cert.digest(F))

    @staticmethod
    def certificate_surface(S: IncidenceComplex) -> CanonicalCertificate:
        if S.dim != 2:
            raise ComplexError(f"certificate_surface needs rank 2, got {S.dim}")
        for e, faces in enumerate(S.cofaces[1]):
            if len(faces) != 2:
                raise NotClosedError(f"edge {e} lies in {len(faces)} faces; surface is not closed")
        F = KernelService.to_flags(S)
        if F.components()[0] != 1:
            raise ComplexError("surface is not connected")
        return CensusService.certificate_flags(F)

    @staticmethod
    def certificate(X: IncidenceComplex | FlagSystem) -> CanonicalCertificate:
        if isinstance(X, FlagSystem):
            return CensusService.certificate_flags(X)
        if X.dim == 2:
            return CensusService.certificate_surface(X)
        return CensusService.certificate_flags(KernelService.to_flags(X))

    @staticmethod
    def catalog_name(S: IncidenceComplex) -> str:
        return lookup(CensusService.certificate_surface(S).digest)

    @staticmethod
    def census(X: IncidenceComplex) -> CensusReport:
        if X.dim != 3:
            raise ComplexError(f"census needs a rank-3 complex, got rank {X.dim}")
        groups: dict[str, list[int]] = defaultdict(list)
        samples: dict[str, IncidenceComplex] = {}
        for c in range(X.count(3)):
            S = CensusService.extract_cell(X, c)
            digest = CensusService.certificate_surface(S).digest
            groups[digest].append(c)
            samples.setdefault(digest, S)
        entries = []
        for digest, cells in groups.items():
            S = samples[digest]
            entries.append(CensusEntry(
                name=lookup(digest),
                certificate=digest,
                fvector=KernelService.f_vector(S).counts,
                gonality=KernelService.gonality_profile(S),
                count=len(cells),
            ))
        entries.sort(key=lambda e: (-e.count, e.name, e.certificate))
        report = CensusReport(entries=entries, total=X.count(3))
        unknown = report.unknown()
        if unknown:
            logger.warning(f"census found {sum(e.count for e in unknown)} cells of unknown type")
        logger.info(f"census: {report.counts()}")
        return report

    @staticmethod
    def is_isomorphic(A: IncidenceComplex | FlagSystem, B: IncidenceComplex | FlagSystem) -> bool:
        FA = A if isinstance(A, FlagSystem) else KernelService.to_flags(A)
        FB = B if isinstance(B, FlagSystem) else KernelService.to_flags(B)
        return cert.find_isomorphism(FA, FB) is not None

    @staticmethod
    def compare(A: IncidenceComplex | FlagSystem, B: IncidenceComplex | FlagSystem) -> IsomorphismResult:
        ca, cb = CensusService.certificate(A), CensusService.certificate(B)
        return IsomorphismResult(isomorphic=ca == cb, certificate_a=ca.digest, certificate_b=cb.digest)
