import logging
from typing import Sequence

from ..constructions.quotient import find_antipodal_involution, involution_problems
from ..errors import ComplexError, NotClosedError
from ..kernel import FlagSystem, IncidenceComplex, KernelService
from .classify_model import ADMISSIBLE, SurfaceClass, SurfaceType

logger = logging.getLogger(__name__)


class ClassifyService:
    """有限 3-富勒烯曲面分类"""

    @staticmethod
    def surface_type(chi: int, orientable: bool) -> SurfaceType | None:
        if chi == 2 and orientable:
            return SurfaceType.SPHERE
        if chi == 1 and not orientable:
            return SurfaceType.PROJECTIVE_PLANE
        if chi == 0:
            return SurfaceType.TORUS if orientable else SurfaceType.KLEIN_BOTTLE
        return None

    @staticmethod
    def classify_3fullerene(X: IncidenceComplex | FlagSystem) -> SurfaceClass:
        """Which of the four admissible surfaces a closed 5/6-gonal surface lives on.

        Open or disconnected input raises; anything else returns a class, possibly
        with a rejection reason.
        """
        if X.dim != 2:
            raise ComplexError(f"classification needs a rank-2 complex, got rank {X.dim}")
        if isinstance(X, FlagSystem):
            if any("fixed points" in p for p in X.validate(closed=True)):
                raise NotClosedError("surface has boundary flags")
        else:
            for e, faces in enumerate(X.cofaces[1]):
                if len(faces) != 2:
                    raise NotClosedError(f"edge {e} lies in {len(faces)} faces; surface is not closed")
        if not KernelService.is_connected(X):
            raise ComplexError("surface is not connected")

        fv = KernelService.f_vector(X)
        chi = KernelService.euler_characteristic(X)
        orientable = KernelService.orientability(X).orientable
        out = SurfaceClass(p5=fv.p5, p6=fv.p6, euler_characteristic=chi, orientable=orientable)

        report = KernelService.validate_simple_closed(X, 2)
        if not report.passed:
            out.rejection = f"not a 3-fullerene: {report.violations[0]}"
            return out
        if fv.p_other:
            out.rejection = f"not a 3-fullerene: {fv.p_other} faces are neither pentagons nor hexagons"
            return out
        surface = ClassifyService.surface_type(chi, orientable)
        if surface is None:
            out.rejection = f"not a 3-fullerene: Euler characteristic {chi} is not admissible"
            return out
        # any failure past this point means the counting argument was broken, i.e. a bug here
        if 6 * chi != fv.p5 or ADMISSIBLE[surface] != fv.p5:
            logger.error(f"inconsistent classification: {surface.value} with chi={chi}, p5={fv.p5}")
            out.rejection = f"inconsistent: {surface.value} with p5={fv.p5}, chi={chi}"
            return out
        out.surface = surface
        logger.info(f"classified as {surface.value} (p5={fv.p5}, p6={fv.p6})")
        return out

    @staticmethod
    def check_centrally_symmetric(F: IncidenceComplex, sigma: Sequence[int]) -> bool:
        """True iff sigma is a fixed-point-free involutive automorphism of F.

        Raises InvolutionError when sigma is not an automorphism at all.
        """
        maps = KernelService.induced_maps(F, sigma)
        if involution_problems(maps):
            return False
        if F.count(0) % 4:
            logger.warning(f"fixed-point-free involution on {F.count(0)} vertices, not divisible by 4")
            return False
        return True

    @staticmethod
    def find_central_symmetry(F: IncidenceComplex) -> list[int] | None:
        if F.count(0) % 4:
            return None
        return find_antipodal_involution(F)
