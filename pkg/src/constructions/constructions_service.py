import logging
from typing import Any, Sequence

from ..builders.builders_service import BuildersService
from ..errors import GlueError, InvolutionError, PairingError
from ..kernel import CellRef, FlagSystem, IncidenceComplex, KernelService
from . import quotient
from .constructions_model import FacetPairing, GlueResult, GlueSite, TwistRow
from .corona import corona_b
from .glue import glue
from .subdivision import subdivide_c

logger = logging.getLogger(__name__)

KINDS = ("A", "B", "C", "fold", "quotient")


class ConstructionsService:
    """流形构造服务: 粘合链, 冠层生长, 细分对偶, 商空间"""

    @staticmethod
    def glue(site: GlueSite) -> GlueResult:
        return glue(site)

    @staticmethod
    def glue_and_flatten(site: GlueSite) -> IncidenceComplex:
        return glue(site).complex

    @staticmethod
    def glue_chain(seed: IncidenceComplex, n: int, facet: int, antipode: Sequence[int]) -> IncidenceComplex:
        """n copies of seed, copy k+1 glued on the facet opposite the one copy k was glued on.

        The gluing iso is the antipodal map: far facet of the last copy -> `facet` of the new one.
        """
        if n < 1:
            raise GlueError(f"a chain needs at least one copy, got {n}")
        d = seed.dim
        maps = KernelService.induced_maps(seed, antipode)
        far = maps[d][facet]
        if far == facet:
            raise InvolutionError(f"antipode fixes facet {facet}")
        far_vertices = sorted(seed.cell_vertices(d, far))

        def copy(k: int) -> IncidenceComplex:
            return seed.with_labels({d: {c: f"copy{k}:{c}" for c in range(seed.count(d))}})

        current = copy(0)
        vmap = {v: v for v in range(seed.count(0))}
        cmap = {c: c for c in range(seed.count(d))}
        for k in range(1, n):
            site = GlueSite(
                complex_a=current,
                complex_b=copy(k),
                facet_a=CellRef(rank=d, id=cmap[far]),
                facet_b=CellRef(rank=d, id=facet),
                iso={vmap[w]: antipode[w] for w in far_vertices},
            )
            result = glue(site)
            current, vmap, cmap = result.complex, result.vertex_map_b, result.cell_map_b
            logger.debug(f"glue_chain: copy {k} attached, {KernelService.f_vector(current).as_tuple()}")
        logger.info(f"glue_chain x{n}: {KernelService.f_vector(current).as_tuple()}")
        return current

    @staticmethod
    def chain_A(n: int) -> IncidenceComplex:
        return ConstructionsService.glue_chain(
            BuildersService.build_120cell(), n, 0, BuildersService.cell120_antipode()
        )

    @staticmethod
    def dodecahedron_chain(n: int) -> IncidenceComplex:
        """Three-dimensional analogue of chain_A: n dodecahedra glued cap to cap."""
        return ConstructionsService.glue_chain(
            BuildersService.build_dodecahedron(), n, 0, BuildersService.layered_barrel_antipode(5, 0)
        )

    @staticmethod
    def corona_B(F: IncidenceComplex) -> IncidenceComplex:
        return corona_b(F)

    @staticmethod
    def subdivide_C(F: IncidenceComplex, times: int = 1) -> IncidenceComplex:
        if times < 1:
            raise ValueError(f"subdivision count must be >= 1, got {times}")
        for _ in range(times):
            F = subdivide_c(F)
        return F

    @staticmethod
    def antipodal_fold(F: IncidenceComplex, sigma: Sequence[int] | None = None) -> IncidenceComplex | FlagSystem:
        if sigma is None:
            sigma = quotient.find_antipodal_involution(F)
            if sigma is None:
                raise InvolutionError("complex has no fixed-point-free involution to fold by")
        return quotient.antipodal_fold(F, sigma)

    @staticmethod
    def facet_pairing_quotient(pairing: FacetPairing) -> FlagSystem:
        return quotient.facet_pairing_quotient(pairing)

    @staticmethod
    def dodecahedral_space(tenths: int) -> FlagSystem:
        """Opposite faces of the dodecahedron glued with a twist of `tenths`/10 turn."""
        Do = BuildersService.build_dodecahedron()
        pairing = quotient.opposite_pairing(
            Do, BuildersService.layered_barrel_antipode(5, 0), quotient.tenths_to_steps(tenths)
        )
        return quotient.facet_pairing_quotient(pairing)

    @staticmethod
    def twist_table() -> list[TwistRow]:
        return quotient.twist_table(
            BuildersService.build_dodecahedron(), BuildersService.layered_barrel_antipode(5, 0)
        )

    @staticmethod
    def construct(kind: str, X: IncidenceComplex | None, params: dict[str, Any] | None = None):
        p = dict(params or {})
        if kind not in KINDS:
            raise ValueError(f"unknown construction {kind!r}; expected one of {', '.join(KINDS)}")
        if kind == "A":
            n = int(p.get("n", 2))
            if X is None:
                return ConstructionsService.chain_A(n)
            antipode = p.get("antipode") or quotient.find_antipodal_involution(X)
            if antipode is None:
                raise InvolutionError("seed has no antipodal involution to chain along")
            return ConstructionsService.glue_chain(X, n, int(p.get("facet", 0)), antipode)
        if X is None:
            raise ValueError(f"construction {kind} needs an input complex")
        if isinstance(X, FlagSystem):
            raise ValueError(f"construction {kind} needs a regular complex, got a flag system")
        if kind == "B":
            return ConstructionsService.corona_B(X)
        if kind == "C":
            return ConstructionsService.subdivide_C(X, int(p.get("times", 1)))
        if kind == "fold":
            return ConstructionsService.antipodal_fold(X, p.get("sigma"))
        if "pairs" in p:
            pairing = FacetPairing(polyhedron=X, pairs=p["pairs"], antipode=p.get("antipode"))
        else:
            antipode = p.get("antipode") or quotient.find_antipodal_involution(X)
            if antipode is None:
                raise PairingError("polyhedron has no antipodal involution to match faces with")
            # twist in tenths of a turn for pentagons, raw rotation steps otherwise
            if "steps" in p:
                steps = int(p["steps"])
            else:
                steps = quotient.tenths_to_steps(int(p.get("twist", 1)))
            pairing = quotient.opposite_pairing(X, antipode, steps)
        return ConstructionsService.facet_pairing_quotient(pairing)
