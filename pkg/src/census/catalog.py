"""Named polyhedra, keyed by surface certificate."""

import logging
from functools import lru_cache
from typing import Callable

from ..builders.builders_service import BuildersService
from ..kernel import IncidenceComplex

logger = logging.getLogger(__name__)

S = BuildersService

CATALOG: dict[str, Callable[[], IncidenceComplex]] = {
    "tetrahedron": S.build_tetrahedron,
    "prism_3": lambda: S.build_prism(3),
    "cube": S.build_cube,
    "prism_5": lambda: S.build_prism(5),
    "prism_6": lambda: S.build_prism(6),
    "B_3": lambda: S.build_barrel(3),
    "B_4": lambda: S.build_barrel(4),
    "Do": S.build_dodecahedron,
    "B_6": lambda: S.build_barrel(6),
    "B_7": lambda: S.build_barrel(7),
    "B_8": lambda: S.build_barrel(8),
    "F_26": S.build_F26,
    "F_28(T_d)": S.build_F28_Td,
    "F_30(D_5h)": lambda: S.build_layered_dodecahedron(1),
    "F_32(D_3d)": S.build_F32_D3d,
    "F_36(D_6h)": lambda: S.build_layered_barrel(6, 1),
    "F_40(D_5d)": lambda: S.build_layered_dodecahedron(2),
    "F_50(D_5h)": lambda: S.build_layered_dodecahedron(3),
    "F_60(D_5d)": lambda: S.build_layered_dodecahedron(4),
}


@lru_cache(maxsize=1)
def catalog_index() -> dict[str, str]:
    """certificate digest -> name"""
    from .census_service import CensusService

    index: dict[str, str] = {}
    for name, build in CATALOG.items():
        digest = CensusService.certificate_surface(build()).digest
        if digest in index:
            raise ValueError(f"catalog entries {index[digest]} and {name} are isomorphic")
        index[digest] = name
    logger.debug(f"catalog index built with {len(index)} entries")
    return index


def lookup(digest: str) -> str:
    return catalog_index().get(digest, "unknown")
