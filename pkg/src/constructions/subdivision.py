"""Subdivide the simplicial dual of a simple 3-manifold and dualize back.

On F* = dual(F) every edge a-b gets two inner points e(a,b) near a and e(b,a)
near b. A tetrahedron T then splits into four corner tetrahedra, four central
tetrahedra coned from a new point t(T), and the halves of four hexagonal
bipyramids; each bipyramid over a triangle shared by T1 and T2 is cut into six
tetrahedra around the axis t(T1)-t(T2).
"""

import logging

from ..errors import ComplexError
from ..kernel import IncidenceComplex, KernelService

logger = logging.getLogger(__name__)


def simplicial_star(F: IncidenceComplex) -> IncidenceComplex:
    if F.dim != 3:
        raise ComplexError(f"subdivision needs a rank-3 complex, got rank {F.dim}")
    star = KernelService.dual(F)
    for T in range(star.count(3)):
        if len(star.cells[3][T]) != 4 or len(star.cell_vertices(3, T)) != 4:
            raise ComplexError(f"dual cell {T} is not a tetrahedron; vertex {T} of the input is not simple")
    return star


def subdivide_star(star: IncidenceComplex) -> tuple[list[tuple], list[tuple]]:
    """Tetrahedra of the subdivided star as key tuples, plus the key order used for point ids."""
    tets: list[tuple] = []
    for T in range(star.count(3)):
        verts = sorted(star.cell_vertices(3, T))
        for a in verts:
            rim = tuple(("e", a, b) for b in verts if b != a)
            tets.append((("v", a),) + rim)
            tets.append((("t", T),) + rim)
    for tri in range(star.count(2)):
        T1, T2 = star.cofaces[2][tri]
        x, y, z = sorted(star.cell_vertices(2, tri))
        hexagon = [("e", x, y), ("e", y, x), ("e", y, z), ("e", z, y), ("e", z, x), ("e", x, z)]
        for k in range(6):
            tets.append((("t", T1), ("t", T2), hexagon[k], hexagon[(k + 1) % 6]))
    order = [("v", a) for a in range(star.count(0))]
    for u, w in star.cells[1]:
        order += [("e", u, w), ("e", w, u)]
    order += [("t", T) for T in range(star.count(3))]
    logger.debug(f"subdivided star: {len(tets)} tetrahedra on {len(order)} points")
    return tets, order


def subdivide_c(F: IncidenceComplex) -> IncidenceComplex:
    report = KernelService.validate_simple_closed(F, 3)
    if not report.passed:
        raise ComplexError(f"subdivision needs a closed simple complex: {report.violations[0]}")
    star = simplicial_star(F)
    tets, order = subdivide_star(star)
    X = IncidenceComplex.from_simplices(tets, vertex_order=order)
    result = KernelService.dual(X)

    # 3-cells of the result are the points of the subdivision, numbered in key order;
    # an edge of the star is the 2-face of F with the same id
    labels: dict[int, str] = {}
    for n, key in enumerate(order):
        if key[0] == "v":
            labels[n] = f"cell{key[1]}"
        elif key[0] == "e":
            labels[n] = f"face{star.edge_between(key[1], key[2])}:side{key[1]}"
        else:
            labels[n] = f"vertex{key[1]}"
    result = result.with_labels({3: labels})

    check = KernelService.validate_simple_closed(result, 3)
    if not check.passed:
        raise ComplexError(f"subdivision output is not closed and simple: {check.violations[0]}")
    logger.info(f"subdivide_C: {KernelService.f_vector(result).as_tuple()}")
    return result
