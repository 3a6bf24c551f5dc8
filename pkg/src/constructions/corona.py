"""Corona growth around a simple closed surface F.

Each copy s in {0, 1} of the 3-corona carries the vertices
    F_b, b'_b (b a vertex of F), w_e (e an edge), d/g_(phi,e), h_(phi,b), z_b
and the two copies share K_(phi,b) on the floor-4 seam. Floors:
    1: a barrel over each face phi, capped by phi and its anti-face phi'
    2: a dodecahedron D_b for each vertex b
    3: a barrel over each anti-face phi', capped by phi''
    4: a dodecahedron E_e for each edge e, between the copies.
"""

import logging

from ..errors import ComplexError
from ..kernel import IncidenceComplex, KernelService

logger = logging.getLogger(__name__)


class _Registry:
    def __init__(self):
        self.index: dict[tuple, int] = {}
        self.polygons: list[list] = []

    def add(self, key: tuple, cycle: list) -> int:
        if key in self.index:
            return self.index[key]
        self.index[key] = len(self.polygons)
        self.polygons.append(cycle)
        return self.index[key]

    def __getitem__(self, key: tuple) -> int:
        return self.index[key]


def corona_b(F: IncidenceComplex) -> IncidenceComplex:
    report = KernelService.validate_simple_closed(F, 2)
    if not report.passed:
        raise ComplexError(f"corona needs a closed simple surface: {report.violations[0]}")
    gons = [len(bd) for bd in F.cells[2]]
    if min(gons) < 3:
        raise ComplexError(f"face of gonality {min(gons)} cannot carry a barrel")

    cycles = [F.face_vertices(phi) for phi in range(F.count(2))]
    ring_edges = [
        [F.edge_between(c[j], c[(j + 1) % len(c)]) for j in range(len(c))] for c in cycles
    ]
    edge_faces = [tuple(F.cofaces[1][e]) for e in range(F.count(1))]
    faces_at: list[list[int]] = [[] for _ in range(F.count(0))]
    for phi, c in enumerate(cycles):
        for b in c:
            faces_at[b].append(phi)

    reg = _Registry()
    cells: list[list[int]] = []
    labels: dict[int, str] = {}

    def cell(name: str, members: list[int]):
        labels[len(cells)] = name
        cells.append(members)

    def K(phi, b):
        return ("K", phi, b)

    for s in (0, 1):
        def Fv(b):
            return ("F", s, b)

        def bp(b):
            return ("b'", s, b)

        def w(e):
            return ("w", s, e)

        def d(phi, e):
            return ("d", s, phi, e)

        def g(phi, e):
            return ("g", s, phi, e)

        def h(phi, b):
            return ("h", s, phi, b)

        def z(b):
            return ("z", s, b)

        for phi, c in enumerate(cycles):
            es = ring_edges[phi]
            n = len(c)
            reg.add(("phi", s, phi), [Fv(b) for b in c])
            reg.add(("phi'", s, phi), [d(phi, e) for e in es])
            for j in range(n):
                b, e, e_prev = c[j], es[j], es[j - 1]
                reg.add(("Q", s, phi, b), [bp(b), w(e), d(phi, e), d(phi, e_prev), w(e_prev)])
                reg.add(("H", s, phi, b), [d(phi, e_prev), d(phi, e), g(phi, e), h(phi, b), g(phi, e_prev)])
                b_next = c[(j + 1) % n]
                reg.add(("L", s, phi, e), [K(phi, b), K(phi, b_next), h(phi, b_next), g(phi, e), h(phi, b)])
        for e, (u, v) in enumerate(F.cells[1]):
            phi1, phi2 = edge_faces[e]
            reg.add(("P", s, e), [Fv(u), Fv(v), bp(v), w(e), bp(u)])
            reg.add(("W", s, e), [d(phi1, e), w(e), d(phi2, e), g(phi2, e), g(phi1, e)])
            for b in (u, v):
                reg.add(("Z", s, b, e), [z(b), h(phi1, b), g(phi1, e), g(phi2, e), h(phi2, b)])

        # floor 0: the original surface, then floors 1-3
        cell(f"copy{s}:F", [reg[("phi", s, phi)] for phi in range(F.count(2))])
        for phi, c in enumerate(cycles):
            members = [reg[("phi", s, phi)], reg[("phi'", s, phi)]]
            members += [reg[("P", s, e)] for e in ring_edges[phi]]
            members += [reg[("Q", s, phi, b)] for b in c]
            cell(f"copy{s}:floor1:face{phi}", members)
        logger.debug(f"corona copy {s}: floor 1 has {F.count(2)} barrels")
        for b in range(F.count(0)):
            members = [reg[("Q", s, phi, b)] for phi in faces_at[b]]
            members += [reg[("H", s, phi, b)] for phi in faces_at[b]]
            members += [reg[("W", s, e)] for e in F.cofaces[0][b]]
            members += [reg[("Z", s, b, e)] for e in F.cofaces[0][b]]
            cell(f"copy{s}:floor2:vertex{b}", members)
        logger.debug(f"corona copy {s}: floor 2 has {F.count(0)} dodecahedra")
        for phi, c in enumerate(cycles):
            members = [reg[("phi'", s, phi)], reg.add(("phi''", phi), [K(phi, b) for b in c])]
            members += [reg[("H", s, phi, b)] for b in c]
            members += [reg[("L", s, phi, e)] for e in ring_edges[phi]]
            cell(f"copy{s}:floor3:face{phi}", members)
        logger.debug(f"corona copy {s}: floor 3 has {F.count(2)} barrels")

    for phi, c in enumerate(cycles):
        for b in c:
            reg.add(("M", phi, b), [("h", 0, phi, b), K(phi, b), ("h", 1, phi, b), ("z", 1, b), ("z", 0, b)])
    for e, (u, v) in enumerate(F.cells[1]):
        phi1, phi2 = edge_faces[e]
        members = []
        for s in (0, 1):
            members += [reg[("Z", s, u, e)], reg[("Z", s, v, e)], reg[("L", s, phi1, e)], reg[("L", s, phi2, e)]]
        members += [reg[("M", phi, b)] for phi in (phi1, phi2) for b in (u, v)]
        cell(f"floor4:edge{e}", members)
    logger.debug(f"corona floor 4 has {F.count(1)} dodecahedra")

    X = IncidenceComplex.from_polygons(reg.polygons, cells, labels={3: labels})
    check = KernelService.validate_simple_closed(X, 3)
    if not check.passed:
        raise ComplexError(f"corona output is not closed and simple: {check.violations[0]}")
    logger.info(f"corona_B: {KernelService.f_vector(X).as_tuple()}")
    return X
