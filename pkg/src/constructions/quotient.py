"""Quotients in the flag view: antipodal folds of surfaces and facet pairings of a polyhedron."""

import logging
from typing import Sequence

import numpy as np

from ..census.certificate import automorphisms_from
from ..config import AppConfig
from ..errors import InvolutionError, NonRegularComplexError, PairingError
from ..kernel import FlagSystem, IncidenceComplex, KernelService
from .constructions_model import FacetPairing, TwistRow

logger = logging.getLogger(__name__)

TWIST_TENTHS = (1, 3, 5, 7, 9)


def involution_problems(maps: Sequence[Sequence[int]]) -> list[str]:
    problems = []
    for k, row in enumerate(maps):
        if any(row[row[i]] != i for i in range(len(row))):
            problems.append(f"map on {k}-cells is not an involution")
        fixed = [i for i in range(len(row)) if row[i] == i]
        if fixed:
            problems.append(f"map fixes {len(fixed)} {k}-cells (first: {fixed[0]})")
    return problems


def _flag_image(F: FlagSystem, maps: Sequence[Sequence[int]]) -> np.ndarray:
    index = {tuple(ch): n for n, ch in enumerate(F.chains.tolist())}
    image = np.empty(F.size, dtype=np.int64)
    for n, ch in enumerate(F.chains.tolist()):
        image[n] = index[tuple(maps[k][c] for k, c in enumerate(ch))]
    return image


def antipodal_fold(X: IncidenceComplex, sigma: Sequence[int]) -> IncidenceComplex | FlagSystem:
    """Identify every cell with its image under a fixed-point-free involution.

    The quotient comes back as an incidence complex when it is regular and as a
    flag system otherwise.
    """
    maps = KernelService.induced_maps(X, sigma)
    problems = involution_problems(maps)
    if problems:
        raise InvolutionError(f"fold needs a fixed-point-free involution: {problems[0]}")
    F = KernelService.to_flags(X)
    image = _flag_image(F, maps)
    quotient = np.full(F.size, -1, dtype=np.int64)
    n = 0
    for x in range(F.size):
        if quotient[x] < 0:
            quotient[x] = quotient[image[x]] = n
            n += 1
    adj = np.empty((F.dim + 1, n), dtype=np.int64)
    for i in range(F.dim + 1):
        adj[i, quotient] = quotient[F.adj[i]]
    Q = FlagSystem(adj)
    problems = Q.validate(closed=True)
    if problems:
        raise InvolutionError(f"folded flag system is not closed: {problems[0]}")
    try:
        result = KernelService.from_flags(Q)
    except NonRegularComplexError as e:
        logger.info(f"antipodal_fold: quotient stays in the flag view ({e})")
        return Q
    logger.info(f"antipodal_fold: {KernelService.f_vector(result).as_tuple()}")
    return result


def find_antipodal_involution(X: IncidenceComplex) -> list[int] | None:
    """First fixed-point-free involutive automorphism met by the flag search, as a vertex map."""
    if X.count(0) > AppConfig.SEARCH_LIMIT:
        raise InvolutionError(
            f"involution search is limited to {AppConfig.SEARCH_LIMIT} vertices, complex has {X.count(0)}"
        )
    F = KernelService.to_flags(X)
    vertex_of = F.chains[:, 0]
    for image in automorphisms_from(F, 0):
        if image[0] == 0:
            continue
        vmap = [0] * X.count(0)
        for x in range(F.size):
            vmap[vertex_of[x]] = int(vertex_of[image[x]])
        if not involution_problems(KernelService.induced_maps(X, vmap)):
            logger.debug(f"antipodal involution found: {vmap}")
            return vmap
    return None


def _face_successor(P: IncidenceComplex, F: FlagSystem) -> dict[tuple[int, int], int]:
    """(face, vertex) -> next vertex around the face, in the orientation of the flag 2-colouring."""
    colour = np.full(F.size, -1, dtype=np.int64)
    colour[0] = 0
    stack = [0]
    while stack:
        x = stack.pop()
        for i in range(F.dim + 1):
            y = int(F.adj[i][x])
            if colour[y] < 0:
                colour[y] = 1 - colour[x]
                stack.append(y)
            elif colour[y] == colour[x]:
                raise PairingError("polyhedron is not orientable; face rotations are undefined")
    succ = {}
    for x in range(F.size):
        if colour[x] == 0:
            v, e, f = (int(c) for c in F.chains[x])
            a, b = P.cells[1][e]
            succ[(f, v)] = b if a == v else a
    return succ


def pairing_flags(pairing: FacetPairing) -> FlagSystem:
    """Rank-3 flag system of one polyhedral cell with its faces glued in pairs (unchecked)."""
    P = pairing.polyhedron
    sigma = pairing.antipode if pairing.antipode is not None else find_antipodal_involution(P)
    if sigma is None:
        raise PairingError("polyhedron has no antipodal involution to match faces with")
    maps = KernelService.induced_maps(P, sigma)
    F = KernelService.to_flags(P)
    succ = _face_successor(P, F)
    index = {tuple(ch): n for n, ch in enumerate(F.chains.tolist())}

    # vertex maps face -> partner face
    glue: dict[int, tuple[int, dict[int, int]]] = {}
    for f, g, twist in pairing.pairs:
        if maps[2][f] != g:
            raise PairingError(f"faces {f} and {g} are not antipodal")
        steps = twist % len(P.cells[2][g])
        phi = {}
        for v in P.face_vertices(f):
            w = maps[0][v]
            for _ in range(steps):
                w = succ[(g, w)]
            phi[v] = w
        glue[f] = (g, phi)
        glue[g] = (f, {w: v for v, w in phi.items()})

    adj3 = np.empty(F.size, dtype=np.int64)
    for x, (v, e, f) in enumerate(F.chains.tolist()):
        g, phi = glue[f]
        a, b = P.cells[1][e]
        u = b if a == v else a
        adj3[x] = index[(phi[v], P.edge_between(phi[v], phi[u]), g)]
    return FlagSystem(np.vstack([F.adj, adj3[None, :]]))


def facet_pairing_quotient(pairing: FacetPairing) -> FlagSystem:
    Q = pairing_flags(pairing)
    problems = Q.validate(closed=True)
    if problems:
        raise PairingError(f"flag identification is inconsistent: {problems[0]}")
    links = KernelService.vertex_link_euler(Q)
    bad = [n for n, chi in enumerate(links) if chi != 2]
    if bad:
        raise PairingError(f"quotient is not a manifold: link of vertex {bad[0]} has Euler characteristic {links[bad[0]]}")
    logger.info(f"facet_pairing_quotient: {KernelService.f_vector(Q).as_tuple()}")
    return Q


def opposite_pairing(P: IncidenceComplex, antipode: Sequence[int], steps: int) -> FacetPairing:
    maps = KernelService.induced_maps(P, antipode)
    pairs = [(f, maps[2][f], steps) for f in range(P.count(2)) if f < maps[2][f]]
    return FacetPairing(polyhedron=P, pairs=pairs, antipode=list(antipode))


def tenths_to_steps(tenths: int) -> int:
    """Rotation steps after the antipodal matching of a dodecahedron for an odd tenth-turn twist."""
    if tenths not in TWIST_TENTHS:
        raise PairingError(f"twist must be an odd number of tenths in {TWIST_TENTHS}, got {tenths}")
    return ((tenths - 5) // 2) % 5


def twist_table(P: IncidenceComplex, antipode: Sequence[int]) -> list[TwistRow]:
    rows = []
    for tenths in TWIST_TENTHS:
        steps = tenths_to_steps(tenths)
        Q = pairing_flags(opposite_pairing(P, antipode, steps))
        manifold = not Q.validate(closed=True) and all(chi == 2 for chi in KernelService.vertex_link_euler(Q))
        rows.append(TwistRow(
            tenths=tenths,
            steps=steps,
            fvector=KernelService.f_vector(Q).counts,
            euler_characteristic=KernelService.euler_characteristic(Q),
            manifold=manifold,
        ))
        logger.debug(f"twist {tenths}/10: {rows[-1].fvector}")
    return rows


def parse_pairing(text: str) -> list[tuple[int, int, int]]:
    """Read `pair <faceA> <faceB> <twist>` lines; blank lines and # comments are skipped."""
    pairs = []
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] != "pair" or len(parts) != 4:
            raise PairingError(f"line {n}: expected 'pair <faceA> <faceB> <twist>', got {raw!r}")
        try:
            pairs.append((int(parts[1]), int(parts[2]), int(parts[3])))
        except ValueError:
            raise PairingError(f"line {n}: face ids and twist must be integers") from None
    if not pairs:
        raise PairingError("pairing file lists no pairs")
    return pairs
