import logging
from collections import Counter
from typing import Mapping, Sequence

import networkx as nx
import numpy as np

from ..errors import ComplexError, InvolutionError, NonRegularComplexError, NotClosedError
from .complex import FlagSystem, IncidenceComplex, canonical_cycle
from .kernel_model import FVector, Orientability, OrientabilityReport, ValidationReport

logger = logging.getLogger(__name__)

Complex = IncidenceComplex | FlagSystem

_MAX_VIOLATIONS = 50


class KernelService:
    """复形核心操作: f-向量, 校验, 对偶, 旗视图转换"""

    @staticmethod
    def f_vector(X: Complex) -> FVector:
        if isinstance(X, FlagSystem):
            counts = [X.face_labels(k)[0] for k in range(X.dim + 1)]
            gons: list[int] = []
            if X.dim >= 2:
                _, lab2 = X.face_labels(2)
                _, reps = np.unique(lab2, return_index=True)
                _, lab01 = X.orbit_labels([0, 1])
                sizes = np.bincount(lab01)
                gons = (sizes[lab01[reps]] // 2).tolist()
        else:
            counts = [X.count(k) for k in range(X.dim + 1)]
            gons = [len(bd) for bd in X.cells[2]] if X.dim >= 2 else []
        tally = Counter(gons)
        return FVector(
            counts=counts,
            p5=tally[5],
            p6=tally[6],
            p_other=sum(n for g, n in tally.items() if g not in (5, 6)),
        )

    @staticmethod
    def gonality_profile(X: Complex) -> dict[int, int]:
        if isinstance(X, FlagSystem):
            _, lab2 = X.face_labels(2)
            _, reps = np.unique(lab2, return_index=True)
            _, lab01 = X.orbit_labels([0, 1])
            gons = (np.bincount(lab01)[lab01[reps]] // 2).tolist()
        else:
            gons = [len(bd) for bd in X.cells[2]]
        return dict(sorted(Counter(gons).items()))

    @staticmethod
    def euler_characteristic(X: Complex) -> int:
        counts = KernelService.f_vector(X).counts
        return sum((-1) ** k * n for k, n in enumerate(counts))

    @staticmethod
    def validate_simple_closed(X: Complex, dim: int | None = None, open_ok: bool = False) -> ValidationReport:
        """Incidence-count conditions of a simple closed manifold complex; open_ok relaxes them to upper bounds."""
        dim = X.dim if dim is None else dim
        if X.dim != dim:
            return ValidationReport(passed=False, violations=[f"complex has rank {X.dim}, expected {dim}"])
        if dim not in (2, 3):
            return ValidationReport(passed=False, violations=[f"unsupported rank {dim}"])
        if isinstance(X, FlagSystem):
            violations = _validate_flags(X, open_ok)
        else:
            violations = _validate_incidence(X, open_ok)
        if len(violations) > _MAX_VIOLATIONS:
            extra = len(violations) - _MAX_VIOLATIONS
            violations = violations[:_MAX_VIOLATIONS] + [f"... and {extra} more"]
        if violations:
            logger.debug(f"validation failed with {len(violations)} violations, first: {violations[0]}")
        return ValidationReport(passed=not violations, violations=violations)

    @staticmethod
    def is_fullerene(X: Complex, dim: int | None = None) -> bool:
        if not KernelService.validate_simple_closed(X, dim).passed:
            return False
        return KernelService.f_vector(X).p_other == 0

    @staticmethod
    def dual(X: IncidenceComplex) -> IncidenceComplex:
        d = X.dim
        for c, tops in enumerate(X.cofaces[d - 1]):
            if len(tops) != 2:
                raise NotClosedError(f"{d - 1}-cell {c} lies in {len(tops)} {d}-cells, expected 2")
        ranks: list[tuple] = []
        for k in range(d + 1):
            src = d - k
            if k == 0:
                row = [() for _ in range(X.count(d))]
            elif k == 1:
                row = [tuple(X.cofaces[d - 1][c]) for c in range(X.count(d - 1))]
            elif k == 2:
                row = [canonical_cycle(_cycle_around(X, src, c)) for c in range(X.count(src))]
            else:
                row = [tuple(X.cofaces[src][c]) for c in range(X.count(src))]
            ranks.append(tuple(row))
        return IncidenceComplex(d, tuple(ranks))

    @staticmethod
    def to_flags(X: IncidenceComplex) -> FlagSystem:
        """Flags are full chains (c_0, ..., c_dim); open complexes get fixed points in adj[dim]."""
        d = X.dim
        chains: list[tuple[int, ...]] = []

        def descend(prefix: list[int], k: int):
            if k < 0:
                chains.append(tuple(reversed(prefix)))
                return
            parent = prefix[-1]
            for c in X.cells[k + 1][parent]:
                prefix.append(c)
                descend(prefix, k - 1)
                prefix.pop()

        for top in range(X.count(d)):
            descend([top], d - 1)
        index = {ch: n for n, ch in enumerate(chains)}
        bsets = [None] + [[set(bd) for bd in X.cells[k]] for k in range(1, d + 1)]
        adj = np.empty((d + 1, len(chains)), dtype=np.int64)
        for n, ch in enumerate(chains):
            for i in range(d + 1):
                if i == 0:
                    cand = X.cells[1][ch[1]]
                elif i < d:
                    cand = [c for c in X.cofaces[i - 1][ch[i - 1]] if c in bsets[i + 1][ch[i + 1]]]
                else:
                    cand = X.cofaces[d - 1][ch[d - 1]]
                others = [c for c in cand if c != ch[i]]
                if not others:
                    if i != d:
                        raise ComplexError(f"flag {ch} has no {i}-adjacent flag")
                    adj[i, n] = n
                    continue
                if len(others) > 1:
                    raise ComplexError(f"flag {ch} has {len(others)} {i}-adjacent flags (not a manifold)")
                nxt = list(ch)
                nxt[i] = others[0]
                adj[i, n] = index[tuple(nxt)]
        logger.debug(f"to_flags: rank {d}, {len(chains)} flags")
        return FlagSystem(adj, np.asarray(chains, dtype=np.int64))

    @staticmethod
    def from_flags(F: FlagSystem) -> IncidenceComplex:
        d = F.dim
        labs = [F.face_labels(k) for k in range(d + 1)]
        L = np.stack([lab for _, lab in labs], axis=1)
        if len(np.unique(L, axis=0)) != F.size:
            raise NonRegularComplexError(
                "non-regular complex: distinct flags share a chain of cells; stay in the flag view"
            )
        adj0, adj1 = F.adj[0], F.adj[1]
        if np.any(adj0 == np.arange(F.size)) or np.any(L[:, 0] == L[adj0, 0]):
            raise NonRegularComplexError("non-regular complex: an edge does not have 2 distinct vertices")
        ranks: list[list] = [[() for _ in range(labs[0][0])]]
        edges: list[tuple[int, int]] = [()] * labs[1][0]
        _, reps = np.unique(L[:, 1], return_index=True)
        for x in reps:
            u, w = int(L[x, 0]), int(L[adj0[x], 0])
            edges[int(L[x, 1])] = (u, w) if u < w else (w, u)
        if len(set(edges)) != len(edges):
            raise NonRegularComplexError("non-regular complex: parallel edges")
        ranks.append(edges)
        if d >= 2:
            faces: list[tuple[int, ...]] = [()] * labs[2][0]
            _, reps = np.unique(L[:, 2], return_index=True)
            for x in reps:
                seq, y = [], int(x)
                while True:
                    seq.append(int(L[y, 1]))
                    y = int(adj1[adj0[y]])
                    if y == x or len(seq) > F.size:
                        break
                if len(set(seq)) != len(seq):
                    raise NonRegularComplexError(f"non-regular complex: 2-cell {int(L[x, 2])} repeats an edge")
                faces[int(L[x, 2])] = canonical_cycle(seq)
            ranks.append(faces)
        if d >= 3:
            members: list[set[int]] = [set() for _ in range(labs[3][0])]
            for c, p in np.unique(L[:, [3, 2]], axis=0):
                members[int(c)].add(int(p))
            ranks.append([tuple(sorted(m)) for m in members])
        return IncidenceComplex(d, tuple(tuple(r) for r in ranks))

    @staticmethod
    def orientability(X: Complex) -> OrientabilityReport:
        """Flag graph 2-coloring per connected component."""
        F = X if isinstance(X, FlagSystem) else KernelService.to_flags(X)
        graph = nx.Graph()
        graph.add_nodes_from(range(F.size))
        for i in range(F.dim + 1):
            a = F.adj[i]
            graph.add_edges_from((x, int(a[x])) for x in range(F.size) if a[x] != x)
        comps = sorted(nx.connected_components(graph), key=min)
        return OrientabilityReport(
            components=[
                Orientability.ORIENTABLE if nx.is_bipartite(graph.subgraph(c)) else Orientability.NONORIENTABLE
                for c in comps
            ]
        )

    @staticmethod
    def is_connected(X: Complex) -> bool:
        F = X if isinstance(X, FlagSystem) else KernelService.to_flags(X)
        return F.components()[0] == 1

    @staticmethod
    def is_polyhedral(X: IncidenceComplex) -> bool:
        """Two faces of a rank-2 complex meet in nothing, one vertex, or one edge."""
        if X.dim != 2:
            raise ComplexError(f"is_polyhedral needs rank 2, got {X.dim}")
        verts = [set(X.face_vertices(p)) for p in range(X.count(2))]
        edge_sets = [set(bd) for bd in X.cells[2]]
        at_vertex: dict[int, list[int]] = {}
        for p, vs in enumerate(verts):
            for v in vs:
                at_vertex.setdefault(v, []).append(p)
        for faces in at_vertex.values():
            for i, p in enumerate(faces):
                for q in faces[i + 1:]:
                    shared_v = verts[p] & verts[q]
                    shared_e = edge_sets[p] & edge_sets[q]
                    if len(shared_v) == 1 and not shared_e:
                        continue
                    if len(shared_e) == 1 and len(shared_v) == 2:
                        continue
                    return False
        return True

    @staticmethod
    def vertex_link_euler(F: FlagSystem) -> list[int]:
        """Euler characteristic of every vertex link of a rank-3 flag system."""
        if F.dim != 3:
            raise ComplexError(f"vertex links need rank 3, got {F.dim}")
        nv, vl = F.orbit_labels([1, 2, 3])
        chi = np.zeros(nv, dtype=np.int64)
        for gens, sign in (([2, 3], 1), ([1, 3], -1), ([1, 2], 1)):
            _, ol = F.orbit_labels(gens)
            _, first = np.unique(ol, return_index=True)
            chi += sign * np.bincount(vl[first], minlength=nv)
        return chi.tolist()

    @staticmethod
    def induced_maps(X: IncidenceComplex, vertex_map: Mapping[int, int] | Sequence[int]) -> list[list[int]]:
        """Extend a vertex permutation to every rank; raises InvolutionError if it is not an automorphism."""
        vmap = [vertex_map[v] for v in range(X.count(0))]
        if sorted(vmap) != list(range(X.count(0))):
            raise InvolutionError("vertex map is not a permutation")
        maps = [vmap]
        for k in range(1, X.dim + 1):
            index: dict[frozenset[int], int] = {}
            for i in range(X.count(k)):
                key = X.cell_vertices(k, i)
                if key in index:
                    raise ComplexError(f"{k}-cells {index[key]} and {i} have the same vertex set")
                index[key] = i
            row = []
            for i in range(X.count(k)):
                image = frozenset(vmap[v] for v in X.cell_vertices(k, i))
                if image not in index:
                    raise InvolutionError(f"vertex map is not an automorphism: {k}-cell {i} has no image")
                row.append(index[image])
            maps.append(row)
        return maps


def _cycle_around(X: IncidenceComplex, r: int, c: int) -> list[int]:
    """(r+1)-cells containing r-cell c in cyclic order, walking through the top cells of rank r+2."""
    around = set(X.cofaces[r][c])
    if not around:
        raise NotClosedError(f"{r}-cell {c} has no cofaces")
    start = min(around)
    seq = [start]
    cur, top = start, X.cofaces[r + 1][start][0]
    while True:
        nxt = [g for g in X.cells[r + 2][top] if g in around and g != cur]
        if len(nxt) != 1:
            raise ComplexError(f"{r + 2}-cell {top} does not close a cycle around {r}-cell {c}")
        cur = nxt[0]
        if cur == start:
            break
        seq.append(cur)
        if len(seq) > len(around):
            raise ComplexError(f"cycle around {r}-cell {c} does not close")
        top = next(t for t in X.cofaces[r + 1][cur] if t != top)
    if len(seq) != len(around):
        raise ComplexError(f"{r}-cell {c}: its cofaces form more than one cycle (not a manifold)")
    return seq


def _validate_incidence(X: IncidenceComplex, open_ok: bool) -> list[str]:
    out: list[str] = []
    for k in range(1, X.dim + 1):
        for i, bd in enumerate(X.cells[k]):
            if any(b < 0 or b >= X.count(k - 1) for b in bd):
                out.append(f"{k}-cell {i} references a missing {k - 1}-cell")
    if out:
        return out
    for e, (u, w) in enumerate(X.cells[1]):
        if u == w:
            out.append(f"edge {e} is a loop at vertex {u}")
    for p in range(X.count(2)):
        if len(X.cells[2][p]) < 3:
            out.append(f"2-cell {p} has fewer than 3 edges")
            continue
        try:
            vs = X.face_vertices(p)
        except ComplexError as e:
            out.append(str(e))
            continue
        if len(set(vs)) != len(vs):
            out.append(f"2-cell {p} is not a simple cycle")
    if out:
        return out

    def need(what: str, i: int, have: int, want: int):
        if have != want and not (open_ok and have < want):
            out.append(f"{what} {i} lies in {have}, expected {want}")

    cof = X.cofaces
    if X.dim == 3:
        for v in range(X.count(0)):
            need("vertex", v, len(cof[0][v]), 4)
        for e in range(X.count(1)):
            need("edge", e, len(cof[1][e]), 3)
        for p in range(X.count(2)):
            need("2-face", p, len(cof[2][p]), 2)
    else:
        faces_at = Counter(v for p in range(X.count(2)) for v in X.face_vertices(p))
        for v in range(X.count(0)):
            need("vertex (edges)", v, len(cof[0][v]), 3)
            need("vertex (faces)", v, faces_at[v], 3)
        for e in range(X.count(1)):
            need("edge", e, len(cof[1][e]), 2)
    return out


def _validate_flags(F: FlagSystem, open_ok: bool) -> list[str]:
    out = F.validate(closed=not open_ok)
    if out:
        return out
    d = F.dim
    factorial = 6 if d == 2 else 24
    _, vl = F.orbit_labels(range(1, d + 1))
    for v, size in enumerate(np.bincount(vl)):
        if size != factorial:
            out.append(f"vertex {v}: {size} flags, expected {factorial}")
    edge_gens = [0] + list(range(2, d + 1))
    _, el = F.orbit_labels(edge_gens)
    for e, size in enumerate(np.bincount(el)):
        if size != 2 * factorial // (d + 1):
            out.append(f"edge {e}: {size} flags, expected {2 * factorial // (d + 1)}")
    if d == 3:
        _, fl = F.face_labels(2)
        _, l01 = F.orbit_labels([0, 1])
        side = np.bincount(l01)[l01]
        for p, size in enumerate(np.bincount(fl)):
            rep = int(np.argmax(fl == p))
            if size != 2 * side[rep]:
                out.append(f"2-face {p} lies in {size // max(int(side[rep]), 1)} cell sides, expected 2")
    return out
