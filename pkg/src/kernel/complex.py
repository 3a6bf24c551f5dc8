"""Ranked cell complexes in two views: incidence (boundary lists) and flags (adjacency involutions)."""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..errors import ComplexError

logger = logging.getLogger(__name__)

Boundary = tuple[int, ...]


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically smallest rotation or reflection of a cyclic sequence."""
    items = list(seq)
    best: tuple[int, ...] | None = None
    for s in (items, items[::-1]):
        for r in range(len(s)):
            cand = tuple(s[r:] + s[:r])
            if best is None or cand < best:
                best = cand
    return best or ()


def rotate_to(cycle: Sequence[Hashable], u: Hashable, w: Hashable) -> list:
    """Return the cycle read from u with w second; raises if u and w are not adjacent."""
    items = list(cycle)
    n = len(items)
    i = items.index(u)
    if items[(i + 1) % n] == w:
        return items[i:] + items[:i]
    if items[i - 1] == w:
        rev = items[::-1]
        j = rev.index(u)
        return rev[j:] + rev[:j]
    raise ComplexError(f"{u!r} and {w!r} are not consecutive in {items!r}")


@dataclass(frozen=True, eq=False)
class IncidenceComplex:
    """Regular complex stored as boundary lists.

    cells[k][i] is the boundary of k-cell i: () for vertices, a sorted pair for
    edges, the canonical cyclic edge sequence for 2-cells, sorted face ids for
    3-cells.
    """

    dim: int
    cells: tuple[tuple[Boundary, ...], ...]
    labels: Mapping[int, Mapping[int, str]] = field(default_factory=dict)

    def count(self, k: int) -> int:
        return len(self.cells[k])

    def boundary(self, k: int, i: int) -> Boundary:
        return self.cells[k][i]

    def label(self, k: int, i: int) -> str | None:
        return self.labels.get(k, {}).get(i)

    def with_labels(self, labels: Mapping[int, Mapping[int, str]]) -> "IncidenceComplex":
        return IncidenceComplex(self.dim, self.cells, {k: dict(v) for k, v in labels.items()})

    @cached_property
    def cofaces(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """cofaces[k][i]: sorted ids of the (k+1)-cells whose boundary contains k-cell i."""
        out: list[tuple[tuple[int, ...], ...]] = []
        for k in range(self.dim):
            acc: list[list[int]] = [[] for _ in range(self.count(k))]
            for j, bd in enumerate(self.cells[k + 1]):
                for i in set(bd):
                    acc[i].append(j)
            out.append(tuple(tuple(sorted(a)) for a in acc))
        out.append(tuple(() for _ in range(self.count(self.dim))))
        return tuple(out)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {bd: e for e, bd in enumerate(self.cells[1])}

    def edge_between(self, u: int, v: int) -> int:
        try:
            return self.edge_index[(u, v) if u < v else (v, u)]
        except KeyError:
            raise ComplexError(f"no edge between vertices {u} and {v}") from None

    def face_vertices(self, p: int) -> tuple[int, ...]:
        """Vertex cycle of 2-cell p, aligned with its edge cycle."""
        edges = [self.cells[1][e] for e in self.cells[2][p]]
        out = []
        for j in range(len(edges)):
            shared = set(edges[j - 1]) & set(edges[j])
            if len(shared) != 1:
                raise ComplexError(f"2-cell {p}: edges {edges[j - 1]} and {edges[j]} do not form a path")
            out.append(shared.pop())
        return tuple(out)

    def cell_vertices(self, k: int, i: int) -> frozenset[int]:
        if k == 0:
            return frozenset((i,))
        if k == 1:
            return frozenset(self.cells[1][i])
        if k == 2:
            return frozenset(self.face_vertices(i))
        return frozenset().union(*(self.cell_vertices(k - 1, j) for j in self.cells[k][i]))

    def polygons(self) -> list[tuple[int, ...]]:
        return [self.face_vertices(p) for p in range(self.count(2))]

    def relabel(self, perms: Sequence[Sequence[int]]) -> "IncidenceComplex":
        """Apply a permutation per rank; perms[k][old] = new."""
        cells = []
        for k in range(self.dim + 1):
            perm = perms[k]
            new: list[Boundary] = [()] * self.count(k)
            for i, bd in enumerate(self.cells[k]):
                mapped = [perms[k - 1][b] for b in bd] if k else []
                if k == 1:
                    new[perm[i]] = tuple(sorted(mapped))
                elif k == 2:
                    new[perm[i]] = canonical_cycle(mapped)
                elif k >= 3:
                    new[perm[i]] = tuple(sorted(mapped))
            cells.append(tuple(new))
        labels = {k: {perms[k][i]: s for i, s in lab.items()} for k, lab in self.labels.items()}
        return IncidenceComplex(self.dim, tuple(cells), labels)

    @classmethod
    def from_polygons(
        cls,
        polygons: Sequence[Sequence[Hashable]],
        cells: Sequence[Iterable[int]] | None = None,
        labels: Mapping[int, Mapping[int, str]] | None = None,
        vertex_order: Sequence[Hashable] | None = None,
    ) -> "IncidenceComplex":
        """Build from vertex cycles (and, for rank 3, cells as lists of polygon indices).

        Vertex ids follow vertex_order when given, otherwise first appearance.
        """
        vid: dict[Hashable, int] = {}
        if vertex_order is not None:
            for key in vertex_order:
                vid.setdefault(key, len(vid))
        edges: dict[tuple[int, int], int] = {}
        faces: list[Boundary] = []
        for n, poly in enumerate(polygons):
            if len(poly) < 3 or len(set(poly)) != len(poly):
                raise ComplexError(f"polygon {n} is not a simple cycle of length >= 3: {list(poly)!r}")
            ids = []
            for key in poly:
                if key not in vid:
                    if vertex_order is not None:
                        raise ComplexError(f"polygon {n} uses vertex {key!r} missing from vertex_order")
                    vid[key] = len(vid)
                ids.append(vid[key])
            ring = []
            for j in range(len(ids)):
                a, b = ids[j], ids[(j + 1) % len(ids)]
                pair = (a, b) if a < b else (b, a)
                if pair not in edges:
                    edges[pair] = len(edges)
                ring.append(edges[pair])
            faces.append(canonical_cycle(ring))
        edge_cells = [None] * len(edges)
        for pair, e in edges.items():
            edge_cells[e] = pair
        ranks: list[tuple[Boundary, ...]] = [
            tuple(() for _ in range(len(vid))),
            tuple(edge_cells),
            tuple(faces),
        ]
        dim = 2
        if cells is not None:
            dim = 3
            ranks.append(tuple(tuple(sorted(set(c))) for c in cells))
        return cls(dim, tuple(ranks), {k: dict(v) for k, v in (labels or {}).items()})

    @classmethod
    def from_simplices(
        cls,
        simplices: Sequence[Sequence[Hashable]],
        vertex_order: Sequence[Hashable] | None = None,
    ) -> "IncidenceComplex":
        """Build a simplicial complex of rank len(simplex)-1 from its top simplices."""
        if not simplices:
            raise ComplexError("no simplices given")
        dim = len(simplices[0]) - 1
        vid: dict[Hashable, int] = {}
        for key in vertex_order or ():
            vid.setdefault(key, len(vid))
        tops = []
        for s in simplices:
            if len(s) != dim + 1 or len(set(s)) != dim + 1:
                raise ComplexError(f"degenerate simplex {list(s)!r}")
            for key in s:
                vid.setdefault(key, len(vid))
            tops.append(tuple(sorted(vid[key] for key in s)))
        index: list[dict[tuple[int, ...], int]] = [{(v,): v for v in range(len(vid))}]
        for k in range(1, dim + 1):
            seen: dict[tuple[int, ...], int] = {}
            for top in tops:
                for face in combinations(top, k + 1):
                    seen.setdefault(face, len(seen))
            index.append(seen)
        ranks: list[list[Boundary]] = [[() for _ in range(len(vid))]]
        for k in range(1, dim + 1):
            row: list[Boundary] = [()] * len(index[k])
            for face, i in index[k].items():
                if k == 1:
                    row[i] = face
                elif k == 2:
                    a, b, c = face
                    row[i] = canonical_cycle([index[1][(a, b)], index[1][(b, c)], index[1][(a, c)]])
                else:
                    row[i] = tuple(sorted(index[k - 1][sub] for sub in combinations(face, k)))
            ranks.append(row)
        return cls(dim, tuple(tuple(r) for r in ranks))


@dataclass(frozen=True, eq=False)
class FlagSystem:
    """Flags with one adjacency involution per rank; adj[i][x] is the i-adjacent flag of x.

    A fixed point adj[i][x] == x marks a boundary flag of an open complex. chains, when
    present, records the (v, e, p[, c]) cell ids each flag came from.
    """

    adj: np.ndarray
    chains: np.ndarray | None = None
    _orbits: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        adj = np.asarray(self.adj, dtype=np.int64)
        if adj.ndim != 2:
            raise ComplexError("flag adjacency must be a (rank+1, flags) array")
        adj.setflags(write=False)
        object.__setattr__(self, "adj", adj)

    @property
    def dim(self) -> int:
        return self.adj.shape[0] - 1

    @property
    def size(self) -> int:
        return self.adj.shape[1]

    def orbit_labels(self, generators: Sequence[int]) -> tuple[int, np.ndarray]:
        """Orbits of the subgroup generated by the given involutions, numbered by first flag."""
        key = tuple(sorted(generators))
        if key not in self._orbits:
            n = self.size
            if key:
                rows = np.concatenate([np.arange(n)] * len(key))
                cols = np.concatenate([self.adj[i] for i in key])
            else:
                rows = cols = np.arange(n)
            graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
            _, raw = connected_components(graph, directed=False)
            _, first, inverse = np.unique(raw, return_index=True, return_inverse=True)
            order = np.argsort(np.argsort(first))
            labels = order[inverse].astype(np.int64)
            self._orbits[key] = (len(first), labels)
        return self._orbits[key]

    def face_labels(self, k: int) -> tuple[int, np.ndarray]:
        """k-cells as orbits of <adj[i] : i != k>."""
        return self.orbit_labels([i for i in range(self.dim + 1) if i != k])

    def components(self) -> tuple[int, np.ndarray]:
        return self.orbit_labels(range(self.dim + 1))

    def validate(self, closed: bool = True) -> list[str]:
        problems = []
        idx = np.arange(self.size)
        for i in range(self.dim + 1):
            a = self.adj[i]
            if a.min(initial=0) < 0 or a.max(initial=0) >= self.size:
                problems.append(f"adj[{i}] points outside the flag set")
                continue
            if not np.array_equal(a[a], idx):
                problems.append(f"adj[{i}] is not an involution")
            if closed and np.any(a == idx):
                problems.append(f"adj[{i}] has {int(np.sum(a == idx))} fixed points")
        if problems:
            return problems
        for i in range(self.dim + 1):
            for j in range(i + 2, self.dim + 1):
                ij = self.adj[i][self.adj[j]]
                ji = self.adj[j][self.adj[i]]
                if not np.array_equal(ij, ji):
                    problems.append(f"adj[{i}] and adj[{j}] do not commute")
        return problems
