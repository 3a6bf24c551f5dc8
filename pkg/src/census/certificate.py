"""Canonical codes for connected flag systems.

A root flag and the fixed order adj[0], adj[1], ... determine a breadth-first
labelling of the whole (connected) flag graph. The code of a root is the list of
neighbour labels in that order; the canonical code is the minimum over roots.
Roots are drawn from the smallest class of a relabelling-invariant flag colour,
and roots in the same orbit as an already processed root (orbits of the
automorphisms found so far) are skipped.
"""

import hashlib
import logging
from collections import Counter

import numpy as np

from ..kernel import FlagSystem

logger = logging.getLogger(__name__)

SCHEME = "cxflag-1"


def flag_invariants(F: FlagSystem) -> list[tuple[int, ...]]:
    """Per-flag colour: sizes of the rank-2 residues through the flag."""
    gens = [(i, i + 1) for i in range(F.dim)]
    cols = []
    for g in gens:
        _, lab = F.orbit_labels(g)
        cols.append(np.bincount(lab)[lab])
    if not cols:
        return [()] * F.size
    return list(zip(*(c.tolist() for c in cols)))


def root_class(F: FlagSystem, invariants: list[tuple[int, ...]] | None = None) -> tuple[tuple[int, ...], list[int]]:
    inv = invariants if invariants is not None else flag_invariants(F)
    tally = Counter(inv)
    best = min(tally, key=lambda c: (tally[c], c))
    return best, [x for x, c in enumerate(inv) if c == best]


def rooted_code(adj: list[list[int]], root: int, bound: list[int] | None = None):
    """BFS code from root. Returns (code, order, beats_bound) or None once it exceeds bound."""
    n = len(adj[0])
    label = [-1] * n
    label[root] = 0
    order = [root]
    code: list[int] = []
    deciding = bound is not None
    smaller = False
    pos = 0
    while pos < len(order):
        x = order[pos]
        pos += 1
        for row in adj:
            y = row[x]
            if label[y] < 0:
                label[y] = len(order)
                order.append(y)
            c = label[y]
            if deciding:
                b = bound[len(code)]
                if c > b:
                    return None
                if c < b:
                    deciding = False
                    smaller = True
            code.append(c)
    return code, order, smaller


class _Orbits:
    """Union-find over flags, merged along discovered automorphisms."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.done = [False] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx
            self.done[rx] = self.done[rx] or self.done[ry]


def canonical_form(F: FlagSystem) -> tuple[list[int], list[int], int]:
    """(code, order of the canonical root, number of automorphisms found on the way)."""
    adj = [row.tolist() for row in F.adj]
    _, roots = root_class(F)
    orbits = _Orbits(F.size)
    best: list[int] | None = None
    best_order: list[int] = []
    automorphisms = 0
    for r in roots:
        if orbits.done[orbits.find(r)]:
            continue
        result = rooted_code(adj, r, best)
        orbits.done[orbits.find(r)] = True
        if result is None:
            continue
        code, order, smaller = result
        if len(order) != F.size:
            raise ValueError("flag system is not connected")
        if best is None or smaller:
            best, best_order = code, order
            continue
        automorphisms += 1
        for src, dst in zip(best_order, order):
            orbits.union(src, dst)
    return best or [], best_order, automorphisms


def digest(F: FlagSystem) -> str:
    code, _, found = canonical_form(F)
    h = hashlib.sha256()
    h.update(f"{SCHEME}/r{F.dim}/n{F.size}:".encode())
    h.update(np.asarray(code, dtype=np.int64).tobytes())
    logger.debug(f"certificate of {F.size} flags ({found} automorphisms used for pruning)")
    return h.hexdigest()


def extend_isomorphism(F: FlagSystem, G: FlagSystem, r: int, g: int) -> np.ndarray | None:
    """The unique colour-preserving map of connected flag graphs with r -> g, if one exists."""
    if F.size != G.size or F.dim != G.dim:
        return None
    fa = [row.tolist() for row in F.adj]
    ga = [row.tolist() for row in G.adj]
    image = [-1] * F.size
    used = [False] * G.size
    image[r], used[g] = g, True
    queue = [r]
    pos = 0
    while pos < len(queue):
        x = queue[pos]
        pos += 1
        for frow, grow in zip(fa, ga):
            y, z = frow[x], grow[image[x]]
            if image[y] < 0:
                if used[z]:
                    return None
                image[y], used[z] = z, True
                queue.append(y)
            elif image[y] != z:
                return None
    if len(queue) != F.size:
        return None
    return np.asarray(image, dtype=np.int64)


def find_isomorphism(F: FlagSystem, G: FlagSystem) -> np.ndarray | None:
    if F.size != G.size or F.dim != G.dim:
        return None
    inv_f, inv_g = flag_invariants(F), flag_invariants(G)
    if Counter(inv_f) != Counter(inv_g):
        return None
    colour, roots = root_class(F, inv_f)
    r = roots[0]
    for g, c in enumerate(inv_g):
        if c != colour:
            continue
        image = extend_isomorphism(F, G, r, g)
        if image is not None:
            return image
    return None


def automorphisms_from(F: FlagSystem, root: int = 0):
    """Yield every automorphism of F as a flag permutation, by the image of root."""
    inv = flag_invariants(F)
    for g, c in enumerate(inv):
        if c != inv[root]:
            continue
        image = extend_isomorphism(F, F, root, g)
        if image is not None:
            yield image
