"""Quotients of the hexagonal tiling by torus and Klein-bottle lattice groups.

Hexagons are the points of the triangular lattice Z^2 with neighbors in the
cyclic order below. A flag is an ordered triple (h, h2, x) of mutually adjacent
points: face h, edge {h, h2}, vertex {h, h2, x}.
"""

import logging
from dataclasses import dataclass

import numpy as np

from ..errors import PolyhexError
from ..kernel import FlagSystem

logger = logging.getLogger(__name__)

NEIGHBOURS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))

Point = tuple[int, int]


@dataclass(frozen=True)
class Affine:
    """p -> m p + t on Z^2."""

    m: tuple[tuple[int, int], tuple[int, int]]
    t: Point

    def __call__(self, p: Point) -> Point:
        (a, b), (c, d) = self.m
        return (a * p[0] + b * p[1] + self.t[0], c * p[0] + d * p[1] + self.t[1])

    def then(self, other: "Affine") -> "Affine":
        """other after self."""
        (a, b), (c, d) = other.m
        (e, f), (g, h) = self.m
        m = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
        return Affine(m, other(self.t))


IDENTITY = ((1, 0), (0, 1))
GLIDE = ((-1, -1), (0, 1))


def translation(dx: int, dy: int) -> Affine:
    return Affine(IDENTITY, (dx, dy))


class TorusGroup:
    """Translations by the lattice spanned by a and b, reduced to Hermite normal form."""

    def __init__(self, a: Point, b: Point):
        det = a[0] * b[1] - a[1] * b[0]
        if det == 0:
            raise PolyhexError(f"degenerate basis {a}, {b}")
        g, s, t = _ext_gcd(a[1], b[1])
        if g == 0:
            raise PolyhexError(f"degenerate basis {a}, {b}")
        self.gamma = g
        self.alpha = abs(det) // g
        wx = s * a[0] + t * b[0]
        self.beta = wx % self.alpha
        self.faces = self.alpha * self.gamma

    def domain(self) -> list[Point]:
        return [(x, y) for y in range(self.gamma) for x in range(self.alpha)]

    def canon(self, p: Point) -> Affine:
        n = p[1] // self.gamma
        x = p[0] - n * self.beta
        m = x // self.alpha
        return translation(-n * self.beta - m * self.alpha, -n * self.gamma)


class KleinGroup:
    """Generated by the translation (c, 0) and the glide g(x, y) = (-x - y + p, y + q)."""

    def __init__(self, c: int, p: int, q: int):
        if c <= 0 or q <= 0:
            raise PolyhexError(f"Klein parameters need c > 0 and q > 0, got c={c}, q={q}")
        self.c, self.p, self.q = c, p, q
        self.glide = Affine(GLIDE, (p, self.q))
        self.glide_inv = Affine(GLIDE, (p + self.q, -self.q))
        self.faces = c * self.q

    def domain(self) -> list[Point]:
        return [(x, y) for y in range(self.q) for x in range(self.c)]

    def canon(self, p: Point) -> Affine:
        n = p[1] // self.q
        step = self.glide_inv if n > 0 else self.glide
        g = translation(0, 0)
        for _ in range(abs(n)):
            g = g.then(step)
        x = g(p)[0]
        return g.then(translation(-(x // self.c) * self.c, 0))


def polyhex_flags(group: TorusGroup | KleinGroup) -> FlagSystem:
    """Flag system of the quotient; 12 flags per hexagon."""
    keys: list[tuple[Point, Point, Point]] = []
    for h in group.domain():
        for k, (dx, dy) in enumerate(NEIGHBOURS):
            h2 = (h[0] + dx, h[1] + dy)
            for side in (-1, 1):
                ex, ey = NEIGHBOURS[(k + side) % 6]
                keys.append((h, h2, (h[0] + ex, h[1] + ey)))
    index = {key: n for n, key in enumerate(keys)}

    def lookup(h: Point, h2: Point, x: Point) -> int:
        g = group.canon(h)
        key = (g(h), g(h2), g(x))
        if key not in index:
            raise PolyhexError(f"flag {key} escaped the fundamental domain")
        return index[key]

    adj = np.empty((3, len(keys)), dtype=np.int64)
    for n, (h, h2, x) in enumerate(keys):
        adj[0, n] = lookup(h, h2, (h[0] + h2[0] - x[0], h[1] + h2[1] - x[1]))
        adj[1, n] = lookup(h, x, h2)
        adj[2, n] = lookup(h2, h, x)
    logger.debug(f"polyhex quotient: {group.faces} hexagons, {len(keys)} flags")
    return FlagSystem(adj)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g >= 0."""
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, s, t = _ext_gcd(b, a % b)
    return (g, t, s - (a // b) * t)

