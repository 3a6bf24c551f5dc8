"""The 120 icosian unit quaternions with exact coordinates in Q(sqrt 5)."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product


@dataclass(frozen=True, order=False)
class QR5:
    """a + b*sqrt(5) with rational a, b."""

    a: Fraction
    b: Fraction

    @classmethod
    def from_integers(cls, an: int, ad: int, bn: int, bd: int) -> "QR5":
        return cls(Fraction(an, ad), Fraction(bn, bd))

    def __add__(self, other: "QR5") -> "QR5":
        return QR5(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "QR5") -> "QR5":
        return QR5(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "QR5":
        return QR5(-self.a, -self.b)

    def __mul__(self, other: "QR5") -> "QR5":
        return QR5(self.a * other.a + 5 * self.b * other.b, self.a * other.b + self.b * other.a)

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with 5 b^2
        return sa if self.a * self.a > 5 * self.b * self.b else sb

    def __lt__(self, other: "QR5") -> bool:
        return (self - other).sign() < 0


ZERO = QR5.from_integers(0, 1, 0, 1)
ONE = QR5.from_integers(1, 1, 0, 1)
HALF = QR5.from_integers(1, 2, 0, 1)
HALF_PHI = QR5.from_integers(1, 4, 1, 4)
HALF_PHI_INV = QR5.from_integers(-1, 4, 1, 4)

Quaternion = tuple[QR5, QR5, QR5, QR5]

_EVEN_PERMUTATIONS = [
    p for p in permutations(range(4))
    if sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j]) % 2 == 0
]


@lru_cache(maxsize=1)
def icosians() -> tuple[Quaternion, ...]:
    """Vertices of the 600-cell in a fixed order: 8 axis units, 16 half-units, 96 golden units."""
    out: list[Quaternion] = []
    for axis in range(4):
        for s in (ONE, -ONE):
            out.append(tuple(s if i == axis else ZERO for i in range(4)))
    for signs in product((HALF, -HALF), repeat=4):
        out.append(tuple(signs))
    base = (ZERO, HALF, HALF_PHI_INV, HALF_PHI)
    for perm in _EVEN_PERMUTATIONS:
        for s1, s2, s3 in product((1, -1), repeat=3):
            signed = (base[0], base[1] if s1 > 0 else -base[1], base[2] if s2 > 0 else -base[2],
                      base[3] if s3 > 0 else -base[3])
            q = [ZERO] * 4
            for src, dst in enumerate(perm):
                q[dst] = signed[src]
            out.append(tuple(q))
    return tuple(out)


def inner(p: Quaternion, q: Quaternion) -> QR5:
    total = ZERO
    for x, y in zip(p, q):
        total = total + x * y
    return total


def antipodes() -> list[int]:
    """Index of -q for every icosian q."""
    qs = icosians()
    index = {q: i for i, q in enumerate(qs)}
    return [index[tuple(-x for x in q)] for q in qs]
