"""Lee/Manhattan distances, sphere and anticode sizes, and the brute-force
shape enumerators used as oracles for them.

Points are plain tuples of ints.  All counting formulas are evaluated with
exact integer arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb

from .errors import CapExceededError, DimensionError

#: default ceiling on enumerated point-set sizes
DEFAULT_CAP = 10**7

#: enumerators are only meant for desk-scale dimensions
MAX_ENUM_DIM = 6


class ShapeKind(enum.Enum):
    LEE_SPHERE = "lee_sphere"
    ODD_ANTICODE = "odd_anticode"


@dataclass(frozen=True)
class ShapeId:
    """Names one of the two reference shapes: the Lee sphere of diameter
    2*radius, or the odd anticode of diameter 2*radius + 1."""

    kind: ShapeKind
    n: int
    radius: int

    def __post_init__(self):
        if self.n < 1 or self.radius < 0:
            raise ValueError("need n >= 1 and radius >= 0")

    @property
    def diameter(self) -> int:
        extra = 1 if self.kind is ShapeKind.ODD_ANTICODE else 0
        return 2 * self.radius + extra

    def size(self) -> int:
        if self.kind is ShapeKind.LEE_SPHERE:
            return lee_sphere_size(self.n, self.radius)
        return anticode_size_odd(self.n, self.radius)

    def enumerate(self, cap: int = DEFAULT_CAP) -> set:
        if self.kind is ShapeKind.LEE_SPHERE:
            return enumerate_sphere(self.n, self.radius, cap=cap)
        return enumerate_anticode_odd(self.n, self.radius, cap=cap)


def manhattan_dist(x, y) -> int:
    if len(x) != len(y):
        raise DimensionError("points have different lengths")
    return sum(abs(a - b) for a, b in zip(x, y))


def manhattan_weight(x) -> int:
    return sum(abs(a) for a in x)


def lee_dist(x, y, m: int) -> int:
    """Summed per-coordinate cyclic distance on Z_m."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    if len(x) != len(y):
        raise DimensionError("points have different lengths")
    total = 0
    for a, b in zip(x, y):
        d = (a - b) % m
        total += min(d, m - d)
    return total


def lee_weight(x, m: int) -> int:
    return lee_dist(x, tuple(0 for _ in x), m)


def lee_sphere_size(n: int, radius: int) -> int:
    """Number of points of Z^n within Manhattan distance ``radius``."""
    if n < 1 or radius < 0:
        raise ValueError("need n >= 1 and radius >= 0")
    return sum(
        2**i * comb(n, i) * comb(radius, i) for i in range(min(n, radius) + 1)
    )


def anticode_size_odd(n: int, radius: int) -> int:
    """Size of the diameter-(2*radius+1) anticode grown from two adjacent
    points by ``radius`` rounds of unit-neighbor closure."""
    if n < 1 or radius < 0:
        raise ValueError("need n >= 1 and radius >= 0")
    return sum(
        2 ** (i + 1) * comb(n - 1, i) * comb(radius + 1, i + 1)
        for i in range(min(n - 1, radius) + 1)
    )


def check_anticode_recurrences(n_max: int, r_max: int) -> list:
    """Check the coupled recurrences tying sphere and odd-anticode sizes:

        sphere(n, R)   == sphere(n-1, R) + anticode(n, R-1)
        anticode(n, R) == sphere(n-1, R) + sphere(n, R)

    over 2 <= n <= n_max, 1 <= R <= r_max.  Returns the list of violating
    (n, R, which) triples; empty means everything holds.
    """
    if n_max < 1 or r_max < 1:
        raise ValueError("bounds must be at least 1")
    bad = []
    for n in range(2, n_max + 1):
        for r in range(1, r_max + 1):
            if lee_sphere_size(n, r) != lee_sphere_size(n - 1, r) + anticode_size_odd(n, r - 1):
                bad.append((n, r, "sphere"))
            if anticode_size_odd(n, r) != lee_sphere_size(n - 1, r) + lee_sphere_size(n, r):
                bad.append((n, r, "anticode"))
    return bad


def weight_shell(n: int, w: int):
    """Yield every point of Z^n with Manhattan weight exactly w, in
    lexicographic order."""
    point = [0] * n

    def rec(i, rem):
        if i == n - 1:
            if rem == 0:
                point[i] = 0
                yield tuple(point)
            else:
                point[i] = -rem
                yield tuple(point)
                point[i] = rem
                yield tuple(point)
            return
        for v in range(-rem, rem + 1):
            point[i] = v
            yield from rec(i + 1, rem - abs(v))

    yield from rec(0, w)


def enumerate_sphere(n: int, radius: int, center=None, cap: int = DEFAULT_CAP) -> set:
    """The exact point set of the Lee sphere of the given radius."""
    if n > MAX_ENUM_DIM:
        raise CapExceededError(f"sphere enumeration is limited to n <= {MAX_ENUM_DIM}")
    size = lee_sphere_size(n, radius)
    if size > cap:
        raise CapExceededError(f"sphere has {size} points, cap is {cap}")
    if center is None:
        center = (0,) * n
    elif len(center) != n:
        raise DimensionError("center has the wrong length")
    points = set()
    for w in range(radius + 1):
        for p in weight_shell(n, w):
            points.add(tuple(c + v for c, v in zip(center, p)))
    return points


def enumerate_anticode_odd(n: int, radius: int, cap: int = DEFAULT_CAP) -> set:
    """Grow the odd-diameter anticode from the seed pair {0, e_1}.

    The seed is fixed for determinism; translation moves the shape but not
    its size or diameter.
    """
    if n > MAX_ENUM_DIM:
        raise CapExceededError(f"anticode enumeration is limited to n <= {MAX_ENUM_DIM}")
    size = anticode_size_odd(n, radius)
    if size > cap:
        raise CapExceededError(f"anticode has {size} points, cap is {cap}")
    e1 = tuple(1 if i == 0 else 0 for i in range(n))
    points = {(0,) * n, e1}
    for _ in range(radius):
        grown = set(points)
        for p in points:
            for i in range(n):
                for step in (1, -1):
                    q = list(p)
                    q[i] += step
                    grown.add(tuple(q))
        points = grown
    return points


def diameter(points) -> int:
    """Largest pairwise Manhattan distance; quadratic scan."""
    pts = list(points)
    best = 0
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            d = manhattan_dist(p, q)
            if d > best:
                best = d
    return best


def format_point_set(points) -> str:
    """One point per line, space-separated, lexicographically sorted."""
    return "\n".join(" ".join(str(v) for v in p) for p in sorted(points)) + "\n"
