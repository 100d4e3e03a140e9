"""Sphere-to-box transformations driven by a symmetric Hadamard matrix.

The continuous map sends x to H.x/sqrt(n); values are kept exact as
integer vectors over a square-root denominator.  For n = d^2 the integer
points mapping back into Z^n form a lattice code with minimum distance d,
and combining the map with coset leaders gives an involution of Z^n that
squeezes a Lee sphere into a small box.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import analyzer, intlat, metric
from .analyzer import CosetTable
from .errors import BoundViolationError, DimensionError, IntegralityError
from .hadamard import HadamardMatrix, sylvester
from .intlat import IntMatrix, Lattice


@dataclass(frozen=True)
class RadicalVector:
    """An exact vector of the form (integer components) / sqrt(radicand)."""

    nums: tuple
    radicand: int

    def __post_init__(self):
        if self.radicand <= 0:
            raise ValueError("radicand must be positive")

    def to_int_vector(self) -> tuple:
        """The exact integer value, defined when the radicand is a perfect
        square dividing every component."""
        root = math.isqrt(self.radicand)
        if root * root != self.radicand:
            raise IntegralityError(f"radicand {self.radicand} is not a square")
        if any(v % root for v in self.nums):
            raise IntegralityError("components are not divisible by the root")
        return tuple(v // root for v in self.nums)

    def max_abs_le(self, bound) -> bool:
        """Exact test max_j |nums_j| / sqrt(radicand) <= bound."""
        b = Fraction(bound)
        if b < 0:
            return all(v == 0 for v in self.nums) and b == 0
        lhs = max(v * v for v in self.nums)
        return lhs * b.denominator**2 <= b.numerator**2 * self.radicand


def t_apply(h: HadamardMatrix, x) -> RadicalVector:
    """The continuous transform H.x / sqrt(order), exactly."""
    if len(x) != h.order:
        raise DimensionError("point length disagrees with the matrix order")
    return RadicalVector(h.matrix.mat_vec(x), h.order)


def check_involution_continuous(h: HadamardMatrix, samples) -> int:
    """Verify H.(H.x) == n*x on every sample; returns the sample count.

    Only symmetric matrices qualify: without H == H^T the double
    application is H^2/n, not the identity.
    """
    _require_symmetric(h)
    n = h.order
    count = 0
    for x in samples:
        once = h.matrix.mat_vec(x)
        twice = h.matrix.mat_vec(once)
        if any(t != n * v for t, v in zip(twice, x)):
            raise BoundViolationError(f"H^2 != n*I witnessed at sample {x}")
        count += 1
    return count


def _require_symmetric(h: HadamardMatrix):
    m = h.matrix.entries
    for i in range(h.order):
        for j in range(i):
            if m[i][j] != m[j][i]:
                raise ValueError(
                    f"matrix is not symmetric: entry ({i},{j}) = {m[i][j]} "
                    f"but ({j},{i}) = {m[j][i]}"
                )


@dataclass(frozen=True)
class ContinuousBoxReport:
    order: int
    radius: int
    max_abs: int  # max_j |(H.x)_j| over the checked sphere points
    points_checked: int
    witness_attains: bool


def continuous_box(h: HadamardMatrix, radius: int, points=None) -> ContinuousBoxReport:
    """Check that the transformed Lee sphere of the given radius fits in the
    per-axis bound |(H.x)_j| <= radius (box side 2*radius/sqrt(n)).

    The bound itself follows from the entries being +-1 and the triangle
    inequality; here it is measured on the full sphere (or the supplied
    sample points) and the extreme point radius*e_1 is confirmed to attain
    it.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    n = h.order
    if points is None:
        points = metric.enumerate_sphere(n, radius)
    max_abs = 0
    count = 0
    for x in points:
        for v in h.matrix.mat_vec(x):
            if abs(v) > max_abs:
                max_abs = abs(v)
        count += 1
    if max_abs > radius:
        raise BoundViolationError(
            f"|H.x| reached {max_abs} > {radius} on a sphere point"
        )
    witness = tuple(radius if i == 0 else 0 for i in range(n))
    attained = max(abs(v) for v in h.matrix.mat_vec(witness)) == radius
    return ContinuousBoxReport(
        order=n,
        radius=radius,
        max_abs=max_abs,
        points_checked=count,
        witness_attains=attained,
    )


def hadamard_kernel_code(h: HadamardMatrix) -> Lattice:
    """The lattice {x in Z^n : H.x == 0 (mod d)} for symmetric H of order
    n = d^2; its minimum distance is d and the continuous transform maps
    it onto itself.
    """
    _require_symmetric(h)
    n = h.order
    d = math.isqrt(n)
    if d * d != n:
        raise DimensionError("matrix order must be a perfect square")
    # x/d must pair integrally with every column of H and with d*Z^n, so
    # the code is d times the dual of the lattice spanned by those rows.
    stacked = [list(h.matrix.column(j)) for j in range(n)]
    for i in range(n):
        row = [0] * n
        row[i] = d
        stacked.append(row)
    basis = IntMatrix(intlat._hnf_rows(stacked, n))
    det_b = intlat.det(basis)
    adj_t = intlat.adjugate(basis).transpose()
    rows = []
    for r in adj_t.entries:
        row = []
        for v in r:
            t = d * v
            if t % det_b:
                raise ArithmeticError("kernel basis came out fractional")
            row.append(t // det_b)
        rows.append(row)
    code = Lattice(intlat.hnf(IntMatrix(rows)))
    for row in code.int_matrix.entries:  # every generator really is in the kernel
        if any(v % d for v in h.matrix.mat_vec(row)):
            raise ArithmeticError("kernel construction produced a non-member")
    return code


@dataclass(frozen=True)
class TransformSpec:
    """Everything the discrete involution needs: the symmetric Hadamard
    matrix of order d^2, its kernel code, and the coset-leader table."""

    h: HadamardMatrix
    d: int
    code: Lattice
    table: CosetTable

    @classmethod
    def build(cls, d: int, coset_cap: int = analyzer.DEFAULT_COSET_CAP) -> "TransformSpec":
        if d < 2 or d & (d - 1):
            raise ValueError("d must be a power of two, at least 2")
        h = sylvester(2 * d.bit_length() - 2)
        code = hadamard_kernel_code(h)
        return cls(h=h, d=d, code=code, table=analyzer.coset_table(code, cap=coset_cap))

    @classmethod
    def from_hadamard(cls, h: HadamardMatrix, coset_cap: int = analyzer.DEFAULT_COSET_CAP):
        code = hadamard_kernel_code(h)
        d = math.isqrt(h.order)
        return cls(h=h, d=d, code=code, table=analyzer.coset_table(code, cap=coset_cap))

    @property
    def rho(self) -> int:
        return self.table.rho


def discrete_transform(spec: TransformSpec, p) -> tuple:
    """The involution of Z^{d^2}: split p = c + s with c in the code and s
    its coset leader, and return (H.c)/d + s."""
    if len(p) != spec.h.order:
        raise DimensionError("point length disagrees with the transform order")
    key = intlat.canonical_residue(spec.code, p)
    s = spec.table.leaders[key]
    c = tuple(a - b for a, b in zip(p, s))
    tc = t_apply(spec.h, c).to_int_vector()
    return tuple(a + b for a, b in zip(tc, s))


def check_involution_discrete(spec: TransformSpec, points) -> int:
    """Round-trip every point through the involution; any mismatch is an
    implementation bug and raises."""
    count = 0
    for p in points:
        p = tuple(p)
        if discrete_transform(spec, discrete_transform(spec, p)) != p:
            raise BoundViolationError(f"discrete transform failed to round-trip {p}")
        count += 1
    return count


@dataclass(frozen=True)
class DiscreteBoxReport:
    radius: int
    rho: int
    bound: int  # guaranteed per-axis extent 2*ceil((R+rho)/d) + 2*rho + 1
    extents: tuple  # measured number of integer points spanned per axis
    points_checked: int


def discrete_box(spec: TransformSpec, radius: int, center=None) -> DiscreteBoxReport:
    """Map a full Lee sphere through the involution and measure the box it
    lands in, checking the guaranteed per-axis extent."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    n = spec.h.order
    points = metric.enumerate_sphere(n, radius, center=center)
    lo = [None] * n
    hi = [None] * n
    count = 0
    for p in points:
        image = discrete_transform(spec, p)
        for i, v in enumerate(image):
            if lo[i] is None or v < lo[i]:
                lo[i] = v
            if hi[i] is None or v > hi[i]:
                hi[i] = v
        count += 1
    extents = tuple(h - l + 1 for l, h in zip(lo, hi))
    rho = spec.rho
    bound = 2 * (-((radius + rho) // -spec.d)) + 2 * rho + 1
    if any(e > bound for e in extents):
        raise BoundViolationError(
            f"image extent {max(extents)} exceeds the guaranteed bound {bound}"
        )
    return DiscreteBoxReport(
        radius=radius, rho=rho, bound=bound, extents=extents, points_checked=count
    )
