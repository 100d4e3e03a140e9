"""Minimum distance, coset leaders, covering radius, packing density and
perfection certificates for lattice codes."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import intlat, metric
from .errors import BoundViolationError, CapExceededError, InconclusiveError
from .intlat import CodeParams, Lattice

#: weight ceiling for the automatic minimum-distance search
DEFAULT_HARD_CAP = 64

#: rough ceiling on enumerated points during a distance search
DEFAULT_POINT_BUDGET = 20_000_000

#: largest volume for which coset tables are built
DEFAULT_COSET_CAP = 10**6


def _member_test(lat: Lattice):
    """Closure testing lattice membership via x . adj == 0 (mod |det|)."""
    cols = list(zip(*lat.adjugate.entries))
    d = lat.volume

    def member(x) -> bool:
        for col in cols:
            s = 0
            for xi, ai in zip(x, col):
                s += xi * ai
            if s % d:
                return False
        return True

    return member


def min_distance(
    lat: Lattice,
    cap: int | None = None,
    hard_cap: int = DEFAULT_HARD_CAP,
    point_budget: int = DEFAULT_POINT_BUDGET,
) -> int:
    """Minimum Manhattan weight over the nonzero lattice vectors.

    Enumerates Z^n by increasing weight and tests membership.  With an
    explicit ``cap`` the search stops there; otherwise the cap starts at 8
    and doubles up to ``hard_cap``.  An exhausted cap or budget raises
    InconclusiveError, never a wrong answer.
    """
    n = lat.n
    member = _member_test(lat)
    limit = cap if cap is not None else min(8, hard_cap)
    searched = 0
    while True:
        for w in range(searched + 1, limit + 1):
            if metric.lee_sphere_size(n, w) > point_budget:
                raise InconclusiveError(
                    f"weight-{w} search needs more than {point_budget} points; "
                    "raise the point budget or use a structural argument"
                )
            for x in metric.weight_shell(n, w):
                if member(x):
                    return w
        searched = limit
        if cap is not None or limit >= hard_cap:
            raise InconclusiveError(
                f"no nonzero lattice vector of weight <= {limit}; raise the cap"
            )
        limit = min(limit * 2, hard_cap)


@dataclass(frozen=True)
class CosetTable:
    """Minimum-weight coset leaders of Z^n modulo the lattice.

    ``leaders`` maps the canonical residue of a coset to its leader; the
    covering radius ``rho`` is the largest leader weight.
    """

    divisors: tuple
    leaders: dict
    rho: int

    @property
    def size(self) -> int:
        return len(self.leaders)


def coset_table(lat: Lattice, cap: int = DEFAULT_COSET_CAP) -> CosetTable:
    """Assign each coset its minimum-weight leader.

    Shells are scanned in increasing weight and lexicographic order inside
    a shell, so the leader is the lexicographically smallest vector among
    the minimum-weight members of its coset.
    """
    volume = lat.volume
    if volume > cap:
        raise CapExceededError(f"volume {volume} exceeds the coset cap {cap}")
    divisors = tuple(intlat.snf(lat.int_matrix))
    leaders: dict = {}
    rho = 0
    w = 0
    while len(leaders) < volume:
        for x in metric.weight_shell(lat.n, w):
            key = intlat.canonical_residue(lat, x)
            if key not in leaders:
                leaders[key] = x
                rho = w
                if len(leaders) == volume:
                    break
        w += 1
    return CosetTable(divisors=divisors, leaders=leaders, rho=rho)


def covering_radius(lat: Lattice, cap: int = DEFAULT_COSET_CAP) -> int:
    return coset_table(lat, cap=cap).rho


def packing_density(params: CodeParams) -> Fraction:
    """Nominal cross-polytope packing density d^n / (n! * v)."""
    return params.density


def density_decimal(value: Fraction, places: int = 6) -> str:
    """Deterministic fixed-point rendering, round half up."""
    num, den = value.numerator, value.denominator
    sign = "-" if num < 0 else ""
    num = abs(num)
    q, r = divmod(num * 10**places, den)
    if 2 * r >= den:
        q += 1
    whole, frac = divmod(q, 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"


class CertificateKind(enum.Enum):
    PERFECT = "perfect"
    DIAMETER_PERFECT = "diameter_perfect"
    NONE = "none"


@dataclass(frozen=True)
class Certificate:
    """Outcome of comparing a code's volume against its packing bound.

    For odd minimum distance d = 2R+1 the reference is the Lee sphere of
    radius R; equality means the code is perfect.  For even d = 2R+2 the
    reference is the odd-diameter anticode, which is only conjectured to
    be maximum, so the label says so.
    """

    kind: CertificateKind
    min_dist: int
    radius: int
    bound: str
    bound_size: int
    slack: int


def certify(lat: Lattice, min_dist: int | None = None) -> Certificate:
    if min_dist is None:
        min_dist = min_distance(lat)
    n = lat.n
    volume = lat.volume
    if min_dist % 2 == 1:
        radius = (min_dist - 1) // 2
        bound = "lee_sphere"
        bound_size = metric.lee_sphere_size(n, radius)
        exact_kind = CertificateKind.PERFECT
    else:
        radius = (min_dist - 2) // 2
        bound = "odd_anticode(conjectured_max)"
        bound_size = metric.anticode_size_odd(n, radius)
        exact_kind = CertificateKind.DIAMETER_PERFECT
    slack = volume - bound_size
    if slack < 0:
        raise BoundViolationError(
            f"volume {volume} is below the proven bound {bound_size}; "
            "this indicates a bug in the construction or the distance search"
        )
    kind = exact_kind if slack == 0 else CertificateKind.NONE
    return Certificate(
        kind=kind,
        min_dist=min_dist,
        radius=radius,
        bound=bound,
        bound_size=bound_size,
        slack=slack,
    )


def report(
    lat: Lattice,
    min_dist_cap: int | None = None,
    coset_cap: int = DEFAULT_COSET_CAP,
) -> dict:
    """Full machine-readable analysis document with a fixed key order."""
    d = min_distance(lat, cap=min_dist_cap)
    periods, q = intlat.period(lat)
    params = intlat.reduce_mod_period(lat, d)
    cert = certify(lat, min_dist=d)
    try:
        rho = covering_radius(lat, cap=coset_cap)
    except CapExceededError:
        rho = None
    doc = {
        "n": lat.n,
        "min_distance": d,
        "volume": lat.volume,
        "period": list(periods),
        "q": q,
        "density": f"{params.density.numerator}/{params.density.denominator}",
        "density_decimal": density_decimal(params.density),
        "covering_radius": rho,
        "certificate": {
            "kind": cert.kind.value,
            "bound": cert.bound,
            "bound_size": cert.bound_size,
            "radius": cert.radius,
            "slack": cert.slack,
        },
    }
    return doc
