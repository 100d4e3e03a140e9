"""Independent oracles for the test suite.

These deliberately avoid the library's own algorithms: determinants by
cofactor expansion, Smith divisors from gcds of minors, membership by
rational Gaussian elimination, and minimum weights by exhaustive search
over small coordinate boxes.
"""

from fractions import Fraction
from itertools import combinations, product
from math import gcd


def cofactor_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j, v in enumerate(rows[0]):
        if v == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * v * cofactor_det(minor)
    return total


def minor_gcd_snf(rows):
    """Smith divisors via s_k = g_k / g_{k-1}, g_k = gcd of all k x k minors."""
    rows = [list(r) for r in rows]
    n = len(rows)
    gs = [1]
    for k in range(1, n + 1):
        g = 0
        for ri in combinations(range(n), k):
            for ci in combinations(range(n), k):
                sub = [[rows[i][j] for j in ci] for i in ri]
                g = gcd(g, abs(cofactor_det(sub)))
        gs.append(g)
    return [gs[k] // gs[k - 1] for k in range(1, n + 1)]


def solve_membership(rows, x):
    """Is x an integer combination of the rows?  Rational elimination."""
    n = len(rows)
    # solve u . rows = x, i.e. rows^T u^T = x^T
    aug = [[Fraction(rows[i][j]) for i in range(n)] + [Fraction(x[j])] for j in range(len(x))]
    col = 0
    for r in range(len(aug)):
        piv = next((i for i in range(r, len(aug)) if aug[i][col] != 0), None)
        if piv is None:
            return False
        aug[r], aug[piv] = aug[piv], aug[r]
        lead = aug[r][col]
        aug[r] = [v / lead for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        col += 1
        if col == n:
            break
    return all(aug[r][n].denominator == 1 for r in range(n))


def box_points(n, w):
    """All points of Z^n with Manhattan weight exactly w, by brute filter."""
    for p in product(range(-w, w + 1), repeat=n):
        if sum(abs(v) for v in p) == w:
            yield p


def brute_min_weight(rows, w_max):
    """Minimum Manhattan weight over the nonzero lattice points, or None."""
    n = len(rows[0])
    for w in range(1, w_max + 1):
        for p in box_points(n, w):
            if solve_membership(rows, p):
                return w
    return None


def subgroup_closure(rows, m):
    """The subgroup of Z_m^n generated by the rows, as a set of tuples."""
    n = len(rows[0])
    zero = (0,) * n
    span = {zero}
    for g in rows:
        g = tuple(v % m for v in g)
        if g == zero:
            continue
        base = list(span)
        shift = zero
        while True:
            shift = tuple((a + b) % m for a, b in zip(shift, g))
            if shift == zero:
                break
            span.update(tuple((a + b) % m for a, b in zip(s, shift)) for s in base)
    return span


def lee_code_min_distance(rows, m):
    """min(m, min nonzero Lee weight of the row span mod m): equals the
    minimum Manhattan weight of the lattice the rows generate."""
    span = subgroup_closure(rows, m)
    best = m
    zero = (0,) * len(rows[0])
    for word in span:
        if word == zero:
            continue
        w = sum(min(v, m - v) for v in word)
        if w < best:
            best = w
    return best
