"""Exact integer matrices and sublattices of Z^n.

Everything here is arbitrary-precision: matrix entries are Python ints,
scale factors are ``fractions.Fraction``.  No floating point is used
anywhere in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DimensionError,
    IntegralityError,
    SingularMatrixError,
    StructureError,
)


class IntMatrix:
    """Immutable dense matrix of exact integers, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        rows = []
        for row in entries:
            row = tuple(row)
            for v in row:
                if not isinstance(v, int):
                    raise IntegralityError(f"matrix entry {v!r} is not an int")
            rows.append(row)
        if not rows or not rows[0]:
            raise DimensionError("matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows in matrix input")
        object.__setattr__(self, "entries", tuple(rows))
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(list(zip(*self.entries)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError("inner dimensions disagree")
        cols = list(zip(*other.entries))
        return IntMatrix(
            [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.entries]
        )

    def mat_vec(self, x) -> tuple:
        """Matrix times column vector."""
        if len(x) != self.cols:
            raise DimensionError("vector length disagrees with matrix width")
        return tuple(sum(a * b for a, b in zip(r, x)) for r in self.entries)

    def scaled(self, k: int) -> "IntMatrix":
        return IntMatrix([[k * v for v in r] for r in self.entries])

    def kron(self, other: "IntMatrix") -> "IntMatrix":
        """Kronecker product, self's entries expanded by blocks of other."""
        out = []
        for arow in self.entries:
            for brow in other.entries:
                out.append([a * b for a in arow for b in brow])
        return IntMatrix(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.entries]})"


def det(m: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise DimensionError("determinant needs a square matrix")
    n = m.rows
    a = [list(r) for r in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _hnf_rows(rows: list, cols: int) -> list:
    """Lower-triangular row HNF of a full-column-rank stack of rows.

    Returns the ``cols`` nonzero rows: positive diagonal, entries below
    each diagonal reduced into ``[0, diag)``.  Row operations only, so the
    generated lattice is unchanged.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    if nrows < cols:
        raise SingularMatrixError("fewer rows than columns")
    for j in range(cols - 1, -1, -1):
        p = nrows - cols + j
        while True:
            best = -1
            for i in range(p + 1):
                v = m[i][j]
                if v != 0 and (best < 0 or abs(v) < abs(m[best][j])):
                    best = i
            if best < 0:
                raise SingularMatrixError("rank-deficient input to hnf")
            if best != p:
                m[best], m[p] = m[p], m[best]
            pivot = m[p][j]
            clean = True
            for i in range(p):
                if m[i][j] != 0:
                    q = m[i][j] // pivot
                    if q:
                        m[i] = [a - q * b for a, b in zip(m[i], m[p])]
                    if m[i][j] != 0:
                        clean = False
            if clean:
                break
        if m[p][j] < 0:
            m[p] = [-v for v in m[p]]
        pivot = m[p][j]
        for i in range(p + 1, nrows):
            q = m[i][j] // pivot
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[p])]
    return m[nrows - cols :]


def hnf(m: IntMatrix) -> IntMatrix:
    """Canonical lower-triangular Hermite normal form of a square matrix.

    Two generator matrices span the same lattice iff their HNFs are equal.
    """
    if m.rows != m.cols:
        raise DimensionError("hnf needs a square matrix")
    return IntMatrix(_hnf_rows(m.entries, m.cols))


def snf(m: IntMatrix) -> list:
    """Elementary divisors s_1 | s_2 | ... | s_n with product |det|."""
    if m.rows != m.cols:
        raise DimensionError("snf needs a square matrix")
    n = m.rows
    a = [list(r) for r in m.entries]
    for t in range(n):
        # move the absolutely smallest nonzero entry of the submatrix to (t,t)
        while True:
            pi = pj = -1
            for i in range(t, n):
                for j in range(t, n):
                    v = a[i][j]
                    if v != 0 and (pi < 0 or abs(v) < abs(a[pi][pj])):
                        pi, pj = i, j
            if pi < 0:
                raise SingularMatrixError("rank-deficient input to snf")
            if pi != t:
                a[pi], a[t] = a[t], a[pi]
            if pj != t:
                for row in a:
                    row[pj], row[t] = row[t], row[pj]
            pivot = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                q = a[i][t] // pivot
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t] != 0:
                    dirty = True
            for j in range(t + 1, n):
                q = a[t][j] // pivot
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j] != 0:
                    dirty = True
            if dirty:
                continue
            # pivot must divide the rest of the submatrix
            offender = -1
            for i in range(t + 1, n):
                if any(a[i][j] % pivot for j in range(t + 1, n)):
                    offender = i
                    break
            if offender < 0:
                break
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
    return [abs(a[i][i]) for i in range(n)]


def adjugate(m: IntMatrix) -> IntMatrix:
    """Exact adjugate, so that m @ adjugate(m) == det(m) * I."""
    if m.rows != m.cols:
        raise DimensionError("adjugate needs a square matrix")
    d = det(m)
    if d == 0:
        raise SingularMatrixError("adjugate of a singular matrix")
    n = m.rows
    # Gauss-Jordan over Fractions, then clear the 1/det denominator.
    work = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(m.entries)]
    for col in range(n):
        piv = next(r for r in range(col, n) if work[r][col] != 0)
        work[col], work[piv] = work[piv], work[col]
        inv = 1 / work[col][col]
        work[col] = [v * inv for v in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [v - f * w for v, w in zip(work[r], work[col])]
    adj = []
    for i in range(n):
        row = []
        for j in range(n):
            v = work[i][n + j] * d
            if v.denominator != 1:
                raise ArithmeticError("adjugate came out fractional")
            row.append(v.numerator)
        adj.append(row)
    return IntMatrix(adj)


class Lattice:
    """A full-rank sublattice of Z^n: integer generator rows plus an exact
    rational scale factor applied to every row."""

    __slots__ = ("gen", "scale", "_int_matrix", "_det", "_adj", "_hnf")

    def __init__(self, gen, scale=1):
        if not isinstance(gen, IntMatrix):
            gen = IntMatrix(gen)
        if gen.rows != gen.cols:
            raise DimensionError("generator matrix must be square")
        scale = Fraction(scale)
        if scale <= 0:
            raise ValueError("scale must be positive")
        if det(gen) == 0:
            raise SingularMatrixError("generator rows are linearly dependent")
        object.__setattr__(self, "gen", gen)
        object.__setattr__(self, "scale", scale)
        object.__setattr__(self, "_int_matrix", None)
        object.__setattr__(self, "_det", None)
        object.__setattr__(self, "_adj", None)
        object.__setattr__(self, "_hnf", None)

    def __setattr__(self, name, value):
        raise AttributeError("Lattice is immutable")

    def _set(self, name, value):
        object.__setattr__(self, name, value)

    @property
    def n(self) -> int:
        return self.gen.rows

    @property
    def int_matrix(self) -> IntMatrix:
        """The scaled generator; raises if the scale makes it fractional."""
        if self._int_matrix is None:
            num, den = self.scale.numerator, self.scale.denominator
            rows = []
            for r in self.gen.entries:
                row = []
                for v in r:
                    t = v * num
                    if t % den:
                        raise IntegralityError(
                            f"scale {self.scale} does not keep the generator integral"
                        )
                    row.append(t // den)
                rows.append(row)
            self._set("_int_matrix", IntMatrix(rows))
        return self._int_matrix

    @property
    def det(self) -> int:
        """Signed determinant of the scaled integer generator."""
        if self._det is None:
            self._set("_det", det(self.int_matrix))
        return self._det

    @property
    def volume(self) -> int:
        """|det| of the scaled generator: the index of the lattice in Z^n."""
        return abs(self.det)

    @property
    def adjugate(self) -> IntMatrix:
        if self._adj is None:
            self._set("_adj", adjugate(self.int_matrix))
        return self._adj

    @property
    def hnf(self) -> IntMatrix:
        if self._hnf is None:
            self._set("_hnf", hnf(self.int_matrix))
        return self._hnf

    def __repr__(self) -> str:
        s = "" if self.scale == 1 else f", scale={self.scale}"
        return f"Lattice({[list(r) for r in self.gen.entries]}{s})"


def same_lattice(a: Lattice, b: Lattice) -> bool:
    """Exact lattice equality via canonical HNFs."""
    return a.n == b.n and a.hnf == b.hnf


def contains(lat: Lattice, x) -> bool:
    """Membership test: is x an integer combination of the generator rows?

    Uses x in L  <=>  x . adj(M) == 0 (mod det M), all exact.
    """
    if len(x) != lat.n:
        raise DimensionError("point length disagrees with lattice dimension")
    adj = lat.adjugate.entries
    d = lat.volume
    for j in range(lat.n):
        s = 0
        for xi, row in zip(x, adj):
            s += xi * row[j]
        if s % d:
            return False
    return True


def canonical_residue(lat: Lattice, x) -> tuple:
    """Canonical coset representative of x modulo the lattice.

    Reduces against the HNF from the last coordinate down; the result has
    0 <= r_i < diag_i, one representative per coset.
    """
    if len(x) != lat.n:
        raise DimensionError("point length disagrees with lattice dimension")
    h = lat.hnf.entries
    r = list(x)
    for i in range(lat.n - 1, -1, -1):
        q = r[i] // h[i][i]
        if q:
            hi = h[i]
            for j in range(i + 1):
                r[j] -= q * hi[j]
    return tuple(r)


def period(lat: Lattice):
    """Per-axis periods (m_1, ..., m_n) and their lcm m.

    m_i is the least positive integer with m_i * e_i in the lattice; the
    code reduces to a Lee code over Z_m.
    """
    adj = lat.adjugate.entries
    d = lat.volume
    periods = []
    for row in adj:
        g = 0
        for v in row:
            g = math.gcd(g, v)
        periods.append(d // math.gcd(d, g))
    return tuple(periods), math.lcm(*periods)


@dataclass(frozen=True)
class CodeParams:
    """The (n, d, v, q) parameter tuple with its nominal packing density."""

    n: int
    d: int
    v: int
    q: int
    density: Fraction = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "density", Fraction(self.d**self.n, math.factorial(self.n) * self.v)
        )


def reduce_mod_period(lat: Lattice, min_dist: int) -> CodeParams:
    """Parameters of the Lee code over Z_m the lattice reduces to.

    The minimum distance is taken as given (computed by the caller); the
    reduction preserves it.
    """
    _, m = period(lat)
    return CodeParams(n=lat.n, d=min_dist, v=lat.volume, q=m)


def kronecker(a: Lattice, b: Lattice) -> Lattice:
    """Direct-product lattice; an (n1*n2, d1*d2, v1^n2 * v2^n1, q1*q2) code."""
    return Lattice(a.gen.kron(b.gen), a.scale * b.scale)


def scale(lat: Lattice, f) -> Lattice:
    """Multiply the lattice by an exact positive rational.

    Volume scales by f^n and every Manhattan distance by f.  Integrality
    is only demanded (and checked) when the scaled matrix is used.
    """
    f = Fraction(f)
    if f <= 0:
        raise ValueError("scale factor must be positive")
    return Lattice(lat.gen, lat.scale * f)


def puncture(lat: Lattice) -> Lattice:
    """Drop the first coordinate of a code whose generator has first
    column (1, 0, ..., 0).

    With that shape every punctured codeword lifts back with a zero first
    coordinate, so the minimum distance cannot drop and the volume is
    unchanged.  Callers normalize first (see ``normalize_first_column``).
    """
    m = lat.int_matrix
    if m.rows < 2:
        raise DimensionError("cannot puncture a 1-dimensional lattice")
    if m.entries[0][0] != 1 or any(r[0] != 0 for r in m.entries[1:]):
        raise StructureError(
            "generator must have first column (1, 0, ..., 0); "
            "normalize the first column before puncturing"
        )
    return Lattice([list(r[1:]) for r in m.entries[1:]])


def normalize_first_column(lat: Lattice) -> Lattice:
    """Row-reduce so the first column becomes (g, 0, ..., 0), g > 0.

    g is the gcd of the first coordinates; when g == 1 the result is in
    the shape ``puncture`` demands.
    """
    m = [list(r) for r in lat.int_matrix.entries]
    n = len(m)
    while True:
        best = -1
        for i in range(n):
            if m[i][0] != 0 and (best < 0 or abs(m[i][0]) < abs(m[best][0])):
                best = i
        if best < 0:
            raise SingularMatrixError("first column is zero")
        if best != 0:
            m[0], m[best] = m[best], m[0]
        pivot = m[0][0]
        if all(m[i][0] % pivot == 0 for i in range(1, n)):
            break
        for i in range(1, n):
            q = m[i][0] // pivot
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[0])]
    for i in range(1, n):
        q = m[i][0] // m[0][0]
        if q:
            m[i] = [a - q * b for a, b in zip(m[i], m[0])]
    if m[0][0] < 0:
        m[0] = [-v for v in m[0]]
    return Lattice(m)


# --- shared matrix text format ------------------------------------------
#
#   # scale p/q        (optional; omitted when the scale is 1)
#   3 3
#   1 -2 3
#   -2 3 1
#   3 1 -2


def format_matrix(m: IntMatrix) -> str:
    lines = [f"{m.rows} {m.cols}"]
    lines += [" ".join(str(v) for v in row) for row in m.entries]
    return "\n".join(lines) + "\n"


def format_lattice(lat: Lattice) -> str:
    head = "" if lat.scale == 1 else f"# scale {lat.scale.numerator}/{lat.scale.denominator}\n"
    return head + format_matrix(lat.gen)


def parse_lattice(text: str) -> Lattice:
    """Parse the shared matrix text format into a Lattice."""
    scale_f = Fraction(1)
    rows = []
    dims = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if parts and parts[0] == "scale":
                if len(parts) != 2:
                    raise ValueError(f"line {lineno}: malformed scale header")
                try:
                    scale_f = Fraction(parts[1])
                except (ValueError, ZeroDivisionError) as e:
                    raise ValueError(f"line {lineno}: bad scale value") from e
            continue
        try:
            values = [int(v) for v in line.split()]
        except ValueError as e:
            raise ValueError(f"line {lineno}: non-integer entry") from e
        if dims is None:
            if len(values) != 2:
                raise ValueError(f"line {lineno}: expected 'rows cols' header")
            dims = (values[0], values[1])
        else:
            if len(values) != dims[1]:
                raise ValueError(f"line {lineno}: expected {dims[1]} entries")
            rows.append(values)
    if dims is None or len(rows) != dims[0]:
        raise ValueError("matrix body does not match its declared dimensions")
    return Lattice(rows, scale_f)


def parse_matrix(text: str) -> IntMatrix:
    return parse_lattice(text).gen
