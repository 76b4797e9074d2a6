"""Exact integer linear algebra.

Everything here works over arbitrary-precision integers: ranks and
determinants via fraction-free (Bareiss) elimination, kernels of integer
matrices as saturated lattices with primitive basis vectors, and the
signed-minor relation among n+1 columns in dimension n.  No floating
point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Vector = tuple[int, ...]


class RankDeficient(ValueError):
    """Raised when an operation needs more independent columns than exist."""


class ZeroVector(ValueError):
    """Raised when a nonzero vector is required."""


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable integer matrix stored as a tuple of rows."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        assert len(self.entries) > 0, "matrix needs at least one row"
        width = len(self.entries[0])
        assert width > 0, "matrix needs at least one column"
        assert all(len(row) == width for row in self.entries), "ragged rows"
        assert all(
            isinstance(x, int) for row in self.entries for x in row
        ), "entries must be ints"

    @classmethod
    def from_rows(cls, rows) -> "IntegerMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def from_columns(cls, columns) -> "IntegerMatrix":
        cols = tuple(tuple(int(x) for x in col) for col in columns)
        if not cols:
            raise ValueError("matrix needs at least one column")
        if len({len(c) for c in cols}) > 1:
            raise ValueError("columns must all have the same length")
        return cls(tuple(zip(*cols)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> tuple[Vector, ...]:
        return tuple(zip(*self.entries))

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(tuple(zip(*self.entries)))

    def matvec(self, v) -> Vector:
        assert len(v) == self.cols
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self.entries)

    def hstack(self, other: "IntegerMatrix") -> "IntegerMatrix":
        assert self.rows == other.rows
        return IntegerMatrix(
            tuple(r + s for r, s in zip(self.entries, other.entries))
        )

    def scaled(self, k: int) -> "IntegerMatrix":
        assert k != 0
        return IntegerMatrix(tuple(tuple(k * x for x in row) for row in self.entries))

    def restrict_rows(self, keep) -> "IntegerMatrix":
        keep = tuple(keep)
        assert keep, "must keep at least one row"
        return IntegerMatrix(tuple(self.entries[i] for i in keep))


def rank(m: IntegerMatrix) -> int:
    """Return the rank of m, computed fraction-free."""
    a = [list(row) for row in m.entries]
    nrows, ncols = m.rows, m.cols
    r = 0
    prev = 1
    for pc in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if a[i][pc] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        piv = a[r][pc]
        for i in range(r + 1, nrows):
            for j in range(pc + 1, ncols):
                a[i][j] = (a[i][j] * piv - a[i][pc] * a[r][j]) // prev
            a[i][pc] = 0
        prev = piv
        r += 1
        if r == nrows:
            break
    return r


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b == g == gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _size_reduce(vectors: list[list[int]]) -> list[list[int]]:
    """Shorten a lattice basis by subtracting integer multiples in place.

    Elementary operations only, so the spanned lattice is unchanged;
    each accepted step strictly decreases a norm, so this terminates.
    """
    n = len(vectors)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                denom = sum(x * x for x in vectors[j])
                num = sum(a * b for a, b in zip(vectors[i], vectors[j]))
                q = round(Fraction(num, denom))
                if q == 0:
                    continue
                shorter = [a - q * b for a, b in zip(vectors[i], vectors[j])]
                if (sum(x * x for x in shorter)
                        < sum(x * x for x in vectors[i])):
                    vectors[i] = shorter
                    changed = True
    return vectors


def kernel_lattice_basis(m: IntegerMatrix) -> tuple[Vector, ...]:
    """Return a basis of the lattice {v in Z^cols : m v = 0}.

    The result is the full integer kernel (saturated: any integer vector
    killed by m is an integer combination of the basis), each basis
    vector primitive with its first nonzero coordinate positive, sorted.
    Works by unimodular row reduction of the block matrix [m^T | I]:
    rows whose left half has been cleared to zero carry, in their right
    half, exactly the kernel relations among the columns of m.  The raw
    basis is then size reduced to keep the entries small.
    """
    p = m.cols
    n = m.rows
    # work rows: [ column_j(m) | e_j ]  for j = 0..p-1
    work = [list(m.column(j)) + [int(i == j) for i in range(p)] for j in range(p)]
    r = 0
    for c in range(n):
        # clear column c below row r using gcd row operations
        pivot = None
        for i in range(r, p):
            if work[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(r + 1, p):
            if work[i][c] == 0:
                continue
            g, s, t = _xgcd(work[r][c], work[i][c])
            qr, qi = work[r][c] // g, work[i][c] // g
            new_r = [s * x + t * y for x, y in zip(work[r], work[i])]
            new_i = [qr * y - qi * x for x, y in zip(work[r], work[i])]
            work[r], work[i] = new_r, new_i
        r += 1
        if r == p:
            break
    raw = []
    for i in range(r, p):
        assert all(x == 0 for x in work[i][:n])
        raw.append(work[i][n:])
    # also collect any earlier rows that happen to have zero left half
    for i in range(r):
        if all(x == 0 for x in work[i][:n]):
            raw.append(work[i][n:])
    if len(raw) > 1:
        raw = _size_reduce(raw)
    return tuple(sorted(primitive(tuple(v)) for v in raw))


def _det(rows: list[list[int]]) -> int:
    """Return the determinant of a small square integer matrix."""
    n = len(rows)
    assert all(len(row) == n for row in rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n <= 4:
        total = 0
        sign = 1
        for j in range(n):
            if rows[0][j] != 0:
                minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
                total += sign * rows[0][j] * _det(minor)
            sign = -sign
        return total
    # Bareiss for anything larger
    a = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = None
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    swap = i
                    break
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def dependent_column_relation(m: IntegerMatrix) -> Vector:
    """Return the primitive relation among the n+1 columns of a rank-n matrix.

    m must be n x (n+1) of rank n.  The returned d satisfies m d = 0 and
    is unique up to sign; the sign is fixed by d = primitive of the
    vector of signed maximal minors d_i = (-1)^i det(m with column i
    removed).
    """
    n = m.rows
    assert m.cols == n + 1, "need exactly one more column than rows"
    if rank(m) != n:
        raise RankDeficient("columns span a space of rank below the row count")
    minors = []
    sign = 1
    for i in range(n + 1):
        sub = [
            [row[j] for j in range(n + 1) if j != i] for row in m.entries
        ]
        minors.append(sign * _det(sub))
        sign = -sign
    d = tuple(minors)
    assert m.matvec(d) == tuple([0] * n)
    return primitive(d)


def primitive(v) -> Vector:
    """Return v divided by the gcd of its entries, first nonzero positive."""
    v = tuple(int(x) for x in v)
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ZeroVector("cannot normalize the zero vector")
    w = tuple(x // g for x in v)
    for x in w:
        if x != 0:
            if x < 0:
                w = tuple(-y for y in w)
            break
    return w
