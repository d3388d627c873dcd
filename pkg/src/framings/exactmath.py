"""Exact integer and rational linear algebra.

Smith normal forms, signatures of symmetric integer matrices and affine
GF(2) systems, all computed with arbitrary-precision integers and
`fractions.Fraction`.  No floating point enters any code path here, so
results are exact at any input size this library cares about (a few
hundred rows at most).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence, Union

from .errors import NotSymmetric, Unsolvable

# Exact rational scalar used throughout the library (signature defects of
# coverings, fractional corrections in covering formulas).  Fraction
# already keeps the denominator positive and the pair fully reduced.
Rational = Fraction

MatrixLike = Union["IntMatrix", Sequence[Sequence[int]]]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored as a tuple of row tuples.

    The 0x0 matrix is legal and represents the empty presentation
    (surgery on the empty link, i.e. the 3-sphere).
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(tuple(row) for row in self.entries))
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise ValueError("matrix rows have unequal lengths")
        for row in self.entries:
            for x in row:
                if not isinstance(x, int):
                    raise TypeError(f"non-integer matrix entry {x!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def trace(self) -> int:
        return sum(self.diagonal())

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(self.entries[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(self.entries[i][j] == self.entries[j][i]
                   for i in range(self.rows) for j in range(i + 1, self.cols))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-x for x in row) for row in self.entries))

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_lists()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                pivot_row = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if pivot_row is None:
                    return 0
                a[k], a[pivot_row] = a[pivot_row], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


def as_int_matrix(m: MatrixLike) -> IntMatrix:
    if isinstance(m, IntMatrix):
        return m
    return IntMatrix.from_rows(m)


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d1 | d2 | ... | dr followed by zeros."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self) -> None:
        fs = self.invariant_factors
        for a, b in zip(fs, fs[1:]):
            if a < 0 or b < 0:
                raise ValueError("invariant factors must be nonnegative")
            if a == 0 and b != 0:
                raise ValueError("zero invariant factors must come last")
            if a != 0 and b != 0 and b % a:
                raise ValueError("invariant factors must form a divisibility chain")

    @property
    def rank(self) -> int:
        return sum(1 for f in self.invariant_factors if f)

    @property
    def kernel_rank(self) -> int:
        return sum(1 for f in self.invariant_factors if not f)


def _smallest_pivot(a: list[list[int]], t: int) -> tuple[int, int] | None:
    """Position of the nonzero entry of least absolute value in the t-block."""
    best: tuple[int, int, int] | None = None
    for i in range(t, len(a)):
        for j in range(t, len(a[i])):
            v = abs(a[i][j])
            if v and (best is None or v < best[0]):
                best = (v, i, j)
                if v == 1:
                    return i, j
    return None if best is None else (best[1], best[2])


def _divisor_chain(values: list[int]) -> list[int]:
    """Turn a diagonal multiset into its divisibility chain via gcd/lcm swaps."""
    d = sorted(abs(v) for v in values if v)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
        if changed:
            d.sort()
    return d


def smith_normal_form(m: MatrixLike) -> SmithForm:
    """Invariant factors of an integer matrix.

    Row/column reduction with the smallest-absolute-value pivot rule, which
    keeps coefficient growth tame; the divisibility chain is restored on
    the resulting diagonal.  Equivalently there are unimodular U, V with
    U m V diagonal and the returned chain on the diagonal.
    """
    mat = as_int_matrix(m)
    a = mat.to_lists()
    nr, nc = mat.rows, mat.cols
    size = min(nr, nc)
    diag: list[int] = []
    t = 0
    while t < size:
        pos = _smallest_pivot(a, t)
        if pos is None:
            break
        pi, pj = pos
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        p = a[t][t]
        dirty = False
        for i in range(t + 1, nr):
            if a[i][t]:
                if a[i][t] % p:
                    dirty = True
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
        if dirty:
            continue  # a remainder smaller than the pivot appeared; re-pivot
        for j in range(t + 1, nc):
            if a[t][j]:
                if a[t][j] % p:
                    dirty = True
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
        if dirty:
            continue
        diag.append(abs(p))
        t += 1
    factors = _divisor_chain(diag)
    factors += [0] * (size - len(factors))
    return SmithForm(tuple(factors))


def exact_signature(q: MatrixLike) -> int:
    """Signature of a symmetric integer matrix, computed exactly.

    Symmetric congruence reduction over the rationals.  A zero diagonal
    pivot is repaired by swapping in a later nonzero diagonal entry, or,
    when the whole remaining diagonal vanishes, by adding a row and column
    that turn an off-diagonal entry b into the nonzero pivot 2b; the
    hyperbolic pair then contributes one +1 and one -1 as it must.
    """
    mat = as_int_matrix(q)
    if not mat.is_symmetric():
        raise NotSymmetric("signature needs a symmetric matrix")
    n = mat.rows
    a = [[Fraction(x) for x in row] for row in mat.entries]
    signature = 0
    for t in range(n):
        if a[t][t] == 0:
            swap = next((k for k in range(t + 1, n) if a[k][k] != 0), None)
            if swap is not None:
                a[t], a[swap] = a[swap], a[t]
                for row in a:
                    row[t], row[swap] = row[swap], row[t]
            else:
                partner = next((k for k in range(t + 1, n) if a[t][k] != 0), None)
                if partner is None:
                    continue  # zero row and column: a radical direction
                for j in range(n):
                    a[t][j] += a[partner][j]
                for i in range(n):
                    a[i][t] += a[i][partner]
        p = a[t][t]
        signature += 1 if p > 0 else -1
        for i in range(t + 1, n):
            if a[i][t]:
                f = a[i][t] / p
                a[i] = [x - f * y for x, y in zip(a[i], a[t])]
        for j in range(t + 1, n):
            a[t][j] = Fraction(0)
    return signature


@dataclass(frozen=True)
class Gf2Solution:
    """Affine solution set of a GF(2) system: particular + kernel basis."""

    particular: tuple[int, ...]
    kernel: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return 1 << len(self.kernel)

    def solutions(self) -> Iterator[tuple[int, ...]]:
        """Every solution, as the particular one shifted by kernel combinations."""
        for picks in itertools.product((0, 1), repeat=len(self.kernel)):
            v = list(self.particular)
            for take, basis in zip(picks, self.kernel):
                if take:
                    v = [x ^ y for x, y in zip(v, basis)]
            yield tuple(v)


def solve_gf2(a: MatrixLike, b: Sequence[int]) -> Gf2Solution:
    """Solve a x = b over GF(2); entries of a and b are reduced mod 2.

    Raises Unsolvable when the system is inconsistent.  Rows are held as
    integer bitmasks, eliminated into reduced row echelon form.
    """
    mat = as_int_matrix(a)
    nr, nc = mat.rows, mat.cols
    if len(b) != nr:
        raise ValueError(f"right-hand side has length {len(b)}, expected {nr}")
    pivots: list[tuple[int, int, int]] = []  # (pivot column, row bits, rhs bit)
    for i in range(nr):
        bits = 0
        for j in range(nc):
            if mat[i, j] & 1:
                bits |= 1 << j
        rhs = b[i] & 1
        for col, pbits, prhs in pivots:
            if (bits >> col) & 1:
                bits ^= pbits
                rhs ^= prhs
        if bits == 0:
            if rhs:
                raise Unsolvable("inconsistent linear system over GF(2)")
            continue
        col = (bits & -bits).bit_length() - 1
        reduced = []
        for pcol, pbits, prhs in pivots:
            if (pbits >> col) & 1:
                pbits ^= bits
                prhs ^= rhs
            reduced.append((pcol, pbits, prhs))
        reduced.append((col, bits, rhs))
        pivots = reduced
    pivots.sort()
    pivot_cols = {col for col, _, _ in pivots}
    particular = [0] * nc
    for col, _, rhs in pivots:
        particular[col] = rhs
    kernel = []
    for free in range(nc):
        if free in pivot_cols:
            continue
        v = [0] * nc
        v[free] = 1
        for col, pbits, _ in pivots:
            if (pbits >> free) & 1:
                v[col] = 1
        kernel.append(tuple(v))
    return Gf2Solution(tuple(particular), tuple(kernel))
