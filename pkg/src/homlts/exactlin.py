"""Deterministic dense linear algebra over exact rationals.

Every computation in this package that needs a rank, a kernel, or a
particular solution goes through this module.  Scalars are
``fractions.Fraction`` values, so nothing is ever rounded; all outputs
are canonical (the reduced row-echelon form is unique, and the kernel
basis follows the free-variable convention), which makes downstream
results reproducible bit for bit.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(value) -> Fraction:
    """Coerce an int, string like ``"2/3"`` or Fraction to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot use {value!r} as an exact scalar")


class Matrix:
    """Immutable dense matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[Fraction]):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(entries) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, "
                f"got {len(entries)}"
            )
        self.rows = rows
        self.cols = cols
        self._entries = tuple(entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            flat.extend(as_scalar(x) for x in r)
        return cls(nrows, ncols, flat)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], rows: Optional[int] = None) -> "Matrix":
        ncols = len(cols)
        if ncols == 0:
            if rows is None:
                raise ValueError("row count required for a matrix with no columns")
            return cls(rows, 0, ())
        nrows = len(cols[0])
        return cls.from_rows([[cols[j][i] for j in range(ncols)] for i in range(nrows)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def diagonal(cls, diag: Sequence) -> "Matrix":
        d = [as_scalar(x) for x in diag]
        n = len(d)
        return cls(n, n, [d[i] if i == j else ZERO for i in range(n) for j in range(n)])

    def entry(self, i: int, j: int) -> Fraction:
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self._entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return tuple(self._entries[i * self.cols + j] for i in range(self.rows))

    def columns(self) -> list:
        return [self.col(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            [self._entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self._entries)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def apply(self, vec: Sequence[Fraction]) -> tuple:
        """Matrix-vector product, returning a tuple of Fractions."""
        if len(vec) != self.cols:
            raise ValueError(f"vector length {len(vec)} != {self.cols} columns")
        e = self._entries
        c = self.cols
        out = []
        for i in range(self.rows):
            base = i * c
            acc = ZERO
            for j, v in enumerate(vec):
                if v:
                    acc += e[base + j] * v
            out.append(acc)
        return tuple(out)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self._entries, other._entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self._entries, other._entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self._entries])

    def __mul__(self, scalar) -> "Matrix":
        s = as_scalar(scalar)
        return Matrix(self.rows, self.cols, [a * s for a in self._entries])

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        n, k, m = self.rows, self.cols, other.cols
        a, b = self._entries, other._entries
        out = [ZERO] * (n * m)
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            for t, av in enumerate(arow):
                if av:
                    brow = b[t * m : (t + 1) * m]
                    base = i * m
                    for j, bv in enumerate(brow):
                        if bv:
                            out[base + j] += av * bv
        return Matrix(n, m, out)

    def _check_same_shape(self, other: "Matrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: {body})"


class RrefResult(NamedTuple):
    reduced: Matrix
    pivot_cols: tuple
    rank: int


def rref(m: Matrix) -> RrefResult:
    """Reduced row-echelon form, pivot columns and rank.

    Plain Gauss-Jordan elimination with rational normalization.  The
    result is the unique RREF of the input, so it does not depend on
    pivoting choices.
    """
    rows = [list(m.row(i)) for i in range(m.rows)]
    ncols = m.cols
    pivots = []
    pr = 0
    for pc in range(ncols):
        pivot_row = None
        for r in range(pr, len(rows)):
            if rows[r][pc] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
        inv = ONE / rows[pr][pc]
        if inv != 1:
            rows[pr] = [x * inv for x in rows[pr]]
        prow = rows[pr]
        for r in range(len(rows)):
            if r == pr:
                continue
            f = rows[r][pc]
            if f:
                rows[r] = [x - f * y for x, y in zip(rows[r], prow)]
        pivots.append(pc)
        pr += 1
        if pr == len(rows):
            break
    flat = [x for row in rows for x in row]
    return RrefResult(Matrix(m.rows, ncols, flat), tuple(pivots), len(pivots))


def nullspace_basis(m: Matrix) -> Matrix:
    """Canonical basis of the right kernel, one column per free variable.

    Free variables are taken in ascending column order and set to 1 one
    at a time, with the other free variables 0; pivot variables are then
    forced.  The resulting basis depends only on the kernel subspace.
    """
    red, pivots, rank = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    cols = []
    for f in free:
        vec = [ZERO] * m.cols
        vec[f] = ONE
        for i, pc in enumerate(pivots):
            vec[pc] = -red.entry(i, f)
        cols.append(vec)
    return Matrix.from_columns(cols, rows=m.cols)


def solve_linear(a: Matrix, b: Sequence[Fraction]) -> Optional[tuple]:
    """One exact solution of ``a x = b``, or None when inconsistent.

    Returns the canonical particular solution with every free variable
    equal to zero.
    """
    if a.rows != len(b):
        from .errors import ContractViolationError

        raise ContractViolationError(
            f"right-hand side has length {len(b)}, matrix has {a.rows} rows"
        )
    aug = Matrix(
        a.rows,
        a.cols + 1,
        [x for i in range(a.rows) for x in (*a.row(i), as_scalar(b[i]))],
    )
    red, pivots, rank = rref(aug)
    if pivots and pivots[-1] == a.cols:
        return None
    x = [ZERO] * a.cols
    for i, pc in enumerate(pivots):
        x[pc] = red.entry(i, a.cols)
    return tuple(x)


def rank(m: Matrix) -> int:
    return rref(m).rank
