"""Dense exact linear algebra over a tagged field context.

Matrix works with any context exposing zero/one/add/sub/mul/inv, so the
same elimination code serves both the prime field and its extensions.
Pivoting always takes the first nonzero candidate: exact arithmetic has no
stability concerns, and a fixed rule keeps every run identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class SingularMatrix(ValueError):
    """Square system whose rank is below its dimension."""


@dataclass
class Matrix:
    """A rectangular grid of elements of one field context."""

    field: object
    rows: list[list]

    def __post_init__(self) -> None:
        if self.rows:
            w = len(self.rows[0])
            if any(len(r) != w for r in self.rows):
                raise ValueError("rows must all have the same length")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        zero, one = field.zero, field.one
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    def copy(self) -> "Matrix":
        return Matrix(self.field, [list(r) for r in self.rows])

    def take_columns(self, cols: Iterable[int]) -> "Matrix":
        sel = list(cols)
        for c in sel:
            if not 0 <= c < self.ncols:
                raise IndexError(f"column {c} out of range for {self.ncols} columns")
        return Matrix(self.field, [[row[c] for c in sel] for row in self.rows])

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [list(col) for col in zip(*self.rows)] if self.rows else [])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        f = self.field
        add, mul, zero = f.add, f.mul, f.zero
        out = []
        for row in self.rows:
            new = []
            for j in range(other.ncols):
                acc = zero
                for l, v in enumerate(row):
                    if v != zero:
                        acc = add(acc, mul(v, other.rows[l][j]))
                new.append(acc)
            out.append(new)
        return Matrix(f, out)

    def left_multiply(self, vector: Sequence) -> list:
        """Row vector times matrix."""
        if len(vector) != self.nrows:
            raise ValueError(f"vector length {len(vector)} does not match {self.nrows} rows")
        f = self.field
        add, mul, zero = f.add, f.mul, f.zero
        out = []
        for j in range(self.ncols):
            acc = zero
            for l, v in enumerate(vector):
                if v != zero:
                    acc = add(acc, mul(v, self.rows[l][j]))
            out.append(acc)
        return out

    def rank(self) -> int:
        f = self.field
        zero = f.zero
        mul, sub, inv = f.mul, f.sub, f.inv
        rows = [list(r) for r in self.rows]
        m = len(rows)
        pr = 0
        for c in range(self.ncols):
            piv = None
            for i in range(pr, m):
                if rows[i][c] != zero:
                    piv = i
                    break
            if piv is None:
                continue
            rows[pr], rows[piv] = rows[piv], rows[pr]
            prow = rows[pr]
            pinv = inv(prow[c])
            for i in range(pr + 1, m):
                v = rows[i][c]
                if v != zero:
                    fac = mul(v, pinv)
                    rows[i] = [sub(a, mul(fac, p)) for a, p in zip(rows[i], prow)]
            pr += 1
            if pr == m:
                break
        return pr

    def _rref(self, rows: list[list], pivot_width: int) -> list[int]:
        """Full in-place reduction; pivots searched in the first pivot_width
        columns only.  Returns the pivot column list."""
        f = self.field
        zero = f.zero
        mul, sub, inv = f.mul, f.sub, f.inv
        m = len(rows)
        pivots: list[int] = []
        pr = 0
        for c in range(pivot_width):
            piv = None
            for i in range(pr, m):
                if rows[i][c] != zero:
                    piv = i
                    break
            if piv is None:
                continue
            rows[pr], rows[piv] = rows[piv], rows[pr]
            pinv = inv(rows[pr][c])
            rows[pr] = [mul(pinv, v) for v in rows[pr]]
            prow = rows[pr]
            for i in range(m):
                if i != pr:
                    fac = rows[i][c]
                    if fac != zero:
                        rows[i] = [sub(a, mul(fac, p)) for a, p in zip(rows[i], prow)]
            pivots.append(c)
            pr += 1
            if pr == m:
                break
        return pivots

    def solve(self, rhs: Sequence) -> list:
        """Solution of self @ x = rhs for a square invertible matrix."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError(f"solve needs a square matrix, got {n}x{self.ncols}")
        if len(rhs) != n:
            raise ValueError(f"right-hand side length {len(rhs)} does not match {n}")
        aug = [list(r) + [v] for r, v in zip(self.rows, rhs)]
        pivots = self._rref(aug, n)
        if len(pivots) < n:
            raise SingularMatrix(f"matrix rank {len(pivots)} < {n}")
        return [row[n] for row in aug]

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError(f"inverse needs a square matrix, got {n}x{self.ncols}")
        zero, one = self.field.zero, self.field.one
        aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.rows)]
        pivots = self._rref(aug, n)
        if len(pivots) < n:
            raise SingularMatrix(f"matrix rank {len(pivots)} < {n}")
        return Matrix(self.field, [row[n:] for row in aug])

    def row_space_basis(self) -> "Matrix":
        """Reduced basis of the row space (possibly with zero rows dropped)."""
        rows = [list(r) for r in self.rows]
        self._rref(rows, self.ncols)
        zero = self.field.zero
        basis = [r for r in rows if any(v != zero for v in r)]
        return Matrix(self.field, basis)


class RankTracker:
    """Incremental echelon form of coordinate vectors over F_q."""

    def __init__(self, q: int) -> None:
        self.q = q
        self._rows: list[tuple[int, list[int]]] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, coords: Sequence[int]) -> bool:
        """Reduce coords against the basis; keep and report True if independent."""
        q = self.q
        v = [c % q for c in coords]
        for piv, row in self._rows:
            c = v[piv]
            if c:
                v = [(a - c * b) % q for a, b in zip(v, row)]
        piv = next((i for i, a in enumerate(v) if a), None)
        if piv is None:
            return False
        inv = pow(v[piv], -1, q)
        self._rows.append((piv, [(a * inv) % q for a in v]))
        return True


def base_rank(field, points: Iterable) -> int:
    """Rank over F_q of the coordinate vectors of extension elements."""
    tracker = RankTracker(field.q)
    for p in points:
        tracker.add(p)
    return tracker.rank
