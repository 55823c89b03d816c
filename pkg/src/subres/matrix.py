"""Exact dense matrices and a fraction-free determinant.

The determinant uses Bareiss elimination: every division is by the
previous pivot and is exact in the coefficient ring, so the routine works
unchanged over the rationals and over parameter polynomials.
"""

from __future__ import annotations

from typing import Callable, Iterable, List, Sequence

from .errors import DomainError, StructuralError
from .scalar import ParamPoly, Rat, Scalar, as_scalar, is_rational


def _div(a: Scalar, b: Scalar) -> Scalar:
    if isinstance(a, ParamPoly) or isinstance(b, ParamPoly):
        if not isinstance(a, ParamPoly):
            a = ParamPoly.constant(a)
        return a / b
    return a / b


class ExactMatrix:
    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        data = [[as_scalar(v) for v in row] for row in rows]
        if data and any(len(r) != len(data[0]) for r in data):
            raise DomainError("ragged rows")
        self.rows = data
        self.nrows = len(data)
        self.ncols = len(data[0]) if data else 0

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[Rat(1) if i == j else Rat(0) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "ExactMatrix":
        return cls([[Rat(0)] * ncols for _ in range(nrows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.nrows == other.nrows
            and self.ncols == other.ncols
            and all(
                a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
            )
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise DomainError("dimension mismatch in matrix product")
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc: Scalar = Rat(0)
                for k in range(self.ncols):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return ExactMatrix(out)

    def submatrix(self, drop_row: int, drop_col: int) -> "ExactMatrix":
        return ExactMatrix(
            [
                [v for j, v in enumerate(row) if j != drop_col]
                for i, row in enumerate(self.rows)
                if i != drop_row
            ]
        )

    def select(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix([[self.rows[i][j] for j in col_idx] for i in row_idx])

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)])

    def det(self) -> Scalar:
        return det_exact(self)

    def map(self, fn: Callable[[Scalar], Scalar]) -> "ExactMatrix":
        return ExactMatrix([[fn(v) for v in row] for row in self.rows])

    def nullspace(self) -> List[List[Scalar]]:
        """Kernel basis via Gauss-Jordan; one vector per free column.

        A column whose entries are all zero yields the plain unit vector,
        so distinguished generators survive untouched.
        """
        m = [list(r) for r in self.rows]
        nr, nc = self.nrows, self.ncols
        pivots: List[int] = []
        r = 0
        for c in range(nc):
            p = next((i for i in range(r, nr) if m[i][c]), None)
            if p is None:
                continue
            m[r], m[p] = m[p], m[r]
            inv = m[r][c]
            m[r] = [_div(v, inv) for v in m[r]]
            for i in range(nr):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == nr:
                break
        free = [c for c in range(nc) if c not in pivots]
        basis = []
        for c in free:
            v: List[Scalar] = [Rat(0)] * nc
            v[c] = Rat(1)
            for i, pc in enumerate(pivots):
                v[pc] = -m[i][c]
            basis.append(v)
        return basis

    def __repr__(self):
        return "ExactMatrix(%d x %d)" % (self.nrows, self.ncols)

    def pretty(self) -> str:
        return "\n".join("[" + ", ".join(str(v) for v in row) + "]" for row in self.rows)


def det_exact(m: ExactMatrix) -> Scalar:
    """Determinant by fraction-free Bareiss elimination.

    Row swaps track the sign; a zero pivot column means determinant zero.
    The empty matrix has determinant one.
    """
    if m.nrows != m.ncols:
        raise DomainError("determinant of a non-square matrix (%d x %d)" % (m.nrows, m.ncols))
    n = m.nrows
    if n == 0:
        return Rat(1)
    a = [list(row) for row in m.rows]
    sign = 1
    prev: Scalar = Rat(1)
    for k in range(n - 1):
        if not a[k][k]:
            p = next((i for i in range(k + 1, n) if a[i][k]), None)
            if p is None:
                return Rat(0)
            a[k], a[p] = a[p], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = _div(pivot * row_i[j] - aik * row_k[j], prev)
            row_i[k] = Rat(0)
        prev = pivot
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]
