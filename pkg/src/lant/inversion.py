"""Exact inverse of the square factorization matrix F_n(z_n).

F_n(z_n) is unit lower triangular. Its inverse is the ordered product of the
extended elementary matrices ``E_i = M_i(2) - f_i e_i^T``: left-multiplying by
``E_i`` subtracts ``f_i[r]`` times row ``i`` from every row ``r != i``, which
clears column ``i`` below the diagonal. Clearing columns 1, 2, ..., n in turn
reduces F to the identity, so ``F^{-1} = E_n ... E_2 E_1``.

Everything here is exact Python integer arithmetic, except
:func:`lpe_via_inverse`, which pushes the float vector ``ln z_n`` through the
same sequence of eliminations.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .core import FactorizationMatrix, SparseColumn, candidate_factorization, factorization_vector
from .errors import InvalidArgument


@dataclass(frozen=True, eq=False)
class IntegerTriangularMatrix:
    """Row-sparse unit lower triangular integer matrix.

    ``rows[r - 1]`` maps 1-based column -> nonzero value for row ``r``.
    """

    n: int
    rows: tuple[dict, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise InvalidArgument("need exactly n rows")
        for r, row in enumerate(self.rows, start=1):
            if row.get(r) != 1:
                raise InvalidArgument(f"diagonal entry at row {r} is not 1")
            if any(c > r or c < 1 for c in row):
                raise InvalidArgument(f"row {r} has entries above the diagonal")
            if any(v == 0 for v in row.values()):
                raise InvalidArgument("explicit zero stored")

    def __eq__(self, other):
        if not isinstance(other, IntegerTriangularMatrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    __hash__ = None

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        return self.rows[r - 1].get(c, 0)

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def row(self, r: int) -> list[int]:
        out = [0] * self.n
        for c, v in self.rows[r - 1].items():
            out[c - 1] = v
        return out

    def to_lists(self) -> list[list[int]]:
        return [self.row(r) for r in range(1, self.n + 1)]

    def determinant(self) -> int:
        d = 1
        for r, row in enumerate(self.rows, start=1):
            d *= row[r]
        return d

    def matmul(self, F: FactorizationMatrix) -> list[list[int]]:
        """Exact product ``self @ F`` as nested lists of Python ints."""
        if F.n != self.n:
            raise InvalidArgument("dimension mismatch")
        cols = [dict(zip(c.rows, c.values)) for c in F.columns]
        return [
            [sum(v * col.get(c, 0) for c, v in row.items()) for col in cols]
            for row in self.rows
        ]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["row", *range(1, self.n + 1)])
        for r in range(1, self.n + 1):
            w.writerow([r, *self.row(r)])
        return buf.getvalue()

    @classmethod
    def from_rows(cls, rows) -> "IntegerTriangularMatrix":
        return cls(len(rows), tuple({c: v for c, v in r.items() if v} for r in rows))


@dataclass(frozen=True)
class ExtendedElementary:
    """``E_i = M_i(2) - f_{i|n} e_i^T`` kept as the column it eliminates."""

    i: int
    n: int
    column: SparseColumn

    def dense(self) -> list[list[int]]:
        out = [[int(r == c) for c in range(self.n)] for r in range(self.n)]
        out[self.i - 1][self.i - 1] = 2
        for r, v in self.column.entries:
            out[r - 1][self.i - 1] -= v
        return out

    def apply_left(self, rows: list[dict]) -> None:
        """In place ``rows <- E_i rows`` for a row-sparse accumulator.

        Diagonal entry of E_i is ``2 - f_i[i] = 1``, so row ``i`` itself is
        left alone and only rows ``r != i`` in the support of ``f_i`` change.
        """
        pivot = rows[self.i - 1]
        for r, v in self.column.entries:
            if r == self.i:
                continue
            target = rows[r - 1]
            for c, x in pivot.items():
                y = target.get(c, 0) - v * x
                if y:
                    target[c] = y
                else:
                    del target[c]

    def apply_to_vector(self, x: np.ndarray) -> None:
        """In place ``x <- E_i x`` for a dense float vector (0-based)."""
        xi = x[self.i - 1]
        if xi == 0:
            return
        rows = np.asarray(self.column.rows) - 1
        vals = np.asarray(self.column.values, dtype=float)
        mask = rows != self.i - 1
        x[rows[mask]] -= vals[mask] * xi


def extended_elementary(i: int, n: int) -> ExtendedElementary:
    return ExtendedElementary(i, n, factorization_vector(i, n))


def invert_factorization_matrix(n: int) -> IntegerTriangularMatrix:
    """``[F_n(z_n)]^{-1}`` as the product ``E_n ... E_1`` accumulated from I_n."""
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    acc = [{r: 1} for r in range(1, n + 1)]
    for i in range(1, n + 1):
        extended_elementary(i, n).apply_left(acc)
    return IntegerTriangularMatrix(n, tuple(acc))


def _rows_of(F: FactorizationMatrix) -> list[dict]:
    rows: list[dict] = [{} for _ in range(F.n)]
    for j, col in enumerate(F.columns, start=1):
        for r, v in col.entries:
            rows[r - 1][j] = v
    return rows


def invert_by_forward_substitution(n: int) -> IntegerTriangularMatrix:
    """Inverse of F_n(z_n) by sparse forward substitution.

    With ``X = F^{-1}`` and F unit lower triangular, ``F X = I`` gives
    ``X[r] = e_r - sum_{k < r} F[r, k] X[k]``, solved top to bottom.
    """
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    F = _rows_of(candidate_factorization(range(1, n + 1), n))
    X: list[dict] = []
    for r in range(1, n + 1):
        acc = {r: 1}
        for k, f in F[r - 1].items():
            if k == r:
                continue
            for c, x in X[k - 1].items():
                acc[c] = acc.get(c, 0) - f * x
        X.append({c: v for c, v in acc.items() if v})
    return IntegerTriangularMatrix(n, tuple(X))


def sieve_identity(n: int) -> list[list[int]]:
    """``[F_n(z_n)]^{-1} F_n(p_n)``: column j is the indicator of the j-th prime."""
    from .core import primes_up_to

    return invert_factorization_matrix(n).matmul(candidate_factorization(primes_up_to(n), n))


def _lpe_compute(n: int) -> np.ndarray:
    x = np.log(np.arange(1, n + 1, dtype=float))
    for i in range(1, n + 1):
        # columns of composites leave x untouched once their estimate is 0;
        # skipping the construction keeps large n cheap
        if x[i - 1] == 0.0:
            continue
        extended_elementary(i, n).apply_to_vector(x)
    return x


# F_n(z_n) is the leading n x n block of F_N(z_N) and E_i only touches rows
# above i, so the first n entries for any N >= n are bit-for-bit the result
# for n. One growing vector therefore serves every smaller n.
_lpe_store = np.zeros(0)


def lpe_via_inverse(n: int) -> np.ndarray:
    """``[F_n(z_n)]^{-1} ln z_n`` by applying E_1, ..., E_n to ``ln z_n``."""
    global _lpe_store
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    n = int(n)
    if n > len(_lpe_store):
        # grow geometrically so ascending sweeps stay linear overall
        _lpe_store = _lpe_compute(max(n, 2 * len(_lpe_store)))
    return _lpe_store[:n].copy()
