"""Vectors and candidate factorization matrices.

Row ``r`` of a factorization matrix over candidates ``q`` holds, for every
``q_j``, the number of powers ``q_j**k`` (k >= 1) dividing ``r``, i.e. the
exponent ``q_j`` would carry in the factorization of ``r`` if it were prime.
Candidate 1 is admitted and gets the all-ones column.

All indices exposed by this module are 1-based, matching the mathematical
objects; arrays returned by ``dense()`` are 0-based as usual.
"""
from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy import sparse

from .errors import InvalidArgument

__all__ = [
    "NaturalVector",
    "PrimeVector",
    "CandidatePrimeVector",
    "SparseColumn",
    "FactorizationMatrix",
    "naturals",
    "primes_up_to",
    "candidates",
    "periodic_elementary",
    "factorization_vector",
    "candidate_factorization",
    "prime_factorization_matrix",
    "max_power_exponent",
    "factorization_entry",
]


def _check_positive(name: str, value: int) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise InvalidArgument(f"{name} must be an integer, got {value!r}")
    if value < 1:
        raise InvalidArgument(f"{name} must be >= 1, got {value}")
    return int(value)


@dataclass(frozen=True)
class NaturalVector:
    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        _check_positive("n", self.n)
        if self.values != tuple(range(1, self.n + 1)):
            raise InvalidArgument("natural vector must hold 1..n in order")

    def __len__(self):
        return self.n

    def logs(self) -> np.ndarray:
        return np.log(np.arange(1, self.n + 1, dtype=float))


@dataclass(frozen=True, eq=False)
class CandidatePrimeVector:
    """Strictly ascending distinct integers in ``[1, n]``."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        _check_positive("n", self.n)
        prev = 0
        for v in self.values:
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise InvalidArgument(f"candidate {v!r} is not an integer")
            if not 1 <= v <= self.n:
                raise InvalidArgument(f"candidate {v} outside [1, {self.n}]")
            if v == prev:
                raise InvalidArgument(f"duplicate candidate {v}")
            if v < prev:
                raise InvalidArgument("candidates must be ascending")
            prev = v
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    def __len__(self):
        return len(self.values)

    # a PrimeVector equals the plain candidate vector holding the same values
    def __eq__(self, other):
        if not isinstance(other, CandidatePrimeVector):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __hash__(self):
        return hash((self.n, self.values))

    def __iter__(self):
        return iter(self.values)

    @property
    def m(self) -> int:
        return len(self.values)

    def logs(self) -> np.ndarray:
        return np.log(np.asarray(self.values, dtype=float))


@dataclass(frozen=True, eq=False)
class PrimeVector(CandidatePrimeVector):
    """All primes <= n, ascending. The prime check itself lives in the tests."""

    def __post_init__(self):
        super().__post_init__()
        if self.values and self.values[0] < 2:
            raise InvalidArgument("1 is not prime")


def naturals(n: int) -> NaturalVector:
    n = _check_positive("n", n)
    return NaturalVector(n, tuple(range(1, n + 1)))


def _sieve_mask(n: int) -> np.ndarray:
    is_prime = np.ones(n + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, int(n**0.5) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return is_prime


def primes_up_to(n: int) -> PrimeVector:
    n = _check_positive("n", n)
    return PrimeVector(n, tuple(int(p) for p in np.flatnonzero(_sieve_mask(n))))


def candidates(values: Iterable[int], n: int) -> CandidatePrimeVector:
    """Normalize an arbitrary iterable into a candidate vector (sorted; duplicates rejected)."""
    vals = list(values)
    if len(set(vals)) != len(vals):
        dup = sorted(v for v in set(vals) if vals.count(v) > 1)
        raise InvalidArgument(f"duplicate candidates: {dup}")
    return CandidatePrimeVector(n, tuple(sorted(vals)))


@dataclass(frozen=True)
class SparseColumn:
    n: int
    rows: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != len(self.values):
            raise InvalidArgument("rows and values differ in length")
        prev = 0
        for r, v in zip(self.rows, self.values):
            if r <= prev or r > self.n:
                raise InvalidArgument("rows must be strictly ascending within [1, n]")
            if v < 1:
                raise InvalidArgument("stored values must be >= 1")
            prev = r

    @classmethod
    def from_dense(cls, dense: Sequence[int]) -> "SparseColumn":
        dense = np.asarray(dense)
        nz = np.flatnonzero(dense)
        return cls(len(dense), tuple(int(r) + 1 for r in nz), tuple(int(dense[r]) for r in nz))

    @property
    def entries(self) -> list[tuple[int, int]]:
        return list(zip(self.rows, self.values))

    @property
    def nnz(self) -> int:
        return len(self.rows)

    def __getitem__(self, row: int) -> int:
        """Entry at 1-based ``row``."""
        if not 1 <= row <= self.n:
            raise IndexError(row)
        i = np.searchsorted(self.rows, row)
        if i < len(self.rows) and self.rows[i] == row:
            return self.values[i]
        return 0

    def dense(self) -> np.ndarray:
        out = np.zeros(self.n, dtype=np.int64)
        if self.rows:
            out[np.asarray(self.rows) - 1] = self.values
        return out


def max_power_exponent(i: int, n: int) -> int:
    """floor(log_i n) by repeated multiplication; exact at i**k == n."""
    if i < 2:
        raise InvalidArgument("base must be >= 2")
    k, p = 0, i
    while p <= n:
        k += 1
        p *= i
    return k


def factorization_entry(i: int, r: int) -> int:
    """Entry of f_{i|n} at row r (independent of n as long as r <= n)."""
    if i == 1:
        return 1
    k, power = 0, i
    while r % power == 0:
        k += 1
        power *= i
    return k


def _check_index(i: int, n: int) -> tuple[int, int]:
    n = _check_positive("n", n)
    i = _check_positive("i", i)
    if i > n:
        raise InvalidArgument(f"index {i} exceeds dimension {n}")
    return i, n


def periodic_elementary(i: int, n: int) -> SparseColumn:
    i, n = _check_index(i, n)
    rows = tuple(range(i, n + 1, i))
    return SparseColumn(n, rows, (1,) * len(rows))


def factorization_vector(i: int, n: int) -> SparseColumn:
    i, n = _check_index(i, n)
    if i == 1:
        return SparseColumn(n, tuple(range(1, n + 1)), (1,) * n)
    # counts[k - 1] is the entry at row k*i; row k*i gains one more unit for
    # every i**j (j >= 2) dividing it, i.e. for every i**(j-1) dividing k
    counts = np.ones(n // i, dtype=np.int64)
    step, power = 1, i * i
    while power <= n:
        step *= i
        counts[step - 1 :: step] += 1
        power *= i
    rows = range(i, (n // i) * i + 1, i)
    return SparseColumn(n, tuple(rows), tuple(counts.tolist()))


@dataclass(frozen=True, eq=False)
class FactorizationMatrix:
    n: int
    q: CandidatePrimeVector
    columns: tuple[SparseColumn, ...]

    def __post_init__(self):
        if len(self.columns) != len(self.q):
            raise InvalidArgument("one column per candidate required")
        if any(c.n != self.n for c in self.columns):
            raise InvalidArgument("column dimension mismatch")

    @property
    def shape(self) -> tuple[int, int]:
        return self.n, len(self.columns)

    def __eq__(self, other):
        if not isinstance(other, FactorizationMatrix):
            return NotImplemented
        return self.n == other.n and self.q == other.q and self.columns == other.columns

    def __hash__(self):
        return hash((self.n, self.q, self.columns))

    def entry(self, row: int, col: int) -> int:
        """1-based (row, col) entry."""
        return self.columns[col - 1][row]

    def dense(self) -> np.ndarray:
        out = np.zeros(self.shape, dtype=np.int64)
        for j, c in enumerate(self.columns):
            if c.rows:
                out[np.asarray(c.rows) - 1, j] = c.values
        return out

    def to_sparse(self) -> sparse.csc_matrix:
        indptr = np.zeros(len(self.columns) + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([c.nnz for c in self.columns])
        rows = np.fromiter((r - 1 for c in self.columns for r in c.rows), dtype=np.int64, count=indptr[-1])
        vals = np.fromiter((v for c in self.columns for v in c.values), dtype=np.int64, count=indptr[-1])
        return sparse.csc_matrix((vals, rows, indptr), shape=self.shape)

    def gram(self) -> np.ndarray:
        """F^T F, assembled in exact int64 arithmetic."""
        s = self.to_sparse()
        return np.asarray((s.T @ s).todense(), dtype=np.int64)

    def matvec(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape != (len(self.columns),):
            raise InvalidArgument(f"expected vector of length {len(self.columns)}, got shape {x.shape}")
        return self.to_sparse() @ x

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["row", *self.q.values])
        for r, line in enumerate(self.dense().tolist(), start=1):
            w.writerow([r, *line])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "FactorizationMatrix":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        if not header or header[0] != "row":
            raise InvalidArgument("matrix CSV must start with a 'row' column")
        qs = [int(h) for h in header[1:]]
        body = [[int(x) for x in line] for line in reader if line]
        n = len(body)
        if [line[0] for line in body] != list(range(1, n + 1)):
            raise InvalidArgument("matrix CSV rows must be numbered 1..n")
        dense = np.array([line[1:] for line in body], dtype=np.int64).reshape(n, len(qs))
        q = CandidatePrimeVector(n, tuple(qs))
        cols = tuple(SparseColumn.from_dense(dense[:, j]) for j in range(len(qs)))
        return cls(n, q, cols)


def candidate_factorization(q: CandidatePrimeVector | Iterable[int], n: int, workers: int = 1) -> FactorizationMatrix:
    """F_n(q): column j is the factorization vector of q_j."""
    n = _check_positive("n", n)
    if not isinstance(q, CandidatePrimeVector):
        q = candidates(q, n)
    elif q.n != n:
        q = CandidatePrimeVector(n, q.values)
    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            cols = tuple(ex.map(lambda v: factorization_vector(v, n), q.values))
    else:
        cols = tuple(factorization_vector(v, n) for v in q.values)
    return FactorizationMatrix(n, q, cols)


def prime_factorization_matrix(n: int) -> FactorizationMatrix:
    n = _check_positive("n", n)
    if n < 2:
        raise InvalidArgument("prime factorization matrix needs n >= 2 (no primes <= 1)")
    return candidate_factorization(primes_up_to(n), n)
