import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lant import oracle
from lant.core import (
    CandidatePrimeVector,
    FactorizationMatrix,
    SparseColumn,
    candidate_factorization,
    candidates,
    factorization_entry,
    factorization_vector,
    max_power_exponent,
    naturals,
    periodic_elementary,
    prime_factorization_matrix,
    primes_up_to,
)
from lant.errors import InvalidArgument

from conftest import F6_P6, PAPER_CANDIDATES_10, lnz


@pytest.mark.parametrize("n", [1, 6, 20])
def test_naturals(n):
    assert naturals(n).values == tuple(range(1, n + 1))


def test_naturals_rejects_zero():
    with pytest.raises(InvalidArgument):
        naturals(0)


@pytest.mark.parametrize(
    "n, expected",
    [(10, [2, 3, 5, 7]), (1, []), (20, [2, 3, 5, 7, 11, 13, 17, 19])],
)
def test_primes_up_to(n, expected):
    assert list(primes_up_to(n).values) == expected


@pytest.mark.parametrize("n", [2, 3, 97, 100, 1000, 7919])
def test_primes_match_sieve_oracle(n):
    assert list(primes_up_to(n).values) == oracle.sieve(n)


def test_candidate_vector_validation():
    CandidatePrimeVector(10, (1, 2, 10))
    with pytest.raises(InvalidArgument):
        CandidatePrimeVector(10, (2, 2))
    with pytest.raises(InvalidArgument):
        CandidatePrimeVector(10, (3, 2))
    with pytest.raises(InvalidArgument):
        CandidatePrimeVector(10, (0, 2))
    with pytest.raises(InvalidArgument):
        CandidatePrimeVector(10, (11,))
    with pytest.raises(InvalidArgument):
        candidates([5, 2, 5], 10)
    assert candidates([5, 2, 3], 10).values == (2, 3, 5)


@pytest.mark.parametrize(
    "i, n, rows",
    [(3, 10, (3, 6, 9)), (1, 4, (1, 2, 3, 4)), (7, 10, (7,))],
)
def test_periodic_elementary(i, n, rows):
    col = periodic_elementary(i, n)
    assert col.rows == rows
    assert set(col.values) == {1}


def test_periodic_elementary_out_of_range():
    with pytest.raises(InvalidArgument):
        periodic_elementary(11, 10)


def test_factorization_vector_examples():
    assert factorization_vector(2, 10).dense().tolist() == [0, 1, 0, 2, 0, 1, 0, 3, 0, 1]
    col = factorization_vector(4, 10)
    assert col.rows == (4, 8) and col.values == (1, 1)
    assert factorization_vector(1, 10).dense().tolist() == [1] * 10


@pytest.mark.parametrize("i, n", [(0, 10), (11, 10)])
def test_factorization_vector_rejects(i, n):
    with pytest.raises(InvalidArgument):
        factorization_vector(i, n)


def test_factorization_vector_is_sum_of_periodic_vectors():
    for i in range(2, 30):
        for n in (i, 30, 64, 81, 100):
            if i > n:
                continue
            k = max_power_exponent(i, n)
            total = sum(periodic_elementary(i**j, n).dense() for j in range(1, k + 1))
            assert factorization_vector(i, n).dense().tolist() == list(total)


@pytest.mark.parametrize("i, n, k", [(2, 8, 3), (2, 7, 2), (3, 81, 4), (3, 80, 3), (10, 1000, 3), (7, 6, 0)])
def test_max_power_exponent_exact_boundaries(i, n, k):
    assert max_power_exponent(i, n) == k


@pytest.mark.parametrize("name", sorted(PAPER_CANDIDATES_10))
def test_candidate_factorization_paper_examples(name):
    q, expected = PAPER_CANDIDATES_10[name]
    assert candidate_factorization(q, 10).dense().tolist() == expected


def test_prime_factorization_matrix_n6():
    assert prime_factorization_matrix(6).dense().tolist() == F6_P6


def test_row_360():
    F = prime_factorization_matrix(360)
    row = F.dense()[359]
    assert row[:3].tolist() == [3, 2, 1]
    assert not row[3:].any()


def test_prime_factorization_matrix_n20_shape():
    assert prime_factorization_matrix(20).shape == (20, 8)


def test_prime_factorization_matrix_rejects_n1():
    with pytest.raises(InvalidArgument):
        prime_factorization_matrix(1)


@pytest.mark.parametrize("n", [2, 30, 360, 1024])
def test_reconstruction(n):
    F = prime_factorization_matrix(n)
    D = F.dense()
    for r in range(1, n + 1):
        assert math.prod(p ** int(e) for p, e in zip(F.q.values, D[r - 1])) == r


def test_log_identity():
    n = 10_000
    F = prime_factorization_matrix(n)
    assert np.max(np.abs(lnz(n) - F.matvec(F.q.logs()))) < 1e-12


@pytest.mark.parametrize("n", [1, 2, 10, 64])
def test_square_candidate_matrix_is_unit_lower_triangular(n):
    D = candidate_factorization(range(1, n + 1), n).dense()
    assert np.all(np.diag(D) == 1)
    assert not np.triu(D, 1).any()


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 400), st.data())
def test_prime_columns_are_valuations(n, data):
    p = data.draw(st.sampled_from(oracle.sieve(n)))
    col = factorization_vector(p, n).dense()
    assert col.tolist() == [oracle.valuation(p, r) for r in range(1, n + 1)]


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 2000), st.data())
def test_column_counts(n, data):
    i = data.draw(st.integers(2, n))
    expected = 0
    power = i
    while power <= n:
        expected += n // power
        power *= i
    col = factorization_vector(i, n)
    # sum_j floor(n / i**j) counts stored units; distinct rows are just the multiples of i
    assert sum(col.values) == expected
    assert col.nnz == n // i


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 300), st.integers(1, 300))
def test_factorization_entry_matches_column(i, r):
    n = max(i, r)
    assert factorization_entry(i, r) == factorization_vector(i, n)[r]


def test_matrix_entries_bounded_by_powers():
    n = 200
    F = candidate_factorization([2, 3, 4, 6, 9, 10, 150], n)
    for q, col in zip(F.q.values, F.columns):
        assert all(q**v <= n for v in col.values)


def test_sparse_column_validation():
    with pytest.raises(InvalidArgument):
        SparseColumn(5, (2, 2), (1, 1))
    with pytest.raises(InvalidArgument):
        SparseColumn(5, (6,), (1,))
    with pytest.raises(InvalidArgument):
        SparseColumn(5, (1,), (0,))
    col = SparseColumn.from_dense([0, 3, 0, 1])
    assert col.entries == [(2, 3), (4, 1)]
    assert col[2] == 3 and col[3] == 0


def test_csv_layout():
    text = candidate_factorization([2, 5], 10).to_csv().splitlines()
    assert text[0] == "row,2,5"
    assert text[4] == "4,2,0"
    assert len(text) == 11


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 60), st.data())
def test_csv_round_trip(n, data):
    q = data.draw(st.lists(st.integers(1, n), min_size=1, max_size=n, unique=True))
    F = candidate_factorization(q, n)
    assert FactorizationMatrix.from_csv(F.to_csv()) == F


def test_gram_is_exact_integer():
    F = candidate_factorization(range(1, 51), 50)
    G = F.gram()
    assert G.dtype == np.int64
    D = F.dense()
    assert np.array_equal(G, D.T @ D)


def test_parallel_construction_matches_serial():
    q = list(range(1, 121))
    assert candidate_factorization(q, 120, workers=4) == candidate_factorization(q, 120)
