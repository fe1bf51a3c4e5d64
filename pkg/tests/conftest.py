import numpy as np
import pytest

# Worked examples for n = 6 and n = 10, typed in entry by entry.
F6_P6 = [
    [0, 0, 0],
    [1, 0, 0],
    [0, 1, 0],
    [2, 0, 0],
    [0, 0, 1],
    [1, 1, 0],
]

F10_Q1 = [[0, 0], [1, 0], [0, 0], [2, 0], [0, 1], [1, 0], [0, 0], [3, 0], [0, 0], [1, 1]]

F10_Q2 = [
    [0, 0, 0, 0],
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [2, 0, 0, 0],
    [0, 0, 1, 0],
    [1, 1, 0, 0],
    [0, 0, 0, 1],
    [3, 0, 0, 0],
    [0, 2, 0, 0],
    [1, 0, 1, 0],
]

F10_Q3 = [
    [0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [2, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [3, 0, 1, 0, 0, 1],
    [0, 2, 0, 0, 0, 0],
    [1, 0, 0, 1, 0, 0],
]

F10_Q4 = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 2, 0, 1, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 1, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [1, 3, 0, 1, 0, 0, 0, 1, 0, 0],
    [1, 0, 2, 0, 0, 0, 0, 0, 1, 0],
    [1, 1, 0, 0, 1, 0, 0, 0, 0, 1],
]

PAPER_CANDIDATES_10 = {
    "q1": ([2, 5], F10_Q1),
    "q2": ([2, 3, 5, 7], F10_Q2),
    "q3": ([2, 3, 4, 5, 7, 8], F10_Q3),
    "q4": (list(range(1, 11)), F10_Q4),
}

# candidate sets for n = 20, one per case of the regression
CASE_I = [3, 5, 11, 17]
CASE_II = [2, 3, 5, 7, 11, 13, 17, 19]
CASE_III = [2, 3, 4, 5, 7, 8, 11, 12, 13, 15, 17, 19]
CASE_IV = list(range(1, 21))

# ln q_hat for CASE_I at n = 20, from oracle.ols_reference at 40 digits
CASE_I_LN_Q_HAT = [1.349325098657877, 2.0666200953566176, 2.3978952727983707, 2.833213344056216]


def lnz(n):
    return np.log(np.arange(1, n + 1, dtype=float))


@pytest.fixture
def rng():
    return np.random.default_rng(20240101)
