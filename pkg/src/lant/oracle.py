"""Classical reference implementations used as ground truth in tests.

Nothing in here imports from the rest of the package; the duplication with
``core`` and ``numtheory`` is on purpose so the two sides cannot share a bug.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        for p, e in self.factors:
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factors do not multiply to {self.n}")

    def log(self) -> float:
        return sum(e * math.log(p) for p, e in self.factors)


def sieve(n: int) -> list[int]:
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    i = 2
    while i * i <= n:
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
        i += 1
    return [i for i in range(n + 1) if flags[i]]


def factorize(n: int) -> Factorization:
    if n < 2:
        raise ValueError("factorize needs n >= 2")
    out = []
    m, d = n, 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return Factorization(n, tuple(out))


def valuation(p: int, r: int) -> int:
    """Largest e with p**e | r (p >= 2, r >= 1)."""
    e = 0
    while r % p == 0:
        r //= p
        e += 1
    return e


def prime_pi(x: float) -> int:
    return len(sieve(int(math.floor(x))))


def theta(x: float) -> float:
    return math.fsum(math.log(p) for p in sieve(int(math.floor(x))))


def psi(x: float) -> float:
    """Sum of ln p over prime powers p**k <= x."""
    n = int(math.floor(x))
    terms = []
    for p in sieve(n):
        pk = p
        while pk <= n:
            terms.append(math.log(p))
            pk *= p
    return math.fsum(terms)


def mangoldt(n: int) -> float:
    if n < 2:
        return 0.0
    f = factorize(n).factors
    return math.log(f[0][0]) if len(f) == 1 else 0.0


def _candidate_entry(c: int, r: int) -> int:
    # exponent c would carry in r if c were prime
    if c == 1:
        return 1
    k, pw = 0, c
    while r % pw == 0:
        k += 1
        pw *= c
    return k


def candidate_matrix(q, n: int) -> list[list[int]]:
    return [[_candidate_entry(c, r) for c in q] for r in range(1, n + 1)]


def ols_reference(q, n: int, dps: int = 40) -> list[float]:
    """OLS log-prime estimates via exact rational Gram matrix and mpmath elimination."""
    q = list(q)
    X = candidate_matrix(q, n)
    m = len(q)
    gram = [[Fraction(sum(X[r][a] * X[r][b] for r in range(n))) for b in range(m)] for a in range(m)]
    with mpmath.workdps(dps):
        logs = [mpmath.log(r) for r in range(1, n + 1)]
        rhs = [mpmath.fsum(X[r][a] * logs[r] for r in range(n)) for a in range(m)]
        A = mpmath.matrix([[mpmath.mpf(v.numerator) / v.denominator for v in row] for row in gram])
        if abs(mpmath.det(A)) < mpmath.mpf(10) ** (-dps // 2):
            raise ArithmeticError("singular design")
        sol = mpmath.lu_solve(A, mpmath.matrix(rhs))
        return [float(sol[i]) for i in range(m)]


def li(x: float, panels: int = 400, order: int = 20) -> float:
    """Integral of 1/ln t over [2, x] by composite Gauss-Legendre (fixed order).

    Panel edges are geometrically spaced so the steep end near t = 2 is resolved.
    """
    if x <= 2:
        return 0.0
    nodes, weights = _gauss_legendre(order)
    edges = np.geomspace(2.0, x, panels + 1)
    total = []
    for a, b in zip(edges[:-1], edges[1:]):
        mid, half = (a + b) / 2, (b - a) / 2
        total.append(half * math.fsum(w / math.log(mid + half * t) for t, w in zip(nodes, weights)))
    return math.fsum(total)


def _gauss_legendre(order: int):
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return nodes.tolist(), weights.tolist()


def zeta_direct(s: complex, terms: int = 10**6) -> tuple[complex, float]:
    """Partial Dirichlet series plus integral tail correction (Re s > 1).

    Returns the value and a bound on the remaining error.
    """
    s = complex(s)
    if s.real <= 1:
        raise ValueError("direct series needs Re(s) > 1")
    partial = _compensated_partial(s, terms)
    N = terms
    tail = N ** (1 - s) / (s - 1)
    err = abs(s) * N ** (-s.real) / s.real + N ** (-s.real)
    return partial + tail, err


def _compensated_partial(s: complex, terms: int) -> complex:
    # Kahan summation, smallest terms first
    total = 0j
    comp = 0j
    for k in range(terms, 0, -1):
        y = k ** (-s) - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total


def zeta_euler(s: complex, bound: int = 10**5) -> complex:
    """Euler product over primes <= bound (Re s > 1)."""
    s = complex(s)
    prod = 1 + 0j
    for p in sieve(bound):
        prod /= 1 - p ** (-s)
    return prod
