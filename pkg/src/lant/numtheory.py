"""Classical number-theoretic functions expressed through the log-prime estimate.

With ``q = z_n`` the estimate ``ln q_hat`` equals ``ln i`` at primes and 0
elsewhere, so primality, prime counting, Chebyshev's functions and the von
Mangoldt function all reduce to sums over that one vector. ``ln q_hat`` is
taken from :func:`lant.inversion.lpe_via_inverse`.

Also here: the logarithmic integral, zeta through the alternating (eta)
series, the Schoenfield bound check, and the ``ld(n) = ln det(F^T F)`` scan.
"""
from __future__ import annotations

import csv
import io
import math
import warnings
from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy import integrate

from .core import factorization_entry, factorization_vector, prime_factorization_matrix
from .errors import InvalidArgument, NumericalInconsistency, OutOfDomain, SingularPrefactor
from .inversion import lpe_via_inverse

IP_TOL = 1e-6
MANGOLDT_RTOL = 1e-9
LI_EPSABS = 1e-10
ZETA_TERMS = 10**6
SCHOENFIELD_FROM = 2657
EXACT_DET_MAX_RANK = 200


@dataclass(frozen=True)
class NtfValue:
    value: float | complex | int | None
    path: Literal["lant", "oracle"] = "lant"
    error_estimate: float | None = None

    def to_dict(self, digits: int = 15) -> dict:
        def r(x):
            return float(f"{x:.{digits}g}")

        v = self.value
        if isinstance(v, complex):
            v = {"re": r(v.real), "im": r(v.imag)}
        elif isinstance(v, float):
            v = r(v)
        err = None if self.error_estimate is None else r(self.error_estimate)
        return {"value": v, "path": self.path, "error_estimate": err}


@dataclass(frozen=True)
class ConjectureSample:
    n: int
    ld: float
    li: float
    ratio: float | None


def _floor_arg(x, lo: float, name: str) -> int:
    if x < lo:
        raise OutOfDomain(f"{name} needs x >= {lo}, got {x}")
    return int(math.floor(x))


def _ip_ratios(n: int) -> np.ndarray:
    """ln q_hat[i] / ln i for i = 2..n (index 0 <-> i = 2)."""
    lq = lpe_via_inverse(n)
    return lq[1:] / np.log(np.arange(2, n + 1, dtype=float))


def _round_indicator(ratios: np.ndarray, offset: int = 2) -> np.ndarray:
    rounded = np.rint(ratios)
    resid = np.abs(ratios - rounded)
    bad = (resid > IP_TOL) | ((rounded != 0) & (rounded != 1))
    if bad.any():
        k = int(np.flatnonzero(bad)[0])
        raise NumericalInconsistency(
            f"ip({k + offset}) = {ratios[k]!r} is not within {IP_TOL} of 0 or 1"
        )
    return rounded.astype(np.int64)


def is_prime_lant(i: int, n: int | None = None) -> int | None:
    """1 if i is prime, 0 if not, None for the indeterminate case i = 1."""
    if i < 1:
        raise InvalidArgument("ip(i) is undefined for i < 1")
    n = max(i, 2) if n is None else n
    if n < 2 or i > n:
        raise InvalidArgument(f"need 1 <= i <= n and n >= 2, got i={i}, n={n}")
    if i == 1:
        return None
    lq = lpe_via_inverse(n)
    return int(_round_indicator(np.array([lq[i - 1] / math.log(i)]), offset=i)[0])


def prime_count(n: int) -> int:
    if n < 1:
        raise InvalidArgument("prime_count needs n >= 1")
    if n == 1:
        return 0
    return int(_round_indicator(_ip_ratios(n)).sum())


def chebyshev_first(n: int) -> float:
    """theta(n) = 1^T ln q_hat."""
    if n < 1:
        raise InvalidArgument("chebyshev_first needs n >= 1")
    return math.fsum(lpe_via_inverse(n))


def _iroot(n: int, k: int) -> int:
    r = int(round(n ** (1.0 / k)))
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def chebyshev_second(x: float, n_cap: int | None = None) -> NtfValue:
    """psi(x) as the sum of theta(x**(1/k)) over k >= 1.

    Terms vanish once 2**k > x. With ``n_cap`` only the first ``n_cap`` terms
    are summed and the error estimate bounds the rest by ``theta(y) < y ln 4``.
    """
    n = _floor_arg(x, 1, "psi")
    if n < 2:
        return NtfValue(0.0, "lant", 0.0)
    prefix = np.cumsum(lpe_via_inverse(n))
    roots = []
    k = 1
    while 2**k <= n:
        roots.append(_iroot(n, k))
        k += 1
    used = roots if n_cap is None else roots[:n_cap]
    value = math.fsum(prefix[y - 1] for y in used)
    skipped = roots[len(used):]
    err = math.fsum(y * math.log(4) for y in skipped)
    return NtfValue(value, "lant", err)


def von_mangoldt_lant(i: int, n: int | None = None) -> float:
    """Lambda(i) = sum_j ln q_hat_j [ln i == F[i, j] ln q_hat_j]."""
    if i < 2:
        raise InvalidArgument("von_mangoldt_lant needs i >= 2")
    n = i if n is None else n
    if i > n:
        raise InvalidArgument(f"i={i} exceeds n={n}")
    lq = lpe_via_inverse(n)
    lhs = math.log(i)
    tol = max(1.0, abs(lhs)) * MANGOLDT_RTOL
    # F[i, j] = 0 unless j divides i, and then the bracket is false for i >= 2
    divisors = set()
    j = 1
    while j * j <= i:
        if i % j == 0:
            divisors.update((j, i // j))
        j += 1
    total = []
    for j in sorted(divisors):
        b = lq[j - 1]
        if abs(lhs - factorization_entry(j, i) * b) <= tol:
            total.append(b)
    return math.fsum(total)


def von_mangoldt_table(n: int) -> np.ndarray:
    """Lambda(i) for i = 1..n (index i - 1), evaluated column by column."""
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    lq = lpe_via_inverse(n)
    out = np.zeros(n)
    for j in range(1, n + 1):
        b = lq[j - 1]
        if b == 0.0:
            continue
        col = factorization_vector(j, n)
        rows = np.asarray(col.rows)
        lhs = np.log(rows.astype(float))
        hit = np.abs(lhs - np.asarray(col.values) * b) <= np.maximum(1.0, np.abs(lhs)) * MANGOLDT_RTOL
        out[rows[hit] - 1] += b
    return out


def von_mangoldt_psi_check(x: float, tol: float = 1e-8) -> bool:
    n = _floor_arg(x, 1, "von_mangoldt_psi_check")
    lam = math.fsum(von_mangoldt_table(n)[1:]) if n >= 2 else 0.0
    return abs(lam - chebyshev_second(x).value) < tol


def zeta_eta(s: complex, terms: int = ZETA_TERMS) -> NtfValue:
    """zeta(s) = eta(s) / (1 - 2**(1 - s)) for Re(s) > 0.

    The error estimate is the first omitted alternating term scaled by the
    prefactor.
    """
    s = complex(s)
    if s.real <= 0:
        raise OutOfDomain("zeta_eta needs Re(s) > 0")
    if terms < 10:
        raise InvalidArgument("zeta_eta needs at least 10 terms")
    denom = 1 - 2 ** (1 - s)
    if abs(denom) <= 1e-12:
        raise SingularPrefactor(f"1 - 2**(1 - s) vanishes at s = {s}")
    k = np.arange(1, terms + 1, dtype=float)
    signs = np.where(k % 2 == 1, 1.0, -1.0)
    eta = np.sum(signs * np.exp(-s * np.log(k)))
    pref = 1 / denom
    return NtfValue(complex(pref * eta), "lant", float(abs(pref) * (terms + 1) ** (-s.real)))


def logarithmic_integral(x: float) -> NtfValue:
    """Li(x), the integral of 1/ln t from 2 to x, by adaptive quadrature."""
    if x < 2:
        raise OutOfDomain("Li(x) needs x >= 2")
    if x == 2:
        return NtfValue(0.0, "lant", 0.0)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, err = integrate.quad(lambda t: 1.0 / math.log(t), 2.0, float(x), epsabs=LI_EPSABS, epsrel=0.0, limit=500)
    return NtfValue(float(val), "lant", float(err))


def schoenfield_bound(x: float) -> float:
    return math.sqrt(x) * math.log(x) / (8 * math.pi)


def schoenfield_margin(x: float) -> float:
    """Bound minus |pi(floor x) - Li(x)|; nonnegative when the bound holds."""
    if x < SCHOENFIELD_FROM:
        raise OutOfDomain(f"the bound is stated for x >= {SCHOENFIELD_FROM}")
    diff = abs(prime_count(int(math.floor(x))) - logarithmic_integral(x).value)
    return schoenfield_bound(x) - diff


def schoenfield_check(x: float) -> bool:
    return schoenfield_margin(x) >= 0


def gram_prime_matrix(n: int) -> list[list[int]]:
    """F_n^T F_n for the prime factorization matrix, as Python ints."""
    return prime_factorization_matrix(n).gram().tolist()


def bareiss_determinant(matrix) -> int:
    """Exact determinant by fraction-free elimination."""
    M = np.array(matrix, dtype=object)
    m = M.shape[0]
    if m == 0:
        return 1
    sign, prev = 1, 1
    for k in range(m - 1):
        if M[k, k] == 0:
            swap = next((r for r in range(k + 1, m) if M[r, k] != 0), None)
            if swap is None:
                return 0
            M[[k, swap]] = M[[swap, k]]
            sign = -sign
        M[k + 1 :, k + 1 :] = (M[k + 1 :, k + 1 :] * M[k, k] - np.outer(M[k + 1 :, k], M[k, k + 1 :])) // prev
        prev = M[k, k]
    return sign * int(M[m - 1, m - 1])


def ld(n: int, method: Literal["auto", "exact", "float"] = "auto") -> float:
    """ln det(F_n^T F_n).

    ``auto`` uses the exact integer determinant while pi(n) <= 200 and a
    Cholesky log-determinant beyond that.
    """
    if n < 2:
        raise InvalidArgument("ld needs n >= 2")
    G = prime_factorization_matrix(n).gram()
    if method == "auto":
        method = "exact" if G.shape[0] <= EXACT_DET_MAX_RANK else "float"
    if method == "exact":
        det = bareiss_determinant(G.tolist())
        if det < 1:
            raise NumericalInconsistency(f"Gram determinant {det} < 1")
        return math.log(det)
    if method == "float":
        L = np.linalg.cholesky(G.astype(float))
        return float(2 * np.log(np.diag(L)).sum())
    raise InvalidArgument(f"unknown method {method!r}")


def conjecture_scan(n_min: int, n_max: int, step: int = 1) -> list[ConjectureSample]:
    if not 2 <= n_min <= n_max:
        raise InvalidArgument("need 2 <= n_min <= n_max")
    if step < 1:
        raise InvalidArgument("step must be >= 1")
    out = []
    for n in range(n_min, n_max + 1, step):
        d = ld(n)
        li = logarithmic_integral(n).value
        out.append(ConjectureSample(n, d, li, d / li if li != 0 else None))
    return out


def scan_to_csv(samples, digits: int = 15) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "ld", "li", "ratio"])
    fmt = f"{{:.{digits}g}}"
    for s in samples:
        w.writerow([s.n, fmt.format(s.ld), fmt.format(s.li), "" if s.ratio is None else fmt.format(s.ratio)])
    return buf.getvalue()
