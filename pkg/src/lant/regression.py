"""Log-prime estimation by ordinary least squares.

The design matrix is the candidate factorization ``X = F_n(q)``, the signal
is ``ln z_n`` and the coefficients are the (estimated) log candidates::

    ln q_hat = (X^T X)^{-1} X^T ln z_n

``X^T X`` has integer entries and is assembled exactly before the small dense
system is solved in double precision.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .core import (
    CandidatePrimeVector,
    FactorizationMatrix,
    PrimeVector,
    candidate_factorization,
    candidates,
    naturals,
)
from .errors import InvalidArgument, SingularDesign

#: absolute tolerance on log values for validity/completeness/prime recovery
LOG_TOL = 1e-9
#: relative pivot threshold for the rank check
PIVOT_RTOL = 1e-12


@dataclass(frozen=True)
class ConsistencyReport:
    valid: bool
    complete: bool
    consistent: bool
    max_estimation_deviation: float
    max_prediction_deviation: float

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "complete": self.complete,
            "consistent": self.consistent,
            "max_estimation_deviation": self.max_estimation_deviation,
            "max_prediction_deviation": self.max_prediction_deviation,
        }


@dataclass(frozen=True, eq=False)
class LpeResult:
    n: int
    q: CandidatePrimeVector
    ln_q_hat: np.ndarray
    ln_z_hat: np.ndarray
    residuals: np.ndarray
    rss: float
    prediction_error: float
    estimation_error: float

    def report(self, tol: float = LOG_TOL) -> ConsistencyReport:
        est = np.abs(self.q.logs() - self.ln_q_hat)
        pred = np.abs(self.residuals)
        max_est = float(est.max()) if est.size else 0.0
        max_pred = float(pred.max()) if pred.size else 0.0
        valid = max_est <= tol
        complete = max_pred <= tol
        return ConsistencyReport(valid, complete, valid and complete, max_est, max_pred)

    def to_dict(self, tol: float = LOG_TOL, digits: int = 15) -> dict:
        def r(x):
            return float(f"{x:.{digits}g}")

        return {
            "n": self.n,
            "q": list(self.q.values),
            "ln_q_hat": [r(x) for x in self.ln_q_hat],
            "ln_z_hat": [r(x) for x in self.ln_z_hat],
            "residuals": [r(x) for x in self.residuals],
            "rss": r(self.rss),
            "prediction_error": r(self.prediction_error),
            "estimation_error": r(self.estimation_error),
            "consistency": {
                k: (r(v) if isinstance(v, float) else v) for k, v in self.report(tol).to_dict().items()
            },
        }

    def to_json(self, tol: float = LOG_TOL) -> str:
        return json.dumps(self.to_dict(tol), indent=2)


def solve_gaussian(a: np.ndarray, b: np.ndarray, labels: Iterable | None = None) -> np.ndarray:
    """Solve ``a x = b`` by Gaussian elimination with partial pivoting.

    Raises :class:`SingularDesign` when a pivot falls below
    ``PIVOT_RTOL * max|diag(a)|``; the reported column is 1-based.
    """
    a = np.array(a, dtype=float)
    b = np.array(b, dtype=float)
    m = a.shape[0]
    if a.shape != (m, m) or b.shape != (m,):
        raise InvalidArgument("dimension mismatch in linear system")
    labels = list(labels) if labels is not None else list(range(1, m + 1))
    if m == 0:
        return np.zeros(0)
    threshold = PIVOT_RTOL * float(np.abs(np.diag(a)).max())
    for k in range(m):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) <= threshold:
            raise SingularDesign(k + 1, labels[k], abs(a[p, k]))
        if p != k:
            a[[k, p]] = a[[p, k]]
            b[[k, p]] = b[[p, k]]
        l = a[k + 1 :, k] / a[k, k]
        a[k + 1 :, k:] -= np.outer(l, a[k, k:])
        b[k + 1 :] -= l * b[k]
    x = np.empty(m)
    for k in range(m - 1, -1, -1):
        x[k] = (b[k] - a[k, k + 1 :] @ x[k + 1 :]) / a[k, k]
    return x


def predict(F: FactorizationMatrix, ln_q_hat) -> np.ndarray:
    """Predicted log integers ``F ln_q_hat``."""
    return F.matvec(ln_q_hat)


def _as_candidates(q, n) -> CandidatePrimeVector:
    if isinstance(q, CandidatePrimeVector):
        return q if q.n == n else CandidatePrimeVector(n, q.values)
    return candidates(q, n)


def log_prime_estimator(q: CandidatePrimeVector | Iterable[int], n: int) -> LpeResult:
    q = _as_candidates(q, n)
    F = candidate_factorization(q, n)
    ln_z = naturals(n).logs()
    X = F.to_sparse()
    gram = F.gram()
    rhs = X.T @ ln_z
    ln_q_hat = solve_gaussian(gram, rhs, labels=q.values)
    ln_z_hat = X @ ln_q_hat
    residuals = ln_z - ln_z_hat
    rss = float(residuals @ residuals)
    est = q.logs() - ln_q_hat
    return LpeResult(
        n=n,
        q=q,
        ln_q_hat=ln_q_hat,
        ln_z_hat=ln_z_hat,
        residuals=residuals,
        rss=rss,
        prediction_error=rss,
        estimation_error=float(est @ est),
    )


def rss(F: FactorizationMatrix, ln_q) -> float:
    """Residual sum of squares of coefficients ``ln_q`` against ``ln z_n``."""
    e = naturals(F.n).logs() - predict(F, ln_q)
    return float(e @ e)


def classify(q, n: int, tol: float = LOG_TOL) -> ConsistencyReport:
    return log_prime_estimator(q, n).report(tol)


def recover_primes(n: int, tol: float = LOG_TOL) -> PrimeVector:
    """Primes <= n as the candidates whose estimate equals their own log under q = z_n."""
    if n < 2:
        raise InvalidArgument("recover_primes needs n >= 2")
    res = log_prime_estimator(range(1, n + 1), n)
    i = np.arange(1, n + 1)
    keep = (i >= 2) & (np.abs(res.ln_q_hat - np.log(i)) <= tol)
    return PrimeVector(n, tuple(int(v) for v in i[keep]))
