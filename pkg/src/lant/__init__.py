"""Linear algebraic number theory: prime factorization as log-space regression."""

from .core import (
    CandidatePrimeVector,
    FactorizationMatrix,
    NaturalVector,
    PrimeVector,
    SparseColumn,
    candidate_factorization,
    candidates,
    factorization_vector,
    naturals,
    periodic_elementary,
    prime_factorization_matrix,
    primes_up_to,
)
from .errors import (
    InvalidArgument,
    LantError,
    NumericalInconsistency,
    OutOfDomain,
    SingularDesign,
    SingularPrefactor,
)
from .inversion import (
    ExtendedElementary,
    IntegerTriangularMatrix,
    extended_elementary,
    invert_by_forward_substitution,
    invert_factorization_matrix,
    lpe_via_inverse,
)
from .numtheory import (
    ConjectureSample,
    NtfValue,
    chebyshev_first,
    chebyshev_second,
    conjecture_scan,
    is_prime_lant,
    ld,
    logarithmic_integral,
    prime_count,
    schoenfield_check,
    von_mangoldt_lant,
    von_mangoldt_psi_check,
    zeta_eta,
)
from .regression import ConsistencyReport, LpeResult, classify, log_prime_estimator, predict, recover_primes

__version__ = "0.1.0"
