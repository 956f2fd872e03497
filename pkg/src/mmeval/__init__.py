"""Nearly-linear-time multivariate multipoint evaluation over Z, Q, R and C.

The pipelines chain together: rounding to dyadics, clearing denominators,
Chinese remaindering onto small prime fields, finite-field evaluation,
reconstruction and, for rationals, continued-fraction reconstruction.
"""

from .approx import ApproxInstance, approx_mme_complex, approx_mme_real, round_point, round_poly
from .backends import HornerBackend, MmeBackend, MonomialSumBackend, get_backend
from .errors import (
    BoundViolationError,
    InvalidArgumentError,
    MMEError,
    ParseError,
    PoolExhaustedError,
    ReconstructionFailedError,
)
from .estimator import PolynomialEvaluator
from .ffmme import mme_gaussian_prime_field, mme_prime_field
from .intmme import IntMmeInstance, mme_gaussian_integers, mme_integers, naive_output_bound
from .kronecker import DensePolynomial, forward_kronecker, inverse_kronecker, psi_points
from .numerics import Dyadic, dyadic_rescale, round_nearest
from .oracle import (
    ApproximationOracle,
    ComplexOracle,
    RationalOracle,
    make_complex_oracle,
    make_rational_oracle,
    power_oracle,
)
from .primes import (
    CrtBasis,
    crt_basis_for_bound,
    crt_reconstruct,
    crt_reconstruct_signed,
    crt_reduce,
    first_k_primes,
    prime_sieve,
)
from .ratmme import RatMmeInstance, mme_rationals
from .ratrecon import convergent, quotient_sequence, rational_reconstruct

__version__ = "0.1.0"
