"""scikit-learn style facade over the evaluation pipelines.

``fit`` takes the coefficient tensor of the polynomial and ``predict``
evaluates it at a batch of points::

    ev = PolynomialEvaluator(domain="rat", s=16).fit(coef)   # coef.shape == (d,) * m
    values = ev.predict(points)                               # points.shape == (N, m)

Everything stays exact. Inputs may be Python ints, numpy integers or
Fractions; floats are rejected. Results come back as a numpy object array.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral, Rational

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .approx import ApproxInstance, approx_mme_complex, approx_mme_real
from .errors import InvalidArgumentError
from .ffmme import mme_prime_field
from .intmme import IntMmeInstance, mme_integers, naive_output_bound
from .kronecker import DensePolynomial
from .oracle import RationalOracle, make_complex_oracle
from .ratmme import RatMmeInstance, mme_rationals

__all__ = ["PolynomialEvaluator", "check_coefficients", "check_points"]

DOMAINS = ("int", "prime", "rat", "approx", "complex")


def _exact(v, integer):
    if isinstance(v, (bool, np.bool_)):
        raise InvalidArgumentError("boolean entries are not accepted")
    if isinstance(v, (Integral, np.integer)):
        return int(v)
    if not integer and isinstance(v, Rational):
        return Fraction(v)
    kind = "integer" if integer else "exact rational"
    raise InvalidArgumentError(f"expected {kind} entries, got {type(v).__name__} {v!r}")


def check_coefficients(X, integer=True, pairs=False):
    """Validate a coefficient tensor of shape ``(d,) * m`` (``+ (2,)`` for pairs).

    Returns ``(m, d, flat)`` with entries in row-major order.
    """
    arr = np.asarray(X, dtype=object)
    shape = arr.shape[:-1] if pairs else arr.shape
    if pairs and (arr.ndim == 0 or arr.shape[-1] != 2):
        raise InvalidArgumentError("complex coefficients need a trailing axis of length 2")
    if len(set(shape)) > 1:
        raise InvalidArgumentError(f"coefficient tensor must be hypercubic, got shape {shape}")
    m = len(shape)
    d = shape[0] if m else 1
    if d < 1:
        raise InvalidArgumentError("empty coefficient tensor")
    if pairs:
        flat = [(_exact(a, integer), _exact(b, integer)) for a, b in arr.reshape(-1, 2)]
    else:
        flat = [_exact(v, integer) for v in arr.reshape(-1)]
    return m, d, flat


def check_points(A, m, integer=True, pairs=False):
    """Validate a point batch of shape ``(N, m)`` (``(N, m, 2)`` for pairs)."""
    arr = np.asarray(A, dtype=object)
    want = 3 if pairs else 2
    if arr.ndim == want - 1 and arr.size == 0:
        return []
    if arr.ndim != want or arr.shape[1] != m or (pairs and arr.shape[2] != 2):
        tail = f"({m}, 2)" if pairs else f"({m},)"
        raise InvalidArgumentError(f"points must have shape (N,) + {tail}, got {arr.shape}")
    if pairs:
        return [tuple((_exact(a, integer), _exact(b, integer)) for a, b in row) for row in arr]
    return [tuple(_exact(v, integer) for v in row) for row in arr]


class PolynomialEvaluator(BaseEstimator):
    """Exact or approximate multipoint evaluator with estimator conventions.

    Parameters
    ----------
    domain : {"int", "prime", "rat", "approx", "complex"}
        ``int`` evaluates exactly over Z, ``prime`` over F_p, ``rat`` exactly
        over Q, and ``approx`` / ``complex`` to ``t`` bits over R / C.
    s : int, optional
        Output bit bound. Required for ``rat``. For ``int`` it defaults to
        the naive bound implied by the inputs.
    t : int, optional
        Accuracy in bits for ``approx`` and ``complex``.
    p : int, optional
        Prime modulus for ``prime``.
    backend : str
        Prime-field backend name.
    kronecker : bool or None
        Force or suppress the small-``m`` Kronecker rewrite.
    """

    def __init__(self, domain="int", s=None, t=None, p=None, backend="horner", kronecker=None):
        self.domain = domain
        self.s = s
        self.t = t
        self.p = p
        self.backend = backend
        self.kronecker = kronecker

    def fit(self, X, y=None):
        if self.domain not in DOMAINS:
            raise InvalidArgumentError(f"domain must be one of {DOMAINS}, got {self.domain!r}")
        integer = self.domain in ("int", "prime")
        m, d, flat = check_coefficients(X, integer=integer, pairs=self.domain == "complex")
        self.n_variables_ = m
        self.degree_bound_ = d
        self.polynomial_ = DensePolynomial(m, d, flat)
        return self

    def predict(self, A):
        if not hasattr(self, "polynomial_"):
            raise NotFittedError("call fit before predict")
        f = self.polynomial_
        integer = self.domain in ("int", "prime")
        points = check_points(A, f.m, integer=integer, pairs=self.domain == "complex")
        if self.domain == "int":
            s = self.s
            if s is None:
                widest = max([abs(c) for c in f.coeffs] + [abs(x) for a in points for x in a] + [1])
                s = naive_output_bound(f.d, f.m, widest.bit_length() + 1)
            out = mme_integers(IntMmeInstance(f, points, s), self.backend, self.kronecker)
        elif self.domain == "prime":
            if self.p is None:
                raise InvalidArgumentError("domain 'prime' needs p")
            out = mme_prime_field(f, points, self.p, self.backend, self.kronecker)
        elif self.domain == "rat":
            if self.s is None:
                raise InvalidArgumentError("domain 'rat' needs s")
            out = mme_rationals(RatMmeInstance(f, points, self.s), self.backend)
        elif self.domain == "approx":
            self._need_t()
            inst = ApproxInstance(f.map_coeffs(RationalOracle),
                                  [tuple(RationalOracle(x) for x in a) for a in points], self.t)
            scale = 1 << self.t
            out = [Fraction(b, scale) for b in approx_mme_real(inst, self.backend, self.kronecker)]
        else:
            self._need_t()
            fo = f.map_coeffs(lambda c: make_complex_oracle(*c))
            po = [tuple(make_complex_oracle(*x) for x in a) for a in points]
            scale = 1 << self.t
            out = [(Fraction(b, scale), Fraction(c, scale))
                   for b, c in approx_mme_complex(fo, po, self.t, self.backend)]
        result = np.empty(len(out), dtype=object)
        result[:] = out
        return result

    def _need_t(self):
        if self.t is None:
            raise InvalidArgumentError(f"domain {self.domain!r} needs t")
