"""Finite-field multipoint evaluation backends.

The prime-field pipeline treats the inner evaluator as a black box: anything
with ``evaluate_batch`` (and, for complex inputs, ``evaluate_batch_gaussian``)
returning exact per-point values modulo ``q`` is acceptable. Two backends
ship here:

``horner``
    Nested multivariate Horner, vectorized with numpy across points and
    across every small prime of a CRT basis at once. Default.
``monomial``
    Explicit monomial expansion in pure Python. Slow; exists so tests can
    confirm results do not depend on the backend.

Gaussian variants work in ``F_q[z]/(z^2 + 1)``. Elements are ``(re, im)``
pairs, whether or not ``z^2 + 1`` splits modulo ``q``.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import InvalidArgumentError
from .kronecker import DensePolynomial

__all__ = ["MmeBackend", "HornerBackend", "MonomialSumBackend", "get_backend", "BACKENDS"]

# products of two residues plus a residue must stay below 2**63
_INT64_LIMIT = 1 << 31
_INT64_LIMIT_GAUSSIAN = 1 << 30


class MmeBackend:
    """Base class; subclasses implement at least :meth:`evaluate_batch`."""

    name = "abstract"

    def evaluate_batch(self, f: DensePolynomial, points: Sequence[Sequence[int]], q: int) -> list[int]:
        raise NotImplementedError

    def evaluate_batch_gaussian(self, f: DensePolynomial, points, q: int) -> list[tuple[int, int]]:
        raise NotImplementedError(f"backend {self.name!r} has no Gaussian-ring support")

    def evaluate_many(self, polys: Sequence[DensePolynomial], point_sets, primes: Sequence[int]) -> list[list[int]]:
        """One batch per prime. The default simply loops; backends may fuse the calls."""
        return [self.evaluate_batch(f, pts, q) for f, pts, q in zip(polys, point_sets, primes)]

    def evaluate_many_gaussian(self, polys, point_sets, primes):
        return [self.evaluate_batch_gaussian(f, pts, q) for f, pts, q in zip(polys, point_sets, primes)]

    def __repr__(self):
        return f"{type(self).__name__}()"


def _stack(polys, point_sets, primes, limit):
    dtype = np.int64 if max(primes) < limit else object
    C = np.array([f.coeffs for f in polys], dtype=dtype)
    P = np.array([list(pts) for pts in point_sets], dtype=dtype)
    q = np.array(primes, dtype=dtype)
    return C, P, q


class HornerBackend(MmeBackend):
    """Nested Horner over prime fields, batched with numpy."""

    name = "horner"

    def evaluate_batch(self, f, points, q):
        return self.evaluate_many([f], [points], [q])[0]

    def evaluate_batch_gaussian(self, f, points, q):
        return self.evaluate_many_gaussian([f], [points], [q])[0]

    def evaluate_many(self, polys, point_sets, primes):
        if not polys:
            return []
        m, d = polys[0].m, polys[0].d
        n_points = len(point_sets[0])
        L = len(primes)
        if n_points == 0:
            return [[] for _ in range(L)]
        C, P, q = _stack(polys, point_sets, primes, _INT64_LIMIT)
        q3 = q.reshape(L, 1, 1)
        vals = C.reshape(L, 1, d**m)
        if m == 0:
            out = np.broadcast_to(vals[:, :, 0] % q.reshape(L, 1), (L, n_points))
            return [[int(v) for v in row] for row in out]
        P = P.reshape(L, n_points, m)
        for j in range(m - 1, -1, -1):
            vals = vals.reshape(L, vals.shape[1], -1, d)
            x = P[:, :, j].reshape(L, n_points, 1)
            acc = vals[..., d - 1]
            for i in range(d - 2, -1, -1):
                acc = (acc * x + vals[..., i]) % q3
            if d == 1:
                acc = np.broadcast_to(acc % q3, (L, n_points, acc.shape[2]))
            vals = acc
        return [[int(v) for v in row] for row in vals.reshape(L, n_points)]

    def evaluate_many_gaussian(self, polys, point_sets, primes):
        if not polys:
            return []
        m, d = polys[0].m, polys[0].d
        n_points = len(point_sets[0])
        L = len(primes)
        if n_points == 0:
            return [[] for _ in range(L)]
        dtype = np.int64 if max(primes) < _INT64_LIMIT_GAUSSIAN else object
        C = np.array([f.coeffs for f in polys], dtype=dtype).reshape(L, 1, d**m, 2)
        P = np.array([list(pts) for pts in point_sets], dtype=dtype).reshape(L, n_points, m, 2)
        q3 = np.array(primes, dtype=dtype).reshape(L, 1, 1)
        vr, vi = C[..., 0], C[..., 1]
        for j in range(m - 1, -1, -1):
            vr = vr.reshape(L, vr.shape[1], -1, d)
            vi = vi.reshape(L, vi.shape[1], -1, d)
            xr = P[:, :, j, 0].reshape(L, n_points, 1)
            xi = P[:, :, j, 1].reshape(L, n_points, 1)
            ar, ai = vr[..., d - 1] % q3, vi[..., d - 1] % q3
            for i in range(d - 2, -1, -1):
                ar, ai = (ar * xr - ai * xi + vr[..., i]) % q3, (ar * xi + ai * xr + vi[..., i]) % q3
            if d == 1:
                ar = np.broadcast_to(ar, (L, n_points, ar.shape[2]))
                ai = np.broadcast_to(ai, (L, n_points, ai.shape[2]))
            vr, vi = ar, ai
        if m == 0:
            vr = np.broadcast_to(vr.reshape(L, 1) % q3.reshape(L, 1), (L, n_points))
            vi = np.broadcast_to(vi.reshape(L, 1) % q3.reshape(L, 1), (L, n_points))
        vr = vr.reshape(L, n_points)
        vi = vi.reshape(L, n_points)
        return [[(int(a), int(b)) for a, b in zip(rr, ii)] for rr, ii in zip(vr, vi)]


class MonomialSumBackend(MmeBackend):
    """Reference backend: sum of ``c_e * a^e`` term by term."""

    name = "monomial"

    def evaluate_batch(self, f, points, q):
        out = []
        for a in points:
            total = 0
            for e, c in f.terms():
                if c % q == 0:
                    continue
                term = c
                for aj, ej in zip(a, e):
                    term = term * pow(aj, ej, q) % q
                total += term
            out.append(total % q)
        return out

    def evaluate_batch_gaussian(self, f, points, q):
        def mul(u, v):
            return ((u[0] * v[0] - u[1] * v[1]) % q, (u[0] * v[1] + u[1] * v[0]) % q)

        out = []
        for a in points:
            tr = ti = 0
            for e, c in f.terms():
                term = (c[0] % q, c[1] % q)
                for aj, ej in zip(a, e):
                    for _ in range(ej):
                        term = mul(term, aj)
                tr += term[0]
                ti += term[1]
            out.append((tr % q, ti % q))
        return out


BACKENDS = {"horner": HornerBackend, "monomial": MonomialSumBackend}


def get_backend(backend=None) -> MmeBackend:
    """Resolve ``None``, a registered name, or a backend instance."""
    if backend is None:
        return HornerBackend()
    if isinstance(backend, str):
        try:
            return BACKENDS[backend]()
        except KeyError:
            raise InvalidArgumentError(
                f"unknown backend {backend!r}; choose from {sorted(BACKENDS)}"
            ) from None
    if not hasattr(backend, "evaluate_batch"):
        raise InvalidArgumentError(f"{backend!r} does not implement evaluate_batch")
    return backend
