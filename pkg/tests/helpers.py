"""Independent reference implementations used as test oracles.

Nothing here calls into the pipelines under test: primes come from trial
division and polynomial values from explicit monomial sums in exact
arithmetic.
"""

import itertools
import random
from fractions import Fraction


def trial_division_primes(n):
    out = []
    for c in range(2, n):
        if all(c % p for p in out if p * p <= c):
            out.append(c)
    return out


def monomials(m, d):
    return itertools.product(range(d), repeat=m)


def brute_eval(coeffs, m, d, point, modulus=None):
    """Sum of c_e * prod(a_j ** e_j) over exponent vectors in storage order."""
    total = 0
    for c, e in zip(coeffs, monomials(m, d)):
        term = c
        for aj, ej in zip(point, e):
            term = term * aj**ej
        total += term
    return total % modulus if modulus is not None else total


def gaussian_mul(u, v):
    return (u[0] * v[0] - u[1] * v[1], u[0] * v[1] + u[1] * v[0])


def brute_eval_gaussian(coeffs, m, d, point):
    tr, ti = Fraction(0), Fraction(0)
    for c, e in zip(coeffs, monomials(m, d)):
        term = c
        for aj, ej in zip(point, e):
            for _ in range(ej):
                term = gaussian_mul(term, aj)
        tr += term[0]
        ti += term[1]
    return tr, ti


def random_fraction(rng, bits, closed=False):
    """Reduced fraction in (-1, 1) with numerator and denominator below 2^bits."""
    q = rng.randrange(1, 1 << bits)
    bound = q + 1 if closed else q
    return Fraction(rng.randrange(-bound + 1, bound), q)


def seeded(seed):
    return random.Random(seed)


# acceptance verdicts, one line per criterion, echoed in the terminal summary
ACCEPTANCE_LINES = {}


def report(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES[number] = line
    print(line)
    return ok
