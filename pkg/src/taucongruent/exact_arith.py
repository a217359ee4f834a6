"""Exact rational scalars, integer factorization and reduction modulo squares.

Every rational quantity in the package is a :class:`fractions.Fraction`,
which is canonical on construction (reduced, positive denominator) and
immutable.  This module adds the number theory the triangle families need:

* :func:`squarefree_class` -- the positive squarefree representative of a
  positive rational modulo rational squares,
* :func:`signed_divisors` -- positive and negative divisors of an integer,
* :func:`is_rational_square`,
* :func:`parse_rat` / :func:`format_rat` -- the ``"p/q"`` text form.

Factorization is trial division by the primes up to a bound (default
``10**6``, overridable with the ``FACTOR_LIMIT`` environment variable),
followed by Pollard-Brent with an iteration budget.  A composite that
survives both raises :class:`FactorizationLimitExceeded`.
"""

from __future__ import annotations

import math
import os
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Dict, Iterator, List, Tuple, Union

import numpy as np

from .errors import FactorizationLimitExceeded, NonPositiveInput

Rat = Fraction
RatLike = Union[Fraction, int, str]

DEFAULT_TRIAL_BOUND = 10**6
DEFAULT_RHO_BUDGET = 2_000_000

_RAT_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*")


# ---------------------------------------------------------------------------
# Rat helpers

def parse_rat(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a canonical Fraction.

    Decimal and exponent notations are rejected so that every value read
    from the command line or a record file is exact by construction.
    """
    match = _RAT_RE.fullmatch(text)
    if match is None:
        raise ValueError(f"malformed rational {text!r}; expected p/q")
    num, den = match.groups()
    den = int(den) if den is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), den)


def format_rat(q: RatLike) -> str:
    q = as_rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_rat(value: RatLike) -> Fraction:
    """Coerce an int, Fraction, or ``"p/q"`` string to a Fraction.

    Floats are refused: they would silently import a binary approximation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def rationals_by_height() -> Iterator[Fraction]:
    """Yield every positive rational once, ordered by height max(p, q).

    Within a height the values come in increasing order, so the stream
    starts 1, 1/2, 2, 1/3, 2/3, 3/2, 3, 1/4, ...
    """
    h = 1
    while True:
        level = [Fraction(p, h) for p in range(1, h + 1) if math.gcd(p, h) == 1]
        level += [Fraction(h, q) for q in range(1, h) if math.gcd(h, q) == 1]
        yield from sorted(set(level))
        h += 1


# ---------------------------------------------------------------------------
# integer factorization

def trial_bound() -> int:
    """The trial-division bound in effect (``FACTOR_LIMIT`` or 10**6)."""
    raw = os.environ.get("FACTOR_LIMIT")
    if not raw:
        return DEFAULT_TRIAL_BOUND
    bound = int(raw)
    if bound < 2:
        raise ValueError("FACTOR_LIMIT must be at least 2")
    return bound


@lru_cache(maxsize=8)
def _primes_upto(limit: int) -> np.ndarray:
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve).astype(np.int64)


def _residues(n: int, primes: np.ndarray) -> np.ndarray:
    """n mod p for every p in ``primes``, for arbitrarily large n."""
    if n < 2**63:
        return np.int64(n) % primes
    # Horner over limbs small enough that r * 2**shift + limb fits in int64
    shift = max(1, 62 - int(primes[-1]).bit_length())
    mask = (1 << shift) - 1
    limbs = []
    while n:
        limbs.append(n & mask)
        n >>= shift
    r = np.zeros_like(primes)
    for limb in reversed(limbs):
        r = ((r << shift) + limb) % primes
    return r


_STAGE_EDGES = (1 << 12, 1 << 14, 1 << 16, 1 << 18)


def _trial_divide(n: int, bound: int, power: int) -> Tuple[Dict[int, int], int, int]:
    """Strip primes <= bound from n in chunks of growing size.

    After each chunk every prime below ``lo`` is gone from the cofactor m,
    so m < lo**power bounds how many prime factors m can have (power 2:
    m is prime; power 3: at most two).  The scan stops at that point, or
    when m is 1 or prime.  Returns (factors, m, lo).
    """
    factors: Dict[int, int] = {}
    primes = _primes_upto(bound)
    edges = [e for e in _STAGE_EDGES if e < bound] + [bound]
    start, lo = 0, 2
    for edge in edges:
        stop = int(np.searchsorted(primes, edge, side="right"))
        chunk = primes[start:stop]
        if chunk.size:
            for p in chunk[_residues(n, chunk) == 0].tolist():
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                factors[p] = e
        start, lo = stop, edge + 1
        if n == 1 or n < lo**power or is_probable_prime(n):
            break
    return factors, n, lo


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 3.3e24, 20 fixed bases above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, budget: int) -> Tuple[int, int]:
    """Return (nontrivial divisor or 0, iterations spent)."""
    if n % 2 == 0:
        return 2, 0
    spent = 0
    c = 1
    while spent < budget:
        y, r, q, g = 2, 1, 1, 1
        m = 128
        x = ys = y
        while g == 1 and spent < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            spent += r
            r *= 2
        if g == n:
            # batched gcd overshot; replay one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g, spent
        c += 1
    return 0, spent


def _split_completely(m: int, budget: int) -> Dict[int, int]:
    """Prime factorization of m > 1 via primality tests and Pollard-Brent."""
    factors: Dict[int, int] = {}
    stack = [m]
    while stack:
        x = stack.pop()
        if x == 1:
            continue
        if is_probable_prime(x):
            factors[x] = factors.get(x, 0) + 1
            continue
        r = math.isqrt(x)
        if r * r == x:
            stack += [r, r]
            continue
        d, spent = _pollard_brent(x, budget)
        budget -= spent
        if d == 0:
            raise FactorizationLimitExceeded(x)
        stack += [d, x // d]
    return factors


def factorize(n: int, bound: int | None = None, rho_budget: int = DEFAULT_RHO_BUDGET) -> Dict[int, int]:
    """Prime factorization ``{p: e}`` of a positive integer."""
    if n < 1:
        raise NonPositiveInput(f"cannot factor {n}")
    bound = trial_bound() if bound is None else bound
    factors, m, _ = _trial_divide(n, bound, power=2)
    if m > 1:
        for p, e in _split_completely(m, rho_budget).items():
            factors[p] = factors.get(p, 0) + e
    return dict(sorted(factors.items()))


def squarefree_part(n: int, bound: int | None = None, rho_budget: int = DEFAULT_RHO_BUDGET) -> int:
    """The squarefree s with n = s * k**2, for a positive integer n."""
    if n < 1:
        raise NonPositiveInput(f"squarefree part needs a positive integer, got {n}")
    bound = trial_bound() if bound is None else bound
    factors, m, lo = _trial_divide(n, bound, power=3)
    s = math.prod(p for p, e in factors.items() if e % 2)
    if m == 1:
        return s
    if m < lo**3:
        # every prime factor of m is >= lo, so m is p, p*q or p**2
        r = math.isqrt(m)
        return s if r * r == m else s * m
    rest = _split_completely(m, rho_budget)
    return s * math.prod(p for p, e in rest.items() if e % 2)


# ---------------------------------------------------------------------------
# public operations

def squarefree_class(q: RatLike, bound: int | None = None) -> int:
    """Positive squarefree integer s with q = s * r**2 for a rational r.

    >>> squarefree_class(Fraction(4, 3))
    3
    >>> squarefree_class(156)
    39
    """
    q = as_rat(q)
    if q <= 0:
        raise NonPositiveInput(f"squarefree class is defined for q > 0, got {format_rat(q)}")
    # numerator and denominator are coprime, so their parts multiply cleanly
    return squarefree_part(q.numerator, bound) * squarefree_part(q.denominator, bound)


def signed_divisors(n: int) -> List[int]:
    """All divisors of n >= 1, negative ones included, sorted ascending."""
    if n < 1:
        raise NonPositiveInput(f"signed_divisors needs n >= 1, got {n}")
    divisors = [1]
    for p, e in factorize(n).items():
        divisors = [d * p**k for d in divisors for k in range(e + 1)]
    divisors.sort()
    return [-d for d in reversed(divisors)] + divisors


def is_rational_square(q: RatLike) -> bool:
    q = as_rat(q)
    if q < 0:
        return False
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    return rn * rn == q.numerator and rd * rd == q.denominator
